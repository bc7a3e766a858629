//! Exact modular data for Drinfeld doubles of small finite groups.
//!
//! Given a finite group `H` (entered as a permutation or matrix closure, or
//! picked from the built-in catalog), this crate computes, in exact cyclotomic
//! arithmetic throughout:
//!
//! - conjugacy classes, centralizers and coset transversals ([`group`]),
//! - irreducible character tables of `H` and of every centralizer, including
//!   Frobenius-Schur indicators ([`chartable`]),
//! - the irreducible representations of the double `D(H)` as (class,
//!   centralizer-irrep) pairs with the modular `S` and `T` matrices
//!   ([`double`]),
//! - fusion coefficients via the Verlinde formula, fusion matrices and fusion
//!   graphs ([`fusion`]),
//! - the Hopf-algebra structure maps of `D(H)` with exhaustive axiom checks at
//!   small orders ([`hopf`]).
//!
//! No floating point is used anywhere in the computational core: scalars are
//! elements of cyclotomic fields `Q(zeta_N)` with arbitrary-precision rational
//! coefficients ([`cyclo`]). Floats appear only in optional export mirrors.

pub mod catalog;
pub mod chartable;
pub mod cyclo;
pub mod double;
pub mod export;
pub mod fixed;
pub mod fusion;
pub mod group;
pub mod hopf;
mod modp;

pub use catalog::{build as build_catalog_group, catalog_entries, CatalogError};
pub use chartable::{character_table, class_sum_matrices, CharError, CharacterTable, Irrep};
pub use cyclo::Cyclotomic;
pub use double::{verify_s_t, DoubleError, DoubleIrrep, ModularData, ModularReport};
pub use fusion::{
    check_associativity, connected_components, fusion_graph, verlinde, verlinde_from_s,
    FusionError, FusionGraph, FusionRing, GraphTemplate,
};
pub use group::{
    centralizer, conjugacy_classes, group_from_matrices, group_from_permutations,
    left_transversal, ConjugacyClass, FiniteGroup, GroupError, Permutation, Transversal,
};
pub use hopf::{hopf_axiom_report, DoubleElement, HopfError, HopfReport};

/// Default bound on the number of elements a closure constructor may enumerate.
pub const DEFAULT_MAX_ORDER: usize = 2000;
