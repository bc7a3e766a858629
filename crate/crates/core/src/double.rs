//! Modular data of the untwisted Drinfeld double `D(H)`.
//!
//! Irreps of `D(H)` are pairs `(A, alpha)` of a conjugacy class `A` of `H`
//! and an irreducible character `alpha` of the centralizer `C_a` of its
//! representative. The production `S` matrix sums over pairs of coset
//! representatives (the transversal form), restricted by a commutator
//! condition; the independent oracle evaluates the centralizer-sum form over
//! the whole group. The diagonal `T` holds `chi_alpha(a) / chi_alpha(e)`
//! with central charge zero (no 24th-root prefactor).
//!
//! Entries are exact: the group-combinatorial part of each entry is collected
//! as a multiset of centralizer-class pairs once per class pair, the
//! character part is evaluated on integer coordinate vectors in
//! `Q(zeta_exp(H))`, and a single exact division by the denominator produces
//! the canonical cyclotomic entry.

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use thiserror::Error;

use crate::chartable::{character_table, CharError, CharacterTable};
use crate::cyclo::Cyclotomic;
use crate::fixed::{CycMatrix, FixedBasis, FixedError};
use crate::group::{
    class_index_map, conjugacy_classes, left_transversal, ConjugacyClass, FiniteGroup, GroupError,
    Subgroup,
};

#[derive(Debug, Error)]
pub enum DoubleError {
    #[error(transparent)]
    Char(#[from] CharError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Fixed(#[from] FixedError),
    #[error("S matrices from the transversal and centralizer sums differ at ({row}, {col})")]
    OracleMismatch { row: usize, col: usize },
    #[error("quantum dimension at index {index} is not a positive integer")]
    NonIntegerDimension { index: usize },
    #[error("global dimension {got} differs from the squared group order {expected}")]
    GlobalDimensionMismatch { got: BigInt, expected: u64 },
    #[error("T entry at index {index} is not a root of unity")]
    NonUnitT { index: usize },
    #[error("matrix data is ragged or inconsistent: {0}")]
    MalformedData(String),
}

/// An irrep of `D(H)`: a conjugacy class together with an irreducible
/// character of the centralizer of its representative.
#[derive(Clone, Debug)]
pub struct DoubleIrrep {
    pub class_index: usize,
    pub centirrep_index: usize,
    /// Quantum dimension `|A| * deg(alpha)`, always a positive integer.
    pub qdim: u64,
    /// `chi_alpha(a) / chi_alpha(e)`, a root of unity.
    pub t_value: Cyclotomic,
    pub label: String,
}

/// A centralizer materialised as a subgroup with its character table.
/// Conjugate elements have conjugate centralizers, so one table per class
/// suffices; identical element sets additionally share one table.
pub struct CentralizerData {
    pub subgroup: Subgroup,
    pub table: CharacterTable,
}

/// The exact modular data of `D(H)`.
pub struct ModularData {
    pub group: Arc<FiniteGroup>,
    pub classes: Vec<ConjugacyClass>,
    pub class_of: Vec<usize>,
    pub centralizers: Vec<Arc<CentralizerData>>,
    pub irreps: Vec<DoubleIrrep>,
    pub block_sizes: Vec<usize>,
    pub block_starts: Vec<usize>,
    pub s: Vec<Vec<Cyclotomic>>,
    pub t: Vec<Cyclotomic>,
}

/// Pass/fail record of the exact modular-relation checks.
#[derive(Clone, Debug, serde::Serialize, serde::Deserialize)]
pub struct ModularReport {
    pub symmetric: bool,
    pub unitary: bool,
    pub s2_is_permutation: bool,
    /// The charge-conjugation permutation `C = S^2`, when it is one.
    pub charge_conjugation: Option<Vec<usize>>,
    pub c_squared_is_identity: bool,
    pub s4_is_identity: bool,
    pub st_cubed_equals_s2: bool,
    pub t_entries_unit_modulus: bool,
}

impl ModularReport {
    pub fn all_pass(&self) -> bool {
        self.symmetric
            && self.unitary
            && self.s2_is_permutation
            && self.c_squared_is_identity
            && self.s4_is_identity
            && self.st_cubed_equals_s2
            && self.t_entries_unit_modulus
    }

    pub fn failures(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if !self.symmetric {
            out.push("S symmetric");
        }
        if !self.unitary {
            out.push("S unitary");
        }
        if !self.s2_is_permutation {
            out.push("S^2 is a permutation");
        }
        if !self.c_squared_is_identity {
            out.push("C^2 = 1");
        }
        if !self.s4_is_identity {
            out.push("S^4 = 1");
        }
        if !self.st_cubed_equals_s2 {
            out.push("(ST)^3 = S^2");
        }
        if !self.t_entries_unit_modulus {
            out.push("|T| = 1");
        }
        out
    }
}

/// Multiset of (class-in-C_a, class-in-C_b) pairs with multiplicities; the
/// group-combinatorial content of one S-matrix block entry.
type CountList = Vec<((usize, usize), u64)>;

struct SAssembly<'a> {
    basis: &'a FixedBasis,
    irreps: &'a [DoubleIrrep],
    /// `conj_vals[class][row][cent_class]`: integer coordinates of the
    /// conjugated character value.
    conj_vals: &'a [Vec<Vec<Vec<i128>>>],
    /// `counts[ci][cj]`, empty where not needed.
    counts: &'a [Vec<CountList>],
    /// `denoms[ci][cj]`.
    denoms: &'a [Vec<BigInt>],
}

impl SAssembly<'_> {
    fn entry(&self, i: usize, j: usize) -> Result<Cyclotomic, FixedError> {
        let x = &self.irreps[i];
        let y = &self.irreps[j];
        let (ci, cj) = (x.class_index, y.class_index);
        let vals_a = &self.conj_vals[ci][x.centirrep_index];
        let vals_b = &self.conj_vals[cj][y.centirrep_index];
        let phi = self.basis.phi();
        let mut conv = vec![0i128; 2 * phi - 1];
        let mut scaled = vec![0i128; phi];
        for &((c1, c2), n) in &self.counts[ci][cj] {
            let a = &vals_a[c1];
            for (dst, &src) in scaled.iter_mut().zip(a) {
                *dst = src.checked_mul(n as i128).ok_or(FixedError)?;
            }
            self.basis.mul_acc(&scaled, &vals_b[c2], &mut conv)?;
        }
        let reduced = self.basis.reduce(&conv)?;
        Ok(self.basis.to_cyclotomic(&reduced, &self.denoms[ci][cj]))
    }

    /// Computes entries for a list of index pairs, optionally split over
    /// threads. Chunks are merged in order, so the result does not depend on
    /// the schedule.
    fn entries(
        &self,
        pairs: &[(usize, usize)],
        threads: usize,
    ) -> Result<Vec<Cyclotomic>, FixedError> {
        let threads = threads.max(1).min(pairs.len().max(1));
        if threads == 1 {
            return pairs.iter().map(|&(i, j)| self.entry(i, j)).collect();
        }
        let chunk_size = pairs.len().div_ceil(threads);
        let chunks: Vec<&[(usize, usize)]> = pairs.chunks(chunk_size).collect();
        let results: Vec<Result<Vec<Cyclotomic>, FixedError>> = std::thread::scope(|scope| {
            let handles: Vec<_> = chunks
                .into_iter()
                .map(|chunk| {
                    scope.spawn(move || {
                        chunk
                            .iter()
                            .map(|&(i, j)| self.entry(i, j))
                            .collect::<Result<Vec<_>, _>>()
                    })
                })
                .collect();
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        });
        let mut out = Vec::with_capacity(pairs.len());
        for r in results {
            out.extend(r?);
        }
        Ok(out)
    }
}

impl ModularData {
    pub fn compute(group: Arc<FiniteGroup>) -> Result<ModularData, DoubleError> {
        ModularData::compute_with_threads(group, 1)
    }

    /// Computes classes, centralizer tables, the irrep list, `S` via the
    /// transversal sum and the diagonal `T`. S entries over the upper
    /// triangle may be computed on `threads` worker threads; the output is
    /// identical for any thread count.
    pub fn compute_with_threads(
        group: Arc<FiniteGroup>,
        threads: usize,
    ) -> Result<ModularData, DoubleError> {
        let classes = conjugacy_classes(&group);
        let class_of = class_index_map(&group, &classes);
        let k = classes.len();

        // one centralizer table per class, shared between identical element sets
        let mut by_elements: HashMap<Vec<usize>, Arc<CentralizerData>> = HashMap::new();
        let mut centralizers: Vec<Arc<CentralizerData>> = Vec::with_capacity(k);
        for class in &classes {
            let data = match by_elements.get(&class.centralizer) {
                Some(d) => d.clone(),
                None => {
                    let subgroup = Subgroup::new(&group, &class.centralizer)?;
                    let table = character_table(Arc::new(subgroup.group.clone()))?;
                    let data = Arc::new(CentralizerData { subgroup, table });
                    by_elements.insert(class.centralizer.clone(), data.clone());
                    data
                }
            };
            centralizers.push(data);
        }

        // irrep enumeration: blocks in class order, centralizer rows in table order
        let mut irreps = Vec::new();
        let mut block_sizes = Vec::with_capacity(k);
        let mut block_starts = Vec::with_capacity(k);
        for (ci, class) in classes.iter().enumerate() {
            let table = &centralizers[ci].table;
            block_starts.push(irreps.len());
            block_sizes.push(table.irreps.len());
            let rep_in_cent = centralizers[ci]
                .subgroup
                .from_parent(class.representative)
                .expect("representative lies in its centralizer");
            for (row, irrep) in table.irreps.iter().enumerate() {
                let chi_a = table.value_at_element(row, rep_in_cent);
                let degree = BigRational::from(BigInt::from(irrep.degree));
                let t_value = chi_a.scalar_mul(&degree.recip());
                if !(&t_value * &t_value.conj()).is_one() {
                    return Err(DoubleError::NonUnitT { index: irreps.len() });
                }
                irreps.push(DoubleIrrep {
                    class_index: ci,
                    centirrep_index: row,
                    qdim: class.size() as u64 * irrep.degree,
                    t_value,
                    label: format!("({ci},{row})"),
                });
            }
        }
        let rank = irreps.len();

        let basis = FixedBasis::new(group.exponent())?;
        let conj_vals = lift_conjugated_tables(&basis, &centralizers)?;

        // transversal-sum admissibility counts, upper class triangle
        let order = group.order();
        let mut counts: Vec<Vec<CountList>> = vec![vec![Vec::new(); k]; k];
        let mut denoms: Vec<Vec<BigInt>> = vec![vec![BigInt::from(1); k]; k];
        let transversals: Vec<Vec<usize>> = classes
            .iter()
            .map(|c| Ok(left_transversal(&group, &c.centralizer)?.coset_reps))
            .collect::<Result<_, GroupError>>()?;
        for ci in 0..k {
            for cj in ci..k {
                counts[ci][cj] = eq3_counts(&group, &classes, &centralizers, &transversals, ci, cj);
                denoms[ci][cj] = BigInt::from(order as u64);
            }
        }

        let assembly = SAssembly {
            basis: &basis,
            irreps: &irreps,
            conj_vals: &conj_vals,
            counts: &counts,
            denoms: &denoms,
        };
        let pairs: Vec<(usize, usize)> = (0..rank)
            .flat_map(|i| (i..rank).map(move |j| (i, j)))
            .collect();
        let entries = assembly.entries(&pairs, threads)?;

        let mut s = vec![vec![Cyclotomic::zero(); rank]; rank];
        for (&(i, j), value) in pairs.iter().zip(entries) {
            s[j][i] = value.clone();
            s[i][j] = value;
        }
        let t = irreps.iter().map(|ir| ir.t_value.clone()).collect();

        Ok(ModularData {
            group,
            classes,
            class_of,
            centralizers,
            irreps,
            block_sizes,
            block_starts,
            s,
            t,
        })
    }

    pub fn rank(&self) -> usize {
        self.irreps.len()
    }

    /// Direct evaluation of the centralizer-sum form of `S` over the whole
    /// group, entry by entry (no symmetry shortcut). Used as an independent
    /// oracle for the transversal sum.
    pub fn s_matrix_oracle(&self) -> Result<Vec<Vec<Cyclotomic>>, DoubleError> {
        let k = self.classes.len();
        let basis = FixedBasis::new(self.group.exponent())?;
        let conj_vals = lift_conjugated_tables(&basis, &self.centralizers)?;
        let mut counts: Vec<Vec<CountList>> = vec![vec![Vec::new(); k]; k];
        let mut denoms: Vec<Vec<BigInt>> = vec![vec![BigInt::from(1); k]; k];
        for ci in 0..k {
            for cj in 0..k {
                counts[ci][cj] = eq1_counts(&self.group, &self.classes, &self.centralizers, ci, cj);
                denoms[ci][cj] = BigInt::from(
                    (self.classes[ci].centralizer.len() * self.classes[cj].centralizer.len())
                        as u64,
                );
            }
        }
        let assembly = SAssembly {
            basis: &basis,
            irreps: &self.irreps,
            conj_vals: &conj_vals,
            counts: &counts,
            denoms: &denoms,
        };
        let rank = self.rank();
        let pairs: Vec<(usize, usize)> = (0..rank)
            .flat_map(|i| (0..rank).map(move |j| (i, j)))
            .collect();
        let entries = assembly.entries(&pairs, 1)?;
        let mut s = vec![vec![Cyclotomic::zero(); rank]; rank];
        for (&(i, j), value) in pairs.iter().zip(entries) {
            s[i][j] = value;
        }
        Ok(s)
    }

    /// Asserts exact entrywise agreement of the two S-matrix routes.
    pub fn oracle_check(&self) -> Result<(), DoubleError> {
        let oracle = self.s_matrix_oracle()?;
        for i in 0..self.rank() {
            for j in 0..self.rank() {
                if oracle[i][j] != self.s[i][j] {
                    return Err(DoubleError::OracleMismatch { row: i, col: j });
                }
            }
        }
        Ok(())
    }

    /// Runs the exact modular-relation checks on the computed data.
    pub fn verify(&self) -> Result<ModularReport, DoubleError> {
        verify_s_t(&self.s, &self.t)
    }

    /// Quantum dimensions `S_0j / S_00`, checked to be positive integers that
    /// match `|A| deg(alpha)`.
    pub fn quantum_dimensions(&self) -> Result<Vec<u64>, DoubleError> {
        let s00 = self.s[0][0]
            .as_rational()
            .ok_or(DoubleError::NonIntegerDimension { index: 0 })?;
        if !s00.is_positive() {
            return Err(DoubleError::NonIntegerDimension { index: 0 });
        }
        let mut dims = Vec::with_capacity(self.rank());
        for (j, entry) in self.s[0].iter().enumerate() {
            let ratio = entry
                .as_rational()
                .map(|q| q / &s00)
                .ok_or(DoubleError::NonIntegerDimension { index: j })?;
            if !ratio.is_integer() || !ratio.is_positive() {
                return Err(DoubleError::NonIntegerDimension { index: j });
            }
            let mu = ratio
                .to_integer()
                .to_u64()
                .ok_or(DoubleError::NonIntegerDimension { index: j })?;
            if mu != self.irreps[j].qdim {
                return Err(DoubleError::NonIntegerDimension { index: j });
            }
            dims.push(mu);
        }
        Ok(dims)
    }

    /// `sum mu_j^2`, checked against the square of the group order.
    pub fn global_dimension(&self) -> Result<u64, DoubleError> {
        let dims = self.quantum_dimensions()?;
        let total: u64 = dims.iter().map(|&m| m * m).sum();
        let expected = (self.group.order() * self.group.order()) as u64;
        if total != expected {
            return Err(DoubleError::GlobalDimensionMismatch {
                got: BigInt::from(total),
                expected,
            });
        }
        Ok(total)
    }

    /// Recovers the character table of `H` from the modular data: restrict
    /// `S` to the first block's rows, take the first column of each class
    /// block, divide by the class size and scale by `|H|`. The result equals
    /// the character table up to entrywise complex conjugation.
    pub fn character_table_from_modular_data(&self) -> Vec<Vec<Cyclotomic>> {
        let order = BigInt::from(self.group.order() as u64);
        (0..self.block_sizes[0])
            .map(|r| {
                self.classes
                    .iter()
                    .enumerate()
                    .map(|(ci, class)| {
                        let scale = BigRational::new(
                            order.clone(),
                            BigInt::from(class.size() as u64),
                        );
                        self.s[r][self.block_starts[ci]].scalar_mul(&scale)
                    })
                    .collect()
            })
            .collect()
    }
}

/// Lifts the complex-conjugated centralizer character values to integer
/// coordinate vectors at the common conductor.
fn lift_conjugated_tables(
    basis: &FixedBasis,
    centralizers: &[Arc<CentralizerData>],
) -> Result<Vec<Vec<Vec<Vec<i128>>>>, FixedError> {
    let one = BigInt::from(1);
    centralizers
        .iter()
        .map(|cent| {
            cent.table
                .irreps
                .iter()
                .map(|irrep| {
                    irrep
                        .values
                        .iter()
                        .map(|v| basis.lift_scaled(&v.conj(), &one))
                        .collect()
                })
                .collect()
        })
        .collect()
}

/// Admissibility counts for the transversal sum `g_ij = a_i b_j^-1` with
/// `[b_j^-1 b b_j, a_i^-1 a a_i] = e`.
///
/// The enumeration `a_i -> a_i^-1 a a_i` of the class is one-to-one only when
/// the `a_i` run over a *right* transversal of `C_a`, so the sum here runs
/// over the inverses of the greedy left-coset representatives (which form
/// one). Each admissible pair is then exactly one commuting pair of class
/// members `(a_i^-1 a a_i, b_j^-1 b b_j)`, which is what makes the sum agree
/// with the centralizer-sum oracle entry for entry.
fn eq3_counts(
    group: &FiniteGroup,
    classes: &[ConjugacyClass],
    centralizers: &[Arc<CentralizerData>],
    transversals: &[Vec<usize>],
    ci: usize,
    cj: usize,
) -> CountList {
    let a = classes[ci].representative;
    let b = classes[cj].representative;
    let cent_a = &centralizers[ci];
    let cent_b = &centralizers[cj];
    let mut map: HashMap<(usize, usize), u64> = HashMap::new();
    for &ai_left in &transversals[ci] {
        let ai = group.inverse(ai_left);
        let aa = group.conjugate(a, group.inverse(ai)); // a_i^-1 a a_i
        for &bj_left in &transversals[cj] {
            let bj = group.inverse(bj_left);
            let bb = group.conjugate(b, group.inverse(bj)); // b_j^-1 b b_j
            if group.mul(bb, aa) != group.mul(aa, bb) {
                continue;
            }
            // g b g^-1 = a_i (b_j^-1 b b_j) a_i^-1, and symmetrically for a
            let gbg = group.conjugate(bb, ai);
            let gag = group.conjugate(aa, bj);
            let c1 = cent_a.table.class_of[cent_a
                .subgroup
                .from_parent(gbg)
                .expect("g b g^-1 commutes with a")];
            let c2 = cent_b.table.class_of[cent_b
                .subgroup
                .from_parent(gag)
                .expect("g^-1 a g commutes with b")];
            *map.entry((c1, c2)).or_insert(0) += 1;
        }
    }
    sorted_counts(map)
}

/// Admissibility counts for the centralizer sum: over all `g` in `H` with
/// `a` commuting with `g b g^-1`.
fn eq1_counts(
    group: &FiniteGroup,
    classes: &[ConjugacyClass],
    centralizers: &[Arc<CentralizerData>],
    ci: usize,
    cj: usize,
) -> CountList {
    let a = classes[ci].representative;
    let b = classes[cj].representative;
    let cent_a = &centralizers[ci];
    let cent_b = &centralizers[cj];
    let mut map: HashMap<(usize, usize), u64> = HashMap::new();
    for g in 0..group.order() {
        let gbg = group.conjugate(b, g);
        if group.mul(a, gbg) != group.mul(gbg, a) {
            continue;
        }
        let gag = group.conjugate(a, group.inverse(g));
        let c1 = cent_a.table.class_of[cent_a
            .subgroup
            .from_parent(gbg)
            .expect("g b g^-1 commutes with a")];
        let c2 = cent_b.table.class_of[cent_b
            .subgroup
            .from_parent(gag)
            .expect("g^-1 a g commutes with b")];
        *map.entry((c1, c2)).or_insert(0) += 1;
    }
    sorted_counts(map)
}

fn sorted_counts(map: HashMap<(usize, usize), u64>) -> CountList {
    let mut list: CountList = map.into_iter().collect();
    list.sort_unstable();
    list
}

/// Exact verification of the modular relations for an (S, T) pair, usable on
/// freshly computed data and on parsed files alike. Denominators are cleared
/// and all matrix identities checked on integer coordinates.
pub fn verify_s_t(s: &[Vec<Cyclotomic>], t: &[Cyclotomic]) -> Result<ModularReport, DoubleError> {
    let rank = s.len();
    if rank == 0 || s.iter().any(|row| row.len() != rank) || t.len() != rank {
        return Err(DoubleError::MalformedData(format!(
            "need a square S and matching T, got S {}x? and T of length {}",
            rank,
            t.len()
        )));
    }

    // common conductor and cleared denominators
    let mut conductor: u64 = 1;
    let mut s_denom = BigInt::from(1);
    for row in s {
        for v in row {
            conductor = conductor.lcm(&v.conductor());
            for c in v.coefficients() {
                s_denom = s_denom.lcm(c.denom());
            }
        }
    }
    let mut t_denom = BigInt::from(1);
    for v in t {
        conductor = conductor.lcm(&v.conductor());
        for c in v.coefficients() {
            t_denom = t_denom.lcm(c.denom());
        }
    }
    if conductor > 1_000_000 {
        return Err(DoubleError::MalformedData(format!(
            "common conductor {conductor} is out of supported range"
        )));
    }
    let basis = FixedBasis::new(conductor)?;
    let d: i128 = s_denom.to_i128().ok_or(FixedError)?;
    let e: i128 = t_denom.to_i128().ok_or(FixedError)?;

    let s_hat = CycMatrix::lift(&basis, s, &s_denom)?;
    let t_hat: Vec<Vec<i128>> = t
        .iter()
        .map(|v| basis.lift_scaled(v, &t_denom))
        .collect::<Result<_, _>>()?;

    let symmetric = s_hat.is_symmetric();
    let s_conj_t = s_hat.conj_transpose(&basis)?;
    let unitary = s_hat
        .matmul(&basis, &s_conj_t)?
        .is_scaled_identity(&basis, d.checked_mul(d).ok_or(FixedError)?);

    let s2 = s_hat.matmul(&basis, &s_hat)?;
    let d2 = d.checked_mul(d).ok_or(FixedError)?;
    let charge_conjugation = s2.as_scaled_permutation(&basis, d2);
    let s2_is_permutation = charge_conjugation.is_some();
    let c_squared_is_identity = charge_conjugation
        .as_ref()
        .map(|perm| perm.iter().enumerate().all(|(i, &p)| perm[p] == i))
        .unwrap_or(false);
    let s4 = s2.matmul(&basis, &s2)?;
    let d4 = d2.checked_mul(d2).ok_or(FixedError)?;
    let s4_is_identity = s4.is_scaled_identity(&basis, d4);

    let st = s_hat.mul_diag(&basis, &t_hat)?;
    let st3 = st.matmul(&basis, &st)?.matmul(&basis, &st)?;
    // (DE ST)^3 = D^3 E^3 (ST)^3 and D^2 S^2 = s2, so compare at scale D E^3
    let scale = d
        .checked_mul(e.checked_mul(e).and_then(|x| x.checked_mul(e)).ok_or(FixedError)?)
        .ok_or(FixedError)?;
    let st_cubed_equals_s2 = st3.eq_scaled(&s2, scale)?;

    let t_entries_unit_modulus = t.iter().all(|v| (v * &v.conj()).is_one());

    Ok(ModularReport {
        symmetric,
        unitary,
        s2_is_permutation,
        charge_conjugation,
        c_squared_is_identity,
        s4_is_identity,
        st_cubed_equals_s2,
        t_entries_unit_modulus,
    })
}
