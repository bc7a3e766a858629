//! Built-in constructors for the benchmark groups, each with expected
//! structural data for tests and for `list-groups` output.
//!
//! Everything is built by explicit closure: cyclic, dihedral, symmetric and
//! alternating groups from permutation generators, the dicyclic (binary
//! dihedral) series from its left-regular permutation action, `SL(2, F_p)`
//! and the binary tetrahedral group from 2x2 matrix generators over `F_p`,
//! and the binary octahedral and icosahedral groups from exact unit
//! quaternions with cyclotomic coordinates (`sqrt 2` lives in `Q(zeta_8)`,
//! the golden ratio in `Q(zeta_5)`).

use num_rational::BigRational;
use thiserror::Error;

use crate::cyclo::Cyclotomic;
use crate::group::{
    closure, group_from_matrices_bounded, group_from_permutations_bounded, FiniteGroup,
    GroupError, Permutation,
};
use crate::DEFAULT_MAX_ORDER;

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("unknown catalog entry `{0}`")]
    UnknownEntry(String),
    #[error("parameter {got} out of range for `{name}` (expected {min}..={max})")]
    ParameterOutOfRange {
        name: &'static str,
        got: u64,
        min: u64,
        max: u64,
    },
    #[error("`{0}` requires a parameter, e.g. `{0}:3`")]
    MissingParameter(&'static str),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// Expected structural data for a catalog group, used by tests and reports.
#[derive(Clone, Debug)]
pub struct Expectations {
    pub order: u64,
    pub class_count: Option<u64>,
    pub double_rank: Option<u64>,
    pub block_sizes: Option<Vec<u64>>,
}

#[derive(Clone, Copy, Debug)]
pub enum ParamSpec {
    None,
    Range { min: u64, max: u64 },
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub param: ParamSpec,
    pub description: &'static str,
}

pub fn catalog_entries() -> Vec<CatalogEntry> {
    vec![
        CatalogEntry {
            name: "cyclic",
            param: ParamSpec::Range { min: 1, max: 1000 },
            description: "cyclic group Z_n (order n)",
        },
        CatalogEntry {
            name: "dihedral",
            param: ParamSpec::Range { min: 1, max: 500 },
            description: "dihedral group D_n (order 2n)",
        },
        CatalogEntry {
            name: "binary_dihedral",
            param: ParamSpec::Range { min: 1, max: 250 },
            description: "binary dihedral (dicyclic) group (order 4n)",
        },
        CatalogEntry {
            name: "symmetric",
            param: ParamSpec::Range { min: 1, max: 5 },
            description: "symmetric group S_n (order n!)",
        },
        CatalogEntry {
            name: "alternating",
            param: ParamSpec::Range { min: 1, max: 5 },
            description: "alternating group A_n (order n!/2)",
        },
        CatalogEntry {
            name: "binary_tetrahedral",
            param: ParamSpec::None,
            description: "binary tetrahedral group, SL(2,F_3) (order 24)",
        },
        CatalogEntry {
            name: "binary_octahedral",
            param: ParamSpec::None,
            description: "binary octahedral group (order 48)",
        },
        CatalogEntry {
            name: "binary_icosahedral",
            param: ParamSpec::None,
            description: "binary icosahedral group (order 120)",
        },
        CatalogEntry {
            name: "sl2",
            param: ParamSpec::Range { min: 2, max: 7 },
            description: "SL(2, F_p) for prime p (order p(p^2-1))",
        },
    ]
}

/// Splits `name:param` into its parts; no validation beyond the shape.
pub fn parse_entry_spec(spec: &str) -> (&str, Option<Result<u64, String>>) {
    match spec.split_once(':') {
        None => (spec, None),
        Some((name, p)) => (
            name,
            Some(p.parse::<u64>().map_err(|_| p.to_string())),
        ),
    }
}

/// Builds a catalog group by name, e.g. `("cyclic", Some(6))`.
pub fn build(name: &str, param: Option<u64>) -> Result<FiniteGroup, CatalogError> {
    build_bounded(name, param, DEFAULT_MAX_ORDER)
}

pub fn build_bounded(
    name: &str,
    param: Option<u64>,
    max_order: usize,
) -> Result<FiniteGroup, CatalogError> {
    let need = |entry: &'static str, min: u64, max: u64| -> Result<u64, CatalogError> {
        let p = param.ok_or(CatalogError::MissingParameter(entry))?;
        if p < min || p > max {
            return Err(CatalogError::ParameterOutOfRange {
                name: entry,
                got: p,
                min,
                max,
            });
        }
        Ok(p)
    };
    match name {
        "cyclic" => {
            let n = need("cyclic", 1, 1000)? as usize;
            let gens = if n == 1 {
                vec![]
            } else {
                vec![Permutation::from_cycles(n, &[(0..n).collect()])?]
            };
            Ok(group_from_permutations_bounded(&gens, max_order)?)
        }
        "dihedral" => {
            let n = need("dihedral", 1, 500)? as usize;
            let gens = match n {
                1 => vec![Permutation::from_cycles(2, &[vec![0, 1]])?],
                2 => vec![
                    Permutation::from_cycles(4, &[vec![0, 1]])?,
                    Permutation::from_cycles(4, &[vec![2, 3]])?,
                ],
                _ => {
                    let rotation = Permutation::from_cycles(n, &[(0..n).collect()])?;
                    let reflection =
                        Permutation::from_images((0..n).map(|i| (n - i) % n).collect())?;
                    vec![rotation, reflection]
                }
            };
            Ok(group_from_permutations_bounded(&gens, max_order)?)
        }
        "binary_dihedral" => {
            let n = need("binary_dihedral", 1, 250)? as usize;
            Ok(binary_dihedral(n, max_order)?)
        }
        "symmetric" => {
            let n = need("symmetric", 1, 5)? as usize;
            let gens = if n == 1 {
                vec![]
            } else {
                vec![
                    Permutation::from_cycles(n, &[(0..n).collect()])?,
                    Permutation::from_cycles(n, &[vec![0, 1]])?,
                ]
            };
            Ok(group_from_permutations_bounded(&gens, max_order)?)
        }
        "alternating" => {
            let n = need("alternating", 1, 5)? as usize;
            let gens = match n {
                1 | 2 => vec![],
                3 => vec![Permutation::from_cycles(3, &[vec![0, 1, 2]])?],
                4 => vec![
                    Permutation::from_cycles(4, &[vec![0, 1, 2]])?,
                    Permutation::from_cycles(4, &[vec![1, 2, 3]])?,
                ],
                _ => vec![
                    Permutation::from_cycles(5, &[vec![0, 1, 2]])?,
                    Permutation::from_cycles(5, &[vec![0, 1, 2, 3, 4]])?,
                ],
            };
            Ok(group_from_permutations_bounded(&gens, max_order)?)
        }
        // The order-4 class of this group has a centralizer of order 4 that
        // contains the order-4 representative, so it is cyclic Z_4 (some
        // published tables label it Z_2 x Z_2; that label cannot be right).
        "binary_tetrahedral" => Ok(group_from_matrices_bounded(
            3,
            &[[1, 1, 0, 1], [0, 1, 2, 0]],
            max_order,
        )?),
        "binary_octahedral" => Ok(binary_octahedral(max_order)?),
        "binary_icosahedral" => Ok(binary_icosahedral(max_order)?),
        "sl2" => {
            let p = need("sl2", 2, 7)?;
            if !crate::group::is_prime_u64(p) {
                return Err(CatalogError::ParameterOutOfRange {
                    name: "sl2",
                    got: p,
                    min: 2,
                    max: 7,
                });
            }
            Ok(group_from_matrices_bounded(
                p,
                &[[1, 1, 0, 1], [0, 1, p - 1, 0]],
                max_order,
            )?)
        }
        other => Err(CatalogError::UnknownEntry(other.to_string())),
    }
}

/// Known expected data per entry, where documented.
pub fn expectations(name: &str, param: Option<u64>) -> Option<Expectations> {
    match (name, param) {
        ("cyclic", Some(n)) => Some(Expectations {
            order: n,
            class_count: Some(n),
            double_rank: Some(n * n),
            block_sizes: Some(vec![n; n as usize]),
        }),
        ("dihedral", Some(n)) => Some(Expectations {
            order: 2 * n,
            class_count: Some(if n % 2 == 1 { (n + 3) / 2 } else { n / 2 + 3 }),
            double_rank: None,
            block_sizes: None,
        }),
        ("binary_dihedral", Some(n)) => Some(Expectations {
            order: 4 * n,
            class_count: Some(n + 3),
            double_rank: None,
            block_sizes: None,
        }),
        ("symmetric", Some(n)) => Some(Expectations {
            order: factorial(n),
            class_count: match n {
                1 => Some(1),
                2 => Some(2),
                3 => Some(3),
                4 => Some(5),
                5 => Some(7),
                _ => None,
            },
            double_rank: match n {
                3 => Some(8),
                4 => Some(21),
                _ => None,
            },
            block_sizes: None,
        }),
        ("alternating", Some(n)) => Some(Expectations {
            order: factorial(n).max(2) / 2,
            class_count: match n {
                1 | 2 => Some(1),
                3 => Some(3),
                4 => Some(4),
                5 => Some(5),
                _ => None,
            },
            double_rank: match n {
                4 => Some(14),
                5 => Some(22),
                _ => None,
            },
            block_sizes: None,
        }),
        ("binary_tetrahedral", _) => Some(Expectations {
            order: 24,
            class_count: Some(7),
            double_rank: Some(42),
            block_sizes: Some(vec![7, 7, 6, 6, 4, 6, 6]),
        }),
        ("binary_octahedral", _) => Some(Expectations {
            order: 48,
            class_count: Some(8),
            double_rank: None,
            block_sizes: None,
        }),
        ("binary_icosahedral", _) => Some(Expectations {
            order: 120,
            class_count: Some(9),
            double_rank: None,
            block_sizes: None,
        }),
        ("sl2", Some(p)) => Some(Expectations {
            order: p * (p * p - 1),
            class_count: None,
            double_rank: None,
            block_sizes: None,
        }),
        _ => None,
    }
}

fn factorial(n: u64) -> u64 {
    (1..=n).product::<u64>().max(1)
}

/// Dicyclic group of order 4n from its left-regular action: elements are
/// `a^k` (index k) and `a^k b` (index 2n+k) with `b^2 = a^n`,
/// `b a b^-1 = a^-1`.
fn binary_dihedral(n: usize, max_order: usize) -> Result<FiniteGroup, GroupError> {
    let two_n = 2 * n;
    let size = 4 * n;
    let mut la = vec![0usize; size];
    let mut lb = vec![0usize; size];
    for k in 0..two_n {
        la[k] = (k + 1) % two_n;
        la[two_n + k] = two_n + (k + 1) % two_n;
        lb[k] = two_n + (two_n - k) % two_n;
        lb[two_n + k] = (n + two_n - k) % two_n;
    }
    let gens = vec![Permutation::from_images(la)?, Permutation::from_images(lb)?];
    group_from_permutations_bounded(&gens, max_order)
}

/// Exact unit quaternion with cyclotomic coordinates `(re, i, j, k)`.
#[derive(Clone, PartialEq, Eq, Hash)]
struct Quat([Cyclotomic; 4]);

impl Quat {
    fn one() -> Quat {
        Quat([
            Cyclotomic::one(),
            Cyclotomic::zero(),
            Cyclotomic::zero(),
            Cyclotomic::zero(),
        ])
    }

    fn mul(&self, other: &Quat) -> Quat {
        let [a1, b1, c1, d1] = &self.0;
        let [a2, b2, c2, d2] = &other.0;
        Quat([
            &(&(a1 * a2) - &(b1 * b2)) - &(&(c1 * c2) + &(d1 * d2)),
            &(&(a1 * b2) + &(b1 * a2)) + &(&(c1 * d2) - &(d1 * c2)),
            &(&(a1 * c2) - &(b1 * d2)) + &(&(c1 * a2) + &(d1 * b2)),
            &(&(a1 * d2) + &(b1 * c2)) + &(&(d1 * a2) - &(c1 * b2)),
        ])
    }

    fn label(&self) -> String {
        format!(
            "({}, {}, {}, {})",
            self.0[0], self.0[1], self.0[2], self.0[3]
        )
    }
}

fn half() -> BigRational {
    BigRational::new(1.into(), 2.into())
}

fn quat_closure(gens: &[Quat], max_order: usize) -> Result<FiniteGroup, GroupError> {
    closure(
        Quat::one(),
        gens,
        |a, b| a.mul(b),
        |q| Some(q.label()),
        max_order,
    )
}

/// Binary octahedral group: generated by `(1+i)/sqrt2` and
/// `(-1+i+j+k)/2`, with `sqrt2 = zeta_8 - zeta_8^3`.
fn binary_octahedral(max_order: usize) -> Result<FiniteGroup, GroupError> {
    let sqrt2_over_2 =
        (&Cyclotomic::root_of_unity(8, 1) - &Cyclotomic::root_of_unity(8, 3)).scalar_mul(&half());
    let zero = Cyclotomic::zero();
    let s = Quat([
        sqrt2_over_2.clone(),
        sqrt2_over_2,
        zero.clone(),
        zero.clone(),
    ]);
    let h = Cyclotomic::from_rational(half());
    let omega = Quat([(-&h).clone(), h.clone(), h.clone(), h]);
    quat_closure(&[s, omega], max_order)
}

/// Binary icosahedral group: generated by `(-1+i+j+k)/2` and the order-10
/// icosian `(golden + i + golden^-1 j)/2`, with the golden ratio expressed
/// through `sqrt5 = 1 + 2(zeta_5 + zeta_5^4)`.
fn binary_icosahedral(max_order: usize) -> Result<FiniteGroup, GroupError> {
    let sqrt5 = &Cyclotomic::one()
        + &(&Cyclotomic::root_of_unity(5, 1) + &Cyclotomic::root_of_unity(5, 4))
            .scalar_mul(&BigRational::from(num_bigint::BigInt::from(2)));
    let golden = (&Cyclotomic::one() + &sqrt5).scalar_mul(&half());
    let golden_inv = &golden - &Cyclotomic::one();
    let h = Cyclotomic::from_rational(half());
    let omega = Quat([(-&h).clone(), h.clone(), h.clone(), h.clone()]);
    let sigma = Quat([
        golden.scalar_mul(&half()),
        h,
        golden_inv.scalar_mul(&half()),
        Cyclotomic::zero(),
    ]);
    quat_closure(&[omega, sigma], max_order)
}
