//! Exact irreducible character tables via the Burnside/Dixon class-algebra
//! method.
//!
//! The commuting class-sum matrices are simultaneously diagonalised over a
//! prime field `F_p` with `p = 1 (mod exp(G))` and `p > 2 sqrt(|G|) max|A|`;
//! the eigenvector of the class algebra attached to an irrep `r` carries
//! `omega_r(A) = |A| chi_r(a) / chi_r(e)`. Degrees follow from orthogonality,
//! and the mod-p character values are lifted to exact values in
//! `Q(zeta_exp(G))` by reading off root-of-unity multiplicities from the
//! power maps (Dixon's lifting). No floating point and no numerical
//! eigensolvers are involved.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::cyclo::Cyclotomic;
use crate::group::{class_index_map, conjugacy_classes, ConjugacyClass, FiniteGroup};
use crate::modp::{simultaneous_eigenbasis, Fp, MatP};

#[derive(Debug, Error)]
pub enum CharError {
    #[error("Frobenius-Schur sum of row {row} is not in {{-1, 0, 1}}")]
    NotAnIndicator { row: usize },
    #[error("character lift failed for row {row}, class {class}")]
    LiftFailed { row: usize, class: usize },
    #[error("no degree in range reproduces the mod-p square for row {row}")]
    DegreeNotFound { row: usize },
}

/// One irreducible character: degree, one exact value per conjugacy class,
/// and the Frobenius-Schur indicator (+1 real, 0 complex, -1 quaternionic).
#[derive(Clone, Debug)]
pub struct Irrep {
    pub degree: u64,
    pub values: Vec<Cyclotomic>,
    pub fs_indicator: i8,
}

/// The full character table of a finite group, rows in canonical order:
/// ascending degree, then the structural order of the value tuples. The
/// trivial character is always row 0 and the identity class column 0.
#[derive(Clone)]
pub struct CharacterTable {
    pub group: Arc<FiniteGroup>,
    pub classes: Vec<ConjugacyClass>,
    pub class_of: Vec<usize>,
    pub irreps: Vec<Irrep>,
}

impl CharacterTable {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn value(&self, row: usize, class: usize) -> &Cyclotomic {
        &self.irreps[row].values[class]
    }

    /// Character value on a group element.
    pub fn value_at_element(&self, row: usize, element: usize) -> &Cyclotomic {
        self.value(row, self.class_of[element])
    }

    pub fn degree(&self, row: usize) -> u64 {
        self.irreps[row].degree
    }

    /// Recomputes `(1/|G|) sum_g chi_r(g^2)` from the stored values.
    pub fn compute_fs_indicator(&self, row: usize) -> Result<i8, CharError> {
        frobenius_schur(&self.group, &self.classes, &self.class_of, &self.irreps[row].values)
            .ok_or(CharError::NotAnIndicator { row })
    }

    /// Exact row orthogonality: `sum_A |A| chi_r(A) conj(chi_s(A)) = |G| d_rs`.
    pub fn check_orthogonality(&self) -> bool {
        let order = BigRational::from(BigInt::from(self.group.order() as u64));
        for r in 0..self.irreps.len() {
            for s in 0..self.irreps.len() {
                let mut acc = Cyclotomic::zero();
                for (ci, class) in self.classes.iter().enumerate() {
                    let term = self.value(r, ci) * &self.value(s, ci).conj();
                    acc = &acc + &term.scalar_mul(&BigRational::from(BigInt::from(
                        class.size() as u64,
                    )));
                }
                let expected = if r == s { order.clone() } else { BigRational::zero() };
                if acc.as_rational() != Some(expected) {
                    return false;
                }
            }
        }
        true
    }
}

/// The class matrix `M_A` for every class `A`, in canonical class order:
/// `(M_A)[B][C] = #{(x, y) in A x B : x y = c0}` for a fixed representative
/// `c0` of `C`. These matrices commute pairwise, and every column of `M_A`
/// sums to `|A|`.
pub fn class_sum_matrices(group: &FiniteGroup, classes: &[ConjugacyClass]) -> Vec<Vec<Vec<u64>>> {
    let class_of = class_index_map(group, classes);
    let k = classes.len();
    classes
        .iter()
        .map(|class_a| {
            let mut mat = vec![vec![0u64; k]; k];
            for (c, class_c) in classes.iter().enumerate() {
                let c0 = class_c.representative;
                for &x in &class_a.members {
                    let y = group.mul(group.inverse(x), c0);
                    mat[class_of[y]][c] += 1;
                }
            }
            mat
        })
        .collect()
}

/// Smallest prime `p = 1 (mod m)` with `p > 2 sqrt(|G|) max|A|`, checked as
/// `p^2 > 4 |G| max|A|^2` to stay in integers.
fn select_prime(order: u64, max_class_size: u64, m: u64) -> u64 {
    let bound = 4 * order * max_class_size * max_class_size;
    let mut p = m + 1;
    loop {
        if p * p > bound && crate::group::is_prime_u64(p) {
            return p;
        }
        p += m;
    }
}

/// Computes the exact character table of a finite group.
pub fn character_table(group: Arc<FiniteGroup>) -> Result<CharacterTable, CharError> {
    let classes = conjugacy_classes(&group);
    let class_of = class_index_map(&group, &classes);
    let k = classes.len();
    let order = group.order() as u64;
    let m = group.exponent();

    if k == 1 {
        return Ok(CharacterTable {
            group,
            classes,
            class_of,
            irreps: vec![Irrep {
                degree: 1,
                values: vec![Cyclotomic::one()],
                fs_indicator: 1,
            }],
        });
    }

    let max_class_size = classes.iter().map(|c| c.size() as u64).max().unwrap();
    let p = select_prime(order, max_class_size, m);
    let f = Fp::new(p);

    let class_mats = class_sum_matrices(&group, &classes);
    let mats_p: Vec<MatP> = class_mats
        .iter()
        .skip(1) // the identity class matrix is the identity; it never splits
        .map(|mat| {
            let mut mp = MatP::new(k);
            for r in 0..k {
                for c in 0..k {
                    mp.set(r, c, mat[r][c] % p);
                }
            }
            mp
        })
        .collect();

    let mut omegas = simultaneous_eigenbasis(f, &mats_p, k);
    for v in &mut omegas {
        // omega_r(identity class) = 1 fixes the scale
        let scale = f.inv(v[0]);
        for x in v.iter_mut() {
            *x = f.mul(*x, scale);
        }
    }

    let inverse_class: Vec<usize> = classes
        .iter()
        .map(|c| class_of[group.inverse(c.representative)])
        .collect();
    let class_size_inv: Vec<u64> = classes
        .iter()
        .map(|c| f.inv(c.size() as u64 % p))
        .collect();

    // power maps: class of rep^l for l in 0..m
    let power_class: Vec<Vec<usize>> = classes
        .iter()
        .map(|c| {
            let mut cur = group.identity();
            (0..m)
                .map(|_| {
                    let idx = class_of[cur];
                    cur = group.mul(cur, c.representative);
                    idx
                })
                .collect()
        })
        .collect();

    let z = f.pow(f.primitive_root(), (p - 1) / m);
    let z_pows: Vec<u64> = {
        let mut v = Vec::with_capacity(m as usize);
        let mut cur = 1u64;
        for _ in 0..m {
            v.push(cur);
            cur = f.mul(cur, z);
        }
        v
    };
    let m_inv = f.inv(m % p);

    let isqrt = |n: u64| -> u64 {
        let mut d = 0;
        while (d + 1) * (d + 1) <= n {
            d += 1;
        }
        d
    };

    let mut irreps = Vec::with_capacity(k);
    for (row, omega) in omegas.iter().enumerate() {
        // degree from the orthogonality relation
        let mut s = 0u64;
        for a in 0..k {
            s = f.add(s, f.mul(f.mul(omega[a], omega[inverse_class[a]]), class_size_inv[a]));
        }
        let d_squared = f.mul(order % p, f.inv(s));
        let degree = (1..=isqrt(order))
            .find(|&d| f.mul(d % p, d % p) == d_squared)
            .ok_or(CharError::DegreeNotFound { row })?;

        // theta_r(A) = d_r omega_r(A) / |A| mod p
        let theta: Vec<u64> = (0..k)
            .map(|a| f.mul(f.mul(degree % p, omega[a]), class_size_inv[a]))
            .collect();

        // Dixon lifting: multiplicities of each m-th root of unity
        let mut values = Vec::with_capacity(k);
        for a in 0..k {
            let mut counts = vec![BigInt::zero(); m as usize];
            let mut total = 0u64;
            for kk in 0..m {
                let mut acc = 0u64;
                for l in 0..m {
                    let t = theta[power_class[a][l as usize]];
                    let e = (m - (kk * l) % m) % m;
                    acc = f.add(acc, f.mul(t, z_pows[e as usize]));
                }
                let c = f.mul(acc, m_inv);
                if c > order {
                    return Err(CharError::LiftFailed { row, class: a });
                }
                total += c;
                counts[kk as usize] = BigInt::from(c);
            }
            if total != degree {
                return Err(CharError::LiftFailed { row, class: a });
            }
            values.push(Cyclotomic::from_unity_combination(m, &counts));
        }

        let fs = frobenius_schur(&group, &classes, &class_of, &values)
            .ok_or(CharError::NotAnIndicator { row })?;
        irreps.push(Irrep {
            degree,
            values,
            fs_indicator: fs,
        });
    }

    irreps.sort_by(|a, b| {
        a.degree.cmp(&b.degree).then_with(|| {
            for (x, y) in a.values.iter().zip(&b.values) {
                let ord = x.cmp_structural(y);
                if ord != std::cmp::Ordering::Equal {
                    return ord;
                }
            }
            std::cmp::Ordering::Equal
        })
    });
    debug_assert!(
        irreps[0].values.iter().all(|v| v.is_one()),
        "trivial character must sort first"
    );

    Ok(CharacterTable {
        group,
        classes,
        class_of,
        irreps,
    })
}

/// `(1/|G|) sum_g chi(g^2)` evaluated classwise; `None` if the result is not
/// exactly -1, 0 or +1.
fn frobenius_schur(
    group: &FiniteGroup,
    classes: &[ConjugacyClass],
    class_of: &[usize],
    values: &[Cyclotomic],
) -> Option<i8> {
    let mut acc = Cyclotomic::zero();
    for class in classes {
        let sq = group.mul(class.representative, class.representative);
        let term = values[class_of[sq]]
            .scalar_mul(&BigRational::from(BigInt::from(class.size() as u64)));
        acc = &acc + &term;
    }
    let nu = acc.scalar_mul(&BigRational::new(
        BigInt::one(),
        BigInt::from(group.order() as u64),
    ));
    let q = nu.as_rational()?;
    if !q.is_integer() {
        return None;
    }
    match q.to_integer().try_into() {
        Ok(v @ (-1i8 | 0 | 1)) => Some(v),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{group_from_matrices, group_from_permutations, Permutation};

    fn table_of(g: FiniteGroup) -> CharacterTable {
        character_table(Arc::new(g)).unwrap()
    }

    fn s3() -> FiniteGroup {
        let a = Permutation::from_cycles(3, &[vec![0, 1, 2]]).unwrap();
        let b = Permutation::from_cycles(3, &[vec![0, 1]]).unwrap();
        group_from_permutations(&[a, b]).unwrap()
    }

    fn cyclic(n: usize) -> FiniteGroup {
        let a = Permutation::from_cycles(n, &[(0..n).collect()]).unwrap();
        group_from_permutations(&[a]).unwrap()
    }

    fn binary_tetrahedral() -> FiniteGroup {
        group_from_matrices(3, &[[1, 1, 0, 1], [0, 1, 2, 0]]).unwrap()
    }

    #[test]
    fn trivial_group_table() {
        let t = table_of(group_from_permutations(&[]).unwrap());
        assert_eq!(t.irreps.len(), 1);
        assert!(t.value(0, 0).is_one());
        assert_eq!(t.irreps[0].fs_indicator, 1);
    }

    #[test]
    fn s3_has_the_standard_table() {
        let t = table_of(s3());
        let degrees: Vec<u64> = t.irreps.iter().map(|i| i.degree).collect();
        assert_eq!(degrees, vec![1, 1, 2]);
        // classes in canonical order: identity, transpositions, 3-cycles;
        // hand-enumerated traces of the 2-dimensional representation
        let row2: Vec<Cyclotomic> = vec![
            Cyclotomic::from_integer(2),
            Cyclotomic::zero(),
            Cyclotomic::from_integer(-1),
        ];
        assert_eq!(t.irreps[2].values, row2);
        // sign character on transpositions
        assert_eq!(t.value(1, 1), &Cyclotomic::from_integer(-1));
        assert!(t.check_orthogonality());
    }

    #[test]
    fn cyclic_groups_have_root_of_unity_characters() {
        for n in [2usize, 3, 4, 5, 6, 12] {
            let t = table_of(cyclic(n));
            assert_eq!(t.irreps.len(), n);
            // the rows are exactly { k -> zeta_n^{jk} : j }, as a set
            // (element a^k has index k under breadth-first indexing, and all
            // classes are singletons ordered by element order then index)
            let mut expected: Vec<Vec<Cyclotomic>> = (0..n)
                .map(|j| {
                    (0..n)
                        .map(|ci| {
                            let k = t.classes[ci].representative;
                            Cyclotomic::root_of_unity(n as u64, (j * k) as i64)
                        })
                        .collect()
                })
                .collect();
            let mut actual: Vec<Vec<Cyclotomic>> =
                t.irreps.iter().map(|i| i.values.clone()).collect();
            expected.sort();
            actual.sort();
            assert_eq!(expected, actual, "Z_{n}");
        }
    }

    #[test]
    fn nontrivial_character_of_z3_is_complex_type() {
        let t = table_of(cyclic(3));
        assert_eq!(t.irreps[0].fs_indicator, 1);
        assert_eq!(t.irreps[1].fs_indicator, 0);
        assert_eq!(t.irreps[2].fs_indicator, 0);
    }

    #[test]
    fn binary_tetrahedral_degrees_and_indicators() {
        let t = table_of(binary_tetrahedral());
        let degrees: Vec<u64> = t.irreps.iter().map(|i| i.degree).collect();
        assert_eq!(degrees, vec![1, 1, 1, 2, 2, 2, 3]);
        let fs: Vec<i8> = t.irreps.iter().map(|i| i.fs_indicator).collect();
        assert_eq!(fs, vec![1, 0, 0, -1, 0, 0, 1]);
        assert!(t.check_orthogonality());
        // degree-3 irrep takes value -1 on the order-4 class
        let c4 = t.classes.iter().position(|c| c.element_order == 4).unwrap();
        assert_eq!(t.value(6, c4), &Cyclotomic::from_integer(-1));
        // the quaternionic degree-2 irrep is rational: (2,-2,-1,-1,0,1,1)
        let vals: Vec<Cyclotomic> = [2i64, -2, -1, -1, 0, 1, 1]
            .iter()
            .map(|&v| Cyclotomic::from_integer(v))
            .collect();
        assert_eq!(t.irreps[3].values, vals);
    }

    #[test]
    fn degrees_divide_group_order_and_squares_sum() {
        for g in [s3(), cyclic(6), binary_tetrahedral()] {
            let order = g.order() as u64;
            let t = table_of(g);
            let mut sum = 0;
            for irrep in &t.irreps {
                assert_eq!(order % irrep.degree, 0);
                sum += irrep.degree * irrep.degree;
            }
            assert_eq!(sum, order);
        }
    }

    #[test]
    fn character_values_are_algebraic_integers() {
        for g in [s3(), cyclic(12), binary_tetrahedral()] {
            let t = table_of(g);
            for irrep in &t.irreps {
                for v in &irrep.values {
                    for c in v.coefficients() {
                        assert!(c.is_integer(), "non-integral coefficient in {v}");
                    }
                }
            }
        }
    }

    #[test]
    fn identity_class_matrix_is_identity() {
        let g = s3();
        let classes = conjugacy_classes(&g);
        let mats = class_sum_matrices(&g, &classes);
        for (r, row) in mats[0].iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                assert_eq!(v, u64::from(r == c));
            }
        }
    }

    #[test]
    fn z2_class_sum_squares_to_identity_sum() {
        let g = cyclic(2);
        let classes = conjugacy_classes(&g);
        let mats = class_sum_matrices(&g, &classes);
        // K_1 K_1 = K_0, so (M_1)[B][C] counts: the only pair (x, x) with
        // x^2 = e lands in the identity column
        assert_eq!(mats[1], vec![vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn class_matrix_columns_sum_to_class_size() {
        let g = s3();
        let classes = conjugacy_classes(&g);
        let mats = class_sum_matrices(&g, &classes);
        for (a, mat) in mats.iter().enumerate() {
            let size = classes[a].size() as u64;
            let k = classes.len();
            for c in 0..k {
                let col_sum: u64 = (0..k).map(|b| mat[b][c]).sum();
                assert_eq!(col_sum, size, "column {c} of M_{a}");
            }
        }
    }

    #[test]
    fn direct_product_table_is_tensor_of_factors() {
        // Z_2 x Z_3 on disjoint points
        let a = Permutation::from_cycles(5, &[vec![0, 1]]).unwrap();
        let b = Permutation::from_cycles(5, &[vec![2, 3, 4]]).unwrap();
        let g = group_from_permutations(&[a, b]).unwrap();
        assert_eq!(g.order(), 6);
        let t = table_of(g);
        let t2 = table_of(cyclic(2));
        let t3 = table_of(cyclic(3));
        // every row of the product table is a tensor product of factor rows
        // evaluated via the decomposition g = x * y
        let g2gen = 1usize; // first generator index in BFS order
        let _ = g2gen;
        let mut product_rows: Vec<Vec<Cyclotomic>> = Vec::new();
        for r2 in &t2.irreps {
            for r3 in &t3.irreps {
                let row: Vec<Cyclotomic> = t.classes
                    .iter()
                    .map(|c| {
                        // decompose the representative as x^i y^j by scanning
                        let gx = t.group.generators()[0];
                        let gy = t.group.generators()[1];
                        for i in 0..2 {
                            for j in 0..3 {
                                let e = t.group.mul(t.group.power(gx, i), t.group.power(gy, j));
                                if e == c.representative {
                                    let vx = &r2.values[t2.class_of[t2
                                        .group
                                        .power(t2.group.generators()[0], i)]];
                                    let vy = &r3.values[t3.class_of[t3
                                        .group
                                        .power(t3.group.generators()[0], j)]];
                                    return vx * vy;
                                }
                            }
                        }
                        unreachable!("element must decompose")
                    })
                    .collect();
                product_rows.push(row);
            }
        }
        let mut actual: Vec<Vec<Cyclotomic>> = t.irreps.iter().map(|i| i.values.clone()).collect();
        product_rows.sort();
        actual.sort();
        assert_eq!(product_rows, actual);
    }

    #[test]
    fn fs_indicator_recompute_matches_stored() {
        let t = table_of(binary_tetrahedral());
        for r in 0..t.irreps.len() {
            assert_eq!(t.compute_fs_indicator(r).unwrap(), t.irreps[r].fs_indicator);
        }
    }
}
