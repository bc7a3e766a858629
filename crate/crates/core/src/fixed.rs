//! Fixed-conductor workspace for matrix-heavy exact computations.
//!
//! Modular-matrix verification and the Verlinde sums multiply thousands of
//! cyclotomic values that all live in one field `Q(zeta_N)` and, after
//! clearing denominators, have integer coordinates. This module represents
//! such values as flat `i128` coordinate vectors with a precomputed reduction
//! table, so the hot loops run entirely on machine integers. All arithmetic
//! is overflow-checked; exceeding `i128` aborts the fast path with an error
//! instead of wrapping. Results are converted back to canonical
//! [`Cyclotomic`] values only at the boundaries.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::cyclo::{conductor_data, Cyclotomic};

/// Arithmetic overflowed the `i128` fast path (or a value refused to lift to
/// the common conductor). The exact slow path is unaffected; callers treat
/// this as "input out of supported range".
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FixedError;

impl std::fmt::Display for FixedError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "value exceeds the integer fast-path bounds")
    }
}

impl std::error::Error for FixedError {}

/// Precomputed power-basis reduction data for a single conductor.
pub struct FixedBasis {
    n: u64,
    phi: usize,
    /// `rows[e]`: coordinates of `zeta_n^e` for `0 <= e < n`.
    rows: Vec<Vec<i128>>,
}

impl FixedBasis {
    /// Builds the workspace for `Q(zeta_n)`; `n` congruent to 2 mod 4 is
    /// normalised to `n/2` (the same field).
    pub fn new(n: u64) -> Result<FixedBasis, FixedError> {
        let n = if n % 4 == 2 { n / 2 } else { n };
        let data = conductor_data(n);
        let rows: Option<Vec<Vec<i128>>> = data
            .rows
            .iter()
            .map(|row| row.iter().map(|c| c.to_i128()).collect())
            .collect();
        Ok(FixedBasis {
            n,
            phi: data.phi,
            rows: rows.ok_or(FixedError)?,
        })
    }

    pub fn conductor(&self) -> u64 {
        self.n
    }

    pub fn phi(&self) -> usize {
        self.phi
    }

    pub fn zero(&self) -> Vec<i128> {
        vec![0; self.phi]
    }

    pub fn scalar(&self, v: i128) -> Vec<i128> {
        let mut out = self.zero();
        out[0] = v;
        out
    }

    /// Coordinates of `scale * x`, provided the conductor of `x` divides `n`
    /// and the scaled coefficients are integers that fit in `i128`.
    pub fn lift_scaled(&self, x: &Cyclotomic, scale: &BigInt) -> Result<Vec<i128>, FixedError> {
        let dense = x.dense_at(self.n).ok_or(FixedError)?;
        dense
            .iter()
            .map(|c| {
                let scaled: BigRational = c * BigRational::from(scale.clone());
                if !scaled.is_integer() {
                    return Err(FixedError);
                }
                scaled.to_integer().to_i128().ok_or(FixedError)
            })
            .collect()
    }

    /// Canonical cyclotomic value of `v / denom`.
    pub fn to_cyclotomic(&self, v: &[i128], denom: &BigInt) -> Cyclotomic {
        let q = BigRational::from(denom.clone()).recip();
        let coeffs: Vec<BigRational> = v
            .iter()
            .map(|&c| BigRational::from(BigInt::from(c)) * &q)
            .collect();
        Cyclotomic::from_dense(self.n, coeffs)
    }

    /// `acc += a * b` as a raw convolution of length `2 phi - 1`.
    #[inline]
    pub fn mul_acc(&self, a: &[i128], b: &[i128], acc: &mut [i128]) -> Result<(), FixedError> {
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                if y != 0 {
                    let prod = x.checked_mul(y).ok_or(FixedError)?;
                    acc[i + j] = acc[i + j].checked_add(prod).ok_or(FixedError)?;
                }
            }
        }
        Ok(())
    }

    /// Reduces a raw convolution back to `phi` coordinates.
    pub fn reduce(&self, conv: &[i128]) -> Result<Vec<i128>, FixedError> {
        let mut out = conv[..self.phi].to_vec();
        for (e, &c) in conv.iter().enumerate().skip(self.phi) {
            if c == 0 {
                continue;
            }
            let row = &self.rows[e % self.n as usize];
            for (dst, &r) in out.iter_mut().zip(row) {
                if r != 0 {
                    let prod = c.checked_mul(r).ok_or(FixedError)?;
                    *dst = dst.checked_add(prod).ok_or(FixedError)?;
                }
            }
        }
        Ok(out)
    }

    pub fn mul(&self, a: &[i128], b: &[i128]) -> Result<Vec<i128>, FixedError> {
        let mut conv = vec![0i128; 2 * self.phi - 1];
        self.mul_acc(a, b, &mut conv)?;
        self.reduce(&conv)
    }

    /// Complex conjugation in coordinates.
    pub fn conj(&self, a: &[i128]) -> Result<Vec<i128>, FixedError> {
        if self.n == 1 {
            return Ok(a.to_vec());
        }
        let mut out = self.zero();
        for (e, &c) in a.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let row = &self.rows[(self.n as usize - e) % self.n as usize];
            for (dst, &r) in out.iter_mut().zip(row) {
                if r != 0 {
                    let prod = c.checked_mul(r).ok_or(FixedError)?;
                    *dst = dst.checked_add(prod).ok_or(FixedError)?;
                }
            }
        }
        Ok(out)
    }

    /// The value as a rational integer, if its higher coordinates vanish.
    pub fn as_scalar(&self, v: &[i128]) -> Option<i128> {
        if v[1..].iter().all(|&c| c == 0) {
            Some(v[0])
        } else {
            None
        }
    }
}

/// Dense matrix of fixed-conductor integer cyclotomic values.
pub struct CycMatrix {
    pub rows: usize,
    pub cols: usize,
    phi: usize,
    data: Vec<i128>,
}

impl CycMatrix {
    pub fn zero(basis: &FixedBasis, rows: usize, cols: usize) -> CycMatrix {
        CycMatrix {
            rows,
            cols,
            phi: basis.phi(),
            data: vec![0; rows * cols * basis.phi()],
        }
    }

    /// Builds a matrix of `scale * m[r][c]` coordinates.
    pub fn lift(
        basis: &FixedBasis,
        m: &[Vec<Cyclotomic>],
        scale: &BigInt,
    ) -> Result<CycMatrix, FixedError> {
        let rows = m.len();
        let cols = m.first().map_or(0, |r| r.len());
        let mut out = CycMatrix::zero(basis, rows, cols);
        for (r, row) in m.iter().enumerate() {
            for (c, value) in row.iter().enumerate() {
                let v = basis.lift_scaled(value, scale)?;
                out.set(r, c, &v);
            }
        }
        Ok(out)
    }

    #[inline]
    pub fn entry(&self, r: usize, c: usize) -> &[i128] {
        let at = (r * self.cols + c) * self.phi;
        &self.data[at..at + self.phi]
    }

    pub fn set(&mut self, r: usize, c: usize, v: &[i128]) {
        let at = (r * self.cols + c) * self.phi;
        self.data[at..at + self.phi].copy_from_slice(v);
    }

    pub fn matmul(&self, basis: &FixedBasis, other: &CycMatrix) -> Result<CycMatrix, FixedError> {
        assert_eq!(self.cols, other.rows);
        let mut out = CycMatrix::zero(basis, self.rows, other.cols);
        let mut conv = vec![0i128; 2 * basis.phi() - 1];
        for r in 0..self.rows {
            for c in 0..other.cols {
                conv.fill(0);
                for k in 0..self.cols {
                    basis.mul_acc(self.entry(r, k), other.entry(k, c), &mut conv)?;
                }
                let reduced = basis.reduce(&conv)?;
                out.set(r, c, &reduced);
            }
        }
        Ok(out)
    }

    pub fn conj_transpose(&self, basis: &FixedBasis) -> Result<CycMatrix, FixedError> {
        let mut out = CycMatrix::zero(basis, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                let v = basis.conj(self.entry(r, c))?;
                out.set(c, r, &v);
            }
        }
        Ok(out)
    }

    /// Multiplies column `c` by the diagonal entry `diag[c]` on the right.
    pub fn mul_diag(&self, basis: &FixedBasis, diag: &[Vec<i128>]) -> Result<CycMatrix, FixedError> {
        assert_eq!(self.cols, diag.len());
        let mut out = CycMatrix::zero(basis, self.rows, self.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                let v = basis.mul(self.entry(r, c), &diag[c])?;
                out.set(r, c, &v);
            }
        }
        Ok(out)
    }

    pub fn is_symmetric(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        (0..self.rows).all(|r| (r..self.cols).all(|c| self.entry(r, c) == self.entry(c, r)))
    }

    /// Checks `self == scale * I`.
    pub fn is_scaled_identity(&self, basis: &FixedBasis, scale: i128) -> bool {
        if self.rows != self.cols {
            return false;
        }
        let id = basis.scalar(scale);
        let zero = basis.zero();
        (0..self.rows).all(|r| {
            (0..self.cols).all(|c| {
                let want = if r == c { &id } else { &zero };
                self.entry(r, c) == want.as_slice()
            })
        })
    }

    /// If `self == scale * P` for a permutation matrix `P`, returns the
    /// permutation as `perm[r] = c`.
    pub fn as_scaled_permutation(&self, basis: &FixedBasis, scale: i128) -> Option<Vec<usize>> {
        if self.rows != self.cols {
            return None;
        }
        let id = basis.scalar(scale);
        let zero = basis.zero();
        let mut perm = vec![usize::MAX; self.rows];
        let mut hit = vec![false; self.cols];
        for r in 0..self.rows {
            for c in 0..self.cols {
                let e = self.entry(r, c);
                if e == zero.as_slice() {
                    continue;
                }
                if e != id.as_slice() || perm[r] != usize::MAX || hit[c] {
                    return None;
                }
                perm[r] = c;
                hit[c] = true;
            }
            if perm[r] == usize::MAX {
                return None;
            }
        }
        Some(perm)
    }

    pub fn eq_scaled(&self, other: &CycMatrix, scale: i128) -> Result<bool, FixedError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Ok(false);
        }
        for (a, b) in self.data.iter().zip(&other.data) {
            if *a != b.checked_mul(scale).ok_or(FixedError)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lift_and_multiply_match_cyclotomic_arithmetic() {
        let basis = FixedBasis::new(12).unwrap();
        let a = Cyclotomic::root_of_unity(12, 5);
        let b = &Cyclotomic::root_of_unity(3, 1) + &Cyclotomic::from_integer(2);
        let va = basis.lift_scaled(&a, &BigInt::from(1)).unwrap();
        let vb = basis.lift_scaled(&b, &BigInt::from(1)).unwrap();
        let prod = basis.mul(&va, &vb).unwrap();
        let back = basis.to_cyclotomic(&prod, &BigInt::from(1));
        assert_eq!(back, &a * &b);
    }

    #[test]
    fn conjugation_matches() {
        let basis = FixedBasis::new(8).unwrap();
        let a = Cyclotomic::root_of_unity(8, 3);
        let va = basis.lift_scaled(&a, &BigInt::from(4)).unwrap();
        let conj = basis.conj(&va).unwrap();
        let back = basis.to_cyclotomic(&conj, &BigInt::from(4));
        assert_eq!(back, a.conj());
    }

    #[test]
    fn non_integral_lift_is_rejected() {
        let basis = FixedBasis::new(4).unwrap();
        let half = Cyclotomic::from_rational(BigRational::new(1.into(), 2.into()));
        assert!(basis.lift_scaled(&half, &BigInt::from(1)).is_err());
        assert!(basis.lift_scaled(&half, &BigInt::from(2)).is_ok());
    }

    #[test]
    fn foreign_conductor_is_rejected() {
        let basis = FixedBasis::new(4).unwrap();
        let z3 = Cyclotomic::root_of_unity(3, 1);
        assert!(basis.lift_scaled(&z3, &BigInt::from(1)).is_err());
    }

    #[test]
    fn permutation_detection() {
        let basis = FixedBasis::new(1).unwrap();
        let mut m = CycMatrix::zero(&basis, 3, 3);
        m.set(0, 1, &[7]);
        m.set(1, 0, &[7]);
        m.set(2, 2, &[7]);
        assert_eq!(m.as_scaled_permutation(&basis, 7), Some(vec![1, 0, 2]));
        assert_eq!(m.as_scaled_permutation(&basis, 6), None);
    }
}
