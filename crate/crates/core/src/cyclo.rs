//! Exact arithmetic in cyclotomic fields `Q(zeta_N)`.
//!
//! Values are kept in canonical form: coefficients over the power basis
//! `{zeta_N^k : 0 <= k < phi(N)}` reduced modulo the N-th cyclotomic
//! polynomial, with the conductor minimised (a value lying in a subfield
//! `Q(zeta_M)` is stored at conductor `M`, rationals at conductor 1, and
//! conductors are never congruent to 2 mod 4 since `Q(zeta_2m) = Q(zeta_m)`
//! for odd `m`). Two values are equal iff their representations are equal,
//! so `==`, `Ord` and `Hash` are structural.
//!
//! Coefficients are arbitrary-precision rationals; nothing here ever touches
//! floating point except the explicit [`Cyclotomic::to_complex`] export.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Euler totient.
pub fn euler_phi(n: u64) -> u64 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

fn prime_divisors(n: u64) -> Vec<u64> {
    let mut ps = Vec::new();
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            ps.push(p);
            while m % p == 0 {
                m /= p;
            }
        }
        p += 1;
    }
    if m > 1 {
        ps.push(m);
    }
    ps
}

/// Coefficients of the N-th cyclotomic polynomial, ascending degree, monic.
/// Computed by exact division of `x^n - 1` by the lower `Phi_d`.
pub fn cyclotomic_polynomial(n: u64) -> Vec<BigInt> {
    let mut memo: HashMap<u64, Vec<BigInt>> = HashMap::new();
    memo.insert(1, vec![BigInt::from(-1), BigInt::from(1)]);
    let mut divisors: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
    divisors.sort_unstable();
    for &d in &divisors {
        if memo.contains_key(&d) {
            continue;
        }
        // x^d - 1
        let mut poly = vec![BigInt::zero(); d as usize + 1];
        poly[0] = BigInt::from(-1);
        poly[d as usize] = BigInt::one();
        for &e in divisors.iter().filter(|&&e| e < d && d % e == 0) {
            poly = poly_div_exact(&poly, &memo[&e]);
        }
        memo.insert(d, poly);
    }
    memo.remove(&n).unwrap()
}

/// Exact division of integer polynomials with monic divisor.
fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dn = num.len() - 1;
    let dd = den.len() - 1;
    assert!(den[dd].is_one(), "divisor must be monic");
    let mut rem = num.to_vec();
    let mut quo = vec![BigInt::zero(); dn - dd + 1];
    for k in (0..=dn - dd).rev() {
        let c = rem[k + dd].clone();
        if !c.is_zero() {
            for j in 0..=dd {
                rem[k + j] -= &c * &den[j];
            }
        }
        quo[k] = c;
    }
    assert!(rem.iter().all(|c| c.is_zero()), "division must be exact");
    quo
}

/// Per-conductor reduction data, cached for the lifetime of the process.
pub(crate) struct ConductorData {
    pub phi: usize,
    /// `rows[e]` are the power-basis coordinates of `zeta_n^e`, `0 <= e < n`.
    pub rows: Vec<Vec<BigInt>>,
}

impl ConductorData {
    fn build(n: u64) -> ConductorData {
        assert!(n >= 1 && n % 4 != 2, "conductor must be normalised");
        let phi = euler_phi(n) as usize;
        let cyclo = cyclotomic_polynomial(n);
        debug_assert_eq!(cyclo.len(), phi + 1);
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n as usize);
        for e in 0..n as usize {
            if e < phi {
                let mut row = vec![BigInt::zero(); phi];
                row[e] = BigInt::one();
                rows.push(row);
            } else {
                // multiply the previous row by x and reduce by the monic Phi_n
                let prev = &rows[e - 1];
                let lead = prev[phi - 1].clone();
                let mut row = vec![BigInt::zero(); phi];
                for k in 1..phi {
                    row[k] = prev[k - 1].clone();
                }
                if !lead.is_zero() {
                    for k in 0..phi {
                        row[k] -= &lead * &cyclo[k];
                    }
                }
                rows.push(row);
            }
        }
        ConductorData { phi, rows }
    }
}

/// Rebase data for testing membership in (and re-expressing values over) the
/// subfield `Q(zeta_m)` of `Q(zeta_n)`.
struct Rebase {
    m: u64,
    /// Basis matrix: column `j` holds the conductor-n coordinates of
    /// `zeta_m^j = zeta_n^{(n/m) j}`.
    basis: Vec<Vec<BigInt>>,
    /// Row indices such that the square submatrix `basis[pivot_rows]` is
    /// invertible, and its exact inverse.
    pivot_rows: Vec<usize>,
    inv: Vec<Vec<BigRational>>,
}

fn conductor_cache() -> &'static Mutex<HashMap<u64, Arc<ConductorData>>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<ConductorData>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn rebase_cache() -> &'static Mutex<HashMap<(u64, u64), Arc<Rebase>>> {
    static CACHE: OnceLock<Mutex<HashMap<(u64, u64), Arc<Rebase>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

pub(crate) fn conductor_data(n: u64) -> Arc<ConductorData> {
    let mut cache = conductor_cache().lock().unwrap();
    cache
        .entry(n)
        .or_insert_with(|| Arc::new(ConductorData::build(n)))
        .clone()
}

fn rebase_data(n: u64, m: u64) -> Arc<Rebase> {
    let mut cache = rebase_cache().lock().unwrap();
    cache
        .entry((n, m))
        .or_insert_with(|| Arc::new(build_rebase(n, m)))
        .clone()
}

fn build_rebase(n: u64, m: u64) -> Rebase {
    assert!(n % m == 0 && m < n);
    let data_n = conductor_data(n);
    let phi_m = euler_phi(m) as usize;
    let step = (n / m) as usize;
    let basis: Vec<Vec<BigInt>> = (0..phi_m)
        .map(|j| data_n.rows[(step * j) % n as usize].clone())
        .collect();

    // Gaussian elimination on a rational copy to select independent rows.
    let phi_n = data_n.phi;
    let mut work: Vec<Vec<BigRational>> = (0..phi_n)
        .map(|r| {
            (0..phi_m)
                .map(|j| BigRational::from(basis[j][r].clone()))
                .collect()
        })
        .collect();
    let mut pivot_rows = Vec::with_capacity(phi_m);
    for col in 0..phi_m {
        let pivot = (0..phi_n)
            .find(|r| !pivot_rows.contains(r) && !work[*r][col].is_zero())
            .expect("basis columns are linearly independent");
        pivot_rows.push(pivot);
        let pivot_row = work[pivot].clone();
        for r in 0..phi_n {
            if r != pivot && !work[r][col].is_zero() {
                let factor = &work[r][col] / &pivot_row[col];
                for c in col..phi_m {
                    let sub = &factor * &pivot_row[c];
                    work[r][c] -= sub;
                }
            }
        }
    }

    // Invert the square submatrix basis[pivot_rows] exactly.
    let mut aug: Vec<Vec<BigRational>> = (0..phi_m)
        .map(|i| {
            let r = pivot_rows[i];
            let mut row: Vec<BigRational> = (0..phi_m)
                .map(|j| BigRational::from(basis[j][r].clone()))
                .collect();
            row.extend((0..phi_m).map(|j| {
                if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            }));
            row
        })
        .collect();
    for col in 0..phi_m {
        let pivot = (col..phi_m)
            .find(|&r| !aug[r][col].is_zero())
            .expect("pivot submatrix is invertible");
        aug.swap(col, pivot);
        let inv_p = aug[col][col].recip();
        for c in 0..2 * phi_m {
            aug[col][c] = &aug[col][c] * &inv_p;
        }
        for r in 0..phi_m {
            if r != col && !aug[r][col].is_zero() {
                let factor = aug[r][col].clone();
                for c in 0..2 * phi_m {
                    let sub = &factor * &aug[col][c];
                    aug[r][c] -= sub;
                }
            }
        }
    }
    let inv: Vec<Vec<BigRational>> = aug.into_iter().map(|row| row[phi_m..].to_vec()).collect();

    Rebase {
        m,
        basis,
        pivot_rows,
        inv,
    }
}

/// An exact element of a cyclotomic field, always in canonical reduced form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    conductor: u64,
    coeffs: Vec<BigRational>,
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Cyclotomic {
            conductor: 1,
            coeffs: vec![BigRational::zero()],
        }
    }

    pub fn one() -> Self {
        Cyclotomic {
            conductor: 1,
            coeffs: vec![BigRational::one()],
        }
    }

    pub fn from_rational(q: BigRational) -> Self {
        Cyclotomic {
            conductor: 1,
            coeffs: vec![q],
        }
    }

    pub fn from_integer(k: i64) -> Self {
        Cyclotomic::from_rational(BigRational::from(BigInt::from(k)))
    }

    /// `zeta_n^k` in canonical form.
    pub fn root_of_unity(n: u64, k: i64) -> Self {
        assert!(n >= 1, "root order must be positive");
        let k = k.rem_euclid(n as i64) as u64;
        let g = k.gcd(&n);
        let mut m = n / g;
        let mut e = (k / g) % m.max(1);
        let mut negate = false;
        if m % 4 == 2 {
            // zeta_{2u} = -zeta_u^{(u+1)/2} for odd u
            let u = m / 2;
            negate = e % 2 == 1;
            e = (e % u) * ((u + 1) / 2) % u;
            m = u;
        }
        if m == 1 {
            return Cyclotomic::from_integer(if negate { -1 } else { 1 });
        }
        let data = conductor_data(m);
        let mut coeffs: Vec<BigRational> = data.rows[e as usize]
            .iter()
            .map(|c| BigRational::from(c.clone()))
            .collect();
        if negate {
            for c in &mut coeffs {
                *c = -c.clone();
            }
        }
        // a primitive m-th root has conductor exactly m
        Cyclotomic {
            conductor: m,
            coeffs,
        }
    }

    /// `sum_k counts[k] * zeta_order^k`, reduced and canonicalised in one pass.
    pub fn from_unity_combination(order: u64, counts: &[BigInt]) -> Self {
        assert!(order >= 1);
        let (m, map): (u64, Box<dyn Fn(u64) -> (u64, bool)>) = if order % 4 == 2 {
            let u = order / 2;
            (u, {
                Box::new(move |e: u64| {
                    let negate = e % 2 == 1;
                    ((e % u) * ((u + 1) / 2) % u, negate)
                })
            })
        } else {
            (order, Box::new(move |e: u64| (e % order, false)))
        };
        let data = conductor_data(m);
        let mut coeffs = vec![BigRational::zero(); data.phi];
        for (k, c) in counts.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (e, negate) = map(k as u64 % order);
            let row = &data.rows[e as usize];
            for (dst, r) in coeffs.iter_mut().zip(row) {
                if negate {
                    *dst -= BigRational::from(c * r);
                } else {
                    *dst += BigRational::from(c * r);
                }
            }
        }
        Cyclotomic::from_dense(m, coeffs)
    }

    /// Builds from reduced coordinates at a normalised conductor, then
    /// minimises the conductor.
    pub(crate) fn from_dense(n: u64, coeffs: Vec<BigRational>) -> Self {
        debug_assert!(n % 4 != 2);
        debug_assert_eq!(coeffs.len(), euler_phi(n) as usize);
        let mut value = Cyclotomic {
            conductor: n,
            coeffs,
        };
        value.minimize();
        value
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Reduced power-basis coefficients, length `phi(conductor)`.
    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    fn minimize(&mut self) {
        loop {
            let n = self.conductor;
            if n == 1 {
                return;
            }
            if self.coeffs[1..].iter().all(|c| c.is_zero()) {
                self.coeffs.truncate(1);
                self.conductor = 1;
                return;
            }
            let mut descended = false;
            for p in prime_divisors(n) {
                let mut m = n / p;
                if m % 4 == 2 {
                    m /= 2;
                }
                if m == n {
                    continue;
                }
                if let Some(coeffs) = self.try_rebase(m) {
                    self.conductor = m;
                    self.coeffs = coeffs;
                    descended = true;
                    break;
                }
            }
            if !descended {
                return;
            }
        }
    }

    /// Attempts to re-express the value at conductor `m` (a divisor of the
    /// current conductor). Returns the new coordinates on success.
    fn try_rebase(&self, m: u64) -> Option<Vec<BigRational>> {
        let rebase = rebase_data(self.conductor, m);
        debug_assert_eq!(rebase.m, m);
        let phi_m = rebase.inv.len();
        let rhs: Vec<&BigRational> = rebase.pivot_rows.iter().map(|&r| &self.coeffs[r]).collect();
        let mut b = vec![BigRational::zero(); phi_m];
        for (i, bi) in b.iter_mut().enumerate() {
            for (j, r) in rhs.iter().enumerate() {
                if !rebase.inv[i][j].is_zero() && !r.is_zero() {
                    *bi += &rebase.inv[i][j] * *r;
                }
            }
        }
        // verify the candidate reproduces every coordinate
        for r in 0..self.coeffs.len() {
            let mut acc = BigRational::zero();
            for (j, bj) in b.iter().enumerate() {
                if !bj.is_zero() {
                    let cell = &rebase.basis[j][r];
                    if !cell.is_zero() {
                        acc += bj * BigRational::from(cell.clone());
                    }
                }
            }
            if acc != self.coeffs[r] {
                return None;
            }
        }
        Some(b)
    }

    /// Coordinates of the value at a larger conductor `n` (the current
    /// conductor must divide `n`, with `n` normalised).
    pub(crate) fn dense_at(&self, n: u64) -> Option<Vec<BigRational>> {
        if n % 4 == 2 || n % self.conductor != 0 {
            return None;
        }
        let data = conductor_data(n);
        if n == self.conductor {
            return Some(self.coeffs.clone());
        }
        let step = (n / self.conductor) as usize;
        let mut out = vec![BigRational::zero(); data.phi];
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let row = &data.rows[(step * e) % n as usize];
            for (dst, r) in out.iter_mut().zip(row) {
                if !r.is_zero() {
                    *dst += c * BigRational::from(r.clone());
                }
            }
        }
        Some(out)
    }

    fn binop(&self, other: &Cyclotomic, mul: bool) -> Cyclotomic {
        let n = num_integer::lcm(self.conductor, other.conductor);
        debug_assert!(n % 4 != 2);
        let a = self.dense_at(n).unwrap();
        let b = other.dense_at(n).unwrap();
        if !mul {
            let coeffs = a.iter().zip(&b).map(|(x, y)| x + y).collect();
            return Cyclotomic::from_dense(n, coeffs);
        }
        let data = conductor_data(n);
        let phi = data.phi;
        // dense convolution followed by one reduction pass
        let mut conv = vec![BigRational::zero(); 2 * phi - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    conv[i + j] += x * y;
                }
            }
        }
        let mut coeffs: Vec<BigRational> = conv[..phi].to_vec();
        for (e, c) in conv.iter().enumerate().skip(phi) {
            if c.is_zero() {
                continue;
            }
            let row = &data.rows[e % n as usize];
            for (dst, r) in coeffs.iter_mut().zip(row) {
                if !r.is_zero() {
                    *dst += c * BigRational::from(r.clone());
                }
            }
        }
        Cyclotomic::from_dense(n, coeffs)
    }

    pub fn scalar_mul(&self, q: &BigRational) -> Cyclotomic {
        if q.is_zero() {
            return Cyclotomic::zero();
        }
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    /// Complex conjugation, `zeta_N -> zeta_N^{-1}`.
    pub fn conj(&self) -> Cyclotomic {
        let n = self.conductor;
        if n == 1 {
            return self.clone();
        }
        self.galois(n - 1)
    }

    /// Galois automorphism `zeta_N -> zeta_N^k` for `gcd(k, N) = 1`.
    pub fn galois(&self, k: u64) -> Cyclotomic {
        let n = self.conductor;
        let k = k % n.max(1);
        assert!(k.gcd(&n) == 1, "galois exponent must be a unit mod N");
        if n == 1 || k == 1 {
            return self.clone();
        }
        let data = conductor_data(n);
        let mut out = vec![BigRational::zero(); data.phi];
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let row = &data.rows[((e as u64 * k) % n) as usize];
            for (dst, r) in out.iter_mut().zip(row) {
                if !r.is_zero() {
                    *dst += c * BigRational::from(r.clone());
                }
            }
        }
        // automorphisms preserve the (minimal) conductor
        Cyclotomic {
            conductor: n,
            coeffs: out,
        }
    }

    /// Multiplicative inverse, `None` for zero. Computed from the product of
    /// all nontrivial Galois conjugates, with the field norm as denominator.
    pub fn inverse(&self) -> Option<Cyclotomic> {
        if self.is_zero() {
            return None;
        }
        let n = self.conductor;
        if n == 1 {
            return Some(Cyclotomic::from_rational(self.coeffs[0].recip()));
        }
        let mut prod = Cyclotomic::one();
        for k in 2..n {
            if k.gcd(&n) == 1 {
                prod = &prod * &self.galois(k);
            }
        }
        let norm = self * &prod;
        let norm = norm.as_rational().expect("field norm is rational");
        Some(prod.scalar_mul(&norm.recip()))
    }

    pub fn pow(&self, mut k: u64) -> Cyclotomic {
        let mut base = self.clone();
        let mut acc = Cyclotomic::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.conductor == 1 && self.coeffs[0].is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.conductor == 1 && self.coeffs[0].is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.conductor == 1
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        if self.conductor == 1 {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// The value as a nonnegative integer, if it is exactly one.
    pub fn as_nonneg_integer(&self) -> Option<BigInt> {
        let q = self.as_rational()?;
        if q.is_integer() && !q.is_negative() {
            Some(q.to_integer())
        } else {
            None
        }
    }

    /// Floating approximation `(re, im)`. `precision` is the requested number
    /// of significant digits (at least 6; capped by f64 at ~15). Never used by
    /// the exact core.
    pub fn to_complex(&self, precision: u32) -> (f64, f64) {
        assert!(precision >= 6, "precision below 6 digits is not supported");
        let n = self.conductor as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let x = c.numer().to_f64().unwrap_or(f64::NAN)
                / c.denom().to_f64().unwrap_or(f64::NAN);
            let theta = 2.0 * std::f64::consts::PI * (e as f64) / n;
            re += x * theta.cos();
            im += x * theta.sin();
        }
        (re, im)
    }

    /// Structural comparison: conductor first, then coefficient tuples with
    /// nonnegative rationals ordered before negative ones. This is the fixed
    /// ordering used everywhere a deterministic sort of values is needed; it
    /// is not a numeric comparison of complex numbers.
    pub fn cmp_structural(&self, other: &Cyclotomic) -> Ordering {
        self.conductor
            .cmp(&other.conductor)
            .then_with(|| cmp_coeff_lists(&self.coeffs, &other.coeffs))
    }
}

fn rational_sort_key_cmp(a: &BigRational, b: &BigRational) -> Ordering {
    match (a.is_negative(), b.is_negative()) {
        (false, true) => Ordering::Less,
        (true, false) => Ordering::Greater,
        (false, false) => a.cmp(b),
        (true, true) => b.cmp(a),
    }
}

fn cmp_coeff_lists(a: &[BigRational], b: &[BigRational]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        let ord = rational_sort_key_cmp(x, y);
        if ord != Ordering::Equal {
            return ord;
        }
    }
    a.len().cmp(&b.len())
}

impl Ord for Cyclotomic {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_structural(other)
    }
}

impl PartialOrd for Cyclotomic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl std::ops::Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.binop(rhs, false)
    }
}

impl std::ops::Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self + &(-rhs)
    }
}

impl std::ops::Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.binop(rhs, true)
    }
}

impl std::ops::Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if e == 0 {
                write!(f, "{}", mag)?;
            } else {
                if !mag.is_one() {
                    write!(f, "{}*", mag)?;
                }
                write!(f, "z{}", self.conductor)?;
                if e > 1 {
                    write!(f, "^{}", e)?;
                }
            }
        }
        Ok(())
    }
}

// Serialized form: {"conductor": N, "coeffs": [[k, "p/q"], ...]} with zero
// coefficients omitted and exponents ascending.
#[derive(Serialize, Deserialize)]
struct CycRepr {
    conductor: u64,
    coeffs: Vec<(usize, String)>,
}

impl Serialize for Cyclotomic {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let repr = CycRepr {
            conductor: self.conductor,
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (k, c.to_string()))
                .collect(),
        };
        repr.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Cyclotomic {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = CycRepr::deserialize(deserializer)?;
        if repr.conductor == 0 || repr.conductor % 4 == 2 {
            return Err(D::Error::custom(format!(
                "invalid conductor {}",
                repr.conductor
            )));
        }
        let phi = euler_phi(repr.conductor) as usize;
        let mut coeffs = vec![BigRational::zero(); phi];
        for (k, text) in &repr.coeffs {
            if *k >= phi {
                return Err(D::Error::custom(format!(
                    "exponent {} out of range for conductor {}",
                    k, repr.conductor
                )));
            }
            let q: BigRational = text
                .parse()
                .map_err(|e| D::Error::custom(format!("bad rational `{text}`: {e}")))?;
            coeffs[*k] = q;
        }
        Ok(Cyclotomic::from_dense(repr.conductor, coeffs))
    }
}
