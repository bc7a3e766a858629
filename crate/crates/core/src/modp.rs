//! Small dense linear algebra over a prime field `F_p`, used by the
//! class-algebra character table computation. Everything is deterministic:
//! pivots are chosen by first index and eigenvalues are processed in
//! ascending order.

#[derive(Clone, Copy, Debug)]
pub struct Fp {
    pub p: u64,
}

impl Fp {
    pub fn new(p: u64) -> Self {
        Fp { p }
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.p;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    #[inline]
    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(a % self.p != 0);
        self.pow(a, self.p - 2)
    }

    /// Smallest generator of the multiplicative group.
    pub fn primitive_root(&self) -> u64 {
        let factors = prime_factors(self.p - 1);
        'outer: for g in 2..self.p {
            for &q in &factors {
                if self.pow(g, (self.p - 1) / q) == 1 {
                    continue 'outer;
                }
            }
            return g;
        }
        unreachable!("every prime field has a primitive root")
    }
}

pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut fs = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            fs.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        fs.push(n);
    }
    fs
}

/// Dense row-major matrix over `F_p`.
#[derive(Clone)]
pub struct MatP {
    pub n: usize,
    pub data: Vec<u64>,
}

impl MatP {
    pub fn new(n: usize) -> Self {
        MatP {
            n,
            data: vec![0; n * n],
        }
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.n + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.data[r * self.n + c] = v;
    }

    pub fn mul_vec(&self, f: Fp, v: &[u64]) -> Vec<u64> {
        (0..self.n)
            .map(|r| {
                let mut acc: u128 = 0;
                for c in 0..self.n {
                    acc += self.get(r, c) as u128 * v[c] as u128;
                    if acc >= u128::MAX / 2 {
                        acc %= f.p as u128;
                    }
                }
                (acc % f.p as u128) as u64
            })
            .collect()
    }
}

/// Characteristic polynomial (monic, ascending coefficients) via Hessenberg
/// reduction. `mat` is consumed as scratch.
pub fn char_poly(f: Fp, mut mat: MatP) -> Vec<u64> {
    let n = mat.n;
    if n == 0 {
        return vec![1];
    }
    // similarity reduction to upper Hessenberg form
    for j in 0..n.saturating_sub(2) {
        let pivot = ((j + 1)..n).find(|&r| mat.get(r, j) != 0);
        let pivot = match pivot {
            Some(p) => p,
            None => continue,
        };
        if pivot != j + 1 {
            for c in 0..n {
                let a = mat.get(pivot, c);
                let b = mat.get(j + 1, c);
                mat.set(pivot, c, b);
                mat.set(j + 1, c, a);
            }
            for r in 0..n {
                let a = mat.get(r, pivot);
                let b = mat.get(r, j + 1);
                mat.set(r, pivot, b);
                mat.set(r, j + 1, a);
            }
        }
        let inv_pivot = f.inv(mat.get(j + 1, j));
        for r in (j + 2)..n {
            let factor = f.mul(mat.get(r, j), inv_pivot);
            if factor == 0 {
                continue;
            }
            for c in 0..n {
                let v = f.sub(mat.get(r, c), f.mul(factor, mat.get(j + 1, c)));
                mat.set(r, c, v);
            }
            for r2 in 0..n {
                let v = f.add(mat.get(r2, j + 1), f.mul(factor, mat.get(r2, r)));
                mat.set(r2, j + 1, v);
            }
        }
    }

    // char polys of the leading principal Hessenberg minors
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for k in 1..=n {
        // (x - h_{k-1,k-1}) * p_{k-1}
        let prev = &polys[k - 1];
        let mut poly = vec![0u64; k + 1];
        let diag = mat.get(k - 1, k - 1);
        for (d, &c) in prev.iter().enumerate() {
            poly[d + 1] = f.add(poly[d + 1], c);
            poly[d] = f.sub(poly[d], f.mul(diag, c));
        }
        // - sum_i h_{k-1-i, k-1} (prod subdiagonal) p_{k-1-i}
        let mut subdiag_prod = 1u64;
        for i in 1..k {
            subdiag_prod = f.mul(subdiag_prod, mat.get(k - i, k - i - 1));
            if subdiag_prod == 0 {
                break;
            }
            let coeff = f.mul(mat.get(k - 1 - i, k - 1), subdiag_prod);
            if coeff == 0 {
                continue;
            }
            for (d, &c) in polys[k - 1 - i].iter().enumerate() {
                poly[d] = f.sub(poly[d], f.mul(coeff, c));
            }
        }
        polys.push(poly);
    }
    polys.pop().unwrap()
}

/// All roots of a polynomial in `F_p`, ascending, by direct scan.
pub fn poly_roots(f: Fp, poly: &[u64]) -> Vec<u64> {
    let mut roots = Vec::new();
    for x in 0..f.p {
        let mut acc = 0u64;
        for &c in poly.iter().rev() {
            acc = f.add(f.mul(acc, x), c);
        }
        if acc == 0 {
            roots.push(x);
        }
    }
    roots
}

/// Basis of the kernel of `mat`, as rows in reduced row echelon form.
pub fn kernel_basis(f: Fp, mat: &MatP) -> Vec<Vec<u64>> {
    let n = mat.n;
    let mut work = mat.data.clone();
    let mut pivot_cols = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let pivot = (row..n).find(|&r| work[r * n + col] != 0);
        let pivot = match pivot {
            Some(p) => p,
            None => continue,
        };
        for c in 0..n {
            work.swap(pivot * n + c, row * n + c);
        }
        let inv_p = f.inv(work[row * n + col]);
        for c in 0..n {
            work[row * n + c] = f.mul(work[row * n + c], inv_p);
        }
        for r in 0..n {
            if r != row && work[r * n + col] != 0 {
                let factor = work[r * n + col];
                for c in 0..n {
                    let v = f.sub(work[r * n + c], f.mul(factor, work[row * n + c]));
                    work[r * n + c] = v;
                }
            }
        }
        pivot_cols.push(col);
        row += 1;
        if row == n {
            break;
        }
    }
    let mut basis = Vec::new();
    let pivot_set: std::collections::HashSet<usize> = pivot_cols.iter().copied().collect();
    for free in (0..n).filter(|c| !pivot_set.contains(c)) {
        let mut v = vec![0u64; n];
        v[free] = 1;
        for (r, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = f.sub(0, work[r * n + free]);
        }
        basis.push(v);
    }
    basis
}

/// Reduced row echelon form of a list of row vectors; drops zero rows.
pub fn rref(f: Fp, rows: Vec<Vec<u64>>) -> Vec<Vec<u64>> {
    let mut rows = rows;
    let n = match rows.first() {
        Some(r) => r.len(),
        None => return rows,
    };
    let mut rank = 0;
    for col in 0..n {
        let pivot = (rank..rows.len()).find(|&r| rows[r][col] != 0);
        let pivot = match pivot {
            Some(p) => p,
            None => continue,
        };
        rows.swap(rank, pivot);
        let inv_p = f.inv(rows[rank][col]);
        for c in 0..n {
            rows[rank][c] = f.mul(rows[rank][c], inv_p);
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][col] != 0 {
                let factor = rows[r][col];
                for c in 0..n {
                    let v = f.sub(rows[r][c], f.mul(factor, rows[rank][c]));
                    rows[r][c] = v;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    rows
}

fn pivot_columns(rows: &[Vec<u64>]) -> Vec<usize> {
    rows.iter()
        .map(|row| row.iter().position(|&c| c != 0).expect("nonzero row"))
        .collect()
}

/// Splits the full space into the common one-dimensional eigenspaces of a
/// family of commuting, simultaneously diagonalizable matrices. Returns one
/// basis vector per dimension.
pub fn simultaneous_eigenbasis(f: Fp, mats: &[MatP], n: usize) -> Vec<Vec<u64>> {
    let identity: Vec<Vec<u64>> = (0..n)
        .map(|i| {
            let mut v = vec![0u64; n];
            v[i] = 1;
            v
        })
        .collect();
    let mut parts: Vec<Vec<Vec<u64>>> = vec![identity];
    for mat in mats {
        if parts.iter().all(|p| p.len() == 1) {
            break;
        }
        let mut next_parts = Vec::new();
        for part in parts {
            if part.len() == 1 {
                next_parts.push(part);
                continue;
            }
            // restrict the matrix to the invariant subspace spanned by `part`
            let d = part.len();
            let pivots = pivot_columns(&part);
            let mut restricted = MatP::new(d);
            for (i, v) in part.iter().enumerate() {
                let w = mat.mul_vec(f, v);
                // coords in the RREF basis are read off at the pivot columns
                for (j, &pc) in pivots.iter().enumerate() {
                    restricted.set(i, j, w[pc]);
                }
                if cfg!(debug_assertions) {
                    let mut recon = vec![0u64; n];
                    for (j, bv) in part.iter().enumerate() {
                        let c = restricted.get(i, j);
                        for k in 0..n {
                            recon[k] = f.add(recon[k], f.mul(c, bv[k]));
                        }
                    }
                    debug_assert_eq!(recon, w, "subspace must be invariant");
                }
            }
            // restricted matrix acts on coordinate ROWS: w_i = sum_j R[i][j] b_j,
            // so eigenvectors of the transpose give invariant combinations.
            let mut transposed = MatP::new(d);
            for i in 0..d {
                for j in 0..d {
                    transposed.set(j, i, restricted.get(i, j));
                }
            }
            let poly = char_poly(f, transposed.clone());
            let roots = poly_roots(f, &poly);
            let mut covered = 0;
            for &lambda in &roots {
                let mut shifted = transposed.clone();
                for i in 0..d {
                    let v = f.sub(shifted.get(i, i), lambda);
                    shifted.set(i, i, v);
                }
                let kernel = kernel_basis(f, &shifted);
                if kernel.is_empty() {
                    continue;
                }
                covered += kernel.len();
                // map coordinate vectors back to ambient vectors
                let lifted: Vec<Vec<u64>> = kernel
                    .iter()
                    .map(|coords| {
                        let mut v = vec![0u64; n];
                        for (j, bv) in part.iter().enumerate() {
                            if coords[j] != 0 {
                                for k in 0..n {
                                    v[k] = f.add(v[k], f.mul(coords[j], bv[k]));
                                }
                            }
                        }
                        v
                    })
                    .collect();
                next_parts.push(rref(f, lifted));
            }
            assert_eq!(covered, d, "matrix must split the subspace completely");
        }
        parts = next_parts;
    }
    assert!(
        parts.iter().all(|p| p.len() == 1),
        "family must separate all eigenvectors"
    );
    parts.into_iter().map(|mut p| p.pop().unwrap()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn char_poly_matches_direct_determinant() {
        let f = Fp::new(97);
        // pseudo-random but fixed matrices
        let mut seed = 12345u64;
        let mut rand = || {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (seed >> 33) % 97
        };
        for n in [1usize, 2, 3, 4, 5, 6] {
            let mut m = MatP::new(n);
            for r in 0..n {
                for c in 0..n {
                    m.set(r, c, rand());
                }
            }
            let poly = char_poly(f, m.clone());
            assert_eq!(poly.len(), n + 1);
            assert_eq!(poly[n], 1, "char poly must be monic");
            for x in [0u64, 1, 2, 17, 50, 96] {
                // evaluate p(x)
                let mut acc = 0u64;
                for &c in poly.iter().rev() {
                    acc = f.add(f.mul(acc, x), c);
                }
                // det(xI - M) by elimination
                let mut w = MatP::new(n);
                for r in 0..n {
                    for c in 0..n {
                        let v = if r == c {
                            f.sub(x, m.get(r, c))
                        } else {
                            f.sub(0, m.get(r, c))
                        };
                        w.set(r, c, v);
                    }
                }
                let det = determinant(f, w);
                assert_eq!(acc, det, "n={n} x={x}");
            }
        }
    }

    fn determinant(f: Fp, mut m: MatP) -> u64 {
        let n = m.n;
        let mut det = 1u64;
        for col in 0..n {
            let pivot = (col..n).find(|&r| m.get(r, col) != 0);
            let pivot = match pivot {
                Some(p) => p,
                None => return 0,
            };
            if pivot != col {
                for c in 0..n {
                    let a = m.get(pivot, c);
                    let b = m.get(col, c);
                    m.set(pivot, c, b);
                    m.set(col, c, a);
                }
                det = f.sub(0, det);
            }
            det = f.mul(det, m.get(col, col));
            let inv_p = f.inv(m.get(col, col));
            for r in (col + 1)..n {
                let factor = f.mul(m.get(r, col), inv_p);
                if factor != 0 {
                    for c in col..n {
                        let v = f.sub(m.get(r, c), f.mul(factor, m.get(col, c)));
                        m.set(r, c, v);
                    }
                }
            }
        }
        det
    }

    #[test]
    fn kernel_of_singular_matrix() {
        let f = Fp::new(7);
        let mut m = MatP::new(3);
        // rank 1: rows (1,2,3), (2,4,6), (3,6,2mod7)
        for (r, row) in [[1u64, 2, 3], [2, 4, 6], [0, 0, 0]].iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                m.set(r, c, v);
            }
        }
        let k = kernel_basis(f, &m);
        assert_eq!(k.len(), 2);
        for v in &k {
            let w = m.mul_vec(f, v);
            assert!(w.iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn simultaneous_eigenbasis_of_circulants() {
        // two commuting 4x4 circulant permutation matrices over F_5
        let f = Fp::new(5);
        let mut shift = MatP::new(4);
        for i in 0..4 {
            shift.set(i, (i + 1) % 4, 1);
        }
        let mut shift2 = MatP::new(4);
        for i in 0..4 {
            shift2.set(i, (i + 2) % 4, 1);
        }
        let basis = simultaneous_eigenbasis(f, &[shift.clone(), shift2], 4);
        assert_eq!(basis.len(), 4);
        for v in &basis {
            let w = shift.mul_vec(f, v);
            // w must be a scalar multiple of v
            let k = (0..4).find(|&i| v[i] != 0).unwrap();
            let lambda = f.mul(w[k], f.inv(v[k]));
            for i in 0..4 {
                assert_eq!(w[i], f.mul(lambda, v[i]));
            }
        }
    }

    #[test]
    fn primitive_root_has_full_order() {
        for p in [13u64, 97, 331] {
            let f = Fp::new(p);
            let g = f.primitive_root();
            let mut seen = std::collections::HashSet::new();
            let mut x = 1;
            for _ in 0..p - 1 {
                x = f.mul(x, g);
                seen.insert(x);
            }
            assert_eq!(seen.len(), (p - 1) as usize);
        }
    }
}
