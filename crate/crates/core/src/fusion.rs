//! Fusion coefficients via the Verlinde formula, fusion matrices, fusion
//! graphs and their component structure.
//!
//! `N_ij^k = sum_m S_im S_jm conj(S_km) / S_0m` is evaluated exactly: the
//! vacuum-row entries `S_0m` are nonzero rationals, so after clearing
//! denominators the whole sum runs on integer coordinate vectors and ends in
//! one exact division. Any non-integer or negative outcome is reported as an
//! error rather than rounded, so a corrupted `S` cannot slip through.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use thiserror::Error;

use crate::cyclo::Cyclotomic;
use crate::double::ModularData;
use crate::fixed::{CycMatrix, FixedBasis, FixedError};

#[derive(Debug, Error)]
pub enum FusionError {
    #[error("fusion coefficient N[{i}][{j}]^{k} is not an integer")]
    NonIntegerFusion { i: usize, j: usize, k: usize },
    #[error("fusion coefficient N[{i}][{j}]^{k} is negative")]
    NegativeFusion { i: usize, j: usize, k: usize },
    #[error("vacuum-row entry S[0][{m}] is not a positive rational")]
    VacuumRowNotRational { m: usize },
    #[error(transparent)]
    Fixed(#[from] FixedError),
    #[error("matrix data is ragged or inconsistent: {0}")]
    MalformedData(String),
}

/// The tensor of nonnegative-integer fusion coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionRing {
    pub rank: usize,
    tensor: Vec<u64>,
}

impl FusionRing {
    #[inline]
    pub fn coefficient(&self, i: usize, j: usize, k: usize) -> u64 {
        self.tensor[(i * self.rank + j) * self.rank + k]
    }

    /// The fusion matrix `N_i` with entries `(N_i)_j^k`.
    pub fn fusion_matrix(&self, i: usize) -> Vec<Vec<u64>> {
        (0..self.rank)
            .map(|j| (0..self.rank).map(|k| self.coefficient(i, j, k)).collect())
            .collect()
    }

    /// Vacuum unit law: `N_0j^k = delta_jk`.
    pub fn vacuum_is_unit(&self) -> bool {
        (0..self.rank).all(|j| {
            (0..self.rank).all(|k| self.coefficient(0, j, k) == u64::from(j == k))
        })
    }

    /// Commutativity `N_ij^k = N_ji^k`.
    pub fn is_commutative(&self) -> bool {
        (0..self.rank).all(|i| {
            (0..self.rank).all(|j| {
                (0..self.rank).all(|k| self.coefficient(i, j, k) == self.coefficient(j, i, k))
            })
        })
    }

    /// Conjugation column rule: `N_ij^0 = delta_{j, C(i)}` for the charge
    /// conjugation permutation `C`.
    pub fn conjugation_rule(&self, charge: &[usize]) -> bool {
        charge.len() == self.rank
            && (0..self.rank).all(|i| {
                (0..self.rank)
                    .all(|j| self.coefficient(i, j, 0) == u64::from(j == charge[i]))
            })
    }

    /// `N_{C(i)}` is the transpose of `N_i`.
    pub fn conjugate_is_transpose(&self, charge: &[usize]) -> bool {
        (0..self.rank).all(|i| {
            (0..self.rank).all(|j| {
                (0..self.rank)
                    .all(|k| self.coefficient(charge[i], j, k) == self.coefficient(i, k, j))
            })
        })
    }

    /// The quantum-dimension vector is a common eigenvector:
    /// `N_i mu = mu_i mu`, exactly.
    pub fn perron_eigenvector(&self, dims: &[u64]) -> bool {
        if dims.len() != self.rank {
            return false;
        }
        (0..self.rank).all(|i| {
            (0..self.rank).all(|j| {
                let lhs: u128 = (0..self.rank)
                    .map(|k| self.coefficient(i, j, k) as u128 * dims[k] as u128)
                    .sum();
                lhs == dims[i] as u128 * dims[j] as u128
            })
        })
    }
}

struct ScaledS {
    basis: FixedBasis,
    s_hat: CycMatrix,
    s_conj: CycMatrix,
    /// `denom * S[0][m]`, positive integers after validation.
    vacuum: Vec<i128>,
    denom: i128,
}

fn scale_s(s: &[Vec<Cyclotomic>]) -> Result<ScaledS, FusionError> {
    let rank = s.len();
    if rank == 0 || s.iter().any(|row| row.len() != rank) {
        return Err(FusionError::MalformedData("S must be square".into()));
    }
    let mut conductor: u64 = 1;
    let mut denom = BigInt::from(1);
    for row in s {
        for v in row {
            conductor = conductor.lcm(&v.conductor());
            for c in v.coefficients() {
                denom = denom.lcm(c.denom());
            }
        }
    }
    if conductor > 1_000_000 {
        return Err(FusionError::MalformedData(format!(
            "common conductor {conductor} is out of supported range"
        )));
    }
    let basis = FixedBasis::new(conductor)?;
    let s_hat = CycMatrix::lift(&basis, s, &denom)?;
    let mut s_conj = CycMatrix::zero(&basis, rank, rank);
    for i in 0..rank {
        for m in 0..rank {
            let v = basis.conj(s_hat.entry(i, m))?;
            s_conj.set(i, m, &v);
        }
    }
    let mut vacuum = Vec::with_capacity(rank);
    for m in 0..rank {
        let r = basis
            .as_scalar(s_hat.entry(0, m))
            .ok_or(FusionError::VacuumRowNotRational { m })?;
        if r <= 0 {
            return Err(FusionError::VacuumRowNotRational { m });
        }
        vacuum.push(r);
    }
    Ok(ScaledS {
        basis,
        s_hat,
        s_conj,
        vacuum,
        denom: denom.to_i128().ok_or(FixedError)?,
    })
}

/// Computes the full fusion tensor from an S matrix by the Verlinde formula,
/// entirely in exact integer arithmetic.
pub fn verlinde_from_s(s: &[Vec<Cyclotomic>]) -> Result<FusionRing, FusionError> {
    let scaled = scale_s(s)?;
    let rank = s.len();
    let basis = &scaled.basis;
    let phi = basis.phi();

    // common multiple of the scaled vacuum entries and per-column weights
    let mut l: i128 = 1;
    for &r in &scaled.vacuum {
        l = l.checked_mul(r / l.gcd(&r)).ok_or(FixedError)?;
    }
    let weights: Vec<i128> = scaled.vacuum.iter().map(|&r| l / r).collect();
    // with S = S^/D and S^_0m = D S_0m:
    // N_ij^k = sum_m S^_im S^_jm conj(S^_km) / (D^2 S^_0m)
    //        = (1/(D^2 L)) sum_m w_m S^_im S^_jm conj(S^_km)
    let divisor = scaled
        .denom
        .checked_mul(scaled.denom)
        .and_then(|d2| d2.checked_mul(l))
        .ok_or(FixedError)?;

    let mut tensor = vec![0u64; rank * rank * rank];
    let mut weighted = vec![0i128; phi];
    let mut pair = vec![vec![0i128; phi]; rank];
    let mut conv = vec![0i128; 2 * phi - 1];
    for i in 0..rank {
        for j in i..rank {
            for m in 0..rank {
                for (dst, &src) in weighted.iter_mut().zip(scaled.s_hat.entry(i, m)) {
                    *dst = src.checked_mul(weights[m]).ok_or(FixedError)?;
                }
                pair[m] = basis.mul(&weighted, scaled.s_hat.entry(j, m))?;
            }
            for k in 0..rank {
                conv.fill(0);
                for (m, pm) in pair.iter().enumerate() {
                    basis.mul_acc(pm, scaled.s_conj.entry(k, m), &mut conv)?;
                }
                let reduced = basis.reduce(&conv)?;
                let scalar = basis
                    .as_scalar(&reduced)
                    .ok_or(FusionError::NonIntegerFusion { i, j, k })?;
                if scalar % divisor != 0 {
                    return Err(FusionError::NonIntegerFusion { i, j, k });
                }
                let n = scalar / divisor;
                if n < 0 {
                    return Err(FusionError::NegativeFusion { i, j, k });
                }
                let n = u64::try_from(n).map_err(|_| FixedError)?;
                tensor[(i * rank + j) * rank + k] = n;
                tensor[(j * rank + i) * rank + k] = n;
            }
        }
    }
    Ok(FusionRing { rank, tensor })
}

pub fn verlinde(md: &ModularData) -> Result<FusionRing, FusionError> {
    verlinde_from_s(&md.s)
}

/// Exact associativity through the eigenvalue relation
/// `S^_im S^_jm = S^_0m sum_k N_ij^k S^_km` for every column `m`; together
/// with unitarity of `S` this is equivalent to
/// `sum_m N_ij^m N_mk^l = sum_m N_jk^m N_im^l`.
pub fn check_associativity(ring: &FusionRing, s: &[Vec<Cyclotomic>]) -> Result<bool, FusionError> {
    let scaled = scale_s(s)?;
    let rank = ring.rank;
    if rank != s.len() {
        return Err(FusionError::MalformedData(
            "fusion ring and S matrix rank differ".into(),
        ));
    }
    let basis = &scaled.basis;
    let phi = basis.phi();
    let mut lhs_conv = vec![0i128; 2 * phi - 1];
    let mut rhs = vec![0i128; phi];
    for i in 0..rank {
        for j in i..rank {
            for m in 0..rank {
                lhs_conv.fill(0);
                basis.mul_acc(scaled.s_hat.entry(i, m), scaled.s_hat.entry(j, m), &mut lhs_conv)?;
                let lhs = basis.reduce(&lhs_conv)?;
                rhs.fill(0);
                for k in 0..rank {
                    let n = ring.coefficient(i, j, k) as i128;
                    if n == 0 {
                        continue;
                    }
                    for (dst, &src) in rhs.iter_mut().zip(scaled.s_hat.entry(k, m)) {
                        *dst = dst
                            .checked_add(src.checked_mul(n).ok_or(FixedError)?)
                            .ok_or(FixedError)?;
                    }
                }
                for x in rhs.iter_mut() {
                    *x = x.checked_mul(scaled.vacuum[m]).ok_or(FixedError)?;
                }
                // S_im S_jm = S_0m sum_k N S_km scales to
                // S^ S^ = (S^_0m / D) sum N S^ * D = S^_0m sum N S^
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// A fusion graph: the directed adjacency is the fusion matrix of the base
/// irrep; components are computed on the underlying undirected graph.
#[derive(Clone, Debug)]
pub struct FusionGraph {
    pub base_irrep: usize,
    pub adjacency: Vec<Vec<u64>>,
    pub components: Vec<Vec<usize>>,
}

pub fn fusion_graph(ring: &FusionRing, i: usize) -> FusionGraph {
    let adjacency = ring.fusion_matrix(i);
    let components = connected_components(&adjacency);
    FusionGraph {
        base_irrep: i,
        adjacency,
        components,
    }
}

/// Partition of the vertices into undirected connected components, each
/// sorted, ordered by smallest vertex.
pub fn connected_components(adjacency: &[Vec<u64>]) -> Vec<Vec<usize>> {
    let n = adjacency.len();
    let mut seen = vec![false; n];
    let mut components = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut stack = vec![start];
        let mut comp = Vec::new();
        seen[start] = true;
        while let Some(v) = stack.pop() {
            comp.push(v);
            for w in 0..n {
                if !seen[w] && (adjacency[v][w] != 0 || adjacency[w][v] != 0) {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        components.push(comp);
    }
    components
}

impl FusionGraph {
    /// Undirected adjacency of one component (entrywise max of the two
    /// directions), indexed by position in the component's vertex list.
    pub fn component_adjacency(&self, component: &[usize]) -> Vec<Vec<u64>> {
        component
            .iter()
            .map(|&v| {
                component
                    .iter()
                    .map(|&w| self.adjacency[v][w].max(self.adjacency[w][v]))
                    .collect()
            })
            .collect()
    }
}

/// Named small graphs used as exact isomorphism templates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphTemplate {
    /// The affine E6 Dynkin diagram: a central node with three legs of
    /// length two (7 vertices).
    AffineE6,
    /// The n-cycle; `Cycle(6)` is a hexagon, `Cycle(4)` a square.
    Cycle(usize),
    /// The path on n vertices.
    Path(usize),
}

impl GraphTemplate {
    pub fn adjacency(&self) -> Vec<Vec<u64>> {
        match *self {
            GraphTemplate::AffineE6 => {
                let mut adj = vec![vec![0u64; 7]; 7];
                for (a, b) in [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)] {
                    adj[a][b] = 1;
                    adj[b][a] = 1;
                }
                adj
            }
            GraphTemplate::Cycle(n) => {
                let mut adj = vec![vec![0u64; n]; n];
                for v in 0..n {
                    let w = (v + 1) % n;
                    adj[v][w] = 1;
                    adj[w][v] = 1;
                }
                adj
            }
            GraphTemplate::Path(n) => {
                let mut adj = vec![vec![0u64; n]; n];
                for v in 0..n.saturating_sub(1) {
                    adj[v][v + 1] = 1;
                    adj[v + 1][v] = 1;
                }
                adj
            }
        }
    }
}

/// Exact graph isomorphism of a small undirected adjacency matrix against a
/// named template, by backtracking over degree-compatible assignments.
pub fn graph_isomorphic_to(adjacency: &[Vec<u64>], template: GraphTemplate) -> bool {
    let t = template.adjacency();
    let n = t.len();
    if adjacency.len() != n {
        return false;
    }
    let degree = |adj: &[Vec<u64>], v: usize| -> u64 { adj[v].iter().sum() };
    let mut t_degrees: Vec<u64> = (0..n).map(|v| degree(&t, v)).collect();
    let mut g_degrees: Vec<u64> = (0..n).map(|v| degree(adjacency, v)).collect();
    t_degrees.sort_unstable();
    g_degrees.sort_unstable();
    if t_degrees != g_degrees {
        return false;
    }

    fn backtrack(
        t: &[Vec<u64>],
        g: &[Vec<u64>],
        map: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
        v: usize,
    ) -> bool {
        let n = t.len();
        if v == n {
            return true;
        }
        for cand in 0..n {
            if used[cand] {
                continue;
            }
            if t[v][v] != g[cand][cand] {
                continue;
            }
            let consistent = (0..v).all(|u| {
                let img = map[u].unwrap();
                t[v][u] == g[cand][img] && t[u][v] == g[img][cand]
            });
            if !consistent {
                continue;
            }
            map[v] = Some(cand);
            used[cand] = true;
            if backtrack(t, g, map, used, v + 1) {
                return true;
            }
            map[v] = None;
            used[cand] = false;
        }
        false
    }

    let mut map = vec![None; n];
    let mut used = vec![false; n];
    backtrack(&t, adjacency, &mut map, &mut used, 0)
}
