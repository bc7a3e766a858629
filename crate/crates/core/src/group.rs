//! Finite groups as fully enumerated multiplication tables, plus the
//! structural data (conjugacy classes, centralizers, transversals) consumed by
//! the modular-data formulas.
//!
//! Groups are kept small by design: every element is materialised and products
//! are table lookups, so all downstream computations can treat multiplication
//! as O(1). The closure constructors refuse to enumerate more than a caller
//! supplied bound (default [`crate::DEFAULT_MAX_ORDER`]).

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;

use thiserror::Error;

use crate::DEFAULT_MAX_ORDER;

#[derive(Debug, Error)]
pub enum GroupError {
    #[error("closure exceeds the configured bound of {bound} elements")]
    ClosureTooLarge { bound: usize },
    #[error("generator is not a bijection on its point set")]
    NotABijection,
    #[error("matrix is singular modulo {modulus}")]
    SingularMatrix { modulus: u64 },
    #[error("modulus {0} is not a prime")]
    InvalidModulus(u64),
    #[error("element set is not a subgroup (not closed, or missing identity/inverses)")]
    NotASubgroup,
    #[error("invalid group spec: {0}")]
    ParseError(String),
}

/// A permutation of `{0, .., n-1}`, stored as the image vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Builds a permutation from its image vector, rejecting non-bijections.
    pub fn from_images(images: Vec<usize>) -> Result<Self, GroupError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &img in &images {
            if img >= n || seen[img] {
                return Err(GroupError::NotABijection);
            }
            seen[img] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation of `{0, .., n-1}` from disjoint cycles.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self, GroupError> {
        let mut images: Vec<usize> = (0..n).collect();
        for cycle in cycles {
            for &pt in cycle {
                if pt >= n {
                    return Err(GroupError::NotABijection);
                }
            }
            for w in 0..cycle.len() {
                let from = cycle[w];
                let to = cycle[(w + 1) % cycle.len()];
                if images[from] != from {
                    // point moved twice: cycles are not disjoint
                    return Err(GroupError::NotABijection);
                }
                images[from] = to;
            }
            if cycle.len() == 1 {
                images[cycle[0]] = cycle[0];
            }
        }
        // from_images re-validates bijectivity
        Permutation::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    /// Function composition: `(self * other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    /// Extends the permutation to a larger point set, fixing the new points.
    pub fn padded(&self, n: usize) -> Permutation {
        let mut images = self.images.clone();
        images.extend(images.len()..n);
        Permutation { images }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.images)
    }
}

/// A 2x2 matrix over the prime field `F_p`, stored row-major.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Mat2 {
    pub entries: [u64; 4],
    pub modulus: u64,
}

impl Mat2 {
    pub fn new(entries: [u64; 4], p: u64) -> Self {
        Mat2 {
            entries: [
                entries[0] % p,
                entries[1] % p,
                entries[2] % p,
                entries[3] % p,
            ],
            modulus: p,
        }
    }

    pub fn identity(p: u64) -> Self {
        Mat2 {
            entries: [1, 0, 0, 1],
            modulus: p,
        }
    }

    pub fn det(&self) -> u64 {
        let p = self.modulus;
        let [a, b, c, d] = self.entries;
        ((a * d) % p + p - (b * c) % p) % p
    }

    pub fn mul(&self, other: &Mat2) -> Mat2 {
        let p = self.modulus;
        let [a, b, c, d] = self.entries;
        let [e, f, g, h] = other.entries;
        Mat2 {
            entries: [
                (a * e + b * g) % p,
                (a * f + b * h) % p,
                (c * e + d * g) % p,
                (c * f + d * h) % p,
            ],
            modulus: p,
        }
    }

    pub fn label(&self) -> String {
        let [a, b, c, d] = self.entries;
        format!("[[{},{}],[{},{}]]", a, b, c, d)
    }
}

/// A finite group given by a dense multiplication table on canonical indices
/// `0 .. order-1`, with the identity at index 0.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u32>,
    inverses: Vec<u32>,
    element_orders: Vec<u32>,
    generators: Vec<usize>,
    labels: Option<Vec<String>>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup(order {})", self.order)
    }
}

impl FiniteGroup {
    /// Assembles a group from a raw multiplication table. The table must
    /// satisfy the group axioms with the identity at index 0; this is checked
    /// exhaustively (the supported orders make that cheap).
    pub fn from_table(table: Vec<u32>, generators: Vec<usize>, labels: Option<Vec<String>>) -> Self {
        let order = (table.len() as f64).sqrt() as usize;
        assert_eq!(order * order, table.len(), "table must be square");
        let g = FiniteGroup {
            order,
            inverses: compute_inverses(&table, order),
            element_orders: Vec::new(),
            table,
            generators,
            labels,
        };
        let mut g = g;
        g.element_orders = (0..order).map(|a| g.order_of(a) as u32).collect();
        debug_assert!(g.check_axioms());
        g
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }

    /// Conjugation `x a x^-1`.
    #[inline]
    pub fn conjugate(&self, a: usize, x: usize) -> usize {
        self.mul(self.mul(x, a), self.inverse(x))
    }

    pub fn element_order(&self, a: usize) -> usize {
        self.element_orders[a] as usize
    }

    fn order_of(&self, a: usize) -> usize {
        let mut x = a;
        let mut n = 1;
        while x != 0 {
            assert!(n <= self.order, "table has an element of unbounded order");
            x = self.mul(x, a);
            n += 1;
        }
        n
    }

    pub fn power(&self, a: usize, k: usize) -> usize {
        let mut acc = 0;
        for _ in 0..k {
            acc = self.mul(acc, a);
        }
        acc
    }

    /// lcm of the element orders.
    pub fn exponent(&self) -> u64 {
        let mut m: u64 = 1;
        for a in 0..self.order {
            m = num_integer::lcm(m, self.element_orders[a] as u64);
        }
        m
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label_of(&self, a: usize) -> String {
        match &self.labels {
            Some(ls) => ls[a].clone(),
            None => format!("g{}", a),
        }
    }

    /// Index of the element carrying the given label, if labels are present.
    pub fn find_label(&self, label: &str) -> Option<usize> {
        self.labels
            .as_ref()
            .and_then(|ls| ls.iter().position(|l| l == label))
    }

    fn check_axioms(&self) -> bool {
        let n = self.order;
        if n == 0 {
            return false;
        }
        for a in 0..n {
            if self.mul(0, a) != a || self.mul(a, 0) != a {
                return false;
            }
            let ai = self.inverse(a);
            if self.mul(a, ai) != 0 || self.mul(ai, a) != 0 {
                return false;
            }
        }
        // associativity: (ab)c = a(bc); exhaustive up to a size where the
        // cubic scan stays instant (closure-built tables inherit it anyway)
        if n <= 200 {
            for a in 0..n {
                for b in 0..n {
                    let ab = self.mul(a, b);
                    for c in 0..n {
                        if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

fn compute_inverses(table: &[u32], order: usize) -> Vec<u32> {
    let mut inv = vec![0u32; order];
    for a in 0..order {
        let pos = (0..order)
            .find(|&b| table[a * order + b] == 0)
            .expect("every element must have an inverse");
        inv[a] = pos as u32;
    }
    inv
}

/// Generic closure builder: enumerates the subgroup generated by `gens` in a
/// breadth-first order starting from the identity, taking generators in the
/// given order. Index 0 is the identity; indexing is deterministic.
pub fn closure<T, M, L>(
    identity: T,
    gens: &[T],
    mul: M,
    label: L,
    max_order: usize,
) -> Result<FiniteGroup, GroupError>
where
    T: Clone + Eq + Hash,
    M: Fn(&T, &T) -> T,
    L: Fn(&T) -> Option<String>,
{
    let mut elements: Vec<T> = vec![identity.clone()];
    let mut index: HashMap<T, usize> = HashMap::new();
    index.insert(identity, 0);

    let mut head = 0;
    while head < elements.len() {
        let current = elements[head].clone();
        for gen in gens {
            let next = mul(&current, gen);
            if !index.contains_key(&next) {
                if elements.len() >= max_order {
                    return Err(GroupError::ClosureTooLarge { bound: max_order });
                }
                index.insert(next.clone(), elements.len());
                elements.push(next);
            }
        }
        head += 1;
    }

    let n = elements.len();
    let mut table = vec![0u32; n * n];
    for a in 0..n {
        for b in 0..n {
            let prod = mul(&elements[a], &elements[b]);
            table[a * n + b] = *index
                .get(&prod)
                .expect("closure must be closed under multiplication")
                as u32;
        }
    }

    let labels: Option<Vec<String>> = elements.iter().map(&label).collect();
    let gen_indices: Vec<usize> = gens
        .iter()
        .map(|g| *index.get(g).expect("generators lie in the closure"))
        .collect();
    let mut g = FiniteGroup::from_table(table, gen_indices, labels);
    if g.generators.is_empty() && g.order > 1 {
        g.generators = (1..g.order).collect();
    }
    Ok(g)
}

/// Closure of a list of permutation generators (breadth-first canonical
/// indexing). Generators on fewer points are padded with fixed points.
pub fn group_from_permutations(gens: &[Permutation]) -> Result<FiniteGroup, GroupError> {
    group_from_permutations_bounded(gens, DEFAULT_MAX_ORDER)
}

pub fn group_from_permutations_bounded(
    gens: &[Permutation],
    max_order: usize,
) -> Result<FiniteGroup, GroupError> {
    let degree = gens.iter().map(|p| p.degree()).max().unwrap_or(0);
    let gens: Vec<Permutation> = gens.iter().map(|p| p.padded(degree)).collect();
    closure(
        Permutation::identity(degree),
        &gens,
        |a, b| a.compose(b),
        |_| None,
        max_order,
    )
}

/// Closure of 2x2 matrix generators over `F_p`. Labels carry the matrix
/// entries; the identity matrix sits at index 0.
pub fn group_from_matrices(p: u64, gens: &[[u64; 4]]) -> Result<FiniteGroup, GroupError> {
    group_from_matrices_bounded(p, gens, DEFAULT_MAX_ORDER)
}

pub fn group_from_matrices_bounded(
    p: u64,
    gens: &[[u64; 4]],
    max_order: usize,
) -> Result<FiniteGroup, GroupError> {
    if p < 2 || !is_prime_u64(p) {
        return Err(GroupError::InvalidModulus(p));
    }
    let gens: Vec<Mat2> = gens.iter().map(|&m| Mat2::new(m, p)).collect();
    for m in &gens {
        if m.det() == 0 {
            return Err(GroupError::SingularMatrix { modulus: p });
        }
    }
    closure(
        Mat2::identity(p),
        &gens,
        |a, b| a.mul(b),
        |m| Some(m.label()),
        max_order,
    )
}

pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// A conjugacy class together with the centralizer of its representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    /// Minimal member index, used as the class representative.
    pub representative: usize,
    /// Sorted member indices.
    pub members: Vec<usize>,
    /// Sorted element indices of the centralizer `C_a` of the representative.
    pub centralizer: Vec<usize>,
    /// Common order of the class elements.
    pub element_order: usize,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// Partition of the group into conjugacy classes, sorted by
/// (element order, class size, minimal member index). The identity class is
/// always first.
pub fn conjugacy_classes(group: &FiniteGroup) -> Vec<ConjugacyClass> {
    let n = group.order();
    let mut assigned = vec![false; n];
    let mut classes = Vec::new();
    for a in 0..n {
        if assigned[a] {
            continue;
        }
        let mut members = Vec::new();
        for x in 0..n {
            let c = group.conjugate(a, x);
            if !assigned[c] {
                assigned[c] = true;
                members.push(c);
            }
        }
        members.sort_unstable();
        let representative = members[0];
        classes.push(ConjugacyClass {
            representative,
            centralizer: centralizer(group, representative),
            element_order: group.element_order(representative),
            members,
        });
    }
    classes.sort_by_key(|c| (c.element_order, c.size(), c.representative));
    classes
}

/// Map from element index to the index of its class in `classes`.
pub fn class_index_map(group: &FiniteGroup, classes: &[ConjugacyClass]) -> Vec<usize> {
    let mut map = vec![usize::MAX; group.order()];
    for (i, class) in classes.iter().enumerate() {
        for &m in &class.members {
            map[m] = i;
        }
    }
    debug_assert!(map.iter().all(|&i| i != usize::MAX));
    map
}

/// The sorted centralizer `{g : ga = ag}` of an element.
pub fn centralizer(group: &FiniteGroup, a: usize) -> Vec<usize> {
    (0..group.order())
        .filter(|&g| group.mul(g, a) == group.mul(a, g))
        .collect()
}

/// Left-coset representatives of a subgroup.
#[derive(Clone, Debug)]
pub struct Transversal {
    pub subgroup: Vec<usize>,
    pub coset_reps: Vec<usize>,
}

/// Greedy deterministic transversal: each representative is the smallest
/// element index not yet covered by a previous coset `rep * subgroup`.
pub fn left_transversal(group: &FiniteGroup, subgroup: &[usize]) -> Result<Transversal, GroupError> {
    if !is_subgroup(group, subgroup) {
        return Err(GroupError::NotASubgroup);
    }
    let n = group.order();
    let mut covered = vec![false; n];
    let mut reps = Vec::with_capacity(n / subgroup.len());
    for rep in 0..n {
        if covered[rep] {
            continue;
        }
        reps.push(rep);
        for &h in subgroup {
            let covered_elt = group.mul(rep, h);
            debug_assert!(!covered[covered_elt], "cosets must tile the group");
            covered[covered_elt] = true;
        }
    }
    Ok(Transversal {
        subgroup: subgroup.to_vec(),
        coset_reps: reps,
    })
}

pub fn is_subgroup(group: &FiniteGroup, elements: &[usize]) -> bool {
    if elements.is_empty() || !elements.contains(&group.identity()) {
        return false;
    }
    let set: std::collections::HashSet<usize> = elements.iter().copied().collect();
    if set.len() != elements.len() {
        return false;
    }
    elements.iter().all(|&a| {
        set.contains(&group.inverse(a)) && elements.iter().all(|&b| set.contains(&group.mul(a, b)))
    })
}

/// A subgroup materialised as a group in its own right, with index maps to and
/// from the parent group. Element order is the ascending parent order, which
/// keeps the parent identity at subgroup index 0.
#[derive(Clone, Debug)]
pub struct Subgroup {
    pub group: FiniteGroup,
    pub to_parent: Vec<usize>,
    parent_to_sub: HashMap<usize, usize>,
}

impl Subgroup {
    pub fn new(parent: &FiniteGroup, elements: &[usize]) -> Result<Subgroup, GroupError> {
        if !is_subgroup(parent, elements) {
            return Err(GroupError::NotASubgroup);
        }
        let mut to_parent = elements.to_vec();
        to_parent.sort_unstable();
        let parent_to_sub: HashMap<usize, usize> =
            to_parent.iter().enumerate().map(|(s, &p)| (p, s)).collect();
        let n = to_parent.len();
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                let prod = parent.mul(to_parent[a], to_parent[b]);
                table[a * n + b] = parent_to_sub[&prod] as u32;
            }
        }
        let labels = parent
            .labels()
            .map(|ls| to_parent.iter().map(|&p| ls[p].clone()).collect());
        let generators = minimal_generators(&table, n);
        Ok(Subgroup {
            group: FiniteGroup::from_table(table, generators, labels),
            to_parent,
            parent_to_sub,
        })
    }

    /// Subgroup index of a parent element, if it belongs to the subgroup.
    pub fn from_parent(&self, parent_index: usize) -> Option<usize> {
        self.parent_to_sub.get(&parent_index).copied()
    }
}

/// Greedy generating set: repeatedly adjoin the smallest element outside the
/// closure so far.
fn minimal_generators(table: &[u32], n: usize) -> Vec<usize> {
    let mul = |a: usize, b: usize| table[a * n + b] as usize;
    let mut gens: Vec<usize> = Vec::new();
    let mut closed = vec![false; n];
    closed[0] = true;
    let mut closed_count = 1;
    while closed_count < n {
        let next = (0..n).find(|&a| !closed[a]).unwrap();
        gens.push(next);
        // re-close from scratch; n is small
        let mut elems = vec![0usize];
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut head = 0;
        while head < elems.len() {
            for &g in &gens {
                let prod = mul(elems[head], g);
                if !seen[prod] {
                    seen[prod] = true;
                    elems.push(prod);
                }
            }
            head += 1;
        }
        closed = seen;
        closed_count = elems.len();
    }
    gens
}

// ---------------------------------------------------------------------------
// Group-spec mini-language: `perm:...` and `mat:p=..:...` literals.
// ---------------------------------------------------------------------------

/// Parses a `perm:` or `mat:` group literal.
///
/// Permutations: `perm:(0,1,2)(0,1)` lists generators as cycles. Without `;`
/// each parenthesised cycle is one generator; segments separated by `;`
/// compose their cycles into a single generator, so
/// `perm:(0,1)(2,3);(0,2)(1,3)` has two double-transposition generators.
///
/// Matrices: `mat:p=3:[[1,1],[0,1]];[[0,1],[2,0]]` lists 2x2 generators over
/// `F_p` separated by `;`.
pub fn parse_group_literal(spec: &str, max_order: usize) -> Result<FiniteGroup, GroupError> {
    if let Some(body) = spec.strip_prefix("perm:") {
        let gens = parse_perm_generators(body)?;
        group_from_permutations_bounded(&gens, max_order)
    } else if let Some(body) = spec.strip_prefix("mat:") {
        let (p, mats) = parse_mat_generators(body)?;
        group_from_matrices_bounded(p, &mats, max_order)
    } else {
        Err(GroupError::ParseError(format!(
            "expected a `perm:` or `mat:` literal, got `{spec}`"
        )))
    }
}

fn parse_cycle(text: &str) -> Result<Vec<usize>, GroupError> {
    let inner = text
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| GroupError::ParseError(format!("malformed cycle `{text}`")))?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|tok| {
            tok.trim()
                .parse::<usize>()
                .map_err(|_| GroupError::ParseError(format!("bad point `{tok}`")))
        })
        .collect()
}

fn split_cycles(segment: &str) -> Result<Vec<Vec<usize>>, GroupError> {
    let mut cycles = Vec::new();
    let mut rest = segment.trim();
    while !rest.is_empty() {
        let close = rest
            .find(')')
            .ok_or_else(|| GroupError::ParseError(format!("unbalanced cycle in `{segment}`")))?;
        cycles.push(parse_cycle(&rest[..=close])?);
        rest = rest[close + 1..].trim_start();
    }
    Ok(cycles)
}

fn parse_perm_generators(body: &str) -> Result<Vec<Permutation>, GroupError> {
    let mut cycle_groups: Vec<Vec<Vec<usize>>> = Vec::new();
    if body.contains(';') {
        for segment in body.split(';') {
            let cycles = split_cycles(segment)?;
            if !cycles.is_empty() {
                cycle_groups.push(cycles);
            }
        }
    } else {
        for cycle in split_cycles(body)? {
            cycle_groups.push(vec![cycle]);
        }
    }
    let degree = cycle_groups
        .iter()
        .flatten()
        .flatten()
        .map(|&p| p + 1)
        .max()
        .unwrap_or(0);
    cycle_groups
        .iter()
        .map(|cycles| Permutation::from_cycles(degree, cycles))
        .collect()
}

fn parse_mat_generators(body: &str) -> Result<(u64, Vec<[u64; 4]>), GroupError> {
    let rest = body
        .strip_prefix("p=")
        .ok_or_else(|| GroupError::ParseError("mat spec must start with `p=`".into()))?;
    let colon = rest
        .find(':')
        .ok_or_else(|| GroupError::ParseError("mat spec must be `p=<prime>:<matrices>`".into()))?;
    let p: u64 = rest[..colon]
        .parse()
        .map_err(|_| GroupError::ParseError(format!("bad modulus `{}`", &rest[..colon])))?;
    let mut mats = Vec::new();
    for m in rest[colon + 1..].split(';') {
        let m = m.trim();
        if m.is_empty() {
            continue;
        }
        mats.push(parse_mat(m)?);
    }
    Ok((p, mats))
}

fn parse_mat(text: &str) -> Result<[u64; 4], GroupError> {
    let err = || GroupError::ParseError(format!("malformed matrix `{text}`"));
    let inner = text
        .strip_prefix("[[")
        .and_then(|t| t.strip_suffix("]]"))
        .ok_or_else(err)?;
    let rows: Vec<&str> = inner.split("],[").collect();
    if rows.len() != 2 {
        return Err(err());
    }
    let mut out = [0u64; 4];
    for (r, row) in rows.iter().enumerate() {
        let cols: Vec<&str> = row.split(',').collect();
        if cols.len() != 2 {
            return Err(err());
        }
        for (c, tok) in cols.iter().enumerate() {
            out[r * 2 + c] = tok.trim().parse().map_err(|_| err())?;
        }
    }
    Ok(out)
}
