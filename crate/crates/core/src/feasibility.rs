//! Set-level degree predicates.
//!
//! Everything here reduces to one primitive, [`f_core`]: the unique maximal
//! subset of `X` in which every vertex `u` has at least `f(u)` neighbours,
//! obtained by repeatedly deleting violators. Good, meager, degenerate and
//! nice sets are all statements about such cores.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::partition::Partition;

/// Largest accepted demand value.
pub const DEMAND_BOUND: u64 = 1 << 40;

/// Per-vertex demands `a(u)`, `b(u)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct DemandPair {
    a: Vec<u64>,
    b: Vec<u64>,
}

impl DemandPair {
    pub fn new(a: Vec<u64>, b: Vec<u64>) -> Result<Self> {
        if a.len() != b.len() {
            return Err(Error::DemandLength {
                expected: a.len(),
                got: b.len(),
            });
        }
        if let Some(&big) = a.iter().chain(&b).find(|&&v| v > DEMAND_BOUND) {
            return Err(Error::DemandTooLarge(big));
        }
        Ok(DemandPair { a, b })
    }

    pub fn uniform(n: usize, a: u64, b: u64) -> Self {
        DemandPair {
            a: vec![a; n],
            b: vec![b; n],
        }
    }

    #[inline]
    pub fn a(&self, u: usize) -> u64 {
        self.a[u]
    }

    #[inline]
    pub fn b(&self, u: usize) -> u64 {
        self.b[u]
    }

    pub fn a_values(&self) -> &[u64] {
        &self.a
    }

    pub fn b_values(&self) -> &[u64] {
        &self.b
    }

    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    pub fn check_len(&self, n: usize) -> Result<()> {
        if self.len() == n {
            Ok(())
        } else {
            Err(Error::DemandLength {
                expected: n,
                got: self.len(),
            })
        }
    }

    /// `a ≡ b` pointwise.
    pub fn is_symmetric(&self) -> bool {
        self.a == self.b
    }

    /// `Σ (a(u) + b(u))`.
    pub fn total(&self) -> u64 {
        self.a.iter().chain(&self.b).sum()
    }

    pub fn a_threshold(&self) -> Threshold {
        Threshold(self.a.clone())
    }

    pub fn b_threshold(&self) -> Threshold {
        Threshold(self.b.clone())
    }
}

/// `h(u) ∈ {0, 1}`, fixed by a classification before any search starts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct HVector(Vec<bool>);

impl HVector {
    pub fn zeros(n: usize) -> Self {
        HVector(vec![false; n])
    }

    pub fn ones(n: usize) -> Self {
        HVector(vec![true; n])
    }

    pub fn from_set(t1: &VertexSet) -> Self {
        HVector((0..t1.universe()).map(|u| t1.contains(u)).collect())
    }

    #[inline]
    pub fn get(&self, u: usize) -> u64 {
        u64::from(self.0[u])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn support(&self) -> VertexSet {
        let mut s = VertexSet::empty(self.0.len());
        for (u, _) in self.0.iter().enumerate().filter(|(_, &on)| on) {
            s.insert(u);
        }
        s
    }
}

/// Generic per-vertex degree demand `f`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Threshold(pub Vec<u64>);

impl Threshold {
    pub fn uniform(n: usize, f: u64) -> Self {
        Threshold(vec![f; n])
    }

    #[inline]
    pub fn get(&self, u: usize) -> u64 {
        self.0[u]
    }

    pub fn plus_one(&self) -> Self {
        Threshold(self.0.iter().map(|&f| f + 1).collect())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Side {
    One,
    Two,
}

impl Side {
    pub fn index(self) -> u8 {
        match self {
            Side::One => 1,
            Side::Two => 2,
        }
    }

    pub fn other(self) -> Side {
        match self {
            Side::One => Side::Two,
            Side::Two => Side::One,
        }
    }
}

/// Degree a vertex needs inside its side to avoid being bad there:
/// `a(u) + 1` on side 1, `b(u) + h(u)` on side 2.
pub fn side_threshold(d: &DemandPair, h: &HVector, side: Side) -> Threshold {
    Threshold(match side {
        Side::One => d.a.iter().map(|&a| a + 1).collect(),
        Side::Two => d.b.iter().enumerate().map(|(u, &b)| b + h.get(u)).collect(),
    })
}

/// `B1(X) = {u : d_X(u) <= a(u)}` or `B2(X) = {u : d_X(u) <= b(u) + h(u) - 1}`.
///
/// When `b(u) = h(u) = 0` the side-2 condition reads `d_X(u) <= -1` and never
/// holds.
pub fn bad_vertices(g: &Graph, x: &VertexSet, side: Side, d: &DemandPair, h: &HVector) -> VertexSet {
    let mut bad = VertexSet::empty(g.n());
    for u in x {
        let deg = g.deg_in(u, x) as u64;
        let is_bad = match side {
            Side::One => deg <= d.a(u),
            Side::Two => deg < d.b(u) + h.get(u),
        };
        if is_bad {
            bad.insert(u);
        }
    }
    bad
}

/// Largest `Y ⊆ X` with `d_Y(u) >= f(u)` for all `u ∈ Y`.
///
/// Violators are deleted smallest id first; the result does not depend on the
/// order.
pub fn f_core(g: &Graph, x: &VertexSet, f: &Threshold) -> VertexSet {
    let mut alive = x.clone();
    let mut deg = vec![0u64; g.n()];
    let mut queued = vec![false; g.n()];
    let mut heap = BinaryHeap::new();
    for u in x {
        deg[u] = g.deg_in(u, x) as u64;
        if deg[u] < f.get(u) {
            queued[u] = true;
            heap.push(Reverse(u));
        }
    }
    while let Some(Reverse(u)) = heap.pop() {
        alive.remove(u);
        for &v in g.neighbors(u) {
            if alive.contains(v) {
                deg[v] -= 1;
                if !queued[v] && deg[v] < f.get(v) {
                    queued[v] = true;
                    heap.push(Reverse(v));
                }
            }
        }
    }
    alive
}

fn nonempty(x: &VertexSet) -> Result<()> {
    if x.is_empty() {
        Err(Error::EmptySet)
    } else {
        Ok(())
    }
}

/// `X` is i-good: `B_i(X) = ∅`.
pub fn is_good(g: &Graph, x: &VertexSet, side: Side, d: &DemandPair, h: &HVector) -> Result<bool> {
    nonempty(x)?;
    Ok(bad_vertices(g, x, side, d, h).is_empty())
}

/// `X` is i-meager: every nonempty subset has a bad vertex, i.e. the side
/// threshold core of `X` is empty.
pub fn is_meager(g: &Graph, x: &VertexSet, side: Side, d: &DemandPair, h: &HVector) -> Result<bool> {
    nonempty(x)?;
    Ok(f_core(g, x, &side_threshold(d, h, side)).is_empty())
}

/// `d_X(u) >= f(u)` for every `u ∈ X` (f-feasible, or a-nice for `f = a`).
pub fn is_nice(g: &Graph, x: &VertexSet, f: &Threshold) -> Result<bool> {
    nonempty(x)?;
    Ok(satisfies(g, x, f))
}

#[inline]
fn satisfies(g: &Graph, x: &VertexSet, f: &Threshold) -> bool {
    x.iter().all(|u| g.deg_in(u, x) as u64 >= f.get(u))
}

/// Every nonempty `X' ⊆ X` has some `x` with `d_{X'}(x) <= f(x)`.
pub fn is_degenerate_set(g: &Graph, x: &VertexSet, f: &Threshold) -> Result<bool> {
    nonempty(x)?;
    Ok(f_core(g, x, &f.plus_one()).is_empty())
}

/// Nonempty disjoint `A`, `B` with `A` a-feasible and `B` b-feasible.
pub fn is_feasible_pair(g: &Graph, a_set: &VertexSet, b_set: &VertexSet, d: &DemandPair) -> bool {
    !a_set.is_empty()
        && !b_set.is_empty()
        && a_set.is_disjoint(b_set)
        && a_set.iter().all(|u| g.deg_in(u, a_set) as u64 >= d.a(u))
        && b_set.iter().all(|u| g.deg_in(u, b_set) as u64 >= d.b(u))
}

pub fn is_feasible_partition(g: &Graph, p: &Partition, d: &DemandPair) -> Result<bool> {
    if p.n() != g.n() {
        return Err(Error::NotAPartition(format!(
            "partition covers {} vertices, graph has {}",
            p.n(),
            g.n()
        )));
    }
    Ok(is_feasible_pair(g, p.x1(), p.x2(), d))
}

/// Grows a feasible pair `(A, B)` into a feasible partition `(A*, V \ A*)`
/// with `A ⊆ A*` and `B ∩ A* = ∅`.
///
/// Requires `d_G(u) >= a(u) + b(u)` everywhere. Outside vertices with
/// `d_A(v) >= a(v)` join `A` (smallest id first) until none is left; each
/// remaining outsider then has `d_{V \ A}(v) >= b(v) + 1`.
pub fn extend_pair_to_partition(g: &Graph, d: &DemandPair, a_set: &VertexSet, b_set: &VertexSet) -> Result<Partition> {
    d.check_len(g.n())?;
    if let Some(u) = (0..g.n()).find(|&u| (g.degree(u) as u64) < d.a(u) + d.b(u)) {
        return Err(Error::PreconditionViolated(format!(
            "vertex {u} has degree {} < a + b = {}",
            g.degree(u),
            d.a(u) + d.b(u)
        )));
    }
    if !is_feasible_pair(g, a_set, b_set, d) {
        return Err(Error::PreconditionViolated(
            "input is not an (a,b)-feasible pair".into(),
        ));
    }

    let mut grown = a_set.clone();
    let mut outside = a_set.union(b_set).complement();
    loop {
        let next = outside.iter().find(|&v| g.deg_in(v, &grown) as u64 >= d.a(v));
        match next {
            Some(v) => {
                grown.insert(v);
                outside.remove(v);
            }
            None => break,
        }
    }

    let partition = Partition::from_first(grown);
    if !is_feasible_partition(g, &partition, d)? {
        return Err(Error::InternalInvariant(format!(
            "extension produced an infeasible partition {partition:?}"
        )));
    }
    Ok(partition)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, ids: &[usize]) -> VertexSet {
        VertexSet::from_ids(n, ids.iter().copied()).unwrap()
    }

    fn k4_plus_pendant() -> Graph {
        let mut edges: Vec<_> = Graph::complete(4).edges();
        edges.push((3, 4));
        Graph::new(5, &edges).unwrap()
    }

    #[test]
    fn bad_vertices_examples() {
        let c5 = Graph::cycle(5);
        let x = set(5, &[0, 1]);
        let h0 = HVector::zeros(5);
        assert_eq!(bad_vertices(&c5, &x, Side::One, &DemandPair::uniform(5, 1, 0), &h0), x);
        assert!(bad_vertices(&c5, &x, Side::Two, &DemandPair::uniform(5, 0, 1), &h0).is_empty());
        assert!(bad_vertices(&c5, &VertexSet::empty(5), Side::One, &DemandPair::uniform(5, 1, 1), &h0).is_empty());
    }

    #[test]
    fn side_two_threshold_minus_one_is_never_bad() {
        let g = Graph::empty(3);
        let d = DemandPair::uniform(3, 0, 0);
        assert!(bad_vertices(&g, &g.vertices(), Side::Two, &d, &HVector::zeros(3)).is_empty());
        // with h = 1 an isolated vertex needs one neighbour
        assert_eq!(
            bad_vertices(&g, &g.vertices(), Side::Two, &d, &HVector::ones(3)).len(),
            3
        );
    }

    #[test]
    fn f_core_examples() {
        let c5 = Graph::cycle(5);
        assert_eq!(f_core(&c5, &c5.vertices(), &Threshold::uniform(5, 2)), c5.vertices());
        let p3 = Graph::path(3);
        assert!(f_core(&p3, &p3.vertices(), &Threshold::uniform(3, 2)).is_empty());
        let g = k4_plus_pendant();
        assert_eq!(
            f_core(&g, &g.vertices(), &Threshold::uniform(5, 2)),
            set(5, &[0, 1, 2, 3])
        );
    }

    #[test]
    fn is_good_examples() {
        let k5 = Graph::complete(5);
        let h = HVector::zeros(5);
        assert!(is_good(&k5, &k5.vertices(), Side::One, &DemandPair::uniform(5, 1, 1), &h).unwrap());
        let c5 = Graph::cycle(5);
        assert!(!is_good(&c5, &c5.vertices(), Side::One, &DemandPair::uniform(5, 2, 1), &h).unwrap());
        assert!(is_good(&c5, &set(5, &[3]), Side::Two, &DemandPair::uniform(5, 1, 0), &h).unwrap());
        assert_eq!(
            is_good(&c5, &VertexSet::empty(5), Side::One, &DemandPair::uniform(5, 1, 1), &h),
            Err(Error::EmptySet)
        );
    }

    #[test]
    fn is_meager_examples() {
        let h = HVector::zeros(5);
        let d = DemandPair::uniform(5, 1, 1);
        let p3 = Graph::path(3);
        assert!(is_meager(
            &p3,
            &p3.vertices(),
            Side::One,
            &DemandPair::uniform(3, 1, 1),
            &HVector::zeros(3)
        )
        .unwrap());
        let c5 = Graph::cycle(5);
        assert!(!is_meager(&c5, &c5.vertices(), Side::One, &d, &h).unwrap());
        assert!(is_meager(&c5, &set(5, &[2]), Side::One, &DemandPair::uniform(5, 0, 0), &h).unwrap());
        assert_eq!(
            is_meager(&c5, &VertexSet::empty(5), Side::Two, &d, &h),
            Err(Error::EmptySet)
        );
    }

    #[test]
    fn is_nice_examples() {
        let c5 = Graph::cycle(5);
        assert!(is_nice(&c5, &c5.vertices(), &Threshold::uniform(5, 2)).unwrap());
        assert!(is_nice(&c5, &set(5, &[0, 1]), &Threshold::uniform(5, 1)).unwrap());
        assert!(!is_nice(&c5, &set(5, &[0, 2]), &Threshold::uniform(5, 1)).unwrap());
    }

    #[test]
    fn is_degenerate_examples() {
        let tree = Graph::new(6, &[(0, 1), (0, 2), (2, 3), (2, 4), (4, 5)]).unwrap();
        assert!(is_degenerate_set(&tree, &tree.vertices(), &Threshold::uniform(6, 1)).unwrap());
        let k4 = Graph::complete(4);
        assert!(!is_degenerate_set(&k4, &k4.vertices(), &Threshold::uniform(4, 1)).unwrap());
        assert!(is_degenerate_set(&k4, &set(4, &[1]), &Threshold::uniform(4, 0)).unwrap());
    }

    #[test]
    fn feasible_pair_examples() {
        let c5 = Graph::cycle(5);
        let d = DemandPair::uniform(5, 1, 1);
        assert!(is_feasible_pair(&c5, &set(5, &[0, 1]), &set(5, &[2, 3]), &d));
        assert!(!is_feasible_pair(&c5, &set(5, &[0, 1]), &set(5, &[1, 2]), &d));
        assert!(!is_feasible_pair(&c5, &VertexSet::empty(5), &set(5, &[1, 2]), &d));
    }

    #[test]
    fn feasible_partition_examples() {
        let c5 = Graph::cycle(5);
        let d = DemandPair::uniform(5, 1, 1);
        assert!(is_feasible_partition(&c5, &Partition::from_ids(5, &[0, 1]).unwrap(), &d).unwrap());

        let k3 = Graph::complete(3);
        let d3 = DemandPair::uniform(3, 1, 1);
        for mask in 1..7u64 {
            let p = Partition::from_mask(3, mask);
            assert!(!is_feasible_partition(&k3, &p, &d3).unwrap());
        }

        let e = Graph::empty(4);
        let d0 = DemandPair::uniform(4, 0, 0);
        assert!(is_feasible_partition(&e, &Partition::from_ids(4, &[2]).unwrap(), &d0).unwrap());

        assert!(matches!(
            is_feasible_partition(&e, &Partition::from_ids(3, &[2]).unwrap(), &d0),
            Err(Error::NotAPartition(_))
        ));
    }

    #[test]
    fn extend_examples() {
        let c5 = Graph::cycle(5);
        let d = DemandPair::uniform(5, 1, 1);
        let p = extend_pair_to_partition(&c5, &d, &set(5, &[0, 1]), &set(5, &[2, 3, 4])).unwrap();
        assert_eq!(p.x1().to_vec(), vec![0, 1]);

        let c6 = Graph::cycle(6);
        let d6 = DemandPair::uniform(6, 1, 1);
        let p = extend_pair_to_partition(&c6, &d6, &set(6, &[0, 1]), &set(6, &[3, 4])).unwrap();
        assert_eq!(p.x1().to_vec(), vec![0, 1, 2, 5]);
        assert_eq!(p.x2().to_vec(), vec![3, 4]);

        let k5 = Graph::complete(5);
        let p = extend_pair_to_partition(&k5, &d, &set(5, &[0, 1]), &set(5, &[2, 3])).unwrap();
        assert_eq!(p.x1().to_vec(), vec![0, 1, 4]);
        assert_eq!(p.x2().to_vec(), vec![2, 3]);
    }

    #[test]
    fn extend_rejects_bad_preconditions() {
        let c5 = Graph::cycle(5);
        let d = DemandPair::uniform(5, 2, 1);
        assert!(matches!(
            extend_pair_to_partition(&c5, &d, &set(5, &[0, 1]), &set(5, &[2, 3])),
            Err(Error::PreconditionViolated(_))
        ));
        let d = DemandPair::uniform(5, 1, 1);
        assert!(matches!(
            extend_pair_to_partition(&c5, &d, &set(5, &[0, 2]), &set(5, &[3, 4])),
            Err(Error::PreconditionViolated(_))
        ));
    }
}
