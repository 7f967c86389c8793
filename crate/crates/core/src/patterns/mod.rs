//! Vertex classification relative to a prescribed 5-vertex subgraph.
//!
//! `T1` is the set of vertices lying in at least one (not necessarily
//! induced) copy of the pattern and `h` is its indicator. Production
//! detectors work from common-neighbour counts; [`brute`] holds the
//! enumeration oracle they are tested against.

pub mod brute;
mod report;

use serde::Serialize;

pub use brute::{contains_pattern_at, contains_subgraph_at, Pattern};
pub use report::{hypothesis_report, hypothesis_report_with, HypothesisReport, TheoremCheck};

use crate::error::{Error, Result};
use crate::feasibility::HVector;
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum PatternKind {
    /// Three triangles on a shared spine edge: `K4 - e` plus a vertex joined
    /// to both of its degree-3 vertices.
    BookB3,
    /// Complete bipartite `K_{2,3}`.
    K23,
    /// Endpoints of edges that lie on two short cycles with different vertex
    /// sets.
    CyclePairS1,
}

impl PatternKind {
    pub fn name(self) -> &'static str {
        match self {
            PatternKind::BookB3 => "b3",
            PatternKind::K23 => "k23",
            PatternKind::CyclePairS1 => "s1",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "b3" => Some(PatternKind::BookB3),
            "k23" => Some(PatternKind::K23),
            "s1" => Some(PatternKind::CyclePairS1),
            _ => None,
        }
    }
}

/// Which attachments of a fifth vertex to two vertices of `K4 - e` count as
/// the book pattern.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum B3Variant {
    /// Only the attachment to the two degree-3 vertices (the book `B3`).
    Strict,
    /// All three non-isomorphic attachments. The default: with only the
    /// book counted, the main theorem fails already on five vertices.
    #[default]
    Loose,
}

impl B3Variant {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "strict" => Some(B3Variant::Strict),
            "loose" => Some(B3Variant::Loose),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            B3Variant::Strict => "strict",
            B3Variant::Loose => "loose",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub kind: PatternKind,
    pub t1: VertexSet,
    pub h: HVector,
}

impl Classification {
    pub fn new(kind: PatternKind, t1: VertexSet) -> Self {
        let h = HVector::from_set(&t1);
        Classification { kind, t1, h }
    }

    pub fn t0(&self) -> VertexSet {
        self.t1.complement()
    }
}

/// Vertices `{x, y} ∪ (N(x) ∩ N(y))` over every vertex pair whose common
/// neighbourhood passes `accept`; `adjacent_only` restricts to edges `xy`.
fn common_neighbour_cover(g: &Graph, adjacent_only: bool, accept: impl Fn(&VertexSet) -> bool) -> VertexSet {
    let mut t1 = VertexSet::empty(g.n());
    for x in 0..g.n() {
        for y in x + 1..g.n() {
            if adjacent_only && !g.has_edge(x, y) {
                continue;
            }
            if g.neighbor_set(x).intersection_len(g.neighbor_set(y)) < 3 {
                continue;
            }
            let common = g.neighbor_set(x).intersection(g.neighbor_set(y));
            if accept(&common) {
                t1.insert(x);
                t1.insert(y);
                t1 = t1.union(&common);
            }
        }
    }
    t1
}

/// `T1` for the book `B3`: a copy exists on `{x, y, c1, c2, c3}` exactly when
/// the spine edge `xy` has three common neighbours, and any common neighbour
/// can serve as a page.
pub fn classify_book_b3(g: &Graph) -> VertexSet {
    common_neighbour_cover(g, true, |_| true)
}

/// `T1` for `K_{2,3}` over all vertex pairs, adjacent or not.
pub fn classify_k23(g: &Graph) -> VertexSet {
    common_neighbour_cover(g, false, |_| true)
}

/// `T1` for the union of all three attachments of a vertex to two vertices of
/// `K4 - e`.
pub fn classify_book_b3_loose(g: &Graph) -> VertexSet {
    let strict = classify_book_b3(g);
    // Attachment to the two degree-2 vertices r, s: r and s have three common
    // neighbours p, q, w with pq an edge. Every common neighbour is then
    // covered, either as an end of such an edge or as the remaining vertex.
    let twin_pair = common_neighbour_cover(g, false, |common| {
        common.iter().any(|c| g.neighbor_set(c).intersection_len(common) > 0)
    });
    strict.union(&twin_pair).union(&gem_cover(g))
}

/// Attachment to one vertex of each degree: a vertex p adjacent to all four
/// vertices of a path (the gem). Covers p and every vertex on a 4-vertex path
/// inside `N(p)`.
fn gem_cover(g: &Graph) -> VertexSet {
    let mut cover = VertexSet::empty(g.n());
    for p in 0..g.n() {
        let local = g.neighbor_set(p);
        let mut on_path = VertexSet::empty(g.n());
        for start in local {
            let mut path = vec![start];
            mark_paths(g, local, &mut path, &mut on_path);
        }
        if !on_path.is_empty() {
            cover.insert(p);
            cover = cover.union(&on_path);
        }
    }
    cover
}

fn mark_paths(g: &Graph, within: &VertexSet, path: &mut Vec<usize>, marked: &mut VertexSet) {
    if path.len() == 4 {
        for &v in path.iter() {
            marked.insert(v);
        }
        return;
    }
    let last = *path.last().expect("path is seeded with a start vertex");
    for &next in g.neighbors(last) {
        if within.contains(next) && !path.contains(&next) {
            path.push(next);
            mark_paths(g, within, path, marked);
            path.pop();
        }
    }
}

/// Vertex sets of all 3- and 4-cycles whose vertex sequence starts with the
/// edge `(u1, u2)`, stopping once two distinct sets are known.
fn short_cycle_sets_through(g: &Graph, u1: usize, u2: usize, limit: usize) -> Vec<Vec<usize>> {
    let mut sets: Vec<Vec<usize>> = Vec::new();
    let mut push = |mut s: Vec<usize>| {
        s.sort_unstable();
        if !sets.contains(&s) {
            sets.push(s);
        }
        sets.len() >= limit
    };
    for &c in g.neighbors(u1) {
        if c != u2 && g.has_edge(c, u2) && push(vec![u1, u2, c]) {
            return sets;
        }
    }
    // u1 - u2 - y - x - u1
    for &y in g.neighbors(u2) {
        if y == u1 {
            continue;
        }
        for &x in g.neighbors(u1) {
            if x == u2 || x == y || !g.has_edge(x, y) {
                continue;
            }
            if push(vec![u1, u2, y, x]) {
                return sets;
            }
        }
    }
    sets
}

/// `S1`: endpoints of edges carrying two 3- or 4-cycles with different vertex
/// sets.
pub fn s1_vertices(g: &Graph) -> VertexSet {
    let mut s1 = VertexSet::empty(g.n());
    for (u1, u2) in g.edges() {
        if short_cycle_sets_through(g, u1, u2, 2).len() >= 2 {
            s1.insert(u1);
            s1.insert(u2);
        }
    }
    s1
}

pub fn classify(g: &Graph, kind: PatternKind) -> Result<Classification> {
    classify_with(g, kind, B3Variant::default())
}

pub fn classify_with(g: &Graph, kind: PatternKind, variant: B3Variant) -> Result<Classification> {
    let t1 = match (kind, variant) {
        (PatternKind::BookB3, B3Variant::Strict) => classify_book_b3(g),
        (PatternKind::BookB3, B3Variant::Loose) => classify_book_b3_loose(g),
        (PatternKind::K23, _) => classify_k23(g),
        (PatternKind::CyclePairS1, _) => return Err(Error::UnsupportedKind("s1")),
    };
    Ok(Classification::new(kind, t1))
}
