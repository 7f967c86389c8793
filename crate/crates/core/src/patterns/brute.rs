//! Reference oracle: enumerate injective maps of a small pattern into `G`.
//! Exponential in the pattern size; meant for graphs of about ten vertices.

use crate::error::{Error, Result};
use crate::graph::Graph;

use super::PatternKind;

/// Small pattern graph given by its edge list on `0..order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pattern {
    pub order: usize,
    pub edges: Vec<(usize, usize)>,
}

// K4 - e on p=0, q=1, r=2, s=3 with rs missing.
const DIAMOND: [(usize, usize); 5] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)];

impl Pattern {
    fn diamond_plus(extra: [(usize, usize); 2]) -> Self {
        let mut edges = DIAMOND.to_vec();
        edges.extend(extra);
        Pattern { order: 5, edges }
    }

    /// Fifth vertex joined to the two degree-3 vertices of `K4 - e`.
    pub fn book_b3() -> Self {
        Self::diamond_plus([(4, 0), (4, 1)])
    }

    pub fn k23() -> Self {
        Pattern {
            order: 5,
            edges: vec![(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)],
        }
    }

    /// The three ways of joining a vertex to exactly two vertices of `K4 - e`:
    /// both degree-3 vertices, both degree-2 vertices, one of each.
    pub fn b3_attachments() -> [Pattern; 3] {
        [
            Self::book_b3(),
            Self::diamond_plus([(4, 2), (4, 3)]),
            Self::diamond_plus([(4, 0), (4, 2)]),
        ]
    }

    pub fn graph(&self) -> Graph {
        Graph::new(self.order, &self.edges).expect("pattern edges are valid")
    }
}

/// Does some copy of `pattern` in `g` (not necessarily induced) use `u`?
pub fn contains_subgraph_at(g: &Graph, pattern: &Pattern, u: usize) -> bool {
    if pattern.order > g.n() || u >= g.n() {
        return false;
    }
    // back_edges[i]: pattern neighbours j < i of pattern vertex i
    let back_edges: Vec<Vec<usize>> = (0..pattern.order)
        .map(|i| {
            pattern
                .edges
                .iter()
                .filter_map(|&(x, y)| match (x.max(y) == i, x.min(y)) {
                    (true, j) => Some(j),
                    _ => None,
                })
                .collect()
        })
        .collect();
    let mut image = Vec::with_capacity(pattern.order);
    extend_map(g, &back_edges, u, &mut image)
}

fn extend_map(g: &Graph, back_edges: &[Vec<usize>], target: usize, image: &mut Vec<usize>) -> bool {
    let i = image.len();
    if i == back_edges.len() {
        return image.contains(&target);
    }
    for v in 0..g.n() {
        if image.contains(&v) {
            continue;
        }
        if back_edges[i].iter().all(|&j| g.has_edge(image[j], v)) {
            image.push(v);
            let found = extend_map(g, back_edges, target, image);
            image.pop();
            if found {
                return true;
            }
        }
    }
    false
}

pub fn contains_pattern_at(g: &Graph, kind: PatternKind, u: usize) -> Result<bool> {
    g.check_vertex(u)?;
    let pattern = match kind {
        PatternKind::BookB3 => Pattern::book_b3(),
        PatternKind::K23 => Pattern::k23(),
        PatternKind::CyclePairS1 => return Err(Error::UnsupportedKind("s1")),
    };
    Ok(contains_subgraph_at(g, &pattern, u))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracle_examples() {
        let b3 = Pattern::book_b3().graph();
        assert!((0..5).all(|u| contains_pattern_at(&b3, PatternKind::BookB3, u).unwrap()));
        let c5 = Graph::cycle(5);
        assert!((0..5).all(|u| !contains_pattern_at(&c5, PatternKind::K23, u).unwrap()));
        assert!(contains_pattern_at(&Graph::complete(5), PatternKind::BookB3, 0).unwrap());
        assert!(contains_pattern_at(&c5, PatternKind::BookB3, 5).is_err());
    }

    #[test]
    fn book_contains_k23() {
        let b3 = Pattern::book_b3().graph();
        assert!((0..5).all(|u| contains_pattern_at(&b3, PatternKind::K23, u).unwrap()));
        let k23 = Pattern::k23().graph();
        assert!(!contains_pattern_at(&k23, PatternKind::BookB3, 0).unwrap());
    }
}
