//! Reference implementations used as test oracles. Deliberately naive and
//! independent of the library's algorithms: plain adjacency matrices, full
//! enumeration, no bitset tricks shared with the crate.

#![allow(dead_code)]

use degpart_core::{DemandPair, Graph};

pub struct Adj {
    pub n: usize,
    pub m: Vec<Vec<bool>>,
}

impl Adj {
    pub fn of(g: &Graph) -> Self {
        let n = g.n();
        let mut m = vec![vec![false; n]; n];
        for (u, v) in g.edges() {
            m[u][v] = true;
            m[v][u] = true;
        }
        Adj { n, m }
    }

    pub fn deg_in(&self, u: usize, members: &[bool]) -> u64 {
        (0..self.n).filter(|&w| members[w] && self.m[u][w]).count() as u64
    }

    pub fn degree(&self, u: usize) -> u64 {
        self.m[u].iter().filter(|&&e| e).count() as u64
    }
}

/// Every vertex of `side` has at least `f[u]` neighbours inside `side`.
pub fn side_ok(adj: &Adj, side: &[bool], f: &[u64]) -> bool {
    (0..adj.n).all(|u| !side[u] || adj.deg_in(u, side) >= f[u])
}

pub fn partition_ok(adj: &Adj, x1: &[bool], d: &DemandPair) -> bool {
    let x2: Vec<bool> = x1.iter().map(|&b| !b).collect();
    x1.iter().any(|&b| b) && x2.iter().any(|&b| b) && side_ok(adj, x1, d.a_values()) && side_ok(adj, &x2, d.b_values())
}

/// Whether some feasible partition exists, trying all `2^n` splits.
pub fn partition_exists(g: &Graph, d: &DemandPair) -> bool {
    let adj = Adj::of(g);
    let n = g.n();
    (1..(1u64 << n) - 1).any(|mask| {
        let x1: Vec<bool> = (0..n).map(|u| mask >> u & 1 == 1).collect();
        partition_ok(&adj, &x1, d)
    })
}

/// Pattern on vertices `0..order`.
pub struct Pat {
    pub order: usize,
    pub edges: Vec<(usize, usize)>,
}

/// Three triangles on the spine `{0, 1}`.
pub fn book3() -> Pat {
    Pat {
        order: 5,
        edges: vec![(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (0, 4), (1, 4)],
    }
}

/// `K4 - e` on `0..4` (missing edge `23`, so `0` and `1` have degree 3) plus
/// vertex 4 joined to two of its vertices, in each of the three
/// non-isomorphic ways. The first is [`book3`].
pub fn k4e_attachments() -> Vec<Pat> {
    let base = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)];
    [[(4, 0), (4, 1)], [(4, 2), (4, 3)], [(4, 0), (4, 2)]]
        .iter()
        .map(|extra| Pat {
            order: 5,
            edges: base.iter().chain(extra).copied().collect(),
        })
        .collect()
}

/// Vertices covered by a copy of any of the patterns.
pub fn covered_by_any(g: &Graph, pats: &[Pat]) -> Vec<bool> {
    let mut out = vec![false; g.n()];
    for p in pats {
        for (o, c) in out.iter_mut().zip(covered_by(g, p)) {
            *o |= c;
        }
    }
    out
}

/// Parts `{0, 1}` and `{2, 3, 4}`.
pub fn k23() -> Pat {
    Pat {
        order: 5,
        edges: vec![(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)],
    }
}

/// Vertices covered by some (not necessarily induced) copy of `pat`, found
/// by trying every injective map of the pattern's vertices into `g`.
pub fn covered_by(g: &Graph, pat: &Pat) -> Vec<bool> {
    let adj = Adj::of(g);
    let mut covered = vec![false; g.n()];
    let mut image = Vec::with_capacity(pat.order);
    let mut used = vec![false; g.n()];
    fn go(adj: &Adj, pat: &Pat, image: &mut Vec<usize>, used: &mut [bool], covered: &mut [bool]) {
        if image.len() == pat.order {
            if pat.edges.iter().all(|&(i, j)| adj.m[image[i]][image[j]]) {
                for &v in image.iter() {
                    covered[v] = true;
                }
            }
            return;
        }
        for v in 0..adj.n {
            if !used[v] {
                used[v] = true;
                image.push(v);
                go(adj, pat, image, used, covered);
                image.pop();
                used[v] = false;
            }
        }
    }
    go(&adj, pat, &mut image, &mut used, &mut covered);
    covered
}

/// Endpoints of edges lying on two 3- or 4-cycles with different vertex
/// sets, by listing every such cycle through each edge.
pub fn s1_reference(g: &Graph) -> Vec<bool> {
    let adj = Adj::of(g);
    let n = g.n();
    let mut out = vec![false; n];
    for (u, v) in g.edges() {
        let mut sets: Vec<Vec<usize>> = Vec::new();
        for w in 0..n {
            if w != u && w != v && adj.m[u][w] && adj.m[v][w] {
                let mut s = vec![u, v, w];
                s.sort_unstable();
                sets.push(s);
            }
        }
        // u - v - x - y - u
        for x in 0..n {
            for y in 0..n {
                let distinct = x != y && ![u, v].contains(&x) && ![u, v].contains(&y);
                if distinct && adj.m[v][x] && adj.m[x][y] && adj.m[y][u] {
                    let mut s = vec![u, v, x, y];
                    s.sort_unstable();
                    sets.push(s);
                }
            }
        }
        sets.sort();
        sets.dedup();
        if sets.len() >= 2 {
            out[u] = true;
            out[v] = true;
        }
    }
    out
}

/// Main theorem hypothesis for a given `h`: `n >= 5`,
/// `d >= a + b + h` and `min(a, b) >= floor_base - h` everywhere.
pub fn main_hypothesis(g: &Graph, d: &DemandPair, h: &[bool], floor_base: i64) -> bool {
    let adj = Adj::of(g);
    g.n() >= 5
        && (0..g.n()).all(|u| {
            let hu = i64::from(h[u]);
            let (a, b) = (d.a(u) as i64, d.b(u) as i64);
            adj.degree(u) as i64 >= a + b + hu && a.min(b) >= floor_base - hu
        })
}

pub fn to_bools(set: &degpart_core::VertexSet) -> Vec<bool> {
    (0..set.universe()).map(|u| set.contains(u)).collect()
}
