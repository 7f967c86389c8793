//! Potential-driven local search over bipartitions.
//!
//! The potential is `(ω, -|X1|)` compared lexicographically. Candidate moves
//! come from the bad sets: a `B1(X1)` vertex crossing to side 2, a `B2(X2)`
//! vertex crossing to side 1, or one of each exchanging sides. Only strictly
//! improving moves are taken (plus an optional allowance of ω-neutral swaps),
//! so the search stops after at most `(m + Σ(a+b) + 1)(n + 1)` improving
//! moves.

use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::feasibility::{bad_vertices, f_core, side_threshold, DemandPair, HVector, Side};
use crate::graph::{Graph, VertexSet};
use crate::partition::Partition;

use super::weight::{move_delta, swap_delta, weight_unchecked};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Move {
    /// `u ∈ B1(X1)` moves to `X2`.
    ToSecond(usize),
    /// `v ∈ B2(X2)` moves to `X1`.
    ToFirst(usize),
    /// `u ∈ B1(X1)` and `v ∈ B2(X2)` exchange sides.
    Swap(usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchState {
    pub partition: Partition,
    pub omega: i64,
    pub trace: Vec<Move>,
    /// Feasible pair found along the way, if any.
    pub pair: Option<(VertexSet, VertexSet)>,
    /// Applied moves that kept ω unchanged (neutral swaps).
    pub neutral_moves: usize,
}

impl SearchState {
    pub fn moves(&self) -> usize {
        self.trace.len()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    pub budget: usize,
    /// ω-neutral swaps allowed in this run.
    pub neutral_swaps: usize,
}

/// `(m + Σ(a+b) + 1)(n + 1)`: the number of distinct potential values.
pub fn move_bound(g: &Graph, d: &DemandPair) -> usize {
    (g.m() + d.total() as usize + 1) * (g.n() + 1)
}

pub fn default_budget(g: &Graph, d: &DemandPair) -> usize {
    10 * move_bound(g, d)
}

/// Looks for an (a,b)-feasible pair among peeling cores of the two sides and
/// of the sides with one or two bad vertices moved across.
pub fn extract_feasible_pair(g: &Graph, d: &DemandPair, h: &HVector, p: &Partition) -> Option<(VertexSet, VertexSet)> {
    let (a, b) = (d.a_threshold(), d.b_threshold());
    let (x1, x2) = (p.x1(), p.x2());
    let good = |s: &VertexSet, t: &VertexSet| !s.is_empty() && !t.is_empty() && s.is_disjoint(t);

    let core1 = f_core(g, x1, &a);
    let core2 = f_core(g, x2, &b);
    if good(&core1, &core2) {
        return Some((core1, core2));
    }

    let bad1 = bad_vertices(g, x1, Side::One, d, h);
    let bad2 = bad_vertices(g, x2, Side::Two, d, h);

    // X2 + u for u ∈ B1(X1), and X1 + v for v ∈ B2(X2)
    let mut grown2 = Vec::with_capacity(bad1.len());
    for u in &bad1 {
        let b_side = f_core(g, &x2.with(u), &b);
        let a_side = f_core(g, &x1.without(u), &a);
        if good(&a_side, &b_side) {
            return Some((a_side, b_side));
        }
        grown2.push(b_side);
    }
    let mut grown1 = Vec::with_capacity(bad2.len());
    for v in &bad2 {
        let a_side = f_core(g, &x1.with(v), &a);
        let b_side = f_core(g, &x2.without(v), &b);
        if good(&a_side, &b_side) {
            return Some((a_side, b_side));
        }
        grown1.push(a_side);
    }
    // A ⊆ X1 + v and B ⊆ X2 + u can only collide on u or v.
    for b_side in &grown2 {
        for a_side in &grown1 {
            if good(a_side, b_side) {
                return Some((a_side.clone(), b_side.clone()));
            }
        }
    }
    None
}

fn potential_gain(delta: i64, x1_change: i64) -> bool {
    delta > 0 || (delta == 0 && x1_change < 0)
}

/// Runs first-improvement local search from `init`; returns as soon as a
/// feasible pair is extractable.
pub fn local_search(g: &Graph, d: &DemandPair, h: &HVector, init: Partition, opts: &SearchOptions) -> SearchState {
    let omega = weight_unchecked(g, d, &init);
    let mut state = SearchState {
        partition: init,
        omega,
        trace: Vec::new(),
        pair: None,
        neutral_moves: 0,
    };
    let mut neutral_left = opts.neutral_swaps;
    let mut last_neutral: Option<(usize, usize)> = None;

    loop {
        if let Some(pair) = extract_feasible_pair(g, d, h, &state.partition) {
            state.pair = Some(pair);
            return state;
        }
        if state.trace.len() >= opts.budget {
            return state;
        }
        let p = &state.partition;
        let bad1 = bad_vertices(g, p.x1(), Side::One, d, h);
        let bad2 = bad_vertices(g, p.x2(), Side::Two, d, h);

        let mut chosen = bad1
            .iter()
            .map(|u| (Move::ToSecond(u), move_delta(g, d, p, u)))
            .find(|&(_, delta)| potential_gain(delta, -1))
            .or_else(|| {
                bad2.iter()
                    .map(|v| (Move::ToFirst(v), move_delta(g, d, p, v)))
                    .find(|&(_, delta)| potential_gain(delta, 1))
            });
        let mut neutral = None;
        if chosen.is_none() {
            'pairs: for u in &bad1 {
                for v in &bad2 {
                    let delta = swap_delta(g, d, p, u, v);
                    if delta > 0 {
                        chosen = Some((Move::Swap(u, v), delta));
                        break 'pairs;
                    }
                    if delta == 0 && neutral_left > 0 && neutral.is_none() && last_neutral != Some((v, u)) {
                        neutral = Some((Move::Swap(u, v), 0));
                    }
                }
            }
        }
        if chosen.is_none() {
            if let Some((Move::Swap(u, v), _)) = neutral {
                neutral_left -= 1;
                last_neutral = Some((u, v));
                state.neutral_moves += 1;
                chosen = neutral;
            }
        }
        let Some((mv, delta)) = chosen else {
            return state;
        };
        match mv {
            Move::ToSecond(u) | Move::ToFirst(u) => state.partition.flip(u),
            Move::Swap(u, v) => {
                state.partition.flip(u);
                state.partition.flip(v);
            }
        }
        state.omega += delta;
        debug_assert_eq!(state.omega, weight_unchecked(g, d, &state.partition));
        state.trace.push(mv);
    }
}

/// Initial partition with an inclusion-minimal 2-good `X2`.
///
/// Starts from the `(b + h)`-core of `V` minus a maximum-degree vertex and
/// keeps replacing `X2` by the core of `X2 - v` while that core is nonempty.
/// Falls back to a random balanced split when the first core is empty.
pub fn degenerate_init<R: Rng + ?Sized>(g: &Graph, d: &DemandPair, h: &HVector, rng: &mut R) -> Result<Partition> {
    let n = g.n();
    if n < 2 {
        return Err(Error::TooSmall { n, min: 2 });
    }
    d.check_len(n)?;
    let threshold = side_threshold(d, h, Side::Two);
    let hub = (0..n)
        .max_by_key(|&u| (g.degree(u), std::cmp::Reverse(u)))
        .expect("graph has vertices");
    let mut x2 = f_core(g, &g.vertices().without(hub), &threshold);
    if x2.is_empty() {
        let mut ids: Vec<usize> = (0..n).collect();
        ids.shuffle(rng);
        return Partition::from_ids(n, &ids[..n / 2]);
    }
    'shrink: loop {
        for v in &x2 {
            let smaller = f_core(g, &x2.without(v), &threshold);
            if !smaller.is_empty() {
                x2 = smaller;
                continue 'shrink;
            }
        }
        break;
    }
    Ok(Partition::from_first(x2.complement()))
}

pub fn random_partition<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Partition {
    let mut x1 = VertexSet::empty(n);
    for u in 0..n {
        if rng.gen_bool(0.5) {
            x1.insert(u);
        }
    }
    Partition::from_first(x1)
}
