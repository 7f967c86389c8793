use crate::error::{Error, Result};
use crate::feasibility::{DemandPair, Side};
use crate::graph::Graph;
use crate::partition::Partition;

fn check_shape(g: &Graph, d: &DemandPair, p: &Partition) -> Result<()> {
    if p.n() != g.n() {
        return Err(Error::NotAPartition(format!(
            "partition covers {} vertices, graph has {}",
            p.n(),
            g.n()
        )));
    }
    d.check_len(g.n())
}

/// `ω(X1, X2) = e(X1) + e(X2) + Σ_{X1} b + Σ_{X2} a`.
pub fn weight(g: &Graph, d: &DemandPair, p: &Partition) -> Result<i64> {
    check_shape(g, d, p)?;
    Ok(weight_unchecked(g, d, p))
}

pub(crate) fn weight_unchecked(g: &Graph, d: &DemandPair, p: &Partition) -> i64 {
    let edges = g.edges_within(p.x1()) + g.edges_within(p.x2());
    let b_sum: u64 = p.x1().iter().map(|u| d.b(u)).sum();
    let a_sum: u64 = p.x2().iter().map(|u| d.a(u)).sum();
    edges as i64 + b_sum as i64 + a_sum as i64
}

#[inline]
pub(crate) fn move_delta(g: &Graph, d: &DemandPair, p: &Partition, u: usize) -> i64 {
    let in1 = g.deg_in(u, p.x1()) as i64;
    let in2 = g.deg_in(u, p.x2()) as i64;
    let (a, b) = (d.a(u) as i64, d.b(u) as i64);
    if p.x1().contains(u) {
        in2 - in1 + a - b
    } else {
        in1 - in2 + b - a
    }
}

#[inline]
pub(crate) fn swap_delta(g: &Graph, d: &DemandPair, p: &Partition, u: usize, v: usize) -> i64 {
    move_delta(g, d, p, u) + move_delta(g, d, p, v) - 2 * i64::from(g.has_edge(u, v))
}

/// Exact change of `ω` when `u` moves to `to_side`:
/// `d_{X2}(u) - d_{X1}(u) + a(u) - b(u)` towards side 2 and
/// `d_{X1}(u) - d_{X2}(u) + b(u) - a(u)` towards side 1.
pub fn delta_move(g: &Graph, d: &DemandPair, p: &Partition, u: usize, to_side: Side) -> Result<i64> {
    check_shape(g, d, p)?;
    g.check_vertex(u)?;
    let from = to_side.other();
    if p.side_of(u) != from.index() {
        return Err(Error::WrongSide {
            vertex: u,
            side: from.index(),
        });
    }
    Ok(move_delta(g, d, p, u))
}

/// Exact change of `ω` when `u ∈ X1` and `v ∈ X2` trade sides: the two
/// single-move deltas minus `2 e(u, v)`.
pub fn delta_swap(g: &Graph, d: &DemandPair, p: &Partition, u: usize, v: usize) -> Result<i64> {
    check_shape(g, d, p)?;
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if !p.x1().contains(u) {
        return Err(Error::WrongSide { vertex: u, side: 1 });
    }
    if !p.x2().contains(v) {
        return Err(Error::WrongSide { vertex: v, side: 2 });
    }
    Ok(swap_delta(g, d, p, u, v))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn recomputed_after(g: &Graph, d: &DemandPair, p: &Partition, flips: &[usize]) -> i64 {
        let mut q = p.clone();
        for &v in flips {
            q.flip(v);
        }
        weight(g, d, &q).unwrap() - weight(g, d, p).unwrap()
    }

    #[test]
    fn weight_examples() {
        let d = DemandPair::uniform(3, 1, 1);
        let p3 = Graph::path(3);
        assert_eq!(weight(&p3, &d, &Partition::from_ids(3, &[0, 1]).unwrap()).unwrap(), 4);
        let k3 = Graph::complete(3);
        assert_eq!(weight(&k3, &d, &Partition::from_ids(3, &[0]).unwrap()).unwrap(), 4);
        let e = Graph::empty(4);
        let d = DemandPair::new(vec![1, 2, 3, 4], vec![10, 20, 30, 40]).unwrap();
        // X1 = {0, 2}: b(0) + b(2) + a(1) + a(3)
        assert_eq!(weight(&e, &d, &Partition::from_ids(4, &[0, 2]).unwrap()).unwrap(), 46);
    }

    #[test]
    fn weight_rejects_mismatched_partition() {
        let d = DemandPair::uniform(3, 1, 1);
        let p = Partition::from_ids(4, &[0]).unwrap();
        assert!(matches!(weight(&Graph::path(3), &d, &p), Err(Error::NotAPartition(_))));
    }

    #[test]
    fn delta_move_examples() {
        let d = DemandPair::uniform(3, 1, 1);
        let p3 = Graph::path(3);
        let p = Partition::from_ids(3, &[0, 1]).unwrap();
        assert_eq!(delta_move(&p3, &d, &p, 1, Side::Two).unwrap(), 0);
        assert_eq!(recomputed_after(&p3, &d, &p, &[1]), 0);

        let k3 = Graph::complete(3);
        let p = Partition::from_ids(3, &[0]).unwrap();
        assert_eq!(delta_move(&k3, &d, &p, 0, Side::Two).unwrap(), 2);
        assert_eq!(recomputed_after(&k3, &d, &p, &[0]), 2);

        let lonely = Graph::new(4, &[(0, 1), (1, 2)]).unwrap();
        let d = DemandPair::new(vec![0, 0, 0, 5], vec![0, 0, 0, 5]).unwrap();
        for mask in 0..16u64 {
            let p = Partition::from_mask(4, mask);
            let to = if p.x1().contains(3) { Side::Two } else { Side::One };
            assert_eq!(delta_move(&lonely, &d, &p, 3, to).unwrap(), 0);
        }
    }

    #[test]
    fn delta_move_wrong_side() {
        let d = DemandPair::uniform(3, 1, 1);
        let p = Partition::from_ids(3, &[0]).unwrap();
        assert_eq!(
            delta_move(&Graph::path(3), &d, &p, 0, Side::One),
            Err(Error::WrongSide { vertex: 0, side: 2 })
        );
    }

    #[test]
    fn delta_swap_examples() {
        let d = DemandPair::uniform(4, 1, 1);
        let c4 = Graph::cycle(4);
        let p = Partition::from_ids(4, &[0, 1]).unwrap();
        assert_eq!(delta_swap(&c4, &d, &p, 1, 2).unwrap(), -2);
        assert_eq!(recomputed_after(&c4, &d, &p, &[1, 2]), -2);

        let d = DemandPair::uniform(3, 1, 1);
        let p3 = Graph::path(3);
        let p = Partition::from_ids(3, &[0, 1]).unwrap();
        assert_eq!(delta_swap(&p3, &d, &p, 0, 2).unwrap(), 0);
        assert_eq!(recomputed_after(&p3, &d, &p, &[0, 2]), 0);

        let e = Graph::empty(3);
        assert_eq!(delta_swap(&e, &d, &p, 1, 2).unwrap(), 0);

        assert_eq!(
            delta_swap(&p3, &d, &p, 2, 0),
            Err(Error::WrongSide { vertex: 2, side: 1 })
        );
        assert_eq!(
            delta_swap(&p3, &d, &p, 0, 1),
            Err(Error::WrongSide { vertex: 1, side: 2 })
        );
    }
}
