use crate::error::{Error, Result};
use crate::feasibility::DemandPair;
use crate::graph::Graph;
use crate::partition::Partition;

pub const DEFAULT_ORACLE_LIMIT: usize = 24;
/// Assignments are enumerated as `u64` masks.
pub const MAX_ORACLE_LIMIT: usize = 63;

#[inline]
fn side_ok(adj: &[u64], need: &[u64], mask: u64) -> bool {
    let mut rest = mask;
    while rest != 0 {
        let u = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if u64::from((adj[u] & mask).count_ones()) < need[u] {
            return false;
        }
    }
    true
}

/// Tries every split with both sides nonempty, `X1` given by the mask in
/// ascending order; the first feasible one is returned. When `a = b`
/// pointwise only masks with vertex 0 in `X1` are visited.
pub fn exhaustive_oracle(g: &Graph, d: &DemandPair, limit: usize) -> Result<Option<Partition>> {
    let n = g.n();
    let limit = limit.min(MAX_ORACLE_LIMIT);
    if n > limit {
        return Err(Error::TooLarge { n, limit });
    }
    d.check_len(n)?;
    if n < 2 {
        return Ok(None);
    }
    let adj: Vec<u64> = (0..n).map(|u| g.neighbor_set(u).to_mask().expect("n <= 63")).collect();
    let full = (1u64 << n) - 1;
    let (step, start) = if d.is_symmetric() { (2, 1) } else { (1, 1) };
    let mut mask = start;
    while mask < full {
        if side_ok(&adj, d.a_values(), mask) && side_ok(&adj, d.b_values(), full & !mask) {
            return Ok(Some(Partition::from_mask(n, mask)));
        }
        mask += step;
    }
    Ok(None)
}
