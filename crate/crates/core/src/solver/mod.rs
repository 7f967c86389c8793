//! Finding (a,b)-feasible partitions.
//!
//! [`solve`] runs local search from a degenerate start and from seeded random
//! restarts, extends any feasible pair it meets into a partition, and falls
//! back to exhaustive enumeration on small graphs. Every partition it reports
//! has been re-validated.

mod oracle;
mod search;
mod weight;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

pub use oracle::{exhaustive_oracle, DEFAULT_ORACLE_LIMIT, MAX_ORACLE_LIMIT};
pub use search::{
    default_budget, degenerate_init, extract_feasible_pair, local_search, move_bound, random_partition, Move,
    SearchOptions, SearchState,
};
pub use weight::{delta_move, delta_swap, weight};

pub use crate::partition::Partition;

use crate::error::{Error, Result};
use crate::feasibility::{extend_pair_to_partition, is_feasible_partition, DemandPair};
use crate::graph::{Graph, VertexSet};
use crate::patterns::{classify_with, hypothesis_report_with, B3Variant, HypothesisReport, PatternKind};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveConfig {
    pub seed: u64,
    /// Move budget per local search; `None` uses [`default_budget`].
    pub budget: Option<usize>,
    pub restarts: usize,
    pub oracle_limit: usize,
    pub use_oracle: bool,
    pub neutral_swaps: usize,
    pub b3_variant: B3Variant,
}

impl Default for SolveConfig {
    fn default() -> Self {
        SolveConfig {
            seed: 0,
            budget: None,
            restarts: 8,
            oracle_limit: DEFAULT_ORACLE_LIMIT,
            use_oracle: true,
            neutral_swaps: 0,
            b3_variant: B3Variant::default(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Found,
    #[serde(rename = "none")]
    NoneExists,
    Unknown,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SolveStats {
    pub moves: usize,
    pub restarts: usize,
    pub oracle_used: bool,
    pub local_search_found: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolveOutcome {
    pub status: Status,
    pub partition: Option<Partition>,
    pub omega: Option<i64>,
    pub stats: SolveStats,
    pub hypothesis: HypothesisReport,
    /// Moves of the local search that produced the partition.
    pub trace: Vec<Move>,
    /// Main(i) or Main(ii) holds and yet no partition exists.
    pub theorem_violation: bool,
}

/// Turns a feasible pair into a partition when that is certain to work.
fn pair_to_partition(
    g: &Graph,
    d: &DemandPair,
    degree_ok: bool,
    a_set: &VertexSet,
    b_set: &VertexSet,
) -> Result<Option<Partition>> {
    if a_set.union(b_set) == g.vertices() {
        return Partition::new(a_set.clone(), b_set.clone()).map(Some);
    }
    if degree_ok {
        return extend_pair_to_partition(g, d, a_set, b_set).map(Some);
    }
    Ok(None)
}

pub fn solve(g: &Graph, d: &DemandPair, kind: PatternKind, cfg: &SolveConfig) -> Result<SolveOutcome> {
    let n = g.n();
    if n < 2 {
        return Err(Error::TooSmall { n, min: 2 });
    }
    d.check_len(n)?;
    let classification = classify_with(g, kind, cfg.b3_variant)?;
    let h = &classification.h;
    let hypothesis = hypothesis_report_with(g, d, cfg.b3_variant)?;
    let degree_ok = (0..n).all(|u| g.degree(u) as u64 >= d.a(u) + d.b(u));
    let opts = SearchOptions {
        budget: cfg.budget.unwrap_or_else(|| default_budget(g, d)),
        neutral_swaps: cfg.neutral_swaps,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut stats = SolveStats::default();

    let mut found: Option<(Partition, Vec<Move>)> = None;
    for attempt in 0..=cfg.restarts {
        let init = if attempt == 0 {
            degenerate_init(g, d, h, &mut rng)?
        } else {
            stats.restarts += 1;
            random_partition(n, &mut rng)
        };
        let state = local_search(g, d, h, init, &opts);
        stats.moves += state.moves();
        if let Some((a_set, b_set)) = &state.pair {
            if let Some(p) = pair_to_partition(g, d, degree_ok, a_set, b_set)? {
                stats.local_search_found = true;
                found = Some((p, state.trace));
                break;
            }
        }
    }

    if found.is_none() && cfg.use_oracle && n <= cfg.oracle_limit.min(MAX_ORACLE_LIMIT) {
        stats.oracle_used = true;
        match exhaustive_oracle(g, d, cfg.oracle_limit)? {
            Some(p) => found = Some((p, Vec::new())),
            None => {
                let theorem_violation = hypothesis.main_holds();
                if theorem_violation {
                    log::error!(
                        "COUNTEREXAMPLE: hypotheses of the main theorem hold but no feasible partition exists ({g:?})"
                    );
                }
                return Ok(SolveOutcome {
                    status: Status::NoneExists,
                    partition: None,
                    omega: None,
                    stats,
                    hypothesis,
                    trace: Vec::new(),
                    theorem_violation,
                });
            }
        }
    }

    match found {
        Some((p, trace)) => {
            if !p.both_nonempty() || !is_feasible_partition(g, &p, d)? {
                return Err(Error::InternalInvariant(format!("solver produced infeasible {p:?}")));
            }
            let omega = weight(g, d, &p)?;
            Ok(SolveOutcome {
                status: Status::Found,
                partition: Some(p),
                omega: Some(omega),
                stats,
                hypothesis,
                trace,
                theorem_violation: false,
            })
        }
        None => Ok(SolveOutcome {
            status: Status::Unknown,
            partition: None,
            omega: None,
            stats,
            hypothesis,
            trace: Vec::new(),
            theorem_violation: false,
        }),
    }
}
