//! Degree-constrained vertex bipartitions.
//!
//! Given a simple graph `G` and demands `a, b: V -> ℤ≥0`, an (a,b)-feasible
//! partition splits `V` into nonempty `A`, `B` with every `u ∈ A` having at
//! least `a(u)` neighbours in `A` and every `u ∈ B` at least `b(u)` in `B`.
//!
//! * [`graph`]: immutable graphs and bitset vertex sets.
//! * [`feasibility`]: peeling cores and the good/meager/nice predicates.
//! * [`patterns`]: `T1`/`T0` classification for the book `B3` and
//!   `K_{2,3}`, the short-cycle set `S1`, and hypothesis reports.
//! * [`solver`]: the weight function, exchange moves, local search and an
//!   exhaustive oracle.
//! * [`io`]: instance files, JSON output, random instances and campaigns.

pub mod error;
pub mod feasibility;
pub mod graph;
pub mod io;
pub mod partition;
pub mod patterns;
pub mod solver;

pub use error::{Error, Result};
pub use feasibility::{DemandPair, HVector, Side, Threshold};
pub use graph::{Graph, VertexSet};
pub use partition::Partition;
pub use patterns::{B3Variant, Classification, HypothesisReport, PatternKind};
pub use solver::{solve, SolveConfig, SolveOutcome, Status};
