//! Seeded random graphs and demand planting.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::feasibility::DemandPair;
use crate::graph::Graph;
use crate::patterns::{classify_with, B3Variant, PatternKind};

/// `G(n, p)`: each pair independently with probability `p`, pairs visited in
/// lexicographic order.
pub fn generate_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Config(format!("edge probability {p} outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, &edges)
}

/// Hypothesis the planted demands must satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PlantVariant {
    /// `d >= a + b + h`, `min(a, b) >= 1 - h` (book classification).
    MainI,
    /// `d >= a + b + h`, `min(a, b) >= 2 - h` (`K_{2,3}` classification).
    MainII,
    /// `d >= a + b + 1`.
    ThmA,
}

impl PlantVariant {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "main_i" => Some(PlantVariant::MainI),
            "main_ii" => Some(PlantVariant::MainII),
            "thm_a" | "thmA" => Some(PlantVariant::ThmA),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            PlantVariant::MainI => "main_i",
            PlantVariant::MainII => "main_ii",
            PlantVariant::ThmA => "thm_a",
        }
    }

    /// Classification that defines `h` for this variant.
    pub fn natural_kind(self) -> PatternKind {
        match self {
            PlantVariant::MainII => PatternKind::K23,
            _ => PatternKind::BookB3,
        }
    }
}

/// Deliberate weakening of a hypothesis, for hunting tightness witnesses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Weaken {
    /// Budget `a + b <= d` instead of `d - h`.
    DropH,
    /// Each `min(a, b)` floor lowered by one.
    RelaxMin,
}

impl Weaken {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "drop_h" => Some(Weaken::DropH),
            "relax_min" => Some(Weaken::RelaxMin),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Weaken::DropH => "drop_h",
            Weaken::RelaxMin => "relax_min",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PlantSpec {
    pub variant: PlantVariant,
    /// `a + b` equals the budget exactly instead of being at most it.
    pub tight: bool,
    pub weaken: Option<Weaken>,
    /// Reading of the book pattern used to compute `h`.
    pub b3_variant: B3Variant,
}

impl PlantSpec {
    pub fn tight(variant: PlantVariant) -> Self {
        PlantSpec {
            variant,
            tight: true,
            weaken: None,
            b3_variant: B3Variant::default(),
        }
    }
}

/// Samples demands satisfying `spec.variant` with `h` from `kind`.
///
/// For each vertex the split `(a, b)` is uniform over pairs with both values
/// at or above the variant's floor and `a + b` equal to (tight) or at most
/// (slack) the degree budget.
pub fn plant_demands(g: &Graph, kind: PatternKind, spec: PlantSpec, seed: u64) -> Result<DemandPair> {
    let h = classify_with(g, kind, spec.b3_variant)?.h;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = g.n();
    let (mut a, mut b) = (Vec::with_capacity(n), Vec::with_capacity(n));
    for u in 0..n {
        let hu = match spec.variant {
            PlantVariant::ThmA => 1,
            _ => h.get(u) as i64,
        };
        let mut floor = match spec.variant {
            PlantVariant::MainI => 1 - hu,
            PlantVariant::MainII => 2 - hu,
            PlantVariant::ThmA => 0,
        };
        let mut budget = g.degree(u) as i64 - hu;
        match spec.weaken {
            Some(Weaken::DropH) => budget = g.degree(u) as i64,
            Some(Weaken::RelaxMin) => floor = (floor - 1).max(0),
            None => {}
        }
        let spare = budget - 2 * floor;
        if spare < 0 {
            return Err(Error::Unplantable(u));
        }
        // surplus s over the floors; in slack mode s = 0..=spare has s + 1 splits
        let surplus = if spec.tight {
            spare
        } else {
            let total = (spare + 1) * (spare + 2) / 2;
            let mut r = rng.gen_range(0..total);
            let mut s = 0;
            while r > s {
                r -= s + 1;
                s += 1;
            }
            s
        };
        let extra_a = rng.gen_range(0..=surplus);
        a.push((floor + extra_a) as u64);
        b.push((floor + surplus - extra_a) as u64);
    }
    DemandPair::new(a, b)
}
