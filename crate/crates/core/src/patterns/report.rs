//! Per-theorem hypothesis checks for a graph with demands.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::feasibility::{DemandPair, HVector};
use crate::graph::{Graph, VertexSet};

use super::{classify_with, s1_vertices, B3Variant, Classification, PatternKind};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremCheck {
    pub holds: bool,
    #[serde(rename = "failing")]
    pub failing_vertices: VertexSet,
    pub reason: String,
}

impl TheoremCheck {
    fn build(n: usize, per_vertex: impl Fn(usize) -> bool, per_vertex_reason: &str) -> Builder {
        let mut failing = VertexSet::empty(n);
        for u in (0..n).filter(|&u| !per_vertex(u)) {
            failing.insert(u);
        }
        let mut reasons = Vec::new();
        if !failing.is_empty() {
            reasons.push(format!("{per_vertex_reason} fails at {:?}", failing));
        }
        Builder {
            failing,
            reasons,
            structural_ok: true,
        }
    }
}

struct Builder {
    failing: VertexSet,
    reasons: Vec<String>,
    structural_ok: bool,
}

impl Builder {
    fn require(mut self, ok: bool, reason: &str) -> Self {
        if !ok {
            self.structural_ok = false;
            self.reasons.push(reason.to_owned());
        }
        self
    }

    /// Structural condition violated by the vertices in `offenders`.
    fn forbid(mut self, offenders: &VertexSet, reason: &str) -> Self {
        if !offenders.is_empty() {
            self.failing = self.failing.union(offenders);
            self = self.require(false, reason);
        }
        self
    }

    fn finish(self) -> TheoremCheck {
        TheoremCheck {
            holds: self.structural_ok && self.failing.is_empty(),
            failing_vertices: self.failing,
            reason: self.reasons.join("; "),
        }
    }
}

/// Which of the known sufficient conditions for an (a,b)-feasible partition
/// this instance satisfies.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HypothesisReport {
    pub n_at_least_five: bool,
    /// `d >= a + b + 1` everywhere.
    pub thm_a: TheoremCheck,
    /// `K_{2,3}`-free, `a, b >= 1`, `d >= a + b`.
    pub thm_b: TheoremCheck,
    /// At least five vertices, book-free, `d >= a + b`.
    pub thm_c: TheoremCheck,
    /// `d >= a + b - 1 + 2h` and `min(a, b) >= 2(1 - h)` with `h` the
    /// indicator of `S1`.
    pub thm_d: TheoremCheck,
    /// `d >= a + b + h`, `min(a, b) >= 1 - h`, `h` from the book.
    pub main_i: TheoremCheck,
    /// `d >= a + b + h`, `min(a, b) >= 2 - h`, `h` from `K_{2,3}`.
    pub main_ii: TheoremCheck,
    pub main_i_classification: Classification,
    pub main_ii_classification: Classification,
    pub s1: VertexSet,
}

impl HypothesisReport {
    /// Main(i) or Main(ii) holds.
    pub fn main_holds(&self) -> bool {
        self.main_i.holds || self.main_ii.holds
    }

    pub fn checks(&self) -> [(&'static str, &TheoremCheck); 6] {
        [
            ("A", &self.thm_a),
            ("B", &self.thm_b),
            ("C", &self.thm_c),
            ("D", &self.thm_d),
            ("main_i", &self.main_i),
            ("main_ii", &self.main_ii),
        ]
    }
}

pub fn hypothesis_report(g: &Graph, d: &DemandPair) -> Result<HypothesisReport> {
    hypothesis_report_with(g, d, B3Variant::default())
}

pub fn hypothesis_report_with(g: &Graph, d: &DemandPair, variant: B3Variant) -> Result<HypothesisReport> {
    let n = g.n();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    d.check_len(n)?;
    let deg = |u: usize| g.degree(u) as i64;
    let a = |u: usize| d.a(u) as i64;
    let b = |u: usize| d.b(u) as i64;
    let min_ab = |u: usize| a(u).min(b(u));
    let n5 = n >= 5;
    const SMALL: &str = "n < 5";

    let book = classify_with(g, PatternKind::BookB3, variant)?;
    let k23 = classify_with(g, PatternKind::K23, variant)?;
    let s1 = s1_vertices(g);
    let h_of = |h: &HVector, u: usize| h.get(u) as i64;

    let thm_a = TheoremCheck::build(n, |u| deg(u) > a(u) + b(u), "d >= a + b + 1").finish();

    let thm_b = TheoremCheck::build(
        n,
        |u| a(u) >= 1 && b(u) >= 1 && deg(u) >= a(u) + b(u),
        "a, b >= 1 and d >= a + b",
    )
    .forbid(&k23.t1, "graph contains K_{2,3}")
    .finish();

    let thm_c = TheoremCheck::build(n, |u| deg(u) >= a(u) + b(u), "d >= a + b")
        .require(n5, SMALL)
        .forbid(
            &book.t1,
            "graph contains K4 - e with a vertex joined to two of its vertices",
        )
        .finish();

    let s1_h = HVector::from_set(&s1);
    let thm_d = TheoremCheck::build(
        n,
        |u| {
            let h = h_of(&s1_h, u);
            deg(u) >= a(u) + b(u) - 1 + 2 * h && min_ab(u) >= 2 * (1 - h)
        },
        "d >= a + b - 1 + 2h and min(a, b) >= 2(1 - h) over S0/S1",
    )
    .finish();

    let main_i = TheoremCheck::build(
        n,
        |u| {
            let h = h_of(&book.h, u);
            deg(u) >= a(u) + b(u) + h && min_ab(u) >= 1 - h
        },
        "d >= a + b + h and min(a, b) >= 1 - h",
    )
    .require(n5, SMALL)
    .finish();

    let main_ii = TheoremCheck::build(
        n,
        |u| {
            let h = h_of(&k23.h, u);
            deg(u) >= a(u) + b(u) + h && min_ab(u) >= 2 - h
        },
        "d >= a + b + h and min(a, b) >= 2 - h",
    )
    .require(n5, SMALL)
    .finish();

    Ok(HypothesisReport {
        n_at_least_five: n5,
        thm_a,
        thm_b,
        thm_c,
        thm_d,
        main_i,
        main_ii,
        main_i_classification: book,
        main_ii_classification: k23,
        s1,
    })
}
