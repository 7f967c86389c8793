//! Deterministic text and JSON renderings of solver outcomes and reports.

use std::fmt::Write as _;

use serde::Serialize;

use crate::graph::VertexSet;
use crate::patterns::{HypothesisReport, TheoremCheck};
use crate::solver::{Move, SolveOutcome, SolveStats, Status};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(Serialize)]
struct Hypotheses<'a> {
    #[serde(rename = "A")]
    a: &'a TheoremCheck,
    #[serde(rename = "B")]
    b: &'a TheoremCheck,
    #[serde(rename = "C")]
    c: &'a TheoremCheck,
    #[serde(rename = "D")]
    d: &'a TheoremCheck,
    main_i: &'a TheoremCheck,
    main_ii: &'a TheoremCheck,
}

impl<'a> From<&'a HypothesisReport> for Hypotheses<'a> {
    fn from(r: &'a HypothesisReport) -> Self {
        Hypotheses {
            a: &r.thm_a,
            b: &r.thm_b,
            c: &r.thm_c,
            d: &r.thm_d,
            main_i: &r.main_i,
            main_ii: &r.main_ii,
        }
    }
}

#[derive(Serialize)]
struct OutcomeView<'a> {
    status: Status,
    x1: Option<&'a VertexSet>,
    x2: Option<&'a VertexSet>,
    omega: Option<i64>,
    hypotheses: Hypotheses<'a>,
    stats: &'a SolveStats,
    theorem_violation: bool,
    trace: &'a [Move],
}

#[derive(Serialize)]
struct ReportView<'a> {
    n_at_least_five: bool,
    hypotheses: Hypotheses<'a>,
    t1_b3: &'a VertexSet,
    t1_k23: &'a VertexSet,
    s1: &'a VertexSet,
}

fn status_word(s: Status) -> &'static str {
    match s {
        Status::Found => "found",
        Status::NoneExists => "none",
        Status::Unknown => "unknown",
    }
}

fn write_checks(out: &mut String, r: &HypothesisReport) {
    for (name, check) in r.checks() {
        let verdict = if check.holds { "holds" } else { "fails" };
        if check.reason.is_empty() {
            let _ = writeln!(out, "  {name:<8} {verdict}");
        } else {
            let _ = writeln!(out, "  {name:<8} {verdict}: {}", check.reason);
        }
    }
}

pub fn serialize_outcome(o: &SolveOutcome, format: Format) -> String {
    match format {
        Format::Json => {
            let view = OutcomeView {
                status: o.status,
                x1: o.partition.as_ref().map(|p| p.x1()),
                x2: o.partition.as_ref().map(|p| p.x2()),
                omega: o.omega,
                hypotheses: (&o.hypothesis).into(),
                stats: &o.stats,
                theorem_violation: o.theorem_violation,
                trace: &o.trace,
            };
            serde_json::to_string(&view).expect("outcome serializes")
        }
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "status: {}", status_word(o.status));
            if let Some(p) = &o.partition {
                let _ = writeln!(out, "x1: {:?}", p.x1().to_vec());
                let _ = writeln!(out, "x2: {:?}", p.x2().to_vec());
            }
            if let Some(w) = o.omega {
                let _ = writeln!(out, "omega: {w}");
            }
            let s = &o.stats;
            let _ = writeln!(
                out,
                "stats: moves={} restarts={} oracle_used={} local_search_found={}",
                s.moves, s.restarts, s.oracle_used, s.local_search_found
            );
            let _ = writeln!(out, "hypotheses:");
            write_checks(&mut out, &o.hypothesis);
            if o.theorem_violation {
                let _ = writeln!(
                    out,
                    "COUNTEREXAMPLE: main theorem hypotheses hold but no partition exists"
                );
            }
            out
        }
    }
}

pub fn serialize_report(r: &HypothesisReport, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string(&ReportView {
            n_at_least_five: r.n_at_least_five,
            hypotheses: r.into(),
            t1_b3: &r.main_i_classification.t1,
            t1_k23: &r.main_ii_classification.t1,
            s1: &r.s1,
        })
        .expect("report serializes"),
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "n >= 5: {}", r.n_at_least_five);
            let _ = writeln!(out, "T1(b3): {:?}", r.main_i_classification.t1.to_vec());
            let _ = writeln!(out, "T1(k23): {:?}", r.main_ii_classification.t1.to_vec());
            let _ = writeln!(out, "S1: {:?}", r.s1.to_vec());
            write_checks(&mut out, r);
            out
        }
    }
}
