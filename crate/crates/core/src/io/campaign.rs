//! Verification campaigns: generate, plant, check, solve, aggregate.
//!
//! Instances run in parallel; results are merged in instance order, so a
//! report depends only on its configuration.

use std::path::PathBuf;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::patterns::{B3Variant, HypothesisReport, PatternKind};
use crate::solver::{solve, SolveConfig, Status, DEFAULT_ORACLE_LIMIT, MAX_ORACLE_LIMIT};

use super::generate::{generate_graph, plant_demands, PlantSpec, PlantVariant, Weaken};
use super::instance::{serialize_instance, Instance};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CampaignConfig {
    pub n_min: usize,
    pub n_max: usize,
    pub p: f64,
    pub count: usize,
    pub variant: PlantVariant,
    pub tight: bool,
    pub weaken: Option<Weaken>,
    pub seed: u64,
    pub oracle_limit: usize,
    pub restarts: usize,
    pub b3_variant: B3Variant,
    /// Where violating and witness instances are written, if anywhere.
    #[serde(skip)]
    pub dump_dir: Option<PathBuf>,
}

impl Default for CampaignConfig {
    fn default() -> Self {
        CampaignConfig {
            n_min: 5,
            n_max: 10,
            p: 0.5,
            count: 200,
            variant: PlantVariant::MainI,
            tight: true,
            weaken: None,
            seed: 0,
            oracle_limit: DEFAULT_ORACLE_LIMIT,
            restarts: 8,
            b3_variant: B3Variant::default(),
            dump_dir: None,
        }
    }
}

impl CampaignConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n_min > self.n_max || self.n_min < 2 {
            return Err(Error::Config(format!(
                "need 2 <= n_min <= n_max, got {}..={}",
                self.n_min, self.n_max
            )));
        }
        if !(0.0..=1.0).contains(&self.p) {
            return Err(Error::Config(format!("edge probability {} outside [0, 1]", self.p)));
        }
        if self.n_max > self.oracle_limit.min(MAX_ORACLE_LIMIT) {
            return Err(Error::Config(format!(
                "n_max {} exceeds the oracle limit {}; verification needs ground truth",
                self.n_max, self.oracle_limit
            )));
        }
        Ok(())
    }

    pub fn kind(&self) -> PatternKind {
        self.variant.natural_kind()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InstanceRecord {
    pub index: usize,
    pub n: usize,
    pub m: usize,
    /// Instance file text, replayable with `solve --replay`.
    pub instance: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CampaignReport {
    pub config: CampaignConfig,
    pub instances: usize,
    pub unplantable: usize,
    pub errors: Vec<String>,
    pub hypothesis_holds_count: usize,
    pub found_count: usize,
    pub none_count: usize,
    pub unknown_count: usize,
    pub local_search_found_count: usize,
    /// Share of found partitions that local search produced without the
    /// oracle.
    pub local_search_only_success_rate: f64,
    pub violations: Vec<InstanceRecord>,
    pub tightness_witnesses: Vec<InstanceRecord>,
}

impl CampaignReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

enum Verdict {
    Unplantable,
    Failed(String),
    Solved {
        holds: bool,
        status: Status,
        local_search: bool,
        violation: bool,
        record: InstanceRecord,
    },
}

fn targeted(report: &HypothesisReport, variant: PlantVariant) -> bool {
    match variant {
        PlantVariant::MainI => report.main_i.holds,
        PlantVariant::MainII => report.main_ii.holds,
        PlantVariant::ThmA => report.thm_a.holds,
    }
}

fn run_one(cfg: &CampaignConfig, index: usize) -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(index as u64);
    let n = rng.gen_range(cfg.n_min..=cfg.n_max);
    let (graph_seed, demand_seed, solve_seed) = (rng.gen(), rng.gen(), rng.gen());
    let result = (|| -> Result<Verdict> {
        let g = generate_graph(n, cfg.p, graph_seed)?;
        let spec = PlantSpec {
            variant: cfg.variant,
            tight: cfg.tight,
            weaken: cfg.weaken,
            b3_variant: cfg.b3_variant,
        };
        let d = match plant_demands(&g, cfg.kind(), spec, demand_seed) {
            Ok(d) => d,
            Err(Error::Unplantable(_)) => return Ok(Verdict::Unplantable),
            Err(e) => return Err(e),
        };
        let solve_cfg = SolveConfig {
            seed: solve_seed,
            restarts: cfg.restarts,
            oracle_limit: cfg.oracle_limit,
            b3_variant: cfg.b3_variant,
            ..SolveConfig::default()
        };
        let outcome = solve(&g, &d, cfg.kind(), &solve_cfg)?;
        let holds = targeted(&outcome.hypothesis, cfg.variant);
        let violation = outcome.status == Status::NoneExists && (holds || outcome.theorem_violation);

        let mut inst = Instance::new(g, d)?;
        inst.meta.insert("b3_variant".into(), cfg.b3_variant.name().into());
        inst.meta.insert("campaign_index".into(), index.to_string());
        inst.meta.insert("pattern".into(), cfg.kind().name().into());
        inst.meta.insert("seed".into(), solve_seed.to_string());
        inst.meta.insert("variant".into(), cfg.variant.name().into());
        if let Some(w) = cfg.weaken {
            inst.meta.insert("weaken".into(), w.name().into());
        }
        let record = InstanceRecord {
            index,
            n: inst.graph.n(),
            m: inst.graph.m(),
            instance: serialize_instance(&inst),
        };
        Ok(Verdict::Solved {
            holds,
            status: outcome.status,
            local_search: outcome.stats.local_search_found,
            violation,
            record,
        })
    })();
    result.unwrap_or_else(|e| Verdict::Failed(format!("instance {index}: {e}")))
}

pub fn run_campaign(cfg: &CampaignConfig) -> Result<CampaignReport> {
    cfg.validate()?;
    let verdicts: Vec<Verdict> = (0..cfg.count).into_par_iter().map(|i| run_one(cfg, i)).collect();

    let mut report = CampaignReport {
        config: cfg.clone(),
        instances: cfg.count,
        unplantable: 0,
        errors: Vec::new(),
        hypothesis_holds_count: 0,
        found_count: 0,
        none_count: 0,
        unknown_count: 0,
        local_search_found_count: 0,
        local_search_only_success_rate: 0.0,
        violations: Vec::new(),
        tightness_witnesses: Vec::new(),
    };
    for v in verdicts {
        match v {
            Verdict::Unplantable => report.unplantable += 1,
            Verdict::Failed(e) => report.errors.push(e),
            Verdict::Solved {
                holds,
                status,
                local_search,
                violation,
                record,
            } => {
                report.hypothesis_holds_count += usize::from(holds);
                match status {
                    Status::Found => report.found_count += 1,
                    Status::NoneExists => report.none_count += 1,
                    Status::Unknown => report.unknown_count += 1,
                }
                report.local_search_found_count += usize::from(local_search);
                if violation {
                    report.violations.push(record);
                } else if status == Status::NoneExists && cfg.weaken.is_some() {
                    report.tightness_witnesses.push(record);
                }
            }
        }
    }
    if report.found_count > 0 {
        report.local_search_only_success_rate = report.local_search_found_count as f64 / report.found_count as f64;
    }
    if let Some(dir) = &cfg.dump_dir {
        dump(dir, "violation", &report.violations)?;
        dump(dir, "witness", &report.tightness_witnesses)?;
    }
    Ok(report)
}

fn dump(dir: &std::path::Path, prefix: &str, records: &[InstanceRecord]) -> Result<()> {
    if records.is_empty() {
        return Ok(());
    }
    std::fs::create_dir_all(dir)?;
    for r in records {
        std::fs::write(dir.join(format!("{prefix}-{:05}.txt", r.index)), &r.instance)?;
    }
    Ok(())
}

/// Unused by campaigns themselves; kept next to them so replays agree with
/// how campaign instances were solved.
pub fn replay_config(inst: &Instance) -> Result<(PatternKind, SolveConfig)> {
    let kind = match inst.meta.get("pattern") {
        Some(p) => PatternKind::parse(p).ok_or_else(|| Error::Config(format!("unknown pattern '{p}'")))?,
        None => PatternKind::BookB3,
    };
    let seed = match inst.meta.get("seed") {
        Some(s) => s.parse().map_err(|_| Error::Config(format!("bad seed '{s}'")))?,
        None => 0,
    };
    let b3_variant = match inst.meta.get("b3_variant") {
        Some(v) => B3Variant::parse(v).ok_or_else(|| Error::Config(format!("unknown b3 variant '{v}'")))?,
        None => B3Variant::default(),
    };
    Ok((
        kind,
        SolveConfig {
            seed,
            b3_variant,
            ..SolveConfig::default()
        },
    ))
}
