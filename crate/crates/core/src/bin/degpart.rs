use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use degpart_core::io::{
    read_instance, replay_config, run_campaign, serialize_outcome, serialize_report, CampaignConfig, CampaignReport,
    Format, Instance, PlantVariant, Weaken,
};
use degpart_core::patterns::{classify_with, hypothesis_report_with, s1_vertices};
use degpart_core::solver::{exhaustive_oracle, DEFAULT_ORACLE_LIMIT};
use degpart_core::{B3Variant, Error, PatternKind, SolveConfig, Status};

const EXIT_FOUND: u8 = 0;
const EXIT_NONE: u8 = 1;
const EXIT_UNKNOWN: u8 = 2;
const EXIT_INPUT: u8 = 3;
const EXIT_VIOLATION: u8 = 4;

#[derive(Parser)]
#[command(name = "degpart", version, about = "Degree-constrained vertex bipartitions")]
struct Cli {
    /// Demands for vertices without a `d` line.
    #[arg(long, num_args = 2, value_names = ["A", "B"], global = true)]
    demands: Option<Vec<u64>>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the T1 set of a classification, or S1.
    Classify {
        #[arg(long, value_parser = parse_kind)]
        pattern: PatternKind,
        #[arg(long, default_value = "loose", value_parser = parse_b3_variant)]
        b3_variant: B3Variant,
        #[arg(long)]
        json: bool,
        file: PathBuf,
    },
    /// Report which theorem hypotheses an instance satisfies.
    Check {
        #[arg(long, default_value = "loose", value_parser = parse_b3_variant)]
        b3_variant: B3Variant,
        #[arg(long)]
        json: bool,
        file: PathBuf,
    },
    /// Search for a feasible partition.
    Solve(SolveArgs),
    /// Decide existence by exhaustive enumeration.
    Oracle {
        #[arg(long, default_value_t = DEFAULT_ORACLE_LIMIT)]
        oracle_limit: usize,
        #[arg(long)]
        json: bool,
        file: PathBuf,
    },
    /// Plant hypothesis-satisfying demands on random graphs and solve them.
    Verify(CampaignArgs),
    /// Like verify with a weakened hypothesis; collects non-partitionable
    /// instances.
    Mine {
        #[arg(long, value_parser = parse_weaken)]
        weaken: Weaken,
        #[command(flatten)]
        campaign: CampaignArgs,
    },
}

#[derive(Args)]
struct SolveArgs {
    #[arg(required_unless_present = "replay", conflicts_with = "replay")]
    file: Option<PathBuf>,
    /// Re-run a dumped campaign instance with its recorded pattern and seed.
    #[arg(long)]
    replay: Option<PathBuf>,
    #[arg(long, value_parser = parse_kind)]
    pattern: Option<PatternKind>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    budget: Option<usize>,
    #[arg(long)]
    oracle_limit: Option<usize>,
    #[arg(long, default_value_t = 0)]
    allow_neutral_swaps: usize,
    #[arg(long, value_parser = parse_b3_variant)]
    b3_variant: Option<B3Variant>,
    #[arg(long)]
    restarts: Option<usize>,
    #[arg(long)]
    no_oracle: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct CampaignArgs {
    #[arg(long, default_value_t = 5)]
    n_min: usize,
    #[arg(long, default_value_t = 10)]
    n_max: usize,
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    #[arg(long, default_value_t = 200)]
    count: usize,
    #[arg(long, default_value = "main_i", value_parser = parse_variant)]
    variant: PlantVariant,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Plant `a + b` below the degree budget instead of at it.
    #[arg(long)]
    slack: bool,
    #[arg(long, default_value_t = DEFAULT_ORACLE_LIMIT)]
    oracle_limit: usize,
    #[arg(long, default_value_t = 8)]
    restarts: usize,
    #[arg(long, default_value = "loose", value_parser = parse_b3_variant)]
    b3_variant: B3Variant,
    /// Directory for violating and witness instances.
    #[arg(long)]
    dump: Option<PathBuf>,
}

fn parse_kind(s: &str) -> Result<PatternKind, String> {
    PatternKind::parse(s).ok_or_else(|| format!("unknown pattern '{s}' (b3, k23, s1)"))
}

fn parse_b3_variant(s: &str) -> Result<B3Variant, String> {
    B3Variant::parse(s).ok_or_else(|| format!("unknown variant '{s}' (strict, loose)"))
}

fn parse_variant(s: &str) -> Result<PlantVariant, String> {
    PlantVariant::parse(s).ok_or_else(|| format!("unknown variant '{s}' (main_i, main_ii, thm_a)"))
}

fn parse_weaken(s: &str) -> Result<Weaken, String> {
    Weaken::parse(s).ok_or_else(|| format!("unknown weakening '{s}' (drop_h, relax_min)"))
}

fn format(json: bool) -> Format {
    if json {
        Format::Json
    } else {
        Format::Text
    }
}

struct Ctx {
    defaults: Option<(u64, u64)>,
}

impl Ctx {
    fn load(&self, path: &Path) -> Result<Instance, Error> {
        read_instance(path, self.defaults)
    }
}

fn labels(inst: &Instance, ids: impl IntoIterator<Item = usize>) -> Vec<&str> {
    ids.into_iter().map(|u| inst.labels[u].as_str()).collect()
}

fn classify_cmd(ctx: &Ctx, kind: PatternKind, variant: B3Variant, json: bool, file: &Path) -> Result<u8, Error> {
    let inst = ctx.load(file)?;
    let set = match kind {
        PatternKind::CyclePairS1 => s1_vertices(&inst.graph),
        _ => classify_with(&inst.graph, kind, variant)?.t1,
    };
    let key = if kind == PatternKind::CyclePairS1 { "s1" } else { "t1" };
    let members = labels(&inst, set.iter());
    if json {
        println!("{}", serde_json::json!({ "pattern": kind.name(), key: members }));
    } else {
        println!("{key}: {}", members.join(" "));
    }
    Ok(EXIT_FOUND)
}

fn check_cmd(ctx: &Ctx, variant: B3Variant, json: bool, file: &Path) -> Result<u8, Error> {
    let inst = ctx.load(file)?;
    let report = hypothesis_report_with(&inst.graph, &inst.demands, variant)?;
    print!("{}", serialize_report(&report, format(json)));
    if json {
        println!();
    }
    Ok(EXIT_FOUND)
}

fn solve_cmd(ctx: &Ctx, args: &SolveArgs) -> Result<u8, Error> {
    let (inst, mut kind, mut cfg) = match (&args.replay, &args.file) {
        (Some(path), _) => {
            let inst = ctx.load(path)?;
            let (kind, cfg) = replay_config(&inst)?;
            (inst, kind, cfg)
        }
        (None, Some(path)) => (ctx.load(path)?, PatternKind::BookB3, SolveConfig::default()),
        (None, None) => unreachable!("clap requires FILE or --replay"),
    };
    if let Some(k) = args.pattern {
        kind = k;
    }
    if let Some(s) = args.seed {
        cfg.seed = s;
    }
    if let Some(v) = args.b3_variant {
        cfg.b3_variant = v;
    }
    if let Some(l) = args.oracle_limit {
        cfg.oracle_limit = l;
    }
    if let Some(r) = args.restarts {
        cfg.restarts = r;
    }
    cfg.budget = args.budget.or(cfg.budget);
    cfg.neutral_swaps = args.allow_neutral_swaps;
    cfg.use_oracle = !args.no_oracle;

    let outcome = degpart_core::solve(&inst.graph, &inst.demands, kind, &cfg)?;
    print!("{}", serialize_outcome(&outcome, format(args.json)));
    if args.json {
        println!();
    }
    Ok(match outcome.status {
        _ if outcome.theorem_violation => EXIT_VIOLATION,
        Status::Found => EXIT_FOUND,
        Status::NoneExists => EXIT_NONE,
        Status::Unknown => EXIT_UNKNOWN,
    })
}

fn oracle_cmd(ctx: &Ctx, limit: usize, json: bool, file: &Path) -> Result<u8, Error> {
    let inst = ctx.load(file)?;
    let found = exhaustive_oracle(&inst.graph, &inst.demands, limit)?;
    match &found {
        Some(p) if json => println!(
            "{}",
            serde_json::json!({ "status": "found", "x1": p.x1(), "x2": p.x2() })
        ),
        Some(p) => {
            println!("status: found");
            println!("x1: {}", labels(&inst, p.x1().iter()).join(" "));
            println!("x2: {}", labels(&inst, p.x2().iter()).join(" "));
        }
        None if json => println!("{}", serde_json::json!({ "status": "none" })),
        None => println!("status: none"),
    }
    Ok(if found.is_some() { EXIT_FOUND } else { EXIT_NONE })
}

fn campaign_cmd(args: &CampaignArgs, weaken: Option<Weaken>) -> Result<u8, Error> {
    let cfg = CampaignConfig {
        n_min: args.n_min,
        n_max: args.n_max,
        p: args.p,
        count: args.count,
        variant: args.variant,
        tight: !args.slack,
        weaken,
        seed: args.seed,
        oracle_limit: args.oracle_limit,
        restarts: args.restarts,
        b3_variant: args.b3_variant,
        dump_dir: args.dump.clone(),
    };
    let report: CampaignReport = run_campaign(&cfg)?;
    println!("{}", report.to_json());
    for e in &report.errors {
        log::error!("{e}");
    }
    Ok(if report.violations.is_empty() {
        EXIT_FOUND
    } else {
        EXIT_VIOLATION
    })
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT } else { EXIT_FOUND });
        }
    };
    let ctx = Ctx {
        defaults: cli.demands.as_deref().map(|d| (d[0], d[1])),
    };
    let result = match &cli.command {
        Command::Classify {
            pattern,
            b3_variant,
            json,
            file,
        } => classify_cmd(&ctx, *pattern, *b3_variant, *json, file),
        Command::Check { b3_variant, json, file } => check_cmd(&ctx, *b3_variant, *json, file),
        Command::Solve(args) => solve_cmd(&ctx, args),
        Command::Oracle {
            oracle_limit,
            json,
            file,
        } => oracle_cmd(&ctx, *oracle_limit, *json, file),
        Command::Verify(args) => campaign_cmd(args, None),
        Command::Mine { weaken, campaign } => campaign_cmd(campaign, Some(*weaken)),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}
