//! Command-line front end: scenario runs, verification suites, and the
//! M(mu) curve emission.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Deserialize;

use steinshrink::estimators::optimal_c;
use steinshrink::expfam::{FamilyDescriptor, FamilyTag, ParameterVector};
use steinshrink::risk::{
    stein_identity_check, theorem_risk_identity_check, Scenario, SteinFunction,
};
use steinshrink::scenario::{
    build_theta, emit_m_curve, run_scenario, OutputFormat, ScenarioConfig, ScenarioId, ThetaRule,
    DEFAULT_DIMS, DEFAULT_REPLICATIONS,
};
use steinshrink::{estimators, Error};

#[derive(Parser)]
#[command(name = "steinshrink", about = "Shrinkage-estimator risk benchmarks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a benchmark scenario and emit a risk report.
    Run(RunArgs),
    /// Run the Stein-identity and risk-identity verification suites.
    Verify(VerifyArgs),
    /// Emit (mu, M(mu)) pairs on a log grid.
    Mcurve(McurveArgs),
}

#[derive(Args)]
struct RunArgs {
    /// Scenario id, one of A..G.
    #[arg(long)]
    scenario: Option<String>,
    /// Comma-separated dimensions, e.g. 2,10,50,100,500.
    #[arg(long)]
    dims: Option<String>,
    /// Monte Carlo replications per cell.
    #[arg(long)]
    reps: Option<usize>,
    /// Master seed; every replication derives its own substream from it.
    #[arg(long)]
    seed: Option<u64>,
    /// Shrink constant override; defaults to the optimal (d-1)a*.
    #[arg(long)]
    c: Option<f64>,
    /// Output format: csv or markdown.
    #[arg(long)]
    format: Option<String>,
    /// Output path.
    #[arg(long)]
    out: Option<PathBuf>,
    /// TOML config file mirroring the flags; flags win on conflict.
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Replications for the Monte Carlo checks.
    #[arg(long, default_value_t = 100_000)]
    reps: usize,
    #[arg(long, default_value_t = 42)]
    seed: u64,
}

#[derive(Args)]
struct McurveArgs {
    #[arg(long, default_value_t = 0.1)]
    lo: f64,
    #[arg(long, default_value_t = 100.0)]
    hi: f64,
    #[arg(long, default_value_t = 400)]
    steps: usize,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    scenario: Option<String>,
    dims: Option<Vec<usize>>,
    reps: Option<usize>,
    seed: Option<u64>,
    c: Option<f64>,
    format: Option<String>,
    out: Option<PathBuf>,
}

fn parse_dims(s: &str) -> Result<Vec<usize>, Error> {
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| Error::Config(format!("bad dimension {p:?}")))
        })
        .collect()
}

fn cmd_run(args: RunArgs) -> Result<(), Error> {
    let file: FileConfig = match &args.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)?;
            toml::from_str(&text).map_err(|e| Error::Config(format!("config file: {e}")))?
        }
        None => FileConfig::default(),
    };

    let scenario_name = args
        .scenario
        .or(file.scenario)
        .ok_or_else(|| Error::Config("missing --scenario".into()))?;
    let scenario = ScenarioId::parse(&scenario_name)?;

    let dims = match args.dims {
        Some(s) => parse_dims(&s)?,
        None => file.dims.unwrap_or_else(|| DEFAULT_DIMS.to_vec()),
    };
    let cfg = ScenarioConfig {
        scenario,
        dims,
        replications: args.reps.or(file.reps).unwrap_or(DEFAULT_REPLICATIONS),
        master_seed: args.seed.or(file.seed).unwrap_or(42),
        c_override: args.c.or(file.c),
    };
    let format = match args.format.or(file.format) {
        Some(f) => OutputFormat::parse(&f)?,
        None => OutputFormat::Csv,
    };
    let out = args
        .out
        .or(file.out)
        .ok_or_else(|| Error::Config("missing --out".into()))?;

    let table = run_scenario(&cfg)?;
    table.emit(format, &out)?;
    eprintln!(
        "scenario {} written to {} ({} rows)",
        cfg.scenario.label(),
        out.display(),
        table.rows.len()
    );
    Ok(())
}

/// Returns the number of failed checks.
fn cmd_verify(args: VerifyArgs) -> Result<usize, Error> {
    let mut failures = 0;
    let mut report = |name: &str, pass: bool, detail: String| {
        println!("{}: {name} ({detail})", if pass { "PASS" } else { "FAIL" });
        if !pass {
            failures += 1;
        }
    };

    let normal = FamilyDescriptor::new(FamilyTag::NormalIid);
    let r = stein_identity_check(&normal, 1.0, SteinFunction::Identity, args.reps, args.seed)?;
    report(
        "stein identity, normal, g(x)=x",
        r.pass(),
        format!("lhs={:.5} rhs={:.5} se={:.5}", r.lhs, r.rhs, r.se),
    );

    let gamma = FamilyDescriptor::new(FamilyTag::Gamma);
    let r = stein_identity_check(&gamma, 2.0, SteinFunction::Log, args.reps, args.seed)?;
    report(
        "stein identity, gamma, g(x)=ln x",
        r.pass(),
        format!("lhs={:.5} rhs={:.5} se={:.5}", r.lhs, r.rhs, r.se),
    );

    // The identity fails for the untransformed exponential distribution;
    // record the discrepancy without counting it as a failure.
    let expo = FamilyDescriptor::new(FamilyTag::Exponential);
    let r = stein_identity_check(&expo, 1.0, SteinFunction::Identity, args.reps, args.seed)?;
    println!(
        "INFO: stein identity, exponential, g(x)=x: lhs={:.5} rhs={:.5} (expected discrepancy)",
        r.lhs, r.rhs
    );

    for tag in [FamilyTag::NormalIid, FamilyTag::Gamma] {
        for d in [2usize, 5, 10, 50] {
            let theta = match tag {
                FamilyTag::NormalIid => build_theta(&ThetaRule::Linear, d)?,
                _ => ParameterVector::new(vec![1.0; d])?,
            };
            let scenario = Scenario::from_theta("verify", tag, theta)?;
            let astar = estimators::a_star(tag, &scenario.space, d)?;
            let copt = optimal_c(d, astar);
            for (label, c) in [("0.25c*", 0.25 * copt), ("c*", copt), ("1.5c*", 1.5 * copt)] {
                let r = theorem_risk_identity_check(&scenario, c, args.reps, args.seed)?;
                report(
                    &format!("risk identity, {} d={d} c={label}", tag.label()),
                    r.pass(),
                    format!("lhs={:.5} rhs={:.5} se={:.5}", r.lhs, r.rhs, r.se),
                );
            }
        }
    }
    Ok(failures)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Run(args) => cmd_run(args).map(|_| 0),
        Command::Verify(args) => cmd_verify(args),
        Command::Mcurve(args) => {
            emit_m_curve(args.lo, args.hi, args.steps, &args.out).map(|_| 0)
        }
    };
    match outcome {
        Ok(0) => ExitCode::SUCCESS,
        Ok(n) => {
            eprintln!("{n} verification check(s) failed");
            ExitCode::from(3)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
