use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Result};
use clap::Parser;
use overring_cli::{load_queries, parse_exp_list, run, split_top_level, CommandKind, Instance, Query, RunConfig};
use overring_core::Exp;

const EXIT_COMMAND_FAILED: u8 = 1;
const EXIT_BAD_INPUT: u8 = 2;

/// Spectral spaces, semigroup rings and semistar operations, in batch.
#[derive(Parser, Debug)]
#[command(name = "analyze", version)]
struct Cli {
    /// Poset text file, or semigroup JSON (`.json`).
    input: Option<PathBuf>,

    /// Use Z/n as the instance.
    #[arg(long, conflicts_with_all = ["input", "config"])]
    zn: Option<u64>,

    /// Run config file (instance, commands, out, dot, box).
    #[arg(long, conflicts_with_all = ["input", "cmd", "queries"])]
    config: Option<PathBuf>,

    /// Command to run; repeatable.
    #[arg(long, value_enum)]
    cmd: Vec<CommandKind>,

    /// JSON list of queries, run after the --cmd ones.
    #[arg(long)]
    queries: Option<PathBuf>,

    /// Exponent, e.g. "1,0" or "7".
    #[arg(long, allow_hyphen_values = true)]
    x: Option<String>,

    /// Ideal generators, e.g. "(1,0),(0,2)" or "3;5".
    #[arg(long, allow_hyphen_values = true)]
    ideal: Option<String>,

    /// Monomial primes, e.g. "P_x,P_y".
    #[arg(long)]
    delta: Option<String>,

    /// Second prime set for `pit`.
    #[arg(long)]
    lambda: Option<String>,

    /// Box radius override.
    #[arg(long = "box")]
    radius: Option<i64>,

    /// Report directory [default: reports, or the config's `out`].
    #[arg(long)]
    out: Option<PathBuf>,

    /// Also write DOT graphs.
    #[arg(long)]
    dot: bool,
}

fn build_config(cli: &Cli) -> Result<RunConfig> {
    if let Some(path) = &cli.config {
        let mut config = RunConfig::from_file(path)?;
        config.dot |= cli.dot;
        if let Some(out) = &cli.out {
            config.out = out.clone();
        }
        if cli.radius.is_some() {
            config.radius = cli.radius;
        }
        config.validate()?;
        return Ok(config);
    }
    let instance = match (&cli.input, cli.zn) {
        (Some(path), None) => Instance::load(path)?,
        (None, Some(n)) => Instance::zn(n)?,
        _ => bail!("give an input file, --zn N or --config FILE"),
    };
    let x = cli.x.as_deref().map(Exp::parse).transpose()?;
    let ideal = cli.ideal.as_deref().map(parse_exp_list).transpose()?;
    let delta = cli.delta.as_deref().map(split_top_level);
    let lambda = cli.lambda.as_deref().map(split_top_level);
    let mut queries: Vec<Query> = cli
        .cmd
        .iter()
        .map(|&cmd| Query {
            cmd,
            x,
            ideal: ideal.clone(),
            delta: delta.clone(),
            lambda: lambda.clone(),
            radius: None,
        })
        .collect();
    if let Some(path) = &cli.queries {
        queries.extend(load_queries(path)?);
    }
    let config = RunConfig {
        instance,
        queries,
        out: cli.out.clone().unwrap_or_else(|| PathBuf::from("reports")),
        dot: cli.dot,
        radius: cli.radius,
    };
    config.validate()?;
    Ok(config)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = match build_config(&cli) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(EXIT_BAD_INPUT);
        }
    };
    let summary = match run(&config) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(EXIT_BAD_INPUT);
        }
    };
    for w in &summary.warnings {
        eprintln!("warning: {w}");
    }
    for p in summary.reports.iter().chain(&summary.graphs) {
        println!("{}", p.display());
    }
    if summary.success() {
        ExitCode::SUCCESS
    } else {
        eprintln!("{} command(s) failed", summary.errors);
        ExitCode::from(EXIT_COMMAND_FAILED)
    }
}
