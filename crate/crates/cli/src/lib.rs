//! Batch driver behind the `analyze` binary: runs a list of commands on one
//! instance and writes a JSON report per command, plus DOT graphs on request.

mod commands;
pub mod config;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use serde::Serialize;
use serde_json::Value;

pub use commands::Outcome;
pub use config::{load_queries, parse_exp_list, split_top_level, CommandKind, Instance, Query, RunConfig};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Error,
}

/// Body of one report file.
#[derive(Debug, Serialize)]
pub struct Report<'a> {
    pub schema: u32,
    pub index: usize,
    pub command: CommandKind,
    pub instance: &'a Value,
    pub query: &'a Query,
    pub status: Status,
    pub warnings: Vec<String>,
    pub result: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

/// Files written and counts, for the exit status.
#[derive(Debug, Default)]
pub struct RunSummary {
    pub reports: Vec<PathBuf>,
    pub graphs: Vec<PathBuf>,
    pub errors: usize,
    pub warnings: Vec<String>,
}

impl RunSummary {
    pub fn success(&self) -> bool {
        self.errors == 0
    }
}

/// Runs every command in order. Command failures are recorded in their
/// reports; only I/O problems abort the run.
pub fn run(config: &RunConfig) -> Result<RunSummary> {
    config.validate()?;
    fs::create_dir_all(&config.out).with_context(|| format!("cannot create {}", config.out.display()))?;
    let instance = config.instance.describe();
    let mut summary = RunSummary::default();
    for (i, query) in config.queries.iter().enumerate() {
        let index = i + 1;
        let stem = format!("{index:02}-{}", query.cmd);
        let (status, outcome, error) = match commands::execute(&config.instance, query, config.radius) {
            Ok(o) => (Status::Ok, o, None),
            Err(e) => (Status::Error, Outcome::default(), Some(format!("{e:#}"))),
        };
        if status == Status::Error {
            summary.errors += 1;
        }
        summary
            .warnings
            .extend(outcome.warnings.iter().map(|w| format!("{stem}: {w}")));
        let report = Report {
            schema: SCHEMA_VERSION,
            index,
            command: query.cmd,
            instance: &instance,
            query,
            status,
            warnings: outcome.warnings,
            result: outcome.result,
            error,
        };
        let mut body = serde_json::to_string_pretty(&report)?;
        body.push('\n');
        let path = config.out.join(format!("{stem}.json"));
        write_atomic(&path, body.as_bytes())?;
        summary.reports.push(path);
        if let (true, Some(dot)) = (config.dot, outcome.dot) {
            let path = config.out.join(format!("{stem}.dot"));
            write_atomic(&path, dot.as_bytes())?;
            summary.graphs.push(path);
        }
    }
    Ok(summary)
}

/// Writes to a temporary sibling and renames it into place.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let name = path
        .file_name()
        .with_context(|| format!("{} has no file name", path.display()))?;
    let tmp = path.with_file_name(format!(".{}.tmp", name.to_string_lossy()));
    let mut f = fs::File::create(&tmp).with_context(|| format!("cannot create {}", tmp.display()))?;
    f.write_all(bytes)?;
    f.sync_all()?;
    fs::rename(&tmp, path).with_context(|| format!("cannot move {} into place", path.display()))?;
    Ok(())
}
