use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::ValueEnum;
use overring_core::semigroup::SemigroupSpec;
use overring_core::{AffineSemigroup, Exp, FinitePoset};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum CommandKind {
    Poset,
    Xcal,
    Colon,
    Vclosure,
    Radical,
    Tspec,
    QrCriterion,
    Cor45,
    Pit,
    Prop58,
    Lemma55,
    Scal,
}

impl CommandKind {
    pub fn name(self) -> &'static str {
        match self {
            CommandKind::Poset => "poset",
            CommandKind::Xcal => "xcal",
            CommandKind::Colon => "colon",
            CommandKind::Vclosure => "vclosure",
            CommandKind::Radical => "radical",
            CommandKind::Tspec => "tspec",
            CommandKind::QrCriterion => "qr-criterion",
            CommandKind::Cor45 => "cor45",
            CommandKind::Pit => "pit",
            CommandKind::Prop58 => "prop58",
            CommandKind::Lemma55 => "lemma55",
            CommandKind::Scal => "scal",
        }
    }
}

impl fmt::Display for CommandKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One command with its arguments, as given on the command line or in a
/// query file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Query {
    pub cmd: CommandKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x: Option<Exp>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ideal: Option<Vec<Exp>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<Vec<String>>,
    #[serde(default, rename = "box", skip_serializing_if = "Option::is_none")]
    pub radius: Option<i64>,
}

impl Query {
    pub fn new(cmd: CommandKind) -> Self {
        Query {
            cmd,
            x: None,
            ideal: None,
            delta: None,
            lambda: None,
            radius: None,
        }
    }
}

/// A loaded instance.
#[derive(Clone, Debug)]
pub enum Instance {
    Poset { source: String, poset: FinitePoset },
    Semigroup { source: String, semigroup: AffineSemigroup },
    Zn(u64),
}

impl Instance {
    /// Semigroup JSON for `.json` files, poset text otherwise.
    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
        let source = path
            .file_name()
            .map(|n| n.to_string_lossy().into_owned())
            .unwrap_or_default();
        if path.extension().is_some_and(|e| e == "json") {
            let semigroup = AffineSemigroup::from_json(&text).with_context(|| format!("in {}", path.display()))?;
            Ok(Instance::Semigroup { source, semigroup })
        } else {
            let poset = FinitePoset::parse(&text).with_context(|| format!("in {}", path.display()))?;
            Ok(Instance::Poset { source, poset })
        }
    }

    pub fn zn(n: u64) -> Result<Self> {
        if n < 2 {
            bail!("modulus must be at least 2, got {n}");
        }
        Ok(Instance::Zn(n))
    }

    /// Description embedded in every report.
    pub fn describe(&self) -> Value {
        match self {
            Instance::Poset { source, poset } => json!({
                "kind": "poset",
                "source": source,
                "points": poset.labels(),
            }),
            Instance::Semigroup { source, semigroup } => json!({
                "kind": "semigroup",
                "source": source,
                "spec": semigroup.spec(),
            }),
            Instance::Zn(n) => json!({ "kind": "zn", "n": n }),
        }
    }
}

/// Instance descriptor inside a config file.
#[derive(Clone, Debug, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
enum InstanceSpec {
    PosetFile(PathBuf),
    SemigroupFile(PathBuf),
    Semigroup(SemigroupSpec),
    Zn(u64),
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    instance: InstanceSpec,
    commands: Vec<Query>,
    #[serde(default)]
    out: Option<PathBuf>,
    #[serde(default)]
    dot: bool,
    #[serde(default, rename = "box")]
    radius: Option<i64>,
}

/// Everything a run needs.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub instance: Instance,
    pub queries: Vec<Query>,
    pub out: PathBuf,
    pub dot: bool,
    /// Applied to every query without its own `box`.
    pub radius: Option<i64>,
}

impl RunConfig {
    /// Reads a config file; relative paths resolve against its directory.
    pub fn from_file(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
        let file: ConfigFile =
            serde_json::from_str(&text).with_context(|| format!("malformed config {}", path.display()))?;
        let dir = path.parent().unwrap_or(Path::new("."));
        let instance = match file.instance {
            InstanceSpec::PosetFile(p) | InstanceSpec::SemigroupFile(p) => Instance::load(&dir.join(p))?,
            InstanceSpec::Semigroup(spec) => Instance::Semigroup {
                source: path
                    .file_name()
                    .map(|n| n.to_string_lossy().into_owned())
                    .unwrap_or_default(),
                semigroup: AffineSemigroup::from_spec(&spec)?,
            },
            InstanceSpec::Zn(n) => Instance::zn(n)?,
        };
        let config = RunConfig {
            instance,
            queries: file.commands,
            out: dir.join(file.out.unwrap_or_else(|| PathBuf::from("reports"))),
            dot: file.dot,
            radius: file.radius,
        };
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<()> {
        if self.queries.is_empty() {
            bail!("no commands given");
        }
        if let Some(r) = self.radius {
            if r <= 0 {
                bail!("box override must be positive, got {r}");
            }
        }
        for q in &self.queries {
            if let Some(r) = q.radius {
                if r <= 0 {
                    bail!("{}: box must be positive, got {r}", q.cmd);
                }
            }
        }
        Ok(())
    }
}

/// Reads a JSON list of queries.
pub fn load_queries(path: &Path) -> Result<Vec<Query>> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("malformed query file {}", path.display()))
}

/// Splits on commas outside parentheses and braces.
pub fn split_top_level(s: &str) -> Vec<String> {
    let body = s.trim();
    let body = body.strip_prefix('{').and_then(|b| b.strip_suffix('}')).unwrap_or(body);
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for c in body.chars() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            _ => {}
        }
        if c == ',' && depth == 0 {
            out.push(cur.trim().to_string());
            cur.clear();
        } else {
            cur.push(c);
        }
    }
    if !cur.trim().is_empty() {
        out.push(cur.trim().to_string());
    }
    out
}

/// Parses `"(1,0),(0,2)"`, `"1,0;0,2"` or `"3;5"`.
pub fn parse_exp_list(s: &str) -> Result<Vec<Exp>> {
    let parts = if s.contains('(') {
        split_top_level(s)
    } else {
        s.split(';')
            .map(|p| p.trim().to_string())
            .filter(|p| !p.is_empty())
            .collect()
    };
    if parts.is_empty() {
        bail!("empty exponent list `{s}`");
    }
    parts.iter().map(|p| Ok(Exp::parse(p)?)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splits_labels_with_tuples() {
        assert_eq!(split_top_level("P_(1,2),P_x"), ["P_(1,2)", "P_x"]);
        assert_eq!(split_top_level("{P_x, P_y}"), ["P_x", "P_y"]);
        assert!(split_top_level("").is_empty());
    }

    #[test]
    fn exponent_lists() {
        assert_eq!(parse_exp_list("(1,0),(0,2)").unwrap(), [Exp::d2(1, 0), Exp::d2(0, 2)]);
        assert_eq!(parse_exp_list("1,0;0,2").unwrap(), [Exp::d2(1, 0), Exp::d2(0, 2)]);
        assert_eq!(parse_exp_list("3;5").unwrap(), [Exp::d1(3), Exp::d1(5)]);
        assert!(parse_exp_list("a;b").is_err());
        assert!(parse_exp_list(" ").is_err());
    }

    #[test]
    fn query_json() {
        let q: Query = serde_json::from_str(r#"{"cmd": "qr-criterion", "x": [1, 0], "box": 4}"#).unwrap();
        assert_eq!(q.cmd, CommandKind::QrCriterion);
        assert_eq!(q.x, Some(Exp::d2(1, 0)));
        assert_eq!(q.radius, Some(4));
        assert!(serde_json::from_str::<Query>(r#"{"cmd": "colon", "y": 1}"#).is_err());
        assert!(serde_json::from_str::<Query>(r#"{"cmd": "nope"}"#).is_err());
    }

    #[test]
    fn box_overrides_must_be_positive() {
        let mut cfg = RunConfig {
            instance: Instance::zn(12).unwrap(),
            queries: vec![Query::new(CommandKind::Scal)],
            out: PathBuf::from("out"),
            dot: false,
            radius: Some(0),
        };
        assert!(cfg.validate().is_err());
        cfg.radius = None;
        assert!(cfg.validate().is_ok());
        cfg.queries.clear();
        assert!(cfg.validate().is_err());
        assert!(Instance::zn(1).is_err());
    }
}
