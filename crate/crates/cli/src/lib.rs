//! Verification suites for the `paraquat` library and their reports.

mod suites;

use serde::Serialize;
use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;
use std::time::Instant;

pub const REPORT_VERSION: &str = "1";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("unknown suite '{0}'")]
    UnknownSuite(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("empty report list")]
    EmptyReport,
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// Process exit status for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io(_) => 1,
            _ => 2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Algebra,
    Linalg,
    Forms,
    Curvature,
    Projspace,
    ReduceS1,
    ReducePq,
    All,
}

impl Suite {
    pub const MEMBERS: [Suite; 7] =
        [Suite::Algebra, Suite::Linalg, Suite::Forms, Suite::Curvature, Suite::Projspace, Suite::ReduceS1, Suite::ReducePq];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Algebra => "algebra",
            Suite::Linalg => "linalg",
            Suite::Forms => "forms",
            Suite::Curvature => "curvature",
            Suite::Projspace => "projspace",
            Suite::ReduceS1 => "reduce-s1",
            Suite::ReducePq => "reduce-pq",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        Suite::MEMBERS
            .iter()
            .chain(&[Suite::All])
            .copied()
            .find(|m| m.name() == s)
            .ok_or_else(|| CliError::UnknownSuite(s.to_string()))
    }
}

/// Run configuration shared by all suites.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Config {
    pub seed: u64,
    /// Overrides the floating tolerance of every check; exact checks keep tolerance 0.
    pub tol: Option<f64>,
    pub samples: usize,
    /// Module rank.
    pub n: usize,
    pub p: u64,
    pub q: u64,
    pub xi: [f64; 3],
    /// Force rational arithmetic where a suite offers both modes.
    pub exact: bool,
}

impl Default for Config {
    fn default() -> Self {
        Self { seed: 0, tol: None, samples: 100, n: 2, p: 1, q: 2, xi: [-1.0, 0.0, 0.0], exact: false }
    }
}

impl Config {
    pub fn validate(&self, suite: Suite) -> Result<(), CliError> {
        if self.samples == 0 {
            return Err(CliError::InvalidConfig("samples must be positive".into()));
        }
        if let Some(t) = self.tol
            && !(t.is_finite() && t >= 0.0)
        {
            return Err(CliError::InvalidConfig(format!("tolerance {t} must be finite and non-negative")));
        }
        if !(1..=4).contains(&self.n) {
            return Err(CliError::InvalidConfig(format!("module rank {} outside 1..=4", self.n)));
        }
        if matches!(suite, Suite::ReducePq | Suite::All) {
            paraquat::reduction::validate_pq(self.p, self.q).map_err(|e| CliError::InvalidConfig(e.to_string()))?;
        }
        if matches!(suite, Suite::ReduceS1 | Suite::All) && self.n < 2 {
            return Err(CliError::InvalidConfig("the flat scene needs module rank n >= 2".into()));
        }
        if matches!(suite, Suite::ReduceS1 | Suite::All) && !(self.xi[0] < 0.0 && self.xi[1] == 0.0 && self.xi[2] == 0.0) {
            return Err(CliError::InvalidConfig("the flat scene supports levels xi = (-r, 0, 0) with r > 0".into()));
        }
        Ok(())
    }

    fn tolerance(&self, default: f64) -> f64 {
        if default == 0.0 { 0.0 } else { self.tol.unwrap_or(default) }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub status: Status,
    /// `None` when the check could not be evaluated.
    pub max_residual: Option<f64>,
    pub tolerance: f64,
    pub sample_count: usize,
    pub seed: Option<u64>,
    pub wall_time: f64,
    /// Identity tag from the suite registry.
    pub paper_anchor: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// A check definition: name, identity tag, tolerance, sample count, whether it is randomized.
pub(crate) struct Check {
    pub name: &'static str,
    pub anchor: &'static str,
    pub tolerance: f64,
    pub samples: usize,
    pub randomized: bool,
}

impl Check {
    pub fn new(name: &'static str, anchor: &'static str, tolerance: f64, samples: usize) -> Self {
        Self { name, anchor, tolerance, samples, randomized: true }
    }

    pub fn fixed(name: &'static str, anchor: &'static str, tolerance: f64) -> Self {
        Self { name, anchor, tolerance, samples: 1, randomized: false }
    }

    /// Runs `body`, which returns the largest residual.
    pub fn run(self, config: &Config, body: impl FnOnce() -> paraquat::Result<f64>) -> CheckReport {
        let tolerance = config.tolerance(self.tolerance);
        let start = Instant::now();
        let outcome = body();
        let wall_time = start.elapsed().as_secs_f64();
        let (status, max_residual, message) = match outcome {
            Ok(r) if r <= tolerance => (Status::Pass, Some(r), None),
            Ok(r) => (Status::Fail, Some(r), None),
            Err(e) => (Status::Error, None, Some(e.to_string())),
        };
        CheckReport {
            name: self.name.to_string(),
            status,
            max_residual,
            tolerance,
            sample_count: self.samples,
            seed: self.randomized.then_some(config.seed),
            wall_time,
            paper_anchor: self.anchor.to_string(),
            message,
        }
    }
}

/// Runs a suite (or all of them); reports are sorted by check name.
pub fn run_suite(suite: Suite, config: &Config) -> Result<Vec<CheckReport>, CliError> {
    config.validate(suite)?;
    let selected: Vec<Suite> = if suite == Suite::All { Suite::MEMBERS.to_vec() } else { vec![suite] };
    let mut reports: Vec<CheckReport> = selected.into_iter().flat_map(|s| suites::run(s, config)).collect();
    reports.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(reports)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

impl FromStr for Format {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "json" => Ok(Format::Json),
            "text" => Ok(Format::Text),
            _ => Err(CliError::InvalidConfig(format!("unknown format '{s}'"))),
        }
    }
}

#[derive(Serialize)]
struct Report<'a> {
    version: &'static str,
    suite: &'static str,
    config: &'a Config,
    checks: &'a [CheckReport],
}

pub fn render_report(reports: &[CheckReport], suite: Suite, config: &Config, format: Format) -> Result<String, CliError> {
    if reports.is_empty() {
        return Err(CliError::EmptyReport);
    }
    Ok(match format {
        Format::Json => {
            let report = Report { version: REPORT_VERSION, suite: suite.name(), config, checks: reports };
            let mut s = serde_json::to_string_pretty(&report).expect("report is serializable");
            s.push('\n');
            s
        }
        Format::Text => {
            let width = reports.iter().map(|r| r.name.len()).max().unwrap_or(4).max(5);
            let mut s = format!("{:<width$}  {:<6}  {:>12}  {:>10}  {:>8}  {:>9}  anchor\n", "check", "status", "residual", "tolerance", "samples", "time[s]");
            for r in reports {
                let status = match r.status {
                    Status::Pass => "pass",
                    Status::Fail => "FAIL",
                    Status::Error => "ERROR",
                };
                let res = r.max_residual.map_or("-".to_string(), |v| format!("{v:.3e}"));
                writeln!(
                    s,
                    "{:<width$}  {:<6}  {:>12}  {:>10.1e}  {:>8}  {:>9.3}  {}",
                    r.name, status, res, r.tolerance, r.sample_count, r.wall_time, r.paper_anchor
                )
                .unwrap();
                if let Some(m) = &r.message {
                    writeln!(s, "    {m}").unwrap();
                }
            }
            s
        }
    })
}

/// Writes the rendered report to `out`, or to stdout when `out` is `None`.
pub fn emit_report(reports: &[CheckReport], suite: Suite, config: &Config, format: Format, out: Option<&Path>) -> Result<(), CliError> {
    let text = render_report(reports, suite, config, format)?;
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

/// Exit status for a finished run: 0 when every check passes, 1 otherwise.
pub fn exit_status(reports: &[CheckReport]) -> i32 {
    if reports.iter().all(CheckReport::passed) { 0 } else { 1 }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn report(name: &str, status: Status) -> CheckReport {
        CheckReport {
            name: name.into(),
            status,
            max_residual: Some(0.0),
            tolerance: 0.0,
            sample_count: 1,
            seed: Some(0),
            wall_time: 0.0,
            paper_anchor: "tag".into(),
            message: None,
        }
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::MEMBERS.iter().chain(&[Suite::All]) {
            assert_eq!(s.name().parse::<Suite>().unwrap(), *s);
        }
        assert!(matches!("nope".parse::<Suite>(), Err(CliError::UnknownSuite(_))));
    }

    #[test]
    fn pq_config_is_validated() {
        let bad = Config { p: 2, q: 4, ..Config::default() };
        let err = run_suite(Suite::ReducePq, &bad).unwrap_err();
        assert!(matches!(err, CliError::InvalidConfig(_)));
        assert_eq!(err.exit_code(), 2);
        // other suites ignore p and q
        assert!(bad.validate(Suite::Algebra).is_ok());
        let same = Config { p: 3, q: 3, ..Config::default() };
        assert!(run_suite(Suite::ReducePq, &same).is_err());
    }

    #[test]
    fn empty_report_is_rejected() {
        let c = Config::default();
        assert!(matches!(render_report(&[], Suite::Algebra, &c, Format::Json), Err(CliError::EmptyReport)));
    }

    #[test]
    fn json_schema() {
        let c = Config::default();
        let text = render_report(&[report("a.b", Status::Pass)], Suite::Algebra, &c, Format::Json).unwrap();
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["version"], "1");
        assert_eq!(v["checks"][0]["status"], "pass");
        for key in ["name", "status", "max_residual", "tolerance", "sample_count", "seed", "wall_time", "paper_anchor"] {
            assert!(v["checks"][0].get(key).is_some(), "{key}");
        }
        assert_eq!(v["config"]["samples"], 100);
    }

    #[test]
    fn exit_status_reflects_failures() {
        let pass = report("a", Status::Pass);
        assert_eq!(exit_status(std::slice::from_ref(&pass)), 0);
        assert_eq!(exit_status(&[pass.clone(), report("b", Status::Fail)]), 1);
        assert_eq!(exit_status(&[pass, report("c", Status::Error)]), 1);
    }

    #[test]
    fn status_follows_tolerance() {
        let c = Config::default();
        assert_eq!(Check::fixed("x", "t", 1e-9).run(&c, || Ok(1e-10)).status, Status::Pass);
        assert_eq!(Check::fixed("x", "t", 1e-9).run(&c, || Ok(1e-8)).status, Status::Fail);
        let e = Check::fixed("x", "t", 1e-9).run(&c, || Err(paraquat::PqError::NoConvergence));
        assert_eq!(e.status, Status::Error);
        assert!(e.max_residual.is_none());
        // exact checks ignore the tolerance override
        let loose = Config { tol: Some(1.0), ..Config::default() };
        assert_eq!(Check::fixed("x", "t", 0.0).run(&loose, || Ok(0.5)).status, Status::Fail);
        assert_eq!(Check::fixed("x", "t", 1e-9).run(&loose, || Ok(0.5)).status, Status::Pass);
    }

    #[test]
    fn reports_are_sorted_and_seeded() {
        let c = Config { samples: 3, ..Config::default() };
        let r = run_suite(Suite::Algebra, &c).unwrap();
        assert!(r.windows(2).all(|w| w[0].name < w[1].name));
        assert!(r.iter().filter(|x| x.sample_count > 1).all(|x| x.seed == Some(0)));
        assert!(r.iter().all(CheckReport::passed));
    }
}
