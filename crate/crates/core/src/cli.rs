//! The `distgraph` command line.
//!
//! Every command prints one JSON document on stdout. Exit codes: 0 success,
//! 1 invalid input or a witness that fails to verify, 2 undecided within
//! the caps, 3 I/O failure.

use std::ffi::OsString;
use std::path::PathBuf;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::chromatic::{
    chromatic_number_with, min_infeasible_interval, LowerCertificate, SolverCaps,
};
use crate::classify::classify;
use crate::clique::clique_number;
use crate::distance_set::{parse_distances, DistanceSet};
use crate::error::{Error, Result};
use crate::survey::{audit, run_survey, SurveyConfig};
use crate::witness::WitnessRecord;

#[derive(Debug, Parser)]
#[command(
    name = "distgraph",
    version,
    about = "Chromatic and clique numbers of integer distance graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Chromatic number with a periodic coloring and a lower-bound certificate.
    Chi {
        /// Comma-separated distances, e.g. 1,4,5,6,7
        distances: String,
        #[command(flatten)]
        caps: CapArgs,
    },
    /// Clique number with a maximum clique.
    Omega { distances: String },
    /// Which closed-form results apply to the set.
    Classify { distances: String },
    /// Survey every normalized set of one size up to a maximum distance.
    Survey {
        #[arg(long)]
        cardinality: usize,
        #[arg(long)]
        max_distance: u32,
        /// Results file; the checkpoint is written next to it.
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        workers: Option<usize>,
        /// Continue after the last checkpoint instead of starting over.
        #[arg(long)]
        resume: bool,
        /// Re-verify the results file instead of computing it.
        #[arg(long)]
        audit: bool,
        #[command(flatten)]
        caps: CapArgs,
    },
    /// Check witness records, one JSON object per line.
    Verify { file: PathBuf },
}

#[derive(Debug, Args)]
struct CapArgs {
    /// Automaton states per decision.
    #[arg(long)]
    max_states: Option<usize>,
    /// Longest interval tried for lower bounds.
    #[arg(long)]
    max_interval: Option<usize>,
    /// Wall-clock limit per distance set.
    #[arg(long)]
    max_seconds: Option<u64>,
}

impl CapArgs {
    fn caps(&self) -> SolverCaps {
        let mut caps = SolverCaps::default();
        if let Some(n) = self.max_states {
            caps.max_states = n;
        }
        caps.max_interval = self.max_interval.or(caps.max_interval);
        caps.max_time = self.max_seconds.map(Duration::from_secs);
        caps
    }
}

/// Exit code and stdout of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutcome {
    pub exit_code: i32,
    pub payload: String,
}

impl CommandOutcome {
    fn new(exit_code: i32, value: &Value) -> Self {
        let payload = serde_json::to_string(value).expect("json values serialize");
        Self { exit_code, payload }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Undecided(_) => 2,
        Error::Io(_) => 3,
        _ => 1,
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::InvalidDistanceSet(_) => "invalidDistanceSet",
        Error::InvalidArity { .. } => "invalidArity",
        Error::InvalidParameter(_) => "invalidParameter",
        Error::InvalidWitness(_) => "invalidWitness",
        Error::Undecided(_) => "undecided",
        Error::Io(_) => "io",
    }
}

/// Parses `args` (program name first) and runs the command.
///
/// ```
/// let out = distgraph::cli::run(["distgraph", "omega", "2,3,5"]);
/// assert_eq!(out.exit_code, 0);
/// assert!(out.payload.contains(r#""omega":3"#));
/// ```
pub fn run<I, T>(args: I) -> CommandOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            return CommandOutcome {
                exit_code: 0,
                payload: e.to_string().trim_end().to_string(),
            };
        }
        Err(e) => {
            let value = json!({ "error": "usage", "message": e.to_string().trim_end() });
            return CommandOutcome::new(1, &value);
        }
    };
    match dispatch(cli.command) {
        Ok(outcome) => outcome,
        Err(e) => CommandOutcome::new(
            exit_code(&e),
            &json!({ "error": error_kind(&e), "message": e.to_string() }),
        ),
    }
}

fn dispatch(command: Command) -> Result<CommandOutcome> {
    match command {
        Command::Chi { distances, caps } => cmd_chi(&distances, &caps.caps()),
        Command::Omega { distances } => cmd_omega(&distances),
        Command::Classify { distances } => cmd_classify(&distances),
        Command::Survey {
            cardinality,
            max_distance,
            out,
            workers,
            resume,
            audit,
            caps,
        } => {
            let mut config = SurveyConfig::new(cardinality, max_distance, out)?;
            config.caps = caps.caps();
            config.resume = resume;
            if let Some(w) = workers {
                config.workers = w;
            }
            if audit {
                cmd_audit(&config)
            } else {
                cmd_survey(&config)
            }
        }
        Command::Verify { file } => cmd_verify(&file),
    }
}

fn parse_set(arg: &str) -> Result<(Vec<i64>, DistanceSet)> {
    let raw = parse_distances(arg)?;
    let d = DistanceSet::normalize(&raw)?;
    Ok((raw, d))
}

fn record_value(r: &WitnessRecord) -> Value {
    serde_json::to_value(r).expect("records serialize")
}

pub fn cmd_chi(arg: &str, caps: &SolverCaps) -> Result<CommandOutcome> {
    let (raw, d) = parse_set(arg)?;
    let (_, clique) = clique_number(&d);
    let cert = chromatic_number_with(&d, caps, Some(&clique))?;
    if !cert.verify(&d) {
        return Err(Error::InvalidWitness(format!(
            "certificates for {d} failed to re-verify"
        )));
    }
    let lower = match &cert.lower {
        LowerCertificate::Parity => {
            // an odd cycle shows up as a run that two colors cannot cover
            let cap = 64 * (d.max_distance() as usize + d.min_distance() as usize);
            let length = min_infeasible_interval(&d, 2, cap).ok_or_else(|| {
                Error::Undecided(format!("no odd cycle of {d} found within {cap}"))
            })?;
            WitnessRecord::interval(&d, 2, length)
        }
        LowerCertificate::InfeasibleInterval { colors, length } => {
            WitnessRecord::interval(&d, *colors, *length)
        }
        LowerCertificate::AutomatonEmpty { colors, .. } => {
            WitnessRecord::automaton_empty(&d, *colors)
        }
        LowerCertificate::Clique(w) => WitnessRecord::clique(&d, w),
    };
    let upper = WitnessRecord::coloring(&d, &cert.upper);
    if !lower.verify() || !upper.verify() {
        return Err(Error::InvalidWitness(format!(
            "records for {d} failed to re-verify"
        )));
    }
    let mut value = json!({
        "input": raw,
        "distances": d.elements(),
        "scale": d.scale(),
        "chi": cert.chi,
        "lowerKind": cert.lower_kind().as_str(),
        "upper": record_value(&upper),
        "lower": record_value(&lower),
    });
    if let LowerCertificate::AutomatonEmpty { states, .. } = cert.lower {
        value["automatonStates"] = json!(states);
    }
    Ok(CommandOutcome::new(0, &value))
}

pub fn cmd_omega(arg: &str) -> Result<CommandOutcome> {
    let (raw, d) = parse_set(arg)?;
    let (omega, w) = clique_number(&d);
    let record = WitnessRecord::clique(&d, &w);
    if !record.verify() {
        return Err(Error::InvalidWitness(format!(
            "clique for {d} failed to re-verify"
        )));
    }
    let value = json!({
        "input": raw,
        "distances": d.elements(),
        "scale": d.scale(),
        "omega": omega,
        "witness": record_value(&record),
    });
    Ok(CommandOutcome::new(0, &value))
}

pub fn cmd_classify(arg: &str) -> Result<CommandOutcome> {
    let (raw, d) = parse_set(arg)?;
    let report = classify(&d);
    let value = json!({
        "input": raw,
        "distances": d.elements(),
        "scale": d.scale(),
        "report": report,
        "flags": report.flags(),
        "chiLowerBound": if report.parity_chi2 { 2 } else { 3 },
        "chiUpperBound": if report.parity_chi2 { 2 } else { d.len() + 1 },
    });
    Ok(CommandOutcome::new(0, &value))
}

fn cmd_survey(config: &SurveyConfig) -> Result<CommandOutcome> {
    let summary = run_survey(config)?;
    let code = if summary.undecided.is_empty() { 0 } else { 2 };
    let value = serde_json::to_value(&summary).expect("summaries serialize");
    Ok(CommandOutcome::new(code, &value))
}

fn cmd_audit(config: &SurveyConfig) -> Result<CommandOutcome> {
    let failures = audit(&config.out, &config.caps, config.workers)?;
    let code = if failures.is_empty() { 0 } else { 1 };
    Ok(CommandOutcome::new(
        code,
        &json!({ "valid": failures.is_empty(), "failures": failures }),
    ))
}

pub fn cmd_verify(file: &std::path::Path) -> Result<CommandOutcome> {
    let text = std::fs::read_to_string(file)?;
    let mut results = Vec::new();
    for line in text.lines().filter(|l| !l.trim().is_empty()) {
        let record = WitnessRecord::parse(line)?;
        results.push(json!({
            "kind": record.kind(),
            "distances": record.distances(),
            "valid": record.verify(),
        }));
    }
    if results.is_empty() {
        return Err(Error::InvalidWitness(format!(
            "{} holds no records",
            file.display()
        )));
    }
    let valid = results.iter().all(|r| r["valid"] == json!(true));
    Ok(CommandOutcome::new(
        if valid { 0 } else { 1 },
        &json!({ "valid": valid, "records": results }),
    ))
}
