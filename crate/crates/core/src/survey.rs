//! Exhaustive surveys over all normalized distance sets within bounds.
//!
//! Each set gets one JSON line in the results file:
//!
//! ```text
//! {"sequenceId":1,"distances":[1,2,3],"chi":4,"omega":4,"lowerKind":"clique","status":"consistent","flags":["zhu3:4","km:sumTriple"],"elapsedMillis":0}
//! ```
//!
//! Sequence ids start at 1 and follow the lexicographic enumeration order.
//! Lines are committed strictly in that order, after which the sidecar file
//! `<results>.checkpoint` is replaced by the highest committed id. A resumed
//! run drops any line past the checkpoint and continues from there.

use std::fs::{self, File, OpenOptions};
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::chromatic::{chromatic_number_with, LowerKind, SolverCaps};
use crate::classify::{classify, question_a_status, QuestionAStatus};
use crate::clique::clique_number;
use crate::distance_set::{gcd, DistanceSet};
use crate::error::{Error, Result};
use crate::witness::verify_clique;

#[derive(Debug, Clone)]
pub struct SurveyConfig {
    pub cardinality: usize,
    pub max_distance: u32,
    pub workers: usize,
    pub out: PathBuf,
    pub caps: SolverCaps,
    /// Continue from an existing checkpoint instead of starting over.
    pub resume: bool,
}

impl SurveyConfig {
    pub fn new(cardinality: usize, max_distance: u32, out: impl Into<PathBuf>) -> Result<Self> {
        if cardinality == 0 {
            return Err(Error::InvalidParameter(
                "cardinality must be at least 1".into(),
            ));
        }
        if (max_distance as usize) < cardinality {
            return Err(Error::InvalidParameter(format!(
                "max distance {max_distance} is below cardinality {cardinality}"
            )));
        }
        Ok(Self {
            cardinality,
            max_distance,
            workers: std::thread::available_parallelism().map_or(1, |n| n.get()),
            out: out.into(),
            caps: SolverCaps::default(),
            resume: false,
        })
    }

    pub fn checkpoint_path(&self) -> PathBuf {
        checkpoint_path(&self.out)
    }
}

pub fn checkpoint_path(results: &Path) -> PathBuf {
    let mut name = results.as_os_str().to_owned();
    name.push(".checkpoint");
    PathBuf::from(name)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum RecordStatus {
    Counterexample,
    Consistent,
    NotMaximal,
    /// A solver cap was hit before `χ` was known.
    Undecided,
}

impl From<QuestionAStatus> for RecordStatus {
    fn from(s: QuestionAStatus) -> Self {
        match s {
            QuestionAStatus::Counterexample => Self::Counterexample,
            QuestionAStatus::Consistent => Self::Consistent,
            QuestionAStatus::NotMaximal => Self::NotMaximal,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct SurveyRecord {
    pub sequence_id: u64,
    pub distances: Vec<u32>,
    /// `None` when undecided.
    pub chi: Option<u32>,
    pub omega: usize,
    pub lower_kind: Option<LowerKind>,
    pub status: RecordStatus,
    pub flags: Vec<String>,
    pub elapsed_millis: u64,
}

impl SurveyRecord {
    pub fn to_line(&self) -> String {
        serde_json::to_string(self).expect("records always serialize")
    }

    pub fn parse(line: &str) -> Result<Self> {
        serde_json::from_str(line.trim())
            .map_err(|e| Error::InvalidParameter(format!("bad survey record: {e}")))
    }

    /// The line with `elapsedMillis` zeroed, for comparing runs.
    pub fn untimed_line(&self) -> String {
        Self {
            elapsed_millis: 0,
            ..self.clone()
        }
        .to_line()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SurveySummary {
    pub cardinality: usize,
    pub max_distance: u32,
    /// Records in the results file after this run.
    pub records: u64,
    /// Records computed by this run; the rest were kept from a checkpoint.
    pub written: u64,
    pub counterexamples: Vec<Vec<u32>>,
    pub undecided: Vec<Vec<u32>>,
    /// Highest committed sequence id; pass `resume` to continue after it.
    pub resume_token: u64,
}

/// Every strictly increasing gcd-1 set of `cardinality` elements from
/// `1..=max_distance`, in lexicographic order.
///
/// ```
/// use distgraph::survey::enumerate_sets;
///
/// let pairs: Vec<String> = enumerate_sets(2, 4).map(|d| d.to_string()).collect();
/// assert_eq!(pairs, ["{1,2}", "{1,3}", "{1,4}", "{2,3}", "{3,4}"]);
/// ```
pub fn enumerate_sets(cardinality: usize, max_distance: u32) -> impl Iterator<Item = DistanceSet> {
    (1..=max_distance)
        .combinations(cardinality)
        .filter(|s| s.iter().fold(0, |g, &x| gcd(g, x)) == 1)
        .map(|s| DistanceSet::from_elements(&s).expect("gcd-1 sets are already normalized"))
}

/// Computes one record. Only cap exhaustion is absorbed as `undecided`.
pub fn survey_record(sequence_id: u64, d: &DistanceSet, caps: &SolverCaps) -> Result<SurveyRecord> {
    let start = Instant::now();
    let report = classify(d);
    let (omega, clique) = clique_number(d);
    let (chi, lower_kind, status) = match chromatic_number_with(d, caps, Some(&clique)) {
        Ok(cert) => {
            let status = question_a_status(d, cert.chi, omega).into();
            (Some(cert.chi), Some(cert.lower_kind()), status)
        }
        Err(Error::Undecided(_)) => (None, None, RecordStatus::Undecided),
        Err(e) => return Err(e),
    };
    Ok(SurveyRecord {
        sequence_id,
        distances: d.elements().to_vec(),
        chi,
        omega,
        lower_kind,
        status,
        flags: report.flags(),
        elapsed_millis: start.elapsed().as_millis() as u64,
    })
}

#[derive(Default)]
struct Tally {
    records: u64,
    counterexamples: Vec<Vec<u32>>,
    undecided: Vec<Vec<u32>>,
}

impl Tally {
    fn add(&mut self, r: &SurveyRecord) {
        self.records += 1;
        match r.status {
            RecordStatus::Counterexample => self.counterexamples.push(r.distances.clone()),
            RecordStatus::Undecided => self.undecided.push(r.distances.clone()),
            _ => {}
        }
    }
}

pub fn run_survey(config: &SurveyConfig) -> Result<SurveySummary> {
    let checkpoint = config.checkpoint_path();
    let mut tally = Tally::default();
    let committed = if config.resume {
        restore(&config.out, &checkpoint, &mut tally)?
    } else {
        File::create(&config.out)?;
        write_checkpoint(&checkpoint, 0)?;
        0
    };

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers.max(1))
        .build()
        .map_err(|e| Error::InvalidParameter(format!("cannot start workers: {e}")))?;
    let mut out = BufWriter::new(OpenOptions::new().append(true).open(&config.out)?);
    let window = 16 * config.workers.max(1);
    let mut next_id = committed;
    let mut written = 0;

    let pending = enumerate_sets(config.cardinality, config.max_distance)
        .zip(1u64..)
        .skip(committed as usize);
    for chunk in &pending.chunks(window) {
        let chunk: Vec<(DistanceSet, u64)> = chunk.collect();
        let records: Vec<SurveyRecord> = pool.install(|| {
            chunk
                .par_iter()
                .map(|(d, id)| survey_record(*id, d, &config.caps))
                .collect::<Result<_>>()
        })?;
        for r in &records {
            writeln!(out, "{}", r.to_line())?;
            tally.add(r);
            next_id = r.sequence_id;
            written += 1;
        }
        out.flush()?;
        out.get_ref().sync_data()?;
        write_checkpoint(&checkpoint, next_id)?;
    }

    Ok(SurveySummary {
        cardinality: config.cardinality,
        max_distance: config.max_distance,
        records: tally.records,
        written,
        counterexamples: tally.counterexamples,
        undecided: tally.undecided,
        resume_token: next_id,
    })
}

fn write_checkpoint(path: &Path, id: u64) -> Result<()> {
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    fs::write(&tmp, format!("{id}\n"))?;
    fs::rename(&tmp, path)?;
    Ok(())
}

pub fn read_checkpoint(path: &Path) -> Result<u64> {
    let text = fs::read_to_string(path)?;
    text.trim().parse().map_err(|_| {
        Error::InvalidParameter(format!("checkpoint {} is not an integer", path.display()))
    })
}

/// Keeps the records up to the checkpoint, truncating anything after it.
fn restore(results: &Path, checkpoint: &Path, tally: &mut Tally) -> Result<u64> {
    let committed = match read_checkpoint(checkpoint) {
        Ok(id) => id,
        Err(Error::Io(e)) if e.kind() == std::io::ErrorKind::NotFound => 0,
        Err(e) => return Err(e),
    };
    if !results.exists() {
        if committed > 0 {
            return Err(Error::InvalidParameter(format!(
                "checkpoint says {committed} records but {} is missing",
                results.display()
            )));
        }
        File::create(results)?;
        return Ok(0);
    }
    let mut keep = 0u64;
    let mut reader = BufReader::new(File::open(results)?);
    let mut line = String::new();
    while tally.records < committed {
        line.clear();
        let n = reader.read_line(&mut line)?;
        if n == 0 {
            break;
        }
        let r = SurveyRecord::parse(&line)?;
        if r.sequence_id != tally.records + 1 {
            return Err(Error::InvalidParameter(format!(
                "results out of order at sequence id {}",
                r.sequence_id
            )));
        }
        tally.add(&r);
        keep += n as u64;
    }
    if tally.records < committed {
        return Err(Error::InvalidParameter(format!(
            "checkpoint says {committed} records but only {} are present",
            tally.records
        )));
    }
    OpenOptions::new()
        .write(true)
        .open(results)?
        .set_len(keep)?;
    Ok(committed)
}

/// A record whose recomputed certificates disagree with it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct AuditFailure {
    pub sequence_id: u64,
    pub reason: String,
}

/// Recomputes the witnesses behind every record of a results file and
/// checks them with the independent verifiers.
pub fn audit(results: &Path, caps: &SolverCaps, workers: usize) -> Result<Vec<AuditFailure>> {
    let records: Vec<SurveyRecord> = BufReader::new(File::open(results)?)
        .lines()
        .map(|line| SurveyRecord::parse(&line?))
        .collect::<Result<_>>()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| Error::InvalidParameter(format!("cannot start workers: {e}")))?;
    Ok(pool.install(|| {
        records
            .par_iter()
            .filter_map(|r| {
                audit_record(r, caps).err().map(|reason| AuditFailure {
                    sequence_id: r.sequence_id,
                    reason,
                })
            })
            .collect()
    }))
}

fn audit_record(r: &SurveyRecord, caps: &SolverCaps) -> std::result::Result<(), String> {
    let d = DistanceSet::from_elements(&r.distances).map_err(|e| e.to_string())?;
    if d.elements() != r.distances {
        return Err("distances are not normalized".into());
    }
    let (omega, clique) = clique_number(&d);
    if !verify_clique(&d, &clique) || omega != r.omega {
        return Err(format!(
            "omega {} does not match recomputed {omega}",
            r.omega
        ));
    }
    let Some(chi) = r.chi else {
        return if r.status == RecordStatus::Undecided {
            Ok(())
        } else {
            Err("missing chi".into())
        };
    };
    let cert = chromatic_number_with(&d, caps, Some(&clique)).map_err(|e| e.to_string())?;
    if !cert.verify(&d) {
        return Err("certificates fail verification".into());
    }
    if cert.chi != chi || Some(cert.lower_kind()) != r.lower_kind {
        return Err(format!("chi {chi} does not match recomputed {}", cert.chi));
    }
    if r.status != question_a_status(&d, chi, omega).into() {
        return Err("status does not follow from chi and omega".into());
    }
    Ok(())
}
