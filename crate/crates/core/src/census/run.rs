use std::collections::BTreeMap;
use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::sync::Mutex;
use std::time::Duration;

use rayon::prelude::*;
use serde::Serialize;

use super::cache::CableStore;
use crate::error::{Error, Result};
use crate::knot::{bundled_csv, read_records, KnotRecord, MalformedRow};
use crate::obstruction::{check_prime_level, Filter, ObstructionVerdict, Screen, Stage, ALL_FILTERS};

/// Everything a screening run needs. `input: None` screens the bundled table.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub input: Option<PathBuf>,
    pub levels: Vec<u32>,
    pub max_crossings: Option<u32>,
    pub filters: Vec<Filter>,
    pub output: Option<PathBuf>,
    pub jobs: usize,
    pub twist: i64,
    pub timeout: Option<Duration>,
    pub cache: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            input: None,
            levels: vec![5],
            max_crossings: None,
            filters: ALL_FILTERS.to_vec(),
            output: None,
            jobs: 1,
            twist: 1,
            timeout: None,
            cache: None,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.levels.is_empty() {
            return Err(Error::Config("at least one level is required".into()));
        }
        for &r in &self.levels {
            check_prime_level(r)?;
        }
        if self.filters.is_empty() {
            return Err(Error::Config("at least one filter is required".into()));
        }
        if self.jobs == 0 {
            return Err(Error::Config("jobs must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MalformedEntry {
    pub line: u64,
    pub name: Option<String>,
    pub error: String,
}

impl From<MalformedRow> for MalformedEntry {
    fn from(m: MalformedRow) -> Self {
        Self { line: m.line, name: m.name, error: m.error }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summary {
    /// Well-formed rows read.
    pub total: usize,
    /// Rows actually screened after the crossing cap.
    pub screened: usize,
    pub malformed: usize,
    pub skipped: Vec<String>,
    pub excluded: usize,
    pub excluded_by: BTreeMap<Stage, usize>,
    /// Knots with J(ζ₅) = 1.
    pub zeta5_trivial: usize,
    /// Knots with Δ″(1) = 0 and J‴(1) = 0.
    pub finite_type_vanishing: usize,
    /// Knots passing both the ζ₅ test and the finite-type conditions.
    pub zeta5_and_finite_type: usize,
    pub residual: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunSettings {
    pub levels: Vec<u32>,
    pub filters: Vec<Filter>,
    pub max_crossings: Option<u32>,
    pub twist: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub settings: RunSettings,
    pub summary: Summary,
    pub malformed: Vec<MalformedEntry>,
    pub verdicts: Vec<ObstructionVerdict>,
}

impl Report {
    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }
}

pub fn summarize(verdicts: &[ObstructionVerdict], total: usize, malformed: usize) -> Summary {
    let mut excluded_by = BTreeMap::new();
    for v in verdicts {
        if let Some(stage) = v.excluded_by() {
            *excluded_by.entry(stage).or_insert(0) += 1;
        }
    }
    let ft = |v: &ObstructionVerdict| v.delta2 == Some(0) && v.jones3 == Some(0);
    let z5 = |v: &ObstructionVerdict| v.zeta5_trivial == Some(true);
    Summary {
        total,
        screened: verdicts.len(),
        malformed,
        skipped: verdicts
            .iter()
            .filter(|v| !v.is_excluded() && !v.is_residual())
            .map(|v| v.name.clone())
            .collect(),
        excluded: verdicts.iter().filter(|v| v.is_excluded()).count(),
        excluded_by,
        zeta5_trivial: verdicts.iter().filter(|v| z5(v)).count(),
        finite_type_vanishing: verdicts.iter().filter(|v| ft(v)).count(),
        zeta5_and_finite_type: verdicts.iter().filter(|v| z5(v) && ft(v)).count(),
        residual: verdicts.iter().filter(|v| v.is_residual()).map(|v| v.name.clone()).collect(),
    }
}

/// Screen already parsed records; output order follows input order whatever `jobs` is.
pub fn run_records(records: Vec<KnotRecord>, malformed: Vec<MalformedRow>, config: &RunConfig) -> Result<Report> {
    config.validate()?;
    let total = records.len();
    let records: Vec<KnotRecord> = records
        .into_iter()
        .filter(|r| config.max_crossings.map_or(true, |c| r.crossing_number <= c))
        .collect();
    let screen = Screen::new(&config.levels, &config.filters, config.twist)?.with_timeout(config.timeout);
    let store = match &config.cache {
        Some(path) => Some(Mutex::new(CableStore::load(path)?)),
        None => None,
    };
    let depth = screen.cable_depth();

    let one = |rec: &KnotRecord| -> Result<ObstructionVerdict> {
        let Some(store) = &store else { return screen.verdict(rec) };
        let cached = store.lock().expect("cache lock").get(rec, depth)?;
        if let Some(cables) = cached {
            return screen.verdict_from_cables(rec, &cables);
        }
        match screen.cables(rec) {
            Ok(cables) => {
                store.lock().expect("cache lock").insert(rec, &cables);
                screen.verdict_from_cables(rec, &cables)
            }
            Err(Error::Timeout) => screen.verdict(rec),
            Err(e) => Err(e),
        }
    };

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| Error::Invariant(format!("thread pool: {e}")))?;
    let verdicts = pool.install(|| records.par_iter().map(one).collect::<Result<Vec<_>>>())?;

    if let (Some(store), Some(path)) = (store, &config.cache) {
        store.into_inner().expect("cache lock").save(path)?;
    }

    let summary = summarize(&verdicts, total, malformed.len());
    let mut filters = config.filters.clone();
    filters.sort();
    filters.dedup();
    let report = Report {
        settings: RunSettings {
            levels: config.levels.clone(),
            filters,
            max_crossings: config.max_crossings,
            twist: config.twist,
        },
        summary,
        malformed: malformed.into_iter().map(Into::into).collect(),
        verdicts,
    };
    if let Some(out) = &config.output {
        fs::write(out, report.to_json()?)?;
    }
    Ok(report)
}

pub fn run_csv<R: Read>(input: R, config: &RunConfig) -> Result<Report> {
    let (records, malformed) = read_records(input)?;
    run_records(records, malformed, config)
}

/// Read the configured input (or the bundled table) and screen it.
pub fn run(config: &RunConfig) -> Result<Report> {
    match &config.input {
        Some(path) => run_csv(fs::File::open(path)?, config),
        None => run_csv(bundled_csv().as_bytes(), config),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_input() {
        let report = run_csv("name,pd,crossings,genus,thickness,prime\n".as_bytes(), &RunConfig::default()).unwrap();
        assert_eq!(report.summary.total, 0);
        assert!(report.verdicts.is_empty());
        assert!(report.summary.residual.is_empty());
    }

    #[test]
    fn config_is_validated() {
        let bad = [
            RunConfig { levels: vec![], ..Default::default() },
            RunConfig { levels: vec![9], ..Default::default() },
            RunConfig { levels: vec![3], ..Default::default() },
            RunConfig { filters: vec![], ..Default::default() },
            RunConfig { jobs: 0, ..Default::default() },
        ];
        for c in &bad {
            assert!(c.validate().is_err(), "{c:?}");
        }
        assert!(RunConfig::default().validate().is_ok());
    }

    #[test]
    fn crossing_cap_and_malformed_rows() {
        let csv = "name,pd,crossings,genus,thickness,prime\n\
                   3_1,\"[[1,5,2,4],[3,1,4,6],[5,3,6,2]]\",3,1,0,true\n\
                   4_1,\"[[4,2,5,1],[8,6,1,5],[6,3,7,4],[2,7,3,8]]\",4,1,0,true\n\
                   oops,\"[[1,5,2\",3,1,0,true\n";
        let config = RunConfig { max_crossings: Some(3), ..Default::default() };
        let report = run_csv(csv.as_bytes(), &config).unwrap();
        assert_eq!(report.summary.total, 2);
        assert_eq!(report.summary.screened, 1);
        assert_eq!(report.summary.malformed, 1);
        assert_eq!(report.malformed[0].line, 4);
        assert_eq!(report.summary.excluded, 1);
    }
}
