//! Verification sweeps, claim records and report rendering.

pub mod catalog;
mod tasks;

use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::Rat;

pub use tasks::{ct_eval, wz_gosper, wz_verify_cert, wz_zeilberger};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Task {
    TripletCt,
    StripletCt,
    TwistedCt,
    KIdentity,
    Wz,
    ZhuTriplet,
    ZhuStriplet,
    ZhuTwisted,
    ZhuC0,
    PoissonTriplet,
    PoissonStriplet,
}

impl Task {
    pub const ALL: [Task; 11] = [
        Task::TripletCt,
        Task::StripletCt,
        Task::TwistedCt,
        Task::KIdentity,
        Task::Wz,
        Task::ZhuTriplet,
        Task::ZhuStriplet,
        Task::ZhuTwisted,
        Task::ZhuC0,
        Task::PoissonTriplet,
        Task::PoissonStriplet,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Task::TripletCt => "triplet-ct",
            Task::StripletCt => "striplet-ct",
            Task::TwistedCt => "twisted-ct",
            Task::KIdentity => "k-identity",
            Task::Wz => "wz",
            Task::ZhuTriplet => "zhu-triplet",
            Task::ZhuStriplet => "zhu-striplet",
            Task::ZhuTwisted => "zhu-twisted",
            Task::ZhuC0 => "zhu-c0",
            Task::PoissonTriplet => "poisson-triplet",
            Task::PoissonStriplet => "poisson-striplet",
        }
    }

    /// `'p'`, `'m'`, or `None` for tasks without a sweep.
    pub fn param_name(self) -> Option<char> {
        self.sweep().map(|s| s.name)
    }

    /// Which parameter the task sweeps, with its default range and lower limit.
    fn sweep(self) -> Option<Sweep> {
        let s = |name, lo, hi, min| Some(Sweep { name, default: ParamRange { lo, hi }, min });
        match self {
            Task::TripletCt => s('p', 2, 6, 2),
            Task::KIdentity => s('p', 2, 5, 2),
            Task::ZhuTriplet | Task::PoissonTriplet => s('p', 2, 6, 2),
            Task::StripletCt | Task::ZhuStriplet | Task::PoissonStriplet => s('m', 1, 4, 1),
            Task::TwistedCt | Task::ZhuTwisted => s('m', 1, 3, 1),
            Task::Wz => s('m', 1, 10, 1),
            Task::ZhuC0 => None,
        }
    }
}

impl fmt::Display for Task {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Task {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Task::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::Input(format!("unknown task {s:?}")))
    }
}

struct Sweep {
    name: char,
    default: ParamRange,
    min: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParamRange {
    pub lo: u32,
    pub hi: u32,
}

impl ParamRange {
    pub fn new(lo: u32, hi: u32) -> Self {
        ParamRange { lo, hi }
    }

    pub fn values(self) -> impl Iterator<Item = u32> {
        self.lo..=self.hi
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Text,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            _ => Err(Error::Input(format!("unknown format {s:?}"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub task: Task,
    pub p: Option<ParamRange>,
    pub m: Option<ParamRange>,
    pub k: Option<u32>,
    pub output: Option<PathBuf>,
    pub format: Format,
    pub diagnostic: bool,
}

impl RunConfig {
    pub fn new(task: Task) -> Self {
        RunConfig {
            task,
            p: None,
            m: None,
            k: None,
            output: None,
            format: Format::Text,
            diagnostic: false,
        }
    }

    /// The swept range after defaults and validation.
    pub fn range(&self) -> Result<Option<ParamRange>> {
        let Some(sweep) = self.task.sweep() else {
            if self.p.is_some() || self.m.is_some() {
                return Err(Error::Input(format!("{} takes no parameter range", self.task)));
            }
            return Ok(None);
        };
        let (given, other) = match sweep.name {
            'p' => (self.p, self.m),
            _ => (self.m, self.p),
        };
        if other.is_some() {
            return Err(Error::Input(format!("{} sweeps {} only", self.task, sweep.name)));
        }
        let r = given.unwrap_or(sweep.default);
        if r.lo > r.hi {
            return Err(Error::Input(format!("empty range {}..={}", r.lo, r.hi)));
        }
        let floor = if self.diagnostic { diagnostic_floor(self.task) } else { sweep.min };
        if r.lo < floor {
            return Err(Error::Param(format!(
                "{} needs {} >= {floor}, got {}",
                self.task, sweep.name, r.lo
            )));
        }
        Ok(Some(r))
    }

    pub fn validate(&self) -> Result<()> {
        self.range()?;
        if let Some(k) = self.k {
            if self.task != Task::KIdentity {
                return Err(Error::Input("--k applies to k-identity only".into()));
            }
            if k == 0 {
                return Err(Error::Param("k must be at least 1".into()));
            }
        }
        Ok(())
    }
}

fn diagnostic_floor(task: Task) -> u32 {
    match task {
        Task::TripletCt => 1,
        Task::StripletCt => 0,
        t => t.sweep().map_or(0, |s| s.min),
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Status {
    Pass,
    Fail,
    /// Equal up to the given nonzero constant.
    ProportionalPass(Rat),
}

impl Status {
    pub fn passed(&self) -> bool {
        !matches!(self, Status::Fail)
    }

    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Pass => f.write_str("pass"),
            Status::Fail => f.write_str("fail"),
            Status::ProportionalPass(c) => write!(f, "proportional-pass({c})"),
        }
    }
}

impl Serialize for Status {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ClaimRecord {
    pub id: String,
    pub params: BTreeMap<String, u32>,
    pub expected: String,
    pub computed: String,
    pub status: Status,
    pub runtime_ms: f64,
}

/// Builds a [`ClaimRecord`], timing the closure that produces
/// `(expected, computed, status)`.
pub(crate) fn timed_claim(
    id: &str,
    params: &[(&str, u32)],
    f: impl FnOnce() -> Result<(String, String, Status)>,
) -> Result<ClaimRecord> {
    let start = Instant::now();
    let (expected, computed, status) = f()?;
    Ok(ClaimRecord {
        id: id.into(),
        params: params.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
        expected,
        computed,
        status,
        runtime_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub task: String,
    pub params: serde_json::Map<String, serde_json::Value>,
    pub claims: Vec<ClaimRecord>,
    pub summary: Summary,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub artifacts: Vec<serde_json::Value>,
}

impl Report {
    pub fn new(task: &str, params: serde_json::Map<String, serde_json::Value>) -> Self {
        Report {
            task: task.into(),
            params,
            claims: Vec::new(),
            summary: Summary::default(),
            artifacts: Vec::new(),
        }
    }

    pub fn push_claims(&mut self, claims: impl IntoIterator<Item = ClaimRecord>) {
        for c in claims {
            if c.status.passed() {
                self.summary.passed += 1;
            } else {
                self.summary.failed += 1;
            }
            self.claims.push(c);
        }
    }

    pub fn exit_code(&self) -> i32 {
        if self.summary.failed == 0 {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serialisable") + "\n"
    }

    /// Human-readable rendering; omits runtimes so reruns are byte-identical.
    pub fn to_text(&self) -> String {
        let mut out = format!("task {}\n", self.task);
        for c in &self.claims {
            let params: Vec<String> = c.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            out.push_str(&format!("{:<24} {:<26} {}\n", c.status.to_string(), c.id, params.join(" ")));
            out.push_str(&format!("    expected: {}\n    computed: {}\n", c.expected, c.computed));
        }
        for a in &self.artifacts {
            out.push_str(&serde_json::to_string_pretty(a).expect("serialisable"));
            out.push('\n');
        }
        out.push_str(&format!(
            "summary: {} passed, {} failed\n",
            self.summary.passed, self.summary.failed
        ));
        out
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.to_text(),
            Format::Json => self.to_json(),
        }
    }
}

/// Thread count from `ZHULAB_JOBS`, if set.
pub fn jobs_from_env() -> Result<Option<usize>> {
    match std::env::var("ZHULAB_JOBS") {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(Error::Input(format!("ZHULAB_JOBS must be a positive integer, got {v:?}"))),
        },
        Err(_) => Ok(None),
    }
}

/// Runs the configured sweep. Claims are ordered by parameter value, then id.
pub fn run(config: &RunConfig) -> Result<Report> {
    config.validate()?;
    let range = config.range()?;
    let mut params = serde_json::Map::new();
    if let (Some(r), Some(sweep)) = (range, config.task.sweep()) {
        params.insert(format!("{}_min", sweep.name), r.lo.into());
        params.insert(format!("{}_max", sweep.name), r.hi.into());
    }
    if let Some(k) = config.k {
        params.insert("k".into(), k.into());
    }
    if config.diagnostic {
        params.insert("diagnostic".into(), true.into());
    }
    let mut report = Report::new(config.task.name(), params);
    let pool = {
        let mut b = rayon::ThreadPoolBuilder::new();
        if let Some(n) = jobs_from_env()? {
            b = b.num_threads(n);
        }
        b.build().map_err(|e| Error::Internal(e.to_string()))?
    };
    let (claims, artifacts) = pool.install(|| tasks::execute(config, range))?;
    report.push_claims(claims);
    report.artifacts = artifacts;
    Ok(report)
}

/// Runs and writes the report, returning the process exit code.
pub fn run_to_output(config: &RunConfig) -> Result<i32> {
    let report = run(config)?;
    let text = report.render(config.format);
    match &config.output {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(report.exit_code())
}
