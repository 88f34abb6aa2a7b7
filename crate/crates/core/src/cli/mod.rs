//! The `qtsym` command line: named verification suites and tables.

mod report;
mod suites;
mod tables;

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Parser, ValueEnum};

use crate::oracles::OracleError;
use crate::operators::{OpError, DEFAULT_DEGREE_CAP};
use crate::parking::{ParkingError, DEFAULT_SIZE_CAP};
use crate::plethysm::PlethError;
use crate::symfunc::{character, SymError};

pub use report::{Record, Report, Summary, REPORT_COLUMNS, SCHEMA_VERSION};
pub use suites::run_suite;
pub use tables::emit_table;

pub const CACHE_FILE: &str = "qtsym-characters.json";

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Commutator,
    QCorollaries,
    Positivity,
    #[value(name = "catalan-324")]
    #[serde(rename = "catalan-324")]
    Catalan324,
    #[value(name = "shuffle-322")]
    #[serde(rename = "shuffle-322")]
    Shuffle322,
    #[value(name = "shuffle-323")]
    #[serde(rename = "shuffle-323")]
    Shuffle323,
    #[value(name = "shuffle-316")]
    #[serde(rename = "shuffle-316")]
    Shuffle316,
    #[value(name = "touch-37")]
    #[serde(rename = "touch-37")]
    Touch37,
    RvOracle,
    ModifiedSchur,
    #[value(name = "identity-425")]
    #[serde(rename = "identity-425")]
    Identity425,
    All,
}

impl Suite {
    pub const EACH: [Suite; 11] = [
        Suite::Commutator,
        Suite::QCorollaries,
        Suite::Positivity,
        Suite::Catalan324,
        Suite::Shuffle322,
        Suite::Shuffle323,
        Suite::Shuffle316,
        Suite::Touch37,
        Suite::RvOracle,
        Suite::ModifiedSchur,
        Suite::Identity425,
    ];
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TableKind {
    PfStats,
    SchurExpansion,
    QPolynomials,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ArithMode {
    Exact,
    Probe,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

/// Resource limits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Caps {
    /// Degree cap of the operator engine.
    pub degree: u32,
    /// Largest `km + kn` for path enumeration.
    pub paths: i64,
}

impl Default for Caps {
    fn default() -> Self {
        Self {
            degree: DEFAULT_DEGREE_CAP,
            paths: DEFAULT_SIZE_CAP,
        }
    }
}

impl std::str::FromStr for Caps {
    type Err = String;

    /// `degree=12,paths=14`; omitted keys keep their defaults.
    fn from_str(s: &str) -> Result<Self, String> {
        let mut caps = Caps::default();
        for item in s.split(',').filter(|x| !x.is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| format!("expected key=value, got {item:?}"))?;
            let bad = |_| format!("bad value for {key}: {value:?}");
            match key.trim() {
                "degree" => caps.degree = value.trim().parse().map_err(bad)?,
                "paths" => caps.paths = value.trim().parse().map_err(bad)?,
                other => return Err(format!("unknown cap {other:?} (known: degree, paths)")),
            }
        }
        Ok(caps)
    }
}

#[derive(Parser, Clone, Debug)]
#[command(name = "qtsym", version, about = "Verify plethystic operator identities and rational shuffle sums")]
#[command(group(ArgGroup::new("what").required(true).args(["suite", "table"])))]
pub struct Args {
    /// Verification suite to run.
    #[arg(long, value_enum)]
    pub suite: Option<Suite>,
    /// Table to emit instead of running a suite.
    #[arg(long, value_enum)]
    pub table: Option<TableKind>,
    #[arg(long)]
    pub m: Option<i64>,
    #[arg(long)]
    pub n: Option<i64>,
    #[arg(long)]
    pub k: Option<i64>,
    /// Partition-size bound; each suite has its own default.
    #[arg(long)]
    pub max_degree: Option<u32>,
    #[arg(long, value_enum, default_value = "exact")]
    pub mode: ArithMode,
    /// Seed for probe mode.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Output file; standard output when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    /// Directory holding the character-table cache.
    #[arg(long)]
    pub cache_dir: Option<PathBuf>,
    /// Resource caps, e.g. `degree=12,paths=14`.
    #[arg(long, default_value = "")]
    pub caps: Caps,
    /// Record per-check wall time. Off by default so reports are reproducible.
    #[arg(long)]
    pub timings: bool,
}

/// Everything a suite run depends on.
#[derive(Clone, Debug, serde::Serialize)]
pub struct SuiteConfig {
    pub suite: Suite,
    pub m: Option<i64>,
    pub n: Option<i64>,
    pub k: Option<i64>,
    pub max_degree: Option<u32>,
    pub mode: ArithMode,
    /// Present exactly in probe mode.
    pub seed: Option<u64>,
    pub caps: Caps,
    #[serde(skip)]
    pub timings: bool,
}

impl SuiteConfig {
    pub fn new(suite: Suite) -> Self {
        Self {
            suite,
            m: None,
            n: None,
            k: None,
            max_degree: None,
            mode: ArithMode::Exact,
            seed: None,
            caps: Caps::default(),
            timings: false,
        }
    }

    pub fn from_args(args: &Args, suite: Suite) -> Self {
        Self {
            suite,
            m: args.m,
            n: args.n,
            k: args.k,
            max_degree: args.max_degree,
            mode: args.mode,
            seed: (args.mode == ArithMode::Probe).then_some(args.seed),
            caps: args.caps,
            timings: args.timings,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("resource cap exceeded: {0}")]
    Cap(String),
    #[error("check could not be evaluated: {0}")]
    Failure(String),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Failure(_) => 1,
            CliError::Usage(_) | CliError::Io(_) | CliError::Csv(_) | CliError::Json(_) => 2,
            CliError::Cap(_) => 3,
        }
    }
}

fn sym_is_cap(e: &SymError) -> bool {
    matches!(e, SymError::DegreeTooLarge { .. })
}

fn pleth_is_cap(e: &PlethError) -> bool {
    matches!(e, PlethError::Sym(s) if sym_is_cap(s))
}

impl From<OpError> for CliError {
    fn from(e: OpError) -> Self {
        let cap = match &e {
            OpError::DegreeCap { .. } => true,
            OpError::Sym(s) => sym_is_cap(s),
            OpError::Pleth(p) => pleth_is_cap(p),
            _ => false,
        };
        if cap {
            CliError::Cap(e.to_string())
        } else {
            CliError::Failure(e.to_string())
        }
    }
}

impl From<ParkingError> for CliError {
    fn from(e: ParkingError) -> Self {
        match &e {
            ParkingError::Cap { .. } => CliError::Cap(e.to_string()),
            ParkingError::Sym(s) if sym_is_cap(s) => CliError::Cap(e.to_string()),
            ParkingError::NotCoprime { .. } | ParkingError::BadK(_) | ParkingError::BadComposition(_) => {
                CliError::Usage(e.to_string())
            }
            ParkingError::Sym(_) => CliError::Failure(e.to_string()),
        }
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        match &e {
            OracleError::Scope { .. } => CliError::Cap(e.to_string()),
            OracleError::Pleth(p) if pleth_is_cap(p) => CliError::Cap(e.to_string()),
            _ => CliError::Failure(e.to_string()),
        }
    }
}

impl From<SymError> for CliError {
    fn from(e: SymError) -> Self {
        if sym_is_cap(&e) {
            CliError::Cap(e.to_string())
        } else {
            CliError::Failure(e.to_string())
        }
    }
}

impl From<PlethError> for CliError {
    fn from(e: PlethError) -> Self {
        if pleth_is_cap(&e) {
            CliError::Cap(e.to_string())
        } else {
            CliError::Failure(e.to_string())
        }
    }
}

impl From<crate::coeff::CoeffError> for CliError {
    fn from(e: crate::coeff::CoeffError) -> Self {
        CliError::Failure(e.to_string())
    }
}

fn cache_path(dir: &Path) -> PathBuf {
    dir.join(CACHE_FILE)
}

fn open_output(out: &Option<PathBuf>) -> Result<Box<dyn Write>, CliError> {
    Ok(match out {
        Some(p) => Box::new(std::io::BufWriter::new(std::fs::File::create(p)?)),
        None => Box::new(std::io::stdout().lock()),
    })
}

/// Run a parsed command line; returns the process exit code.
pub fn run(args: &Args) -> Result<i32, CliError> {
    if let Some(dir) = &args.cache_dir {
        std::fs::create_dir_all(dir)?;
        character::load_cache(&cache_path(dir));
    }
    let code = if let Some(kind) = args.table {
        let mut out = open_output(&args.out)?;
        emit_table(kind, args, &mut out)?;
        out.flush()?;
        0
    } else {
        let suite = args.suite.expect("clap requires a suite or a table");
        let report = run_suite(&SuiteConfig::from_args(args, suite))?;
        let mut out = open_output(&args.out)?;
        match args.format {
            Format::Json => report.write_json(&mut out)?,
            Format::Csv => report.write_csv(&mut out)?,
        }
        out.flush()?;
        for r in report.records.iter().filter(|r| !r.equal) {
            eprintln!("FAILED {} [{}]: {} != {}", r.identity, r.params, r.lhs, r.rhs);
        }
        if report.summary.failed == 0 {
            0
        } else {
            1
        }
    };
    if let Some(dir) = &args.cache_dir {
        if let Some(&max) = character::cached_degrees().last() {
            character::save_cache(&cache_path(dir), max)?;
        }
    }
    Ok(code)
}

/// Parse `argv` and run; returns the process exit code.
pub fn main_with<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args = match Args::try_parse_from(argv) {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match run(&args) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("qtsym: {e}");
            e.exit_code()
        }
    }
}
