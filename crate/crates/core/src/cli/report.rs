use std::io::Write;

use serde::Serialize;

use super::{CliError, SuiteConfig};

pub const SCHEMA_VERSION: u32 = 1;

/// Column order of `--format csv` reports.
pub const REPORT_COLUMNS: [&str; 8] = [
    "identity",
    "params",
    "lhs",
    "rhs",
    "equal",
    "mode",
    "elapsed_ms",
    "note",
];

/// One checked identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Record {
    pub identity: String,
    pub params: String,
    pub lhs: String,
    pub rhs: String,
    pub equal: bool,
    pub mode: String,
    /// Only filled with `--timings`.
    pub elapsed_ms: Option<u64>,
    pub note: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub tool_version: &'static str,
    pub config: SuiteConfig,
    pub summary: Summary,
    pub records: Vec<Record>,
}

impl Report {
    pub fn new(config: SuiteConfig, records: Vec<Record>) -> Self {
        let passed = records.iter().filter(|r| r.equal).count();
        Self {
            schema_version: SCHEMA_VERSION,
            tool_version: env!("CARGO_PKG_VERSION"),
            config,
            summary: Summary {
                total: records.len(),
                passed,
                failed: records.len() - passed,
            },
            records,
        }
    }

    pub fn all_equal(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn write_json(&self, out: &mut dyn Write) -> Result<(), CliError> {
        serde_json::to_writer_pretty(&mut *out, self)?;
        writeln!(out)?;
        Ok(())
    }

    pub fn write_csv(&self, out: &mut dyn Write) -> Result<(), CliError> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(REPORT_COLUMNS)?;
        for r in &self.records {
            w.write_record([
                r.identity.as_str(),
                &r.params,
                &r.lhs,
                &r.rhs,
                if r.equal { "true" } else { "false" },
                &r.mode,
                &r.elapsed_ms.map(|x| x.to_string()).unwrap_or_default(),
                r.note.as_deref().unwrap_or(""),
            ])?;
        }
        w.flush()?;
        Ok(())
    }
}
