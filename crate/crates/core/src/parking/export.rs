use std::io::Write;

use super::stats::PFStats;
use super::ParkingFunction;

pub const CSV_COLUMNS: [&str; 8] = ["path", "cars", "area", "tdinv", "dinv", "ret", "pides", "touch"];

fn join(v: &[u32]) -> String {
    v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
}

/// One row per parking function, columns as in [`CSV_COLUMNS`].
pub fn write_stats_csv<W: Write>(out: W, rows: &[(ParkingFunction, PFStats)]) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_COLUMNS)?;
    for (pf, s) in rows {
        w.write_record([
            pf.path().word(),
            join(pf.cars()),
            s.area.to_string(),
            s.tdinv.to_string(),
            s.dinv.to_string(),
            s.ret.to_string(),
            s.pides.to_string(),
            s.touch.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}
