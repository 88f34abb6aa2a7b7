use std::io::Write;

use num_integer::Integer;
use serde::Serialize;

use crate::coeff::QRational;
use crate::operators::enk_target;
use crate::parking::{enumerate_parking_functions, enumerate_paths, statistics, write_stats_csv, Rectangle};
use crate::plethysm::principal_specialization;
use crate::symfunc::{partitions, schur, SymFunc};

use super::{Args, CliError, Format, TableKind, SCHEMA_VERSION};

#[derive(Serialize)]
struct Table<T: Serialize> {
    schema_version: u32,
    table: TableKind,
    params: String,
    rows: Vec<T>,
}

#[derive(Serialize)]
struct PfRow {
    path: String,
    cars: Vec<u32>,
    area: i64,
    coarea: i64,
    tdinv: i64,
    dinv: i64,
    ret: i64,
    word: Vec<u32>,
    pides: String,
    touch: String,
}

#[derive(Serialize)]
struct SchurRow {
    lambda: String,
    coefficient: String,
    nonnegative: bool,
}

#[derive(Serialize)]
struct QPolyRow {
    lambda: String,
    m: i64,
    polynomial: String,
    nonnegative: bool,
    palindromic: bool,
    unimodal: bool,
}

fn write_rows<T: Serialize>(
    format: Format,
    table: TableKind,
    params: String,
    rows: Vec<T>,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    match format {
        Format::Json => {
            let t = Table {
                schema_version: SCHEMA_VERSION,
                table,
                params,
                rows,
            };
            serde_json::to_writer_pretty(&mut *out, &t)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for r in rows {
                w.serialize(r)?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

fn triple(args: &Args, default: (i64, i64, i64)) -> Result<(i64, i64, i64), CliError> {
    let (k, m, n) = (
        args.k.unwrap_or(default.0),
        args.m.unwrap_or(default.1),
        args.n.unwrap_or(default.2),
    );
    if k < 1 || m < 1 || n < 1 || m.gcd(&n) != 1 {
        return Err(CliError::Usage(format!(
            "k={k} m={m} n={n}: need k >= 1 and coprime positive m, n"
        )));
    }
    Ok((k, m, n))
}

/// Write the requested table in `args.format`.
pub fn emit_table(kind: TableKind, args: &Args, out: &mut dyn Write) -> Result<(), CliError> {
    match kind {
        TableKind::PfStats => {
            let (k, m, n) = triple(args, (1, 2, 3))?;
            Rectangle::new(k, m, n)?.check_cap(args.caps.paths)?;
            let mut rows = Vec::new();
            for path in enumerate_paths(k, m, n)? {
                for pf in enumerate_parking_functions(&path) {
                    let s = statistics(&pf);
                    rows.push((pf, s));
                }
            }
            if args.format == Format::Csv {
                write_stats_csv(out, &rows)?;
                return Ok(());
            }
            let rows = rows
                .into_iter()
                .map(|(pf, s)| PfRow {
                    path: pf.path().word(),
                    cars: pf.cars().to_vec(),
                    area: s.area,
                    coarea: s.coarea,
                    tdinv: s.tdinv,
                    dinv: s.dinv,
                    ret: s.ret,
                    word: s.word,
                    pides: s.pides.to_string(),
                    touch: s.touch.to_string(),
                })
                .collect();
            write_rows(args.format, kind, format!("k={k} m={m} n={n}"), rows, out)
        }
        TableKind::SchurExpansion => {
            let (k, m, n) = triple(args, (1, 2, 3))?;
            let target = enk_target(m, n, k)?;
            let rows = target
                .schur
                .iter()
                .rev()
                .map(|(lambda, c)| SchurRow {
                    lambda: lambda.to_string(),
                    coefficient: c.to_string(),
                    nonnegative: c.unimodality_report().nonnegative,
                })
                .collect();
            write_rows(args.format, kind, format!("k={k} m={m} n={n}"), rows, out)
        }
        TableKind::QPolynomials => {
            let max = args.max_degree.unwrap_or(3);
            let mut rows = Vec::new();
            for size in 0..=max {
                for lambda in partitions(size) {
                    for m in 1..=args.m.unwrap_or(3) {
                        let s: SymFunc<QRational> = schur(&lambda);
                        let value = principal_specialization(&s, m)?;
                        let poly = value.as_polynomial().ok_or_else(|| {
                            CliError::Failure(format!("s{lambda}[[{m}]_q] is not a polynomial"))
                        })?;
                        let r = poly.unimodality_report();
                        rows.push(QPolyRow {
                            lambda: lambda.to_string(),
                            m,
                            polynomial: poly.to_string(),
                            nonnegative: r.nonnegative,
                            palindromic: r.palindromic,
                            unimodal: r.unimodal,
                        });
                    }
                }
            }
            write_rows(args.format, kind, format!("max_degree={max}"), rows, out)
        }
    }
}
