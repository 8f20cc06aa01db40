use std::io::Write;

use dirac_core::dirac::{eigenvalue_closed, DiracResult, Options};
use dirac_core::rational::{format_rational, rat, sqrt_decimal};
use dirac_core::symspace::{catalog, CatalogEntry, SpinRule};
use serde::Serialize;

use crate::{CliError, Format, OutputArgs, TableArgs};

/// Fixed CSV schema for computed values.
#[derive(Debug, Serialize)]
struct CsvRow<'a> {
    space: &'a str,
    m: Option<usize>,
    n: usize,
    lambda_sq: String,
    lambda_set_size: usize,
    method: &'a str,
}

impl<'a> CsvRow<'a> {
    fn of(r: &'a DiracResult, m: Option<usize>) -> Self {
        CsvRow {
            space: &r.space,
            m,
            n: r.n,
            lambda_sq: format_rational(&r.lambda_sq),
            lambda_set_size: r.lambda_set.len(),
            method: r.method.as_str(),
        }
    }
}

fn write_csv<T: Serialize>(rows: &[T], out: &mut dyn Write) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}

fn write_json<T: Serialize + ?Sized>(value: &T, out: &mut dyn Write) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

pub fn result(
    r: &DiracResult,
    m: Option<usize>,
    fmt: &OutputArgs,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let digits = fmt.digits as usize;
    match fmt.format {
        Format::Json => write_json(&r.record(digits), out),
        Format::Csv => write_csv(&[CsvRow::of(r, m)], out),
        Format::Text => {
            let rec = r.record(digits);
            writeln!(out, "space          {}", rec.space)?;
            writeln!(out, "n              {}", rec.n)?;
            writeln!(out, "lambda^2       {}", rec.lambda_sq)?;
            writeln!(out, "lambda approx  {} (rounded)", rec.lambda_approx)?;
            writeln!(out, "distance term  {}", rec.terms.distance)?;
            if let Some(l) = &rec.terms.lambda_sum {
                writeln!(out, "Lambda term    {l}")?;
            }
            writeln!(out, "n/8 term       {}", rec.terms.dim)?;
            writeln!(out, "|Lambda|       {}", rec.lambda_set_size)?;
            writeln!(out, "method         {}", rec.method)?;
            if let Some(w) = &r.witness {
                writeln!(out, "witness word   {:?}", w.0.iter().map(|i| i + 1).collect::<Vec<_>>())?;
            }
            if rec.formal {
                writeln!(out, "note           formal value: the space has no spin structure")?;
            }
            Ok(())
        }
    }
}

#[derive(Debug, Serialize)]
struct TableRow {
    space: String,
    m: Option<usize>,
    n: usize,
    lambda_sq: String,
    lambda_approx: String,
    scal_quarter: String,
    ratio: String,
    expected: Option<String>,
    matches: bool,
    lambda_set_size: usize,
    method: &'static str,
}

fn m_values(entry: &CatalogEntry, requested: &[usize]) -> Vec<usize> {
    let Some((lo, step)) = entry.m_range() else {
        return Vec::new();
    };
    if requested.is_empty() {
        return vec![lo, lo + 2];
    }
    requested
        .iter()
        .copied()
        .filter(|&m| m >= lo && (m - lo) % step == 0)
        .collect()
}

fn table_rows(args: &TableArgs) -> Result<Vec<(TableRow, DiracResult)>, CliError> {
    let digits = args.output.digits as usize;
    let mut rows = Vec::new();
    for entry in catalog().into_iter().filter(|e| e.spin != SpinRule::Never) {
        let ms: Vec<Option<usize>> = if entry.is_parameterized() {
            m_values(&entry, &args.m).into_iter().map(Some).collect()
        } else {
            vec![None]
        };
        for m in ms {
            let pair = entry.build(m, false)?;
            let r = eigenvalue_closed(&pair, &Options::default())?;
            let quarter = rat(r.n as i64, 8);
            let expected = entry.expected_lambda_sq(m);
            let row = TableRow {
                space: r.space.clone(),
                m,
                n: r.n,
                lambda_sq: format_rational(&r.lambda_sq),
                lambda_approx: sqrt_decimal(&r.lambda_sq, digits).expect("positive"),
                ratio: format_rational(&(&r.lambda_sq / &quarter)),
                scal_quarter: format_rational(&quarter),
                matches: expected.as_ref() == Some(&r.lambda_sq),
                expected: expected.as_ref().map(format_rational),
                lambda_set_size: r.lambda_set.len(),
                method: r.method.as_str(),
            };
            rows.push((row, r));
        }
    }
    Ok(rows)
}

pub fn table1(args: &TableArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let rows = table_rows(args)?;
    match args.output.format {
        Format::Json => {
            let rows: Vec<&TableRow> = rows.iter().map(|(r, _)| r).collect();
            write_json(&rows, out)
        }
        Format::Csv => {
            let csv: Vec<CsvRow> = rows.iter().map(|(row, r)| CsvRow::of(r, row.m)).collect();
            write_csv(&csv, out)
        }
        Format::Text => {
            let header = ["space", "m", "n", "lambda^2", "Scal/4", "lambda^2/(Scal/4)", "lambda (rounded)", "table"];
            let cells: Vec<[String; 8]> = rows
                .iter()
                .map(|(r, _)| {
                    [
                        r.space.clone(),
                        r.m.map(|m| m.to_string()).unwrap_or_else(|| "-".into()),
                        r.n.to_string(),
                        r.lambda_sq.clone(),
                        r.scal_quarter.clone(),
                        r.ratio.clone(),
                        r.lambda_approx.clone(),
                        if r.matches { "ok".into() } else { "MISMATCH".into() },
                    ]
                })
                .collect();
            let widths: Vec<usize> = (0..header.len())
                .map(|i| cells.iter().map(|c| c[i].len()).chain([header[i].len()]).max().unwrap_or(0))
                .collect();
            let line = |cols: Vec<&str>| -> String {
                cols.iter()
                    .zip(&widths)
                    .map(|(c, w)| format!("{c:<w$}"))
                    .collect::<Vec<_>>()
                    .join("  ")
                    .trim_end()
                    .to_string()
            };
            writeln!(out, "{}", line(header.to_vec()))?;
            for c in &cells {
                writeln!(out, "{}", line(c.iter().map(String::as_str).collect()))?;
            }
            Ok(())
        }
    }
}

pub fn list(args: &OutputArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let records: Vec<_> = catalog().iter().map(CatalogEntry::record).collect();
    match args.format {
        Format::Json => write_json(&records, out),
        Format::Csv => write_csv(&records, out),
        Format::Text => {
            for r in &records {
                let spin = match r.spin {
                    SpinRule::Always => "spin",
                    SpinRule::EvenM => "spin iff m even",
                    SpinRule::Never => "no spin structure",
                };
                writeln!(
                    out,
                    "{:<4} {:<16} {:<22} dim {:<4} {:<18} {:<26} lambda^2 = {}",
                    r.key,
                    r.name,
                    r.group,
                    r.dim,
                    spin,
                    r.recipe,
                    r.expected_lambda_sq.as_deref().unwrap_or("-")
                )?;
            }
            Ok(())
        }
    }
}
