//! Input parsing for drawing probabilities and CSV/JSON writers for
//! inclusion profiles.
//!
//! CSV numbers carry 15 significant digits, which round-trips to within a
//! few units in the last place of an `f64`.

use std::io::{Read, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::designs::{Design, InclusionProfile};
use crate::error::{Error, Result};

/// Formats `x` rounded to 15 significant digits, shortest form.
pub fn fmt_num(x: f64) -> String {
    if !x.is_finite() {
        return if x.is_nan() {
            "nan".into()
        } else if x > 0.0 {
            "inf".into()
        } else {
            "-inf".into()
        };
    }
    let rounded: f64 = format!("{x:.14e}").parse().expect("valid float");
    format!("{rounded}")
}

/// Parses `0.5,0.3,0.2`.
pub fn parse_alpha_list(s: &str) -> Result<Vec<f64>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<f64>()
                .map_err(|e| Error::Parse(format!("{t:?}: {e}")))
        })
        .collect::<Result<Vec<_>>>()
        .and_then(non_empty)
}

/// Parses a JSON array of numbers, or CSV with one probability per line and
/// an optional header line.
pub fn parse_alpha_text(text: &str) -> Result<Vec<f64>> {
    if text.trim_start().starts_with('[') {
        let v: Vec<f64> =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("JSON input: {e}")))?;
        return non_empty(v);
    }
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_reader(text.as_bytes());
    let mut out = Vec::new();
    for (line, rec) in rdr.records().enumerate() {
        let rec = rec.map_err(|e| Error::Parse(format!("CSV input: {e}")))?;
        let Some(field) = rec.get(0).filter(|f| !f.is_empty()) else {
            continue;
        };
        match field.parse::<f64>() {
            Ok(x) => out.push(x),
            Err(_) if line == 0 => {} // header
            Err(e) => {
                return Err(Error::Parse(format!("line {}: {field:?}: {e}", line + 1)));
            }
        }
    }
    non_empty(out)
}

pub fn read_alpha_file(path: &Path) -> Result<Vec<f64>> {
    let mut text = String::new();
    std::fs::File::open(path)?.read_to_string(&mut text)?;
    parse_alpha_text(&text)
}

fn non_empty(v: Vec<f64>) -> Result<Vec<f64>> {
    if v.is_empty() {
        Err(Error::Parse("no drawing probabilities found".into()))
    } else {
        Ok(v)
    }
}

/// One CSV row of an inclusion profile. `design` and `n` are present only in
/// multi-profile files.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProfileRecord {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub design: Option<Design>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    pub unit: usize,
    pub alpha: f64,
    pub pi: f64,
    pub per_draw: f64,
}

/// Writes `unit,alpha,pi,per_draw` for a single profile, or
/// `design,n,unit,alpha,pi,per_draw` for several. Units are one-based.
pub fn write_profiles_csv<W: Write>(
    out: W,
    alpha: &[f64],
    profiles: &[InclusionProfile],
) -> Result<()> {
    let multi = profiles.len() > 1;
    let mut w = csv::Writer::from_writer(out);
    let header: &[&str] = if multi {
        &["design", "n", "unit", "alpha", "pi", "per_draw"]
    } else {
        &["unit", "alpha", "pi", "per_draw"]
    };
    w.write_record(header).map_err(csv_err)?;
    for p in profiles {
        for (i, a) in alpha.iter().enumerate() {
            let mut row = Vec::with_capacity(6);
            if multi {
                row.push(p.design.to_string());
                row.push(p.n.to_string());
            }
            row.extend([
                (i + 1).to_string(),
                fmt_num(*a),
                fmt_num(p.pi[i]),
                fmt_num(p.per_draw[i]),
            ]);
            w.write_record(&row).map_err(csv_err)?;
        }
    }
    w.flush()?;
    Ok(())
}

pub fn read_profiles_csv<R: Read>(input: R) -> Result<Vec<ProfileRecord>> {
    csv::Reader::from_reader(input)
        .deserialize()
        .map(|r| r.map_err(csv_err))
        .collect()
}

#[derive(Serialize)]
struct ProfilesJson<'a> {
    alpha: &'a [f64],
    profiles: &'a [InclusionProfile],
}

pub fn write_profiles_json<W: Write>(
    out: W,
    alpha: &[f64],
    profiles: &[InclusionProfile],
) -> Result<()> {
    write_json(out, &ProfilesJson { alpha, profiles })
}

pub fn write_json<W: Write, T: Serialize>(mut out: W, value: &T) -> Result<()> {
    serde_json::to_writer_pretty(&mut out, value).map_err(|e| Error::Io(e.into()))?;
    writeln!(out)?;
    Ok(())
}

pub(crate) fn csv_err(e: csv::Error) -> Error {
    if e.is_io_error() {
        match e.into_kind() {
            csv::ErrorKind::Io(io) => Error::Io(io),
            _ => unreachable!(),
        }
    } else {
        Error::Parse(e.to_string())
    }
}
