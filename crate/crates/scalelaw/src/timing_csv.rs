//! CSV ingestion and emission for benchmark timing records.
//!
//! The schema is one header row with columns `n`, `p`, `time` in any order,
//! plus an optional `replicate` column. Unknown columns are ignored so
//! harness output with extra fields parses as-is.

use std::io::Read;

use scalelaw_core::TimingRecord;

#[derive(Debug, thiserror::Error)]
pub enum CsvError {
    #[error("empty input: no CSV header row")]
    Empty,
    #[error("schema error: missing required column '{0}'")]
    MissingColumn(&'static str),
    #[error("row error at row {row}: {message}")]
    Row { row: u64, message: String },
    #[error("malformed CSV: {0}")]
    Malformed(#[from] csv::Error),
}

fn find_column(headers: &csv::StringRecord, name: &'static str) -> Option<usize> {
    headers
        .iter()
        .position(|header| header.trim().eq_ignore_ascii_case(name))
}

fn field<'a>(
    record: &'a csv::StringRecord,
    idx: usize,
    name: &'static str,
    row: u64,
) -> Result<&'a str, CsvError> {
    record.get(idx).ok_or(CsvError::Row {
        row,
        message: format!("missing value for column '{name}'"),
    })
}

/// Parses timing records from CSV text, reporting schema problems by column
/// name and value problems by file row number (the header is row 1).
pub fn parse_timing_csv<R: Read>(source: R) -> Result<Vec<TimingRecord>, CsvError> {
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(source);
    let headers = reader.headers()?.clone();
    if headers.iter().all(|h| h.trim().is_empty()) {
        return Err(CsvError::Empty);
    }
    let n_idx = find_column(&headers, "n").ok_or(CsvError::MissingColumn("n"))?;
    let p_idx = find_column(&headers, "p").ok_or(CsvError::MissingColumn("p"))?;
    let time_idx = find_column(&headers, "time").ok_or(CsvError::MissingColumn("time"))?;
    let replicate_idx = find_column(&headers, "replicate");

    let mut records = Vec::new();
    for result in reader.records() {
        let record = result?;
        let row = record.position().map_or(0, |pos| pos.line());

        let n: u64 = field(&record, n_idx, "n", row)?
            .parse()
            .map_err(|_| CsvError::Row {
                row,
                message: format!(
                    "column 'n' must be a positive integer, got '{}'",
                    record.get(n_idx).unwrap_or_default()
                ),
            })?;
        let p: u32 = field(&record, p_idx, "p", row)?
            .parse()
            .map_err(|_| CsvError::Row {
                row,
                message: format!(
                    "column 'p' must be a positive integer, got '{}'",
                    record.get(p_idx).unwrap_or_default()
                ),
            })?;
        let time: f64 = field(&record, time_idx, "time", row)?
            .parse()
            .map_err(|_| CsvError::Row {
                row,
                message: format!(
                    "column 'time' must be a decimal number of seconds, got '{}'",
                    record.get(time_idx).unwrap_or_default()
                ),
            })?;

        let mut timing = TimingRecord::new(n, p, time).map_err(|err| CsvError::Row {
            row,
            message: err.to_string(),
        })?;
        if let Some(idx) = replicate_idx {
            let raw = record.get(idx).unwrap_or_default();
            if !raw.is_empty() {
                let replicate: u32 = raw.parse().map_err(|_| CsvError::Row {
                    row,
                    message: format!("column 'replicate' must be an integer, got '{raw}'"),
                })?;
                timing = timing.with_replicate(replicate);
            }
        }
        records.push(timing);
    }
    Ok(records)
}

/// Renders records back to the ingestion schema. The `replicate` column is
/// emitted only when at least one record carries an index, so a parse/emit
/// cycle reproduces the records exactly.
pub fn timing_records_to_csv(records: &[TimingRecord]) -> String {
    let with_replicates = records.iter().any(|r| r.replicate().is_some());
    let mut out = String::from(if with_replicates {
        "n,p,time,replicate\n"
    } else {
        "n,p,time\n"
    });
    for record in records {
        out.push_str(&format!("{},{},{}", record.n(), record.p(), record.time()));
        if with_replicates {
            out.push(',');
            if let Some(replicate) = record.replicate() {
                out.push_str(&replicate.to_string());
            }
        }
        out.push('\n');
    }
    out
}
