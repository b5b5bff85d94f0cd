//! Table file formats: `grid` (16×16 decimal text), `json` (table plus
//! provenance), `bin` (raw 256 bytes).
//!
//! All three round-trip the table losslessly; only `json` carries
//! provenance.

use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::ordering::OrderingKind;
use crate::sbox::{Provenance, SBox};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Grid,
    Json,
    Bin,
}

impl FromStr for TableFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "grid" => Ok(TableFormat::Grid),
            "json" => Ok(TableFormat::Json),
            "bin" => Ok(TableFormat::Bin),
            other => Err(format!(
                "unknown format {other:?}, expected grid, json or bin"
            )),
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("expected 256 values, found {0}")]
    WrongLength(usize),
    #[error("value {0} is out of range 0..=255")]
    ValueOutOfRange(u64),
    #[error("not valid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported version {0}, expected 1")]
    BadVersion(u32),
    #[error("ordering code: {0}")]
    BadOrdering(String),
    #[error("binary table must be exactly 256 bytes, found {0}")]
    WrongByteCount(usize),
    #[error("input is not a table in any supported format")]
    Unrecognized,
}

#[derive(Serialize, Deserialize)]
struct JsonTable {
    version: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    p: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    b: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    ordering: Option<String>,
    table: Vec<u16>,
}

/// Serializes as 16 rows of 16 space-separated decimals, S(0) first.
pub fn write_grid(sbox: &SBox) -> String {
    let mut out = String::with_capacity(1024);
    for row in sbox.table().chunks(16) {
        let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_grid(text: &str) -> Result<SBox, FormatError> {
    let mut table = [0u8; 256];
    let mut n = 0usize;
    for tok in text.split_whitespace() {
        let v: u64 = tok.parse().map_err(|_| FormatError::Unrecognized)?;
        if v > 255 {
            return Err(FormatError::ValueOutOfRange(v));
        }
        if n < 256 {
            table[n] = v as u8;
        }
        n += 1;
    }
    if n != 256 {
        return Err(FormatError::WrongLength(n));
    }
    Ok(SBox::from_table(table))
}

pub fn write_json(sbox: &SBox) -> String {
    let doc = JsonTable {
        version: 1,
        p: sbox.provenance().map(|pr| pr.p),
        b: sbox.provenance().map(|pr| pr.b),
        ordering: sbox.provenance().map(|pr| pr.ordering.code().to_string()),
        table: sbox.table().iter().map(|&v| v as u16).collect(),
    };
    serde_json::to_string(&doc).expect("serializable")
}

pub fn parse_json(text: &str) -> Result<SBox, FormatError> {
    let doc: JsonTable = serde_json::from_str(text)?;
    if doc.version != 1 {
        return Err(FormatError::BadVersion(doc.version));
    }
    if doc.table.len() != 256 {
        return Err(FormatError::WrongLength(doc.table.len()));
    }
    let mut table = [0u8; 256];
    for (i, &v) in doc.table.iter().enumerate() {
        if v > 255 {
            return Err(FormatError::ValueOutOfRange(v as u64));
        }
        table[i] = v as u8;
    }
    match (doc.p, doc.b, doc.ordering) {
        (Some(p), Some(b), Some(code)) => {
            let ordering = code
                .parse::<OrderingKind>()
                .map_err(FormatError::BadOrdering)?;
            Ok(SBox::with_provenance(table, Provenance { p, b, ordering }))
        }
        _ => Ok(SBox::from_table(table)),
    }
}

pub fn write_bin(sbox: &SBox) -> [u8; 256] {
    *sbox.table()
}

pub fn parse_bin(bytes: &[u8]) -> Result<SBox, FormatError> {
    let table: [u8; 256] = bytes
        .try_into()
        .map_err(|_| FormatError::WrongByteCount(bytes.len()))?;
    Ok(SBox::from_table(table))
}

/// Parses any supported format: JSON (leading `{`), then grid text, then
/// raw 256-byte binary.
pub fn parse_auto(bytes: &[u8]) -> Result<SBox, FormatError> {
    if let Ok(text) = std::str::from_utf8(bytes) {
        if text.trim_start().starts_with('{') {
            return parse_json(text);
        }
        if let Ok(sbox) = parse_grid(text) {
            return Ok(sbox);
        }
    }
    if bytes.len() == 256 {
        return parse_bin(bytes);
    }
    Err(FormatError::Unrecognized)
}

pub fn parse_as(bytes: &[u8], format: TableFormat) -> Result<SBox, FormatError> {
    match format {
        TableFormat::Grid => {
            parse_grid(std::str::from_utf8(bytes).map_err(|_| FormatError::Unrecognized)?)
        }
        TableFormat::Json => {
            parse_json(std::str::from_utf8(bytes).map_err(|_| FormatError::Unrecognized)?)
        }
        TableFormat::Bin => parse_bin(bytes),
    }
}
