//! Plain-text persistence for [`DominationTable`].
//!
//! The format is a single header line
//!
//! ```text
//! DOMPOLY-TABLE v1 n_max=<N>
//! ```
//!
//! followed by one line per row `n = 1..=N` holding the counts
//! `d(C_n, 0) .. d(C_n, n)` as space-separated decimal integers. Writing is
//! canonical (no leading zeros, single spaces, `\n` line endings), so a table
//! round-trips byte-for-byte and extending a cached table preserves the
//! previously written row lines exactly.

use std::io::{self, BufRead, Write};

use thiserror::Error;

use super::{Count, DominationTable};

const HEADER_PREFIX: &str = "DOMPOLY-TABLE v1 n_max=";

/// Errors from reading a cache file.
#[derive(Debug, Error)]
pub enum CacheError {
    #[error("cache i/o failed: {0}")]
    Io(#[from] io::Error),
    #[error("bad cache header: expected `{HEADER_PREFIX}<N>`, found `{found}`")]
    BadHeader { found: String },
    #[error("cache declares {expected} rows but holds {found}")]
    RowCount { expected: u32, found: u32 },
    #[error("row {n} has {found} entries, expected {expected}")]
    RowLength { n: u32, expected: u32, found: u32 },
    #[error("row {n} holds a non-numeric count `{token}`")]
    BadCount { n: u32, token: String },
}

/// Serializes the table in the canonical v1 format.
pub fn write_cache(table: &DominationTable, mut out: impl Write) -> io::Result<()> {
    writeln!(out, "{HEADER_PREFIX}{}", table.n_max())?;
    for n in 1..=table.n_max() {
        let row = table.row(n);
        let mut line = String::new();
        for (i, value) in row.iter().enumerate() {
            if i > 0 {
                line.push(' ');
            }
            line.push_str(&value.to_string());
        }
        writeln!(out, "{line}")?;
    }
    Ok(())
}

/// Parses a table previously written by [`write_cache`].
pub fn read_cache(input: impl BufRead) -> Result<DominationTable, CacheError> {
    let mut lines = input.lines();
    let header = lines.next().transpose()?.unwrap_or_default();
    let n_max: u32 = header
        .strip_prefix(HEADER_PREFIX)
        .and_then(|rest| rest.parse().ok())
        .filter(|&n| n >= 1)
        .ok_or(CacheError::BadHeader { found: header })?;

    let mut rows = Vec::with_capacity(n_max as usize);
    for n in 1..=n_max {
        let Some(line) = lines.next().transpose()? else {
            return Err(CacheError::RowCount {
                expected: n_max,
                found: n - 1,
            });
        };
        let row: Vec<Count> = line
            .split_whitespace()
            .map(|token| {
                token.parse().map_err(|_| CacheError::BadCount {
                    n,
                    token: token.to_string(),
                })
            })
            .collect::<Result<_, _>>()?;
        if row.len() as u32 != n + 1 {
            return Err(CacheError::RowLength {
                n,
                expected: n + 1,
                found: row.len() as u32,
            });
        }
        rows.push(row);
    }
    Ok(DominationTable { rows })
}
