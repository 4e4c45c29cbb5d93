//! Beta table files: one `length value` pair per line, `#` comments allowed.
//! Numbers are fractions `p/q`, integers or decimals, all read exactly.

use thiserror::Error;
use twobridge_core::{BetaTable, ConstructError, Fraction};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BetaFileError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error(transparent)]
    Table(#[from] ConstructError),
}

pub fn parse_beta_table(text: &str) -> Result<BetaTable, BetaFileError> {
    let mut samples = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let syntax = |message: String| BetaFileError::Syntax {
            line: i + 1,
            message,
        };
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [length, value] = fields[..] else {
            return Err(syntax(format!("expected `length value`, found `{line}`")));
        };
        let number = |s: &str| {
            s.parse::<Fraction>()
                .map_err(|_| syntax(format!("`{s}` is not a number")))
        };
        samples.push((number(length)?, number(value)?));
    }
    Ok(BetaTable::new(samples)?)
}
