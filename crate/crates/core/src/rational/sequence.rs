use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::{self, Write};
use core::str::FromStr;

use super::SequenceError;

/// Crossing counts `[c1, ..., cn]` of the twist regions of a 2-bridge diagram,
/// read top to bottom.
///
/// Every entry is at least 1. The sequence is *canonical* when its last entry
/// is at least 2 (or it has a single entry); `[2, 1, 1]` and `[2, 2]` describe
/// the same fraction but only the latter is canonical.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwistSequence(Vec<u64>);

impl TwistSequence {
    pub fn new(entries: Vec<u64>) -> Result<Self, SequenceError> {
        if entries.is_empty() {
            return Err(SequenceError::Empty);
        }
        if let Some(pos) = entries.iter().position(|&c| c == 0) {
            return Err(SequenceError::NonPositiveEntry {
                index: pos,
                value: 0,
            });
        }
        Ok(TwistSequence(entries))
    }

    /// Accepts signed input and rejects anything non-positive.
    pub fn from_signed(entries: &[i64]) -> Result<Self, SequenceError> {
        let mut out = Vec::with_capacity(entries.len());
        for (index, &value) in entries.iter().enumerate() {
            if value <= 0 {
                return Err(SequenceError::NonPositiveEntry { index, value });
            }
            out.push(value as u64);
        }
        Self::new(out)
    }

    /// `[entry; count]`, e.g. the `[2, 2, ..., 2]` family.
    pub fn repeated(entry: u64, count: usize) -> Result<Self, SequenceError> {
        Self::new(vec![entry; count])
    }

    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn crossing_count(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn is_canonical(&self) -> bool {
        self.0.len() == 1 || *self.0.last().unwrap() >= 2
    }

    /// Folds a trailing 1 into its predecessor: `[.., a, 1]` becomes `[.., a + 1]`.
    pub fn canonical(&self) -> Self {
        let mut entries = self.0.clone();
        if entries.len() >= 2 && entries[entries.len() - 1] == 1 {
            entries.pop();
            *entries.last_mut().unwrap() += 1;
        }
        TwistSequence(entries)
    }

    /// Run-length text: `2^200`, `3,2^4,5`.
    pub fn to_run_length(&self) -> String {
        let mut out = String::new();
        let mut i = 0;
        while i < self.0.len() {
            let c = self.0[i];
            let run = self.0[i..].iter().take_while(|&&x| x == c).count();
            if !out.is_empty() {
                out.push(',');
            }
            if run == 1 {
                let _ = write!(out, "{c}");
            } else {
                let _ = write!(out, "{c}^{run}");
            }
            i += run;
        }
        out
    }
}

impl fmt::Display for TwistSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_char('[')?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_char(',')?;
            }
            write!(f, "{c}")?;
        }
        f.write_char(']')
    }
}

/// Parses `[c1,c2,...]` as well as the run-length form, with or without
/// brackets: `[2^3,5]`, `2^200`.
impl FromStr for TwistSequence {
    type Err = SequenceError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let trimmed = s.trim();
        let body = match (trimmed.strip_prefix('['), trimmed.strip_suffix(']')) {
            (Some(_), Some(_)) => &trimmed[1..trimmed.len() - 1],
            (None, None) => trimmed,
            _ => return Err(SequenceError::Parse(trimmed.to_string())),
        };
        if body.trim().is_empty() {
            return Err(SequenceError::Empty);
        }
        let mut entries = Vec::new();
        for token in body.split(',') {
            let token = token.trim();
            let bad = || SequenceError::Parse(token.to_string());
            let (value, run) = match token.split_once('^') {
                Some((v, r)) => (v.trim(), r.trim().parse::<usize>().map_err(|_| bad())?),
                None => (token, 1),
            };
            let value: i64 = value.parse().map_err(|_| bad())?;
            if value <= 0 {
                return Err(SequenceError::NonPositiveEntry {
                    index: entries.len(),
                    value,
                });
            }
            if run == 0 {
                return Err(bad());
            }
            entries.extend(core::iter::repeat_n(value as u64, run));
        }
        TwistSequence::new(entries)
    }
}
