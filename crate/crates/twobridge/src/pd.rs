//! PD-code text: one crossing per line as `X a b c d`, labels listed
//! counterclockwise from the incoming under-strand. `#` starts a comment and
//! blank lines are skipped.

use std::fmt::Write as _;

use thiserror::Error;
use twobridge_core::{DiagramError, PlanarDiagram};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PdError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

/// Reads crossing records without building a diagram.
pub fn parse_pd_records(text: &str) -> Result<Vec<[u64; 4]>, PdError> {
    let mut records = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let syntax = |message: String| PdError::Syntax {
            line: i + 1,
            message,
        };
        let mut tokens = line.split_whitespace();
        if tokens.next() != Some("X") {
            return Err(syntax(format!("expected `X a b c d`, found `{line}`")));
        }
        let labels = tokens
            .map(|t| match t.parse::<u64>() {
                Ok(v) if v > 0 => Ok(v),
                _ => Err(syntax(format!("`{t}` is not a positive edge label"))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        let record: [u64; 4] = labels
            .try_into()
            .map_err(|v: Vec<u64>| syntax(format!("expected 4 labels, found {}", v.len())))?;
        records.push(record);
    }
    Ok(records)
}

pub fn parse_pd(text: &str) -> Result<PlanarDiagram, PdError> {
    Ok(PlanarDiagram::from_pd(&parse_pd_records(text)?)?)
}

/// Crossings in index order, edges numbered from 1.
pub fn emit_pd(d: &PlanarDiagram) -> String {
    let mut out = String::new();
    for [a, b, c, e] in d.to_pd() {
        writeln!(out, "X {a} {b} {c} {e}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use twobridge_core::{synthesize_diagram, TwistSequence};

    const TREFOIL: &str = "# trefoil\nX 1 5 2 4\n\nX 3 1 4 6   # middle\nX 5 3 6 2\n";

    #[test]
    fn parses_comments_and_blanks() {
        let d = parse_pd(TREFOIL).unwrap();
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.face_count(), 5);
    }

    #[test]
    fn syntax_errors_carry_line_numbers() {
        assert_eq!(
            parse_pd_records("X 1 2 3 4\nY 1 2 3 4"),
            Err(PdError::Syntax {
                line: 2,
                message: "expected `X a b c d`, found `Y 1 2 3 4`".into()
            })
        );
        assert!(matches!(
            parse_pd_records("X 1 2 3"),
            Err(PdError::Syntax { line: 1, .. })
        ));
        assert!(matches!(
            parse_pd_records("X 1 2 3 4 5"),
            Err(PdError::Syntax { .. })
        ));
        assert!(matches!(
            parse_pd_records("X 0 1 1 0"),
            Err(PdError::Syntax { .. })
        ));
        assert!(matches!(
            parse_pd_records("X 1 -2 2 1"),
            Err(PdError::Syntax { .. })
        ));
    }

    #[test]
    fn diagram_errors_pass_through() {
        assert!(matches!(
            parse_pd("X 1 5 2 4\nX 3 1 4 6\nX 5 3 6 7"),
            Err(PdError::Diagram(DiagramError::DanglingEdge { .. }))
        ));
        assert_eq!(
            parse_pd("# nothing\n").unwrap_err(),
            PdError::Diagram(DiagramError::Empty)
        );
    }

    #[test]
    fn emit_is_stable_and_round_trips() {
        let d = synthesize_diagram(&"[2,3,2]".parse::<TwistSequence>().unwrap());
        let text = emit_pd(&d);
        assert_eq!(text.lines().count(), 7);
        let back = parse_pd(&text).unwrap();
        assert!(back.is_isomorphic(&d));
        assert_eq!(emit_pd(&back), text);
    }

    #[test]
    fn figure_eight_text() {
        let d = synthesize_diagram(&"[2,2]".parse::<TwistSequence>().unwrap());
        let text = emit_pd(&d);
        assert!(text.lines().all(|l| l.starts_with("X ")));
        assert_eq!(text.lines().count(), 4);
    }
}
