//! Plain-text channel files.
//!
//! ```text
//! # BSC(0.1102)
//! 2
//! 0.8898 0.1102
//! 0.1102 0.8898
//! ```
//!
//! Line 1 holds the number of outputs `N`, lines 2 and 3 the transition rows
//! for inputs 0 and 1. `#` starts a comment; blank lines are skipped.

use std::fs;
use std::path::Path;

use e0_extremal::channel::ROW_SUM_TOL;
use e0_extremal::BinaryChannel;

use crate::error::{CliError, CliResult};

struct Token<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

/// Non-comment lines, each split into positioned tokens.
fn content_lines(text: &str) -> Vec<(usize, Vec<Token<'_>>)> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let body = raw.split('#').next().unwrap_or("");
        let mut toks = Vec::new();
        let mut start = None;
        for (pos, c) in body.char_indices().chain(std::iter::once((body.len(), ' '))) {
            match (c.is_whitespace(), start) {
                (false, None) => start = Some(pos),
                (true, Some(s)) => {
                    toks.push(Token { text: &body[s..pos], line: i + 1, column: body[..s].chars().count() + 1 });
                    start = None;
                }
                _ => {}
            }
        }
        if !toks.is_empty() {
            out.push((i + 1, toks));
        }
    }
    out
}

fn parse_err(line: usize, column: usize, msg: impl Into<String>) -> CliError {
    CliError::Parse { line, column, msg: msg.into() }
}

fn parse_row(row: usize, line: usize, toks: &[Token<'_>], n: usize) -> CliResult<Vec<f64>> {
    if toks.len() != n {
        return Err(parse_err(line, 1, format!("row {row} has {} entries, expected {n}", toks.len())));
    }
    let mut vals = Vec::with_capacity(n);
    for t in toks {
        let v: f64 = t
            .text
            .parse()
            .map_err(|_| parse_err(t.line, t.column, format!("row {row}: '{}' is not a number", t.text)))?;
        if !v.is_finite() || v < 0.0 {
            return Err(CliError::Invariant {
                row,
                msg: format!("entry {v} at column {} is not a probability", t.column),
            });
        }
        vals.push(v);
    }
    let sum: f64 = vals.iter().sum();
    if (sum - 1.0).abs() > ROW_SUM_TOL {
        return Err(CliError::Invariant { row, msg: format!("entries sum to {sum}, not 1") });
    }
    Ok(vals)
}

pub fn parse_channel(text: &str) -> CliResult<BinaryChannel> {
    let lines = content_lines(text);
    let Some((hline, header)) = lines.first() else {
        return Err(parse_err(1, 1, "empty channel file"));
    };
    if header.len() != 1 {
        return Err(parse_err(*hline, header[1].column, "expected a single integer N"));
    }
    let n: usize = header[0].text.parse().ok().filter(|&n| n > 0).ok_or_else(|| {
        parse_err(*hline, header[0].column, format!("'{}' is not a positive integer", header[0].text))
    })?;

    let mut rows = Vec::with_capacity(2);
    for row in 0..2 {
        let Some((line, toks)) = lines.get(row + 1) else {
            let last = text.lines().count();
            return Err(parse_err(last + 1, 1, format!("missing row {row}")));
        };
        rows.push(parse_row(row, *line, toks, n)?);
    }
    if let Some((line, toks)) = lines.get(3) {
        return Err(parse_err(*line, toks[0].column, "unexpected content after row 1"));
    }
    let w1 = rows.pop().expect("two rows");
    let w0 = rows.pop().expect("two rows");
    // rows were validated above, so this cannot fail on a well-formed file
    Ok(BinaryChannel::new(w0, w1)?)
}

pub fn read_channel(path: &Path) -> CliResult<BinaryChannel> {
    let text = fs::read_to_string(path).map_err(|e| CliError::io(path.display().to_string(), e))?;
    parse_channel(&text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use e0_extremal::extremal::{bec_matrix, bsc_matrix};

    #[test]
    fn reads_bec_and_bsc() {
        assert_eq!(parse_channel("3\n0.7 0.3 0\n0 0.3 0.7").unwrap(), bec_matrix(0.3).unwrap());
        assert_eq!(parse_channel("2\n0.8898 0.1102\n0.1102 0.8898").unwrap(), bsc_matrix(0.1102).unwrap());
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# a BSC\n\n2   # outputs\n0.8898\t0.1102\n\n  0.1102 0.8898  \n# end\n";
        assert_eq!(parse_channel(text).unwrap(), bsc_matrix(0.1102).unwrap());
    }

    #[test]
    fn row_sum_names_the_row() {
        match parse_channel("2\n0.6 0.6\n0.5 0.5") {
            Err(CliError::Invariant { row: 0, .. }) => {}
            other => panic!("{other:?}"),
        }
        match parse_channel("2\n0.5 0.5\n0.4 0.5") {
            Err(CliError::Invariant { row: 1, .. }) => {}
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn negative_entry() {
        match parse_channel("3\n0.5 0.5 0\n-0.1 0.6 0.5") {
            Err(CliError::Invariant { row: 1, msg }) => assert!(msg.contains("column 1")),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn parse_positions() {
        match parse_channel("2\n0.5 abc\n0.5 0.5") {
            Err(CliError::Parse { line: 2, column: 5, .. }) => {}
            other => panic!("{other:?}"),
        }
        match parse_channel("# hdr\ntwo\n0.5 0.5\n0.5 0.5") {
            Err(CliError::Parse { line: 2, column: 1, .. }) => {}
            other => panic!("{other:?}"),
        }
        match parse_channel("2\n0.5 0.5 0\n0.5 0.5") {
            Err(CliError::Parse { line: 2, .. }) => {}
            other => panic!("{other:?}"),
        }
        match parse_channel("2\n0.5 0.5\n") {
            Err(CliError::Parse { line: 3, .. }) => {}
            other => panic!("{other:?}"),
        }
        match parse_channel("2\n0.5 0.5\n0.5 0.5\n1") {
            Err(CliError::Parse { line: 4, .. }) => {}
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_channel("\n# only comments\n"), Err(CliError::Parse { .. })));
        assert!(matches!(parse_channel("0\n\n"), Err(CliError::Parse { line: 1, .. })));
    }
}
