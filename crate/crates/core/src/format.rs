//! Text formats for matrices and row scripts.
//!
//! Matrix:
//!
//! ```text
//! # comment
//! Q            (or `GF p`)
//! m n
//! a11 a12 ...  (m rows of n tokens)
//! ```
//!
//! Script: one operation per line, `swap i j`, `scale i c` or
//! `addmul i c j` (row i += c * row j). Lines starting with `#` and blank
//! lines are ignored in both formats.

use std::fmt;

use crate::error::{Error, Result};
use crate::matrix::{Matrix, RowOp, RowScript};
use crate::scalar::{Field, Scalar};

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.field())?;
        writeln!(f, "{} {}", self.rows(), self.cols())?;
        for i in 0..self.rows() {
            let row: Vec<String> = self.row(i).iter().map(Scalar::to_string).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Display for RowScript {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for op in self.ops() {
            writeln!(f, "{op}")?;
        }
        Ok(())
    }
}

/// Content lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn scalar_at(token: &str, field: Field, line: usize) -> Result<Scalar> {
    Scalar::parse(token, field).map_err(|e| match e {
        Error::Parse { message, .. } => Error::parse(line, message),
        Error::DivisionByZero => Error::parse(line, format!("zero denominator in `{token}`")),
        other => other,
    })
}

fn read_matrix<'a>(lines: &mut impl Iterator<Item = (usize, &'a str)>) -> Result<Option<Matrix>> {
    let Some((line, header)) = lines.next() else {
        return Ok(None);
    };
    let field: Field = header.parse().map_err(|e| match e {
        Error::Parse { message, .. } => Error::parse(line, message),
        other => other,
    })?;
    let (line, dims) = lines
        .next()
        .ok_or_else(|| Error::parse(line + 1, "missing dimension line"))?;
    let dims: Vec<usize> = dims
        .split_whitespace()
        .map(str::parse)
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| Error::parse(line, format!("bad dimensions `{dims}`")))?;
    let &[rows, cols] = dims.as_slice() else {
        return Err(Error::parse(line, "expected `m n`"));
    };
    if rows == 0 || cols == 0 {
        return Err(Error::parse(line, "dimensions must be positive"));
    }
    let mut entries = Vec::with_capacity(rows * cols);
    for r in 0..rows {
        let (line, text) = lines
            .next()
            .ok_or_else(|| Error::parse(line + r + 1, format!("expected {rows} rows, got {r}")))?;
        let before = entries.len();
        for tok in text.split_whitespace() {
            entries.push(scalar_at(tok, field, line)?);
        }
        if entries.len() - before != cols {
            return Err(Error::parse(
                line,
                format!("expected {cols} entries, got {}", entries.len() - before),
            ));
        }
    }
    Matrix::new(field, rows, cols, entries).map(Some)
}

/// Parses exactly one matrix; trailing content is an error.
pub fn parse_matrix(text: &str) -> Result<Matrix> {
    let mut lines = content_lines(text);
    let m = read_matrix(&mut lines)?.ok_or_else(|| Error::parse(1, "empty input"))?;
    if let Some((line, _)) = lines.next() {
        return Err(Error::parse(line, "trailing content after matrix"));
    }
    Ok(m)
}

/// Parses a stream of consecutive matrices (possibly none).
pub fn parse_matrices(text: &str) -> Result<Vec<Matrix>> {
    let mut lines = content_lines(text);
    let mut out = Vec::new();
    while let Some(m) = read_matrix(&mut lines)? {
        out.push(m);
    }
    Ok(out)
}

/// Parses a row script whose coefficients live in `field`.
pub fn parse_script(text: &str, field: Field) -> Result<RowScript> {
    content_lines(text)
        .map(|(line, l)| parse_op(l, field, line))
        .collect()
}

fn parse_op(text: &str, field: Field, line: usize) -> Result<RowOp> {
    let words: Vec<&str> = text.split_whitespace().collect();
    let index = |s: &str| -> Result<usize> {
        s.parse::<usize>()
            .ok()
            .filter(|&i| i > 0)
            .ok_or_else(|| Error::parse(line, format!("bad row index `{s}`")))
    };
    let op = match words.as_slice() {
        ["swap", i, j] => RowOp::swap(index(i)?, index(j)?),
        ["scale", i, c] => RowOp::scale(index(i)?, scalar_at(c, field, line)?),
        ["addmul", i, c, j] => RowOp::add_mul(index(i)?, scalar_at(c, field, line)?, index(j)?),
        _ => return Err(Error::parse(line, format!("unrecognised operation `{text}`"))),
    };
    op.map_err(|e| Error::parse(line, e.to_string()))
}
