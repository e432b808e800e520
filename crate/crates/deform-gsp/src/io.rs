//! Text parsers and writers for the file formats the CLI speaks: signal
//! matrices, price matrices (log-returns), vectors and trajectory CSV.

use crate::error::{Error, Result};
use crate::spectral::SignalMatrix;
use nalgebra::{DMatrix, DVector};
use std::path::Path;

/// Parses a numeric CSV into a dense matrix. All rows must have the same
/// number of fields; LF or CRLF line endings.
pub fn parse_matrix(text: &str) -> Result<DMatrix<f64>> {
    let mut rows: Vec<Vec<f64>> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let row: Option<Vec<f64>> = line
            .split(',')
            .map(|f| f.trim().parse::<f64>().ok().filter(|v| v.is_finite()))
            .collect();
        match row {
            Some(r) if rows.is_empty() || r.len() == rows[0].len() => rows.push(r),
            _ => {
                return Err(Error::MalformedLine {
                    line: idx + 1,
                    content: raw.to_string(),
                })
            }
        }
    }
    if rows.is_empty() {
        return Err(Error::InvalidParams("empty matrix".into()));
    }
    let (nr, nc) = (rows.len(), rows[0].len());
    Ok(DMatrix::from_fn(nr, nc, |i, j| rows[i][j]))
}

/// Parses an N x M signal matrix from CSV text.
pub fn parse_signal_matrix(text: &str) -> Result<SignalMatrix> {
    SignalMatrix::new(parse_matrix(text)?)
}

pub fn load_signal_matrix(path: impl AsRef<Path>) -> Result<SignalMatrix> {
    parse_signal_matrix(&std::fs::read_to_string(path)?)
}

/// Parses a comma-separated vector, e.g. `"1,0,-0.5"`.
pub fn parse_vector(text: &str) -> Result<DVector<f64>> {
    let m = parse_matrix(text.trim())?;
    if m.nrows() == 1 {
        Ok(m.transpose().column(0).into_owned())
    } else if m.ncols() == 1 {
        Ok(m.column(0).into_owned())
    } else {
        Err(Error::InvalidParams("expected a vector, got a matrix".into()))
    }
}

/// Converts an N x Q strictly positive price matrix to N x (Q-1)
/// log-returns: `X[i][j] = log P[i][j] - log P[i][j-1]`.
pub fn log_returns(prices: &DMatrix<f64>) -> Result<SignalMatrix> {
    let (n, q) = prices.shape();
    if q < 2 {
        return Err(Error::InvalidParams(
            "need at least two price columns".into(),
        ));
    }
    for i in 0..n {
        for j in 0..q {
            if prices[(i, j)] <= 0.0 {
                return Err(Error::NonpositivePrice {
                    row: i,
                    col: j,
                    value: prices[(i, j)],
                });
            }
        }
    }
    let x = DMatrix::from_fn(n, q - 1, |i, j| {
        prices[(i, j + 1)].ln() - prices[(i, j)].ln()
    });
    SignalMatrix::new(x)
}

/// Parses a price CSV and converts it to log-returns.
pub fn parse_log_returns(text: &str) -> Result<SignalMatrix> {
    log_returns(&parse_matrix(text)?)
}

/// Row-major CSV for an arbitrary matrix.
pub fn matrix_to_csv(m: &DMatrix<f64>) -> String {
    let mut out = String::new();
    for i in 0..m.nrows() {
        let row: Vec<String> = (0..m.ncols()).map(|j| format!("{}", m[(i, j)])).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}
