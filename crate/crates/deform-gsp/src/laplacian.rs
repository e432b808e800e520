//! The deformed Laplacian `(D - I) r^2 - A r + I` and its classical special
//! cases, plus the associated quadratic (total-variation) forms.

use crate::error::{Error, Result};
use crate::graph::{Graph, Mode};
use nalgebra::{DMatrix, DVector};

/// Symmetric operator matrix, optionally tagged with the `r` it was built at.
#[derive(Debug, Clone, PartialEq)]
pub struct OperatorMatrix {
    entries: DMatrix<f64>,
    r_value: Option<f64>,
}

impl OperatorMatrix {
    /// Wraps an externally built symmetric matrix (not tagged with an r).
    pub fn from_symmetric(entries: DMatrix<f64>) -> Self {
        debug_assert_eq!(entries.nrows(), entries.ncols());
        OperatorMatrix {
            entries,
            r_value: None,
        }
    }

    pub fn entries(&self) -> &DMatrix<f64> {
        &self.entries
    }

    pub fn r_value(&self) -> Option<f64> {
        self.r_value
    }

    pub fn dim(&self) -> usize {
        self.entries.nrows()
    }

    pub fn into_entries(self) -> DMatrix<f64> {
        self.entries
    }

    /// Row-major CSV dump, one matrix row per line.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for i in 0..self.entries.nrows() {
            let row: Vec<String> = (0..self.entries.ncols())
                .map(|j| format!("{}", self.entries[(i, j)]))
                .collect();
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }
}

/// Builds `L_DF(r) = (D - I) r^2 - A r + I` with the mode-appropriate
/// adjacency and degree matrices. Constructed entrywise so symmetry is exact.
pub fn deformed_laplacian(g: &Graph, r: f64) -> OperatorMatrix {
    let n = g.n_nodes();
    let deg = g.degree_vector();
    let mut m = DMatrix::zeros(n, n);
    for i in 0..n {
        m[(i, i)] = (deg[i] - 1.0) * r * r + 1.0;
        for j in i + 1..n {
            let v = -g.weight(i, j) * r;
            m[(i, j)] = v;
            m[(j, i)] = v;
        }
    }
    OperatorMatrix {
        entries: m,
        r_value: Some(r),
    }
}

fn degree_plus_adjacency(g: &Graph, sign: f64, r_value: f64) -> OperatorMatrix {
    let n = g.n_nodes();
    let deg = g.degree_vector();
    let mut m = DMatrix::zeros(n, n);
    for i in 0..n {
        m[(i, i)] = deg[i];
        for j in i + 1..n {
            let v = sign * g.weight(i, j);
            m[(i, j)] = v;
            m[(j, i)] = v;
        }
    }
    OperatorMatrix {
        entries: m,
        r_value: Some(r_value),
    }
}

/// Combinatorial Laplacian `D - A` (nonnegative graphs).
pub fn combinatorial_laplacian(g: &Graph) -> Result<OperatorMatrix> {
    require_mode(g, Mode::Nonnegative)?;
    Ok(degree_plus_adjacency(g, -1.0, 1.0))
}

/// Signless Laplacian `D + A` (nonnegative graphs).
pub fn signless_laplacian(g: &Graph) -> Result<OperatorMatrix> {
    require_mode(g, Mode::Nonnegative)?;
    Ok(degree_plus_adjacency(g, 1.0, -1.0))
}

/// Signed Laplacian `D_S - A_S` (signed graphs).
pub fn signed_laplacian(g: &Graph) -> Result<OperatorMatrix> {
    require_mode(g, Mode::Signed)?;
    Ok(degree_plus_adjacency(g, -1.0, 1.0))
}

fn require_mode(g: &Graph, expected: Mode) -> Result<()> {
    if g.mode() != expected {
        return Err(Error::WrongMode {
            expected,
            found: g.mode(),
        });
    }
    Ok(())
}

/// Quadratic form `x^T M x`, the total-variation measure of the operator.
pub fn quadratic_form(m: &OperatorMatrix, x: &DVector<f64>) -> Result<f64> {
    if x.len() != m.dim() {
        return Err(Error::DimensionMismatch {
            expected: m.dim(),
            found: x.len(),
        });
    }
    Ok((x.transpose() * m.entries() * x)[(0, 0)])
}

/// PSD test: smallest eigenvalue at least `-tol * max(1, max |entry|)`.
pub fn is_psd(m: &OperatorMatrix, tol: f64) -> bool {
    let scale = m.entries().iter().fold(1.0f64, |acc, &v| acc.max(v.abs()));
    smallest_eigenvalue(m) >= -tol * scale
}

/// Default relative PSD tolerance.
pub const PSD_TOL: f64 = 1e-8;

pub fn smallest_eigenvalue(m: &OperatorMatrix) -> f64 {
    let eig = m.entries().clone().symmetric_eigenvalues();
    eig.iter().copied().fold(f64::INFINITY, f64::min)
}
