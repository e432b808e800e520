//! Deterministic symmetric eigendecomposition, the deformed graph Fourier
//! transform (DGFT) and K-sparse spectral projection.

use crate::error::{Error, Result};
use crate::laplacian::OperatorMatrix;
use nalgebra::{DMatrix, DVector};

/// Orthonormal eigenbasis of a symmetric operator.
///
/// Eigenvalues are ascending (stable sort, so ties keep solver order) and
/// each eigenvector column is normalized so its first entry with magnitude
/// above 1e-12 is positive. Repeated calls on the same matrix are bitwise
/// identical.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralBasis {
    eigenvalues: DVector<f64>,
    eigenvectors: DMatrix<f64>,
    r_value: Option<f64>,
}

impl SpectralBasis {
    pub fn eigenvalues(&self) -> &DVector<f64> {
        &self.eigenvalues
    }

    pub fn eigenvectors(&self) -> &DMatrix<f64> {
        &self.eigenvectors
    }

    pub fn r_value(&self) -> Option<f64> {
        self.r_value
    }

    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn max_eigenvalue(&self) -> f64 {
        self.eigenvalues[self.eigenvalues.len() - 1]
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.eigenvalues[0]
    }
}

/// K-sparse DGFT coefficients. Support indices are distinct and ascending.
#[derive(Debug, Clone, PartialEq)]
pub struct SparseCoefficients {
    pub support: Vec<usize>,
    pub values: Vec<f64>,
    pub full_dim: usize,
}

impl SparseCoefficients {
    /// Expands to a dense coefficient vector.
    pub fn to_dense(&self) -> DVector<f64> {
        let mut s = DVector::zeros(self.full_dim);
        for (&k, &v) in self.support.iter().zip(&self.values) {
            s[k] = v;
        }
        s
    }
}

/// N x M matrix of graph signals, one observation per column.
#[derive(Debug, Clone, PartialEq)]
pub struct SignalMatrix {
    entries: DMatrix<f64>,
}

impl SignalMatrix {
    pub fn new(entries: DMatrix<f64>) -> Result<Self> {
        if entries.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidParams("non-finite signal entry".into()));
        }
        Ok(SignalMatrix { entries })
    }

    pub fn entries(&self) -> &DMatrix<f64> {
        &self.entries
    }

    pub fn n_nodes(&self) -> usize {
        self.entries.nrows()
    }

    pub fn n_signals(&self) -> usize {
        self.entries.ncols()
    }

    pub fn column(&self, i: usize) -> DVector<f64> {
        self.entries.column(i).into_owned()
    }
}

/// Symmetric eigendecomposition with the deterministic order and sign
/// conventions of [`SpectralBasis`].
pub fn eig_sym(m: &OperatorMatrix) -> Result<SpectralBasis> {
    let n = m.dim();
    let eig = m
        .entries()
        .clone()
        .try_symmetric_eigen(f64::EPSILON, 0)
        .ok_or(Error::ConvergenceFailure)?;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let eigenvalues = DVector::from_iterator(n, order.iter().map(|&k| eig.eigenvalues[k]));
    let mut eigenvectors = DMatrix::zeros(n, n);
    for (col, &k) in order.iter().enumerate() {
        let mut v = eig.eigenvectors.column(k).into_owned();
        if let Some(first) = v.iter().find(|e| e.abs() > 1e-12) {
            if *first < 0.0 {
                v = -v;
            }
        }
        eigenvectors.set_column(col, &v);
    }
    Ok(SpectralBasis {
        eigenvalues,
        eigenvectors,
        r_value: m.r_value(),
    })
}

/// Forward transform `U^T x`.
pub fn dgft(b: &SpectralBasis, x: &DVector<f64>) -> Result<DVector<f64>> {
    check_dim(b, x.len())?;
    Ok(b.eigenvectors.transpose() * x)
}

/// Inverse transform `U s` from dense coefficients.
pub fn idgft(b: &SpectralBasis, s: &DVector<f64>) -> Result<DVector<f64>> {
    check_dim(b, s.len())?;
    Ok(&b.eigenvectors * s)
}

/// Inverse transform `U_K s_K` from sparse coefficients.
pub fn idgft_sparse(b: &SpectralBasis, s: &SparseCoefficients) -> Result<DVector<f64>> {
    check_dim(b, s.full_dim)?;
    let mut x = DVector::zeros(b.dim());
    for (&k, &v) in s.support.iter().zip(&s.values) {
        x += b.eigenvectors.column(k) * v;
    }
    Ok(x)
}

/// Keeps the K largest DGFT coefficients in magnitude; ties break toward the
/// smaller index. Under an orthonormal basis this minimizes `|x - U s|_2`
/// over all K-sparse s.
pub fn topk_project(b: &SpectralBasis, x: &DVector<f64>, k: usize) -> Result<SparseCoefficients> {
    let n = b.dim();
    if k == 0 || k > n {
        return Err(Error::InvalidK { k, n });
    }
    let s = dgft(b, x)?;
    let mut idx: Vec<usize> = (0..n).collect();
    // stable sort by descending magnitude keeps smaller indices first on ties
    idx.sort_by(|&a, &b| s[b].abs().total_cmp(&s[a].abs()));
    let mut support: Vec<usize> = idx[..k].to_vec();
    support.sort_unstable();
    let values = support.iter().map(|&i| s[i]).collect();
    Ok(SparseCoefficients {
        support,
        values,
        full_dim: n,
    })
}

/// Reconstruction-error modes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NmseMode {
    /// `(1/M) sum_i |x(i) - xhat(i)| / |x(i)|`
    PerSignalMean,
    /// `|X - Xhat|_F / |X|_F`
    Frobenius,
}

/// Normalized reconstruction error between two equally shaped signal sets.
pub fn nmse(x_true: &SignalMatrix, x_hat: &SignalMatrix, mode: NmseMode) -> Result<f64> {
    if x_true.entries.shape() != x_hat.entries.shape() {
        return Err(Error::DimensionMismatch {
            expected: x_true.entries.len(),
            found: x_hat.entries.len(),
        });
    }
    match mode {
        NmseMode::Frobenius => {
            let denom = x_true.entries.norm();
            if denom == 0.0 {
                return Err(Error::ZeroReference);
            }
            Ok((&x_true.entries - &x_hat.entries).norm() / denom)
        }
        NmseMode::PerSignalMean => {
            let m = x_true.n_signals();
            let mut acc = 0.0;
            for i in 0..m {
                let denom = x_true.entries.column(i).norm();
                if denom == 0.0 {
                    return Err(Error::ZeroReference);
                }
                acc += (x_true.entries.column(i) - x_hat.entries.column(i)).norm() / denom;
            }
            Ok(acc / m as f64)
        }
    }
}

fn check_dim(b: &SpectralBasis, found: usize) -> Result<()> {
    if found != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: b.dim(),
            found,
        });
    }
    Ok(())
}
