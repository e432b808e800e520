//! Reaction-diffusion dynamics `d phi / dt = -L_DF(r) phi`.
//!
//! The right-hand side is assembled nodewise from the diffusive coupling
//! `-r * sum_j a_ij (phi_i - phi_j)` and the degree-dependent local reaction
//! `phi_i * ((1 - d_ii) r^2 + d_ii r - 1)`; the two together reproduce
//! `-L_DF(r) phi` exactly.

use crate::error::{Error, Result};
use crate::graph::{Graph, Mode};
use crate::laplacian::deformed_laplacian;
use crate::spectral::{eig_sym, SpectralBasis};
use nalgebra::DVector;

/// One sample along a trajectory.
#[derive(Debug, Clone)]
pub struct DynamicsState {
    pub phi: DVector<f64>,
    pub time: f64,
    pub r: f64,
    pub eta: f64,
}

/// Integration method for [`simulate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Euler,
    SpectralExact,
}

fn require_nonnegative(g: &Graph) -> Result<()> {
    if g.mode() != Mode::Nonnegative {
        return Err(Error::WrongMode {
            expected: Mode::Nonnegative,
            found: g.mode(),
        });
    }
    Ok(())
}

/// Local reaction `h_i = phi_i * ((1 - d_ii) r^2 + d_ii r - 1)`.
pub fn reaction_term(g: &Graph, r: f64, phi: &DVector<f64>) -> Result<DVector<f64>> {
    require_nonnegative(g)?;
    check_len(g, phi)?;
    let deg = g.degree_vector();
    Ok(DVector::from_fn(g.n_nodes(), |i, _| {
        phi[i] * ((1.0 - deg[i]) * r * r + deg[i] * r - 1.0)
    }))
}

/// Nodewise right-hand side: diffusive coupling plus local reaction, with
/// unit diffusion coefficient. Equals `-L_DF(r) phi`.
pub fn rhs(g: &Graph, r: f64, phi: &DVector<f64>) -> Result<DVector<f64>> {
    rhs_with_coupling(g, r, 1.0, phi)
}

/// Same as [`rhs`] but with diffusion coefficient `eta` scaling only the
/// diffusive term.
pub fn rhs_with_coupling(g: &Graph, r: f64, eta: f64, phi: &DVector<f64>) -> Result<DVector<f64>> {
    let h = reaction_term(g, r, phi)?;
    let n = g.n_nodes();
    Ok(DVector::from_fn(n, |i, _| {
        let diffusion: f64 = (0..n)
            .map(|j| g.weight(i, j) * (phi[i] - phi[j]))
            .sum();
        -eta * r * diffusion + h[i]
    }))
}

/// Integrates the dynamics for `steps` steps of size `dt`, returning the
/// `steps + 1` states including the initial one.
///
/// `Euler` requires `dt * lambda_max < 2`; `SpectralExact` evaluates
/// `U exp(-Lambda t) U^T phi0` at each sample time.
pub fn simulate(
    g: &Graph,
    r: f64,
    phi0: &DVector<f64>,
    dt: f64,
    steps: usize,
    method: Method,
) -> Result<Vec<DynamicsState>> {
    require_nonnegative(g)?;
    check_len(g, phi0)?;
    if dt <= 0.0 || !dt.is_finite() {
        return Err(Error::InvalidParams(format!("dt must be positive, got {dt}")));
    }
    let basis = eig_sym(&deformed_laplacian(g, r))?;
    if method == Method::Euler {
        let lambda_max = basis.max_eigenvalue();
        if lambda_max > 0.0 && dt >= 2.0 / lambda_max {
            return Err(Error::UnstableStepSize {
                dt,
                limit: 2.0 / lambda_max,
            });
        }
    }
    let mut trajectory = Vec::with_capacity(steps + 1);
    trajectory.push(DynamicsState {
        phi: phi0.clone(),
        time: 0.0,
        r,
        eta: 1.0,
    });
    match method {
        Method::Euler => {
            let mut phi = phi0.clone();
            for k in 1..=steps {
                let dphi = rhs(g, r, &phi)?;
                phi += dphi * dt;
                trajectory.push(DynamicsState {
                    phi: phi.clone(),
                    time: k as f64 * dt,
                    r,
                    eta: 1.0,
                });
            }
        }
        Method::SpectralExact => {
            for k in 1..=steps {
                let t = k as f64 * dt;
                trajectory.push(DynamicsState {
                    phi: exact_state(&basis, phi0, t),
                    time: t,
                    r,
                    eta: 1.0,
                });
            }
        }
    }
    Ok(trajectory)
}

/// Closed-form solution `U diag(exp(-lambda_i t)) U^T phi0`.
pub fn exact_state(basis: &SpectralBasis, phi0: &DVector<f64>, t: f64) -> DVector<f64> {
    let u = basis.eigenvectors();
    let mut s = u.transpose() * phi0;
    for (i, lam) in basis.eigenvalues().iter().enumerate() {
        s[i] *= (-lam * t).exp();
    }
    u * s
}

/// Trajectory CSV: header `t,phi_0,...,phi_{N-1}`, one row per state.
pub fn trajectory_to_csv(trajectory: &[DynamicsState]) -> String {
    let n = trajectory.first().map_or(0, |s| s.phi.len());
    let mut out = String::from("t");
    for i in 0..n {
        out.push_str(&format!(",phi_{i}"));
    }
    out.push('\n');
    for state in trajectory {
        out.push_str(&format!("{}", state.time));
        for v in state.phi.iter() {
            out.push_str(&format!(",{v}"));
        }
        out.push('\n');
    }
    out
}

fn check_len(g: &Graph, phi: &DVector<f64>) -> Result<()> {
    if phi.len() != g.n_nodes() {
        return Err(Error::DimensionMismatch {
            expected: g.n_nodes(),
            found: phi.len(),
        });
    }
    Ok(())
}
