//! Joint learning of the Laplacian form and K-sparse signal representations.
//!
//! A PSD-gated line search over `r`: at each grid point the deformed
//! Laplacian is eigendecomposed, the K-sparse representation has a closed
//! form (keep the K largest DGFT coefficients), and the objective
//! `(1 - gamma) tr(X^T L_DF(r) X) + gamma |X - U(r) S|_F^2` is minimized
//! over all grid points whose Laplacian is positive semidefinite.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::laplacian::{deformed_laplacian, is_psd, PSD_TOL};
use crate::spectral::{
    eig_sym, idgft_sparse, nmse, topk_project, NmseMode, SignalMatrix, SparseCoefficients,
    SpectralBasis,
};
use nalgebra::DMatrix;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;
use serde_json::json;

/// Spacing of the r grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GridMode {
    /// `r_n = r_min + n * step`, the default line search.
    Uniform,
    /// `r_n = r_{n-1} + n * step`, the accelerating update; clamped at
    /// `r_max`.
    PaperAccelerating,
}

/// Line-search configuration.
#[derive(Debug, Clone)]
pub struct LearnConfig {
    pub gamma: f64,
    pub k: usize,
    pub r_min: f64,
    pub r_max: f64,
    pub step: f64,
    pub psd_tol: f64,
    pub grid_mode: GridMode,
}

impl LearnConfig {
    pub fn new(gamma: f64, k: usize) -> Result<Self> {
        let cfg = LearnConfig {
            gamma,
            k,
            r_min: -1.0,
            r_max: 1.0,
            step: 0.01,
            psd_tol: PSD_TOL,
            grid_mode: GridMode::Uniform,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.gamma) {
            return Err(Error::InvalidParams("gamma must lie in [0,1]".into()));
        }
        if self.k == 0 {
            return Err(Error::InvalidParams("K must be positive".into()));
        }
        if self.r_min > self.r_max {
            return Err(Error::InvalidParams("r_min must not exceed r_max".into()));
        }
        if !(self.step > 0.0 && self.step < 1.0) {
            return Err(Error::InvalidParams("step must lie in (0,1)".into()));
        }
        if self.psd_tol < 0.0 {
            return Err(Error::InvalidParams("psd_tol must be nonnegative".into()));
        }
        Ok(())
    }

    /// The r values visited by the line search, in sweep order.
    pub fn grid_values(&self) -> Vec<f64> {
        let mut values = Vec::new();
        match self.grid_mode {
            GridMode::Uniform => {
                let mut n = 0u64;
                loop {
                    let r = self.r_min + n as f64 * self.step;
                    if r > self.r_max + self.step * 1e-9 {
                        break;
                    }
                    values.push(r.min(self.r_max));
                    n += 1;
                }
            }
            GridMode::PaperAccelerating => {
                let mut r = self.r_min;
                values.push(r);
                let mut n = 1u64;
                while r < self.r_max {
                    r += n as f64 * self.step;
                    n += 1;
                    values.push(r.min(self.r_max));
                }
            }
        }
        values
    }
}

/// One grid point with its precomputed eigenbasis (PSD points only).
pub struct GridPoint {
    pub r: f64,
    pub psd: bool,
    pub basis: Option<SpectralBasis>,
}

/// Eigendecompositions along the r grid for one graph, reusable across
/// signal realizations and gamma values.
pub struct LaplacianGrid {
    points: Vec<GridPoint>,
}

impl LaplacianGrid {
    /// Decomposes every grid point. Grid points are independent, so this
    /// runs in parallel; the output order matches the sequential sweep.
    pub fn build(g: &Graph, cfg: &LearnConfig) -> Result<Self> {
        cfg.validate()?;
        let points: Vec<GridPoint> = cfg
            .grid_values()
            .into_par_iter()
            .map(|r| -> Result<GridPoint> {
                let m = deformed_laplacian(g, r);
                if is_psd(&m, cfg.psd_tol) {
                    Ok(GridPoint {
                        r,
                        psd: true,
                        basis: Some(eig_sym(&m)?),
                    })
                } else {
                    Ok(GridPoint {
                        r,
                        psd: false,
                        basis: None,
                    })
                }
            })
            .collect::<Result<_>>()?;
        Ok(LaplacianGrid { points })
    }

    pub fn points(&self) -> &[GridPoint] {
        &self.points
    }
}

/// One evaluated grid point: smoothness and fitting terms are stored
/// separately so the objective can be reassembled for any gamma.
#[derive(Debug, Clone, Copy)]
pub struct GridEval {
    pub r: f64,
    pub psd: bool,
    pub smoothness: f64,
    pub fit_error: f64,
}

impl GridEval {
    pub fn objective(&self, gamma: f64) -> f64 {
        (1.0 - gamma) * self.smoothness + gamma * self.fit_error
    }
}

/// Trace entry for one visited grid point.
#[derive(Debug, Clone, Copy)]
pub struct TraceEntry {
    pub r: f64,
    pub objective: f64,
    pub psd: bool,
}

/// Output of [`learn`].
#[derive(Debug)]
pub struct LearnResult {
    pub r_star: f64,
    pub basis: SpectralBasis,
    pub coefficients: Vec<SparseCoefficients>,
    pub reconstruction: SignalMatrix,
    pub objective_trace: Vec<TraceEntry>,
    pub f_min: f64,
}

impl LearnResult {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "r_star": self.r_star,
            "f_min": self.f_min,
            "signals": self.coefficients.iter().map(|c| json!({
                "support": c.support,
                "values": c.values,
            })).collect::<Vec<_>>(),
            "trace": self.objective_trace.iter().map(|t| json!({
                "r": t.r,
                "f": if t.psd { json!(t.objective) } else { json!(null) },
                "psd": t.psd,
            })).collect::<Vec<_>>(),
        })
    }
}

/// Problem objective `(1-gamma) tr(X^T L_DF(r) X) + gamma |X - U(r) S|_F^2`
/// for explicit coefficients `S`.
pub fn objective(
    g: &Graph,
    x: &SignalMatrix,
    r: f64,
    coefficients: &[SparseCoefficients],
    gamma: f64,
) -> Result<f64> {
    if coefficients.len() != x.n_signals() {
        return Err(Error::DimensionMismatch {
            expected: x.n_signals(),
            found: coefficients.len(),
        });
    }
    let m = deformed_laplacian(g, r);
    if m.dim() != x.n_nodes() {
        return Err(Error::DimensionMismatch {
            expected: m.dim(),
            found: x.n_nodes(),
        });
    }
    let smooth = (x.entries().transpose() * m.entries() * x.entries()).trace();
    let basis = eig_sym(&m)?;
    let mut fit = 0.0;
    for (i, c) in coefficients.iter().enumerate() {
        let recon = idgft_sparse(&basis, c)?;
        fit += (x.column(i) - recon).norm_squared();
    }
    Ok((1.0 - gamma) * smooth + gamma * fit)
}

/// Closed-form fixed-r solution: per-column top-K projection. Returns the
/// coefficients and the summed squared residual.
pub fn solve_fixed_r(
    g: &Graph,
    x: &SignalMatrix,
    r: f64,
    k: usize,
) -> Result<(Vec<SparseCoefficients>, f64)> {
    let basis = eig_sym(&deformed_laplacian(g, r))?;
    solve_with_basis(&basis, x, k)
}

fn solve_with_basis(
    basis: &SpectralBasis,
    x: &SignalMatrix,
    k: usize,
) -> Result<(Vec<SparseCoefficients>, f64)> {
    let mut coefficients = Vec::with_capacity(x.n_signals());
    let mut fit = 0.0;
    for i in 0..x.n_signals() {
        let col = x.column(i);
        let c = topk_project(basis, &col, k)?;
        fit += (col - idgft_sparse(basis, &c)?).norm_squared();
        coefficients.push(c);
    }
    Ok((coefficients, fit))
}

/// Evaluates smoothness and fit terms at every grid point.
///
/// The full coefficient matrix `S = U^T X` gives both at once: the
/// smoothness is `sum_k lambda_k sum_i S_ki^2` and the fit error of a
/// column is the energy of its dropped coefficients.
pub fn evaluate_grid(grid: &LaplacianGrid, x: &SignalMatrix, k: usize) -> Result<Vec<GridEval>> {
    let n = x.n_nodes();
    if k > n {
        return Err(Error::InvalidK { k, n });
    }
    grid.points
        .par_iter()
        .map(|p| -> Result<GridEval> {
            let Some(basis) = &p.basis else {
                return Ok(GridEval {
                    r: p.r,
                    psd: false,
                    smoothness: f64::NAN,
                    fit_error: f64::NAN,
                });
            };
            if basis.dim() != n {
                return Err(Error::DimensionMismatch {
                    expected: basis.dim(),
                    found: n,
                });
            }
            let s = basis.eigenvectors().transpose() * x.entries();
            let mut smoothness = 0.0;
            for (row, lam) in basis.eigenvalues().iter().enumerate() {
                smoothness += lam * s.row(row).norm_squared();
            }
            let mut fit_error = 0.0;
            for col in 0..x.n_signals() {
                let mut mags: Vec<f64> = s.column(col).iter().map(|v| v * v).collect();
                // dropped energy = total minus the K largest
                mags.sort_by(|a, b| b.total_cmp(a));
                fit_error += mags[k..].iter().sum::<f64>();
            }
            Ok(GridEval {
                r: p.r,
                psd: true,
                smoothness,
                fit_error,
            })
        })
        .collect()
}

/// Selects the first grid point attaining the minimum objective among PSD
/// points. Returns `(index, f_min)`.
fn select_minimum(evals: &[GridEval], gamma: f64) -> Result<(usize, f64)> {
    let mut best: Option<(usize, f64)> = None;
    for (i, e) in evals.iter().enumerate() {
        if !e.psd {
            continue;
        }
        let f = e.objective(gamma);
        // strict comparison: the smallest r wins on ties
        if best.map_or(true, |(_, fmin)| f < fmin) {
            best = Some((i, f));
        }
    }
    best.ok_or(Error::NoFeasiblePoint)
}

/// Runs the full line search on a prebuilt grid.
pub fn learn_with_grid(
    grid: &LaplacianGrid,
    x: &SignalMatrix,
    cfg: &LearnConfig,
) -> Result<LearnResult> {
    let evals = evaluate_grid(grid, x, cfg.k)?;
    let (best, f_min) = select_minimum(&evals, cfg.gamma)?;
    let objective_trace = evals
        .iter()
        .map(|e| TraceEntry {
            r: e.r,
            objective: if e.psd { e.objective(cfg.gamma) } else { f64::NAN },
            psd: e.psd,
        })
        .collect();
    let basis = grid.points[best]
        .basis
        .clone()
        .expect("selected point is PSD");
    let (coefficients, _) = solve_with_basis(&basis, x, cfg.k)?;
    let mut recon = DMatrix::zeros(x.n_nodes(), x.n_signals());
    for (i, c) in coefficients.iter().enumerate() {
        recon.set_column(i, &idgft_sparse(&basis, c)?);
    }
    Ok(LearnResult {
        r_star: evals[best].r,
        basis,
        coefficients,
        reconstruction: SignalMatrix::new(recon)?,
        objective_trace,
        f_min,
    })
}

/// Builds the grid for `g` and runs the line search.
pub fn learn(g: &Graph, x: &SignalMatrix, cfg: &LearnConfig) -> Result<LearnResult> {
    let grid = LaplacianGrid::build(g, cfg)?;
    learn_with_grid(&grid, x, cfg)
}

/// Random K-bandlimited signals `X = U_K S` with standard normal
/// coefficients on the first `k` basis columns.
pub fn smooth_signals(basis: &SpectralBasis, k: usize, m: usize, seed: u64) -> SignalMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = basis.dim();
    let mut x = DMatrix::zeros(n, m);
    for col in 0..m {
        let mut acc = nalgebra::DVector::zeros(n);
        for i in 0..k.min(n) {
            let coeff: f64 = StandardNormal.sample(&mut rng);
            acc += basis.eigenvectors().column(i) * coeff;
        }
        x.set_column(col, &acc);
    }
    SignalMatrix::new(x).expect("finite by construction")
}

/// Independent standard normal signals.
pub fn gaussian_signals(n: usize, m: usize, seed: u64) -> SignalMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    SignalMatrix::new(DMatrix::from_fn(n, m, |_, _| StandardNormal.sample(&mut rng)))
        .expect("finite by construction")
}

/// Mean optimal r per gamma, averaged over seeded signal realizations.
/// The signal generator receives the trial index; the same signals are used
/// for every gamma.
pub fn gamma_sweep(
    g: &Graph,
    signal_gen: impl Fn(u64) -> SignalMatrix,
    gammas: &[f64],
    trials: u64,
    cfg: &LearnConfig,
) -> Result<Vec<(f64, f64)>> {
    if trials == 0 {
        return Err(Error::InvalidParams("trials must be positive".into()));
    }
    let grid = LaplacianGrid::build(g, cfg)?;
    let mut evals_per_trial = Vec::with_capacity(trials as usize);
    for t in 0..trials {
        let x = signal_gen(t);
        evals_per_trial.push(evaluate_grid(&grid, &x, cfg.k)?);
    }
    gammas
        .iter()
        .map(|&gamma| {
            let mut sum = 0.0;
            for evals in &evals_per_trial {
                let (best, _) = select_minimum(evals, gamma)?;
                sum += evals[best].r;
            }
            Ok((gamma, sum / trials as f64))
        })
        .collect()
}

/// One row of the dynamic-topology study.
#[derive(Debug, Clone, Copy)]
pub struct DynamicRow {
    pub t: usize,
    pub nmse_deformed: f64,
    pub nmse_r1: f64,
    pub nmse_rminus1: f64,
}

/// Per time step: learned-r NMSE versus the NMSE at r pinned to +1 and -1,
/// in the Frobenius-ratio form. Requires `gamma = 1`; the learned point then
/// minimizes the total squared residual, so it dominates both pinned forms.
pub fn dynamic_experiment(
    seq: &[Graph],
    x: &SignalMatrix,
    cfg: &LearnConfig,
) -> Result<Vec<DynamicRow>> {
    if cfg.gamma != 1.0 {
        return Err(Error::InvalidParams(
            "dynamic experiment requires gamma = 1".into(),
        ));
    }
    let mut rows = Vec::with_capacity(seq.len());
    for (idx, g) in seq.iter().enumerate() {
        let result = learn(g, x, cfg)?;
        let nmse_deformed = nmse(x, &result.reconstruction, NmseMode::Frobenius)?;
        let fixed = |r: f64| -> Result<f64> {
            if !is_psd(&deformed_laplacian(g, r), cfg.psd_tol) {
                return Ok(f64::NAN);
            }
            let basis = eig_sym(&deformed_laplacian(g, r))?;
            let (coeffs, _) = solve_with_basis(&basis, x, cfg.k)?;
            let mut recon = DMatrix::zeros(x.n_nodes(), x.n_signals());
            for (i, c) in coeffs.iter().enumerate() {
                recon.set_column(i, &idgft_sparse(&basis, c)?);
            }
            nmse(x, &SignalMatrix::new(recon)?, NmseMode::Frobenius)
        };
        rows.push(DynamicRow {
            t: idx + 1,
            nmse_deformed,
            nmse_r1: fixed(1.0)?,
            nmse_rminus1: fixed(-1.0)?,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{bipartite, clustered, quasi_bipartite_clustered, Graph, Mode};
    use crate::laplacian::{combinatorial_laplacian, signless_laplacian};
    use crate::testutil::p2;
    use approx::assert_relative_eq;

    fn single_column(x: &[f64]) -> SignalMatrix {
        SignalMatrix::new(DMatrix::from_column_slice(x.len(), 1, x)).unwrap()
    }

    #[test]
    fn uniform_grid_hits_endpoints() {
        let cfg = LearnConfig::new(1.0, 1).unwrap();
        let grid = cfg.grid_values();
        assert_eq!(grid.len(), 201);
        assert_eq!(grid[0], -1.0);
        assert_eq!(*grid.last().unwrap(), 1.0);
    }

    #[test]
    fn accelerating_grid_clamps() {
        let mut cfg = LearnConfig::new(1.0, 1).unwrap();
        cfg.grid_mode = GridMode::PaperAccelerating;
        cfg.step = 0.01;
        let grid = cfg.grid_values();
        assert_eq!(grid[0], -1.0);
        assert_relative_eq!(grid[1], -0.99, epsilon = 1e-12);
        assert_relative_eq!(grid[2], -0.97, epsilon = 1e-12);
        assert_eq!(*grid.last().unwrap(), 1.0);
        assert!(grid.windows(2).all(|w| w[1] > w[0]));
    }

    #[test]
    fn p2_antipodal_signal_selects_signless() {
        let g = p2();
        let cfg = LearnConfig::new(1.0, 1).unwrap();
        let result = learn(&g, &single_column(&[1.0, -1.0]), &cfg).unwrap();
        assert_eq!(result.r_star, -1.0);
        assert!(result.f_min.abs() < 1e-20);
    }

    #[test]
    fn solve_fixed_r_examples() {
        let g = p2();
        let x = single_column(&[1.0, -1.0]);
        let (_, fit) = solve_fixed_r(&g, &x, -1.0, 1).unwrap();
        assert!(fit < 1e-20);
        let (_, fit_full) = solve_fixed_r(&g, &x, 0.3, 2).unwrap();
        assert!(fit_full < 1e-20);
    }

    #[test]
    fn gamma_one_objective_equals_fit_error() {
        let g = quasi_bipartite_clustered(12, 3).unwrap();
        let x = gaussian_signals(12, 4, 9);
        let (coeffs, fit) = solve_fixed_r(&g, &x, 0.4, 3).unwrap();
        let f = objective(&g, &x, 0.4, &coeffs, 1.0).unwrap();
        assert_relative_eq!(f, fit, epsilon = 1e-10);
    }

    #[test]
    fn gamma_zero_objective_is_pure_smoothness() {
        let g = p2();
        let x = single_column(&[1.0, 1.0]);
        let (coeffs, _) = solve_fixed_r(&g, &x, 1.0, 2).unwrap();
        let f = objective(&g, &x, 1.0, &coeffs, 0.0).unwrap();
        // all-ones is the combinatorial kernel: smoothness 0
        assert!(f.abs() < 1e-12);
    }

    #[test]
    fn grid_dominance_and_monotone_running_min() {
        let g = quasi_bipartite_clustered(14, 5).unwrap();
        let x = gaussian_signals(14, 6, 11);
        let cfg = LearnConfig::new(0.7, 3).unwrap();
        let result = learn(&g, &x, &cfg).unwrap();
        let mut running = f64::INFINITY;
        for entry in &result.objective_trace {
            if entry.psd {
                assert!(result.f_min <= entry.objective + 1e-12);
                running = running.min(entry.objective);
            }
        }
        assert_relative_eq!(running, result.f_min);
    }

    #[test]
    fn scaling_leaves_argmin_unchanged() {
        let g = quasi_bipartite_clustered(12, 8).unwrap();
        let x = gaussian_signals(12, 5, 21);
        let x2 = SignalMatrix::new(x.entries() * 3.0).unwrap();
        let cfg = LearnConfig::new(0.5, 3).unwrap();
        let a = learn(&g, &x, &cfg).unwrap();
        let b = learn(&g, &x2, &cfg).unwrap();
        assert_eq!(a.r_star, b.r_star);
        assert_relative_eq!(b.f_min, 9.0 * a.f_min, max_relative = 1e-9);
    }

    #[test]
    fn bipartite_signless_signals_select_minus_one() {
        // dense bipartite: with the accelerating grid the PSD gate leaves
        // only {-1, +1} feasible, and the signless-smooth signals prefer -1
        // on both the smoothness and the fitting term at every gamma
        let g = bipartite(30, 30, 0.8, 4).unwrap();
        let sl_basis = eig_sym(&signless_laplacian(&g).unwrap()).unwrap();
        let mut cfg = LearnConfig::new(0.0, 3).unwrap();
        cfg.step = 0.05;
        cfg.grid_mode = GridMode::PaperAccelerating;
        let grid = LaplacianGrid::build(&g, &cfg).unwrap();
        for gamma in [0.0, 0.3, 0.7, 1.0] {
            cfg.gamma = gamma;
            let x = smooth_signals(&sl_basis, 3, 10, 77);
            let result = learn_with_grid(&grid, &x, &cfg).unwrap();
            assert_eq!(result.r_star, -1.0, "gamma {gamma}");
        }
    }

    #[test]
    fn clustered_smooth_signals_select_one_at_gamma_one() {
        let g = clustered(&[8, 8, 8], 0.7, 0.03, 6).unwrap();
        let l_basis = eig_sym(&combinatorial_laplacian(&g).unwrap()).unwrap();
        let mut cfg = LearnConfig::new(1.0, 3).unwrap();
        cfg.step = 0.05;
        let x = smooth_signals(&l_basis, 3, 10, 13);
        let result = learn(&g, &x, &cfg).unwrap();
        assert!((result.r_star - 1.0).abs() <= cfg.step + 1e-12, "r* = {}", result.r_star);
    }

    #[test]
    fn interior_r_recovered() {
        let g = quasi_bipartite_clustered(20, 42).unwrap();
        let cfg = LearnConfig::new(1.0, 4).unwrap();
        let grid = LaplacianGrid::build(&g, &cfg).unwrap();
        let point = grid
            .points()
            .iter()
            .find(|p| (p.r - 0.3).abs() < 1e-9)
            .expect("0.3 on grid");
        assert!(point.psd, "L_DF(0.3) must be PSD for this fixture");
        let basis = point.basis.as_ref().unwrap();
        let mut hits = 0;
        for trial in 0..10 {
            let x = smooth_signals(basis, 4, 8, 1000 + trial);
            let result = learn_with_grid(&grid, &x, &cfg).unwrap();
            if (result.r_star - 0.3).abs() <= cfg.step + 1e-9 {
                hits += 1;
            }
        }
        assert!(hits >= 9, "recovered only {hits}/10");
    }

    #[test]
    fn no_feasible_point() {
        // K_{3,3}: the signless kernel vector makes L_DF(-0.75) indefinite
        let mut edges = Vec::new();
        for i in 0..3usize {
            for j in 0..3usize {
                edges.push((i, 3 + j, 1.0));
            }
        }
        let g = Graph::from_edges(6, Mode::Nonnegative, &edges).unwrap();
        let mut cfg = LearnConfig::new(1.0, 1).unwrap();
        cfg.r_min = -0.75;
        cfg.r_max = -0.75;
        let err = learn(&g, &gaussian_signals(6, 2, 1), &cfg).unwrap_err();
        assert!(matches!(err, Error::NoFeasiblePoint));
    }

    #[test]
    fn gamma_sweep_trials_one_matches_single_learn() {
        let g = bipartite(6, 6, 0.5, 9).unwrap();
        let cfg = LearnConfig::new(0.5, 2).unwrap();
        let x = gaussian_signals(12, 4, 55);
        let sweep = gamma_sweep(&g, |_| x.clone(), &[0.5], 1, &cfg).unwrap();
        let single = learn(&g, &x, &cfg).unwrap();
        assert_eq!(sweep[0].1, single.r_star);
    }

    #[test]
    fn dynamic_experiment_dominance() {
        let seq = crate::graph::dynamic_sequence(12, 10, 3).unwrap();
        let x = gaussian_signals(12, 4, 31);
        let mut cfg = LearnConfig::new(1.0, 3).unwrap();
        cfg.step = 0.1;
        let rows = dynamic_experiment(&seq, &x, &cfg).unwrap();
        assert_eq!(rows.len(), 10);
        for row in &rows {
            assert!(row.nmse_deformed <= row.nmse_r1.min(row.nmse_rminus1) + 1e-12);
        }
    }

    #[test]
    fn dynamic_experiment_full_bandwidth_is_exact() {
        let seq = crate::graph::dynamic_sequence(8, 4, 5).unwrap();
        let x = gaussian_signals(8, 3, 7);
        let mut cfg = LearnConfig::new(1.0, 8).unwrap();
        cfg.step = 0.25;
        let rows = dynamic_experiment(&seq, &x, &cfg).unwrap();
        for row in &rows {
            assert!(row.nmse_deformed < 1e-9);
            assert!(row.nmse_r1 < 1e-9);
            assert!(row.nmse_rminus1 < 1e-9);
        }
    }

    #[test]
    fn dynamic_experiment_requires_gamma_one() {
        let seq = crate::graph::dynamic_sequence(8, 4, 5).unwrap();
        let x = gaussian_signals(8, 3, 7);
        let cfg = LearnConfig::new(0.5, 2).unwrap();
        assert!(dynamic_experiment(&seq, &x, &cfg).is_err());
    }

    #[test]
    fn config_validation() {
        assert!(LearnConfig::new(1.5, 1).is_err());
        assert!(LearnConfig::new(0.5, 0).is_err());
        let mut cfg = LearnConfig::new(0.5, 1).unwrap();
        cfg.r_min = 2.0;
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn result_json_shape() {
        let g = p2();
        let cfg = LearnConfig::new(1.0, 1).unwrap();
        let result = learn(&g, &single_column(&[1.0, -1.0]), &cfg).unwrap();
        let v = result.to_json();
        assert_eq!(v["r_star"], -1.0);
        assert_eq!(v["signals"].as_array().unwrap().len(), 1);
        assert_eq!(v["trace"].as_array().unwrap().len(), 201);
    }
}
