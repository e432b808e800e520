//! Command-line front end: ingestion, spectrum inspection, dynamics
//! simulation and the experiment presets behind the synthetic studies.

use clap::{Args, Parser, Subcommand, ValueEnum};
use deform_gsp::dynamics::{self, Method};
use deform_gsp::graph::{self, Graph, Mode};
use deform_gsp::io;
use deform_gsp::laplacian::deformed_laplacian;
use deform_gsp::learner::{
    self, dynamic_experiment, gamma_sweep, gaussian_signals, learn, smooth_signals, GridMode,
    LearnConfig,
};
use deform_gsp::pep;
use deform_gsp::spectral::{eig_sym, nmse, NmseMode};
use deform_gsp::Error;
use serde_json::json;
use sha2::{Digest, Sha256};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "dgsp", version, about = "Deformed-Laplacian graph signal processing")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Nonneg,
    Signed,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Nonneg => Mode::Nonnegative,
            ModeArg::Signed => Mode::Signed,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum GridArg {
    Uniform,
    Paper,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Euler,
    Exact,
}

#[derive(Args)]
struct GraphArgs {
    /// Edge-list CSV, lines "i,j,w"
    #[arg(long)]
    graph: PathBuf,
    /// Node count; inferred from signals or the edge list when omitted
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, value_enum, default_value = "nonneg")]
    mode: ModeArg,
}

#[derive(Args)]
struct LearnFlags {
    #[arg(long)]
    gamma: f64,
    #[arg(long = "K")]
    k: usize,
    #[arg(long, default_value_t = -1.0)]
    r_min: f64,
    #[arg(long, default_value_t = 1.0)]
    r_max: f64,
    #[arg(long, default_value_t = 0.01)]
    step: f64,
    #[arg(long, value_enum, default_value = "uniform")]
    grid: GridArg,
}

#[derive(Subcommand)]
enum Command {
    /// Jointly learn the Laplacian form and K-sparse representations
    Learn {
        #[command(flatten)]
        graph: GraphArgs,
        /// Signal matrix CSV, N rows x M columns
        #[arg(long)]
        signals: PathBuf,
        #[command(flatten)]
        flags: LearnFlags,
        #[arg(long, default_value = ".")]
        out: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Eigendecomposition at a fixed r, or the full polynomial spectrum
    Spectrum {
        #[command(flatten)]
        graph: GraphArgs,
        /// Emit the SEP eigendecomposition of L_DF(r)
        #[arg(long)]
        r: Option<f64>,
        /// Emit the polynomial spectrum and structure report
        #[arg(long)]
        pep: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Integrate d phi/dt = -L_DF(r) phi
    Simulate {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        r: f64,
        /// Initial state, inline CSV ("1,0,...") or a file path
        #[arg(long)]
        phi0: String,
        #[arg(long)]
        dt: f64,
        #[arg(long)]
        steps: usize,
        #[arg(long, value_enum, default_value = "exact")]
        method: MethodArg,
        #[arg(long, default_value = "trajectory.csv")]
        out: PathBuf,
    },
    /// Run a named experiment preset and emit its plot-data CSV
    Experiment {
        preset: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long = "K")]
        k: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        trials: Option<u64>,
        #[arg(long)]
        step: Option<f64>,
        #[arg(long)]
        gamma: Option<f64>,
        /// Graph family for gamma-sweep: bipartite or clustered
        #[arg(long, default_value = "bipartite")]
        graph_kind: String,
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Convert a strictly positive price matrix to log-returns
    Logreturns {
        #[arg(long)]
        prices: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Run(err)) => {
            eprintln!("error: {err}");
            ExitCode::from(1)
        }
    }
}

fn configure_threads() {
    if let Ok(v) = std::env::var("DEFORM_GSP_THREADS") {
        if let Ok(n) = v.trim().parse::<usize>() {
            if n > 0 {
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build_global();
            }
        }
    }
}

enum CliError {
    Usage(String),
    Run(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Run(e)
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn load_graph(args: &GraphArgs, n_hint: Option<usize>) -> Result<Graph, CliError> {
    let text = std::fs::read_to_string(&args.graph).map_err(Error::from)?;
    let n = match (args.n, n_hint) {
        (Some(n), Some(hint)) if n != hint => {
            return Err(usage(format!(
                "--n {n} conflicts with inferred node count {hint}"
            )))
        }
        (Some(n), _) => n,
        (None, Some(hint)) => hint,
        (None, None) => infer_node_count(&text)?,
    };
    Ok(graph::parse_edge_list(&text, n, args.mode.into())?)
}

fn infer_node_count(text: &str) -> Result<usize, CliError> {
    let max = text
        .lines()
        .filter_map(|l| {
            let mut it = l.split(',');
            let i: usize = it.next()?.trim().parse().ok()?;
            let j: usize = it.next()?.trim().parse().ok()?;
            Some(i.max(j))
        })
        .max()
        .ok_or_else(|| usage("cannot infer node count from empty edge list; pass --n"))?;
    Ok(max + 1)
}

fn build_config(flags: &LearnFlags) -> Result<LearnConfig, CliError> {
    let cfg = LearnConfig {
        gamma: flags.gamma,
        k: flags.k,
        r_min: flags.r_min,
        r_max: flags.r_max,
        step: flags.step,
        psd_tol: deform_gsp::laplacian::PSD_TOL,
        grid_mode: match flags.grid {
            GridArg::Uniform => GridMode::Uniform,
            GridArg::Paper => GridMode::PaperAccelerating,
        },
    };
    cfg.validate().map_err(|e| usage(e.to_string()))?;
    Ok(cfg)
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    if let Some(dir) = path.parent() {
        if !dir.as_os_str().is_empty() {
            std::fs::create_dir_all(dir).map_err(Error::from)?;
        }
    }
    std::fs::write(path, contents).map_err(Error::from)?;
    Ok(())
}

fn sha256_hex(data: &[u8]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(data);
    format!("{:x}", hasher.finalize())
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Learn {
            graph,
            signals,
            flags,
            out,
            seed: _,
        } => {
            let x = io::load_signal_matrix(&signals)?;
            let g = load_graph(&graph, Some(x.n_nodes()))?;
            let cfg = build_config(&flags)?;
            let result = learn(&g, &x, &cfg)?;
            let err = nmse(&x, &result.reconstruction, NmseMode::Frobenius)
                .unwrap_or(f64::NAN);

            std::fs::create_dir_all(&out).map_err(Error::from)?;
            write_file(
                &out.join("result.json"),
                &format!("{}\n", result.to_json()),
            )?;
            let mut trace = String::from("r,f,psd\n");
            for t in &result.objective_trace {
                let f = if t.psd { format!("{}", t.objective) } else { String::new() };
                trace.push_str(&format!("{},{},{}\n", t.r, f, t.psd));
            }
            write_file(&out.join("trace.csv"), &trace)?;
            write_file(
                &out.join("reconstruction.csv"),
                &io::matrix_to_csv(result.reconstruction.entries()),
            )?;
            println!(
                "{}",
                json!({"r_star": result.r_star, "f_min": result.f_min, "nmse": err})
            );
            Ok(())
        }
        Command::Spectrum { graph, r, pep: want_pep, out } => {
            let g = load_graph(&graph, None)?;
            if let Some(r) = r {
                let basis = eig_sym(&deformed_laplacian(&g, r))?;
                let eigenvalues: Vec<f64> = basis.eigenvalues().iter().copied().collect();
                if let Some(out) = &out {
                    std::fs::create_dir_all(out).map_err(Error::from)?;
                    write_file(
                        &out.join("eigenvalues.csv"),
                        &eigenvalues
                            .iter()
                            .map(|v| format!("{v}\n"))
                            .collect::<String>(),
                    )?;
                    write_file(
                        &out.join("eigenvectors.csv"),
                        &io::matrix_to_csv(basis.eigenvectors()),
                    )?;
                }
                println!("{}", json!({"r": r, "eigenvalues": eigenvalues}));
                Ok(())
            } else if want_pep {
                let spectrum = pep::pep_spectrum(&g, pep::ZERO_TOL)?;
                let report = pep::structure_report(&g, pep::ZERO_TOL)?;
                let line = json!({"spectrum": spectrum.to_json(), "structure": report.to_json()});
                if let Some(out) = &out {
                    std::fs::create_dir_all(out).map_err(Error::from)?;
                    write_file(&out.join("spectrum.json"), &format!("{line}\n"))?;
                }
                println!("{line}");
                Ok(())
            } else {
                Err(usage("spectrum requires --r <value> or --pep"))
            }
        }
        Command::Simulate {
            graph,
            r,
            phi0,
            dt,
            steps,
            method,
            out,
        } => {
            let phi_text = if Path::new(&phi0).is_file() {
                std::fs::read_to_string(&phi0).map_err(Error::from)?
            } else {
                phi0
            };
            let phi = io::parse_vector(&phi_text)?;
            let g = load_graph(&graph, Some(phi.len()))?;
            let method = match method {
                MethodArg::Euler => Method::Euler,
                MethodArg::Exact => Method::SpectralExact,
            };
            let trajectory = dynamics::simulate(&g, r, &phi, dt, steps, method)?;
            write_file(&out, &dynamics::trajectory_to_csv(&trajectory))?;
            let last = trajectory.last().expect("nonempty trajectory");
            println!(
                "{}",
                json!({
                    "steps": steps,
                    "t_final": last.time,
                    "phi_final": last.phi.iter().copied().collect::<Vec<f64>>(),
                    "out": out.display().to_string(),
                })
            );
            Ok(())
        }
        Command::Experiment {
            preset,
            seed,
            n,
            k,
            m,
            trials,
            step,
            gamma,
            graph_kind,
            out,
        } => run_experiment(ExperimentArgs {
            preset,
            seed,
            n,
            k,
            m,
            trials,
            step,
            gamma,
            graph_kind,
            out,
        }),
        Command::Logreturns { prices, out } => {
            let text = std::fs::read_to_string(&prices).map_err(Error::from)?;
            let x = io::parse_log_returns(&text)?;
            write_file(&out, &io::matrix_to_csv(x.entries()))?;
            println!(
                "{}",
                json!({
                    "rows": x.n_nodes(),
                    "cols": x.n_signals(),
                    "out": out.display().to_string(),
                })
            );
            Ok(())
        }
    }
}

struct ExperimentArgs {
    preset: String,
    seed: u64,
    n: Option<usize>,
    k: Option<usize>,
    m: Option<usize>,
    trials: Option<u64>,
    step: Option<f64>,
    gamma: Option<f64>,
    graph_kind: String,
    out: PathBuf,
}

fn run_experiment(args: ExperimentArgs) -> Result<(), CliError> {
    std::fs::create_dir_all(&args.out).map_err(Error::from)?;
    let (csv_name, csv, config) = match args.preset.as_str() {
        "gamma-sweep" => preset_gamma_sweep(&args)?,
        "dynamic-nmse" => preset_dynamic_nmse(&args)?,
        "nmse-vs-r" => preset_nmse_vs_r(&args)?,
        "nmse-vs-sparsity" => preset_nmse_vs_sparsity(&args)?,
        other => return Err(CliError::Run(Error::UnknownPreset(other.to_string()))),
    };
    let csv_path = args.out.join(csv_name);
    write_file(&csv_path, &csv)?;
    let manifest = json!({
        "command": format!("experiment {}", args.preset),
        "config": config,
        "input_digests": {"generated": sha256_hex(config.to_string().as_bytes())},
        "seed": args.seed,
        // file names, not full paths: manifests from runs into different
        // directories stay byte-identical for the same flags and seed
        "outputs": [
            {"path": csv_name, "sha256": sha256_hex(csv.as_bytes())},
        ],
    });
    let manifest_path = args.out.join("manifest.json");
    write_file(&manifest_path, &format!("{manifest}\n"))?;
    println!(
        "{}",
        json!({
            "preset": args.preset,
            "csv": csv_path.display().to_string(),
            "manifest": manifest_path.display().to_string(),
        })
    );
    Ok(())
}

fn sweep_config(args: &ExperimentArgs, gamma: f64, k: usize, step: f64) -> Result<LearnConfig, CliError> {
    let cfg = LearnConfig {
        gamma,
        k,
        r_min: -1.0,
        r_max: 1.0,
        step,
        psd_tol: deform_gsp::laplacian::PSD_TOL,
        grid_mode: GridMode::Uniform,
    };
    let _ = args;
    cfg.validate().map_err(|e| usage(e.to_string()))?;
    Ok(cfg)
}

fn preset_gamma_sweep(
    args: &ExperimentArgs,
) -> Result<(&'static str, String, serde_json::Value), CliError> {
    let n = args.n.unwrap_or(60);
    let k = args.k.unwrap_or(3);
    let m = args.m.unwrap_or(10);
    let trials = args.trials.unwrap_or(50);
    let step = args.step.unwrap_or(0.05);
    let mut cfg = sweep_config(args, 1.0, k, step)?;
    // the line search of record for this study: the accelerating sweep
    // skips the trivial L_DF(r) ~ I neighborhood that a uniform grid
    // would let low-gamma runs collapse into
    cfg.grid_mode = GridMode::PaperAccelerating;
    let (g, basis) = match args.graph_kind.as_str() {
        "bipartite" => {
            let g = graph::bipartite(n / 2, n - n / 2, 0.8, args.seed)?;
            let basis = eig_sym(&deform_gsp::laplacian::signless_laplacian(&g)?)?;
            (g, basis)
        }
        "clustered" => {
            let third = n / 3;
            let g = graph::clustered(&[third, third, n - 2 * third], 0.8, 0.05, args.seed)?;
            let basis = eig_sym(&deform_gsp::laplacian::combinatorial_laplacian(&g)?)?;
            (g, basis)
        }
        other => return Err(usage(format!("unknown --graph-kind {other:?}"))),
    };
    let gammas: Vec<f64> = (0..=10).map(|i| i as f64 / 10.0).collect();
    let rows = gamma_sweep(
        &g,
        |t| smooth_signals(&basis, k, m, args.seed.wrapping_mul(1_000_003) ^ t),
        &gammas,
        trials,
        &cfg,
    )?;
    let mut csv = String::from("gamma,mean_r_star\n");
    for (gamma, mean) in rows {
        csv.push_str(&format!("{gamma},{mean}\n"));
    }
    let config = json!({
        "n": n, "k": k, "m": m, "trials": trials, "step": step,
        "graph_kind": args.graph_kind,
    });
    Ok(("gamma_sweep.csv", csv, config))
}

fn preset_dynamic_nmse(
    args: &ExperimentArgs,
) -> Result<(&'static str, String, serde_json::Value), CliError> {
    let n = args.n.unwrap_or(30);
    let k = args.k.unwrap_or(3);
    let m = args.m.unwrap_or(5);
    let step = args.step.unwrap_or(0.05);
    let cfg = sweep_config(args, 1.0, k, step)?;
    let seq = graph::dynamic_sequence(n, 40, args.seed)?;
    let x = gaussian_signals(n, m, args.seed ^ 0x5157);
    let rows = dynamic_experiment(&seq, &x, &cfg)?;
    let mut csv = String::from("t,nmse_deformed,nmse_r1,nmse_rminus1\n");
    for row in rows {
        csv.push_str(&format!(
            "{},{},{},{}\n",
            row.t, row.nmse_deformed, row.nmse_r1, row.nmse_rminus1
        ));
    }
    let config = json!({"n": n, "k": k, "m": m, "step": step, "len": 40});
    Ok(("dynamic_nmse.csv", csv, config))
}

fn preset_nmse_vs_r(
    args: &ExperimentArgs,
) -> Result<(&'static str, String, serde_json::Value), CliError> {
    let n = args.n.unwrap_or(20);
    let k = args.k.unwrap_or(4);
    let m = args.m.unwrap_or(1);
    let step = args.step.unwrap_or(0.01);
    let cfg = sweep_config(args, 1.0, k, step)?;
    let g = graph::quasi_bipartite_clustered(n, args.seed)?;
    let grid = learner::LaplacianGrid::build(&g, &cfg)?;
    // bandlimited source signal at an interior r, so the error curve dips
    // away from the classical forms
    let r0 = 0.3;
    let source = eig_sym(&deformed_laplacian(&g, r0))?;
    let x = smooth_signals(&source, k, m, args.seed ^ 0xf16);
    let evals = learner::evaluate_grid(&grid, &x, k)?;
    let norm2: f64 = x.entries().norm_squared();
    let mut csv = String::from("r,psd,nmse\n");
    for e in &evals {
        if e.psd {
            let nmse_r = (e.fit_error.max(0.0) / norm2).sqrt();
            csv.push_str(&format!("{},true,{}\n", e.r, nmse_r));
        } else {
            csv.push_str(&format!("{},false,\n", e.r));
        }
    }
    let config = json!({"n": n, "k": k, "m": m, "step": step, "r0": r0});
    Ok(("nmse_vs_r.csv", csv, config))
}

fn preset_nmse_vs_sparsity(
    args: &ExperimentArgs,
) -> Result<(&'static str, String, serde_json::Value), CliError> {
    let n = args.n.unwrap_or(20);
    let m = args.m.unwrap_or(5);
    let step = args.step.unwrap_or(0.05);
    let gamma = args.gamma.unwrap_or(1.0);
    let g = graph::quasi_bipartite_clustered(n, args.seed)?;
    let x = gaussian_signals(n, m, args.seed ^ 0xca11);
    let mut csv = String::from("k,r_star,nmse\n");
    let cfg0 = sweep_config(args, gamma, 1, step)?;
    let grid = learner::LaplacianGrid::build(&g, &cfg0)?;
    for k in 1..=n {
        let mut cfg = cfg0.clone();
        cfg.k = k;
        let result = learner::learn_with_grid(&grid, &x, &cfg)?;
        let err = nmse(&x, &result.reconstruction, NmseMode::Frobenius)?;
        csv.push_str(&format!("{},{},{}\n", k, result.r_star, err));
    }
    let config = json!({"n": n, "m": m, "step": step, "gamma": gamma});
    Ok(("nmse_vs_sparsity.csv", csv, config))
}
