//! Command-line front end: each subcommand sweeps one experiment and writes
//! a CSV table.
//!
//! Exit codes: 0 on success, 2 for invalid arguments or configuration,
//! 3 for numerical failures, 1 when the output cannot be written.

pub mod commands;
pub mod config;
pub mod table;

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::error::CasimirError;
use config::{parse_list, parse_sign, Experiment, RunConfig};
pub use table::Table;

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_NUMERICAL: i32 = 3;

const COLUMNS_HELP: &str = "\
Output: CSV with a `# schema=1` line and `# key=value` metadata lines above the header.

Columns:
  fig-barrier-1d  L_over_a, F_lattice_same_sign, F_lattice_opposite_sign, F_continuum_same,
                  F_continuum_opposite, F_asymptote_same, F_asymptote_opposite   [L F / hbar v_F]
  fig-spike       a_mu0_over_vF, F_lattice, F_continuum                          [L F / hbar v_F]
  fig-barrier-2d  same columns as fig-barrier-1d                                 [L^2 F / hbar v_F W]
  protection      v0_a_over_vF, L_over_a, L_eff_over_a, F_staggered, F_reference,
                  collapse_residual, gap_naive, gap_wilson, gap_kogut_susskind, gap_slac, gap_tangent
  abel-plana      L_over_a, delta_F, L_times_delta_F_minus_offset,
                  coefficient_infinite_mass, coefficient_scattering

Config file (INI, flags take precedence):
  [lattice] gamma, mu0_tau   [barrier] mu_sign, wilson_m0
  [sweep] l_min, l_max, l_step, mu_min, mu_max, mu_step, v0
  [quadrature] rel_tol, abs_tol, max_subdivisions   [output] path   [run] experiment

Environment: CASIMIR_THREADS caps the number of worker threads.";

#[derive(Debug, Parser)]
#[command(name = "casimir", version, about = "Casimir free energies of tangent lattice fermions", after_help = COLUMNS_HELP)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Free energy vs separation for 1D extended barriers
    #[command(name = "fig-barrier-1d")]
    FigBarrier1d(RunArgs),
    /// Free energy of two mass spikes vs spike mass
    FigSpike(RunArgs),
    /// Free energy vs separation for barriers on a 2D surface
    #[command(name = "fig-barrier-2d")]
    FigBarrier2d(RunArgs),
    /// Staggered potential: L_eff collapse and gaps of five lattice fermions
    Protection(RunArgs),
    /// Infinite-mass zero-point energy from the Abel-Plana formula
    AbelPlana(RunArgs),
}

#[derive(Debug, Args)]
struct RunArgs {
    /// v_F tau / a
    #[arg(long)]
    gamma: Option<f64>,
    /// Barrier mass times tau
    #[arg(long)]
    mu0_tau: Option<f64>,
    /// Relative sign of the two barrier masses: same or opposite
    #[arg(long)]
    mu_sign: Option<String>,
    /// Smallest separation in units of a
    #[arg(long)]
    l_min: Option<u32>,
    /// Largest separation in units of a
    #[arg(long)]
    l_max: Option<u32>,
    /// Separation step in units of a
    #[arg(long)]
    l_step: Option<u32>,
    /// Smallest a mu0 / v_F (fig-spike)
    #[arg(long)]
    mu_min: Option<f64>,
    /// Largest a mu0 / v_F (fig-spike)
    #[arg(long)]
    mu_max: Option<f64>,
    /// Step of a mu0 / v_F (fig-spike)
    #[arg(long)]
    mu_step: Option<f64>,
    /// Comma-separated staggered amplitudes in units of v_F / a (protection)
    #[arg(long)]
    v0: Option<String>,
    /// Wilson mass in units of v_F / a (protection)
    #[arg(long)]
    wilson_m0: Option<f64>,
    /// Relative tolerance of every adaptive integral
    #[arg(long)]
    quad_rel_tol: Option<f64>,
    /// Output file (stdout if omitted)
    #[arg(long)]
    out: Option<PathBuf>,
    /// INI file with run parameters
    #[arg(long, conflicts_with = "defaults")]
    config: Option<PathBuf>,
    /// Use the built-in figure parameters (gamma = 1, mu0 tau = 1)
    #[arg(long)]
    defaults: bool,
}

impl RunArgs {
    fn resolve(&self, experiment: Experiment) -> Result<RunConfig, CasimirError> {
        let mut cfg = RunConfig::defaults(experiment);
        if let Some(path) = &self.config {
            cfg.apply_ini(path)?;
        }
        macro_rules! set {
            ($field:expr, $value:expr) => {
                if let Some(v) = $value {
                    $field = v;
                }
            };
        }
        set!(cfg.gamma, self.gamma);
        set!(cfg.mu0_tau, self.mu0_tau);
        set!(cfg.sites.min, self.l_min);
        set!(cfg.sites.max, self.l_max);
        set!(cfg.sites.step, self.l_step);
        set!(cfg.masses.min, self.mu_min);
        set!(cfg.masses.max, self.mu_max);
        set!(cfg.masses.step, self.mu_step);
        set!(cfg.wilson_m0, self.wilson_m0);
        set!(cfg.quad.rel_tol, self.quad_rel_tol);
        if let Some(s) = &self.mu_sign {
            cfg.mu_sign = parse_sign(s)?;
        }
        if let Some(v) = &self.v0 {
            cfg.v0 = parse_list(v)?;
        }
        if let Some(out) = &self.out {
            cfg.out = Some(out.clone());
        }
        cfg.validate()?;
        Ok(cfg)
    }
}

fn exit_code(err: &CasimirError) -> i32 {
    if err.is_config() {
        EXIT_CONFIG
    } else {
        EXIT_NUMERICAL
    }
}

fn thread_pool() -> Result<rayon::ThreadPool, String> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(v) = std::env::var("CASIMIR_THREADS") {
        let n: usize = v
            .parse()
            .ok()
            .filter(|n| *n > 0)
            .ok_or_else(|| format!("CASIMIR_THREADS must be a positive integer, got {v:?}"))?;
        builder = builder.num_threads(n);
    }
    builder.build().map_err(|e| e.to_string())
}

/// Parse `args` (including the program name), run the experiment and write
/// the table. Returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_CONFIG } else { EXIT_OK };
        }
    };
    let (experiment, args) = match &cli.command {
        Command::FigBarrier1d(a) => (Experiment::Barrier1d, a),
        Command::FigSpike(a) => (Experiment::Spike, a),
        Command::FigBarrier2d(a) => (Experiment::Barrier2d, a),
        Command::Protection(a) => (Experiment::Protection, a),
        Command::AbelPlana(a) => (Experiment::AbelPlana, a),
    };
    let cfg = match args.resolve(experiment) {
        Ok(cfg) => cfg,
        Err(e) => {
            eprintln!("error: {e}");
            return exit_code(&e);
        }
    };
    let pool = match thread_pool() {
        Ok(pool) => pool,
        Err(msg) => {
            eprintln!("error: {msg}");
            return EXIT_CONFIG;
        }
    };
    let table = match pool.install(|| commands::run(&cfg)) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {e}");
            return exit_code(&e);
        }
    };
    let written = match &cfg.out {
        Some(path) => File::create(path).and_then(|f| table.write_csv(BufWriter::new(f))),
        None => table.write_csv(io::stdout().lock()),
    };
    match written {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("error: cannot write output: {e}");
            EXIT_IO
        }
    }
}
