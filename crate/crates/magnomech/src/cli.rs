//! Command-line front end.
//!
//! Exit codes: 0 success, 2 configuration error, 3 unstable operating point
//! (for `correlations` and `stability`).

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::config::{parse_config, RunConfig};
use crate::constants::TWO_PI;
use crate::error::{Error, Result};
use crate::io::{emit_csv, write_point};
use crate::model::SystemParams;
use crate::sweep::{evaluate_point, figure_preset, sweep, AxisSpec, FigurePreset, SweepParam, DEFAULT_GRID};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_UNSTABLE: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "magnomech",
    about = "Steady-state entanglement and steering of a coherent-feedback cavity magnomechanical system",
    version
)]
struct Cli {
    /// Key-value configuration file (defaults cover the reference operating point).
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Grid resolution override for sweeps and presets.
    #[arg(long, global = true)]
    grid: Option<usize>,

    /// Worker threads for sweep evaluation (affects runtime only, never values).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate entanglement and steering at the configured operating point.
    Correlations {
        /// Output CSV path (stdout if omitted).
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Report the drift-matrix eigenvalues and stability verdict.
    Stability {
        /// Also dump the drift, diffusion and covariance matrices as text.
        #[arg(long)]
        dump_matrices: Option<PathBuf>,
    },
    /// Sweep one or two parameters over linear grids.
    Sweep {
        /// Axis spec `name=start:stop:points` in user units
        /// (Hz for frequency-like parameters, K for T). Repeat for 2D.
        #[arg(long, required = true)]
        axis: Vec<String>,
        /// Output CSV path.
        #[arg(long, default_value = "sweep.csv")]
        output: PathBuf,
    },
    /// Re-run a named figure preset and write `<name>.csv`.
    Reproduce {
        /// One of fig2, fig3, fig4a, fig4b, fig4c, fig5.
        name: String,
        /// Directory for the emitted CSV.
        #[arg(long, default_value = ".")]
        output_dir: PathBuf,
    },
}

fn load_config(path: &Option<PathBuf>) -> Result<RunConfig> {
    match path {
        Some(p) => {
            let text = fs::read_to_string(p)?;
            parse_config(&text)
        }
        None => Ok(RunConfig::default()),
    }
}

fn parse_axis(spec: &str) -> Result<AxisSpec> {
    let err = || Error::domain(format!("axis spec '{spec}' must be name=start:stop:points"));
    let (name, rest) = spec.split_once('=').ok_or_else(err)?;
    let param = SweepParam::from_name(name.trim())?;
    let parts: Vec<&str> = rest.split(':').collect();
    if parts.len() != 3 {
        return Err(err());
    }
    let parse_num = |s: &str| s.trim().parse::<f64>().map_err(|_| err());
    let mut start = parse_num(parts[0])?;
    let mut stop = parse_num(parts[1])?;
    let points: usize = parts[2].trim().parse().map_err(|_| err())?;
    if param.is_frequency_like() {
        start *= TWO_PI;
        stop *= TWO_PI;
    }
    let axis = AxisSpec { param, start, stop, points };
    axis.validate()?;
    Ok(axis)
}

fn grid_override(axes: &mut [AxisSpec], grid: Option<usize>) {
    if let Some(n) = grid {
        for axis in axes {
            axis.points = n;
        }
    }
}

fn run_correlations(params: &SystemParams, output: &Option<PathBuf>) -> Result<i32> {
    let record = evaluate_point(params)?;
    if !record.stable() {
        eprintln!(
            "unstable operating point: max eigenvalue real part {:e} rad/s",
            record.stability.max_real_part
        );
        return Ok(EXIT_UNSTABLE);
    }
    match output {
        Some(path) => {
            let mut file = fs::File::create(path)?;
            write_point(&mut file, &record)?;
        }
        None => {
            let stdout = std::io::stdout();
            write_point(&mut stdout.lock(), &record)?;
        }
    }
    Ok(EXIT_OK)
}

fn run_stability(params: &SystemParams, dump: &Option<PathBuf>) -> Result<i32> {
    use crate::dynamics::{build_diffusion, build_drift, check_stability, solve_lyapunov, write_matrix_text};
    use crate::model::{feedback_rates, thermal_occupancy};

    params.validate()?;
    let rates = feedback_rates(params.gamma_a, params.delta_a, params.tau, params.beta)?;
    let drift = build_drift(params, &rates, params.g_gb_eff);
    let report = check_stability(&drift);
    println!("max eigenvalue real part: {:e} rad/s", report.max_real_part);
    for (i, ev) in report.eigenvalues.iter().enumerate() {
        println!("lambda_{i}: {:+e} {:+e}i", ev.re, ev.im);
    }
    println!("stable: {}", report.stable);

    if let Some(path) = dump {
        let n_a = thermal_occupancy(params.omega_a, params.temperature)?;
        let n_b = thermal_occupancy(params.omega_b, params.temperature)?;
        let n_m = thermal_occupancy(params.omega_m, params.temperature)?;
        let diffusion = build_diffusion(params, &rates, n_a, n_b, n_m)?;
        let mut file = fs::File::create(path)?;
        write_matrix_text(&mut file, "drift", &drift.0)?;
        write_matrix_text(&mut file, "diffusion", &diffusion.as_matrix())?;
        if report.stable {
            let v = solve_lyapunov(&drift, &diffusion)?;
            write_matrix_text(&mut file, "covariance", v.matrix())?;
        }
        file.flush()?;
    }
    Ok(if report.stable { EXIT_OK } else { EXIT_UNSTABLE })
}

fn run_sweep(params: &SystemParams, axis_specs: &[String], output: &PathBuf, grid: Option<usize>) -> Result<i32> {
    let mut axes = axis_specs
        .iter()
        .map(|s| parse_axis(s))
        .collect::<Result<Vec<_>>>()?;
    grid_override(&mut axes, grid);
    let result = sweep(params, &axes)?;
    emit_csv(&result, output)?;
    Ok(EXIT_OK)
}

fn run_reproduce(name: &str, output_dir: &PathBuf, grid: Option<usize>) -> Result<i32> {
    let preset = FigurePreset::from_name(name)?;
    let (base, axes) = figure_preset(preset, grid.unwrap_or(DEFAULT_GRID));
    let result = sweep(&base, &axes)?;
    fs::create_dir_all(output_dir)?;
    let path = output_dir.join(format!("{}.csv", preset.name()));
    emit_csv(&result, &path)?;
    println!("wrote {}", path.display());
    Ok(EXIT_OK)
}

fn dispatch(cli: &Cli) -> Result<i32> {
    let config = load_config(&cli.config)?;
    let params = config.params;
    for warning in params.warnings() {
        eprintln!("warning: {warning}");
    }
    match &cli.command {
        Command::Correlations { output } => run_correlations(&params, output),
        Command::Stability { dump_matrices } => run_stability(&params, dump_matrices),
        Command::Sweep { axis, output } => run_sweep(&params, axis, output, cli.grid),
        Command::Reproduce { name, output_dir } => run_reproduce(name, output_dir, cli.grid),
    }
}

/// Entry point returning the process exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return EXIT_CONFIG;
        }
    };

    let execute = || -> Result<i32> {
        match cli.threads {
            Some(n) => {
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build()
                    .map_err(|e| Error::domain(e.to_string()))?;
                pool.install(|| dispatch(&cli))
            }
            None => dispatch(&cli),
        }
    };

    match execute() {
        Ok(code) => code,
        Err(Error::Unstable { max_real_part }) => {
            eprintln!("unstable operating point: max eigenvalue real part {max_real_part:e} rad/s");
            EXIT_UNSTABLE
        }
        Err(e @ (Error::Config { .. } | Error::Domain(_))) => {
            eprintln!("error: {e}");
            EXIT_CONFIG
        }
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}
