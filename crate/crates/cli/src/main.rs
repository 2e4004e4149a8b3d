use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use mode3_sif::{
    emit_csv, emit_plot_script, i1, i2, i3, parse_scenario, run_sweep, Error, PresetId,
    SweepScenario,
};

/// Mode III stress intensity factors for perturbed interfacial cracks.
#[derive(Parser)]
#[command(name = "mode3-sif", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a parameter sweep and write CSV (and optionally a gnuplot script).
    Sweep(SweepArgs),
    /// Check a scenario file at every sample of its sweep.
    Validate { file: PathBuf },
    /// Print I1, I2 and I3 at the given arguments.
    Integrals {
        #[arg(
            long,
            value_delimiter = ',',
            allow_hyphen_values = true,
            required = true
        )]
        beta: Vec<f64>,
    },
}

#[derive(Args)]
struct SweepArgs {
    /// Built-in configuration, table1a..table1h or table2a..table2d.
    #[arg(
        long,
        conflicts_with = "scenario",
        required_unless_present = "scenario"
    )]
    preset: Option<String>,
    /// TOML scenario file.
    #[arg(long)]
    scenario: Option<PathBuf>,
    /// CSV destination; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// gnuplot script destination (needs --out).
    #[arg(long, requires = "out")]
    plot: Option<PathBuf>,
    /// Contrast values, replacing the scenario's material list.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    eta: Option<Vec<f64>>,
    /// Points per sweep, replacing the scenario's count.
    #[arg(long)]
    samples: Option<usize>,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long)]
    workers: Option<usize>,
}

#[derive(Debug)]
enum Failure {
    Lib(Error),
    Io(PathBuf, io::Error),
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Lib(e) if e.is_numeric() => 2,
            _ => 1,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Lib(e) => write!(f, "{e}"),
            Failure::Io(path, e) => write!(f, "{}: {e}", path.display()),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn read_scenario(path: &Path) -> Result<SweepScenario, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Io(path.into(), e))?;
    Ok(parse_scenario(&text)?)
}

fn create(path: &Path) -> Result<BufWriter<File>, Failure> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|e| Failure::Io(path.into(), e))
}

fn sweep(args: SweepArgs) -> Result<(), Failure> {
    let mut scenario = match (&args.preset, &args.scenario) {
        (Some(id), _) => SweepScenario::preset(id.parse::<PresetId>()?),
        (None, Some(path)) => read_scenario(path)?,
        (None, None) => unreachable!("clap requires one source"),
    };
    if let Some(etas) = &args.eta {
        scenario = scenario.with_etas(etas);
    }
    if let Some(n) = args.samples {
        scenario = scenario.with_samples(n);
    }
    let workers = args
        .workers
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));

    let started = Instant::now();
    let result = run_sweep(&scenario, workers)?;
    eprintln!(
        "{}: {} rows, sweep over {}, output {}, tolerances abs {:e} rel {:e}, {:.2?}",
        result.metadata.label,
        result.rows.len(),
        result.metadata.axis,
        result.metadata.output,
        result.metadata.abs_tol,
        result.metadata.rel_tol,
        started.elapsed()
    );

    match &args.out {
        Some(path) => {
            let mut w = create(path)?;
            emit_csv(&result, &mut w).map_err(|e| Failure::Io(path.clone(), e))?;
        }
        None => {
            let stdout = io::stdout();
            emit_csv(&result, stdout.lock()).map_err(|e| Failure::Io("<stdout>".into(), e))?;
        }
    }
    if let (Some(plot), Some(csv)) = (&args.plot, &args.out) {
        // Refer to the CSV relative to the script so the pair can be moved.
        let csv_ref = match (csv.parent(), plot.parent()) {
            (Some(a), Some(b)) if a == b => {
                csv.file_name().map(PathBuf::from).unwrap_or(csv.clone())
            }
            _ => csv.clone(),
        };
        let mut w = create(plot)?;
        emit_plot_script(&result, &csv_ref.to_string_lossy(), &mut w)
            .map_err(|e| Failure::Io(plot.clone(), e))?;
    }
    Ok(())
}

fn validate(file: &Path) -> Result<(), Failure> {
    let scenario = read_scenario(file)?;
    let checked = scenario.validate_all()?;
    println!(
        "{}: ok ({} samples x {} materials = {checked} configurations)",
        file.display(),
        scenario.range.samples,
        scenario.materials.len()
    );
    Ok(())
}

fn integrals(betas: &[f64]) -> Result<(), Failure> {
    let mut out = io::stdout().lock();
    let io_err = |e| Failure::Io("<stdout>".into(), e);
    writeln!(out, "beta,i1,i2,i3").map_err(io_err)?;
    for &beta in betas {
        writeln!(
            out,
            "{beta:.11e},{:.15e},{:.15e},{:.15e}",
            i1(beta)?,
            i2(beta)?,
            i3(beta)
        )
        .map_err(io_err)?;
    }
    Ok(())
}

fn main() -> ExitCode {
    // clap would exit with 2, which is reserved for numeric failures.
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let outcome = match cli.command {
        Command::Sweep(args) => sweep(args),
        Command::Validate { file } => validate(&file),
        Command::Integrals { beta } => integrals(&beta),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
