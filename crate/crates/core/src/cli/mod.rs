//! Command-line front end. [`run`] parses arguments, writes results to the
//! given sinks and returns the process exit code.

mod expr;

pub use expr::eval as eval_interval;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs::{self, File};
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::dataflow::{render_frame, write_trace_csv, DataflowError, Engine, MorphFile, ProgramFile};
use crate::interval::IntervalError;
use crate::measure::{
    program_distance, read_measure_csv, read_operator_csv, write_measure_csv, LinearOp, MeasureError, SignedMeasure,
};
use crate::metric::relaxed_distance;
use crate::sampler::{estimate_with, EstimationReport, SamplerError, SamplerSpec, Schedule};
use crate::Pii;

/// Process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[repr(i32)]
pub enum ExitStatus {
    Success = 0,
    Domain = 1,
    Usage = 2,
    CheckFailed = 3,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        self as i32
    }
}

#[derive(Debug)]
struct Failure {
    status: ExitStatus,
    msg: String,
}

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure { status: ExitStatus::Usage, msg: e.to_string() }
}

fn domain(e: impl std::fmt::Display) -> Failure {
    Failure { status: ExitStatus::Domain, msg: e.to_string() }
}

impl From<IntervalError> for Failure {
    fn from(e: IntervalError) -> Self {
        match e {
            IntervalError::Parse(_) => usage(e),
            _ => domain(e),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        domain(e)
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "linmodels",
    version,
    about = "Linear models of computation: intervals, signed measures, samplers, dataflow"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate an interval expression, e.g. `~[1,3] + [1,3]`
    Interval {
        /// Expression; several arguments are joined with spaces
        #[arg(required = true, num_args = 1.., allow_hyphen_values = true)]
        expr: Vec<String>,
    },
    /// Lower and upper distance between two intervals
    Metric {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
    },
    /// Signed measure and operator computations over CSV files
    Measure {
        #[arg(value_enum)]
        action: MeasureAction,
        /// Operator CSV (apply, norm, dist)
        #[arg(long)]
        op: Option<PathBuf>,
        /// Second operator CSV (dist)
        #[arg(long)]
        op2: Option<PathBuf>,
        /// Measure CSV (apply, hj, norm)
        #[arg(long)]
        measure: Option<PathBuf>,
        /// Write hj parts to positive.csv and negative.csv here
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Run a signed sampler spec and print its signed histogram
    Sample {
        spec: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100_000)]
        n: usize,
        /// Draw children at random instead of by stride scheduling
        #[arg(long)]
        mixture: bool,
    },
    /// Run a dataflow program, writing PGM frames and optionally a trace
    Dataflow {
        program: PathBuf,
        #[arg(long)]
        ticks: usize,
        #[arg(long)]
        out_dir: PathBuf,
        /// Morph descriptor ramping the weights towards `W_end`
        #[arg(long)]
        morph: Option<PathBuf>,
        /// Values in [-range, range] map onto the gray scale
        #[arg(long, default_value_t = 1.0)]
        range: f64,
        /// Worker threads; 0 runs sequentially
        #[arg(long, default_value_t = 0)]
        threads: usize,
        /// Also write trace.csv
        #[arg(long)]
        trace: bool,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MeasureAction {
    Apply,
    Hj,
    Norm,
    Dist,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
                return ExitStatus::Usage.code();
            }
            let _ = write!(out, "{text}");
            return ExitStatus::Success.code();
        }
    };
    match dispatch(cli.cmd, out) {
        Ok(status) => status.code(),
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.msg);
            f.status.code()
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<ExitStatus, Failure> {
    match cmd {
        Command::Interval { expr } => {
            writeln!(out, "{}", eval_interval(&expr.join(" "))?)?;
        }
        Command::Metric { x, y } => {
            let x: Pii = x.parse()?;
            let y: Pii = y.parse()?;
            let d = relaxed_distance(&x, &y)?;
            writeln!(out, "l={} p={} pair={}", d.lower + 0.0, d.upper + 0.0, d.as_pii())?;
        }
        Command::Measure { action, op, op2, measure, out_dir } => {
            cmd_measure(action, op, op2, measure, out_dir, out)?;
        }
        Command::Sample { spec, seed, n, mixture } => return cmd_sample(&spec, seed, n, mixture, out),
        Command::Dataflow { program, ticks, out_dir, morph, range, threads, trace } => {
            cmd_dataflow(&program, ticks, &out_dir, morph.as_deref(), range, threads, trace, out)?;
        }
    }
    Ok(ExitStatus::Success)
}

fn required<'a>(p: &'a Option<PathBuf>, flag: &str) -> Result<&'a Path, Failure> {
    p.as_deref().ok_or_else(|| usage(format!("--{flag} is required for this action")))
}

fn load_measure(path: &Path) -> Result<SignedMeasure, Failure> {
    read_measure_csv(File::open(path).map_err(|e| usage(format!("{}: {e}", path.display())))?)
        .map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn load_operator(path: &Path) -> Result<LinearOp, Failure> {
    read_operator_csv(File::open(path).map_err(|e| usage(format!("{}: {e}", path.display())))?)
        .map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn measure_failure(e: MeasureError) -> Failure {
    match e {
        MeasureError::Csv(_) => usage(e),
        _ => domain(e),
    }
}

fn cmd_measure(
    action: MeasureAction,
    op: Option<PathBuf>,
    op2: Option<PathBuf>,
    measure: Option<PathBuf>,
    out_dir: Option<PathBuf>,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    match action {
        MeasureAction::Apply => {
            let op = load_operator(required(&op, "op")?)?;
            let mu = load_measure(required(&measure, "measure")?)?;
            let nu = op.apply(&mu).map_err(measure_failure)?;
            write_measure_csv(&nu, out).map_err(measure_failure)?;
        }
        MeasureAction::Hj => {
            let mu = load_measure(required(&measure, "measure")?)?;
            let parts = mu.hahn_jordan();
            match out_dir {
                Some(dir) => {
                    fs::create_dir_all(&dir)?;
                    write_measure_csv(&parts.positive, File::create(dir.join("positive.csv"))?)
                        .map_err(measure_failure)?;
                    write_measure_csv(&parts.negative, File::create(dir.join("negative.csv"))?)
                        .map_err(measure_failure)?;
                }
                None => {
                    write_measure_csv(&parts.positive, &mut *out).map_err(measure_failure)?;
                    writeln!(out)?;
                    write_measure_csv(&parts.negative, &mut *out).map_err(measure_failure)?;
                }
            }
        }
        MeasureAction::Norm => match (&measure, &op) {
            (Some(m), _) => writeln!(out, "{}", load_measure(m)?.tv_norm())?,
            (None, Some(o)) => writeln!(out, "{}", load_operator(o)?.op_norm())?,
            (None, None) => return Err(usage("norm needs --measure or --op")),
        },
        MeasureAction::Dist => {
            let a = load_operator(required(&op, "op")?)?;
            let b = load_operator(required(&op2, "op2")?)?;
            writeln!(out, "{}", program_distance(&a, &b).map_err(measure_failure)?)?;
        }
    }
    Ok(())
}

fn cmd_sample(path: &Path, seed: u64, n: usize, mixture: bool, out: &mut dyn Write) -> Result<ExitStatus, Failure> {
    let text = fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    let spec = SamplerSpec::from_json(&text).map_err(usage)?;
    let schedule = if mixture { Schedule::Mixture } else { Schedule::Stride };
    let report = estimate_with(&spec, seed, n, schedule).map_err(|e| match e {
        SamplerError::ZeroSamples => usage(e),
        _ => domain(e),
    })?;
    let mut w = csv::Writer::from_writer(&mut *out);
    let row_err = |e: csv::Error| domain(e);
    w.write_record(["atom", "pos_count", "neg_count", "estimate"]).map_err(row_err)?;
    for atom in spec.atoms() {
        let (p, q) = report.counts.get(&atom).copied().unwrap_or_default();
        let est = report.estimate.get(&atom) + 0.0;
        w.write_record([atom.0.clone(), p.to_string(), q.to_string(), format!("{est:?}")]).map_err(row_err)?;
    }
    w.flush()?;
    drop(w);
    statistical_check(&report, &spec.exact_semantics())
}

/// Exit 3 when the estimate lies outside the error envelope.
fn statistical_check(report: &EstimationReport, exact: &SignedMeasure) -> Result<ExitStatus, Failure> {
    if report.within_bound(exact) {
        Ok(ExitStatus::Success)
    } else {
        Err(Failure {
            status: ExitStatus::CheckFailed,
            msg: format!("tv distance {} exceeds the error bound {}", report.tv_distance(exact), report.tv_error_bound),
        })
    }
}

fn dataflow_failure(e: DataflowError) -> Failure {
    match e {
        DataflowError::Descriptor(_) | DataflowError::ShapeMismatch(_) | DataflowError::AsymmetricMask(_) => usage(e),
        _ => domain(e),
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_dataflow(
    path: &Path,
    ticks: usize,
    out_dir: &Path,
    morph: Option<&Path>,
    range: f64,
    threads: usize,
    trace: bool,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let read = |p: &Path| fs::read_to_string(p).map_err(|e| usage(format!("{}: {e}", p.display())));
    let desc = ProgramFile::from_json(&read(path)?).map_err(usage)?;
    let prog = desc.program().map_err(dataflow_failure)?;
    let engine = if threads == 0 { Engine::sequential() } else { Engine::with_threads(threads) };
    let externals: BTreeMap<_, _> = desc.externals();
    let result = match morph {
        Some(m) => {
            let schedule = MorphFile::from_json(&read(m)?).map_err(usage)?.schedule(&prog).map_err(dataflow_failure)?;
            engine.morph_run(&prog, &schedule, desc.initial_state(), &externals, ticks)
        }
        None => engine.run(&prog, desc.initial_state(), &externals, ticks),
    };
    let tr = result.map_err(domain)?;
    fs::create_dir_all(out_dir)?;
    for (t, state) in tr.states.iter().enumerate() {
        let bytes = render_frame(state, desc.width(), -range, range).map_err(dataflow_failure)?;
        fs::write(out_dir.join(format!("frame_{t:05}.pgm")), bytes)?;
    }
    if trace {
        let f = BufWriter::new(File::create(out_dir.join("trace.csv"))?);
        write_trace_csv(&tr, f).map_err(domain)?;
    }
    writeln!(out, "wrote {} frames to {}", tr.states.len(), out_dir.display())?;
    Ok(())
}
