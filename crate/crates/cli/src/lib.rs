//! The `cp3` command line: exact verifications and numeric runs, each
//! producing one JSON report.

use std::fs::File;
use std::io::BufWriter;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use cp3_core::solutions::SeedId;
use cp3_core::{Check, Status, Subsystem, SystemId};
use cp3_numeric::{integrate, symmetry_commute_check, write_csv, Config64, Flow, NumericError, C64};

pub mod input;
pub mod numeric_battery;
pub mod report;
pub mod suite;

pub use report::{Record, Report};
use suite::{run_tasks, TaskError, Which};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "cp3", version, about = "Verify and integrate the coupled Painlevé III systems")]
pub struct Cli {
    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    pub report: Option<PathBuf>,
    /// Skip the table on stderr.
    #[arg(long, global = true)]
    pub quiet: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact symbolic checks.
    Verify {
        #[command(subcommand)]
        what: Verify,
    },
    /// Integrate one system numerically.
    Integrate(IntegrateArgs),
    /// Compare integrate-then-map with map-then-integrate.
    Commute(CommuteArgs),
}

fn system_arg(s: &str) -> Result<SystemId, String> {
    s.parse().map_err(|e: cp3_core::CoreError| e.to_string())
}

fn seed_arg(s: &str) -> Result<SeedId, String> {
    s.parse().map_err(|e: cp3_core::CoreError| e.to_string())
}

#[derive(Debug, Subcommand)]
pub enum Verify {
    /// Involutions, braid relations and π relations.
    Relations {
        #[arg(long, value_parser = system_arg)]
        system: SystemId,
    },
    /// Each map sends the flow to itself.
    Symmetry {
        #[arg(long, value_parser = system_arg)]
        system: SystemId,
        /// One roster map; all of them by default.
        #[arg(long)]
        map: Option<String>,
    },
    /// Parameter shifts of the translation words.
    Translations {
        #[arg(long, value_parser = system_arg)]
        system: SystemId,
    },
    /// Polynomiality of the Hamiltonian in every holomorphy chart.
    Charts {
        #[arg(long, value_parser = system_arg)]
        system: SystemId,
    },
    /// Degenerations and equivalences between systems.
    Confluence {
        #[arg(long, value_enum)]
        which: Which,
    },
    /// Closed-form solutions.
    Solutions {
        #[arg(long, value_parser = seed_arg)]
        id: Option<SeedId>,
    },
    /// First integrals of the two-dimensional pieces.
    Integrals,
    /// Vector fields against the printed equations, and decompositions.
    Fields {
        #[arg(long, value_parser = system_arg)]
        system: Option<SystemId>,
    },
    /// The fixed numeric battery.
    Numeric,
    /// Everything above.
    All,
}

#[derive(Debug, Args)]
pub struct Trajectory {
    /// A main system (d6, b5, ...) or a two-dimensional piece (h3, k5, ...).
    #[arg(long)]
    pub system: String,
    /// JSON array of [re, im] pairs, in the system's parameter order.
    #[arg(long, allow_hyphen_values = true)]
    pub params: String,
    #[arg(long, allow_hyphen_values = true)]
    pub initial: String,
    #[arg(long, allow_hyphen_values = true)]
    pub t0: f64,
    #[arg(long, allow_hyphen_values = true)]
    pub t1: f64,
    /// Relative tolerance; the absolute one is a hundredth of it.
    #[arg(long)]
    pub tol: Option<f64>,
}

#[derive(Debug, Args)]
pub struct IntegrateArgs {
    #[command(flatten)]
    pub run: Trajectory,
    /// CSV file for the trajectory.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CommuteArgs {
    #[command(flatten)]
    pub run: Trajectory,
    /// A generator, a space-separated word, or `id`.
    #[arg(long)]
    pub map: String,
}

/// Result of one invocation: the exit status and, unless the arguments
/// were unusable, a report.
#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    pub report: Option<Report>,
    pub message: Option<String>,
}

impl Outcome {
    fn usage(msg: impl Into<String>) -> Outcome {
        Outcome { code: EXIT_USAGE, report: None, message: Some(msg.into()) }
    }

    fn finished(report: Report) -> Outcome {
        let code = if report.any_failed() { EXIT_FAILED } else { EXIT_OK };
        Outcome { code, report: Some(report), message: None }
    }
}

fn verify(what: &Verify) -> (Option<SystemId>, Vec<suite::Task>) {
    match what {
        Verify::Relations { system } => (Some(*system), suite::relations(*system)),
        Verify::Symmetry { system, map } => (Some(*system), suite::symmetry(*system, map.as_deref())),
        Verify::Translations { system } => (Some(*system), suite::translation_shifts(*system)),
        Verify::Charts { system } => (Some(*system), suite::charts(*system)),
        Verify::Confluence { which } => (None, suite::confluence(*which)),
        Verify::Solutions { id } => (None, suite::solutions(*id)),
        Verify::Integrals => (None, suite::integrals()),
        Verify::Fields { system } => (*system, suite::fields(*system)),
        Verify::Numeric => (None, suite::numeric()),
        Verify::All => (None, suite::all()),
    }
}

enum Target {
    Main(SystemId),
    Piece(Subsystem),
}

fn target(name: &str) -> Result<Target, String> {
    if let Ok(id) = name.parse::<SystemId>() {
        return Ok(Target::Main(id));
    }
    name.parse::<Subsystem>().map(Target::Piece).map_err(|_| format!("unknown system {name:?}"))
}

fn config(tol: Option<f64>) -> Config64 {
    tol.map_or_else(Config64::default, Config64::with_tol)
}

/// Usage-type numeric errors come from the arguments, not the run.
fn is_usage(e: &NumericError) -> bool {
    matches!(
        e,
        NumericError::Arity { .. } | NumericError::Constraint(_) | NumericError::Config(_) | NumericError::CrossesOrigin { .. }
    ) || matches!(e, NumericError::Core(cp3_core::CoreError::Usage(_)))
}

fn numeric_outcome(mut report: Report, name: String, r: Result<Check, NumericError>, started: Instant) -> Outcome {
    match r {
        Ok(c) => {
            report.checks.push(Record::from_check(c, started.elapsed()));
            Outcome::finished(report)
        }
        Err(e) if is_usage(&e) => Outcome::usage(e.to_string()),
        Err(e) => {
            report.checks.push(Record::from_check(Check::new(name, Status::Fail, e.to_string()), started.elapsed()));
            Outcome::finished(report)
        }
    }
}

fn show(z: &[C64]) -> String {
    let parts: Vec<String> = z.iter().map(|c| format!("[{:e}, {:e}]", c.re, c.im)).collect();
    format!("[{}]", parts.join(", "))
}

fn run_integrate(a: &IntegrateArgs, command: String) -> Outcome {
    let r = &a.run;
    let (Ok(params), Ok(initial)) = (input::complex_vector(&r.params), input::complex_vector(&r.initial)) else {
        let e = input::complex_vector(&r.params).and_then(|_| input::complex_vector(&r.initial)).unwrap_err();
        return Outcome::usage(e);
    };
    let flow = match target(&r.system) {
        Ok(Target::Main(id)) => Flow::system(id, &params),
        Ok(Target::Piece(h)) => Flow::subsystem(h, &params),
        Err(e) => return Outcome::usage(e),
    };
    let report = Report::new(command, Some(r.system.to_lowercase()));
    let started = Instant::now();
    let name = format!("integrate {} on [{}, {}]", r.system, r.t0, r.t1);
    let result = flow.and_then(|f| integrate(&f, &initial, r.t0, r.t1, &config(r.tol), None)).and_then(|tr| {
        if let Some(path) = &a.out {
            let file = File::create(path).map_err(|e| NumericError::Csv(format!("{}: {e}", path.display())))?;
            write_csv(&tr, BufWriter::new(file))?;
        }
        Ok(Check::recorded(
            name.clone(),
            format!("state at t = {}: {} ({} accepted, {} rejected steps)", tr.end_time(), show(tr.last()), tr.accepted, tr.rejected),
        ))
    });
    numeric_outcome(report, name, result, started)
}

fn run_commute(a: &CommuteArgs, command: String) -> Outcome {
    let r = &a.run;
    let id = match target(&r.system) {
        Ok(Target::Main(id)) => id,
        Ok(Target::Piece(_)) => return Outcome::usage("commute needs one of d6, b5, d52, d51, a1d7"),
        Err(e) => return Outcome::usage(e),
    };
    let parsed = input::complex_vector(&r.params).and_then(|p| Ok((p, input::complex_vector(&r.initial)?)));
    let (params, initial) = match parsed {
        Ok(v) => v,
        Err(e) => return Outcome::usage(e),
    };
    let report = Report::new(command, Some(id.to_string()));
    let started = Instant::now();
    let result = symmetry_commute_check(id, &a.map, &params, &initial, r.t0, r.t1, &config(r.tol)).map(|c| c.check);
    numeric_outcome(report, format!("{id} {} commutes with the flow", a.map), result, started)
}

/// Parses `argv` (program name first) and runs it.
pub fn run<I, S>(argv: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv: Vec<String> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            return Outcome { code, report: None, message: Some(e.render().to_string()) };
        }
    };
    let command = argv.iter().skip(1).cloned().collect::<Vec<_>>().join(" ");
    run_cli(&cli, command)
}

pub fn run_cli(cli: &Cli, command: String) -> Outcome {
    match &cli.command {
        Command::Verify { what } => {
            let (system, tasks) = verify(what);
            let mut report = Report::new(command, system.map(|s| s.to_string()));
            match run_tasks(&tasks) {
                Ok(records) => {
                    report.checks = records;
                    Outcome::finished(report)
                }
                Err(TaskError::Usage(m)) => Outcome::usage(m),
                Err(TaskError::Internal(m)) => Outcome { code: EXIT_INTERNAL, report: None, message: Some(m) },
            }
        }
        Command::Integrate(a) => run_integrate(a, command),
        Command::Commute(a) => run_commute(a, command),
    }
}
