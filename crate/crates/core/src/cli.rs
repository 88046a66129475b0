//! Command-line front end. Exit codes: 0 success, 1 invalid input or a
//! failed simulation, 2 usage errors.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::analysis::{center_distance_histogram, nearest_distance_histogram};
use crate::entropy::entropy;
use crate::io::{emit_trajectories_csv, parse_choices, parse_scenario, Series};
use crate::policy::Policy;
use crate::simulation::{replay_observed, run_many, Scenario};
use crate::MeanTrajectory;

#[derive(Debug, Parser)]
#[command(name = "seating", version, about = "Seat-selection simulation and entropy tracking")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Average entropy trajectories over seeded runs and write them as CSV.
    Simulate {
        #[arg(long)]
        scenario: PathBuf,
        #[arg(long, value_enum)]
        policy: PolicyArg,
        #[arg(long, default_value_t = 1000)]
        runs: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Worker threads (0 = rayon default).
        #[arg(long, default_value_t = 0)]
        threads: usize,
    },
    /// Print the entropy trajectory of the observed placements as CSV.
    Replay {
        #[arg(long)]
        scenario: PathBuf,
    },
    /// Print the entropy of the scenario's grid.
    Entropy {
        #[arg(long)]
        scenario: PathBuf,
    },
    /// Histogram of distances from chosen seats, as distance,count CSV.
    Analyze {
        #[arg(long)]
        choices: PathBuf,
        #[arg(long, value_enum)]
        metric: Metric,
        #[arg(long, default_value_t = 2)]
        min_groups: usize,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum PolicyArg {
    Random,
    Max,
    Space,
    Simple,
    Center,
    All,
}

impl PolicyArg {
    fn policies(self) -> Vec<Policy> {
        match self {
            PolicyArg::Random => vec![Policy::Random],
            PolicyArg::Max => vec![Policy::Max],
            PolicyArg::Space => vec![Policy::Space],
            PolicyArg::Simple => vec![Policy::Simple],
            PolicyArg::Center => vec![Policy::Center],
            PolicyArg::All => Policy::ALL.to_vec(),
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Metric {
    Nearest,
    Center,
}

/// Failure carrying the exit code.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn input(message: impl ToString) -> Self {
        Self {
            code: 1,
            message: message.to_string(),
        }
    }

    fn usage(message: impl ToString) -> Self {
        Self {
            code: 2,
            message: message.to_string(),
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn load_scenario(path: &Path) -> Result<Scenario, Failure> {
    parse_scenario(&read(path)?).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

/// CSV for `policies` on `scenario`, followed by the observed replay when
/// the scenario carries one.
pub fn simulate_csv(
    scenario: &Scenario,
    policies: &[Policy],
    runs: usize,
    seed: u64,
) -> Result<String, String> {
    let mut means: Vec<(Policy, MeanTrajectory)> = Vec::with_capacity(policies.len());
    for &p in policies {
        let m = run_many(scenario, p, runs, seed).map_err(|e| format!("policy {p}: {e}"))?;
        means.push((p, m));
    }
    let real = match scenario.observed() {
        Some(_) => Some(replay_observed(scenario).map_err(|e| e.to_string())?),
        None => None,
    };
    let mut series: Vec<(&str, Series<'_, f64>)> =
        means.iter().map(|(p, m)| (p.keyword(), Series::Mean(m))).collect();
    if let Some(t) = &real {
        series.push(("real", Series::Exact(t)));
    }
    emit_trajectories_csv(&series).map_err(|e| e.to_string())
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<(), Failure> {
    match cli.command {
        Command::Simulate {
            scenario,
            policy,
            runs,
            seed,
            out: out_path,
            threads,
        } => {
            if runs == 0 {
                return Err(Failure::usage("--runs must be at least 1"));
            }
            let sc = load_scenario(&scenario)?;
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .map_err(Failure::input)?;
            let csv = pool
                .install(|| simulate_csv(&sc, &policy.policies(), runs, seed))
                .map_err(Failure::input)?;
            match out_path {
                Some(p) => fs::write(&p, csv).map_err(|e| Failure::input(format!("{}: {e}", p.display())))?,
                None => out.write_all(csv.as_bytes()).map_err(Failure::input)?,
            }
        }
        Command::Replay { scenario } => {
            let sc = load_scenario(&scenario)?;
            let t = replay_observed(&sc).map_err(Failure::input)?;
            let csv = emit_trajectories_csv::<f64>(&[("real", Series::Exact(&t))]).map_err(Failure::input)?;
            out.write_all(csv.as_bytes()).map_err(Failure::input)?;
        }
        Command::Entropy { scenario } => {
            let sc = load_scenario(&scenario)?;
            writeln!(out, "{}", entropy(&sc.initial_auditorium())).map_err(Failure::input)?;
        }
        Command::Analyze {
            choices,
            metric,
            min_groups,
        } => {
            let records = parse_choices(&read(&choices)?)
                .map_err(|e| Failure::input(format!("{}: {e}", choices.display())))?;
            let hist = match metric {
                Metric::Nearest => nearest_distance_histogram(&records),
                Metric::Center => center_distance_histogram(&records, min_groups),
            }
            .map_err(Failure::input)?;
            let mut text = String::from("distance,count\n");
            for (d, c) in hist.bins() {
                text.push_str(&format!("{d},{c}\n"));
            }
            out.write_all(text.as_bytes()).map_err(Failure::input)?;
        }
    }
    Ok(())
}

/// Runs the command line `args` (program name first) and returns the exit
/// code. Normal output goes to `out`, diagnostics to `err`.
pub fn run<I, A>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = A>,
    A: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 {
                write!(out, "{e}")
            } else {
                write!(err, "{e}")
            };
            return code;
        }
    };
    match execute(cli, out) {
        Ok(()) => 0,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}
