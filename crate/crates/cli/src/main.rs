//! `zp`: principalize plane ideals and study the poles of their local
//! topological zeta functions from the command line.
//!
//! Exit codes: 0 success, 2 bad input, 3 unsupported input (irrational
//! centers, exhausted blow-up budget), 4 failed check or broken invariant.

mod commands;
mod error;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

use commands::{Options, Report, Source};
use error::CliError;

#[derive(Parser)]
#[command(name = "zp", version, about = "Topological zeta functions of plane ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the minimal principalization and print its log and diagram.
    Principalize {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        output: Output,
        /// Print the diagram in DOT format.
        #[arg(long)]
        dot: bool,
    },
    /// The reduced zeta function and its term list.
    Zeta(Analysis),
    /// Poles of the reduced zeta function with their orders.
    Poles(Analysis),
    /// Decide every candidate pole from the diagram alone.
    Classify(Analysis),
    /// Relations with the generic curve, minimum property and diagram checks.
    Verify(Analysis),
    /// The family member `(x^b y, x^a + y^(b+1))`.
    Family {
        a: u32,
        b: u32,
        #[command(flatten)]
        output: Output,
        #[arg(long, default_value_t = topzeta::principalize::DEFAULT_MAX_STEPS)]
        max_blowups: usize,
    },
    /// Find a family member with a pole at the given rational.
    Realize {
        #[arg(allow_hyphen_values = true)]
        s0: String,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Args)]
struct Input {
    /// Generators such as "x^4*y" "x^7 + x*y^4".
    generators: Vec<String>,
    /// Files with one generator per line; each file is a separate ideal.
    #[arg(long = "file", value_name = "FILE")]
    files: Vec<PathBuf>,
    #[arg(long, default_value_t = topzeta::principalize::DEFAULT_MAX_STEPS)]
    max_blowups: usize,
    /// Worker threads when several files are given.
    #[arg(long, value_name = "N")]
    jobs: Option<usize>,
}

#[derive(Args)]
struct Output {
    #[arg(long)]
    json: bool,
    /// Also run the structural validators and the pole cross-check.
    #[arg(long)]
    check: bool,
    /// Seed for the coefficients of the generic member.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct Analysis {
    #[command(flatten)]
    input: Input,
    #[command(flatten)]
    output: Output,
    /// Work on diagrams stored with `principalize --json` instead of generators.
    #[arg(long = "diagram-json", value_name = "FILE")]
    diagram_json: Vec<PathBuf>,
}

fn options(output: &Output, max_blowups: usize, dot: bool) -> Options {
    Options {
        json: output.json,
        dot,
        check: output.check,
        seed: output.seed,
        max_blowups,
    }
}

/// One labelled unit of work.
struct Job {
    label: Option<String>,
    source: Result<Source, CliError>,
}

fn jobs(input: &Input, diagrams: &[PathBuf]) -> Vec<Job> {
    let mut out = Vec::new();
    if !input.generators.is_empty() || (input.files.is_empty() && diagrams.is_empty()) {
        out.push(Job {
            label: None,
            source: Ok(Source::Generators(input.generators.clone())),
        });
    }
    for f in &input.files {
        out.push(Job {
            label: Some(f.display().to_string()),
            source: commands::read_generator_file(f).map(Source::Generators),
        });
    }
    for f in diagrams {
        out.push(Job {
            label: Some(f.display().to_string()),
            source: commands::read_diagram_file(f).map(stored_diagram),
        });
    }
    out
}

/// Accepts either a bare diagram or the full output of `principalize --json`.
fn stored_diagram(text: String) -> Source {
    match serde_json::from_str::<serde_json::Value>(&text) {
        Ok(serde_json::Value::Object(mut m)) if m.contains_key("diagram") => {
            let d = m.remove("diagram").unwrap_or_default();
            Source::Diagram(d.to_string())
        }
        _ => Source::Diagram(text),
    }
}

/// Run every job, in parallel when asked to, and print the reports in input
/// order. The exit code is that of the first failing job.
fn run_batch(
    jobs: Vec<Job>,
    threads: Option<usize>,
    f: impl Fn(&Source) -> Result<Report, CliError> + Sync,
) -> ExitCode {
    let labelled = jobs.len() > 1;
    let work = || -> Vec<(Option<String>, Result<Report, CliError>)> {
        jobs.into_par_iter()
            .map(|j| (j.label, j.source.and_then(|s| f(&s))))
            .collect()
    };
    let results = match threads {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(work),
            Err(e) => {
                eprintln!("error: cannot start {n} worker threads: {e}");
                return ExitCode::from(4);
            }
        },
        None => work(),
    };

    let mut code = None;
    for (label, result) in results {
        if labelled {
            println!("== {} ==", label.as_deref().unwrap_or("arguments"));
        }
        if let Some(c) = emit(label.as_deref(), result) {
            code.get_or_insert(c);
        }
    }
    code.map_or(ExitCode::SUCCESS, ExitCode::from)
}

/// Print one report; returns the exit code if it failed.
fn emit(label: Option<&str>, result: Result<Report, CliError>) -> Option<u8> {
    let failure = match result {
        Ok(report) => {
            let mut out = std::io::stdout().lock();
            let _ = out.write_all(report.text.as_bytes());
            let _ = out.flush();
            report.failure
        }
        Err(e) => Some(e),
    };
    let e = failure?;
    match label {
        Some(l) => eprintln!("error: {l}: {e}"),
        None => eprintln!("error: {e}"),
    }
    Some(e.exit_code())
}

fn single(result: Result<Report, CliError>) -> ExitCode {
    emit(None, result).map_or(ExitCode::SUCCESS, ExitCode::from)
}

fn analysis(a: &Analysis, f: fn(&Source, &Options) -> Result<Report, CliError>) -> ExitCode {
    let opts = options(&a.output, a.input.max_blowups, false);
    run_batch(jobs(&a.input, &a.diagram_json), a.input.jobs, |s| f(s, &opts))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match &cli.command {
        Command::Principalize { input, output, dot } => {
            let opts = options(output, input.max_blowups, *dot);
            run_batch(jobs(input, &[]), input.jobs, |s| match s {
                Source::Generators(g) => commands::principalize_cmd(g, &opts),
                Source::Diagram(_) => unreachable!("principalize takes no stored diagrams"),
            })
        }
        Command::Zeta(a) => analysis(a, commands::zeta_cmd),
        Command::Poles(a) => analysis(a, commands::poles_cmd),
        Command::Classify(a) => analysis(a, commands::classify_cmd),
        Command::Verify(a) => analysis(a, commands::verify_cmd),
        Command::Family {
            a,
            b,
            output,
            max_blowups,
        } => single(commands::family_cmd(*a, *b, &options(output, *max_blowups, false))),
        Command::Realize { s0, output } => {
            single(commands::realize_cmd(s0, &options(output, 0, false)))
        }
    }
}
