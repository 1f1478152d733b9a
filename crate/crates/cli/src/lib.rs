//! Command-line front end: argument grammar, dispatch and output rendering.
//!
//! [`dispatch`] is the whole program minus process plumbing, so tests can
//! drive it without spawning the binary.

mod args;
mod envelope;
mod input;
mod verbs;

use std::time::Instant;

use clap::error::ErrorKind;
use clap::Parser;
use prlab_core::search::SearchOptions;
use serde_json::{Map, Value};

pub use envelope::{OutputEnvelope, Report, Status};

use args::{Cli, Command};

/// Exit code and the two output streams of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Failure that stops a verb before it reaches a verdict.
#[derive(Debug)]
pub enum CliError {
    /// Malformed arguments or input files.
    Usage(String),
    /// A cap was reached, so no verdict is available.
    Bounded(String),
}

impl From<prlab_core::Error> for CliError {
    fn from(e: prlab_core::Error) -> Self {
        use prlab_core::Error as E;
        match e {
            E::Bound(_) | E::Overflow(_) | E::NodeLimit(_) => CliError::Bounded(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

pub(crate) struct Context {
    pub search: SearchOptions,
    pub seed: u64,
}

/// Runs one command line (without the program name).
pub fn dispatch(argv: &[String]) -> Output {
    let wants_json = argv.iter().any(|a| a == "--json");
    let name = command_name(argv);
    let cli = match Cli::try_parse_from(std::iter::once("prlab".to_string()).chain(argv.iter().cloned())) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Output { code: 0, stdout: e.to_string(), stderr: String::new() },
                _ => failure(&name, Status::Usage, &e.to_string(), Map::new(), wants_json),
            }
        }
    };
    if cli.threads == 0 {
        return failure(&name, Status::Usage, "--threads must be at least 1", Map::new(), cli.json);
    }
    let ctx = Context { search: SearchOptions { threads: cli.threads, max_nodes: cli.max_nodes }, seed: cli.seed };
    let start = Instant::now();
    let report = run(&ctx, cli.command);
    let timing_ms = start.elapsed().as_millis() as u64;
    match report {
        Ok(report) => render(&name, report, timing_ms, cli.json),
        Err(CliError::Usage(msg)) => failure(&name, Status::Usage, &msg, Map::new(), cli.json),
        Err(CliError::Bounded(msg)) => {
            let mut bounds = Map::new();
            bounds.insert("max_nodes".into(), cli.max_nodes.into());
            failure(&name, Status::Unknown, &msg, bounds, cli.json)
        }
    }
}

fn run(ctx: &Context, command: Command) -> Result<Report, CliError> {
    match command {
        Command::CheckMatrix { file } => verbs::rado::check_matrix(&file),
        Command::CheckLinear { poly } => verbs::rado::check_linear(&poly),
        Command::CheckAffine { poly } => verbs::rado::check_affine(&poly),
        Command::Smod { p, n } => verbs::rado::smod(p, n),
        Command::BlockingPrime { coeffs } => verbs::rado::blocking_prime(&coeffs),
        Command::Parametric { poly, subset } => verbs::rado::parametric(&poly, &subset),
        Command::Search(cmd) => verbs::search::run(ctx, cmd),
        Command::Vdw(cmd) => verbs::search::vdw(ctx, cmd),
        Command::Folkman(cmd) => verbs::folkman::run(cmd),
        Command::Poly(cmd) => verbs::poly::run(cmd),
        Command::Omega(cmd) => verbs::omega::run(ctx, cmd),
        Command::Embed(cmd) => verbs::embed::run(cmd),
    }
}

/// Verb path such as `search forcing-number`, for the envelope.
fn command_name(argv: &[String]) -> String {
    const GROUPS: [&str; 6] = ["search", "vdw", "folkman", "poly", "omega", "embed"];
    let mut words = argv.iter().filter(|a| !a.starts_with('-'));
    match words.next() {
        Some(first) if GROUPS.contains(&first.as_str()) => match words.next() {
            Some(second) => format!("{first} {second}"),
            None => first.clone(),
        },
        Some(first) => first.clone(),
        None => String::new(),
    }
}

fn render(name: &str, report: Report, timing_ms: u64, json: bool) -> Output {
    let code = report.status as i32;
    if json {
        let env = OutputEnvelope {
            command: name.to_string(),
            verdict: report.verdict,
            result: report.result,
            certificate: report.certificate.unwrap_or(Value::Null),
            provenance: report.provenance.to_string(),
            bounds: report.bounds,
            timing_ms,
        };
        let text = serde_json::to_string(&env).expect("envelope serializes");
        return Output { code, stdout: format!("{text}\n"), stderr: String::new() };
    }
    let mut stdout = format!("verdict: {}\n", report.verdict);
    for line in &report.text {
        stdout.push_str(line);
        stdout.push('\n');
    }
    if !report.bounds.is_empty() {
        let bounds: Vec<String> = report.bounds.iter().map(|(k, v)| format!("{k}={v}")).collect();
        stdout.push_str(&format!("bounds: {}\n", bounds.join(", ")));
    }
    stdout.push_str(&format!("provenance: {}\n", report.provenance));
    Output { code, stdout, stderr: String::new() }
}

fn failure(name: &str, status: Status, msg: &str, bounds: Map<String, Value>, json: bool) -> Output {
    let verdict = if status == Status::Usage { "usage-error" } else { "unknown" };
    if json {
        let env = OutputEnvelope {
            command: name.to_string(),
            verdict: verdict.to_string(),
            result: serde_json::json!({ "message": msg.trim() }),
            certificate: Value::Null,
            provenance: "none".to_string(),
            bounds,
            timing_ms: 0,
        };
        let text = serde_json::to_string(&env).expect("envelope serializes");
        return Output { code: status as i32, stdout: format!("{text}\n"), stderr: String::new() };
    }
    let msg = msg.trim();
    let stderr = if msg.starts_with("error:") {
        format!("{msg}\n")
    } else {
        let prefix = if status == Status::Usage { "error" } else { "unknown" };
        format!("{prefix}: {msg}\n")
    };
    Output { code: status as i32, stdout: String::new(), stderr }
}
