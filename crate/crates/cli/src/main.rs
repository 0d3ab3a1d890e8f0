use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod compute;
mod sweep;
mod verify;

const ENV_HELP: &str = "Character tables are cached on disk in $KOSTKA_CACHE_DIR \
(default $HOME/.cache/kostka; set it to `off` to disable caching).";

#[derive(Parser)]
#[command(name = "kostka", version, about = "Kostka systems for Weyl groups of types A and BC", after_help = ENV_HELP)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one Kostka system.
    Compute(ComputeArgs),
    /// Run invariant suites over a grid of parameters.
    Verify(VerifyArgs),
    /// Write phyla, strong classes and Kostka systems for a grid of (n, s).
    Sweep(SweepArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EngineArg {
    Shoji,
    Transition,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VarArg {
    T,
    Q,
}

#[derive(Args)]
struct ComputeArgs {
    /// A or BC
    #[arg(long)]
    family: String,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 2)]
    r: usize,
    /// Rational parameter, written `p/q` or as an integer.
    #[arg(long)]
    s: Option<String>,
    /// Infinitesimal shift: -, 0 or +.
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    eps: String,
    #[arg(long, value_enum, default_value_t = EngineArg::Shoji)]
    engine: EngineArg,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Variable for csv and pretty output.
    #[arg(long, value_enum, default_value_t = VarArg::T)]
    var: VarArg,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Write the step records of the transition engine here.
    #[arg(long)]
    trace: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// orthogonality, positivity, pieri, refinement, engines, midpoint,
    /// charge, coinvariant or all; may be repeated.
    #[arg(long, default_value = "all")]
    suite: Vec<String>,
    #[arg(long, default_value_t = 3)]
    n_max: usize,
    #[arg(long, default_value_t = 4)]
    s_max: i64,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, hide = true)]
    inject_fault: bool,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long)]
    n_max: usize,
    #[arg(long)]
    s_max: i64,
    #[arg(long)]
    out_dir: PathBuf,
}

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }

    pub fn engine(message: impl ToString) -> Self {
        Failure { code: 3, message: message.to_string() }
    }
}

pub fn emit(out: Option<&PathBuf>, text: &str) -> Result<(), Failure> {
    match out {
        Some(p) => kostka::weylchar::write_atomic(p, text.as_bytes()).map_err(|e| Failure::engine(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Compute(a) => compute::run(&a),
        Command::Verify(a) => verify::run(&a),
        Command::Sweep(a) => sweep::run(&a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            if !f.message.is_empty() {
                eprintln!("kostka: {}", f.message);
            }
            ExitCode::from(f.code)
        }
    }
}
