use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use preassoc_cli::commands::{
    cmd_check, cmd_enumerate, cmd_factorize, cmd_generate, parse_properties, GenerateArgs, Global,
};
use preassoc_cli::{CliError, EXIT_INPUT};

/// Check, factorize, generate and enumerate truncated variadic functions.
#[derive(Parser)]
#[command(name = "preassoc", version)]
struct Cli {
    /// Emit a JSON report on stdout.
    #[arg(long, global = true)]
    json: bool,
    /// Truncation arity (check/factorize: at most the file's; default 3 elsewhere).
    #[arg(long, global = true)]
    max_arity: Option<usize>,
    /// Print nothing but the requested output.
    #[arg(long, short, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run property checkers on a function file.
    Check {
        file: PathBuf,
        /// Comma-separated property names (default: all).
        #[arg(long, value_delimiter = ',')]
        props: Vec<String>,
    },
    /// Factor a function as f ∘ H with H associative.
    Factorize {
        file: PathBuf,
        /// Where to write H (default: stdout).
        #[arg(long = "out-h")]
        out_h: Option<PathBuf>,
        /// Where to write the report.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Quasi-inverse choice `y=x`, repeatable.
        #[arg(long = "pin", value_parser = parse_pin)]
        pins: Vec<(String, String)>,
    },
    /// Tabulate a family member.
    Generate {
        #[command(flatten)]
        family: Box<GenerateArgs>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Enumerate small universes as JSON lines.
    Enumerate {
        #[arg(long)]
        chain_size: usize,
        #[arg(long, value_delimiter = ',')]
        filter: Vec<String>,
        /// Lift the size guards.
        #[arg(long)]
        force: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_pin(s: &str) -> Result<(String, String), String> {
    s.split_once('=')
        .map(|(y, x)| (y.to_string(), x.to_string()))
        .ok_or_else(|| format!("expected y=x, got `{s}`"))
}

fn run(cli: Cli) -> Result<u8, CliError> {
    let g = Global {
        json: cli.json,
        max_arity: cli.max_arity,
        quiet: cli.quiet,
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Check { file, props } => cmd_check(&file, &parse_properties(&props)?, &g, &mut out),
        Command::Factorize {
            file,
            out_h,
            report,
            pins,
        } => cmd_factorize(&file, out_h.as_deref(), report.as_deref(), &pins, &g, &mut out),
        Command::Generate { family, out: path } => cmd_generate(&family, path.as_deref(), &g, &mut out),
        Command::Enumerate {
            chain_size,
            filter,
            force,
            out: path,
        } => cmd_enumerate(
            chain_size,
            &parse_properties(&filter)?,
            force,
            path.as_deref(),
            &g,
            &mut out,
            &mut std::io::stderr(),
        ),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            let _ = writeln!(std::io::stderr(), "error: {e}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}
