use std::io::{self, BufRead, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand};

use tautring::chern::DEFAULT_TRUNCATION;
use tautring::RingPresentation;
use tautring_cli::config::{self, split_list, FileConfig, Format};
use tautring_cli::suite::{self, SuiteConfig};
use tautring_cli::{CliError, CliResult, Env};

#[derive(Parser)]
#[command(name = "tautring", version, about = "Exact computations in tautological rings of M_g")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the verification suite.
    Verify {
        /// Comma-separated check ids.
        #[arg(long, value_delimiter = ',')]
        only: Option<Vec<String>>,
        /// `text` or `json` (one object per line).
        #[arg(long)]
        format: Option<String>,
        /// Truncation order for Chern-class computations.
        #[arg(long)]
        trunc: Option<u32>,
        /// Replacement for the genus-6 presentation.
        #[arg(long)]
        presentation: Option<PathBuf>,
        /// `key = value` file with defaults for the options above.
        #[arg(long)]
        config: Option<PathBuf>,
        /// Print the available check ids and exit.
        #[arg(long)]
        list: bool,
    },
    /// Evaluate a program and print the value of its last expression.
    Eval {
        expr: Option<String>,
        /// Run this file first.
        #[arg(long)]
        file: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_TRUNCATION)]
        trunc: u32,
    },
    /// Read statements from standard input, one per line, printing each value.
    Repl {
        /// Run this file first.
        #[arg(long)]
        file: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_TRUNCATION)]
        trunc: u32,
    },
}

fn check_trunc(d: u32) -> CliResult<u32> {
    if d == 0 || d > 12 {
        return Err(CliError::Config(format!("truncation {d} outside 1..=12")));
    }
    Ok(d)
}

fn verify(
    only: Option<Vec<String>>,
    format: Option<String>,
    trunc: Option<u32>,
    presentation: Option<PathBuf>,
    config_path: Option<PathBuf>,
) -> CliResult<i32> {
    let file = match &config_path {
        Some(p) => FileConfig::load(p)?,
        None => FileConfig::default(),
    };
    let format = match format {
        Some(f) => f.parse()?,
        None => file.format.unwrap_or_default(),
    };
    let trunc = check_trunc(trunc.or(file.trunc).unwrap_or(DEFAULT_TRUNCATION))?;
    let presentation = match presentation.or(file.presentation) {
        Some(p) => config::load_presentation(&p)?,
        None => RingPresentation::m6(),
    };
    let only = only.map(|v| v.iter().flat_map(|s| split_list(s)).collect::<Vec<_>>()).or(file.only);
    let cfg = SuiteConfig {
        trunc,
        presentation: Arc::new(presentation),
    };
    let report = suite::run_suite(only.as_deref(), &cfg)?;
    let out = match format {
        Format::Text => suite::render_text(&report),
        Format::Json => suite::render_json(&report),
    };
    emit(&out);
    Ok(suite::exit_code(&report))
}

fn env_with(file: Option<PathBuf>, trunc: u32) -> CliResult<Env> {
    let mut env = Env::new(check_trunc(trunc)?);
    if let Some(p) = file {
        env.run(&config::read(&p)?)?;
    }
    Ok(env)
}

fn eval(expr: Option<String>, file: Option<PathBuf>, trunc: u32) -> CliResult<i32> {
    let mut env = env_with(file, trunc)?;
    if let Some(src) = expr {
        if let Some(v) = env.run(&src)? {
            emit(&format!("{v}\n"));
        }
    }
    Ok(0)
}

fn repl(file: Option<PathBuf>, trunc: u32) -> CliResult<i32> {
    let mut env = env_with(file, trunc)?;
    let stdin = io::stdin();
    let mut stdout = io::stdout();
    let mut status = 0;
    for line in stdin.lock().lines() {
        let line = line.map_err(|e| CliError::Io {
            path: "<stdin>".into(),
            msg: e.to_string(),
        })?;
        if match env.run(&line) {
            Ok(Some(v)) => writeln!(stdout, "{v}"),
            Ok(None) => Ok(()),
            Err(e) => {
                status = status.max(e.exit_code());
                writeln!(stdout, "error: {e}")
            }
        }
        .is_err()
        {
            break;
        }
    }
    Ok(status)
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(s: &str) {
    let _ = io::stdout().lock().write_all(s.as_bytes());
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let result = match cli.command {
        Command::Verify { list: true, .. } => {
            emit(&suite::check_ids().iter().map(|id| format!("{id}\n")).collect::<String>());
            Ok(0)
        }
        Command::Verify {
            only,
            format,
            trunc,
            presentation,
            config,
            ..
        } => verify(only, format, trunc, presentation, config),
        Command::Eval { expr, file, trunc } => eval(expr, file, trunc),
        Command::Repl { file, trunc } => repl(file, trunc),
    };
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
