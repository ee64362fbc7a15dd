use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hopfdual::catalog;
use hopfdual::instance::{parse_instance, Instance, Suite};
use hopfdual::suite::{run_all, RunOptions, RunReport};

/// Exact verification of crossed products, smash products and their
/// duality isomorphisms on finite-rank instances.
#[derive(Parser)]
#[command(name = "hopfdual", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Built-in instances.
    #[command(subcommand)]
    Catalog(CatalogCommand),
    /// Run suites on an instance file.
    Verify {
        path: PathBuf,
        #[arg(long)]
        suite: Option<Suite>,
        #[command(flatten)]
        out: Output,
    },
    /// Run every suite on the whole catalog and write the report.
    Report {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: PathBuf,
        /// Include per-group wall-clock times (breaks byte-stability).
        #[arg(long)]
        timing: bool,
    },
}

#[derive(Subcommand)]
enum CatalogCommand {
    List,
    Run {
        name: String,
        #[arg(long)]
        suite: Option<Suite>,
        #[command(flatten)]
        out: Output,
    },
    /// Write an entry as an instance file.
    Export { name: String, path: PathBuf },
}

#[derive(clap::Args)]
struct Output {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long)]
    timing: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Exit status 2: the input could not be turned into an instance.
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

fn render(report: &RunReport, format: Format) -> String {
    match format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json(),
    }
}

fn status(report: &RunReport) -> ExitCode {
    if report.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run_and_print(instances: &[Instance], suite: Option<Suite>, out: &Output) -> ExitCode {
    let opts = RunOptions {
        timing: out.timing,
        parallel: true,
    };
    let report = run_all(instances, suite, opts);
    print!("{}", render(&report, out.format));
    status(&report)
}

fn read_instance(path: &Path) -> Result<Instance, InputError> {
    let text = fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    parse_instance(&text).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn run(cli: Cli) -> Result<ExitCode, InputError> {
    match cli.command {
        Command::Catalog(CatalogCommand::List) => {
            let entries = catalog::list_entries();
            let width = entries.iter().map(|(n, _)| n.len()).max().unwrap_or(0);
            for (name, desc) in entries {
                println!("{name:width$}  {desc}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Catalog(CatalogCommand::Run { name, suite, out }) => {
            let inst = catalog::get(&name)?;
            Ok(run_and_print(&[inst], suite, &out))
        }
        Command::Catalog(CatalogCommand::Export { name, path }) => {
            let inst = catalog::get(&name)?;
            fs::write(&path, inst.to_json())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { path, suite, out } => {
            let inst = read_instance(&path)?;
            Ok(run_and_print(&[inst], suite, &out))
        }
        Command::Report { format, out, timing } => {
            let all = catalog::all()?;
            let report = run_all(&all, None, RunOptions { timing, parallel: true });
            fs::write(&out, render(&report, format))?;
            Ok(status(&report))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
