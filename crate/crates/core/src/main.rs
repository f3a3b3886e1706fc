use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use qmink::cli::{self, Format, RunOptions};

#[derive(Parser)]
#[command(name = "qmink", version, about = "Exact checks for quantum chiral Minkowski superspace")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the normal form of an expression.
    Nf {
        expr: String,
        /// slq41, grq, minkq or chiral-abstract.
        #[arg(long)]
        algebra: String,
    },
    /// Run a verification suite (or `all`); exits nonzero if any check fails.
    Check {
        suite: String,
        #[arg(long, default_value = "text")]
        format: FormatArg,
        /// Single-threaded execution.
        #[arg(long)]
        serial: bool,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
    /// Print a derived table.
    Table {
        which: TableKind,
        #[arg(long, default_value = "text")]
        format: FormatArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Text,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Json => Format::Json,
            FormatArg::Text => Format::Text,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum TableKind {
    Closure,
    Conformal,
}

fn run(cli: Cli) -> Result<bool, String> {
    match cli.command {
        Command::Nf { expr, algebra } => {
            println!("{}", cli::normal_form_command(&expr, &algebra).map_err(|e| e.to_string())?);
            Ok(true)
        }
        Command::Check {
            suite,
            format,
            serial,
            out,
        } => {
            let report = cli::run_suite(&suite, RunOptions { serial }).map_err(|e| e.to_string())?;
            let text = report.render(format.into());
            match out {
                Some(path) => std::fs::write(&path, text + "\n")
                    .map_err(|e| format!("{}: {e}", path.display()))?,
                None => println!("{text}"),
            }
            Ok(report.overall)
        }
        Command::Table { which, format } => {
            let text = match which {
                TableKind::Closure => cli::closure_table_output(format.into()),
                TableKind::Conformal => cli::conformal_table_output(),
            }
            .map_err(|e| e.to_string())?;
            println!("{}", text.trim_end());
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
