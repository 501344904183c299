use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use courant_cli::{emit, load_scenario, run, Format};

/// Exit status for usage, input and engine errors.
const ERROR_EXIT: u8 = 3;

#[derive(Parser)]
#[command(name = "courant", version, about = "Check Courant-type algebroid axioms on doubled realizations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Machine,
}

#[derive(Subcommand)]
enum Command {
    /// Run the checks listed in a scenario file.
    ///
    /// Exit status: 0 all requested checks pass, 1 some check fails,
    /// 2 nothing fails but some check was skipped, 3 error.
    Run {
        scenario: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
        /// Coefficient degree bound of the generic sections.
        #[arg(long)]
        degree: Option<u32>,
        /// Number of generic sections.
        #[arg(long)]
        sections: Option<usize>,
        /// Offset of the first generic parameter.
        #[arg(long)]
        seed: Option<u64>,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { ERROR_EXIT } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let Command::Run { scenario, format, degree, sections, seed, out } = cli.command;
    let result = load_scenario(&scenario).and_then(|mut s| {
        s.degree = degree.unwrap_or(s.degree);
        s.sections = sections.unwrap_or(s.sections);
        s.seed = seed.unwrap_or(s.seed);
        run(&s)
    });
    let report = match result {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(ERROR_EXIT);
        }
    };
    let format = match format {
        FormatArg::Text => Format::Text,
        FormatArg::Machine => Format::Machine,
    };
    let rendered = emit(&report, format);
    match out {
        Some(path) => {
            if let Err(e) = std::fs::write(&path, rendered) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(ERROR_EXIT);
            }
        }
        None => print!("{rendered}"),
    }
    ExitCode::from(report.exit_code() as u8)
}
