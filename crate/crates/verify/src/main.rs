use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use sdcov_core::catalog::Catalog;
use sdcov_verify::{run_suite, Format, Mode, RunConfig};

#[derive(Parser)]
#[command(name = "verify", about = "Verify the covariant catalog")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the check suite on catalog entries (all entries by default).
    Run {
        #[arg(long = "entry")]
        entries: Vec<String>,
        #[arg(long)]
        n: Option<i64>,
        #[arg(long)]
        m: Option<i64>,
        #[arg(long)]
        k: Option<i64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Mode::Auto)]
        mode: Mode,
        #[arg(long, default_value_t = 20)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also run the fault-injection checks, which must fail.
        #[arg(long)]
        negative_controls: bool,
        /// Record wall-clock time per check.
        #[arg(long)]
        timings: bool,
    },
    /// List entries and table rows.
    List,
    /// Describe one entry or table row.
    Show { id: String },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Box<dyn std::error::Error>> {
    match cli.command {
        Command::List => {
            print!("{}", Catalog::load()?.list());
            Ok(ExitCode::SUCCESS)
        }
        Command::Show { id } => {
            print!("{}", Catalog::load()?.show(&id)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Run { entries, n, m, k, seed, mode, samples, jobs, format, out, negative_controls, timings } => {
            let mut cfg = RunConfig { entry_ids: entries, seed, mode, samples, jobs, format, negative_controls, timings, ..Default::default() };
            for (key, v) in [("n", n), ("m", m), ("k", k)] {
                if let Some(v) = v {
                    cfg.overrides.insert(key.into(), v);
                }
            }
            let report = run_suite(&cfg)?;
            let text = report.render(format);
            match out {
                Some(path) => std::fs::write(path, text)?,
                None => print!("{text}"),
            }
            Ok(if report.has_failures() { ExitCode::FAILURE } else { ExitCode::SUCCESS })
        }
    }
}
