// SPDX-License-Identifier: Apache-2.0

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use lindproj::config::{presets, ScenarioConfig};
use lindproj::run::{run, write_csv, RunMode};
use lindproj::Error;

const EXIT_VALIDATION: u8 = 1;
const EXIT_PROPAGATION: u8 = 2;
const EXIT_IO: u8 = 3;

#[derive(Parser)]
#[command(name = "lindproj", version, about = "Projector-dissipator Lindblad propagation: exact vs. commutable approximation")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Scenario JSON file
    #[arg(long)]
    config: Option<PathBuf>,
    /// Name of a shipped preset
    #[arg(long)]
    preset: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Propagate over the time grid and write a CSV report
    Run {
        #[command(flatten)]
        source: Source,
        /// compare | exact-only | approx-only
        #[arg(long, default_value = "compare")]
        mode: RunMode,
        /// CSV output path (stdout if omitted)
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write the summary to this file
        #[arg(long)]
        summary: Option<PathBuf>,
    },
    /// Check the projector family and print the residual report
    Validate {
        #[command(flatten)]
        source: Source,
    },
    /// List presets, or print one as JSON
    Presets {
        #[arg(long)]
        dump: Option<String>,
    },
}

struct Failure {
    code: u8,
    message: String,
}

fn classify(e: Error) -> Failure {
    let code = match e {
        Error::Io(_) => EXIT_IO,
        _ => EXIT_VALIDATION,
    };
    Failure { code, message: e.to_string() }
}

fn io_failure(path: &Path, e: impl std::fmt::Display) -> Failure {
    Failure {
        code: EXIT_IO,
        message: format!("{}: {e}", path.display()),
    }
}

fn load(source: &Source) -> Result<ScenarioConfig, Failure> {
    match (&source.config, &source.preset) {
        (Some(path), _) => {
            let text = fs::read_to_string(path).map_err(|e| io_failure(path, e))?;
            ScenarioConfig::from_json(&text).map_err(classify)
        }
        (None, Some(name)) => presets::config(name).map_err(classify),
        (None, None) => unreachable!("clap enforces one source"),
    }
}

fn execute(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Presets { dump: None } => {
            for (name, text) in presets::ALL {
                let desc = ScenarioConfig::from_json(text)
                    .ok()
                    .and_then(|c| c.description)
                    .unwrap_or_default();
                println!("{name:<18} {desc}");
            }
        }
        Command::Presets { dump: Some(name) } => {
            let text = presets::text(&name).ok_or_else(|| Failure {
                code: EXIT_VALIDATION,
                message: format!("unknown preset {name:?}"),
            })?;
            print!("{text}");
        }
        Command::Validate { source } => {
            let cfg = load(&source)?;
            let report = cfg.family_report().map_err(classify)?;
            println!("{report}");
            if !report.passed() {
                return Err(Failure {
                    code: EXIT_VALIDATION,
                    message: report.first_failure().unwrap_or_default(),
                });
            }
            cfg.to_scenario().map_err(classify)?;
        }
        Command::Run { source, mode, out, summary } => {
            let scenario = load(&source)?.to_scenario().map_err(classify)?;
            let output = run(&scenario, mode).map_err(|e| Failure {
                code: EXIT_PROPAGATION,
                message: e.to_string(),
            })?;
            match &out {
                Some(path) => {
                    let file = fs::File::create(path).map_err(|e| io_failure(path, e))?;
                    write_csv(&output.rows, io::BufWriter::new(file)).map_err(|e| io_failure(path, e))?;
                }
                None => write_csv(&output.rows, io::stdout().lock()).map_err(classify)?,
            }
            let text = output.summary.to_string();
            if let Some(path) = &summary {
                fs::write(path, format!("{text}\n")).map_err(|e| io_failure(path, e))?;
            }
            if out.is_some() {
                println!("{text}");
            } else {
                eprintln!("{text}");
            }
            if !output.summary.succeeded() {
                return Err(Failure {
                    code: EXIT_PROPAGATION,
                    message: format!("{} time point(s) failed", output.summary.failures.len()),
                });
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(()) => {
            let _ = io::stdout().flush();
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
