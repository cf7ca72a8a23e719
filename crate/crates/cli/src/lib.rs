//! `hmclass` command-line front end.

pub mod json;
mod report;

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use hmclass_core::lattice::{Arrangement, Lattice, DEFAULT_MAX_FLATS};

pub use report::{lattice_json, lattice_text, Algorithm, Crosscheck, Report, SpectrumOutput};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "hmclass",
    version,
    about = "Hirzebruch-Milnor classes of hyperplane arrangements in P^2 and P^3"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute the class with one or both algorithms.
    Compute {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Algorithm::Both)]
        algorithm: Algorithm,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run both algorithms; exit 2 if their pushforwards differ.
    Check {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the intersection lattice with Möbius values.
    Lattice {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

/// Reads `HMCLASS_MAX_FLATS`, falling back to the default cap.
pub fn max_flats_from_env() -> Result<usize, String> {
    match std::env::var("HMCLASS_MAX_FLATS") {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| format!("HMCLASS_MAX_FLATS must be a positive integer, got {v:?}")),
        Err(_) => Ok(DEFAULT_MAX_FLATS),
    }
}

fn load(path: &PathBuf, max_flats: usize) -> Result<(Arrangement, Lattice), String> {
    let shown = path.display();
    let text = std::fs::read_to_string(path).map_err(|e| format!("{shown}: {e}"))?;
    let arr = Arrangement::parse(&text).map_err(|e| format!("{shown}: {e}"))?;
    let lat = Lattice::build_with_limit(&arr, max_flats).map_err(|e| format!("{shown}: {e}"))?;
    Ok((arr, lat))
}

fn emit(
    out: &mut dyn Write,
    format: Format,
    text: String,
    json: serde_json::Value,
) -> std::io::Result<()> {
    match format {
        Format::Text => out.write_all(text.as_bytes()),
        Format::Json => {
            let s = serde_json::to_string_pretty(&json).expect("serializable");
            writeln!(out, "{s}")
        }
    }
}

/// Runs one invocation; returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match execute(cli, out) {
        Ok(code) => code,
        Err(message) => {
            let _ = writeln!(err, "error: {message}");
            EXIT_ERROR
        }
    }
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<i32, String> {
    let max_flats = max_flats_from_env()?;
    let io = |e: std::io::Error| e.to_string();
    match cli.command {
        Command::Lattice { file, format } => {
            let (_, lat) = load(&file, max_flats)?;
            emit(out, format, lattice_text(&lat), lattice_json(&lat)).map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Compute {
            file,
            algorithm,
            format,
        } => {
            let report = build_report(&file, max_flats, algorithm)?;
            emit(out, format, report.to_text(), report.to_json()).map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Check { file, format } => {
            let report = build_report(&file, max_flats, Algorithm::Both)?;
            emit(out, format, report.to_text(), report.to_json()).map_err(io)?;
            Ok(match report.crosscheck {
                Crosscheck::Match => EXIT_OK,
                _ => EXIT_MISMATCH,
            })
        }
    }
}

fn build_report(file: &PathBuf, max_flats: usize, algorithm: Algorithm) -> Result<Report, String> {
    let (arr, lat) = load(file, max_flats)?;
    let path = file.display().to_string();
    Report::build(&path, arr, lat, algorithm).map_err(|e| format!("{path}: {e}"))
}
