//! The `shalika` command line.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;

use crate::engine::{epsilon_pi, linear_decision, shalika_decision, EngineError, ShalikaSpec};
use crate::exact::{GaussRat, Rat};
use crate::io::{
    parse_module, tsv_table, ClassifiedOrbitRow, EpsilonRecord, InputError, ModuleInput, OrbitRow,
    PeriodRecord, SymplecticRecord, CLASSIFIED_COLUMNS, ORBIT_COLUMNS,
};
use crate::langlands::{is_symplectic_eta, langlands_param, LanglandsError, MultChar};
use crate::orbits::{orbit_table, Composition, OrbitError, ParabolicDatum};
use crate::verify;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
}

#[derive(Debug, Parser)]
#[command(
    name = "shalika",
    version,
    about = "Twisted Shalika periods of archimedean GL(2n)"
)]
struct Cli {
    /// Output format; SHALIKA_FORMAT overrides it.
    #[arg(long, value_enum, default_value = "json", global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Is the L-parameter of the module eta-symplectic?
    ParamCheck {
        file: PathBuf,
        #[arg(long, requires = "eta_z", allow_hyphen_values = true)]
        eta_k: Option<i64>,
        #[arg(long, requires = "eta_k", allow_hyphen_values = true)]
        eta_z: Option<String>,
    },
    /// Orbit representatives for a composition such as 2+2+2.
    Orbits {
        composition: String,
        #[arg(long)]
        classify: bool,
    },
    /// Period verdict and orbit counts for a module file.
    Period {
        file: PathBuf,
        /// Treat the module as generic irreducible.
        #[arg(long)]
        generic: bool,
        /// Decide the twisted linear period instead.
        #[arg(long)]
        linear: bool,
    },
    /// The restriction sign for a product of relative discrete series.
    Epsilon {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
    },
    /// Run the invariant and oracle suites.
    Verify {
        #[arg(long, default_value_t = 3)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{path}: {source}")]
    Read {
        path: String,
        source: std::io::Error,
    },
    #[error("{0}")]
    Input(#[from] InputError),
    #[error(transparent)]
    Langlands(#[from] LanglandsError),
    #[error(transparent)]
    Orbit(#[from] OrbitError),
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error("--a: {0}")]
    Rat(crate::exact::ExactError),
    #[error("--linear needs a generic irreducible module (pass --generic)")]
    LinearNeedsGeneric,
    #[error("SHALIKA_FORMAT must be json or tsv, got {0:?}")]
    BadFormat(String),
}

/// Output of one command: a single record or a table of records.
enum Output {
    Record(Value),
    Table {
        rows: Vec<Value>,
        columns: Vec<&'static str>,
    },
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("records serialize")
}

fn read_module(path: &Path) -> Result<ModuleInput, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.display().to_string(),
        source,
    })?;
    Ok(parse_module(&text)?)
}

fn keys(v: &Value) -> Vec<&str> {
    v.as_object()
        .map(|m| m.keys().map(String::as_str).collect())
        .unwrap_or_default()
}

fn write_output(out: &mut dyn Write, output: &Output, format: Format) -> std::io::Result<()> {
    match (output, format) {
        (Output::Record(v), Format::Json) => writeln!(out, "{}", serde_json::to_string_pretty(v)?),
        (Output::Table { rows, .. }, Format::Json) => {
            writeln!(out, "{}", serde_json::to_string_pretty(rows)?)
        }
        (Output::Record(v), Format::Tsv) => {
            write!(out, "{}", tsv_table(&keys(v), std::slice::from_ref(v)))
        }
        (Output::Table { rows, columns }, Format::Tsv) => {
            write!(out, "{}", tsv_table(columns, rows))
        }
    }
}

#[derive(Serialize)]
struct SuiteRow<'a> {
    suite: &'a str,
    checked: usize,
    failures: usize,
    first_counterexample: Option<&'a str>,
}

fn execute(command: Command, err: &mut dyn Write) -> Result<(Output, i32), CliError> {
    match command {
        Command::ParamCheck { file, eta_k, eta_z } => {
            let input = read_module(&file)?;
            let eta = match (eta_k, eta_z) {
                (Some(k), Some(z)) => {
                    let z: GaussRat = z.parse().map_err(|source| InputError::Number {
                        field: "--eta-z",
                        source,
                    })?;
                    MultChar::new(input.module.field(), k, z)?
                }
                _ => input.eta,
            };
            let phi = langlands_param(&input.module)?;
            let d = is_symplectic_eta(&phi, &eta)?;
            Ok((
                Output::Record(to_value(&SymplecticRecord::new(&d, phi.dim()))),
                0,
            ))
        }
        Command::Orbits {
            composition,
            classify,
        } => {
            let comp: Composition = composition.parse()?;
            let table = orbit_table(&ParabolicDatum::new(comp));
            let (rows, columns) = if classify {
                let rows = table.iter().map(|d| to_value(&ClassifiedOrbitRow::from(d)));
                (rows.collect(), CLASSIFIED_COLUMNS.to_vec())
            } else {
                let rows = table.iter().map(|d| to_value(&OrbitRow::from(d)));
                (rows.collect(), ORBIT_COLUMNS.to_vec())
            };
            Ok((Output::Table { rows, columns }, 0))
        }
        Command::Period {
            file,
            generic,
            linear,
        } => {
            let input = read_module(&file)?;
            let generic = generic || input.assume_generic.unwrap_or(false);
            let report = if linear {
                if !generic {
                    return Err(CliError::LinearNeedsGeneric);
                }
                linear_decision(&input.module, &input.eta, true)?
            } else {
                let spec = match input.psi_a {
                    Some(a) => ShalikaSpec::new(input.eta, a)?,
                    None => ShalikaSpec::with_unit_psi(input.eta),
                };
                shalika_decision(&input.module, &spec, generic)?
            };
            Ok((Output::Record(to_value(&PeriodRecord::from(&report))), 0))
        }
        Command::Epsilon { file, a } => {
            let input = read_module(&file)?;
            let a: Rat = a.parse().map_err(CliError::Rat)?;
            let spec = ShalikaSpec::new(input.eta, a)?;
            let report = epsilon_pi(&input.module, &spec)?;
            Ok((Output::Record(to_value(&EpsilonRecord::from(&report))), 0))
        }
        Command::Verify { max_n, seed } => {
            let reports = verify::run_all(max_n, seed);
            let mut status = 0;
            for r in &reports {
                if let (false, Some(c)) = (r.passed(), &r.first_counterexample) {
                    if status == 0 {
                        let _ = writeln!(err, "{} failed: {}", r.name, c);
                    }
                    status = 1;
                }
            }
            let rows = reports
                .iter()
                .map(|r| {
                    to_value(&SuiteRow {
                        suite: r.name,
                        checked: r.checked,
                        failures: r.failures,
                        first_counterexample: r.first_counterexample.as_deref(),
                    })
                })
                .collect();
            let columns = vec!["suite", "checked", "failures", "first_counterexample"];
            Ok((Output::Table { rows, columns }, status))
        }
    }
}

/// Runs the command line with an explicit format override (the value of
/// `SHALIKA_FORMAT`, if set). Returns the exit status.
pub fn run_with_env<I, T>(
    argv: I,
    format_override: Option<&str>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let status = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if status == 0 {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return status;
        }
    };
    let format = match format_override {
        None | Some("") => Ok(cli.format),
        Some(s) => Format::from_str(s, true).map_err(|_| CliError::BadFormat(s.to_string())),
    };
    let result = format.and_then(|f| execute(cli.command, err).map(|r| (r, f)));
    match result {
        Ok(((output, status), format)) => {
            if let Err(e) = write_output(out, &output, format) {
                let _ = writeln!(err, "error: {e}");
                return 1;
            }
            status
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

/// Runs the command line, reading `SHALIKA_FORMAT` from the environment.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let env = std::env::var("SHALIKA_FORMAT").ok();
    run_with_env(argv, env.as_deref(), out, err)
}
