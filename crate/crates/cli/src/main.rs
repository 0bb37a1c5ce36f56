use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use gentangent::build::{build, seeded_base, Target};
use gentangent::classify::classify;
use gentangent::fixtures::write_fixtures;
use gentangent::schema::{parse, parse_designated};
use gentangent::verify::{table, verify, DEFAULT_DIMS};
use gentangent::{exit, CliError, Format};
use gentangent_core::generators::AeKind;
use gentangent_core::Tolerance;

#[derive(Parser)]
#[command(
    name = "gentangent",
    version,
    about = "Structures on the generalized tangent space V ⊕ V*"
)]
struct Cli {
    /// Output format; defaults to json for classify and build, table for verify.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Relative tolerance of every numerical comparison.
    #[arg(long, global = true, default_value_t = 1e-9, env = "GENTANGENT_TOL")]
    tol: f64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the operator, pair or triple described by a JSON document.
    Classify {
        /// Input file; `-` or nothing reads standard input.
        file: Option<PathBuf>,
    },
    /// Run seeded trials of a registered proposition, or `all` of them.
    Verify {
        id: String,
        /// Single fiber dimension; default sweeps 1 to 4.
        #[arg(long)]
        dim: Option<usize>,
        /// Trials per dimension.
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// Emit a named family or triple as an input document.
    Build {
        /// Family id (Jg, JlamJ+, ...) or triple id (hyperC, ...).
        name: String,
        /// Generator kind of the base data.
        #[arg(long)]
        kind: Option<String>,
        #[arg(long, default_value_t = 2)]
        dim: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Take the base data from this document instead of generating it.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Attach a designated metric: natural or induced.
        #[arg(long)]
        metric: Option<String>,
    },
    /// Write seeded input documents.
    Fixtures {
        #[arg(long, default_value = "fixtures")]
        out: PathBuf,
        /// Single dimension; default 1 to 4.
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

fn read_input(file: Option<&PathBuf>) -> Result<String, CliError> {
    match file {
        Some(p) if p.as_os_str() != "-" => Ok(std::fs::read_to_string(p)?),
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn emit(text: &str) -> Result<(), CliError> {
    let mut out = std::io::stdout().lock();
    out.write_all(text.as_bytes())?;
    if !text.ends_with('\n') {
        out.write_all(b"\n")?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<u8, CliError> {
    let tol = Tolerance::with_rel(cli.tol)?;
    match cli.command {
        Command::Classify { file } => {
            let doc = parse(&read_input(file.as_ref())?)?;
            let c = classify(&doc, tol)?;
            match cli.format.unwrap_or(Format::Json) {
                Format::Json => emit(&serde_json::to_string(&c)?)?,
                Format::Table => emit(&c.outcome.table())?,
            }
            Ok(exit::PASS)
        }
        Command::Verify {
            id,
            dim,
            trials,
            seed,
        } => {
            let reports = verify(&id, dim, trials, seed, tol)?;
            match cli.format.unwrap_or(Format::Table) {
                Format::Table => emit(&table(&reports))?,
                Format::Json => emit(&serde_json::to_string_pretty(&reports)?)?,
            }
            Ok(if reports.iter().all(|r| r.passed()) {
                exit::PASS
            } else {
                exit::FAILURE
            })
        }
        Command::Build {
            name,
            kind,
            dim,
            seed,
            input,
            metric,
        } => {
            let target = Target::parse(&name)?;
            let metric = metric.as_deref().map(parse_designated).transpose()?;
            let (n, base) = match input {
                Some(path) => {
                    let doc = parse(&std::fs::read_to_string(path)?)?;
                    let base = doc
                        .base
                        .as_ref()
                        .ok_or_else(|| CliError::Usage("input document has no base".into()))?
                        .to_base(doc.n)?;
                    (doc.n, base)
                }
                None => {
                    let kind = match kind {
                        Some(k) => k.parse::<AeKind>()?,
                        None => target.default_kind(),
                    };
                    (dim, seeded_base(target, kind, dim, seed)?)
                }
            };
            let doc = build(target, n, &base, metric, tol)?;
            match cli.format.unwrap_or(Format::Json) {
                Format::Json => emit(&serde_json::to_string_pretty(&doc)?)?,
                Format::Table => {
                    let c = classify(&doc, tol)?;
                    emit(&c.outcome.table())?
                }
            }
            Ok(exit::PASS)
        }
        Command::Fixtures { out, dim, seed } => {
            let dims = dim.map_or_else(|| DEFAULT_DIMS.to_vec(), |n| vec![n]);
            let written = write_fixtures(&out, &dims, seed)?;
            emit(&format!(
                "wrote {} fixtures to {}",
                written.len(),
                out.display()
            ))?;
            Ok(exit::PASS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit::USAGE)
        }
    }
}
