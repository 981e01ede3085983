//! `wronski`: counts tables, Wronskians, local indices and global degrees from the
//! command line.
//!
//! Exit codes: 0 success, 1 disagreement or invariant violation, 2 unreadable input,
//! 3 non-simple fiber point, 4 budget exhausted.

mod render;
mod selftest;

use std::fs;
use std::io::{Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use wronski_core::degrees::{self, DegreesError, DEFAULT_SCAN_BUDGET};
use wronski_core::instance::{InstanceError, InstanceFile};
use wronski_core::polyalg::split_distinct_roots;
use wronski_core::tableaux::DegreeCountTable;
use wronski_core::wronski::wronskian_of;
use wronski_core::{FieldSpec, Scalar};

#[derive(Parser, Debug)]
#[command(name = "wronski", version, about = "Exact Wronski maps and their A^1-degrees")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the n_C and n_R tables.
    Counts {
        #[arg(long, default_value_t = 2)]
        min: u64,
        #[arg(long = "max-m", default_value_t = 5)]
        max_m: u64,
        #[arg(long = "max-p", default_value_t = 5)]
        max_p: u64,
    },
    /// Wronskian of the plane described by an instance file ("-" reads stdin).
    Wronskian { file: String },
    /// Local index at the fiber point of an instance file, computed both ways.
    LocalIndex { file: String },
    /// Sum of local degrees over the fiber of a target.
    GlobalDegree {
        #[arg(long)]
        field: FieldSpec,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        p: usize,
        /// Comma-separated target roots s_1, …, s_mp.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        s: Option<Vec<String>>,
        /// Draw targets until one has a full, simple fiber.
        #[arg(long)]
        sample: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Maximum number of chart points scanned.
        #[arg(long, default_value_t = DEFAULT_SCAN_BUDGET)]
        budget: u64,
    },
    /// Write a sampled split instance as an instance file.
    Sample {
        #[arg(long)]
        field: FieldSpec,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        p: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Draws before giving up.
        #[arg(long, default_value_t = 100_000)]
        budget: u64,
    },
    /// Run the property suites.
    Selftest {
        #[arg(long, value_enum, default_value_t = selftest::Level::Quick)]
        level: selftest::Level,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure { code, message: message.into() }
    }
}

impl From<InstanceError> for Failure {
    fn from(e: InstanceError) -> Self {
        Failure::new(2, e.to_string())
    }
}

impl From<DegreesError> for Failure {
    fn from(e: DegreesError) -> Self {
        let code = match e {
            DegreesError::NonSimple => 3,
            DegreesError::BudgetExceeded(_) | DegreesError::NoSplitInstance => 4,
            DegreesError::Unsupported(_) | DegreesError::CharacteristicTooSmall(..) | DegreesError::RepeatedScalars => 2,
            _ => 1,
        };
        Failure::new(code, e.to_string())
    }
}

fn read_instance(path: &str) -> Result<InstanceFile, Failure> {
    let text = if path == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf).map_err(|e| Failure::new(2, e.to_string()))?;
        buf
    } else {
        fs::read_to_string(path).map_err(|e| Failure::new(2, format!("{path}: {e}")))?
    };
    Ok(InstanceFile::parse(&text)?)
}

fn json(value: &serde_json::Value) -> String {
    serde_json::to_string_pretty(value).expect("serializable")
}

fn run(cli: Cli) -> Result<String, Failure> {
    let format = cli.format;
    match cli.command {
        Command::Counts { min, max_m, max_p } => {
            let min = min.max(1);
            let table = DegreeCountTable::build(min..=max_m, min..=max_p);
            Ok(match format {
                Format::Json => json(&serde_json::to_value(&table).expect("serializable")),
                Format::Text => format!("{}\n{}", table.render_complex(), table.render_real()),
            })
        }
        Command::Wronskian { file } => {
            let inst = read_instance(&file)?;
            let w = inst.subspace()?;
            let wr = wronskian_of(&w);
            let roots = if wr.is_zero() {
                None
            } else {
                split_distinct_roots(&wr).map_err(|e| Failure::new(1, e.to_string()))?
            };
            let big_cell = wr.degree() == Some(inst.m * inst.p);
            Ok(match format {
                Format::Json => json(&serde_json::json!({
                    "w": w,
                    "wronskian": wr.to_string(),
                    "degree": wr.degree(),
                    "big_cell": big_cell,
                    "split_distinct": roots.is_some(),
                    "roots": roots.as_ref().map(|r| r.iter().map(Scalar::to_bare_string).collect::<Vec<_>>()),
                })),
                Format::Text => render::wronskian(&w, &wr, big_cell, roots.as_deref()),
            })
        }
        Command::LocalIndex { file } => {
            let inst = read_instance(&file)?;
            let w = inst.subspace()?;
            let s_list = match inst.s_list()? {
                Some(s) => s,
                None => split_distinct_roots(&wronskian_of(&w))
                    .map_err(|e| Failure::new(1, e.to_string()))?
                    .ok_or_else(|| Failure::new(2, "no `s` given and Wr(W) does not split into distinct roots"))?,
            };
            let report = degrees::local_degree(&w, &s_list)?;
            let out = match format {
                Format::Json => json(&serde_json::to_value(&report).expect("serializable")),
                Format::Text => render::local(&report),
            };
            if !(report.agrees && report.scalar_identity) {
                return Err(Failure::new(1, format!("{out}\nlocal index formula disagrees with the Jacobian")));
            }
            Ok(out)
        }
        Command::GlobalDegree { field, m, p, s, sample, seed, budget } => {
            let report = if sample {
                degrees::sample_global(field, m, p, seed, budget)?
            } else {
                let s = s.ok_or_else(|| Failure::new(2, "give --s or --sample"))?;
                let s_list = s
                    .iter()
                    .map(|v| Scalar::parse_in(field, v.trim()))
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|e| Failure::new(2, e.to_string()))?;
                degrees::global_degree(field, m, p, &s_list, budget)?
            };
            let out = match format {
                Format::Json => json(&serde_json::to_value(&report).expect("serializable")),
                Format::Text => render::global(&report),
            };
            if report.verdict == Some(wronski_core::gwforms::HyperbolicVerdict::False) && field.is_finite() {
                return Err(Failure::new(1, format!("{out}\nsum is not (n_C/2)·H")));
            }
            Ok(out)
        }
        Command::Sample { field, m, p, seed, budget } => {
            // Over Q the constructed families are far more productive than blind draws.
            let constructed = match field {
                FieldSpec::Rational => degrees::collect_instances(field, m, p, 1, seed)?.pop(),
                FieldSpec::Prime(_) => None,
            };
            let inst = match constructed {
                Some(inst) => inst,
                None => degrees::sample_instance(field, m, p, degrees::SampleMode::Random { seed, budget })?
                    .ok_or(DegreesError::NoSplitInstance)?,
            };
            Ok(InstanceFile::from_instance(&inst)?.to_json())
        }
        Command::Selftest { level, seed } => {
            let summary = selftest::run(level, seed);
            let out = match format {
                Format::Json => json(&summary.to_json()),
                Format::Text => summary.render(),
            };
            if summary.all_passed() {
                Ok(out)
            } else {
                Err(Failure::new(1, out))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(out) => {
            // A closed pipe (e.g. `| head`) is not an error.
            let _ = writeln!(std::io::stdout(), "{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("{}", f.message);
            ExitCode::from(f.code)
        }
    }
}
