mod render;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rayon::prelude::*;

use genocchi::akiyama::{at_matrix, ATSpec, Seed, SEED_PRESETS};
use genocchi::catalog::Registry;
use genocchi::families::{FamilyRegistry, StirlingKind};
use genocchi::seidel::{seidel_array, SeidelVariant};
use genocchi::{format, numbers, rational, Error, IdentityReport, MatrixError, WeightSpec};

use render::OutputFormat;

#[derive(Parser)]
#[command(name = "genocchi", version, about = "Exact Genocchi, tangent and Stirling tables and identity checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the first terms of a sequence.
    Sequence {
        name: String,
        #[arg(short = 'n', long = "rows", default_value_t = 10, value_parser = clap::value_parser!(u32).range(1..))]
        count: u32,
        #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
        format: OutputFormat,
    },
    /// Print a triangle: a weight preset (`square+K` for (n+K)^2) or a named matrix.
    Triangle {
        name: String,
        #[arg(short = 'n', long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(1..))]
        rows: u32,
        /// second or first kind, for weight presets
        #[arg(long, default_value = "second")]
        kind: String,
        /// Multiply entry (i, j) by BASE^(i-j).
        #[arg(long, value_name = "BASE")]
        scale: Option<String>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
        format: OutputFormat,
    },
    /// Check catalog identities; exit status 1 if any fails.
    Verify {
        /// Identity ids, or `all`.
        #[arg(default_values_t = vec!["all".to_string()])]
        ids: Vec<String>,
        #[arg(long, default_value_t = 12)]
        depth: usize,
        /// List the catalog instead of checking it.
        #[arg(long)]
        list: bool,
        #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
        format: OutputFormat,
    },
    /// Print a Seidel array; table mode brackets the diagonal h(2n, n).
    Seidel {
        variant: String,
        #[arg(short, default_value_t = 0)]
        k: usize,
        #[arg(short = 'n', long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(1..))]
        rows: u32,
        #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
        format: OutputFormat,
    },
    /// Print the corner of an Akiyama-Tanigawa matrix.
    At {
        #[arg(long, default_value = "square+1")]
        weights: String,
        #[arg(long, default_value = "index-plus-one")]
        seed: String,
        #[arg(short = 'n', long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..))]
        rows: u32,
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..))]
        cols: u32,
        #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
        format: OutputFormat,
    },
}

enum Outcome {
    Pass(String),
    Fail(String),
}

fn is_usage_error(e: &Error) -> bool {
    matches!(
        e,
        Error::Unknown { .. }
            | Error::InvalidIndex { .. }
            | Error::ZeroWeight { .. }
            | Error::ArrayTooShort { .. }
            | Error::ParseRational(_)
            | Error::Matrix(MatrixError::EmptyOrder)
    )
}

fn run(cmd: Command) -> genocchi::Result<Outcome> {
    match cmd {
        Command::Sequence { name, count, format } => {
            let terms = numbers::sequence(&name, count as usize)?;
            Ok(Outcome::Pass(render::sequence(&name, &terms, format)?))
        }
        Command::Triangle { name, rows, kind, scale, format } => {
            let kind: StirlingKind = kind.parse()?;
            let registry = FamilyRegistry::standard(kind);
            let mut m = match name.strip_prefix("square+") {
                Some(_) => {
                    let w = WeightSpec::lookup(&name)?;
                    match kind {
                        StirlingKind::Second => genocchi::stirling::stirling2(&w, rows as usize)?,
                        StirlingKind::First => genocchi::stirling::stirling1(&w, rows as usize)?,
                    }
                }
                None => registry.get(&name)?.build(rows as usize)?,
            };
            if let Some(base) = scale {
                m = m.scale_by_power(&rational::parse(&base)?);
            }
            Ok(Outcome::Pass(render::rows(&name, m.rows(), format, |_, _| false)?))
        }
        Command::Verify { ids, depth, list, format } => verify(&ids, depth, list, format),
        Command::Seidel { variant, k, rows, format } => {
            let variant: SeidelVariant = variant.parse()?;
            let arr = seidel_array(variant, k, rows as usize)?;
            let out = render::rows(variant.name(), arr.rows(), format, |i, j| i % 2 == 0 && j == i / 2)?;
            Ok(Outcome::Pass(out))
        }
        Command::At { weights, seed, rows, cols, format } => {
            let w = WeightSpec::lookup(&weights)?;
            let a = Seed::preset(&seed)?;
            let m = at_matrix(&ATSpec::new(w, a, rows as usize, cols as usize))?;
            let name = format!("at:{weights}:{seed}");
            Ok(Outcome::Pass(render::rows(&name, &m, format, |_, _| false)?))
        }
    }
}

fn verify(ids: &[String], depth: usize, list: bool, fmt: OutputFormat) -> genocchi::Result<Outcome> {
    let registry = Registry::standard();
    let selected: Vec<_> = if ids.iter().any(|i| i == "all") {
        registry.iter().collect()
    } else {
        ids.iter().map(|id| registry.get(id)).collect::<genocchi::Result<_>>()?
    };
    if list {
        let mut out = String::new();
        for e in &selected {
            out.push_str(&format!("{:<18} {:<14} {}\n", e.id(), e.group().name(), e.describe()));
        }
        return Ok(Outcome::Pass(out));
    }
    let reports: Vec<IdentityReport> =
        selected.par_iter().map(|e| e.check(depth)).collect::<genocchi::Result<_>>()?;
    let out = match fmt {
        OutputFormat::Table => reports.iter().map(|r| format!("{r}\n")).collect(),
        OutputFormat::Json => format::reports_to_json(&reports)? + "\n",
        OutputFormat::Csv => {
            let mut s = String::from("id,depth,pass,cases,n,k,lhs,rhs\n");
            for r in &reports {
                let cx = r.counterexample.as_ref();
                s.push_str(&format!(
                    "{},{},{},{},{},{},{},{}\n",
                    r.id,
                    r.depth,
                    r.pass,
                    r.cases,
                    cx.map(|c| c.n.to_string()).unwrap_or_default(),
                    cx.and_then(|c| c.k).map(|k| k.to_string()).unwrap_or_default(),
                    cx.map(|c| c.lhs.to_string()).unwrap_or_default(),
                    cx.map(|c| c.rhs.to_string()).unwrap_or_default(),
                ));
            }
            s
        }
    };
    Ok(if reports.iter().all(|r| r.pass) { Outcome::Pass(out) } else { Outcome::Fail(out) })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(cli.command);
    let mut stdout = std::io::stdout().lock();
    match result {
        Ok(Outcome::Pass(text)) => {
            let _ = stdout.write_all(text.as_bytes());
            ExitCode::SUCCESS
        }
        Ok(Outcome::Fail(text)) => {
            let _ = stdout.write_all(text.as_bytes());
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("genocchi: {e}");
            if let Error::Unknown { kind: "seed", .. } = e {
                let names: Vec<_> = SEED_PRESETS.iter().map(|p| format!("{} = {}", p.name, p.formula)).collect();
                eprintln!("seeds: {}", names.join(", "));
            }
            ExitCode::from(if is_usage_error(&e) { 2 } else { 1 })
        }
    }
}
