use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand};
use cosmetic_core::census::{run, show_constants, RunConfig};
use cosmetic_core::obstruction::{Filter, ALL_FILTERS};
use cosmetic_core::Error;

#[derive(Parser)]
#[command(name = "cosmetic", version, about = "Screen knot tables for purely cosmetic surgeries")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Screen a census CSV (or the bundled table) and write a JSON report.
    Screen {
        /// CSV with columns name,pd,crossings,genus,thickness,prime; defaults to the bundled table.
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, value_delimiter = ',', default_value = "5")]
        levels: Vec<u32>,
        #[arg(long, value_delimiter = ',', default_value = "finite_type,zeta5,fr,slopes")]
        filters: Vec<Filter>,
        #[arg(long)]
        max_crossings: Option<u32>,
        /// Report path; the summary still goes to stderr.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Galois twist e, so that A_r = ζ_4r^(2e).
        #[arg(long, default_value_t = 1)]
        twist: i64,
        /// Per-knot time budget in seconds.
        #[arg(long)]
        timeout: Option<f64>,
        /// JSON file of cached cable brackets, created if missing.
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Print the constants and matrices of one level.
    Constants {
        #[arg(long)]
        level: u32,
        #[arg(long, default_value_t = 1)]
        twist: i64,
    },
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Invariant(_) => 3,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Constants { level, twist } => show_constants(level, twist).map(|text| {
            print!("{text}");
            0
        }),
        Command::Screen { input, levels, filters, max_crossings, out, jobs, twist, timeout, cache } => {
            let filters = if filters.is_empty() { ALL_FILTERS.to_vec() } else { filters };
            let config = RunConfig {
                input,
                levels,
                max_crossings,
                filters,
                output: out.clone(),
                jobs,
                twist,
                timeout: timeout.map(Duration::from_secs_f64),
                cache,
            };
            run(&config).and_then(|report| {
                if out.is_none() {
                    println!("{}", report.to_json()?);
                }
                eprintln!("{}", summary_line(&report.summary));
                for m in &report.malformed {
                    eprintln!("malformed row at line {}: {}", m.line, m.error);
                }
                Ok(if report.malformed.is_empty() { 0 } else { 2 })
            })
        }
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn summary_line(s: &cosmetic_core::census::Summary) -> String {
    let by: Vec<String> = s.excluded_by.iter().map(|(k, v)| format!("{k}={v}")).collect();
    format!(
        "screened {} of {} knots ({} malformed): {} excluded [{}], {} residual, {} skipped; \
         J(ζ5)=1 for {}, finite-type vanishing for {}, both for {}",
        s.screened,
        s.total,
        s.malformed,
        s.excluded,
        by.join(", "),
        s.residual.len(),
        s.skipped.len(),
        s.zeta5_trivial,
        s.finite_type_vanishing,
        s.zeta5_and_finite_type
    )
}
