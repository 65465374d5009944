use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use monocurve::cmcheck::{DecideOptions, DEFAULT_ORACLE_TIMEOUT};
use monocurve::families::{verify_member, FamilyId, MemberReport};
use monocurve::par::{self, Exec};
use monocurve::report::{analyze, AnalyzeOptions, DEFAULT_HORIZON};
use monocurve::semigroup::DEFAULT_TABLE_CAP;
use monocurve::sweep::{sweep, SweepFilter};
use monocurve::Error;

mod output;

/// Largest `n4` accepted by `sweep`.
const SWEEP_MAX_N4: u64 = 1000;

/// Exit code when a family member does not match its closed forms.
const EXIT_MISMATCH: u8 = 1;

#[derive(Parser)]
#[command(name = "monocurve", version, about = "Tangent cones of monomial curves in affine 4-space")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyse the curve with exponents N1 N2 N3 N4.
    Analyze {
        #[arg(num_args = 4, value_names = ["N1", "N2", "N3", "N4"], required = true)]
        n: Vec<u64>,
        /// Print the report as JSON.
        #[arg(long)]
        json: bool,
        /// Number of Hilbert function values to report.
        #[arg(long, default_value_t = DEFAULT_HORIZON)]
        horizon: usize,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Analyse every tuple A <= n1 < n2 < n3 < n4 <= B with gcd 1 and write a CSV.
    Sweep {
        #[arg(long)]
        min: u64,
        #[arg(long)]
        max: u64,
        #[arg(long)]
        gorenstein_only: bool,
        #[arg(long)]
        non_cm_only: bool,
        #[arg(long)]
        nondecreasing_only: bool,
        /// Worker threads (default: all cores).
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(short, long)]
        output: PathBuf,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Check members of a parametric family against their closed forms.
    Family {
        #[arg(value_parser = parse_family)]
        family: FamilyId,
        /// Parameter range for e41 and e43, e.g. `4..8` or `5`.
        #[arg(long, value_parser = parse_range, conflicts_with = "t")]
        m: Option<(u64, u64)>,
        /// Parameter range for gi.
        #[arg(long, value_parser = parse_range)]
        t: Option<(u64, u64)>,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        skip_oracle: bool,
    },
    /// Print the JSON schema of `analyze --json` output.
    Schema,
}

#[derive(Args)]
struct BudgetArgs {
    /// Decide from the criteria alone, without the exhaustive check.
    #[arg(long)]
    skip_oracle: bool,
    /// Time limit for the exhaustive check.
    #[arg(long, default_value_t = DEFAULT_ORACLE_TIMEOUT.as_secs())]
    timeout_secs: u64,
    /// Memory cap for the semigroup tables.
    #[arg(long, default_value_t = DEFAULT_TABLE_CAP * 4)]
    max_table_bytes: u64,
}

impl BudgetArgs {
    fn options(&self, horizon: usize) -> AnalyzeOptions {
        AnalyzeOptions {
            horizon,
            skip_oracle: self.skip_oracle,
            timeout: Some(Duration::from_secs(self.timeout_secs)),
            table_cap: self.max_table_bytes / 4,
            ..AnalyzeOptions::default()
        }
    }
}

fn parse_family(s: &str) -> Result<FamilyId, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// `a..b` (inclusive) or a single value.
fn parse_range(s: &str) -> Result<(u64, u64), String> {
    let num = |t: &str| t.trim().parse::<u64>().map_err(|e| format!("`{t}`: {e}"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.trim_start_matches('='))?),
        None => (num(s)?, num(s)?),
    };
    if lo > hi {
        return Err(format!("empty range {s}"));
    }
    Ok((lo, hi))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn io_err(e: impl std::fmt::Display) -> Error {
    Error::InvalidInput(e.to_string())
}

fn run(cli: Cli) -> Result<u8, Error> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Analyze { n, json, horizon, budget } => {
            let input = [n[0], n[1], n[2], n[3]];
            let (report, timings) = analyze(input, &budget.options(horizon))?;
            if json {
                let doc = output::Document { report, timings };
                serde_json::to_writer_pretty(&mut out, &doc).map_err(io_err)?;
                writeln!(out).map_err(io_err)?;
            } else {
                output::write_report(&mut out, &report, &timings).map_err(io_err)?;
            }
            Ok(0)
        }
        Command::Sweep { min, max, gorenstein_only, non_cm_only, nondecreasing_only, jobs, output, budget } => {
            if max > SWEEP_MAX_N4 {
                return Err(Error::InvalidInput(format!("--max {max} exceeds the sweep cap {SWEEP_MAX_N4}")));
            }
            let filter = SweepFilter { gorenstein_only, non_cm_only, nondecreasing_only };
            let opts = budget.options(DEFAULT_HORIZON);
            let file = File::create(&output).map_err(|e| io_err(format!("{}: {e}", output.display())))?;
            let rows = match jobs {
                Some(0) => return Err(Error::InvalidInput("--jobs must be positive".into())),
                Some(1) => sweep(min, max, filter, &opts, Exec::Sequential)?,
                Some(j) => par::with_threads(j, || sweep(min, max, filter, &opts, Exec::Parallel))?,
                None => sweep(min, max, filter, &opts, Exec::default())?,
            };
            let mut w = csv::Writer::from_writer(file);
            if rows.is_empty() {
                w.write_record(output::SWEEP_COLUMNS).map_err(io_err)?;
            }
            for row in &rows {
                w.serialize(row).map_err(io_err)?;
            }
            w.flush().map_err(io_err)?;
            eprintln!("{} rows written to {}", rows.len(), output.display());
            Ok(0)
        }
        Command::Family { family, m, t, json, skip_oracle } => {
            let range = match (family, m, t) {
                (FamilyId::Gi, None, Some(r)) => r,
                (FamilyId::E41 | FamilyId::E43, Some(r), None) => r,
                _ => {
                    return Err(Error::InvalidInput(format!(
                        "{family} takes --{} RANGE",
                        family.parameter_name()
                    )))
                }
            };
            let opts = DecideOptions { skip_oracle, ..DecideOptions::default() };
            let params: Vec<u64> = (range.0..=range.1).collect();
            let reports = par::map(Exec::default(), &params, |&p| verify_member(family, p, &opts));
            let reports = reports.into_iter().collect::<Result<Vec<MemberReport>, Error>>()?;
            if json {
                serde_json::to_writer_pretty(&mut out, &reports).map_err(io_err)?;
                writeln!(out).map_err(io_err)?;
            } else {
                for r in &reports {
                    output::write_member(&mut out, r).map_err(io_err)?;
                }
            }
            Ok(if reports.iter().all(MemberReport::all_ok) { 0 } else { EXIT_MISMATCH })
        }
        Command::Schema => {
            let schema = schemars::schema_for!(output::Document);
            serde_json::to_writer_pretty(&mut out, &schema).map_err(io_err)?;
            writeln!(out).map_err(io_err)?;
            Ok(0)
        }
    }
}
