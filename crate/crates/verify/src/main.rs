use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context as _};
use clap::{Parser, ValueEnum};

use groth_core::{Flavor, Permutation};
use groth_verify::config::{ConfigError, DEFAULT_N};
use groth_verify::{parse_checks, prepare_table, print, run, ReportFormat, RunConfig, RunError};

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Mode {
    Verify,
    Print,
    Cache,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Text,
}

/// Verify Grothendieck polynomial conjectures and theorems over S_n.
#[derive(Debug, Parser)]
#[command(name = "groth", version)]
struct Cli {
    /// Size of the symmetric group (default 5, or the size of --perm).
    #[arg(long)]
    n: Option<usize>,
    /// A single permutation in one-line notation, e.g. 15324 or 1,5,3,2,4.
    #[arg(long)]
    perm: Option<String>,
    /// Comma-separated check names, or `all`.
    #[arg(long, default_value = "all")]
    checks: String,
    /// Worker threads.
    #[arg(long)]
    jobs: Option<usize>,
    /// Directory for polynomial cache files.
    #[arg(long)]
    cache_dir: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    #[arg(long, value_enum, default_value_t = Mode::Verify)]
    mode: Mode,
    /// Include wall-clock timings (the report is then no longer reproducible byte for byte).
    #[arg(long)]
    timings: bool,
}

const USAGE: u8 = 2;

fn config_from(cli: &Cli) -> Result<RunConfig, ConfigError> {
    let perm = match &cli.perm {
        Some(s) => Some(s.parse::<Permutation>().map_err(|_| ConfigError::BadPermutation(s.clone()))?),
        None => None,
    };
    let n = cli.n.or(perm.as_ref().map(Permutation::n)).unwrap_or(DEFAULT_N);
    let jobs = cli
        .jobs
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, usize::from));
    let config = RunConfig {
        n,
        perm,
        checks: parse_checks(&cli.checks)?,
        jobs,
        cache_dir: cli.cache_dir.clone(),
        format: match cli.format {
            FormatArg::Json => ReportFormat::Json,
            FormatArg::Text => ReportFormat::Text,
        },
        timings: cli.timings,
    };
    config.validate()?;
    Ok(config)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = match config_from(&cli) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("groth: {e}");
            return ExitCode::from(USAGE);
        }
    };
    match dispatch(cli.mode, &config) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("groth: {e:#}");
            let usage = e.downcast_ref::<RunError>().is_some_and(|r| matches!(r, RunError::Config(_)));
            ExitCode::from(if usage { USAGE } else { 1 })
        }
    }
}

fn dispatch(mode: Mode, config: &RunConfig) -> anyhow::Result<ExitCode> {
    match mode {
        Mode::Verify => {
            let outcome = run(config)?;
            let report = &outcome.report;
            let text = match config.format {
                ReportFormat::Json => report.to_json(),
                ReportFormat::Text => report.to_text(),
            };
            print!("{text}");
            Ok(ExitCode::from(report.exit_code() as u8))
        }
        Mode::Print => {
            let Some(w) = &config.perm else {
                eprintln!("groth: --mode print needs --perm");
                return Ok(ExitCode::from(USAGE));
            };
            print!("{}", print::describe(w).context("describing permutation")?);
            Ok(ExitCode::SUCCESS)
        }
        Mode::Cache => {
            if config.cache_dir.is_none() {
                bail!(RunError::Config(ConfigError::NoCacheDir));
            }
            let perms = groth_verify::permutations(config);
            for flavor in [Flavor::Grothendieck, Flavor::Schubert] {
                let (table, stats) = prepare_table(config, flavor, &perms)?;
                println!(
                    "n={} flavor={} entries={} loaded={} computed={}",
                    table.n(),
                    flavor.tag(),
                    table.len(),
                    stats.loaded,
                    stats.steps
                );
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}
