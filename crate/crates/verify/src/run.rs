use std::time::Instant;

use rayon::prelude::*;

use groth_core::perm::rajcode;
use groth_core::pipe::{PipeDreamAtlas, ENUMERATION_LIMIT};
use groth_core::{Flavor, Permutation, PolynomialTable};

use crate::cache::{self, CacheError};
use crate::check::{Check, Context};
use crate::config::{ConfigError, RunConfig};
use crate::format::one_line;
use crate::report::{Meta, Record, Report};

#[derive(Debug, thiserror::Error)]
pub enum RunError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error(transparent)]
    Cache(#[from] CacheError),
    #[error(transparent)]
    Engine(#[from] groth_core::Error),
    #[error("worker pool: {0}")]
    Pool(String),
}

/// How a polynomial table was obtained. Kept out of the report so cold and warm runs compare equal.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct TableStats {
    pub loaded: bool,
    /// Divided differences evaluated during this run.
    pub steps: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RunStats {
    pub groth: TableStats,
    pub schub: Option<TableStats>,
}

#[derive(Debug)]
pub struct RunOutcome {
    pub report: Report,
    pub stats: RunStats,
}

pub fn engine_name() -> String {
    format!("groth-verify {}", env!("CARGO_PKG_VERSION"))
}

pub fn permutations(config: &RunConfig) -> Vec<Permutation> {
    match &config.perm {
        Some(w) => vec![w.clone()],
        None => Permutation::all(config.n).collect(),
    }
}

/// Fills a table for `perms`, reading and refreshing the cache when one is configured.
pub fn prepare_table(
    config: &RunConfig,
    flavor: Flavor,
    perms: &[Permutation],
) -> Result<(PolynomialTable, TableStats), RunError> {
    let n = config.n;
    let cached = match &config.cache_dir {
        Some(dir) => cache::load(dir, n, flavor)?,
        None => None,
    };
    let loaded = cached.is_some();
    let mut table = match cached {
        Some(t) => t,
        None if config.perm.is_none() => PolynomialTable::build(n, flavor)?,
        None => PolynomialTable::new(n, flavor),
    };
    for w in perms {
        table.get_or_compute(w)?;
    }
    // every table here was created during this run, so its counter is this run's work
    let stats = TableStats {
        loaded,
        steps: table.steps(),
    };
    if let Some(dir) = &config.cache_dir {
        if stats.steps > 0 || !loaded {
            cache::store(dir, &table)?;
        }
    }
    Ok((table, stats))
}

/// Builds the tables in one single-threaded phase, then checks every permutation on `jobs` workers.
pub fn run(config: &RunConfig) -> Result<RunOutcome, RunError> {
    config.validate()?;
    let start = Instant::now();
    let mut checks = config.checks.clone();
    checks.sort();
    checks.dedup();

    let perms = permutations(config);
    let (groth, groth_stats) = prepare_table(config, Flavor::Grothendieck, &perms)?;
    let schub = if checks.iter().any(|c| c.needs_schubert()) {
        Some(prepare_table(config, Flavor::Schubert, &perms)?)
    } else {
        None
    };
    let atlas = if config.n <= ENUMERATION_LIMIT && checks.iter().any(|c| c.needs_pipe_dreams()) {
        Some(PipeDreamAtlas::build(config.n)?)
    } else {
        None
    };

    let ctx = Context {
        groth: &groth,
        schub: schub.as_ref().map(|(t, _)| t),
        atlas: atlas.as_ref(),
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| RunError::Pool(e.to_string()))?;
    // indexed parallel collect keeps permutation order regardless of scheduling
    let results: Vec<Record> = pool.install(|| {
        perms
            .par_iter()
            .map(|w| record(&ctx, &checks, w, config.timings))
            .collect::<Result<_, RunError>>()
    })?;

    let meta = Meta {
        engine: engine_name(),
        n: config.n,
        perm: config.perm.as_ref().map(one_line),
        checks,
    };
    let wall = config.timings.then(|| start.elapsed().as_millis() as u64);
    Ok(RunOutcome {
        report: Report::assemble(meta, results, wall),
        stats: RunStats {
            groth: groth_stats,
            schub: schub.map(|(_, s)| s),
        },
    })
}

fn record(ctx: &Context<'_>, checks: &[Check], w: &Permutation, timings: bool) -> Result<Record, RunError> {
    let start = Instant::now();
    let g = ctx.groth.get(w).expect("table covers every requested permutation");
    let outcomes = checks.iter().map(|&c| (c, ctx.evaluate(c, w))).collect();
    Ok(Record {
        permutation: one_line(w),
        length: w.length(),
        degree: g.degree()?,
        rajcode: rajcode(w)?,
        checks: outcomes,
        micros: timings.then(|| start.elapsed().as_micros() as u64),
    })
}
