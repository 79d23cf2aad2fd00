use std::path::PathBuf;

use groth_core::{Permutation, MAX_VARS};

use crate::check::Check;

/// Default `n` when neither `--n` nor `--perm` is given.
pub const DEFAULT_N: usize = 5;
/// Largest `n` accepted unless `GROTH_MAX_N` says otherwise.
pub const DEFAULT_MAX_N: usize = 8;
pub const MAX_N_VAR: &str = "GROTH_MAX_N";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Text,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConfigError {
    #[error("n = {n} is outside 2..={max} (raise the ceiling with {MAX_N_VAR})")]
    OutOfRange { n: usize, max: usize },
    #[error("{MAX_N_VAR}={0} is not an integer in 2..=12")]
    BadMaxN(String),
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error("no checks requested")]
    NoChecks,
    #[error("jobs must be at least 1")]
    NoJobs,
    #[error("--perm {perm} has size {found} but --n is {n}")]
    PermSize { perm: String, n: usize, found: usize },
    #[error("bad permutation `{0}`")]
    BadPermutation(String),
    #[error("--mode cache needs --cache-dir")]
    NoCacheDir,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub n: usize,
    pub perm: Option<Permutation>,
    pub checks: Vec<Check>,
    pub jobs: usize,
    pub cache_dir: Option<PathBuf>,
    pub format: ReportFormat,
    /// Adds wall-clock fields to the report, which then differs from run to run.
    pub timings: bool,
}

impl RunConfig {
    /// All of `S_n`, every check, one worker, no cache.
    pub fn new(n: usize) -> Self {
        RunConfig {
            n,
            perm: None,
            checks: Check::ALL.to_vec(),
            jobs: 1,
            cache_dir: None,
            format: ReportFormat::Json,
            timings: false,
        }
    }

    pub fn with_checks(mut self, checks: &[Check]) -> Self {
        self.checks = checks.to_vec();
        self
    }

    /// Checks the guards, with the ceiling taken from `GROTH_MAX_N` when set.
    pub fn validate(&self) -> Result<(), ConfigError> {
        self.validate_with_max(max_n_from_env()?)
    }

    pub fn validate_with_max(&self, max: usize) -> Result<(), ConfigError> {
        if !(2..=max).contains(&self.n) {
            return Err(ConfigError::OutOfRange { n: self.n, max });
        }
        if self.checks.is_empty() {
            return Err(ConfigError::NoChecks);
        }
        if self.jobs == 0 {
            return Err(ConfigError::NoJobs);
        }
        if let Some(w) = &self.perm {
            if w.n() != self.n {
                return Err(ConfigError::PermSize {
                    perm: w.to_string(),
                    n: self.n,
                    found: w.n(),
                });
            }
        }
        Ok(())
    }
}

pub fn max_n_from_env() -> Result<usize, ConfigError> {
    match std::env::var(MAX_N_VAR) {
        Err(_) => Ok(DEFAULT_MAX_N),
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(m) if (2..=MAX_VARS).contains(&m) => Ok(m),
            _ => Err(ConfigError::BadMaxN(s)),
        },
    }
}

/// `all` or a comma-separated list of check names; duplicates collapse, order becomes canonical.
pub fn parse_checks(s: &str) -> Result<Vec<Check>, ConfigError> {
    if s.trim() == "all" {
        return Ok(Check::ALL.to_vec());
    }
    let mut out = Vec::new();
    for name in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        out.push(Check::from_name(name).ok_or_else(|| ConfigError::UnknownCheck(name.to_string()))?);
    }
    out.sort();
    out.dedup();
    if out.is_empty() {
        return Err(ConfigError::NoChecks);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn checks_parse() {
        assert_eq!(parse_checks("all").unwrap().len(), 12);
        assert_eq!(
            parse_checks("mobius, conj1,conj1").unwrap(),
            [Check::Conj1, Check::Mobius]
        );
        assert_eq!(parse_checks("conj9"), Err(ConfigError::UnknownCheck("conj9".into())));
        assert_eq!(parse_checks(" , "), Err(ConfigError::NoChecks));
    }

    #[test]
    fn guards() {
        assert!(RunConfig::new(5).validate_with_max(8).is_ok());
        assert!(matches!(RunConfig::new(9).validate_with_max(8), Err(ConfigError::OutOfRange { .. })));
        assert!(RunConfig::new(9).validate_with_max(9).is_ok());
        assert!(RunConfig::new(1).validate_with_max(8).is_err());
        let mut c = RunConfig::new(4);
        c.perm = Some("132".parse().unwrap());
        assert!(matches!(c.validate_with_max(8), Err(ConfigError::PermSize { .. })));
        c.perm = None;
        c.jobs = 0;
        assert_eq!(c.validate_with_max(8), Err(ConfigError::NoJobs));
    }
}
