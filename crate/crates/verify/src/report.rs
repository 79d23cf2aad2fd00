use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use groth_core::WeightVector;

use crate::check::{Check, Outcome};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Meta {
    pub engine: String,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub perm: Option<String>,
    pub checks: Vec<Check>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Record {
    pub permutation: String,
    pub length: usize,
    pub degree: u32,
    pub rajcode: WeightVector,
    pub checks: BTreeMap<Check, Outcome>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub micros: Option<u64>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    pub error: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FailureRef {
    pub permutation: String,
    pub check: Check,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub records: usize,
    pub tallies: BTreeMap<Check, Tally>,
    pub failures: Vec<FailureRef>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_millis: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub meta: Meta,
    pub summary: Summary,
    pub results: Vec<Record>,
}

impl Report {
    /// Tallies `results`, which must already be in permutation order.
    pub fn assemble(meta: Meta, results: Vec<Record>, wall_millis: Option<u64>) -> Self {
        let mut tallies: BTreeMap<Check, Tally> = meta.checks.iter().map(|&c| (c, Tally::default())).collect();
        let mut failures = Vec::new();
        for r in &results {
            for (&check, outcome) in &r.checks {
                let t = tallies.entry(check).or_default();
                match outcome {
                    Outcome::Pass { .. } => t.pass += 1,
                    Outcome::Fail { .. } => t.fail += 1,
                    Outcome::Skipped { .. } => t.skipped += 1,
                    Outcome::Error { .. } => t.error += 1,
                }
                if outcome.is_bad() {
                    failures.push(FailureRef {
                        permutation: r.permutation.clone(),
                        check,
                    });
                }
            }
        }
        Report {
            meta,
            summary: Summary {
                records: results.len(),
                tallies,
                failures,
                wall_millis,
            },
            results,
        }
    }

    pub fn all_pass(&self) -> bool {
        self.summary.failures.is_empty()
    }

    /// 0 when nothing failed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.all_pass() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// A fixed-width table, then the tallies and any witnesses.
    pub fn to_text(&self) -> String {
        let checks = &self.meta.checks;
        let word_width = self.results.iter().map(|r| r.permutation.len()).max().unwrap_or(4).max(4);
        let code_width = self.results.iter().map(|r| r.rajcode.to_string().len()).max().unwrap_or(7).max(7);
        let mut out = String::new();
        write!(out, "{:<word_width$}  {:>3}  {:>3}  {:<code_width$}", "perm", "len", "deg", "rajcode").unwrap();
        for c in checks {
            write!(out, "  {:>8}", c.name()).unwrap();
        }
        out.push('\n');
        for r in &self.results {
            write!(
                out,
                "{:<word_width$}  {:>3}  {:>3}  {:<code_width$}",
                r.permutation,
                r.length,
                r.degree,
                r.rajcode.to_string()
            )
            .unwrap();
            for c in checks {
                let label = r.checks.get(c).map_or("-", Outcome::label);
                write!(out, "  {label:>8}").unwrap();
            }
            if let Some(us) = r.micros {
                write!(out, "  {us}us").unwrap();
            }
            out.push('\n');
        }

        writeln!(out, "\n{} summary n={} records={}", self.meta.engine, self.meta.n, self.summary.records).unwrap();
        for (c, t) in &self.summary.tallies {
            writeln!(
                out,
                "  {:<8} pass {:>6}  fail {:>4}  skipped {:>6}  error {:>4}",
                c.name(),
                t.pass,
                t.fail,
                t.skipped,
                t.error
            )
            .unwrap();
        }
        if let Some(ms) = self.summary.wall_millis {
            writeln!(out, "  wall time {ms} ms").unwrap();
        }
        for f in &self.summary.failures {
            let outcome = self
                .results
                .iter()
                .find(|r| r.permutation == f.permutation)
                .and_then(|r| r.checks.get(&f.check));
            let detail = match outcome {
                Some(Outcome::Fail { witness }) => serde_json::to_string(witness).expect("witness serializes"),
                Some(Outcome::Error { message }) => message.clone(),
                _ => String::new(),
            };
            writeln!(out, "  {} {} {}", f.permutation, f.check.name(), detail).unwrap();
        }
        out
    }
}
