use serde::Serialize;

use groth_core::perm::is_zero_one;
use groth_core::pipe::{PipeDreamAtlas, ENUMERATION_LIMIT};
use groth_core::poly::check_leading_term;
use groth_core::polytope::{check_conjecture_4, check_fms, check_prop_converse, check_superset, SUMSET_LIMIT};
use groth_core::poset::{
    check_conjecture_1, check_conjecture_2, check_conjecture_3, check_conjecture_coeff, check_conjecture_mobius,
};
use groth_core::{Flavor, Permutation, PolynomialTable, SparsePolynomial, Verdict, Witness};

/// One statement verified per permutation. The declaration order is the report order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    Conj1,
    Conj2,
    Conj3,
    Conj4,
    Coeff,
    Mobius,
    Superset,
    Fms,
    Converse,
    Oracle,
    Euler,
    Rajchgot,
}

impl Check {
    pub const ALL: [Check; 12] = [
        Check::Conj1,
        Check::Conj2,
        Check::Conj3,
        Check::Conj4,
        Check::Coeff,
        Check::Mobius,
        Check::Superset,
        Check::Fms,
        Check::Converse,
        Check::Oracle,
        Check::Euler,
        Check::Rajchgot,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Conj1 => "conj1",
            Check::Conj2 => "conj2",
            Check::Conj3 => "conj3",
            Check::Conj4 => "conj4",
            Check::Coeff => "coeff",
            Check::Mobius => "mobius",
            Check::Superset => "superset",
            Check::Fms => "fms",
            Check::Converse => "converse",
            Check::Oracle => "oracle",
            Check::Euler => "euler",
            Check::Rajchgot => "rajchgot",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|c| c.name() == name)
    }

    /// Largest `n` this check runs at; beyond it the check is skipped.
    pub fn max_n(self) -> usize {
        match self {
            Check::Oracle | Check::Euler => ENUMERATION_LIMIT,
            Check::Superset | Check::Fms | Check::Converse => SUMSET_LIMIT,
            _ => usize::MAX,
        }
    }

    pub fn needs_schubert(self) -> bool {
        matches!(self, Check::Fms | Check::Oracle)
    }

    pub fn needs_pipe_dreams(self) -> bool {
        matches!(self, Check::Oracle | Check::Euler)
    }
}

impl Serialize for Check {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum Outcome {
    Pass {
        #[serde(skip_serializing_if = "Option::is_none")]
        note: Option<&'static str>,
    },
    Fail {
        witness: Witness,
    },
    Skipped {
        reason: String,
    },
    /// The engine itself failed; never expected, and counted against the run.
    Error {
        message: String,
    },
}

impl Outcome {
    pub const PASS: Outcome = Outcome::Pass { note: None };

    pub fn label(&self) -> &'static str {
        match self {
            Outcome::Pass { .. } => "pass",
            Outcome::Fail { .. } => "FAIL",
            Outcome::Skipped { .. } => "skip",
            Outcome::Error { .. } => "ERROR",
        }
    }

    pub fn is_bad(&self) -> bool {
        matches!(self, Outcome::Fail { .. } | Outcome::Error { .. })
    }
}

impl From<Verdict> for Outcome {
    fn from(v: Verdict) -> Self {
        match v {
            Verdict::Pass => Outcome::PASS,
            Verdict::Fail(witness) => Outcome::Fail { witness },
        }
    }
}

impl From<groth_core::Result<Verdict>> for Outcome {
    fn from(r: groth_core::Result<Verdict>) -> Self {
        match r {
            Ok(v) => v.into(),
            Err(e) => Outcome::Error { message: e.to_string() },
        }
    }
}

/// Read-only data shared by every worker.
pub struct Context<'a> {
    pub groth: &'a PolynomialTable,
    pub schub: Option<&'a PolynomialTable>,
    pub atlas: Option<&'a PipeDreamAtlas>,
}

impl Context<'_> {
    pub fn evaluate(&self, check: Check, w: &Permutation) -> Outcome {
        if w.n() > check.max_n() {
            return Outcome::Skipped {
                reason: format!("n = {} exceeds the {} limit of {}", w.n(), check.name(), check.max_n()),
            };
        }
        let Some(g) = self.groth.get(w) else {
            return Outcome::Error {
                message: format!("no Grothendieck polynomial for {w}"),
            };
        };
        match check {
            Check::Conj1 => check_conjecture_1(g).into(),
            Check::Conj2 => check_conjecture_2(g).into(),
            Check::Conj3 => check_conjecture_3(g).into(),
            Check::Conj4 => check_conjecture_4(g).into(),
            Check::Coeff => check_conjecture_coeff(g).into(),
            Check::Mobius if !is_zero_one(w) => Outcome::Skipped {
                reason: "not zero-one".to_string(),
            },
            Check::Mobius => check_conjecture_mobius(w, g).into(),
            Check::Superset => match check_superset(w, g) {
                Ok(out) if out.verdict.is_pass() => Outcome::Pass {
                    note: Some(if out.equal { "equal" } else { "strict" }),
                },
                Ok(out) => out.verdict.into(),
                Err(e) => Outcome::Error { message: e.to_string() },
            },
            Check::Fms => match self.schub.and_then(|t| t.get(w)) {
                Some(s) => check_fms(w, s).into(),
                None => Outcome::Error {
                    message: format!("no Schubert polynomial for {w}"),
                },
            },
            Check::Converse => check_prop_converse(w, g).into(),
            Check::Oracle => self.oracle(w, g),
            Check::Euler => match self.atlas {
                Some(atlas) => match atlas.euler_sum(w) {
                    1 => Outcome::PASS,
                    value => Outcome::Fail {
                        witness: Witness::EulerCharacteristic { value },
                    },
                },
                None => Outcome::Error {
                    message: "pipe dreams were not enumerated".to_string(),
                },
            },
            Check::Rajchgot => check_leading_term(w, g).into(),
        }
    }

    fn oracle(&self, w: &Permutation, g: &SparsePolynomial) -> Outcome {
        let (Some(atlas), Some(s)) = (self.atlas, self.schub.and_then(|t| t.get(w))) else {
            return Outcome::Error {
                message: "oracle inputs missing".to_string(),
            };
        };
        for (flavor, expected) in [(Flavor::Grothendieck, g), (Flavor::Schubert, s)] {
            let found = match atlas.polynomial(w, flavor) {
                Ok(f) => f,
                Err(e) => return Outcome::Error { message: e.to_string() },
            };
            if let Some(witness) = first_difference(expected, &found) {
                return Outcome::Fail { witness };
            }
        }
        Outcome::PASS
    }
}

fn first_difference(expected: &SparsePolynomial, found: &SparsePolynomial) -> Option<Witness> {
    let exponents = expected.terms().chain(found.terms()).map(|(e, _)| *e);
    exponents
        .filter(|e| expected.coefficient(e) != found.coefficient(e))
        .min()
        .map(|exponent| Witness::CoefficientMismatch {
            exponent,
            expected: expected.coefficient(&exponent),
            found: found.coefficient(&exponent),
        })
}
