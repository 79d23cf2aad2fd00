//! Outcomes of the conjecture and theorem checkers.
//!
//! A failed check is data, not an error: it carries the vectors that
//! violate the statement so the counterexample can be published as is.

use crate::vector::WeightVector;

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(tag = "status", content = "witness", rename_all = "lowercase"))]
pub enum Verdict {
    Pass,
    Fail(Witness),
}

impl Verdict {
    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::Pass => None,
            Verdict::Fail(w) => Some(w),
        }
    }
}

/// Which paramodularity condition failed, and on which subsets (bitmasks over `[n]`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum ParamodularFailure {
    LowerNotSupermodular,
    UpperNotSubmodular,
    CrossInequality,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(tag = "kind", rename_all = "snake_case"))]
pub enum Witness {
    /// A support point below the top degree with nothing strictly above it.
    NoStrictUpperBound { alpha: WeightVector },
    /// A support point below the top degree with no upper bound one degree higher.
    NoCoverAbove { alpha: WeightVector },
    /// `lower <= missing <= upper` with `lower, upper` in the support but not `missing`.
    IntervalGap {
        lower: WeightVector,
        upper: WeightVector,
        missing: WeightVector,
    },
    NotParamodular {
        condition: ParamodularFailure,
        first: u32,
        second: u32,
    },
    /// Two lattice sets that should agree; one point from each side of the difference.
    LatticeMismatch {
        unexpected: Option<WeightVector>,
        missing: Option<WeightVector>,
    },
    CoefficientSum { beta: WeightVector, sum: i64 },
    MobiusMismatch {
        alpha: WeightVector,
        coefficient: i64,
        mobius: i64,
    },
    OutsideSuperset { alpha: WeightVector },
    ConverseDisagreement {
        degree_saturated: bool,
        sumset_equal: bool,
    },
    DegreeMismatch { expected: u32, found: u32 },
    LeadingTerm {
        expected: WeightVector,
        found: WeightVector,
    },
    /// The degree-`degree` support differs from the predicted set.
    GradedSupport {
        degree: u32,
        unexpected: Option<WeightVector>,
        missing: Option<WeightVector>,
    },
    CoefficientMismatch {
        exponent: WeightVector,
        expected: i64,
        found: i64,
    },
    EulerCharacteristic { value: i64 },
}
