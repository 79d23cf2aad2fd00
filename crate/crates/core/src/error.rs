use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a permutation of 1..={n}: {detail}")]
    NotAPermutation { n: usize, detail: &'static str },
    #[error("cannot parse permutation: {0}")]
    Parse(&'static str),
    #[error("{n} variables exceeds the supported maximum of {max}")]
    TooManyVariables { n: usize, max: usize },
    #[error("vector length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("generator index {index} out of range for {n} variables")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("coefficient overflow")]
    CoefficientOverflow,
    #[error("the zero polynomial has no degree")]
    ZeroPolynomial,
    #[error("permutation is not fireworks")]
    NotFireworks,
    #[error("permutation is not Grassmannian")]
    NotGrassmannian,
    #[error("permutation is not zero-one (its Schubert polynomial has a coefficient above 1)")]
    NotZeroOne,
    #[error("pipe dream enumeration refused for n = {n} (limit {limit})")]
    EnumerationGuard { n: usize, limit: usize },
    #[error("sumset computation refused for n = {n} (limit {limit})")]
    SumsetGuard { n: usize, limit: usize },
    #[error("poset has no adjoined bottom element")]
    MissingBottom,
    #[error("empty point set")]
    EmptyInput,
    #[error("vector is not in the support")]
    NotInSupport,
    #[error("negative lower bound {value} on a coordinate; lattice sets are nonnegative")]
    NegativeBound { value: i64 },
    #[error("no basis decomposition of a Schubert support vector exists")]
    NoBasisDecomposition,
    #[error("support vector exceeds the upper-closure weight")]
    AboveClosure,
    #[error("support vector has no downward chain to the Schubert support")]
    NoDescentChain,
    #[error("permutation size {found} does not match table size {expected}")]
    SizeMismatch { expected: usize, found: usize },
}
