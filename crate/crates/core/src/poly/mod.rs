//! Sparse multivariate polynomials with exact integer coefficients.

use alloc::collections::btree_map::{self, BTreeMap};
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::vector::WeightVector;

mod divided;
mod table;

pub use self::divided::{divided_difference, isobaric_divided_difference};
pub use self::table::{check_leading_term, grothendieck, schubert, Flavor, PolynomialTable};

/// `Σ c_α x^α` over `Z[x_1, ..., x_n]`, keyed by exponent vector.
///
/// No stored coefficient is zero and every exponent has length `nvars`.
/// Terms iterate in the crate's term order (see [`WeightVector`]), so the
/// last term is the leading term.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SparsePolynomial {
    nvars: usize,
    terms: BTreeMap<WeightVector, i64>,
}

impl SparsePolynomial {
    pub fn zero(nvars: usize) -> Self {
        SparsePolynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Result<Self> {
        Self::monomial(WeightVector::zeros(nvars)?, 1)
    }

    pub fn monomial(exponent: WeightVector, coefficient: i64) -> Result<Self> {
        let mut f = Self::zero(exponent.len());
        f.add_term(exponent, coefficient)?;
        Ok(f)
    }

    /// Sums the given terms, combining repeated exponents and dropping zeros.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (WeightVector, i64)>) -> Result<Self> {
        let mut f = Self::zero(nvars);
        for (e, c) in terms {
            f.add_term(e, c)?;
        }
        Ok(f)
    }

    /// Staircase monomial `x_1^{n-1} x_2^{n-2} ... x_{n-1}`.
    pub fn staircase(nvars: usize) -> Result<Self> {
        let mut e = WeightVector::zeros(nvars)?;
        for (i, slot) in e.as_mut_slice().iter_mut().enumerate() {
            *slot = (nvars - 1 - i) as u8;
        }
        Self::monomial(e, 1)
    }

    pub fn add_term(&mut self, exponent: WeightVector, coefficient: i64) -> Result<()> {
        if exponent.len() != self.nvars {
            return Err(Error::LengthMismatch {
                left: self.nvars,
                right: exponent.len(),
            });
        }
        if coefficient == 0 {
            return Ok(());
        }
        match self.terms.entry(exponent) {
            btree_map::Entry::Vacant(slot) => {
                slot.insert(coefficient);
            }
            btree_map::Entry::Occupied(mut slot) => {
                let sum = slot
                    .get()
                    .checked_add(coefficient)
                    .ok_or(Error::CoefficientOverflow)?;
                if sum == 0 {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
        Ok(())
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending term order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&WeightVector, i64)> + ExactSizeIterator + '_ {
        self.terms.iter().map(|(e, &c)| (e, c))
    }

    /// `C_α`, zero when `α` is not in the support.
    pub fn coefficient(&self, exponent: &WeightVector) -> i64 {
        self.terms.get(exponent).copied().unwrap_or(0)
    }

    /// Exponents with nonzero coefficient, ascending in term order.
    pub fn support(&self) -> Vec<WeightVector> {
        self.terms.keys().copied().collect()
    }

    pub fn contains(&self, exponent: &WeightVector) -> bool {
        self.terms.contains_key(exponent)
    }

    /// Largest total degree of a term.
    pub fn degree(&self) -> Result<u32> {
        self.terms.keys().map(WeightVector::degree).max().ok_or(Error::ZeroPolynomial)
    }

    /// Smallest total degree of a term.
    pub fn min_degree(&self) -> Result<u32> {
        self.terms.keys().map(WeightVector::degree).min().ok_or(Error::ZeroPolynomial)
    }

    /// The homogeneous component of total degree `d` (possibly zero).
    pub fn graded_component(&self, d: u32) -> Self {
        SparsePolynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.degree() == d)
                .map(|(e, &c)| (*e, c))
                .collect(),
        }
    }

    /// Highest-degree nonzero homogeneous component.
    pub fn top_component(&self) -> Result<Self> {
        Ok(self.graded_component(self.degree()?))
    }

    /// Lowest-degree nonzero homogeneous component.
    pub fn lowest_component(&self) -> Result<Self> {
        Ok(self.graded_component(self.min_degree()?))
    }

    /// Largest exponent in the term order, i.e. the leading monomial.
    pub fn leading_exponent(&self) -> Option<&WeightVector> {
        self.terms.keys().next_back()
    }

    /// `f(1, ..., 1)`, the sum of all coefficients.
    pub fn principal_specialization(&self) -> Result<i64> {
        self.terms
            .values()
            .try_fold(0i64, |acc, &c| acc.checked_add(c))
            .ok_or(Error::CoefficientOverflow)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        for (e, &c) in &other.terms {
            out.add_term(*e, c.checked_neg().ok_or(Error::CoefficientOverflow)?)?;
        }
        Ok(out)
    }

    /// `s_j · f`: exchange `x_j` and `x_{j+1}` (1-based `j`).
    pub fn swap_variables(&self, j: usize) -> Result<Self> {
        self.check_generator(j)?;
        let terms = self
            .terms
            .iter()
            .map(|(e, &c)| {
                let mut e = *e;
                e.as_mut_slice().swap(j - 1, j);
                (e, c)
            })
            .collect();
        Ok(SparsePolynomial {
            nvars: self.nvars,
            terms,
        })
    }

    /// `(1 - x_k) · f` for a 1-based variable `k`.
    pub fn times_one_minus_variable(&self, k: usize) -> Result<Self> {
        if k == 0 || k > self.nvars {
            return Err(Error::IndexOutOfRange {
                index: k,
                n: self.nvars,
            });
        }
        let mut out = self.clone();
        for (e, &c) in &self.terms {
            let shifted = e.incremented(k - 1)?;
            out.add_term(shifted, c.checked_neg().ok_or(Error::CoefficientOverflow)?)?;
        }
        Ok(out)
    }

    pub(crate) fn check_generator(&self, j: usize) -> Result<()> {
        if j == 0 || j >= self.nvars {
            return Err(Error::IndexOutOfRange {
                index: j,
                n: self.nvars,
            });
        }
        Ok(())
    }

    pub(crate) fn from_sorted_map(nvars: usize, terms: BTreeMap<WeightVector, i64>) -> Self {
        debug_assert!(terms.iter().all(|(e, &c)| c != 0 && e.len() == nvars));
        SparsePolynomial { nvars, terms }
    }
}

impl fmt::Debug for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Human-readable form, highest term first: `-x1*x2 + x2 + x1`.
impl fmt::Display for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let (sign, mag) = if *c < 0 { ("-", c.unsigned_abs()) } else { ("+", *c as u64) };
            match (k, sign) {
                (0, "-") => f.write_str("-")?,
                (0, _) => {}
                _ => write!(f, " {} ", sign)?,
            }
            let mut factors = e
                .as_slice()
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .peekable();
            if factors.peek().is_none() {
                write!(f, "{}", mag)?;
                continue;
            }
            if mag != 1 {
                write!(f, "{}*", mag)?;
            }
            let mut first = true;
            for (i, &p) in factors {
                if !first {
                    f.write_str("*")?;
                }
                first = false;
                write!(f, "x{}", i + 1)?;
                if p > 1 {
                    write!(f, "^{}", p)?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
pub(crate) fn poly(nvars: usize, terms: &[(i64, &[u8])]) -> SparsePolynomial {
    SparsePolynomial::from_terms(
        nvars,
        terms
            .iter()
            .map(|&(c, e)| (WeightVector::from_slice(e).unwrap(), c)),
    )
    .unwrap()
}
