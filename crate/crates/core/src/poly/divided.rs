use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::SparsePolynomial;
use crate::error::{Error, Result};
use crate::vector::WeightVector;

/// `∂_j f = (f - s_j·f) / (x_j - x_{j+1})`, computed by exact division.
///
/// The numerator is grouped by the exponents of the other variables and by
/// `a + b`, where `x_j^a x_{j+1}^b` is the part in the two swapped
/// variables. Each group is a binary form `Σ c_a t^a` (with `t = x_j/x_{j+1}`)
/// and is divided by `t - 1` synthetically. A nonzero remainder cannot
/// happen for a genuine divided difference, so it panics.
pub fn divided_difference(f: &SparsePolynomial, j: usize) -> Result<SparsePolynomial> {
    f.check_generator(j)?;
    let numerator = f.checked_sub(&f.swap_variables(j)?)?;

    // (rest of the exponent with both slots cleared, a + b) -> [(a, c)]
    let mut groups: BTreeMap<(WeightVector, u16), Vec<(u8, i64)>> = BTreeMap::new();
    for (e, c) in numerator.terms() {
        let a = e.get(j - 1);
        let b = e.get(j);
        let mut rest = *e;
        rest.as_mut_slice()[j - 1] = 0;
        rest.as_mut_slice()[j] = 0;
        groups.entry((rest, a as u16 + b as u16)).or_default().push((a, c));
    }

    let mut quotient = BTreeMap::new();
    for ((rest, total), mut coeffs) in groups {
        coeffs.sort_unstable_by(|x, y| y.0.cmp(&x.0));
        // q_{a-1} = Σ_{k >= a} c_k, walking a downward from the top exponent
        let mut running = 0i64;
        let mut next = coeffs.iter().peekable();
        let top = coeffs[0].0;
        for a in (1..=top).rev() {
            while let Some(&&(k, c)) = next.peek() {
                if k < a {
                    break;
                }
                running = running.checked_add(c).ok_or(Error::CoefficientOverflow)?;
                next.next();
            }
            if running != 0 {
                let mut e = rest;
                e.as_mut_slice()[j - 1] = a - 1;
                e.as_mut_slice()[j] = (total - a as u16) as u8;
                quotient.insert(e, running);
            }
        }
        for &(_, c) in next {
            running = running.checked_add(c).ok_or(Error::CoefficientOverflow)?;
        }
        assert!(
            running == 0,
            "inexact division by x_{} - x_{}: remainder {} in degree {} group",
            j,
            j + 1,
            running,
            total
        );
    }
    Ok(SparsePolynomial::from_sorted_map(f.nvars(), quotient))
}

/// `∂̄_j f = ∂_j((1 - x_{j+1}) f)`.
pub fn isobaric_divided_difference(f: &SparsePolynomial, j: usize) -> Result<SparsePolynomial> {
    f.check_generator(j)?;
    divided_difference(&f.times_one_minus_variable(j + 1)?, j)
}
