use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::VectorPoset;
use crate::error::{Error, Result};
use crate::perm::{is_zero_one, rothe_diagram, Permutation};
use crate::poly::SparsePolynomial;
use crate::vector::WeightVector;
use crate::verdict::{Verdict, Witness};

/// `P_w`: vectors `β` with `α <= β <= wt(D̄(w))` for some `α` in the support, plus `0̂`.
pub fn build_pw(w: &Permutation, groth: &SparsePolynomial) -> Result<VectorPoset> {
    let top = rothe_diagram(w).upper_closure().weight()?;
    let support: Vec<WeightVector> = groth.support().into_iter().filter(|a| a.dominated_by(&top)).collect();
    let n = top.len();
    let mut low = top;
    for a in &support {
        for (l, &x) in low.as_mut_slice().iter_mut().zip(a.as_slice()) {
            *l = (*l).min(x);
        }
    }

    let mut points = Vec::new();
    let mut current = low;
    'odometer: loop {
        if support.iter().any(|a| a.dominated_by(&current)) {
            points.push(current);
        }
        for i in 0..n {
            let e = current.as_mut_slice();
            if e[i] < top.get(i) {
                e[i] += 1;
                continue 'odometer;
            }
            e[i] = low.get(i);
        }
        break;
    }
    VectorPoset::new(points, true)
}

/// Every support point below the top degree has a strict upper bound in the support.
pub fn check_conjecture_1(groth: &SparsePolynomial) -> Result<Verdict> {
    let degree = groth.degree()?;
    let support = groth.support();
    for a in support.iter().filter(|a| a.degree() < degree) {
        if !support.iter().any(|b| a.strictly_dominated_by(b)) {
            return Ok(Verdict::Fail(Witness::NoStrictUpperBound { alpha: *a }));
        }
    }
    Ok(Verdict::Pass)
}

/// Every support point below the top degree is covered by some `α + e_i` in the support.
pub fn check_conjecture_2(groth: &SparsePolynomial) -> Result<Verdict> {
    let degree = groth.degree()?;
    for (a, _) in groth.terms().filter(|(a, _)| a.degree() < degree) {
        let covered = (0..a.len()).any(|i| a.incremented(i).is_ok_and(|b| groth.contains(&b)));
        if !covered {
            return Ok(Verdict::Fail(Witness::NoCoverAbove { alpha: *a }));
        }
    }
    Ok(Verdict::Pass)
}

/// The support contains every integer box spanned by two comparable support points.
///
/// Checked through single steps: a box `[α, γ]` lies in the support for all
/// comparable pairs exactly when `α + e_i` does whenever `α_i < γ_i`.
pub fn check_conjecture_3(groth: &SparsePolynomial) -> Result<Verdict> {
    let support = groth.support();
    for a in &support {
        for c in support.iter().filter(|c| a.strictly_dominated_by(c)) {
            for i in (0..a.len()).filter(|&i| a.get(i) < c.get(i)) {
                let b = a.incremented(i)?;
                if !groth.contains(&b) {
                    return Ok(Verdict::Fail(Witness::IntervalGap {
                        lower: *a,
                        upper: *c,
                        missing: b,
                    }));
                }
            }
        }
    }
    Ok(Verdict::Pass)
}

/// For each top-degree exponent `β`, the coefficients of the support below `β` sum to 1.
pub fn check_conjecture_coeff(groth: &SparsePolynomial) -> Result<Verdict> {
    let degree = groth.degree()?;
    for (beta, _) in groth.terms().filter(|(b, _)| b.degree() == degree) {
        let sum = groth
            .terms()
            .filter(|(a, _)| a.dominated_by(beta))
            .try_fold(0i64, |acc, (_, c)| acc.checked_add(c))
            .ok_or(Error::CoefficientOverflow)?;
        if sum != 1 {
            return Ok(Verdict::Fail(Witness::CoefficientSum { beta: *beta, sum }));
        }
    }
    Ok(Verdict::Pass)
}

/// For zero-one `w`, `C_α = -μ(0̂, α)` on `P_w - 0̂` and no support point falls outside `P_w`.
pub fn check_conjecture_mobius(w: &Permutation, groth: &SparsePolynomial) -> Result<Verdict> {
    if !is_zero_one(w) {
        return Err(Error::NotZeroOne);
    }
    let poset = build_pw(w, groth)?;
    let mu = poset.mobius()?;
    let mut seen = BTreeSet::new();
    for (alpha, m) in mu.iter() {
        let coefficient = groth.coefficient(alpha);
        if coefficient != -m {
            return Ok(Verdict::Fail(Witness::MobiusMismatch {
                alpha: *alpha,
                coefficient,
                mobius: m,
            }));
        }
        seen.insert(*alpha);
    }
    if let Some((alpha, coefficient)) = groth.terms().find(|(a, _)| !seen.contains(*a)) {
        return Ok(Verdict::Fail(Witness::MobiusMismatch {
            alpha: *alpha,
            coefficient,
            mobius: 0,
        }));
    }
    Ok(Verdict::Pass)
}
