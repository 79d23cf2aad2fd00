use alloc::vec::Vec;

use super::matroid::indicator;
use super::{lattice_points_of_pair, recover_pair, sumset, LatticeSet, SchubertMatroid, SUMSET_LIMIT};
use crate::error::{Error, Result};
use crate::perm::{rothe_diagram, Diagram, Permutation};
use crate::poly::SparsePolynomial;
use crate::vector::WeightVector;
use crate::verdict::{Verdict, Witness};

/// The support is the lattice-point set of the paramodular pair it determines.
///
/// The recovered pair is the only candidate description of the Newton
/// polytope, and an integral paramodular pair cuts out an integral polytope,
/// so passing both tests is the same as the support being saturated with a
/// generalized-polymatroid hull.
pub fn check_conjecture_4(groth: &SparsePolynomial) -> Result<Verdict> {
    let support = LatticeSet::support_of(groth);
    let pair = recover_pair(&support)?;
    if let Some(witness) = pair.paramodular_violation() {
        return Ok(Verdict::Fail(witness));
    }
    let points = lattice_points_of_pair(&pair)?;
    if points != support {
        let (unexpected, missing) = points.first_differences(&support);
        return Ok(Verdict::Fail(Witness::LatticeMismatch { unexpected, missing }));
    }
    Ok(Verdict::Pass)
}

fn sumset_guard(n: usize) -> Result<()> {
    if n > SUMSET_LIMIT {
        return Err(Error::SumsetGuard { n, limit: SUMSET_LIMIT });
    }
    Ok(())
}

/// `SM_{d_j}(D_j)` for each column `j`, where `d_j` is the lowest row of the column; `None` for empty columns.
fn closure_matroids(d: &Diagram) -> Result<Vec<Option<SchubertMatroid>>> {
    (1..=d.n())
        .map(|j| match d.column_max(j) {
            0 => Ok(None),
            dj => SchubertMatroid::new(dj as usize, d.column(j)).map(Some),
        })
        .collect()
}

/// `Σ_j` spanning points of `SM_{d_j}(D_j)`, each padded with zeros to length `n`.
pub fn superset_sumset(w: &Permutation) -> Result<LatticeSet> {
    let n = w.n();
    sumset_guard(n)?;
    let mut acc = LatticeSet::origin(n)?;
    for m in closure_matroids(&rothe_diagram(w))?.into_iter().flatten() {
        acc = sumset(&acc, &m.spanning_points().padded(n)?)?;
    }
    Ok(acc)
}

/// `Σ_j` base points of `SM_n(D_j)`.
pub fn fms_sumset(w: &Permutation) -> Result<LatticeSet> {
    let n = w.n();
    sumset_guard(n)?;
    let d = rothe_diagram(w);
    let mut acc = LatticeSet::origin(n)?;
    for j in 1..=n {
        acc = sumset(&acc, &SchubertMatroid::new(n, d.column(j))?.base_points())?;
    }
    Ok(acc)
}

/// Verdict of the spanning-set containment together with whether the two sets coincide.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupersetOutcome {
    pub verdict: Verdict,
    pub equal: bool,
}

/// `supp 𝔊_w` lies in the sum of the spanning-set point sets of the closure columns.
pub fn check_superset(w: &Permutation, groth: &SparsePolynomial) -> Result<SupersetOutcome> {
    let sum = superset_sumset(w)?;
    let support = LatticeSet::support_of(groth);
    let verdict = match support.iter().find(|a| !sum.contains(a)) {
        Some(alpha) => Verdict::Fail(Witness::OutsideSuperset { alpha: *alpha }),
        None => Verdict::Pass,
    };
    Ok(SupersetOutcome {
        verdict,
        equal: sum == support,
    })
}

/// `supp 𝔖_w` equals the sum of the base-point sets of `SM_n(D_j)`.
pub fn check_fms(w: &Permutation, schub: &SparsePolynomial) -> Result<Verdict> {
    let sum = fms_sumset(w)?;
    let support = LatticeSet::support_of(schub);
    if sum != support {
        let (unexpected, missing) = sum.first_differences(&support);
        return Ok(Verdict::Fail(Witness::LatticeMismatch { unexpected, missing }));
    }
    Ok(Verdict::Pass)
}

/// `deg 𝔊_w = #D̄(w)` holds exactly when the support fills the spanning-set sum.
pub fn check_prop_converse(w: &Permutation, groth: &SparsePolynomial) -> Result<Verdict> {
    let closure = rothe_diagram(w).upper_closure();
    let degree_saturated = groth.degree()? as usize == closure.len();
    let sumset_equal = check_superset(w, groth)?.equal;
    if degree_saturated != sumset_equal {
        return Ok(Verdict::Fail(Witness::ConverseDisagreement {
            degree_saturated,
            sumset_equal,
        }));
    }
    Ok(Verdict::Pass)
}

/// Writes `α ∈ supp 𝔊_w` as `ε^(1) + ... + ε^(n)` with `ε^(j)` a spanning
/// indicator of `SM_{d_j}(D_j)` padded to length `n` (zero for empty columns).
///
/// Walks down the support to a Schubert exponent `β <= α`, splits `β` into
/// bases of `SM_n(D_j)`, marks those cells inside the upper closure, and then
/// erases `δ_i - α_i` unmarked cells from each row `i`, where `δ` is the closure weight.
pub fn decompose_support_point(
    w: &Permutation,
    groth: &SparsePolynomial,
    alpha: &WeightVector,
) -> Result<Vec<WeightVector>> {
    if !groth.contains(alpha) {
        return Err(Error::NotInSupport);
    }
    let n = w.n();
    let d = rothe_diagram(w);
    let closure = d.upper_closure();
    let delta = closure.weight()?;
    if !alpha.dominated_by(&delta) {
        return Err(Error::AboveClosure);
    }

    let beta = descend_to_schubert(w, groth, alpha)?;
    let columns: Vec<SchubertMatroid> = (1..=n)
        .map(|j| SchubertMatroid::new(n, d.column(j)))
        .collect::<Result<_>>()?;
    let bases = basis_decomposition(&columns, &beta).ok_or(Error::NoBasisDecomposition)?;

    // cells[i][j]: closure cell (i+1, j+1) is still present
    let mut cells = alloc::vec![alloc::vec![false; n]; n];
    for (r, c) in closure.boxes() {
        cells[r as usize - 1][c as usize - 1] = true;
    }
    for i in 0..n {
        let mut surplus = delta.get(i) - alpha.get(i);
        for j in (0..n).rev() {
            if surplus == 0 {
                break;
            }
            let marked = bases[j] & (1 << i) != 0;
            if cells[i][j] && !marked {
                cells[i][j] = false;
                surplus -= 1;
            }
        }
        assert_eq!(surplus, 0, "row {} lacks unmarked closure cells", i + 1);
    }

    (0..n)
        .map(|j| {
            let mask = (0..n).filter(|&i| cells[i][j]).fold(0u32, |m, i| m | 1 << i);
            Ok(indicator(n, mask))
        })
        .collect()
}

/// `β <= α` of degree `ℓ(w)` in the support, reached by removing one unit at a time.
fn descend_to_schubert(w: &Permutation, groth: &SparsePolynomial, alpha: &WeightVector) -> Result<WeightVector> {
    let target = w.length() as u32;
    let mut beta = *alpha;
    while beta.degree() > target {
        beta = (0..beta.len())
            .filter_map(|i| beta.decremented(i))
            .find(|b| groth.contains(b))
            .ok_or(Error::NoDescentChain)?;
    }
    Ok(beta)
}

/// One basis per column (as bitmasks) whose indicators sum to `beta`.
fn basis_decomposition(columns: &[SchubertMatroid], beta: &WeightVector) -> Option<Vec<u32>> {
    let options: Vec<Vec<u32>> = columns.iter().map(SchubertMatroid::bases).collect();
    let mut remaining: Vec<i32> = beta.as_slice().iter().map(|&b| b as i32).collect();
    let mut chosen = Vec::with_capacity(columns.len());
    if search(&options, &mut remaining, &mut chosen) {
        Some(chosen)
    } else {
        None
    }
}

fn search(options: &[Vec<u32>], remaining: &mut [i32], chosen: &mut Vec<u32>) -> bool {
    let k = chosen.len();
    if k == options.len() {
        return remaining.iter().all(|&r| r == 0);
    }
    for &b in &options[k] {
        let fits = (0..remaining.len()).all(|i| b & (1 << i) == 0 || remaining[i] > 0);
        if !fits {
            continue;
        }
        let bits = (0..remaining.len()).filter(|i| b & (1 << i) != 0);
        bits.clone().for_each(|i| remaining[i] -= 1);
        chosen.push(b);
        if search(options, remaining, chosen) {
            return true;
        }
        chosen.pop();
        bits.for_each(|i| remaining[i] += 1);
    }
    false
}
