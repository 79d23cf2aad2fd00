use alloc::vec::Vec;

use super::{LatticeSet, SetFunctionPair};
use crate::error::{Error, Result};
use crate::perm::{grassmannian_shape, Permutation};
use crate::poly::SparsePolynomial;
use crate::vector::WeightVector;
use crate::verdict::{Verdict, Witness};

/// Partitions `μ^(0), ..., μ^(N)` with a fixed number of rows, each one box bigger than the last.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionSeq {
    parts: Vec<Vec<u32>>,
}

impl PartitionSeq {
    pub fn rows(&self) -> usize {
        self.parts[0].len()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn first(&self) -> &[u32] {
        &self.parts[0]
    }

    pub fn last(&self) -> &[u32] {
        self.parts.last().expect("sequence starts at λ")
    }

    pub fn iter(&self) -> impl Iterator<Item = &[u32]> + '_ {
        self.parts.iter().map(Vec::as_slice)
    }
}

/// Grows `λ` one box at a time, always in the northmost row `k` where the
/// result is still a partition and row `k` has gained fewer than `k - 1` boxes.
///
/// `λ` keeps exactly its given number of rows (zeros included).
pub fn grassmannian_par(lambda: &[u32]) -> PartitionSeq {
    let mut parts = alloc::vec![lambda.to_vec()];
    loop {
        let mu = parts.last().expect("nonempty");
        let row = (0..mu.len()).find(|&k| (k == 0 || mu[k - 1] > mu[k]) && mu[k] - lambda[k] < k as u32);
        let Some(k) = row else { break };
        let mut next = mu.clone();
        next[k] += 1;
        parts.push(next);
    }
    PartitionSeq { parts }
}

/// Dominance `ρ ⊴ ν`: every prefix sum of `ρ` is at most that of `ν`, and the totals agree.
pub fn dominance_leq(rho: &[u32], nu: &[u32]) -> Result<bool> {
    if rho.len() != nu.len() {
        return Err(Error::LengthMismatch {
            left: rho.len(),
            right: nu.len(),
        });
    }
    let (mut a, mut b) = (0u64, 0u64);
    for (&r, &v) in rho.iter().zip(nu) {
        a += r as u64;
        b += v as u64;
        if a > b {
            return Ok(false);
        }
    }
    Ok(a == b)
}

/// How a support vector is compared with `μ^(j)` in the Escobar–Yong description.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum DominanceReading {
    /// `α|_r ⊴ μ` on the first `r` coordinates as written.
    Raw,
    /// `α|_r`, sorted into decreasing order, `⊴ μ`.
    Sorted,
}

/// `{α ≥ 0 : α ⊴ μ}` under a reading, as vectors of length `n` that vanish after the first `μ.len()` coordinates.
pub fn escobar_yong_target(mu: &[u32], n: usize, reading: DominanceReading) -> Result<LatticeSet> {
    let r = mu.len();
    if r > n {
        return Err(Error::LengthMismatch { left: r, right: n });
    }
    let total: u32 = mu.iter().sum();
    let mut out = Vec::new();
    let mut alpha = alloc::vec![0u32; r];
    compositions(total, 0, &mut alpha, &mut |a| {
        let ok = match reading {
            DominanceReading::Raw => dominance_leq(a, mu),
            DominanceReading::Sorted => {
                let mut s = a.to_vec();
                s.sort_unstable_by(|x, y| y.cmp(x));
                dominance_leq(&s, mu)
            }
        }?;
        if ok {
            let mut v = WeightVector::zeros(n)?;
            for (e, &x) in v.as_mut_slice().iter_mut().zip(a) {
                *e = u8::try_from(x).map_err(|_| Error::ExponentOverflow)?;
            }
            out.push(v);
        }
        Ok(())
    })?;
    LatticeSet::new(n, out)
}

fn compositions(
    remaining: u32,
    k: usize,
    alpha: &mut [u32],
    visit: &mut impl FnMut(&[u32]) -> Result<()>,
) -> Result<()> {
    if k + 1 >= alpha.len() {
        if let Some(last) = alpha.last_mut() {
            *last = remaining;
        } else if remaining != 0 {
            return Ok(());
        }
        return visit(alpha);
    }
    for x in 0..=remaining {
        alpha[k] = x;
        compositions(remaining - x, k + 1, alpha, visit)?;
    }
    Ok(())
}

/// Result of the Escobar–Yong check together with the reading it was decided under.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EscobarYongOutcome {
    pub verdict: Verdict,
    pub reading: DominanceReading,
}

/// Compares each graded piece of `supp 𝔊_w` with the dominance description
/// under one fixed reading, and checks `deg 𝔊_w = |μ^(N)|`.
pub fn check_escobar_yong_with(
    w: &Permutation,
    groth: &SparsePolynomial,
    reading: DominanceReading,
) -> Result<Verdict> {
    let shape = grassmannian_shape(w).ok_or(Error::NotGrassmannian)?;
    let seq = grassmannian_par(&shape.partition);
    let n = w.n();
    let top: u32 = seq.last().iter().sum();
    let degree = groth.degree()?;
    if degree != top {
        return Ok(Verdict::Fail(Witness::DegreeMismatch {
            expected: top,
            found: degree,
        }));
    }
    let base = w.length() as u32;
    for (j, mu) in seq.iter().enumerate() {
        let d = base + j as u32;
        let got = LatticeSet::support_of(&groth.graded_component(d));
        let want = escobar_yong_target(mu, n, reading)?;
        if got != want {
            let (unexpected, missing) = got.first_differences(&want);
            return Ok(Verdict::Fail(Witness::GradedSupport {
                degree: d,
                unexpected,
                missing,
            }));
        }
    }
    Ok(Verdict::Pass)
}

/// The Escobar–Yong check, reading support vectors as written first and
/// falling back to their sorted prefixes only when that fails.
///
/// A failure under both readings reports the raw witness.
pub fn check_escobar_yong(w: &Permutation, groth: &SparsePolynomial) -> Result<EscobarYongOutcome> {
    let raw = check_escobar_yong_with(w, groth, DominanceReading::Raw)?;
    if raw.is_pass() {
        return Ok(EscobarYongOutcome {
            verdict: raw,
            reading: DominanceReading::Raw,
        });
    }
    if check_escobar_yong_with(w, groth, DominanceReading::Sorted)?.is_pass() {
        return Ok(EscobarYongOutcome {
            verdict: Verdict::Pass,
            reading: DominanceReading::Sorted,
        });
    }
    Ok(EscobarYongOutcome {
        verdict: raw,
        reading: DominanceReading::Raw,
    })
}

/// `y(I)` = sum of the `#I` smallest parts of `λ`, `z(I)` = sum of the `#I`
/// largest parts of `μ^(N)`, on the ground set of `λ`'s rows.
pub fn grassmannian_pair(lambda: &[u32], mu_top: &[u32]) -> Result<SetFunctionPair> {
    if lambda.len() != mu_top.len() {
        return Err(Error::LengthMismatch {
            left: lambda.len(),
            right: mu_top.len(),
        });
    }
    let mut small = lambda.to_vec();
    small.sort_unstable();
    let mut large = mu_top.to_vec();
    large.sort_unstable_by(|a, b| b.cmp(a));
    let prefix = |v: &[u32], k: u32| v[..k as usize].iter().map(|&x| x as i64).sum::<i64>();
    SetFunctionPair::from_fns(lambda.len(), |m| prefix(&small, m.count_ones()), |m| prefix(&large, m.count_ones()))
}
