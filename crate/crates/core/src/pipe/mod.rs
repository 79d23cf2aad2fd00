//! Pipe dreams, enumerated by brute force.
//!
//! This is the slow, independent route to Schubert and Grothendieck
//! polynomials: every subset of the staircase is tried and classified by
//! the Demazure product of its reading word. It exists to cross-check the
//! divided-difference engine, so it favours obviousness over speed.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::poly::{Flavor, SparsePolynomial};
use crate::vector::WeightVector;

/// Largest `n` for which enumeration over all `2^(n(n-1)/2)` cross sets is allowed.
pub const ENUMERATION_LIMIT: usize = 7;

/// Cells `(i, j)` with `i + j <= n`, in reading order: rows top to bottom,
/// each row right to left. A cross in cell `(i, j)` reads as `s_{i+j-1}`.
fn staircase_cells(n: usize) -> Vec<(u8, u8)> {
    (1..n)
        .flat_map(|i| (1..=n - i).rev().map(move |j| (i as u8, j as u8)))
        .collect()
}

/// A choice of crosses in the strict north-west staircase of the `n × n` grid.
/// Every other tile is an elbow.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PipeDream {
    n: u8,
    /// bit k set iff the k-th staircase cell (reading order) holds a cross
    mask: u64,
}

impl PipeDream {
    pub fn new(n: usize, crosses: impl IntoIterator<Item = (u8, u8)>) -> Result<Self> {
        if n > 11 {
            return Err(Error::TooManyVariables { n, max: 11 });
        }
        let cells = staircase_cells(n);
        let mut mask = 0u64;
        for cell in crosses {
            let k = cells
                .iter()
                .position(|&c| c == cell)
                .ok_or(Error::IndexOutOfRange {
                    index: (cell.0 + cell.1) as usize,
                    n,
                })?;
            mask |= 1 << k;
        }
        Ok(PipeDream { n: n as u8, mask })
    }

    fn from_mask(n: usize, mask: u64) -> Self {
        PipeDream { n: n as u8, mask }
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn num_crosses(&self) -> usize {
        self.mask.count_ones() as usize
    }

    /// Crosses in reading order.
    pub fn crosses(&self) -> Vec<(u8, u8)> {
        staircase_cells(self.n())
            .into_iter()
            .enumerate()
            .filter(|(k, _)| self.mask & (1 << k) != 0)
            .map(|(_, c)| c)
            .collect()
    }

    pub fn has_cross(&self, i: u8, j: u8) -> bool {
        self.crosses().contains(&(i, j))
    }

    /// `wt(P)_i` = number of crosses in row `i`.
    pub fn weight(&self) -> Result<WeightVector> {
        let mut wt = WeightVector::zeros(self.n())?;
        for (i, _) in self.crosses() {
            wt.as_mut_slice()[i as usize - 1] += 1;
        }
        Ok(wt)
    }

    pub fn reading_word(&self) -> Word {
        Word {
            generators: self.crosses().into_iter().map(|(i, j)| i + j - 1).collect(),
        }
    }
}

impl fmt::Debug for PipeDream {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PipeDream({})", self)
    }
}

/// `n` followed by the sorted cross list, e.g. `3 (1,2) (2,1)`.
impl fmt::Display for PipeDream {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut crosses = self.crosses();
        crosses.sort_unstable();
        write!(f, "{}", self.n)?;
        for (i, j) in crosses {
            write!(f, " ({},{})", i, j)?;
        }
        Ok(())
    }
}

/// A word in the simple generators `s_1, ..., s_{n-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Word {
    pub generators: Vec<u8>,
}

/// Demazure (0-Hecke) product of `word` in `S_n`: fold left to right,
/// replacing `u` by `u s_j` exactly when `u(j) < u(j+1)`.
pub fn demazure_product(word: &Word, n: usize) -> Result<Permutation> {
    let mut u: Vec<u8> = (1..=n as u8).collect();
    for &j in &word.generators {
        let j = j as usize;
        if j == 0 || j >= n {
            return Err(Error::IndexOutOfRange { index: j, n });
        }
        if u[j - 1] < u[j] {
            u.swap(j - 1, j);
        }
    }
    Permutation::new(u)
}

/// Follows the pipes of `dream` through the grid.
///
/// Pipe `j` enters at the top of column `j`. A cross lets both pipes pass
/// straight through unless they have already crossed, in which case it
/// behaves as an elbow. The result lists the pipe leaving each row on the
/// left edge, top to bottom.
pub fn trace_strands(dream: &PipeDream) -> Permutation {
    let n = dream.n();
    let cells = staircase_cells(n);
    let mut is_cross = alloc::vec![alloc::vec![false; n + 1]; n + 1];
    for (k, &(i, j)) in cells.iter().enumerate() {
        is_cross[i as usize][j as usize] = dream.mask & (1 << k) != 0;
    }
    let mut crossed = alloc::vec![alloc::vec![false; n + 1]; n + 1];
    // down[j]: pipe travelling down into column j of the current row
    let mut down: Vec<Option<u8>> = (0..=n).map(|j| (j > 0).then_some(j as u8)).collect();
    let mut word = Vec::with_capacity(n);
    // Cells are visited in reading order, which follows every pipe's own
    // direction of travel, so "already crossed" means crossed earlier.
    for i in 1..=n {
        let mut from_right: Option<u8> = None;
        for j in (1..=n).rev() {
            let from_top = down[j];
            let passes = match (is_cross[i][j], from_top, from_right) {
                (true, Some(a), Some(b)) => {
                    let (lo, hi) = (a.min(b) as usize, a.max(b) as usize);
                    !core::mem::replace(&mut crossed[lo][hi], true)
                }
                (cross, _, _) => cross,
            };
            if passes {
                // top continues down, right continues left
            } else {
                down[j] = from_right;
                from_right = from_top;
            }
        }
        word.push(from_right.expect("a pipe leaves every row"));
    }
    Permutation::new(word).expect("pipes leave the left edge as a permutation")
}

/// Which pipe dreams of `w` to enumerate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DreamSet {
    /// `RPD(w)`: no two pipes cross twice.
    Reduced,
    /// `PD(w)`: every cross set whose Demazure product is `w`.
    All,
}

fn check_guard(n: usize) -> Result<()> {
    if n > ENUMERATION_LIMIT {
        return Err(Error::EnumerationGuard {
            n,
            limit: ENUMERATION_LIMIT,
        });
    }
    Ok(())
}

/// Fast Demazure product of the cross subset `mask`, using precomputed generators.
fn product_of_mask(gens: &[u8], mask: u64, n: usize) -> [u8; ENUMERATION_LIMIT] {
    let mut u = [0u8; ENUMERATION_LIMIT];
    for (k, slot) in u.iter_mut().enumerate().take(n) {
        *slot = k as u8 + 1;
    }
    let mut m = mask;
    while m != 0 {
        let k = m.trailing_zeros() as usize;
        m &= m - 1;
        let j = gens[k] as usize;
        if u[j - 1] < u[j] {
            u.swap(j - 1, j);
        }
    }
    u
}

/// Pipe dreams of `w`, by exhaustive search over the staircase.
pub fn enumerate_pipe_dreams(w: &Permutation, set: DreamSet) -> Result<Vec<PipeDream>> {
    let n = w.n();
    check_guard(n)?;
    let gens: Vec<u8> = staircase_cells(n).iter().map(|&(i, j)| i + j - 1).collect();
    let length = w.length();
    let target = w.word();
    Ok((0u64..1 << gens.len())
        .filter(|m| set == DreamSet::All || m.count_ones() as usize == length)
        .filter(|&m| &product_of_mask(&gens, m, n)[..n] == target)
        .map(|m| PipeDream::from_mask(n, m))
        .collect())
}

fn weighted_sum(w: &Permutation, dreams: &[PipeDream], flavor: Flavor) -> Result<SparsePolynomial> {
    let length = w.length();
    let mut f = SparsePolynomial::zero(w.n());
    for d in dreams {
        let extra = d.num_crosses() - length;
        let sign = match flavor {
            Flavor::Schubert if extra > 0 => continue,
            _ if extra % 2 == 0 => 1,
            _ => -1,
        };
        f.add_term(d.weight()?, sign)?;
    }
    Ok(f)
}

/// `Σ_{RPD(w)} x^wt(P)` or `Σ_{PD(w)} (-1)^{#crosses - ℓ(w)} x^wt(P)`.
pub fn pd_polynomial(w: &Permutation, flavor: Flavor) -> Result<SparsePolynomial> {
    let set = match flavor {
        Flavor::Schubert => DreamSet::Reduced,
        Flavor::Grothendieck => DreamSet::All,
    };
    weighted_sum(w, &enumerate_pipe_dreams(w, set)?, flavor)
}

/// `Σ_{P ∈ PD(w)} (-1)^{#crosses(P) - ℓ(w)}`, which equals `𝔊_w(1, ..., 1)`.
pub fn interior_euler_check(w: &Permutation) -> Result<i64> {
    let length = w.length();
    Ok(enumerate_pipe_dreams(w, DreamSet::All)?
        .iter()
        .map(|d| if (d.num_crosses() - length) % 2 == 0 { 1 } else { -1 })
        .sum())
}

/// Every pipe dream of `S_n`, bucketed by permutation in one pass.
pub struct PipeDreamAtlas {
    n: usize,
    buckets: BTreeMap<Permutation, Vec<PipeDream>>,
}

impl PipeDreamAtlas {
    pub fn build(n: usize) -> Result<Self> {
        check_guard(n)?;
        let gens: Vec<u8> = staircase_cells(n).iter().map(|&(i, j)| i + j - 1).collect();
        let mut raw: BTreeMap<[u8; ENUMERATION_LIMIT], Vec<PipeDream>> = BTreeMap::new();
        for m in 0u64..1 << gens.len() {
            raw.entry(product_of_mask(&gens, m, n))
                .or_default()
                .push(PipeDream::from_mask(n, m));
        }
        let buckets = raw
            .into_iter()
            .map(|(u, dreams)| (Permutation::new(u[..n].to_vec()).expect("Demazure product"), dreams))
            .collect();
        Ok(PipeDreamAtlas { n, buckets })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `PD(w)`, empty when `w` is outside `S_n`.
    pub fn dreams(&self, w: &Permutation) -> &[PipeDream] {
        self.buckets.get(w).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn polynomial(&self, w: &Permutation, flavor: Flavor) -> Result<SparsePolynomial> {
        weighted_sum(w, self.dreams(w), flavor)
    }

    pub fn euler_sum(&self, w: &Permutation) -> i64 {
        let length = w.length();
        self.dreams(w)
            .iter()
            .map(|d| if (d.num_crosses() - length) % 2 == 0 { 1 } else { -1 })
            .sum()
    }
}
