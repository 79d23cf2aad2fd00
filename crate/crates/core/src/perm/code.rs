use alloc::vec::Vec;

use super::Permutation;
use crate::error::{Error, Result};
use crate::vector::WeightVector;

/// The Rajchgot code `(r_1, ..., r_n)`.
///
/// `r_j` counts the entries of `w(j), ..., w(n)` left out of a longest
/// increasing subsequence that starts at `w(j)`. Its sum is `deg 𝔊_w`.
pub fn rajcode(w: &Permutation) -> Result<WeightVector> {
    let n = w.n();
    let word = w.word();
    // longest[j]: longest increasing subsequence of word[j..] starting at word[j]
    let mut longest = alloc::vec![1usize; n];
    for j in (0..n).rev() {
        longest[j] = 1 + (j + 1..n)
            .filter(|&k| word[k] > word[j])
            .map(|k| longest[k])
            .max()
            .unwrap_or(0);
    }
    let code: Vec<u8> = (0..n).map(|j| (n - j - longest[j]) as u8).collect();
    WeightVector::from_slice(&code)
}

/// The Rajchgot code of a fireworks permutation, read off its descents:
/// `r_n = 0` and `r_i = r_{i+1} + [w(i) > w(i+1)]`.
pub fn rajcode_fireworks(w: &Permutation) -> Result<WeightVector> {
    if !is_fireworks(w) {
        return Err(Error::NotFireworks);
    }
    let n = w.n();
    let mut code = WeightVector::zeros(n)?;
    let entries = code.as_mut_slice();
    for i in (1..n).rev() {
        entries[i - 1] = entries[i] + u8::from(!w.is_ascent(i));
    }
    Ok(code)
}

/// True when the first entries of the maximal decreasing runs increase from left to right.
pub fn is_fireworks(w: &Permutation) -> bool {
    let word = w.word();
    let initials = (0..word.len())
        .filter(|&i| i == 0 || word[i - 1] < word[i])
        .map(|i| word[i]);
    let mut last = 0;
    for v in initials {
        if v <= last {
            return false;
        }
        last = v;
    }
    true
}

/// Descent position and partition of a Grassmannian permutation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrassmannianShape {
    /// The unique descent `r` (1-based).
    pub descent: usize,
    /// `λ = (w(r) - r, ..., w(2) - 2, w(1) - 1)`, exactly `r` parts, zeros kept.
    pub partition: Vec<u32>,
}

/// The partition of `w` when `w` has exactly one descent, otherwise `None`.
pub fn grassmannian_shape(w: &Permutation) -> Option<GrassmannianShape> {
    let descents = w.descents();
    let &[r] = descents.as_slice() else {
        return None;
    };
    let partition = (1..=r).rev().map(|i| (w.at(i) - i) as u32).collect();
    Some(GrassmannianShape {
        descent: r,
        partition,
    })
}
