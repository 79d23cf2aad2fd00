//! Permutations in one-line notation and the structures read off them.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

mod code;
mod diagram;
mod pattern;

pub use self::code::{grassmannian_shape, is_fireworks, rajcode, rajcode_fireworks, GrassmannianShape};
pub use self::diagram::{diagram_precedes, rothe_diagram, Diagram};
pub use self::pattern::{contains_pattern, is_zero_one, ZERO_ONE_PATTERNS};

/// A permutation of `1..=n` stored as its one-line word `w(1) w(2) ... w(n)`.
///
/// Permutations act on the right: `w.times_generator(j)` swaps the entries in
/// positions `j` and `j + 1`. The ambient `n` is part of the value, so `21`
/// and `213` are different permutations; use [`Permutation::embed`] to move
/// from `S_n` to `S_{n+1}`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    word: Vec<u8>,
}

impl Permutation {
    pub fn new(word: Vec<u8>) -> Result<Self> {
        let n = word.len();
        if n == 0 {
            return Err(Error::NotAPermutation {
                n,
                detail: "empty word",
            });
        }
        if n > u8::MAX as usize {
            return Err(Error::NotAPermutation {
                n,
                detail: "too many letters",
            });
        }
        let mut seen = alloc::vec![false; n];
        for &v in &word {
            if v == 0 || v as usize > n {
                return Err(Error::NotAPermutation {
                    n,
                    detail: "value out of range",
                });
            }
            if core::mem::replace(&mut seen[v as usize - 1], true) {
                return Err(Error::NotAPermutation {
                    n,
                    detail: "repeated value",
                });
            }
        }
        Ok(Permutation { word })
    }

    pub fn identity(n: usize) -> Self {
        assert!((1..=u8::MAX as usize).contains(&n));
        Permutation {
            word: (1..=n as u8).collect(),
        }
    }

    /// The longest permutation `w_0 = n (n-1) ... 1`.
    pub fn longest(n: usize) -> Self {
        assert!((1..=u8::MAX as usize).contains(&n));
        Permutation {
            word: (1..=n as u8).rev().collect(),
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.word.len()
    }

    #[inline]
    pub fn word(&self) -> &[u8] {
        &self.word
    }

    /// `w(i)` for a 1-based position `i`.
    #[inline]
    pub fn at(&self, i: usize) -> usize {
        self.word[i - 1] as usize
    }

    /// Number of inversions, `ℓ(w)`.
    pub fn length(&self) -> usize {
        let w = &self.word;
        (0..w.len())
            .map(|i| w[i + 1..].iter().filter(|&&b| b < w[i]).count())
            .sum()
    }

    pub fn inverse(&self) -> Self {
        let mut inv = alloc::vec![0u8; self.n()];
        for (i, &v) in self.word.iter().enumerate() {
            inv[v as usize - 1] = i as u8 + 1;
        }
        Permutation { word: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.word.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    pub fn is_longest(&self) -> bool {
        let n = self.n();
        self.word.iter().enumerate().all(|(i, &v)| v as usize == n - i)
    }

    /// `w·s_j`: the word with positions `j` and `j + 1` (1-based) swapped.
    pub fn times_generator(&self, j: usize) -> Self {
        assert!(j >= 1 && j < self.n(), "generator s_{} outside S_{}", j, self.n());
        let mut word = self.word.clone();
        word.swap(j - 1, j);
        Permutation { word }
    }

    /// True when `w(j) < w(j+1)` (1-based `j`).
    #[inline]
    pub fn is_ascent(&self, j: usize) -> bool {
        self.word[j - 1] < self.word[j]
    }

    /// 1-based positions `j` with `w(j) > w(j+1)`.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.n()).filter(|&j| !self.is_ascent(j)).collect()
    }

    /// The image of `w` under `S_n ↪ S_{n+1}` (append the fixed point `n + 1`).
    pub fn embed(&self) -> Self {
        let mut word = self.word.clone();
        word.push(self.n() as u8 + 1);
        Permutation { word }
    }

    /// All of `S_n` in lexicographic order of the one-line word.
    pub fn all(n: usize) -> AllPermutations {
        AllPermutations {
            next: Some(Permutation::identity(n)),
        }
    }

    /// Lexicographic successor, or `None` for `w_0`.
    pub fn next_lexicographic(&self) -> Option<Self> {
        let mut w = self.word.clone();
        let i = (0..w.len().saturating_sub(1)).rev().find(|&i| w[i] < w[i + 1])?;
        let j = (i + 1..w.len()).rev().find(|&j| w[j] > w[i])?;
        w.swap(i, j);
        w[i + 1..].reverse();
        Some(Permutation { word: w })
    }
}

/// Iterator over `S_n` in lexicographic order.
pub struct AllPermutations {
    next: Option<Permutation>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        self.next = current.next_lexicographic();
        Some(current)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({})", self)
    }
}

/// Comma-separated one-line notation, e.g. `2,6,7,4,1,9,8,5,3`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.word.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", v)?;
        }
        Ok(())
    }
}

/// Accepts the comma form (`1,5,3,2,4`) or, for `n <= 9`, contiguous digits (`15324`).
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty input"));
        }
        let word = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<u8>().map_err(|_| Error::Parse("bad entry")))
                .collect::<Result<Vec<_>>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as u8)
                        .ok_or(Error::Parse("expected digits"))
                })
                .collect::<Result<Vec<_>>>()?
        };
        Permutation::new(word)
    }
}

#[cfg(feature = "serde")]
impl serde::Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> core::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[cfg(test)]
pub(crate) fn p(s: &str) -> Permutation {
    s.parse().unwrap()
}
