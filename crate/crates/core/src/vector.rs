use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};

/// Largest number of variables (and coordinates) a [`WeightVector`] can hold.
pub const MAX_VARS: usize = 12;

/// A nonnegative integer vector of length at most [`MAX_VARS`].
///
/// Houses exponent vectors of monomials, row weights of diagrams and
/// Rajchgot codes. The total order is the term order used throughout the
/// crate: the exponent of the last variable is compared first, then the one
/// before it, down to the first. This is the lexicographic order with
/// `x_1 < x_2 < ... < x_n`. Vectors of different lengths order by length.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct WeightVector {
    len: u8,
    entries: [u8; MAX_VARS],
}

impl WeightVector {
    pub fn zeros(n: usize) -> Result<Self> {
        if n > MAX_VARS {
            return Err(Error::TooManyVariables { n, max: MAX_VARS });
        }
        Ok(WeightVector {
            len: n as u8,
            entries: [0; MAX_VARS],
        })
    }

    pub fn from_slice(entries: &[u8]) -> Result<Self> {
        let mut v = Self::zeros(entries.len())?;
        v.entries[..entries.len()].copy_from_slice(entries);
        Ok(v)
    }

    /// Builds a vector from wider integers, rejecting negative or oversized entries.
    pub fn from_i64s(entries: &[i64]) -> Result<Self> {
        let mut v = Self::zeros(entries.len())?;
        for (slot, &e) in v.entries.iter_mut().zip(entries) {
            if e < 0 {
                return Err(Error::NegativeBound { value: e });
            }
            *slot = u8::try_from(e).map_err(|_| Error::ExponentOverflow)?;
        }
        Ok(v)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn as_slice(&self) -> &[u8] {
        &self.entries[..self.len as usize]
    }

    #[inline]
    pub fn as_mut_slice(&mut self) -> &mut [u8] {
        &mut self.entries[..self.len as usize]
    }

    /// Entry at 0-based coordinate `i`.
    #[inline]
    pub fn get(&self, i: usize) -> u8 {
        self.as_slice()[i]
    }

    /// `|v|`, the sum of the entries.
    pub fn degree(&self) -> u32 {
        self.as_slice().iter().map(|&e| e as u32).sum()
    }

    /// Componentwise `self <= other`. Both vectors must have the same length.
    #[inline]
    pub fn dominated_by(&self, other: &Self) -> bool {
        debug_assert_eq!(self.len, other.len);
        self.as_slice()
            .iter()
            .zip(other.as_slice())
            .all(|(a, b)| a <= b)
    }

    /// Componentwise `self < other` (`<=` and not equal).
    #[inline]
    pub fn strictly_dominated_by(&self, other: &Self) -> bool {
        self != other && self.dominated_by(other)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if self.len != other.len {
            return Err(Error::LengthMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        let mut out = *self;
        for (a, b) in out.as_mut_slice().iter_mut().zip(other.as_slice()) {
            *a = a.checked_add(*b).ok_or(Error::ExponentOverflow)?;
        }
        Ok(out)
    }

    /// `self + e_i` for a 0-based coordinate `i`.
    pub fn incremented(&self, i: usize) -> Result<Self> {
        let mut out = *self;
        let slot = &mut out.as_mut_slice()[i];
        *slot = slot.checked_add(1).ok_or(Error::ExponentOverflow)?;
        Ok(out)
    }

    /// `self - e_i`, or `None` when coordinate `i` is already zero.
    pub fn decremented(&self, i: usize) -> Option<Self> {
        let mut out = *self;
        let slot = &mut out.as_mut_slice()[i];
        *slot = slot.checked_sub(1)?;
        Some(out)
    }

    /// Sum of the entries whose 0-based index is a set bit of `mask`.
    pub fn masked_sum(&self, mask: u32) -> i64 {
        self.as_slice()
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &e)| e as i64)
            .sum()
    }

    /// Same entries, padded with zeros (or truncated) to length `n`.
    pub fn resized(&self, n: usize) -> Result<Self> {
        let mut out = Self::zeros(n)?;
        let k = n.min(self.len());
        out.entries[..k].copy_from_slice(&self.entries[..k]);
        Ok(out)
    }
}

impl Ord for WeightVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len.cmp(&other.len).then_with(|| {
            self.as_slice()
                .iter()
                .rev()
                .cmp(other.as_slice().iter().rev())
        })
    }
}

impl PartialOrd for WeightVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Comma-separated entries, e.g. `3,2,1,0,0`.
impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.as_slice().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", e)?;
        }
        Ok(())
    }
}

#[cfg(feature = "serde")]
impl serde::Serialize for WeightVector {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> core::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.as_slice())
    }
}
