//! Lattice-point models of Newton polytopes: Schubert matroids, paramodular
//! pairs, Minkowski sums, and the Grassmannian partition sequence.
//!
//! Every polytope here is handled through its integer points. Subsets of
//! `[n]` are `u32` bitmasks with bit `i` standing for coordinate `i + 1`.

use alloc::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::poly::SparsePolynomial;
use crate::vector::WeightVector;

mod checks;
mod grassmannian;
mod matroid;
mod pair;

pub use self::checks::{
    check_conjecture_4, check_fms, check_prop_converse, check_superset, decompose_support_point, fms_sumset,
    superset_sumset, SupersetOutcome,
};
pub use self::grassmannian::{
    check_escobar_yong, check_escobar_yong_with, dominance_leq, escobar_yong_target, grassmannian_pair,
    grassmannian_par, DominanceReading, EscobarYongOutcome, PartitionSeq,
};
pub use self::matroid::SchubertMatroid;
pub use self::pair::{lattice_points_of_pair, recover_pair, SetFunctionPair, MAX_GROUND};

/// Largest `n` for which iterated sumsets are computed.
pub const SUMSET_LIMIT: usize = 8;

/// A finite set of nonnegative integer vectors of one length.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticeSet {
    n: usize,
    points: BTreeSet<WeightVector>,
}

impl LatticeSet {
    pub fn new(n: usize, points: impl IntoIterator<Item = WeightVector>) -> Result<Self> {
        let points: BTreeSet<WeightVector> = points.into_iter().collect();
        if let Some(bad) = points.iter().find(|p| p.len() != n) {
            return Err(Error::LengthMismatch {
                left: n,
                right: bad.len(),
            });
        }
        Ok(LatticeSet { n, points })
    }

    pub fn empty(n: usize) -> Self {
        LatticeSet {
            n,
            points: BTreeSet::new(),
        }
    }

    /// `{0}` in dimension `n`.
    pub fn origin(n: usize) -> Result<Self> {
        Self::new(n, [WeightVector::zeros(n)?])
    }

    pub fn support_of(f: &SparsePolynomial) -> Self {
        LatticeSet {
            n: f.nvars(),
            points: f.terms().map(|(e, _)| *e).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, v: &WeightVector) -> bool {
        self.points.contains(v)
    }

    /// Points in term order.
    pub fn iter(&self) -> impl Iterator<Item = &WeightVector> + '_ {
        self.points.iter()
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.points.is_subset(&other.points)
    }

    /// First point of `self` outside `other`, and first point of `other` outside `self`.
    pub fn first_differences(&self, other: &Self) -> (Option<WeightVector>, Option<WeightVector>) {
        (
            self.points.difference(&other.points).next().copied(),
            other.points.difference(&self.points).next().copied(),
        )
    }

    /// Every point padded with zeros to length `n`.
    pub fn padded(&self, n: usize) -> Result<Self> {
        if n < self.n {
            return Err(Error::LengthMismatch { left: self.n, right: n });
        }
        let points = self.points.iter().map(|p| p.resized(n)).collect::<Result<_>>()?;
        Ok(LatticeSet { n, points })
    }

    /// The first `r` coordinates of every point, or `None` when some point is nonzero past `r`.
    pub fn restricted(&self, r: usize) -> Option<Self> {
        if r > self.n {
            return None;
        }
        let mut points = BTreeSet::new();
        for p in &self.points {
            if p.as_slice()[r..].iter().any(|&e| e != 0) {
                return None;
            }
            points.insert(p.resized(r).ok()?);
        }
        Some(LatticeSet { n: r, points })
    }
}

impl FromIterator<WeightVector> for LatticeSet {
    /// Panics on mixed lengths; the dimension of an empty iterator is 0.
    fn from_iter<T: IntoIterator<Item = WeightVector>>(iter: T) -> Self {
        let points: BTreeSet<WeightVector> = iter.into_iter().collect();
        let n = points.first().map_or(0, |p| p.len());
        Self::new(n, points).expect("lattice points of one length")
    }
}

/// `{a + b}`, deduplicated.
pub fn sumset(a: &LatticeSet, b: &LatticeSet) -> Result<LatticeSet> {
    if a.n != b.n {
        return Err(Error::LengthMismatch { left: a.n, right: b.n });
    }
    let mut points = BTreeSet::new();
    for p in &a.points {
        for q in &b.points {
            points.insert(p.checked_add(q)?);
        }
    }
    Ok(LatticeSet { n: a.n, points })
}
