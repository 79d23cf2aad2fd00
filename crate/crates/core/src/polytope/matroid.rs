use alloc::vec::Vec;

use super::LatticeSet;
use crate::error::{Error, Result};
use crate::vector::{WeightVector, MAX_VARS};

/// The Schubert matroid `SM_n(s_1, ..., s_r)`: its bases are the `r`-subsets
/// `a_1 < ... < a_r` with `a_k <= s_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SchubertMatroid {
    n: usize,
    column: Vec<u8>,
}

impl SchubertMatroid {
    /// `column` holds 1-based elements of `[n]`; order and repeats are ignored.
    pub fn new(n: usize, column: impl IntoIterator<Item = u8>) -> Result<Self> {
        if n > MAX_VARS {
            return Err(Error::TooManyVariables { n, max: MAX_VARS });
        }
        let mut column: Vec<u8> = column.into_iter().collect();
        column.sort_unstable();
        column.dedup();
        if let Some(&bad) = column.iter().find(|&&s| s == 0 || s as usize > n) {
            return Err(Error::IndexOutOfRange { index: bad as usize, n });
        }
        Ok(SchubertMatroid { n, column })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn column(&self) -> &[u8] {
        &self.column
    }

    pub fn rank(&self) -> usize {
        self.column.len()
    }

    fn is_basis(&self, mask: u32) -> bool {
        if mask.count_ones() as usize != self.column.len() {
            return false;
        }
        let elements = (0..self.n as u8).filter(|i| mask & (1 << i) != 0).map(|i| i + 1);
        elements.zip(&self.column).all(|(a, &s)| a <= s)
    }

    /// Bases as bitmasks, increasing.
    pub fn bases(&self) -> Vec<u32> {
        (0u32..1 << self.n).filter(|&m| self.is_basis(m)).collect()
    }

    /// `r(A) = max #(A ∩ B)` over bases `B`.
    pub fn rank_of(&self, mask: u32) -> usize {
        self.bases()
            .into_iter()
            .map(|b| (b & mask).count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    /// Sets containing a basis, as bitmasks.
    pub fn spanning_sets(&self) -> Vec<u32> {
        let bases = self.bases();
        (0u32..1 << self.n)
            .filter(|&m| bases.iter().any(|&b| b & m == b))
            .collect()
    }

    /// Indicator vectors of the bases.
    pub fn base_points(&self) -> LatticeSet {
        self.indicators(&self.bases())
    }

    /// Indicator vectors of the spanning sets.
    pub fn spanning_points(&self) -> LatticeSet {
        self.indicators(&self.spanning_sets())
    }

    fn indicators(&self, masks: &[u32]) -> LatticeSet {
        let points = masks.iter().map(|&m| indicator(self.n, m));
        LatticeSet::new(self.n, points).expect("indicators have length n")
    }
}

pub(crate) fn indicator(n: usize, mask: u32) -> WeightVector {
    let mut v = WeightVector::zeros(n).expect("n within MAX_VARS");
    for (i, e) in v.as_mut_slice().iter_mut().enumerate() {
        *e = u8::from(mask & (1 << i) != 0);
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::tests::v;
    use crate::polytope::{lattice_points_of_pair, SetFunctionPair};

    #[test]
    fn bases_examples() {
        assert_eq!(SchubertMatroid::new(2, [1]).unwrap().bases(), [0b01]);
        assert_eq!(SchubertMatroid::new(4, []).unwrap().bases(), [0]);
        assert_eq!(SchubertMatroid::new(3, [2, 3]).unwrap().bases(), [0b011, 0b101, 0b110]);
        assert!(SchubertMatroid::new(3, [4]).is_err());
    }

    #[test]
    fn rank_examples() {
        let m = SchubertMatroid::new(3, [2, 3]).unwrap();
        assert_eq!(m.rank_of(0), 0);
        assert_eq!(m.rank_of(0b111), 2);
        assert_eq!(m.rank_of(0b100), 1);
        // {1,2} is forced to rank 1 in SM_3({1,3})
        assert_eq!(SchubertMatroid::new(3, [1, 3]).unwrap().rank_of(0b110), 1);
    }

    #[test]
    fn point_examples() {
        assert_eq!(SchubertMatroid::new(1, [1]).unwrap().spanning_points(), LatticeSet::new(1, [v(&[1])]).unwrap());
        assert_eq!(
            SchubertMatroid::new(2, [1]).unwrap().spanning_points(),
            LatticeSet::new(2, [v(&[1, 0]), v(&[1, 1])]).unwrap()
        );
        assert_eq!(
            SchubertMatroid::new(3, [2, 3]).unwrap().base_points(),
            LatticeSet::new(3, [v(&[1, 1, 0]), v(&[1, 0, 1]), v(&[0, 1, 1])]).unwrap()
        );
    }

    fn all_matroids(n: usize) -> impl Iterator<Item = SchubertMatroid> {
        (0u32..1 << n).map(move |s| SchubertMatroid::new(n, (0..n as u8).filter(|i| s & (1 << i) != 0).map(|i| i + 1)).unwrap())
    }

    #[test]
    fn basis_exchange_and_submodular_rank() {
        for n in 1..=5 {
            for m in all_matroids(n) {
                let bases = m.bases();
                assert!(!bases.is_empty());
                for &a in &bases {
                    for &b in &bases {
                        for x in (0..n).map(|i| 1u32 << i).filter(|x| a & !b & x != 0) {
                            let exchanged = (0..n)
                                .map(|i| 1u32 << i)
                                .filter(|y| b & !a & y != 0)
                                .any(|y| bases.contains(&(a & !x | y)));
                            assert!(exchanged, "{:?}", m);
                        }
                    }
                }
                let full = (1u32 << n) - 1;
                assert_eq!(m.rank_of(full), m.rank());
                for i in 0..=full {
                    for j in 0..=full {
                        assert!(m.rank_of(i) + m.rank_of(j) >= m.rank_of(i | j) + m.rank_of(i & j));
                    }
                }
            }
        }
    }

    #[test]
    fn points_match_polytope_descriptions() {
        for n in 1..=4 {
            let full = (1u32 << n) - 1;
            for m in all_matroids(n) {
                let r = |mask: u32| m.rank_of(mask) as i64;
                // base polytope: Σ_I t <= r(I), equality on the ground set
                let base = SetFunctionPair::from_fns(
                    n,
                    |i| r(full) - r(full & !i),
                    |i| r(i),
                )
                .unwrap();
                assert_eq!(lattice_points_of_pair(&base).unwrap(), m.base_points(), "{:?}", m);
                // spanning-set polytope: r(E) - r(E - I) <= Σ_I t <= #I
                let spanning = SetFunctionPair::from_fns(
                    n,
                    |i| r(full) - r(full & !i),
                    |i| i.count_ones() as i64,
                )
                .unwrap();
                assert_eq!(lattice_points_of_pair(&spanning).unwrap(), m.spanning_points(), "{:?}", m);
                assert!(m.base_points().is_subset(&m.spanning_points()));
            }
        }
    }
}
