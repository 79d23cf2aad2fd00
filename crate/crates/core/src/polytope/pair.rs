use alloc::vec::Vec;

use super::LatticeSet;
use crate::error::{Error, Result};
use crate::vector::WeightVector;
use crate::verdict::{ParamodularFailure, Witness};

/// Largest ground set for dense subset tables.
pub const MAX_GROUND: usize = 12;

/// A pair of set functions `y, z : 2^[n] -> ℤ`, stored as dense tables indexed by bitmask.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SetFunctionPair {
    n: usize,
    y: Vec<i64>,
    z: Vec<i64>,
}

impl SetFunctionPair {
    /// Tables must have `2^n` entries and vanish at the empty set.
    pub fn new(n: usize, y: Vec<i64>, z: Vec<i64>) -> Result<Self> {
        if n > MAX_GROUND {
            return Err(Error::TooManyVariables { n, max: MAX_GROUND });
        }
        for table in [&y, &z] {
            if table.len() != 1 << n {
                return Err(Error::SizeMismatch {
                    expected: 1 << n,
                    found: table.len(),
                });
            }
        }
        if y[0] != 0 || z[0] != 0 {
            return Err(Error::Parse("set functions must vanish on the empty set"));
        }
        Ok(SetFunctionPair { n, y, z })
    }

    pub fn from_fns(n: usize, y: impl Fn(u32) -> i64, z: impl Fn(u32) -> i64) -> Result<Self> {
        if n > MAX_GROUND {
            return Err(Error::TooManyVariables { n, max: MAX_GROUND });
        }
        let masks = 0u32..1 << n;
        Self::new(n, masks.clone().map(&y).collect(), masks.map(&z).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn y(&self, mask: u32) -> i64 {
        self.y[mask as usize]
    }

    pub fn z(&self, mask: u32) -> i64 {
        self.z[mask as usize]
    }

    /// `(mask, y, z)` for every subset, by increasing mask.
    pub fn rows(&self) -> impl Iterator<Item = (u32, i64, i64)> + '_ {
        (0u32..1 << self.n).map(|m| (m, self.y(m), self.z(m)))
    }

    /// The first violated paramodularity inequality, scanning subset pairs by mask.
    pub fn paramodular_violation(&self) -> Option<Witness> {
        let fail = |condition, first, second| {
            Some(Witness::NotParamodular {
                condition,
                first,
                second,
            })
        };
        let size = 1u32 << self.n;
        for i in 0..size {
            for j in 0..size {
                let (u, m) = (i | j, i & j);
                if self.y(i) + self.y(j) > self.y(u) + self.y(m) {
                    return fail(ParamodularFailure::LowerNotSupermodular, i, j);
                }
                if self.z(i) + self.z(j) < self.z(u) + self.z(m) {
                    return fail(ParamodularFailure::UpperNotSubmodular, i, j);
                }
                if self.z(i) - self.y(j) < self.z(i & !j) - self.y(j & !i) {
                    return fail(ParamodularFailure::CrossInequality, i, j);
                }
            }
        }
        None
    }

    pub fn is_paramodular(&self) -> bool {
        self.paramodular_violation().is_none()
    }

    /// Whether `t` satisfies `y(I) <= Σ_{i∈I} t_i <= z(I)` for every `I`.
    pub fn admits(&self, t: &WeightVector) -> bool {
        t.len() == self.n && self.rows().all(|(m, y, z)| (y..=z).contains(&t.masked_sum(m)))
    }
}

/// Tightest bounds a point set puts on its coordinate sums: `y(I) = min Σ_I a`, `z(I) = max Σ_I a`.
pub fn recover_pair(points: &LatticeSet) -> Result<SetFunctionPair> {
    if points.is_empty() {
        return Err(Error::EmptyInput);
    }
    let n = points.n();
    let sums = |m: u32| points.iter().map(move |p| p.masked_sum(m));
    SetFunctionPair::from_fns(n, |m| sums(m).min().unwrap_or(0), |m| sums(m).max().unwrap_or(0))
}

/// Integer points of `{t : y(I) <= Σ_I t <= z(I)}`.
///
/// Coordinates are assigned in order inside the box `[y({i}), z({i})]`; a
/// subset's inequality is tested as soon as its last coordinate is set.
pub fn lattice_points_of_pair(pair: &SetFunctionPair) -> Result<LatticeSet> {
    let n = pair.n();
    let mut low = Vec::with_capacity(n);
    let mut high = Vec::with_capacity(n);
    for i in 0..n {
        let (y, z) = (pair.y(1 << i), pair.z(1 << i));
        if y > z {
            return Ok(LatticeSet::empty(n));
        }
        if y < 0 {
            return Err(Error::NegativeBound { value: y });
        }
        let z = u8::try_from(z).map_err(|_| Error::ExponentOverflow)?;
        low.push(y as u8);
        high.push(z);
    }
    // subsets grouped by their highest element
    let mut closing: Vec<Vec<u32>> = alloc::vec![Vec::new(); n];
    for m in 1u32..1 << n {
        closing[31 - m.leading_zeros() as usize].push(m);
    }

    let mut out = Vec::new();
    let mut t = WeightVector::zeros(n)?;
    descend(pair, &closing, &low, &high, 0, &mut t, &mut out);
    LatticeSet::new(n, out)
}

fn descend(
    pair: &SetFunctionPair,
    closing: &[Vec<u32>],
    low: &[u8],
    high: &[u8],
    k: usize,
    t: &mut WeightVector,
    out: &mut Vec<WeightVector>,
) {
    if k == low.len() {
        out.push(*t);
        return;
    }
    for value in low[k]..=high[k] {
        t.as_mut_slice()[k] = value;
        let ok = closing[k].iter().all(|&m| {
            let s = t.masked_sum(m);
            pair.y(m) <= s && s <= pair.z(m)
        });
        if ok {
            descend(pair, closing, low, high, k + 1, t, out);
        }
    }
    t.as_mut_slice()[k] = 0;
}
