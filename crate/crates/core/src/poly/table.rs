use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::{divided_difference, isobaric_divided_difference, SparsePolynomial};
use crate::error::{Error, Result};
use crate::perm::{rajcode, Permutation};
use crate::verdict::{Verdict, Witness};

/// Which recursion a [`PolynomialTable`] runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub enum Flavor {
    /// `𝔖_w = ∂_j 𝔖_{w s_j}`.
    Schubert,
    /// `𝔊_w = ∂̄_j 𝔊_{w s_j}`.
    Grothendieck,
}

impl Flavor {
    pub fn tag(self) -> char {
        match self {
            Flavor::Schubert => 'S',
            Flavor::Grothendieck => 'G',
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        match tag {
            "S" => Some(Flavor::Schubert),
            "G" => Some(Flavor::Grothendieck),
            _ => None,
        }
    }

    fn step(self, f: &SparsePolynomial, j: usize) -> Result<SparsePolynomial> {
        match self {
            Flavor::Schubert => divided_difference(f, j),
            Flavor::Grothendieck => isobaric_divided_difference(f, j),
        }
    }
}

/// Memoized Schubert or Grothendieck polynomials for permutations of one fixed `S_n`.
///
/// Entries are filled from `w_0` downward in weak order: the polynomial of
/// `w` is one divided difference away from that of `w s_j`, where `j` is the
/// first ascent of `w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolynomialTable {
    n: usize,
    flavor: Flavor,
    polys: BTreeMap<Permutation, SparsePolynomial>,
    steps: usize,
}

impl PolynomialTable {
    pub fn new(n: usize, flavor: Flavor) -> Self {
        PolynomialTable {
            n,
            flavor,
            polys: BTreeMap::new(),
            steps: 0,
        }
    }

    /// Every polynomial in `S_n`, in one sweep by decreasing length.
    pub fn build(n: usize, flavor: Flavor) -> Result<Self> {
        let mut table = Self::new(n, flavor);
        let mut perms: Vec<Permutation> = Permutation::all(n).collect();
        perms.sort_by_key(|w| core::cmp::Reverse(w.length()));
        for w in &perms {
            table.get_or_compute(w)?;
        }
        Ok(table)
    }

    /// Rebuilds a table from previously computed entries without checking them.
    pub fn from_entries(
        n: usize,
        flavor: Flavor,
        entries: impl IntoIterator<Item = (Permutation, SparsePolynomial)>,
    ) -> Result<Self> {
        let mut table = Self::new(n, flavor);
        for (w, f) in entries {
            if w.n() != n {
                return Err(Error::SizeMismatch {
                    expected: n,
                    found: w.n(),
                });
            }
            if f.nvars() != n {
                return Err(Error::LengthMismatch {
                    left: n,
                    right: f.nvars(),
                });
            }
            table.polys.insert(w, f);
        }
        Ok(table)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    /// Number of divided differences this table has evaluated.
    pub fn steps(&self) -> usize {
        self.steps
    }

    pub fn get(&self, w: &Permutation) -> Option<&SparsePolynomial> {
        self.polys.get(w)
    }

    /// Entries ordered by one-line word.
    pub fn iter(&self) -> impl Iterator<Item = (&Permutation, &SparsePolynomial)> {
        self.polys.iter()
    }

    /// The polynomial of `w`, computing the missing part of an ascent chain up to a known entry.
    pub fn get_or_compute(&mut self, w: &Permutation) -> Result<&SparsePolynomial> {
        if w.n() != self.n {
            return Err(Error::SizeMismatch {
                expected: self.n,
                found: w.n(),
            });
        }
        // climb until a cached permutation or w_0, remembering the generators used
        let mut chain = Vec::new();
        let mut top = w.clone();
        while !self.polys.contains_key(&top) && !top.is_longest() {
            let j = (1..self.n).find(|&j| top.is_ascent(j)).expect("non-longest permutation has an ascent");
            top = top.times_generator(j);
            chain.push(j);
        }
        let mut current = match self.polys.get(&top) {
            Some(f) => f.clone(),
            None => {
                let f = SparsePolynomial::staircase(self.n)?;
                self.polys.insert(top.clone(), f.clone());
                f
            }
        };
        for &j in chain.iter().rev() {
            top = top.times_generator(j);
            current = self.flavor.step(&current, j)?;
            self.steps += 1;
            self.polys.insert(top.clone(), current.clone());
        }
        Ok(&self.polys[w])
    }
}

/// `𝔖_w`, through a scratch table.
pub fn schubert(w: &Permutation) -> Result<SparsePolynomial> {
    PolynomialTable::new(w.n(), Flavor::Schubert).get_or_compute(w).cloned()
}

/// `𝔊_w`, through a scratch table.
pub fn grothendieck(w: &Permutation) -> Result<SparsePolynomial> {
    PolynomialTable::new(w.n(), Flavor::Grothendieck)
        .get_or_compute(w)
        .cloned()
}

/// `deg 𝔊_w = |rajcode(w)|` and the leading exponent of `𝔊_w` is `rajcode(w)`.
pub fn check_leading_term(w: &Permutation, groth: &SparsePolynomial) -> Result<Verdict> {
    let code = rajcode(w)?;
    let degree = groth.degree()?;
    if degree != code.degree() {
        return Ok(Verdict::Fail(Witness::DegreeMismatch {
            expected: code.degree(),
            found: degree,
        }));
    }
    let lead = *groth.leading_exponent().ok_or(Error::ZeroPolynomial)?;
    if lead != code {
        return Ok(Verdict::Fail(Witness::LeadingTerm {
            expected: code,
            found: lead,
        }));
    }
    Ok(Verdict::Pass)
}
