//! Finite sets of integer vectors under componentwise order, their Möbius
//! functions, and the checkers for the support conjectures.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::vector::WeightVector;

mod conjectures;

pub use self::conjectures::{
    build_pw, check_conjecture_1, check_conjecture_2, check_conjecture_3, check_conjecture_coeff,
    check_conjecture_mobius,
};

/// Componentwise `α <= β`.
pub fn componentwise_leq(alpha: &WeightVector, beta: &WeightVector) -> Result<bool> {
    if alpha.len() != beta.len() {
        return Err(Error::LengthMismatch {
            left: alpha.len(),
            right: beta.len(),
        });
    }
    Ok(alpha.dominated_by(beta))
}

/// A poset element: the adjoined minimum `0̂` or a vector.
///
/// `0̂` is kept apart from the zero vector, which is a genuine element of
/// some posets (the identity permutation's `P_w`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Element {
    Bottom,
    Vector(WeightVector),
}

/// Distinct vectors of one length under componentwise order, optionally with `0̂` below all of them.
///
/// Elements are stored in a linear extension: by total degree, then by the
/// term order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorPoset {
    elements: Vec<WeightVector>,
    has_bottom: bool,
}

impl VectorPoset {
    pub fn new(elements: impl IntoIterator<Item = WeightVector>, has_bottom: bool) -> Result<Self> {
        let set: BTreeSet<WeightVector> = elements.into_iter().collect();
        let mut elements: Vec<WeightVector> = set.into_iter().collect();
        if let Some(first) = elements.first() {
            let n = first.len();
            if let Some(bad) = elements.iter().find(|v| v.len() != n) {
                return Err(Error::LengthMismatch {
                    left: n,
                    right: bad.len(),
                });
            }
        }
        elements.sort_by_key(|v| (v.degree(), *v));
        Ok(VectorPoset {
            elements,
            has_bottom,
        })
    }

    /// Vectors in linear-extension order (excludes `0̂`).
    pub fn elements(&self) -> &[WeightVector] {
        &self.elements
    }

    pub fn has_bottom(&self) -> bool {
        self.has_bottom
    }

    /// Number of vectors, not counting `0̂`.
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, v: &WeightVector) -> bool {
        self.elements.binary_search_by_key(&(v.degree(), *v), |e| (e.degree(), *e)).is_ok()
    }

    /// Cover relations `a ⋖ b` of the Hasse diagram, including covers of `0̂`.
    pub fn covers(&self) -> Vec<(Element, Element)> {
        let els = &self.elements;
        let mut out = Vec::new();
        for (bi, b) in els.iter().enumerate() {
            let below: Vec<&WeightVector> = els[..bi].iter().filter(|a| a.strictly_dominated_by(b)).collect();
            if self.has_bottom && below.is_empty() {
                out.push((Element::Bottom, Element::Vector(*b)));
            }
            for a in &below {
                if !below.iter().any(|c| a.strictly_dominated_by(c)) {
                    out.push((Element::Vector(**a), Element::Vector(*b)));
                }
            }
        }
        out.sort();
        out
    }

    /// Vectors with no strict upper bound in the poset.
    pub fn maximal_elements(&self) -> Vec<WeightVector> {
        let els = &self.elements;
        els.iter()
            .enumerate()
            .filter(|(i, a)| !els[i + 1..].iter().any(|b| a.strictly_dominated_by(b)))
            .map(|(_, a)| *a)
            .collect()
    }

    /// `μ(0̂, q)` for every element `q`.
    pub fn mobius(&self) -> Result<MobiusTable> {
        if !self.has_bottom {
            return Err(Error::MissingBottom);
        }
        let mut values: Vec<i64> = Vec::with_capacity(self.elements.len());
        for (qi, q) in self.elements.iter().enumerate() {
            // μ(0̂,0̂) = 1 plus everything strictly between
            let partial = self.elements[..qi]
                .iter()
                .zip(&values)
                .filter(|(r, _)| r.strictly_dominated_by(q))
                .try_fold(1i64, |acc, (_, &m)| acc.checked_add(m))
                .ok_or(Error::CoefficientOverflow)?;
            values.push(-partial);
        }
        Ok(MobiusTable {
            values: self.elements.iter().copied().zip(values).collect(),
        })
    }
}

/// `μ(0̂, ·)` on a poset with adjoined bottom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MobiusTable {
    values: BTreeMap<WeightVector, i64>,
}

impl MobiusTable {
    pub fn get(&self, element: &Element) -> Option<i64> {
        match element {
            Element::Bottom => Some(1),
            Element::Vector(v) => self.values.get(v).copied(),
        }
    }

    /// `μ(0̂, v)`, or `None` when `v` is not in the poset.
    pub fn at(&self, v: &WeightVector) -> Option<i64> {
        self.values.get(v).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&WeightVector, i64)> {
        self.values.iter().map(|(v, &m)| (v, m))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(e: &[u8]) -> WeightVector {
        WeightVector::from_slice(e).unwrap()
    }

    #[test]
    fn leq_examples() {
        assert_eq!(componentwise_leq(&v(&[0, 0]), &v(&[1, 0])), Ok(true));
        assert_eq!(componentwise_leq(&v(&[1, 0]), &v(&[0, 1])), Ok(false));
        assert_eq!(componentwise_leq(&v(&[0, 1]), &v(&[1, 0])), Ok(false));
        assert_eq!(componentwise_leq(&v(&[3, 2, 1, 0, 0]), &v(&[3, 3, 1, 0, 0])), Ok(true));
        assert!(componentwise_leq(&v(&[1]), &v(&[1, 0])).is_err());
    }

    #[test]
    fn covers_of_chain_and_antichain() {
        let chain = VectorPoset::new([v(&[2]), v(&[0]), v(&[1])], false).unwrap();
        assert_eq!(chain.covers(), [
            (Element::Vector(v(&[0])), Element::Vector(v(&[1]))),
            (Element::Vector(v(&[1])), Element::Vector(v(&[2])))
        ]);
        let anti = VectorPoset::new([v(&[1, 0]), v(&[0, 1])], false).unwrap();
        assert!(anti.covers().is_empty());
        assert_eq!(anti.maximal_elements().len(), 2);
    }

    #[test]
    fn mobius_chain_and_diamond() {
        let chain = VectorPoset::new([v(&[1]), v(&[2])], true).unwrap();
        let mu = chain.mobius().unwrap();
        assert_eq!(mu.get(&Element::Bottom), Some(1));
        assert_eq!(mu.at(&v(&[1])), Some(-1));
        assert_eq!(mu.at(&v(&[2])), Some(0));

        let diamond = VectorPoset::new([v(&[1, 0]), v(&[0, 1]), v(&[1, 1])], true).unwrap();
        let mu = diamond.mobius().unwrap();
        assert_eq!(mu.at(&v(&[1, 1])), Some(1));
        assert_eq!(mu.at(&v(&[2, 2])), None);
    }

    #[test]
    fn mobius_needs_bottom() {
        let p = VectorPoset::new([v(&[1])], false).unwrap();
        assert_eq!(p.mobius(), Err(Error::MissingBottom));
    }

    #[test]
    fn mixed_lengths_rejected() {
        assert!(VectorPoset::new([v(&[1]), v(&[1, 0])], false).is_err());
    }

    #[test]
    fn mobius_sums_vanish_on_boxes() {
        // the full box [0,2]^3 with 0̂ adjoined
        let pts: Vec<_> = (0..27u8).map(|k| v(&[k % 3, (k / 3) % 3, k / 9])).collect();
        let p = VectorPoset::new(pts, true).unwrap();
        let mu = p.mobius().unwrap();
        for q in p.elements() {
            let s: i64 = 1 + mu.iter().filter(|(r, _)| r.dominated_by(q)).map(|(_, m)| m).sum::<i64>();
            assert_eq!(s, 0);
        }
    }
}
