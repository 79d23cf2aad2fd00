//! Line-oriented text forms for polynomials, lattice sets, set-function pairs and Hasse diagrams.

use std::fmt::Write as _;

use groth_core::polytope::{LatticeSet, SetFunctionPair};
use groth_core::poset::Element;
use groth_core::{Permutation, SparsePolynomial, WeightVector};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormatError {
    #[error("bad term `{0}`: expected coeff:e1,...,en")]
    Term(String),
    #[error("bad exponent vector `{0}`")]
    Vector(String),
    #[error("term `{term}` has {found} exponents, expected {expected}")]
    Arity { term: String, expected: usize, found: usize },
    #[error("zero coefficient in term `{0}`")]
    ZeroCoefficient(String),
    #[error("exponent {0} listed twice")]
    Duplicate(String),
    #[error(transparent)]
    Engine(#[from] groth_core::Error),
}

/// `coeff:e1,...,en` terms joined by `;` in ascending term order; the zero polynomial is `0`.
pub fn polynomial_to_text(f: &SparsePolynomial) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (e, c)) in f.terms().enumerate() {
        if i > 0 {
            out.push(';');
        }
        write!(out, "{c}:{e}").expect("writing to a String");
    }
    out
}

/// Parses [`polynomial_to_text`] output. Rejects zero coefficients and repeated exponents.
pub fn polynomial_from_text(s: &str, nvars: usize) -> Result<SparsePolynomial, FormatError> {
    let s = s.trim();
    let mut f = SparsePolynomial::zero(nvars);
    if s == "0" {
        return Ok(f);
    }
    for term in s.split(';') {
        let (c, e) = term.split_once(':').ok_or_else(|| FormatError::Term(term.to_string()))?;
        let c: i64 = c.trim().parse().map_err(|_| FormatError::Term(term.to_string()))?;
        if c == 0 {
            return Err(FormatError::ZeroCoefficient(term.to_string()));
        }
        let e = vector_from_text(e)?;
        if e.len() != nvars {
            return Err(FormatError::Arity {
                term: term.to_string(),
                expected: nvars,
                found: e.len(),
            });
        }
        if f.contains(&e) {
            return Err(FormatError::Duplicate(e.to_string()));
        }
        f.add_term(e, c)?;
    }
    Ok(f)
}

/// A comma-separated vector such as `3,2,1,0`.
pub fn vector_from_text(s: &str) -> Result<WeightVector, FormatError> {
    let entries = s
        .trim()
        .split(',')
        .map(|t| t.trim().parse::<u8>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| FormatError::Vector(s.to_string()))?;
    Ok(WeightVector::from_slice(&entries)?)
}

/// Contiguous digits for `n <= 9`, the comma form otherwise.
pub fn one_line(w: &Permutation) -> String {
    if w.n() <= 9 {
        w.word().iter().map(|d| char::from(b'0' + d)).collect()
    } else {
        w.to_string()
    }
}

/// One vector per line.
pub fn lattice_set_to_text(set: &LatticeSet) -> String {
    set.iter().map(|v| format!("{v}\n")).collect()
}

/// One `bitmask y z` line per subset, by increasing mask.
pub fn pair_to_text(pair: &SetFunctionPair) -> String {
    pair.rows().map(|(m, y, z)| format!("{m:#b} {y} {z}\n")).collect()
}

/// One `a -> b` line per cover relation; the adjoined minimum prints as `bottom`.
pub fn hasse_to_text(covers: &[(Element, Element)]) -> String {
    let name = |e: &Element| match e {
        Element::Bottom => "bottom".to_string(),
        Element::Vector(v) => v.to_string(),
    };
    covers.iter().map(|(a, b)| format!("{} -> {}\n", name(a), name(b))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use groth_core::poly::grothendieck;

    #[test]
    fn polynomial_roundtrip() {
        let g = grothendieck(&"132".parse().unwrap()).unwrap();
        let text = polynomial_to_text(&g);
        assert_eq!(text, "1:1,0,0;1:0,1,0;-1:1,1,0");
        assert_eq!(polynomial_from_text(&text, 3).unwrap(), g);
        let zero = SparsePolynomial::zero(2);
        assert_eq!(polynomial_from_text(&polynomial_to_text(&zero), 2).unwrap(), zero);
    }

    #[test]
    fn polynomial_parse_errors() {
        assert!(matches!(polynomial_from_text("1:1,0", 3), Err(FormatError::Arity { .. })));
        assert!(matches!(polynomial_from_text("0:1,0", 2), Err(FormatError::ZeroCoefficient(_))));
        assert!(matches!(polynomial_from_text("1:1,0;2:1,0", 2), Err(FormatError::Duplicate(_))));
        assert!(matches!(polynomial_from_text("1;1,0", 2), Err(FormatError::Term(_))));
        assert!(matches!(polynomial_from_text("1:a,0", 2), Err(FormatError::Vector(_))));
    }

    #[test]
    fn one_line_words() {
        assert_eq!(one_line(&"15324".parse().unwrap()), "15324");
        let long = Permutation::new((1..=10).rev().collect()).unwrap();
        assert_eq!(one_line(&long), "10,9,8,7,6,5,4,3,2,1");
    }

    #[test]
    fn dumps() {
        let v = |e: &[u8]| WeightVector::from_slice(e).unwrap();
        let set = LatticeSet::new(2, [v(&[1, 0]), v(&[0, 1])]).unwrap();
        assert_eq!(lattice_set_to_text(&set), "1,0\n0,1\n");
        let pair = groth_core::polytope::recover_pair(&set).unwrap();
        assert_eq!(pair_to_text(&pair), "0b0 0 0\n0b1 0 1\n0b10 0 1\n0b11 1 1\n");
        let covers = [(Element::Bottom, Element::Vector(v(&[1, 0])))];
        assert_eq!(hasse_to_text(&covers), "bottom -> 1,0\n");
    }
}
