use groth_core::poly::grothendieck;
use groth_core::{Permutation, SparsePolynomial, WeightVector};

fn build(n: usize, terms: &[(i64, &[u8])]) -> SparsePolynomial {
    let terms = terms.iter().map(|&(c, e)| {
        let mut full = e.to_vec();
        full.resize(n, 0);
        (WeightVector::from_slice(&full).unwrap(), c)
    });
    SparsePolynomial::from_terms(n, terms).unwrap()
}

#[test]
fn groth_15324() {
    let expected = build(
        5,
        &[
            (1, &[0, 3, 1]),
            (1, &[1, 2, 1]),
            (1, &[1, 3, 0]),
            (1, &[2, 1, 1]),
            (1, &[2, 2, 0]),
            (1, &[3, 0, 1]),
            (1, &[3, 1, 0]),
            (-2, &[1, 3, 1]),
            (-2, &[2, 2, 1]),
            (-2, &[3, 1, 1]),
            (-1, &[2, 3, 0]),
            (-1, &[3, 2, 0]),
            (1, &[2, 3, 1]),
            (1, &[3, 2, 1]),
        ],
    );
    let g = grothendieck(&"15324".parse::<Permutation>().unwrap()).unwrap();
    assert_eq!(g.num_terms(), 14);
    assert_eq!(g, expected);
    assert_eq!(g.principal_specialization(), Ok(1));
}

#[test]
fn groth_351624() {
    let expected = build(
        6,
        &[
            (1, &[2, 3, 0, 2]),
            (1, &[2, 3, 1, 1]),
            (1, &[2, 3, 2, 0]),
            (1, &[3, 2, 0, 2]),
            (1, &[3, 2, 1, 1]),
            (1, &[3, 2, 2, 0]),
            (1, &[3, 3, 0, 1]),
            (1, &[3, 3, 1, 0]),
            (-1, &[2, 3, 1, 2]),
            (-1, &[2, 3, 2, 1]),
            (-1, &[3, 2, 1, 2]),
            (-1, &[3, 2, 2, 1]),
            (-2, &[3, 3, 0, 2]),
            (-2, &[3, 3, 2, 0]),
            (-3, &[3, 3, 1, 1]),
            (2, &[3, 3, 1, 2]),
            (2, &[3, 3, 2, 1]),
        ],
    );
    let g = grothendieck(&"351624".parse::<Permutation>().unwrap()).unwrap();
    assert_eq!(g, expected);
    assert_eq!(g.degree(), Ok(9));
    assert_eq!(g.principal_specialization(), Ok(1));
}
