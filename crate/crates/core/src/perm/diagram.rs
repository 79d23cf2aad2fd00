use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::Permutation;
use crate::error::Result;
use crate::vector::WeightVector;

/// A finite set of boxes `(row, column)` in the `n × n` grid, both 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagram {
    n: usize,
    boxes: BTreeSet<(u8, u8)>,
}

impl Diagram {
    pub fn new(n: usize, boxes: impl IntoIterator<Item = (u8, u8)>) -> Self {
        let boxes: BTreeSet<_> = boxes.into_iter().collect();
        assert!(
            boxes
                .iter()
                .all(|&(i, j)| i >= 1 && j >= 1 && i as usize <= n && j as usize <= n),
            "box outside the {n}x{n} grid"
        );
        Diagram { n, boxes }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn boxes(&self) -> impl Iterator<Item = (u8, u8)> + '_ {
        self.boxes.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.boxes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boxes.is_empty()
    }

    pub fn contains(&self, row: u8, col: u8) -> bool {
        self.boxes.contains(&(row, col))
    }

    /// Rows of column `j`, ascending.
    pub fn column(&self, j: usize) -> Vec<u8> {
        self.boxes
            .iter()
            .filter(|&&(_, c)| c as usize == j)
            .map(|&(r, _)| r)
            .collect()
    }

    /// Lowest occupied row of column `j`, with `max(∅) = 0`.
    pub fn column_max(&self, j: usize) -> u8 {
        self.column(j).last().copied().unwrap_or(0)
    }

    /// Fills every nonempty column from row 1 down to its lowest box.
    pub fn upper_closure(&self) -> Diagram {
        let boxes = (1..=self.n).flat_map(|j| (1..=self.column_max(j)).map(move |i| (i, j as u8)));
        Diagram {
            n: self.n,
            boxes: boxes.collect(),
        }
    }

    /// Row counts: entry `i` is the number of boxes in row `i + 1`.
    pub fn weight(&self) -> Result<WeightVector> {
        let mut wt = WeightVector::zeros(self.n)?;
        for &(i, _) in &self.boxes {
            wt.as_mut_slice()[i as usize - 1] += 1;
        }
        Ok(wt)
    }
}

/// `D(w) = {(i, j) : i < w⁻¹(j), j < w(i)}`.
pub fn rothe_diagram(w: &Permutation) -> Diagram {
    let n = w.n();
    let inv = w.inverse();
    let mut boxes = BTreeSet::new();
    for i in 1..=n {
        for j in 1..=n {
            if i < inv.at(j) && j < w.at(i) {
                boxes.insert((i as u8, j as u8));
            }
        }
    }
    Diagram { n, boxes }
}

/// `R ≼ S`: equal sizes and the k-th smallest of `R` is at most the k-th smallest of `S`.
pub fn diagram_precedes(r: &[u8], s: &[u8]) -> bool {
    if r.len() != s.len() {
        return false;
    }
    let mut r = r.to_vec();
    let mut s = s.to_vec();
    r.sort_unstable();
    s.sort_unstable();
    r.iter().zip(&s).all(|(a, b)| a <= b)
}
