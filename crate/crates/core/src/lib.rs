//! Exact combinatorics of Schubert and Grothendieck polynomials.
//!
//! Everything in this crate is a pure function of its inputs and only needs
//! `alloc`. File formats, the batch driver and the command line live in the
//! `groth-verify` companion crate.
//!
//! The pieces:
//!
//! - [`perm`]: permutations, Rothe diagrams, upper closures, Rajchgot codes,
//!   fireworks / Grassmannian / zero-one predicates.
//! - [`poly`]: sparse integer polynomials, divided differences and the
//!   memoized Schubert / Grothendieck tables.
//! - [`pipe`]: brute-force pipe dream enumeration, an independent route to
//!   the same polynomials.
//! - [`poset`]: componentwise vector posets, Möbius functions and the
//!   support conjecture checkers.
//! - [`polytope`]: Schubert matroids, paramodular pairs, lattice points and
//!   the Newton polytope checkers.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

mod error;
pub mod perm;
pub mod pipe;
pub mod poly;
pub mod polytope;
pub mod poset;
pub mod verdict;
mod vector;

pub use crate::error::{Error, Result};
pub use crate::perm::{Diagram, Permutation};
pub use crate::poly::{Flavor, PolynomialTable, SparsePolynomial};
pub use crate::verdict::{Verdict, Witness};
pub use crate::vector::{WeightVector, MAX_VARS};
