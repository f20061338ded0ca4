//! Matroids, independence complexes, exact rational homology, and
//! rainbow sets in the intersection of two matroids.
//!
//! The centerpiece is the rainbow machinery: given two matroids on one
//! ground set and sets A₁…A_{2n−1} independent in both with
//! |A_i| ≥ min(i, n), a partial rainbow set of size n independent in both
//! always exists. This crate provides the exact search
//! ([`rainbow::find_rainbow`]), the homological tools the existence
//! argument rests on (η, the deletion/contraction bound, the
//! matchability criterion, the partition-matroid connectivity lemma),
//! reductions to bipartite rainbow matchings and row-Latin matrix
//! diagonals, and the tightness families showing the hypotheses are
//! sharp. Everything is exact and deterministic; homology is computed
//! over ℚ with integer-preserving elimination.

pub mod complex;
pub mod error;
pub mod homology;
pub mod hypergraph;
pub mod matroid;
pub mod rainbow;
pub mod recursion;
pub mod reductions;
pub mod reference;
pub mod set;

pub use complex::SimplicialComplex;
pub use homology::{betti, betti_vector, eta, BettiVector, EtaValue};
pub use hypergraph::Hypergraph;
pub use matroid::Matroid;
pub use rainbow::{
    find_rainbow, verify_selection, LayeredElement, LayeredGround, RainbowInstance,
    RainbowSelection,
};
pub use set::ElementSet;
