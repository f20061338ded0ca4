//! Direct computational check of the partition-matroid connectivity
//! bound: if P is the partition matroid on blocks X₁ ∪̇ ⋯ ∪̇ X_m, N is a
//! matroid containing the blocks, and some indices i₁,…,i_{2ℓ−1} satisfy
//! ρ_N(X_{i_j}) ≥ min(j, ℓ), then η(P ∩ N) ≥ ℓ.

use thiserror::Error;

use crate::complex::SimplicialComplex;
use crate::error::{ComplexError, MatroidError};
use crate::homology::{eta, EtaValue};
use crate::hypergraph::Hypergraph;
use crate::matroid::Matroid;
use crate::set::ElementSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LemmaError {
    #[error("ell must be at least 1")]
    EllTooSmall,
    #[error("need {needed} indices for ell = {ell}, got {got}")]
    WrongIndexCount { ell: usize, needed: usize, got: usize },
    #[error("index {0} is out of range or repeated")]
    BadIndex(usize),
    #[error(transparent)]
    Matroid(#[from] MatroidError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

/// Result of [`lemma_main_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LemmaOutcome {
    /// Hypothesis satisfied and η(P ∩ N) ≥ ℓ.
    Holds { eta: EtaValue },
    /// The rank hypothesis fails at position `j` (0-based into the index
    /// list); the lemma says nothing about such instances.
    Inapplicable { failed_at: usize },
    /// Hypothesis satisfied but η < ℓ. This would contradict the lemma:
    /// it signals an implementation bug, never a genuine counterexample.
    Violation { eta: EtaValue },
}

/// The complex of sets independent in both matroids (their intersection
/// as independence systems), as a facet list.
pub fn common_independence_complex(a: &Matroid, b: &Matroid) -> SimplicialComplex {
    assert_eq!(a.ground_size(), b.ground_size());
    let faces: Vec<ElementSet> = a
        .ground_set()
        .subsets()
        .filter(|&s| a.is_independent(s) && b.is_independent(s))
        .collect();
    SimplicialComplex::from_facets(a.ground_size(), &faces)
        .expect("faces live on the common ground")
}

/// Validates the rank hypothesis for the given index order, builds
/// P ∩ N both directly and as the independence complex of the proof's
/// obstruction hypergraph (circuits of N plus same-block pairs), asserts
/// the two agree, and compares the exact η against ℓ.
///
/// `indices` are 0-based positions into `blocks`, pairwise distinct,
/// exactly 2ℓ−1 of them. Elements of `n` outside every block are ignored
/// (the construction restricts to the union of the blocks, which changes
/// no connectivity: outside elements are loops of P).
pub fn lemma_main_check(
    blocks: &[ElementSet],
    n: &Matroid,
    ell: usize,
    indices: &[usize],
) -> Result<LemmaOutcome, LemmaError> {
    if ell < 1 {
        return Err(LemmaError::EllTooSmall);
    }
    let needed = 2 * ell - 1;
    if indices.len() != needed {
        return Err(LemmaError::WrongIndexCount {
            ell,
            needed,
            got: indices.len(),
        });
    }
    let mut seen = std::collections::HashSet::new();
    for &i in indices {
        if i >= blocks.len() || !seen.insert(i) {
            return Err(LemmaError::BadIndex(i));
        }
    }
    // Building the partition matroid validates disjointness.
    let _ = Matroid::partition(n.ground_size(), blocks)?;

    for (j, &i) in indices.iter().enumerate() {
        let required = (j + 1).min(ell);
        if n.rank(blocks[i]) < required {
            return Ok(LemmaOutcome::Inapplicable { failed_at: j });
        }
    }

    // Restrict everything to the union of the blocks.
    let union: ElementSet = blocks
        .iter()
        .fold(ElementSet::EMPTY, |acc, &b| acc.union(b));
    let keep: Vec<usize> = union.to_vec();
    let relabel: std::collections::HashMap<usize, usize> = keep
        .iter()
        .enumerate()
        .map(|(new, &old)| (old, new))
        .collect();
    let blocks_r: Vec<ElementSet> = blocks
        .iter()
        .map(|b| b.iter().map(|e| relabel[&e]).collect())
        .collect();
    let n_r = n.restrict(union)?;
    let p_r = Matroid::partition(n_r.ground_size(), &blocks_r)?;

    let direct = common_independence_complex(&p_r, &n_r);
    let via_hypergraph =
        SimplicialComplex::independence_complex(&proof_hypergraph(&blocks_r, &n_r));
    assert_eq!(
        direct, via_hypergraph,
        "facet-wise intersection and the proof's hypergraph disagree"
    );

    let value = eta(&direct)?;
    if value >= EtaValue::Finite(ell) {
        Ok(LemmaOutcome::Holds { eta: value })
    } else {
        Ok(LemmaOutcome::Violation { eta: value })
    }
}

/// The hypergraph from the lemma's proof: edges are the circuits of N
/// and the 2-element subsets lying inside one block.
fn proof_hypergraph(blocks: &[ElementSet], n: &Matroid) -> Hypergraph {
    let mut edges = n.circuits();
    for &block in blocks {
        let members = block.to_vec();
        for (i, &x) in members.iter().enumerate() {
            for &y in &members[i + 1..] {
                edges.push(ElementSet::singleton(x).with(y));
            }
        }
    }
    Hypergraph::new(n.ground_size(), &edges).expect("edges live on the ground set")
}
