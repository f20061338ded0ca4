//! Rainbow sets in the intersection of two matroids.
//!
//! A rainbow instance is a pair of matroids on one ground set, a list of
//! sets A₁…A_m independent in both, and a target n. A rainbow selection
//! picks n elements from n distinct sets (one each, all elements
//! distinct) whose union is independent in both matroids. The hypothesis
//! m = 2n−1, |A_i| ≥ min(i, n) guarantees a selection exists; tightness
//! families deliberately violate it, so the hypothesis is checked
//! separately from construction.

mod layered;
mod lemma;
mod matchability;

pub use layered::{build_complex, layered_obstruction_hypergraph, lift_matroid, LayeredGround};
pub use lemma::{common_independence_complex, lemma_main_check, LemmaError, LemmaOutcome};
pub use matchability::{
    matchability_check, matchability_hypothesis_strict, MatchabilityReport,
};

use crate::error::RainbowError;
use crate::matroid::Matroid;
use crate::set::ElementSet;

/// A (element, layer) pair; layers are 1-based like the set indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LayeredElement {
    pub element: usize,
    pub layer: usize,
}

/// The chosen pairs of a rainbow selection, sorted by layer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RainbowSelection {
    chosen: Vec<LayeredElement>,
}

impl RainbowSelection {
    pub fn new(mut chosen: Vec<LayeredElement>) -> Self {
        chosen.sort_by_key(|p| (p.layer, p.element));
        RainbowSelection { chosen }
    }

    pub fn pairs(&self) -> &[LayeredElement] {
        &self.chosen
    }

    pub fn len(&self) -> usize {
        self.chosen.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chosen.is_empty()
    }

    /// The underlying element set.
    pub fn elements(&self) -> ElementSet {
        self.chosen.iter().map(|p| p.element).collect()
    }
}

/// Upper bound on Σ|A_i| accepted by the exact search.
pub const MAX_SEARCH_CANDIDATES: usize = 48;

/// Two matroids on a common ground set, sets independent in both, and a
/// target selection size.
#[derive(Debug, Clone)]
pub struct RainbowInstance {
    matroid_m: Matroid,
    matroid_n: Matroid,
    sets: Vec<ElementSet>,
    target: usize,
}

impl RainbowInstance {
    /// Validates that every A_i is independent in both matroids. The
    /// count and sizes of the sets are deliberately unconstrained here.
    pub fn new(
        matroid_m: Matroid,
        matroid_n: Matroid,
        sets: Vec<ElementSet>,
        target: usize,
    ) -> Result<Self, RainbowError> {
        if matroid_m.ground_size() != matroid_n.ground_size() {
            return Err(RainbowError::GroundMismatch(
                matroid_m.ground_size(),
                matroid_n.ground_size(),
            ));
        }
        let ground = matroid_m.ground_set();
        for (idx, &a) in sets.iter().enumerate() {
            if !a.is_subset_of(ground) {
                return Err(RainbowError::SetOutOfRange {
                    index: idx + 1,
                    set: a,
                    ground: matroid_m.ground_size(),
                });
            }
            if !matroid_m.is_independent(a) {
                return Err(RainbowError::DependentSet {
                    index: idx + 1,
                    set: a,
                    matroid: 'M',
                });
            }
            if !matroid_n.is_independent(a) {
                return Err(RainbowError::DependentSet {
                    index: idx + 1,
                    set: a,
                    matroid: 'N',
                });
            }
        }
        Ok(RainbowInstance {
            matroid_m,
            matroid_n,
            sets,
            target,
        })
    }

    pub fn matroid_m(&self) -> &Matroid {
        &self.matroid_m
    }

    pub fn matroid_n(&self) -> &Matroid {
        &self.matroid_n
    }

    pub fn sets(&self) -> &[ElementSet] {
        &self.sets
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn ground_size(&self) -> usize {
        self.matroid_m.ground_size()
    }

    pub fn total_candidates(&self) -> usize {
        self.sets.iter().map(|a| a.len()).sum()
    }

    /// The main hypothesis: m = 2n−1 sets with |A_i| ≥ min(i, n), checked
    /// against the given ordering. Requires n ≥ 1.
    pub fn hypothesis_satisfied(&self) -> bool {
        self.target >= 1
            && self.sets.len() == 2 * self.target - 1
            && self
                .sets
                .iter()
                .enumerate()
                .all(|(idx, a)| a.len() >= (idx + 1).min(self.target))
    }

    /// The same instance with the sets stably sorted ascending by size
    /// (the ordering the tightness discussion is about).
    pub fn sorted_by_size(&self) -> RainbowInstance {
        let mut sets = self.sets.clone();
        sets.sort_by_key(|a| a.len());
        RainbowInstance {
            matroid_m: self.matroid_m.clone(),
            matroid_n: self.matroid_n.clone(),
            sets,
            target: self.target,
        }
    }
}

/// True iff the selection picks `target` pairs from pairwise distinct
/// layers, each element drawn from its layer's set, with pairwise
/// distinct elements forming a set independent in both matroids.
pub fn verify_selection(inst: &RainbowInstance, sel: &RainbowSelection) -> bool {
    if sel.len() != inst.target {
        return false;
    }
    let mut layers_seen = std::collections::HashSet::new();
    for pair in sel.pairs() {
        if pair.layer == 0 || pair.layer > inst.sets.len() {
            return false;
        }
        if !layers_seen.insert(pair.layer) {
            return false;
        }
        if !inst.sets[pair.layer - 1].contains(pair.element) {
            return false;
        }
    }
    let elements = sel.elements();
    elements.len() == sel.len()
        && inst.matroid_m.is_independent(elements)
        && inst.matroid_n.is_independent(elements)
}

/// Exact backtracking search for a rainbow selection of size `target`.
///
/// Layers are processed in increasing index and elements within a layer
/// in increasing id; the first solution in that order is returned, so
/// the output is deterministic. Two prunes keep the search exact:
/// a counting prune (picked + layers left < n) and a rank prune — if the
/// rank of chosen ∪ remaining-candidates falls below n in either matroid
/// no completion exists.
pub fn find_rainbow(inst: &RainbowInstance) -> Result<Option<RainbowSelection>, RainbowError> {
    let total = inst.total_candidates();
    if total > MAX_SEARCH_CANDIDATES {
        return Err(RainbowError::ScaleLimit {
            total,
            limit: MAX_SEARCH_CANDIDATES,
        });
    }
    if inst.target == 0 {
        return Ok(Some(RainbowSelection::new(Vec::new())));
    }

    // suffix_union[i] = union of A_i..A_m.
    let m = inst.sets.len();
    let mut suffix_union = vec![ElementSet::EMPTY; m + 1];
    for i in (0..m).rev() {
        suffix_union[i] = suffix_union[i + 1].union(inst.sets[i]);
    }

    struct Search<'a> {
        inst: &'a RainbowInstance,
        suffix_union: Vec<ElementSet>,
    }

    impl Search<'_> {
        fn run(
            &self,
            layer_idx: usize,
            chosen: ElementSet,
            picked: &mut Vec<LayeredElement>,
        ) -> bool {
            let n = self.inst.target;
            if picked.len() == n {
                return true;
            }
            let m = self.inst.sets.len();
            if layer_idx == m || picked.len() + (m - layer_idx) < n {
                return false;
            }
            let reachable = chosen.union(self.suffix_union[layer_idx]);
            if self.inst.matroid_m.rank(reachable) < n
                || self.inst.matroid_n.rank(reachable) < n
            {
                return false;
            }
            for x in self.inst.sets[layer_idx].minus(chosen).iter() {
                let next = chosen.with(x);
                if self.inst.matroid_m.is_independent(next)
                    && self.inst.matroid_n.is_independent(next)
                {
                    picked.push(LayeredElement {
                        element: x,
                        layer: layer_idx + 1,
                    });
                    if self.run(layer_idx + 1, next, picked) {
                        return true;
                    }
                    picked.pop();
                }
            }
            self.run(layer_idx + 1, chosen, picked)
        }
    }

    let search = Search {
        inst,
        suffix_union,
    };
    let mut picked = Vec::new();
    if search.run(0, ElementSet::EMPTY, &mut picked) {
        let sel = RainbowSelection::new(picked);
        debug_assert!(verify_selection(inst, &sel));
        Ok(Some(sel))
    } else {
        Ok(None)
    }
}
