//! Hypergraphs and the operations the deletion/contraction recursion
//! needs: edge deletion, contraction of a vertex set, and edge-set
//! intersection.

use crate::error::HypergraphError;
use crate::set::{ElementSet, MAX_GROUND};

/// A hypergraph: a ground set `{0, ..., n-1}` and a family of edges.
///
/// The edge family is kept exactly as given (after deduplication); in
/// particular contraction does not minimalize the result, matching the
/// set-theoretic definition of H/S. An empty edge is legal and makes the
/// independence complex void.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    ground: usize,
    edges: Vec<ElementSet>,
}

impl Hypergraph {
    pub fn new(ground: usize, edges: &[ElementSet]) -> Result<Self, HypergraphError> {
        if ground > MAX_GROUND {
            return Err(HypergraphError::GroundTooLarge(ground));
        }
        let full = ElementSet::full(ground);
        for &e in edges {
            if !e.is_subset_of(full) {
                return Err(HypergraphError::EdgeOutOfRange { edge: e, ground });
            }
        }
        let mut edges = edges.to_vec();
        edges.sort_by(|a, b| a.cmp_graded(*b));
        edges.dedup();
        Ok(Hypergraph { ground, edges })
    }

    pub fn edgeless(ground: usize) -> Result<Self, HypergraphError> {
        Hypergraph::new(ground, &[])
    }

    pub fn ground_size(&self) -> usize {
        self.ground
    }

    pub fn ground_set(&self) -> ElementSet {
        ElementSet::full(self.ground)
    }

    /// Edges in graded lexicographic order.
    pub fn edges(&self) -> &[ElementSet] {
        &self.edges
    }

    pub fn has_edge(&self, e: ElementSet) -> bool {
        self.edges.contains(&e)
    }

    /// A set is independent iff it contains no edge.
    pub fn is_independent(&self, set: ElementSet) -> bool {
        self.edges.iter().all(|e| !e.is_subset_of(set))
    }

    /// H − e: removes one edge.
    pub fn delete_edge(&self, e: ElementSet) -> Result<Self, HypergraphError> {
        if !self.has_edge(e) {
            return Err(HypergraphError::MissingEdge(e));
        }
        let edges: Vec<ElementSet> = self.edges.iter().copied().filter(|&f| f != e).collect();
        Ok(Hypergraph {
            ground: self.ground,
            edges,
        })
    }

    /// H/S: the ground set shrinks by S (survivors relabeled densely in
    /// ascending order), and each edge not inside S becomes e \ S.
    /// Duplicates collapse; non-minimal edges are kept.
    pub fn contract(&self, set: ElementSet) -> Result<Self, HypergraphError> {
        if !set.is_subset_of(self.ground_set()) {
            return Err(HypergraphError::NotASubset {
                set,
                ground: self.ground,
            });
        }
        let survivors: Vec<usize> = self.ground_set().minus(set).to_vec();
        let relabel: std::collections::HashMap<usize, usize> = survivors
            .iter()
            .enumerate()
            .map(|(new, &old)| (old, new))
            .collect();
        let edges: Vec<ElementSet> = self
            .edges
            .iter()
            .filter(|e| !e.is_subset_of(set))
            .map(|e| e.minus(set).iter().map(|v| relabel[&v]).collect())
            .collect();
        Hypergraph::new(survivors.len(), &edges)
    }

    /// H₁ ∩ H₂: same ground set, intersection of the edge families.
    pub fn intersect(&self, other: &Hypergraph) -> Result<Self, HypergraphError> {
        if self.ground != other.ground {
            return Err(HypergraphError::GroundMismatch(self.ground, other.ground));
        }
        let edges: Vec<ElementSet> = self
            .edges
            .iter()
            .copied()
            .filter(|e| other.has_edge(*e))
            .collect();
        Ok(Hypergraph {
            ground: self.ground,
            edges,
        })
    }

    /// Edges that contain no other edge (the legal pivots for the
    /// deletion/contraction recursion).
    pub fn minimal_edges(&self) -> Vec<ElementSet> {
        self.edges
            .iter()
            .copied()
            .filter(|&e| {
                self.edges
                    .iter()
                    .all(|&f| f == e || !f.is_subset_of(e))
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[usize]) -> ElementSet {
        v.iter().copied().collect()
    }

    fn four_cycle() -> Hypergraph {
        Hypergraph::new(4, &[s(&[0, 1]), s(&[1, 2]), s(&[2, 3]), s(&[3, 0])]).unwrap()
    }

    #[test]
    fn delete_edge_examples() {
        let h = Hypergraph::new(4, &[s(&[0, 1]), s(&[2, 3])]).unwrap();
        let d = h.delete_edge(s(&[0, 1])).unwrap();
        assert_eq!(d.edges(), &[s(&[2, 3])]);

        let lone = Hypergraph::new(2, &[s(&[0, 1])]).unwrap();
        let d = lone.delete_edge(s(&[0, 1])).unwrap();
        assert!(d.edges().is_empty());

        assert!(matches!(
            h.delete_edge(s(&[1, 2])),
            Err(HypergraphError::MissingEdge(_))
        ));
    }

    #[test]
    fn contract_examples() {
        let h = four_cycle();
        assert_eq!(h.contract(ElementSet::EMPTY).unwrap(), h);

        // Contracting {0,1}: survivors {2,3} relabel to {0,1}.
        let c = h.contract(s(&[0, 1])).unwrap();
        assert_eq!(c.ground_size(), 2);
        assert_eq!(c.edges(), &[s(&[0]), s(&[1]), s(&[0, 1])]);

        // An edge inside S disappears entirely.
        let h = Hypergraph::new(2, &[s(&[0, 1])]).unwrap();
        let c = h.contract(s(&[0, 1])).unwrap();
        assert_eq!(c.ground_size(), 0);
        assert!(c.edges().is_empty());
        assert!(c.is_independent(ElementSet::EMPTY));
    }

    #[test]
    fn intersect_examples() {
        let h = four_cycle();
        assert_eq!(h.intersect(&h).unwrap(), h);

        let h1 = Hypergraph::new(4, &[s(&[0, 1]), s(&[1, 2])]).unwrap();
        let h2 = Hypergraph::new(4, &[s(&[1, 2]), s(&[2, 3])]).unwrap();
        assert_eq!(h1.intersect(&h2).unwrap().edges(), &[s(&[1, 2])]);

        let h3 = Hypergraph::new(4, &[s(&[0, 3])]).unwrap();
        assert!(h1.intersect(&h3).unwrap().edges().is_empty());

        let other = Hypergraph::edgeless(3).unwrap();
        assert!(h1.intersect(&other).is_err());
    }

    #[test]
    fn minimal_edges_filters_supersets() {
        let h = Hypergraph::new(4, &[s(&[0]), s(&[0, 1]), s(&[2, 3])]).unwrap();
        assert_eq!(h.minimal_edges(), vec![s(&[0]), s(&[2, 3])]);
    }
}
