//! Simplicial complexes stored as facet lists, and the independence
//! complex of a hypergraph.

use crate::error::ComplexError;
use crate::hypergraph::Hypergraph;
use crate::set::{ElementSet, MAX_GROUND};

/// Hard cap on the number of faces any operation will enumerate.
pub const MAX_FACES: usize = 1 << 20;

/// A simplicial complex on a dense 0-based ground set, stored as its
/// inclusion-maximal faces.
///
/// The void complex (no faces at all) and the complex `{∅}` (one empty
/// face) are distinct: the former has an empty facet list, the latter has
/// the single facet ∅.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    ground: usize,
    facets: Vec<ElementSet>,
}

impl SimplicialComplex {
    /// Builds a complex from a list of generating faces; non-maximal
    /// entries are dropped. An empty list yields the void complex.
    pub fn from_facets(ground: usize, faces: &[ElementSet]) -> Result<Self, ComplexError> {
        if ground > MAX_GROUND {
            return Err(ComplexError::GroundTooLarge(ground));
        }
        let full = ElementSet::full(ground);
        for &f in faces {
            if !f.is_subset_of(full) {
                return Err(ComplexError::FacetOutOfRange { facet: f, ground });
            }
        }
        let mut facets: Vec<ElementSet> = faces
            .iter()
            .copied()
            .filter(|&f| !faces.iter().any(|&g| f != g && f.is_subset_of(g)))
            .collect();
        facets.sort_by(|a, b| a.cmp_graded(*b));
        facets.dedup();
        Ok(SimplicialComplex { ground, facets })
    }

    /// The void complex: no faces, not even the empty one.
    pub fn void(ground: usize) -> Self {
        SimplicialComplex {
            ground,
            facets: Vec::new(),
        }
    }

    /// The full simplex on `ground` vertices.
    pub fn full_simplex(ground: usize) -> Result<Self, ComplexError> {
        SimplicialComplex::from_facets(ground, &[ElementSet::full(ground)])
    }

    /// The independence complex I(H): faces are the sets containing no
    /// edge of H. If H has the empty edge, the complex is void.
    pub fn independence_complex(h: &Hypergraph) -> Self {
        let mut maximal: Vec<ElementSet> = Vec::new();
        // Depth-first over elements, branching on inclusion, pruning as
        // soon as an edge is complete; collects maximal independent sets.
        fn extend(
            h: &Hypergraph,
            next: usize,
            current: ElementSet,
            maximal: &mut Vec<ElementSet>,
        ) {
            if next == h.ground_size() {
                if !maximal.iter().any(|&m| current.is_subset_of(m)) {
                    maximal.retain(|&m| !m.is_subset_of(current));
                    maximal.push(current);
                }
                return;
            }
            let with = current.with(next);
            if h.is_independent(with) {
                extend(h, next + 1, with, maximal);
            }
            extend(h, next + 1, current, maximal);
        }
        if !h.is_independent(ElementSet::EMPTY) {
            return SimplicialComplex::void(h.ground_size());
        }
        extend(h, 0, ElementSet::EMPTY, &mut maximal);
        let mut facets = maximal;
        facets.sort_by(|a, b| a.cmp_graded(*b));
        SimplicialComplex {
            ground: h.ground_size(),
            facets,
        }
    }

    pub fn ground_size(&self) -> usize {
        self.ground
    }

    pub fn ground_set(&self) -> ElementSet {
        ElementSet::full(self.ground)
    }

    /// Inclusion-maximal faces in graded lexicographic order.
    pub fn facets(&self) -> &[ElementSet] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Dimension: largest face size minus one; −1 for `{∅}`. The void
    /// complex returns None.
    pub fn dimension(&self) -> Option<isize> {
        self.facets
            .iter()
            .map(|f| f.len() as isize - 1)
            .max()
    }

    pub fn is_face(&self, set: ElementSet) -> bool {
        self.facets.iter().any(|&f| set.is_subset_of(f))
    }

    /// Vertices that belong to at least one face.
    pub fn vertices(&self) -> ElementSet {
        self.facets
            .iter()
            .fold(ElementSet::EMPTY, |acc, &f| acc.union(f))
    }

    /// All faces, grouped by dimension: entry `d` lists the faces of
    /// size `d + 1`, each list in ascending mask order. Entry for the
    /// empty face is implicit (present iff the complex is nonvoid).
    pub fn faces_by_dimension(&self) -> Result<Vec<Vec<ElementSet>>, ComplexError> {
        if self.is_void() {
            return Ok(Vec::new());
        }
        let dim = self.dimension().unwrap();
        if dim < 0 {
            return Ok(Vec::new());
        }
        let mut seen: std::collections::HashSet<u64> = std::collections::HashSet::new();
        let mut total = 1usize; // the empty face
        for &facet in &self.facets {
            for sub in facet.subsets() {
                if !sub.is_empty() && seen.insert(sub.bits()) {
                    total += 1;
                    if total > MAX_FACES {
                        return Err(ComplexError::TooManyFaces { limit: MAX_FACES });
                    }
                }
            }
        }
        let mut by_dim: Vec<Vec<ElementSet>> = vec![Vec::new(); (dim + 1) as usize];
        for bits in seen {
            let f = ElementSet::from_bits(bits);
            by_dim[f.len() - 1].push(f);
        }
        for level in &mut by_dim {
            level.sort();
        }
        Ok(by_dim)
    }

    /// Total number of faces including the empty face.
    pub fn face_count(&self) -> Result<usize, ComplexError> {
        if self.is_void() {
            return Ok(0);
        }
        Ok(self.faces_by_dimension()?.iter().map(|l| l.len()).sum::<usize>() + 1)
    }

    /// C|S: faces of C contained in S.
    pub fn restrict(&self, set: ElementSet) -> SimplicialComplex {
        let faces: Vec<ElementSet> = self.facets.iter().map(|&f| f.intersect(set)).collect();
        SimplicialComplex::from_facets(self.ground, &faces)
            .expect("restriction stays inside the ground set")
    }

    /// A vertex contained in every facet, if one exists (the smallest).
    /// Such a complex is a cone, hence contractible.
    pub fn cone_apex(&self) -> Option<usize> {
        if self.is_void() {
            return None;
        }
        let common = self
            .facets
            .iter()
            .fold(self.ground_set(), |acc, &f| acc.intersect(f));
        common.min_element()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[usize]) -> ElementSet {
        v.iter().copied().collect()
    }

    #[test]
    fn independence_complex_examples() {
        let edgeless = Hypergraph::edgeless(3).unwrap();
        let c = SimplicialComplex::independence_complex(&edgeless);
        assert_eq!(c.facets(), &[s(&[0, 1, 2])]);

        let four_cycle =
            Hypergraph::new(4, &[s(&[0, 1]), s(&[1, 2]), s(&[2, 3]), s(&[3, 0])]).unwrap();
        let c = SimplicialComplex::independence_complex(&four_cycle);
        assert_eq!(c.facets(), &[s(&[0, 2]), s(&[1, 3])]);

        let with_empty_edge = Hypergraph::new(3, &[ElementSet::EMPTY]).unwrap();
        let c = SimplicialComplex::independence_complex(&with_empty_edge);
        assert!(c.is_void());
    }

    #[test]
    fn path_complex_after_deletion() {
        let four_cycle =
            Hypergraph::new(4, &[s(&[0, 1]), s(&[1, 2]), s(&[2, 3]), s(&[3, 0])]).unwrap();
        let h = four_cycle.delete_edge(s(&[0, 1])).unwrap();
        let c = SimplicialComplex::independence_complex(&h);
        assert_eq!(c.facets(), &[s(&[0, 1]), s(&[0, 2]), s(&[1, 3])]);
    }

    #[test]
    fn faces_by_dimension_counts() {
        let c = SimplicialComplex::full_simplex(3).unwrap();
        let by_dim = c.faces_by_dimension().unwrap();
        assert_eq!(by_dim.len(), 3);
        assert_eq!(by_dim[0].len(), 3);
        assert_eq!(by_dim[1].len(), 3);
        assert_eq!(by_dim[2].len(), 1);
        assert_eq!(c.face_count().unwrap(), 8);

        assert_eq!(SimplicialComplex::void(3).face_count().unwrap(), 0);
        let empty_only = SimplicialComplex::from_facets(3, &[ElementSet::EMPTY]).unwrap();
        assert_eq!(empty_only.face_count().unwrap(), 1);
        assert_eq!(empty_only.dimension(), Some(-1));
    }

    #[test]
    fn restrict_examples() {
        let c = SimplicialComplex::from_facets(4, &[s(&[0, 2]), s(&[1, 3])]).unwrap();
        assert_eq!(c.restrict(c.ground_set()), c);

        let r = c.restrict(ElementSet::EMPTY);
        assert_eq!(r.facets(), &[ElementSet::EMPTY]);
        assert!(!r.is_void());

        let r = c.restrict(s(&[0, 1, 2]));
        assert_eq!(r.facets(), &[s(&[1]), s(&[0, 2])]);

        assert!(SimplicialComplex::void(4).restrict(s(&[0])).is_void());
    }

    #[test]
    fn cone_apex_examples() {
        let full = SimplicialComplex::full_simplex(3).unwrap();
        assert_eq!(full.cone_apex(), Some(0));

        let c = SimplicialComplex::from_facets(4, &[s(&[0, 2]), s(&[1, 3])]).unwrap();
        assert_eq!(c.cone_apex(), None);

        let c = SimplicialComplex::from_facets(3, &[s(&[0, 1]), s(&[0, 2])]).unwrap();
        assert_eq!(c.cone_apex(), Some(0));

        let empty_only = SimplicialComplex::from_facets(1, &[ElementSet::EMPTY]).unwrap();
        assert_eq!(empty_only.cone_apex(), None);
    }

    #[test]
    fn is_face_uses_downward_closure() {
        let c = SimplicialComplex::from_facets(4, &[s(&[0, 1, 2])]).unwrap();
        assert!(c.is_face(s(&[0, 2])));
        assert!(c.is_face(ElementSet::EMPTY));
        assert!(!c.is_face(s(&[0, 3])));
        assert!(!SimplicialComplex::void(4).is_face(ElementSet::EMPTY));
    }
}
