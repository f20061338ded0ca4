//! The layered construction behind the main theorem: the ground set V′
//! of (element, layer) pairs, the lifted matroids M′ and N′, and the
//! complex C of partial rainbow sets independent in N.

use crate::complex::SimplicialComplex;
use crate::error::MatroidError;
use crate::hypergraph::Hypergraph;
use crate::matroid::Matroid;
use crate::rainbow::LayeredElement;
use crate::set::ElementSet;

/// The layered ground set V′ = {(x, i) | x ∈ A_i}, ordered by layer then
/// element; the position of a pair in this order is its dense index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayeredGround {
    pairs: Vec<LayeredElement>,
}

impl LayeredGround {
    /// One pair per (element, layer) membership; layers are 1-based.
    pub fn new(sets: &[ElementSet]) -> Self {
        let mut pairs = Vec::new();
        for (idx, a) in sets.iter().enumerate() {
            for x in a.iter() {
                pairs.push(LayeredElement {
                    element: x,
                    layer: idx + 1,
                });
            }
        }
        LayeredGround { pairs }
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pairs(&self) -> &[LayeredElement] {
        &self.pairs
    }

    pub fn pair(&self, index: usize) -> LayeredElement {
        self.pairs[index]
    }

    pub fn index_of(&self, element: usize, layer: usize) -> Option<usize> {
        self.pairs
            .iter()
            .position(|p| p.element == element && p.layer == layer)
    }

    /// Underlying elements of a set of pair indices (with multiplicity
    /// collapsed).
    pub fn project(&self, set: ElementSet) -> ElementSet {
        set.iter().map(|i| self.pairs[i].element).collect()
    }

    fn tuples(&self) -> Vec<(usize, usize)> {
        self.pairs.iter().map(|p| (p.element, p.layer)).collect()
    }
}

/// M′ (or N′): independent sets are the pair sets with pairwise distinct
/// underlying elements whose projection is independent in the base.
/// Layers may repeat.
pub fn lift_matroid(base: &Matroid, layered: &LayeredGround) -> Result<Matroid, MatroidError> {
    base.lift(&layered.tuples())
}

/// The complex C: faces are pair sets with pairwise distinct layers AND
/// pairwise distinct elements whose projection is independent in `n`.
pub fn build_complex(n: &Matroid, layered: &LayeredGround) -> SimplicialComplex {
    // All three constraints are hereditary, so a depth-first scan over
    // pair indices enumerates exactly the faces; maximal ones survive.
    fn extend(
        n: &Matroid,
        layered: &LayeredGround,
        next: usize,
        face: ElementSet,
        elements: ElementSet,
        layers: &mut Vec<bool>,
        maximal: &mut Vec<ElementSet>,
    ) {
        if next == layered.len() {
            if !maximal.iter().any(|&m| face.is_subset_of(m)) {
                maximal.retain(|&m| !m.is_subset_of(face));
                maximal.push(face);
            }
            return;
        }
        let p = layered.pair(next);
        if !elements.contains(p.element)
            && !layers[p.layer]
            && n.is_independent(elements.with(p.element))
        {
            layers[p.layer] = true;
            extend(
                n,
                layered,
                next + 1,
                face.with(next),
                elements.with(p.element),
                layers,
                maximal,
            );
            layers[p.layer] = false;
        }
        extend(n, layered, next + 1, face, elements, layers, maximal);
    }

    let max_layer = layered.pairs().iter().map(|p| p.layer).max().unwrap_or(0);
    let mut layers = vec![false; max_layer + 1];
    let mut maximal = Vec::new();
    extend(
        n,
        layered,
        0,
        ElementSet::EMPTY,
        ElementSet::EMPTY,
        &mut layers,
        &mut maximal,
    );
    let complex = SimplicialComplex::from_facets(layered.len(), &maximal)
        .expect("faces live on the layered ground");
    debug_assert_eq!(
        complex,
        SimplicialComplex::independence_complex(&layered_obstruction_hypergraph(n, layered)),
        "direct enumeration and the obstruction hypergraph disagree"
    );
    complex
}

/// The hypergraph whose independence complex equals [`build_complex`]:
/// edges are the lifted circuits of `n` (one pair index per circuit
/// element, any layers), the same-layer pairs, and the same-element
/// pairs.
pub fn layered_obstruction_hypergraph(n: &Matroid, layered: &LayeredGround) -> Hypergraph {
    let mut edges: Vec<ElementSet> = Vec::new();
    for i in 0..layered.len() {
        for j in i + 1..layered.len() {
            let (p, q) = (layered.pair(i), layered.pair(j));
            if p.layer == q.layer || p.element == q.element {
                edges.push(ElementSet::singleton(i).with(j));
            }
        }
    }
    // positions[x] = pair indices carrying element x.
    let mut positions: Vec<Vec<usize>> = vec![Vec::new(); n.ground_size()];
    for (idx, p) in layered.pairs().iter().enumerate() {
        positions[p.element].push(idx);
    }
    for circuit in n.circuits() {
        let slots: Vec<&Vec<usize>> = circuit.iter().map(|x| &positions[x]).collect();
        if slots.iter().any(|s| s.is_empty()) {
            continue;
        }
        let mut choice = vec![0usize; slots.len()];
        'product: loop {
            let edge: ElementSet = choice
                .iter()
                .zip(&slots)
                .map(|(&c, slot)| slot[c])
                .collect();
            edges.push(edge);
            let mut k = slots.len();
            while k > 0 {
                k -= 1;
                choice[k] += 1;
                if choice[k] < slots[k].len() {
                    continue 'product;
                }
                choice[k] = 0;
            }
            break;
        }
    }
    Hypergraph::new(layered.len(), &edges).expect("edges live on the layered ground")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[usize]) -> ElementSet {
        v.iter().copied().collect()
    }

    #[test]
    fn layered_ground_examples() {
        let ground = LayeredGround::new(&[s(&[0]), s(&[0, 1])]);
        let pairs: Vec<(usize, usize)> = ground
            .pairs()
            .iter()
            .map(|p| (p.element, p.layer))
            .collect();
        assert_eq!(pairs, vec![(0, 1), (0, 2), (1, 2)]);

        assert!(LayeredGround::new(&[]).is_empty());

        let repeated = LayeredGround::new(&[s(&[0]), s(&[0])]);
        assert_eq!(repeated.len(), 2);
        assert_eq!(repeated.pair(0).element, repeated.pair(1).element);
        assert_ne!(repeated.pair(0).layer, repeated.pair(1).layer);
    }

    #[test]
    fn lift_examples() {
        let free = Matroid::free(2).unwrap();
        let one_layer = LayeredGround::new(&[s(&[0, 1])]);
        let lifted = lift_matroid(&free, &one_layer).unwrap();
        assert!(lifted.same_independence(&Matroid::free(2).unwrap()));

        let repeated = LayeredGround::new(&[s(&[0]), s(&[0])]);
        let lifted = lift_matroid(&free, &repeated).unwrap();
        assert!(!lifted.is_independent(s(&[0, 1])));

        let u31 = Matroid::uniform(3, 1).unwrap();
        let two = LayeredGround::new(&[s(&[0]), s(&[1])]);
        let lifted = lift_matroid(&u31, &two).unwrap();
        assert!(!lifted.is_independent(s(&[0, 1])));
    }

    #[test]
    fn complex_forces_distinct_layers() {
        let free = Matroid::free(2).unwrap();
        let one_layer = LayeredGround::new(&[s(&[0, 1])]);
        let c = build_complex(&free, &one_layer);
        assert_eq!(c.facets(), &[s(&[0]), s(&[1])]);

        let repeated = LayeredGround::new(&[s(&[0]), s(&[0])]);
        let c = build_complex(&free, &repeated);
        assert_eq!(c.facets(), &[s(&[0]), s(&[1])]);
    }

    #[test]
    fn complex_matches_obstruction_hypergraph() {
        let n = Matroid::from_circuits(3, &[s(&[0, 1, 2])]).unwrap();
        let layered = LayeredGround::new(&[s(&[0]), s(&[1, 2]), s(&[0, 1, 2])]);
        let direct = build_complex(&n, &layered);
        let via_h = SimplicialComplex::independence_complex(&layered_obstruction_hypergraph(
            &n, &layered,
        ));
        assert_eq!(direct, via_h);
    }

    #[test]
    fn projection_of_independent_lift_is_independent() {
        let base = Matroid::graphic(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let layered = LayeredGround::new(&[s(&[0, 1]), s(&[1, 2]), s(&[0, 3])]);
        let lifted = lift_matroid(&base, &layered).unwrap();
        for face in lifted.ground_set().subsets() {
            if lifted.is_independent(face) {
                let proj = layered.project(face);
                assert_eq!(proj.len(), face.len());
                assert!(base.is_independent(proj));
            }
        }
    }
}
