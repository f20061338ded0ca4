//! Reference implementations used as independent oracles by the test
//! suites: deliberately naive, no shared machinery with the optimized
//! paths they validate.
//!
//! The homology oracle builds dense boundary matrices from scratch and
//! ranks them by plain Gauss-Jordan over arbitrary-precision rationals —
//! no fraction-free tricks, no cone fast path, no early exit. The
//! rainbow oracle enumerates every layer-injective selection outright.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::complex::SimplicialComplex;
use crate::homology::EtaValue;
use crate::matroid::Matroid;
use crate::rainbow::{RainbowInstance, RainbowSelection};
use crate::set::ElementSet;

/// dim H̃_k over ℚ by dense rational elimination.
pub fn betti_by_rational_elimination(complex: &SimplicialComplex, k: isize) -> usize {
    if complex.is_void() || k < -1 {
        return 0;
    }
    let faces = all_faces(complex);
    let level = |d: isize| -> Vec<ElementSet> {
        let mut v: Vec<ElementSet> = faces
            .iter()
            .copied()
            .filter(|f| f.len() as isize == d + 1)
            .collect();
        v.sort();
        v
    };
    let this = level(k);
    if this.is_empty() {
        return 0;
    }
    let below = level(k - 1);
    let above = level(k + 1);
    let rank_down = rational_rank(&boundary_matrix(&below, &this));
    let rank_up = rational_rank(&boundary_matrix(&this, &above));
    this.len() - rank_down - rank_up
}

/// η by scanning k upward with the dense Betti computation; no cone
/// shortcut, no shared rank cache.
pub fn eta_by_rational_elimination(complex: &SimplicialComplex) -> EtaValue {
    if complex.is_void() {
        return EtaValue::Finite(0);
    }
    let dim = complex.dimension().unwrap_or(-1);
    for k in 0..=(dim + 2) {
        if betti_by_rational_elimination(complex, k - 1) != 0 {
            return EtaValue::Finite(k as usize);
        }
    }
    EtaValue::Infinite
}

fn all_faces(complex: &SimplicialComplex) -> Vec<ElementSet> {
    complex
        .ground_set()
        .subsets()
        .filter(|&s| complex.is_face(s))
        .collect()
}

/// Rows indexed by `lower`, columns by `upper`; the boundary of an upper
/// face hits each one-element deletion with alternating sign. An empty
/// `lower` level at k = −1 means the empty-face row (the augmentation).
fn boundary_matrix(lower: &[ElementSet], upper: &[ElementSet]) -> Vec<Vec<BigRational>> {
    let mut matrix = vec![vec![BigRational::zero(); upper.len()]; lower.len()];
    for (j, &face) in upper.iter().enumerate() {
        for (pos, v) in face.iter().enumerate() {
            let sub = face.without(v);
            if let Some(i) = lower.iter().position(|&f| f == sub) {
                let sign = if pos % 2 == 0 {
                    BigRational::one()
                } else {
                    -BigRational::one()
                };
                matrix[i][j] = sign;
            }
        }
    }
    matrix
}

/// Plain Gauss-Jordan rank with exact rational division.
fn rational_rank(matrix: &[Vec<BigRational>]) -> usize {
    if matrix.is_empty() || matrix[0].is_empty() {
        return 0;
    }
    let mut m: Vec<Vec<BigRational>> = matrix.to_vec();
    let (rows, cols) = (m.len(), m[0].len());
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let p = m[rank][col].clone();
        for c in 0..cols {
            m[rank][c] = &m[rank][c] / &p;
        }
        for r in 0..rows {
            if r != rank && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in 0..cols {
                    let delta = &factor * &m[rank][c];
                    m[r][c] = &m[r][c] - &delta;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Counts every valid rainbow selection of the target size by exhausting
/// all layer subsets and all element assignments, with the full validity
/// check applied at the end of each assignment. No pruning.
pub fn count_rainbow_selections(inst: &RainbowInstance) -> usize {
    let n = inst.target();
    let sets = inst.sets();
    let mut count = 0;
    let mut layers: Vec<usize> = Vec::new();
    enumerate_layer_subsets(sets.len(), n, 0, &mut layers, &mut |chosen_layers| {
        let mut assignment: Vec<usize> = Vec::new();
        assign_elements(inst, chosen_layers, 0, &mut assignment, &mut count);
    });
    count
}

fn enumerate_layer_subsets(
    m: usize,
    n: usize,
    start: usize,
    current: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]),
) {
    if current.len() == n {
        visit(current);
        return;
    }
    for layer in start..m {
        current.push(layer);
        enumerate_layer_subsets(m, n, layer + 1, current, visit);
        current.pop();
    }
}

fn assign_elements(
    inst: &RainbowInstance,
    layers: &[usize],
    idx: usize,
    assignment: &mut Vec<usize>,
    count: &mut usize,
) {
    if idx == layers.len() {
        let pairs: Vec<crate::rainbow::LayeredElement> = layers
            .iter()
            .zip(assignment.iter())
            .map(|(&l, &x)| crate::rainbow::LayeredElement {
                element: x,
                layer: l + 1,
            })
            .collect();
        let sel = RainbowSelection::new(pairs);
        if crate::rainbow::verify_selection(inst, &sel) {
            *count += 1;
        }
        return;
    }
    for x in inst.sets()[layers[idx]].iter() {
        assignment.push(x);
        assign_elements(inst, layers, idx + 1, assignment, count);
        assignment.pop();
    }
}

/// The quotient M.S by its defining property: e ⊆ S such that e ∪ f is
/// independent for every independent f disjoint from S. Returned in the
/// dense coordinates of S (ascending order of its elements).
pub fn quotient_family_by_definition(m: &Matroid, s: ElementSet) -> Vec<ElementSet> {
    let keep: Vec<usize> = s.to_vec();
    let position: std::collections::HashMap<usize, usize> = keep
        .iter()
        .enumerate()
        .map(|(new, &old)| (old, new))
        .collect();
    let outside = m.ground_set().minus(s);
    let independents_outside: Vec<ElementSet> = outside
        .subsets()
        .filter(|&f| m.is_independent(f))
        .collect();
    s.subsets()
        .filter(|&e| {
            independents_outside
                .iter()
                .all(|&f| m.is_independent(e.union(f)))
        })
        .map(|e| e.iter().map(|x| position[&x]).collect())
        .collect()
}
