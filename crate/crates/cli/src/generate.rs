//! Seeded random instance sources for the verification campaigns.
//! Identical seed and parameters produce an identical stream.

use rand::prelude::IndexedRandom;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use rainbow_matroids_core::hypergraph::Hypergraph;
use rainbow_matroids_core::matroid::Matroid;
use rainbow_matroids_core::rainbow::RainbowInstance;
use rainbow_matroids_core::set::ElementSet;

use crate::format::{InstanceFile, MatroidSpec};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("no hypothesis-satisfying instance found after {attempts} attempts (n = {n})")]
    Infeasible { n: usize, attempts: usize },
    #[error("target n must be at least 1")]
    TargetTooSmall,
}

const MATROID_KINDS: [&str; 4] = ["uniform", "partition", "graphic", "linear"];
const DRAW_ATTEMPTS: usize = 200;

/// Draws one matroid spec of the given kind on `ground` elements with
/// rank at least `min_rank`, resampling the parameters until the rank
/// bound holds.
fn random_matroid_spec(
    rng: &mut ChaCha8Rng,
    kind: &str,
    ground: usize,
    min_rank: usize,
) -> Option<(MatroidSpec, Matroid)> {
    for _ in 0..DRAW_ATTEMPTS {
        let spec = match kind {
            "uniform" => MatroidSpec::Uniform {
                k: rng.random_range(min_rank..=ground),
            },
            "partition" => {
                let block_count = rng.random_range(min_rank..=ground);
                let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); block_count];
                for e in 0..ground {
                    // A small chance of leaving an element out (a loop).
                    if rng.random_range(0..8) == 0 {
                        continue;
                    }
                    blocks[rng.random_range(0..block_count)].push(e);
                }
                blocks.retain(|b| !b.is_empty());
                MatroidSpec::Partition { blocks }
            }
            "graphic" => {
                let vertices = rng.random_range((min_rank + 1).min(6)..=6);
                let edges: Vec<(usize, usize)> = (0..ground)
                    .map(|_| (rng.random_range(0..vertices), rng.random_range(0..vertices)))
                    .collect();
                MatroidSpec::Graphic { vertices, edges }
            }
            "linear" => {
                let prime = *[2u64, 3].choose(rng).unwrap();
                let dim = rng.random_range(min_rank..=min_rank + 2);
                let columns: Vec<Vec<u64>> = (0..ground)
                    .map(|_| (0..dim).map(|_| rng.random_range(0..prime)).collect())
                    .collect();
                MatroidSpec::Linear { prime, columns }
            }
            other => unreachable!("unknown kind {other}"),
        };
        if let Ok(m) = spec.build(ground) {
            if m.rank_full() >= min_rank {
                return Some((spec, m));
            }
        }
    }
    None
}

/// A common independent set of size `n`, greedily grown along a random
/// permutation; None if this permutation stalls early.
fn greedy_common_independent(
    rng: &mut ChaCha8Rng,
    m: &Matroid,
    n_mat: &Matroid,
    size: usize,
) -> Option<ElementSet> {
    let mut order: Vec<usize> = (0..m.ground_size()).collect();
    order.shuffle(rng);
    let mut chosen = ElementSet::EMPTY;
    for e in order {
        if chosen.len() == size {
            break;
        }
        let next = chosen.with(e);
        if m.is_independent(next) && n_mat.is_independent(next) {
            chosen = next;
        }
    }
    (chosen.len() >= size).then_some(chosen)
}

/// Draws a random hypothesis-satisfying instance: matroid kinds and
/// parameters from the seeded stream, m = 2n−1 sets with
/// |A_i| ≥ min(i, n), every set independent in both matroids. Reports
/// infeasibility instead of silently skipping a draw.
pub fn gen_random_instance(
    rng: &mut ChaCha8Rng,
    n: usize,
) -> Result<(InstanceFile, RainbowInstance), GenError> {
    if n == 0 {
        return Err(GenError::TargetTooSmall);
    }
    for _ in 0..DRAW_ATTEMPTS {
        let kind_m = *MATROID_KINDS.choose(rng).unwrap();
        let kind_n = *MATROID_KINDS.choose(rng).unwrap();
        let ground_cap = if kind_m == "linear" || kind_n == "linear" {
            6
        } else if n == 2 {
            8
        } else {
            n * 3 + 1
        };
        let ground_floor = (n + 2).min(ground_cap);
        let ground = rng.random_range(ground_floor..=ground_cap);

        let Some((spec_m, m)) = random_matroid_spec(rng, kind_m, ground, n) else {
            continue;
        };
        let Some((spec_n, n_mat)) = random_matroid_spec(rng, kind_n, ground, n) else {
            continue;
        };
        // A common independent n-set must exist for the hypothesis to be
        // satisfiable at all; it doubles as a fallback source below.
        let Some(core) = (0..8).find_map(|_| greedy_common_independent(rng, &m, &n_mat, n))
        else {
            continue;
        };

        let mut sets = Vec::with_capacity(2 * n - 1);
        let mut ok = true;
        for i in 1..=2 * n - 1 {
            let want = i.min(n) + usize::from(rng.random_range(0..3) == 0);
            let want = want.min(n + 1);
            let grown = (0..4).find_map(|_| greedy_common_independent(rng, &m, &n_mat, want));
            let set = match grown {
                Some(s) => s,
                None => {
                    // Fall back to a subset of the known common n-set.
                    let size = i.min(n);
                    let mut elems = core.to_vec();
                    elems.shuffle(rng);
                    elems.truncate(size);
                    elems.into_iter().collect()
                }
            };
            if set.len() < i.min(n) {
                ok = false;
                break;
            }
            sets.push(set);
        }
        if !ok {
            continue;
        }

        let file = InstanceFile {
            ground,
            matroid_m: spec_m,
            matroid_n: spec_n,
            sets: sets.iter().map(|s| s.to_vec()).collect(),
            target: n,
        };
        let instance = RainbowInstance::new(m, n_mat, sets, n)
            .expect("generated sets are independent in both matroids");
        debug_assert!(instance.hypothesis_satisfied());
        return Ok((file, instance));
    }
    Err(GenError::Infeasible {
        n,
        attempts: DRAW_ATTEMPTS,
    })
}

/// A random hypergraph on at most `max_ground` vertices together with a
/// pivot edge that contains no other edge. Edges are nonempty; the pivot
/// is drawn uniformly from the inclusion-minimal edges.
pub fn gen_hypergraph_with_pivot(
    rng: &mut ChaCha8Rng,
    max_ground: usize,
) -> (Hypergraph, ElementSet) {
    loop {
        let ground = rng.random_range(1..=max_ground);
        let full = ElementSet::full(ground).bits();
        let edge_count = rng.random_range(1..=2 * ground);
        let edges: Vec<ElementSet> = (0..edge_count)
            .map(|_| ElementSet::from_bits(rng.random_range(1..=full)))
            .collect();
        let h = Hypergraph::new(ground, &edges).expect("edges drawn inside the ground");
        let minimal = h.minimal_edges();
        if minimal.is_empty() {
            continue;
        }
        let pivot = minimal[rng.random_range(0..minimal.len())];
        return (h, pivot);
    }
}

/// Random partition blocks over a ground of total size at most
/// `max_total`, plus a matroid for the lemma campaign: free, a single
/// random circuit, uniform, or linear over GF(2).
pub fn gen_lemma_instance(
    rng: &mut ChaCha8Rng,
    max_total: usize,
) -> (Vec<ElementSet>, Matroid) {
    let total = rng.random_range(1..=max_total);
    let block_count = rng.random_range(1..=total);
    let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); block_count];
    for e in 0..total {
        blocks[rng.random_range(0..block_count)].push(e);
    }
    blocks.retain(|b| !b.is_empty());
    let blocks: Vec<ElementSet> = blocks
        .iter()
        .map(|b| b.iter().copied().collect())
        .collect();

    let n = match rng.random_range(0..4) {
        0 => Matroid::free(total).unwrap(),
        1 => {
            // One random circuit of size >= 1.
            let size = rng.random_range(1..=total);
            let mut elems: Vec<usize> = (0..total).collect();
            elems.shuffle(rng);
            elems.truncate(size);
            let circuit: ElementSet = elems.into_iter().collect();
            Matroid::from_circuits(total, &[circuit]).unwrap()
        }
        2 => Matroid::uniform(total, rng.random_range(0..=total)).unwrap(),
        _ => {
            let dim = rng.random_range(1..=3);
            let columns: Vec<Vec<u64>> = (0..total)
                .map(|_| (0..dim).map(|_| rng.random_range(0..2)).collect())
                .collect();
            Matroid::linear(2, &columns).unwrap()
        }
    };
    (blocks, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn instances_are_reproducible() {
        let mut a = ChaCha8Rng::seed_from_u64(7);
        let mut b = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let (fa, _) = gen_random_instance(&mut a, 2).unwrap();
            let (fb, _) = gen_random_instance(&mut b, 2).unwrap();
            assert_eq!(fa, fb);
        }
    }

    #[test]
    fn generated_instances_satisfy_the_hypothesis() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        for n in [1, 2, 3] {
            for _ in 0..30 {
                let (file, inst) = gen_random_instance(&mut rng, n).unwrap();
                assert!(inst.hypothesis_satisfied());
                assert_eq!(file.sets.len(), 2 * n - 1);
                // The file round-trips through the parser.
                let parsed = crate::format::parse_instance(&file.serialize()).unwrap();
                assert_eq!(parsed, file);
            }
        }
    }

    #[test]
    fn hypergraph_pivots_are_minimal() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let (h, e) = gen_hypergraph_with_pivot(&mut rng, 6);
            assert!(h.has_edge(e));
            assert!(!e.is_empty());
            assert!(h.edges().iter().all(|&f| f == e || !f.is_subset_of(e)));
        }
    }
}
