//! Shared instance builders for the benchmarks.

use rainbow_matroids_core::complex::SimplicialComplex;
use rainbow_matroids_core::hypergraph::Hypergraph;
use rainbow_matroids_core::rainbow::RainbowInstance;
use rainbow_matroids_core::reductions::{gen_cycle_tightness, matchings_to_instance};
use rainbow_matroids_core::set::ElementSet;

/// The independence complex of the cycle graph C_n.
pub fn cycle_independence_complex(n: usize) -> SimplicialComplex {
    let edges: Vec<ElementSet> = (0..n)
        .map(|i| [i, (i + 1) % n].into_iter().collect())
        .collect();
    let h = Hypergraph::new(n, &edges).expect("cycle edges fit the ground");
    SimplicialComplex::independence_complex(&h)
}

/// The unsolvable cycle tightness instance (2n−2 matchings on C_{2n}).
pub fn cycle_tightness_instance(n: usize) -> RainbowInstance {
    let (graph, matchings) = gen_cycle_tightness(n).expect("n >= 2");
    matchings_to_instance(&graph, &matchings, n).expect("matchings are matchings")
}
