//! Cross-module invariants: matroid laws on randomized realizations,
//! homology properties, the deletion/contraction bound, certificate
//! soundness, and search/oracle agreement.

use proptest::prelude::*;

use rainbow_matroids_core::complex::SimplicialComplex;
use rainbow_matroids_core::homology::{betti, betti_vector, eta, EtaValue};
use rainbow_matroids_core::hypergraph::Hypergraph;
use rainbow_matroids_core::matroid::{check_matroid_axioms, Matroid};
use rainbow_matroids_core::rainbow::{
    build_complex, find_rainbow, layered_obstruction_hypergraph, lift_matroid,
    matchability_check, verify_selection, LayeredGround, RainbowInstance,
};
use rainbow_matroids_core::recursion::{
    eta_lower_bound_certificate, eta_recursion_check, replay_certificate,
};
use rainbow_matroids_core::reference;
use rainbow_matroids_core::set::ElementSet;

fn mask_to_set(bits: u64, ground: usize) -> ElementSet {
    ElementSet::from_bits(bits).intersect(ElementSet::full(ground))
}

/// A matroid on exactly `ground` elements, drawn from all realizations.
fn arb_matroid_on(ground: usize) -> BoxedStrategy<Matroid> {
    let uniform = (0..=ground).prop_map(move |k| Matroid::uniform(ground, k).unwrap());
    let partition = proptest::collection::vec(0..5usize, ground).prop_map(move |assign| {
        let mut blocks: Vec<ElementSet> = vec![ElementSet::EMPTY; 4];
        for (e, &b) in assign.iter().enumerate() {
            if b < 4 {
                blocks[b] = blocks[b].with(e);
            }
        }
        let blocks: Vec<ElementSet> = blocks.into_iter().filter(|b| !b.is_empty()).collect();
        Matroid::partition(ground, &blocks).unwrap()
    });
    let graphic = (2..=4usize)
        .prop_flat_map(move |vertices| {
            proptest::collection::vec((0..vertices, 0..vertices), ground)
                .prop_map(move |edges| Matroid::graphic(vertices, &edges).unwrap())
        })
        .boxed();
    let linear = (prop_oneof![Just(2u64), Just(3u64)], 1..=3usize)
        .prop_flat_map(move |(p, dim)| {
            proptest::collection::vec(proptest::collection::vec(0..p, dim), ground)
                .prop_map(move |cols| Matroid::linear(p, &cols).unwrap())
        })
        .boxed();
    prop_oneof![uniform.boxed(), partition.boxed(), graphic, linear].boxed()
}

fn arb_matroid() -> BoxedStrategy<Matroid> {
    (1..=6usize).prop_flat_map(arb_matroid_on).boxed()
}

fn arb_hypergraph() -> BoxedStrategy<Hypergraph> {
    (1..=6usize)
        .prop_flat_map(|ground| {
            let full = (1u64 << ground) - 1;
            proptest::collection::vec(1..=full, 0..=5)
                .prop_map(move |edges| {
                    let sets: Vec<ElementSet> =
                        edges.iter().map(|&b| mask_to_set(b, ground)).collect();
                    let sets: Vec<ElementSet> =
                        sets.into_iter().filter(|e| !e.is_empty()).collect();
                    Hypergraph::new(ground, &sets).unwrap()
                })
        })
        .boxed()
}

fn arb_complex() -> BoxedStrategy<SimplicialComplex> {
    (1..=6usize)
        .prop_flat_map(|ground| {
            let full = (1u64 << ground) - 1;
            proptest::collection::vec(0..=full, 0..=5).prop_map(move |facets| {
                let sets: Vec<ElementSet> =
                    facets.iter().map(|&b| mask_to_set(b, ground)).collect();
                SimplicialComplex::from_facets(ground, &sets).unwrap()
            })
        })
        .boxed()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_axioms_hold(m in arb_matroid()) {
        prop_assert_eq!(m.rank(ElementSet::EMPTY), 0);
        for s in m.ground_set().subsets() {
            let r = m.rank(s);
            prop_assert!(r <= s.len());
            for x in m.ground_set().minus(s).iter() {
                let up = m.rank(s.with(x));
                prop_assert!(up == r || up == r + 1);
            }
        }
        // Submodularity on a sample of pairs.
        let subsets: Vec<ElementSet> = m.ground_set().subsets().collect();
        for (i, &s) in subsets.iter().enumerate().step_by(3) {
            for &t in subsets.iter().skip(i % 5).step_by(4) {
                prop_assert!(
                    m.rank(s.union(t)) + m.rank(s.intersect(t)) <= m.rank(s) + m.rank(t)
                );
            }
        }
    }

    #[test]
    fn independence_families_pass_the_axiom_checker(m in arb_matroid()) {
        let family = m.independent_sets();
        prop_assert!(check_matroid_axioms(m.ground_size(), &family).is_ok());
    }

    #[test]
    fn circuits_satisfy_elimination_and_regenerate(m in arb_matroid()) {
        let circuits = m.circuits();
        // The elimination axiom is validated inside from_circuits.
        let rebuilt = Matroid::from_circuits(m.ground_size(), &circuits).unwrap();
        prop_assert!(rebuilt.same_independence(&m));
    }

    #[test]
    fn contraction_rank_formula(m in arb_matroid(), bits in any::<u64>()) {
        let s = mask_to_set(bits, m.ground_size());
        let contracted = m.contract(s).unwrap();
        let keep: Vec<usize> = m.ground_set().minus(s).to_vec();
        for t in contracted.ground_set().subsets() {
            let t_base: ElementSet = t.iter().map(|e| keep[e]).collect();
            prop_assert_eq!(
                contracted.rank(t),
                m.rank(t_base.union(s)) - m.rank(s)
            );
        }
    }

    #[test]
    fn quotient_matches_forall_definition(m in arb_matroid(), bits in any::<u64>()) {
        let s = mask_to_set(bits, m.ground_size());
        let q = m.quotient_to(s).unwrap();
        let mut direct = q.independent_sets();
        let mut by_def = reference::quotient_family_by_definition(&m, s);
        direct.sort();
        by_def.sort();
        prop_assert_eq!(direct, by_def);
    }

    #[test]
    fn loops_and_coloops_match_circuit_membership(m in arb_matroid()) {
        let circuits = m.circuits();
        for e in 0..m.ground_size() {
            prop_assert_eq!(m.is_loop(e), circuits.contains(&ElementSet::singleton(e)));
            prop_assert_eq!(m.is_coloop(e), circuits.iter().all(|c| !c.contains(e)));
        }
    }

    #[test]
    fn independence_complex_is_downward_closed(h in arb_hypergraph()) {
        let c = SimplicialComplex::independence_complex(&h);
        for s in h.ground_set().subsets() {
            prop_assert_eq!(c.is_face(s), h.is_independent(s));
        }
    }

    #[test]
    fn intersection_grows_the_independence_complex(
        h1 in arb_hypergraph(),
        h2 in arb_hypergraph(),
    ) {
        prop_assume!(h1.ground_size() == h2.ground_size());
        let both = h1.intersect(&h2).unwrap();
        let ci = SimplicialComplex::independence_complex(&both);
        let c1 = SimplicialComplex::independence_complex(&h1);
        let c2 = SimplicialComplex::independence_complex(&h2);
        for s in h1.ground_set().subsets() {
            if c1.is_face(s) || c2.is_face(s) {
                prop_assert!(ci.is_face(s));
            }
        }
    }

    #[test]
    fn betti_is_relabeling_invariant(c in arb_complex(), seed in any::<u64>()) {
        let ground = c.ground_size();
        // A cheap seeded permutation of the ground set.
        let mut perm: Vec<usize> = (0..ground).collect();
        let mut state = seed | 1;
        for i in (1..ground).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (state >> 33) as usize % (i + 1));
        }
        let relabeled: Vec<ElementSet> = c
            .facets()
            .iter()
            .map(|f| f.iter().map(|v| perm[v]).collect())
            .collect();
        let rc = SimplicialComplex::from_facets(ground, &relabeled).unwrap();
        for k in -1..=(ground as isize) {
            prop_assert_eq!(betti(&c, k).unwrap(), betti(&rc, k).unwrap());
        }
    }

    #[test]
    fn euler_characteristic_balances(c in arb_complex()) {
        let bv = betti_vector(&c).unwrap();
        let mut euler: i64 = if c.is_void() { 0 } else { -1 };
        for (d, level) in c.faces_by_dimension().unwrap().iter().enumerate() {
            euler += if d % 2 == 0 { 1 } else { -1 } * level.len() as i64;
        }
        prop_assert_eq!(bv.alternating_sum(), euler);
    }

    #[test]
    fn cones_have_infinite_connectivity(c in arb_complex()) {
        if c.cone_apex().is_some() {
            prop_assert_eq!(eta(&c).unwrap(), EtaValue::Infinite);
            // The oracle has no cone shortcut and must agree.
            prop_assert_eq!(reference::eta_by_rational_elimination(&c), EtaValue::Infinite);
        }
    }

    #[test]
    fn engine_matches_rational_oracle(c in arb_complex()) {
        for k in -1..=(c.ground_size() as isize) {
            prop_assert_eq!(
                betti(&c, k).unwrap(),
                reference::betti_by_rational_elimination(&c, k)
            );
        }
        prop_assert_eq!(eta(&c).unwrap(), reference::eta_by_rational_elimination(&c));
    }

    #[test]
    fn deletion_contraction_bound_holds(h in arb_hypergraph(), pick in any::<usize>()) {
        let minimal = h.minimal_edges();
        prop_assume!(!minimal.is_empty());
        let e = minimal[pick % minimal.len()];
        let report = eta_recursion_check(&h, e).unwrap();
        prop_assert!(
            report.holds(),
            "violated: eta={:?} deleted={:?} contracted={:?} |e|={}",
            report.eta_full,
            report.eta_deleted,
            report.eta_contracted,
            report.edge_size
        );
    }

    #[test]
    fn certificates_are_sound(h in arb_hypergraph(), target in 0usize..4) {
        if let Some(cert) = eta_lower_bound_certificate(&h, target, 20_000) {
            prop_assert!(replay_certificate(&h, target, &cert));
            let exact = eta(&SimplicialComplex::independence_complex(&h)).unwrap();
            prop_assert!(
                exact >= EtaValue::Finite(target),
                "certificate for {target} but exact eta is {exact}"
            );
        }
    }

    #[test]
    fn lifted_matroids_pass_axioms_and_project(
        m in arb_matroid(),
        set_bits in proptest::collection::vec(any::<u64>(), 1..4),
    ) {
        let sets: Vec<ElementSet> = set_bits
            .iter()
            .map(|&b| mask_to_set(b, m.ground_size()))
            .collect();
        let layered = LayeredGround::new(&sets);
        prop_assume!(layered.len() <= 8);
        let lifted = lift_matroid(&m, &layered).unwrap();
        let family = lifted.independent_sets();
        prop_assert!(check_matroid_axioms(lifted.ground_size(), &family).is_ok());
        for face in family {
            let proj = layered.project(face);
            prop_assert_eq!(proj.len(), face.len());
            prop_assert!(m.is_independent(proj));
        }
    }

    #[test]
    fn layered_complex_equals_obstruction_route(
        m in arb_matroid(),
        set_bits in proptest::collection::vec(any::<u64>(), 1..4),
    ) {
        let sets: Vec<ElementSet> = set_bits
            .iter()
            .map(|&b| mask_to_set(b, m.ground_size()))
            .collect();
        let layered = LayeredGround::new(&sets);
        prop_assume!(layered.len() <= 8);
        let direct = build_complex(&m, &layered);
        let via = SimplicialComplex::independence_complex(
            &layered_obstruction_hypergraph(&m, &layered),
        );
        prop_assert_eq!(direct, via);
    }

    #[test]
    fn lifted_flats_project_to_flats(
        m in arb_matroid(),
        set_bits in proptest::collection::vec(any::<u64>(), 1..4),
        n in 1usize..3,
    ) {
        let sets: Vec<ElementSet> = set_bits
            .iter()
            .map(|&b| mask_to_set(b, m.ground_size()))
            .collect();
        let layered = LayeredGround::new(&sets);
        prop_assume!(layered.len() <= 7);
        let truncated = m.truncate(n);
        let lifted = lift_matroid(&truncated, &layered).unwrap();
        for (flat, k) in lifted.flats() {
            // Every flat upstairs is the full pair set over a flat of
            // the truncated base.
            let downstairs = truncated.closure(layered.project(flat));
            let expected: ElementSet = (0..layered.len())
                .filter(|&i| downstairs.contains(layered.pair(i).element))
                .collect();
            prop_assert_eq!(flat, expected);
            // Quotient rank of the complement is at most n - k.
            let s = lifted.ground_set().minus(flat);
            let quotient_rank = lifted.quotient_to(s).unwrap().rank_full();
            prop_assert!(quotient_rank + k <= n);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn search_agrees_with_enumeration_oracle(
        m_seed in arb_matroid_on(5),
        n_seed in arb_matroid_on(5),
        set_bits in proptest::collection::vec(0u64..32, 0..4),
        target in 0usize..3,
    ) {
        // Shrink each drawn set to an independent-in-both core so the
        // instance always validates.
        let sets: Vec<ElementSet> = set_bits
            .iter()
            .map(|&b| {
                let mut s = mask_to_set(b, 5);
                while !(m_seed.is_independent(s) && n_seed.is_independent(s)) {
                    s = s.without(s.min_element().unwrap());
                }
                s
            })
            .collect();
        let inst = RainbowInstance::new(m_seed, n_seed, sets, target).unwrap();
        prop_assume!(inst.total_candidates() <= 12);
        let found = find_rainbow(&inst).unwrap();
        let count = reference::count_rainbow_selections(&inst);
        prop_assert_eq!(found.is_some(), count > 0);
        if let Some(sel) = found {
            prop_assert!(verify_selection(&inst, &sel));
        }
    }
}

/// The layered route of the main theorem on a concrete solvable
/// instance: flats of the truncated lift correspond to flats downstairs,
/// the quotient rank is bounded by n − k, and the connectivity of the
/// restricted complex meets the bound the argument needs. Both the
/// direct η(C|S′) reading and the quotient-rank reading are checked.
#[test]
fn layered_flat_bounds_on_drisko_instance() {
    use rainbow_matroids_core::reductions::{drisko_instance, IntMatrix};

    let x = IntMatrix::from_rows(vec![vec![1, 1, 2], vec![2, 2, 1]]).unwrap();
    let inst = drisko_instance(&x).unwrap();
    assert!(inst.hypothesis_satisfied());
    let n = inst.target();

    let layered = LayeredGround::new(inst.sets());
    let m_trunc = inst.matroid_m().truncate(n);
    let m_lift = lift_matroid(&m_trunc, &layered).unwrap();
    let c = build_complex(inst.matroid_n(), &layered);

    for (flat, k) in m_lift.flats() {
        // Correspondence: the flat is exactly the pairs whose element
        // lies in a flat of the truncated base.
        let projected = layered.project(flat);
        let downstairs = m_trunc.closure(projected);
        let expected: ElementSet = (0..layered.len())
            .filter(|&i| downstairs.contains(layered.pair(i).element))
            .collect();
        assert_eq!(flat, expected, "flat {flat} does not project to a flat");

        let s = m_lift.ground_set().minus(flat);
        let quotient_rank = m_lift.quotient_to(s).unwrap().rank_full();
        assert!(quotient_rank <= n - k, "quotient rank exceeds n - k");
        let connectivity = eta(&c.restrict(s)).unwrap();
        assert!(
            connectivity >= EtaValue::Finite(n - k),
            "eta(C|S') = {connectivity} below n - k = {}",
            n - k
        );
        assert!(connectivity >= EtaValue::Finite(quotient_rank));
    }

    // The matchability engine agrees end to end.
    let report = matchability_check(&m_lift, &c).unwrap();
    assert!(report.hypothesis_ok);
    let basis = report.basis_found.expect("hypothesis holds, basis must exist");
    assert_eq!(basis.len(), m_lift.rank_full());
    assert!(c.is_face(basis));
}

/// Rank-shift inequality: for a rank-k flat F and any set A,
/// ρ(A ∩ (V∖F)) ≥ ρ(A) − k. A consequence of submodularity, checked by
/// enumeration on a graphic matroid.
#[test]
fn rank_shift_inequality() {
    let m = Matroid::graphic(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
    for (flat, k) in m.flats() {
        let complement = m.ground_set().minus(flat);
        for a in m.ground_set().subsets() {
            assert!(m.rank(a.intersect(complement)) + k >= m.rank(a));
        }
    }
}
