//! Acceptance suite: one test per criterion, each printing a PASS/FAIL
//! line (run with `cargo test --test acceptance -- --nocapture` to see
//! them all). Every tolerance is zero failures; the stated wall-clock
//! budgets are asserted where given.

use std::time::{Duration, Instant};

use rainbow_matroids_cli::campaigns::{
    campaign_drisko, campaign_eta_recursion, campaign_lemma, campaign_main,
    campaign_matchability, campaign_tightness,
};
use rainbow_matroids_core::complex::SimplicialComplex;
use rainbow_matroids_core::homology::{betti, eta, EtaValue};
use rainbow_matroids_core::hypergraph::Hypergraph;
use rainbow_matroids_core::matroid::{check_matroid_axioms, Matroid};
use rainbow_matroids_core::rainbow::LayeredGround;
use rainbow_matroids_core::reference;
use rainbow_matroids_core::set::ElementSet;

fn s(v: &[usize]) -> ElementSet {
    v.iter().copied().collect()
}

fn verdict(criterion: &str, pass: bool) {
    println!(
        "criterion {criterion}: {}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {criterion} failed");
}

#[test]
fn criterion_1_drisko_exhaustive() {
    let start = Instant::now();
    let n2 = campaign_drisko(2, true, 0, 0).unwrap();
    let n3 = campaign_drisko(3, true, 0, 0).unwrap();
    let elapsed = start.elapsed();
    let pass = n2.checked == 8
        && n2.failures == 0
        && n3.checked == 7776
        && n3.failures == 0
        && elapsed < Duration::from_secs(60);
    verdict("1 (drisko exhaustive 2x3 and 3x5)", pass);
}

#[test]
fn criterion_2_main_theorem_randomized() {
    let start = Instant::now();
    let n2 = campaign_main(2, 5000, 0).unwrap();
    let n3 = campaign_main(3, 5000, 0).unwrap();
    let elapsed = start.elapsed();
    let pass = n2.checked == 5000
        && n2.failures == 0
        && n3.checked == 5000
        && n3.failures == 0
        && elapsed < Duration::from_secs(600);
    verdict("2 (main theorem, 10000 random instances)", pass);
}

#[test]
fn criterion_3_tightness_families() {
    let mut pass = true;
    for n in 2..=5 {
        let report = campaign_tightness("cycle", n).unwrap();
        let notes_ok = report
            .notes
            .iter()
            .filter(|(k, _)| k == "unsolvable-as-expected" || k == "extension-solvable")
            .all(|(_, v)| v == "true");
        pass &= report.failures == 0 && notes_ok;
    }
    for n in [2, 4] {
        let report = campaign_tightness("complete-bipartite", n).unwrap();
        pass &= report.failures == 0;
    }
    verdict("3 (tightness: cycle n=2..5, complete bipartite n=2,4)", pass);
}

#[test]
fn criterion_4_lemma_bound() {
    let mut pass = true;
    for ell in [1, 2] {
        let report = campaign_lemma(ell, true, 7, 0, 0).unwrap();
        let applicable: usize = report
            .notes
            .iter()
            .find(|(k, _)| k == "applicable")
            .map(|(_, v)| v.parse().unwrap())
            .unwrap();
        pass &= report.failures == 0 && applicable > 0;
    }
    let random = campaign_lemma(2, false, 7, 1000, 0).unwrap();
    let applicable: usize = random
        .notes
        .iter()
        .find(|(k, _)| k == "applicable")
        .map(|(_, v)| v.parse().unwrap())
        .unwrap();
    pass &= random.checked == 1000 && random.failures == 0 && applicable > 0;
    verdict("4 (partition connectivity lemma)", pass);
}

#[test]
fn criterion_5_deletion_contraction_bound() {
    let start = Instant::now();
    let report = campaign_eta_recursion(6, 1000, 0).unwrap();
    let elapsed = start.elapsed();
    let pass =
        report.checked == 1000 && report.failures == 0 && elapsed < Duration::from_secs(300);
    verdict("5 (deletion/contraction eta bound, 1000 pairs)", pass);
}

#[test]
fn criterion_6_matchability_on_layered_instances() {
    // Replays the criterion-2 stream for n = 2 (same seed, same
    // generator): every hypothesis-passing layered instance must contain
    // a basis of the truncated lift.
    let report = campaign_matchability(5000, 0).unwrap();
    let passing: usize = report
        .notes
        .iter()
        .find(|(k, _)| k == "hypothesis-passing")
        .map(|(_, v)| v.parse().unwrap())
        .unwrap();
    let pass = report.checked == 5000 && report.failures == 0 && passing > 0;
    verdict("6 (matchability criterion on layered instances)", pass);
}

#[test]
fn criterion_7_homology_oracle_equivalence() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2024);
    let mut pass = true;

    for _ in 0..200 {
        let ground = rng.random_range(1..=6usize);
        let full = ElementSet::full(ground).bits();
        let facet_count = rng.random_range(0..=5usize);
        let facets: Vec<ElementSet> = (0..facet_count)
            .map(|_| ElementSet::from_bits(rng.random_range(0..=full)))
            .collect();
        let c = SimplicialComplex::from_facets(ground, &facets).unwrap();
        for k in -1..=(ground as isize) {
            if betti(&c, k).unwrap() != reference::betti_by_rational_elimination(&c, k) {
                pass = false;
            }
        }
        if eta(&c).unwrap() != reference::eta_by_rational_elimination(&c) {
            pass = false;
        }
    }

    // Boundary of the (m-1)-simplex: eta = m - 1.
    for m in 3..=5 {
        let h = Hypergraph::new(m, &[ElementSet::full(m)]).unwrap();
        let c = SimplicialComplex::independence_complex(&h);
        pass &= reference::eta_by_rational_elimination(&c) == EtaValue::Finite(m - 1);
        pass &= eta(&c).unwrap() == EtaValue::Finite(m - 1);
    }

    // Independence complex of the 5-cycle, values from the oracle.
    let c5 = Hypergraph::new(
        5,
        &[s(&[0, 1]), s(&[1, 2]), s(&[2, 3]), s(&[3, 4]), s(&[4, 0])],
    )
    .unwrap();
    let ic5 = SimplicialComplex::independence_complex(&c5);
    pass &= reference::betti_by_rational_elimination(&ic5, 1) == 1;
    pass &= reference::eta_by_rational_elimination(&ic5) == EtaValue::Finite(2);
    pass &= betti(&ic5, 1).unwrap() == 1;
    pass &= eta(&ic5).unwrap() == EtaValue::Finite(2);

    verdict("7 (homology engine vs rational-elimination oracle)", pass);
}

/// The realization zoo for the law suite: every constructor plus derived
/// matroids, all on grounds of size at most 8.
fn law_suite_zoo() -> Vec<(String, Matroid)> {
    let mut zoo: Vec<(String, Matroid)> = vec![
        ("uniform(8,3)".into(), Matroid::uniform(8, 3).unwrap()),
        ("free(5)".into(), Matroid::free(5).unwrap()),
    ];
    zoo.push((
        "partition with loops".into(),
        Matroid::partition(8, &[s(&[0, 1, 2]), s(&[3, 4]), s(&[5])]).unwrap(),
    ));
    zoo.push((
        "graphic multigraph".into(),
        Matroid::graphic(
            5,
            &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (4, 4), (0, 1)],
        )
        .unwrap(),
    ));
    zoo.push((
        "linear GF(2)".into(),
        Matroid::linear(
            2,
            &[
                vec![1, 0, 0],
                vec![0, 1, 0],
                vec![1, 1, 0],
                vec![0, 0, 1],
                vec![1, 0, 1],
                vec![0, 0, 0],
                vec![1, 1, 1],
                vec![0, 1, 1],
            ],
        )
        .unwrap(),
    ));
    zoo.push((
        "linear GF(3)".into(),
        Matroid::linear(
            3,
            &[
                vec![1, 0],
                vec![0, 1],
                vec![1, 1],
                vec![2, 1],
                vec![2, 0],
                vec![1, 2],
            ],
        )
        .unwrap(),
    ));
    zoo.push((
        "from_circuits".into(),
        Matroid::from_circuits(7, &[s(&[0, 1]), s(&[0, 2]), s(&[1, 2]), s(&[3, 4, 5])]).unwrap(),
    ));
    let family: Vec<ElementSet> = Matroid::uniform(4, 2).unwrap().independent_sets();
    zoo.push((
        "explicit family".into(),
        Matroid::from_independent_sets(4, &family).unwrap(),
    ));

    let base = Matroid::graphic(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2), (1, 3)])
        .unwrap();
    zoo.push(("contracted graphic".into(), base.contract(s(&[0, 5])).unwrap()));
    zoo.push(("restricted graphic".into(), base.restrict(s(&[0, 1, 2, 4, 6])).unwrap()));
    zoo.push(("truncated graphic".into(), base.truncate(2)));
    zoo.push(("quotient graphic".into(), base.quotient_to(s(&[1, 2, 3, 6])).unwrap()));

    let lifted_base = Matroid::uniform(4, 2).unwrap();
    let layered = LayeredGround::new(&[s(&[0, 1]), s(&[1, 2]), s(&[2, 3]), s(&[0, 3])]);
    zoo.push((
        "lifted uniform".into(),
        rainbow_matroids_core::rainbow::lift_matroid(&lifted_base, &layered).unwrap(),
    ));
    zoo
}

#[test]
fn criterion_8_matroid_law_suite() {
    let start = Instant::now();
    let mut pass = true;

    for (name, m) in law_suite_zoo() {
        let ground = m.ground_size();
        assert!(ground <= 8, "{name}: zoo entries stay at ground <= 8");
        let subsets: Vec<ElementSet> = m.ground_set().subsets().collect();

        // Rank axioms: normalization, unit growth, submodularity.
        if m.rank(ElementSet::EMPTY) != 0 {
            pass = false;
        }
        for &sub in &subsets {
            let r = m.rank(sub);
            if r > sub.len() {
                pass = false;
            }
            for x in m.ground_set().minus(sub).iter() {
                let up = m.rank(sub.with(x));
                if up != r && up != r + 1 {
                    pass = false;
                }
            }
        }
        for &a in &subsets {
            for &b in &subsets {
                if m.rank(a.union(b)) + m.rank(a.intersect(b)) > m.rank(a) + m.rank(b) {
                    pass = false;
                }
            }
        }

        // Circuit elimination on the computed circuit family (validated
        // inside from_circuits), and the rebuild keeps the oracle.
        let rebuilt = Matroid::from_circuits(ground, &m.circuits());
        match rebuilt {
            Ok(rebuilt) => {
                if !rebuilt.same_independence(&m) {
                    pass = false;
                }
            }
            Err(_) => pass = false,
        }

        // The full independent-set family passes the axiom checker.
        if check_matroid_axioms(ground, &m.independent_sets()).is_err() {
            pass = false;
        }

        // Contraction rank formula, exhaustively.
        for &sub in &subsets {
            let contracted = m.contract(sub).unwrap();
            let keep: Vec<usize> = m.ground_set().minus(sub).to_vec();
            for t in contracted.ground_set().subsets() {
                let t_base: ElementSet = t.iter().map(|e| keep[e]).collect();
                if contracted.rank(t) != m.rank(t_base.union(sub)) - m.rank(sub) {
                    pass = false;
                }
            }
        }

        // Quotient equals its for-all definition, exhaustively.
        for &sub in &subsets {
            let mut direct = m.quotient_to(sub).unwrap().independent_sets();
            let mut by_def = reference::quotient_family_by_definition(&m, sub);
            direct.sort();
            by_def.sort();
            if direct != by_def {
                pass = false;
            }
        }
    }

    let elapsed = start.elapsed();
    pass &= elapsed < Duration::from_secs(120);
    verdict("8 (matroid law suite, ground <= 8)", pass);
}
