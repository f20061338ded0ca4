use super::*;
use crate::rainbow::{find_rainbow, verify_selection, LayeredElement};

fn s(v: &[usize]) -> ElementSet {
    v.iter().copied().collect()
}

#[test]
fn matroid_pair_characterizes_matchings() {
    let g = BipartiteGraph::new(2, 2, &[(0, 0), (0, 1), (1, 0), (1, 1)]).unwrap();
    let (m, n) = bipartite_to_matroid_pair(&g);
    for edges in ElementSet::full(g.edge_count()).subsets() {
        let is_matching = Matching::new(&g, edges).is_ok();
        assert_eq!(
            is_matching,
            m.is_independent(edges) && n.is_independent(edges),
            "edge set {edges}"
        );
    }
}

#[test]
fn shared_endpoint_is_a_circuit_on_one_side_only() {
    let g = BipartiteGraph::new(2, 2, &[(0, 0), (0, 1)]).unwrap();
    let (m, n) = bipartite_to_matroid_pair(&g);
    assert_eq!(m.circuits(), vec![s(&[0, 1])]);
    assert!(n.circuits().is_empty());

    let single = BipartiteGraph::new(1, 1, &[(0, 0)]).unwrap();
    let (m, n) = bipartite_to_matroid_pair(&single);
    assert!(m.same_independence(&Matroid::free(1).unwrap()));
    assert!(n.same_independence(&Matroid::free(1).unwrap()));
}

#[test]
fn four_cycle_matchings_are_common_independent_pairs() {
    // C4 as a bipartite graph: A = {0,1}, B = {0,1}, edges in cycle order.
    let (graph, matchings) = gen_cycle_tightness(2).unwrap();
    assert_eq!(matchings.len(), 2);
    let (m, n) = bipartite_to_matroid_pair(&graph);
    let perfect: Vec<ElementSet> = ElementSet::full(4)
        .subsets()
        .filter(|&e| e.len() == 2 && m.is_independent(e) && n.is_independent(e))
        .collect();
    assert_eq!(perfect, vec![s(&[0, 2]), s(&[1, 3])]);
}

#[test]
fn drisko_matrix_conversion() {
    let x = IntMatrix::from_rows(vec![vec![1, 1, 2], vec![2, 2, 1]]).unwrap();
    let matchings = drisko_matrix_to_matchings(&x).unwrap();
    assert_eq!(matchings.len(), 3);
    assert!(matchings.iter().all(|m| m.len() == 2));

    let single = IntMatrix::from_rows(vec![vec![1]]).unwrap();
    let matchings = drisko_matrix_to_matchings(&single).unwrap();
    assert_eq!(matchings.len(), 1);
    assert_eq!(matchings[0].len(), 1);

    let bad = IntMatrix::from_rows(vec![vec![1], vec![1]]).unwrap();
    assert!(matches!(
        drisko_matrix_to_matchings(&bad),
        Err(ReductionError::ColumnNotPermutation { column: 0, n: 2 })
    ));
}

#[test]
fn drisko_round_trip_to_diagonal() {
    let x = IntMatrix::from_rows(vec![vec![1, 1, 2], vec![2, 2, 1]]).unwrap();
    let inst = drisko_instance(&x).unwrap();
    let sel = find_rainbow(&inst).unwrap().unwrap();
    assert!(verify_selection(&inst, &sel));
    let diag = selection_to_diagonal(&sel, &x).unwrap();
    assert_eq!(diag.len(), 2);
    assert_eq!(diag.entry_values(&x), vec![1, 2]);
}

#[test]
fn diagonal_rejects_collisions() {
    assert!(Diagonal::new(vec![(0, 0), (1, 1)]).is_ok());
    assert!(Diagonal::new(vec![]).unwrap().is_empty());
    assert!(matches!(
        Diagonal::new(vec![(0, 0), (0, 1)]),
        Err(ReductionError::InconsistentSelection(_))
    ));
    assert!(matches!(
        Diagonal::new(vec![(0, 0), (1, 0)]),
        Err(ReductionError::InconsistentSelection(_))
    ));
}

#[test]
fn selection_to_diagonal_rejects_mismatches() {
    let x = IntMatrix::from_rows(vec![vec![1, 1, 2], vec![2, 2, 1]]).unwrap();
    // Edge 1 = (0, 1) claims entry 2 at column 0, but X[0][0] = 1.
    let sel = RainbowSelection::new(vec![LayeredElement { element: 1, layer: 1 }]);
    assert!(selection_to_diagonal(&sel, &x).is_err());

    let empty = RainbowSelection::new(vec![]);
    assert!(selection_to_diagonal(&empty, &x).unwrap().is_empty());
}

#[test]
fn chappell_basics() {
    // n = 1: a single non-loop entry.
    let m = Matroid::free(1).unwrap();
    let inst = chappell_matrix_to_instance(&[vec![0]], &m, 1).unwrap();
    let sel = find_rainbow(&inst).unwrap().unwrap();
    let diag = chappell_selection_to_diagonal(&sel, &[vec![0]], 1).unwrap();
    assert_eq!(diag.cells(), &[(0, 0)]);

    // Free matroid on {a, b}: columns (a,b), (a,b), (b,a).
    let m = Matroid::free(2).unwrap();
    let x = vec![vec![0, 0, 1], vec![1, 1, 0]];
    let inst = chappell_matrix_to_instance(&x, &m, 2).unwrap();
    assert!(inst.hypothesis_satisfied());
    let sel = find_rainbow(&inst).unwrap().unwrap();
    let diag = chappell_selection_to_diagonal(&sel, &x, 2).unwrap();
    assert_eq!(diag.len(), 2);
    let projected: ElementSet = diag.cells().iter().map(|&(r, c)| x[r][c]).collect();
    assert!(m.is_independent(projected));
    assert_eq!(projected.len(), 2);
}

#[test]
fn chappell_reports_dependent_columns() {
    // All pairs dependent: every column of distinct entries fails.
    let m = Matroid::uniform(2, 1).unwrap();
    let x = vec![vec![0, 0, 1], vec![1, 1, 0]];
    match chappell_matrix_to_instance(&x, &m, 2) {
        Err(ReductionError::DependentColumns(cols)) => assert_eq!(cols, vec![0, 1, 2]),
        other => panic!("expected dependent columns, got {other:?}"),
    }

    let free = Matroid::free(2).unwrap();
    assert!(matches!(
        chappell_matrix_to_instance(&[vec![0, 5, 0], vec![1, 1, 1]], &free, 2),
        Err(ReductionError::EntryOutOfRange { row: 0, column: 1 })
    ));
}

#[test]
fn cycle_family_shape() {
    for n in 2..=4 {
        let (graph, matchings) = gen_cycle_tightness(n).unwrap();
        assert_eq!(graph.edge_count(), 2 * n);
        assert_eq!(matchings.len(), 2 * n - 2);
        assert!(matchings.iter().all(|m| m.len() == n));
    }
    assert!(matches!(
        gen_cycle_tightness(1),
        Err(ReductionError::NTooSmall(1))
    ));
}

#[test]
fn complete_bipartite_family_shape() {
    let (graph, matchings) = gen_complete_bipartite_example(2).unwrap();
    assert_eq!(graph.edge_count(), 4);
    assert_eq!(matchings.len(), 2);
    assert_eq!(matchings[0].edges(), s(&[1, 2]));
    assert_eq!(matchings[1].edges(), s(&[0, 3]));

    assert!(matches!(
        gen_complete_bipartite_example(3),
        Err(ReductionError::OddN(3))
    ));
    // Size n - 1 = 1 is reachable: any single edge.
    let inst = matchings_to_instance(&graph, &matchings, 1).unwrap();
    assert!(find_rainbow(&inst).unwrap().is_some());
}

#[test]
fn appending_a_matching_restores_solvability() {
    let (graph, mut matchings) = gen_cycle_tightness(2).unwrap();
    let inst = matchings_to_instance(&graph, &matchings, 2).unwrap();
    assert_eq!(find_rainbow(&inst).unwrap(), None);

    matchings.push(matchings[0].clone());
    let inst = matchings_to_instance(&graph, &matchings, 2).unwrap();
    assert!(inst.hypothesis_satisfied());
    assert!(find_rainbow(&inst).unwrap().is_some());
}
