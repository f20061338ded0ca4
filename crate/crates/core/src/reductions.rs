//! Reductions between bipartite rainbow matchings, row-Latin matrices,
//! matroid-entry matrices, and rainbow instances, plus the two tightness
//! families showing the 2n−1 and min(i, n) hypotheses are sharp.

use crate::error::{RainbowError, ReductionError};
use crate::matroid::Matroid;
use crate::rainbow::{LayeredGround, RainbowInstance, RainbowSelection};
use crate::set::ElementSet;

/// A bipartite multigraph with sides A and B; the edge list index is the
/// edge id, and the edge ground set feeds the matroid pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    side_a: usize,
    side_b: usize,
    edges: Vec<(usize, usize)>,
}

impl BipartiteGraph {
    pub fn new(
        side_a: usize,
        side_b: usize,
        edges: &[(usize, usize)],
    ) -> Result<Self, ReductionError> {
        for &(a, b) in edges {
            if a >= side_a {
                return Err(ReductionError::EndpointOutOfRange {
                    vertex: a,
                    side: 'A',
                    size: side_a,
                });
            }
            if b >= side_b {
                return Err(ReductionError::EndpointOutOfRange {
                    vertex: b,
                    side: 'B',
                    size: side_b,
                });
            }
        }
        Ok(BipartiteGraph {
            side_a,
            side_b,
            edges: edges.to_vec(),
        })
    }

    /// K_{a,b} with row-major edge ids: edge (i, j) has id i·b + j.
    pub fn complete(side_a: usize, side_b: usize) -> Self {
        let edges = (0..side_a)
            .flat_map(|i| (0..side_b).map(move |j| (i, j)))
            .collect();
        BipartiteGraph {
            side_a,
            side_b,
            edges,
        }
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn endpoints(&self, edge: usize) -> (usize, usize) {
        self.edges[edge]
    }

    pub fn side_a(&self) -> usize {
        self.side_a
    }

    pub fn side_b(&self) -> usize {
        self.side_b
    }
}

/// A set of pairwise vertex-disjoint edges, stored by edge id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    edges: ElementSet,
}

impl Matching {
    pub fn new(graph: &BipartiteGraph, edges: ElementSet) -> Result<Self, ReductionError> {
        let mut used_a = ElementSet::EMPTY;
        let mut used_b = ElementSet::EMPTY;
        for e in edges.iter() {
            if e >= graph.edge_count() {
                return Err(ReductionError::EdgeIdOutOfRange {
                    edge: e,
                    count: graph.edge_count(),
                });
            }
            let (a, b) = graph.endpoints(e);
            if used_a.contains(a) || used_b.contains(b) {
                return Err(ReductionError::NotAMatching(edges));
            }
            used_a = used_a.with(a);
            used_b = used_b.with(b);
        }
        Ok(Matching { edges })
    }

    pub fn edges(&self) -> ElementSet {
        self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// The two partition matroids on the edge set of `graph`: a set of edges
/// is independent in the first iff its A-endpoints are distinct, in the
/// second iff its B-endpoints are distinct. A set is a matching iff it
/// is independent in both.
pub fn bipartite_to_matroid_pair(graph: &BipartiteGraph) -> (Matroid, Matroid) {
    let blocks_a: Vec<ElementSet> = (0..graph.side_a)
        .map(|v| {
            (0..graph.edge_count())
                .filter(|&e| graph.endpoints(e).0 == v)
                .collect()
        })
        .collect();
    let blocks_b: Vec<ElementSet> = (0..graph.side_b)
        .map(|v| {
            (0..graph.edge_count())
                .filter(|&e| graph.endpoints(e).1 == v)
                .collect()
        })
        .collect();
    let m = Matroid::partition(graph.edge_count(), &blocks_a)
        .expect("per-vertex edge blocks are disjoint");
    let n = Matroid::partition(graph.edge_count(), &blocks_b)
        .expect("per-vertex edge blocks are disjoint");
    (m, n)
}

/// Packages matchings as a rainbow instance over the edge ground set: a
/// rainbow selection of size n is exactly a partial rainbow matching of
/// size n.
pub fn matchings_to_instance(
    graph: &BipartiteGraph,
    matchings: &[Matching],
    n: usize,
) -> Result<RainbowInstance, RainbowError> {
    let (m, nn) = bipartite_to_matroid_pair(graph);
    let sets: Vec<ElementSet> = matchings.iter().map(|mt| mt.edges()).collect();
    RainbowInstance::new(m, nn, sets, n)
}

/// A matrix of positive integers (row-Latin input for the diagonal
/// theorems). Entries are 1-based values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    entries: Vec<Vec<u64>>,
}

impl IntMatrix {
    pub fn from_rows(entries: Vec<Vec<u64>>) -> Result<Self, ReductionError> {
        if entries.is_empty() || entries[0].is_empty() {
            return Err(ReductionError::EmptyMatrix);
        }
        let cols = entries[0].len();
        if entries.iter().any(|r| r.len() != cols) {
            return Err(ReductionError::WrongColumnCount {
                expected: cols,
                got: entries.iter().map(|r| r.len()).find(|&l| l != cols).unwrap(),
            });
        }
        Ok(IntMatrix { entries })
    }

    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    pub fn cols(&self) -> usize {
        self.entries[0].len()
    }

    pub fn get(&self, row: usize, col: usize) -> u64 {
        self.entries[row][col]
    }

    pub fn column(&self, col: usize) -> Vec<u64> {
        self.entries.iter().map(|r| r[col]).collect()
    }
}

/// A set of matrix cells with at most one entry per row and per column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagonal {
    cells: Vec<(usize, usize)>,
}

impl Diagonal {
    pub fn new(mut cells: Vec<(usize, usize)>) -> Result<Self, ReductionError> {
        cells.sort();
        let mut rows = std::collections::HashSet::new();
        let mut cols = std::collections::HashSet::new();
        for &(r, c) in &cells {
            if !rows.insert(r) {
                return Err(ReductionError::InconsistentSelection(format!(
                    "two cells in row {r}"
                )));
            }
            if !cols.insert(c) {
                return Err(ReductionError::InconsistentSelection(format!(
                    "two cells in column {c}"
                )));
            }
        }
        Ok(Diagonal { cells })
    }

    pub fn cells(&self) -> &[(usize, usize)] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Entry values at the diagonal cells, sorted.
    pub fn entry_values(&self, x: &IntMatrix) -> Vec<u64> {
        let mut vals: Vec<u64> = self.cells.iter().map(|&(r, c)| x.get(r, c)).collect();
        vals.sort();
        vals
    }
}

/// Interprets each column of an n-row matrix whose columns contain each
/// of 1..n exactly once as a perfect matching of K_{n,n}: row i matches
/// to X[i][c] − 1 on the B side. Columns that are not permutations are
/// rejected.
pub fn drisko_matrix_to_matchings(x: &IntMatrix) -> Result<Vec<Matching>, ReductionError> {
    let n = x.rows();
    let graph = BipartiteGraph::complete(n, n);
    let mut matchings = Vec::with_capacity(x.cols());
    for c in 0..x.cols() {
        let col = x.column(c);
        let mut seen = vec![false; n];
        for &v in &col {
            if v == 0 || v as usize > n || seen[v as usize - 1] {
                return Err(ReductionError::ColumnNotPermutation { column: c, n });
            }
            seen[v as usize - 1] = true;
        }
        let edges: ElementSet = col
            .iter()
            .enumerate()
            .map(|(i, &v)| i * n + (v as usize - 1))
            .collect();
        matchings.push(Matching::new(&graph, edges)?);
    }
    Ok(matchings)
}

/// The full pipeline for a row-Latin matrix: K_{n,n}, one matching per
/// column, target n.
pub fn drisko_instance(x: &IntMatrix) -> Result<RainbowInstance, ReductionError> {
    let matchings = drisko_matrix_to_matchings(x)?;
    let graph = BipartiteGraph::complete(x.rows(), x.rows());
    matchings_to_instance(&graph, &matchings, x.rows())
        .map_err(|e| ReductionError::InconsistentSelection(e.to_string()))
}

/// Maps a rainbow selection over a K_{n,n} column instance back to a
/// matrix diagonal: the pick from layer ℓ contributes the cell
/// (A-endpoint, ℓ−1). The pick must be consistent with the matrix (the
/// edge's B-endpoint matches the entry) and the cells must form a
/// diagonal.
pub fn selection_to_diagonal(
    sel: &RainbowSelection,
    x: &IntMatrix,
) -> Result<Diagonal, ReductionError> {
    let n = x.rows();
    let mut cells = Vec::with_capacity(sel.len());
    for pair in sel.pairs() {
        if pair.layer == 0 || pair.layer > x.cols() {
            return Err(ReductionError::InconsistentSelection(format!(
                "layer {} outside the matrix columns",
                pair.layer
            )));
        }
        let (row, b) = (pair.element / n, pair.element % n);
        if row >= n {
            return Err(ReductionError::InconsistentSelection(format!(
                "edge id {} outside K_{{{n},{n}}}",
                pair.element
            )));
        }
        let col = pair.layer - 1;
        if x.get(row, col) != b as u64 + 1 {
            return Err(ReductionError::InconsistentSelection(format!(
                "entry at ({row}, {col}) is {} but the selection picked {}",
                x.get(row, col),
                b + 1
            )));
        }
        cells.push((row, col));
    }
    Diagonal::new(cells)
}

/// The matrix-of-matroid-elements construction: ground set V × [n]
/// (pair (v, j) encoded as v·n + j), M′ lifts M by first coordinate, N
/// partitions by second coordinate, and A_i collects column i's entries
/// tagged with their row. A size-n rainbow selection projects to an
/// M-independent diagonal of size n.
///
/// The matrix must be n × (2n−1) with entries in M's ground set, and
/// each column must be an independent n-set (distinct entries whose set
/// is independent in M) — columns violating that are reported.
pub fn chappell_matrix_to_instance(
    x: &[Vec<usize>],
    m: &Matroid,
    n: usize,
) -> Result<RainbowInstance, ReductionError> {
    if n == 0 || x.len() != n {
        return Err(ReductionError::EmptyMatrix);
    }
    let cols = 2 * n - 1;
    for row in x {
        if row.len() != cols {
            return Err(ReductionError::WrongColumnCount {
                expected: cols,
                got: row.len(),
            });
        }
    }
    for (r, row) in x.iter().enumerate() {
        for (c, &v) in row.iter().enumerate() {
            if v >= m.ground_size() {
                return Err(ReductionError::EntryOutOfRange { row: r, column: c });
            }
        }
    }

    // Pairs (v, j) in encoding order v·n + j; layer field carries j+1
    // (the lift ignores it, but keeps the pair list human-readable).
    let pairs: Vec<(usize, usize)> = (0..m.ground_size())
        .flat_map(|v| (0..n).map(move |j| (v, j + 1)))
        .collect();
    let m_lifted = m
        .lift(&pairs)
        .map_err(|e| ReductionError::InconsistentSelection(e.to_string()))?;
    let blocks: Vec<ElementSet> = (0..n)
        .map(|j| (0..m.ground_size()).map(|v| v * n + j).collect())
        .collect();
    let n_matroid = Matroid::partition(pairs.len(), &blocks)
        .expect("row blocks partition the pair ground");

    let sets: Vec<ElementSet> = (0..cols)
        .map(|i| (0..n).map(|j| x[j][i] * n + j).collect())
        .collect();

    let mut bad_columns = Vec::new();
    for (i, &a) in sets.iter().enumerate() {
        if !m_lifted.is_independent(a) {
            bad_columns.push(i);
        }
    }
    if !bad_columns.is_empty() {
        return Err(ReductionError::DependentColumns(bad_columns));
    }

    RainbowInstance::new(m_lifted, n_matroid, sets, n)
        .map_err(|e| ReductionError::InconsistentSelection(e.to_string()))
}

/// Extracts the M-independent diagonal from a rainbow selection of a
/// Chappell instance: the pick encoded v·n + j from layer i gives the
/// cell (j, i−1), whose entry must be v.
pub fn chappell_selection_to_diagonal(
    sel: &RainbowSelection,
    x: &[Vec<usize>],
    n: usize,
) -> Result<Diagonal, ReductionError> {
    let mut cells = Vec::with_capacity(sel.len());
    for pair in sel.pairs() {
        let (v, j) = (pair.element / n, pair.element % n);
        let col = pair.layer - 1;
        if j >= x.len() || col >= x[j].len() || x[j][col] != v {
            return Err(ReductionError::InconsistentSelection(format!(
                "pair ({v}, {j}) from layer {} does not match the matrix",
                pair.layer
            )));
        }
        cells.push((j, col));
    }
    Diagonal::new(cells)
}

/// The cycle tightness family: C_{2n} as a bipartite graph with its two
/// perfect matchings, n−1 copies of each — 2n−2 matchings of size n with
/// no rainbow matching of size n.
pub fn gen_cycle_tightness(n: usize) -> Result<(BipartiteGraph, Vec<Matching>), ReductionError> {
    if n < 2 {
        return Err(ReductionError::NTooSmall(n));
    }
    // Cycle vertex 2k is A-vertex k, vertex 2k+1 is B-vertex k; edge j
    // joins cycle vertices j and j+1 (mod 2n).
    let mut edges = Vec::with_capacity(2 * n);
    for j in 0..2 * n {
        let (u, v) = (j, (j + 1) % (2 * n));
        let (even, odd) = if u % 2 == 0 { (u, v) } else { (v, u) };
        edges.push((even / 2, (odd - 1) / 2));
    }
    let graph = BipartiteGraph::new(n, n, &edges)?;
    let even_matching: ElementSet = (0..2 * n).step_by(2).collect();
    let odd_matching: ElementSet = (1..2 * n).step_by(2).collect();
    let mut matchings = Vec::with_capacity(2 * n - 2);
    for _ in 0..n - 1 {
        matchings.push(Matching::new(&graph, even_matching)?);
    }
    for _ in 0..n - 1 {
        matchings.push(Matching::new(&graph, odd_matching)?);
    }
    Ok((graph, matchings))
}

/// The complete bipartite tightness family for even n: K_{n,n} with the
/// n shifted matchings M_i = {(j, j+i mod n)}, i = 1..n. No rainbow
/// matching of size n exists.
pub fn gen_complete_bipartite_example(
    n: usize,
) -> Result<(BipartiteGraph, Vec<Matching>), ReductionError> {
    if n < 2 {
        return Err(ReductionError::NTooSmall(n));
    }
    if !n.is_multiple_of(2) {
        return Err(ReductionError::OddN(n));
    }
    let graph = BipartiteGraph::complete(n, n);
    let mut matchings = Vec::with_capacity(n);
    for i in 1..=n {
        let edges: ElementSet = (0..n).map(|j| j * n + (j + i) % n).collect();
        matchings.push(Matching::new(&graph, edges)?);
    }
    Ok((graph, matchings))
}

/// Layered ground for a list of matchings (used when feeding reduction
/// instances to the layered machinery).
pub fn matchings_layered_ground(matchings: &[Matching]) -> LayeredGround {
    let sets: Vec<ElementSet> = matchings.iter().map(|m| m.edges()).collect();
    LayeredGround::new(&sets)
}

#[cfg(test)]
mod tests;
