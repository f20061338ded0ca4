//! Finite matroids with several interchangeable realizations.
//!
//! A matroid here is a ground set `{0, ..., n-1}` plus an independence
//! oracle. Concrete realizations (uniform, partition, graphic, linear,
//! explicit families, circuit families) and derived ones (minors,
//! truncations, lifts) all answer the same queries: independence, rank,
//! circuits, flats. The literature equivalently treats a matroid as a
//! hypergraph whose "edges" are the independent sets; this crate says
//! "independent set" throughout.

mod axioms;

pub use axioms::check_matroid_axioms;

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::error::MatroidError;
use crate::set::{k_subsets, sort_graded, ElementSet, MAX_GROUND};

/// Explicit independent-set families are only stored for small grounds.
pub const MAX_EXPLICIT_GROUND: usize = 16;

#[derive(Debug, Clone)]
enum Realization {
    /// Full list of independent sets.
    Explicit(std::collections::HashSet<u64>),
    /// Independence = contains no circuit.
    Circuits(Vec<ElementSet>),
    /// Independence = size at most `k`.
    Uniform(usize),
    /// Independence = at most one element per block; elements outside
    /// every block are loops.
    Partition(Vec<ElementSet>),
    /// Ground elements are edges of a multigraph; independence = acyclic.
    Graphic {
        vertices: usize,
        endpoints: Vec<(usize, usize)>,
    },
    /// Ground elements are vector columns over GF(p); independence =
    /// linear independence.
    Linear { prime: u64, columns: Vec<Vec<u64>> },
    /// Contraction of `contracted` followed by restriction to `keep`
    /// (in base-ground coordinates), relabeled densely.
    Minor {
        base: Arc<Matroid>,
        keep: Vec<usize>,
        contracted: ElementSet,
        contracted_rank: usize,
    },
    /// Independent sets of the base of size at most `limit`.
    Truncated { base: Arc<Matroid>, limit: usize },
    /// Ground elements are (element, layer) pairs; independence =
    /// pairwise distinct underlying elements whose set is independent in
    /// the base. Layers may repeat.
    Lifted {
        base: Arc<Matroid>,
        pairs: Vec<(usize, usize)>,
    },
}

/// A finite matroid on a dense 0-based ground set.
#[derive(Debug)]
pub struct Matroid {
    ground: usize,
    realization: Realization,
    rank_cache: Mutex<HashMap<u64, usize>>,
}

impl Clone for Matroid {
    fn clone(&self) -> Self {
        Matroid {
            ground: self.ground,
            realization: self.realization.clone(),
            rank_cache: Mutex::new(self.rank_cache.lock().unwrap().clone()),
        }
    }
}

fn check_ground(n: usize) -> Result<(), MatroidError> {
    if n > MAX_GROUND {
        Err(MatroidError::GroundTooLarge(n))
    } else {
        Ok(())
    }
}

fn check_subset(set: ElementSet, ground: usize) -> Result<(), MatroidError> {
    if set.is_subset_of(ElementSet::full(ground)) {
        Ok(())
    } else {
        Err(MatroidError::NotASubset { set, ground })
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Matroid {
    fn new(ground: usize, realization: Realization) -> Self {
        Matroid {
            ground,
            realization,
            rank_cache: Mutex::new(HashMap::new()),
        }
    }

    /// The uniform matroid U(k, n): independent sets are the subsets of
    /// size at most `k`.
    pub fn uniform(n: usize, k: usize) -> Result<Self, MatroidError> {
        check_ground(n)?;
        if k > n {
            return Err(MatroidError::RankExceedsGround { k, n });
        }
        Ok(Matroid::new(n, Realization::Uniform(k)))
    }

    /// The free matroid: every subset independent.
    pub fn free(n: usize) -> Result<Self, MatroidError> {
        Matroid::uniform(n, n)
    }

    /// Partition matroid: a set is independent iff it meets each block in
    /// at most one element. Elements outside every block are loops (they
    /// belong to no partial rainbow set of the blocks).
    pub fn partition(ground: usize, blocks: &[ElementSet]) -> Result<Self, MatroidError> {
        check_ground(ground)?;
        for (i, &a) in blocks.iter().enumerate() {
            check_subset(a, ground)?;
            for &b in &blocks[i + 1..] {
                if !a.intersect(b).is_empty() {
                    return Err(MatroidError::OverlappingBlocks { a, b });
                }
            }
        }
        Ok(Matroid::new(ground, Realization::Partition(blocks.to_vec())))
    }

    /// Graphic matroid of a multigraph: ground element `i` is edge `i`,
    /// and a set is independent iff the edges form no cycle. Self-loops
    /// and parallel edges are allowed.
    pub fn graphic(vertices: usize, endpoints: &[(usize, usize)]) -> Result<Self, MatroidError> {
        check_ground(endpoints.len())?;
        for &(u, v) in endpoints {
            for w in [u, v] {
                if w >= vertices {
                    return Err(MatroidError::VertexOutOfRange {
                        vertex: w,
                        vertices,
                    });
                }
            }
        }
        Ok(Matroid::new(
            endpoints.len(),
            Realization::Graphic {
                vertices,
                endpoints: endpoints.to_vec(),
            },
        ))
    }

    /// Linear matroid of a list of column vectors over GF(p).
    pub fn linear(prime: u64, columns: &[Vec<u64>]) -> Result<Self, MatroidError> {
        check_ground(columns.len())?;
        if !is_prime(prime) {
            return Err(MatroidError::NonPrimeModulus(prime));
        }
        if let Some(first) = columns.first() {
            for col in columns {
                if col.len() != first.len() {
                    return Err(MatroidError::ColumnLengthMismatch {
                        first: first.len(),
                        other: col.len(),
                    });
                }
            }
        }
        let columns: Vec<Vec<u64>> = columns
            .iter()
            .map(|c| c.iter().map(|&x| x % prime).collect())
            .collect();
        let n = columns.len();
        Ok(Matroid::new(n, Realization::Linear { prime, columns }))
    }

    /// Builds a matroid from its circuit family. The family must be an
    /// antichain of nonempty sets satisfying the circuit elimination
    /// axiom; violations are rejected with a witness.
    pub fn from_circuits(ground: usize, circuits: &[ElementSet]) -> Result<Self, MatroidError> {
        check_ground(ground)?;
        for &c in circuits {
            check_subset(c, ground)?;
        }
        axioms::check_circuit_axioms(circuits)?;
        let mut circuits = circuits.to_vec();
        circuits.dedup();
        sort_graded(&mut circuits);
        circuits.dedup();
        Ok(Matroid::new(ground, Realization::Circuits(circuits)))
    }

    /// Builds a matroid from the full list of its independent sets. The
    /// family is validated against the independence axioms.
    pub fn from_independent_sets(
        ground: usize,
        family: &[ElementSet],
    ) -> Result<Self, MatroidError> {
        check_ground(ground)?;
        if ground > MAX_EXPLICIT_GROUND {
            return Err(MatroidError::ExplicitTooLarge {
                got: ground,
                limit: MAX_EXPLICIT_GROUND,
            });
        }
        for &s in family {
            check_subset(s, ground)?;
        }
        check_matroid_axioms(ground, family)?;
        let set: std::collections::HashSet<u64> = family.iter().map(|s| s.bits()).collect();
        Ok(Matroid::new(ground, Realization::Explicit(set)))
    }

    /// Ground set size.
    pub fn ground_size(&self) -> usize {
        self.ground
    }

    pub fn ground_set(&self) -> ElementSet {
        ElementSet::full(self.ground)
    }

    /// The independence oracle.
    pub fn is_independent(&self, set: ElementSet) -> bool {
        debug_assert!(set.is_subset_of(self.ground_set()));
        match &self.realization {
            Realization::Explicit(family) => family.contains(&set.bits()),
            Realization::Circuits(circuits) => {
                circuits.iter().all(|c| !c.is_subset_of(set))
            }
            Realization::Uniform(k) => set.len() <= *k,
            Realization::Partition(blocks) => {
                let mut covered = ElementSet::EMPTY;
                for &block in blocks {
                    if set.intersect(block).len() > 1 {
                        return false;
                    }
                    covered = covered.union(block);
                }
                set.is_subset_of(covered)
            }
            Realization::Graphic {
                vertices,
                endpoints,
            } => {
                let mut uf = UnionFind::new(*vertices);
                set.iter().all(|e| {
                    let (u, v) = endpoints[e];
                    uf.union(u, v)
                })
            }
            Realization::Linear { prime, columns } => {
                gf_rank(*prime, columns, set) == set.len()
            }
            Realization::Minor {
                base,
                keep,
                contracted,
                contracted_rank,
            } => {
                let mapped: ElementSet = set.iter().map(|e| keep[e]).collect();
                base.rank(mapped.union(*contracted)) == set.len() + contracted_rank
            }
            Realization::Truncated { base, limit } => {
                set.len() <= *limit && base.is_independent(set)
            }
            Realization::Lifted { base, pairs } => {
                let mut elements = ElementSet::EMPTY;
                for i in set.iter() {
                    let (x, _) = pairs[i];
                    if elements.contains(x) {
                        return false;
                    }
                    elements = elements.with(x);
                }
                base.is_independent(elements)
            }
        }
    }

    /// Rank of a subset: the size of the largest independent subset,
    /// computed greedily (valid in any matroid) and memoized.
    pub fn rank(&self, set: ElementSet) -> usize {
        if let Some(&r) = self.rank_cache.lock().unwrap().get(&set.bits()) {
            return r;
        }
        let mut chosen = ElementSet::EMPTY;
        for e in set.iter() {
            if self.is_independent(chosen.with(e)) {
                chosen = chosen.with(e);
            }
        }
        let r = chosen.len();
        self.rank_cache.lock().unwrap().insert(set.bits(), r);
        r
    }

    /// Rank of the whole matroid.
    pub fn rank_full(&self) -> usize {
        self.rank(self.ground_set())
    }

    pub fn is_loop(&self, e: usize) -> bool {
        !self.is_independent(ElementSet::singleton(e))
    }

    pub fn loops(&self) -> ElementSet {
        (0..self.ground).filter(|&e| self.is_loop(e)).collect()
    }

    /// An element is a coloop iff it lies in no circuit, equivalently iff
    /// it belongs to every basis.
    pub fn is_coloop(&self, e: usize) -> bool {
        self.rank(self.ground_set().without(e)) < self.rank_full()
    }

    /// All circuits (minimal dependent sets), in graded lexicographic
    /// order: by size, then by sorted element lists.
    pub fn circuits(&self) -> Vec<ElementSet> {
        let mut found: Vec<ElementSet> = Vec::new();
        for size in 1..=self.ground {
            for cand in k_subsets(self.ground, size) {
                if found.iter().any(|c| c.is_subset_of(cand)) {
                    continue;
                }
                if !self.is_independent(cand) {
                    found.push(cand);
                }
            }
        }
        sort_graded(&mut found);
        found
    }

    /// The closure of `set`: the minimal flat containing it.
    pub fn closure(&self, set: ElementSet) -> ElementSet {
        let r = self.rank(set);
        let mut cl = set;
        for e in self.ground_set().minus(set).iter() {
            if self.rank(set.with(e)) == r {
                cl = cl.with(e);
            }
        }
        cl
    }

    /// All flats with their ranks, in graded lexicographic order. A flat
    /// is a set whose rank strictly increases when any outside element is
    /// added.
    pub fn flats(&self) -> Vec<(ElementSet, usize)> {
        let mut out = Vec::new();
        for f in self.ground_set().subsets() {
            let r = self.rank(f);
            let is_flat = self
                .ground_set()
                .minus(f)
                .iter()
                .all(|e| self.rank(f.with(e)) > r);
            if is_flat {
                out.push((f, r));
            }
        }
        out.sort_by(|a, b| a.0.cmp_graded(b.0));
        out
    }

    /// Contraction M/S on the ground set V \ S, relabeled densely in
    /// ascending order of the surviving elements.
    pub fn contract(&self, set: ElementSet) -> Result<Self, MatroidError> {
        check_subset(set, self.ground)?;
        self.minor(set, self.ground_set().minus(set))
    }

    /// Restriction M|S on the ground set S, relabeled densely.
    pub fn restrict(&self, set: ElementSet) -> Result<Self, MatroidError> {
        check_subset(set, self.ground)?;
        self.minor(ElementSet::EMPTY, set)
    }

    /// The quotient M.S: contraction of the complement of S, viewed on S.
    /// Equivalently, the sets e ⊆ S such that e ∪ f is independent for
    /// every independent f disjoint from S.
    pub fn quotient_to(&self, set: ElementSet) -> Result<Self, MatroidError> {
        check_subset(set, self.ground)?;
        self.minor(self.ground_set().minus(set), set)
    }

    fn minor(&self, contracted: ElementSet, keep: ElementSet) -> Result<Self, MatroidError> {
        debug_assert!(contracted.intersect(keep).is_empty());
        let contracted_rank = self.rank(contracted);
        Ok(Matroid::new(
            keep.len(),
            Realization::Minor {
                base: Arc::new(self.clone()),
                keep: keep.to_vec(),
                contracted,
                contracted_rank,
            },
        ))
    }

    /// Truncation to rank `k`: independent sets of size at most `k`.
    pub fn truncate(&self, k: usize) -> Self {
        Matroid::new(
            self.ground,
            Realization::Truncated {
                base: Arc::new(self.clone()),
                limit: k,
            },
        )
    }

    /// The lift of this matroid to a layered ground set of
    /// (element, layer) pairs: a set of pairs is independent iff the
    /// underlying elements are pairwise distinct and form an independent
    /// set. Layers play no role here.
    pub fn lift(&self, pairs: &[(usize, usize)]) -> Result<Self, MatroidError> {
        check_ground(pairs.len())?;
        for &(x, _) in pairs {
            if x >= self.ground {
                return Err(MatroidError::ElementOutOfRange {
                    element: x,
                    ground: self.ground,
                });
            }
        }
        Ok(Matroid::new(
            pairs.len(),
            Realization::Lifted {
                base: Arc::new(self.clone()),
                pairs: pairs.to_vec(),
            },
        ))
    }

    /// All independent sets, by brute force. Intended for desk-scale
    /// grounds only.
    pub fn independent_sets(&self) -> Vec<ElementSet> {
        self.ground_set()
            .subsets()
            .filter(|&s| self.is_independent(s))
            .collect()
    }

    /// True iff the two matroids have the same ground size and identical
    /// independence oracles (checked exhaustively).
    pub fn same_independence(&self, other: &Matroid) -> bool {
        self.ground == other.ground
            && self
                .ground_set()
                .subsets()
                .all(|s| self.is_independent(s) == other.is_independent(s))
    }
}

/// Rank over GF(p) of the selected columns.
fn gf_rank(p: u64, columns: &[Vec<u64>], set: ElementSet) -> usize {
    let mut mat: Vec<Vec<u64>> = set.iter().map(|i| columns[i].clone()).collect();
    if mat.is_empty() {
        return 0;
    }
    let rows = mat[0].len();
    let mut rank = 0;
    for row in 0..rows {
        if rank == mat.len() {
            break;
        }
        let pivot = (rank..mat.len()).find(|&c| !mat[c][row].is_multiple_of(p));
        let Some(pivot) = pivot else { continue };
        mat.swap(rank, pivot);
        let inv = mod_inverse(mat[rank][row] % p, p);
        for c in rank + 1..mat.len() {
            let factor = (mat[c][row] % p) * inv % p;
            if factor == 0 {
                continue;
            }
            for r in row..rows {
                let sub = factor * (mat[rank][r] % p) % p;
                mat[c][r] = (mat[c][r] % p + p - sub) % p;
            }
        }
        rank += 1;
    }
    rank
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2) mod p for prime p.
    let mut result = 1u64;
    let mut base = a % p;
    let mut exp = p - 2;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    result
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if `u` and `v` were already connected (a cycle).
    fn union(&mut self, u: usize, v: usize) -> bool {
        let (ru, rv) = (self.find(u), self.find(v));
        if ru == rv {
            return false;
        }
        self.parent[ru] = rv;
        true
    }
}
