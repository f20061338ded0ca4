//! Verification campaigns: seeded or exhaustive instance streams, one
//! theorem checked per campaign, zero-tolerance failure counting, and a
//! serialized reproducer for the first failure.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use rainbow_matroids_core::matroid::Matroid;
use rainbow_matroids_core::rainbow::{
    build_complex, find_rainbow, lemma_main_check, lift_matroid, matchability_check,
    verify_selection, LayeredGround, LemmaOutcome,
};
use rainbow_matroids_core::recursion::eta_recursion_check;
use rainbow_matroids_core::reductions::{
    drisko_matrix_to_matchings, gen_complete_bipartite_example, gen_cycle_tightness,
    matchings_to_instance, selection_to_diagonal, BipartiteGraph, IntMatrix, Matching,
};
use rainbow_matroids_core::set::ElementSet;

use crate::format::{InstanceFile, MatroidSpec};
use crate::generate::{gen_hypergraph_with_pivot, gen_lemma_instance, gen_random_instance, GenError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CampaignError {
    #[error("{0}")]
    BadParams(String),
    #[error("instance generation failed: {0}")]
    Generator(#[from] GenError),
}

/// The outcome of one campaign run. Everything except `wall_time` is a
/// pure function of the campaign parameters and seed.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub campaign: String,
    pub notes: Vec<(String, String)>,
    pub checked: usize,
    pub failures: usize,
    pub first_counterexample: Option<String>,
    pub wall_time: Duration,
}

impl VerificationReport {
    fn new(campaign: &str) -> Self {
        VerificationReport {
            campaign: campaign.to_string(),
            notes: Vec::new(),
            checked: 0,
            failures: 0,
            first_counterexample: None,
            wall_time: Duration::ZERO,
        }
    }

    fn note(&mut self, key: &str, value: impl ToString) {
        self.notes.push((key.to_string(), value.to_string()));
    }

    fn fail(&mut self, reproducer: impl FnOnce() -> String) {
        self.failures += 1;
        if self.first_counterexample.is_none() {
            self.first_counterexample = Some(reproducer());
        }
    }

    /// Deterministic report text: identical parameters and seed give
    /// byte-identical output (wall time is deliberately not included
    /// here; the binary reports it on stderr).
    pub fn stdout_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "campaign {}", self.campaign);
        for (k, v) in &self.notes {
            let _ = writeln!(out, "{k} {v}");
        }
        let _ = writeln!(out, "checked {}", self.checked);
        let _ = writeln!(out, "failures {}", self.failures);
        if let Some(cx) = &self.first_counterexample {
            let _ = writeln!(out, "first-counterexample:");
            out.push_str(cx);
            if !cx.ends_with('\n') {
                out.push('\n');
            }
            let _ = writeln!(out, "end-counterexample");
        }
        out
    }

    pub fn succeeded(&self) -> bool {
        self.failures == 0
    }
}

/// An instance file reconstructing a matchings-over-bipartite-graph
/// instance: both matroids rendered as partition matroids over the edge
/// ground set.
pub fn instance_file_from_matchings(
    graph: &BipartiteGraph,
    matchings: &[Matching],
    n: usize,
) -> InstanceFile {
    let blocks_for = |side_a: bool| -> Vec<Vec<usize>> {
        let size = if side_a { graph.side_a() } else { graph.side_b() };
        (0..size)
            .map(|v| {
                (0..graph.edge_count())
                    .filter(|&e| {
                        let (a, b) = graph.endpoints(e);
                        if side_a {
                            a == v
                        } else {
                            b == v
                        }
                    })
                    .collect::<Vec<usize>>()
            })
            .filter(|b| !b.is_empty())
            .collect()
    };
    InstanceFile {
        ground: graph.edge_count(),
        matroid_m: MatroidSpec::Partition {
            blocks: blocks_for(true),
        },
        matroid_n: MatroidSpec::Partition {
            blocks: blocks_for(false),
        },
        sets: matchings.iter().map(|m| m.edges().to_vec()).collect(),
        target: n,
    }
}

fn all_permutations(n: usize) -> Vec<Vec<u64>> {
    fn go(prefix: &mut Vec<u64>, rest: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if rest.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..rest.len() {
            let v = rest.remove(i);
            prefix.push(v);
            go(prefix, rest, out);
            prefix.pop();
            rest.insert(i, v);
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut (1..=n as u64).collect(), &mut out);
    out
}

/// Row-Latin diagonal verification. Exhaustive mode enumerates every
/// n × (2n−1) matrix with permutation columns (n ≤ 3); otherwise `count`
/// seeded random matrices are drawn. Each must admit a size-n rainbow
/// selection whose diagonal carries each of 1..n exactly once.
pub fn campaign_drisko(
    n: usize,
    exhaustive: bool,
    count: usize,
    seed: u64,
) -> Result<VerificationReport, CampaignError> {
    if n < 1 {
        return Err(CampaignError::BadParams("drisko needs n >= 1".into()));
    }
    let start = Instant::now();
    let mut report = VerificationReport::new("drisko");
    report.note("n", n);
    report.note("mode", if exhaustive { "exhaustive" } else { "random" });

    let perms = all_permutations(n);
    let m = 2 * n - 1;
    let check_matrix = |rows: Vec<Vec<u64>>, report: &mut VerificationReport| {
        let x = IntMatrix::from_rows(rows).expect("matrix shape is fixed");
        let matchings = drisko_matrix_to_matchings(&x).expect("columns are permutations");
        let graph = BipartiteGraph::complete(n, n);
        let inst =
            matchings_to_instance(&graph, &matchings, n).expect("matchings are independent");
        report.checked += 1;
        let found = find_rainbow(&inst).expect("drisko instances are desk scale");
        let ok = match found {
            Some(sel) => {
                verify_selection(&inst, &sel)
                    && match selection_to_diagonal(&sel, &x) {
                        Ok(diag) => {
                            diag.len() == n
                                && diag.entry_values(&x) == (1..=n as u64).collect::<Vec<_>>()
                        }
                        Err(_) => false,
                    }
            }
            None => false,
        };
        if !ok {
            report.fail(|| instance_file_from_matchings(&graph, &matchings, n).serialize());
        }
    };

    if exhaustive {
        if n > 3 {
            return Err(CampaignError::BadParams(
                "exhaustive drisko is limited to n <= 3".into(),
            ));
        }
        // One index per column over the permutation table.
        let mut idx = vec![0usize; m];
        'all: loop {
            let rows: Vec<Vec<u64>> = (0..n)
                .map(|r| idx.iter().map(|&c| perms[c][r]).collect())
                .collect();
            check_matrix(rows, &mut report);
            let mut k = m;
            while k > 0 {
                k -= 1;
                idx[k] += 1;
                if idx[k] < perms.len() {
                    continue 'all;
                }
                idx[k] = 0;
            }
            break;
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..count {
            let cols: Vec<&Vec<u64>> = (0..m).map(|_| perms.choose(&mut rng).unwrap()).collect();
            let rows: Vec<Vec<u64>> = (0..n)
                .map(|r| cols.iter().map(|c| c[r]).collect())
                .collect();
            check_matrix(rows, &mut report);
        }
    }

    report.wall_time = start.elapsed();
    Ok(report)
}

/// Main-theorem verification: seeded random hypothesis-satisfying
/// instances; every one must admit a rainbow selection.
pub fn campaign_main(n: usize, count: usize, seed: u64) -> Result<VerificationReport, CampaignError> {
    let start = Instant::now();
    let mut report = VerificationReport::new("main");
    report.note("n", n);
    report.note("count", count);
    report.note("seed", seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..count {
        let (file, inst) = gen_random_instance(&mut rng, n)?;
        report.checked += 1;
        let solved = match find_rainbow(&inst).expect("generated instances are desk scale") {
            Some(sel) => verify_selection(&inst, &sel),
            None => false,
        };
        if !solved {
            report.fail(|| file.serialize());
        }
    }
    report.wall_time = start.elapsed();
    Ok(report)
}

/// Greedy feasibility for the lemma hypothesis: the 2ℓ−1 largest block
/// ranks, ascending, satisfy ρ ≥ min(j, ℓ) iff any index choice does.
fn lemma_indices(blocks: &[ElementSet], n: &Matroid, ell: usize) -> Option<Vec<usize>> {
    if blocks.len() < 2 * ell - 1 {
        return None;
    }
    let mut ranked: Vec<(usize, usize)> = blocks
        .iter()
        .enumerate()
        .map(|(i, &b)| (n.rank(b), i))
        .collect();
    ranked.sort();
    let chosen = &ranked[ranked.len() - (2 * ell - 1)..];
    for (j, &(rank, _)) in chosen.iter().enumerate() {
        if rank < (j + 1).min(ell) {
            return None;
        }
    }
    Some(chosen.iter().map(|&(_, i)| i).collect())
}

fn lemma_reproducer(blocks: &[ElementSet], n: &Matroid, ell: usize) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# lemma instance, ell = {ell}");
    let _ = writeln!(out, "# ground {}", n.ground_size());
    let rendered: Vec<String> = blocks.iter().map(|b| b.to_string()).collect();
    let _ = writeln!(out, "# blocks {}", rendered.join(" "));
    let circuits: Vec<String> = n.circuits().iter().map(|c| c.to_string()).collect();
    let _ = writeln!(out, "# circuits of N: {}", circuits.join(" "));
    out
}

/// Partition-matroid connectivity bound. Exhaustive mode enumerates all
/// ordered block-size compositions with total ≤ `max_total` and pairs
/// each with a free matroid and seeded single-circuit matroids; random
/// mode draws `count` seeded block/matroid pairs. Whenever the rank
/// hypothesis is satisfiable, exact η(P ∩ N) must be at least ℓ.
pub fn campaign_lemma(
    ell: usize,
    exhaustive: bool,
    max_total: usize,
    count: usize,
    seed: u64,
) -> Result<VerificationReport, CampaignError> {
    if ell < 1 {
        return Err(CampaignError::BadParams("lemma needs ell >= 1".into()));
    }
    let start = Instant::now();
    let mut report = VerificationReport::new("lemma");
    report.note("ell", ell);
    report.note("mode", if exhaustive { "exhaustive" } else { "random" });
    let mut applicable = 0usize;

    let mut run_one =
        |blocks: &[ElementSet], n: &Matroid, report: &mut VerificationReport| {
            report.checked += 1;
            let Some(indices) = lemma_indices(blocks, n, ell) else {
                return;
            };
            applicable += 1;
            match lemma_main_check(blocks, n, ell, &indices) {
                Ok(LemmaOutcome::Holds { .. }) => {}
                Ok(LemmaOutcome::Violation { eta }) => {
                    report.fail(|| {
                        let mut text = lemma_reproducer(blocks, n, ell);
                        let _ = writeln!(text, "# exact eta {eta}");
                        text
                    });
                }
                Ok(LemmaOutcome::Inapplicable { .. }) => {
                    // The feasibility pre-check said otherwise: a bug.
                    report.fail(|| lemma_reproducer(blocks, n, ell));
                }
                Err(e) => {
                    let message = e.to_string();
                    report.fail(move || format!("# lemma check error: {message}\n"));
                }
            }
        };

    if exhaustive {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        // Ordered compositions of every total up to max_total.
        fn compositions(total: usize) -> Vec<Vec<usize>> {
            if total == 0 {
                return vec![Vec::new()];
            }
            let mut out = Vec::new();
            for first in 1..=total {
                for mut rest in compositions(total - first) {
                    rest.insert(0, first);
                    out.push(rest);
                }
            }
            out
        }
        for total in 1..=max_total {
            for sizes in compositions(total) {
                let mut blocks = Vec::with_capacity(sizes.len());
                let mut next = 0;
                for s in sizes {
                    blocks.push((next..next + s).collect::<ElementSet>());
                    next += s;
                }
                run_one(&blocks, &Matroid::free(total).unwrap(), &mut report);
                for _ in 0..2 {
                    let size = rng.random_range(1..=total);
                    let mut elems: Vec<usize> = (0..total).collect();
                    elems.shuffle(&mut rng);
                    elems.truncate(size);
                    let circuit: ElementSet = elems.into_iter().collect();
                    let n = Matroid::from_circuits(total, &[circuit]).unwrap();
                    run_one(&blocks, &n, &mut report);
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..count {
            let (blocks, n) = gen_lemma_instance(&mut rng, max_total);
            run_one(&blocks, &n, &mut report);
        }
    }

    report.note("applicable", applicable);
    report.wall_time = start.elapsed();
    Ok(report)
}

/// Deletion/contraction bound on seeded random hypergraph/pivot pairs,
/// compared through exact homology with ∞-aware arithmetic.
pub fn campaign_eta_recursion(
    max_ground: usize,
    count: usize,
    seed: u64,
) -> Result<VerificationReport, CampaignError> {
    if max_ground == 0 || max_ground > 10 {
        return Err(CampaignError::BadParams(
            "eta-recursion ground must be in 1..=10".into(),
        ));
    }
    let start = Instant::now();
    let mut report = VerificationReport::new("eta-recursion");
    report.note("ground", max_ground);
    report.note("count", count);
    report.note("seed", seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..count {
        let (h, pivot) = gen_hypergraph_with_pivot(&mut rng, max_ground);
        report.checked += 1;
        let check = eta_recursion_check(&h, pivot).expect("pivot is drawn minimal");
        if !check.holds() {
            report.fail(|| {
                let mut text = String::new();
                let _ = writeln!(text, "ground {}", h.ground_size());
                for e in h.edges() {
                    let rendered: Vec<String> =
                        e.iter().map(|v| v.to_string()).collect();
                    let _ = writeln!(text, "edge {}", rendered.join(" "));
                }
                let _ = writeln!(text, "# pivot edge {pivot}");
                let _ = writeln!(
                    text,
                    "# eta {} deleted {} contracted {}",
                    check.eta_full, check.eta_deleted, check.eta_contracted
                );
                text
            });
        }
    }
    report.wall_time = start.elapsed();
    Ok(report)
}

/// Matchability on the layered construction: replays the main-campaign
/// instance stream for n = 2, lifts and truncates M, builds the complex,
/// and demands that hypothesis-passing instances always contain a basis.
pub fn campaign_matchability(count: usize, seed: u64) -> Result<VerificationReport, CampaignError> {
    let start = Instant::now();
    let n = 2;
    let mut report = VerificationReport::new("matchability");
    report.note("n", n);
    report.note("count", count);
    report.note("seed", seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut hypothesis_passing = 0usize;
    for _ in 0..count {
        let (file, inst) = gen_random_instance(&mut rng, n)?;
        report.checked += 1;
        let layered = LayeredGround::new(inst.sets());
        let m_lifted = lift_matroid(&inst.matroid_m().truncate(n), &layered)
            .expect("layer elements are in the ground");
        let complex = build_complex(inst.matroid_n(), &layered);
        let outcome =
            matchability_check(&m_lifted, &complex).expect("layered complexes are desk scale");
        if outcome.hypothesis_ok {
            hypothesis_passing += 1;
            if outcome.basis_found.is_none() {
                report.fail(|| file.serialize());
            }
        }
    }
    report.note("hypothesis-passing", hypothesis_passing);
    report.wall_time = start.elapsed();
    Ok(report)
}

/// Tightness families. `cycle`: 2n−2 matchings on C_{2n} must be
/// unsolvable at size n, and appending one more size-n matching must
/// make the instance solvable. `complete-bipartite`: the n shifted
/// matchings of K_{n,n} (even n) must be unsolvable at size n. Exit
/// success means "unsolvable as expected".
pub fn campaign_tightness(family: &str, n: usize) -> Result<VerificationReport, CampaignError> {
    let start = Instant::now();
    let mut report = VerificationReport::new("tightness");
    report.note("family", family);
    report.note("n", n);
    match family {
        "cycle" => {
            let (graph, mut matchings) = gen_cycle_tightness(n)
                .map_err(|e| CampaignError::BadParams(e.to_string()))?;
            let inst = matchings_to_instance(&graph, &matchings, n)
                .expect("cycle matchings are matchings");
            report.checked += 1;
            let unsolvable = find_rainbow(&inst)
                .expect("cycle instances are desk scale")
                .is_none();
            report.note("unsolvable-as-expected", unsolvable);
            if !unsolvable {
                report.fail(|| instance_file_from_matchings(&graph, &matchings, n).serialize());
            }

            matchings.push(matchings[0].clone());
            let extended = matchings_to_instance(&graph, &matchings, n)
                .expect("cycle matchings are matchings");
            report.checked += 1;
            let solvable = find_rainbow(&extended)
                .expect("cycle instances are desk scale")
                .is_some();
            report.note("extension-solvable", solvable);
            if !solvable {
                report.fail(|| instance_file_from_matchings(&graph, &matchings, n).serialize());
            }
        }
        "complete-bipartite" => {
            let (graph, matchings) = gen_complete_bipartite_example(n)
                .map_err(|e| CampaignError::BadParams(e.to_string()))?;
            let inst = matchings_to_instance(&graph, &matchings, n)
                .expect("shifted matchings are matchings");
            report.checked += 1;
            let unsolvable = find_rainbow(&inst)
                .expect("complete bipartite instances are desk scale")
                .is_none();
            report.note("unsolvable-as-expected", unsolvable);
            if !unsolvable {
                report.fail(|| instance_file_from_matchings(&graph, &matchings, n).serialize());
            }
        }
        other => {
            return Err(CampaignError::BadParams(format!(
                "unknown tightness family `{other}` (expected cycle or complete-bipartite)"
            )))
        }
    }
    report.wall_time = start.elapsed();
    Ok(report)
}
