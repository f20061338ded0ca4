use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use rainbow_matroids_cli::campaigns::{
    campaign_drisko, campaign_eta_recursion, campaign_lemma, campaign_main,
    campaign_matchability, campaign_tightness, VerificationReport,
};
use rainbow_matroids_cli::format::{parse_complex_file, parse_instance, ComplexFile};
use rainbow_matroids_core::homology::{betti, betti_vector, eta, EtaValue};
use rainbow_matroids_core::rainbow::find_rainbow;

#[derive(Parser)]
#[command(
    name = "rainbow-matroids",
    about = "Rainbow sets in the intersection of two matroids: exact search, \
             rational homology, and theorem-verification campaigns",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Campaign {
    Drisko,
    Main,
    Lemma,
    EtaRecursion,
    Matchability,
    Tightness,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    /// Cycle tightness family: 2n−2 matchings on C_{2n}, unsolvable.
    Cycle,
    /// Shifted matchings of K_{n,n} (even n), unsolvable.
    CompleteBipartite,
    /// A seeded random row-Latin matrix instance (solvable).
    Drisko,
    /// A seeded random hypothesis-satisfying two-matroid instance.
    Random,
}

#[derive(Subcommand)]
enum Command {
    /// Search an instance file for a rainbow selection.
    ///
    /// Prints the selection as `(element layer)` pairs sorted by layer,
    /// or NONE. Exit code 0 if found, 1 if none, 2 on input errors.
    Rainbow {
        file: PathBuf,
        /// Stably sort the sets ascending by size before searching
        /// (layers in the output then refer to the sorted order).
        #[arg(long)]
        sort_sets: bool,
    },
    /// Report Betti numbers up to the first nonvanishing one and the
    /// connectivity eta of a complex or hypergraph file.
    Eta { file: PathBuf },
    /// Report reduced Betti numbers of a complex or hypergraph file.
    Homology {
        file: PathBuf,
        /// Single dimension to report (default: all of -1..=dim).
        #[arg(long)]
        k: Option<isize>,
    },
    /// Run a verification campaign. Exit code 0 when every check passes,
    /// 1 when failures were found, 2 on bad parameters.
    Verify {
        campaign: Campaign,
        /// Target n (drisko, main, matchability, tightness) or ell (lemma).
        #[arg(long)]
        n: Option<usize>,
        /// Ground-size bound (eta-recursion) or total block size (lemma).
        #[arg(long)]
        ground: Option<usize>,
        /// Number of random instances.
        #[arg(long)]
        count: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Enumerate the full instance space instead of sampling.
        #[arg(long)]
        exhaustive: bool,
        /// Tightness family.
        #[arg(long)]
        family: Option<Family>,
    },
    /// Write a generated instance file.
    Gen {
        family: Family,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
}

fn read_file(path: &PathBuf) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))
}

fn cmd_rainbow(path: &PathBuf, sort_sets: bool) -> Result<ExitCode, String> {
    let text = read_file(path)?;
    let file = parse_instance(&text).map_err(|e| e.to_string())?;
    let mut inst = file.instance()?;
    if sort_sets {
        inst = inst.sorted_by_size();
    }
    let found = find_rainbow(&inst).map_err(|e| e.to_string())?;
    match found {
        Some(sel) => {
            let rendered: Vec<String> = sel
                .pairs()
                .iter()
                .map(|p| format!("({} {})", p.element, p.layer))
                .collect();
            println!("{}", rendered.join(" "));
            Ok(ExitCode::SUCCESS)
        }
        None => {
            println!("NONE");
            Ok(ExitCode::from(1))
        }
    }
}

fn cmd_eta(path: &PathBuf) -> Result<ExitCode, String> {
    let text = read_file(path)?;
    let file: ComplexFile = parse_complex_file(&text).map_err(|e| e.to_string())?;
    let complex = file.complex();
    let connectivity = eta(&complex).map_err(|e| e.to_string())?;
    if !complex.is_void() {
        let bv = betti_vector(&complex).map_err(|e| e.to_string())?;
        let upper = match connectivity {
            EtaValue::Finite(k) => k as isize - 1,
            EtaValue::Infinite => bv.max_index(),
        };
        let values: Vec<String> = (-1..=upper).map(|k| bv.get(k).to_string()).collect();
        println!("betti[-1..{upper}] = {}", values.join(" "));
    }
    println!("eta {connectivity}");
    Ok(ExitCode::SUCCESS)
}

fn cmd_homology(path: &PathBuf, k: Option<isize>) -> Result<ExitCode, String> {
    let text = read_file(path)?;
    let file = parse_complex_file(&text).map_err(|e| e.to_string())?;
    let complex = file.complex();
    match k {
        Some(k) => {
            let b = betti(&complex, k).map_err(|e| e.to_string())?;
            println!("betti[{k}] = {b}");
        }
        None => {
            let bv = betti_vector(&complex).map_err(|e| e.to_string())?;
            for k in -1..=bv.max_index() {
                println!("betti[{k}] = {}", bv.get(k));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(
    campaign: Campaign,
    n: Option<usize>,
    ground: Option<usize>,
    count: Option<usize>,
    seed: u64,
    exhaustive: bool,
    family: Option<Family>,
) -> Result<ExitCode, String> {
    let report: VerificationReport = match campaign {
        Campaign::Drisko => campaign_drisko(
            n.unwrap_or(2),
            exhaustive,
            count.unwrap_or(1000),
            seed,
        ),
        Campaign::Main => campaign_main(n.unwrap_or(2), count.unwrap_or(1000), seed),
        Campaign::Lemma => campaign_lemma(
            n.unwrap_or(2),
            exhaustive,
            ground.unwrap_or(7),
            count.unwrap_or(1000),
            seed,
        ),
        Campaign::EtaRecursion => {
            campaign_eta_recursion(ground.unwrap_or(6), count.unwrap_or(1000), seed)
        }
        Campaign::Matchability => campaign_matchability(count.unwrap_or(1000), seed),
        Campaign::Tightness => {
            let family = match family.unwrap_or(Family::Cycle) {
                Family::Cycle => "cycle",
                Family::CompleteBipartite => "complete-bipartite",
                Family::Drisko | Family::Random => {
                    return Err("tightness families are cycle and complete-bipartite".into())
                }
            };
            campaign_tightness(family, n.unwrap_or(2))
        }
    }
    .map_err(|e| e.to_string())?;

    print!("{}", report.stdout_text());
    eprintln!("time_ms {}", report.wall_time.as_millis());
    if report.succeeded() {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}

fn cmd_gen(family: Family, n: Option<usize>, seed: u64, out: &PathBuf) -> Result<ExitCode, String> {
    use rainbow_matroids_cli::campaigns::instance_file_from_matchings;
    use rainbow_matroids_cli::generate::gen_random_instance;
    use rainbow_matroids_core::reductions::{
        drisko_matrix_to_matchings, gen_complete_bipartite_example, gen_cycle_tightness,
        BipartiteGraph, IntMatrix,
    };
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    let text = match family {
        Family::Cycle => {
            let n = n.unwrap_or(2);
            let (graph, matchings) = gen_cycle_tightness(n).map_err(|e| e.to_string())?;
            instance_file_from_matchings(&graph, &matchings, n).serialize()
        }
        Family::CompleteBipartite => {
            let n = n.unwrap_or(2);
            let (graph, matchings) =
                gen_complete_bipartite_example(n).map_err(|e| e.to_string())?;
            instance_file_from_matchings(&graph, &matchings, n).serialize()
        }
        Family::Drisko => {
            let n = n.unwrap_or(2);
            if n == 0 {
                return Err("drisko needs n >= 1".into());
            }
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let rows: Vec<Vec<u64>> = {
                let mut columns = Vec::with_capacity(2 * n - 1);
                for _ in 0..2 * n - 1 {
                    let mut perm: Vec<u64> = (1..=n as u64).collect();
                    perm.shuffle(&mut rng);
                    columns.push(perm);
                }
                (0..n)
                    .map(|r| columns.iter().map(|c| c[r]).collect())
                    .collect()
            };
            let x = IntMatrix::from_rows(rows).map_err(|e| e.to_string())?;
            let matchings = drisko_matrix_to_matchings(&x).map_err(|e| e.to_string())?;
            let graph = BipartiteGraph::complete(n, n);
            instance_file_from_matchings(&graph, &matchings, n).serialize()
        }
        Family::Random => {
            let n = n.unwrap_or(2);
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let (file, _) = gen_random_instance(&mut rng, n).map_err(|e| e.to_string())?;
            file.serialize()
        }
    };
    std::fs::write(out, text).map_err(|e| format!("cannot write {}: {e}", out.display()))?;
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Rainbow { file, sort_sets } => cmd_rainbow(file, *sort_sets),
        Command::Eta { file } => cmd_eta(file),
        Command::Homology { file, k } => cmd_homology(file, *k),
        Command::Verify {
            campaign,
            n,
            ground,
            count,
            seed,
            exhaustive,
            family,
        } => cmd_verify(*campaign, *n, *ground, *count, *seed, *exhaustive, *family),
        Command::Gen {
            family,
            n,
            seed,
            out,
        } => cmd_gen(*family, *n, *seed, out),
    };
    match result {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
