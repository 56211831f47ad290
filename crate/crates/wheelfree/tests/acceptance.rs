//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use wheelfree::catalogue::bundled;
use wheelfree::to_graph6;
use wheelfree_core::classify::{is_series_parallel, is_sparse, long_rich_square};
use wheelfree_core::color::{color_isk4_wheel_free, color_long_rich_square, edge_color_chordless_subcubic};
use wheelfree_core::cutsets::{
    find_clique_cutset, find_double_star_cutset, find_one_cutset, find_proper_two_cutset, find_star_cutset,
};
use wheelfree_core::graph::line_graph;
use wheelfree_core::line::line_graph_root;
use wheelfree_core::oracle::{
    extend_by_one_vertex, gen_in_class, glue_at_clique, is_isomorphic, oracle_chorded_cycle, oracle_chromatic,
    oracle_chromatic_index, oracle_isk4, oracle_wheel, GenKind,
};
use wheelfree_core::recognize::{decompose_isk4_wheel_free, recognize_chordless, recognize_isk4_wheel_free};
use wheelfree_core::{DecompositionTree, Graph, RejectReason};

const MAX_SLOPE: f64 = 3.3;
const GENERATED: usize = 500;
const RANDOM_CHORDLESS: usize = 1000;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(failures: &[String], detail: String) -> Outcome {
    let mut detail = detail;
    if let Some(first) = failures.first() {
        detail.push_str(&format!("; first failure {first}"));
    }
    Outcome { pass: failures.is_empty(), detail }
}

fn graphs_up_to(n: usize) -> Vec<Graph> {
    (0..=n).flat_map(|k| bundled(k).unwrap()).collect()
}

fn tree_within_bounds(g: &Graph, tree: &DecompositionTree) -> bool {
    tree.len() <= 4 * g.n() + 8 && tree.large_leaf_count() <= g.n().max(1)
}

fn recognition_agreement(graphs: &[Graph]) -> Outcome {
    let start = Instant::now();
    let bad: Vec<String> = graphs
        .par_iter()
        .filter_map(|g| {
            let truth = oracle_isk4(g).unwrap().is_none() && oracle_wheel(g).unwrap().is_none();
            let d = recognize_isk4_wheel_free(g);
            let cert_ok = d.rejection().and_then(|r| r.certificate.as_ref()).is_none_or(|c| c.validate(g));
            (d.is_in_class() != truth || !cert_ok).then(|| to_graph6(g))
        })
        .collect();
    let elapsed = start.elapsed();
    let in_time = elapsed <= Duration::from_secs(2 * 3600);
    let mut o = outcome(&bad, format!("{} graphs n<=8, {} disagreements, {:.2?}", graphs.len(), bad.len(), elapsed));
    o.pass &= in_time;
    o
}

fn generated_instances() -> Vec<(GenKind, Graph)> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut out = Vec::new();
    for i in 0..GENERATED {
        let kind = GenKind::ALL[i % GenKind::ALL.len()];
        loop {
            let size = rng.gen_range(kind.min_size().max(3)..=60);
            let g = gen_in_class(kind, size, rng.gen()).unwrap();
            if g.n() <= 60 {
                out.push((kind, g));
                break;
            }
        }
    }
    out
}

fn coloring(graphs: &[Graph], generated: &[(GenKind, Graph)]) -> Outcome {
    let mut bad: Vec<String> = graphs
        .par_iter()
        .filter(|g| recognize_isk4_wheel_free(g).is_in_class())
        .filter_map(|g| match color_isk4_wheel_free(g) {
            Ok(c) if c.is_proper(g) && c.colors_used() <= 3 => None,
            _ => Some(to_graph6(g)),
        })
        .collect();
    let in_class = graphs.par_iter().filter(|g| recognize_isk4_wheel_free(g).is_in_class()).count();
    let mut squares = 0;
    for (kind, g) in generated {
        let ok = if *kind == GenKind::LongRichSquare {
            // these carry a wheel; the dedicated colorer handles them
            squares += 1;
            let rejected =
                recognize_isk4_wheel_free(g).rejection().is_some_and(|r| r.reason == RejectReason::WheelWitness);
            let colored = long_rich_square(g)
                .and_then(|s| color_long_rich_square(g, &s).ok())
                .is_some_and(|c| c.is_proper(g) && c.colors_used() <= 3);
            rejected && colored
        } else {
            recognize_isk4_wheel_free(g).is_in_class()
                && color_isk4_wheel_free(g).is_ok_and(|c| c.is_proper(g) && c.colors_used() <= 3)
        };
        if !ok {
            bad.push(format!("{} {}", kind.label(), to_graph6(g)));
        }
    }
    let max_n = generated.iter().map(|(_, g)| g.n()).max().unwrap_or(0);
    outcome(
        &bad,
        format!(
            "{in_class} in-class catalogue graphs, {} generated (max n {max_n}, {squares} rich squares via their colorer), {} failures",
            generated.len(),
            bad.len()
        ),
    )
}

fn chordless_structure(graphs: &[Graph]) -> Outcome {
    let chordless: Vec<&Graph> = graphs.iter().filter(|g| oracle_chorded_cycle(g).is_none()).collect();
    let bad: Vec<String> = chordless
        .par_iter()
        .filter(|g| {
            let witness = find_one_cutset(g).or_else(|| find_proper_two_cutset(g));
            !(is_sparse(g) || witness.is_some_and(|w| w.validate(g)))
        })
        .map(|g| to_graph6(g))
        .collect();
    outcome(&bad, format!("{} chordless graphs n<=8, {} exceptions", chordless.len(), bad.len()))
}

fn chordless_agreement(graphs: &[Graph]) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    let random: Vec<Graph> = (0..RANDOM_CHORDLESS)
        .map(|_| {
            let edges: Vec<_> =
                (0..20).flat_map(|u| (u + 1..20).map(move |v| (u, v))).filter(|_| rng.gen_bool(0.15)).collect();
            Graph::from_edge_slice(20, &edges)
        })
        .collect();
    let bad: Vec<String> = graphs
        .par_iter()
        .chain(random.par_iter())
        .filter_map(|g| {
            let truth = oracle_chorded_cycle(g);
            let d = recognize_chordless(g);
            let cert = d.rejection().and_then(|r| r.certificate.as_ref());
            let ok = d.is_in_class() == truth.is_none()
                && truth.is_none_or(|c| c.validate(g))
                && cert.is_none_or(|c| c.validate(g))
                && (d.is_in_class() || cert.is_some());
            (!ok).then(|| to_graph6(g))
        })
        .collect();
    outcome(
        &bad,
        format!("{} catalogue + {} random G(20, 0.15), {} disagreements", graphs.len(), random.len(), bad.len()),
    )
}

fn isk4_free_structure(graphs: &[Graph]) -> Outcome {
    let free: Vec<&Graph> = graphs.par_iter().filter(|g| oracle_isk4(g).unwrap().is_none()).collect();
    let bad: Vec<String> = free
        .par_iter()
        .filter(|g| {
            let line = line_graph_root(g)
                .is_some_and(|r| r.root.max_degree() <= 3 && is_isomorphic(&line_graph(&r.root).0, g));
            let cut =
                [find_clique_cutset(g), find_proper_two_cutset(g), find_star_cutset(g), find_double_star_cutset(g)]
                    .into_iter()
                    .flatten()
                    .any(|w| w.validate(g));
            !(is_series_parallel(g) || line || cut)
        })
        .map(|g| to_graph6(g))
        .collect();
    outcome(&bad, format!("{} ISK4-free graphs n<=8, {} exceptions", free.len(), bad.len()))
}

fn petersen() -> Graph {
    let mut e = Vec::new();
    for i in 0..5 {
        e.extend([(i, (i + 1) % 5), (i, i + 5), (5 + i, 5 + (i + 2) % 5)]);
    }
    Graph::from_edge_slice(10, &e)
}

fn chromatic_examples() -> Outcome {
    let w5 = Graph::cycle(5).with_vertex(&[0, 1, 2, 3, 4]);
    let lp = line_graph(&petersen()).0;
    // square 0-1-2-3, long link 4-5 from {0,1} to {2,3}, short link 6
    let rich = Graph::from_edge_slice(
        7,
        &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1), (5, 2), (5, 3), (4, 5), (6, 0), (6, 1), (6, 2), (6, 3)],
    );
    let values = [
        oracle_chromatic(&w5).unwrap(),
        usize::from(oracle_isk4(&w5).unwrap().is_none()),
        oracle_chromatic(&lp).unwrap(),
        oracle_chromatic(&rich).unwrap(),
    ];
    let pass = values == [4, 1, 4, 4];
    Outcome {
        pass,
        detail: format!(
            "chi(W5)={} isk4-free={} chi(L(Petersen))={} chi(rich square, n=7)={}",
            values[0],
            values[1] == 1,
            values[2],
            values[3]
        ),
    }
}

fn tree_sizes(graphs: &[Graph], generated: &[(GenKind, Graph)]) -> Outcome {
    let inputs: Vec<&Graph> = graphs.iter().chain(generated.iter().map(|(_, g)| g)).collect();
    let bad: Vec<String> = inputs
        .par_iter()
        .filter(|g| decompose_isk4_wheel_free(g).is_ok_and(|t| !tree_within_bounds(g, &t)))
        .map(|g| to_graph6(g))
        .collect();
    let trees = inputs.par_iter().filter(|g| decompose_isk4_wheel_free(g).is_ok()).count();
    outcome(&bad, format!("{trees} trees checked, {} violations", bad.len()))
}

/// Line graphs of chordless subcubic graphs glued along edges into a chain
/// of at least `n` vertices.
fn glued_chain(n: usize, seed: u64) -> Graph {
    let mut g = gen_in_class(GenKind::LineOfChordlessSubcubic, 24, seed).unwrap();
    let mut piece_start = 0;
    let mut k = 1;
    while g.n() < n {
        let h = gen_in_class(GenKind::LineOfChordlessSubcubic, 24, seed + k).unwrap();
        k += 1;
        let ka = g.edges().filter(|&(u, _)| u >= piece_start).last().map(|(u, v)| vec![u, v]).unwrap();
        let kb = h.edges().next().map(|(u, v)| vec![u, v]).unwrap();
        piece_start = g.n();
        g = glue_at_clique(&g, &ka, &h, &kb);
    }
    g
}

fn scaling() -> Outcome {
    let mut points = Vec::new();
    let mut bad = Vec::new();
    for target in [100, 200, 400] {
        let g = glued_chain(target, 7);
        let mut times = Vec::new();
        for _ in 0..5 {
            let start = Instant::now();
            let d = recognize_isk4_wheel_free(&g);
            let c = color_isk4_wheel_free(&g);
            times.push(start.elapsed().as_secs_f64());
            if !d.is_in_class() || !c.is_ok_and(|c| c.is_proper(&g)) {
                bad.push(format!("n={}", g.n()));
            }
        }
        times.sort_by(f64::total_cmp);
        points.push((g.n() as f64, times[times.len() / 2]));
    }
    // least-squares slope of log t against log n
    let logs: Vec<(f64, f64)> = points.iter().map(|&(n, t)| (n.ln(), t.max(1e-9).ln())).collect();
    let mx = logs.iter().map(|p| p.0).sum::<f64>() / 3.0;
    let my = logs.iter().map(|p| p.1).sum::<f64>() / 3.0;
    let slope = logs.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum::<f64>()
        / logs.iter().map(|p| (p.0 - mx).powi(2)).sum::<f64>();
    let timings: Vec<String> = points.iter().map(|(n, t)| format!("n={n} {:.1}ms", t * 1e3)).collect();
    let mut o = outcome(&bad, format!("{}, slope {slope:.2} (limit {MAX_SLOPE})", timings.join(", ")));
    o.pass &= slope <= MAX_SLOPE;
    o
}

fn edge_coloring() -> Outcome {
    let keep = |h: &Graph| h.max_degree() <= 3 && oracle_chorded_cycle(h).is_none();
    let mut level = vec![Graph::empty(0)];
    let mut all = Vec::new();
    for _ in 0..9 {
        level = extend_by_one_vertex(&level, &mut |h| keep(h));
        all.extend(level.iter().cloned());
    }
    let bad: Vec<String> = all
        .par_iter()
        .filter(|h| {
            let colored = edge_color_chordless_subcubic(h).is_ok_and(|ec| ec.is_proper(h) && ec.colors_used() <= 3);
            !colored || oracle_chromatic_index(h).unwrap() > 3
        })
        .map(to_graph6)
        .collect();
    outcome(&bad, format!("{} chordless subcubic graphs n<=9, {} failures", all.len(), bad.len()))
}

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn main() -> ExitCode {
    let graphs = graphs_up_to(8);
    let generated = generated_instances();
    let criteria: Vec<Criterion> = vec![
        ("recognition agrees with the oracles", Box::new(|| recognition_agreement(&graphs))),
        ("class members are properly 3-colored", Box::new(|| coloring(&graphs, &generated))),
        ("chordless graphs are sparse or split", Box::new(|| chordless_structure(&graphs))),
        ("chordless recognition agrees with the oracle", Box::new(|| chordless_agreement(&graphs))),
        ("ISK4-free graphs are basic or have a cutset", Box::new(|| isk4_free_structure(&graphs))),
        ("four-chromatic examples", Box::new(chromatic_examples)),
        ("decomposition trees stay linear", Box::new(|| tree_sizes(&graphs, &generated))),
        ("running time grows at most cubically", Box::new(scaling)),
        ("chordless subcubic graphs are 3-edge-colored", Box::new(edge_coloring)),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        println!("criterion {} {}: {} ({})", i + 1, if o.pass { "PASS" } else { "FAIL" }, name, o.detail);
        failed += usize::from(!o.pass);
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
