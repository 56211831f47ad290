//! Cross-validation of the decision procedures against the brute-force
//! oracles on the full catalogue.

use rayon::prelude::*;
use wheelfree_core::classify::is_series_parallel;
use wheelfree_core::color::color_isk4_wheel_free;
use wheelfree_core::oracle::{
    oracle_chorded_cycle, oracle_chromatic, oracle_isk4, oracle_series_parallel, oracle_wheel, TooLarge,
};
use wheelfree_core::recognize::{recognize_chordless, recognize_isk4_wheel_free};
use wheelfree_core::Graph;

use crate::formats::to_graph6;

/// Outcome of one failed comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Finding {
    /// An algorithm and its oracle (or a checked bound) disagree.
    Disagreement { check: &'static str, graph6: String },
    /// An oracle refused the graph as too large.
    Cap { oracle: &'static str, graph6: String, cap: usize },
}

/// Runs every comparison on `g`.
pub fn cross_validate(g: &Graph) -> Vec<Finding> {
    let mut findings = Vec::new();
    let g6 = || to_graph6(g);
    let mut disagree = |check: &'static str| findings.push(Finding::Disagreement { check, graph6: g6() });
    let mut caps = Vec::new();
    let mut cap =
        |oracle: &'static str, e: TooLarge| caps.push(Finding::Cap { oracle, graph6: to_graph6(g), cap: e.cap });

    let decision = recognize_isk4_wheel_free(g);
    match (oracle_isk4(g), oracle_wheel(g)) {
        (Ok(isk4), Ok(wheel)) => {
            if decision.is_in_class() != (isk4.is_none() && wheel.is_none()) {
                disagree("recognize");
            }
        }
        (Err(e), _) => cap("isk4", e),
        (_, Err(e)) => cap("wheel", e),
    }
    if let Some(r) = decision.rejection() {
        if r.certificate.as_ref().is_some_and(|c| !c.validate(g)) {
            disagree("certificate");
        }
    }
    if let Some(tree) = decision.tree() {
        if tree.len() > 4 * g.n() + 8 || tree.large_leaf_count() > g.n().max(1) {
            disagree("tree-size");
        }
        match color_isk4_wheel_free(g) {
            Ok(c) if c.is_proper(g) => {}
            _ => disagree("color"),
        }
        match oracle_chromatic(g) {
            Ok(k) if k <= 3 => {}
            Ok(_) => disagree("chromatic"),
            Err(e) => cap("chromatic", e),
        }
    }

    let chordless = recognize_chordless(g);
    let chord = oracle_chorded_cycle(g);
    if chordless.is_in_class() != chord.is_none() || chord.is_some_and(|c| !c.validate(g)) {
        disagree("chordless");
    }

    match oracle_series_parallel(g) {
        Ok(sp) if sp != is_series_parallel(g) => disagree("series-parallel"),
        Ok(_) => {}
        Err(e) => cap("sp", e),
    }
    findings.extend(caps);
    findings
}

/// Findings over all graphs, in input order; graphs are checked in parallel.
pub fn cross_validate_all(graphs: &[Graph]) -> Vec<Finding> {
    graphs.par_iter().map(cross_validate).collect::<Vec<_>>().into_iter().flatten().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_graphs_agree() {
        for g in [Graph::complete(4), Graph::cycle(5), Graph::complete_bipartite(3, 3), Graph::path(4)] {
            assert_eq!(cross_validate(&g), vec![]);
        }
    }
}
