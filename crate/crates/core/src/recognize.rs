//! Deciders for the {ISK4, wheel}-free class and for chordless graphs.

use alloc::vec::Vec;

use crate::classify::{classify_leaf, is_sparse, LeafClass};
use crate::graph::{Graph, VertexSet};
use crate::oracle::{oracle_chorded_cycle, oracle_isk4, oracle_wheel, Certificate};
use crate::tree::{clique_cutset_tree, one_cutset_tree, DecompositionTree, LeafTag, NodeKind, Origin};

/// Largest input for which rejections are upgraded with an oracle witness.
pub const WITNESS_LIMIT: usize = 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RejectReason {
    K4Found,
    /// A clique cutset on four or more vertices. Unreachable once K4
    /// subgraphs are screened out; kept for report compatibility.
    CliqueCutsetTooBig,
    UnclassifiedLeaf,
    WheelWitness,
    Isk4Witness,
    ChordedCycle,
    NotSparseLeaf,
}

impl RejectReason {
    pub fn label(self) -> &'static str {
        match self {
            RejectReason::K4Found => "k4",
            RejectReason::CliqueCutsetTooBig => "clique-cutset-too-big",
            RejectReason::UnclassifiedLeaf => "unclassified-leaf",
            RejectReason::WheelWitness => "wheel",
            RejectReason::Isk4Witness => "isk4",
            RejectReason::ChordedCycle => "chorded-cycle",
            RejectReason::NotSparseLeaf => "not-sparse-leaf",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Rejection {
    pub reason: RejectReason,
    pub certificate: Option<Certificate>,
    /// Input vertices of the failing leaf, when the rejection comes from one.
    pub leaf: Option<VertexSet>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Decision {
    InClass(DecompositionTree),
    NotInClass(Rejection),
}

impl Decision {
    pub fn is_in_class(&self) -> bool {
        matches!(self, Decision::InClass(_))
    }

    pub fn tree(&self) -> Option<&DecompositionTree> {
        match self {
            Decision::InClass(t) => Some(t),
            Decision::NotInClass(_) => None,
        }
    }

    pub fn rejection(&self) -> Option<&Rejection> {
        match self {
            Decision::InClass(_) => None,
            Decision::NotInClass(r) => Some(r),
        }
    }
}

/// Four pairwise adjacent vertices (sorted), found by extending each edge by
/// two adjacent common neighbors.
pub fn contains_k4_subgraph(g: &Graph) -> Option<VertexSet> {
    for (u, v) in g.edges() {
        let common: Vec<usize> = g.neighbors(u).iter().copied().filter(|&w| w > v && g.has_edge(v, w)).collect();
        for (i, &w) in common.iter().enumerate() {
            if let Some(&x) = common[i + 1..].iter().find(|&&x| g.has_edge(w, x)) {
                return Some(alloc::vec![u, v, w, x]);
            }
        }
    }
    None
}

fn input_vertices(origin: &[Origin]) -> VertexSet {
    let mut vs: VertexSet = origin
        .iter()
        .filter_map(|o| match o {
            Origin::Input(v) => Some(*v),
            Origin::Marker => None,
        })
        .collect();
    vs.sort_unstable();
    vs
}

/// Decides membership in the {ISK4, wheel}-free class.
///
/// Builds the clique-cutset tree, refines its leaves along proper 2-cutsets
/// and classifies the final leaves. Rejections of inputs with at most
/// [`WITNESS_LIMIT`] vertices carry an oracle witness.
pub fn recognize_isk4_wheel_free(g: &Graph) -> Decision {
    match decompose_isk4_wheel_free(g) {
        Ok(tree) => classify_tree(g, tree),
        Err(r) => Decision::NotInClass(r),
    }
}

/// First phase of [`recognize_isk4_wheel_free`]: K4 screen, clique-cutset
/// tree, then proper-2-cutset refinement. Leaves are left pending.
pub fn decompose_isk4_wheel_free(g: &Graph) -> Result<DecompositionTree, Rejection> {
    let k4 =
        |k: [usize; 4]| Rejection { reason: RejectReason::K4Found, certificate: Some(Certificate::K4(k)), leaf: None };
    if let Some(k) = contains_k4_subgraph(g) {
        return Err(k4([k[0], k[1], k[2], k[3]]));
    }
    let mut tree = clique_cutset_tree(g).map_err(|e| k4(e.0))?;
    tree.refine_proper_two_cutsets();
    Ok(tree)
}

/// Second phase of [`recognize_isk4_wheel_free`]: classifies every leaf of a
/// tree built by [`decompose_isk4_wheel_free`] for `g`.
pub fn classify_tree(g: &Graph, mut tree: DecompositionTree) -> Decision {
    let mut failed = None;
    for i in 0..tree.len() {
        if !matches!(tree.nodes[i].kind, NodeKind::Leaf(_)) {
            continue;
        }
        let leaf = &tree.nodes[i].graph;
        debug_assert!(crate::cutsets::find_clique_cutset(leaf).is_none(), "marker split produced a clique cutset");
        let class = classify_leaf(leaf);
        if !class.is_accepted() && failed.is_none() {
            failed = Some(i);
        }
        tree.nodes[i].kind = NodeKind::Leaf(LeafTag::Class(class));
    }
    let Some(i) = failed else { return Decision::InClass(tree) };
    let node = &tree.nodes[i];
    let leaf = Some(input_vertices(&node.origin));
    let mut rejection = Rejection { reason: RejectReason::UnclassifiedLeaf, certificate: None, leaf };
    if let NodeKind::Leaf(LeafTag::Class(LeafClass::LongRichSquare(shape))) = &node.kind {
        rejection.reason = RejectReason::WheelWitness;
        let (hole, hub) = shape.wheel(&node.graph);
        let lift = |v: usize| match node.origin[v] {
            Origin::Input(x) => Some(x),
            Origin::Marker => None,
        };
        // a wheel avoiding marker vertices is induced in the input as well
        if let (Some(hole), Some(hub)) = (hole.iter().map(|&v| lift(v)).collect::<Option<Vec<_>>>(), lift(hub)) {
            rejection.certificate = Some(Certificate::Wheel { hole, hub });
        }
    }
    if rejection.certificate.is_none() && g.n() <= WITNESS_LIMIT {
        if let Ok(Some(c)) = oracle_wheel(g) {
            rejection.reason = RejectReason::WheelWitness;
            rejection.certificate = Some(c);
        } else if let Ok(Some(c)) = oracle_isk4(g) {
            rejection.reason = RejectReason::Isk4Witness;
            rejection.certificate = Some(c);
        }
    }
    Decision::NotInClass(rejection)
}

/// Decides whether every cycle of `g` is chordless.
///
/// Splits `g` into blocks, refines the blocks along proper 2-cutsets and
/// accepts iff every leaf is sparse. Rejections carry a chorded cycle.
pub fn recognize_chordless(g: &Graph) -> Decision {
    let mut tree = one_cutset_tree(g);
    tree.refine_proper_two_cutsets();
    let mut failed = None;
    for i in 0..tree.len() {
        if !matches!(tree.nodes[i].kind, NodeKind::Leaf(_)) {
            continue;
        }
        let sparse = is_sparse(&tree.nodes[i].graph);
        if !sparse && failed.is_none() {
            failed = Some(i);
        }
        tree.nodes[i].kind = NodeKind::Leaf(LeafTag::Sparse(sparse));
    }
    let Some(i) = failed else { return Decision::InClass(tree) };
    let certificate = oracle_chorded_cycle(g);
    let reason = if certificate.is_some() { RejectReason::ChordedCycle } else { RejectReason::NotSparseLeaf };
    Decision::NotInClass(Rejection { reason, certificate, leaf: Some(input_vertices(&tree.nodes[i].origin)) })
}

/// Leaf classes of an accepted tree, in node order.
pub fn leaf_classes(tree: &DecompositionTree) -> Vec<&LeafClass> {
    tree.leaves()
        .filter_map(|(_, n)| match &n.kind {
            NodeKind::Leaf(LeafTag::Class(c)) => Some(c),
            _ => None,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prism() -> Graph {
        Graph::from_edge_slice(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])
    }

    fn theta222() -> Graph {
        Graph::from_edge_slice(5, &[(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)])
    }

    #[test]
    fn prism_is_a_single_line_graph_leaf() {
        let d = recognize_isk4_wheel_free(&prism());
        let tree = d.tree().unwrap();
        assert_eq!(tree.len(), 1);
        assert_eq!(leaf_classes(tree)[0].label(), "line-of-chordless-subcubic");
    }

    #[test]
    fn octahedron_is_rejected() {
        let g = Graph::from_edge_slice(
            6,
            &[(0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 3), (1, 4), (1, 5), (2, 4), (2, 5), (3, 4), (3, 5)],
        );
        let r = recognize_isk4_wheel_free(&g);
        assert_eq!(r.rejection().unwrap().reason, RejectReason::WheelWitness);
    }

    #[test]
    fn five_wheel_is_rejected_with_a_wheel() {
        let mut edges: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        edges.extend((0..5).map(|i| (i, 5)));
        let g = Graph::from_edge_slice(6, &edges);
        let r = recognize_isk4_wheel_free(&g);
        let rej = r.rejection().unwrap();
        assert_eq!(rej.reason, RejectReason::WheelWitness);
        assert!(rej.certificate.as_ref().unwrap().validate(&g));
    }

    #[test]
    fn k4_found_first() {
        assert_eq!(contains_k4_subgraph(&Graph::complete(4)), Some(alloc::vec![0, 1, 2, 3]));
        assert_eq!(contains_k4_subgraph(&Graph::complete_bipartite(3, 3)), None);
        assert_eq!(contains_k4_subgraph(&Graph::complete(5)).map(|k| k.len()), Some(4));
        let r = recognize_isk4_wheel_free(&Graph::complete(5));
        assert_eq!(r.rejection().unwrap().reason, RejectReason::K4Found);
    }

    #[test]
    fn trivial_graphs_are_in_class() {
        for n in 0..2 {
            let d = recognize_isk4_wheel_free(&Graph::empty(n));
            assert_eq!(leaf_classes(d.tree().unwrap()), [&LeafClass::SeriesParallel]);
        }
    }

    #[test]
    fn chordless_examples() {
        assert!(recognize_chordless(&theta222()).is_in_class());
        let q3 = Graph::from_edge_slice(
            8,
            &[(0, 1), (1, 3), (3, 2), (2, 0), (4, 5), (5, 7), (7, 6), (6, 4), (0, 4), (1, 5), (2, 6), (3, 7)],
        );
        let r = recognize_chordless(&q3);
        let rej = r.rejection().unwrap();
        assert_eq!(rej.reason, RejectReason::ChordedCycle);
        assert!(rej.certificate.as_ref().unwrap().validate(&q3));
        // two thetas joined by an edge between branch vertices
        let mut edges = theta222().edges().collect::<Vec<_>>();
        edges.extend(theta222().edges().map(|(u, v)| (u + 5, v + 5)));
        edges.push((1, 5));
        let g = Graph::from_edge_slice(10, &edges);
        let d = recognize_chordless(&g);
        let tree = d.tree().unwrap();
        assert!(matches!(&tree.root().kind, NodeKind::Internal { witness, .. } if witness.cut.len() == 1));
    }
}
