//! DOT export of graphs and decomposition trees.

use std::fmt::Write as _;

use wheelfree_core::tree::{LeafTag, NodeKind};
use wheelfree_core::{DecompositionTree, Graph};

/// Undirected DOT graph; with `colors`, each vertex is labeled `v:c`.
pub fn graph_to_dot(g: &Graph, colors: Option<&[u8]>) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.n() {
        match colors {
            Some(c) => writeln!(out, "  {v} [label=\"{v}:{}\"];", c[v]).unwrap(),
            None => writeln!(out, "  {v};").unwrap(),
        }
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

fn leaf_label(tag: &LeafTag) -> &'static str {
    match tag {
        LeafTag::Pending => "pending",
        LeafTag::Class(c) => c.label(),
        LeafTag::Sparse(true) => "sparse",
        LeafTag::Sparse(false) => "not-sparse",
    }
}

/// Directed DOT tree. Internal nodes show the cutset kind and its vertices in
/// input labels (`m` for a marker); leaves show their class and size.
pub fn tree_to_dot(tree: &DecompositionTree) -> String {
    let mut out = String::from("digraph T {\n");
    for (i, node) in tree.nodes.iter().enumerate() {
        let label = match &node.kind {
            NodeKind::Internal { witness, .. } => {
                let cut: Vec<String> = tree
                    .lifted_cut(i)
                    .unwrap()
                    .into_iter()
                    .map(|v| v.map_or_else(|| "m".to_string(), |x| x.to_string()))
                    .collect();
                format!("{} {{{}}}", witness.kind.label(), cut.join(","))
            }
            NodeKind::Leaf(tag) => format!("{} n={}", leaf_label(tag), node.graph.n()),
        };
        let shape = if matches!(node.kind, NodeKind::Leaf(_)) { "box" } else { "ellipse" };
        writeln!(out, "  n{i} [label=\"{label}\", shape={shape}];").unwrap();
    }
    for (i, node) in tree.nodes.iter().enumerate() {
        if let NodeKind::Internal { children, .. } = node.kind {
            for c in children {
                writeln!(out, "  n{i} -> n{c};").unwrap();
            }
        }
    }
    out.push_str("}\n");
    out
}
