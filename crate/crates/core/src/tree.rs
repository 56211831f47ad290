//! Decomposition trees: binary trees of cutset splits whose leaves are the
//! indecomposable pieces.
//!
//! Trees are stored as an arena (`nodes[0]` is the root, children always have
//! larger indices than their parent) and built with an explicit work list, so
//! arbitrarily deep decompositions never touch the machine stack.

use alloc::vec;
use alloc::vec::Vec;

use crate::classify::LeafClass;
use crate::cutsets::{
    disconnection, find_clique_cutset, find_one_cutset, find_proper_two_cutset, split_with_marker, CutsetKind,
    CutsetWitness,
};
use crate::graph::Graph;

/// Where a vertex of a tree node comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Origin {
    /// Vertex of the decomposed input graph.
    Input(usize),
    /// Artificial vertex added by a proper-2-cutset split.
    Marker,
}

#[derive(Debug, Clone, PartialEq)]
pub enum LeafTag {
    /// Not examined yet.
    Pending,
    Class(LeafClass),
    /// Leaf of a chordless-recognition tree: sparse or not.
    Sparse(bool),
}

#[derive(Debug, Clone, PartialEq)]
pub enum NodeKind {
    Internal { witness: CutsetWitness, children: [usize; 2] },
    Leaf(LeafTag),
}

#[derive(Debug, Clone, PartialEq)]
pub struct TreeNode {
    pub graph: Graph,
    /// Per local vertex, its origin in the input graph.
    pub origin: Vec<Origin>,
    pub kind: NodeKind,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DecompositionTree {
    pub nodes: Vec<TreeNode>,
}

/// Returned when a K4 subgraph makes the clique-cutset search incomplete.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct K4Found(pub [usize; 4]);

impl DecompositionTree {
    /// One-leaf tree for `g`.
    pub fn single(g: &Graph) -> Self {
        let origin = (0..g.n()).map(Origin::Input).collect();
        DecompositionTree { nodes: vec![TreeNode { graph: g.clone(), origin, kind: NodeKind::Leaf(LeafTag::Pending) }] }
    }

    pub fn root(&self) -> &TreeNode {
        &self.nodes[0]
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn leaves(&self) -> impl Iterator<Item = (usize, &TreeNode)> {
        self.nodes.iter().enumerate().filter(|(_, n)| matches!(n.kind, NodeKind::Leaf(_)))
    }

    /// Leaf nodes with at least five vertices.
    pub fn large_leaf_count(&self) -> usize {
        self.leaves().filter(|(_, n)| n.graph.n() >= 5).count()
    }

    /// Splits every pending leaf for which `finder` returns a witness, and
    /// keeps splitting the children, until no pending leaf can be split.
    fn refine(&mut self, mut finder: impl FnMut(&Graph) -> Option<CutsetWitness>) {
        let mut work: Vec<usize> =
            self.leaves().filter(|(_, n)| n.kind == NodeKind::Leaf(LeafTag::Pending)).map(|(i, _)| i).collect();
        work.reverse();
        while let Some(i) = work.pop() {
            let Some(witness) = finder(&self.nodes[i].graph) else { continue };
            let parent = &self.nodes[i];
            let parts: [(Graph, Vec<Option<usize>>); 2] = match witness.kind {
                CutsetKind::Proper2 => split_with_marker(&parent.graph, &witness),
                _ => [&witness.side_x, &witness.side_y].map(|side| {
                    let mut vs: Vec<usize> = side.iter().chain(&witness.cut).copied().collect();
                    vs.sort_unstable();
                    (parent.graph.induced(&vs), vs.into_iter().map(Some).collect())
                }),
            };
            let first = self.nodes.len();
            for (graph, local) in parts {
                let origin = local.into_iter().map(|l| l.map_or(Origin::Marker, |v| self.nodes[i].origin[v])).collect();
                self.nodes.push(TreeNode { graph, origin, kind: NodeKind::Leaf(LeafTag::Pending) });
            }
            self.nodes[i].kind = NodeKind::Internal { witness, children: [first, first + 1] };
            // process the first child before the second
            work.push(first + 1);
            work.push(first);
        }
    }

    /// Further splits every pending leaf along proper 2-cutsets, with marker
    /// vertices.
    pub fn refine_proper_two_cutsets(&mut self) {
        self.refine(|g| {
            let w = find_proper_two_cutset(g)?;
            Some(w)
        });
    }

    /// Internal nodes' witnesses with vertices translated to input ids;
    /// marker vertices map to `None`.
    pub fn lifted_cut(&self, node: usize) -> Option<Vec<Option<usize>>> {
        match &self.nodes[node].kind {
            NodeKind::Internal { witness, .. } => Some(
                witness
                    .cut
                    .iter()
                    .map(|&v| match self.nodes[node].origin[v] {
                        Origin::Input(x) => Some(x),
                        Origin::Marker => None,
                    })
                    .collect(),
            ),
            NodeKind::Leaf(_) => None,
        }
    }
}

/// Clique-cutset decomposition tree of `g` (disconnected graphs are first
/// split into components by the empty clique cutset).
///
/// Fails if `g` has a K4 subgraph, since the leaves would then not be
/// guaranteed free of larger clique cutsets.
pub fn clique_cutset_tree(g: &Graph) -> Result<DecompositionTree, K4Found> {
    if let Some(k4) = crate::recognize::contains_k4_subgraph(g) {
        return Err(K4Found([k4[0], k4[1], k4[2], k4[3]]));
    }
    let mut tree = DecompositionTree::single(g);
    tree.refine(find_clique_cutset);
    Ok(tree)
}

/// Tree splitting `g` into components and then along cutvertices; its leaves
/// are the blocks of `g` (and isolated vertices).
pub fn one_cutset_tree(g: &Graph) -> DecompositionTree {
    let mut tree = DecompositionTree::single(g);
    tree.refine(|h| disconnection(h).or_else(|| find_one_cutset(h)));
    tree
}

#[cfg(test)]
mod tests {
    use super::*;

    fn glued_c5s() -> Graph {
        // C5 on 0..5, C5 on 4..9, C5 on 8..13; consecutive ones share a vertex
        let mut edges = Vec::new();
        for start in [0usize, 4, 8] {
            for i in 0..5 {
                edges.push((start + i, start + (i + 1) % 5));
            }
        }
        Graph::from_edge_slice(13, &edges)
    }

    #[test]
    fn three_glued_pentagons_give_five_nodes() {
        let tree = clique_cutset_tree(&glued_c5s()).unwrap();
        assert_eq!(tree.len(), 5);
        assert_eq!(tree.leaves().count(), 3);
        for (_, leaf) in tree.leaves() {
            assert_eq!(leaf.graph, Graph::cycle(5));
        }
    }

    #[test]
    fn cycle_is_a_single_leaf() {
        let tree = clique_cutset_tree(&Graph::cycle(6)).unwrap();
        assert_eq!(tree.len(), 1);
    }

    #[test]
    fn k4_aborts() {
        assert!(clique_cutset_tree(&Graph::complete(4)).is_err());
    }

    #[test]
    fn marker_split_records_origins() {
        let mut tree = DecompositionTree::single(&Graph::complete_bipartite(2, 4));
        tree.refine_proper_two_cutsets();
        assert_eq!(tree.len(), 3);
        let child = &tree.nodes[1];
        assert_eq!(child.origin.iter().filter(|o| **o == Origin::Marker).count(), 1);
        assert_eq!(tree.lifted_cut(0), Some(vec![Some(0), Some(1)]));
    }
}
