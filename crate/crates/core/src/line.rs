//! Line-graph roots via Krausz partitions.
//!
//! A graph is a line graph iff its edges split into cliques with every vertex
//! in at most two of them. Fixing the (at most two) cliques at one vertex
//! forces the whole partition of a connected graph: every vertex reached
//! through a known clique must put all its remaining edges into its second
//! clique. So it is enough to enumerate the admissible splits of one
//! neighborhood and propagate.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;

/// A root `H` of a line graph `G`, with the edge of `H` standing for every
/// vertex of `G`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineRoot {
    pub root: Graph,
    /// `vertex_edge[v] = (x, y)`, `x < y`, is the edge of `root` that is `v`.
    pub vertex_edge: Vec<(usize, usize)>,
}

impl LineRoot {
    /// Whether two vertices of `g` are adjacent exactly when their root edges
    /// share an endpoint.
    pub fn realizes(&self, g: &Graph) -> bool {
        let n = g.n();
        if self.vertex_edge.len() != n {
            return false;
        }
        let mut seen = self.vertex_edge.clone();
        seen.sort_unstable();
        if seen.windows(2).any(|w| w[0] == w[1]) || self.vertex_edge.iter().any(|&(x, y)| !self.root.has_edge(x, y)) {
            return false;
        }
        if self.root.m() != n {
            return false;
        }
        for u in 0..n {
            for v in u + 1..n {
                let (a, b) = self.vertex_edge[u];
                let (c, d) = self.vertex_edge[v];
                let touch = a == c || a == d || b == c || b == d;
                if touch != g.has_edge(u, v) {
                    return false;
                }
            }
        }
        true
    }
}

/// Splits of `N(v)` into two cliques `A`, `B` (with `A` holding the first
/// neighbor and `B` possibly empty) in which every vertex has at most one
/// neighbor on the other side. Splits with `B` empty come first.
fn neighborhood_splits(g: &Graph, v: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    let nbrs = g.neighbors(v);
    let mut out = Vec::new();
    if nbrs.is_empty() {
        out.push((Vec::new(), Vec::new()));
        return out;
    }
    // iterative backtracking over side choices: stack of (index, side)
    let mut a: Vec<usize> = vec![nbrs[0]];
    let mut b: Vec<usize> = Vec::new();
    fn fits(g: &Graph, x: usize, same: &[usize], other: &[usize]) -> bool {
        if !same.iter().all(|&s| g.has_edge(x, s)) {
            return false;
        }
        let cross: Vec<usize> = other.iter().copied().filter(|&o| g.has_edge(x, o)).collect();
        if cross.len() > 1 {
            return false;
        }
        // the crossing partner must not already have a crossing neighbor
        cross.iter().all(|&o| !same.iter().any(|&s| g.has_edge(o, s)))
    }
    fn go(
        g: &Graph,
        nbrs: &[usize],
        i: usize,
        a: &mut Vec<usize>,
        b: &mut Vec<usize>,
        out: &mut Vec<(Vec<usize>, Vec<usize>)>,
    ) {
        if i == nbrs.len() {
            out.push((a.clone(), b.clone()));
            return;
        }
        let x = nbrs[i];
        if fits(g, x, a, b) {
            a.push(x);
            go(g, nbrs, i + 1, a, b, out);
            a.pop();
        }
        if fits(g, x, b, a) {
            b.push(x);
            go(g, nbrs, i + 1, a, b, out);
            b.pop();
        }
    }
    // depth is bounded by deg(v)
    go(g, nbrs, 1, &mut a, &mut b, &mut out);
    out.sort_by_key(|(_, b)| !b.is_empty());
    out
}

/// Propagates a seed split at `v` into a full Krausz partition.
fn propagate(g: &Graph, v: usize, a: &[usize], b: &[usize]) -> Option<Vec<Vec<usize>>> {
    let n = g.n();
    // clique id of each edge, indexed like the adjacency lists
    let mut edge_clique: Vec<Vec<usize>> = (0..n).map(|u| vec![usize::MAX; g.degree(u)]).collect();
    let mut membership: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut cliques: Vec<Vec<usize>> = Vec::new();
    let mut queue = VecDeque::new();

    let mut add_clique = |members: Vec<usize>,
                          edge_clique: &mut Vec<Vec<usize>>,
                          membership: &mut Vec<Vec<usize>>,
                          queue: &mut VecDeque<usize>|
     -> Option<()> {
        let id = cliques.len();
        for (i, &x) in members.iter().enumerate() {
            for &y in &members[i + 1..] {
                let ix = g.neighbors(x).binary_search(&y).ok()?;
                let iy = g.neighbors(y).binary_search(&x).ok()?;
                if edge_clique[x][ix] != usize::MAX {
                    return None;
                }
                edge_clique[x][ix] = id;
                edge_clique[y][iy] = id;
            }
        }
        for &x in &members {
            membership[x].push(id);
            if membership[x].len() > 2 {
                return None;
            }
            queue.push_back(x);
        }
        cliques.push(members);
        Some(())
    };

    for side in [a, b] {
        if side.is_empty() {
            continue;
        }
        let mut members: Vec<usize> = side.to_vec();
        members.push(v);
        members.sort_unstable();
        add_clique(members, &mut edge_clique, &mut membership, &mut queue)?;
    }
    while let Some(w) = queue.pop_front() {
        let open: Vec<usize> =
            g.neighbors(w).iter().zip(&edge_clique[w]).filter(|(_, &c)| c == usize::MAX).map(|(&u, _)| u).collect();
        if open.is_empty() {
            continue;
        }
        if membership[w].len() >= 2 {
            return None;
        }
        let mut members = open;
        members.push(w);
        members.sort_unstable();
        add_clique(members, &mut edge_clique, &mut membership, &mut queue)?;
    }
    if edge_clique.iter().flatten().any(|&c| c == usize::MAX) {
        return None;
    }
    Some(cliques)
}

fn root_from_partition(n: usize, cliques: &[Vec<usize>]) -> Option<LineRoot> {
    let mut membership: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (id, c) in cliques.iter().enumerate() {
        for &x in c {
            membership[x].push(id);
        }
    }
    let mut next = cliques.len();
    let mut vertex_edge = Vec::with_capacity(n);
    for m in &membership {
        let (x, y) = match m.as_slice() {
            [] => {
                next += 2;
                (next - 2, next - 1)
            }
            [c] => {
                next += 1;
                (*c, next - 1)
            }
            [c, d] => (*c.min(d), *c.max(d)),
            _ => return None,
        };
        vertex_edge.push((x, y));
    }
    let root = Graph::from_edges(next, &vertex_edge).ok()?;
    Some(LineRoot { root, vertex_edge })
}

/// A root `H` with `L(H)` equal to the connected graph `g` (vertex `v` of
/// `g` is the edge `vertex_edge[v]` of `H`), or `None` if `g` is not a line
/// graph. For the triangle the root is the claw K_{1,3}.
pub fn line_graph_root(g: &Graph) -> Option<LineRoot> {
    let n = g.n();
    if n == 0 {
        return Some(LineRoot { root: Graph::empty(0), vertex_edge: Vec::new() });
    }
    if !g.is_connected() {
        return None;
    }
    let seed = (0..n).max_by_key(|&v| (g.degree(v), core::cmp::Reverse(v)))?;
    for (a, b) in neighborhood_splits(g, seed) {
        let Some(cliques) = propagate(g, seed, &a, &b) else { continue };
        if let Some(root) = root_from_partition(n, &cliques) {
            if root.realizes(g) {
                return Some(root);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::line_graph;

    fn prism() -> Graph {
        Graph::from_edge_slice(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])
    }

    #[test]
    fn prism_root_is_a_theta() {
        let r = line_graph_root(&prism()).unwrap();
        assert!(r.realizes(&prism()));
        let mut degrees: Vec<usize> = (0..r.root.n()).map(|v| r.root.degree(v)).collect();
        degrees.sort_unstable();
        assert_eq!(degrees, vec![2, 2, 2, 3, 3]);
    }

    #[test]
    fn cycles_are_their_own_roots() {
        let r = line_graph_root(&Graph::cycle(5)).unwrap();
        assert_eq!(r.root.n(), 5);
        assert!((0..5).all(|v| r.root.degree(v) == 2));
    }

    #[test]
    fn claw_is_not_a_line_graph() {
        assert!(line_graph_root(&Graph::complete_bipartite(1, 3)).is_none());
    }

    #[test]
    fn triangle_root_is_the_claw() {
        let r = line_graph_root(&Graph::complete(3)).unwrap();
        assert_eq!(r.root.n(), 4);
        assert_eq!(r.root.max_degree(), 3);
    }

    #[test]
    fn single_vertex_root_is_an_edge() {
        let r = line_graph_root(&Graph::empty(1)).unwrap();
        assert_eq!(r.root, Graph::path(2));
    }

    #[test]
    fn round_trip_through_line_graph() {
        // K4 minus an edge plus a pendant
        let h = Graph::from_edge_slice(5, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (3, 4)]);
        let (l, _) = line_graph(&h);
        let r = line_graph_root(&l).unwrap();
        assert!(r.realizes(&l));
        assert_eq!(r.root.m(), h.m());
    }
}
