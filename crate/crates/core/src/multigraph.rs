//! Multigraphs (parallel edges and loops allowed) and suppression of
//! degree-two vertices, the inverse of subdividing edges.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;

/// Undirected multigraph; `edges` may repeat pairs and contain loops `(v, v)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl Multigraph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Self {
        debug_assert!(edges.iter().all(|&(u, v)| u < n && v < n));
        Multigraph { n, edges }
    }

    /// Degree with loops counted twice.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// Edge multiset in normalized `(min, max)` sorted form.
    pub fn normalized_edges(&self) -> Vec<(usize, usize)> {
        let mut e: Vec<_> = self.edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        e.sort_unstable();
        e
    }
}

impl From<&Graph> for Multigraph {
    fn from(g: &Graph) -> Self {
        Multigraph { n: g.n(), edges: g.edges().collect() }
    }
}

/// Suppresses degree-two vertices until none can be suppressed, picking the
/// smallest eligible vertex each time.
///
/// A degree-two vertex with two distinct neighbors `u, w` becomes an edge
/// `uw`; one joined to a single neighbor `u` by a doubled edge becomes a loop
/// at `u`. A vertex whose only edge is a loop is left alone. Surviving
/// vertices are renumbered in increasing order of their old ids.
pub fn suppress_degree_two(m: &Multigraph) -> Multigraph {
    let order: Vec<usize> = (0..m.n).collect();
    suppress_degree_two_ordered(m, &order)
}

/// [`suppress_degree_two`] with an explicit priority: the first eligible
/// vertex of `priority` is suppressed at every step.
pub fn suppress_degree_two_ordered(m: &Multigraph, priority: &[usize]) -> Multigraph {
    // incidence lists hold edge ids; loops appear twice
    let mut alive_edge = vec![true; m.edges.len()];
    let mut edges = m.edges.clone();
    let mut inc: Vec<Vec<usize>> = vec![Vec::new(); m.n];
    for (i, &(u, v)) in edges.iter().enumerate() {
        inc[u].push(i);
        inc[v].push(i);
    }
    let mut alive = vec![true; m.n];
    loop {
        let mut changed = false;
        for &v in priority {
            if !alive[v] {
                continue;
            }
            inc[v].retain(|&e| alive_edge[e]);
            if inc[v].len() != 2 || inc[v][0] == inc[v][1] {
                continue;
            }
            let (e1, e2) = (inc[v][0], inc[v][1]);
            let other = |e: usize| if edges[e].0 == v { edges[e].1 } else { edges[e].0 };
            let (u, w) = (other(e1), other(e2));
            alive_edge[e1] = false;
            alive_edge[e2] = false;
            alive[v] = false;
            inc[v].clear();
            let id = edges.len();
            edges.push((u, w));
            alive_edge.push(true);
            inc[u].push(id);
            if w != u {
                inc[w].push(id);
            } else {
                inc[u].push(id);
            }
            changed = true;
            break;
        }
        if !changed {
            break;
        }
    }
    let mut new_id = vec![usize::MAX; m.n];
    let mut k = 0;
    for v in 0..m.n {
        if alive[v] {
            new_id[v] = k;
            k += 1;
        }
    }
    let out = edges.iter().zip(&alive_edge).filter(|(_, &a)| a).map(|(&(u, v), _)| (new_id[u], new_id[v])).collect();
    Multigraph::new(k, out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_becomes_an_edge() {
        let m = Multigraph::from(&Graph::path(3));
        let r = suppress_degree_two(&m);
        assert_eq!(r.n, 2);
        assert_eq!(r.normalized_edges(), vec![(0, 1)]);
    }

    #[test]
    fn four_cycle_becomes_a_loop() {
        let r = suppress_degree_two(&Multigraph::from(&Graph::cycle(4)));
        assert_eq!(r.n, 1);
        assert_eq!(r.edges, vec![(0, 0)]);
    }

    #[test]
    fn subdivided_k4_becomes_k4() {
        // K4 on 0..4 with edge 0-1 replaced by 0-4-1
        let g = Graph::from_edge_slice(5, &[(0, 4), (4, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let r = suppress_degree_two(&Multigraph::from(&g));
        assert_eq!(r.n, 4);
        assert_eq!(r.normalized_edges(), Graph::complete(4).edges().collect::<Vec<_>>());
    }
}
