//! Simple undirected graphs on dense vertex ids `0..n` and the elementary
//! connectivity primitives the decompositions are built from.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

/// Sorted list of vertex ids of some graph.
pub type VertexSet = Vec<usize>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
}

/// Immutable simple undirected graph.
///
/// Neighbor lists are kept sorted, so adjacency tests are a binary search
/// and every traversal visits neighbors in increasing id order. The latter
/// is what makes all the finders in this crate deterministic.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n], m: 0 }
    }

    /// Builds a graph from an edge list. Duplicate edges are merged.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::OutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        Ok(Self::from_adjacency(adj))
    }

    /// Panicking variant of [`Graph::from_edges`] for literals in code and tests.
    pub fn from_edge_slice(n: usize, edges: &[(usize, usize)]) -> Self {
        match Self::from_edges(n, edges) {
            Ok(g) => g,
            Err(e) => panic!("invalid edge list: {e}"),
        }
    }

    fn from_adjacency(mut adj: Vec<Vec<usize>>) -> Self {
        let mut twice_m = 0;
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
            twice_m += list.len();
        }
        Graph { adj, m: twice_m / 2 }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() { (u, v) } else { (v, u) };
        self.adj[a].binary_search(&b).is_ok()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Subgraph induced by `vertices`; new vertex `i` is `vertices[i]`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut local = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let adj = vertices
            .iter()
            .map(|&v| self.adj[v].iter().filter_map(|&w| (local[w] != usize::MAX).then_some(local[w])).collect())
            .collect();
        Self::from_adjacency(adj)
    }

    /// Copy of the graph with the edge `uv` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Graph {
        assert!(u != v && u < self.n() && v < self.n());
        let mut adj = self.adj.clone();
        adj[u].push(v);
        adj[v].push(u);
        Self::from_adjacency(adj)
    }

    /// Copy of the graph with one extra vertex (id `n`) adjacent to `nbrs`.
    pub fn with_vertex(&self, nbrs: &[usize]) -> Graph {
        let x = self.n();
        let mut adj = self.adj.clone();
        adj.push(nbrs.to_vec());
        for &u in nbrs {
            adj[u].push(x);
        }
        Self::from_adjacency(adj)
    }

    /// Copy of the graph without vertex `v`; returns the graph and the map from
    /// new ids to old ids.
    pub fn without_vertex(&self, v: usize) -> (Graph, Vec<usize>) {
        let keep: Vec<usize> = (0..self.n()).filter(|&u| u != v).collect();
        (self.induced(&keep), keep)
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || components(self).len() == 1
    }

    /// The complete graph K_n.
    pub fn complete(n: usize) -> Graph {
        let adj = (0..n).map(|u| (0..n).filter(|&v| v != u).collect()).collect();
        Self::from_adjacency(adj)
    }

    /// The cycle C_n (n >= 3).
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::from_edge_slice(n, &edges)
    }

    /// The path on `n` vertices.
    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_edge_slice(n, &edges)
    }

    /// Complete bipartite K_{p,q}; the first `p` ids form one side.
    pub fn complete_bipartite(p: usize, q: usize) -> Graph {
        let mut edges = Vec::with_capacity(p * q);
        for a in 0..p {
            for b in p..p + q {
                edges.push((a, b));
            }
        }
        Self::from_edge_slice(p + q, &edges)
    }
}

/// Connected components, each sorted, ordered by smallest member.
pub fn components(g: &Graph) -> Vec<VertexSet> {
    let removed = vec![false; g.n()];
    let (count, comp) = component_labels(g, &removed);
    let mut parts = vec![Vec::new(); count];
    for v in 0..g.n() {
        parts[comp[v]].push(v);
    }
    parts
}

/// Component labels of `g` minus the `removed` vertices. Labels are assigned in
/// order of smallest member; removed vertices get `usize::MAX`.
pub fn component_labels(g: &Graph, removed: &[bool]) -> (usize, Vec<usize>) {
    let mut comp = vec![usize::MAX; g.n()];
    let mut count = 0;
    let mut queue = VecDeque::new();
    for s in 0..g.n() {
        if removed[s] || comp[s] != usize::MAX {
            continue;
        }
        comp[s] = count;
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if !removed[w] && comp[w] == usize::MAX {
                    comp[w] = count;
                    queue.push_back(w);
                }
            }
        }
        count += 1;
    }
    (count, comp)
}

/// Components of `g - removed`, as sorted vertex lists ordered by smallest member.
pub fn components_without(g: &Graph, removed: &[usize]) -> Vec<VertexSet> {
    let mut mask = vec![false; g.n()];
    for &v in removed {
        mask[v] = true;
    }
    let (count, comp) = component_labels(g, &mask);
    let mut parts = vec![Vec::new(); count];
    for v in 0..g.n() {
        if !mask[v] {
            parts[comp[v]].push(v);
        }
    }
    parts
}

/// Articulation points of `g - removed` (vertices whose deletion increases the
/// number of components of that graph). Iterative, so deep graphs are fine.
pub fn articulation_points_masked(g: &Graph, removed: &[bool]) -> Vec<bool> {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut is_cut = vec![false; n];
    let mut time = 0;
    // (vertex, parent, next neighbor index)
    let mut stack: Vec<(usize, usize, usize)> = Vec::new();
    for root in 0..n {
        if removed[root] || disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut root_children = 0;
        stack.push((root, usize::MAX, 0));
        while let Some(&mut (v, parent, ref mut i)) = stack.last_mut() {
            if *i < g.degree(v) {
                let w = g.neighbors(v)[*i];
                *i += 1;
                if removed[w] || w == parent {
                    continue;
                }
                if disc[w] == usize::MAX {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, v, 0));
                } else {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[v]);
                    if parent != root && low[v] >= disc[parent] {
                        is_cut[parent] = true;
                    }
                }
            }
        }
        if root_children >= 2 {
            is_cut[root] = true;
        }
    }
    is_cut
}

/// Block decomposition.
///
/// Returns the blocks (maximal 2-connected subgraphs or bridges) as sorted
/// vertex lists in lexicographic order, and the sorted cutvertices. Isolated
/// vertices belong to no block.
pub fn blocks_and_cutvertices(g: &Graph) -> (Vec<VertexSet>, VertexSet) {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut time = 0;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut blocks: Vec<VertexSet> = Vec::new();
    let mut stack: Vec<(usize, usize, usize)> = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX || g.degree(root) == 0 {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        stack.push((root, usize::MAX, 0));
        while let Some(&mut (v, parent, ref mut i)) = stack.last_mut() {
            if *i < g.degree(v) {
                let w = g.neighbors(v)[*i];
                *i += 1;
                if w == parent {
                    continue;
                }
                if disc[w] == usize::MAX {
                    edge_stack.push((v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, v, 0));
                } else if disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[v]);
                    if low[v] >= disc[parent] {
                        let mut block = Vec::new();
                        while let Some((a, b)) = edge_stack.pop() {
                            block.push(a);
                            block.push(b);
                            if (a, b) == (parent, v) {
                                break;
                            }
                        }
                        block.sort_unstable();
                        block.dedup();
                        blocks.push(block);
                    }
                }
            }
        }
    }
    blocks.sort();
    let mut count = vec![0usize; n];
    for b in &blocks {
        for &v in b {
            count[v] += 1;
        }
    }
    let cuts = (0..n).filter(|&v| count[v] >= 2).collect();
    (blocks, cuts)
}

/// Bipartition `(A, B)` when `g` has no odd cycle. Each component's smallest
/// vertex goes to `A`.
pub fn is_bipartite(g: &Graph) -> Option<(VertexSet, VertexSet)> {
    let mut side = vec![u8::MAX; g.n()];
    let mut queue = VecDeque::new();
    for s in 0..g.n() {
        if side[s] != u8::MAX {
            continue;
        }
        side[s] = 0;
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if side[w] == u8::MAX {
                    side[w] = 1 - side[v];
                    queue.push_back(w);
                } else if side[w] == side[v] {
                    return None;
                }
            }
        }
    }
    let a = (0..g.n()).filter(|&v| side[v] == 0).collect();
    let b = (0..g.n()).filter(|&v| side[v] == 1).collect();
    Some((a, b))
}

/// Breadth-first distances from `source` in `g - removed`; unreachable and
/// removed vertices get `usize::MAX`.
pub fn bfs_distances(g: &Graph, source: usize, removed: &[bool]) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.n()];
    let mut queue = VecDeque::new();
    dist[source] = 0;
    queue.push_back(source);
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if !removed[w] && dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Shortest path from `s` to `t` whose interior avoids vertices outside
/// `allowed` (endpoints are always allowed). Shortest paths are induced.
pub fn shortest_path_within(g: &Graph, s: usize, t: usize, allowed: &[bool]) -> Option<Vec<usize>> {
    let mut prev = vec![usize::MAX; g.n()];
    let mut seen = vec![false; g.n()];
    let mut queue = VecDeque::new();
    seen[s] = true;
    queue.push_back(s);
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if seen[w] {
                continue;
            }
            if w == t {
                prev[t] = v;
                let mut path = vec![t];
                let mut cur = v;
                while cur != s {
                    path.push(cur);
                    cur = prev[cur];
                }
                path.push(s);
                path.reverse();
                return Some(path);
            }
            if allowed[w] {
                seen[w] = true;
                prev[w] = v;
                queue.push_back(w);
            }
        }
    }
    None
}

/// Line graph L(h): vertex `i` is the `i`-th edge of `h.edges()`.
pub fn line_graph(h: &Graph) -> (Graph, Vec<(usize, usize)>) {
    let edges: Vec<(usize, usize)> = h.edges().collect();
    let mut incident = vec![Vec::new(); h.n()];
    for (i, &(u, v)) in edges.iter().enumerate() {
        incident[u].push(i);
        incident[v].push(i);
    }
    let mut adj = vec![Vec::new(); edges.len()];
    for list in &incident {
        for (k, &e) in list.iter().enumerate() {
            for &f in &list[k + 1..] {
                adj[e].push(f);
                adj[f].push(e);
            }
        }
    }
    (Graph::from_adjacency(adj), edges)
}
