//! Tests for the indecomposable classes and the shared structural predicates.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{components, components_without, is_bipartite, Graph};
use crate::line::{line_graph_root, LineRoot};
use crate::multigraph::{suppress_degree_two, Multigraph};

/// Central square and long links of a long rich square.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RichSquareShape {
    /// `u1, u2, u3, u4` in cyclic order.
    pub square: [usize; 4],
    /// Each link as a path `p1 .. pt`, oriented so that `p1` sees `{u1, u2}`
    /// or `{u1, u4}` and `pt` sees the opposite square edge.
    pub links: Vec<Vec<usize>>,
}

impl RichSquareShape {
    /// Checks every shape invariant against `g`, including that square and
    /// links cover `g` exactly.
    pub fn validate(&self, g: &Graph) -> bool {
        let [u1, u2, u3, u4] = self.square;
        let sq = self.square;
        let cyclic = [(u1, u2), (u2, u3), (u3, u4), (u4, u1)].iter().all(|&(a, b)| g.has_edge(a, b));
        if !cyclic || g.has_edge(u1, u3) || g.has_edge(u2, u4) || self.links.len() < 2 {
            return false;
        }
        let mut seen: BTreeSet<usize> = sq.iter().copied().collect();
        if seen.len() != 4 {
            return false;
        }
        for link in &self.links {
            if link.len() < 2 || !link.iter().all(|&p| seen.insert(p)) {
                return false;
            }
            if !is_induced_path(g, link) {
                return false;
            }
            let ns = |p: usize| -> Vec<usize> { sq.iter().copied().filter(|&u| g.has_edge(p, u)).collect() };
            if link[1..link.len() - 1].iter().any(|&p| !ns(p).is_empty()) {
                return false;
            }
            let (first, last) = (set_of(ns(link[0])), set_of(ns(link[link.len() - 1])));
            let ok = (first == set_of(vec![u1, u2]) && last == set_of(vec![u3, u4]))
                || (first == set_of(vec![u1, u4]) && last == set_of(vec![u2, u3]));
            if !ok {
                return false;
            }
        }
        if seen.len() != g.n() {
            return false;
        }
        // links are whole components: no edges between different links
        let mut owner = vec![usize::MAX; g.n()];
        for (i, link) in self.links.iter().enumerate() {
            for &p in link {
                owner[p] = i;
            }
        }
        g.edges().all(|(a, b)| owner[a] == usize::MAX || owner[b] == usize::MAX || owner[a] == owner[b])
    }

    /// A wheel of `g` inside the shape: hub `u1` over a hole through the
    /// first two links and both square neighbors of `u1`. Every long rich
    /// square has one, so none is wheel-free.
    pub fn wheel(&self, g: &Graph) -> (Vec<usize>, usize) {
        let [u1, u2, _, u4] = self.square;
        let (b1, b2) = (&self.links[0], &self.links[1]);
        // square neighbor of u1 seen by the first vertex of each link
        let x1 = if g.has_edge(b1[0], u2) { u2 } else { u4 };
        let x2 = if g.has_edge(b2[0], u2) { u2 } else { u4 };
        let mut hole = Vec::with_capacity(b1.len() + b2.len() + 2);
        if x1 == x2 {
            let y = if x1 == u2 { u4 } else { u2 };
            hole.push(x1);
            hole.extend(b1);
            hole.push(y);
            hole.extend(b2.iter().rev());
        } else {
            hole.extend(b1);
            hole.push(x2);
            hole.extend(b2);
            hole.push(x1);
        }
        (hole, u1)
    }
}

fn set_of(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

/// Whether `path` lists the vertices of an induced path in order.
fn is_induced_path(g: &Graph, path: &[usize]) -> bool {
    for (i, &a) in path.iter().enumerate() {
        for (j, &b) in path.iter().enumerate().skip(i + 1) {
            if g.has_edge(a, b) != (j == i + 1) {
                return false;
            }
        }
    }
    true
}

/// Outcome of classifying an indecomposable leaf. The first matching class in
/// declaration order wins.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LeafClass {
    SeriesParallel,
    CompleteBipartite,
    LongRichSquare(RichSquareShape),
    LineOfChordlessSubcubic(LineRoot),
    Unclassified,
}

impl LeafClass {
    pub fn label(&self) -> &'static str {
        match self {
            LeafClass::SeriesParallel => "series-parallel",
            LeafClass::CompleteBipartite => "complete-bipartite",
            LeafClass::LongRichSquare(_) => "long-rich-square",
            LeafClass::LineOfChordlessSubcubic(_) => "line-of-chordless-subcubic",
            LeafClass::Unclassified => "unclassified",
        }
    }

    pub fn is_classified(&self) -> bool {
        !matches!(self, LeafClass::Unclassified)
    }

    /// Whether a leaf of this class is {ISK4, wheel}-free. Long rich squares
    /// are recognized but always contain a wheel (see
    /// [`RichSquareShape::wheel`]).
    pub fn is_accepted(&self) -> bool {
        !matches!(self, LeafClass::Unclassified | LeafClass::LongRichSquare(_))
    }
}

/// No subdivision of K4 as a subgraph.
///
/// Reduces to the empty graph by deleting vertices of degree at most one and
/// suppressing vertices of degree two (merging the parallel edge that may
/// result) exactly when the graph has treewidth at most two.
pub fn is_series_parallel(g: &Graph) -> bool {
    let n = g.n();
    let mut adj: Vec<BTreeSet<usize>> = (0..n).map(|v| g.neighbors(v).iter().copied().collect()).collect();
    let mut alive = vec![true; n];
    let mut queue: Vec<usize> = (0..n).filter(|&v| adj[v].len() <= 2).collect();
    let mut left = n;
    while let Some(v) = queue.pop() {
        if !alive[v] || adj[v].len() > 2 {
            continue;
        }
        let nbrs: Vec<usize> = adj[v].iter().copied().collect();
        alive[v] = false;
        left -= 1;
        for &u in &nbrs {
            adj[u].remove(&v);
        }
        if let [u, w] = nbrs[..] {
            adj[u].insert(w);
            adj[w].insert(u);
        }
        for &u in &nbrs {
            if adj[u].len() <= 2 {
                queue.push(u);
            }
        }
    }
    left == 0
}

/// Bipartite with both sides nonempty and every cross pair adjacent.
pub fn is_complete_bipartite(g: &Graph) -> bool {
    match is_bipartite(g) {
        Some((a, b)) => !a.is_empty() && !b.is_empty() && g.m() == a.len() * b.len(),
        None => false,
    }
}

/// Shape of `g` as a long rich square, if it is one.
///
/// In a long rich square with `k >= 2` links every square vertex has degree
/// `2 + k` and every other vertex degree at most three, so the square is
/// exactly the set of vertices of degree at least four.
pub fn long_rich_square(g: &Graph) -> Option<RichSquareShape> {
    let big: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) >= 4).collect();
    let [a, b, c, d] = big[..] else { return None };
    let quad = [a, b, c, d];
    if quad.iter().any(|&u| quad.iter().filter(|&&w| g.has_edge(u, w)).count() != 2) {
        return None;
    }
    // cyclic order starting at the smallest vertex, toward its smaller square neighbor
    let u1 = a;
    let nb: Vec<usize> = quad.iter().copied().filter(|&w| g.has_edge(u1, w)).collect();
    let (u2, u4) = (nb[0], nb[1]);
    let u3 = quad.iter().copied().find(|&w| w != u1 && !g.has_edge(u1, w))?;
    let square = [u1, u2, u3, u4];
    let mut links = Vec::new();
    for comp in components_without(g, &square) {
        if comp.len() < 2 {
            return None;
        }
        let sub = g.induced(&comp);
        let ends: Vec<usize> = (0..sub.n()).filter(|&v| sub.degree(v) == 1).collect();
        if sub.m() + 1 != sub.n() || sub.max_degree() > 2 || ends.len() != 2 {
            return None;
        }
        let mut path = Vec::with_capacity(comp.len());
        let (mut prev, mut cur) = (usize::MAX, ends[0]);
        loop {
            path.push(comp[cur]);
            let next = sub.neighbors(cur).iter().copied().find(|&w| w != prev);
            match next {
                Some(w) => {
                    prev = cur;
                    cur = w;
                }
                None => break,
            }
        }
        if g.has_edge(path[0], u1) {
            links.push(path);
        } else {
            path.reverse();
            links.push(path);
        }
    }
    let shape = RichSquareShape { square, links };
    shape.validate(g).then_some(shape)
}

/// Maximum degree at most three and chordless.
pub fn is_chordless_root_ok(h: &Graph) -> bool {
    h.max_degree() <= 3 && crate::recognize::recognize_chordless(h).is_in_class()
}

/// Whether `g` itself is a subdivision of K4.
pub fn is_subdivision_of_k4(g: &Graph) -> bool {
    let mut branch = 0;
    for v in 0..g.n() {
        match g.degree(v) {
            2 => {}
            3 => branch += 1,
            _ => return false,
        }
    }
    if branch != 4 || !g.is_connected() {
        return false;
    }
    let r = suppress_degree_two(&Multigraph::from(g));
    r.n == 4 && r.normalized_edges() == [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
}

/// Whether `g` is exactly a wheel: a hub `x` plus a hole `g - x` containing at
/// least three neighbors of `x`. Returns the hole in cyclic order and the hub.
pub fn is_wheel(g: &Graph) -> Option<(Vec<usize>, usize)> {
    let n = g.n();
    if n < 5 {
        return None;
    }
    for x in (0..n).filter(|&x| g.degree(x) >= 3) {
        let rest: Vec<usize> = (0..n).filter(|&v| v != x).collect();
        let h = g.induced(&rest);
        if (0..h.n()).any(|v| h.degree(v) != 2) || !h.is_connected() {
            continue;
        }
        let mut hole = vec![0usize];
        let mut prev = usize::MAX;
        let mut cur = 0;
        while hole.len() < h.n() {
            let next = h.neighbors(cur).iter().copied().find(|&w| w != prev).unwrap();
            prev = cur;
            cur = next;
            hole.push(cur);
        }
        return Some((hole.into_iter().map(|i| rest[i]).collect(), x));
    }
    None
}

/// Every edge has an endpoint of degree at most two.
pub fn is_sparse(g: &Graph) -> bool {
    g.edges().all(|(u, v)| g.degree(u) <= 2 || g.degree(v) <= 2)
}

/// Classifies a leaf of the recognition tree.
pub fn classify_leaf(g: &Graph) -> LeafClass {
    if is_series_parallel(g) {
        return LeafClass::SeriesParallel;
    }
    if is_complete_bipartite(g) {
        return LeafClass::CompleteBipartite;
    }
    if let Some(shape) = long_rich_square(g) {
        return LeafClass::LongRichSquare(shape);
    }
    if components(g).len() == 1 {
        if let Some(root) = line_graph_root(g) {
            if is_chordless_root_ok(&root.root) {
                return LeafClass::LineOfChordlessSubcubic(root);
            }
        }
    }
    LeafClass::Unclassified
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn theta(lengths: &[usize]) -> Graph {
        // branch vertices 0 and 1, each branch with `len - 1` interior vertices
        let mut edges = Vec::new();
        let mut next = 2;
        for &len in lengths {
            let mut prev = 0;
            for _ in 0..len - 1 {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
            edges.push((prev, 1));
        }
        Graph::from_edge_slice(next, &edges)
    }

    fn minimal_long_rich_square() -> Graph {
        // square 0-1-2-3, link 4-5 on {0,1}/{2,3}, link 6-7 on {0,3}/{1,2}
        Graph::from_edge_slice(
            8,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 0),
                (4, 0),
                (4, 1),
                (5, 2),
                (5, 3),
                (4, 5),
                (6, 0),
                (6, 3),
                (7, 1),
                (7, 2),
                (6, 7),
            ],
        )
    }

    #[test]
    fn every_long_rich_square_has_a_wheel() {
        use crate::oracle::Certificate;
        let orthogonal = minimal_long_rich_square();
        // both links on {0,1}/{2,3}
        let parallel = Graph::from_edge_slice(
            8,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 0),
                (4, 0),
                (4, 1),
                (5, 2),
                (5, 3),
                (4, 5),
                (6, 0),
                (6, 1),
                (7, 2),
                (7, 3),
                (6, 7),
            ],
        );
        for g in [orthogonal, parallel] {
            let (hole, hub) = long_rich_square(&g).unwrap().wheel(&g);
            assert!(Certificate::Wheel { hole, hub }.validate(&g));
        }
    }

    #[test]
    fn series_parallel_examples() {
        assert!(!is_series_parallel(&Graph::complete(4)));
        assert!(is_series_parallel(&Graph::path(6)));
        assert!(is_series_parallel(&theta(&[2, 3, 4])));
        assert!(is_series_parallel(&Graph::complete_bipartite(2, 5)));
        assert!(!is_series_parallel(&Graph::complete_bipartite(3, 3)));
    }

    #[test]
    fn complete_bipartite_examples() {
        assert!(is_complete_bipartite(&Graph::complete_bipartite(3, 3)));
        assert!(!is_complete_bipartite(&Graph::cycle(6)));
        assert!(!is_complete_bipartite(&Graph::empty(1)));
    }

    #[test]
    fn rich_square_examples() {
        let g = minimal_long_rich_square();
        let shape = long_rich_square(&g).unwrap();
        assert_eq!(shape.square, [0, 1, 2, 3]);
        assert_eq!(shape.links.len(), 2);
        // one link only
        let one = Graph::from_edge_slice(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1), (5, 2), (5, 3), (4, 5)]);
        assert!(long_rich_square(&one).is_none());
        // short link plus long link
        let short = Graph::from_edge_slice(
            7,
            &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1), (5, 2), (5, 3), (4, 5), (6, 0), (6, 1), (6, 2), (6, 3)],
        );
        assert!(long_rich_square(&short).is_none());
    }

    #[test]
    fn chordless_roots() {
        assert!(is_chordless_root_ok(&theta(&[2, 2, 2])));
        assert!(!is_chordless_root_ok(&Graph::complete(4)));
        let petersen = Graph::from_edge_slice(
            10,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (0, 5),
                (1, 6),
                (2, 7),
                (3, 8),
                (4, 9),
                (5, 7),
                (7, 9),
                (9, 6),
                (6, 8),
                (8, 5),
            ],
        );
        assert!(!is_chordless_root_ok(&petersen));
    }

    #[test]
    fn k4_subdivisions() {
        assert!(is_subdivision_of_k4(&Graph::complete(4)));
        assert!(!is_subdivision_of_k4(&theta(&[2, 2, 2])));
        let k4 = Graph::complete(4);
        let mut edges = Vec::new();
        for (i, (u, v)) in k4.edges().enumerate() {
            edges.push((u, 4 + i));
            edges.push((4 + i, v));
        }
        assert!(is_subdivision_of_k4(&Graph::from_edge_slice(10, &edges)));
    }

    #[test]
    fn wheels() {
        let c4_plus = Graph::from_edge_slice(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1), (4, 2)]);
        // hub 1 over the hole 0-3-2-4 comes before hub 4 over 0-1-2-3
        assert_eq!(is_wheel(&c4_plus).map(|w| w.1), Some(1));
        // K_{1,2,2}: hub 0, square 1-2-3-4
        let k122 = Graph::from_edge_slice(5, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4), (4, 1)]);
        assert!(is_wheel(&k122).is_some());
        let c5_plus = Graph::from_edge_slice(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 0), (5, 2)]);
        assert!(is_wheel(&c5_plus).is_none());
    }

    #[test]
    fn sparse_examples() {
        assert!(is_sparse(&Graph::complete_bipartite(2, 3)));
        assert!(!is_sparse(&Graph::complete(4)));
        assert!(is_sparse(&Graph::cycle(7)));
    }

    #[test]
    fn small_k4_free_graphs_are_series_parallel() {
        // every graph on at most four vertices other than K4 itself
        for n in 0..=4usize {
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            for mask in 0u32..1 << pairs.len() {
                let edges: Vec<_> = (0..pairs.len()).filter(|&i| mask >> i & 1 == 1).map(|i| pairs[i]).collect();
                let g = Graph::from_edge_slice(n, &edges);
                assert_eq!(is_series_parallel(&g), g.m() < 6, "{edges:?}");
            }
        }
    }

    #[test]
    fn leaf_order() {
        assert_eq!(classify_leaf(&Graph::cycle(4)), LeafClass::SeriesParallel);
        assert_eq!(classify_leaf(&Graph::complete_bipartite(3, 4)), LeafClass::CompleteBipartite);
        assert!(matches!(classify_leaf(&minimal_long_rich_square()), LeafClass::LongRichSquare(_)));
        let prism =
            Graph::from_edge_slice(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]);
        assert!(matches!(classify_leaf(&prism), LeafClass::LineOfChordlessSubcubic(_)));
        let octahedron = Graph::from_edge_slice(
            6,
            &[(0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 3), (1, 4), (1, 5), (2, 4), (2, 5), (3, 4), (3, 5)],
        );
        assert_eq!(classify_leaf(&octahedron), LeafClass::Unclassified);
    }
}
