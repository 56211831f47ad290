//! Seeded generators for graphs of the {ISK4, wheel}-free class.
//!
//! The one exception is [`GenKind::LongRichSquare`]: long rich squares are
//! produced for the rich-square colorer and for rejection tests, but every
//! one of them contains a wheel and so is not in the class.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::chorded::oracle_chorded_cycle;
use super::Certificate;
use crate::graph::{line_graph, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GenKind {
    SeriesParallel,
    CompleteBipartite,
    LongRichSquare,
    LineOfChordlessSubcubic,
    CliqueGlue,
}

impl GenKind {
    pub const ALL: [GenKind; 5] = [
        GenKind::SeriesParallel,
        GenKind::CompleteBipartite,
        GenKind::LongRichSquare,
        GenKind::LineOfChordlessSubcubic,
        GenKind::CliqueGlue,
    ];

    pub fn label(self) -> &'static str {
        match self {
            GenKind::SeriesParallel => "sp",
            GenKind::CompleteBipartite => "complete-bipartite",
            GenKind::LongRichSquare => "long-rich-square",
            GenKind::LineOfChordlessSubcubic => "line-of-chordless-subcubic",
            GenKind::CliqueGlue => "clique-glue",
        }
    }

    pub fn parse(s: &str) -> Option<GenKind> {
        GenKind::ALL.into_iter().find(|k| k.label() == s)
    }

    /// Smallest accepted `size`.
    pub fn min_size(self) -> usize {
        match self {
            GenKind::SeriesParallel => 1,
            GenKind::CompleteBipartite | GenKind::CliqueGlue => 2,
            GenKind::LongRichSquare => 0,
            GenKind::LineOfChordlessSubcubic => 3,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GenError {
    #[error("size {size} is below the minimum {min} for {kind}")]
    TooSmall { kind: &'static str, size: usize, min: usize },
}

/// Edge set under construction.
struct Builder {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Builder {
    fn new(n: usize) -> Self {
        Builder { n, edges: BTreeSet::new() }
    }

    fn vertex(&mut self) -> usize {
        self.n += 1;
        self.n - 1
    }

    fn add(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        self.edges.insert((u.min(v), u.max(v)));
    }

    fn remove(&mut self, u: usize, v: usize) {
        self.edges.remove(&(u.min(v), u.max(v)));
    }

    fn random_edge(&self, rng: &mut ChaCha8Rng) -> (usize, usize) {
        let i = rng.gen_range(0..self.edges.len());
        *self.edges.iter().nth(i).unwrap()
    }

    fn subdivide(&mut self, u: usize, v: usize) -> usize {
        self.remove(u, v);
        let w = self.vertex();
        self.add(u, w);
        self.add(w, v);
        w
    }

    fn build(&self) -> Graph {
        let edges: Vec<_> = self.edges.iter().copied().collect();
        Graph::from_edge_slice(self.n, &edges)
    }
}

fn shuffled(g: &Graph, rng: &mut ChaCha8Rng) -> Graph {
    let mut perm: Vec<usize> = (0..g.n()).collect();
    perm.shuffle(rng);
    let edges: Vec<_> = g.edges().map(|(u, v)| (perm[u], perm[v])).collect();
    Graph::from_edge_slice(g.n(), &edges)
}

/// Random pendant vertices, edge subdivisions and parallel 2-paths, starting
/// from one edge.
fn series_parallel(size: usize, rng: &mut ChaCha8Rng) -> Graph {
    if size == 1 {
        return Graph::empty(1);
    }
    let mut b = Builder::new(2);
    b.add(0, 1);
    while b.n < size {
        match rng.gen_range(0..5) {
            0 => {
                let u = rng.gen_range(0..b.n);
                let w = b.vertex();
                b.add(u, w);
            }
            1 | 2 => {
                let (u, v) = b.random_edge(rng);
                b.subdivide(u, v);
            }
            _ => {
                let (u, v) = b.random_edge(rng);
                let w = b.vertex();
                b.add(u, w);
                b.add(w, v);
            }
        }
    }
    b.build()
}

fn complete_bipartite(size: usize, rng: &mut ChaCha8Rng) -> Graph {
    let p = rng.gen_range(1..=size / 2);
    Graph::complete_bipartite(p, size - p)
}

/// Square `0-1-2-3` plus at least two long links; `size < 8` gives the
/// minimal one (two links of two vertices).
fn long_rich_square(size: usize, rng: &mut ChaCha8Rng) -> Graph {
    let size = size.max(8);
    let k = rng.gen_range(2..=((size - 4) / 2).min(4));
    let mut lengths = vec![2usize; k];
    for _ in 0..size - 4 - 2 * k {
        let i = rng.gen_range(0..k);
        lengths[i] += 1;
    }
    let mut b = Builder::new(4);
    for (u, v) in [(0, 1), (1, 2), (2, 3), (3, 0)] {
        b.add(u, v);
    }
    for t in lengths {
        let path: Vec<usize> = (0..t).map(|_| b.vertex()).collect();
        for w in path.windows(2) {
            b.add(w[0], w[1]);
        }
        let (first, last) = if rng.gen_bool(0.5) { ([0, 1], [2, 3]) } else { ([0, 3], [1, 2]) };
        for u in first {
            b.add(path[0], u);
        }
        for u in last {
            b.add(path[t - 1], u);
        }
    }
    b.build()
}

/// A random chordless graph of maximum degree three with at least `edges`
/// edges: a random cubic multigraph, made simple by subdividing loops and
/// repeated edges, with chords subdivided until none is left.
pub(crate) fn chordless_subcubic(edges: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut k = (edges / 4).max(2);
    k += k % 2;
    let mut stubs: Vec<usize> = (0..k).flat_map(|v| [v, v, v]).collect();
    stubs.shuffle(rng);
    let mut b = Builder::new(k);
    for pair in stubs.chunks(2) {
        let (u, v) = (pair[0], pair[1]);
        if u == v {
            let x = b.vertex();
            let y = b.vertex();
            b.add(u, x);
            b.add(x, y);
            b.add(y, u);
        } else if b.edges.contains(&(u.min(v), u.max(v))) {
            let x = b.vertex();
            b.add(u, x);
            b.add(x, v);
        } else {
            b.add(u, v);
        }
    }
    let degree = |b: &Builder, v: usize| b.edges.iter().filter(|&&(x, y)| x == v || y == v).count();
    let heavy: Vec<(usize, usize)> =
        b.edges.iter().copied().filter(|&(u, v)| degree(&b, u) == 3 && degree(&b, v) == 3).collect();
    for (u, v) in heavy {
        if rng.gen_bool(0.5) {
            b.subdivide(u, v);
        }
    }
    while let Some(Certificate::ChordedCycle { chord: (u, v), .. }) = oracle_chorded_cycle(&b.build()) {
        b.subdivide(u, v);
    }
    while b.edges.len() < edges {
        let (u, v) = b.random_edge(rng);
        b.subdivide(u, v);
    }
    b.build()
}

fn line_of_chordless_subcubic(size: usize, rng: &mut ChaCha8Rng) -> Graph {
    line_graph(&chordless_subcubic(size, rng)).0
}

/// Cliques of `g` with exactly `s` vertices (`s <= 3`), each sorted.
fn cliques_of_size(g: &Graph, s: usize) -> Vec<Vec<usize>> {
    match s {
        1 => (0..g.n()).map(|v| vec![v]).collect(),
        2 => g.edges().map(|(u, v)| vec![u, v]).collect(),
        _ => g
            .edges()
            .flat_map(|(u, v)| {
                g.neighbors(v).iter().copied().filter(move |&w| w > v && g.has_edge(u, w)).map(move |w| vec![u, v, w])
            })
            .collect(),
    }
}

/// Identifies clique `kb` of `b` with clique `ka` of `a` (position by
/// position). Vertices of `a` keep their ids; the other vertices of `b`
/// follow in increasing order.
pub fn glue_at_clique(a: &Graph, ka: &[usize], b: &Graph, kb: &[usize]) -> Graph {
    assert_eq!(ka.len(), kb.len());
    let mut map = vec![usize::MAX; b.n()];
    for (&x, &y) in ka.iter().zip(kb) {
        map[y] = x;
    }
    let mut next = a.n();
    for slot in map.iter_mut().filter(|m| **m == usize::MAX) {
        *slot = next;
        next += 1;
    }
    let mut edges: Vec<_> = a.edges().collect();
    edges.extend(b.edges().map(|(u, v)| (map[u], map[v])));
    Graph::from_edge_slice(next, &edges)
}

fn clique_glue(size: usize, rng: &mut ChaCha8Rng) -> Graph {
    let kinds = [GenKind::SeriesParallel, GenKind::CompleteBipartite, GenKind::LineOfChordlessSubcubic];
    let pieces = rng.gen_range(2..=3usize);
    let share = (size / pieces).max(3);
    let mut g = piece(*kinds.choose(rng).unwrap(), share, rng);
    for _ in 1..pieces {
        let h = piece(*kinds.choose(rng).unwrap(), share, rng);
        let s = (1..=3).rev().find(|&s| !cliques_of_size(&g, s).is_empty() && !cliques_of_size(&h, s).is_empty());
        let s = rng.gen_range(1..=s.unwrap_or(1));
        let (cg, ch) = (cliques_of_size(&g, s), cliques_of_size(&h, s));
        let ka = cg.choose(rng).unwrap().clone();
        let mut kb = ch.choose(rng).unwrap().clone();
        kb.shuffle(rng);
        g = glue_at_clique(&g, &ka, &h, &kb);
    }
    g
}

fn piece(kind: GenKind, size: usize, rng: &mut ChaCha8Rng) -> Graph {
    let size = size.max(kind.min_size());
    match kind {
        GenKind::SeriesParallel => series_parallel(size, rng),
        GenKind::CompleteBipartite => complete_bipartite(size, rng),
        GenKind::LongRichSquare => long_rich_square(size, rng),
        GenKind::LineOfChordlessSubcubic => line_of_chordless_subcubic(size, rng),
        GenKind::CliqueGlue => clique_glue(size, rng),
    }
}

/// A random graph of the requested kind, determined by `(kind, size, seed)`.
///
/// Series-parallel and complete bipartite graphs have exactly `size`
/// vertices, long rich squares `max(size, 8)`; line graphs and glued graphs
/// have at least about `size`. Vertex labels are shuffled.
pub fn gen_in_class(kind: GenKind, size: usize, seed: u64) -> Result<Graph, GenError> {
    if size < kind.min_size() {
        return Err(GenError::TooSmall { kind: kind.label(), size, min: kind.min_size() });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = piece(kind, size, &mut rng);
    Ok(shuffled(&g, &mut rng))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::oracle_series_parallel;

    #[test]
    fn deterministic() {
        for kind in GenKind::ALL {
            assert_eq!(gen_in_class(kind, 20, 3).unwrap(), gen_in_class(kind, 20, 3).unwrap());
        }
    }

    #[test]
    fn minimal_rich_square_has_eight_vertices() {
        let g = gen_in_class(GenKind::LongRichSquare, 0, 1).unwrap();
        assert_eq!(g.n(), 8);
        assert_eq!(g.m(), 14);
    }

    #[test]
    fn sp_sizes_and_oracle() {
        let g = gen_in_class(GenKind::SeriesParallel, 12, 7).unwrap();
        assert_eq!(g.n(), 12);
        assert!(oracle_series_parallel(&g).unwrap());
    }

    #[test]
    fn chordless_roots_are_chordless() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let h = chordless_subcubic(15, &mut rng);
            assert!(h.max_degree() <= 3);
            assert!(oracle_chorded_cycle(&h).is_none());
            assert!(h.m() >= 15);
        }
    }

    #[test]
    fn too_small_is_an_error() {
        assert!(gen_in_class(GenKind::CompleteBipartite, 1, 0).is_err());
    }
}
