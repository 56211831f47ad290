//! Constructive 3-colorings: the {ISK4, wheel}-free pipeline, chordless
//! graphs, Brooks colorings of subcubic graphs and 3-edge-colorings of
//! chordless subcubic graphs.
//!
//! The recursive constructions run on an explicit work stack
//! ([`post_order`]), so decomposition depth never reaches the machine stack.

use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::classify::{classify_leaf, is_complete_bipartite, is_sparse, LeafClass, RichSquareShape};
use crate::cutsets::{find_clique_cutset, find_proper_two_cutset, CutsetKind, CutsetWitness};
use crate::graph::{
    articulation_points_masked, bfs_distances, components, components_without, is_bipartite, line_graph,
    shortest_path_within, Graph, VertexSet,
};
use crate::oracle::{oracle_chorded_cycle, Certificate};
use crate::recognize::{recognize_chordless, recognize_isk4_wheel_free, RejectReason};

const UNSET: u8 = u8::MAX;

/// A vertex coloring with colors `0`, `1`, `2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    pub colors: Vec<u8>,
}

impl Coloring {
    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colors.len() == g.n()
            && self.colors.iter().all(|&c| c < 3)
            && g.edges().all(|(u, v)| self.colors[u] != self.colors[v])
    }

    /// Number of distinct colors used.
    pub fn colors_used(&self) -> usize {
        self.colors.iter().copied().collect::<BTreeSet<u8>>().len()
    }
}

/// An edge coloring; `colors[i]` is the color of `edges[i]`, the edges in
/// lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoring {
    pub edges: Vec<(usize, usize)>,
    pub colors: Vec<u8>,
}

impl EdgeColoring {
    pub fn color_of(&self, u: usize, v: usize) -> Option<u8> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok().map(|i| self.colors[i])
    }

    pub fn is_proper(&self, h: &Graph) -> bool {
        let edges: Vec<_> = h.edges().collect();
        if edges != self.edges || self.colors.iter().any(|&c| c >= 3) {
            return false;
        }
        let mut seen = vec![0u8; h.n()];
        for (&(u, v), &c) in self.edges.iter().zip(&self.colors) {
            for x in [u, v] {
                if seen[x] >> c & 1 == 1 {
                    return false;
                }
                seen[x] |= 1 << c;
            }
        }
        true
    }

    pub fn colors_used(&self) -> usize {
        self.colors.iter().copied().collect::<BTreeSet<u8>>().len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ColorError {
    #[error("input is not in the class: {}", .0.label())]
    NotInClass(RejectReason),
    #[error("no vertex of degree at most two among {remaining} remaining vertices")]
    StuckElimination { remaining: usize },
    #[error("malformed rich square shape")]
    MalformedShape,
    #[error("component {0:?} is K4")]
    K4Component(VertexSet),
    #[error("vertex {vertex} has degree {degree}, more than three")]
    DegreeTooHigh { vertex: usize, degree: usize },
    #[error("input has a chorded cycle")]
    Chord(Certificate),
    #[error("no palette bijection meets the targets")]
    NoBijection,
    #[error("internal error: {0}")]
    Internal(&'static str),
}

const PERMUTATIONS: [[u8; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

/// First palette bijection (in lexicographic order) sending each `from` color
/// to its `to` color.
fn bijection(pairs: &[(u8, u8)]) -> Result<[u8; 3], ColorError> {
    PERMUTATIONS
        .iter()
        .find(|p| pairs.iter().all(|&(from, to)| p[from as usize] == to))
        .copied()
        .ok_or(ColorError::NoBijection)
}

/// Recolors `c` by a bijection of `{0, 1, 2}` so that each target vertex gets
/// its required color.
pub fn permute_palette(c: &Coloring, targets: &[(usize, u8)]) -> Result<Coloring, ColorError> {
    let pairs: Vec<(u8, u8)> = targets.iter().map(|&(v, t)| (c.colors[v], t)).collect();
    let p = bijection(&pairs)?;
    Ok(Coloring { colors: c.colors.iter().map(|&x| p[x as usize]).collect() })
}

type Join<R> = Box<dyn FnOnce(Vec<R>) -> Result<R, ColorError>>;

/// One step of a divide-and-combine recursion.
enum Step<P, R> {
    Done(R),
    /// Subproblems and the function combining their results, in order.
    Split(Vec<P>, Join<R>),
}

/// Runs a divide-and-combine recursion depth-first on explicit stacks.
fn post_order<P, R>(root: P, mut expand: impl FnMut(P) -> Result<Step<P, R>, ColorError>) -> Result<R, ColorError> {
    struct Frame<R> {
        join: Join<R>,
        results: Vec<Option<R>>,
        remaining: usize,
        parent: Option<(usize, usize)>,
    }
    // A frame completes only after all frames created below it, so the
    // frames form a stack.
    let mut frames: Vec<Frame<R>> = Vec::new();
    let mut work: Vec<(P, Option<(usize, usize)>)> = vec![(root, None)];
    let mut answer = None;
    while let Some((p, slot)) = work.pop() {
        let mut delivery = match expand(p)? {
            Step::Done(r) => Some((r, slot)),
            Step::Split(children, join) => {
                assert!(!children.is_empty());
                let id = frames.len();
                let k = children.len();
                frames.push(Frame { join, results: (0..k).map(|_| None).collect(), remaining: k, parent: slot });
                for (i, c) in children.into_iter().enumerate().rev() {
                    work.push((c, Some((id, i))));
                }
                None
            }
        };
        while let Some((r, slot)) = delivery.take() {
            let Some((f, i)) = slot else {
                answer = Some(r);
                break;
            };
            frames[f].results[i] = Some(r);
            frames[f].remaining -= 1;
            if frames[f].remaining == 0 {
                debug_assert_eq!(f + 1, frames.len());
                let frame = frames.pop().unwrap();
                let results = frame.results.into_iter().map(|r| r.unwrap()).collect();
                delivery = Some(((frame.join)(results)?, frame.parent));
            }
        }
    }
    answer.ok_or(ColorError::Internal("recursion produced no result"))
}

/// Least color missing among the colored neighbors of `v`.
fn free_color(g: &Graph, colors: &[u8], v: usize) -> Option<u8> {
    let mut seen = 0u8;
    for &w in g.neighbors(v) {
        if colors[w] != UNSET {
            seen |= 1 << colors[w];
        }
    }
    (0..3).find(|&c| seen >> c & 1 == 0)
}

/// Colors `g` by removing a least vertex of degree at most two until none is
/// left, then coloring in reverse removal order.
fn two_degenerate_coloring(g: &Graph) -> Result<Coloring, ColorError> {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut ready: BTreeSet<usize> = (0..n).filter(|&v| deg[v] <= 2).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(v) = ready.pop_first() {
        removed[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !removed[w] {
                deg[w] -= 1;
                if deg[w] <= 2 {
                    ready.insert(w);
                }
            }
        }
    }
    if order.len() < n {
        return Err(ColorError::StuckElimination { remaining: n - order.len() });
    }
    let mut colors = vec![UNSET; n];
    for &v in order.iter().rev() {
        colors[v] = free_color(g, &colors, v).ok_or(ColorError::Internal("degenerate order saw three colors"))?;
    }
    Ok(Coloring { colors })
}

/// 3-coloring of a series-parallel graph by 2-degeneracy elimination;
/// bipartite inputs get their bipartition.
pub fn color_series_parallel(g: &Graph) -> Result<Coloring, ColorError> {
    if let Some((a, _)) = is_bipartite(g) {
        let mut colors = vec![1; g.n()];
        for v in a {
            colors[v] = 0;
        }
        return Ok(Coloring { colors });
    }
    two_degenerate_coloring(g)
}

/// 3-coloring of a chordless graph.
///
/// Chordless graphs are closed under vertex deletion and always have a vertex
/// of degree at most two, so 2-degeneracy elimination never gets stuck.
pub fn color_chordless(g: &Graph) -> Result<Coloring, ColorError> {
    if let Some(r) = recognize_chordless(g).rejection() {
        return Err(ColorError::NotInClass(r.reason));
    }
    match two_degenerate_coloring(g) {
        Err(ColorError::StuckElimination { .. }) => {
            Err(ColorError::Internal("chordless graph without a vertex of degree at most two"))
        }
        other => other,
    }
}

/// Greedy coloring of the listed vertices in the given order.
fn greedy(g: &Graph, colors: &mut [u8], order: &[usize]) -> Result<(), ColorError> {
    for &v in order {
        colors[v] = free_color(g, colors, v).ok_or(ColorError::Internal("greedy step saw three colors"))?;
    }
    Ok(())
}

/// Vertices reachable from `root` in `g - removed`, farthest first (ties by id).
fn farthest_first(g: &Graph, root: usize, removed: &[bool]) -> Vec<usize> {
    let dist = bfs_distances(g, root, removed);
    let mut order: Vec<usize> = (0..g.n()).filter(|&v| dist[v] != usize::MAX).collect();
    order.sort_by_key(|&v| (core::cmp::Reverse(dist[v]), v));
    order
}

/// Colors the component of `g - removed` containing `root`, where `root` has
/// at most two neighbors there: every other vertex still has an uncolored
/// neighbor closer to `root` when it is colored.
fn color_from_root(g: &Graph, colors: &mut [u8], root: usize, removed: &[bool]) -> Result<(), ColorError> {
    greedy(g, colors, &farthest_first(g, root, removed))
}

/// Proper 3-coloring of a graph of maximum degree three with no K4
/// component.
pub fn brooks_color_subcubic(g: &Graph) -> Result<Coloring, ColorError> {
    let n = g.n();
    if let Some(v) = (0..n).find(|&v| g.degree(v) > 3) {
        return Err(ColorError::DegreeTooHigh { vertex: v, degree: g.degree(v) });
    }
    let mut colors = vec![UNSET; n];
    let no_removed = vec![false; n];
    let cut = articulation_points_masked(g, &no_removed);
    for comp in components(g) {
        if comp.len() == 4 && comp.iter().all(|&v| g.degree(v) == 3) {
            return Err(ColorError::K4Component(comp));
        }
        if let Some(&r) = comp.iter().find(|&&v| g.degree(v) <= 2) {
            color_from_root(g, &mut colors, r, &no_removed)?;
            continue;
        }
        if let Some(&x) = comp.iter().find(|&&v| cut[v]) {
            // x has at most two neighbors in each piece hanging off it
            let mut removed = vec![true; n];
            for piece in components_without(&g.induced(&comp), &[comp.binary_search(&x).unwrap()]) {
                removed.iter_mut().for_each(|r| *r = true);
                removed[x] = false;
                for &i in &piece {
                    removed[comp[i]] = false;
                }
                colors[x] = UNSET;
                color_from_root(g, &mut colors, x, &removed)?;
                // rename so that x gets color 0 in every piece
                let p = bijection(&[(colors[x], 0)])?;
                for &i in &piece {
                    colors[comp[i]] = p[colors[comp[i]] as usize];
                }
                colors[x] = 0;
            }
            continue;
        }
        // 2-connected, cubic, not K4: some v has nonadjacent neighbors x, y
        // with the component minus {x, y} connected
        let mut found = None;
        'search: for &v in &comp {
            let nb = g.neighbors(v);
            for i in 0..nb.len() {
                for j in i + 1..nb.len() {
                    let (x, y) = (nb[i], nb[j]);
                    if g.has_edge(x, y) {
                        continue;
                    }
                    let mut removed = vec![false; n];
                    removed[x] = true;
                    removed[y] = true;
                    let reach = bfs_distances(g, v, &removed).iter().filter(|&&d| d != usize::MAX).count();
                    if reach == comp.len() - 2 {
                        found = Some((v, x, y, removed));
                        break 'search;
                    }
                }
            }
        }
        let (v, x, y, removed) = found.ok_or(ColorError::Internal("no Brooks triple in a 2-connected cubic graph"))?;
        colors[x] = 0;
        colors[y] = 0;
        color_from_root(g, &mut colors, v, &removed)?;
    }
    let c = Coloring { colors };
    assert!(c.is_proper(g), "Brooks coloring is not proper");
    Ok(c)
}

fn edge_index(edges: &[(usize, usize)], u: usize, v: usize) -> usize {
    edges.binary_search(&(u.min(v), u.max(v))).expect("edge of the parent graph")
}

/// Child graph of an edge-coloring step with, for each child vertex, its
/// vertex in the parent (`None` for an added vertex).
struct Part {
    graph: Graph,
    map: Vec<Option<usize>>,
}

fn induced_part(h: &Graph, vs: &[usize]) -> Part {
    Part { graph: h.induced(vs), map: vs.iter().copied().map(Some).collect() }
}

/// A set `S` left by exactly two disjoint edges `s1 t1`, `s2 t2`, with at
/// least two vertices on each side, read off a proper 2-cutset `{a, b}` of
/// a 2-connected subcubic graph.
fn two_edge_side(h: &Graph, a: usize, b: usize) -> Option<(VertexSet, [(usize, usize); 2])> {
    let comps = components_without(h, &[a, b]);
    let inside = |x: usize, comp: &[usize]| -> Vec<usize> {
        h.neighbors(x).iter().copied().filter(|w| comp.binary_search(w).is_ok()).collect()
    };
    for comp in &comps {
        let (na, nb) = (inside(a, comp), inside(b, comp));
        if comp.len() >= 2 && na.len() == 1 && nb.len() == 1 && na[0] != nb[0] {
            return Some((comp.clone(), [(na[0], a), (nb[0], b)]));
        }
    }
    // p has one neighbor in A_i and q two: then q has a single neighbor q2 in
    // the other component and {p, q2} cuts off A_i + q
    if comps.len() == 2 {
        for (p, q) in [(a, b), (b, a)] {
            for i in 0..2 {
                let (np, nq) = (inside(p, &comps[i]), inside(q, &comps[i]));
                let nq_other = inside(q, &comps[1 - i]);
                if np.len() == 1 && nq.len() == 2 && nq_other.len() == 1 {
                    let mut side = comps[i].clone();
                    side.push(q);
                    side.sort_unstable();
                    return Some((side, [(np[0], p), (q, nq_other[0])]));
                }
            }
        }
    }
    None
}

fn edge_step(h: Graph) -> Result<Step<Graph, Vec<u8>>, ColorError> {
    let n = h.n();
    if h.m() == 0 {
        return Ok(Step::Done(Vec::new()));
    }
    let edges: Vec<(usize, usize)> = h.edges().collect();
    let comps = components(&h);
    if comps.len() > 1 {
        let parts = comps.iter().map(|c| induced_part(&h, c)).collect();
        return Ok(split_edges(edges, parts, None));
    }
    if is_sparse(&h) {
        let (l, _) = line_graph(&h);
        let c = brooks_color_subcubic(&l)?;
        return Ok(Step::Done(c.colors));
    }
    let cut = articulation_points_masked(&h, &vec![false; n]);
    if let Some(x) = cut.iter().position(|&c| c) {
        let parts = components_without(&h, &[x])
            .into_iter()
            .map(|mut piece| {
                piece.push(x);
                piece.sort_unstable();
                induced_part(&h, &piece)
            })
            .collect();
        return Ok(split_edges(edges, parts, Some(x)));
    }
    let w = find_proper_two_cutset(&h)
        .ok_or(ColorError::Internal("2-connected chordless graph without proper 2-cutset"))?;
    let (a, b) = (w.cut[0], w.cut[1]);
    let (side, [(s1, t1), (s2, t2)]) =
        two_edge_side(&h, a, b).ok_or(ColorError::Internal("no two-edge side at a proper 2-cutset"))?;
    let mut in_side = vec![false; n];
    for &v in &side {
        in_side[v] = true;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| !in_side[v]).collect();
    let leaving = edges.iter().filter(|&&(u, v)| in_side[u] != in_side[v]).count();
    if leaving != 2 || s1 == s2 || t1 == t2 || side.len() < 2 || rest.len() < 2 {
        return Err(ColorError::Internal("malformed two-edge side"));
    }
    let with_marker = |vs: &[usize], x: usize, y: usize| {
        let mut part = induced_part(&h, vs);
        let ix = vs.binary_search(&x).unwrap();
        let iy = vs.binary_search(&y).unwrap();
        part.graph = part.graph.with_vertex(&[ix, iy]);
        part.map.push(None);
        part
    };
    let p1 = with_marker(&side, s1, s2);
    let p2 = with_marker(&rest, t1, t2);
    let children = vec![p1.graph.clone(), p2.graph.clone()];
    let join: Join<Vec<u8>> = Box::new(move |results: Vec<Vec<u8>>| {
        let local_edges = |p: &Part| -> Vec<(usize, usize)> { p.graph.edges().collect() };
        let (e1, e2) = (local_edges(&p1), local_edges(&p2));
        let (x1, x2) = (p1.graph.n() - 1, p2.graph.n() - 1);
        let local = |p: &Part, v: usize| p.map.iter().position(|&m| m == Some(v)).unwrap();
        let c1 = |u: usize, v: usize| results[0][edge_index(&e1, u, v)];
        let c2 = |u: usize, v: usize| results[1][edge_index(&e2, u, v)];
        let want1 = c2(local(&p2, t1), x2);
        let want2 = c2(local(&p2, t2), x2);
        let perm = bijection(&[(c1(local(&p1, s1), x1), want1), (c1(local(&p1, s2), x1), want2)])?;
        let mut out = vec![UNSET; edges.len()];
        for (k, &(u, v)) in e1.iter().enumerate() {
            if let (Some(pu), Some(pv)) = (p1.map[u], p1.map[v]) {
                out[edge_index(&edges, pu, pv)] = perm[results[0][k] as usize];
            }
        }
        for (k, &(u, v)) in e2.iter().enumerate() {
            if let (Some(pu), Some(pv)) = (p2.map[u], p2.map[v]) {
                out[edge_index(&edges, pu, pv)] = results[1][k];
            }
        }
        out[edge_index(&edges, s1, t1)] = want1;
        out[edge_index(&edges, s2, t2)] = want2;
        Ok(out)
    });
    Ok(Step::Split(children, join))
}

/// Split into edge-disjoint parts sharing at most the vertex `x`; the join
/// renames each part's palette so the edges at `x` get distinct colors.
fn split_edges(edges: Vec<(usize, usize)>, parts: Vec<Part>, x: Option<usize>) -> Step<Graph, Vec<u8>> {
    let children = parts.iter().map(|p| p.graph.clone()).collect();
    let join: Join<Vec<u8>> = Box::new(move |results: Vec<Vec<u8>>| {
        let mut out = vec![UNSET; edges.len()];
        let mut used_at_x = 0u8;
        for (p, res) in parts.iter().zip(results) {
            let local: Vec<(usize, usize)> = p.graph.edges().collect();
            let mut at_x = 0u8;
            for (&(u, v), &c) in local.iter().zip(&res) {
                if x.is_some() && (p.map[u] == x || p.map[v] == x) {
                    at_x |= 1 << c;
                }
            }
            let perm = PERMUTATIONS
                .iter()
                .find(|perm| (0..3).all(|c| at_x >> c & 1 == 0 || used_at_x >> perm[c] & 1 == 0))
                .ok_or(ColorError::Internal("more than three edges at a cutvertex"))?;
            for (c, &to) in perm.iter().enumerate() {
                if at_x >> c & 1 == 1 {
                    used_at_x |= 1 << to;
                }
            }
            for (&(u, v), &c) in local.iter().zip(&res) {
                let (pu, pv) = (p.map[u].unwrap(), p.map[v].unwrap());
                out[edge_index(&edges, pu, pv)] = perm[c as usize];
            }
        }
        Ok(out)
    });
    Step::Split(children, join)
}

/// Proper 3-edge-coloring of a chordless graph of maximum degree three.
///
/// Sparse graphs are colored through a Brooks coloring of their line graph;
/// otherwise the graph is split at a cutvertex or along two edges leaving a
/// proper 2-cutset side, and the parts' palettes are reconciled.
pub fn edge_color_chordless_subcubic(h: &Graph) -> Result<EdgeColoring, ColorError> {
    if let Some(v) = (0..h.n()).find(|&v| h.degree(v) > 3) {
        return Err(ColorError::DegreeTooHigh { vertex: v, degree: h.degree(v) });
    }
    if let Some(c) = oracle_chorded_cycle(h) {
        return Err(ColorError::Chord(c));
    }
    let colors = post_order(h.clone(), edge_step)?;
    let ec = EdgeColoring { edges: h.edges().collect(), colors };
    assert!(ec.is_proper(h), "edge coloring is not proper");
    Ok(ec)
}

/// Coloring of a long rich square: square `(0, 1, 2, 1)`, and along every
/// link `2`, then `1, 2, ...` alternately, ending with `0`.
pub fn color_long_rich_square(g: &Graph, shape: &RichSquareShape) -> Result<Coloring, ColorError> {
    if !shape.validate(g) {
        return Err(ColorError::MalformedShape);
    }
    let mut colors = vec![UNSET; g.n()];
    for (&u, c) in shape.square.iter().zip([0, 1, 2, 1]) {
        colors[u] = c;
    }
    for link in &shape.links {
        let t = link.len();
        colors[link[0]] = 2;
        colors[link[t - 1]] = 0;
        for (i, &p) in link[1..t - 1].iter().enumerate() {
            colors[p] = if i % 2 == 0 { 1 } else { 2 };
        }
    }
    let c = Coloring { colors };
    assert!(c.is_proper(g), "rich square coloring is not proper");
    Ok(c)
}

fn bipartite_coloring(g: &Graph) -> Option<Coloring> {
    let (a, _) = is_bipartite(g)?;
    let mut colors = vec![1u8; g.n()];
    for v in a {
        colors[v] = 0;
    }
    Some(Coloring { colors })
}

/// Coloring of an unclassified-free leaf.
fn color_leaf(g: &Graph) -> Result<Coloring, ColorError> {
    match classify_leaf(g) {
        LeafClass::SeriesParallel => color_series_parallel(g),
        LeafClass::CompleteBipartite => bipartite_coloring(g).ok_or(ColorError::Internal("complete bipartite leaf")),
        LeafClass::LongRichSquare(shape) => color_long_rich_square(g, &shape),
        LeafClass::LineOfChordlessSubcubic(root) => {
            let ec = edge_color_chordless_subcubic(&root.root)?;
            let colors = root.vertex_edge.iter().map(|&(x, y)| ec.color_of(x, y).unwrap()).collect();
            Ok(Coloring { colors })
        }
        LeafClass::Unclassified => Err(ColorError::NotInClass(RejectReason::UnclassifiedLeaf)),
    }
}

/// The two reduced graphs at a proper 2-cutset `{a, b}`: each side plus
/// `{a, b}`, with the edge `ab` standing for a chordless path through the
/// other side. Returned with their vertex maps into `g`.
pub fn reduce_at_proper_two_cutset(g: &Graph, w: &CutsetWitness) -> [(Graph, Vec<usize>); 2] {
    assert_eq!(w.kind, CutsetKind::Proper2);
    let (a, b) = (w.cut[0], w.cut[1]);
    let reduce = |side: &[usize], other: &[usize]| {
        if cfg!(debug_assertions) {
            let mut allowed = vec![false; g.n()];
            for &v in other {
                allowed[v] = true;
            }
            let path = shortest_path_within(g, a, b, &allowed).expect("a path through the other side");
            debug_assert!(crate::cutsets::is_ab_path(g, a, b, &path[1..path.len() - 1]), "shortest path is induced");
        }
        let mut vs: Vec<usize> = side.iter().copied().chain([a, b]).collect();
        vs.sort_unstable();
        let ia = vs.binary_search(&a).unwrap();
        let ib = vs.binary_search(&b).unwrap();
        (g.induced(&vs).with_edge(ia, ib), vs)
    };
    [reduce(&w.side_x, &w.side_y), reduce(&w.side_y, &w.side_x)]
}

/// Join for two colorings of parts of a graph on `n` vertices that overlap
/// in `shared` (whose colors are pairwise distinct in both): the second is
/// renamed to agree with the first there.
fn merge_two(n: usize, maps: [Vec<usize>; 2], shared: Vec<usize>) -> Join<Coloring> {
    Box::new(move |results: Vec<Coloring>| {
        let mut colors = vec![UNSET; n];
        for (i, &v) in maps[0].iter().enumerate() {
            colors[v] = results[0].colors[i];
        }
        let targets: Vec<(usize, u8)> =
            shared.iter().map(|&k| (maps[1].binary_search(&k).unwrap(), colors[k])).collect();
        let second = permute_palette(&results[1], &targets)?;
        for (i, &v) in maps[1].iter().enumerate() {
            colors[v] = second.colors[i];
        }
        Ok(Coloring { colors })
    })
}

fn vertex_step(g: Graph) -> Result<Step<Graph, Coloring>, ColorError> {
    let n = g.n();
    if g.m() == 0 {
        return Ok(Step::Done(Coloring { colors: vec![0; n] }));
    }
    if let Some(w) = find_clique_cutset(&g) {
        let side = |s: &[usize]| {
            let mut vs: Vec<usize> = s.iter().chain(&w.cut).copied().collect();
            vs.sort_unstable();
            vs
        };
        let (vx, vy) = (side(&w.side_x), side(&w.side_y));
        let children = vec![g.induced(&vx), g.induced(&vy)];
        return Ok(Step::Split(children, merge_two(n, [vx, vy], w.cut)));
    }
    if is_complete_bipartite(&g) {
        return Ok(Step::Done(bipartite_coloring(&g).unwrap()));
    }
    if let Some(w) = find_proper_two_cutset(&g) {
        let [(gx, vx), (gy, vy)] = reduce_at_proper_two_cutset(&g, &w);
        return Ok(Step::Split(vec![gx, gy], merge_two(n, [vx, vy], w.cut)));
    }
    color_leaf(&g).map(Step::Done)
}

/// Colors both reduced graphs at the proper 2-cutset `w` and merges them so
/// they agree on the cut.
pub fn combine_at_proper_two_cutset(g: &Graph, w: &CutsetWitness) -> Result<Coloring, ColorError> {
    let [(gx, vx), (gy, vy)] = reduce_at_proper_two_cutset(g, w);
    let cx = post_order(gx, vertex_step)?;
    let cy = post_order(gy, vertex_step)?;
    let c = merge_two(g.n(), [vx, vy], w.cut.clone())(vec![cx, cy])?;
    assert!(c.is_proper(g), "combined coloring is not proper");
    Ok(c)
}

/// 3-coloring of an {ISK4, wheel}-free graph.
///
/// Clique cutsets split the graph and the parts' palettes are matched on the
/// cut; complete bipartite pieces get two colors; proper 2-cutsets are
/// handled by coloring both sides with the cut joined by an edge; the
/// remaining pieces are colored by their leaf class.
pub fn color_isk4_wheel_free(g: &Graph) -> Result<Coloring, ColorError> {
    if let Some(r) = recognize_isk4_wheel_free(g).rejection() {
        return Err(ColorError::NotInClass(r.reason));
    }
    let c = post_order(g.clone(), vertex_step)?;
    assert!(c.is_proper(g), "coloring is not proper");
    Ok(c)
}
