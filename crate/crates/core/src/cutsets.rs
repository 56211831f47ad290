//! Clique cutsets, proper 2-cutsets, star cutsets and double star cutsets.
//!
//! Every finder is deterministic: among all witnesses it can produce it
//! returns the one whose sorted cut is lexicographically least. The split of
//! the remaining vertices puts the component holding the smallest remaining
//! vertex in `side_x` unless a finder documents otherwise.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{articulation_points_masked, component_labels, components_without, Graph, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CutsetKind {
    /// Pairwise adjacent cut, including the empty cut of a disconnected graph.
    Clique,
    Proper2,
    Star,
    DoubleStar,
    OneCut,
}

impl CutsetKind {
    pub fn label(self) -> &'static str {
        match self {
            CutsetKind::Clique => "clique",
            CutsetKind::Proper2 => "proper-2",
            CutsetKind::Star => "star",
            CutsetKind::DoubleStar => "double-star",
            CutsetKind::OneCut => "1-cut",
        }
    }
}

/// A cut together with a split of (some of) the remaining vertices into two
/// nonempty sides with no edge between them.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CutsetWitness {
    pub kind: CutsetKind,
    pub cut: VertexSet,
    pub side_x: VertexSet,
    pub side_y: VertexSet,
}

impl CutsetWitness {
    /// Re-checks disconnection and the kind-specific shape of the cut.
    pub fn validate(&self, g: &Graph) -> bool {
        let n = g.n();
        let mut tag = vec![0u8; n];
        for (set, t) in [(&self.cut, 1u8), (&self.side_x, 2), (&self.side_y, 3)] {
            for &v in set.iter() {
                if v >= n || tag[v] != 0 {
                    return false;
                }
                tag[v] = t;
            }
        }
        if self.side_x.is_empty() || self.side_y.is_empty() {
            return false;
        }
        if self.side_x.iter().any(|&x| g.neighbors(x).iter().any(|&y| tag[y] == 3)) {
            return false;
        }
        let cut = &self.cut;
        let adjacent_to_all_but_self = |c: usize| cut.iter().all(|&s| s == c || g.has_edge(c, s));
        match self.kind {
            CutsetKind::Clique => cut.iter().enumerate().all(|(i, &a)| cut[i + 1..].iter().all(|&b| g.has_edge(a, b))),
            CutsetKind::OneCut => cut.len() == 1,
            CutsetKind::Proper2 => {
                cut.len() == 2
                    && !g.has_edge(cut[0], cut[1])
                    && !is_ab_path(g, cut[0], cut[1], &self.side_x)
                    && !is_ab_path(g, cut[0], cut[1], &self.side_y)
                    && self.side_x.len() + self.side_y.len() + 2 == n
            }
            CutsetKind::Star => cut.iter().any(|&c| adjacent_to_all_but_self(c)),
            CutsetKind::DoubleStar => cut.iter().any(|&u| {
                cut.iter().any(|&v| {
                    u < v
                        && g.has_edge(u, v)
                        && cut.iter().all(|&s| s == u || s == v || g.has_edge(s, u) || g.has_edge(s, v))
                })
            }),
        }
    }
}

/// Whether `G[side ∪ {a, b}]` is an induced path with ends `a` and `b`.
pub fn is_ab_path(g: &Graph, a: usize, b: usize, side: &[usize]) -> bool {
    if side.is_empty() || g.has_edge(a, b) {
        return false;
    }
    let mut inside = vec![false; g.n()];
    for &v in side {
        inside[v] = true;
    }
    let na: Vec<usize> = g.neighbors(a).iter().copied().filter(|&v| inside[v]).collect();
    let nb: Vec<usize> = g.neighbors(b).iter().copied().filter(|&v| inside[v]).collect();
    if na.len() != 1 || nb.len() != 1 {
        return false;
    }
    // walk from a's neighbor; every side vertex must have exactly two
    // neighbors in side ∪ {a, b}
    let mut inner_edges = 0;
    for &v in side {
        let d = g.neighbors(v).iter().filter(|&&w| inside[w] || w == a || w == b).count();
        if d != 2 {
            return false;
        }
        inner_edges += g.neighbors(v).iter().filter(|&&w| inside[w]).count();
    }
    if inner_edges / 2 + 2 != side.len() + 1 {
        return false;
    }
    // connected and acyclic with the right degrees: walk it
    let mut prev = a;
    let mut cur = na[0];
    let mut steps = 1;
    while cur != b {
        let next = g.neighbors(cur).iter().copied().find(|&w| w != prev && (inside[w] || w == b));
        match next {
            Some(w) => {
                prev = cur;
                cur = w;
                steps += 1;
            }
            None => return false,
        }
        if steps > side.len() + 1 {
            return false;
        }
    }
    steps == side.len() + 1
}

fn mask_of(n: usize, vs: &[usize]) -> Vec<bool> {
    let mut m = vec![false; n];
    for &v in vs {
        m[v] = true;
    }
    m
}

/// Splits `g - cut` as: component of the smallest remaining vertex vs. the rest.
fn split_first_component(g: &Graph, kind: CutsetKind, cut: VertexSet) -> Option<CutsetWitness> {
    let comps = components_without(g, &cut);
    if comps.len() < 2 {
        return None;
    }
    let side_x = comps[0].clone();
    let mut side_y: Vec<usize> = comps[1..].iter().flatten().copied().collect();
    side_y.sort_unstable();
    Some(CutsetWitness { kind, cut, side_x, side_y })
}

/// Smallest clique cutset of size at most three, lexicographically least
/// among those of that size.
///
/// A disconnected graph yields the empty clique cutset. For K4-free inputs
/// cliques of size at most three are all the cliques there are.
pub fn find_clique_cutset(g: &Graph) -> Option<CutsetWitness> {
    let n = g.n();
    if n < 2 {
        return None;
    }
    let no_removed = vec![false; n];
    let (count, _) = component_labels(g, &no_removed);
    if count >= 2 {
        return split_first_component(g, CutsetKind::Clique, Vec::new());
    }
    let cut1 = articulation_points_masked(g, &no_removed);
    if let Some(a) = cut1.iter().position(|&c| c) {
        return split_first_component(g, CutsetKind::Clique, vec![a]);
    }
    // 2-connected from here on, so any edge or triangle cutset is minimal
    let mut removed = vec![false; n];
    for a in 0..n {
        removed[a] = true;
        let cut2 = articulation_points_masked(g, &removed);
        removed[a] = false;
        if let Some(&b) = g.neighbors(a).iter().find(|&&b| b > a && cut2[b]) {
            return split_first_component(g, CutsetKind::Clique, vec![a, b]);
        }
    }
    for a in 0..n {
        removed[a] = true;
        for &b in g.neighbors(a).iter().filter(|&&b| b > a) {
            removed[b] = true;
            let cut3 = articulation_points_masked(g, &removed);
            removed[b] = false;
            let third = g.neighbors(a).iter().copied().find(|&c| c > b && cut3[c] && g.has_edge(b, c));
            if let Some(c) = third {
                return split_first_component(g, CutsetKind::Clique, vec![a, b, c]);
            }
        }
        removed[a] = false;
    }
    None
}

/// Groups the components of `g - {a, b}` into two sides, neither of which is
/// an `(a, b)`-path together with the cut. Prefers a single non-path
/// component as `side_x`; with only path components, the two first
/// components form `side_x`.
fn proper_grouping(g: &Graph, a: usize, b: usize, comps: &[VertexSet]) -> Option<(VertexSet, VertexSet)> {
    let k = comps.len();
    if k < 2 {
        return None;
    }
    let is_path: Vec<bool> = comps.iter().map(|c| is_ab_path(g, a, b, c)).collect();
    let merge = |idx: &mut dyn Iterator<Item = usize>| {
        let mut v: Vec<usize> = idx.flat_map(|i| comps[i].iter().copied()).collect();
        v.sort_unstable();
        v
    };
    if k == 2 {
        return (!is_path[0] && !is_path[1]).then(|| (comps[0].clone(), comps[1].clone()));
    }
    if let Some(i) = is_path.iter().position(|p| !p) {
        let rest = merge(&mut (0..k).filter(|&j| j != i));
        return Some((comps[i].clone(), rest));
    }
    if k >= 4 {
        return Some((merge(&mut (0..2)), merge(&mut (2..k))));
    }
    None
}

/// Lexicographically least proper 2-cutset, found by scanning the
/// cutvertices of `g - v` for every `v`.
pub fn find_proper_two_cutset(g: &Graph) -> Option<CutsetWitness> {
    let n = g.n();
    let mut removed = vec![false; n];
    for a in 0..n {
        removed[a] = true;
        let (count, _) = component_labels(g, &removed);
        let cut = articulation_points_masked(g, &removed);
        removed[a] = false;
        for (b, &b_cuts) in cut.iter().enumerate().skip(a + 1) {
            if g.has_edge(a, b) || !(count >= 2 || b_cuts) {
                continue;
            }
            let comps = components_without(g, &[a, b]);
            if let Some((side_x, side_y)) = proper_grouping(g, a, b, &comps) {
                return Some(CutsetWitness { kind: CutsetKind::Proper2, cut: vec![a, b], side_x, side_y });
            }
        }
    }
    None
}

/// Splits `g` along a proper 2-cutset `{a, b}`. Each part is the subgraph
/// induced by one side plus the cut, with one marker vertex (the last id)
/// adjacent to exactly `a` and `b`. The returned maps send part vertices to
/// `g`'s ids, `None` for the marker.
pub fn split_with_marker(g: &Graph, w: &CutsetWitness) -> [(Graph, Vec<Option<usize>>); 2] {
    assert_eq!(w.kind, CutsetKind::Proper2);
    let build = |side: &[usize]| {
        let mut vs: Vec<usize> = side.iter().chain(&w.cut).copied().collect();
        vs.sort_unstable();
        let part = g.induced(&vs);
        let ia = vs.binary_search(&w.cut[0]).unwrap();
        let ib = vs.binary_search(&w.cut[1]).unwrap();
        let part = part.with_vertex(&[ia, ib]);
        let mut origin: Vec<Option<usize>> = vs.into_iter().map(Some).collect();
        origin.push(None);
        (part, origin)
    };
    [build(&w.side_x), build(&w.side_y)]
}

/// Least candidate among `(cut)` sets whose removal disconnects `g`.
fn least_disconnecting(
    g: &Graph,
    kind: CutsetKind,
    candidates: impl Iterator<Item = VertexSet>,
) -> Option<CutsetWitness> {
    let mut best: Option<VertexSet> = None;
    let n = g.n();
    for s in candidates {
        if best.as_ref().is_some_and(|b| *b <= s) {
            continue;
        }
        let (count, _) = component_labels(g, &mask_of(n, &s));
        if count >= 2 {
            best = Some(s);
        }
    }
    best.and_then(|cut| split_first_component(g, kind, cut))
}

/// All `base \ T` for `T` a subset of `optional` of size at most two.
fn drop_up_to_two(base: &[usize], optional: &[usize]) -> Vec<VertexSet> {
    let without = |t: &[usize]| -> VertexSet { base.iter().copied().filter(|v| !t.contains(v)).collect() };
    let mut out = vec![without(&[])];
    for (i, &x) in optional.iter().enumerate() {
        out.push(without(&[x]));
        for &y in &optional[i + 1..] {
            out.push(without(&[x, y]));
        }
    }
    out
}

/// A star cutset: a disconnecting set containing a vertex adjacent to all the
/// others.
///
/// A star cutset centered at `v` exists iff `g - (N[v] \ T)` is disconnected
/// for some `T ⊆ N(v)` with `|T| <= 2` (the vertices `T` stand for the ones
/// separated inside the neighborhood). The returned cut is the least such
/// `N[v] \ T` over all centers; it is not trimmed.
pub fn find_star_cutset(g: &Graph) -> Option<CutsetWitness> {
    let candidates = (0..g.n()).flat_map(|v| {
        let mut closed: Vec<usize> = g.neighbors(v).to_vec();
        closed.push(v);
        closed.sort_unstable();
        drop_up_to_two(&closed, g.neighbors(v))
    });
    least_disconnecting(g, CutsetKind::Star, candidates)
}

/// A double star cutset: a disconnecting set containing an edge `uv` such
/// that every member is adjacent to `u` or `v`. Same search as
/// [`find_star_cutset`] over `N[u] ∪ N[v]` for every edge.
pub fn find_double_star_cutset(g: &Graph) -> Option<CutsetWitness> {
    let candidates = g.edges().flat_map(|(u, v)| {
        let mut closed: Vec<usize> = g.neighbors(u).iter().chain(g.neighbors(v)).copied().collect();
        closed.sort_unstable();
        closed.dedup();
        let optional: Vec<usize> = closed.iter().copied().filter(|&x| x != u && x != v).collect();
        drop_up_to_two(&closed, &optional)
    });
    least_disconnecting(g, CutsetKind::DoubleStar, candidates)
}

/// Least articulation point of `g`, split off as a 1-cutset.
pub fn find_one_cutset(g: &Graph) -> Option<CutsetWitness> {
    let cut = articulation_points_masked(g, &vec![false; g.n()]);
    let c = cut.iter().position(|&x| x)?;
    split_first_component(g, CutsetKind::OneCut, vec![c])
}

/// The empty cut of a disconnected graph, as a clique cutset.
pub fn disconnection(g: &Graph) -> Option<CutsetWitness> {
    split_first_component(g, CutsetKind::Clique, Vec::new())
}
