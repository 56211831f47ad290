//! Canonical labeling by individualization and refinement, for the small
//! graphs the tests and the catalogue need.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;

/// Splits cells by the multiset of neighbor cells until stable. New cells are
/// ordered by signature, so the result depends only on the isomorphism type
/// of (graph, partition).
fn refine(g: &Graph, cells: &mut Vec<Vec<usize>>) {
    let n = g.n();
    let mut cell_of = vec![0usize; n];
    loop {
        for (i, c) in cells.iter().enumerate() {
            for &v in c {
                cell_of[v] = i;
            }
        }
        let mut changed = false;
        let mut next = Vec::with_capacity(cells.len());
        for c in cells.iter() {
            if c.len() == 1 {
                next.push(c.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<usize>, usize)> = c
                .iter()
                .map(|&v| {
                    let mut sig: Vec<usize> = g.neighbors(v).iter().map(|&w| cell_of[w]).collect();
                    sig.sort_unstable();
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
            changed |= next.last().map(|l: &Vec<usize>| l.len()) != Some(c.len());
        }
        *cells = next;
        if !changed {
            return;
        }
    }
}

fn code_of(g: &Graph, order: &[usize]) -> Vec<u8> {
    let n = order.len();
    let mut code = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for j in 1..n {
        for i in 0..j {
            code.push(g.has_edge(order[i], order[j]) as u8);
        }
    }
    code
}

fn twins(g: &Graph, u: usize, v: usize) -> bool {
    let strip = |a: usize, b: usize| g.neighbors(a).iter().copied().filter(move |&w| w != b);
    strip(u, v).eq(strip(v, u))
}

/// Canonical code (upper triangle, column order) and the labeling achieving
/// it: vertex `order[i]` of `g` gets canonical label `i`. Isomorphic graphs
/// get equal codes.
pub fn canonical_form(g: &Graph) -> (Vec<u8>, Vec<usize>) {
    let n = g.n();
    let mut cells = if n == 0 { Vec::new() } else { vec![(0..n).collect::<Vec<usize>>()] };
    refine(g, &mut cells);
    let mut best: Option<(Vec<u8>, Vec<usize>)> = None;
    // explicit search stack of partitions
    let mut stack = vec![cells];
    while let Some(cells) = stack.pop() {
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            let code = code_of(g, &order);
            if best.as_ref().is_none_or(|(b, _)| code < *b) {
                best = Some((code, order));
            }
            continue;
        };
        let cell = &cells[target];
        let mut tried: Vec<usize> = Vec::new();
        let mut children = Vec::new();
        for &v in cell {
            if tried.iter().any(|&u| twins(g, u, v)) {
                continue;
            }
            tried.push(v);
            let mut next: Vec<Vec<usize>> = Vec::with_capacity(cells.len() + 1);
            next.extend_from_slice(&cells[..target]);
            next.push(vec![v]);
            next.push(cell.iter().copied().filter(|&w| w != v).collect());
            next.extend_from_slice(&cells[target + 1..]);
            refine(g, &mut next);
            children.push(next);
        }
        stack.extend(children.into_iter().rev());
    }
    best.unwrap_or_default()
}

/// Whether `g` and `h` are isomorphic.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    find_isomorphism(g, h).is_some()
}

/// A bijection `map` with `uv` an edge of `g` iff `map[u] map[v]` is an edge
/// of `h`.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if g.n() != h.n() || g.m() != h.m() {
        return None;
    }
    let mut dg: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    let mut dh: Vec<usize> = (0..h.n()).map(|v| h.degree(v)).collect();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return None;
    }
    let (cg, og) = canonical_form(g);
    let (ch, oh) = canonical_form(h);
    if cg != ch {
        return None;
    }
    let mut map = vec![0; g.n()];
    for i in 0..g.n() {
        map[og[i]] = oh[i];
    }
    Some(map)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabeled_cycles_match() {
        let a = Graph::cycle(6);
        let b = Graph::from_edge_slice(6, &[(0, 3), (3, 1), (1, 4), (4, 2), (2, 5), (5, 0)]);
        let map = find_isomorphism(&a, &b).unwrap();
        assert!(a.edges().all(|(u, v)| b.has_edge(map[u], map[v])));
    }

    #[test]
    fn c6_is_not_two_triangles() {
        let two = Graph::from_edge_slice(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]);
        assert!(!is_isomorphic(&Graph::cycle(6), &two));
    }

    #[test]
    fn empty_and_complete_graphs_are_cheap() {
        assert_eq!(canonical_form(&Graph::empty(12)).0, vec![0; 66]);
        assert_eq!(canonical_form(&Graph::complete(12)).0, vec![1; 66]);
    }
}
