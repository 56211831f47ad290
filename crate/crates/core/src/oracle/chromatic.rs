use alloc::vec;
use alloc::vec::Vec;

use super::{check_cap, masks, TooLarge};
use crate::graph::{line_graph, Graph};

pub const CHROMATIC_CAP: usize = 24;

fn max_clique(adj: &[u32], cand: u32, size: usize, best: &mut usize) {
    if cand == 0 {
        *best = (*best).max(size);
        return;
    }
    if size + cand.count_ones() as usize <= *best {
        return;
    }
    let v = cand.trailing_zeros() as usize;
    max_clique(adj, cand & adj[v], size + 1, best);
    max_clique(adj, cand & !(1 << v), size, best);
}

/// Whether the partial coloring extends to a proper coloring with `k` colors.
/// Branches on the uncolored vertex of largest saturation.
fn extend(adj: &[u32], color: &mut [u8], k: u8, used: u8) -> bool {
    let n = adj.len();
    let mut pick = None;
    let mut best = (0u32, 0u32);
    for v in 0..n {
        if color[v] != u8::MAX {
            continue;
        }
        let seen = forbidden(adj, color, v);
        let key = (seen.count_ones(), adj[v].count_ones());
        if pick.is_none() || key > best {
            pick = Some((v, seen));
            best = key;
        }
    }
    let Some((v, seen)) = pick else { return true };
    // a fresh color is interchangeable with any other fresh color
    for c in 0..k.min(used + 1) {
        if seen >> c & 1 == 0 {
            color[v] = c;
            if extend(adj, color, k, used.max(c + 1)) {
                return true;
            }
        }
    }
    color[v] = u8::MAX;
    false
}

fn forbidden(adj: &[u32], color: &[u8], v: usize) -> u32 {
    let mut seen = 0u32;
    let mut nb = adj[v];
    while nb != 0 {
        let w = nb.trailing_zeros() as usize;
        nb &= nb - 1;
        if color[w] != u8::MAX {
            seen |= 1 << color[w];
        }
    }
    seen
}

/// Exact chromatic number by branch and bound: a maximum clique bounds from
/// below, a saturation-order greedy coloring from above, and backtracking
/// settles the values in between.
pub fn oracle_chromatic(g: &Graph) -> Result<usize, TooLarge> {
    check_cap(g, CHROMATIC_CAP)?;
    let n = g.n();
    if n == 0 {
        return Ok(0);
    }
    let adj = masks(g);
    let mut lower = 0;
    max_clique(&adj, if n == 32 { u32::MAX } else { (1u32 << n) - 1 }, 0, &mut lower);
    let mut color = vec![u8::MAX; n];
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| core::cmp::Reverse(adj[v].count_ones()));
    let mut upper = 0;
    for &v in &order {
        let seen = forbidden(&adj, &color, v);
        let c = (!seen).trailing_zeros() as u8;
        color[v] = c;
        upper = upper.max(c as usize + 1);
    }
    for k in lower..upper {
        let mut color = vec![u8::MAX; n];
        if extend(&adj, &mut color, k as u8, 0) {
            return Ok(k);
        }
    }
    Ok(upper)
}

/// Exact chromatic index, as the chromatic number of the line graph.
pub fn oracle_chromatic_index(h: &Graph) -> Result<usize, TooLarge> {
    oracle_chromatic(&line_graph(h).0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(oracle_chromatic(&Graph::empty(0)).unwrap(), 0);
        assert_eq!(oracle_chromatic(&Graph::empty(3)).unwrap(), 1);
        assert_eq!(oracle_chromatic(&Graph::complete_bipartite(3, 3)).unwrap(), 2);
        assert_eq!(oracle_chromatic(&Graph::cycle(7)).unwrap(), 3);
        assert_eq!(oracle_chromatic(&Graph::complete(5)).unwrap(), 5);
    }

    #[test]
    fn five_wheel_needs_four() {
        let mut edges: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        edges.extend((0..5).map(|i| (i, 5)));
        assert_eq!(oracle_chromatic(&Graph::from_edge_slice(6, &edges)).unwrap(), 4);
    }

    #[test]
    fn chromatic_index_of_a_claw() {
        assert_eq!(oracle_chromatic_index(&Graph::complete_bipartite(1, 3)).unwrap(), 3);
        assert_eq!(oracle_chromatic_index(&Graph::cycle(6)).unwrap(), 2);
    }
}
