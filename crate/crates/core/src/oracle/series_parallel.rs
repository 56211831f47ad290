use super::{check_cap, masks, TooLarge};
use crate::graph::Graph;

pub const SP_CAP: usize = 12;

const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// Routes the remaining corner pairs by vertex-disjoint paths whose interiors
/// avoid `blocked`.
fn route(adj: &[u32], corners: &[usize; 4], pair: usize, blocked: u32) -> bool {
    if pair == PAIRS.len() {
        return true;
    }
    let (a, b) = (corners[PAIRS[pair].0], corners[PAIRS[pair].1]);
    walk(adj, corners, pair, b, a, blocked)
}

fn walk(adj: &[u32], corners: &[usize; 4], pair: usize, target: usize, at: usize, blocked: u32) -> bool {
    if adj[at] >> target & 1 == 1 && route(adj, corners, pair + 1, blocked) {
        return true;
    }
    let mut next = adj[at] & !blocked;
    while next != 0 {
        let w = next.trailing_zeros() as usize;
        next &= next - 1;
        if walk(adj, corners, pair, target, w, blocked | 1 << w) {
            return true;
        }
    }
    false
}

/// Whether `g` has no subdivision of K4 as a subgraph, by trying every choice
/// of four branch vertices and every packing of six disjoint paths.
pub fn oracle_series_parallel(g: &Graph) -> Result<bool, TooLarge> {
    check_cap(g, SP_CAP)?;
    let n = g.n();
    let adj = masks(g);
    let hubs: alloc::vec::Vec<usize> = (0..n).filter(|&v| g.degree(v) >= 3).collect();
    let k = hubs.len();
    for i in 0..k {
        for j in i + 1..k {
            for l in j + 1..k {
                for t in l + 1..k {
                    let corners = [hubs[i], hubs[j], hubs[l], hubs[t]];
                    let blocked = corners.iter().fold(0u32, |m, &c| m | 1 << c);
                    if route(&adj, &corners, 0, blocked) {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}
