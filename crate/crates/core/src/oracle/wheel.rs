use alloc::vec::Vec;

use super::{check_cap, masks, Certificate, TooLarge};
use crate::graph::Graph;

pub const WHEEL_CAP: usize = 16;

/// Calls `found` on every hole of the graph given by `adj` restricted to
/// `allowed`, once per hole: the walk starts at the smallest vertex and its
/// second vertex is smaller than its last. Stops early when `found` returns
/// true.
pub(crate) fn for_each_hole(adj: &[u32], allowed: u32, found: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    fn extend(
        adj: &[u32],
        allowed: u32,
        path: &mut Vec<usize>,
        inner: u32,
        found: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        let s = path[0];
        let last = *path.last().unwrap();
        let mut cands = adj[last] & allowed & !((2u32 << s) - 1);
        while cands != 0 {
            let w = cands.trailing_zeros() as usize;
            cands &= cands - 1;
            if path.contains(&w) || adj[w] & inner != 0 {
                continue;
            }
            if path.len() >= 2 && adj[w] >> s & 1 == 1 {
                if path.len() >= 3 && path[1] < w {
                    path.push(w);
                    let stop = found(path);
                    path.pop();
                    if stop {
                        return true;
                    }
                }
                continue;
            }
            // `last` becomes inner once `w` is appended, except when it is the start
            let next_inner = if path.len() >= 2 { inner | 1 << last } else { inner };
            path.push(w);
            let stop = extend(adj, allowed, path, next_inner, found);
            path.pop();
            if stop {
                return true;
            }
        }
        false
    }
    let mut rest = allowed;
    while rest != 0 {
        let s = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let mut path = alloc::vec![s];
        if extend(adj, allowed, &mut path, 0, found) {
            return true;
        }
    }
    false
}

/// A wheel in `g`: for hubs in increasing order, the first hole of `g - hub`
/// with at least three neighbors of the hub.
pub fn oracle_wheel(g: &Graph) -> Result<Option<Certificate>, TooLarge> {
    check_cap(g, WHEEL_CAP)?;
    let n = g.n();
    let adj = masks(g);
    let all = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    for x in 0..n {
        if adj[x].count_ones() < 3 {
            continue;
        }
        let mut hit = None;
        for_each_hole(&adj, all & !(1 << x), &mut |hole| {
            let spokes = hole.iter().filter(|&&v| adj[x] >> v & 1 == 1).count();
            if spokes >= 3 {
                hit = Some(hole.to_vec());
            }
            hit.is_some()
        });
        if let Some(hole) = hit {
            return Ok(Some(Certificate::Wheel { hole, hub: x }));
        }
    }
    Ok(None)
}
