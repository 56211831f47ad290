use alloc::vec::Vec;

use super::{check_cap, masks, Certificate, TooLarge};
use crate::classify::is_subdivision_of_k4;
use crate::graph::Graph;

pub const ISK4_CAP: usize = 16;

fn connected(adj: &[u32], set: u32) -> bool {
    if set == 0 {
        return true;
    }
    let mut seen = set & set.wrapping_neg();
    let mut frontier = seen;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let new = adj[v] & set & !seen;
        seen |= new;
        frontier |= new;
    }
    seen == set
}

/// Smallest vertex set inducing a subdivision of K4 (lexicographically first
/// among the smallest), by enumerating subsets in increasing size.
pub fn oracle_isk4(g: &Graph) -> Result<Option<Certificate>, TooLarge> {
    check_cap(g, ISK4_CAP)?;
    let n = g.n();
    let adj = masks(g);
    for k in 4..=n {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            let set = idx.iter().fold(0u32, |m, &v| m | 1 << v);
            let mut branch = 0;
            let ok = idx.iter().all(|&v| match (adj[v] & set).count_ones() {
                2 => true,
                3 => {
                    branch += 1;
                    true
                }
                _ => false,
            });
            if ok && branch == 4 && connected(&adj, set) && is_subdivision_of_k4(&g.induced(&idx)) {
                return Ok(Some(Certificate::Isk4(idx)));
            }
            // next k-combination in lexicographic order
            let Some(i) = (0..k).rev().find(|&i| idx[i] < n - k + i) else { break };
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    Ok(None)
}
