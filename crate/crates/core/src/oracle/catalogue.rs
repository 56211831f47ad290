use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::iso::canonical_form;
use crate::graph::Graph;

/// Number of graphs on `n` vertices up to isomorphism, `n = 0..=8`.
pub const CATALOGUE_COUNTS: [usize; 9] = [1, 1, 2, 4, 11, 34, 156, 1044, 12346];

fn from_code(n: usize, code: &[u8]) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if code[k] == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edge_slice(n, &edges)
}

/// All one-vertex extensions of `graphs` accepted by `keep`, up to
/// isomorphism, in canonically relabeled form and sorted by canonical code.
///
/// If `graphs` holds every graph of a hereditary class on `n` vertices and
/// `keep` tests membership, the result is every graph of the class on
/// `n + 1` vertices.
pub fn extend_by_one_vertex(graphs: &[Graph], keep: &mut dyn FnMut(&Graph) -> bool) -> Vec<Graph> {
    // canonical code -> (vertex count, accepted)
    let mut seen: BTreeMap<Vec<u8>, (usize, bool)> = BTreeMap::new();
    for g in graphs {
        let n = g.n();
        for mask in 0u64..1 << n {
            let nbrs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            let h = g.with_vertex(&nbrs);
            let (code, _) = canonical_form(&h);
            seen.entry(code).or_insert_with(|| (n + 1, keep(&h)));
        }
    }
    seen.into_iter().filter(|(_, (_, ok))| *ok).map(|(code, (n, _))| from_code(n, &code)).collect()
}

/// Every graph on `n` vertices up to isomorphism, generated by one-vertex
/// augmentation with isomorphism rejection.
pub fn catalogue(n: usize) -> Vec<Graph> {
    let mut level = alloc::vec![Graph::empty(0)];
    for _ in 0..n {
        level = extend_by_one_vertex(&level, &mut |_| true);
    }
    level
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_up_to_six() {
        for (n, &count) in CATALOGUE_COUNTS.iter().enumerate().take(7) {
            assert_eq!(catalogue(n).len(), count, "n = {n}");
        }
    }
}
