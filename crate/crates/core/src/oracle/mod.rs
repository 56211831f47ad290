//! Brute-force ground truth, in-class generators and the small-graph
//! catalogue. Everything here is deliberately independent of the
//! decomposition machinery it is used to check.

use alloc::vec::Vec;

use crate::classify::is_subdivision_of_k4;
use crate::graph::{Graph, VertexSet};

mod catalogue;
mod chorded;
mod chromatic;
mod generate;
mod isk4;
mod iso;
mod series_parallel;
mod wheel;

pub use catalogue::{catalogue, extend_by_one_vertex, CATALOGUE_COUNTS};
pub use chorded::oracle_chorded_cycle;
pub use chromatic::{oracle_chromatic, oracle_chromatic_index};
pub use generate::{gen_in_class, glue_at_clique, GenError, GenKind};
pub use isk4::oracle_isk4;
pub use iso::{canonical_form, find_isomorphism, is_isomorphic};
pub use series_parallel::oracle_series_parallel;
pub use wheel::oracle_wheel;

/// Raised when an exponential oracle is asked about a graph above its cap.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("graph has {n} vertices, oracle cap is {cap}")]
pub struct TooLarge {
    pub n: usize,
    pub cap: usize,
}

pub(crate) fn check_cap(g: &Graph, cap: usize) -> Result<(), TooLarge> {
    if g.n() > cap {
        Err(TooLarge { n: g.n(), cap })
    } else {
        Ok(())
    }
}

/// Adjacency bitmasks, for graphs with at most 32 vertices.
pub(crate) fn masks(g: &Graph) -> Vec<u32> {
    assert!(g.n() <= 32);
    (0..g.n()).map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w)).collect()
}

/// A witness for a forbidden configuration.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Certificate {
    /// Four pairwise adjacent vertices.
    K4([usize; 4]),
    /// Vertex set inducing a subdivision of K4.
    Isk4(VertexSet),
    /// A hole in cyclic order and a hub with at least three neighbors on it.
    Wheel { hole: Vec<usize>, hub: usize },
    /// A cycle in cyclic order and a chord of it.
    ChordedCycle { cycle: Vec<usize>, chord: (usize, usize) },
}

impl Certificate {
    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::K4(_) => "k4",
            Certificate::Isk4(_) => "isk4",
            Certificate::Wheel { .. } => "wheel",
            Certificate::ChordedCycle { .. } => "chorded-cycle",
        }
    }

    /// All vertices the certificate names.
    pub fn vertices(&self) -> Vec<usize> {
        match self {
            Certificate::K4(k) => k.to_vec(),
            Certificate::Isk4(vs) => vs.clone(),
            Certificate::Wheel { hole, hub } => {
                let mut v = hole.clone();
                v.push(*hub);
                v
            }
            Certificate::ChordedCycle { cycle, .. } => cycle.clone(),
        }
    }

    /// Re-checks the configuration on the named vertices of `g`.
    pub fn validate(&self, g: &Graph) -> bool {
        let n = g.n();
        let vs = self.vertices();
        if vs.iter().any(|&v| v >= n) {
            return false;
        }
        let mut sorted = vs.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return false;
        }
        match self {
            Certificate::K4(k) => (0..4).all(|i| (i + 1..4).all(|j| g.has_edge(k[i], k[j]))),
            Certificate::Isk4(vs) => is_subdivision_of_k4(&g.induced(vs)),
            Certificate::Wheel { hole, hub } => {
                is_hole(g, hole) && hole.iter().filter(|&&v| g.has_edge(*hub, v)).count() >= 3
            }
            Certificate::ChordedCycle { cycle, chord } => {
                let k = cycle.len();
                let pos = |v: usize| cycle.iter().position(|&c| c == v);
                let (Some(i), Some(j)) = (pos(chord.0), pos(chord.1)) else { return false };
                let gap = i.abs_diff(j);
                k >= 4
                    && (0..k).all(|t| g.has_edge(cycle[t], cycle[(t + 1) % k]))
                    && g.has_edge(chord.0, chord.1)
                    && gap != 1
                    && gap != k - 1
            }
        }
    }
}

/// Whether `cycle` is an induced cycle of length at least four, in order.
pub fn is_hole(g: &Graph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    if k < 4 {
        return false;
    }
    for i in 0..k {
        for j in i + 1..k {
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            if g.has_edge(cycle[i], cycle[j]) != consecutive {
                return false;
            }
        }
    }
    true
}
