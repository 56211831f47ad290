use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use super::Certificate;
use crate::graph::Graph;

struct Arc {
    to: usize,
    cap: u8,
}

/// Unit-capacity network on split vertices: `v` becomes `2v -> 2v + 1`.
struct Network {
    arcs: Vec<Arc>,
    out: Vec<Vec<usize>>,
}

impl Network {
    fn add(&mut self, a: usize, b: usize, cap: u8) {
        self.out[a].push(self.arcs.len());
        self.arcs.push(Arc { to: b, cap });
        self.out[b].push(self.arcs.len());
        self.arcs.push(Arc { to: a, cap: 0 });
    }

    fn augment(&mut self, s: usize, t: usize) -> bool {
        let mut via = vec![usize::MAX; self.out.len()];
        let mut queue = VecDeque::from([s]);
        let mut seen = vec![false; self.out.len()];
        seen[s] = true;
        while let Some(v) = queue.pop_front() {
            for &a in &self.out[v] {
                let w = self.arcs[a].to;
                if self.arcs[a].cap > 0 && !seen[w] {
                    seen[w] = true;
                    via[w] = a;
                    queue.push_back(w);
                }
            }
        }
        if !seen[t] {
            return false;
        }
        let mut v = t;
        while v != s {
            let a = via[v];
            self.arcs[a].cap -= 1;
            self.arcs[a ^ 1].cap += 1;
            v = self.arcs[a ^ 1].to;
        }
        true
    }
}

/// Two internally disjoint `x`-`y` paths avoiding the edge `xy`, if any.
fn two_paths(g: &Graph, x: usize, y: usize) -> Option<[Vec<usize>; 2]> {
    let n = g.n();
    let mut net = Network { arcs: Vec::new(), out: vec![Vec::new(); 2 * n] };
    for v in 0..n {
        net.add(2 * v, 2 * v + 1, if v == x || v == y { 2 } else { 1 });
    }
    for (u, v) in g.edges() {
        if (u, v) == (x.min(y), x.max(y)) {
            continue;
        }
        net.add(2 * u + 1, 2 * v, 1);
        net.add(2 * v + 1, 2 * u, 1);
    }
    let (s, t) = (2 * x + 1, 2 * y);
    if !(net.augment(s, t) && net.augment(s, t)) {
        return None;
    }
    // an original arc carries flow when its reverse has positive capacity
    let mut used = vec![false; net.arcs.len()];
    let mut paths: [Vec<usize>; 2] = [Vec::new(), Vec::new()];
    for path in &mut paths {
        path.push(x);
        let mut v = x;
        while v != y {
            let from = 2 * v + 1;
            let a = net.out[from]
                .iter()
                .copied()
                .find(|&a| a % 2 == 0 && !used[a] && net.arcs[a ^ 1].cap > 0 && net.arcs[a].to.is_multiple_of(2))?;
            used[a] = true;
            v = net.arcs[a].to / 2;
            path.push(v);
        }
    }
    Some(paths)
}

/// A chorded cycle: for edges in lexicographic order, the first edge `xy`
/// whose ends are joined by two internally disjoint paths in `g - xy`.
pub fn oracle_chorded_cycle(g: &Graph) -> Option<Certificate> {
    for (x, y) in g.edges() {
        if g.degree(x) < 3 || g.degree(y) < 3 {
            continue;
        }
        if let Some([p, q]) = two_paths(g, x, y) {
            // x, p's interior, y, then q's interior backwards
            let mut cycle = p;
            cycle.extend(q[1..q.len() - 1].iter().rev());
            return Some(Certificate::ChordedCycle { cycle, chord: (x, y) });
        }
    }
    None
}
