//! Shortest odd cycles via BFS on the bipartite double cover.

use super::Graph;
use std::collections::VecDeque;

/// An odd cycle as a vertex sequence `v_1..v_g`, consecutive pairs adjacent
/// with wraparound. Produced by [`shortest_odd_cycle`] it is also chordless:
/// a chord would split off a strictly shorter odd cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddCycle {
    pub vertices: Vec<usize>,
}

impl OddCycle {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn validate(&self, g: &Graph) -> bool {
        let vs = &self.vertices;
        let k = vs.len();
        if k < 3 || k % 2 == 0 {
            return false;
        }
        let mut sorted = vs.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != k {
            return false;
        }
        (0..k).all(|i| g.has_edge(vs[i], vs[(i + 1) % k]))
    }

    pub fn is_chordless(&self, g: &Graph) -> bool {
        let vs = &self.vertices;
        let k = vs.len();
        for i in 0..k {
            for j in i + 1..k {
                let consecutive = j == i + 1 || (i == 0 && j == k - 1);
                if !consecutive && g.has_edge(vs[i], vs[j]) {
                    return false;
                }
            }
        }
        true
    }
}

/// `None` iff the graph is bipartite; otherwise a minimum-length odd cycle,
/// found by BFS from every vertex on the bipartite double cover. The cycle is
/// rotated to start at its smallest vertex, lower neighbor first.
pub fn shortest_odd_cycle(g: &Graph) -> Option<OddCycle> {
    let n = g.n();
    let mut best: Option<Vec<usize>> = None;
    let mut best_len = usize::MAX;
    for s in 0..n {
        if let Some(walk) = odd_walk_through(g, s, best_len) {
            if walk.len() < best_len {
                best_len = walk.len();
                best = Some(walk);
            }
        }
    }
    best.map(|vertices| {
        let cycle = OddCycle {
            vertices: canonical_rotation(vertices),
        };
        debug_assert!(cycle.validate(g));
        debug_assert!(cycle.is_chordless(g));
        cycle
    })
}

/// Shortest odd closed walk through `s` as a vertex list (without the
/// repeated endpoint), or `None` if no odd walk shorter than `cap` exists.
fn odd_walk_through(g: &Graph, s: usize, cap: usize) -> Option<Vec<usize>> {
    let n = g.n();
    // Double cover state v + parity * n.
    let mut dist = vec![usize::MAX; 2 * n];
    let mut parent = vec![usize::MAX; 2 * n];
    dist[s] = 0;
    let mut queue = VecDeque::from([s]);
    while let Some(state) = queue.pop_front() {
        let (v, par) = (state % n, state / n);
        if dist[state] + 1 >= cap && !(v == s && par == 0) {
            // Even the next step cannot beat the incumbent.
            continue;
        }
        for w in g.neighbors(v).iter() {
            let next = w + (1 - par) * n;
            if dist[next] == usize::MAX {
                dist[next] = dist[state] + 1;
                parent[next] = state;
                queue.push_back(next);
            }
        }
    }
    if dist[s + n] == usize::MAX || dist[s + n] >= cap {
        return None;
    }
    let mut walk = Vec::with_capacity(dist[s + n]);
    let mut state = s + n;
    while state != s {
        walk.push(state % n);
        state = parent[state];
    }
    walk.push(s);
    walk.reverse();
    walk.pop(); // drop the repeated start
    // The minimal odd closed walk is a simple cycle: a repeated vertex would
    // split it into a strictly shorter odd closed walk.
    let mut seen = vec![false; n];
    for &v in &walk {
        if seen[v] {
            return None;
        }
        seen[v] = true;
    }
    Some(walk)
}

fn canonical_rotation(vs: Vec<usize>) -> Vec<usize> {
    let k = vs.len();
    let start = (0..k).min_by_key(|&i| vs[i]).unwrap();
    let fwd = vs[(start + 1) % k];
    let bwd = vs[(start + k - 1) % k];
    let mut out = Vec::with_capacity(k);
    if fwd <= bwd {
        for i in 0..k {
            out.push(vs[(start + i) % k]);
        }
    } else {
        for i in 0..k {
            out.push(vs[(start + k - i) % k]);
        }
    }
    out
}
