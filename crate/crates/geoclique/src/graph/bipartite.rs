//! 2-coloring, Hopcroft–Karp matching, and exact bipartite maximum
//! independent sets (unweighted via König, weighted via a min-cut).

use super::{Graph, GraphError};
use crate::bits::BitSet;
use std::collections::VecDeque;

/// A proper 2-coloring on the vertices where assigned.
#[derive(Debug, Clone)]
pub struct TwoColoring {
    pub color: Vec<Option<u8>>,
}

impl TwoColoring {
    pub fn side(&self, c: u8) -> impl Iterator<Item = usize> + '_ {
        self.color
            .iter()
            .enumerate()
            .filter(move |(_, col)| **col == Some(c))
            .map(|(v, _)| v)
    }

    pub fn is_proper_for(&self, g: &Graph) -> bool {
        (0..g.n()).all(|u| match self.color[u] {
            None => false,
            Some(cu) => g.neighbors(u).iter().all(|v| self.color[v] == Some(1 - cu)),
        })
    }
}

/// BFS 2-coloring. On failure returns an odd cycle assembled from the two
/// tree paths to the conflicting edge's endpoints.
pub fn two_color(g: &Graph) -> Result<TwoColoring, Vec<usize>> {
    let n = g.n();
    let mut color: Vec<Option<u8>> = vec![None; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    for root in 0..n {
        if color[root].is_some() {
            continue;
        }
        color[root] = Some(0);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let cu = color[u].unwrap();
            for v in g.neighbors(u).iter() {
                match color[v] {
                    None => {
                        color[v] = Some(1 - cu);
                        parent[v] = u;
                        depth[v] = depth[u] + 1;
                        queue.push_back(v);
                    }
                    Some(cv) if cv == cu => {
                        return Err(odd_cycle_from_conflict(u, v, &parent, &depth));
                    }
                    _ => {}
                }
            }
        }
    }
    Ok(TwoColoring { color })
}

fn odd_cycle_from_conflict(u: usize, v: usize, parent: &[usize], depth: &[usize]) -> Vec<usize> {
    let (mut a, mut b) = (u, v);
    let mut up_a = vec![a];
    let mut up_b = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        up_a.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        up_b.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        up_a.push(a);
        up_b.push(b);
    }
    // up_a ends at the LCA; cycle is u .. lca .. v, closed by the edge vu.
    up_b.pop();
    up_b.reverse();
    up_a.extend(up_b);
    up_a
}

/// Maximum-cardinality matching of a 2-colored graph; pairs are (side-0
/// vertex, side-1 vertex) in original ids.
pub fn hopcroft_karp(g: &Graph, coloring: &TwoColoring) -> Result<Vec<(usize, usize)>, GraphError> {
    if !coloring.is_proper_for(g) {
        return Err(GraphError::ImproperColoring);
    }
    let left: Vec<usize> = coloring.side(0).collect();
    let right: Vec<usize> = coloring.side(1).collect();
    let mut rpos = vec![usize::MAX; g.n()];
    for (j, &v) in right.iter().enumerate() {
        rpos[v] = j;
    }
    let adj: Vec<Vec<usize>> = left
        .iter()
        .map(|&u| g.neighbors(u).iter().map(|v| rpos[v]).collect())
        .collect();

    let (nl, nr) = (left.len(), right.len());
    let mut match_l = vec![usize::MAX; nl];
    let mut match_r = vec![usize::MAX; nr];
    loop {
        // BFS phase: distance over free left vertices.
        let mut dist = vec![usize::MAX; nl];
        let mut queue: VecDeque<usize> = (0..nl).filter(|&i| match_l[i] == usize::MAX).collect();
        for &i in &queue {
            dist[i] = 0;
        }
        let mut found_free = false;
        while let Some(i) = queue.pop_front() {
            for &j in &adj[i] {
                let i2 = match_r[j];
                if i2 == usize::MAX {
                    found_free = true;
                } else if dist[i2] == usize::MAX {
                    dist[i2] = dist[i] + 1;
                    queue.push_back(i2);
                }
            }
        }
        if !found_free {
            break;
        }
        // DFS phase: vertex-disjoint shortest augmenting paths.
        fn dfs(
            i: usize,
            adj: &[Vec<usize>],
            dist: &mut [usize],
            match_l: &mut [usize],
            match_r: &mut [usize],
        ) -> bool {
            let d = std::mem::replace(&mut dist[i], usize::MAX);
            for &j in &adj[i] {
                let i2 = match_r[j];
                if i2 == usize::MAX
                    || (dist[i2] == d + 1 && dfs(i2, adj, dist, match_l, match_r))
                {
                    match_l[i] = j;
                    match_r[j] = i;
                    return true;
                }
            }
            false
        }
        let mut progress = false;
        for i in 0..nl {
            if match_l[i] == usize::MAX && dist[i] == 0 {
                progress |= dfs(i, &adj, &mut dist, &mut match_l, &mut match_r);
            }
        }
        if !progress {
            break;
        }
    }

    Ok((0..nl)
        .filter(|&i| match_l[i] != usize::MAX)
        .map(|i| (left[i], right[match_l[i]]))
        .collect())
}

/// Maximum independent set of a bipartite graph, exact.
///
/// Unweighted runs König's construction off a maximum matching; weighted
/// solves the standard source/sink min-cut with vertex-weight capacities
/// scaled to integers at 1e6 so the cut is exact for test weights.
pub fn mis_bipartite(g: &Graph) -> Result<BitSet, GraphError> {
    let coloring = two_color(g).map_err(GraphError::NotBipartite)?;
    let set = match g.weights() {
        None => mis_unweighted(g, &coloring)?,
        Some(w) => mis_weighted(g, &coloring, w),
    };
    debug_assert!(g.is_independent(&set));
    Ok(set)
}

fn mis_unweighted(g: &Graph, coloring: &TwoColoring) -> Result<BitSet, GraphError> {
    let matching = hopcroft_karp(g, coloring)?;
    let mut matched_to = vec![usize::MAX; g.n()];
    for &(u, v) in &matching {
        matched_to[u] = v;
        matched_to[v] = u;
    }
    // Alternating reachability from unmatched side-0 vertices.
    let mut z = BitSet::new(g.n());
    let mut queue: VecDeque<usize> = coloring
        .side(0)
        .filter(|&u| matched_to[u] == usize::MAX)
        .collect();
    for &u in &queue {
        z.insert(u);
    }
    while let Some(u) = queue.pop_front() {
        if coloring.color[u] == Some(0) {
            for v in g.neighbors(u).iter() {
                if matched_to[u] != v && !z.contains(v) {
                    z.insert(v);
                    queue.push_back(v);
                }
            }
        } else if matched_to[u] != usize::MAX && !z.contains(matched_to[u]) {
            z.insert(matched_to[u]);
            queue.push_back(matched_to[u]);
        }
    }
    // König: min cover = (L \ Z) ∪ (R ∩ Z); the MIS is its complement.
    let mut mis = BitSet::new(g.n());
    for u in 0..g.n() {
        let in_cover = match coloring.color[u] {
            Some(0) => !z.contains(u),
            Some(1) => z.contains(u),
            _ => false,
        };
        if !in_cover {
            mis.insert(u);
        }
    }
    debug_assert_eq!(mis.len() + matching.len(), g.n());
    Ok(mis)
}

const WEIGHT_SCALE: f64 = 1e6;

fn mis_weighted(g: &Graph, coloring: &TwoColoring, weights: &[f64]) -> BitSet {
    // Nodes: 0 = source, 1 = sink, 2 + v = vertex v.
    let n = g.n();
    let mut net = FlowNet::new(n + 2);
    let scale = |w: f64| (w * WEIGHT_SCALE).round() as i64;
    for v in 0..n {
        match coloring.color[v] {
            Some(0) => {
                net.add_edge(0, 2 + v, scale(weights[v]));
                for u in g.neighbors(v).iter() {
                    net.add_edge(2 + v, 2 + u, i64::MAX / 4);
                }
            }
            Some(1) => net.add_edge(2 + v, 1, scale(weights[v])),
            _ => {}
        }
    }
    net.max_flow(0, 1);
    let reach = net.residual_reachable(0);
    // Min cut: side-0 vertices severed from the source, side-1 vertices still
    // reachable. The MIS is everything outside the cut.
    let mut mis = BitSet::new(n);
    for v in 0..n {
        let in_cover = match coloring.color[v] {
            Some(0) => !reach[2 + v],
            Some(1) => reach[2 + v],
            _ => false,
        };
        if !in_cover {
            mis.insert(v);
        }
    }
    mis
}

/// Dinic max flow; small and dependency-free, sized for desk-scale graphs.
struct FlowNet {
    first: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<i64>,
}

impl FlowNet {
    fn new(n: usize) -> Self {
        FlowNet {
            first: vec![Vec::new(); n],
            to: Vec::new(),
            cap: Vec::new(),
        }
    }

    fn add_edge(&mut self, u: usize, v: usize, c: i64) {
        self.first[u].push(self.to.len());
        self.to.push(v);
        self.cap.push(c);
        self.first[v].push(self.to.len());
        self.to.push(u);
        self.cap.push(0);
    }

    fn max_flow(&mut self, s: usize, t: usize) -> i64 {
        let mut total = 0;
        loop {
            let mut level = vec![usize::MAX; self.first.len()];
            level[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &e in &self.first[u] {
                    if self.cap[e] > 0 && level[self.to[e]] == usize::MAX {
                        level[self.to[e]] = level[u] + 1;
                        queue.push_back(self.to[e]);
                    }
                }
            }
            if level[t] == usize::MAX {
                return total;
            }
            let mut it = vec![0usize; self.first.len()];
            loop {
                let pushed = self.dfs(s, t, i64::MAX / 2, &level, &mut it);
                if pushed == 0 {
                    break;
                }
                total += pushed;
            }
        }
    }

    fn dfs(&mut self, u: usize, t: usize, limit: i64, level: &[usize], it: &mut [usize]) -> i64 {
        if u == t {
            return limit;
        }
        while it[u] < self.first[u].len() {
            let e = self.first[u][it[u]];
            let v = self.to[e];
            if self.cap[e] > 0 && level[v] == level[u] + 1 {
                let pushed = self.dfs(v, t, limit.min(self.cap[e]), level, it);
                if pushed > 0 {
                    self.cap[e] -= pushed;
                    self.cap[e ^ 1] += pushed;
                    return pushed;
                }
            }
            it[u] += 1;
        }
        0
    }

    fn residual_reachable(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.first.len()];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &e in &self.first[u] {
                if self.cap[e] > 0 && !seen[self.to[e]] {
                    seen[self.to[e]] = true;
                    queue.push_back(self.to[e]);
                }
            }
        }
        seen
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{brute_force, complete, cycle, path, Objective};
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn random_bipartite(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
        let mut g = Graph::new(n);
        let side: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
        for u in 0..n {
            for v in u + 1..n {
                if side[u] != side[v] && rng.gen_bool(p) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    #[test]
    fn c4_bipartite_c5_not() {
        assert!(two_color(&cycle(4)).is_ok());
        let w = two_color(&cycle(5)).unwrap_err();
        assert_eq!(w.len(), 5);
        let g = cycle(5);
        for i in 0..w.len() {
            assert!(g.has_edge(w[i], w[(i + 1) % w.len()]));
        }
    }

    #[test]
    fn odd_witness_is_genuine_cycle() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let n = rng.gen_range(3..=14);
            let g = super::super::tests::random_graph(n, 0.4, &mut rng);
            match two_color(&g) {
                Ok(c) => assert!(c.is_proper_for(&g)),
                Err(w) => {
                    assert!(w.len() % 2 == 1 && w.len() >= 3);
                    let mut sorted = w.clone();
                    sorted.sort_unstable();
                    sorted.dedup();
                    assert_eq!(sorted.len(), w.len(), "repeated vertex in witness");
                    for i in 0..w.len() {
                        assert!(g.has_edge(w[i], w[(i + 1) % w.len()]));
                    }
                }
            }
        }
    }

    #[test]
    fn bipartiteness_matches_brute_force() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..120 {
            let n = rng.gen_range(1..=12);
            let g = super::super::tests::random_graph(n, 0.3, &mut rng);
            let fast = two_color(&g).is_ok();
            let slow = brute_force_bipartite(&g);
            assert_eq!(fast, slow);
        }
    }

    fn brute_force_bipartite(g: &Graph) -> bool {
        // Try all 2^n colorings.
        let n = g.n();
        if n > 20 {
            panic!("oracle cap");
        }
        (0u32..1 << n).any(|mask| {
            g.edges()
                .iter()
                .all(|&(u, v)| (mask >> u & 1) != (mask >> v & 1))
        })
    }

    #[test]
    fn matching_k33_and_p4() {
        let mut k33 = Graph::new(6);
        for u in 0..3 {
            for v in 3..6 {
                k33.add_edge(u, v);
            }
        }
        let c = two_color(&k33).unwrap();
        assert_eq!(hopcroft_karp(&k33, &c).unwrap().len(), 3);

        let p4 = path(4);
        let c = two_color(&p4).unwrap();
        assert_eq!(hopcroft_karp(&p4, &c).unwrap().len(), 2);
    }

    #[test]
    fn improper_coloring_rejected() {
        let g = complete(3);
        let bad = TwoColoring {
            color: vec![Some(0), Some(0), Some(1)],
        };
        assert!(matches!(
            hopcroft_karp(&g, &bad),
            Err(GraphError::ImproperColoring)
        ));
    }

    #[test]
    fn matching_matches_brute_force() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..80 {
            let n = rng.gen_range(1..=14);
            let g = random_bipartite(n, 0.4, &mut rng);
            let c = two_color(&g).unwrap();
            let m = hopcroft_karp(&g, &c).unwrap();
            for &(u, v) in &m {
                assert!(g.has_edge(u, v));
            }
            let mut used = vec![false; n];
            for &(u, v) in &m {
                assert!(!used[u] && !used[v]);
                used[u] = true;
                used[v] = true;
            }
            assert_eq!(m.len(), brute_matching(&g));
        }
    }

    fn brute_matching(g: &Graph) -> usize {
        fn go(g: &Graph, edges: &[(usize, usize)], used: u32) -> usize {
            let mut best = 0;
            for (i, &(u, v)) in edges.iter().enumerate() {
                if used >> u & 1 == 0 && used >> v & 1 == 0 {
                    best = best
                        .max(1 + go(g, &edges[i + 1..], used | 1 << u | 1 << v));
                }
            }
            best
        }
        go(g, &g.edges(), 0)
    }

    #[test]
    fn mis_c6_and_weighted_p3() {
        let mis = mis_bipartite(&cycle(6)).unwrap();
        assert_eq!(mis.len(), 3);

        let mut p3 = path(3);
        p3.set_weights(vec![1.0, 5.0, 1.0]).unwrap();
        let mis = mis_bipartite(&p3).unwrap();
        assert_eq!(mis.to_vec(), vec![1]);
        assert_eq!(p3.set_weight(&mis), 5.0);
    }

    #[test]
    fn nonbipartite_reports_witness() {
        match mis_bipartite(&cycle(7)) {
            Err(GraphError::NotBipartite(w)) => assert_eq!(w.len(), 7),
            other => panic!("expected odd-cycle error, got {other:?}"),
        }
    }

    #[test]
    fn koenig_identity_holds() {
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        for _ in 0..120 {
            let n = rng.gen_range(1..=14);
            let g = random_bipartite(n, 0.4, &mut rng);
            let c = two_color(&g).unwrap();
            let m = hopcroft_karp(&g, &c).unwrap();
            let mis = mis_bipartite(&g).unwrap();
            assert_eq!(mis.len() + m.len(), n);
        }
    }

    #[test]
    fn weighted_mis_matches_brute_force() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..500 {
            let n = rng.gen_range(1..=14);
            let mut g = random_bipartite(n, 0.4, &mut rng);
            let w: Vec<f64> = (0..n).map(|_| rng.gen_range(0..=9) as f64).collect();
            g.set_weights(w).unwrap();
            let mis = mis_bipartite(&g).unwrap();
            let best = brute_force(&g, Objective::Mis, 20).unwrap();
            assert_eq!(g.set_weight(&mis), g.set_weight(&best));
        }
    }
}
