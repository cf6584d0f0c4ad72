//! The co-2-subdivision: subdivide every edge twice, then complement.

use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Role {
    Original(usize),
    /// Subdivision vertex adjacent (in the subdivision) to the first
    /// endpoint of edge k.
    EdgePlus(usize),
    /// Subdivision vertex adjacent to the second endpoint of edge k.
    EdgeMinus(usize),
}

#[derive(Debug, Clone)]
pub struct Co2Subdivision {
    pub source_n: usize,
    pub source_edges: Vec<(usize, usize)>,
    /// H on n + 2m vertices: originals first, then (plus, minus) per edge.
    pub graph: Graph,
    pub roles: Vec<Role>,
}

impl Co2Subdivision {
    pub fn plus_vertex(&self, k: usize) -> usize {
        self.source_n + 2 * k
    }
    pub fn minus_vertex(&self, k: usize) -> usize {
        self.source_n + 2 * k + 1
    }
}

/// H has n + 2m vertices and C(n+2m, 2) - 3m edges: everything is adjacent
/// except, per source edge (u, w): the pair of its two subdivision vertices,
/// v+ with u, and v- with w.
pub fn co2subdivision(g: &Graph) -> Co2Subdivision {
    let n = g.n();
    let edges = g.edges();
    let m = edges.len();
    let total = n + 2 * m;
    let mut roles: Vec<Role> = (0..n).map(Role::Original).collect();
    // Build the 2-subdivision, then complement it.
    let mut subdivision = Graph::new(total);
    for (k, &(u, w)) in edges.iter().enumerate() {
        let plus = n + 2 * k;
        let minus = n + 2 * k + 1;
        roles.push(Role::EdgePlus(k));
        roles.push(Role::EdgeMinus(k));
        subdivision.add_edge(u, plus);
        subdivision.add_edge(plus, minus);
        subdivision.add_edge(minus, w);
    }
    Co2Subdivision {
        source_n: n,
        source_edges: edges,
        graph: subdivision.complement(),
        roles,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, Graph};

    fn binom2(x: usize) -> usize {
        x * (x - 1) / 2
    }

    #[test]
    fn k3_gives_9_vertices_27_edges() {
        let sub = co2subdivision(&complete(3));
        assert_eq!(sub.graph.n(), 9);
        assert_eq!(sub.graph.edge_count(), 27);
        assert_eq!(binom2(9) - 3 * 3, 27);
    }

    #[test]
    fn single_edge_gives_p4_complement() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let sub = co2subdivision(&g);
        assert_eq!(sub.graph.n(), 4);
        assert_eq!(sub.graph.edge_count(), binom2(4) - 3);
    }

    #[test]
    fn edgeless_gives_complete() {
        let sub = co2subdivision(&Graph::new(5));
        assert_eq!(sub.graph.edge_count(), binom2(5));
    }

    #[test]
    fn edge_count_identity_and_nonadjacency_pattern() {
        use rand::prelude::*;
        use rand_chacha::ChaCha8Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..40 {
            let n = rng.gen_range(1..=7);
            let mut g = Graph::new(n);
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.5) {
                        g.add_edge(u, v);
                    }
                }
            }
            let m = g.edge_count();
            let sub = co2subdivision(&g);
            assert_eq!(sub.graph.n(), n + 2 * m);
            assert_eq!(sub.graph.edge_count(), binom2(n + 2 * m) - 3 * m);
            for (k, &(u, w)) in sub.source_edges.iter().enumerate() {
                let p = sub.plus_vertex(k);
                let q = sub.minus_vertex(k);
                assert!(!sub.graph.has_edge(p, q));
                assert!(!sub.graph.has_edge(p, u));
                assert!(!sub.graph.has_edge(q, w));
                // And adjacent to everything else.
                assert_eq!(sub.graph.degree(p), n + 2 * m - 3);
                assert_eq!(sub.graph.degree(q), n + 2 * m - 3);
            }
        }
    }
}
