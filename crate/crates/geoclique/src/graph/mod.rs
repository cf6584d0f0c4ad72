//! Dense undirected graphs over bit-set adjacency rows, plus the bipartite
//! machinery, shortest odd cycles, brute-force oracles, and BFS layering the
//! solvers are built on.

mod bipartite;
mod brute;
mod cycles;
mod io;

pub use bipartite::{hopcroft_karp, mis_bipartite, two_color, TwoColoring};
pub use brute::{brute_force, Objective, DEFAULT_BRUTE_CAP};
pub use cycles::{shortest_odd_cycle, OddCycle};
pub use io::{from_dimacs, from_json, to_dimacs, to_json};

use crate::bits::BitSet;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("vertex {0} out of range (n = {1})")]
    VertexOutOfRange(usize, usize),
    #[error("graph is not bipartite; odd cycle witness {0:?}")]
    NotBipartite(Vec<usize>),
    #[error("coloring is not a proper 2-coloring of the graph")]
    ImproperColoring,
    #[error("instance size {n} exceeds cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("weights must be finite and nonnegative, one per vertex")]
    BadWeights,
    #[error("seed set must be nonempty")]
    EmptySeed,
    #[error("malformed graph data: {0}")]
    Parse(String),
}

/// Undirected simple graph with optional nonnegative vertex weights.
#[derive(Clone, PartialEq)]
pub struct Graph {
    n: usize,
    adj: Vec<BitSet>,
    weights: Option<Vec<f64>>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            n,
            adj: vec![BitSet::new(n); n],
            weights: None,
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn try_add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u >= self.n {
            return Err(GraphError::VertexOutOfRange(u, self.n));
        }
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange(v, self.n));
        }
        if u != v {
            self.adj[u].insert(v);
            self.adj[v].insert(u);
        }
        Ok(())
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.try_add_edge(u, v).expect("edge endpoints in range");
    }

    pub fn set_weights(&mut self, w: Vec<f64>) -> Result<(), GraphError> {
        if w.len() != self.n || w.iter().any(|x| !x.is_finite() || *x < 0.0) {
            return Err(GraphError::BadWeights);
        }
        self.weights = Some(w);
        Ok(())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &BitSet {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|row| row.len()).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut es = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v > u {
                    es.push((u, v));
                }
            }
        }
        es
    }

    pub fn weights(&self) -> Option<&[f64]> {
        self.weights.as_deref()
    }

    /// Weight of a vertex set: cardinality when unweighted.
    pub fn set_weight(&self, s: &BitSet) -> f64 {
        match &self.weights {
            Some(w) => s.iter().map(|v| w[v]).sum(),
            None => s.len() as f64,
        }
    }

    pub fn is_independent(&self, s: &BitSet) -> bool {
        s.iter().all(|v| !self.adj[v].intersects(s))
    }

    pub fn is_clique(&self, s: &BitSet) -> bool {
        s.iter().all(|v| {
            let mut rest = s.clone();
            rest.remove(v);
            rest.is_subset(&self.adj[v])
        })
    }

    /// Open neighborhood of a set.
    pub fn open_neighborhood(&self, s: &BitSet) -> BitSet {
        let mut nb = BitSet::new(self.n);
        for v in s.iter() {
            nb.union_with(&self.adj[v]);
        }
        nb.subtract(s);
        nb
    }

    /// Closed neighborhood of a set.
    pub fn closed_neighborhood(&self, s: &BitSet) -> BitSet {
        let mut nb = self.open_neighborhood(s);
        nb.union_with(s);
        nb
    }

    /// Complement graph; weights carried over. Materialized, not a view.
    pub fn complement(&self) -> Graph {
        let mut c = Graph::new(self.n);
        for v in 0..self.n {
            let mut row = BitSet::full(self.n);
            row.subtract(&self.adj[v]);
            row.remove(v);
            c.adj[v] = row;
        }
        c.weights = self.weights.clone();
        c
    }

    /// Induced subgraph on `s` with a stable relabeling map `new index -> old
    /// vertex` (ascending order of old ids).
    pub fn induced(&self, s: &BitSet) -> (Graph, Vec<usize>) {
        let map: Vec<usize> = s.iter().collect();
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in map.iter().enumerate() {
            pos[v] = i;
        }
        let mut g = Graph::new(map.len());
        for (i, &v) in map.iter().enumerate() {
            let mut row = self.adj[v].clone();
            row.intersect_with(s);
            for w in row.iter() {
                g.adj[i].insert(pos[w]);
            }
        }
        if let Some(w) = &self.weights {
            g.weights = Some(map.iter().map(|&v| w[v]).collect());
        }
        (g, map)
    }

    /// Subgraph after deleting `s` (complement of `induced` on `V - s`).
    pub fn without(&self, s: &BitSet) -> (Graph, Vec<usize>) {
        let mut keep = BitSet::full(self.n);
        keep.subtract(s);
        self.induced(&keep)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n, self.edge_count())
    }
}

/// BFS distance classes from a seed set.
#[derive(Debug, Clone)]
pub struct Layers {
    /// `layers[k]` holds vertices at distance exactly `k + 1` from the seed.
    pub layers: Vec<BitSet>,
    /// Vertices unreachable from the seed (seed itself excluded).
    pub unreached: BitSet,
}

/// Layers `L_1..L_lambda` of vertices at exact distance `k` from `seed`.
pub fn bfs_layers(g: &Graph, seed: &BitSet) -> Result<Layers, GraphError> {
    if seed.is_empty() {
        return Err(GraphError::EmptySeed);
    }
    let mut seen = seed.clone();
    let mut frontier = seed.clone();
    let mut layers = Vec::new();
    loop {
        let mut next = g.open_neighborhood(&frontier);
        next.subtract(&seen);
        if next.is_empty() {
            break;
        }
        seen.union_with(&next);
        layers.push(next.clone());
        frontier = next;
    }
    let mut unreached = BitSet::full(g.n());
    unreached.subtract(&seen);
    Ok(Layers { layers, unreached })
}

/// Builders for the small named graphs the tests lean on.
pub fn cycle(n: usize) -> Graph {
    let mut g = Graph::new(n);
    if n >= 3 {
        for i in 0..n {
            g.add_edge(i, (i + 1) % n);
        }
    }
    g
}

pub fn path(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for i in 1..n {
        g.add_edge(i - 1, i);
    }
    g
}

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v);
        }
    }
    g
}

/// Disjoint union, second graph's vertices shifted by `a.n()`.
pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    let mut g = Graph::new(a.n() + b.n());
    for (u, v) in a.edges() {
        g.add_edge(u, v);
    }
    for (u, v) in b.edges() {
        g.add_edge(a.n() + u, a.n() + v);
    }
    g
}
