//! Quasi-polynomial branching: split on high-degree vertices until the
//! degree threshold clears, then hand leaves to an exact solver (small) or
//! the packing-number recursion (large).

use super::{
    derive_params, mis_iocp_recursive, Certificate, EptasParams, Mode, PathCounts, SolveError,
    SolveResult,
};
use crate::bits::BitSet;
use crate::graph::Graph;

pub const QPTAS_LEAF_EXACT_CAP: usize = 32;

/// Degree threshold: n / ln^4 n for i = 1, n / (2 i ln^5 n) otherwise, never
/// below 1. Graphs where ln^4 n >= n therefore branch exactly to the end.
fn degree_threshold(n: usize, i: usize) -> f64 {
    if n < 3 {
        return 1.0;
    }
    let ln = (n as f64).ln();
    let t = if i <= 1 {
        n as f64 / ln.powi(4)
    } else {
        n as f64 / (2.0 * i as f64 * ln.powi(5))
    };
    t.max(1.0)
}

/// (1-eps)-approximation by exact high-degree branching with approximate
/// leaves. For n small enough that the threshold stays at 1 this is a fully
/// exact search.
pub fn qptas_branch(g: &Graph, eps: f64, i: usize, seed: u64) -> Result<SolveResult, SolveError> {
    let set = branch(g, eps, i, seed)?;
    Ok(SolveResult::checked(
        g,
        set,
        1,
        PathCounts::default(),
        seed,
        Certificate::default(),
    ))
}

fn branch(g: &Graph, eps: f64, i: usize, seed: u64) -> Result<BitSet, SolveError> {
    let n = g.n();
    if n == 0 {
        return Ok(BitSet::new(0));
    }
    let threshold = degree_threshold(n, i);
    let high = (0..n)
        .filter(|&v| g.degree(v) as f64 >= threshold && g.degree(v) > 0)
        .max_by_key(|&v| (g.degree(v), usize::MAX - v));
    if let Some(v) = high {
        let mut nv = g.neighbors(v).clone();
        nv.insert(v);
        let (h_in, map_in) = g.without(&nv);
        let sub_in = branch(&h_in, eps, i, seed)?;
        let mut with_v = BitSet::from_iter(n, [v]);
        for u in sub_in.iter() {
            with_v.insert(map_in[u]);
        }
        let only_v = BitSet::from_iter(n, [v]);
        let (h_out, map_out) = g.without(&only_v);
        let sub_out = branch(&h_out, eps, i, seed)?;
        let mut without_v = BitSet::new(n);
        for u in sub_out.iter() {
            without_v.insert(map_out[u]);
        }
        let (ww, wo) = (g.set_weight(&with_v), g.set_weight(&without_v));
        return Ok(if ww >= wo { with_v } else { without_v });
    }
    // Leaf.
    if n <= QPTAS_LEAF_EXACT_CAP {
        return Ok(super::mis_subexp(g)?.bitset(n));
    }
    let params: EptasParams = derive_params(eps, leaf_beta(g), 4, i, Mode::default())?;
    Ok(mis_iocp_recursive(g, &params, seed)?.bitset(n))
}

/// Conservative beta for approximate leaves: the independence ratio can be
/// bounded below by the greedy independent set.
fn leaf_beta(g: &Graph) -> f64 {
    let n = g.n().max(1);
    let mut taken = BitSet::new(g.n());
    let mut forbidden = BitSet::new(g.n());
    for v in 0..g.n() {
        if !forbidden.contains(v) {
            taken.insert(v);
            forbidden.insert(v);
            forbidden.union_with(g.neighbors(v));
        }
    }
    (taken.len().max(1) as f64 / n as f64).min(1.0)
}
