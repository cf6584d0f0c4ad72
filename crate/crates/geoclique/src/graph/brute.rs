//! Exact optimum by branch and bound on bit sets. This is the oracle behind
//! every acceptance test, so it stays independent of the solver modules.

use super::{Graph, GraphError};
use crate::bits::BitSet;

pub const DEFAULT_BRUTE_CAP: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Objective {
    Mis,
    Clique,
}

/// Exact maximum independent set or clique, weighted when the graph carries
/// weights. Errors if `n` exceeds `cap`.
pub fn brute_force(g: &Graph, objective: Objective, cap: usize) -> Result<BitSet, GraphError> {
    if g.n() > cap {
        return Err(GraphError::CapExceeded { n: g.n(), cap });
    }
    let work = match objective {
        Objective::Mis => g.clone(),
        Objective::Clique => g.complement(),
    };
    let mut best = (f64::NEG_INFINITY, BitSet::new(work.n()));
    let mut current = BitSet::new(work.n());
    recurse(&work, BitSet::full(work.n()), &mut current, 0.0, &mut best);
    Ok(best.1)
}

fn recurse(g: &Graph, mut cand: BitSet, current: &mut BitSet, value: f64, best: &mut (f64, BitSet)) {
    // Absorb candidates with no remaining conflicts.
    let mut value = value;
    let mut absorbed = Vec::new();
    loop {
        let mut progress = false;
        for v in cand.clone().iter() {
            if !g.neighbors(v).intersects(&cand) {
                cand.remove(v);
                current.insert(v);
                absorbed.push(v);
                value += vertex_weight(g, v);
                progress = true;
            }
        }
        if !progress {
            break;
        }
    }
    if value > best.0 {
        *best = (value, current.clone());
    }
    let bound: f64 = cand.iter().map(|v| vertex_weight(g, v)).sum();
    if !cand.is_empty() && value + bound > best.0 {
        // Branch on the candidate with the most candidate-neighbors,
        // ties to the lowest index.
        let v = cand
            .iter()
            .max_by_key(|&v| (g.neighbors(v).intersection_count(&cand), usize::MAX - v))
            .unwrap();
        // Include v.
        let mut with_v = cand.clone();
        with_v.remove(v);
        with_v.subtract(g.neighbors(v));
        current.insert(v);
        recurse(g, with_v, current, value + vertex_weight(g, v), best);
        current.remove(v);
        // Exclude v.
        let mut without_v = cand;
        without_v.remove(v);
        recurse(g, without_v, current, value, best);
    }
    for v in absorbed {
        current.remove(v);
    }
}

#[inline]
fn vertex_weight(g: &Graph, v: usize) -> f64 {
    g.weights().map_or(1.0, |w| w[v])
}
