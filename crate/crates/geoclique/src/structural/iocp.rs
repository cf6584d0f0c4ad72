//! Search for two vertex-disjoint, mutually anticomplete induced odd cycles.
//!
//! A witness on the complement of a disk or unit-ball instance would refute
//! the structural obstruction the whole solver stack is built on, so the
//! result keeps the searched bound explicit: absence is only certified up to
//! the cycle-length cap.

use super::StructuralError;
use crate::bits::BitSet;
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IocpWitness {
    /// Two induced odd cycles, vertex-disjoint, with no edge between them.
    Found {
        cycle_a: Vec<usize>,
        cycle_b: Vec<usize>,
    },
    /// No witness among induced odd cycles of length at most `cap`.
    NoneUpToCap { cap: usize, cycles_seen: usize },
}

const EXHAUSTIVE_CAP: usize = 24;

/// Exhaustive over all induced odd cycles; only valid for n <= 24.
pub fn find_two_anticomplete_odd_cycles_exhaustive(
    g: &Graph,
) -> Result<IocpWitness, StructuralError> {
    if g.n() > EXHAUSTIVE_CAP {
        return Err(StructuralError::CapExceeded {
            n: g.n(),
            cap: EXHAUSTIVE_CAP,
        });
    }
    Ok(find_two_anticomplete_odd_cycles(g, g.n()))
}

/// Enumerates induced odd cycles up to `cap` vertices and tests all pairs.
pub fn find_two_anticomplete_odd_cycles(g: &Graph, cap: usize) -> IocpWitness {
    let cycles = enumerate_induced_odd_cycles(g, cap);
    // Closed neighborhoods let the anticomplete test be one bit-set probe.
    let closed: Vec<BitSet> = cycles
        .iter()
        .map(|c| {
            let mut nb = BitSet::new(g.n());
            for &v in c {
                nb.insert(v);
                nb.union_with(g.neighbors(v));
            }
            nb
        })
        .collect();
    let verts: Vec<BitSet> = cycles
        .iter()
        .map(|c| BitSet::from_iter(g.n(), c.iter().copied()))
        .collect();
    for i in 0..cycles.len() {
        for j in i + 1..cycles.len() {
            if closed[i].is_disjoint(&verts[j]) {
                let w = IocpWitness::Found {
                    cycle_a: cycles[i].clone(),
                    cycle_b: cycles[j].clone(),
                };
                debug_assert!(verify_witness(g, &cycles[i], &cycles[j]));
                return w;
            }
        }
    }
    IocpWitness::NoneUpToCap {
        cap,
        cycles_seen: cycles.len(),
    }
}

fn verify_witness(g: &Graph, a: &[usize], b: &[usize]) -> bool {
    let induced_odd = |c: &[usize]| {
        let k = c.len();
        if k < 3 || k % 2 == 0 {
            return false;
        }
        for i in 0..k {
            for j in i + 1..k {
                let consecutive = j == i + 1 || (i == 0 && j == k - 1);
                if g.has_edge(c[i], c[j]) != consecutive {
                    return false;
                }
            }
        }
        true
    };
    let va = BitSet::from_iter(g.n(), a.iter().copied());
    let vb = BitSet::from_iter(g.n(), b.iter().copied());
    induced_odd(a)
        && induced_odd(b)
        && va.is_disjoint(&vb)
        && a.iter().all(|&u| !g.neighbors(u).intersects(&vb))
}

/// DFS enumeration of chordless cycles: the start is the cycle's minimum
/// vertex, interior vertices may touch the start only when closing, and each
/// cycle is emitted in one canonical direction.
fn enumerate_induced_odd_cycles(g: &Graph, cap: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let n = g.n();
    let mut path = Vec::new();
    for s in 0..n {
        for v1 in g.neighbors(s).iter() {
            if v1 < s {
                continue;
            }
            path.clear();
            path.push(s);
            path.push(v1);
            // Vertices forbidden for extension: the path and neighbors of
            // interior path vertices (chords), except the running endpoint.
            let mut blocked = BitSet::from_iter(n, [s, v1]);
            extend(g, s, &mut path, &mut blocked, cap, &mut out);
        }
    }
    out
}

fn extend(
    g: &Graph,
    s: usize,
    path: &mut Vec<usize>,
    blocked: &BitSet,
    cap: usize,
    out: &mut Vec<Vec<usize>>,
) {
    let last = *path.last().unwrap();
    let mut cands = g.neighbors(last).clone();
    cands.subtract(blocked);
    for w in cands.iter() {
        if w < s {
            continue;
        }
        let closes = g.neighbors(s).contains(w);
        if closes {
            let len = path.len() + 1;
            // Canonical direction: second vertex below the closing vertex.
            if len >= 3 && len % 2 == 1 && path[1] < w {
                let mut cycle = path.clone();
                cycle.push(w);
                out.push(cycle);
            }
            // An interior vertex adjacent to the start would be a chord, so
            // w cannot extend the path further.
            continue;
        }
        if path.len() + 1 >= cap {
            continue;
        }
        // Block the previous endpoint's other neighbors from now on: any
        // later vertex adjacent to `last` would create a chord.
        let mut blocked2 = blocked.clone();
        blocked2.union_with(g.neighbors(last));
        blocked2.insert(w);
        path.push(w);
        extend(g, s, path, &blocked2, cap, out);
        path.pop();
    }
}
