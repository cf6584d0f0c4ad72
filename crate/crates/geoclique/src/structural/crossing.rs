//! Crossing-profile quantities for a pair of closed planar polygonal chains.
//!
//! For segment i of the first chain: `a[i]` counts segments of the second
//! chain crossed by the full line through segment i, `b[i]` counts segments
//! of the second chain whose line crosses segment i, and `c[i]` counts
//! proper segment/segment crossings. Primed arrays swap the roles. For
//! closed curves in general position each `a` entry is even, the total
//! crossing count is even, and the cross sums match by double counting.

use super::StructuralError;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

pub type ChainPair = (Vec<[f64; 2]>, Vec<[f64; 2]>);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossingProfile {
    pub a: Vec<u64>,
    pub b: Vec<u64>,
    pub c: Vec<u64>,
    pub a2: Vec<u64>,
    pub b2: Vec<u64>,
    pub c2: Vec<u64>,
}

impl CrossingProfile {
    pub fn sum_a(&self) -> u64 {
        self.a.iter().sum()
    }
    pub fn sum_b(&self) -> u64 {
        self.b.iter().sum()
    }
    pub fn sum_c(&self) -> u64 {
        self.c.iter().sum()
    }
    pub fn sum_a2(&self) -> u64 {
        self.a2.iter().sum()
    }
    pub fn sum_b2(&self) -> u64 {
        self.b2.iter().sum()
    }
    pub fn sum_c2(&self) -> u64 {
        self.c2.iter().sum()
    }

    /// The parity and double-counting invariants; an `Err` names the first
    /// violated one.
    pub fn check_invariants(&self) -> Result<(), String> {
        if let Some(i) = self.a.iter().position(|x| x % 2 == 1) {
            return Err(format!("a[{i}] = {} is odd", self.a[i]));
        }
        if let Some(j) = self.a2.iter().position(|x| x % 2 == 1) {
            return Err(format!("a'[{j}] = {} is odd", self.a2[j]));
        }
        if self.sum_c() % 2 == 1 {
            return Err(format!("sum c = {} is odd", self.sum_c()));
        }
        if self.sum_c() != self.sum_c2() {
            return Err("sum c != sum c'".into());
        }
        if self.sum_b() != self.sum_a2() {
            return Err(format!("sum b = {} != sum a' = {}", self.sum_b(), self.sum_a2()));
        }
        if self.sum_b2() != self.sum_a() {
            return Err(format!("sum b' = {} != sum a = {}", self.sum_b2(), self.sum_a()));
        }
        Ok(())
    }
}

const DEGENERACY_EPS: f64 = 1e-11;
const PERTURB_MAG: f64 = 1e-7;
const PERTURB_ATTEMPTS: usize = 8;

fn orient(a: [f64; 2], b: [f64; 2], c: [f64; 2]) -> f64 {
    (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
}

fn segments(chain: &[[f64; 2]]) -> Vec<([f64; 2], [f64; 2])> {
    (0..chain.len())
        .map(|i| (chain[i], chain[(i + 1) % chain.len()]))
        .collect()
}

/// General position: no endpoint of one chain lies on (or within eps of) a
/// line spanned by a segment of the other, relative to the segment scale.
fn in_general_position(c1: &[[f64; 2]], c2: &[[f64; 2]]) -> bool {
    let check = |segs: &[([f64; 2], [f64; 2])], pts: &[[f64; 2]]| {
        segs.iter().all(|&(a, b)| {
            let len = ((b[0] - a[0]).powi(2) + (b[1] - a[1]).powi(2)).sqrt();
            len > DEGENERACY_EPS
                && pts
                    .iter()
                    .all(|&p| orient(a, b, p).abs() > DEGENERACY_EPS * len.max(1.0))
        })
    };
    check(&segments(c1), c2) && check(&segments(c2), c1)
}

/// Exact strict-sign crossing tests on validated general-position chains;
/// a seeded perturbation of magnitude 1e-7 is applied when validation fails.
pub fn crossing_profile(
    chain1: &[[f64; 2]],
    chain2: &[[f64; 2]],
    seed: u64,
) -> Result<CrossingProfile, StructuralError> {
    if chain1.len() < 3 || chain2.len() < 3 {
        return Err(StructuralError::BadChain(
            "closed chains need at least 3 vertices".into(),
        ));
    }
    let mut c1 = chain1.to_vec();
    let mut c2 = chain2.to_vec();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 0..=PERTURB_ATTEMPTS {
        if in_general_position(&c1, &c2) {
            return Ok(profile(&c1, &c2));
        }
        if attempt == PERTURB_ATTEMPTS {
            break;
        }
        let jiggle = |p: &mut [f64; 2], rng: &mut ChaCha8Rng| {
            p[0] += rng.gen_range(-PERTURB_MAG..PERTURB_MAG);
            p[1] += rng.gen_range(-PERTURB_MAG..PERTURB_MAG);
        };
        c1 = chain1.to_vec();
        c2 = chain2.to_vec();
        for p in c1.iter_mut().chain(c2.iter_mut()) {
            jiggle(p, &mut rng);
        }
    }
    Err(StructuralError::DegenerateChains(PERTURB_ATTEMPTS))
}

fn profile(c1: &[[f64; 2]], c2: &[[f64; 2]]) -> CrossingProfile {
    let s1 = segments(c1);
    let s2 = segments(c2);
    let line_hits_seg = |line: &([f64; 2], [f64; 2]), seg: &([f64; 2], [f64; 2])| {
        orient(line.0, line.1, seg.0) * orient(line.0, line.1, seg.1) < 0.0
    };
    let seg_hits_seg = |p: &([f64; 2], [f64; 2]), q: &([f64; 2], [f64; 2])| {
        line_hits_seg(p, q) && line_hits_seg(q, p)
    };
    let count =
        |f: &dyn Fn(&([f64; 2], [f64; 2]), &([f64; 2], [f64; 2])) -> bool,
         from: &[([f64; 2], [f64; 2])],
         onto: &[([f64; 2], [f64; 2])]| {
            from.iter()
                .map(|s| onto.iter().filter(|t| f(s, t)).count() as u64)
                .collect::<Vec<u64>>()
        };
    CrossingProfile {
        a: count(&|s, t| line_hits_seg(s, t), &s1, &s2),
        b: count(&|s, t| line_hits_seg(t, s), &s1, &s2),
        c: count(&|s, t| seg_hits_seg(s, t), &s1, &s2),
        a2: count(&|s, t| line_hits_seg(s, t), &s2, &s1),
        b2: count(&|s, t| line_hits_seg(t, s), &s2, &s1),
        c2: count(&|s, t| seg_hits_seg(s, t), &s2, &s1),
    }
}

/// Regular n-gon helper for tests and the CLI.
pub fn regular_polygon(n: usize, cx: f64, cy: f64, r: f64, phase: f64) -> Vec<[f64; 2]> {
    (0..n)
        .map(|i| {
            let ang = phase + i as f64 / n as f64 * std::f64::consts::TAU;
            [cx + r * ang.cos(), cy + r * ang.sin()]
        })
        .collect()
}
