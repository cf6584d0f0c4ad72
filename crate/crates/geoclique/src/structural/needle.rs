//! Needle-direction curves: the set of directions swept by a segment
//! pivoting along a closed polygonal chain with an odd number of vertices,
//! traced twice around so the spherical curve closes and is antipodal. For
//! two odd chains the two curves always cross; the search below locates a
//! common direction numerically.

use super::StructuralError;

type P3 = [f64; 3];

fn sub(a: P3, b: P3) -> P3 {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn lerp(a: P3, b: P3, t: f64) -> P3 {
    [
        a[0] + (b[0] - a[0]) * t,
        a[1] + (b[1] - a[1]) * t,
        a[2] + (b[2] - a[2]) * t,
    ]
}

fn norm(a: P3) -> f64 {
    (a[0] * a[0] + a[1] * a[1] + a[2] * a[2]).sqrt()
}

fn normalize(a: P3) -> Option<P3> {
    let n = norm(a);
    if n < 1e-300 {
        return None;
    }
    Some([a[0] / n, a[1] / n, a[2] / n])
}

fn angle(a: P3, b: P3) -> f64 {
    let dot = (a[0] * b[0] + a[1] * b[1] + a[2] * b[2]).clamp(-1.0, 1.0);
    dot.acos()
}

pub const ANTIPODAL_TOL: f64 = 1e-6;
pub const REFINED_TOL: f64 = 1e-6;

/// Discretized trace of the needle direction set on the 2-sphere.
#[derive(Debug, Clone)]
pub struct DirectionCurve {
    chain: Vec<P3>,
    pub samples_per_leg: usize,
    /// One unit direction per sample, `2 p K + 1` entries, first == last.
    pub dirs: Vec<P3>,
    pub closed: bool,
    pub antipodal: bool,
}

/// Where on the double traversal a direction is attained.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NeedleConfig {
    pub leg: usize,
    pub t: f64,
    /// Needle endpoints: the moving point and the pivot vertex.
    pub moving: P3,
    pub pivot: P3,
}

impl DirectionCurve {
    fn p(&self) -> usize {
        self.chain.len()
    }

    pub fn legs(&self) -> usize {
        2 * self.p()
    }

    /// Needle state on leg `k` at parameter `t in [0,1]`: the trailing point
    /// moves from `x_k` to `x_{k+2}` while the other stays at `x_{k+1}`.
    pub fn config(&self, leg: usize, t: f64) -> NeedleConfig {
        let p = self.p();
        let k = leg % (2 * p);
        let moving = lerp(self.chain[k % p], self.chain[(k + 2) % p], t);
        let pivot = self.chain[(k + 1) % p];
        NeedleConfig {
            leg: k,
            t,
            moving,
            pivot,
        }
    }

    /// Exact direction at any parameter; the sampled `dirs` are this
    /// function on the uniform grid.
    pub fn eval(&self, leg: usize, t: f64) -> P3 {
        let cfg = self.config(leg, t);
        // The tracked direction is P -> Q where P starts at x_0 and Q at
        // x_1; on even legs the mover is P, on odd legs it is Q.
        let d = if cfg.leg % 2 == 0 {
            sub(cfg.pivot, cfg.moving)
        } else {
            sub(cfg.moving, cfg.pivot)
        };
        normalize(d).expect("validated chain has no coincident needle endpoints")
    }

    /// Global parameter in units of legs, wrapping modulo `2p`.
    fn eval_global(&self, s: f64) -> P3 {
        let total = self.legs() as f64;
        let s = s.rem_euclid(total);
        let leg = (s.floor() as usize).min(self.legs() - 1);
        self.eval(leg, s - leg as f64)
    }
}

/// Builds the discretized double-traversal curve. Fails on even vertex
/// counts or chains where the needle endpoints can coincide on some leg.
pub fn needle_curve(chain: &[P3], samples_per_leg: usize) -> Result<DirectionCurve, StructuralError> {
    let p = chain.len();
    if p % 2 == 0 {
        return Err(StructuralError::EvenChain(p));
    }
    if p < 3 {
        return Err(StructuralError::BadChain("need at least 3 vertices".into()));
    }
    if !chain.iter().flatten().all(|c| c.is_finite()) {
        return Err(StructuralError::BadChain("non-finite coordinate".into()));
    }
    // The needle degenerates if the pivot lies on the segment the mover
    // traverses; reject those chains up front.
    for k in 0..p {
        let (a, b, pivot) = (chain[k % p], chain[(k + 2) % p], chain[(k + 1) % p]);
        if point_segment_distance(pivot, a, b) < 1e-12 * chain_scale(chain) {
            return Err(StructuralError::BadChain(format!(
                "vertex {} lies on the segment of its neighbors",
                (k + 1) % p
            )));
        }
    }
    let k = samples_per_leg.max(2);
    let mut curve = DirectionCurve {
        chain: chain.to_vec(),
        samples_per_leg: k,
        dirs: Vec::with_capacity(2 * p * k + 1),
        closed: false,
        antipodal: false,
    };
    for leg in 0..2 * p {
        for j in 0..k {
            curve.dirs.push(curve.eval(leg, j as f64 / k as f64));
        }
    }
    curve.dirs.push(curve.eval(2 * p - 1, 1.0));
    let first = curve.dirs[0];
    let last = *curve.dirs.last().unwrap();
    curve.closed = angle(first, last) <= ANTIPODAL_TOL;
    let half = p * k;
    curve.antipodal = (0..half).all(|j| {
        let d = curve.dirs[j];
        let anti = curve.dirs[j + half];
        angle([-d[0], -d[1], -d[2]], anti) <= ANTIPODAL_TOL
    });
    Ok(curve)
}

fn chain_scale(chain: &[P3]) -> f64 {
    chain
        .iter()
        .flat_map(|p| p.iter())
        .fold(1.0f64, |m, &c| m.max(c.abs()))
}

fn point_segment_distance(p: P3, a: P3, b: P3) -> f64 {
    let ab = sub(b, a);
    let ap = sub(p, a);
    let len2 = ab[0] * ab[0] + ab[1] * ab[1] + ab[2] * ab[2];
    if len2 == 0.0 {
        return norm(ap);
    }
    let t = ((ap[0] * ab[0] + ap[1] * ab[1] + ap[2] * ab[2]) / len2).clamp(0.0, 1.0);
    norm(sub(p, lerp(a, b, t)))
}

#[derive(Debug, Clone, PartialEq)]
pub struct CommonDirection {
    pub direction: P3,
    pub config1: NeedleConfig,
    pub config2: NeedleConfig,
    pub angular_error: f64,
}

/// Finds a direction shared by the two needle curves: a coarse scan over
/// sampled direction pairs, then local subdivision refinement to angular
/// error below 1e-6. Retries with denser sampling before giving up with the
/// closest approach seen.
pub fn common_needle_direction(
    chain1: &[P3],
    chain2: &[P3],
    samples_per_leg: usize,
) -> Result<CommonDirection, StructuralError> {
    let mut closest = f64::INFINITY;
    for scale in [1, 2, 4] {
        let k = samples_per_leg.max(2) * scale;
        let cv1 = needle_curve(chain1, k)?;
        let cv2 = needle_curve(chain2, k)?;
        match search(&cv1, &cv2) {
            Ok(found) => return Ok(found),
            Err(best) => closest = closest.min(best),
        }
    }
    Err(StructuralError::NoCommonDirection { closest })
}

fn search(cv1: &DirectionCurve, cv2: &DirectionCurve) -> Result<CommonDirection, f64> {
    let k = cv1.samples_per_leg as f64;
    let n1 = cv1.dirs.len() - 1;
    let n2 = cv2.dirs.len() - 1;
    let mut masked: Vec<(usize, usize)> = Vec::new();
    let mut best_seen = f64::INFINITY;
    for _candidate in 0..8 {
        // Coarse pass over all sample pairs, skipping masked regions.
        let mut best = (f64::INFINITY, 0usize, 0usize);
        for i in 0..n1 {
            for j in 0..n2 {
                if masked
                    .iter()
                    .any(|&(mi, mj)| i.abs_diff(mi) < 8 && j.abs_diff(mj) < 8)
                {
                    continue;
                }
                let a = angle(cv1.dirs[i], cv2.dirs[j]);
                if a < best.0 {
                    best = (a, i, j);
                }
            }
        }
        if !best.0.is_finite() {
            break;
        }
        best_seen = best_seen.min(best.0);
        let (err, u, v) = refine(cv1, cv2, best.1 as f64 / k, best.2 as f64 / k);
        best_seen = best_seen.min(err);
        if err <= REFINED_TOL {
            let leg1 = (u.floor() as usize).min(cv1.legs() - 1);
            let leg2 = (v.floor() as usize).min(cv2.legs() - 1);
            let d1 = cv1.eval_global(u);
            return Ok(CommonDirection {
                direction: d1,
                config1: cv1.config(leg1, u - leg1 as f64),
                config2: cv2.config(leg2, v - leg2 as f64),
                angular_error: err,
            });
        }
        masked.push((best.1, best.2));
    }
    Err(best_seen)
}

/// Local subdivision around a coarse candidate, in global leg units.
fn refine(cv1: &DirectionCurve, cv2: &DirectionCurve, u0: f64, v0: f64) -> (f64, f64, f64) {
    let mut center = (u0, v0);
    let mut half = 1.5 / cv1.samples_per_leg as f64;
    let mut best = (angle(cv1.eval_global(u0), cv2.eval_global(v0)), u0, v0);
    for _ in 0..90 {
        for iu in -3i32..=3 {
            for iv in -3i32..=3 {
                let u = center.0 + iu as f64 / 3.0 * half;
                let v = center.1 + iv as f64 / 3.0 * half;
                let a = angle(cv1.eval_global(u), cv2.eval_global(v));
                if a < best.0 {
                    best = (a, u, v);
                }
            }
        }
        center = (best.1, best.2);
        half *= 0.55;
        if best.0 <= REFINED_TOL * 0.5 || half < 1e-15 {
            break;
        }
    }
    best
}
