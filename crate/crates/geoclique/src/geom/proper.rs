//! Canonical disk-instance repairs: removing tangencies and breaking
//! collinear center triples, both preserving the intersection graph exactly.

use super::{build_intersection_graph, intersects, GeomError, GeomObject, GeometricInstance, Tolerance};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

fn pair_slacks(objs: &[GeomObject], tol: Tolerance) -> Vec<(usize, usize, f64)> {
    let mut out = Vec::new();
    for u in 0..objs.len() {
        for v in u + 1..objs.len() {
            let it = intersects(&objs[u], &objs[v], tol).expect("homogeneous balls");
            out.push((u, v, it.slack));
        }
    }
    out
}

/// Smallest positive distance between any two disks (i.e. the least
/// separation over non-edges), if some pair is separated.
fn min_positive_distance(slacks: &[(usize, usize, f64)]) -> Option<f64> {
    slacks
        .iter()
        .filter(|(_, _, s)| *s < 0.0)
        .map(|(_, _, s)| -s)
        .fold(None, |acc, d| Some(acc.map_or(d, |m: f64| m.min(d))))
}

pub fn is_proper(inst: &GeometricInstance, tol: Tolerance) -> bool {
    inst.is_balls()
        && pair_slacks(inst.objects(), tol)
            .iter()
            .all(|(_, _, s)| *s < 0.0 || *s > tol.0)
}

/// Grow one disk of each tangent pair by half the smallest positive
/// distance, so every edge becomes a proper interior overlap while the
/// intersection graph is unchanged.
pub fn make_proper(inst: &GeometricInstance, tol: Tolerance) -> Result<GeometricInstance, GeomError> {
    if !inst.is_balls() {
        return Err(GeomError::NotDisks);
    }
    let mut objs = inst.objects().to_vec();
    // One growth per disk at most; each step recomputes the safe budget.
    let mut grown = vec![false; objs.len()];
    for _round in 0..objs.len() * objs.len() {
        let slacks = pair_slacks(&objs, tol);
        let tangent = slacks
            .iter()
            .find(|&&(u, v, s)| (0.0..=tol.0).contains(&s) && (!grown[u] || !grown[v]));
        let Some(&(u, v, _)) = tangent else { break };
        let eps = min_positive_distance(&slacks).unwrap_or_else(|| smallest_radius(&objs));
        let target = if !grown[u] { u } else { v };
        if let GeomObject::Ball { radius, .. } = &mut objs[target] {
            *radius += eps / 2.0;
        }
        grown[target] = true;
    }
    let out = GeometricInstance::new(objs)?;
    debug_assert_eq!(
        build_intersection_graph(inst, tol).unwrap().0,
        build_intersection_graph(&out, tol).unwrap().0
    );
    Ok(out)
}

fn smallest_radius(objs: &[GeomObject]) -> f64 {
    objs.iter()
        .map(|o| match o {
            GeomObject::Ball { radius, .. } => *radius,
            _ => 1.0,
        })
        .fold(1.0, f64::min)
}

const GRID: f64 = 1.0 / (1u64 << 40) as f64;
const PERTURB_ATTEMPTS: usize = 8;

fn snap(x: f64) -> f64 {
    (x / GRID).round() * GRID
}

fn grid_index(x: f64) -> i64 {
    (x / GRID).round() as i64
}

/// Exact orientation of three grid-snapped planar points: 0 means collinear.
fn orientation(a: &[f64], b: &[f64], c: &[f64]) -> i128 {
    let (ax, ay) = (grid_index(a[0]) as i128, grid_index(a[1]) as i128);
    let (bx, by) = (grid_index(b[0]) as i128, grid_index(b[1]) as i128);
    let (cx, cy) = (grid_index(c[0]) as i128, grid_index(c[1]) as i128);
    (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
}

fn collinear_members(objs: &[GeomObject]) -> Vec<usize> {
    let centers: Vec<&[f64]> = objs
        .iter()
        .map(|o| match o {
            GeomObject::Ball { center, .. } => center.as_slice(),
            _ => unreachable!(),
        })
        .collect();
    let n = centers.len();
    let mut bad = vec![false; n];
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if orientation(centers[i], centers[j], centers[k]) == 0 {
                    bad[i] = true;
                    bad[j] = true;
                    bad[k] = true;
                }
            }
        }
    }
    (0..n).filter(|&i| bad[i]).collect()
}

/// Move centers of collinear triples by less than half the minimum slack so
/// no three centers are aligned (exact check on 2^-40-grid coordinates) and
/// the intersection graph is preserved.
pub fn perturb_general_position(
    inst: &GeometricInstance,
    tol: Tolerance,
    seed: u64,
) -> Result<GeometricInstance, GeomError> {
    if !inst.is_disks() {
        return Err(GeomError::NotDisks);
    }
    let base_slacks = pair_slacks(inst.objects(), tol);
    if let Some(&(u, v, _)) = base_slacks.iter().find(|(_, _, s)| (0.0..=tol.0).contains(s)) {
        return Err(GeomError::NotProper(u, v));
    }
    let eps = base_slacks
        .iter()
        .map(|(_, _, s)| s.abs())
        .fold(f64::INFINITY, f64::min);
    let eps = if eps.is_finite() { eps } else { 1.0 };
    if eps <= 8.0 * GRID {
        return Err(GeomError::TooFragile(eps));
    }

    let (reference, _) = build_intersection_graph(inst, tol).map_err(|e| e)?;
    // Snap everything to the grid first so the orientation test is exact.
    let mut objs = inst.objects().to_vec();
    for o in &mut objs {
        if let GeomObject::Ball { center, .. } = o {
            for c in center.iter_mut() {
                *c = snap(*c);
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 0..=PERTURB_ATTEMPTS {
        let bad = collinear_members(&objs);
        if bad.is_empty() {
            let out = GeometricInstance::new(objs)?;
            let (got, _) = build_intersection_graph(&out, tol)?;
            if got == reference {
                return Ok(out);
            }
            return Err(GeomError::TooFragile(eps));
        }
        if attempt == PERTURB_ATTEMPTS {
            break;
        }
        for &i in &bad {
            if let GeomObject::Ball { center, .. } = &mut objs[i] {
                // Fresh offset inside the safe ball of radius 0.45 * eps.
                let ang = rng.gen_range(0.0..std::f64::consts::TAU);
                let r = 0.45 * eps * rng.gen_range(0.1..1.0f64).sqrt();
                let orig = match &inst.objects()[i] {
                    GeomObject::Ball { center, .. } => center.clone(),
                    _ => unreachable!(),
                };
                center[0] = snap(orig[0] + r * ang.cos());
                center[1] = snap(orig[1] + r * ang.sin());
            }
        }
    }
    Err(GeomError::PerturbationFailed(PERTURB_ATTEMPTS))
}
