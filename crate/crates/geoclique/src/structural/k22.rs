//! The K2,2 disk-configuration predicate: with four centers in convex
//! position the two non-edges must be the diagonals, and in every valid
//! realization one non-edge's line crosses the other non-edge's segment.

use super::StructuralError;
use crate::geom::{intersects, GeomObject, GeometricInstance, Tolerance};

#[derive(Debug, Clone, PartialEq)]
pub struct K22Verdict {
    pub centers_convex: bool,
    /// With centers in convex position: whether the non-edge pairs sit on
    /// opposite corners of the quadrangle. `None` when not convex.
    pub nonedges_diagonal: Option<bool>,
    /// Whether line(c1,c2) crosses seg(c3,c4) or line(c3,c4) crosses
    /// seg(c1,c2), for non-edge pairs (c1,c2) and (c3,c4).
    pub corollary_holds: bool,
}

impl K22Verdict {
    /// A false entry here would falsify the structural lemma.
    pub fn consistent(&self) -> bool {
        self.nonedges_diagonal.unwrap_or(true) && self.corollary_holds
    }
}

/// Validates that the four disks realize K2,2 with the stated non-edge
/// pairing, then evaluates the convex-position and line/segment conditions.
pub fn check_k22_quadrilateral(
    inst: &GeometricInstance,
    nonedges: [(usize, usize); 2],
    tol: Tolerance,
) -> Result<K22Verdict, StructuralError> {
    if !inst.is_disks() || inst.len() != 4 {
        return Err(StructuralError::NotK22("need exactly 4 disks".into()));
    }
    let mut claimed_nonedge = [[false; 4]; 4];
    let mut covered = [false; 4];
    for &(u, v) in &nonedges {
        if u >= 4 || v >= 4 || u == v {
            return Err(StructuralError::NotK22("bad non-edge pair".into()));
        }
        claimed_nonedge[u][v] = true;
        claimed_nonedge[v][u] = true;
        covered[u] = true;
        covered[v] = true;
    }
    if covered != [true; 4] {
        return Err(StructuralError::NotK22(
            "non-edges must form a perfect matching".into(),
        ));
    }
    let objs = inst.objects();
    for u in 0..4 {
        for v in u + 1..4 {
            let edge = intersects(&objs[u], &objs[v], tol)
                .map_err(|e| StructuralError::NotK22(e.to_string()))?
                .is_edge();
            if edge == claimed_nonedge[u][v] {
                return Err(StructuralError::NotK22(format!(
                    "pair ({u},{v}) contradicts the claimed K2,2 pairing"
                )));
            }
        }
    }

    let centers: Vec<[f64; 2]> = objs
        .iter()
        .map(|o| match o {
            GeomObject::Ball { center, .. } => [center[0], center[1]],
            _ => unreachable!(),
        })
        .collect();
    let hull = convex_hull_order(&centers);
    let centers_convex = hull.len() == 4;
    let nonedges_diagonal = if centers_convex {
        let pos = |v: usize| hull.iter().position(|&h| h == v).unwrap();
        Some(nonedges.iter().all(|&(u, v)| (pos(u) + 2) % 4 == pos(v)))
    } else {
        None
    };
    let (a, b) = nonedges[0];
    let (c, d) = nonedges[1];
    let corollary_holds = line_crosses_segment(centers[a], centers[b], centers[c], centers[d])
        || line_crosses_segment(centers[c], centers[d], centers[a], centers[b]);
    Ok(K22Verdict {
        centers_convex,
        nonedges_diagonal,
        corollary_holds,
    })
}

fn orient(a: [f64; 2], b: [f64; 2], c: [f64; 2]) -> f64 {
    (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
}

/// Closed test: line(a,b) meets seg(c,d) iff c and d are not strictly on the
/// same side.
fn line_crosses_segment(a: [f64; 2], b: [f64; 2], c: [f64; 2], d: [f64; 2]) -> bool {
    orient(a, b, c) * orient(a, b, d) <= 0.0
}

/// Hull vertex ids in cyclic order; interior points omitted.
fn convex_hull_order(pts: &[[f64; 2]]) -> Vec<usize> {
    let mut ids: Vec<usize> = (0..pts.len()).collect();
    ids.sort_by(|&i, &j| {
        pts[i]
            .partial_cmp(&pts[j])
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    let mut hull: Vec<usize> = Vec::new();
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &usize>> = if pass == 0 {
            Box::new(ids.iter())
        } else {
            Box::new(ids.iter().rev())
        };
        for &i in iter {
            while hull.len() >= start + 2
                && orient(pts[hull[hull.len() - 2]], pts[hull[hull.len() - 1]], pts[i]) <= 0.0
            {
                hull.pop();
            }
            hull.push(i);
        }
        hull.pop();
    }
    hull
}
