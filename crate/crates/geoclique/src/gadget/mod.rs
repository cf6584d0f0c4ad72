//! Constructive realizations of hardness gadgets: co-2-subdivisions embedded
//! as 4-dimensional unit balls, near-unit 3-dimensional balls, filled
//! triangles, and filled ellipses, plus the disk representation of
//! complements of cycle unions, all checked by a bit-exact verifier.

mod balls3;
mod balls4;
mod co2;
mod cocycles;
mod ellipses;
mod triangles;
mod verify;

pub use co2::{co2subdivision, Co2Subdivision, Role};
pub use cocycles::realize_co_cycles_disks;
pub use verify::{verify_realization, RealizationReport};

use crate::geom::{GeomError, GeomObject, GeometricInstance, Tolerance};
use crate::graph::Graph;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GadgetError {
    #[error("instance has {got} objects but the expected graph has {want} vertices")]
    SizeMismatch { got: usize, want: usize },
    #[error("construction margin underflow: pair ({u}, {v}) has slack {slack:.3e} (< {need:.3e})")]
    MarginUnderflow { u: usize, v: usize, slack: f64, need: f64 },
    #[error("realization does not match the target graph: {0} mismatched pairs")]
    Mismatch(usize),
    #[error("at most one odd cycle length is representable; two odd components were requested")]
    TwoOddCycles,
    #[error("cycle lengths must be >= 3, even ones even: {0}")]
    BadCycleSpec(String),
    #[error("epsilon must be in (0, 1], got {0}")]
    BadEps(f64),
    #[error(transparent)]
    Geom(#[from] GeomError),
}

/// Realization targets for co-2-subdivisions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RealizationTarget {
    /// Unit balls in R^4.
    Balls4,
    /// 3-dimensional balls with radii in [1, 1+eps].
    Balls3Eps(f64),
    /// Filled triangles in the plane.
    Triangles,
    /// Filled ellipses in the plane (vertex disks are circles).
    Ellipses,
}

/// Required post-snap slack: constructions must clear 1000x the tolerance.
pub fn min_margin(tol: Tolerance) -> f64 {
    1e3 * tol.0
}

/// Builds the geometric realization whose intersection graph equals the
/// co-2-subdivision of `g`, verifies it pair-exactly, snaps coordinates to
/// the construction grid, and re-verifies. Never returns a wrong gadget:
/// any mismatch or margin underflow is an error.
pub fn realize_co2subdivision(
    g: &Graph,
    target: RealizationTarget,
    tol: Tolerance,
) -> Result<(GeometricInstance, RealizationReport), GadgetError> {
    let sub = co2subdivision(g);
    let raw = match target {
        RealizationTarget::Balls4 => balls4::construct(g)?,
        RealizationTarget::Balls3Eps(eps) => balls3::construct(g, eps)?,
        RealizationTarget::Triangles => triangles::construct(g)?,
        RealizationTarget::Ellipses => ellipses::construct(g)?,
    };
    let snapped = snap_instance(&raw, grid_step(g.edge_count(), target, &raw, &sub.graph, tol))?;
    let report = verify_realization(&snapped, &sub.graph, tol)?;
    enforce(&report, tol)?;
    Ok((snapped, report))
}

/// The published grid is 1/(100 m^5) (scaled by eps for the 3-ball target);
/// for very small m that grid is coarser than the construction margins, so
/// it is tightened to a safe fraction of the pre-snap minimum slack.
fn grid_step(
    m: usize,
    target: RealizationTarget,
    raw: &GeometricInstance,
    expected: &Graph,
    tol: Tolerance,
) -> f64 {
    let m = m.max(1) as f64;
    let published = match target {
        RealizationTarget::Balls3Eps(eps) => eps / (100.0 * m.powi(5)),
        _ => 1.0 / (100.0 * m.powi(5)),
    };
    let pre = verify_realization(raw, expected, tol)
        .ok()
        .and_then(|r| r.min_abs_slack())
        .unwrap_or(published);
    published.min(pre / 64.0)
}

fn enforce(report: &RealizationReport, tol: Tolerance) -> Result<(), GadgetError> {
    if !report.equal {
        return Err(GadgetError::Mismatch(report.mismatched_pairs.len()));
    }
    if let Some((u, v, slack)) = report.weakest_pair {
        if slack.abs() < min_margin(tol) {
            return Err(GadgetError::MarginUnderflow {
                u,
                v,
                slack,
                need: min_margin(tol),
            });
        }
    }
    Ok(())
}

/// Snap every coordinate (and ball radii) to multiples of `grid`.
pub fn snap_instance(inst: &GeometricInstance, grid: f64) -> Result<GeometricInstance, GadgetError> {
    let snap = |x: f64| (x / grid).round() * grid;
    let objects = inst
        .objects()
        .iter()
        .map(|o| match o {
            GeomObject::Ball { center, radius } => GeomObject::Ball {
                center: center.iter().map(|&c| snap(c)).collect(),
                radius: snap(*radius),
            },
            GeomObject::Triangle { pts } => GeomObject::Triangle {
                pts: pts.map(|p| p.map(snap)),
            },
            GeomObject::Ellipse { center, a, b, theta } => GeomObject::Ellipse {
                center: center.map(snap),
                a: snap(*a),
                b: snap(*b),
                // Angles stay exact: snapping them buys no grid property.
                theta: *theta,
            },
        })
        .collect();
    Ok(GeometricInstance::new(objects)?)
}
