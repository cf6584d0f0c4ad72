//! The acceptance instrument: rebuild the intersection graph of a
//! constructed instance and diff it pair-exactly against the target.

use super::GadgetError;
use crate::geom::{intersects, GeometricInstance, Tolerance};
use crate::graph::Graph;
use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct RealizationReport {
    pub equal: bool,
    /// (u, v, expected-edge, measured slack) for every disagreeing pair.
    pub mismatched_pairs: Vec<(usize, usize, bool, f64)>,
    /// Smallest overlap among pairs that should intersect.
    pub min_adjacency_slack: Option<f64>,
    /// Smallest separation among pairs that should not intersect.
    pub min_nonadjacency_slack: Option<f64>,
    /// The globally most fragile pair.
    pub weakest_pair: Option<(usize, usize, f64)>,
}

impl RealizationReport {
    pub fn min_abs_slack(&self) -> Option<f64> {
        self.weakest_pair.map(|(_, _, s)| s.abs())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

pub fn verify_realization(
    inst: &GeometricInstance,
    expected: &Graph,
    tol: Tolerance,
) -> Result<RealizationReport, GadgetError> {
    if inst.len() != expected.n() {
        return Err(GadgetError::SizeMismatch {
            got: inst.len(),
            want: expected.n(),
        });
    }
    let objs = inst.objects();
    let mut report = RealizationReport {
        equal: true,
        mismatched_pairs: Vec::new(),
        min_adjacency_slack: None,
        min_nonadjacency_slack: None,
        weakest_pair: None,
    };
    let mut fold_min = |acc: &mut Option<f64>, x: f64| {
        *acc = Some(acc.map_or(x, |m: f64| m.min(x)));
    };
    for u in 0..inst.len() {
        for v in u + 1..inst.len() {
            let it = intersects(&objs[u], &objs[v], tol)?;
            let want = expected.has_edge(u, v);
            if it.is_edge() != want {
                report.equal = false;
                report.mismatched_pairs.push((u, v, want, it.slack));
            }
            if want {
                fold_min(&mut report.min_adjacency_slack, it.slack);
            } else {
                fold_min(&mut report.min_nonadjacency_slack, -it.slack);
            }
            if report
                .weakest_pair
                .is_none_or(|(_, _, s)| it.slack.abs() < s.abs())
            {
                report.weakest_pair = Some((u, v, it.slack));
            }
        }
    }
    Ok(report)
}
