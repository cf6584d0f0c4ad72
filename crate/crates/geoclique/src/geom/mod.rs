//! Geometric object model, intersection predicates, and instance plumbing.

mod generate;
mod io;
mod predicates;
mod proper;

pub use generate::{generate_instance, GeneratorSpec, ObjectKind, RadiusLaw};
pub use io::{load_instance, save_instance};
pub use predicates::{build_intersection_graph, intersects, Intersection, MarginReport, Verdict};
pub use proper::{is_proper, make_proper, perturb_general_position};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum GeomError {
    #[error("objects have mixed variants or dimensions")]
    MixedVariants,
    #[error("object {index}: {reason}")]
    BadObject { index: usize, reason: String },
    #[error("instance is not a disk instance")]
    NotDisks,
    #[error("instance is not proper: pair ({0}, {1}) is tangent")]
    NotProper(usize, usize),
    #[error("perturbation failed after {0} attempts")]
    PerturbationFailed(usize),
    #[error("instance too fragile for grid snapping (min |slack| {0:.3e})")]
    TooFragile(f64),
    #[error("invalid generator spec: {0}")]
    BadSpec(String),
    #[error("malformed instance data: {0}")]
    Parse(String),
}

/// Numeric tolerance for classifying near-tangent pairs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance(pub f64);

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance(1e-9)
    }
}

impl Tolerance {
    pub fn new(t: f64) -> Self {
        assert!(t >= 0.0, "tolerance must be nonnegative");
        Tolerance(t)
    }
}

/// A closed geometric object: a d-ball, a filled triangle, or a filled
/// ellipse.
#[derive(Debug, Clone, PartialEq)]
pub enum GeomObject {
    Ball { center: Vec<f64>, radius: f64 },
    Triangle { pts: [[f64; 2]; 3] },
    Ellipse { center: [f64; 2], a: f64, b: f64, theta: f64 },
}

impl GeomObject {
    pub fn disk(x: f64, y: f64, r: f64) -> Self {
        GeomObject::Ball {
            center: vec![x, y],
            radius: r,
        }
    }

    pub fn ball(center: Vec<f64>, radius: f64) -> Self {
        GeomObject::Ball { center, radius }
    }

    /// Ambient dimension (2 for triangles and ellipses).
    pub fn dim(&self) -> usize {
        match self {
            GeomObject::Ball { center, .. } => center.len(),
            _ => 2,
        }
    }

    pub fn variant_tag(&self) -> &'static str {
        match self {
            GeomObject::Ball { .. } => "balls",
            GeomObject::Triangle { .. } => "triangles",
            GeomObject::Ellipse { .. } => "ellipses",
        }
    }

    pub fn validate(&self) -> Result<(), String> {
        match self {
            GeomObject::Ball { center, radius } => {
                if center.len() < 2 {
                    return Err("ball dimension must be at least 2".into());
                }
                if !center.iter().all(|c| c.is_finite()) {
                    return Err("non-finite center coordinate".into());
                }
                if !radius.is_finite() || *radius <= 0.0 {
                    return Err("radius must be positive and finite".into());
                }
            }
            GeomObject::Triangle { pts } => {
                if !pts.iter().flatten().all(|c| c.is_finite()) {
                    return Err("non-finite triangle coordinate".into());
                }
                let area2 = (pts[1][0] - pts[0][0]) * (pts[2][1] - pts[0][1])
                    - (pts[1][1] - pts[0][1]) * (pts[2][0] - pts[0][0]);
                if area2 == 0.0 {
                    return Err("triangle vertices are collinear".into());
                }
            }
            GeomObject::Ellipse { center, a, b, theta } => {
                if !center.iter().all(|c| c.is_finite()) || !theta.is_finite() {
                    return Err("non-finite ellipse parameter".into());
                }
                if !a.is_finite() || !b.is_finite() || *b <= 0.0 || a < b {
                    return Err("semi-axes must satisfy a >= b > 0".into());
                }
            }
        }
        Ok(())
    }
}

/// A homogeneous ordered collection of objects; index i becomes vertex i of
/// the derived intersection graph.
#[derive(Debug, Clone, PartialEq)]
pub struct GeometricInstance {
    objects: Vec<GeomObject>,
    labels: Option<Vec<String>>,
}

impl GeometricInstance {
    pub fn new(objects: Vec<GeomObject>) -> Result<Self, GeomError> {
        for (index, o) in objects.iter().enumerate() {
            o.validate()
                .map_err(|reason| GeomError::BadObject { index, reason })?;
        }
        if let Some(first) = objects.first() {
            let (tag, dim) = (first.variant_tag(), first.dim());
            if objects
                .iter()
                .any(|o| o.variant_tag() != tag || o.dim() != dim)
            {
                return Err(GeomError::MixedVariants);
            }
        }
        Ok(GeometricInstance {
            objects,
            labels: None,
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.objects.len());
        self.labels = Some(labels);
        self
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    pub fn objects(&self) -> &[GeomObject] {
        &self.objects
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn kind(&self) -> Option<&'static str> {
        self.objects.first().map(|o| o.variant_tag())
    }

    pub fn dim(&self) -> Option<usize> {
        self.objects.first().map(|o| o.dim())
    }

    pub fn is_balls(&self) -> bool {
        self.objects
            .iter()
            .all(|o| matches!(o, GeomObject::Ball { .. }))
    }

    /// Disk = 2-dimensional ball.
    pub fn is_disks(&self) -> bool {
        self.is_balls() && self.dim() == Some(2)
    }
}

pub(crate) fn dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_mixed_variants() {
        let objs = vec![
            GeomObject::disk(0.0, 0.0, 1.0),
            GeomObject::Triangle {
                pts: [[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]],
            },
        ];
        assert!(matches!(
            GeometricInstance::new(objs),
            Err(GeomError::MixedVariants)
        ));
    }

    #[test]
    fn rejects_mixed_dimensions() {
        let objs = vec![
            GeomObject::ball(vec![0.0, 0.0], 1.0),
            GeomObject::ball(vec![0.0, 0.0, 0.0], 1.0),
        ];
        assert!(matches!(
            GeometricInstance::new(objs),
            Err(GeomError::MixedVariants)
        ));
    }

    #[test]
    fn rejects_bad_objects() {
        assert!(GeomObject::disk(0.0, 0.0, 0.0).validate().is_err());
        assert!(GeomObject::disk(f64::NAN, 0.0, 1.0).validate().is_err());
        assert!(GeomObject::Triangle {
            pts: [[0.0, 0.0], [1.0, 1.0], [2.0, 2.0]],
        }
        .validate()
        .is_err());
        assert!(GeomObject::Ellipse {
            center: [0.0, 0.0],
            a: 1.0,
            b: 2.0,
            theta: 0.0,
        }
        .validate()
        .is_err());
    }
}
