//! Seeded instance generation for the test corpus.

use super::{GeomError, GeomObject, GeometricInstance};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ObjectKind {
    Balls { dim: usize },
    Triangles,
    Ellipses,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RadiusLaw {
    Unit,
    Range(f64, f64),
}

impl RadiusLaw {
    fn sample(&self, rng: &mut impl Rng) -> f64 {
        match *self {
            RadiusLaw::Unit => 1.0,
            RadiusLaw::Range(lo, hi) => {
                if lo == hi {
                    lo
                } else {
                    rng.gen_range(lo..hi)
                }
            }
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct GeneratorSpec {
    pub kind: ObjectKind,
    pub count: usize,
    /// Centers are sampled uniformly from `[bbox.0, bbox.1]^dim`.
    pub bbox: (f64, f64),
    pub radius: RadiusLaw,
}

impl GeneratorSpec {
    fn validate(&self) -> Result<(), GeomError> {
        if !(self.bbox.0.is_finite() && self.bbox.1.is_finite() && self.bbox.0 < self.bbox.1) {
            return Err(GeomError::BadSpec("sampling box must be a finite range".into()));
        }
        if let RadiusLaw::Range(lo, hi) = self.radius {
            if !(lo.is_finite() && hi.is_finite() && 0.0 < lo && lo <= hi) {
                return Err(GeomError::BadSpec("radius range must satisfy 0 < lo <= hi".into()));
            }
        }
        if let ObjectKind::Balls { dim } = self.kind {
            if dim < 2 {
                return Err(GeomError::BadSpec("ball dimension must be at least 2".into()));
            }
        }
        Ok(())
    }
}

/// Deterministic for a fixed seed; the corpus source for all property tests.
pub fn generate_instance(spec: &GeneratorSpec, seed: u64) -> Result<GeometricInstance, GeomError> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (lo, hi) = spec.bbox;
    let mut objects = Vec::with_capacity(spec.count);
    for _ in 0..spec.count {
        let obj = match spec.kind {
            ObjectKind::Balls { dim } => {
                let center = (0..dim).map(|_| rng.gen_range(lo..hi)).collect();
                GeomObject::Ball {
                    center,
                    radius: spec.radius.sample(&mut rng),
                }
            }
            ObjectKind::Triangles => loop {
                let cx = rng.gen_range(lo..hi);
                let cy = rng.gen_range(lo..hi);
                let r = spec.radius.sample(&mut rng);
                let pts = [
                    [cx + rng.gen_range(-r..r), cy + rng.gen_range(-r..r)],
                    [cx + rng.gen_range(-r..r), cy + rng.gen_range(-r..r)],
                    [cx + rng.gen_range(-r..r), cy + rng.gen_range(-r..r)],
                ];
                let t = GeomObject::Triangle { pts };
                if t.validate().is_ok() {
                    break t;
                }
            },
            ObjectKind::Ellipses => {
                let center = [rng.gen_range(lo..hi), rng.gen_range(lo..hi)];
                let r1 = spec.radius.sample(&mut rng);
                let r2 = spec.radius.sample(&mut rng);
                GeomObject::Ellipse {
                    center,
                    a: r1.max(r2),
                    b: r1.min(r2),
                    theta: rng.gen_range(0.0..std::f64::consts::PI),
                }
            }
        };
        objects.push(obj);
    }
    GeometricInstance::new(objects)
}
