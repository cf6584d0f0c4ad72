//! Executable checks of the structural facts the solvers rely on: induced
//! odd cycle packing witnesses, VC-dimension, the K2,2 disk configuration
//! predicate, crossing-profile parity quantities, and needle-direction
//! curves for odd chains in 3-space.

mod crossing;
mod iocp;
mod k22;
mod needle;
mod vcdim;

pub use crossing::{crossing_profile, regular_polygon, ChainPair, CrossingProfile};
pub use iocp::{find_two_anticomplete_odd_cycles, find_two_anticomplete_odd_cycles_exhaustive, IocpWitness};
pub use k22::{check_k22_quadrilateral, K22Verdict};
pub use needle::{common_needle_direction, needle_curve, CommonDirection, DirectionCurve, NeedleConfig};
pub use vcdim::vc_dimension;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum StructuralError {
    #[error("instance size {n} exceeds cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("input is not a K2,2 realization: {0}")]
    NotK22(String),
    #[error("chains degenerate after {0} perturbation attempts")]
    DegenerateChains(usize),
    #[error("chain must have an odd number of vertices, got {0}")]
    EvenChain(usize),
    #[error("chain is degenerate: {0}")]
    BadChain(String),
    #[error("no common needle direction found; closest approach {closest:.3e} rad")]
    NoCommonDirection { closest: f64 },
}
