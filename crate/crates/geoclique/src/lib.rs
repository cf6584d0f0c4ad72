//! Maximum Clique on disk and unit-ball intersection graphs.
//!
//! The crate bundles the geometric object model and intersection predicates,
//! a bit-set graph kernel, executable checks of the structural obstructions
//! (no two anticomplete induced odd cycles in a co-disk / co-unit-ball
//! graph), the randomized EPTAS and exact/subexponential solvers for Maximum
//! Independent Set on graphs with induced odd cycle packing number 1, the
//! end-to-end clique pipelines, and constructive hardness-gadget
//! realizations with a bit-exact verifier.
//!
//! Everything randomized is seeded and deterministic; data-parallel inner
//! loops run on rayon behind the default `parallel` feature with a
//! sequential fallback.

pub mod bits;
pub mod approx;
pub mod clique;
pub mod gadget;
pub mod geom;
pub mod structural;
pub mod graph;
pub mod par;

pub use bits::BitSet;
pub use graph::Graph;
