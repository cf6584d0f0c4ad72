//! Maximum-independent-set solvers: the randomized approximation scheme for
//! graphs with induced odd cycle packing number 1, its recursion for larger
//! packing numbers, branching schemes, and the exact odd-cycle-cover and
//! cycle-neighborhood solvers behind the subexponential dispatcher.

mod eptas;
mod exact;
mod params;
mod qptas;

pub use eptas::{decompose_layers, mis_eptas, mis_iocp_recursive, LayerDecomposition};
pub use exact::{mis_exact_cycle_nbhd, mis_exact_occ, mis_subexp, odd_cycle_cover, EXACT_ENUM_CAP};
pub use params::{derive_params, theory_t, EptasParams, Mode, DEFAULT_T_MAX};
pub use qptas::qptas_branch;

use crate::bits::BitSet;
use crate::graph::{Graph, GraphError};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SolveError {
    #[error("bad parameters: {0}")]
    BadParams(String),
    /// A residual graph the algorithm expected to be bipartite was not.
    /// Possible only when the input's induced odd cycle packing number
    /// exceeds the assumed bound; the witness is in input vertex ids.
    #[error("iocp assumption violated ({context}); odd cycle witness {odd_cycle:?}")]
    IocpViolation {
        odd_cycle: Vec<usize>,
        context: String,
    },
    #[error("cover does not bipartize the graph; odd cycle {odd_cycle:?} remains")]
    CoverNotBipartizing { odd_cycle: Vec<usize> },
    #[error("enumeration set of size {size} exceeds cap {cap}")]
    CapExceeded { size: usize, cap: usize },
    #[error("cycle of length {len} is not longer than c = {need}")]
    CycleTooShort { len: usize, need: u64 },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TrialPath {
    Bipartite,
    Short,
    Long,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct PathCounts {
    pub bipartite: usize,
    pub short: usize,
    pub long: usize,
    #[serde(skip_serializing_if = "is_zero")]
    pub skipped: usize,
}

fn is_zero(x: &usize) -> bool {
    *x == 0
}

impl PathCounts {
    pub fn record(&mut self, path: TrialPath) {
        match path {
            TrialPath::Bipartite => self.bipartite += 1,
            TrialPath::Short => self.short += 1,
            TrialPath::Long => self.long += 1,
        }
    }
}

/// Evidence accompanying the best trial: the odd-cycle transversal that was
/// removed and the 2-coloring pieced together from the bipartite solves.
#[derive(Debug, Clone, Default)]
pub struct Certificate {
    pub path: Option<TrialPath>,
    pub transversal: Vec<usize>,
    pub coloring: Vec<Option<u8>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SolveResult {
    pub value: f64,
    pub set: Vec<usize>,
    pub trials: usize,
    pub paths: PathCounts,
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub guarantee: Option<String>,
    #[serde(skip)]
    pub certificate: Certificate,
}

impl SolveResult {
    /// Verifies independence and recomputes the value before construction;
    /// a violation here is a solver bug, not an input condition.
    pub fn checked(
        g: &Graph,
        set: BitSet,
        trials: usize,
        paths: PathCounts,
        seed: u64,
        certificate: Certificate,
    ) -> Self {
        assert!(
            g.is_independent(&set),
            "solver produced a dependent vertex set"
        );
        SolveResult {
            value: g.set_weight(&set),
            set: set.to_vec(),
            trials,
            paths,
            seed,
            guarantee: None,
            certificate,
        }
    }

    pub fn bitset(&self, n: usize) -> BitSet {
        BitSet::from_iter(n, self.set.iter().copied())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("result serializes")
    }
}

/// Stateless per-trial stream derivation (splitmix64 over the master seed).
pub(crate) fn trial_seed(master: u64, index: u64) -> u64 {
    let mut x = master.wrapping_add(index.wrapping_mul(0x9e3779b97f4a7c15));
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d049bb133111eb);
    x ^ (x >> 31)
}
