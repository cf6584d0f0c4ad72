//! End-to-end Maximum Clique pipelines for disk and unit-ball inputs: guess
//! a vertex of a maximum clique, approximate the independence number of the
//! complemented neighborhood, keep the best branch. Plus the candidate-point
//! piercing 2-approximation for disks with a representation.

mod pierce;

pub use pierce::clique_pierce2;

use crate::approx::{
    derive_params, mis_eptas, mis_subexp, trial_seed, Certificate, Mode, PathCounts, SolveError,
    SolveResult,
};
use crate::bits::BitSet;
use crate::geom::{build_intersection_graph, GeomError, GeometricInstance, Tolerance};
use crate::graph::{brute_force, Graph, GraphError, Objective, DEFAULT_BRUTE_CAP};
use crate::par;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliqueError {
    #[error("input instance must be {expected}")]
    WrongGeometry { expected: &'static str },
    /// The solver found structure impossible in the claimed input class.
    #[error("input is not a {class} graph: complement carries two anticomplete odd cycles (evidence {odd_cycle:?})")]
    NotInClass {
        class: &'static str,
        odd_cycle: Vec<usize>,
    },
    #[error(transparent)]
    Geom(#[from] GeomError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Solve(#[from] SolveError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PipelineMode {
    Eptas,
    Subexp,
    Exact,
    Pierce2,
}

#[derive(Debug, Clone)]
pub struct PipelineConfig {
    pub eps: f64,
    pub seed: u64,
    /// `None` selects the class constant: 1/36 for disks without a
    /// representation, 1/4 with one, 1/30 for unit balls.
    pub beta: Option<f64>,
    pub mode: PipelineMode,
    pub trials: Option<usize>,
    pub sample_override: Option<usize>,
}

impl PipelineConfig {
    pub fn new(eps: f64, seed: u64, mode: PipelineMode) -> Self {
        PipelineConfig {
            eps,
            seed,
            beta: None,
            mode,
            trials: None,
            sample_override: None,
        }
    }
}

pub enum CliqueInput<'a> {
    Instance(&'a GeometricInstance),
    Graph(&'a Graph),
}

/// Maximum clique on a (claimed) disk graph. Without a representation every
/// vertex is tried as the clique-member guess; with one the same branching
/// runs under the stronger beta promise.
pub fn clique_disk(input: CliqueInput<'_>, cfg: &PipelineConfig) -> Result<SolveResult, CliqueError> {
    let (g, repr) = match input {
        CliqueInput::Instance(inst) => {
            if !inst.is_disks() {
                return Err(CliqueError::WrongGeometry {
                    expected: "disks (2-dimensional balls)",
                });
            }
            let (g, _) = build_intersection_graph(inst, Tolerance::default())?;
            (g, Some(inst))
        }
        CliqueInput::Graph(g) => (g.clone(), None),
    };
    if cfg.mode == PipelineMode::Pierce2 {
        let inst = repr.ok_or(CliqueError::WrongGeometry {
            expected: "a disk representation (pierce2 needs geometry)",
        })?;
        return clique_pierce2(inst, cfg);
    }
    let beta = cfg.beta.unwrap_or(if repr.is_some() { 0.25 } else { 1.0 / 36.0 });
    run_clique(&g, cfg, beta, "disk")
}

/// Maximum clique on a (claimed) unit ball graph (3-dimensional, radius 1).
/// Given centers this solves max subset of points with diameter at most 2.
pub fn clique_unit_ball(
    input: CliqueInput<'_>,
    cfg: &PipelineConfig,
) -> Result<SolveResult, CliqueError> {
    let g = match input {
        CliqueInput::Instance(inst) => {
            let unit = inst.is_balls()
                && inst.dim() == Some(3)
                && inst.objects().iter().all(|o| match o {
                    crate::geom::GeomObject::Ball { radius, .. } => *radius == 1.0,
                    _ => false,
                });
            if !unit {
                return Err(CliqueError::WrongGeometry {
                    expected: "unit balls in dimension 3",
                });
            }
            build_intersection_graph(inst, Tolerance::default())?.0
        }
        CliqueInput::Graph(g) => g.clone(),
    };
    let beta = cfg.beta.unwrap_or(1.0 / 30.0);
    run_clique(&g, cfg, beta, "unit ball")
}

fn run_clique(
    g: &Graph,
    cfg: &PipelineConfig,
    beta: f64,
    class: &'static str,
) -> Result<SolveResult, CliqueError> {
    match cfg.mode {
        PipelineMode::Exact => {
            let set = brute_force(g, Objective::Clique, DEFAULT_BRUTE_CAP).map_err(SolveError::from)?;
            let mut res = checked_clique(g, set, 1, PathCounts::default(), cfg.seed);
            res.guarantee = Some("exact".into());
            Ok(res)
        }
        PipelineMode::Subexp => {
            let co = g.complement();
            let res = mis_subexp(&co).map_err(|e| classify(e, class))?;
            let set = res.bitset(g.n());
            let mut out = checked_clique(g, set, res.trials, res.paths, cfg.seed);
            out.guarantee = Some("exact".into());
            Ok(out)
        }
        PipelineMode::Eptas => branch_on_vertices(g, cfg, beta, class),
        PipelineMode::Pierce2 => unreachable!("dispatched by clique_disk"),
    }
}

fn branch_on_vertices(
    g: &Graph,
    cfg: &PipelineConfig,
    beta: f64,
    class: &'static str,
) -> Result<SolveResult, CliqueError> {
    let n = g.n();
    if n == 0 {
        return Ok(checked_clique(
            g,
            BitSet::new(0),
            0,
            PathCounts::default(),
            cfg.seed,
        ));
    }
    let params = derive_params(
        cfg.eps,
        beta,
        4,
        1,
        Mode::Practical {
            s_override: cfg.sample_override,
            t_override: cfg.trials,
        },
    )?;
    // Either u is in a maximum clique (some u is), and then the clique
    // number equals 1 + the independence number of the complemented open
    // neighborhood.
    let branches: Vec<Result<(BitSet, PathCounts, usize), SolveError>> =
        par::map_indexed(n, |u| {
            let mut scope = g.neighbors(u).clone();
            scope.insert(u);
            let (h, map) = g.induced(&scope);
            let co = h.complement();
            let res = mis_eptas(&co, &params, trial_seed(cfg.seed, u as u64), None)?;
            let mut clique = BitSet::new(n);
            clique.insert(u);
            for v in res.set {
                clique.insert(map[v]);
            }
            Ok((clique, res.paths, res.trials))
        });

    let mut best: Option<(f64, usize, BitSet)> = None;
    let mut paths = PathCounts::default();
    let mut trials = 0;
    for (u, branch) in branches.into_iter().enumerate() {
        let (clique, bp, bt) = branch.map_err(|e| classify(e, class))?;
        let value = g.set_weight(&clique);
        paths.bipartite += bp.bipartite;
        paths.short += bp.short;
        paths.long += bp.long;
        paths.skipped += bp.skipped;
        trials += bt;
        if best.as_ref().is_none_or(|(bv, _, _)| value > *bv) {
            best = Some((value, u, clique));
        }
    }
    let (_, _, set) = best.expect("n >= 1 has at least one branch");
    Ok(checked_clique(g, set, trials, paths, cfg.seed))
}

fn classify(e: SolveError, class: &'static str) -> CliqueError {
    match e {
        SolveError::IocpViolation { odd_cycle, .. } => CliqueError::NotInClass { class, odd_cycle },
        other => CliqueError::Solve(other),
    }
}

/// Clique-side counterpart of `SolveResult::checked`.
pub(crate) fn checked_clique(
    g: &Graph,
    set: BitSet,
    trials: usize,
    paths: PathCounts,
    seed: u64,
) -> SolveResult {
    assert!(g.is_clique(&set), "pipeline produced a non-clique");
    SolveResult {
        value: g.set_weight(&set),
        set: set.to_vec(),
        trials,
        paths,
        seed,
        guarantee: None,
        certificate: Certificate::default(),
    }
}
