//! The derived constant block for the randomized approximation scheme.

use super::SolveError;

/// How the sample size and trial count are chosen.
///
/// Theory mode evaluates the formulas exactly (astronomical at desk scale,
/// kept to unit-test the formulas themselves). Practical mode caps them at
/// usable defaults unless overridden. Deterministic mode replaces sampling
/// by enumeration of all independent s-subsets, capped at s <= 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Theory,
    Practical {
        s_override: Option<usize>,
        t_override: Option<usize>,
    },
    Deterministic { s: usize },
}

impl Default for Mode {
    fn default() -> Self {
        Mode::Practical {
            s_override: None,
            t_override: None,
        }
    }
}

pub const DEFAULT_T_MAX: u64 = 1 << 40;

#[derive(Debug, Clone, PartialEq)]
pub struct EptasParams {
    pub eps: f64,
    pub beta: f64,
    pub d: usize,
    pub i: usize,
    /// Odd cycles longer than `c` take the layer route.
    pub c: u64,
    pub delta: f64,
    pub s_theory: u64,
    /// Theory-mode trial count, clamped to `t_max`.
    pub t_theory: u64,
    pub z: u64,
    /// Only the first `layer_budget` layers are candidates for removal.
    pub layer_budget: u64,
    pub t_max: u64,
    pub mode: Mode,
}

/// Evaluates the constant block: c = ceil(8 (1/(be)^2 + 1/(be) + 1)),
/// delta = eps/c, s = ceil((10 d / delta) ln(1/delta)),
/// t = ceil(ln 1e-10 / ln(1 - (beta/2)^s)), z = ceil(4/(be)) + 2.
/// Logs are natural throughout.
pub fn derive_params(
    eps: f64,
    beta: f64,
    d: usize,
    i: usize,
    mode: Mode,
) -> Result<EptasParams, SolveError> {
    if !(eps > 0.0 && eps < 1.0) {
        return Err(SolveError::BadParams(format!("eps must be in (0,1), got {eps}")));
    }
    if !(beta > 0.0 && beta <= 1.0) {
        return Err(SolveError::BadParams(format!("beta must be in (0,1], got {beta}")));
    }
    if i == 0 {
        return Err(SolveError::BadParams("i must be positive".into()));
    }
    if let Mode::Deterministic { s } = mode {
        if s > 3 {
            return Err(SolveError::BadParams(format!(
                "deterministic mode enumerates all s-subsets; s = {s} > 3 is not supported"
            )));
        }
    }
    let be = beta * eps;
    let c = (8.0 * (1.0 / (be * be) + 1.0 / be + 1.0)).ceil() as u64;
    let delta = eps / c as f64;
    let s_theory = ((10.0 * d as f64 / delta) * (1.0 / delta).ln()).ceil() as u64;
    let t_theory = theory_t(beta, s_theory, DEFAULT_T_MAX);
    let z = (4.0 / be).ceil() as u64 + 2;
    let layer_budget = (2.0 / be).ceil() as u64;
    let params = EptasParams {
        eps,
        beta,
        d,
        i,
        c,
        delta,
        s_theory,
        t_theory,
        z,
        layer_budget,
        t_max: DEFAULT_T_MAX,
        mode,
    };
    debug_assert!(params.c >= 24);
    debug_assert!(params.z >= 6);
    debug_assert!(params.delta <= eps / 24.0);
    Ok(params)
}

/// Trial count making the all-samples-miss probability at most 1e-10.
pub fn theory_t(beta: f64, s: u64, t_max: u64) -> u64 {
    let hit = (beta / 2.0).powi(s.min(1 << 20) as i32);
    let denom = (1.0 - hit).ln();
    if denom == 0.0 || !denom.is_finite() {
        return t_max;
    }
    let t = ((1e-10f64).ln() / denom).ceil();
    if !t.is_finite() || t >= t_max as f64 {
        t_max
    } else {
        t as u64
    }
}

impl EptasParams {
    /// Effective sample size for an n-vertex graph. The practical default is
    /// min(ceil((2d/delta) ln(1/delta)), floor(beta n / 2), 8).
    pub fn sample_size(&self, n: usize) -> usize {
        match self.mode {
            Mode::Theory => self.s_theory as usize,
            Mode::Deterministic { s } => s,
            Mode::Practical { s_override, .. } => s_override.unwrap_or_else(|| {
                let formula =
                    ((2.0 * self.d as f64 / self.delta) * (1.0 / self.delta).ln()).ceil();
                let bn = (self.beta * n as f64 / 2.0).floor();
                formula.min(bn).min(8.0).max(0.0) as usize
            }),
        }
    }

    pub fn trials(&self) -> usize {
        match self.mode {
            Mode::Theory => self.t_theory.min(self.t_max) as usize,
            Mode::Deterministic { .. } => 1,
            Mode::Practical { t_override, .. } => t_override.unwrap_or(50),
        }
    }

    /// Brute-force gate: the graph is small relative to the sample demand.
    pub fn small_enough_for_brute_force(&self, n: usize) -> bool {
        self.beta * (n as f64) < 2.0 * self.sample_size(n) as f64
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constants_match_hand_arithmetic() {
        let p = derive_params(0.9, 1.0, 1, 1, Mode::Theory).unwrap();
        assert_eq!(p.c, 27);
        assert!((p.delta - 1.0 / 30.0).abs() < 1e-15);
        assert_eq!(p.s_theory, 1021);
        assert_eq!(p.z, 7);

        let p = derive_params(0.5, 0.5, 1, 1, Mode::Theory).unwrap();
        assert_eq!(p.c, 168);
    }

    #[test]
    fn theory_t_uses_natural_log() {
        // beta = 1, s = 3: ceil(ln 1e-10 / ln(1 - 1/8)) = 173.
        assert_eq!(theory_t(1.0, 3, DEFAULT_T_MAX), 173);
    }

    #[test]
    fn theory_t_clamps() {
        assert_eq!(theory_t(0.01, 1000, DEFAULT_T_MAX), DEFAULT_T_MAX);
    }

    #[test]
    fn invariants_hold_over_a_sweep() {
        for &eps in &[0.05, 0.25, 0.5, 0.9, 0.99] {
            for &beta in &[1.0, 0.5, 0.25, 1.0 / 36.0] {
                let p = derive_params(eps, beta, 4, 1, Mode::default()).unwrap();
                assert!(p.c >= 24);
                assert!(p.z >= 6);
                assert!(p.delta <= eps / 24.0 + 1e-12);
            }
        }
    }

    #[test]
    fn bad_ranges_rejected() {
        assert!(derive_params(0.0, 1.0, 1, 1, Mode::Theory).is_err());
        assert!(derive_params(1.0, 1.0, 1, 1, Mode::Theory).is_err());
        assert!(derive_params(0.5, 0.0, 1, 1, Mode::Theory).is_err());
        assert!(derive_params(0.5, 1.1, 1, 1, Mode::Theory).is_err());
        assert!(derive_params(0.5, 1.0, 1, 0, Mode::Theory).is_err());
        assert!(derive_params(0.5, 1.0, 1, 1, Mode::Deterministic { s: 4 }).is_err());
    }

    #[test]
    fn practical_sample_size_respects_caps() {
        let p = derive_params(0.25, 1.0 / 36.0, 4, 1, Mode::default()).unwrap();
        // beta n / 2 dominates at desk scale.
        assert_eq!(p.sample_size(18), 0);
        // The formula cap of 8 binds before floor(beta n / 2) = 13 here.
        assert_eq!(p.sample_size(1000), 8);
        let p = derive_params(0.5, 1.0, 1, 1, Mode::default()).unwrap();
        assert_eq!(p.sample_size(1_000_000), 8);
        assert_eq!(p.trials(), 50);
    }
}
