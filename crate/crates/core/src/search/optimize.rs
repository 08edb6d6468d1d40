use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::cost::{cost_and_gradient, parameter_cost};
use super::params::BasisParameters;
use crate::error::{Error, Result};
use crate::mub::MubSet;

/// Number of iterations over which the relative cost decrease is measured
/// for the stall test.
pub const STALL_WINDOW: usize = 50;

/// Backtracking gives up once the trial step falls below this.
const MIN_STEP: f64 = 1e-18;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct SearchConfig {
    pub dimension: usize,
    /// Total number of bases, the fixed identity included.
    pub target_count: usize,
    pub restarts: usize,
    pub max_iterations: usize,
    pub initial_step: f64,
    /// After an accepted step `s`, the next trial step is `2 · s · step_decay`.
    pub step_decay: f64,
    pub convergence_threshold: f64,
    pub stall_threshold: f64,
    pub seed: u64,
    /// Run restarts on the rayon pool. Tracing is unavailable in this mode.
    pub parallel: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            dimension: 2,
            target_count: 2,
            restarts: 20,
            max_iterations: 5000,
            initial_step: 0.1,
            step_decay: 1.0,
            convergence_threshold: 1e-10,
            stall_threshold: 1e-12,
            seed: 0x5eed,
            parallel: false,
        }
    }
}

impl SearchConfig {
    pub fn new(dimension: usize, target_count: usize) -> SearchConfig {
        SearchConfig {
            dimension,
            target_count,
            ..SearchConfig::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        let d = self.dimension;
        if d < 2 {
            return Err(Error::Domain(format!(
                "dimension must be at least 2, got {d}"
            )));
        }
        if self.target_count < 2 || self.target_count > d + 1 {
            return Err(Error::Domain(format!(
                "target count must lie in 2..={}, got {}",
                d + 1,
                self.target_count
            )));
        }
        if self.restarts == 0 || self.max_iterations == 0 {
            return Err(Error::Domain(
                "restarts and max_iterations must be positive".into(),
            ));
        }
        if !(self.initial_step > 0.0 && self.initial_step.is_finite()) {
            return Err(Error::Domain("initial_step must be positive".into()));
        }
        if !(self.step_decay > 0.0 && self.step_decay <= 1.0) {
            return Err(Error::Domain("step_decay must lie in (0, 1]".into()));
        }
        if !(self.convergence_threshold >= 0.0 && self.stall_threshold >= 0.0) {
            return Err(Error::Domain("thresholds must be non-negative".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum StopReason {
    Converged,
    Stalled,
    MaxIterations,
    LineSearchFailed,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RestartOutcome {
    pub restart: usize,
    pub cost: f64,
    pub iterations: usize,
    pub stop: StopReason,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchResult {
    pub dimension: usize,
    pub target_count: usize,
    pub best_cost: f64,
    pub best_set: MubSet,
    pub converged: bool,
    /// Iterations taken by the best restart.
    pub iterations_used: usize,
    pub per_restart_costs: Vec<f64>,
    pub restarts: Vec<RestartOutcome>,
    pub seed_used: u64,
}

/// Generator for restart `restart`: ChaCha8 seeded with `seed`, on stream
/// `restart`.
pub fn restart_rng(seed: u64, restart: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(restart as u64);
    rng
}

/// One trajectory of gradient descent with backtracking.
///
/// Every accepted step strictly decreases the cost. `trace` receives
/// `(iteration, cost)` for the starting point and after each accepted step.
pub fn descend(
    config: &SearchConfig,
    start: BasisParameters,
    mut trace: impl FnMut(usize, f64),
) -> (BasisParameters, f64, usize, StopReason) {
    let mut x = start;
    let (mut cost, mut grad) = cost_and_gradient(&x);
    let mut history = vec![cost];
    let mut step = config.initial_step;
    trace(0, cost);

    for iteration in 0..config.max_iterations {
        if cost < config.convergence_threshold {
            return (x, cost, iteration, StopReason::Converged);
        }
        if iteration >= STALL_WINDOW {
            let earlier = history[iteration - STALL_WINDOW];
            if earlier > 0.0 && (earlier - cost) / earlier < config.stall_threshold {
                return (x, cost, iteration, StopReason::Stalled);
            }
        }
        let mut trial = step;
        let accepted = loop {
            let mut candidate = x.clone();
            for (v, g) in candidate.values_mut().iter_mut().zip(&grad) {
                *v -= trial * g;
            }
            let c = parameter_cost(&candidate);
            if c < cost {
                break Some(candidate);
            }
            trial *= 0.5;
            if trial < MIN_STEP {
                break None;
            }
        };
        let Some(next) = accepted else {
            return (x, cost, iteration, StopReason::LineSearchFailed);
        };
        x = next;
        (cost, grad) = cost_and_gradient(&x);
        history.push(cost);
        step = 2.0 * trial * config.step_decay;
        trace(iteration + 1, cost);
    }
    let stop = if cost < config.convergence_threshold {
        StopReason::Converged
    } else {
        StopReason::MaxIterations
    };
    (x, cost, config.max_iterations, stop)
}

fn run_restart(
    config: &SearchConfig,
    restart: usize,
    trace: &mut dyn FnMut(usize, usize, f64),
) -> (BasisParameters, RestartOutcome) {
    let mut rng = restart_rng(config.seed, restart);
    let start = BasisParameters::random(config.dimension, config.target_count - 1, &mut rng);
    let (x, cost, iterations, stop) = descend(config, start, |it, c| trace(restart, it, c));
    (
        x,
        RestartOutcome {
            restart,
            cost,
            iterations,
            stop,
        },
    )
}

/// Multi-start search for `config.target_count` mutually unbiased bases in
/// dimension `config.dimension`, the first held at the identity.
pub fn optimize(config: &SearchConfig) -> Result<SearchResult> {
    optimize_with_trace(config, |_, _, _| {})
}

/// As [`optimize`], reporting `(restart, iteration, cost)` along the way.
/// Tracing forces sequential execution.
pub fn optimize_with_trace(
    config: &SearchConfig,
    mut trace: impl FnMut(usize, usize, f64),
) -> Result<SearchResult> {
    config.validate()?;
    let runs: Vec<(BasisParameters, RestartOutcome)> = if config.parallel {
        (0..config.restarts)
            .into_par_iter()
            .map(|r| run_restart(config, r, &mut |_, _, _| {}))
            .collect()
    } else {
        (0..config.restarts)
            .map(|r| run_restart(config, r, &mut trace))
            .collect()
    };

    let best = runs
        .iter()
        .min_by(|a, b| {
            a.1.cost
                .total_cmp(&b.1.cost)
                .then(a.1.restart.cmp(&b.1.restart))
        })
        .expect("at least one restart");
    let best_cost = best.1.cost;
    Ok(SearchResult {
        dimension: config.dimension,
        target_count: config.target_count,
        best_cost,
        best_set: best.0.realize(),
        converged: best_cost < config.convergence_threshold,
        iterations_used: best.1.iterations,
        per_restart_costs: runs.iter().map(|r| r.1.cost).collect(),
        restarts: runs.into_iter().map(|r| r.1).collect(),
        seed_used: config.seed,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MaxSearch {
    pub dimension: usize,
    /// Largest target count that converged (1 if even a pair failed).
    pub max_found: usize,
    /// Results for every target count tried, in order.
    pub attempts: Vec<SearchResult>,
}

/// Runs [`optimize`] for `m = 2, 3, …, d + 1`, stopping at the first
/// target count that fails to converge.
pub fn search_max_mubs(d: usize, base: &SearchConfig) -> Result<MaxSearch> {
    if d < 2 {
        return Err(Error::Domain(format!(
            "dimension must be at least 2, got {d}"
        )));
    }
    let mut attempts = Vec::new();
    let mut max_found = 1;
    for m in 2..=d + 1 {
        let config = SearchConfig {
            dimension: d,
            target_count: m,
            ..base.clone()
        };
        let result = optimize(&config)?;
        let converged = result.converged;
        attempts.push(result);
        if !converged {
            break;
        }
        max_found = m;
    }
    Ok(MaxSearch {
        dimension: d,
        max_found,
        attempts,
    })
}
