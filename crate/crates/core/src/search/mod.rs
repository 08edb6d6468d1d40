//! Numerical search for sets of mutually unbiased bases.
//!
//! The first basis is pinned to the identity; every other basis is
//! `exp(iH)` for a free Hermitian generator `H`. Random restarts descend the
//! least-squares cost `Σ (|⟨a_i|b_j⟩|² − 1/d)²` by gradient descent with a
//! backtracking line search.

mod cost;
mod optimize;
mod params;

pub use cost::{cost_and_gradient, cost_gradient, mub_cost, parameter_cost, COST_ORTHONORMAL_TOL};
pub use optimize::{
    descend, optimize, optimize_with_trace, restart_rng, search_max_mubs, MaxSearch,
    RestartOutcome, SearchConfig, SearchResult, StopReason, STALL_WINDOW,
};
pub use params::BasisParameters;
