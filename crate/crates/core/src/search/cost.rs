use nalgebra::DMatrix;
use num_complex::Complex64;

use super::params::BasisParameters;
use crate::error::{Error, Result};
use crate::mub::{check_orthonormal, MubSet};

/// Orthonormality required of raw sets handed to [`mub_cost`].
pub const COST_ORTHONORMAL_TOL: f64 = 1e-10;

/// `Σ_pairs Σ_ij (|⟨a_i|b_j⟩|² − 1/d)²`; zero exactly on mutually unbiased sets.
pub fn mub_cost(set: &MubSet) -> Result<f64> {
    for (k, b) in set.bases().iter().enumerate() {
        let r = check_orthonormal(b, COST_ORTHONORMAL_TOL)?;
        if !r.pass {
            return Err(Error::Precondition(format!(
                "basis {k} is not orthonormal (deviation {:e})",
                r.deviation
            )));
        }
    }
    let mats: Vec<&DMatrix<Complex64>> = set.bases().iter().map(|b| b.matrix()).collect();
    Ok(cost_of(&mats))
}

pub(crate) fn cost_of(mats: &[&DMatrix<Complex64>]) -> f64 {
    let d = mats.first().map_or(1, |m| m.nrows());
    let target = 1.0 / d as f64;
    let mut total = 0.0;
    for a in 0..mats.len() {
        for b in a + 1..mats.len() {
            let overlap = mats[a].adjoint() * mats[b];
            total += overlap
                .iter()
                .map(|z| (z.norm_sqr() - target).powi(2))
                .sum::<f64>();
        }
    }
    total
}

/// Cost of the set realized by `params` (identity first).
pub fn parameter_cost(params: &BasisParameters) -> f64 {
    let exps = params.exponentials();
    let id = DMatrix::<Complex64>::identity(params.dimension(), params.dimension());
    let mut mats = vec![&id];
    mats.extend(exps.iter().map(|e| &e.unitary));
    cost_of(&mats)
}

/// Cost and its exact gradient with respect to every packed generator entry.
pub fn cost_and_gradient(params: &BasisParameters) -> (f64, Vec<f64>) {
    let d = params.dimension();
    let target = 1.0 / d as f64;
    let exps = params.exponentials();
    let id = DMatrix::<Complex64>::identity(d, d);
    let mut mats = vec![&id];
    mats.extend(exps.iter().map(|e| &e.unitary));

    // grads[k] is G with dC = Re tr(G† dU_k)
    let mut grads = vec![DMatrix::<Complex64>::zeros(d, d); mats.len()];
    let mut total = 0.0;
    for a in 0..mats.len() {
        for b in a + 1..mats.len() {
            let mut w = mats[a].adjoint() * mats[b];
            for z in w.iter_mut() {
                let r = z.norm_sqr() - target;
                total += r * r;
                *z *= 4.0 * r;
            }
            grads[b] += mats[a] * &w;
            grads[a] += mats[b] * w.adjoint();
        }
    }
    let mut gradient = Vec::with_capacity(params.len());
    for (e, g) in exps.iter().zip(&grads[1..]) {
        gradient.extend(e.pull_back(g));
    }
    (total, gradient)
}

/// Gradient of the cost with respect to the generator entries.
pub fn cost_gradient(params: &BasisParameters) -> Vec<f64> {
    cost_and_gradient(params).1
}
