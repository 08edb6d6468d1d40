mod common;

use common::{finite_difference_gradient, reference_cost, relative_error};
use mubplane::mub::construct_mub_set;
use mubplane::search::{
    cost_and_gradient, cost_gradient, parameter_cost, restart_rng, BasisParameters,
};

#[test]
fn reference_cost_agrees_with_library() {
    for (d, free) in [(2, 1), (3, 2), (5, 3)] {
        let p = BasisParameters::random(d, free, &mut restart_rng(99, d));
        assert!((reference_cost(&p) - parameter_cost(&p)).abs() < 1e-12);
    }
}

#[test]
fn random_points_match_finite_differences() {
    let mut worst: f64 = 0.0;
    for trial in 0..20 {
        let d = 2 + trial % 3;
        let m = 2 + (trial / 3) % 2;
        let p = BasisParameters::random(d, m - 1, &mut restart_rng(2024, trial));
        let err = relative_error(&cost_gradient(&p), &finite_difference_gradient(&p, 1e-5));
        assert!(err < 1e-5, "trial {trial} (d={d}, m={m}): {err:e}");
        worst = worst.max(err);
    }
    assert!(worst > 0.0);
}

#[test]
fn zero_generators_match_finite_differences() {
    for (d, free) in [(2, 1), (3, 1), (3, 2), (4, 2)] {
        let p = BasisParameters::zeros(d, free);
        let (cost, grad) = cost_and_gradient(&p);
        assert!((cost - reference_cost(&p)).abs() < 1e-12);
        let err = relative_error(&grad, &finite_difference_gradient(&p, 1e-5));
        assert!(err < 1e-5, "d={d}: {err:e}");
    }
}

#[test]
fn gradient_vanishes_at_exact_sets() {
    for d in [2u64, 3, 4, 5] {
        let set = construct_mub_set(d).unwrap();
        let p = BasisParameters::from_mub_set(&set).unwrap();
        let (cost, grad) = cost_and_gradient(&p);
        let norm = grad.iter().map(|g| g * g).sum::<f64>().sqrt();
        assert!(cost < 1e-12, "d={d}: cost {cost:e}");
        assert!(norm < 1e-8, "d={d}: |grad| {norm:e}");
    }
}

#[test]
fn larger_generators_match() {
    // spectra spread well beyond 2π
    for trial in 0..4 {
        let mut p = BasisParameters::random(3, 2, &mut restart_rng(5, trial));
        for v in p.values_mut() {
            *v *= 4.0;
        }
        let err = relative_error(&cost_gradient(&p), &finite_difference_gradient(&p, 1e-5));
        assert!(err < 1e-5, "trial {trial}: {err:e}");
    }
}
