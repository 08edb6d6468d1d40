//! Independent oracles shared by the integration tests and the acceptance run.
#![allow(dead_code)]

use std::collections::HashSet;

use mubplane::algebra::build_field;
use mubplane::algebra::Field;
use mubplane::search::BasisParameters;
use nalgebra::DMatrix;
use num_complex::Complex64;

/// Number of `dim`-dimensional linear subspaces of `GF(q)^len`, found by
/// growing spans one vector at a time and deduplicating them as point sets.
pub fn count_subspaces(p: u64, e: u32, len: usize, dim: usize) -> usize {
    let field: Field = build_field(p, e).unwrap().into();
    let t = field.tables().unwrap();
    let q = t.order();
    let total = q.pow(len as u32);
    let digits = |mut v: usize| -> Vec<usize> {
        (0..len)
            .map(|_| {
                let d = v % q;
                v /= q;
                d
            })
            .collect()
    };
    let vectors: Vec<Vec<usize>> = (0..total).map(digits).collect();
    let encode = |x: &[usize]| x.iter().rev().fold(0, |acc, &d| acc * q + d);
    let combine = |a: usize, c: usize, b: usize| -> usize {
        let x: Vec<usize> = vectors[a]
            .iter()
            .zip(&vectors[b])
            .map(|(&ai, &bi)| t.add(ai, t.mul(c, bi)))
            .collect();
        encode(&x)
    };

    let mut layer: HashSet<Vec<usize>> = HashSet::from([vec![0]]);
    for _ in 0..dim {
        let mut next = HashSet::new();
        for space in &layer {
            let members: HashSet<usize> = space.iter().copied().collect();
            for v in 0..total {
                if members.contains(&v) {
                    continue;
                }
                let mut span: Vec<usize> = space
                    .iter()
                    .flat_map(|&s| (0..q).map(move |c| (s, c)))
                    .map(|(s, c)| combine(s, c, v))
                    .collect();
                span.sort_unstable();
                span.dedup();
                next.insert(span);
            }
        }
        layer = next;
    }
    layer.len()
}

/// `exp(iH)` by scaling and squaring a truncated Taylor series.
pub fn taylor_exp_i(h: &DMatrix<Complex64>) -> DMatrix<Complex64> {
    let d = h.nrows();
    let a = h.map(|z| z * Complex64::i());
    let norm = a.iter().map(|z| z.norm()).sum::<f64>();
    let mut squarings = 0;
    let mut scale = 1.0;
    while norm * scale > 0.25 {
        scale /= 2.0;
        squarings += 1;
    }
    let a = a * Complex64::new(scale, 0.0);
    let mut term = DMatrix::<Complex64>::identity(d, d);
    let mut sum = term.clone();
    for k in 1..30 {
        term = &term * &a / Complex64::new(k as f64, 0.0);
        sum += &term;
    }
    for _ in 0..squarings {
        sum = &sum * &sum;
    }
    sum
}

/// The pairwise least-squares objective evaluated from scratch with the
/// identity prepended.
pub fn reference_cost(params: &BasisParameters) -> f64 {
    let d = params.dimension();
    let mut mats = vec![DMatrix::<Complex64>::identity(d, d)];
    mats.extend((0..params.free_bases()).map(|k| taylor_exp_i(&params.generator(k))));
    let mut total = 0.0;
    for i in 0..mats.len() {
        for j in i + 1..mats.len() {
            for a in 0..d {
                for b in 0..d {
                    let mut z = Complex64::new(0.0, 0.0);
                    for r in 0..d {
                        z += mats[i][(r, a)].conj() * mats[j][(r, b)];
                    }
                    total += (z.norm_sqr() - 1.0 / d as f64).powi(2);
                }
            }
        }
    }
    total
}

/// Central differences of [`reference_cost`].
pub fn finite_difference_gradient(params: &BasisParameters, h: f64) -> Vec<f64> {
    (0..params.len())
        .map(|i| {
            let mut plus = params.clone();
            plus.values_mut()[i] += h;
            let mut minus = params.clone();
            minus.values_mut()[i] -= h;
            (reference_cost(&plus) - reference_cost(&minus)) / (2.0 * h)
        })
        .collect()
}

/// `‖a − b‖∞ / max(‖b‖∞, 1)`.
pub fn relative_error(a: &[f64], b: &[f64]) -> f64 {
    let diff = a
        .iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max);
    let scale = b.iter().map(|y| y.abs()).fold(1.0, f64::max);
    diff / scale
}
