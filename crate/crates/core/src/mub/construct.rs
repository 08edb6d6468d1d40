use nalgebra::DMatrix;
use num_complex::Complex64;

use super::{check_mub_set, Basis, MubSet, CONSTRUCTION_TOL};
use crate::algebra::{build_field, classify_order, Field};
use crate::error::{Error, Result};

/// Largest dimension [`construct_mub_set`] accepts by default.
pub const DEFAULT_MUB_CAP: u64 = 32;

/// The standard basis followed by `d` bases built from additive characters
/// of `GF(d)`.
///
/// Basis `a` (for each field element `a`) has columns indexed by `b`, with
/// entries indexed by `x`:
///
/// - odd characteristic: `ω^tr(a x² + b x) / √d`, `ω = e^(2πi/p)`
/// - characteristic 2: `i^Q_a(x) · (−1)^tr(b x) / √d`, where `Q_a` is the
///   integer lift of the quadratic form `x ↦ Σ tr(a e_i e_j) x_i x_j`
///   in the polynomial basis `e_i`, read mod 4
pub fn construct_mub_set(d: u64) -> Result<MubSet> {
    construct_mub_set_with_cap(d, DEFAULT_MUB_CAP)
}

pub fn construct_mub_set_with_cap(d: u64, cap: u64) -> Result<MubSet> {
    let pp = classify_order(d)?.ok_or(Error::NotPrimePower(d))?;
    if d > cap {
        return Err(Error::Capacity(format!(
            "dimension {d} exceeds the construction cap {cap}"
        )));
    }
    let field: Field = build_field(pp.prime, pp.exponent)?.into();
    let tables = field.tables()?;
    let q = d as usize;
    let p = pp.prime as usize;
    let scale = 1.0 / (d as f64).sqrt();

    let mut bases = Vec::with_capacity(q + 1);
    bases.push(Basis::identity(q));

    if p == 2 {
        let n = pp.exponent as usize;
        // basis e_i = x^i has index p^i = 2^i
        let e: Vec<usize> = (0..n).map(|i| 1usize << i).collect();
        let bits = |x: usize| (0..n).map(move |i| (x >> i) & 1);
        let quarter = [
            Complex64::new(1.0, 0.0),
            Complex64::new(0.0, 1.0),
            Complex64::new(-1.0, 0.0),
            Complex64::new(0.0, -1.0),
        ];
        for a in 0..q {
            let form: Vec<Vec<usize>> = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| tables.trace(tables.mul(a, tables.mul(e[i], e[j]))))
                        .collect()
                })
                .collect();
            let lift: Vec<usize> = (0..q)
                .map(|x| {
                    let xb: Vec<usize> = bits(x).collect();
                    let mut s = 0;
                    for i in 0..n {
                        for j in 0..n {
                            s += form[i][j] * xb[i] * xb[j];
                        }
                    }
                    s % 4
                })
                .collect();
            let m = DMatrix::from_fn(q, q, |x, b| {
                let sign = 2 * tables.trace(tables.mul(b, x));
                quarter[(lift[x] + sign) % 4] * scale
            });
            bases.push(Basis::from_matrix(m)?);
        }
    } else {
        let roots: Vec<Complex64> = (0..p)
            .map(|k| Complex64::from_polar(scale, 2.0 * std::f64::consts::PI * k as f64 / p as f64))
            .collect();
        for a in 0..q {
            let m = DMatrix::from_fn(q, q, |x, b| {
                let quad = tables.mul(a, tables.mul(x, x));
                let lin = tables.mul(b, x);
                roots[tables.trace(tables.add(quad, lin))]
            });
            bases.push(Basis::from_matrix(m)?);
        }
    }

    let set = MubSet::new(q, bases)?;
    let report = check_mub_set(&set, CONSTRUCTION_TOL)?;
    debug_assert!(
        report.pass,
        "construction self-check failed: {}",
        report.overall_max_deviation
    );
    Ok(set)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mub::check_pair_unbiased;

    #[test]
    fn small_dimensions() {
        let two = construct_mub_set(2).unwrap();
        assert_eq!(two.len(), 3);
        assert!(check_mub_set(&two, 1e-12).unwrap().overall_max_deviation < 1e-12);
        let three = construct_mub_set(3).unwrap();
        assert_eq!(three.len(), 4);
        assert!(check_mub_set(&three, 1e-9).unwrap().pass);
    }

    #[test]
    fn prime_powers() {
        for d in [2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32] {
            let set = construct_mub_set(d).unwrap();
            assert_eq!(set.len(), d as usize + 1);
            let r = check_mub_set(&set, 1e-9).unwrap();
            assert!(
                r.overall_max_deviation < 1e-9,
                "d = {d}: {}",
                r.overall_max_deviation
            );
        }
    }

    #[test]
    fn errors() {
        assert_eq!(construct_mub_set(6), Err(Error::NotPrimePower(6)));
        assert!(matches!(construct_mub_set(37), Err(Error::Capacity(_))));
        assert!(matches!(construct_mub_set(1), Err(Error::Domain(_))));
        assert!(construct_mub_set_with_cap(49, 64).is_ok());
    }

    #[test]
    fn first_nontrivial_basis_is_unbiased_to_standard() {
        let set = construct_mub_set(4).unwrap();
        for b in &set.bases()[1..] {
            assert!(check_pair_unbiased(&set.bases()[0], b, 1e-14).unwrap().pass);
        }
    }
}
