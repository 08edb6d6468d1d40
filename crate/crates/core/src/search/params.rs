use nalgebra::{DMatrix, DVector, Schur};
use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::mub::{Basis, MubSet};

/// Hermitian generators for every basis but the first, which stays at the
/// identity. Basis `k` is realized as `exp(i H_k)`.
///
/// Each generator takes `d²` reals: the `d` diagonal entries, then the
/// strict upper triangle in row-major order as `(re, im)` pairs.
#[derive(Debug, Clone, PartialEq)]
pub struct BasisParameters {
    dimension: usize,
    free_bases: usize,
    values: Vec<f64>,
}

impl BasisParameters {
    pub fn zeros(dimension: usize, free_bases: usize) -> BasisParameters {
        BasisParameters {
            dimension,
            free_bases,
            values: vec![0.0; free_bases * dimension * dimension],
        }
    }

    pub fn from_values(
        dimension: usize,
        free_bases: usize,
        values: Vec<f64>,
    ) -> Result<BasisParameters> {
        if values.len() != free_bases * dimension * dimension {
            return Err(Error::Domain(format!(
                "expected {} parameters, got {}",
                free_bases * dimension * dimension,
                values.len()
            )));
        }
        Ok(BasisParameters {
            dimension,
            free_bases,
            values,
        })
    }

    /// Independent standard normal entries.
    pub fn random<R: Rng + ?Sized>(
        dimension: usize,
        free_bases: usize,
        rng: &mut R,
    ) -> BasisParameters {
        let values = (0..free_bases * dimension * dimension)
            .map(|_| rng.sample::<f64, _>(StandardNormal))
            .collect();
        BasisParameters {
            dimension,
            free_bases,
            values,
        }
    }

    /// Generators realizing `set.bases()[1..]`. The first basis of `set`
    /// must be the identity.
    pub fn from_mub_set(set: &MubSet) -> Result<BasisParameters> {
        let d = set.dimension();
        let Some((first, rest)) = set.bases().split_first() else {
            return Err(Error::Domain("empty basis set".into()));
        };
        if (first.matrix() - DMatrix::<Complex64>::identity(d, d)).norm() > 1e-12 {
            return Err(Error::Precondition(
                "first basis must be the identity".into(),
            ));
        }
        let mut values = Vec::with_capacity(rest.len() * d * d);
        for b in rest {
            let h = hermitian_log(b.matrix());
            values.extend(pack_generator(&h));
        }
        Ok(BasisParameters {
            dimension: d,
            free_bases: rest.len(),
            values,
        })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn free_bases(&self) -> usize {
        self.free_bases
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [f64] {
        &mut self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn generator(&self, k: usize) -> DMatrix<Complex64> {
        let d = self.dimension;
        let block = &self.values[k * d * d..(k + 1) * d * d];
        let mut h = DMatrix::zeros(d, d);
        for j in 0..d {
            h[(j, j)] = Complex64::new(block[j], 0.0);
        }
        let mut at = d;
        for j in 0..d {
            for l in j + 1..d {
                let z = Complex64::new(block[at], block[at + 1]);
                h[(j, l)] = z;
                h[(l, j)] = z.conj();
                at += 2;
            }
        }
        h
    }

    /// Spectral data and unitaries for every free basis.
    pub(crate) fn exponentials(&self) -> Vec<UnitaryExp> {
        (0..self.free_bases)
            .map(|k| UnitaryExp::new(&self.generator(k)))
            .collect()
    }

    /// The identity followed by `exp(i H_k)` for each generator.
    pub fn realize(&self) -> MubSet {
        let d = self.dimension;
        let mut bases = vec![Basis::identity(d)];
        bases.extend(
            self.exponentials()
                .into_iter()
                .map(|e| Basis::from_matrix(e.unitary).expect("exp of a finite Hermitian matrix")),
        );
        MubSet::new(d, bases).expect("uniform dimension")
    }
}

pub(crate) fn pack_generator(h: &DMatrix<Complex64>) -> Vec<f64> {
    let d = h.nrows();
    let mut out = Vec::with_capacity(d * d);
    out.extend((0..d).map(|j| h[(j, j)].re));
    for j in 0..d {
        for l in j + 1..d {
            out.push(h[(j, l)].re);
            out.push(h[(j, l)].im);
        }
    }
    out
}

/// `H` Hermitian with `exp(iH) = U`, from the Schur form of a unitary.
pub(crate) fn hermitian_log(u: &DMatrix<Complex64>) -> DMatrix<Complex64> {
    let (q, t) = Schur::new(u.clone()).unpack();
    let angles = DMatrix::from_diagonal(&DVector::from_iterator(
        t.nrows(),
        (0..t.nrows()).map(|j| Complex64::new(t[(j, j)].arg(), 0.0)),
    ));
    let h = &q * angles * q.adjoint();
    (&h + h.adjoint()) * Complex64::new(0.5, 0.0)
}

/// `U = exp(iH) = V diag(e^(iλ)) V†` with the spectral data kept for the
/// derivative.
pub(crate) struct UnitaryExp {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: DMatrix<Complex64>,
    pub unitary: DMatrix<Complex64>,
}

impl UnitaryExp {
    pub fn new(h: &DMatrix<Complex64>) -> UnitaryExp {
        let eig = h.clone().symmetric_eigen();
        let eigenvalues: Vec<f64> = eig.eigenvalues.iter().copied().collect();
        let v = eig.eigenvectors;
        let phases = DMatrix::from_diagonal(&DVector::from_iterator(
            eigenvalues.len(),
            eigenvalues.iter().map(|&l| Complex64::from_polar(1.0, l)),
        ));
        let unitary = &v * phases * v.adjoint();
        UnitaryExp {
            eigenvalues,
            eigenvectors: v,
            unitary,
        }
    }

    /// Pulls a Euclidean gradient `G` with respect to `U` (meaning
    /// `dC = Re tr(G† dU)`) back to the packed generator coordinates.
    ///
    /// Uses the divided-difference form of the Fréchet derivative of
    /// `exp(i·)`: `(e^(iλj) − e^(iλk))/(λj − λk) = i e^(i(λj+λk)/2) sinc((λj−λk)/2)`.
    pub fn pull_back(&self, g: &DMatrix<Complex64>) -> Vec<f64> {
        let v = &self.eigenvectors;
        let d = v.nrows();
        let mut k = v.adjoint() * g * v;
        for j in 0..d {
            for l in 0..d {
                let mid = 0.5 * (self.eigenvalues[j] + self.eigenvalues[l]);
                let half = 0.5 * (self.eigenvalues[j] - self.eigenvalues[l]);
                let sinc = if half.abs() < 1e-8 {
                    1.0 - half * half / 6.0
                } else {
                    half.sin() / half
                };
                let divided = Complex64::i() * Complex64::from_polar(sinc, mid);
                k[(j, l)] *= divided.conj();
            }
        }
        let z = v * k * v.adjoint();
        let mut out = Vec::with_capacity(d * d);
        out.extend((0..d).map(|j| z[(j, j)].re));
        for j in 0..d {
            for l in j + 1..d {
                out.push(z[(j, l)].re + z[(l, j)].re);
                out.push(z[(j, l)].im - z[(l, j)].im);
            }
        }
        out
    }
}
