//! Orthonormal bases of `C^d`, unbiasedness checks, and complete sets of
//! `d + 1` mutually unbiased bases for prime-power `d`.

mod construct;
mod json;

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::algebra::gaussian_binomial;
use crate::error::{Error, Result};

pub use construct::{construct_mub_set, construct_mub_set_with_cap, DEFAULT_MUB_CAP};

/// Default certification tolerance.
pub const CERTIFY_TOL: f64 = 1e-9;

/// Tolerance used when a construction checks its own output.
pub const CONSTRUCTION_TOL: f64 = 1e-12;

/// `d` orthonormal (to tolerance) column vectors in `C^d`.
#[derive(Debug, Clone, PartialEq)]
pub struct Basis {
    matrix: DMatrix<Complex64>,
}

impl Basis {
    /// Columns become basis vectors.
    pub fn from_columns(columns: Vec<Vec<Complex64>>) -> Result<Basis> {
        let d = columns.len();
        if let Some(bad) = columns.iter().position(|c| c.len() != d) {
            return Err(Error::Domain(format!(
                "column {bad} has length {}, expected {d}",
                columns[bad].len()
            )));
        }
        let matrix = DMatrix::from_fn(d, d, |i, j| columns[j][i]);
        Basis::from_matrix(matrix)
    }

    pub fn from_matrix(matrix: DMatrix<Complex64>) -> Result<Basis> {
        if !matrix.is_square() {
            return Err(Error::Domain(format!(
                "basis matrix must be square, got {}x{}",
                matrix.nrows(),
                matrix.ncols()
            )));
        }
        if matrix.nrows() < 2 {
            return Err(Error::Domain("dimension must be at least 2".into()));
        }
        if matrix
            .iter()
            .any(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(Error::Domain("basis entries must be finite".into()));
        }
        Ok(Basis { matrix })
    }

    pub fn identity(d: usize) -> Basis {
        Basis {
            matrix: DMatrix::identity(d, d),
        }
    }

    /// Columns `(1/√d) ω^(jk)` with `ω = e^(2πi/d)`.
    pub fn fourier(d: usize) -> Basis {
        let scale = 1.0 / (d as f64).sqrt();
        let matrix = DMatrix::from_fn(d, d, |j, k| {
            let angle = 2.0 * std::f64::consts::PI * ((j * k) % d) as f64 / d as f64;
            Complex64::from_polar(scale, angle)
        });
        Basis { matrix }
    }

    pub fn dimension(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.matrix
    }

    pub fn into_matrix(self) -> DMatrix<Complex64> {
        self.matrix
    }

    pub fn column(&self, j: usize) -> Vec<Complex64> {
        self.matrix.column(j).iter().copied().collect()
    }

    /// Multiplies each column by a unit phase so that its first entry of
    /// non-negligible modulus is real and positive.
    pub fn canonical_phase(&self) -> Basis {
        let mut matrix = self.matrix.clone();
        for mut col in matrix.column_iter_mut() {
            let Some(lead) = col.iter().find(|z| z.norm() > 1e-12).copied() else {
                continue;
            };
            let phase = lead.conj() / lead.norm();
            for z in col.iter_mut() {
                *z *= phase;
            }
            // exact zero imaginary part on the leading entry
            if let Some(z) = col.iter_mut().find(|z| z.norm() > 1e-12) {
                *z = Complex64::new(z.norm(), 0.0);
            }
        }
        Basis { matrix }
    }
}

/// `⟨a|b⟩ = Σ conj(a_k) b_k`, accumulated in index order so that
/// `inner(b, a)` is the exact conjugate of `inner(a, b)`.
pub(crate) fn inner(
    a: &DMatrix<Complex64>,
    i: usize,
    b: &DMatrix<Complex64>,
    j: usize,
) -> Complex64 {
    a.column(i)
        .iter()
        .zip(b.column(j).iter())
        .fold(Complex64::new(0.0, 0.0), |acc, (x, y)| acc + x.conj() * y)
}

/// An ordered collection of bases of one dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct MubSet {
    dimension: usize,
    bases: Vec<Basis>,
}

impl MubSet {
    pub fn new(dimension: usize, bases: Vec<Basis>) -> Result<MubSet> {
        if dimension < 2 {
            return Err(Error::Domain("dimension must be at least 2".into()));
        }
        if let Some(b) = bases.iter().find(|b| b.dimension() != dimension) {
            return Err(Error::Domain(format!(
                "basis of dimension {} in a set of dimension {dimension}",
                b.dimension()
            )));
        }
        Ok(MubSet { dimension, bases })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn bases(&self) -> &[Basis] {
        &self.bases
    }

    pub fn len(&self) -> usize {
        self.bases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bases.is_empty()
    }

    pub fn into_bases(self) -> Vec<Basis> {
        self.bases
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DeviationReport {
    pub deviation: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PairResult {
    pub first: usize,
    pub second: usize,
    pub deviation: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct UnbiasednessReport {
    pub dimension: usize,
    pub basis_count: usize,
    pub tolerance: f64,
    pub pair_results: Vec<PairResult>,
    pub orthonormality_deviation: Vec<f64>,
    pub overall_max_deviation: f64,
    pub pass: bool,
}

fn check_tol(tol: f64) -> Result<()> {
    if tol > 0.0 && tol.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "tolerance must be positive, got {tol}"
        )))
    }
}

fn orthonormality_deviation(b: &Basis) -> f64 {
    let m = b.matrix();
    let d = b.dimension();
    let mut worst = 0.0f64;
    for i in 0..d {
        for j in 0..d {
            let target = if i == j { 1.0 } else { 0.0 };
            worst = worst.max((inner(m, i, m, j) - target).norm());
        }
    }
    worst
}

fn pair_deviation(a: &Basis, b: &Basis) -> f64 {
    let d = a.dimension();
    let target = 1.0 / (d as f64).sqrt();
    let mut worst = 0.0f64;
    for i in 0..d {
        for j in 0..d {
            worst = worst.max((inner(a.matrix(), i, b.matrix(), j).norm() - target).abs());
        }
    }
    worst
}

/// `max |⟨v_i|v_j⟩ − δ_ij|` against `tol`.
pub fn check_orthonormal(b: &Basis, tol: f64) -> Result<DeviationReport> {
    check_tol(tol)?;
    let deviation = orthonormality_deviation(b);
    Ok(DeviationReport {
        deviation,
        pass: deviation <= tol,
    })
}

/// `max | |⟨a_i|b_j⟩| − 1/√d |` over all `d²` cross pairs, against `tol`.
pub fn check_pair_unbiased(a: &Basis, b: &Basis, tol: f64) -> Result<DeviationReport> {
    check_tol(tol)?;
    if a.dimension() != b.dimension() {
        return Err(Error::Domain(format!(
            "dimensions differ: {} vs {}",
            a.dimension(),
            b.dimension()
        )));
    }
    let deviation = pair_deviation(a, b);
    Ok(DeviationReport {
        deviation,
        pass: deviation <= tol,
    })
}

/// Orthonormality of every basis and unbiasedness of every unordered pair.
///
/// More than `d + 1` bases is a [`Error::BoundViolation`]: no such set exists.
pub fn check_mub_set(s: &MubSet, tol: f64) -> Result<UnbiasednessReport> {
    check_tol(tol)?;
    let d = s.dimension();
    if s.len() > d + 1 {
        return Err(Error::BoundViolation {
            dimension: d,
            count: s.len(),
            max: d + 1,
        });
    }
    let bases = s.bases();
    let orthonormality_deviation: Vec<f64> = bases.iter().map(orthonormality_deviation).collect();
    let mut pair_results = Vec::new();
    for i in 0..bases.len() {
        for j in i + 1..bases.len() {
            pair_results.push(PairResult {
                first: i,
                second: j,
                deviation: pair_deviation(&bases[i], &bases[j]),
            });
        }
    }
    let overall_max_deviation = orthonormality_deviation
        .iter()
        .copied()
        .chain(pair_results.iter().map(|p| p.deviation))
        .fold(0.0f64, f64::max);
    Ok(UnbiasednessReport {
        dimension: d,
        basis_count: s.len(),
        tolerance: tol,
        pair_results,
        orthonormality_deviation,
        overall_max_deviation,
        pass: overall_max_deviation <= tol,
    })
}

/// Parameter counting for state determination with non-degenerate
/// measurements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MeasurementBudget {
    pub dimension: u64,
    pub density_matrix_parameters: u64,
    pub outcomes_per_measurement: u64,
    pub measurements_needed: u64,
}

/// `(d² − 1, d − 1, (d² − 1)/(d − 1))`, cross-checked against the number of
/// points on a projective line over a field of order `d`.
pub fn measurement_budget(d: u64) -> Result<MeasurementBudget> {
    if d < 2 {
        return Err(Error::Domain(format!(
            "dimension must be at least 2, got {d}"
        )));
    }
    let density_matrix_parameters = d * d - 1;
    let outcomes_per_measurement = d - 1;
    let measurements_needed = density_matrix_parameters / outcomes_per_measurement;
    assert_eq!(density_matrix_parameters % outcomes_per_measurement, 0);
    assert_eq!(
        measurements_needed as u128,
        gaussian_binomial(1, 0, d)?,
        "measurement count must equal the point count of a projective line"
    );
    Ok(MeasurementBudget {
        dimension: d,
        density_matrix_parameters,
        outcomes_per_measurement,
        measurements_needed,
    })
}
