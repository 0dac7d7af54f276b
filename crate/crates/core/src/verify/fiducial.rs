use num_complex::Complex64;
use serde::Serialize;

use super::{ser_big_complex, ser_big_real, VerifyError};
use crate::numeric::{BigComplex, BigReal};
use crate::par::{self, Execution};
use crate::sicgen::{apply_weyl_big, WeylIndex};

/// One normalized overlap `√(d+1)·⟨v_{a,b}, v⟩`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OverlapEntry {
    pub a: usize,
    pub b: usize,
    #[serde(serialize_with = "ser_big_complex")]
    pub overlap: BigComplex,
    #[serde(with = "crate::solver::decimal")]
    pub modulus_error: f64,
    /// Argument of the overlap in (−π, π].
    #[serde(serialize_with = "ser_big_real")]
    pub theta: BigReal,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OverlapReport {
    pub d: usize,
    /// All `(a, b) ≠ (0, 0)` in (a, b) order.
    pub entries: Vec<OverlapEntry>,
}

impl OverlapReport {
    pub fn max_modulus_error(&self) -> f64 {
        self.entries.iter().map(|e| e.modulus_error).fold(0.0, f64::max)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FiducialCheck {
    pub ok: bool,
    /// Worst `| |⟨v_{a,b}, v⟩|² − 1/(d+1) |` after normalizing v.
    #[serde(with = "crate::solver::decimal")]
    pub max_dev: f64,
    pub report: OverlapReport,
}

/// Normalized overlaps of `v / ‖v‖` against its Weyl–Heisenberg images.
pub fn normalized_overlaps(v: &[BigComplex], execution: Execution) -> Result<OverlapReport, VerifyError> {
    let d = v.len();
    let prec = v.first().map_or(64, BigComplex::precision);
    let norm = v.iter().fold(BigReal::zero(prec), |acc, z| &acc + &z.norm_sqr()).sqrt();
    if norm.is_zero() {
        return Err(VerifyError::ZeroVector);
    }
    let unit: Vec<BigComplex> = v.iter().map(|z| BigComplex::new(&z.re / &norm, &z.im / &norm)).collect();
    let scale = BigReal::from_i64(d as i64 + 1, prec).sqrt();
    let indices: Vec<WeylIndex> = WeylIndex::all(d).filter(|i| !i.is_identity()).collect();
    let entries = par::map(execution, &indices, |&idx| {
        let moved = apply_weyl_big(&unit, idx, prec);
        let ip = moved.iter().zip(&unit).fold(BigComplex::zero(prec), |acc, (x, y)| &acc + &(x * &y.conj()));
        let overlap = ip.scale(&scale);
        let modulus_error = (&overlap.abs() - &BigReal::one(prec)).abs().to_f64();
        OverlapEntry { a: idx.a, b: idx.b, theta: overlap.arg(), overlap, modulus_error }
    });
    Ok(OverlapReport { d, entries })
}

/// Checks `|⟨v_{a,b}, v⟩|² = 1/(d+1)` for every `(a, b) ≠ (0, 0)`.
pub fn verify_fiducial(v: &[BigComplex], tol: f64) -> Result<FiducialCheck, VerifyError> {
    let report = normalized_overlaps(v, Execution::default())?;
    // |overlap|² = (d+1)|⟨·,·⟩|², so divide back out
    let d1 = (v.len() + 1) as f64;
    let max_dev = report
        .entries
        .iter()
        .map(|e| {
            let prec = e.overlap.precision();
            (&e.overlap.norm_sqr() - &BigReal::one(prec)).abs().to_f64() / d1
        })
        .fold(0.0, f64::max);
    Ok(FiducialCheck { ok: max_dev <= tol, max_dev, report })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EquiangularCheck {
    pub ok: bool,
    #[serde(with = "crate::solver::decimal")]
    pub max_dev: f64,
}

/// Pairwise `|⟨u_j, u_l⟩|² ∈ {1, 1/(d+1)}` for d² vectors in ℂ^d.
pub fn verify_equiangular_complex(vectors: &[Vec<Complex64>], tol: f64) -> Result<EquiangularCheck, VerifyError> {
    let Some(first) = vectors.first() else {
        return Err(VerifyError::Cardinality { expected: 1, got: 0 });
    };
    let d = first.len();
    if vectors.len() != d * d {
        return Err(VerifyError::Cardinality { expected: d * d, got: vectors.len() });
    }
    if let Some((index, v)) = vectors.iter().enumerate().find(|(_, v)| v.len() != d) {
        return Err(VerifyError::VectorLength { index, expected: d, got: v.len() });
    }
    let off = 1.0 / (d as f64 + 1.0);
    let devs = par::map_range(Execution::default(), vectors.len(), |j| {
        (j..vectors.len())
            .map(|l| {
                let ip: Complex64 = vectors[j].iter().zip(&vectors[l]).map(|(x, y)| x * y.conj()).sum();
                let want = if j == l { 1.0 } else { off };
                (ip.norm_sqr() - want).abs()
            })
            .fold(0.0, f64::max)
    });
    let max_dev = devs.into_iter().fold(0.0, f64::max);
    Ok(EquiangularCheck { ok: max_dev <= tol, max_dev })
}
