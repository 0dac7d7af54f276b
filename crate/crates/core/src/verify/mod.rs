//! Independent numeric and exact checks on candidate line sets.

mod fiducial;
mod gram;
mod real;
mod unit;

use serde::Serializer;

use crate::numeric::{BigComplex, BigReal};

pub use fiducial::{
    normalized_overlaps, verify_equiangular_complex, verify_fiducial, EquiangularCheck, FiducialCheck, OverlapEntry,
    OverlapReport,
};
pub use gram::{
    gram_analysis, odd_integer_flag, seidel_determinant, AlphaCandidate, GramAnalysis, OddIntegerFlag, SeidelSpec,
    UniPoly,
};
pub use real::{seidel_gram, spectral_reconstruct, verify_equiangular_real, RealCheck, Reconstruction};
pub use unit::{reciprocity_check, unit_certify, Reciprocity, UnitCertificate};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum VerifyError {
    #[error("zero vector")]
    ZeroVector,
    #[error("expected {expected} vectors, got {got}")]
    Cardinality { expected: usize, got: usize },
    #[error("vector {index} has length {got}, expected {expected}")]
    VectorLength { index: usize, expected: usize, got: usize },
    #[error("need at least {min} vectors, got {got}")]
    TooFew { min: usize, got: usize },
    #[error("polynomial is zero or not univariate")]
    NotUnivariate,
    #[error("gram analysis needs N > d, got N = {n}, d = {d}")]
    NotOverdetermined { n: usize, d: usize },
    #[error("matrix is not symmetric (deviation {0:e})")]
    NotSymmetric(f64),
    #[error("matrix is not square")]
    NotSquare,
    #[error("matrix is not positive semi-definite (eigenvalue {0:e})")]
    NotPsd(f64),
    #[error("numeric rank {rank} exceeds d = {d}")]
    RankTooLarge { rank: usize, d: usize },
}

fn ser_big_real<S: Serializer>(x: &BigReal, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_decimal_string())
}

fn ser_big_complex<S: Serializer>(z: &BigComplex, s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeTuple;
    let mut t = s.serialize_tuple(2)?;
    t.serialize_element(&z.re.to_decimal_string())?;
    t.serialize_element(&z.im.to_decimal_string())?;
    t.end()
}
