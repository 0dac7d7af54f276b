//! Generators for the complex, Weyl–Heisenberg and real equiangular-line
//! polynomial systems.

mod complex;
mod real;
mod weyl;
mod wh;

use std::collections::BTreeMap;
use std::sync::Arc;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::exact::{CycloNum, Field, FieldDesc, Rational};
use crate::numeric::BigComplex;
use crate::polyring::{MonomialOrder, Poly, PolyError, Ring, TermJson};

pub use complex::gen_complex_full;
pub use real::{gen_real_system, Alpha, SignMatrix};
pub use weyl::{apply_weyl, apply_weyl_big, WeylIndex};
pub use wh::{gen_wh_system, overlap_polys};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SicgenError {
    #[error("invalid dimension {0}")]
    Dimension(usize),
    #[error("invalid number of lines {0}")]
    LineCount(usize),
    #[error("invalid sign matrix: {0}")]
    SignMatrix(String),
    #[error("invalid angle: {0}")]
    Alpha(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SystemKind {
    ComplexFull,
    WhFiducial,
    RealLines,
}

/// Equations over whichever field the generator settled on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Equations {
    Rational(Vec<Poly<Rational>>),
    Cyclotomic(Vec<Poly<CycloNum>>),
}

impl Equations {
    pub fn len(&self) -> usize {
        match self {
            Equations::Rational(v) => v.len(),
            Equations::Cyclotomic(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn vars(&self) -> Vec<String> {
        match self {
            Equations::Rational(v) => v.first().map(|p| p.ring().vars().to_vec()),
            Equations::Cyclotomic(v) => v.first().map(|p| p.ring().vars().to_vec()),
        }
        .unwrap_or_default()
    }

    pub fn field(&self) -> FieldDesc {
        match self {
            Equations::Rational(_) => FieldDesc::Rational,
            Equations::Cyclotomic(v) => v.first().map_or(FieldDesc::Cyclotomic(1), |p| p.ring().field_desc()),
        }
    }

    /// Each equation's value at a complex point, double precision.
    pub fn eval_complex64(&self, point: &[Complex64]) -> Vec<Complex64> {
        match self {
            Equations::Rational(v) => v.iter().map(|p| p.eval_complex64(point)).collect(),
            Equations::Cyclotomic(v) => v.iter().map(|p| p.eval_complex64(point)).collect(),
        }
    }

    /// Each equation's value at an arbitrary-precision point.
    pub fn eval_big(&self, point: &[BigComplex], prec: usize) -> Vec<BigComplex> {
        match self {
            Equations::Rational(v) => v.iter().map(|p| p.eval_big(point, prec)).collect(),
            Equations::Cyclotomic(v) => v.iter().map(|p| p.eval_big(point, prec)).collect(),
        }
    }

    pub fn render(&self) -> Vec<String> {
        match self {
            Equations::Rational(v) => v.iter().map(ToString::to_string).collect(),
            Equations::Cyclotomic(v) => v.iter().map(ToString::to_string).collect(),
        }
    }

    fn to_json(&self) -> Vec<Vec<TermJson>> {
        match self {
            Equations::Rational(v) => v.iter().map(TermJson::list).collect(),
            Equations::Cyclotomic(v) => v.iter().map(TermJson::list).collect(),
        }
    }

    /// Move cyclotomic equations to ℚ when every coefficient is rational.
    fn downgrade(self) -> Self {
        match self {
            Equations::Cyclotomic(v) => {
                let Some(first) = v.first() else { return Equations::Cyclotomic(v) };
                let ring = Ring::<Rational>::new(first.ring().vars().to_vec(), (), first.ring().order());
                match v.iter().map(|p| p.to_rational(&ring)).collect::<Option<Vec<_>>>() {
                    Some(r) => Equations::Rational(r),
                    None => Equations::Cyclotomic(v),
                }
            }
            other => other,
        }
    }
}

/// Provenance and right-hand sides of a generated system.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SystemMetadata {
    pub kind: SystemKind,
    pub d: usize,
    #[serde(rename = "N")]
    pub n_lines: usize,
    /// Right-hand side per equation class, as exact scalar text.
    pub rhs: BTreeMap<String, String>,
    pub equation_tag: String,
    /// Label of each emitted equation, in order.
    pub labels: Vec<String>,
    /// Index pairs whose polynomials coincided and were emitted once.
    pub merged_classes: Vec<Vec<[usize; 2]>>,
    /// Set for variants that go beyond the squared-modulus formulation.
    pub extension: bool,
}

/// A generated system: equations already in `p − rhs = 0` form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolySystem {
    pub equations: Equations,
    pub metadata: SystemMetadata,
}

impl PolySystem {
    pub fn kind(&self) -> SystemKind {
        self.metadata.kind
    }

    pub fn d(&self) -> usize {
        self.metadata.d
    }

    pub fn n_lines(&self) -> usize {
        self.metadata.n_lines
    }

    pub fn vars(&self) -> Vec<String> {
        self.equations.vars()
    }

    pub fn field(&self) -> FieldDesc {
        self.equations.field()
    }

    pub fn to_file(&self) -> SystemFile {
        SystemFile {
            vars: self.vars(),
            field: self.field(),
            equations: self.equations.to_json(),
            metadata: self.metadata.clone(),
        }
    }

    /// Largest |equation value| at `point`.
    pub fn max_residual(&self, point: &[BigComplex], prec: usize) -> f64 {
        self.equations.eval_big(point, prec).iter().map(|v| v.abs().to_f64()).fold(0.0, f64::max)
    }
}

/// JSON form of a [`PolySystem`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SystemFile {
    pub vars: Vec<String>,
    pub field: FieldDesc,
    pub equations: Vec<Vec<TermJson>>,
    pub metadata: SystemMetadata,
}

impl SystemFile {
    /// Rebuild the system; polynomials use lex order.
    pub fn to_system(&self) -> Result<PolySystem, PolyError> {
        let equations = match self.field {
            FieldDesc::Rational => {
                let ring = Ring::<Rational>::new(self.vars.clone(), (), MonomialOrder::Lex);
                Equations::Rational(parse_all(&ring, &self.equations)?)
            }
            FieldDesc::Cyclotomic(_) => {
                let tag = CycloNum::tag_from_desc(&self.field)?;
                let ring = Ring::<CycloNum>::new(self.vars.clone(), tag, MonomialOrder::Lex);
                Equations::Cyclotomic(parse_all(&ring, &self.equations)?)
            }
        };
        Ok(PolySystem { equations, metadata: self.metadata.clone() })
    }
}

fn parse_all<K: Field>(ring: &Arc<Ring<K>>, eqs: &[Vec<TermJson>]) -> Result<Vec<Poly<K>>, PolyError> {
    eqs.iter().map(|t| TermJson::to_poly(ring, t)).collect()
}

/// `Σ_k x_k · y_k` helper used by the generators.
fn dot<K: Field>(xs: &[Poly<K>], ys: &[Poly<K>]) -> Poly<K> {
    let ring = xs[0].ring();
    xs.iter().zip(ys).fold(Poly::zero(ring), |acc, (x, y)| acc.add(&x.mul(y)))
}
