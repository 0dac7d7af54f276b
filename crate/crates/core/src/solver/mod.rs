//! Numeric solving of zero-dimensional lex bases and classification of the
//! resulting points.

mod classify;
mod roots;
mod triangular;

use serde::{Deserialize, Serialize};

use crate::numeric::{BigComplex, BigReal, DEFAULT_PRECISION};
use crate::par::Execution;

pub use classify::{classify, fiducial_vector, match_zauner, tag_realness, zauner_fiducial, ZAUNER_INDICES};
pub use roots::{roots_of_coeffs, univariate_roots};
pub use triangular::solve_triangular;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SolverError {
    #[error("zero polynomial has no finite root set")]
    ZeroPolynomial,
    #[error("polynomial involves {0} variables, expected one")]
    NotUnivariate(usize),
    #[error("basis is not in lex order")]
    NotLex,
    #[error("ideal is not zero-dimensional")]
    NotZeroDimensional,
    #[error("system variables {system:?} do not match basis variables {basis:?}")]
    VariableMismatch { system: Vec<String>, basis: Vec<String> },
    #[error("specialized basis vanishes identically at variable {var}; partial point {partial:?}")]
    Degenerate { var: String, partial: Vec<[String; 2]> },
    #[error("more than {cap} solution branches")]
    BranchCap { cap: usize },
    #[error("operation requires d = {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("malformed solution file: {0}")]
    Malformed(String),
}

/// Numeric tolerances; serialized as decimal strings.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    #[serde(with = "decimal")]
    pub residual: f64,
    #[serde(with = "decimal")]
    pub cluster: f64,
    #[serde(with = "decimal")]
    pub realness: f64,
    #[serde(rename = "match", with = "decimal")]
    pub matching: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances { residual: 1e-10, cluster: 1e-25, realness: 1e-20, matching: 1e-9 }
    }
}

impl Tolerances {
    /// Every tolerance must be finite and positive.
    pub fn validate(&self) -> Result<(), String> {
        for (name, v) in [
            ("residual", self.residual),
            ("cluster", self.cluster),
            ("realness", self.realness),
            ("match", self.matching),
        ] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(format!("tolerance `{name}` must be positive, got {v}"));
            }
        }
        Ok(())
    }
}

/// `f64` as a decimal string in scientific notation.
pub mod decimal {
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format!("{x:e}"))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolveConfig {
    pub precision: usize,
    pub tolerances: Tolerances,
    /// Cap on emitted points; defaults to ten times the quotient dimension.
    pub branch_cap: Option<usize>,
    pub execution: Execution,
}

impl Default for SolveConfig {
    fn default() -> Self {
        SolveConfig {
            precision: DEFAULT_PRECISION,
            tolerances: Tolerances::default(),
            branch_cap: None,
            execution: Execution::default(),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tags {
    pub real: bool,
    pub sign_canonical: bool,
    pub orbit_id: Option<usize>,
    pub zauner_match: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolutionPoint {
    /// One value per ring variable, in variable order.
    pub coords: Vec<BigComplex>,
    /// Largest |equation| over the source system.
    pub residual: f64,
    pub tags: Tags,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub total: usize,
    pub real: usize,
    pub real_up_to_sign: usize,
    pub orbits: usize,
    pub zauner: usize,
}

impl std::fmt::Display for Counts {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "total={} real={} real_up_to_sign={} orbits={} zauner={}",
            self.total, self.real, self.real_up_to_sign, self.orbits, self.zauner
        )
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolutionSet {
    pub vars: Vec<String>,
    pub precision: usize,
    pub tolerances: Tolerances,
    pub points: Vec<SolutionPoint>,
    /// Branches dropped for exceeding the residual tolerance.
    pub rejected: usize,
}

impl SolutionSet {
    pub fn new(vars: Vec<String>, precision: usize, tolerances: Tolerances) -> Self {
        SolutionSet { vars, precision, tolerances, points: vec![], rejected: 0 }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Summary derived from the point tags.
    pub fn counts(&self) -> Counts {
        let real = self.points.iter().filter(|p| p.tags.real).count();
        let canonical = self.points.iter().filter(|p| p.tags.sign_canonical).count();
        let mut orbit_ids: Vec<usize> = self.points.iter().filter_map(|p| p.tags.orbit_id).collect();
        orbit_ids.sort_unstable();
        orbit_ids.dedup();
        Counts {
            total: self.points.len(),
            real,
            real_up_to_sign: canonical,
            orbits: orbit_ids.len(),
            zauner: self.points.iter().filter(|p| p.tags.zauner_match).count(),
        }
    }

    pub fn to_file(&self) -> SolutionFile {
        SolutionFile {
            vars: self.vars.clone(),
            precision: self.precision,
            tolerances: self.tolerances,
            points: self
                .points
                .iter()
                .map(|p| PointJson {
                    coords: p.coords.iter().map(|z| [z.re.to_decimal_string(), z.im.to_decimal_string()]).collect(),
                    residual: p.residual,
                    tags: p.tags.clone(),
                })
                .collect(),
            rejected: self.rejected,
            counts: self.counts(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PointJson {
    pub coords: Vec<[String; 2]>,
    #[serde(with = "decimal")]
    pub residual: f64,
    pub tags: Tags,
}

/// JSON form of a [`SolutionSet`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolutionFile {
    pub vars: Vec<String>,
    pub precision: usize,
    pub tolerances: Tolerances,
    pub points: Vec<PointJson>,
    pub rejected: usize,
    pub counts: Counts,
}

impl SolutionFile {
    /// Rebuild the set; fails if the stored counts disagree with the tags.
    pub fn to_set(&self) -> Result<SolutionSet, SolverError> {
        let prec = self.precision;
        let parse =
            |s: &str| BigReal::parse(s, prec).ok_or_else(|| SolverError::Malformed(format!("bad number `{s}`")));
        let mut points = Vec::with_capacity(self.points.len());
        for p in &self.points {
            let coords = p
                .coords
                .iter()
                .map(|[re, im]| Ok(BigComplex::new(parse(re)?, parse(im)?)))
                .collect::<Result<Vec<_>, SolverError>>()?;
            if coords.len() != self.vars.len() {
                return Err(SolverError::Malformed("coordinate count differs from variable count".into()));
            }
            points.push(SolutionPoint { coords, residual: p.residual, tags: p.tags.clone() });
        }
        let set = SolutionSet {
            vars: self.vars.clone(),
            precision: prec,
            tolerances: self.tolerances,
            points,
            rejected: self.rejected,
        };
        if set.counts() != self.counts {
            return Err(SolverError::Malformed("stored counts do not match point tags".into()));
        }
        Ok(set)
    }
}
