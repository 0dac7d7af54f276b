use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{dot, Equations, PolySystem, SicgenError, SystemKind, SystemMetadata};
use crate::exact::Rational;
use crate::polyring::{MonomialOrder, Poly, Ring};

/// The common angle of a real line set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Alpha {
    /// α itself is rational.
    Value(Rational),
    /// Only α² is given (α = √q), e.g. `sqrt(1/5)`.
    Squared(Rational),
    /// α is an extra ring variable named `alpha`.
    Symbolic,
}

impl Alpha {
    /// α² as exact text, or `alpha^2`.
    fn squared_text(&self) -> String {
        match self {
            Alpha::Value(a) => (a * a).to_string(),
            Alpha::Squared(q) => q.to_string(),
            Alpha::Symbolic => "alpha^2".to_string(),
        }
    }

    pub fn to_f64(&self) -> Option<f64> {
        match self {
            Alpha::Value(a) => Some(a.to_f64()),
            Alpha::Squared(q) => Some(q.to_f64().sqrt()),
            Alpha::Symbolic => None,
        }
    }
}

impl fmt::Display for Alpha {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Alpha::Value(a) => write!(f, "{a}"),
            Alpha::Squared(q) => write!(f, "sqrt({q})"),
            Alpha::Symbolic => f.write_str("alpha"),
        }
    }
}

impl FromStr for Alpha {
    type Err = SicgenError;

    /// Accepts `p/q`, `sqrt(p/q)` or `alpha`.
    fn from_str(s: &str) -> Result<Self, SicgenError> {
        let s = s.trim();
        let bad = |_| SicgenError::Alpha(s.to_string());
        if s == "alpha" || s == "symbolic" {
            return Ok(Alpha::Symbolic);
        }
        if let Some(inner) = s.strip_prefix("sqrt(").and_then(|r| r.strip_suffix(')')) {
            let q: Rational = inner.parse().map_err(bad)?;
            if q.is_negative() {
                return Err(SicgenError::Alpha(s.to_string()));
            }
            return Ok(Alpha::Squared(q));
        }
        Ok(Alpha::Value(s.parse().map_err(bad)?))
    }
}

/// Symmetric N×N matrix with zero diagonal and ±1 elsewhere.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<i8>>", into = "Vec<Vec<i8>>")]
pub struct SignMatrix(Vec<Vec<i8>>);

impl SignMatrix {
    pub fn new(rows: Vec<Vec<i8>>) -> Result<Self, SicgenError> {
        let n = rows.len();
        for (j, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(SicgenError::SignMatrix(format!("row {j} has length {}, expected {n}", row.len())));
            }
            for (l, &s) in row.iter().enumerate() {
                if j == l && s != 0 {
                    return Err(SicgenError::SignMatrix(format!("diagonal entry ({j},{j}) is {s}")));
                }
                if j != l && s != 1 && s != -1 {
                    return Err(SicgenError::SignMatrix(format!("entry ({j},{l}) is {s}, expected ±1")));
                }
                if rows[l][j] != s {
                    return Err(SicgenError::SignMatrix(format!("not symmetric at ({j},{l})")));
                }
            }
        }
        Ok(SignMatrix(rows))
    }

    /// Matrix from the strictly upper triangle, row by row.
    pub fn from_upper(n: usize, upper: &[i8]) -> Result<Self, SicgenError> {
        if upper.len() != n * n.saturating_sub(1) / 2 {
            return Err(SicgenError::SignMatrix(format!("expected {} upper entries", n * n.saturating_sub(1) / 2)));
        }
        let mut rows = vec![vec![0i8; n]; n];
        let pairs = (0..n).flat_map(|j| (j + 1..n).map(move |l| (j, l)));
        for ((j, l), &s) in pairs.zip(upper) {
            rows[j][l] = s;
            rows[l][j] = s;
        }
        Self::new(rows)
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }

    pub fn get(&self, j: usize, l: usize) -> i8 {
        self.0[j][l]
    }

    pub fn rows(&self) -> &[Vec<i8>] {
        &self.0
    }
}

impl TryFrom<Vec<Vec<i8>>> for SignMatrix {
    type Error = SicgenError;
    fn try_from(rows: Vec<Vec<i8>>) -> Result<Self, SicgenError> {
        SignMatrix::new(rows)
    }
}

impl From<SignMatrix> for Vec<Vec<i8>> {
    fn from(s: SignMatrix) -> Self {
        s.0
    }
}

/// Real system for N unit vectors `u_j ∈ ℝ^d` with common angle α.
///
/// Without signs: `C_{j,l}² − 1` on the diagonal and `C_{j,l}² − α²`
/// elsewhere. With a sign matrix the stronger linear forms `C_{j,j} − 1`
/// and `C_{j,l} − s_{jl}·α` are emitted instead; that variant is marked as
/// an extension in the metadata.
pub fn gen_real_system(
    d: usize,
    n_lines: usize,
    alpha: &Alpha,
    signs: Option<&SignMatrix>,
) -> Result<PolySystem, SicgenError> {
    if d < 1 {
        return Err(SicgenError::Dimension(d));
    }
    if n_lines < 1 {
        return Err(SicgenError::LineCount(n_lines));
    }
    if let Some(s) = signs {
        if s.size() != n_lines {
            return Err(SicgenError::SignMatrix(format!("size {} does not match N = {n_lines}", s.size())));
        }
        if matches!(alpha, Alpha::Squared(_)) {
            return Err(SicgenError::Alpha("the sign-resolved system needs α itself, not only α²".into()));
        }
    }
    let mut vars: Vec<String> = (1..=n_lines).flat_map(|j| (1..=d).map(move |k| format!("u{j}_{k}"))).collect();
    if *alpha == Alpha::Symbolic {
        vars.push("alpha".to_string());
    }
    let ring = Ring::<Rational>::new(vars, (), MonomialOrder::Lex);
    let u: Vec<Vec<Poly<Rational>>> =
        (0..n_lines).map(|j| (0..d).map(|k| Poly::var(&ring, j * d + k)).collect()).collect();
    let alpha_poly = match alpha {
        Alpha::Value(a) => Poly::from_rational(&ring, a),
        Alpha::Squared(_) => Poly::zero(&ring),
        Alpha::Symbolic => Poly::var(&ring, n_lines * d),
    };
    let alpha_sq = match alpha {
        Alpha::Squared(q) => Poly::from_rational(&ring, q),
        _ => alpha_poly.mul(&alpha_poly),
    };
    let one = Poly::one(&ring);

    let mut equations = Vec::new();
    let mut labels = Vec::new();
    for j in 0..n_lines {
        for l in j..n_lines {
            let c = dot(&u[j], &u[l]);
            let eq = match (signs, j == l) {
                (None, true) => c.mul(&c).sub(&one),
                (None, false) => c.mul(&c).sub(&alpha_sq),
                (Some(_), true) => c.sub(&one),
                (Some(s), false) => {
                    let sa = if s.get(j, l) > 0 { alpha_poly.clone() } else { alpha_poly.neg() };
                    c.sub(&sa)
                }
            };
            equations.push(eq);
            labels.push(format!("p_{}_{}", j + 1, l + 1));
        }
    }
    let mut rhs = BTreeMap::new();
    if signs.is_some() {
        rhs.insert("C_j_j".to_string(), "1".to_string());
        rhs.insert("C_j_l".to_string(), format!("s_j_l*({alpha})"));
    } else {
        rhs.insert("p_j_j".to_string(), "1".to_string());
        rhs.insert("p_j_l".to_string(), alpha.squared_text());
    }
    rhs.insert("alpha".to_string(), alpha.to_string());
    let metadata = SystemMetadata {
        kind: SystemKind::RealLines,
        d,
        n_lines,
        rhs,
        equation_tag: if signs.is_some() { "real-gram-signed" } else { "real-gram-squared" }.to_string(),
        labels,
        merged_classes: vec![],
        extension: signs.is_some(),
    };
    Ok(PolySystem { equations: Equations::Rational(equations), metadata })
}
