use std::sync::Arc;

use serde::{Deserialize, Serialize, Serializer};

use super::{ser_big_real, VerifyError};
use crate::exact::{Field, Rational};
use crate::numeric::{pow2, BigComplex, BigReal, DEFAULT_PRECISION};
use crate::polyring::{Monomial, MonomialOrder, Poly, Ring, Term};
use crate::sicgen::{SicgenError, SignMatrix};
use crate::solver::roots_of_coeffs;

/// Sign pattern of a real Gram matrix `G = I + α S`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SeidelRepr", into = "SeidelRepr")]
pub struct SeidelSpec {
    signs: SignMatrix,
}

#[derive(Serialize, Deserialize)]
struct SeidelRepr {
    #[serde(rename = "N")]
    n: usize,
    signs: SignMatrix,
}

impl TryFrom<SeidelRepr> for SeidelSpec {
    type Error = SicgenError;
    fn try_from(r: SeidelRepr) -> Result<Self, SicgenError> {
        if r.signs.size() != r.n {
            return Err(SicgenError::SignMatrix(format!("N = {} but matrix has size {}", r.n, r.signs.size())));
        }
        Ok(SeidelSpec { signs: r.signs })
    }
}

impl From<SeidelSpec> for SeidelRepr {
    fn from(s: SeidelSpec) -> Self {
        SeidelRepr { n: s.signs.size(), signs: s.signs }
    }
}

impl SeidelSpec {
    pub fn new(signs: SignMatrix) -> Self {
        SeidelSpec { signs }
    }

    pub fn n(&self) -> usize {
        self.signs.size()
    }

    pub fn signs(&self) -> &SignMatrix {
        &self.signs
    }
}

/// Dense univariate polynomial over ℚ, lowest degree first, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly(Vec<Rational>);

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        UniPoly(coeffs)
    }

    pub fn zero() -> Self {
        UniPoly(vec![])
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    fn lead(&self) -> &Rational {
        self.0.last().expect("nonzero polynomial")
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.0.len().max(other.0.len());
        let get = |v: &[Rational], i: usize| v.get(i).cloned().unwrap_or_else(Rational::zero);
        Self::new((0..n).map(|i| &get(&self.0, i) + &get(&other.0, i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&Rational::from_integer(-1)))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.0.iter().map(|x| x * c).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rational::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Self::new(out)
    }

    /// Quotient and remainder; `other` must be nonzero.
    pub fn div_rem(&self, other: &Self) -> (Self, Self) {
        let dd = other.degree().expect("division by zero polynomial");
        let mut rem = self.0.clone();
        let mut quot = vec![Rational::zero(); self.0.len().saturating_sub(dd)];
        let lead = other.lead();
        while rem.len() > dd && !rem.is_empty() {
            let k = rem.len() - 1 - dd;
            let c = rem.last().unwrap() / lead;
            for (i, b) in other.0.iter().enumerate() {
                rem[k + i] = &rem[k + i] - &(&c * b);
            }
            quot[k] = c;
            rem.pop();
            while rem.last().is_some_and(Rational::is_zero) {
                rem.pop();
            }
        }
        (Self::new(quot), Self::new(rem))
    }

    fn exact_div(&self, other: &Self) -> Self {
        let (q, r) = self.div_rem(other);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn derivative(&self) -> Self {
        Self::new(self.0.iter().enumerate().skip(1).map(|(k, c)| c * &Rational::from_integer(k as i64)).collect())
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.scale(&Rational::one().div(a.lead()).expect("nonzero"))
        }
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.0.iter().rev().fold(Rational::zero(), |acc, c| &(&acc * x) + c)
    }

    /// Yun's square-free decomposition: `(factor, multiplicity)` pairs with
    /// nonconstant factors.
    pub fn squarefree(&self) -> Vec<(UniPoly, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let df = self.derivative();
        let a0 = self.gcd(&df);
        let mut b = self.exact_div(&a0);
        let mut c = df.exact_div(&a0);
        let mut d = c.sub(&b.derivative());
        let mut i = 1;
        while b.degree().unwrap_or(0) > 0 {
            let a = b.gcd(&d);
            b = b.exact_div(&a);
            c = d.exact_div(&a);
            d = c.sub(&b.derivative());
            if a.degree().unwrap_or(0) > 0 {
                out.push((a, i));
            }
            i += 1;
        }
        out
    }

    pub fn to_poly(&self, ring: &Arc<Ring<Rational>>) -> Poly<Rational> {
        let terms = self
            .0
            .iter()
            .enumerate()
            .map(|(k, c)| Term { coeff: c.clone(), mono: Monomial::var(ring.arity(), 0, k as u16) })
            .collect();
        Poly::from_terms(ring, terms)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AlphaCandidate {
    #[serde(serialize_with = "ser_big_real")]
    pub value: BigReal,
    pub multiplicity: usize,
    /// Square-free factor of the determinant the root belongs to.
    pub factor: String,
    /// Exact value when the factor is linear.
    pub exact: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OddIntegerFlag {
    #[serde(serialize_with = "ser_big_real")]
    pub alpha: BigReal,
    #[serde(serialize_with = "ser_big_real")]
    pub inverse: BigReal,
    pub odd_integer: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GramAnalysis {
    #[serde(rename = "N")]
    pub n: usize,
    pub d: usize,
    #[serde(serialize_with = "ser_poly")]
    pub det_poly: Poly<Rational>,
    pub admissible_alphas: Vec<AlphaCandidate>,
    pub odd_integer_flags: Vec<OddIntegerFlag>,
}

fn ser_poly<S: Serializer>(p: &Poly<Rational>, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_string())
}

/// Whether `1/α` is an odd integer, to within 2⁻⁴⁰.
pub fn odd_integer_flag(alpha: &BigReal) -> OddIntegerFlag {
    let prec = alpha.precision();
    let inverse = &BigReal::one(prec) / alpha;
    let nearest = inverse.to_f64().round();
    let odd_integer =
        nearest as i64 % 2 != 0 && (&inverse - &BigReal::from_f64(nearest, prec)).abs() <= pow2(-40, prec);
    OddIntegerFlag { alpha: alpha.clone(), inverse, odd_integer }
}

/// `det(I + α S)` as an exact polynomial in α, by fraction-free elimination.
pub fn seidel_determinant(spec: &SeidelSpec) -> UniPoly {
    let n = spec.n();
    let alpha = UniPoly::new(vec![Rational::zero(), Rational::one()]);
    let mut m: Vec<Vec<UniPoly>> = (0..n)
        .map(|j| {
            (0..n)
                .map(|l| {
                    if j == l {
                        UniPoly::constant(Rational::one())
                    } else {
                        alpha.scale(&Rational::from_integer(spec.signs().get(j, l) as i64))
                    }
                })
                .collect()
        })
        .collect();
    let mut negate = false;
    let mut prev = UniPoly::constant(Rational::one());
    for k in 0..n.saturating_sub(1) {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return UniPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num.exact_div(&prev);
            }
        }
        prev = m[k][k].clone();
    }
    let det = if n == 0 { UniPoly::constant(Rational::one()) } else { m[n - 1][n - 1].clone() };
    if negate {
        det.scale(&Rational::from_integer(-1))
    } else {
        det
    }
}

/// Exact determinant, the roots in (0, 1) whose multiplicity allows rank
/// ≤ d, and odd-integer flags when N > 2d.
pub fn gram_analysis(spec: &SeidelSpec, d: usize) -> Result<GramAnalysis, VerifyError> {
    let n = spec.n();
    if n <= d {
        return Err(VerifyError::NotOverdetermined { n, d });
    }
    let prec = DEFAULT_PRECISION;
    let det = seidel_determinant(spec);
    let ring = Ring::<Rational>::rational(&["alpha"], MonomialOrder::Lex);
    let zero = BigReal::zero(prec);
    let one = BigReal::one(prec);
    let imag_tol = pow2(-(prec as i64) / 2, prec);
    let mut admissible = Vec::new();
    for (factor, mult) in det.squarefree() {
        if mult < n - d {
            continue;
        }
        let exact = (factor.degree() == Some(1)).then(|| {
            let c = factor.coeffs();
            (-&c[0]).div(&c[1]).expect("nonzero leading coefficient")
        });
        let coeffs: Vec<BigComplex> = factor.coeffs().iter().map(|c| c.embed(prec)).collect();
        for root in roots_of_coeffs(&coeffs, prec) {
            let is_real = root.im.abs() <= &imag_tol * &root.re.abs().max(&one);
            if is_real && root.re > zero && root.re < one {
                admissible.push(AlphaCandidate {
                    value: root.re,
                    multiplicity: mult,
                    factor: factor.to_poly(&ring).to_string(),
                    exact: exact.as_ref().map(ToString::to_string),
                });
            }
        }
    }
    let mut flags = Vec::new();
    if n > 2 * d {
        flags = admissible.iter().map(|c| odd_integer_flag(&c.value)).collect();
    }
    Ok(GramAnalysis { n, d, det_poly: det.to_poly(&ring), admissible_alphas: admissible, odd_integer_flags: flags })
}
