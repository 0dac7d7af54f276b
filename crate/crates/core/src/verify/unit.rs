use serde::Serialize;

use super::VerifyError;
use crate::exact::Rational;
use crate::polyring::Poly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Reciprocity {
    pub reciprocal: bool,
    pub even_degree: bool,
}

/// Whether `x^n f(1/x) = f`, i.e. the coefficient list is a palindrome.
pub fn reciprocity_check(f: &Poly<Rational>) -> Result<Reciprocity, VerifyError> {
    let coeffs = dense(f)?;
    let reciprocal = coeffs.iter().eq(coeffs.iter().rev());
    Ok(Reciprocity { reciprocal, even_degree: (coeffs.len() - 1) % 2 == 0 })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UnitCertificate {
    pub unit: bool,
    pub reasons: Vec<String>,
    /// The certificate assumes `f` is the minimal polynomial of the root.
    pub assumes_irreducible: bool,
}

/// Monic, integral and either `x ± 1` or reciprocal.
pub fn unit_certify(f: &Poly<Rational>) -> Result<UnitCertificate, VerifyError> {
    let coeffs = dense(f)?;
    let mut reasons = Vec::new();
    let lead = coeffs.last().expect("nonzero polynomial");
    if *lead != Rational::one() {
        reasons.push(format!("not monic: leading coefficient {lead}"));
    }
    if let Some(c) = coeffs.iter().find(|c| !c.is_integer()) {
        reasons.push(format!("non-integer coefficient {c}"));
    }
    let linear_unit = coeffs.len() == 2 && coeffs[1] == Rational::one() && coeffs[0].abs() == Rational::one();
    if !linear_unit && !reciprocity_check(f)?.reciprocal {
        reasons.push(format!("not reciprocal and not x ± 1: constant term {}", coeffs[0]));
    }
    Ok(UnitCertificate { unit: reasons.is_empty(), reasons, assumes_irreducible: true })
}

fn dense(f: &Poly<Rational>) -> Result<Vec<Rational>, VerifyError> {
    if f.is_zero() {
        return Err(VerifyError::NotUnivariate);
    }
    match f.support().as_slice() {
        [] => Ok(vec![f.terms()[0].coeff.clone()]),
        [v] => Ok(f.univariate_coeffs(*v).expect("single variable")),
        _ => Err(VerifyError::NotUnivariate),
    }
}
