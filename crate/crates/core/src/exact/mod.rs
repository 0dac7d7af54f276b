//! Exact scalar arithmetic: rationals and cyclotomic field elements.

mod cyclo;
mod rational;

use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

pub use cyclo::{
    cyclo_cos_sin, cyclo_embed, cyclo_root_of_unity, cyclotomic_polynomial, euler_phi, trig_conductor, CycloField,
    CycloNum,
};
pub use rational::Rational;

use crate::numeric::BigComplex;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("cannot parse scalar `{0}`")]
    Parse(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: {0}")]
    FieldMismatch(String),
}

/// Exact coefficient field used by polynomials.
///
/// Elements carry enough context (`Tag`) to build zero and one; for ℚ the
/// tag is `()`, for ℚ(ζ_n) it is the shared field descriptor.
pub trait Field: Clone + PartialEq + Eq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    type Tag: Clone + fmt::Debug + Send + Sync;

    fn tag(&self) -> Self::Tag;
    fn zero(tag: &Self::Tag) -> Self;
    fn one(tag: &Self::Tag) -> Self;
    fn from_rational(tag: &Self::Tag, r: &Rational) -> Self;

    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Option<Self>;

    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.mul(&i))
    }

    /// `Some` when the element lies in ℚ.
    fn as_rational(&self) -> Option<Rational>;
    /// Complex conjugate.
    fn conj(&self) -> Self;

    /// Value under the standard complex embedding, at `prec` bits.
    fn embed(&self, prec: usize) -> BigComplex;
    fn to_complex64(&self) -> Complex64;

    fn field_desc(tag: &Self::Tag) -> FieldDesc;
    fn tag_from_desc(desc: &FieldDesc) -> Result<Self::Tag, ExactError>;
    fn parse_scalar(tag: &Self::Tag, s: &str) -> Result<Self, ExactError>;

    /// Rough size of the exact representation in bits.
    fn magnitude_bits(&self) -> u64;

    /// Rendering without the field annotation, as used inside polynomial text.
    fn render_plain(&self) -> String;
    /// The field generator ζ_n when the field is cyclotomic; parsed as `z`.
    fn generator(tag: &Self::Tag) -> Option<Self>;
}

/// Coefficient field tag as it appears in files: `"Q"` or `{"cyclotomic": n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldDesc {
    Rational,
    Cyclotomic(u64),
}

impl fmt::Display for FieldDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDesc::Rational => f.write_str("Q"),
            FieldDesc::Cyclotomic(n) => write!(f, "Q(zeta_{n})"),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum FieldDescRepr {
    Name(String),
    Cyclotomic { cyclotomic: u64 },
}

impl Serialize for FieldDesc {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            FieldDesc::Rational => FieldDescRepr::Name("Q".into()),
            FieldDesc::Cyclotomic(n) => FieldDescRepr::Cyclotomic { cyclotomic: *n },
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for FieldDesc {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        match FieldDescRepr::deserialize(d)? {
            FieldDescRepr::Name(s) if s == "Q" => Ok(FieldDesc::Rational),
            FieldDescRepr::Name(s) => Err(serde::de::Error::custom(format!("unknown field `{s}`"))),
            FieldDescRepr::Cyclotomic { cyclotomic } => Ok(FieldDesc::Cyclotomic(cyclotomic)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn field12() -> std::sync::Arc<CycloField> {
        CycloField::get(12)
    }

    fn cyclo_strategy() -> impl Strategy<Value = CycloNum> {
        prop::collection::vec((-6i64..7, 1i64..5), 4).prop_map(|cs| {
            let coeffs = cs.into_iter().map(|(n, d)| Rational::new(n, d)).collect();
            CycloNum::from_coeffs(&field12(), coeffs)
        })
    }

    proptest! {
        #[test]
        fn field_axioms(a in cyclo_strategy(), b in cyclo_strategy(), c in cyclo_strategy()) {
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            if !a.is_zero() {
                prop_assert!(a.mul(&a.inv().unwrap()).is_one());
            }
        }

        #[test]
        fn embedding_is_multiplicative(a in cyclo_strategy(), b in cyclo_strategy()) {
            let lhs = a.mul(&b).to_complex64();
            let rhs = a.to_complex64() * b.to_complex64();
            prop_assert!((lhs - rhs).norm() < 1e-9 * (1.0 + rhs.norm()));
        }

        #[test]
        fn conjugation_commutes_with_embedding(a in cyclo_strategy()) {
            let lhs = a.conj().to_complex64();
            let rhs = a.to_complex64().conj();
            prop_assert!((lhs - rhs).norm() < 1e-9 * (1.0 + rhs.norm()));
        }

        #[test]
        fn pythagoras(d in 1u64..13, b in -12i64..12, j in -12i64..12) {
            let (c, s) = cyclo_cos_sin(d, b, j);
            prop_assert!(c.mul(&c).add(&s.mul(&s)).is_one());
            prop_assert_eq!(c.conj(), c.clone());
            prop_assert_eq!(s.conj(), s.clone());
        }
    }

    #[test]
    fn field_desc_json() {
        assert_eq!(serde_json::to_string(&FieldDesc::Rational).unwrap(), "\"Q\"");
        assert_eq!(serde_json::to_string(&FieldDesc::Cyclotomic(12)).unwrap(), "{\"cyclotomic\":12}");
        let d: FieldDesc = serde_json::from_str("{\"cyclotomic\":20}").unwrap();
        assert_eq!(d, FieldDesc::Cyclotomic(20));
        assert!(serde_json::from_str::<FieldDesc>("\"R\"").is_err());
    }

    #[test]
    fn embed_precision_bound() {
        let (c, _) = cyclo_cos_sin(3, 1, 1);
        let e = cyclo_embed(&c, 256);
        let err = (&e.re + &crate::numeric::BigReal::from_rational(&Rational::new(1, 2), 256)).abs();
        assert!(err < crate::numeric::pow2(-240, 256));
        let one = cyclo_embed(&CycloNum::root_of_unity(1, 0), 64).to_complex64();
        assert_eq!(one, Complex64::new(1.0, 0.0));
        let i = cyclo_embed(&CycloNum::root_of_unity(4, 1), 64).to_complex64();
        assert!((i - Complex64::new(0.0, 1.0)).norm() < 1e-15);
    }
}
