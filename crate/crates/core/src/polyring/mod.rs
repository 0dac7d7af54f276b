//! Multivariate polynomials over an exact field.

mod division;
mod json;
mod monomial;
mod parse;
mod poly;

use std::sync::Arc;

use crate::exact::{ExactError, Field, FieldDesc, Rational};

pub use division::{divide, normal_form, s_poly};
pub use json::{PolyJson, TermJson};
pub use monomial::{Monomial, MonomialOrder};
pub use parse::parse_poly;
pub use poly::{Poly, Term};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("polynomials belong to different rings")]
    RingMismatch,
    #[error("divisor list is empty")]
    EmptyDivisors,
    #[error("operation needs a nonzero polynomial")]
    ZeroPolynomial,
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("malformed polynomial data: {0}")]
    Malformed(String),
    #[error(transparent)]
    Scalar(#[from] ExactError),
}

/// Variable names, coefficient field and monomial order.
#[derive(Debug, Clone)]
pub struct Ring<K: Field> {
    vars: Vec<String>,
    field: K::Tag,
    order: MonomialOrder,
}

impl<K: Field> Ring<K> {
    pub fn new(vars: Vec<String>, field: K::Tag, order: MonomialOrder) -> Arc<Self> {
        Arc::new(Ring { vars, field, order })
    }

    /// Ring with variables `prefix0 … prefix{n-1}`.
    pub fn with_indexed_vars(prefix: &str, n: usize, field: K::Tag, order: MonomialOrder) -> Arc<Self> {
        Self::new((0..n).map(|i| format!("{prefix}{i}")).collect(), field, order)
    }

    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn field(&self) -> &K::Tag {
        &self.field
    }

    pub fn field_desc(&self) -> FieldDesc {
        K::field_desc(&self.field)
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn with_order(&self, order: MonomialOrder) -> Self {
        Ring { vars: self.vars.clone(), field: self.field.clone(), order }
    }

    pub fn same_as(self: &Arc<Self>, other: &Arc<Self>) -> bool {
        Arc::ptr_eq(self, other)
            || (self.order == other.order
                && self.vars == other.vars
                && K::field_desc(&self.field) == K::field_desc(&other.field))
    }
}

impl Ring<Rational> {
    pub fn rational(vars: &[&str], order: MonomialOrder) -> Arc<Self> {
        Self::new(vars.iter().map(|s| s.to_string()).collect(), (), order)
    }
}
