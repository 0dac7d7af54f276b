use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{Monomial, MonomialOrder, Poly, PolyError, Ring, Term};
use crate::exact::{Field, FieldDesc};

/// One term in file form: scalar text and exponent vector.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub c: String,
    pub e: Vec<u16>,
}

/// Self-describing polynomial: `{"vars", "field", "terms"}` with terms in
/// decreasing lex order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub vars: Vec<String>,
    pub field: FieldDesc,
    pub terms: Vec<TermJson>,
}

impl TermJson {
    /// Terms of `p` in decreasing lex order, whatever the ring order.
    pub fn list<K: Field>(p: &Poly<K>) -> Vec<TermJson> {
        let mut terms: Vec<&Term<K>> = p.terms().iter().collect();
        if p.ring().order() != MonomialOrder::Lex {
            terms.sort_by(|a, b| b.mono.cmp(&a.mono));
        }
        terms.into_iter().map(|t| TermJson { c: t.coeff.to_string(), e: t.mono.exponents().to_vec() }).collect()
    }

    /// Rebuild a polynomial in `ring` from file terms.
    pub fn to_poly<K: Field>(ring: &Arc<Ring<K>>, terms: &[TermJson]) -> Result<Poly<K>, PolyError> {
        let mut out = Vec::with_capacity(terms.len());
        for t in terms {
            if t.e.len() != ring.arity() {
                return Err(PolyError::Malformed(format!(
                    "exponent vector of length {} in a ring with {} variables",
                    t.e.len(),
                    ring.arity()
                )));
            }
            let coeff = K::parse_scalar(ring.field(), &t.c)?;
            out.push(Term { coeff, mono: Monomial::from_exponents(&t.e) });
        }
        Ok(Poly::from_terms(ring, out))
    }
}

impl PolyJson {
    pub fn from_poly<K: Field>(p: &Poly<K>) -> Self {
        PolyJson { vars: p.ring().vars().to_vec(), field: p.ring().field_desc(), terms: TermJson::list(p) }
    }

    /// Rebuild over `K` with the given monomial order.
    pub fn to_poly<K: Field>(&self, order: MonomialOrder) -> Result<Poly<K>, PolyError> {
        let tag = K::tag_from_desc(&self.field)?;
        let ring = Ring::new(self.vars.clone(), tag, order);
        TermJson::to_poly(&ring, &self.terms)
    }
}
