use std::fmt;

use serde::{Deserialize, Serialize};

use super::{GroebnerBasis, GroebnerError};
use crate::exact::Field;
use crate::polyring::{Monomial, MonomialOrder};

/// `G ∩ k[x_l, …, x_{n-1}]`: the generators involving only the last
/// `arity − l` variables. Needs a lex basis.
pub fn elimination_ideal<K: Field>(gb: &GroebnerBasis<K>, l: usize) -> Result<GroebnerBasis<K>, GroebnerError> {
    if gb.order() != MonomialOrder::Lex {
        return Err(GroebnerError::NotLex(gb.order()));
    }
    let basis = gb.basis().iter().filter(|g| g.only_involves_from(l)).cloned().collect();
    Ok(GroebnerBasis::from_basis(gb.ring(), basis, gb.is_reduced()))
}

/// Every variable has a pure power among the leading monomials.
pub fn is_zero_dimensional<K: Field>(gb: &GroebnerBasis<K>) -> bool {
    pure_power_bounds(gb).iter().all(Option::is_some)
}

/// Smallest pure-power exponent per variable.
fn pure_power_bounds<K: Field>(gb: &GroebnerBasis<K>) -> Vec<Option<u16>> {
    let mut bounds = vec![None; gb.ring().arity()];
    if gb.is_unit_ideal() {
        return vec![Some(0); gb.ring().arity()];
    }
    for g in gb.basis() {
        if let Some((i, e)) = g.leading_monomial().and_then(Monomial::pure_power) {
            bounds[i] = Some(bounds[i].map_or(e, |b: u16| b.min(e)));
        }
    }
    bounds
}

/// Number of standard monomials, or infinite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum QuotientDimension {
    Finite(u64),
    Infinite,
}

impl fmt::Display for QuotientDimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuotientDimension::Finite(n) => write!(f, "{n}"),
            QuotientDimension::Infinite => f.write_str("infinite"),
        }
    }
}

/// Count monomials divisible by no leading monomial of the basis.
pub fn quotient_dimension<K: Field>(gb: &GroebnerBasis<K>) -> QuotientDimension {
    if gb.is_unit_ideal() {
        return QuotientDimension::Finite(0);
    }
    let bounds: Vec<u16> = match pure_power_bounds(gb).into_iter().collect::<Option<Vec<_>>>() {
        Some(b) => b,
        None => return QuotientDimension::Infinite,
    };
    let lms: Vec<&Monomial> = gb.basis().iter().filter_map(|g| g.leading_monomial()).collect();
    let mut exps = vec![0u16; bounds.len()];
    QuotientDimension::Finite(count_standard(&lms, &bounds, &mut exps, 0))
}

fn count_standard(lms: &[&Monomial], bounds: &[u16], exps: &mut [u16], var: usize) -> u64 {
    if var == bounds.len() {
        return 1;
    }
    let mut total = 0;
    for e in 0..bounds[var] {
        exps[var] = e;
        // Divisibility is monotone in every exponent, so stop at the first hit.
        if lms.iter().any(|m| m.exponents().iter().zip(exps.iter()).all(|(a, b)| a <= b)) {
            break;
        }
        total += count_standard(lms, bounds, exps, var + 1);
    }
    exps[var] = 0;
    total
}
