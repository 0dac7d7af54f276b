use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

/// Monomial order on exponent vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MonomialOrder {
    /// x_0 > x_1 > … compared left to right.
    Lex,
    /// Total degree first, ties broken by the smaller last differing exponent.
    Grevlex,
}

impl MonomialOrder {
    #[inline]
    pub fn cmp(self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => a.0.cmp(&b.0),
            MonomialOrder::Grevlex => a.degree().cmp(&b.degree()).then_with(|| {
                for (x, y) in a.0.iter().zip(b.0.iter()).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MonomialOrder::Lex => "lex",
            MonomialOrder::Grevlex => "grevlex",
        })
    }
}

/// Dense exponent vector, one entry per ring variable.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(SmallVec<[u16; 8]>);

impl Monomial {
    pub fn one(arity: usize) -> Self {
        Monomial(SmallVec::from_elem(0, arity))
    }

    pub fn var(arity: usize, index: usize, exp: u16) -> Self {
        let mut m = Self::one(arity);
        m.0[index] = exp;
        m
    }

    pub fn from_exponents(exps: &[u16]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Does `self` divide `other`?
    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| a + b).collect())
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    #[inline]
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if other.divides(self) {
            Some(Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| a - b).collect()))
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Some(i, e) when the monomial is x_i^e with e ≥ 1.
    pub fn pure_power(&self) -> Option<(usize, u16)> {
        let mut found = None;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some((i, e));
            }
        }
        found
    }

    pub(crate) fn exponents_mut(&mut self) -> &mut [u16] {
        &mut self.0
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mono(e: &[u16]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn lex_examples() {
        let lex = MonomialOrder::Lex;
        assert_eq!(lex.cmp(&mono(&[1, 0]), &mono(&[0, 5])), Ordering::Greater);
        assert_eq!(lex.cmp(&mono(&[1, 2]), &mono(&[1, 3])), Ordering::Less);
    }

    #[test]
    fn grevlex_examples() {
        let g = MonomialOrder::Grevlex;
        // x*z < y^2 in grevlex with x > y > z
        assert_eq!(g.cmp(&mono(&[1, 0, 1]), &mono(&[0, 2, 0])), Ordering::Less);
        assert_eq!(g.cmp(&mono(&[0, 0, 3]), &mono(&[1, 0, 0])), Ordering::Greater);
    }

    #[test]
    fn division_and_lcm() {
        let a = mono(&[2, 1]);
        let b = mono(&[1, 1]);
        assert_eq!(a.div(&b), Some(mono(&[1, 0])));
        assert_eq!(b.div(&a), None);
        assert_eq!(mono(&[2, 0]).lcm(&mono(&[0, 1])), mono(&[2, 1]));
        assert_eq!(mono(&[0, 3]).pure_power(), Some((1, 3)));
        assert_eq!(mono(&[1, 1]).pure_power(), None);
        assert_eq!(mono(&[0, 0]).pure_power(), None);
    }

    proptest! {
        #[test]
        fn orders_are_multiplicative(a in prop::collection::vec(0u16..6, 4),
                                     b in prop::collection::vec(0u16..6, 4),
                                     c in prop::collection::vec(0u16..6, 4)) {
            let (a, b, c) = (mono(&a), mono(&b), mono(&c));
            for order in [MonomialOrder::Lex, MonomialOrder::Grevlex] {
                let before = order.cmp(&a, &b);
                prop_assert_eq!(order.cmp(&a.mul(&c), &b.mul(&c)), before);
                prop_assert_eq!(order.cmp(&b, &a), before.reverse());
                prop_assert!(order.cmp(&a.mul(&c), &a) != Ordering::Less);
            }
        }
    }
}
