use super::{Monomial, Poly, PolyError, Term};
use crate::exact::Field;

/// Multivariate division of `f` by an ordered list of divisors.
///
/// The leading term of the running dividend is always reduced by the first
/// divisor whose leading monomial divides it; otherwise it moves to the
/// remainder.
pub fn divide<K: Field>(f: &Poly<K>, divisors: &[Poly<K>]) -> Result<(Vec<Poly<K>>, Poly<K>), PolyError> {
    if divisors.is_empty() {
        return Err(PolyError::EmptyDivisors);
    }
    for g in divisors {
        if !g.ring().same_as(f.ring()) {
            return Err(PolyError::RingMismatch);
        }
        if g.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
    }
    let ring = f.ring();
    let inv_lc: Vec<K> = divisors.iter().map(|g| g.leading_coeff().unwrap().inv().unwrap()).collect();
    let mut quotients: Vec<Vec<Term<K>>> = vec![Vec::new(); divisors.len()];
    let mut remainder: Vec<Term<K>> = Vec::new();
    let mut p = f.clone();
    while let Some(lt) = p.leading_term().cloned() {
        match first_divisor(&lt.mono, divisors) {
            Some((i, m)) => {
                let c = lt.coeff.mul(&inv_lc[i]);
                p = p.sub_mul_term(&c, &m, &divisors[i]);
                quotients[i].push(Term { coeff: c, mono: m });
            }
            None => {
                remainder.push(lt);
                p = drop_leading(p);
            }
        }
    }
    // Quotient terms are produced in decreasing order per divisor.
    let quotients = quotients.into_iter().map(|t| Poly::from_sorted_terms(ring, t)).collect();
    Ok((quotients, Poly::from_sorted_terms(ring, remainder)))
}

/// Remainder of `f` on division by `basis` (same tie-breaking as [`divide`]).
///
/// Zero divisors are skipped and an empty list returns `f` unchanged.
pub fn normal_form<K: Field>(f: &Poly<K>, basis: &[Poly<K>]) -> Poly<K> {
    let live: Vec<(&Poly<K>, K)> =
        basis.iter().filter(|g| !g.is_zero()).map(|g| (g, g.leading_coeff().unwrap().inv().unwrap())).collect();
    let mut remainder: Vec<Term<K>> = Vec::new();
    let mut p = f.clone();
    while let Some(lt) = p.leading_term() {
        let hit = live.iter().find_map(|(g, inv)| lt.mono.div(g.leading_monomial().unwrap()).map(|m| (*g, inv, m)));
        match hit {
            Some((g, inv, m)) => {
                let c = lt.coeff.mul(inv);
                p = p.sub_mul_term(&c, &m, g);
            }
            None => {
                remainder.push(lt.clone());
                p = drop_leading(p);
            }
        }
    }
    Poly::from_sorted_terms(f.ring(), remainder)
}

/// S-polynomial `(x^γ/LT(p))·p − (x^γ/LT(q))·q` with `x^γ = lcm(LM(p), LM(q))`.
pub fn s_poly<K: Field>(p: &Poly<K>, q: &Poly<K>) -> Result<Poly<K>, PolyError> {
    if !p.ring().same_as(q.ring()) {
        return Err(PolyError::RingMismatch);
    }
    let (Some(lp), Some(lq)) = (p.leading_term(), q.leading_term()) else {
        return Err(PolyError::ZeroPolynomial);
    };
    let gamma = lp.mono.lcm(&lq.mono);
    let mp = gamma.div(&lp.mono).expect("lcm is a multiple");
    let mq = gamma.div(&lq.mono).expect("lcm is a multiple");
    let cp = lp.coeff.inv().expect("nonzero leading coefficient");
    let cq = lq.coeff.inv().expect("nonzero leading coefficient");
    Ok(p.mul_term(&cp, &mp).sub_mul_term(&cq, &mq, q))
}

fn first_divisor<K: Field>(mono: &Monomial, divisors: &[Poly<K>]) -> Option<(usize, Monomial)> {
    divisors.iter().enumerate().find_map(|(i, g)| mono.div(g.leading_monomial().unwrap()).map(|m| (i, m)))
}

fn drop_leading<K: Field>(p: Poly<K>) -> Poly<K> {
    let ring = p.ring().clone();
    let mut terms = p.into_terms();
    terms.remove(0);
    Poly::from_sorted_terms(&ring, terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Rational;
    use crate::polyring::{parse_poly, MonomialOrder, Ring};
    use proptest::prelude::*;
    use std::sync::Arc;

    fn xy() -> Arc<Ring<Rational>> {
        Ring::rational(&["x", "y"], MonomialOrder::Lex)
    }

    fn p(ring: &Arc<Ring<Rational>>, s: &str) -> Poly<Rational> {
        parse_poly(ring, s).unwrap()
    }

    #[test]
    fn divide_by_self() {
        let r = xy();
        let f = p(&r, "x^2*y + 3*y - 1");
        let (q, rem) = divide(&f, std::slice::from_ref(&f)).unwrap();
        assert_eq!(q, vec![Poly::one(&r)]);
        assert!(rem.is_zero());
    }

    #[test]
    fn single_step() {
        let r = xy();
        let (q, rem) = divide(&p(&r, "x^2*y + 1"), &[p(&r, "y")]).unwrap();
        assert_eq!(q[0], p(&r, "x^2"));
        assert_eq!(rem, Poly::one(&r));
    }

    #[test]
    fn long_division() {
        let r = xy();
        let f = p(&r, "x^2 + y^2");
        let g = p(&r, "x + y");
        let (q, rem) = divide(&f, std::slice::from_ref(&g)).unwrap();
        assert_eq!(q[0], p(&r, "x - y"));
        assert_eq!(rem, p(&r, "2*y^2"));
        assert_eq!(q[0].mul(&g).add(&rem), f);
    }

    #[test]
    fn division_errors() {
        let r = xy();
        let f = p(&r, "x");
        assert_eq!(divide(&f, &[]).unwrap_err(), PolyError::EmptyDivisors);
        assert_eq!(divide(&f, &[Poly::zero(&r)]).unwrap_err(), PolyError::ZeroPolynomial);
        let other = Ring::rational(&["x", "y"], MonomialOrder::Grevlex);
        assert_eq!(divide(&f, &[Poly::var(&other, 0)]).unwrap_err(), PolyError::RingMismatch);
    }

    #[test]
    fn s_poly_examples() {
        let r = xy();
        let f = p(&r, "x^2 + y");
        assert!(s_poly(&f, &f).unwrap().is_zero());
        assert_eq!(s_poly(&f, &p(&r, "y")).unwrap(), p(&r, "y^2"));
        assert_eq!(s_poly(&f, &Poly::zero(&r)).unwrap_err(), PolyError::ZeroPolynomial);
    }

    #[test]
    fn normal_form_agrees_with_divide() {
        let r = xy();
        let f = p(&r, "x^3 - 2*x*y + y^3 + 7");
        let gs = [p(&r, "x*y - 1"), p(&r, "y^2 - x")];
        assert_eq!(normal_form(&f, &gs), divide(&f, &gs).unwrap().1);
    }

    fn ring3() -> Arc<Ring<Rational>> {
        Ring::rational(&["x", "y", "z"], MonomialOrder::Lex)
    }

    pub(crate) fn small_poly(ring: Arc<Ring<Rational>>) -> impl Strategy<Value = Poly<Rational>> {
        prop::collection::vec((-5i64..6, 1i64..4, prop::collection::vec(0u16..4, 3)), 1..5).prop_map(move |ts| {
            let terms =
                ts.into_iter().map(|(n, d, e)| Term { coeff: Rational::new(n, d), mono: Monomial::from_exponents(&e) });
            Poly::from_terms(&ring, terms.collect())
        })
    }

    proptest! {
        #[test]
        fn division_contract(f in small_poly(ring3()),
                             gs in prop::collection::vec(small_poly(ring3()), 1..4)) {
            let gs: Vec<_> = gs.into_iter().filter(|g| !g.is_zero()).collect();
            prop_assume!(!gs.is_empty());
            let (qs, rem) = divide(&f, &gs).unwrap();
            let mut recombined = rem.clone();
            for (q, g) in qs.iter().zip(&gs) {
                let prod = q.mul(g);
                if !prod.is_zero() {
                    let lex = MonomialOrder::Lex;
                    prop_assert!(lex.cmp(prod.leading_monomial().unwrap(), f.leading_monomial().unwrap()).is_le());
                }
                recombined = recombined.add(&prod);
            }
            prop_assert_eq!(recombined, f);
            for t in rem.terms() {
                for g in &gs {
                    prop_assert!(!g.leading_monomial().unwrap().divides(&t.mono));
                }
            }
        }

        #[test]
        fn s_poly_cancels_lcm(f in small_poly(ring3()), g in small_poly(ring3())) {
            prop_assume!(!f.is_zero() && !g.is_zero());
            let s = s_poly(&f, &g).unwrap();
            let gamma = f.leading_monomial().unwrap().lcm(g.leading_monomial().unwrap());
            if let Some(lm) = s.leading_monomial() {
                prop_assert!(MonomialOrder::Lex.cmp(lm, &gamma).is_lt());
            }
        }
    }
}
