use std::sync::Arc;

use num_bigint::BigInt;

use super::{Poly, PolyError, Ring};
use crate::exact::{Field, Rational};

/// Parse polynomial text such as `3/2*x0^2*x1 - (z^2 - 1)*x1 + 1`.
///
/// Identifiers must be ring variables; `z` additionally names the generator
/// of a cyclotomic coefficient field when it is not a variable. Division is
/// only allowed by nonzero constants.
pub fn parse_poly<K: Field>(ring: &Arc<Ring<K>>, text: &str) -> Result<Poly<K>, PolyError> {
    let mut p = Parser { ring, src: text.as_bytes(), pos: 0 };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(out)
}

struct Parser<'a, K: Field> {
    ring: &'a Arc<Ring<K>>,
    src: &'a [u8],
    pos: usize,
}

impl<K: Field> Parser<'_, K> {
    fn error(&self, msg: &str) -> PolyError {
        PolyError::Parse { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Poly<K>, PolyError> {
        let mut acc = self.product()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.add(&self.product()?);
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.sub(&self.product()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn product(&mut self) -> Result<Poly<K>, PolyError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc.mul(&self.unary()?);
                }
                Some(b'/') => {
                    self.pos += 1;
                    let den = self.unary()?;
                    if !den.is_constant() || den.is_zero() {
                        return Err(self.error("division by a non-constant or zero"));
                    }
                    let inv = den.leading_coeff().unwrap().inv().expect("nonzero constant");
                    acc = acc.scale(&inv);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Poly<K>, PolyError> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(self.unary()?.neg())
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Poly<K>, PolyError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let digits = self.digits();
            let e: u32 = digits.parse().map_err(|_| self.error("expected exponent"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn atom(&mut self) -> Result<Poly<K>, PolyError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let n: BigInt = self.digits().parse().map_err(|_| self.error("bad integer"))?;
                Ok(Poly::from_rational(self.ring, &Rational::from_bigint(n)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii identifier");
                if let Some(i) = self.ring.var_index(name) {
                    return Ok(Poly::var(self.ring, i));
                }
                if name == "z" {
                    if let Some(g) = K::generator(self.ring.field()) {
                        return Ok(Poly::constant(self.ring, g));
                    }
                }
                self.pos = start;
                Err(self.error(&format!("unknown identifier `{name}`")))
            }
            _ => Err(self.error("expected a term")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{CycloField, CycloNum};
    use crate::polyring::{Monomial, MonomialOrder, Term};
    use proptest::prelude::*;

    #[test]
    fn parses_and_renders() {
        let r = Ring::rational(&["x0", "x1"], MonomialOrder::Lex);
        let f = parse_poly(&r, "x1 + 3/2 * x0^2*x1 - (x1 - 1) ").unwrap();
        assert_eq!(f.to_string(), "3/2*x0^2*x1 + 1");
        assert_eq!(parse_poly(&r, "-(x0)^2").unwrap().to_string(), "-x0^2");
        assert!(matches!(parse_poly(&r, "y"), Err(PolyError::Parse { .. })));
        assert!(parse_poly(&r, "x0/x1").is_err());
        assert!(parse_poly(&r, "x0 +").is_err());
        assert!(parse_poly(&r, "z").is_err());
    }

    #[test]
    fn generator_in_cyclotomic_ring() {
        let r = Ring::<CycloNum>::with_indexed_vars("x", 2, CycloField::get(12), MonomialOrder::Lex);
        let f = parse_poly(&r, "z^3*x0 + x0").unwrap();
        let i = CycloNum::root_of_unity(12, 3);
        let one = Field::one(&CycloField::get(12));
        assert_eq!(f.leading_coeff().unwrap(), &Field::add(&i, &one));
        assert_eq!(parse_poly(&r, &f.to_string()).unwrap(), f);
    }

    fn rational_poly() -> impl Strategy<Value = Poly<Rational>> {
        prop::collection::vec((-9i64..10, 1i64..6, prop::collection::vec(0u16..4, 3)), 0..6).prop_map(|ts| {
            let r = Ring::rational(&["x", "y", "w"], MonomialOrder::Lex);
            let terms =
                ts.into_iter().map(|(n, d, e)| Term { coeff: Rational::new(n, d), mono: Monomial::from_exponents(&e) });
            Poly::from_terms(&r, terms.collect())
        })
    }

    fn cyclo_poly() -> impl Strategy<Value = Poly<CycloNum>> {
        let coeff = prop::collection::vec((-4i64..5, 1i64..4), 4);
        prop::collection::vec((coeff, prop::collection::vec(0u16..3, 2)), 0..4).prop_map(|ts| {
            let field = CycloField::get(12);
            let r = Ring::<CycloNum>::with_indexed_vars("x", 2, field.clone(), MonomialOrder::Grevlex);
            let terms = ts.into_iter().map(|(c, e)| Term {
                coeff: CycloNum::from_coeffs(&field, c.into_iter().map(|(n, d)| Rational::new(n, d)).collect()),
                mono: Monomial::from_exponents(&e),
            });
            Poly::from_terms(&r, terms.collect())
        })
    }

    proptest! {
        #[test]
        fn render_round_trip(f in rational_poly()) {
            prop_assert_eq!(parse_poly(f.ring(), &f.to_string()).unwrap(), f);
        }

        #[test]
        fn render_round_trip_cyclotomic(f in cyclo_poly()) {
            prop_assert_eq!(parse_poly(f.ring(), &f.to_string()).unwrap(), f);
        }
    }
}
