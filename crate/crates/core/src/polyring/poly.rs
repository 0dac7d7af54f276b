use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;

use super::{Monomial, MonomialOrder, PolyError, Ring};
use crate::exact::{Field, Rational};
use crate::numeric::BigComplex;

/// A single coefficient–monomial pair.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Term<K> {
    pub coeff: K,
    pub mono: Monomial,
}

/// Multivariate polynomial with terms strictly decreasing in the ring's
/// monomial order and no zero coefficients.
#[derive(Clone)]
pub struct Poly<K: Field> {
    ring: Arc<Ring<K>>,
    terms: Vec<Term<K>>,
}

impl<K: Field> PartialEq for Poly<K> {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_as(&other.ring) && self.terms == other.terms
    }
}

impl<K: Field> Eq for Poly<K> {}

impl<K: Field> Poly<K> {
    pub fn zero(ring: &Arc<Ring<K>>) -> Self {
        Poly { ring: ring.clone(), terms: vec![] }
    }

    pub fn constant(ring: &Arc<Ring<K>>, c: K) -> Self {
        if c.is_zero() {
            return Self::zero(ring);
        }
        Poly { ring: ring.clone(), terms: vec![Term { coeff: c, mono: Monomial::one(ring.arity()) }] }
    }

    pub fn from_rational(ring: &Arc<Ring<K>>, r: &Rational) -> Self {
        Self::constant(ring, K::from_rational(ring.field(), r))
    }

    pub fn one(ring: &Arc<Ring<K>>) -> Self {
        Self::constant(ring, K::one(ring.field()))
    }

    /// The variable x_i.
    pub fn var(ring: &Arc<Ring<K>>, index: usize) -> Self {
        assert!(index < ring.arity(), "variable index out of range");
        Self::monomial(ring, K::one(ring.field()), Monomial::var(ring.arity(), index, 1))
    }

    pub fn monomial(ring: &Arc<Ring<K>>, coeff: K, mono: Monomial) -> Self {
        assert_eq!(mono.arity(), ring.arity(), "monomial arity does not match ring");
        if coeff.is_zero() {
            return Self::zero(ring);
        }
        Poly { ring: ring.clone(), terms: vec![Term { coeff, mono }] }
    }

    /// Build from unsorted terms; merges duplicates and drops zeros.
    pub fn from_terms(ring: &Arc<Ring<K>>, mut terms: Vec<Term<K>>) -> Self {
        let order = ring.order();
        terms.sort_by(|a, b| order.cmp(&b.mono, &a.mono));
        let mut out: Vec<Term<K>> = Vec::with_capacity(terms.len());
        for t in terms {
            assert_eq!(t.mono.arity(), ring.arity(), "monomial arity does not match ring");
            match out.last_mut() {
                Some(last) if last.mono == t.mono => last.coeff = last.coeff.add(&t.coeff),
                _ => out.push(t),
            }
        }
        out.retain(|t| !t.coeff.is_zero());
        Poly { ring: ring.clone(), terms: out }
    }

    /// Terms already strictly decreasing and nonzero.
    pub(crate) fn from_sorted_terms(ring: &Arc<Ring<K>>, terms: Vec<Term<K>>) -> Self {
        debug_assert!(terms.windows(2).all(|w| ring.order().cmp(&w[0].mono, &w[1].mono) == Ordering::Greater));
        debug_assert!(terms.iter().all(|t| !t.coeff.is_zero()));
        Poly { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &Arc<Ring<K>> {
        &self.ring
    }

    pub fn terms(&self) -> &[Term<K>] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term<K>> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.mono.is_one())
    }

    pub fn leading_term(&self) -> Option<&Term<K>> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mono)
    }

    pub fn leading_coeff(&self) -> Option<&K> {
        self.terms.first().map(|t| &t.coeff)
    }

    /// Exponent vector of the leading monomial.
    pub fn multideg(&self) -> Option<&[u16]> {
        self.leading_monomial().map(Monomial::exponents)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|t| t.mono.degree()).max().unwrap_or(0)
    }

    /// Degree in variable `i`.
    pub fn degree_in(&self, i: usize) -> u16 {
        self.terms.iter().map(|t| t.mono.exponents()[i]).max().unwrap_or(0)
    }

    /// Indices of variables that occur.
    pub fn support(&self) -> Vec<usize> {
        (0..self.ring.arity()).filter(|&i| self.terms.iter().any(|t| t.mono.exponents()[i] > 0)).collect()
    }

    /// True when no variable with index `< first` occurs.
    pub fn only_involves_from(&self, first: usize) -> bool {
        self.terms.iter().all(|t| t.mono.exponents()[..first].iter().all(|&e| e == 0))
    }

    fn check_ring(&self, other: &Self) -> Result<(), PolyError> {
        if self.ring.same_as(&other.ring) {
            Ok(())
        } else {
            Err(PolyError::RingMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_ring(other)?;
        Ok(self.mul_unchecked(other))
    }

    /// Panics on ring mismatch; see [`Poly::try_add`].
    pub fn add(&self, other: &Self) -> Self {
        self.try_add(other).expect("polynomials over different rings")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.try_sub(other).expect("polynomials over different rings")
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("polynomials over different rings")
    }

    pub fn neg(&self) -> Self {
        let terms = self.terms.iter().map(|t| Term { coeff: t.coeff.neg(), mono: t.mono.clone() }).collect();
        Poly { ring: self.ring.clone(), terms }
    }

    pub fn scale(&self, c: &K) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|t| Term { coeff: t.coeff.mul(c), mono: t.mono.clone() }).collect();
        Poly { ring: self.ring.clone(), terms }
    }

    /// `c · m · self`; the order is multiplicative so sortedness is kept.
    pub fn mul_term(&self, c: &K, m: &Monomial) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|t| Term { coeff: t.coeff.mul(c), mono: t.mono.mul(m) }).collect();
        Poly { ring: self.ring.clone(), terms }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.ring);
        for _ in 0..e {
            acc = acc.mul_unchecked(self);
        }
        acc
    }

    /// Scale so the leading coefficient is one.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.inv().expect("nonzero leading coefficient")),
        }
    }

    pub(crate) fn merge(&self, other: &Self, subtract: bool) -> Self {
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match order.cmp(&a[i].mono, &b[j].mono) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if subtract { b[j].coeff.neg() } else { b[j].coeff.clone() };
                    out.push(Term { coeff: c, mono: b[j].mono.clone() });
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if subtract { a[i].coeff.sub(&b[j].coeff) } else { a[i].coeff.add(&b[j].coeff) };
                    if !c.is_zero() {
                        out.push(Term { coeff: c, mono: a[i].mono.clone() });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for t in &b[j..] {
            let c = if subtract { t.coeff.neg() } else { t.coeff.clone() };
            out.push(Term { coeff: c, mono: t.mono.clone() });
        }
        Poly { ring: self.ring.clone(), terms: out }
    }

    /// `self - c·m·g` in a single merge pass.
    pub(crate) fn sub_mul_term(&self, c: &K, m: &Monomial, g: &Self) -> Self {
        let order = self.ring.order();
        let a = &self.terms;
        let b = &g.terms;
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let mut bj: Option<Monomial> = b.first().map(|t| t.mono.mul(m));
        while i < a.len() {
            let Some(bm) = bj.as_ref() else { break };
            match order.cmp(&a[i].mono, bm) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(Term { coeff: b[j].coeff.mul(c).neg(), mono: bj.take().unwrap() });
                    j += 1;
                    bj = b.get(j).map(|t| t.mono.mul(m));
                }
                Ordering::Equal => {
                    let v = a[i].coeff.sub(&b[j].coeff.mul(c));
                    if !v.is_zero() {
                        out.push(Term { coeff: v, mono: a[i].mono.clone() });
                    }
                    i += 1;
                    j += 1;
                    bj = b.get(j).map(|t| t.mono.mul(m));
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        if let Some(bm) = bj {
            out.push(Term { coeff: b[j].coeff.mul(c).neg(), mono: bm });
            for t in &b[j + 1..] {
                out.push(Term { coeff: t.coeff.mul(c).neg(), mono: t.mono.mul(m) });
            }
        }
        Poly { ring: self.ring.clone(), terms: out }
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.ring);
        }
        let (small, big) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        let mut acc = Self::zero(&self.ring);
        for t in &small.terms {
            acc = acc.merge(&big.mul_term(&t.coeff, &t.mono), false);
        }
        acc
    }

    /// Same polynomial in a ring with a different monomial order.
    pub fn with_order(&self, order: MonomialOrder) -> Self {
        if self.ring.order() == order {
            return self.clone();
        }
        let ring = Arc::new(self.ring.with_order(order));
        Self::from_terms(&ring, self.terms.clone())
    }

    /// Move into an isomorphic ring (same variables and field, any order).
    pub fn to_ring(&self, ring: &Arc<Ring<K>>) -> Result<Self, PolyError> {
        if self.ring.vars() != ring.vars() || K::field_desc(self.ring.field()) != K::field_desc(ring.field()) {
            return Err(PolyError::RingMismatch);
        }
        Ok(Self::from_terms(ring, self.terms.clone()))
    }

    /// Coefficient-wise image in another field.
    pub fn map_coeffs<L: Field>(&self, ring: &Arc<Ring<L>>, f: impl Fn(&K) -> L) -> Poly<L> {
        assert_eq!(ring.arity(), self.ring.arity(), "arity mismatch");
        let terms = self.terms.iter().map(|t| Term { coeff: f(&t.coeff), mono: t.mono.clone() }).collect();
        Poly::from_terms(ring, terms)
    }

    /// All coefficients rational?
    pub fn to_rational(&self, ring: &Arc<Ring<Rational>>) -> Option<Poly<Rational>> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            terms.push(Term { coeff: t.coeff.as_rational()?, mono: t.mono.clone() });
        }
        Some(Poly::from_terms(ring, terms))
    }

    /// Evaluate at a complex point in double precision.
    pub fn eval_complex64(&self, point: &[Complex64]) -> Complex64 {
        assert_eq!(point.len(), self.ring.arity(), "point dimension mismatch");
        let mut acc = Complex64::new(0.0, 0.0);
        for t in &self.terms {
            let mut v = t.coeff.to_complex64();
            for (x, &e) in point.iter().zip(t.mono.exponents()) {
                if e > 0 {
                    v *= x.powu(e as u32);
                }
            }
            acc += v;
        }
        acc
    }

    /// Evaluate at a real point in double precision (imaginary parts of
    /// coefficients are kept).
    pub fn eval_f64(&self, point: &[f64]) -> Complex64 {
        let p: Vec<Complex64> = point.iter().map(|&x| Complex64::new(x, 0.0)).collect();
        self.eval_complex64(&p)
    }

    /// Evaluate at an arbitrary-precision complex point.
    pub fn eval_big(&self, point: &[BigComplex], prec: usize) -> BigComplex {
        assert_eq!(point.len(), self.ring.arity(), "point dimension mismatch");
        let max_exp: Vec<u16> = (0..self.ring.arity()).map(|i| self.degree_in(i)).collect();
        let powers: Vec<Vec<BigComplex>> = point
            .iter()
            .zip(&max_exp)
            .map(|(x, &m)| {
                let mut v = vec![BigComplex::one(prec)];
                for k in 1..=m as usize {
                    let next = &v[k - 1] * x;
                    v.push(next);
                }
                v
            })
            .collect();
        let mut acc = BigComplex::zero(prec);
        for t in &self.terms {
            let mut v = t.coeff.embed(prec);
            for (i, &e) in t.mono.exponents().iter().enumerate() {
                if e > 0 {
                    v = &v * &powers[i][e as usize];
                }
            }
            acc = &acc + &v;
        }
        acc
    }

    /// Largest coefficient modulus (double precision).
    pub fn coeff_scale(&self) -> f64 {
        self.terms.iter().map(|t| t.coeff.to_complex64().norm()).fold(0.0, f64::max)
    }

    /// Dense coefficients in variable `var`, lowest degree first, when the
    /// polynomial involves no other variable.
    pub fn univariate_coeffs(&self, var: usize) -> Option<Vec<K>> {
        let deg = self.degree_in(var) as usize;
        let mut out = vec![K::zero(self.ring.field()); deg + 1];
        for t in &self.terms {
            let e = t.mono.exponents();
            if e.iter().enumerate().any(|(i, &x)| i != var && x > 0) {
                return None;
            }
            out[e[var] as usize] = t.coeff.clone();
        }
        Some(out)
    }

    /// Formal partial derivative.
    pub fn derivative(&self, var: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|t| t.mono.exponents()[var] > 0)
            .map(|t| {
                let e = t.mono.exponents()[var];
                let mut m = t.mono.clone();
                m.exponents_mut()[var] -= 1;
                let k = K::from_rational(self.ring.field(), &Rational::from_integer(e as i64));
                Term { coeff: t.coeff.mul(&k), mono: m }
            })
            .collect();
        Self::from_terms(&self.ring, terms)
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, vars: &[String], m: &Monomial) -> fmt::Result {
    let mut first = true;
    for (name, &e) in vars.iter().zip(m.exponents()) {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        if e == 1 {
            f.write_str(name)?;
        } else {
            write!(f, "{name}^{e}")?;
        }
    }
    Ok(())
}

impl<K: Field> fmt::Display for Poly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let vars = self.ring.vars();
        for (idx, t) in self.terms.iter().enumerate() {
            let constant = t.mono.is_one();
            match t.coeff.as_rational() {
                Some(r) => {
                    let neg = r.is_negative();
                    if idx == 0 {
                        if neg {
                            f.write_str("-")?;
                        }
                    } else {
                        f.write_str(if neg { " - " } else { " + " })?;
                    }
                    let mag = r.abs();
                    if constant {
                        write!(f, "{mag}")?;
                        continue;
                    }
                    if !Field::is_one(&mag) {
                        write!(f, "{mag}*")?;
                    }
                }
                None => {
                    if idx > 0 {
                        f.write_str(" + ")?;
                    }
                    write!(f, "({})", t.coeff.render_plain())?;
                    if constant {
                        continue;
                    }
                    f.write_str("*")?;
                }
            }
            write_monomial(f, vars, &t.mono)?;
        }
        Ok(())
    }
}

impl<K: Field> fmt::Debug for Poly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
