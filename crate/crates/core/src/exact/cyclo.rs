//! Elements of the cyclotomic field ℚ(ζ_n) in the power basis modulo Φ_n.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{ExactError, Field, FieldDesc, Rational};
use crate::numeric::BigComplex;

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// Integer coefficients of Φ_n, lowest degree first.
pub fn cyclotomic_polynomial(n: u64) -> Vec<BigInt> {
    assert!(n >= 1, "cyclotomic polynomial needs n >= 1");
    // x^n - 1 = prod_{d | n} Φ_d
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = BigInt::from(-1);
    num[n as usize] = BigInt::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            num = exact_div_monic(&num, &cyclotomic_polynomial(d));
        }
    }
    num
}

fn exact_div_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (i, dc) in den.iter().enumerate() {
            rem[k + i] -= &c * dc;
        }
        quot[k] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}

/// The field ℚ(ζ_n): conductor, degree and reduction modulus.
pub struct CycloField {
    n: u64,
    phi: usize,
    modulus: Vec<Rational>,
    powers: Mutex<HashMap<usize, Arc<Vec<BigComplex>>>>,
}

impl CycloField {
    /// Shared descriptor for conductor `n`.
    pub fn get(n: u64) -> Arc<CycloField> {
        static CACHE: OnceLock<Mutex<HashMap<u64, Arc<CycloField>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        let mut guard = cache.lock().expect("cyclotomic field cache poisoned");
        guard
            .entry(n)
            .or_insert_with(|| {
                let modulus: Vec<Rational> = cyclotomic_polynomial(n).into_iter().map(Rational::from_bigint).collect();
                Arc::new(CycloField { n, phi: euler_phi(n) as usize, modulus, powers: Mutex::new(HashMap::new()) })
            })
            .clone()
    }

    pub fn conductor(&self) -> u64 {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.phi
    }

    /// Numeric values of ζ^0 … ζ^{φ-1} at `prec` bits.
    fn numeric_powers(&self, prec: usize) -> Arc<Vec<BigComplex>> {
        let mut guard = self.powers.lock().expect("power cache poisoned");
        guard
            .entry(prec)
            .or_insert_with(|| {
                Arc::new((0..self.phi).map(|k| BigComplex::root_of_unity(self.n, k as i64, prec)).collect())
            })
            .clone()
    }

    /// Reduce an arbitrary-length coefficient vector modulo Φ_n.
    fn reduce(&self, mut c: Vec<Rational>) -> Vec<Rational> {
        let phi = self.phi;
        while c.len() > phi {
            let top = c.pop().expect("non-empty");
            if top.is_zero() {
                continue;
            }
            let shift = c.len() - phi;
            // Φ_n is monic: subtract top·x^shift·Φ_n, whose leading term was popped.
            for (i, m) in self.modulus[..phi].iter().enumerate() {
                if !m.is_zero() {
                    c[shift + i] = c[shift + i].sub(&top.mul(m));
                }
            }
        }
        c.resize(phi, Rational::zero());
        c
    }
}

impl fmt::Debug for CycloField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(zeta_{})", self.n)
    }
}

impl PartialEq for CycloField {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n
    }
}

/// An element of ℚ(ζ_n).
#[derive(Clone)]
pub struct CycloNum {
    field: Arc<CycloField>,
    coeffs: Vec<Rational>,
}

impl PartialEq for CycloNum {
    fn eq(&self, other: &Self) -> bool {
        self.field.n == other.field.n && self.coeffs == other.coeffs
    }
}

impl Eq for CycloNum {}

impl CycloNum {
    /// Element with the given power-basis coefficients (any length; reduced).
    pub fn from_coeffs(field: &Arc<CycloField>, coeffs: Vec<Rational>) -> Self {
        CycloNum { field: field.clone(), coeffs: field.reduce(coeffs) }
    }

    pub fn from_rational_in(field: &Arc<CycloField>, r: Rational) -> Self {
        let mut coeffs = vec![Rational::zero(); field.phi];
        coeffs[0] = r;
        CycloNum { field: field.clone(), coeffs }
    }

    pub fn conductor(&self) -> u64 {
        self.field.n
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// ζ_n^k.
    pub fn root_of_unity(n: u64, k: i64) -> Self {
        let field = CycloField::get(n);
        let e = k.rem_euclid(n as i64) as usize;
        let mut c = vec![Rational::zero(); e + 1];
        c[e] = Rational::one();
        Self::from_coeffs(&field, c)
    }

    /// Complex conjugate, induced by ζ ↦ ζ^{n-1}.
    pub fn conjugate(&self) -> Self {
        let n = self.field.n as usize;
        let mut c = vec![Rational::zero(); n.max(1)];
        for (k, a) in self.coeffs.iter().enumerate() {
            if !a.is_zero() {
                let e = (n - k) % n;
                c[e] = c[e].add(a);
            }
        }
        Self::from_coeffs(&self.field, c)
    }

    fn check_same(&self, other: &Self) {
        assert_eq!(self.field.n, other.field.n, "cyclotomic conductor mismatch: {} vs {}", self.field.n, other.field.n);
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Field::one(&self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = Field::mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = Field::mul(&base, &base);
            }
        }
        acc
    }

    /// Evaluate the power-basis representation at exp(2πi/n).
    pub fn embed_at(&self, prec: usize) -> BigComplex {
        let powers = self.field.numeric_powers(prec);
        let mut acc = BigComplex::zero(prec);
        for (c, z) in self.coeffs.iter().zip(powers.iter()) {
            if !c.is_zero() {
                let s = crate::numeric::BigReal::from_rational(c, prec);
                acc = &acc + &z.scale(&s);
            }
        }
        acc
    }
}

// Univariate helpers over ℚ, coefficient vectors lowest degree first.
fn trim(v: &mut Vec<Rational>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn poly_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = a.to_vec();
    trim(&mut rem);
    let db = b.len() - 1;
    let lead_inv = b[db].inv().expect("nonzero divisor");
    if rem.len() < b.len() {
        return (vec![], rem);
    }
    let mut quot = vec![Rational::zero(); rem.len() - db];
    for k in (0..quot.len()).rev() {
        let c = rem[k + db].mul(&lead_inv);
        if c.is_zero() {
            continue;
        }
        for (i, bc) in b.iter().enumerate() {
            rem[k + i] = rem[k + i].sub(&c.mul(bc));
        }
        quot[k] = c;
    }
    trim(&mut rem);
    trim(&mut quot);
    (quot, rem)
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] = out[i + j].add(&x.mul(y));
            }
        }
    }
    out
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] = x.clone();
    }
    for (i, y) in b.iter().enumerate() {
        out[i] = out[i].sub(y);
    }
    trim(&mut out);
    out
}

/// Inverse of `a` modulo `m` via the extended Euclidean algorithm.
fn poly_inverse_mod(a: &[Rational], m: &[Rational]) -> Option<Vec<Rational>> {
    let (mut r0, mut r1) = (m.to_vec(), a.to_vec());
    trim(&mut r1);
    let (mut s0, mut s1): (Vec<Rational>, Vec<Rational>) = (vec![], vec![Rational::one()]);
    while !r1.is_empty() {
        let (q, r) = poly_divrem(&r0, &r1);
        let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
    }
    // r0 is the gcd; it must be a nonzero constant.
    if r0.len() != 1 {
        return None;
    }
    let c = r0[0].inv()?;
    Some(s0.iter().map(|x| x.mul(&c)).collect())
}

impl Field for CycloNum {
    type Tag = Arc<CycloField>;

    fn tag(&self) -> Arc<CycloField> {
        self.field.clone()
    }

    fn zero(tag: &Arc<CycloField>) -> Self {
        CycloNum { field: tag.clone(), coeffs: vec![Rational::zero(); tag.phi] }
    }

    fn one(tag: &Arc<CycloField>) -> Self {
        Self::from_rational_in(tag, Rational::one())
    }

    fn from_rational(tag: &Arc<CycloField>, r: &Rational) -> Self {
        Self::from_rational_in(tag, r.clone())
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    fn add(&self, other: &Self) -> Self {
        self.check_same(other);
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.add(b)).collect();
        CycloNum { field: self.field.clone(), coeffs }
    }

    fn sub(&self, other: &Self) -> Self {
        self.check_same(other);
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.sub(b)).collect();
        CycloNum { field: self.field.clone(), coeffs }
    }

    fn mul(&self, other: &Self) -> Self {
        self.check_same(other);
        if let Some(r) = self.as_rational() {
            let coeffs = other.coeffs.iter().map(|c| c.mul(&r)).collect();
            return CycloNum { field: self.field.clone(), coeffs };
        }
        if let Some(r) = other.as_rational() {
            let coeffs = self.coeffs.iter().map(|c| c.mul(&r)).collect();
            return CycloNum { field: self.field.clone(), coeffs };
        }
        Self::from_coeffs(&self.field, poly_mul(&self.coeffs, &other.coeffs))
    }

    fn neg(&self) -> Self {
        CycloNum { field: self.field.clone(), coeffs: self.coeffs.iter().map(Field::neg).collect() }
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if let Some(r) = self.as_rational() {
            return Some(Self::from_rational_in(&self.field, r.inv()?));
        }
        let inv = poly_inverse_mod(&self.coeffs, &self.field.modulus)?;
        Some(Self::from_coeffs(&self.field, inv))
    }

    fn as_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    fn embed(&self, prec: usize) -> BigComplex {
        self.embed_at(prec)
    }

    fn to_complex64(&self) -> Complex64 {
        let n = self.field.n as f64;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| Complex64::from_polar(c.to_f64(), 2.0 * std::f64::consts::PI * k as f64 / n))
            .sum()
    }

    fn field_desc(tag: &Arc<CycloField>) -> FieldDesc {
        FieldDesc::Cyclotomic(tag.n)
    }

    fn tag_from_desc(desc: &FieldDesc) -> Result<Arc<CycloField>, ExactError> {
        match desc {
            FieldDesc::Cyclotomic(n) if *n >= 1 => Ok(CycloField::get(*n)),
            other => Err(ExactError::FieldMismatch(format!("expected a cyclotomic field, got {other}"))),
        }
    }

    fn parse_scalar(tag: &Arc<CycloField>, s: &str) -> Result<Self, ExactError> {
        let v: CycloNum = s.parse()?;
        if v.field.n != tag.n {
            return Err(ExactError::FieldMismatch(format!(
                "scalar lives in Q(zeta_{}), ring expects Q(zeta_{})",
                v.field.n, tag.n
            )));
        }
        Ok(v)
    }

    fn conj(&self) -> Self {
        self.conjugate()
    }

    fn magnitude_bits(&self) -> u64 {
        self.coeffs.iter().map(Field::magnitude_bits).sum()
    }

    fn render_plain(&self) -> String {
        let s = self.to_string();
        match s.rsplit_once(" @ ") {
            Some((body, _)) => body.to_string(),
            None => s,
        }
    }

    fn generator(tag: &Arc<CycloField>) -> Option<Self> {
        Some(CycloNum::root_of_unity(tag.n, 1))
    }
}

impl fmt::Display for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            if k == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                if mag.is_integer() {
                    write!(f, "{mag}*")?;
                } else {
                    write!(f, "({mag})*")?;
                }
            }
            if k == 1 {
                f.write_str("z")?;
            } else {
                write!(f, "z^{k}")?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " @ n={}", self.field.n)
    }
}

impl fmt::Debug for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl std::str::FromStr for CycloNum {
    type Err = ExactError;

    fn from_str(s: &str) -> Result<Self, ExactError> {
        let bad = || ExactError::Parse(s.to_string());
        let (body, n) = s.rsplit_once('@').ok_or_else(bad)?;
        let n: u64 = n.trim().strip_prefix("n=").ok_or_else(bad)?.trim().parse().map_err(|_| bad())?;
        if n == 0 {
            return Err(bad());
        }
        let field = CycloField::get(n);
        let mut coeffs: Vec<Rational> = vec![];
        for (sign, term) in split_signed_terms(body.trim()).ok_or_else(bad)? {
            let (coef, power) = parse_z_term(term).ok_or_else(bad)?;
            if coeffs.len() <= power {
                coeffs.resize(power + 1, Rational::zero());
            }
            let coef = if sign { coef.neg() } else { coef };
            coeffs[power] = coeffs[power].add(&coef);
        }
        Ok(CycloNum::from_coeffs(&field, coeffs))
    }
}

/// Split `a - b + c` at top-level signs; `true` marks a negated term.
fn split_signed_terms(s: &str) -> Option<Vec<(bool, &str)>> {
    let mut out = vec![];
    let mut depth = 0i32;
    let mut start = 0;
    let mut neg = false;
    let bytes = s.as_bytes();
    let mut i = 0;
    // leading sign
    while i < bytes.len() && bytes[i] == b' ' {
        i += 1;
    }
    if i < bytes.len() && (bytes[i] == b'-' || bytes[i] == b'+') {
        neg = bytes[i] == b'-';
        i += 1;
        start = i;
    }
    while i < bytes.len() {
        match bytes[i] {
            b'(' => depth += 1,
            b')' => depth -= 1,
            b'+' | b'-' if depth == 0 && i > start && bytes[i - 1] != b'^' => {
                out.push((neg, s[start..i].trim()));
                neg = bytes[i] == b'-';
                start = i + 1;
            }
            _ => {}
        }
        i += 1;
    }
    out.push((neg, s[start..].trim()));
    if out.iter().any(|(_, t)| t.is_empty()) {
        return None;
    }
    Some(out)
}

fn parse_z_term(t: &str) -> Option<(Rational, usize)> {
    let (coef_str, z_str) = match t.find('z') {
        Some(pos) => (t[..pos].trim().trim_end_matches('*').trim(), Some(t[pos..].trim())),
        None => (t, None),
    };
    let coef = if coef_str.is_empty() {
        Rational::one()
    } else {
        coef_str.trim_start_matches('(').trim_end_matches(')').parse().ok()?
    };
    let power = match z_str {
        None => 0,
        Some("z") => 1,
        Some(z) => z.strip_prefix("z^")?.trim().parse().ok()?,
    };
    Some((coef, power))
}

/// ζ_n^k reduced modulo Φ_n.
pub fn cyclo_root_of_unity(n: u64, k: i64) -> CycloNum {
    CycloNum::root_of_unity(n, k)
}

/// Conductor of the ambient field holding cos(2π/d) and sin(2π/d).
pub fn trig_conductor(d: u64) -> u64 {
    4u64.lcm(&d)
}

/// Exact (cos(2πbj/d), sin(2πbj/d)) in ℚ(ζ_n), n = lcm(4, d).
pub fn cyclo_cos_sin(d: u64, b: i64, j: i64) -> (CycloNum, CycloNum) {
    assert!(d >= 1, "dimension must be positive");
    let n = trig_conductor(d);
    let field = CycloField::get(n);
    let step = (n / d) as i64;
    let e = (step * ((b * j).rem_euclid(d as i64))).rem_euclid(n as i64);
    let w = CycloNum::root_of_unity(n, e);
    let wbar = w.conjugate();
    let half = CycloNum::from_rational_in(&field, Rational::new(1, 2));
    let cos = Field::mul(&Field::add(&w, &wbar), &half);
    // (w - w̄)/(2i) = (w - w̄)·(-i)/2 and -i = ζ_n^{3n/4}
    let minus_i = CycloNum::root_of_unity(n, 3 * (n as i64) / 4);
    let sin = Field::mul(&Field::mul(&Field::sub(&w, &wbar), &minus_i), &half);
    (cos, sin)
}

/// Numeric value of `x` at `precision` bits.
pub fn cyclo_embed(x: &CycloNum, precision: usize) -> BigComplex {
    assert!(precision >= 53, "embedding precision must be at least 53 bits");
    x.embed_at(precision)
}
