//! Arbitrary-precision real and complex floats.
//!
//! Thin value types over `astro_float::BigFloat` that carry their working
//! precision, so that arithmetic reads like ordinary numeric code. Binary
//! operations run at the larger of the two operand precisions.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use astro_float::{BigFloat, Consts, Radix, RoundingMode};
use num_bigint::BigInt;
use num_complex::Complex64;

use crate::exact::Rational;

const RM: RoundingMode = RoundingMode::ToEven;

/// Default working precision in bits for numeric solving.
pub const DEFAULT_PRECISION: usize = 256;

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("astro-float constants cache"));
}

fn with_consts<T>(f: impl FnOnce(&mut Consts) -> T) -> T {
    CONSTS.with(|c| f(&mut c.borrow_mut()))
}

/// Arbitrary-precision real number.
#[derive(Clone)]
pub struct BigReal {
    v: BigFloat,
    prec: usize,
}

impl BigReal {
    pub fn zero(prec: usize) -> Self {
        Self::from_f64(0.0, prec)
    }

    pub fn one(prec: usize) -> Self {
        Self::from_f64(1.0, prec)
    }

    pub fn from_f64(x: f64, prec: usize) -> Self {
        BigReal { v: BigFloat::from_f64(x, prec), prec }
    }

    pub fn from_i64(x: i64, prec: usize) -> Self {
        BigReal { v: BigFloat::from_i64(x, prec), prec }
    }

    pub fn from_bigint(x: &BigInt, prec: usize) -> Self {
        if let Ok(small) = i64::try_from(x) {
            return Self::from_i64(small, prec);
        }
        Self::parse(&x.to_string(), prec).expect("integer literal always parses")
    }

    pub fn from_rational(r: &Rational, prec: usize) -> Self {
        // Extra guard bits keep the quotient correctly rounded at `prec`.
        let guard = prec + 32;
        let n = Self::from_bigint(r.numer(), guard);
        let d = Self::from_bigint(r.denom(), guard);
        (&n / &d).with_precision(prec)
    }

    /// Parse a decimal string such as `-0.4857e-3`.
    pub fn parse(s: &str, prec: usize) -> Option<Self> {
        let v = with_consts(|cc| BigFloat::parse(s.trim(), Radix::Dec, prec, RM, cc));
        if v.is_nan() || v.is_inf() {
            None
        } else {
            Some(BigReal { v, prec })
        }
    }

    pub fn pi(prec: usize) -> Self {
        BigReal { v: with_consts(|cc| cc.pi(prec, RM)), prec }
    }

    pub fn precision(&self) -> usize {
        self.prec
    }

    pub fn with_precision(mut self, prec: usize) -> Self {
        // Rounding to a smaller mantissa cannot fail for finite values.
        let _ = self.v.set_precision(prec, RM);
        self.prec = prec;
        self
    }

    pub fn is_zero(&self) -> bool {
        self.v.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.v.is_negative() && !self.v.is_zero()
    }

    pub fn abs(&self) -> Self {
        BigReal { v: self.v.abs(), prec: self.prec }
    }

    pub fn sqrt(&self) -> Self {
        BigReal { v: self.v.sqrt(self.prec, RM), prec: self.prec }
    }

    pub fn cos(&self) -> Self {
        BigReal { v: with_consts(|cc| self.v.cos(self.prec, RM, cc)), prec: self.prec }
    }

    pub fn sin(&self) -> Self {
        BigReal { v: with_consts(|cc| self.v.sin(self.prec, RM, cc)), prec: self.prec }
    }

    /// Angle of `(x, y)` in (−π, π].
    pub fn atan2(y: &BigReal, x: &BigReal) -> BigReal {
        let prec = y.prec.max(x.prec);
        let pi = Self::pi(prec);
        if x.is_zero() {
            let half = &pi / &Self::from_i64(2, prec);
            return if y.is_negative() {
                -half
            } else if y.is_zero() {
                Self::zero(prec)
            } else {
                half
            };
        }
        let ratio = y / x;
        let base = BigReal { v: with_consts(|cc| ratio.v.atan(prec, RM, cc)), prec };
        if !x.is_negative() {
            base
        } else if y.is_negative() {
            &base - &pi
        } else {
            &base + &pi
        }
    }

    pub fn max(&self, other: &Self) -> Self {
        if self >= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    /// Binary exponent `e` such that `2^(e-1) <= |x| < 2^e`; `None` for zero.
    pub fn exponent(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            self.v.exponent().map(i64::from)
        }
    }

    /// Nearest `f64`; saturates to 0 / infinity outside the `f64` range.
    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        match self.exponent() {
            Some(e) if e < -1070 => 0.0,
            Some(e) if e > 1025 => {
                if self.is_negative() {
                    f64::NEG_INFINITY
                } else {
                    f64::INFINITY
                }
            }
            _ => self.to_decimal_string().parse::<f64>().unwrap_or(f64::NAN),
        }
    }

    /// Decimal rendering with all significant digits of the mantissa.
    pub fn to_decimal_string(&self) -> String {
        with_consts(|cc| self.v.format(Radix::Dec, RM, cc)).unwrap_or_else(|_| "NaN".into())
    }
}

impl PartialEq for BigReal {
    fn eq(&self, other: &Self) -> bool {
        self.v.cmp(&other.v) == Some(0)
    }
}

impl PartialOrd for BigReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.v.cmp(&other.v).map(|c| c.cmp(&0))
    }
}

impl fmt::Debug for BigReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_decimal_string())
    }
}

impl fmt::Display for BigReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_decimal_string())
    }
}

macro_rules! real_binop {
    ($tr:ident, $method:ident) => {
        impl<'a> $tr<&'a BigReal> for &'a BigReal {
            type Output = BigReal;
            fn $method(self, rhs: &'a BigReal) -> BigReal {
                let prec = self.prec.max(rhs.prec);
                BigReal { v: self.v.$method(&rhs.v, prec, RM), prec }
            }
        }
        impl $tr<BigReal> for BigReal {
            type Output = BigReal;
            fn $method(self, rhs: BigReal) -> BigReal {
                (&self).$method(&rhs)
            }
        }
    };
}

real_binop!(Add, add);
real_binop!(Sub, sub);
real_binop!(Mul, mul);
real_binop!(Div, div);

impl Neg for &BigReal {
    type Output = BigReal;
    fn neg(self) -> BigReal {
        BigReal { v: -self.v.clone(), prec: self.prec }
    }
}

impl Neg for BigReal {
    type Output = BigReal;
    fn neg(self) -> BigReal {
        -&self
    }
}

/// Arbitrary-precision complex number.
#[derive(Clone, PartialEq)]
pub struct BigComplex {
    pub re: BigReal,
    pub im: BigReal,
}

impl BigComplex {
    pub fn new(re: BigReal, im: BigReal) -> Self {
        BigComplex { re, im }
    }

    pub fn zero(prec: usize) -> Self {
        BigComplex { re: BigReal::zero(prec), im: BigReal::zero(prec) }
    }

    pub fn one(prec: usize) -> Self {
        BigComplex { re: BigReal::one(prec), im: BigReal::zero(prec) }
    }

    pub fn i(prec: usize) -> Self {
        BigComplex { re: BigReal::zero(prec), im: BigReal::one(prec) }
    }

    pub fn from_real(re: BigReal) -> Self {
        let prec = re.precision();
        BigComplex { re, im: BigReal::zero(prec) }
    }

    pub fn from_f64(re: f64, im: f64, prec: usize) -> Self {
        BigComplex { re: BigReal::from_f64(re, prec), im: BigReal::from_f64(im, prec) }
    }

    pub fn from_complex64(z: Complex64, prec: usize) -> Self {
        Self::from_f64(z.re, z.im, prec)
    }

    /// `exp(2πi·k/n)`.
    pub fn root_of_unity(n: u64, k: i64, prec: usize) -> Self {
        let n = n as i64;
        let k = k.rem_euclid(n);
        // Exact values where available so that e.g. i^2 = -1 exactly.
        if k == 0 {
            return Self::one(prec);
        }
        if 2 * k == n {
            return Self::from_f64(-1.0, 0.0, prec);
        }
        if 4 * k == n {
            return Self::i(prec);
        }
        if 4 * k == 3 * n {
            return Self::from_f64(0.0, -1.0, prec);
        }
        let guard = prec + 16;
        let angle = &(&BigReal::pi(guard) * &BigReal::from_i64(2 * k, guard)) / &BigReal::from_i64(n, guard);
        BigComplex { re: angle.cos().with_precision(prec), im: angle.sin().with_precision(prec) }
    }

    pub fn precision(&self) -> usize {
        self.re.precision().max(self.im.precision())
    }

    pub fn with_precision(self, prec: usize) -> Self {
        BigComplex { re: self.re.with_precision(prec), im: self.im.with_precision(prec) }
    }

    pub fn conj(&self) -> Self {
        BigComplex { re: self.re.clone(), im: -&self.im }
    }

    pub fn norm_sqr(&self) -> BigReal {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }

    pub fn abs(&self) -> BigReal {
        self.norm_sqr().sqrt()
    }

    /// Max of |re| and |im|; a cheap magnitude bound within a factor √2.
    pub fn max_abs(&self) -> BigReal {
        self.re.abs().max(&self.im.abs())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn scale(&self, s: &BigReal) -> Self {
        BigComplex { re: &self.re * s, im: &self.im * s }
    }

    /// Argument in (−π, π].
    pub fn arg(&self) -> BigReal {
        BigReal::atan2(&self.im, &self.re)
    }

    pub fn inv(&self) -> Self {
        let n = self.norm_sqr();
        BigComplex { re: &self.re / &n, im: -(&self.im / &n) }
    }

    pub fn to_complex64(&self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.precision());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }
}

impl fmt::Debug for BigComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + {}i)", self.re, self.im)
    }
}

impl<'a> Add<&'a BigComplex> for &'a BigComplex {
    type Output = BigComplex;
    fn add(self, rhs: &'a BigComplex) -> BigComplex {
        BigComplex { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl<'a> Sub<&'a BigComplex> for &'a BigComplex {
    type Output = BigComplex;
    fn sub(self, rhs: &'a BigComplex) -> BigComplex {
        BigComplex { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl<'a> Mul<&'a BigComplex> for &'a BigComplex {
    type Output = BigComplex;
    fn mul(self, rhs: &'a BigComplex) -> BigComplex {
        let re = &(&self.re * &rhs.re) - &(&self.im * &rhs.im);
        let im = &(&self.re * &rhs.im) + &(&self.im * &rhs.re);
        BigComplex { re, im }
    }
}

impl<'a> Div<&'a BigComplex> for &'a BigComplex {
    type Output = BigComplex;
    fn div(self, rhs: &'a BigComplex) -> BigComplex {
        let n = rhs.norm_sqr();
        let re = &(&(&self.re * &rhs.re) + &(&self.im * &rhs.im)) / &n;
        let im = &(&(&self.im * &rhs.re) - &(&self.re * &rhs.im)) / &n;
        BigComplex { re, im }
    }
}

impl Neg for &BigComplex {
    type Output = BigComplex;
    fn neg(self) -> BigComplex {
        BigComplex { re: -&self.re, im: -&self.im }
    }
}

/// `2^e` as a `BigReal`.
pub fn pow2(e: i64, prec: usize) -> BigReal {
    let mut v = BigFloat::from_f64(1.0, prec);
    // astro-float normalizes 1.0 as 0.1b × 2^1
    v.set_exponent((e + 1) as astro_float::Exponent);
    BigReal { v, prec }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_of_unity_matches_f64() {
        for n in 1..13u64 {
            for k in 0..n as i64 {
                let z = BigComplex::root_of_unity(n, k, 128).to_complex64();
                let t = 2.0 * std::f64::consts::PI * k as f64 / n as f64;
                assert!((z.re - t.cos()).abs() < 1e-15 && (z.im - t.sin()).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn rational_conversion() {
        let r = Rational::new(1, 3);
        let x = BigReal::from_rational(&r, 256);
        let back = &x * &BigReal::from_i64(3, 256);
        let err = (&back - &BigReal::one(256)).abs();
        assert!(err < pow2(-250, 256));
    }

    #[test]
    fn decimal_round_trip() {
        let x = BigReal::parse("0.48571221409126403909152153177", 256).unwrap();
        let y = BigReal::parse(&x.to_decimal_string(), 256).unwrap();
        assert_eq!(x, y);
        assert!((x.to_f64() - 0.485_712_214_091_264).abs() < 1e-15);
    }

    #[test]
    fn atan2_quadrants() {
        for (y, x) in
            [(1.0, 1.0), (1.0, -1.0), (-1.0, -1.0), (-1.0, 1.0), (0.0, -1.0), (2.0, 0.0), (-0.3, 0.0), (0.0, 0.0)]
        {
            let got = BigReal::atan2(&BigReal::from_f64(y, 128), &BigReal::from_f64(x, 128)).to_f64();
            assert!((got - f64::atan2(y, x)).abs() < 1e-15, "{y} {x}");
        }
    }

    #[test]
    fn pow2_is_exact() {
        assert_eq!(pow2(0, 64).to_f64(), 1.0);
        assert_eq!(pow2(-3, 64).to_f64(), 0.125);
        assert_eq!(pow2(10, 64).to_f64(), 1024.0);
    }
}
