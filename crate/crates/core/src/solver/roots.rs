use std::cmp::Ordering;

use num_complex::Complex64;

use super::SolverError;
use crate::exact::Field;
use crate::numeric::{pow2, BigComplex, BigReal};
use crate::polyring::Poly;

const MAX_F64_ITERS: usize = 500;
const MAX_BIG_ITERS: usize = 200;

/// All `deg f` complex roots of a univariate polynomial, with
/// multiplicity, sorted by real then imaginary part.
pub fn univariate_roots<K: Field>(f: &Poly<K>, precision: usize) -> Result<Vec<BigComplex>, SolverError> {
    if f.is_zero() {
        return Err(SolverError::ZeroPolynomial);
    }
    let support = f.support();
    let coeffs: Vec<BigComplex> = match support.as_slice() {
        [] => return Ok(vec![]),
        [var] => {
            f.univariate_coeffs(*var).expect("single support variable").iter().map(|c| c.embed(precision)).collect()
        }
        _ => return Err(SolverError::NotUnivariate(support.len())),
    };
    Ok(roots_of_coeffs(&coeffs, precision))
}

/// Roots of `Σ coeffs[k] x^k`. The leading coefficient must be nonzero.
pub fn roots_of_coeffs(coeffs: &[BigComplex], precision: usize) -> Vec<BigComplex> {
    let zeros = coeffs.iter().take_while(|c| c.is_zero()).count();
    let mut roots = vec![BigComplex::zero(precision); zeros];
    let rest = &coeffs[zeros..];
    let deg = rest.len().saturating_sub(1);
    if deg == 1 {
        roots.push(-&(&rest[0] / &rest[1]));
    } else if deg > 1 {
        let lead = &rest[deg];
        let monic: Vec<BigComplex> = rest.iter().map(|c| (c / lead).with_precision(precision)).collect();
        roots.extend(aberth(&monic, precision));
    }
    sort_roots(&mut roots);
    roots
}

pub(crate) fn cmp_complex(a: &BigComplex, b: &BigComplex) -> Ordering {
    a.re.partial_cmp(&b.re).unwrap_or(Ordering::Equal).then(a.im.partial_cmp(&b.im).unwrap_or(Ordering::Equal))
}

fn sort_roots(roots: &mut [BigComplex]) {
    roots.sort_by(cmp_complex);
}

/// `(p(z), p'(z), Σ |c_k| |z|^k)` by Horner's rule.
fn horner(monic: &[BigComplex], z: &BigComplex, prec: usize) -> (BigComplex, BigComplex, BigReal) {
    let n = monic.len() - 1;
    let mut p = monic[n].clone();
    let mut dp = BigComplex::zero(prec);
    let za = z.abs();
    let mut bound = monic[n].abs();
    for c in monic[..n].iter().rev() {
        dp = &(&dp * z) + &p;
        p = &(&p * z) + c;
        bound = &(&bound * &za) + &c.abs();
    }
    (p, dp, bound)
}

fn aberth(monic: &[BigComplex], prec: usize) -> Vec<BigComplex> {
    let n = monic.len() - 1;
    let start = aberth_f64(monic).unwrap_or_else(|| circle_start(monic));
    let mut z: Vec<BigComplex> = start.iter().map(|w| BigComplex::from_complex64(*w, prec)).collect();
    let mut done = vec![false; n];
    let eps = pow2(-(prec as i64) + 8, prec);
    let tiny = pow2(-(prec as i64), prec);
    for _ in 0..MAX_BIG_ITERS {
        let mut moved = false;
        for k in 0..n {
            if done[k] {
                continue;
            }
            let (p, dp, bound) = horner(monic, &z[k], prec);
            if p.abs() <= &bound * &eps {
                done[k] = true;
                continue;
            }
            let ratio = &p / &dp;
            let mut sum = BigComplex::zero(prec);
            for (j, zj) in z.iter().enumerate() {
                if j != k {
                    let diff = &z[k] - zj;
                    if !diff.is_zero() {
                        sum = &sum + &diff.inv();
                    }
                }
            }
            let denom = &BigComplex::one(prec) - &(&ratio * &sum);
            let step = if denom.is_zero() { ratio } else { &ratio / &denom };
            let scale = z[k].abs().max(&tiny);
            if step.abs() <= &scale * &eps {
                done[k] = true;
            }
            z[k] = &z[k] - &step;
            moved = true;
        }
        if !moved {
            break;
        }
    }
    z
}

/// Double-precision Aberth pass used as a starting point; `None` when the
/// coefficients do not fit or the iteration does not settle.
fn aberth_f64(monic: &[BigComplex]) -> Option<Vec<Complex64>> {
    let c: Vec<Complex64> = monic.iter().map(BigComplex::to_complex64).collect();
    if c.iter().any(|x| !x.re.is_finite() || !x.im.is_finite()) {
        return None;
    }
    let n = c.len() - 1;
    let mut z = circle_start_f64(&c);
    let mut done = vec![false; n];
    for _ in 0..MAX_F64_ITERS {
        let mut all = true;
        for k in 0..n {
            if done[k] {
                continue;
            }
            all = false;
            let (mut p, mut dp) = (c[n], Complex64::new(0.0, 0.0));
            for ck in c[..n].iter().rev() {
                dp = dp * z[k] + p;
                p = p * z[k] + ck;
            }
            let ratio = p / dp;
            let sum: Complex64 = (0..n).filter(|&j| j != k).map(|j| 1.0 / (z[k] - z[j])).sum();
            let step = ratio / (1.0 - ratio * sum);
            if !step.re.is_finite() || !step.im.is_finite() {
                return None;
            }
            z[k] -= step;
            if step.norm() <= 1e-14 * z[k].norm().max(1e-300) {
                done[k] = true;
            }
        }
        if all {
            break;
        }
    }
    z.iter().all(|w| w.re.is_finite() && w.im.is_finite()).then_some(z)
}

fn circle_start_f64(c: &[Complex64]) -> Vec<Complex64> {
    let n = c.len() - 1;
    let radius = c[0].norm().powf(1.0 / n as f64).max(1e-3);
    (0..n).map(|k| Complex64::from_polar(radius, 2.0 * std::f64::consts::PI * k as f64 / n as f64 + 0.4)).collect()
}

fn circle_start(monic: &[BigComplex]) -> Vec<Complex64> {
    // Moduli via the constant term's binary exponent keeps this finite.
    let n = monic.len() - 1;
    let e = monic[0].abs().exponent().unwrap_or(0);
    let radius = 2f64.powf(e as f64 / n as f64).clamp(1e-300, 1e300);
    (0..n).map(|k| Complex64::from_polar(radius, 2.0 * std::f64::consts::PI * k as f64 / n as f64 + 0.4)).collect()
}
