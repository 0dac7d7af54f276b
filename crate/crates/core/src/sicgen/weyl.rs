use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::numeric::BigComplex;

/// Index of the Weyl matrix `V^a U^b`, both entries reduced mod d.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeylIndex {
    pub a: usize,
    pub b: usize,
}

impl WeylIndex {
    pub fn new(a: i64, b: i64, d: usize) -> Self {
        let d = d as i64;
        WeylIndex { a: a.rem_euclid(d) as usize, b: b.rem_euclid(d) as usize }
    }

    /// All d² indices, `a` outer and `b` inner.
    pub fn all(d: usize) -> impl Iterator<Item = WeylIndex> {
        (0..d).flat_map(move |a| (0..d).map(move |b| WeylIndex { a, b }))
    }

    pub fn is_identity(&self) -> bool {
        self.a == 0 && self.b == 0
    }
}

/// `(V^a U^b v)_k = ω^{b(a+k)} v_{(a+k) mod d}` with `ω = e^{2πi/d}`.
pub fn apply_weyl(v: &[Complex64], idx: WeylIndex) -> Vec<Complex64> {
    let d = v.len();
    (0..d)
        .map(|k| {
            let j = (idx.a + k) % d;
            let e = (idx.b * (idx.a + k)) % d;
            root64(d, e) * v[j]
        })
        .collect()
}

/// Arbitrary-precision [`apply_weyl`].
pub fn apply_weyl_big(v: &[BigComplex], idx: WeylIndex, prec: usize) -> Vec<BigComplex> {
    let d = v.len();
    (0..d)
        .map(|k| {
            let j = (idx.a + k) % d;
            let e = (idx.b * (idx.a + k)) % d;
            &BigComplex::root_of_unity(d as u64, e as i64, prec) * &v[j]
        })
        .collect()
}

fn root64(d: usize, e: usize) -> Complex64 {
    // exact at quarter turns
    match (4 * e) % (4 * d) {
        0 => return Complex64::new(1.0, 0.0),
        x if x == d => return Complex64::new(0.0, 1.0),
        x if x == 2 * d => return Complex64::new(-1.0, 0.0),
        x if x == 3 * d => return Complex64::new(0.0, -1.0),
        _ => {}
    }
    Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * e as f64 / d as f64)
}
