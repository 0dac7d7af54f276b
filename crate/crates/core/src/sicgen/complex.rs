use std::collections::BTreeMap;

use super::{dot, Equations, PolySystem, SicgenError, SystemKind, SystemMetadata};
use crate::exact::Rational;
use crate::polyring::{MonomialOrder, Poly, Ring};

/// The full system for d² unit vectors `u_j = A_j + i B_j` in ℂ^d:
/// `C_{j,l}² + D_{j,l}² − rhs` for every pair `j ≤ l`, with rhs 1 on the
/// diagonal and 1/(d+1) elsewhere.
///
/// Variables are `A{j}_{k}` for all j, k followed by `B{j}_{k}`, indices from 1.
pub fn gen_complex_full(d: usize) -> Result<PolySystem, SicgenError> {
    if d < 1 {
        return Err(SicgenError::Dimension(d));
    }
    let n = d * d;
    let mut vars = Vec::with_capacity(2 * n * d);
    for prefix in ["A", "B"] {
        for j in 1..=n {
            for k in 1..=d {
                vars.push(format!("{prefix}{j}_{k}"));
            }
        }
    }
    let ring = Ring::<Rational>::new(vars, (), MonomialOrder::Lex);
    let real: Vec<Vec<Poly<Rational>>> =
        (0..n).map(|j| (0..d).map(|k| Poly::var(&ring, j * d + k)).collect()).collect();
    let imag: Vec<Vec<Poly<Rational>>> =
        (0..n).map(|j| (0..d).map(|k| Poly::var(&ring, n * d + j * d + k)).collect()).collect();

    let off = Rational::new(1, d as i64 + 1);
    let mut equations = Vec::with_capacity(n * (n + 1) / 2);
    let mut labels = Vec::with_capacity(n * (n + 1) / 2);
    for j in 0..n {
        for l in j..n {
            let c = dot(&real[j], &real[l]).add(&dot(&imag[j], &imag[l]));
            let dpart = dot(&imag[j], &real[l]).sub(&dot(&real[j], &imag[l]));
            let p = c.mul(&c).add(&dpart.mul(&dpart));
            let rhs = if j == l { Rational::one() } else { off.clone() };
            equations.push(p.sub(&Poly::from_rational(&ring, &rhs)));
            labels.push(format!("p_{}_{}", j + 1, l + 1));
        }
    }
    let mut rhs = BTreeMap::new();
    rhs.insert("p_j_j".to_string(), "1".to_string());
    rhs.insert("p_j_l".to_string(), off.to_string());
    let metadata = SystemMetadata {
        kind: SystemKind::ComplexFull,
        d,
        n_lines: n,
        rhs,
        equation_tag: "complex-gram-moduli".to_string(),
        labels,
        merged_classes: vec![],
        extension: false,
    };
    Ok(PolySystem { equations: Equations::Rational(equations), metadata })
}
