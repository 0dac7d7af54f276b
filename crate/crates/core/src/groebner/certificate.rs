use serde::{Deserialize, Serialize};

use crate::exact::Field;
use crate::polyring::Poly;

/// Claimed identity `Σ g_i f_i = 1 (+ Σ p_i²)`.
#[derive(Debug, Clone)]
pub struct Certificate<K: Field> {
    pub f_list: Vec<Poly<K>>,
    pub g_list: Vec<Poly<K>>,
    pub p_list: Vec<Poly<K>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CertificateTarget {
    /// `Σ g_i f_i = 1`
    One,
    /// `Σ g_i f_i = 1 + Σ p_i²`
    OnePlusSquares,
}

/// Exact check of the claimed identity. Mismatched list lengths or rings
/// make the certificate invalid.
pub fn check_certificate<K: Field>(cert: &Certificate<K>, target: CertificateTarget) -> bool {
    if cert.f_list.len() != cert.g_list.len() {
        return false;
    }
    let Some(ring) = cert.f_list.first().or(cert.p_list.first()).map(|p| p.ring().clone()) else {
        return false;
    };
    let all = cert.f_list.iter().chain(&cert.g_list).chain(&cert.p_list);
    if all.into_iter().any(|p| !p.ring().same_as(&ring)) {
        return false;
    }
    let mut lhs = Poly::zero(&ring);
    for (f, g) in cert.f_list.iter().zip(&cert.g_list) {
        lhs = lhs.add(&g.mul(f));
    }
    let mut rhs = Poly::one(&ring);
    if target == CertificateTarget::OnePlusSquares {
        for p in &cert.p_list {
            rhs = rhs.add(&p.mul(p));
        }
    }
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Rational;
    use crate::polyring::{parse_poly, MonomialOrder, Ring};

    fn cert(f: &[&str], g: &[&str], p: &[&str]) -> Certificate<Rational> {
        let r = Ring::rational(&["x"], MonomialOrder::Lex);
        let parse = |v: &[&str]| v.iter().map(|s| parse_poly(&r, s).unwrap()).collect();
        Certificate { f_list: parse(f), g_list: parse(g), p_list: parse(p) }
    }

    #[test]
    fn examples() {
        assert!(check_certificate(&cert(&["1"], &["1"], &[]), CertificateTarget::One));
        assert!(check_certificate(&cert(&["x^2 + 1"], &["1"], &["x"]), CertificateTarget::OnePlusSquares));
        assert!(!check_certificate(&cert(&["x"], &["x"], &[]), CertificateTarget::One));
        assert!(!check_certificate(&cert(&["x^2 + 1"], &["1"], &["x"]), CertificateTarget::One));
        assert!(!check_certificate(&cert(&["x"], &[], &[]), CertificateTarget::One));
    }
}
