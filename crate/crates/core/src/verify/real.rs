use nalgebra::{DMatrix, SymmetricEigen};
use serde::Serialize;

use super::{SeidelSpec, VerifyError};

/// `I + α S` as a numeric matrix.
pub fn seidel_gram(spec: &SeidelSpec, alpha: f64) -> DMatrix<f64> {
    let n = spec.n();
    DMatrix::from_fn(n, n, |j, l| if j == l { 1.0 } else { alpha * f64::from(spec.signs().get(j, l)) })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Reconstruction {
    /// N vectors in ℝ^d.
    pub vectors: Vec<Vec<f64>>,
    pub recon_error: f64,
}

/// Factor a PSD Gram matrix of rank ≤ d as `VᵀV` from its top d
/// eigenpairs; the columns of V are the vectors.
pub fn spectral_reconstruct(gram: &DMatrix<f64>, d: usize, tol: f64) -> Result<Reconstruction, VerifyError> {
    if !gram.is_square() {
        return Err(VerifyError::NotSquare);
    }
    let n = gram.nrows();
    let asym = (gram - gram.transpose()).abs().max();
    if asym > tol {
        return Err(VerifyError::NotSymmetric(asym));
    }
    let eig = SymmetricEigen::new(gram.clone());
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[b].total_cmp(&eig.eigenvalues[a]));
    if let Some(&low) = order.last() {
        if eig.eigenvalues[low] < -tol {
            return Err(VerifyError::NotPsd(eig.eigenvalues[low]));
        }
    }
    let rank = order.iter().filter(|&&k| eig.eigenvalues[k] > tol).count();
    if rank > d {
        return Err(VerifyError::RankTooLarge { rank, d });
    }
    let v = DMatrix::from_fn(d, n, |r, c| match order.get(r) {
        Some(&k) => eig.eigenvalues[k].max(0.0).sqrt() * eig.eigenvectors[(c, k)],
        None => 0.0,
    });
    let recon_error = (v.transpose() * &v - gram).abs().max();
    let vectors = (0..n).map(|c| v.column(c).iter().copied().collect()).collect();
    Ok(Reconstruction { vectors, recon_error })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RealCheck {
    pub ok: bool,
    /// Median of the off-diagonal |⟨u_j, u_l⟩|.
    pub alpha_est: f64,
    pub max_dev: f64,
}

/// Unit norms and a common |inner product| for N ≥ 2 real vectors.
pub fn verify_equiangular_real(vectors: &[Vec<f64>], tol: f64) -> Result<RealCheck, VerifyError> {
    if vectors.len() < 2 {
        return Err(VerifyError::TooFew { min: 2, got: vectors.len() });
    }
    let d = vectors[0].len();
    if let Some((index, v)) = vectors.iter().enumerate().find(|(_, v)| v.len() != d) {
        return Err(VerifyError::VectorLength { index, expected: d, got: v.len() });
    }
    let dot = |a: &[f64], b: &[f64]| a.iter().zip(b).map(|(x, y)| x * y).sum::<f64>();
    let norm_dev = vectors.iter().map(|v| (dot(v, v) - 1.0).abs()).fold(0.0, f64::max);
    let mut off: Vec<f64> = Vec::new();
    for j in 0..vectors.len() {
        for l in j + 1..vectors.len() {
            off.push(dot(&vectors[j], &vectors[l]).abs());
        }
    }
    off.sort_by(f64::total_cmp);
    let mid = off.len() / 2;
    let alpha_est = if off.len() % 2 == 1 { off[mid] } else { (off[mid - 1] + off[mid]) / 2.0 };
    let max_dev = off.iter().map(|x| (x - alpha_est).abs()).fold(norm_dev, f64::max);
    Ok(RealCheck { ok: max_dev <= tol, alpha_est, max_dev })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sicgen::SignMatrix;

    fn hexagon() -> Vec<Vec<f64>> {
        let s = 3f64.sqrt() / 2.0;
        vec![vec![1.0, 0.0], vec![0.5, s], vec![0.5, -s]]
    }

    fn six_lines() -> Vec<Vec<f64>> {
        let a = ((5.0 - 5f64.sqrt()) / 10.0).sqrt();
        let b = ((5.0 + 5f64.sqrt()) / 10.0).sqrt();
        vec![vec![0.0, a, b], vec![0.0, -a, b], vec![a, b, 0.0], vec![-a, b, 0.0], vec![b, 0.0, a], vec![b, 0.0, -a]]
    }

    fn gram_of(vs: &[Vec<f64>]) -> DMatrix<f64> {
        DMatrix::from_fn(vs.len(), vs.len(), |j, l| vs[j].iter().zip(&vs[l]).map(|(x, y)| x * y).sum())
    }

    #[test]
    fn known_sets() {
        let c = verify_equiangular_real(&hexagon(), 1e-12).unwrap();
        assert!(c.ok && (c.alpha_est - 0.5).abs() < 1e-12);
        let c = verify_equiangular_real(&six_lines(), 1e-12).unwrap();
        assert!(c.ok && (c.alpha_est - 5f64.sqrt().recip()).abs() < 1e-12);
        let basis: Vec<Vec<f64>> = (0..3).map(|k| (0..3).map(|i| if i == k { 1.0 } else { 0.0 }).collect()).collect();
        let c = verify_equiangular_real(&basis, 1e-12).unwrap();
        assert!(c.ok && c.alpha_est == 0.0);
        assert!(verify_equiangular_real(&basis[..1], 1e-12).is_err());
    }

    #[test]
    fn median_resists_one_bad_pair() {
        let mut vs = six_lines();
        vs[5] = vec![1.0, 0.0, 0.0];
        let c = verify_equiangular_real(&vs, 1e-12).unwrap();
        assert!(!c.ok);
        assert!((c.alpha_est - 5f64.sqrt().recip()).abs() < 1e-12);
    }

    #[test]
    fn identity_reconstructs() {
        let r = spectral_reconstruct(&DMatrix::identity(3, 3), 3, 1e-10).unwrap();
        assert!(r.recon_error < 1e-14);
        assert!(matches!(
            spectral_reconstruct(&DMatrix::identity(3, 3), 2, 1e-10),
            Err(VerifyError::RankTooLarge { rank: 3, d: 2 })
        ));
    }

    #[test]
    fn hexagon_and_six_line_round_trip() {
        let hex = seidel_gram(&SeidelSpec::new(SignMatrix::from_upper(3, &[1, 1, -1]).unwrap()), 0.5);
        assert!((&hex - gram_of(&hexagon())).abs().max() < 1e-15);
        let r = spectral_reconstruct(&hex, 2, 1e-10).unwrap();
        assert!(r.recon_error <= 1e-10);
        let c = verify_equiangular_real(&r.vectors, 1e-10).unwrap();
        assert!(c.ok && (c.alpha_est - 0.5).abs() < 1e-10);

        let six = gram_of(&six_lines());
        let r = spectral_reconstruct(&six, 3, 1e-10).unwrap();
        assert!(r.recon_error <= 1e-10);
        // same Gram means same configuration up to an orthogonal map
        assert!((gram_of(&r.vectors) - six).abs().max() <= 1e-10);
    }

    #[test]
    fn rejects_bad_matrices() {
        let neg = DMatrix::from_row_slice(2, 2, &[1.0, 2.0, 2.0, 1.0]);
        assert!(matches!(spectral_reconstruct(&neg, 2, 1e-10), Err(VerifyError::NotPsd(_))));
        let asym = DMatrix::from_row_slice(2, 2, &[1.0, 0.5, 0.0, 1.0]);
        assert!(matches!(spectral_reconstruct(&asym, 2, 1e-10), Err(VerifyError::NotSymmetric(_))));
        assert!(matches!(spectral_reconstruct(&DMatrix::zeros(2, 3), 2, 1e-10), Err(VerifyError::NotSquare)));
    }
}
