use num_complex::Complex64;

use super::{SolutionSet, SolverError};
use crate::numeric::{BigComplex, BigReal};
use crate::par;
use crate::sicgen::{apply_weyl, WeylIndex};

/// The `k` values of the four closed-form Zauner fiducials at d = 4.
pub const ZAUNER_INDICES: [u32; 4] = [1, 3, 5, 7];

/// Marks points whose coordinates all have |imaginary part| below the
/// realness tolerance.
pub fn tag_realness(set: &mut SolutionSet) {
    let tol = BigReal::from_f64(set.tolerances.realness, set.precision);
    for p in &mut set.points {
        p.tags.real = p.coords.iter().all(|z| z.im.abs() <= tol);
    }
}

/// The fiducial `A + iB` encoded by the variables `x_0 … x_{2d−1}`.
pub fn fiducial_vector(coords: &[BigComplex], d: usize) -> Vec<BigComplex> {
    let prec = coords.first().map_or(64, BigComplex::precision);
    let i = BigComplex::i(prec);
    (0..d).map(|k| &coords[k] + &(&i * &coords[d + k])).collect()
}

/// Realness, sign canonicity and Weyl–Heisenberg orbit tags for the
/// solutions of a fiducial system in dimension `d`.
pub fn classify(mut set: SolutionSet, d: usize) -> Result<SolutionSet, SolverError> {
    if set.vars.len() != 2 * d {
        return Err(SolverError::Dimension { expected: set.vars.len() / 2, got: d });
    }
    tag_realness(&mut set);
    let tol = set.tolerances;
    let zero = BigReal::from_f64(tol.realness, set.precision);
    for p in &mut set.points {
        p.tags.sign_canonical =
            p.tags.real && p.coords.iter().find(|z| z.re.abs() > zero).is_some_and(|z| !z.re.is_negative());
        p.tags.orbit_id = None;
    }

    let real: Vec<usize> = (0..set.points.len()).filter(|&i| set.points[i].tags.real).collect();
    let vectors: Vec<Vec<Complex64>> = real
        .iter()
        .map(|&i| normalized(fiducial_vector(&set.points[i].coords, d).iter().map(BigComplex::to_complex64).collect()))
        .collect();
    // The identity is included so that v and −v land in one orbit.
    let edges: Vec<Vec<usize>> = par::map_range(par::Execution::Parallel, vectors.len(), |i| {
        WeylIndex::all(d)
            .flat_map(|idx| {
                let w = apply_weyl(&vectors[i], idx);
                (0..vectors.len())
                    .filter(|&j| j != i && phase_distance64(&w, &vectors[j]) <= tol.matching)
                    .collect::<Vec<_>>()
            })
            .collect()
    });
    let mut parent: Vec<usize> = (0..vectors.len()).collect();
    for (i, targets) in edges.iter().enumerate() {
        for &j in targets {
            union(&mut parent, i, j);
        }
    }
    let mut ids: Vec<Option<usize>> = vec![None; vectors.len()];
    let mut next = 0;
    for (i, &point) in real.iter().enumerate() {
        let root = find(&mut parent, i);
        let id = *ids[root].get_or_insert_with(|| {
            next += 1;
            next - 1
        });
        set.points[point].tags.orbit_id = Some(id);
    }
    Ok(set)
}

/// Tags sign-canonical real points that equal one of the closed-form
/// fiducials up to a global phase.
pub fn match_zauner(mut set: SolutionSet, d: usize, precision: usize) -> Result<SolutionSet, SolverError> {
    if d != 4 {
        return Err(SolverError::Dimension { expected: 4, got: d });
    }
    if set.vars.len() != 8 {
        return Err(SolverError::Dimension { expected: 4, got: set.vars.len() / 2 });
    }
    let refs: Vec<Vec<BigComplex>> = ZAUNER_INDICES.iter().map(|&k| zauner_fiducial(k, precision)).collect();
    let tol = BigReal::from_f64(set.tolerances.matching, precision);
    for p in &mut set.points {
        let v = fiducial_vector(&p.coords, 4);
        p.tags.zauner_match = p.tags.real && p.tags.sign_canonical && refs.iter().any(|r| phase_distance(&v, r) <= tol);
    }
    Ok(set)
}

/// `e^{−iπ/8}(X ψ_a + ω_8^k Y ψ_b)` with `X = √(3 − 3/√5)/2`,
/// `Y = √(1 + 3/√5)/2`, `ψ_a = (ω_8 + 1, i, ω_8 − 1, i)/√6` and
/// `ψ_b = (0, 1, 0, −1)/√2`.
pub fn zauner_fiducial(k: u32, prec: usize) -> Vec<BigComplex> {
    let r = |n: i64| BigReal::from_i64(n, prec);
    let sqrt5 = r(5).sqrt();
    let three_over = &r(3) / &sqrt5;
    let x = &(&r(3) - &three_over).sqrt() / &r(2);
    let y = &(&r(1) + &three_over).sqrt() / &r(2);
    let w8 = BigComplex::root_of_unity(8, 1, prec);
    let one = BigComplex::one(prec);
    let i = BigComplex::i(prec);
    let zero = BigComplex::zero(prec);
    let inv6 = r(6).sqrt();
    let inv2 = r(2).sqrt();
    let psi_a = [&w8 + &one, i.clone(), &w8 - &one, i];
    let psi_b = [zero.clone(), one.clone(), zero, -&one];
    let wk = BigComplex::root_of_unity(8, k as i64, prec);
    let phase = BigComplex::root_of_unity(16, -1, prec);
    psi_a
        .iter()
        .zip(&psi_b)
        .map(|(a, b)| {
            let ta = BigComplex::new(&a.re / &inv6, &a.im / &inv6).scale(&x);
            let tb = (&wk * &BigComplex::new(&b.re / &inv2, &b.im / &inv2)).scale(&y);
            &phase * &(&ta + &tb)
        })
        .collect()
}

/// `‖w − e^{iφ} v‖` for the optimal phase `φ = arg⟨w, v⟩`.
pub(crate) fn phase_distance(w: &[BigComplex], v: &[BigComplex]) -> BigReal {
    let prec = w.first().map_or(64, BigComplex::precision);
    let ip = w.iter().zip(v).fold(BigComplex::zero(prec), |acc, (a, b)| &acc + &(a * &b.conj()));
    let unit = if ip.is_zero() {
        BigComplex::one(prec)
    } else {
        let m = ip.abs();
        BigComplex::new(&ip.re / &m, &ip.im / &m)
    };
    w.iter().zip(v).fold(BigReal::zero(prec), |acc, (a, b)| &acc + &(a - &(&unit * b)).norm_sqr()).sqrt()
}

fn phase_distance64(w: &[Complex64], v: &[Complex64]) -> f64 {
    let ip: Complex64 = w.iter().zip(v).map(|(a, b)| a * b.conj()).sum();
    let unit = if ip.norm() == 0.0 { Complex64::new(1.0, 0.0) } else { ip / ip.norm() };
    w.iter().zip(v).map(|(a, b)| (a - unit * b).norm_sqr()).sum::<f64>().sqrt()
}

fn normalized(v: Vec<Complex64>) -> Vec<Complex64> {
    let n = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    if n == 0.0 {
        v
    } else {
        v.into_iter().map(|z| z / n).collect()
    }
}

fn find(parent: &mut [usize], mut i: usize) -> usize {
    while parent[i] != i {
        parent[i] = parent[parent[i]];
        i = parent[i];
    }
    i
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        // smaller index becomes the root so ids follow point order
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        parent[hi] = lo;
    }
}
