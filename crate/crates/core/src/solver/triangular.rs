use std::sync::atomic::{AtomicUsize, Ordering as AtomicOrdering};

use super::roots::{cmp_complex, roots_of_coeffs};
use super::{tag_realness, SolutionPoint, SolutionSet, SolveConfig, SolverError, Tags};
use crate::exact::Field;
use crate::groebner::{is_zero_dimensional, quotient_dimension, GroebnerBasis, QuotientDimension};
use crate::numeric::{pow2, BigComplex, BigReal};
use crate::par;
use crate::polyring::{MonomialOrder, Poly};
use crate::sicgen::PolySystem;

/// Back-substitution through a reduced lex basis, last variable first.
///
/// At each level the basis elements living in `x_i … x_{n−1}` are
/// specialized at the partial point; the lowest-degree nonzero one supplies
/// candidate roots, which must also annihilate the others. Finished points
/// are kept when their residual against `system` is within tolerance.
pub fn solve_triangular<K: Field>(
    gb: &GroebnerBasis<K>,
    system: &PolySystem,
    config: &SolveConfig,
) -> Result<SolutionSet, SolverError> {
    if gb.order() != MonomialOrder::Lex {
        return Err(SolverError::NotLex);
    }
    if !is_zero_dimensional(gb) {
        return Err(SolverError::NotZeroDimensional);
    }
    let vars = gb.ring().vars().to_vec();
    if system.vars() != vars {
        return Err(SolverError::VariableMismatch { system: system.vars(), basis: vars });
    }
    let cap = config.branch_cap.unwrap_or_else(|| match quotient_dimension(gb) {
        QuotientDimension::Finite(n) => 10 * n as usize,
        QuotientDimension::Infinite => usize::MAX,
    });
    let prec = config.precision;
    let n = vars.len();
    let levels: Vec<Vec<&Poly<K>>> =
        (0..n).map(|i| gb.basis().iter().filter(|p| p.only_involves_from(i) && p.degree_in(i) > 0).collect()).collect();
    let ctx = Context {
        levels,
        vars: &vars,
        prec,
        zero_tol: pow2(-(prec as i64) / 4, prec),
        check_tol: pow2(-(prec as i64) / 8, prec),
        merge_radius: pow2(-(prec as i64) / 8, prec),
        cap,
        found: AtomicUsize::new(0),
        execution: config.execution,
    };
    let leaves = if n == 0 { vec![vec![]] } else { ctx.extend(n - 1, vec![BigComplex::zero(prec); n])? };

    let residuals = par::map(config.execution, &leaves, |pt| system.max_residual(pt, prec));
    let mut set = SolutionSet::new(vars.clone(), prec, config.tolerances);
    let mut kept: Vec<SolutionPoint> = Vec::new();
    for (coords, residual) in leaves.into_iter().zip(residuals) {
        if residual.is_finite() && residual <= config.tolerances.residual {
            kept.push(SolutionPoint { coords, residual, tags: Tags::default() });
        } else {
            set.rejected += 1;
        }
    }
    kept.sort_by(|a, b| cmp_points(&a.coords, &b.coords));
    let radius = BigReal::from_f64(config.tolerances.cluster, prec);
    for p in kept {
        if !set.points.iter().rev().any(|q| max_distance(&p.coords, &q.coords) <= radius) {
            set.points.push(p);
        }
    }
    tag_realness(&mut set);
    Ok(set)
}

struct Context<'a, K: Field> {
    levels: Vec<Vec<&'a Poly<K>>>,
    vars: &'a [String],
    prec: usize,
    zero_tol: BigReal,
    check_tol: BigReal,
    merge_radius: BigReal,
    cap: usize,
    found: AtomicUsize,
    execution: par::Execution,
}

/// Coefficients in `x_i` after substitution, with absolute-value bounds.
struct Specialized {
    coeffs: Vec<BigComplex>,
    bounds: Vec<BigReal>,
}

impl Specialized {
    fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    fn value_and_bound(&self, z: &BigComplex, prec: usize) -> (BigComplex, BigReal) {
        let za = z.abs();
        let mut v = BigComplex::zero(prec);
        let mut b = BigReal::zero(prec);
        for (c, cb) in self.coeffs.iter().zip(&self.bounds).rev() {
            v = &(&v * z) + c;
            b = &(&b * &za) + cb;
        }
        (v, b)
    }
}

impl<K: Field> Context<'_, K> {
    fn specialize(&self, p: &Poly<K>, var: usize, vals: &[BigComplex]) -> Specialized {
        let prec = self.prec;
        let deg = p.degree_in(var) as usize;
        let mut coeffs = vec![BigComplex::zero(prec); deg + 1];
        let mut bounds = vec![BigReal::zero(prec); deg + 1];
        for t in p.terms() {
            let e = t.mono.exponents();
            let mut v = t.coeff.embed(prec);
            let mut b = v.abs();
            for j in var + 1..e.len() {
                if e[j] > 0 {
                    let pw = vals[j].pow(e[j] as u32);
                    b = &b * &pw.abs();
                    v = &v * &pw;
                }
            }
            let k = e[var] as usize;
            coeffs[k] = &coeffs[k] + &v;
            bounds[k] = &bounds[k] + &b;
        }
        for (c, b) in coeffs.iter_mut().zip(&bounds) {
            if c.abs() <= b * &self.zero_tol {
                *c = BigComplex::zero(prec);
            }
        }
        Specialized { coeffs, bounds }
    }

    fn extend(&self, var: usize, vals: Vec<BigComplex>) -> Result<Vec<Vec<BigComplex>>, SolverError> {
        let specialized: Vec<Specialized> = self.levels[var].iter().map(|p| self.specialize(p, var, &vals)).collect();
        let mut best: Option<(usize, usize)> = None;
        for (idx, s) in specialized.iter().enumerate() {
            match s.degree() {
                None => {}
                // nonzero constant: this partial point does not extend
                Some(0) => return Ok(vec![]),
                Some(d) if best.is_none_or(|(_, bd)| d < bd) => best = Some((idx, d)),
                Some(_) => {}
            }
        }
        let Some((chosen, deg)) = best else {
            return Err(SolverError::Degenerate {
                var: self.vars[var].clone(),
                partial: vals[var + 1..].iter().map(|z| [z.re.to_decimal_string(), z.im.to_decimal_string()]).collect(),
            });
        };
        let roots = roots_of_coeffs(&specialized[chosen].coeffs[..=deg], self.prec);
        let candidates: Vec<BigComplex> = self
            .merge(roots)
            .into_iter()
            .filter(|r| {
                specialized.iter().enumerate().all(|(idx, s)| {
                    if idx == chosen {
                        return true;
                    }
                    let (v, b) = s.value_and_bound(r, self.prec);
                    v.abs() <= &b * &self.check_tol
                })
            })
            .collect();

        let branches = par::map(self.execution, &candidates, |r| {
            let mut next = vals.clone();
            next[var] = r.clone();
            if var == 0 {
                if self.found.fetch_add(1, AtomicOrdering::Relaxed) >= self.cap {
                    return Err(SolverError::BranchCap { cap: self.cap });
                }
                Ok(vec![next])
            } else {
                self.extend(var - 1, next)
            }
        });
        let mut out = Vec::new();
        for b in branches {
            out.extend(b?);
        }
        Ok(out)
    }

    /// Collapse numerically coincident roots (multiple roots) to their mean.
    fn merge(&self, roots: Vec<BigComplex>) -> Vec<BigComplex> {
        let one = BigReal::one(self.prec);
        let mut groups: Vec<Vec<BigComplex>> = Vec::new();
        for r in roots {
            let radius = &self.merge_radius * &r.abs().max(&one);
            match groups.iter_mut().find(|g| (&g[0] - &r).abs() <= radius) {
                Some(g) => g.push(r),
                None => groups.push(vec![r]),
            }
        }
        groups
            .into_iter()
            .map(|g| {
                let n = BigReal::from_i64(g.len() as i64, self.prec);
                let sum = g.iter().skip(1).fold(g[0].clone(), |acc, z| &acc + z);
                BigComplex::new(&sum.re / &n, &sum.im / &n)
            })
            .collect()
    }
}

fn cmp_points(a: &[BigComplex], b: &[BigComplex]) -> std::cmp::Ordering {
    a.iter().zip(b).map(|(x, y)| cmp_complex(x, y)).find(|o| o.is_ne()).unwrap_or(std::cmp::Ordering::Equal)
}

fn max_distance(a: &[BigComplex], b: &[BigComplex]) -> BigReal {
    let prec = a.first().map_or(64, BigComplex::precision);
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(BigReal::zero(prec), |m, d| m.max(&d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Rational;
    use crate::groebner::{grevlex_then_lex, BuchbergerConfig};
    use crate::polyring::{parse_poly, Ring};
    use crate::sicgen::{Equations, SystemKind, SystemMetadata};
    use std::collections::BTreeMap;
    use std::sync::Arc;

    fn system(ring: &Arc<Ring<Rational>>, eqs: &[&str]) -> PolySystem {
        let equations: Vec<Poly<Rational>> = eqs.iter().map(|e| parse_poly(ring, e).unwrap()).collect();
        PolySystem {
            metadata: SystemMetadata {
                kind: SystemKind::RealLines,
                d: 1,
                n_lines: 1,
                rhs: BTreeMap::new(),
                equation_tag: "test".into(),
                labels: vec![],
                merged_classes: vec![],
                extension: false,
            },
            equations: Equations::Rational(equations),
        }
    }

    fn solve(vars: &[&str], eqs: &[&str]) -> SolutionSet {
        let ring = Ring::<Rational>::rational(vars, MonomialOrder::Lex);
        let sys = system(&ring, eqs);
        let Equations::Rational(gens) = &sys.equations else { unreachable!() };
        let gb = grevlex_then_lex(gens, &BuchbergerConfig::default()).unwrap();
        solve_triangular(&gb, &sys, &SolveConfig::default()).unwrap()
    }

    fn as_f64(set: &SolutionSet) -> Vec<Vec<(f64, f64)>> {
        set.points.iter().map(|p| p.coords.iter().map(|z| (z.re.to_f64(), z.im.to_f64())).collect()).collect()
    }

    #[test]
    fn line_through_two_points() {
        let set = solve(&["x", "y"], &["x^2 - 1", "y - x"]);
        assert_eq!(as_f64(&set), vec![vec![(-1.0, 0.0), (-1.0, 0.0)], vec![(1.0, 0.0), (1.0, 0.0)]]);
        assert!(set.points.iter().all(|p| p.tags.real));
    }

    #[test]
    fn four_sign_patterns() {
        let set = solve(&["x", "y"], &["x^2 - 1", "y^2 - 1"]);
        let mut want = vec![];
        for x in [-1.0, 1.0] {
            for y in [-1.0, 1.0] {
                want.push(vec![(x, 0.0), (y, 0.0)]);
            }
        }
        assert_eq!(as_f64(&set), want);
    }

    #[test]
    fn non_shape_position_and_multiplicity() {
        // y² = 0 doubles every point
        let set = solve(&["x", "y"], &["x^2 - 2", "y^2"]);
        assert_eq!(set.len(), 2);
        assert!(set.points.iter().all(|p| p.residual < 1e-60));
        let set = solve(&["x", "y", "z"], &["x + y + z", "x*y + y*z + z*x", "x*y*z - 1"]);
        assert_eq!(set.len(), 6);
        assert_eq!(set.points.iter().filter(|p| p.tags.real).count(), 0);
    }

    #[test]
    fn conjugation_closure() {
        let set = solve(&["x", "y"], &["x^3 - 2", "y^2 + x*y + 1"]);
        assert_eq!(set.len(), 6);
        for p in &set.points {
            let conj: Vec<BigComplex> = p.coords.iter().map(BigComplex::conj).collect();
            assert!(set.points.iter().any(|q| max_distance(&q.coords, &conj).to_f64() < 1e-25));
        }
    }

    #[test]
    fn rejects_bad_input() {
        let ring = Ring::<Rational>::rational(&["x", "y"], MonomialOrder::Lex);
        let sys = system(&ring, &["x^2 - 1"]);
        let gb = GroebnerBasis::from_basis(&ring, vec![parse_poly(&ring, "x^2 - 1").unwrap()], true);
        assert_eq!(solve_triangular(&gb, &sys, &SolveConfig::default()).unwrap_err(), SolverError::NotZeroDimensional);
        let grevlex = Ring::<Rational>::rational(&["x", "y"], MonomialOrder::Grevlex);
        let gb = GroebnerBasis::from_basis(&grevlex, vec![parse_poly(&grevlex, "x").unwrap()], true);
        assert_eq!(solve_triangular(&gb, &sys, &SolveConfig::default()).unwrap_err(), SolverError::NotLex);
        let other = Ring::<Rational>::rational(&["x", "w"], MonomialOrder::Lex);
        let gb = GroebnerBasis::from_basis(
            &other,
            vec![parse_poly(&other, "x").unwrap(), parse_poly(&other, "w").unwrap()],
            true,
        );
        assert!(matches!(
            solve_triangular(&gb, &sys, &SolveConfig::default()),
            Err(SolverError::VariableMismatch { .. })
        ));
    }

    #[test]
    fn branch_cap() {
        let ring = Ring::<Rational>::rational(&["x", "y"], MonomialOrder::Lex);
        let sys = system(&ring, &["x^2 - 1", "y^2 - 1"]);
        let Equations::Rational(gens) = &sys.equations else { unreachable!() };
        let gb = grevlex_then_lex(gens, &BuchbergerConfig::default()).unwrap();
        let config = SolveConfig { branch_cap: Some(3), ..SolveConfig::default() };
        assert_eq!(solve_triangular(&gb, &sys, &config).unwrap_err(), SolverError::BranchCap { cap: 3 });
    }

    #[test]
    fn residual_filter() {
        // The basis is deliberately not the basis of the system's ideal.
        let ring = Ring::<Rational>::rational(&["x"], MonomialOrder::Lex);
        let sys = system(&ring, &["x - 1"]);
        let gb = GroebnerBasis::from_basis(&ring, vec![parse_poly(&ring, "x^2 - 1").unwrap()], true);
        let set = solve_triangular(&gb, &sys, &SolveConfig::default()).unwrap();
        assert_eq!((set.len(), set.rejected), (1, 1));
    }
}
