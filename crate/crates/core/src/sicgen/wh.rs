use std::collections::BTreeMap;

use super::{Equations, PolySystem, SicgenError, SystemKind, SystemMetadata, WeylIndex};
use crate::exact::{cyclo_cos_sin, trig_conductor, CycloField, CycloNum, Field, Rational};
use crate::par::{self, Execution};
use crate::polyring::{MonomialOrder, Poly, Ring};

/// The squared overlap moduli `p_{a,b} = |⟨V^a U^b v, v⟩|²` for a
/// Weyl–Heisenberg fiducial `v = A + iB`, with variables
/// `x_0 … x_{d−1} = A` and `x_d … x_{2d−1} = B`.
///
/// Emits `p_{0,0} − 1`, then `p_{a,b} − 1/(d+1)` in (a, b) order keeping the
/// first of any coincident polynomials, then `x_d` when `phase_fix` is set.
pub fn gen_wh_system(d: usize, phase_fix: bool) -> Result<PolySystem, SicgenError> {
    if d < 2 {
        return Err(SicgenError::Dimension(d));
    }
    let overlaps = overlap_polys(d, Execution::Parallel);
    let ring = overlaps[0].1.ring().clone();
    let one = CycloNum::one(ring.field());
    let rhs_off = Rational::new(1, d as i64 + 1);

    let mut equations: Vec<Poly<CycloNum>> = Vec::new();
    let mut classes: Vec<(Poly<CycloNum>, Vec<WeylIndex>)> = Vec::new();
    let mut labels = Vec::new();
    for (idx, p) in overlaps {
        if let Some((_, members)) = classes.iter_mut().find(|(q, _)| *q == p) {
            members.push(idx);
            continue;
        }
        let shifted = if idx.is_identity() {
            p.sub(&Poly::constant(&ring, one.clone()))
        } else {
            p.sub(&Poly::from_rational(&ring, &rhs_off))
        };
        equations.push(shifted);
        labels.push(format!("p_{}_{}", idx.a, idx.b));
        classes.push((p, vec![idx]));
    }
    if phase_fix {
        equations.push(Poly::var(&ring, d));
        labels.push("phase_fix".to_string());
    }

    let merged_classes =
        classes.iter().filter(|(_, m)| m.len() > 1).map(|(_, m)| m.iter().map(|i| [i.a, i.b]).collect()).collect();
    let mut rhs = BTreeMap::new();
    rhs.insert("p_0_0".to_string(), "1".to_string());
    rhs.insert("p_a_b".to_string(), rhs_off.to_string());
    if phase_fix {
        rhs.insert("phase_fix".to_string(), "0".to_string());
    }
    let metadata = SystemMetadata {
        kind: SystemKind::WhFiducial,
        d,
        n_lines: d * d,
        rhs,
        equation_tag: "wh-fiducial-overlaps".to_string(),
        labels,
        merged_classes,
        extension: false,
    };
    Ok(PolySystem { equations: Equations::Cyclotomic(equations).downgrade(), metadata })
}

/// All `p_{a,b}` over ℚ(ζ_n), n = lcm(4, d), in (a, b) order.
pub fn overlap_polys(d: usize, execution: Execution) -> Vec<(WeylIndex, Poly<CycloNum>)> {
    let field = CycloField::get(trig_conductor(d as u64));
    let ring = Ring::<CycloNum>::with_indexed_vars("x", 2 * d, field, MonomialOrder::Lex);
    let a_var: Vec<Poly<CycloNum>> = (0..d).map(|j| Poly::var(&ring, j)).collect();
    let b_var: Vec<Poly<CycloNum>> = (0..d).map(|j| Poly::var(&ring, d + j)).collect();

    // C_j^{(a)} = A_j A_{j−a} + B_j B_{j−a},  D_j^{(a)} = A_{j−a} B_j − A_j B_{j−a}
    let c_terms: Vec<Vec<Poly<CycloNum>>> = (0..d)
        .map(|a| {
            (0..d)
                .map(|j| {
                    let s = (j + d - a) % d;
                    a_var[j].mul(&a_var[s]).add(&b_var[j].mul(&b_var[s]))
                })
                .collect()
        })
        .collect();
    let d_terms: Vec<Vec<Poly<CycloNum>>> = (0..d)
        .map(|a| {
            (0..d)
                .map(|j| {
                    let s = (j + d - a) % d;
                    a_var[s].mul(&b_var[j]).sub(&a_var[j].mul(&b_var[s]))
                })
                .collect()
        })
        .collect();

    let indices: Vec<WeylIndex> = WeylIndex::all(d).collect();
    par::map(execution, &indices, |&idx| {
        let mut re = Poly::zero(&ring);
        let mut im = Poly::zero(&ring);
        for j in 0..d {
            let (alpha, beta) = cyclo_cos_sin(d as u64, idx.b as i64, j as i64);
            let c = &c_terms[idx.a][j];
            let dd = &d_terms[idx.a][j];
            re = re.add(&c.scale(&alpha)).sub(&dd.scale(&beta));
            im = im.add(&c.scale(&beta)).add(&dd.scale(&alpha));
        }
        (idx, re.mul(&re).add(&im.mul(&im)))
    })
}
