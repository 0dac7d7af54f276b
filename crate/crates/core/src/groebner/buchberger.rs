use std::cmp::Ordering;
use std::sync::Arc;
use std::time::Instant;

use super::{BuchbergerConfig, GroebnerBasis, GroebnerError, Progress, Stats};
use crate::exact::Field;
use crate::par;
use crate::polyring::{s_poly, Monomial, MonomialOrder, Poly, Term};

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

struct State<'c, K: Field> {
    order: MonomialOrder,
    polys: Vec<Poly<K>>,
    live: Vec<bool>,
    pairs: Vec<Pair>,
    stats: Stats,
    config: &'c BuchbergerConfig,
}

/// Buchberger's algorithm with the normal selection strategy.
///
/// Each round takes the `batch_size` pending pairs with the smallest lcm,
/// reduces their S-polynomials against the basis as it stood at the start of
/// the round (possibly in parallel), then inserts the results in pair order
/// after a second reduction against the current basis. The output is
/// therefore independent of the execution mode and thread count.
pub fn buchberger<K: Field>(
    generators: &[Poly<K>],
    order: MonomialOrder,
    config: &BuchbergerConfig,
) -> Result<GroebnerBasis<K>, GroebnerError> {
    let first = generators.first().ok_or(GroebnerError::NoGenerators)?;
    for g in generators {
        if g.ring().vars() != first.ring().vars() || g.ring().field_desc() != first.ring().field_desc() {
            return Err(crate::polyring::PolyError::RingMismatch.into());
        }
    }
    let ring = Arc::new(first.ring().with_order(order));
    let started = Instant::now();
    let mut state =
        State { order, polys: Vec::new(), live: Vec::new(), pairs: Vec::new(), stats: Stats::default(), config };
    for g in generators {
        let g = g.to_ring(&ring)?;
        let h = state.reduce_current(g);
        if !h.is_zero() {
            state.insert(h.monic());
        }
    }

    while !state.pairs.is_empty() {
        if state.stats.pairs_processed >= config.pair_budget {
            return Err(GroebnerError::BudgetExhausted(state.progress()));
        }
        if config.time_limit.is_some_and(|limit| started.elapsed() > limit) {
            return Err(GroebnerError::TimeLimit(state.progress()));
        }
        state.round();
    }

    let basis: Vec<Poly<K>> = state.polys.iter().zip(&state.live).filter(|(_, &l)| l).map(|(p, _)| p.clone()).collect();
    let mut gb = GroebnerBasis::from_basis(&ring, basis, false);
    gb.stats = state.stats;
    Ok(gb)
}

impl<K: Field> State<'_, K> {
    fn progress(&self) -> Progress {
        Progress {
            pairs_processed: self.stats.pairs_processed,
            basis_size: self.live.iter().filter(|&&l| l).count(),
            pairs_pending: self.pairs.len(),
        }
    }

    fn live_refs(&self) -> Vec<&Poly<K>> {
        self.polys.iter().zip(&self.live).filter(|(_, &l)| l).map(|(p, _)| p).collect()
    }

    fn reduce_current(&self, f: Poly<K>) -> Poly<K> {
        reduce_monic(f, &self.live_refs())
    }

    fn round(&mut self) {
        let order = self.order;
        self.pairs.sort_by(|a, b| order.cmp(&a.lcm, &b.lcm).then(a.j.cmp(&b.j)).then(a.i.cmp(&b.i)));
        let take = self.config.batch_size.max(1).min(self.pairs.len());
        let budget_left = self.config.pair_budget.saturating_sub(self.stats.pairs_processed);
        let take = take.min(budget_left.max(1) as usize);
        let batch: Vec<Pair> = self.pairs.drain(..take).collect();
        self.stats.rounds += 1;
        self.stats.pairs_processed += batch.len() as u64;

        let snapshot = self.live_refs();
        let polys = &self.polys;
        let reduced: Vec<Poly<K>> = par::map(self.config.execution, &batch, |pair| {
            let s = s_poly(&polys[pair.i], &polys[pair.j]).expect("basis elements share a ring");
            reduce_monic(s, &snapshot)
        });
        drop(snapshot);

        for h in reduced {
            if h.is_zero() {
                self.stats.zero_reductions += 1;
                continue;
            }
            let h = self.reduce_current(h);
            if h.is_zero() {
                self.stats.zero_reductions += 1;
                continue;
            }
            self.insert(h.monic());
        }
    }

    fn insert(&mut self, h: Poly<K>) {
        let t = self.polys.len();
        let lm_t = h.leading_monomial().expect("nonzero").clone();
        self.polys.push(h);
        self.live.push(true);
        let others: Vec<usize> = (0..t).filter(|&i| self.live[i]).collect();
        let lm = |s: &Self, i: usize| s.polys[i].leading_monomial().expect("nonzero").clone();

        if !self.config.chain_criterion {
            for i in others {
                let lm_i = lm(self, i);
                if lm_i.is_coprime(&lm_t) {
                    self.stats.skipped_coprime += 1;
                } else {
                    self.pairs.push(Pair { i, j: t, lcm: lm_i.lcm(&lm_t) });
                }
            }
            self.stats.max_basis_size = self.stats.max_basis_size.max(self.live.iter().filter(|&&l| l).count());
            return;
        }

        // Gebauer–Möller update.
        let candidates: Vec<(usize, Monomial, bool)> = others
            .iter()
            .map(|&i| {
                let lm_i = lm(self, i);
                let coprime = lm_i.is_coprime(&lm_t);
                (i, lm_i.lcm(&lm_t), coprime)
            })
            .collect();
        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        for (k, (i, l, coprime)) in candidates.iter().enumerate() {
            let dominated = candidates[k + 1..].iter().chain(kept.iter()).any(|(_, l2, _)| l2.divides(l));
            if *coprime || !dominated {
                kept.push((*i, l.clone(), *coprime));
            } else {
                self.stats.skipped_chain += 1;
            }
        }
        let before = self.pairs.len();
        let polys = &self.polys;
        self.pairs.retain(|p| {
            if !lm_t.divides(&p.lcm) {
                return true;
            }
            let li = polys[p.i].leading_monomial().unwrap().lcm(&lm_t);
            let lj = polys[p.j].leading_monomial().unwrap().lcm(&lm_t);
            li == p.lcm || lj == p.lcm
        });
        self.stats.skipped_chain += (before - self.pairs.len()) as u64;
        for (i, l, coprime) in kept {
            if coprime {
                self.stats.skipped_coprime += 1;
            } else {
                self.pairs.push(Pair { i, j: t, lcm: l });
            }
        }
        for i in others {
            if lm_t.divides(self.polys[i].leading_monomial().unwrap()) {
                self.live[i] = false;
            }
        }
        self.stats.max_basis_size = self.stats.max_basis_size.max(self.live.iter().filter(|&&l| l).count());
    }
}

/// Full reduction of `f` by monic divisors.
fn reduce_monic<K: Field>(f: Poly<K>, divisors: &[&Poly<K>]) -> Poly<K> {
    let ring = f.ring().clone();
    let order = ring.order();
    let lms: Vec<&Monomial> = divisors.iter().map(|g| g.leading_monomial().expect("nonzero divisor")).collect();
    let mut p = f.into_terms();
    let mut head = 0;
    let mut rem: Vec<Term<K>> = Vec::new();
    while head < p.len() {
        let lt = &p[head];
        let hit = lms.iter().enumerate().find_map(|(k, g)| lt.mono.div(g).map(|m| (k, m)));
        match hit {
            Some((k, m)) => {
                debug_assert!(divisors[k].leading_coeff().unwrap().is_one());
                let c = lt.coeff.clone();
                p = merge_sub(&p[head + 1..], &c, &m, &divisors[k].terms()[1..], order);
                head = 0;
            }
            None => {
                rem.push(lt.clone());
                head += 1;
            }
        }
    }
    Poly::from_sorted_terms(&ring, rem)
}

/// `a − c·m·b` for term slices sorted decreasingly.
fn merge_sub<K: Field>(a: &[Term<K>], c: &K, m: &Monomial, b: &[Term<K>], order: MonomialOrder) -> Vec<Term<K>> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut bi = b.iter().map(|t| Term { coeff: t.coeff.mul(c), mono: t.mono.mul(m) }).peekable();
    let mut ai = a.iter().peekable();
    loop {
        match (ai.peek(), bi.peek()) {
            (Some(x), Some(y)) => match order.cmp(&x.mono, &y.mono) {
                Ordering::Greater => out.push(ai.next().unwrap().clone()),
                Ordering::Less => {
                    let y = bi.next().unwrap();
                    out.push(Term { coeff: y.coeff.neg(), mono: y.mono });
                }
                Ordering::Equal => {
                    let x = ai.next().unwrap();
                    let y = bi.next().unwrap();
                    let v = x.coeff.sub(&y.coeff);
                    if !v.is_zero() {
                        out.push(Term { coeff: v, mono: y.mono });
                    }
                }
            },
            (Some(_), None) => out.push(ai.next().unwrap().clone()),
            (None, Some(_)) => {
                let y = bi.next().unwrap();
                out.push(Term { coeff: y.coeff.neg(), mono: y.mono });
            }
            (None, None) => return out,
        }
    }
}

/// The unique reduced basis: monic, minimal, and fully interreduced.
pub fn reduce_basis<K: Field>(gb: &GroebnerBasis<K>) -> GroebnerBasis<K> {
    reduce_with(gb, crate::par::Execution::Parallel)
}

pub(crate) fn reduce_with<K: Field>(gb: &GroebnerBasis<K>, execution: crate::par::Execution) -> GroebnerBasis<K> {
    let order = gb.order();
    let mut polys: Vec<Poly<K>> = gb.basis().iter().filter(|g| !g.is_zero()).map(Poly::monic).collect();
    polys.sort_by(|a, b| order.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    let mut minimal: Vec<Poly<K>> = Vec::new();
    for p in polys {
        let lm = p.leading_monomial().unwrap();
        if !minimal.iter().any(|q| q.leading_monomial().unwrap().divides(lm)) {
            minimal.push(p);
        }
    }
    let reduced: Vec<Poly<K>> = par::map_range(execution, minimal.len(), |k| {
        let others: Vec<&Poly<K>> = minimal.iter().enumerate().filter(|(j, _)| *j != k).map(|(_, q)| q).collect();
        reduce_monic(minimal[k].clone(), &others)
    });
    let mut basis = reduced;
    basis.sort_by(|a, b| order.cmp(b.leading_monomial().unwrap(), a.leading_monomial().unwrap()));
    let mut out = GroebnerBasis::from_basis(gb.ring(), basis, true);
    out.stats = gb.stats.clone();
    out
}

/// Compute a grevlex basis first, then rerun Buchberger on it under lex.
/// The result is the reduced lex basis.
pub fn grevlex_then_lex<K: Field>(
    generators: &[Poly<K>],
    config: &BuchbergerConfig,
) -> Result<GroebnerBasis<K>, GroebnerError> {
    let graded = buchberger(generators, MonomialOrder::Grevlex, config)?;
    let graded = reduce_with(&graded, config.execution);
    let mut lex_config = config.clone();
    lex_config.pair_budget = config.pair_budget.saturating_sub(graded.stats.pairs_processed);
    let lex = buchberger(graded.basis(), MonomialOrder::Lex, &lex_config)?;
    let mut out = reduce_with(&lex, config.execution);
    let mut stats = graded.stats.clone();
    stats.absorb(&lex.stats);
    out.stats = stats;
    Ok(out)
}

/// Buchberger's criterion: every S-polynomial reduces to zero.
pub fn s_pair_fixpoint<K: Field>(gb: &GroebnerBasis<K>) -> bool {
    let basis = gb.basis();
    if basis.iter().any(|g| g.is_zero()) {
        return false;
    }
    let pairs: Vec<(usize, usize)> = (0..basis.len()).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    par::map(crate::par::Execution::Parallel, &pairs, |&(i, j)| {
        let s = s_poly(&basis[i], &basis[j]).expect("common ring");
        crate::polyring::normal_form(&s, basis).is_zero()
    })
    .into_iter()
    .all(|ok| ok)
}
