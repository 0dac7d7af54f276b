//! Gröbner bases: Buchberger's algorithm, reduction, elimination, dimension
//! diagnostics and certificate checking.

mod buchberger;
mod cache;
mod certificate;
mod ideal;

use std::sync::Arc;
use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::exact::Field;
use crate::par::Execution;
use crate::polyring::{MonomialOrder, Poly, PolyError, Ring};

pub use buchberger::{buchberger, grevlex_then_lex, reduce_basis, s_pair_fixpoint};
pub use cache::{content_hash, BasisFile, BasisFlags};
pub use certificate::{check_certificate, Certificate, CertificateTarget};
pub use ideal::{elimination_ideal, is_zero_dimensional, quotient_dimension, QuotientDimension};

/// Default cap on the number of S-pairs processed.
pub const DEFAULT_PAIR_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, thiserror::Error)]
pub enum GroebnerError {
    #[error("pair budget exhausted after {} pairs ({} basis elements, {} pairs pending)", .0.pairs_processed, .0.basis_size, .0.pairs_pending)]
    BudgetExhausted(Progress),
    #[error("time limit reached after {} pairs ({} basis elements, {} pairs pending)", .0.pairs_processed, .0.basis_size, .0.pairs_pending)]
    TimeLimit(Progress),
    #[error("operation requires a lex basis, got {0}")]
    NotLex(MonomialOrder),
    #[error("generator list is empty")]
    NoGenerators,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Snapshot of an interrupted run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Progress {
    pub pairs_processed: u64,
    pub basis_size: usize,
    pub pairs_pending: usize,
}

/// Counters of a Buchberger run.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stats {
    /// Pairs whose S-polynomial was reduced.
    pub pairs_processed: u64,
    pub zero_reductions: u64,
    pub skipped_coprime: u64,
    pub skipped_chain: u64,
    pub rounds: u64,
    pub max_basis_size: usize,
}

impl Stats {
    fn absorb(&mut self, other: &Stats) {
        self.pairs_processed += other.pairs_processed;
        self.zero_reductions += other.zero_reductions;
        self.skipped_coprime += other.skipped_coprime;
        self.skipped_chain += other.skipped_chain;
        self.rounds += other.rounds;
        self.max_basis_size = self.max_basis_size.max(other.max_basis_size);
    }
}

/// Tuning knobs; none of them changes the final reduced basis.
#[derive(Debug, Clone)]
pub struct BuchbergerConfig {
    pub pair_budget: u64,
    /// Gebauer–Möller chain criterion in addition to the coprime criterion.
    pub chain_criterion: bool,
    /// Pairs reduced per round. Fixed so results do not depend on thread count.
    pub batch_size: usize,
    pub execution: Execution,
    /// Wall-clock guard; exceeding it aborts with [`GroebnerError::TimeLimit`].
    pub time_limit: Option<Duration>,
}

impl Default for BuchbergerConfig {
    fn default() -> Self {
        BuchbergerConfig {
            pair_budget: DEFAULT_PAIR_BUDGET,
            chain_criterion: true,
            batch_size: 16,
            execution: Execution::Parallel,
            time_limit: None,
        }
    }
}

/// A Gröbner basis sorted by decreasing leading monomial.
#[derive(Debug, Clone)]
pub struct GroebnerBasis<K: Field> {
    ring: Arc<Ring<K>>,
    basis: Vec<Poly<K>>,
    reduced: bool,
    stats: Stats,
}

impl<K: Field> PartialEq for GroebnerBasis<K> {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_as(&other.ring) && self.reduced == other.reduced && self.basis == other.basis
    }
}

impl<K: Field> GroebnerBasis<K> {
    /// Wrap polynomials already known to form a Gröbner basis.
    pub fn from_basis(ring: &Arc<Ring<K>>, basis: Vec<Poly<K>>, reduced: bool) -> Self {
        GroebnerBasis { ring: ring.clone(), basis, reduced, stats: Stats::default() }
    }

    pub fn ring(&self) -> &Arc<Ring<K>> {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.ring.order()
    }

    pub fn basis(&self) -> &[Poly<K>] {
        &self.basis
    }

    pub fn into_basis(self) -> Vec<Poly<K>> {
        self.basis
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn stats(&self) -> &Stats {
        &self.stats
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    /// Is `f` in the ideal?
    pub fn contains(&self, f: &Poly<K>) -> bool {
        crate::polyring::normal_form(f, &self.basis).is_zero()
    }

    /// The unit ideal has reduced basis `{1}`.
    pub fn is_unit_ideal(&self) -> bool {
        self.basis.iter().any(|g| g.is_constant() && !g.is_zero())
    }
}
