//! Minimal forcing sets, minimal immune sets, and their transversal duality.

use rayon::prelude::*;

use crate::clutter::Clutter;
use crate::error::{Error, Result};
use crate::forcing::{Forcer, Rule};
use crate::hypergraph::Hypergraph;
use crate::vertex_set::{k_subsets, VertexSet};

/// Exhaustive scans run unguarded up to this many vertices.
pub const DEFAULT_SEARCH_BOUND: usize = 12;
/// Ceiling reachable by opting in (`--allow-large` on the CLI).
pub const MAX_SEARCH_BOUND: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Largest `n` accepted by the subset scans.
    pub bound: usize,
    /// Worker threads; `1` scans sequentially. Output does not depend on it.
    pub jobs: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            bound: DEFAULT_SEARCH_BOUND,
            jobs: 1,
        }
    }
}

impl SearchOptions {
    fn check(&self, n: usize) -> Result<()> {
        if n > self.bound {
            Err(Error::SearchBoundExceeded {
                n,
                bound: self.bound,
            })
        } else {
            Ok(())
        }
    }

    fn pool(&self) -> Option<rayon::ThreadPool> {
        (self.jobs > 1).then(|| {
            rayon::ThreadPoolBuilder::new()
                .num_threads(self.jobs)
                .build()
                .expect("thread pool")
        })
    }
}

pub fn minimal_forcing_family(h: &Hypergraph, rule: Rule) -> Result<Clutter> {
    minimal_forcing_family_with(h, rule, &SearchOptions::default())
}

/// Size-ascending scan. A candidate containing an already-found minimal
/// forcing set is skipped (forcing sets are closed upwards); anything else
/// is tested with a closure. Candidates of one size never contain each
/// other, so each size level can be tested in parallel.
pub fn minimal_forcing_family_with(
    h: &Hypergraph,
    rule: Rule,
    opts: &SearchOptions,
) -> Result<Clutter> {
    opts.check(h.n())?;
    let forcer = Forcer::new(h, rule)?;
    let n = h.n();
    let pool = opts.pool();
    let mut found: Vec<VertexSet> = Vec::new();
    for k in 1..=n {
        let candidates: Vec<VertexSet> = k_subsets(n, k)
            .into_iter()
            .filter(|c| !found.iter().any(|f| f.is_subset(*c)))
            .collect();
        let test = |c: &VertexSet| forcer.is_forcing_unchecked(*c);
        let level: Vec<VertexSet> = match &pool {
            Some(pool) => {
                pool.install(|| candidates.par_iter().copied().filter(|c| test(c)).collect())
            }
            None => candidates.into_iter().filter(|c| test(c)).collect(),
        };
        found.extend(level);
    }
    Ok(Clutter::minimize(n, found))
}

/// Minimal immune sets, as the transversal of the minimal forcing sets.
pub fn minimal_immune_family(h: &Hypergraph, rule: Rule) -> Result<Clutter> {
    minimal_immune_family_with(h, rule, &SearchOptions::default())
}

pub fn minimal_immune_family_with(
    h: &Hypergraph,
    rule: Rule,
    opts: &SearchOptions,
) -> Result<Clutter> {
    minimal_forcing_family_with(h, rule, opts)?.transversal()
}

/// Minimal immune sets by testing every nonempty subset. Immune sets are not
/// closed upwards, so nothing can be pruned.
pub fn minimal_immune_family_direct(h: &Hypergraph, rule: Rule) -> Result<Clutter> {
    minimal_immune_family_direct_with(h, rule, &SearchOptions::default())
}

pub fn minimal_immune_family_direct_with(
    h: &Hypergraph,
    rule: Rule,
    opts: &SearchOptions,
) -> Result<Clutter> {
    opts.check(h.n())?;
    let forcer = Forcer::new(h, rule)?;
    let subsets: Vec<VertexSet> = h.ground().subsets().skip(1).collect();
    let test = |s: &VertexSet| forcer.is_immune_unchecked(*s);
    let immune: Vec<VertexSet> = match opts.pool() {
        Some(pool) => pool.install(|| subsets.par_iter().copied().filter(|s| test(s)).collect()),
        None => subsets.into_iter().filter(|s| test(s)).collect(),
    };
    Ok(Clutter::minimize(h.n(), immune))
}

/// Both families, with the immune side from the direct scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Duality {
    pub forcing: Clutter,
    pub immune: Clutter,
    pub tr_forcing_is_immune: bool,
    pub tr_immune_is_forcing: bool,
}

impl Duality {
    pub fn holds(&self) -> bool {
        self.tr_forcing_is_immune && self.tr_immune_is_forcing
    }
}

pub fn duality_report(h: &Hypergraph, rule: Rule, opts: &SearchOptions) -> Result<Duality> {
    let forcing = minimal_forcing_family_with(h, rule, opts)?;
    let immune = minimal_immune_family_direct_with(h, rule, opts)?;
    let tr_forcing_is_immune = forcing.transversal()? == immune;
    let tr_immune_is_forcing = immune.transversal()? == forcing;
    Ok(Duality {
        forcing,
        immune,
        tr_forcing_is_immune,
        tr_immune_is_forcing,
    })
}

/// `Tr(F) = I` and `Tr(I) = F`, with `I` enumerated independently.
pub fn verify_duality(h: &Hypergraph, rule: Rule) -> Result<bool> {
    Ok(duality_report(h, rule, &SearchOptions::default())?.holds())
}
