//! Exhaustive maximization of pattern counts over isomorphism classes
//! of pattern-free hosts, with a fixed worker pool splitting the
//! generation forest at the three-vertex seeds.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::thread;

use serde::{Deserialize, Serialize};
use thiserror::Error;
use turan_core::count::{
    count_complete_bipartite, count_cycles, count_generic, CountError, PatternSpec,
};
use turan_core::enumerate::{descend, seeds_at, ClassFilter};
use turan_core::{canonical_form, canonical_labeling, to_graph6, CanonicalForm, Graph};

/// Soft cap on the host order for general-mode searches.
pub const GENERAL_CAP: usize = 12;
/// Soft cap on the host order for bipartite-mode searches.
pub const BIPARTITE_CAP: usize = 14;

#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub n: usize,
    pub target: PatternSpec,
    pub forbidden: Vec<PatternSpec>,
    pub bipartite: bool,
    pub workers: usize,
    pub node_budget: Option<u64>,
    /// Lifts the soft order caps.
    pub force: bool,
}

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("order {n} exceeds the soft cap {cap} for this mode; pass --force to override")]
    CapExceeded { n: usize, cap: usize },
    #[error("invalid search configuration: {0}")]
    BadConfig(String),
    #[error(transparent)]
    Count(#[from] CountError),
}

/// One extremal class: canonical form plus the graph6 string of the
/// canonically relabeled representative.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ExtremalEntry {
    pub canonical_hex: String,
    pub graph6: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub max_copies: u128,
    pub extremal: Vec<ExtremalEntry>,
    /// Canonical pattern-free classes of the full order that were
    /// examined.
    pub explored: u64,
    /// False when the node budget stopped the sweep early, in which
    /// case `max_copies` is only a lower bound.
    pub complete: bool,
}

/// Copies of the pattern in the host, dispatched to the matching
/// specialized counter.
pub fn copies_of(g: &Graph, p: &PatternSpec) -> Result<u128, CountError> {
    p.validate()?;
    match *p {
        PatternSpec::Cycle(k) => {
            if k > g.vertex_count() {
                Ok(0)
            } else {
                count_cycles(g, k)
            }
        }
        PatternSpec::CompleteBipartite(s, t) => {
            if s + t > g.vertex_count() {
                Ok(0)
            } else {
                count_complete_bipartite(g, s, t)
            }
        }
        PatternSpec::Explicit(ref h) => {
            if h.vertex_count() > g.vertex_count() {
                Ok(0)
            } else {
                count_generic(g, h)
            }
        }
    }
}

pub fn validate_config(cfg: &SearchConfig) -> Result<(), SearchError> {
    cfg.target.validate()?;
    for f in &cfg.forbidden {
        f.validate()?;
    }
    if cfg.n < 1 {
        return Err(SearchError::BadConfig("host order must be >= 1".into()));
    }
    if cfg.workers < 1 {
        return Err(SearchError::BadConfig("worker count must be >= 1".into()));
    }
    let target_form = canonical_form(&cfg.target.to_graph()?);
    for f in &cfg.forbidden {
        if canonical_form(&f.to_graph()?) == target_form {
            return Err(SearchError::BadConfig(
                "target pattern equals a forbidden pattern".into(),
            ));
        }
    }
    let cap = if cfg.bipartite { BIPARTITE_CAP } else { GENERAL_CAP };
    if cfg.n > cap && !cfg.force {
        return Err(SearchError::CapExceeded { n: cfg.n, cap });
    }
    Ok(())
}

struct WorkerResult {
    max: u128,
    argmax: BTreeMap<CanonicalForm, Graph>,
}

/// Exact maximum of target-pattern copies over all (bipartite, in that
/// mode) forbidden-pattern-free isomorphism classes of the configured
/// order, with the complete argmax set sorted by canonical form.
pub fn search_max(cfg: &SearchConfig) -> Result<SearchOutcome, SearchError> {
    validate_config(cfg)?;
    let filter = ClassFilter {
        forbidden: cfg.forbidden.clone(),
        bipartite_only: cfg.bipartite,
    };
    // The forest splits at the children of the two-vertex seeds; each
    // subtree is independent, so workers share nothing but the budget
    // counter and the abort flag.
    let seeds = seeds_at(3.min(cfg.n), cfg.n, &filter)?;
    let explored = AtomicU64::new(0);
    let aborted = AtomicBool::new(false);
    let workers = cfg.workers.min(seeds.len()).max(1);

    let results: Vec<Result<WorkerResult, CountError>> = thread::scope(|scope| {
        let mut handles = Vec::new();
        for w in 0..workers {
            let my_seeds: Vec<_> = seeds
                .iter()
                .enumerate()
                .filter(|(i, _)| i % workers == w)
                .map(|(_, s)| s.clone())
                .collect();
            let filter = &filter;
            let explored = &explored;
            let aborted = &aborted;
            handles.push(scope.spawn(move || {
                let mut local = WorkerResult {
                    max: 0,
                    argmax: BTreeMap::new(),
                };
                let mut failure: Option<CountError> = None;
                for (seed, form) in &my_seeds {
                    let walk = descend(seed, form, cfg.n, filter, &mut |g, form| {
                        if let Some(budget) = cfg.node_budget {
                            if explored.fetch_add(1, Ordering::Relaxed) >= budget {
                                aborted.store(true, Ordering::Relaxed);
                                return false;
                            }
                        } else {
                            explored.fetch_add(1, Ordering::Relaxed);
                        }
                        match copies_of(g, &cfg.target) {
                            Ok(c) => {
                                if c > local.max {
                                    local.max = c;
                                    local.argmax.clear();
                                }
                                if c == local.max {
                                    local.argmax.insert(form.clone(), *g);
                                }
                                true
                            }
                            Err(e) => {
                                failure = Some(e);
                                false
                            }
                        }
                    });
                    match walk {
                        Ok(true) => {}
                        Ok(false) => break,
                        Err(e) => {
                            failure = Some(e);
                            break;
                        }
                    }
                }
                match failure {
                    Some(e) => Err(e),
                    None => Ok(local),
                }
            }));
        }
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });

    let mut max = 0u128;
    let mut merged: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
    for r in results {
        let r = r?;
        if r.max > max {
            max = r.max;
            merged.clear();
        }
        if r.max == max {
            merged.extend(r.argmax);
        }
    }
    // An all-zero-count search still reports the argmax set (every
    // admissible class), matching the sequential semantics.
    let extremal = merged
        .into_iter()
        .map(|(form, g)| {
            let (_, perm) = canonical_labeling(&g);
            ExtremalEntry {
                canonical_hex: form.to_hex(),
                graph6: to_graph6(&g.permuted(&perm)),
            }
        })
        .collect();
    Ok(SearchOutcome {
        max_copies: max,
        extremal,
        // The counter may overshoot the budget by up to the worker
        // count; clamp so the budgeted figure stays bounded.
        explored: explored
            .load(Ordering::Relaxed)
            .min(cfg.node_budget.unwrap_or(u64::MAX)),
        complete: !aborted.load(Ordering::Relaxed),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(n: usize, target: PatternSpec, forbid: PatternSpec, bipartite: bool) -> SearchConfig {
        SearchConfig {
            n,
            target,
            forbidden: vec![forbid],
            bipartite,
            workers: 1,
            node_budget: None,
            force: false,
        }
    }

    #[test]
    fn bipartite_c4_over_c6_free_at_six_is_k24() {
        // Max C4 count over 6-vertex C6-free bipartite graphs is 6,
        // attained only by K_{2,4}.
        let out = search_max(&cfg(6, PatternSpec::Cycle(4), PatternSpec::Cycle(6), true)).unwrap();
        assert_eq!(out.max_copies, 6);
        assert_eq!(out.extremal.len(), 1);
        let g = turan_core::from_graph6(&out.extremal[0].graph6).unwrap();
        assert!(turan_core::construct::matches_thm1_extremal(&g));
        assert!(out.complete);
    }

    #[test]
    fn bipartite_c6_over_c8_free_at_seven_is_k34() {
        let out = search_max(&cfg(7, PatternSpec::Cycle(6), PatternSpec::Cycle(8), true)).unwrap();
        assert_eq!(out.max_copies, 24);
        assert_eq!(out.extremal.len(), 1);
        let g = turan_core::from_graph6(&out.extremal[0].graph6).unwrap();
        assert!(turan_core::construct::matches_thm2_extremal(&g));
    }

    #[test]
    fn general_mode_dominates_bipartite_mode() {
        for n in 4..=6 {
            let b =
                search_max(&cfg(n, PatternSpec::Cycle(4), PatternSpec::Cycle(6), true)).unwrap();
            let g =
                search_max(&cfg(n, PatternSpec::Cycle(4), PatternSpec::Cycle(6), false)).unwrap();
            assert!(g.max_copies >= b.max_copies, "n={}", n);
        }
    }

    #[test]
    fn worker_counts_agree() {
        for workers in [1usize, 2, 4, 7] {
            let mut c = cfg(7, PatternSpec::Cycle(4), PatternSpec::Cycle(6), false);
            c.workers = workers;
            let out = search_max(&c).unwrap();
            let mut base = cfg(7, PatternSpec::Cycle(4), PatternSpec::Cycle(6), false);
            base.workers = 1;
            let expect = search_max(&base).unwrap();
            assert_eq!(out.max_copies, expect.max_copies);
            assert_eq!(out.extremal, expect.extremal);
            assert_eq!(out.explored, expect.explored);
            assert_eq!(out.complete, expect.complete);
        }
    }

    #[test]
    fn cap_is_enforced_and_liftable() {
        let c = cfg(13, PatternSpec::Cycle(4), PatternSpec::Cycle(6), false);
        assert!(matches!(
            search_max(&c),
            Err(SearchError::CapExceeded { n: 13, cap: 12 })
        ));
        let c = cfg(13, PatternSpec::Cycle(4), PatternSpec::Cycle(6), true);
        // Bipartite cap is 14, so 13 is fine in that mode.
        validate_config(&c).unwrap();
    }

    #[test]
    fn target_equal_to_forbidden_is_rejected() {
        let c = cfg(5, PatternSpec::Cycle(4), PatternSpec::CompleteBipartite(2, 2), false);
        assert!(matches!(search_max(&c), Err(SearchError::BadConfig(_))));
    }

    #[test]
    fn budget_marks_result_incomplete() {
        let mut c = cfg(7, PatternSpec::Cycle(4), PatternSpec::Cycle(6), false);
        c.node_budget = Some(5);
        let out = search_max(&c).unwrap();
        assert!(!out.complete);
        assert!(out.explored <= 5);
    }
}
