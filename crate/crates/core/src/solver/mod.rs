//! Bounded model search: satisfiability, validity and entailment up to a domain size, the
//! quantifier-fragment check, and point selection for the fragment without mixed quantifiers.

mod cdcl;
mod encode;

use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::Instant;

use serde::Serialize;
use thiserror::Error;

use crate::exec::Exec;
use crate::semantics::{eval_formula, eval_quantified, eval_rel_term, eval_set_term, Model};
use crate::syntax::{Formula, QuantPair};

pub use cdcl::{Lit, SolveResult, Solver};
pub use encode::Encoding;

/// Default domain-size bound used by the command line.
pub const DEFAULT_BOUND: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SatVerdict {
    Sat(Model),
    /// No model with at most this many points.
    UnsatUpTo(usize),
    /// No model at all: the search reached the completeness threshold.
    Unsat,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ValidityVerdict {
    Valid,
    CountermodelFound(Model),
    NoCountermodelUpTo(usize),
}

impl ValidityVerdict {
    /// Valid, or at least not refuted within the bound.
    pub fn holds_up_to_bound(&self) -> bool {
        !matches!(self, ValidityVerdict::CountermodelFound(_))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum FragmentClass {
    Full,
    NoMixedQuantifiers,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("search budget exhausted at domain size {size} after {conflicts} conflicts")]
    Budget { size: usize, conflicts: u64 },
    #[error("encoding for domain size {size} needs {clauses} clauses, above the cap of {cap}")]
    TooLarge { size: usize, clauses: usize, cap: usize },
    #[error("time limit reached at domain size {size}")]
    Timeout { size: usize },
    #[error("model minimization needs a formula without AE or EA atoms")]
    MixedQuantifiers,
    #[error("model minimization needs a model of the formula")]
    NotAModel,
}

#[derive(Debug, Clone, Copy)]
pub struct SolverConfig {
    /// The constant `c` of the completeness threshold `2^(c*|f|)`.
    pub threshold_constant: f64,
    /// Conflicts allowed per domain size.
    pub max_conflicts: u64,
    /// Clauses allowed per domain size.
    pub max_clauses: usize,
    pub symmetry_breaking: bool,
    /// Wall-clock cut-off for the whole search.
    pub deadline: Option<Instant>,
    pub exec: Exec,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            threshold_constant: 1.0,
            max_conflicts: 5_000_000,
            max_clauses: 20_000_000,
            symmetry_breaking: true,
            deadline: None,
            exec: Exec::default(),
        }
    }
}

impl SolverConfig {
    /// Domain size from which a negative answer is taken as definitive.
    pub fn completeness_threshold(&self, f: &Formula) -> f64 {
        (self.threshold_constant * f.size() as f64).exp2()
    }
}

enum SizeOutcome {
    Sat(Model),
    Unsat,
    Skipped,
    Failed(SolverError),
}

fn search_size(f: &Formula, n: usize, cfg: &SolverConfig, best: &AtomicUsize) -> SizeOutcome {
    if n == 0 {
        let m = Model::with_size(0);
        return if eval_formula(&m, f) { SizeOutcome::Sat(m) } else { SizeOutcome::Unsat };
    }
    if best.load(Ordering::Relaxed) < n {
        return SizeOutcome::Skipped;
    }
    let mut enc = Encoding::new(f, n, cfg.symmetry_breaking);
    if enc.solver.num_clauses() > cfg.max_clauses {
        return SizeOutcome::Failed(SolverError::TooLarge {
            size: n,
            clauses: enc.solver.num_clauses(),
            cap: cfg.max_clauses,
        });
    }
    let expired = || cfg.deadline.is_some_and(|d| Instant::now() >= d);
    let abort = || best.load(Ordering::Relaxed) < n || expired();
    match enc.solver.solve(cfg.max_conflicts, &abort) {
        SolveResult::Sat(assignment) => {
            let m = enc.decode(&assignment);
            debug_assert!(eval_formula(&m, f), "decoded witness must satisfy the formula");
            best.fetch_min(n, Ordering::Relaxed);
            SizeOutcome::Sat(m)
        }
        SolveResult::Unsat => SizeOutcome::Unsat,
        SolveResult::Aborted if best.load(Ordering::Relaxed) < n => SizeOutcome::Skipped,
        SolveResult::Aborted => SizeOutcome::Failed(SolverError::Timeout { size: n }),
        SolveResult::Budget => SizeOutcome::Failed(SolverError::Budget { size: n, conflicts: enc.solver.conflicts }),
    }
}

pub fn is_sat(f: &Formula, max_size: usize) -> Result<SatVerdict, SolverError> {
    is_sat_with(f, max_size, &SolverConfig::default())
}

/// Searches all domain sizes `0..=max_size`; the smallest satisfiable size wins. Sizes are
/// searched concurrently under [`Exec::Parallel`]; larger sizes stop once a smaller one succeeds.
pub fn is_sat_with(f: &Formula, max_size: usize, cfg: &SolverConfig) -> Result<SatVerdict, SolverError> {
    let best = AtomicUsize::new(usize::MAX);
    // largest sizes first so they start early on the pool; results are re-ordered below
    let sizes: Vec<usize> = (0..=max_size).rev().collect();
    let mut outcomes: Vec<(usize, SizeOutcome)> = cfg.exec.map_slice(&sizes, |&n| (n, search_size(f, n, cfg, &best)));
    outcomes.sort_by_key(|(n, _)| *n);
    for (_, outcome) in outcomes {
        match outcome {
            SizeOutcome::Sat(m) => return Ok(SatVerdict::Sat(m)),
            SizeOutcome::Unsat => {}
            SizeOutcome::Failed(e) => return Err(e),
            SizeOutcome::Skipped => unreachable!("a size is only skipped after a smaller one succeeds"),
        }
    }
    if max_size as f64 >= cfg.completeness_threshold(f) {
        Ok(SatVerdict::Unsat)
    } else {
        Ok(SatVerdict::UnsatUpTo(max_size))
    }
}

fn dualize(v: SatVerdict) -> ValidityVerdict {
    match v {
        SatVerdict::Sat(m) => ValidityVerdict::CountermodelFound(m),
        SatVerdict::UnsatUpTo(k) => ValidityVerdict::NoCountermodelUpTo(k),
        SatVerdict::Unsat => ValidityVerdict::Valid,
    }
}

pub fn is_valid(f: &Formula, max_size: usize) -> Result<ValidityVerdict, SolverError> {
    is_valid_with(f, max_size, &SolverConfig::default())
}

pub fn is_valid_with(f: &Formula, max_size: usize, cfg: &SolverConfig) -> Result<ValidityVerdict, SolverError> {
    is_sat_with(&f.clone().not(), max_size, cfg).map(dualize)
}

pub fn entails(gamma: &[Formula], f: &Formula, max_size: usize) -> Result<ValidityVerdict, SolverError> {
    entails_with(gamma, f, max_size, &SolverConfig::default())
}

/// Whether every model of all of `gamma` satisfies `f`, searched through `⋀gamma & !f`.
pub fn entails_with(
    gamma: &[Formula],
    f: &Formula,
    max_size: usize,
    cfg: &SolverConfig,
) -> Result<ValidityVerdict, SolverError> {
    let query = gamma.iter().rev().cloned().fold(f.clone().not(), |acc, g| g.and(acc));
    is_sat_with(&query, max_size, cfg).map(dualize)
}

pub fn detect_fragment(f: &Formula) -> FragmentClass {
    let mut mixed = false;
    f.visit_atoms(&mut |a| {
        if let Formula::Atom(QuantPair::AE | QuantPair::EA, ..) = a {
            mixed = true;
        }
    });
    if mixed {
        FragmentClass::Full
    } else {
        FragmentClass::NoMixedQuantifiers
    }
}

/// Points witnessing the existential content of `atom` in `m`, if it has any.
fn witnesses(m: &Model, atom: &Formula) -> Vec<usize> {
    match atom {
        Formula::Leq(a, b) => {
            let (a, b) = (eval_set_term(m, a), eval_set_term(m, b));
            let found: Vec<usize> = a.iter().find(|x| !b.contains(*x)).into_iter().collect();
            found
        }
        Formula::Atom(q @ (QuantPair::EE | QuantPair::AA), a, b, r) => {
            let (a, b, r) = (eval_set_term(m, a), eval_set_term(m, b), eval_rel_term(m, r));
            let truth = eval_quantified(*q, &a, &b, &r);
            // a true EE needs a related pair, a false AA a pair outside the relation
            let want_edge = match q {
                QuantPair::EE if truth => true,
                QuantPair::AA if !truth => false,
                _ => return Vec::new(),
            };
            let found = a.iter().find_map(|x| b.iter().find(|y| r.contains(x, *y) == want_edge).map(|y| vec![x, y]));
            found.unwrap_or_default()
        }
        _ => Vec::new(),
    }
}

/// Restricts `m` to witnesses for the atoms of `f`, keeping `f` true. At most two points per
/// distinct atom are kept.
pub fn minimize_model(m: &Model, f: &Formula) -> Result<Model, SolverError> {
    if detect_fragment(f) == FragmentClass::Full {
        return Err(SolverError::MixedQuantifiers);
    }
    if !eval_formula(m, f) {
        return Err(SolverError::NotAModel);
    }
    let mut keep: Vec<usize> = f.atoms().into_iter().flat_map(|a| witnesses(m, a)).collect();
    keep.sort_unstable();
    keep.dedup();
    let sub = m.restrict(&keep);
    debug_assert!(eval_formula(&sub, f));
    Ok(sub)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_formula;

    fn f(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    #[test]
    fn unsatisfiable_examples() {
        for s in ["EE(a,b)[0]", "EE(a,b)[r] & AA(a,b)[-r]"] {
            for k in 0..=4 {
                assert_eq!(is_sat(&f(s), k), Ok(SatVerdict::UnsatUpTo(k)), "{s} at {k}");
            }
        }
    }

    #[test]
    fn mixed_witness_has_two_points() {
        let g = f("AE(a,b)[r] & !AA(a,b)[r]");
        match is_sat(&g, 4).unwrap() {
            SatVerdict::Sat(m) => {
                assert!(eval_formula(&m, &g));
                assert_eq!(m.size(), 2);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn smallest_size_wins() {
        // needs three distinct points: a, b, c pairwise disjoint and non-empty
        let g = f("a != 0 & b != 0 & c != 0 & a*b = 0 & a*c = 0 & b*c = 0");
        match is_sat(&g, 5).unwrap() {
            SatVerdict::Sat(m) => assert_eq!(m.size(), 3),
            other => panic!("{other:?}"),
        }
        let seq = SolverConfig { exec: Exec::Sequential, ..Default::default() };
        assert_eq!(is_sat_with(&g, 5, &seq), is_sat(&g, 5));
    }

    #[test]
    fn validity_examples() {
        assert_eq!(is_valid(&f("EA(a,b)[r] -> AE(b,a)[r^]"), 4), Ok(ValidityVerdict::NoCountermodelUpTo(4)));
        assert!(matches!(is_valid(&f("AE(a,b)[r] -> EE(a,b)[r]"), 3), Ok(ValidityVerdict::CountermodelFound(_))));
        // a tiny formula reaches the threshold
        assert_eq!(is_valid(&f("true"), 4), Ok(ValidityVerdict::Valid));
        assert_eq!(is_valid(&f("true"), 3), Ok(ValidityVerdict::NoCountermodelUpTo(3)));
    }

    #[test]
    fn entailment_examples() {
        match entails(&[f("AA(a,b)[r]")], &f("AE(a,b)[r]"), 1).unwrap() {
            ValidityVerdict::CountermodelFound(m) => {
                assert!(eval_formula(&m, &f("AA(a,b)[r] & !AE(a,b)[r]")));
                assert_eq!(m.size(), 1);
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(
            entails(&[f("AE(a,b)[r]"), f("c <= a")], &f("AE(c,b)[r]"), 4),
            Ok(ValidityVerdict::NoCountermodelUpTo(4))
        );
    }

    #[test]
    fn fragments() {
        assert_eq!(detect_fragment(&f("EE(a,b)[r] & a <= b")), FragmentClass::NoMixedQuantifiers);
        assert_eq!(detect_fragment(&f("!AA(a,b)[r]")), FragmentClass::NoMixedQuantifiers);
        assert_eq!(detect_fragment(&f("AE(a,b)[r]")), FragmentClass::Full);
    }

    #[test]
    fn minimization() {
        use crate::semantics::{random_model, Vocabulary};
        let g = f("EE(a,b)[r]");
        let vocab = Vocabulary::new(["a", "b"], ["r"]);
        let m = (0..).map(|s| random_model(10, &vocab, s, 0.5)).find(|m| eval_formula(m, &g)).unwrap();
        let small = minimize_model(&m, &g).unwrap();
        assert!(small.size() <= 2 && eval_formula(&small, &g));

        let mut m = Model::with_size(3);
        m.assign_set_ids("a", &["w1"]).unwrap();
        m.assign_set_ids("b", &["w1", "w2"]).unwrap();
        let small = minimize_model(&m, &f("a <= b")).unwrap();
        assert_eq!(small.size(), 0);
        assert_eq!(minimize_model(&m, &f("b <= a")), Err(SolverError::NotAModel));
        assert_eq!(minimize_model(&m, &f("AE(a,b)[r] | true")), Err(SolverError::MixedQuantifiers));
    }
}
