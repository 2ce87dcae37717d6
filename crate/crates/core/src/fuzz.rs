//! Random terms, formulas and axiom instances, and randomized soundness campaigns.

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::exec::{item_seed, Exec};
use crate::proofs::{instantiate, AxiomName, Bindings};
use crate::semantics::{eval_formula, random_model_with, Model, Vocabulary};
use crate::syntax::{Formula, QuantPair, RelTerm, SetTerm};

/// Shape parameters for random syntax.
#[derive(Debug, Clone)]
pub struct GenConfig {
    pub vocab: Vocabulary,
    /// Maximum nesting depth of term operators.
    pub term_depth: usize,
    /// Maximum nesting depth of connectives.
    pub formula_depth: usize,
    /// Quantifier pairs allowed in atoms.
    pub quants: Vec<QuantPair>,
    /// Whether `a <= b` atoms may appear.
    pub comparisons: bool,
}

impl GenConfig {
    pub fn new(vocab: Vocabulary) -> Self {
        GenConfig { vocab, term_depth: 2, formula_depth: 3, quants: QuantPair::ALL.to_vec(), comparisons: true }
    }

    /// Restricts atoms to `EE` and `AA` (and comparisons).
    pub fn without_mixed_quantifiers(mut self) -> Self {
        self.quants = vec![QuantPair::EE, QuantPair::AA];
        self
    }
}

pub fn random_set_term<R: Rng + ?Sized>(rng: &mut R, vars: &[String], depth: usize) -> SetTerm {
    if depth == 0 || rng.random_bool(0.4) {
        return match rng.random_range(0..10) {
            0 => SetTerm::Zero,
            1 => SetTerm::One,
            _ => SetTerm::var(vars.choose(rng).expect("non-empty vocabulary").as_str()),
        };
    }
    match rng.random_range(0..3) {
        0 => random_set_term(rng, vars, depth - 1).complement(),
        1 => random_set_term(rng, vars, depth - 1).meet(random_set_term(rng, vars, depth - 1)),
        _ => random_set_term(rng, vars, depth - 1).join(random_set_term(rng, vars, depth - 1)),
    }
}

pub fn random_rel_term<R: Rng + ?Sized>(rng: &mut R, vars: &[String], depth: usize) -> RelTerm {
    if depth == 0 || rng.random_bool(0.4) {
        return match rng.random_range(0..10) {
            0 => RelTerm::Zero,
            1 => RelTerm::One,
            _ => RelTerm::var(vars.choose(rng).expect("non-empty vocabulary").as_str()),
        };
    }
    match rng.random_range(0..4) {
        0 => random_rel_term(rng, vars, depth - 1).complement(),
        1 => random_rel_term(rng, vars, depth - 1).converse(),
        2 => random_rel_term(rng, vars, depth - 1).meet(random_rel_term(rng, vars, depth - 1)),
        _ => random_rel_term(rng, vars, depth - 1).join(random_rel_term(rng, vars, depth - 1)),
    }
}

pub fn random_atom<R: Rng + ?Sized>(rng: &mut R, cfg: &GenConfig) -> Formula {
    let sets = &cfg.vocab.set_vars;
    if cfg.comparisons && rng.random_bool(0.2) {
        return Formula::leq(random_set_term(rng, sets, cfg.term_depth), random_set_term(rng, sets, cfg.term_depth));
    }
    let q = *cfg.quants.choose(rng).expect("at least one quantifier pair");
    Formula::atom(
        q,
        random_set_term(rng, sets, cfg.term_depth),
        random_set_term(rng, sets, cfg.term_depth),
        random_rel_term(rng, &cfg.vocab.rel_vars, cfg.term_depth),
    )
}

pub fn random_formula<R: Rng + ?Sized>(rng: &mut R, cfg: &GenConfig) -> Formula {
    fn go<R: Rng + ?Sized>(rng: &mut R, cfg: &GenConfig, depth: usize) -> Formula {
        if depth == 0 || rng.random_bool(0.3) {
            return random_atom(rng, cfg);
        }
        let sub = |rng: &mut R| go(rng, cfg, depth - 1);
        match rng.random_range(0..5) {
            0 => sub(rng).not(),
            1 => sub(rng).and(sub(rng)),
            2 => sub(rng).or(sub(rng)),
            3 => sub(rng).implies(sub(rng)),
            _ => sub(rng).iff(sub(rng)),
        }
    }
    go(rng, cfg, cfg.formula_depth)
}

/// A random formula with at most `max_atoms` atom occurrences.
pub fn random_formula_with_atoms<R: Rng + ?Sized>(rng: &mut R, cfg: &GenConfig, max_atoms: usize) -> Formula {
    let k = rng.random_range(1..=max_atoms.max(1));
    let mut parts: Vec<Formula> = (0..k).map(|_| random_atom(rng, cfg)).collect();
    for p in &mut parts {
        if rng.random_bool(0.4) {
            *p = p.clone().not();
        }
    }
    while parts.len() > 1 {
        let i = rng.random_range(0..parts.len() - 1);
        let (l, r) = (parts.remove(i), parts.remove(i));
        let joined = match rng.random_range(0..4) {
            0 => l.and(r),
            1 => l.or(r),
            2 => l.implies(r),
            _ => l.iff(r),
        };
        parts.insert(i, if rng.random_bool(0.2) { joined.not() } else { joined });
    }
    parts.pop().expect("one part left")
}

/// A random instance of an axiom scheme: every metavariable is replaced by a random term.
pub fn random_axiom_instance<R: Rng + ?Sized>(rng: &mut R, name: AxiomName, cfg: &GenConfig) -> Formula {
    let pattern = name.patterns().choose(rng).expect("schemes have a pattern");
    let mut b = Bindings::default();
    let mut sets = std::collections::BTreeSet::new();
    pattern.collect_set_vars(&mut sets);
    for m in sets {
        b.sets.insert(m, random_set_term(rng, &cfg.vocab.set_vars, cfg.term_depth));
    }
    for m in pattern.rel_vars() {
        b.rels.insert(m, random_rel_term(rng, &cfg.vocab.rel_vars, cfg.term_depth));
    }
    instantiate(pattern, &b)
}

#[derive(Debug, Clone, Serialize)]
pub struct Falsification {
    pub formula: String,
    pub model: crate::semantics::ModelFile,
}

#[derive(Debug, Clone, Serialize)]
pub struct SchemeResult {
    pub scheme: String,
    pub instances: u64,
    pub falsified: u64,
    pub first: Option<Falsification>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SoundnessReport {
    pub seed: u64,
    pub max_points: usize,
    pub schemes: Vec<SchemeResult>,
}

impl SoundnessReport {
    pub fn falsifications(&self) -> u64 {
        self.schemes.iter().map(|s| s.falsified).sum()
    }
}

/// Evaluates `instances` random instances of each scheme, each in its own random model with at
/// most `max_points` points. Item `i` of scheme `s` is generated from a seed derived from
/// `(seed, s, i)`, so the report is the same in every execution mode.
pub fn soundness_campaign(
    schemes: &[AxiomName],
    instances: u64,
    max_points: usize,
    seed: u64,
    exec: Exec,
) -> SoundnessReport {
    let vocab = Vocabulary::new(["a", "b", "c"], ["r", "s"]);
    let cfg = GenConfig::new(vocab.clone());
    let results = schemes
        .iter()
        .map(|&name| {
            let scheme_seed = item_seed(seed, name as u64);
            let fails: Vec<(u64, Formula, Model)> = exec
                .map_range(0..instances, |i| {
                    let mut rng = ChaCha8Rng::seed_from_u64(item_seed(scheme_seed, i));
                    let f = random_axiom_instance(&mut rng, name, &cfg);
                    let n = rng.random_range(0..=max_points);
                    let density = rng.random_range(0.1..0.9);
                    let m = random_model_with(n, &vocab, &mut rng, density);
                    (!eval_formula(&m, &f)).then_some((i, f, m))
                })
                .into_iter()
                .flatten()
                .collect();
            SchemeResult {
                scheme: name.to_string(),
                instances,
                falsified: fails.len() as u64,
                first: fails
                    .into_iter()
                    .next()
                    .map(|(_, f, m)| Falsification { formula: f.to_string(), model: m.to_file() }),
            }
        })
        .collect();
    SoundnessReport { seed, max_points, schemes: results }
}

/// The first of `trials` random models (at most `max_points` points) falsifying `f`, if any.
pub fn find_falsifier(f: &Formula, trials: u64, max_points: usize, seed: u64, exec: Exec) -> Option<Model> {
    let vocab = Vocabulary::of_formula(f);
    exec.find_first(0..trials, |i| {
        let mut rng = ChaCha8Rng::seed_from_u64(item_seed(seed, i));
        let n = rng.random_range(0..=max_points);
        let density = rng.random_range(0.1..0.9);
        let m = random_model_with(n, &vocab, &mut rng, density);
        (!eval_formula(&m, f)).then_some(m)
    })
    .map(|(_, m)| m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::proofs::match_axiom;

    #[test]
    fn instances_match_their_scheme() {
        let cfg = GenConfig::new(Vocabulary::new(["a", "b"], ["r"]));
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for name in AxiomName::all() {
            for _ in 0..50 {
                let f = random_axiom_instance(&mut rng, name, &cfg);
                assert!(match_axiom(name, &f), "{name}: {f}");
            }
        }
    }

    #[test]
    fn small_campaign_is_clean_and_mode_independent() {
        let schemes: Vec<AxiomName> = AxiomName::all().collect();
        let par = soundness_campaign(&schemes, 200, 4, 7, Exec::Parallel);
        let seq = soundness_campaign(&schemes, 200, 4, 7, Exec::Sequential);
        assert_eq!(par.falsifications(), 0);
        assert_eq!(serde_json::to_string(&par).unwrap(), serde_json::to_string(&seq).unwrap());
    }

    #[test]
    fn falsifier_found_for_non_theorem() {
        let f = crate::syntax::parse_formula("EE(a,b)[r] -> EE(b,a)[r]").unwrap();
        let m = find_falsifier(&f, 1000, 3, 0, Exec::default()).unwrap();
        assert!(!eval_formula(&m, &f));
    }

    #[test]
    fn atom_budget_respected() {
        let cfg = GenConfig::new(Vocabulary::new(["a", "b"], ["r"])).without_mixed_quantifiers();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..100 {
            let f = random_formula_with_atoms(&mut rng, &cfg, 5);
            let mut n = 0;
            f.visit_atoms(&mut |_| n += 1);
            assert!(n <= 5);
        }
    }
}
