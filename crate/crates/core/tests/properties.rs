use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use relsyl::bml::translate;
use relsyl::copying::{build_copies, build_copies_with, choose, random_preframe, ChoicePolicy};
use relsyl::fuzz::{random_axiom_instance, random_formula, random_formula_with_atoms, soundness_campaign, GenConfig};
use relsyl::proofs::corpus::corpus;
use relsyl::proofs::{check_proof_with, match_axiom, AxiomName, CheckOptions};
use relsyl::semantics::{eval_formula, eval_set_term, random_model, random_model_with, Vocabulary};
use relsyl::solver::{is_sat_with, minimize_model, SatVerdict, SolverConfig};
use relsyl::syntax::{parse_formula, Formula, RelTerm, SetTerm};
use relsyl::Exec;

fn vocab() -> Vocabulary {
    Vocabulary::new(["a", "b", "c"], ["r", "s"])
}

fn formula(seed: u64) -> Formula {
    random_formula(&mut ChaCha8Rng::seed_from_u64(seed), &GenConfig::new(vocab()))
}

fn model(seed: u64, n: usize) -> relsyl::semantics::Model {
    random_model(n, &vocab(), seed, 0.4)
}

fn dual(f: &Formula) -> Formula {
    match f {
        Formula::Atom(q, a, b, r) => Formula::Atom(q.dual(), a.clone(), b.clone(), r.clone().complement()),
        _ => unreachable!(),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn print_parse_round_trip(seed in any::<u64>()) {
        let f = formula(seed);
        let printed = f.to_string();
        prop_assert_eq!(parse_formula(&printed).unwrap(), f, "{}", printed);
    }

    #[test]
    fn substitution_commutes_with_evaluation(seed in any::<u64>(), n in 0usize..5, t in any::<u64>()) {
        let f = formula(seed);
        let mut rng = ChaCha8Rng::seed_from_u64(t);
        let term = relsyl::fuzz::random_set_term(&mut rng, &["b".to_string(), "c".to_string()], 2);
        let m = model(seed ^ 7, n);
        let mut shifted = m.clone();
        shifted.assign_set("a", eval_set_term(&m, &term));
        prop_assert_eq!(eval_formula(&m, &f.substitute("a", &term)), eval_formula(&shifted, &f));
    }

    #[test]
    fn quantifier_duality(seed in any::<u64>(), n in 0usize..6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let atom = relsyl::fuzz::random_atom(&mut rng, &GenConfig::new(vocab()));
        prop_assume!(matches!(atom, Formula::Atom(..)));
        let m = model(seed, n);
        prop_assert_eq!(eval_formula(&m, &atom), !eval_formula(&m, &dual(&atom)));
    }

    #[test]
    fn converse_swaps_arguments(seed in any::<u64>(), n in 0usize..6) {
        let m = model(seed, n);
        for (q, swapped) in [("EE", "EE"), ("AA", "AA"), ("AE", "EA")] {
            let f = parse_formula(&format!("{q}(a,b*c)[r*-s]")).unwrap();
            let g = parse_formula(&format!("{swapped}(b*c,a)[(r*-s)^]")).unwrap();
            if q == "AE" {
                // AE(a,b)[r] is not EA(b,a)[r^]; only the converse direction of entailment holds
                prop_assert!(!eval_formula(&m, &g) || eval_formula(&m, &f));
            } else {
                prop_assert_eq!(eval_formula(&m, &f), eval_formula(&m, &g));
            }
        }
    }

    #[test]
    fn translation_is_homomorphic_and_linear(seed in any::<u64>()) {
        let f = formula(seed);
        let g = formula(seed.wrapping_add(1));
        let and = translate(&f.clone().and(g.clone()));
        prop_assert_eq!(and, translate(&f).and(translate(&g)));
        prop_assert_eq!(translate(&f.clone().not()), translate(&f).not());
        prop_assert!(translate(&f).size() <= 8 * f.size());
    }

    #[test]
    fn minimizer_bound(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let cfg = GenConfig::new(vocab()).without_mixed_quantifiers();
        let f = random_formula_with_atoms(&mut rng, &cfg, 4);
        let m = random_model_with(12, &vocab(), &mut rng, 0.3);
        prop_assume!(eval_formula(&m, &f));
        let small = minimize_model(&m, &f).unwrap();
        prop_assert!(eval_formula(&small, &f));
        prop_assert!(small.size() <= 2 * f.atoms().len());
    }

    #[test]
    fn axiom_matching_is_closed_under_renaming(seed in any::<u64>(), k in 0usize..27) {
        let name = AxiomName::all().nth(k).unwrap();
        let inst = random_axiom_instance(&mut ChaCha8Rng::seed_from_u64(seed), name, &GenConfig::new(vocab()));
        prop_assert!(match_axiom(name, &inst), "{} {}", name, inst);
        let fresh = SetTerm::var("z").meet(SetTerm::var("y").complement());
        prop_assert!(match_axiom(name, &inst.substitute("a", &fresh)));
        prop_assert!(match_axiom(name, &inst.substitute("b", &SetTerm::One)));
    }

    #[test]
    fn copying_is_deterministic_across_modes(seed in any::<u64>()) {
        let pre = random_preframe(4, 3, seed);
        let ch = choose(&pre, ChoicePolicy::Seeded(seed)).unwrap();
        prop_assert_eq!(&ch, &choose(&pre, ChoicePolicy::Seeded(seed)).unwrap());
        let seq = build_copies_with(&pre, &ch, Exec::Sequential).unwrap();
        let par = build_copies_with(&pre, &ch, Exec::Parallel).unwrap();
        prop_assert_eq!(seq.to_json(&pre), par.to_json(&pre));
        prop_assert_eq!(build_copies(&pre, &ch).unwrap().to_json(&pre), seq.to_json(&pre));
    }
}

#[test]
fn solver_modes_agree() {
    let seq = SolverConfig { exec: Exec::Sequential, ..SolverConfig::default() };
    let par = SolverConfig { exec: Exec::Parallel, ..SolverConfig::default() };
    for seed in 0..60 {
        let f = formula(seed);
        let a = is_sat_with(&f, 3, &seq).unwrap();
        let b = is_sat_with(&f, 3, &par).unwrap();
        match (&a, &b) {
            (SatVerdict::Sat(x), SatVerdict::Sat(y)) => assert_eq!(x.to_json(), y.to_json(), "{f}"),
            _ => assert_eq!(a, b, "{f}"),
        }
    }
}

#[test]
fn campaign_modes_agree() {
    let schemes: Vec<AxiomName> = AxiomName::all().collect();
    let seq = soundness_campaign(&schemes, 200, 4, 11, Exec::Sequential);
    let par = soundness_campaign(&schemes, 200, 4, 11, Exec::Parallel);
    assert_eq!(format!("{seq:?}"), format!("{par:?}"));
}

#[test]
fn proof_checking_modes_agree() {
    for e in corpus() {
        let seq = check_proof_with(&e.proof, &CheckOptions { exec: Exec::Sequential, ..CheckOptions::default() });
        let par = check_proof_with(&e.proof, &CheckOptions { exec: Exec::Parallel, ..CheckOptions::default() });
        assert_eq!(seq, par, "{}", e.name);
    }
}

#[test]
fn relational_terms_round_trip() {
    let r = RelTerm::var("r").meet(RelTerm::var("s").converse().complement()).join(RelTerm::One);
    let f = Formula::atom(relsyl::syntax::QuantPair::EA, SetTerm::var("a"), SetTerm::Zero, r);
    assert_eq!(parse_formula(&f.to_string()).unwrap(), f);
}
