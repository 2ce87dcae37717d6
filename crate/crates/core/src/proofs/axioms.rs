//! Axiom schemes and syntactic scheme matching.
//!
//! Each scheme is written in the ordinary concrete syntax; its set variables and relational
//! variables act as metavariables. A formula is an instance when it is obtained by replacing
//! metavariables consistently with terms. `QQ` stands for an arbitrary quantifier pair.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::syntax::{parse_formula, Formula, QuantPair, RelTerm, SetTerm};

#[allow(non_camel_case_types)]
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AxiomName {
    BA_REFL,
    BA_TRANS,
    BA_MEET_L,
    BA_MEET_R,
    BA_MEET_GLB,
    BA_JOIN_L,
    BA_JOIN_R,
    BA_JOIN_LUB,
    BA_BOT,
    BA_TOP,
    BA_DIST,
    BA_COMPL_MEET,
    BA_COMPL_JOIN,
    AEQ1,
    AEQ2,
    A0,
    AU1,
    AU2,
    AL1,
    AL2,
    AL3,
    A0R,
    A1R,
    ACAP,
    ACUP,
    ANEG,
    ACONV,
}

const TABLE: &[(AxiomName, &str, &str)] = &[
    (AxiomName::BA_REFL, "BA_REFL", "a <= a"),
    (AxiomName::BA_TRANS, "BA_TRANS", "a <= b & b <= c -> a <= c"),
    (AxiomName::BA_MEET_L, "BA_MEET_L", "a*b <= a"),
    (AxiomName::BA_MEET_R, "BA_MEET_R", "a*b <= b"),
    (AxiomName::BA_MEET_GLB, "BA_MEET_GLB", "c <= a & c <= b -> c <= a*b"),
    (AxiomName::BA_JOIN_L, "BA_JOIN_L", "a <= a+b"),
    (AxiomName::BA_JOIN_R, "BA_JOIN_R", "b <= a+b"),
    (AxiomName::BA_JOIN_LUB, "BA_JOIN_LUB", "a <= c & b <= c -> a+b <= c"),
    (AxiomName::BA_BOT, "BA_BOT", "0 <= a"),
    (AxiomName::BA_TOP, "BA_TOP", "a <= 1"),
    (AxiomName::BA_DIST, "BA_DIST", "a*(b+c) <= a*b+a*c"),
    (AxiomName::BA_COMPL_MEET, "BA_COMPL_MEET", "a*-a <= 0"),
    (AxiomName::BA_COMPL_JOIN, "BA_COMPL_JOIN", "1 <= a+-a"),
    (AxiomName::AEQ1, "AEQ1", "QQ(a,b)[x] & a = c -> QQ(c,b)[x]"),
    (AxiomName::AEQ2, "AEQ2", "QQ(a,b)[x] & b = c -> QQ(a,c)[x]"),
    (AxiomName::A0, "A0", "a = 0 | b = 0 -> !EE(a,b)[x]"),
    (AxiomName::AU1, "AU1", "EE(a+b,c)[x] <-> EE(a,c)[x] | EE(b,c)[x]"),
    (AxiomName::AU2, "AU2", "EE(a,b+c)[x] <-> EE(a,b)[x] | EE(a,c)[x]"),
    (AxiomName::AL1, "AL1", "AE(a,b)[x] -> a*c = 0 | EE(c,b)[x]"),
    (AxiomName::AL2, "AL2", "AA(a,b)[x] -> b*c = 0 | AE(a,c)[x]"),
    (AxiomName::AL3, "AL3", "!EA(a,b)[x] -> a*c = 0 | !AA(c,b)[x]"),
    (AxiomName::A0R, "A0R", "!EE(a,b)[0]"),
    (AxiomName::A1R, "A1R", "AA(a,b)[1]"),
    (AxiomName::ACAP, "ACAP", "AA(a,b)[x*y] <-> AA(a,b)[x] & AA(a,b)[y]"),
    (AxiomName::ACUP, "ACUP", "EE(a,b)[x+y] <-> EE(a,b)[x] | EE(a,b)[y]"),
    (AxiomName::ANEG, "ANEG", "AA(a,b)[-x] <-> !EE(a,b)[x]"),
    (AxiomName::ACONV, "ACONV", "EE(a,b)[x^] <-> EE(b,a)[x]"),
];

impl AxiomName {
    pub fn all() -> impl Iterator<Item = AxiomName> {
        TABLE.iter().map(|(n, _, _)| *n)
    }

    pub fn as_str(self) -> &'static str {
        TABLE[self as usize].1
    }

    /// The scheme in concrete syntax (`QQ` marks a quantifier-pair metavariable).
    pub fn scheme_text(self) -> &'static str {
        TABLE[self as usize].2
    }

    /// Parsed scheme patterns; one per quantifier pair for the equality axioms.
    pub fn patterns(self) -> &'static [Formula] {
        static PATTERNS: OnceLock<Vec<Vec<Formula>>> = OnceLock::new();
        let all = PATTERNS.get_or_init(|| {
            TABLE
                .iter()
                .map(|(_, _, text)| {
                    if text.contains("QQ") {
                        QuantPair::ALL
                            .iter()
                            .map(|q| parse_formula(&text.replace("QQ", q.keyword())).expect("scheme parses"))
                            .collect()
                    } else {
                        vec![parse_formula(text).expect("scheme parses")]
                    }
                })
                .collect()
        });
        &all[self as usize]
    }
}

impl fmt::Display for AxiomName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for AxiomName {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TABLE
            .iter()
            .find(|(_, name, _)| name.eq_ignore_ascii_case(s))
            .map(|(n, _, _)| *n)
            .ok_or_else(|| format!("unknown axiom `{s}`"))
    }
}

/// Metavariable assignment produced by a successful match.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Bindings {
    pub sets: HashMap<String, SetTerm>,
    pub rels: HashMap<String, RelTerm>,
}

fn match_set(pat: &SetTerm, t: &SetTerm, b: &mut Bindings) -> bool {
    match (pat, t) {
        (SetTerm::Var(m), _) => match b.sets.get(m) {
            Some(bound) => bound == t,
            None => {
                b.sets.insert(m.clone(), t.clone());
                true
            }
        },
        (SetTerm::Zero, SetTerm::Zero) | (SetTerm::One, SetTerm::One) => true,
        (SetTerm::Complement(p), SetTerm::Complement(x)) => match_set(p, x, b),
        (SetTerm::Meet(pl, pr), SetTerm::Meet(l, r)) | (SetTerm::Join(pl, pr), SetTerm::Join(l, r)) => {
            match_set(pl, l, b) && match_set(pr, r, b)
        }
        _ => false,
    }
}

fn match_rel(pat: &RelTerm, t: &RelTerm, b: &mut Bindings) -> bool {
    match (pat, t) {
        (RelTerm::Var(m), _) => match b.rels.get(m) {
            Some(bound) => bound == t,
            None => {
                b.rels.insert(m.clone(), t.clone());
                true
            }
        },
        (RelTerm::Zero, RelTerm::Zero) | (RelTerm::One, RelTerm::One) => true,
        (RelTerm::Complement(p), RelTerm::Complement(x)) | (RelTerm::Converse(p), RelTerm::Converse(x)) => {
            match_rel(p, x, b)
        }
        (RelTerm::Meet(pl, pr), RelTerm::Meet(l, r)) | (RelTerm::Join(pl, pr), RelTerm::Join(l, r)) => {
            match_rel(pl, l, b) && match_rel(pr, r, b)
        }
        _ => false,
    }
}

/// Structural match of `f` against a scheme pattern, extending `b`.
pub fn match_pattern(pat: &Formula, f: &Formula, b: &mut Bindings) -> bool {
    match (pat, f) {
        (Formula::Leq(pa, pb), Formula::Leq(a, bb)) => match_set(pa, a, b) && match_set(pb, bb, b),
        (Formula::Atom(pq, pa, pb, pr), Formula::Atom(q, a, bb, r)) => {
            pq == q && match_set(pa, a, b) && match_set(pb, bb, b) && match_rel(pr, r, b)
        }
        (Formula::Not(p), Formula::Not(x)) => match_pattern(p, x, b),
        (Formula::And(pl, pr), Formula::And(l, r))
        | (Formula::Or(pl, pr), Formula::Or(l, r))
        | (Formula::Implies(pl, pr), Formula::Implies(l, r))
        | (Formula::Iff(pl, pr), Formula::Iff(l, r)) => match_pattern(pl, l, b) && match_pattern(pr, r, b),
        (Formula::Top, Formula::Top) | (Formula::Bottom, Formula::Bottom) => true,
        _ => false,
    }
}

/// The metavariable assignment witnessing that `f` instantiates `name`, if any.
pub fn match_axiom_bindings(name: AxiomName, f: &Formula) -> Option<Bindings> {
    name.patterns().iter().find_map(|pat| {
        let mut b = Bindings::default();
        match_pattern(pat, f, &mut b).then_some(b)
    })
}

/// Whether `f` is an instance of the named scheme.
pub fn match_axiom(name: AxiomName, f: &Formula) -> bool {
    match_axiom_bindings(name, f).is_some()
}

/// Every scheme `f` instantiates.
pub fn matching_axioms(f: &Formula) -> Vec<AxiomName> {
    AxiomName::all().filter(|n| match_axiom(*n, f)).collect()
}

fn inst_set(pat: &SetTerm, b: &Bindings) -> SetTerm {
    match pat {
        SetTerm::Var(m) => b.sets.get(m).cloned().unwrap_or_else(|| pat.clone()),
        SetTerm::Zero | SetTerm::One => pat.clone(),
        SetTerm::Complement(x) => inst_set(x, b).complement(),
        SetTerm::Meet(l, r) => inst_set(l, b).meet(inst_set(r, b)),
        SetTerm::Join(l, r) => inst_set(l, b).join(inst_set(r, b)),
    }
}

fn inst_rel(pat: &RelTerm, b: &Bindings) -> RelTerm {
    match pat {
        RelTerm::Var(m) => b.rels.get(m).cloned().unwrap_or_else(|| pat.clone()),
        RelTerm::Zero | RelTerm::One => pat.clone(),
        RelTerm::Complement(x) => inst_rel(x, b).complement(),
        RelTerm::Converse(x) => inst_rel(x, b).converse(),
        RelTerm::Meet(l, r) => inst_rel(l, b).meet(inst_rel(r, b)),
        RelTerm::Join(l, r) => inst_rel(l, b).join(inst_rel(r, b)),
    }
}

/// Replaces metavariables in a pattern; unbound metavariables are left as they are.
pub fn instantiate(pat: &Formula, b: &Bindings) -> Formula {
    match pat {
        Formula::Leq(x, y) => Formula::Leq(inst_set(x, b), inst_set(y, b)),
        Formula::Atom(q, x, y, r) => Formula::Atom(*q, inst_set(x, b), inst_set(y, b), inst_rel(r, b)),
        Formula::Not(x) => instantiate(x, b).not(),
        Formula::And(l, r) => instantiate(l, b).and(instantiate(r, b)),
        Formula::Or(l, r) => instantiate(l, b).or(instantiate(r, b)),
        Formula::Implies(l, r) => instantiate(l, b).implies(instantiate(r, b)),
        Formula::Iff(l, r) => instantiate(l, b).iff(instantiate(r, b)),
        Formula::Top | Formula::Bottom => pat.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    #[test]
    fn table_order_matches_enum() {
        for (i, (n, name, _)) in TABLE.iter().enumerate() {
            assert_eq!(*n as usize, i);
            assert_eq!(name.parse::<AxiomName>().unwrap(), *n);
        }
        assert_eq!(AxiomName::all().count(), 27);
    }

    #[test]
    fn examples() {
        assert!(match_axiom(AxiomName::A0R, &f("!EE(a*b, -c)[0]")));
        assert!(match_axiom(AxiomName::ACONV, &f("EE(a,b)[r^] <-> EE(b,a)[r]")));
        assert!(!match_axiom(AxiomName::AL1, &f("AE(a,b)[r] -> a*c = 0 | EE(b,c)[r]")));
        assert!(match_axiom(AxiomName::AL1, &f("AE(a,b)[r] -> a*c = 0 | EE(c,b)[r]")));
    }

    #[test]
    fn metavariables_bind_consistently() {
        assert!(match_axiom(AxiomName::BA_REFL, &f("a+-b <= a+-b")));
        assert!(!match_axiom(AxiomName::BA_REFL, &f("a+-b <= a+b")));
        assert!(match_axiom(AxiomName::ANEG, &f("AA(p,q)[-(r*s)] <-> !EE(p,q)[r*s]")));
        assert!(!match_axiom(AxiomName::ANEG, &f("AA(p,q)[-(r*s)] <-> !EE(p,q)[s*r]")));
        // constants in the scheme only match constants
        assert!(!match_axiom(AxiomName::A0R, &f("!EE(a,b)[r]")));
    }

    #[test]
    fn equality_axioms_range_over_quantifier_pairs() {
        for q in QuantPair::ALL {
            let inst = format!("{q}(a+c,b)[r] & a+c = c -> {q}(c,b)[r]");
            assert!(match_axiom(AxiomName::AEQ1, &f(&inst)), "{inst}");
        }
        // the quantifier pair must be the same on both sides
        assert!(!match_axiom(AxiomName::AEQ1, &f("EE(a,b)[r] & a = c -> AA(c,b)[r]")));
        // `a = c` must be the expanded conjunction in the right orientation
        assert!(!match_axiom(AxiomName::AEQ2, &f("EE(a,b)[r] & c = b -> EE(a,c)[r]")));
    }

    #[test]
    fn instantiate_inverts_match() {
        let target = f("AA(a*b,c)[r] -> c*(d+a) = 0 | AE(a*b,d+a)[r]");
        let b = match_axiom_bindings(AxiomName::AL2, &target).unwrap();
        assert_eq!(instantiate(&AxiomName::AL2.patterns()[0], &b), target);
    }
}
