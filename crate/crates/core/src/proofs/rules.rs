//! The inference rules with special set variables.
//!
//! Each rule has an exact premise shape determined by its conclusion and the special variable,
//! so checking a rule application amounts to rebuilding the expected premise and comparing.

use std::fmt;
use std::str::FromStr;

use crate::syntax::{free_set_vars, Formula, QuantPair, RelTerm, SetTerm};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RuleName {
    /// `φ -> a*p = 0 | EE(p,b)[α]` gives `φ -> AE(a,b)[α]`.
    R1,
    /// `φ -> b*p = 0 | AE(a,p)[α]` gives `φ -> AA(a,b)[α]`.
    R2,
    /// `φ -> a*p = 0 | !AA(p,b)[α]` gives `φ -> !EA(a,b)[α]`.
    R3,
    /// `a*p = 0 | EE(p,p)[α]` gives `a = 0 | EE(a,a)[α*(β^+-β)]`.
    RS,
}

impl RuleName {
    pub const ALL: [RuleName; 4] = [RuleName::R1, RuleName::R2, RuleName::R3, RuleName::RS];

    pub fn as_str(self) -> &'static str {
        match self {
            RuleName::R1 => "R1",
            RuleName::R2 => "R2",
            RuleName::R3 => "R3",
            RuleName::RS => "RS",
        }
    }
}

impl fmt::Display for RuleName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for RuleName {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        RuleName::ALL
            .into_iter()
            .find(|r| r.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown rule `{s}`"))
    }
}

/// Why a rule application is not well formed, or `None` if it is.
pub fn rule_violation(rule: RuleName, premise: &Formula, conclusion: &Formula, special: &str) -> Option<String> {
    let p = SetTerm::var(special);
    let (expected, occupied) = match expected_premise(rule, conclusion, &p) {
        Ok(x) => x,
        Err(e) => return Some(e),
    };
    if occupied.iter().any(|v| v == special) {
        return Some(format!("special variable `{special}` occurs in the conclusion"));
    }
    if *premise != expected {
        return Some(format!("premise must be `{expected}`"));
    }
    None
}

pub fn check_rule(rule: RuleName, premise: &Formula, conclusion: &Formula, special: &str) -> bool {
    rule_violation(rule, premise, conclusion, special).is_none()
}

/// The premise a conclusion requires, with the set variables the special variable must avoid.
fn expected_premise(rule: RuleName, conclusion: &Formula, p: &SetTerm) -> Result<(Formula, Vec<String>), String> {
    let shape = |want: &str| format!("{rule} conclusion must have the form `{want}`");
    if rule == RuleName::RS {
        let (a, alpha) = match conclusion {
            Formula::Or(lhs, rhs) => match (lhs.as_equation(), rhs.as_ref()) {
                (Some((a, SetTerm::Zero)), Formula::Atom(QuantPair::EE, x, y, rel)) if x == a && y == a => match rel {
                    RelTerm::Meet(alpha, reflex) if is_reflexive_part(reflex) => (a, alpha),
                    _ => return Err(shape("a = 0 | EE(a,a)[α*(β^+-β)]")),
                },
                _ => return Err(shape("a = 0 | EE(a,a)[α*(β^+-β)]")),
            },
            _ => return Err(shape("a = 0 | EE(a,a)[α*(β^+-β)]")),
        };
        let premise = Formula::is_zero(a.clone().meet(p.clone())).or(Formula::atom(
            QuantPair::EE,
            p.clone(),
            p.clone(),
            (**alpha).clone(),
        ));
        return Ok((premise, free_set_vars(a).into_iter().collect()));
    }

    let Formula::Implies(phi, head) = conclusion else {
        return Err(shape("φ -> ..."));
    };
    let (a, b, alpha) = match (rule, head.as_ref()) {
        (RuleName::R1, Formula::Atom(QuantPair::AE, a, b, r))
        | (RuleName::R2, Formula::Atom(QuantPair::AA, a, b, r)) => (a, b, r),
        (RuleName::R3, Formula::Not(inner)) => match inner.as_ref() {
            Formula::Atom(QuantPair::EA, a, b, r) => (a, b, r),
            _ => return Err(shape("φ -> !EA(a,b)[α]")),
        },
        (RuleName::R1, _) => return Err(shape("φ -> AE(a,b)[α]")),
        (RuleName::R2, _) => return Err(shape("φ -> AA(a,b)[α]")),
        _ => return Err(shape("φ -> !EA(a,b)[α]")),
    };
    let disjunction = match rule {
        RuleName::R1 => Formula::is_zero(a.clone().meet(p.clone())).or(Formula::atom(
            QuantPair::EE,
            p.clone(),
            b.clone(),
            alpha.clone(),
        )),
        RuleName::R2 => Formula::is_zero(b.clone().meet(p.clone())).or(Formula::atom(
            QuantPair::AE,
            a.clone(),
            p.clone(),
            alpha.clone(),
        )),
        _ => Formula::is_zero(a.clone().meet(p.clone())).or(Formula::atom(
            QuantPair::AA,
            p.clone(),
            b.clone(),
            alpha.clone(),
        )
        .not()),
    };
    let mut occupied = free_set_vars(phi.as_ref());
    occupied.extend(free_set_vars(a));
    occupied.extend(free_set_vars(b));
    Ok(((**phi).clone().implies(disjunction), occupied.into_iter().collect()))
}

/// Matches `β^+-β` for any relational term β.
fn is_reflexive_part(t: &RelTerm) -> bool {
    match t {
        RelTerm::Join(l, r) => match (l.as_ref(), r.as_ref()) {
            (RelTerm::Converse(b1), RelTerm::Complement(b2)) => b1 == b2,
            _ => false,
        },
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_formula;

    fn f(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    #[test]
    fn well_formed_applications() {
        assert!(check_rule(RuleName::R1, &f("c <= d -> a*p = 0 | EE(p,b)[r]"), &f("c <= d -> AE(a,b)[r]"), "p"));
        assert!(check_rule(RuleName::R2, &f("c <= d -> b*p = 0 | AE(a,p)[r]"), &f("c <= d -> AA(a,b)[r]"), "p"));
        assert!(check_rule(RuleName::R3, &f("c <= d -> a*p = 0 | !AA(p,b)[r]"), &f("c <= d -> !EA(a,b)[r]"), "p"));
        assert!(check_rule(RuleName::RS, &f("a*p = 0 | EE(p,p)[r]"), &f("a = 0 | EE(a,a)[r*(s^+-s)]"), "p"));
    }

    #[test]
    fn side_conditions() {
        // p occurs in φ
        assert!(!check_rule(RuleName::R1, &f("p <= d -> a*p = 0 | EE(p,b)[r]"), &f("p <= d -> AE(a,b)[r]"), "p"));
        // p is one of the conclusion's terms
        assert!(!check_rule(RuleName::R1, &f("c <= d -> p*p = 0 | EE(p,b)[r]"), &f("c <= d -> AE(p,b)[r]"), "p"));
        assert!(!check_rule(RuleName::RS, &f("p*p = 0 | EE(p,p)[r]"), &f("p = 0 | EE(p,p)[r*(s^+-s)]"), "p"));
    }

    #[test]
    fn shape_mismatches() {
        // wrong meet orientation
        assert!(!check_rule(RuleName::R1, &f("c <= d -> p*a = 0 | EE(p,b)[r]"), &f("c <= d -> AE(a,b)[r]"), "p"));
        // wrong relation
        assert!(!check_rule(RuleName::R2, &f("c <= d -> b*p = 0 | AE(a,p)[s]"), &f("c <= d -> AA(a,b)[r]"), "p"));
        // reflexive part with mismatched β
        assert!(!check_rule(RuleName::RS, &f("a*p = 0 | EE(p,p)[r]"), &f("a = 0 | EE(a,a)[r*(s^+-t)]"), "p"));
        // not an implication
        assert!(rule_violation(RuleName::R3, &f("a <= b"), &f("!EA(a,b)[r]"), "p").is_some());
    }
}
