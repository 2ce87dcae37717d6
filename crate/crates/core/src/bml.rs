//! Boolean modal logic with converse, and the translation of the syllogistic language into it.
//!
//! Modal parameters are Boolean combinations of relational variables and the universal
//! relation `1`, closed under converse. Set variables become propositional variables.

use std::fmt::{self, Display, Formatter, Write};

use thiserror::Error;

use crate::semantics::{eval_rel_term, eval_set_term, Model, PointSet, Relation};
use crate::syntax::{Formula, QuantPair, RelTerm, SetTerm};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ModalParam {
    Var(String),
    Zero,
    One,
    Complement(Box<ModalParam>),
    Meet(Box<ModalParam>, Box<ModalParam>),
    Join(Box<ModalParam>, Box<ModalParam>),
    Converse(Box<ModalParam>),
}

impl From<&RelTerm> for ModalParam {
    fn from(t: &RelTerm) -> Self {
        let b = |x: &RelTerm| Box::new(ModalParam::from(x));
        match t {
            RelTerm::Var(v) => ModalParam::Var(v.clone()),
            RelTerm::Zero => ModalParam::Zero,
            RelTerm::One => ModalParam::One,
            RelTerm::Complement(x) => ModalParam::Complement(b(x)),
            RelTerm::Meet(l, r) => ModalParam::Meet(b(l), b(r)),
            RelTerm::Join(l, r) => ModalParam::Join(b(l), b(r)),
            RelTerm::Converse(x) => ModalParam::Converse(b(x)),
        }
    }
}

impl From<&ModalParam> for RelTerm {
    fn from(p: &ModalParam) -> Self {
        let b = |x: &ModalParam| Box::new(RelTerm::from(x));
        match p {
            ModalParam::Var(v) => RelTerm::Var(v.clone()),
            ModalParam::Zero => RelTerm::Zero,
            ModalParam::One => RelTerm::One,
            ModalParam::Complement(x) => RelTerm::Complement(b(x)),
            ModalParam::Meet(l, r) => RelTerm::Meet(b(l), b(r)),
            ModalParam::Join(l, r) => RelTerm::Join(b(l), b(r)),
            ModalParam::Converse(x) => RelTerm::Converse(b(x)),
        }
    }
}

impl Display for ModalParam {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        RelTerm::from(self).fmt(f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BmlFormula {
    Prop(String),
    Top,
    Bottom,
    Not(Box<BmlFormula>),
    And(Box<BmlFormula>, Box<BmlFormula>),
    Or(Box<BmlFormula>, Box<BmlFormula>),
    Implies(Box<BmlFormula>, Box<BmlFormula>),
    Iff(Box<BmlFormula>, Box<BmlFormula>),
    Diamond(ModalParam, Box<BmlFormula>),
    Box(ModalParam, Box<BmlFormula>),
}

impl BmlFormula {
    #[allow(clippy::should_implement_trait)]
    pub fn not(self) -> Self {
        BmlFormula::Not(Box::new(self))
    }

    pub fn and(self, other: BmlFormula) -> Self {
        BmlFormula::And(Box::new(self), Box::new(other))
    }

    pub fn or(self, other: BmlFormula) -> Self {
        BmlFormula::Or(Box::new(self), Box::new(other))
    }

    pub fn implies(self, other: BmlFormula) -> Self {
        BmlFormula::Implies(Box::new(self), Box::new(other))
    }

    pub fn iff(self, other: BmlFormula) -> Self {
        BmlFormula::Iff(Box::new(self), Box::new(other))
    }

    pub fn diamond(param: ModalParam, body: BmlFormula) -> Self {
        BmlFormula::Diamond(param, Box::new(body))
    }

    pub fn boxed(param: ModalParam, body: BmlFormula) -> Self {
        BmlFormula::Box(param, Box::new(body))
    }

    /// Number of nodes, counting modal parameters node by node.
    pub fn size(&self) -> usize {
        match self {
            BmlFormula::Prop(_) | BmlFormula::Top | BmlFormula::Bottom => 1,
            BmlFormula::Not(x) => 1 + x.size(),
            BmlFormula::And(l, r) | BmlFormula::Or(l, r) | BmlFormula::Implies(l, r) | BmlFormula::Iff(l, r) => {
                1 + l.size() + r.size()
            }
            BmlFormula::Diamond(p, x) | BmlFormula::Box(p, x) => 1 + RelTerm::from(p).size() + x.size(),
        }
    }
}

fn set_to_prop(t: &SetTerm) -> BmlFormula {
    match t {
        SetTerm::Var(v) => BmlFormula::Prop(v.clone()),
        SetTerm::Zero => BmlFormula::Bottom,
        SetTerm::One => BmlFormula::Top,
        SetTerm::Complement(x) => set_to_prop(x).not(),
        SetTerm::Meet(l, r) => set_to_prop(l).and(set_to_prop(r)),
        SetTerm::Join(l, r) => set_to_prop(l).or(set_to_prop(r)),
    }
}

/// Translates a formula into an equivalent (over non-empty models) BML formula.
pub fn translate(f: &Formula) -> BmlFormula {
    let tr = |x: &Formula| translate(x);
    match f {
        Formula::Leq(a, b) => BmlFormula::boxed(ModalParam::One, set_to_prop(a).implies(set_to_prop(b))),
        Formula::Atom(q, a, b, rel) => {
            let (a, b) = (set_to_prop(a), set_to_prop(b));
            let alpha = ModalParam::from(rel);
            let neg = ModalParam::Complement(Box::new(alpha.clone()));
            match q {
                QuantPair::EE => BmlFormula::diamond(ModalParam::One, a.and(BmlFormula::diamond(alpha, b))),
                QuantPair::AE => BmlFormula::boxed(ModalParam::One, a.implies(BmlFormula::diamond(alpha, b))),
                QuantPair::AA => BmlFormula::boxed(ModalParam::One, a.implies(BmlFormula::boxed(neg, b.not()))),
                QuantPair::EA => BmlFormula::diamond(ModalParam::One, a.and(BmlFormula::boxed(neg, b.not()))),
            }
        }
        Formula::Not(x) => tr(x).not(),
        Formula::And(l, r) => tr(l).and(tr(r)),
        Formula::Or(l, r) => tr(l).or(tr(r)),
        Formula::Implies(l, r) => tr(l).implies(tr(r)),
        Formula::Iff(l, r) => tr(l).iff(tr(r)),
        Formula::Top => BmlFormula::Top,
        Formula::Bottom => BmlFormula::Bottom,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BmlError {
    #[error("modal formulas are evaluated over non-empty domains only")]
    EmptyDomain,
    #[error("point {0} is not in the domain")]
    UnknownPoint(String),
}

fn param_relation(m: &Model, p: &ModalParam) -> Relation {
    eval_rel_term(m, &RelTerm::from(p))
}

/// The set of points at which `f` holds.
pub fn extension(m: &Model, f: &BmlFormula) -> PointSet {
    let n = m.size();
    match f {
        BmlFormula::Prop(v) => eval_set_term(m, &SetTerm::var(v.as_str())),
        BmlFormula::Top => PointSet::full(n),
        BmlFormula::Bottom => PointSet::empty(n),
        BmlFormula::Not(x) => extension(m, x).complement(),
        BmlFormula::And(l, r) => extension(m, l).intersection(&extension(m, r)),
        BmlFormula::Or(l, r) => extension(m, l).union(&extension(m, r)),
        BmlFormula::Implies(l, r) => extension(m, l).complement().union(&extension(m, r)),
        BmlFormula::Iff(l, r) => {
            let (l, r) = (extension(m, l), extension(m, r));
            l.intersection(&r).union(&l.complement().intersection(&r.complement()))
        }
        BmlFormula::Diamond(p, x) => {
            let (rel, body) = (param_relation(m, p), extension(m, x));
            PointSet::from_indices(n, (0..n).filter(|&w| rel.row(w).intersects(&body)))
        }
        BmlFormula::Box(p, x) => {
            let (rel, body) = (param_relation(m, p), extension(m, x));
            PointSet::from_indices(n, (0..n).filter(|&w| rel.row(w).is_subset(&body)))
        }
    }
}

/// Truth of `f` at the point with index `x`.
pub fn eval_bml(m: &Model, x: usize, f: &BmlFormula) -> Result<bool, BmlError> {
    if m.size() == 0 {
        return Err(BmlError::EmptyDomain);
    }
    if x >= m.size() {
        return Err(BmlError::UnknownPoint(x.to_string()));
    }
    Ok(extension(m, f).contains(x))
}

/// Truth of `f` at the point with the given identifier.
pub fn eval_bml_at(m: &Model, point: &str, f: &BmlFormula) -> Result<bool, BmlError> {
    if m.size() == 0 {
        return Err(BmlError::EmptyDomain);
    }
    let x = m.point_index(point).ok_or_else(|| BmlError::UnknownPoint(point.to_string()))?;
    eval_bml(m, x, f)
}

fn prec(f: &BmlFormula) -> u8 {
    match f {
        BmlFormula::Iff(..) => 1,
        BmlFormula::Implies(..) => 2,
        BmlFormula::Or(..) => 3,
        BmlFormula::And(..) => 4,
        BmlFormula::Not(_) | BmlFormula::Diamond(..) | BmlFormula::Box(..) => 5,
        _ => 6,
    }
}

fn write_bml(out: &mut Formatter<'_>, f: &BmlFormula, min: u8) -> fmt::Result {
    if prec(f) < min {
        out.write_char('(')?;
        write_bml(out, f, 0)?;
        return out.write_char(')');
    }
    match f {
        BmlFormula::Prop(v) => out.write_str(v),
        BmlFormula::Top => out.write_str("true"),
        BmlFormula::Bottom => out.write_str("false"),
        BmlFormula::Not(x) => {
            out.write_char('!')?;
            write_bml(out, x, 5)
        }
        BmlFormula::Diamond(p, x) => {
            write!(out, "<{p}>")?;
            write_bml(out, x, 5)
        }
        BmlFormula::Box(p, x) => {
            write!(out, "[{p}]")?;
            write_bml(out, x, 5)
        }
        BmlFormula::And(l, r) => {
            write_bml(out, l, 4)?;
            out.write_str(" & ")?;
            write_bml(out, r, 5)
        }
        BmlFormula::Or(l, r) => {
            write_bml(out, l, 3)?;
            out.write_str(" | ")?;
            write_bml(out, r, 4)
        }
        BmlFormula::Implies(l, r) => {
            write_bml(out, l, 3)?;
            out.write_str(" -> ")?;
            write_bml(out, r, 2)
        }
        BmlFormula::Iff(l, r) => {
            write_bml(out, l, 1)?;
            out.write_str(" <-> ")?;
            write_bml(out, r, 2)
        }
    }
}

impl Display for BmlFormula {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        write_bml(f, self, 0)
    }
}
