use std::collections::BTreeSet;
use std::fmt;

/// A Boolean combination of set variables and the set constants.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SetTerm {
    Var(String),
    Zero,
    One,
    Complement(Box<SetTerm>),
    Meet(Box<SetTerm>, Box<SetTerm>),
    Join(Box<SetTerm>, Box<SetTerm>),
}

/// A Boolean combination of relational variables and constants, closed under converse.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RelTerm {
    Var(String),
    Zero,
    One,
    Complement(Box<RelTerm>),
    Meet(Box<RelTerm>, Box<RelTerm>),
    Join(Box<RelTerm>, Box<RelTerm>),
    Converse(Box<RelTerm>),
}

/// The quantifier prefix of an atomic formula `Q1Q2(a,b)[alpha]`.
///
/// `AE(a,b)[alpha]` reads "every a is alpha-related to some b".
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum QuantPair {
    EE,
    AE,
    AA,
    EA,
}

impl QuantPair {
    pub const ALL: [QuantPair; 4] = [QuantPair::EE, QuantPair::AE, QuantPair::AA, QuantPair::EA];

    /// Swaps each quantifier for its dual.
    pub fn dual(self) -> QuantPair {
        match self {
            QuantPair::EE => QuantPair::AA,
            QuantPair::AA => QuantPair::EE,
            QuantPair::AE => QuantPair::EA,
            QuantPair::EA => QuantPair::AE,
        }
    }

    /// Whether the quantifier over the first argument is universal.
    pub fn first_universal(self) -> bool {
        matches!(self, QuantPair::AE | QuantPair::AA)
    }

    /// Whether the quantifier over the second argument is universal.
    pub fn second_universal(self) -> bool {
        matches!(self, QuantPair::AA | QuantPair::EA)
    }

    pub fn keyword(self) -> &'static str {
        match self {
            QuantPair::EE => "EE",
            QuantPair::AE => "AE",
            QuantPair::AA => "AA",
            QuantPair::EA => "EA",
        }
    }
}

impl fmt::Display for QuantPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Leq(SetTerm, SetTerm),
    Atom(QuantPair, SetTerm, SetTerm, RelTerm),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
    Top,
    Bottom,
}

impl SetTerm {
    pub fn var(name: impl Into<String>) -> Self {
        SetTerm::Var(name.into())
    }

    pub fn complement(self) -> Self {
        SetTerm::Complement(Box::new(self))
    }

    pub fn meet(self, other: SetTerm) -> Self {
        SetTerm::Meet(Box::new(self), Box::new(other))
    }

    pub fn join(self, other: SetTerm) -> Self {
        SetTerm::Join(Box::new(self), Box::new(other))
    }

    pub fn is_atomic(&self) -> bool {
        matches!(self, SetTerm::Var(_) | SetTerm::Zero | SetTerm::One)
    }

    /// Number of nodes in the term tree.
    pub fn size(&self) -> usize {
        match self {
            SetTerm::Var(_) | SetTerm::Zero | SetTerm::One => 1,
            SetTerm::Complement(t) => 1 + t.size(),
            SetTerm::Meet(l, r) | SetTerm::Join(l, r) => 1 + l.size() + r.size(),
        }
    }

    pub fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            SetTerm::Var(v) => {
                out.insert(v.clone());
            }
            SetTerm::Zero | SetTerm::One => {}
            SetTerm::Complement(t) => t.collect_vars(out),
            SetTerm::Meet(l, r) | SetTerm::Join(l, r) => {
                l.collect_vars(out);
                r.collect_vars(out);
            }
        }
    }

    pub fn contains_var(&self, name: &str) -> bool {
        match self {
            SetTerm::Var(v) => v == name,
            SetTerm::Zero | SetTerm::One => false,
            SetTerm::Complement(t) => t.contains_var(name),
            SetTerm::Meet(l, r) | SetTerm::Join(l, r) => l.contains_var(name) || r.contains_var(name),
        }
    }

    pub fn substitute(&self, from: &str, to: &SetTerm) -> SetTerm {
        match self {
            SetTerm::Var(v) if v == from => to.clone(),
            SetTerm::Var(_) | SetTerm::Zero | SetTerm::One => self.clone(),
            SetTerm::Complement(t) => t.substitute(from, to).complement(),
            SetTerm::Meet(l, r) => l.substitute(from, to).meet(r.substitute(from, to)),
            SetTerm::Join(l, r) => l.substitute(from, to).join(r.substitute(from, to)),
        }
    }

    /// Displays the term, wrapped in parentheses unless it is a variable or constant.
    /// Safe to splice into any operand position of the concrete syntax.
    pub fn grouped(&self) -> Grouped<'_, SetTerm> {
        Grouped(self)
    }
}

impl RelTerm {
    pub fn var(name: impl Into<String>) -> Self {
        RelTerm::Var(name.into())
    }

    pub fn complement(self) -> Self {
        RelTerm::Complement(Box::new(self))
    }

    pub fn meet(self, other: RelTerm) -> Self {
        RelTerm::Meet(Box::new(self), Box::new(other))
    }

    pub fn join(self, other: RelTerm) -> Self {
        RelTerm::Join(Box::new(self), Box::new(other))
    }

    pub fn converse(self) -> Self {
        RelTerm::Converse(Box::new(self))
    }

    pub fn is_atomic(&self) -> bool {
        matches!(self, RelTerm::Var(_) | RelTerm::Zero | RelTerm::One)
    }

    pub fn size(&self) -> usize {
        match self {
            RelTerm::Var(_) | RelTerm::Zero | RelTerm::One => 1,
            RelTerm::Complement(t) | RelTerm::Converse(t) => 1 + t.size(),
            RelTerm::Meet(l, r) | RelTerm::Join(l, r) => 1 + l.size() + r.size(),
        }
    }

    pub fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            RelTerm::Var(v) => {
                out.insert(v.clone());
            }
            RelTerm::Zero | RelTerm::One => {}
            RelTerm::Complement(t) | RelTerm::Converse(t) => t.collect_vars(out),
            RelTerm::Meet(l, r) | RelTerm::Join(l, r) => {
                l.collect_vars(out);
                r.collect_vars(out);
            }
        }
    }

    pub fn grouped(&self) -> Grouped<'_, RelTerm> {
        Grouped(self)
    }
}

impl Formula {
    pub fn leq(a: SetTerm, b: SetTerm) -> Self {
        Formula::Leq(a, b)
    }

    /// `a = b`, i.e. `a <= b & b <= a`.
    pub fn eq(a: SetTerm, b: SetTerm) -> Self {
        Formula::Leq(a.clone(), b.clone()).and(Formula::Leq(b, a))
    }

    /// `a = 0`.
    pub fn is_zero(a: SetTerm) -> Self {
        Formula::eq(a, SetTerm::Zero)
    }

    pub fn atom(q: QuantPair, a: SetTerm, b: SetTerm, rel: RelTerm) -> Self {
        Formula::Atom(q, a, b, rel)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(self) -> Self {
        Formula::Not(Box::new(self))
    }

    pub fn and(self, other: Formula) -> Self {
        Formula::And(Box::new(self), Box::new(other))
    }

    pub fn or(self, other: Formula) -> Self {
        Formula::Or(Box::new(self), Box::new(other))
    }

    pub fn implies(self, other: Formula) -> Self {
        Formula::Implies(Box::new(self), Box::new(other))
    }

    pub fn iff(self, other: Formula) -> Self {
        Formula::Iff(Box::new(self), Box::new(other))
    }

    /// Left-nested conjunction; `Top` when empty.
    pub fn conjunction(parts: impl IntoIterator<Item = Formula>) -> Self {
        parts.into_iter().reduce(Formula::and).unwrap_or(Formula::Top)
    }

    /// Recognises the expansion of `a = b`.
    pub fn as_equation(&self) -> Option<(&SetTerm, &SetTerm)> {
        match self {
            Formula::And(l, r) => match (l.as_ref(), r.as_ref()) {
                (Formula::Leq(a, b), Formula::Leq(b2, a2)) if a == a2 && b == b2 => Some((a, b)),
                _ => None,
            },
            _ => None,
        }
    }

    pub fn is_atomic(&self) -> bool {
        matches!(self, Formula::Leq(..) | Formula::Atom(..))
    }

    pub fn size(&self) -> usize {
        match self {
            Formula::Leq(a, b) => 1 + a.size() + b.size(),
            Formula::Atom(_, a, b, r) => 1 + a.size() + b.size() + r.size(),
            Formula::Not(f) => 1 + f.size(),
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Implies(l, r) | Formula::Iff(l, r) => {
                1 + l.size() + r.size()
            }
            Formula::Top | Formula::Bottom => 1,
        }
    }

    /// Distinct atomic subformulas (`Leq` and quantifier atoms) in first-occurrence order.
    pub fn atoms(&self) -> Vec<&Formula> {
        let mut out: Vec<&Formula> = Vec::new();
        self.visit_atoms(&mut |a| {
            if !out.contains(&a) {
                out.push(a);
            }
        });
        out
    }

    pub fn visit_atoms<'a>(&'a self, visit: &mut impl FnMut(&'a Formula)) {
        match self {
            Formula::Leq(..) | Formula::Atom(..) => visit(self),
            Formula::Not(f) => f.visit_atoms(visit),
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Implies(l, r) | Formula::Iff(l, r) => {
                l.visit_atoms(visit);
                r.visit_atoms(visit);
            }
            Formula::Top | Formula::Bottom => {}
        }
    }

    pub fn collect_set_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::Leq(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
            Formula::Atom(_, a, b, _) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
            Formula::Not(f) => f.collect_set_vars(out),
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Implies(l, r) | Formula::Iff(l, r) => {
                l.collect_set_vars(out);
                r.collect_set_vars(out);
            }
            Formula::Top | Formula::Bottom => {}
        }
    }

    pub fn collect_rel_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::Atom(_, _, _, rel) => rel.collect_vars(out),
            Formula::Not(f) => f.collect_rel_vars(out),
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Implies(l, r) | Formula::Iff(l, r) => {
                l.collect_rel_vars(out);
                r.collect_rel_vars(out);
            }
            Formula::Leq(..) | Formula::Top | Formula::Bottom => {}
        }
    }

    pub fn rel_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_rel_vars(&mut out);
        out
    }

    pub fn contains_set_var(&self, name: &str) -> bool {
        match self {
            Formula::Leq(a, b) | Formula::Atom(_, a, b, _) => a.contains_var(name) || b.contains_var(name),
            Formula::Not(f) => f.contains_set_var(name),
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Implies(l, r) | Formula::Iff(l, r) => {
                l.contains_set_var(name) || r.contains_set_var(name)
            }
            Formula::Top | Formula::Bottom => false,
        }
    }

    pub fn substitute(&self, from: &str, to: &SetTerm) -> Formula {
        let bin = |l: &Formula, r: &Formula| (Box::new(l.substitute(from, to)), Box::new(r.substitute(from, to)));
        match self {
            Formula::Leq(a, b) => Formula::Leq(a.substitute(from, to), b.substitute(from, to)),
            Formula::Atom(q, a, b, rel) => {
                Formula::Atom(*q, a.substitute(from, to), b.substitute(from, to), rel.clone())
            }
            Formula::Not(f) => Formula::Not(Box::new(f.substitute(from, to))),
            Formula::And(l, r) => {
                let (l, r) = bin(l, r);
                Formula::And(l, r)
            }
            Formula::Or(l, r) => {
                let (l, r) = bin(l, r);
                Formula::Or(l, r)
            }
            Formula::Implies(l, r) => {
                let (l, r) = bin(l, r);
                Formula::Implies(l, r)
            }
            Formula::Iff(l, r) => {
                let (l, r) = bin(l, r);
                Formula::Iff(l, r)
            }
            Formula::Top | Formula::Bottom => self.clone(),
        }
    }
}

/// Anything whose set variables can be listed.
pub trait SetVars {
    fn set_vars_into(&self, out: &mut BTreeSet<String>);
}

impl SetVars for SetTerm {
    fn set_vars_into(&self, out: &mut BTreeSet<String>) {
        self.collect_vars(out)
    }
}

impl SetVars for RelTerm {
    fn set_vars_into(&self, _out: &mut BTreeSet<String>) {}
}

impl SetVars for Formula {
    fn set_vars_into(&self, out: &mut BTreeSet<String>) {
        self.collect_set_vars(out)
    }
}

/// The set variables occurring in `x`.
pub fn free_set_vars<T: SetVars + ?Sized>(x: &T) -> BTreeSet<String> {
    let mut out = BTreeSet::new();
    x.set_vars_into(&mut out);
    out
}

/// Replaces every occurrence of the set variable `from` by `to`.
pub fn substitute_set_var(f: &Formula, from: &str, to: &SetTerm) -> Formula {
    f.substitute(from, to)
}

/// Display adapter returned by [`SetTerm::grouped`] and [`RelTerm::grouped`].
pub struct Grouped<'a, T>(&'a T);

impl fmt::Display for Grouped<'_, SetTerm> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_atomic() {
            write!(f, "{}", self.0)
        } else {
            write!(f, "({})", self.0)
        }
    }
}

impl fmt::Display for Grouped<'_, RelTerm> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_atomic() {
            write!(f, "{}", self.0)
        } else {
            write!(f, "({})", self.0)
        }
    }
}
