//! Rendering with minimal parenthesization.
//!
//! Binary operators are left-associative except `->`, which is right-associative,
//! so a right operand at the same precedence is parenthesized (and a left one for `->`).
//! Comparisons directly under `!` are always parenthesized, e.g. `!(a <= b)`.

use std::fmt::{self, Display, Formatter, Write};

use super::ast::{Formula, RelTerm, SetTerm};

fn set_prec(t: &SetTerm) -> u8 {
    match t {
        SetTerm::Join(..) => 1,
        SetTerm::Meet(..) => 2,
        SetTerm::Complement(_) => 3,
        SetTerm::Var(_) | SetTerm::Zero | SetTerm::One => 4,
    }
}

fn write_set(out: &mut Formatter<'_>, t: &SetTerm, min: u8) -> fmt::Result {
    if set_prec(t) < min {
        out.write_char('(')?;
        write_set(out, t, 0)?;
        return out.write_char(')');
    }
    match t {
        SetTerm::Var(v) => out.write_str(v),
        SetTerm::Zero => out.write_char('0'),
        SetTerm::One => out.write_char('1'),
        SetTerm::Complement(x) => {
            out.write_char('-')?;
            write_set(out, x, 3)
        }
        SetTerm::Meet(l, r) => {
            write_set(out, l, 2)?;
            out.write_char('*')?;
            write_set(out, r, 3)
        }
        SetTerm::Join(l, r) => {
            write_set(out, l, 1)?;
            out.write_char('+')?;
            write_set(out, r, 2)
        }
    }
}

fn rel_prec(t: &RelTerm) -> u8 {
    match t {
        RelTerm::Join(..) => 1,
        RelTerm::Meet(..) => 2,
        RelTerm::Complement(_) => 3,
        RelTerm::Converse(_) => 4,
        RelTerm::Var(_) | RelTerm::Zero | RelTerm::One => 5,
    }
}

fn write_rel(out: &mut Formatter<'_>, t: &RelTerm, min: u8) -> fmt::Result {
    if rel_prec(t) < min {
        out.write_char('(')?;
        write_rel(out, t, 0)?;
        return out.write_char(')');
    }
    match t {
        RelTerm::Var(v) => out.write_str(v),
        RelTerm::Zero => out.write_char('0'),
        RelTerm::One => out.write_char('1'),
        RelTerm::Complement(x) => {
            out.write_char('-')?;
            write_rel(out, x, 3)
        }
        RelTerm::Converse(x) => {
            write_rel(out, x, 4)?;
            out.write_char('^')
        }
        RelTerm::Meet(l, r) => {
            write_rel(out, l, 2)?;
            out.write_char('*')?;
            write_rel(out, r, 3)
        }
        RelTerm::Join(l, r) => {
            write_rel(out, l, 1)?;
            out.write_char('+')?;
            write_rel(out, r, 2)
        }
    }
}

impl Display for SetTerm {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        write_set(f, self, 0)
    }
}

impl Display for RelTerm {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        write_rel(f, self, 0)
    }
}

fn is_comparison(f: &Formula) -> bool {
    matches!(f, Formula::Leq(..)) || f.as_equation().is_some() || is_disequation(f)
}

fn is_disequation(f: &Formula) -> bool {
    matches!(f, Formula::Not(inner) if inner.as_equation().is_some())
}

fn formula_prec(f: &Formula) -> u8 {
    match f {
        Formula::Iff(..) => 1,
        Formula::Implies(..) => 2,
        Formula::Or(..) => 3,
        Formula::And(..) if f.as_equation().is_some() => 6,
        Formula::And(..) => 4,
        Formula::Not(_) if is_disequation(f) => 6,
        Formula::Not(_) => 5,
        _ => 6,
    }
}

fn write_formula(out: &mut Formatter<'_>, f: &Formula, min: u8) -> fmt::Result {
    if formula_prec(f) < min {
        out.write_char('(')?;
        write_formula(out, f, 0)?;
        return out.write_char(')');
    }
    if let Some((a, b)) = f.as_equation() {
        return write!(out, "{a} = {b}");
    }
    match f {
        Formula::Leq(a, b) => write!(out, "{a} <= {b}"),
        Formula::Atom(q, a, b, rel) => write!(out, "{q}({a},{b})[{rel}]"),
        Formula::Not(inner) => {
            if let Some((a, b)) = inner.as_equation() {
                return write!(out, "{a} != {b}");
            }
            out.write_char('!')?;
            if is_comparison(inner) {
                write_formula(out, inner, 7)
            } else {
                write_formula(out, inner, 5)
            }
        }
        Formula::And(l, r) => {
            write_formula(out, l, 4)?;
            out.write_str(" & ")?;
            write_formula(out, r, 5)
        }
        Formula::Or(l, r) => {
            write_formula(out, l, 3)?;
            out.write_str(" | ")?;
            write_formula(out, r, 4)
        }
        Formula::Implies(l, r) => {
            write_formula(out, l, 3)?;
            out.write_str(" -> ")?;
            write_formula(out, r, 2)
        }
        Formula::Iff(l, r) => {
            write_formula(out, l, 1)?;
            out.write_str(" <-> ")?;
            write_formula(out, r, 2)
        }
        Formula::Top => out.write_str("true"),
        Formula::Bottom => out.write_str("false"),
    }
}

impl Display for Formula {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        write_formula(f, self, 0)
    }
}

/// Renders a formula in the concrete syntax accepted by the parser.
pub fn print_formula(f: &Formula) -> String {
    f.to_string()
}
