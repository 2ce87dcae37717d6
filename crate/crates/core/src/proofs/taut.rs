//! Propositional tautology checking by truth table.
//!
//! Comparisons and quantified atoms are opaque propositional variables; syntactically equal
//! atoms share a variable. Assignments are evaluated 64 at a time, one per bit.

use thiserror::Error;

use crate::syntax::Formula;

/// Default cap on the number of distinct atoms.
pub const DEFAULT_ATOM_CAP: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("{atoms} distinct atoms exceeds the cap of {cap}")]
pub struct TooManyAtoms {
    pub atoms: usize,
    pub cap: usize,
}

#[derive(Debug, Clone)]
enum Prop {
    Var(usize),
    Const(bool),
    Not(Box<Prop>),
    And(Box<Prop>, Box<Prop>),
    Or(Box<Prop>, Box<Prop>),
    Implies(Box<Prop>, Box<Prop>),
    Iff(Box<Prop>, Box<Prop>),
}

fn compile<'a>(f: &'a Formula, atoms: &mut Vec<&'a Formula>) -> Prop {
    let bin = |l: &'a Formula, r: &'a Formula, atoms: &mut Vec<&'a Formula>| {
        (Box::new(compile(l, atoms)), Box::new(compile(r, atoms)))
    };
    match f {
        Formula::Leq(..) | Formula::Atom(..) => {
            let i = atoms.iter().position(|a| *a == f).unwrap_or_else(|| {
                atoms.push(f);
                atoms.len() - 1
            });
            Prop::Var(i)
        }
        Formula::Top => Prop::Const(true),
        Formula::Bottom => Prop::Const(false),
        Formula::Not(x) => Prop::Not(Box::new(compile(x, atoms))),
        Formula::And(l, r) => {
            let (l, r) = bin(l, r, atoms);
            Prop::And(l, r)
        }
        Formula::Or(l, r) => {
            let (l, r) = bin(l, r, atoms);
            Prop::Or(l, r)
        }
        Formula::Implies(l, r) => {
            let (l, r) = bin(l, r, atoms);
            Prop::Implies(l, r)
        }
        Formula::Iff(l, r) => {
            let (l, r) = bin(l, r, atoms);
            Prop::Iff(l, r)
        }
    }
}

const LOW_MASKS: [u64; 6] = [
    0xAAAA_AAAA_AAAA_AAAA,
    0xCCCC_CCCC_CCCC_CCCC,
    0xF0F0_F0F0_F0F0_F0F0,
    0xFF00_FF00_FF00_FF00,
    0xFFFF_0000_FFFF_0000,
    0xFFFF_FFFF_0000_0000,
];

fn eval_block(p: &Prop, block: u64) -> u64 {
    match p {
        Prop::Var(i) if *i < 6 => LOW_MASKS[*i],
        Prop::Var(i) => {
            if block >> (i - 6) & 1 == 1 {
                u64::MAX
            } else {
                0
            }
        }
        Prop::Const(b) => {
            if *b {
                u64::MAX
            } else {
                0
            }
        }
        Prop::Not(x) => !eval_block(x, block),
        Prop::And(l, r) => eval_block(l, block) & eval_block(r, block),
        Prop::Or(l, r) => eval_block(l, block) | eval_block(r, block),
        Prop::Implies(l, r) => !eval_block(l, block) | eval_block(r, block),
        Prop::Iff(l, r) => !(eval_block(l, block) ^ eval_block(r, block)),
    }
}

/// Number of distinct opaque atoms in `f`.
pub fn atom_count(f: &Formula) -> usize {
    let mut atoms = Vec::new();
    compile(f, &mut atoms);
    atoms.len()
}

/// Whether `f` is true under every assignment to its atoms.
pub fn is_tautology(f: &Formula, cap: usize) -> Result<bool, TooManyAtoms> {
    let mut atoms = Vec::new();
    let prop = compile(f, &mut atoms);
    let k = atoms.len();
    if k > cap {
        return Err(TooManyAtoms { atoms: k, cap });
    }
    let mask = if k >= 6 { u64::MAX } else { (1u64 << (1 << k)) - 1 };
    let blocks = if k > 6 { 1u64 << (k - 6) } else { 1 };
    Ok((0..blocks).all(|b| eval_block(&prop, b) & mask == mask))
}
