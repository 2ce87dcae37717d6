//! A corpus of machine-checkable derivations.
//!
//! Derived facts used inside larger proofs are re-derived inline for the terms at hand, so each
//! entry is a self-contained theorem proof built from axioms, tautologies and the rules.

use crate::syntax::{parse_formula, Formula, QuantPair, RelTerm, SetTerm};

use super::{AxiomName as Ax, Proof, ProofBuilder, RuleName};

pub struct CorpusEntry {
    pub name: &'static str,
    pub description: &'static str,
    /// The statement the proof is meant to establish.
    pub statement: &'static str,
    pub proof: Proof,
}

fn fm(text: &str) -> Formula {
    parse_formula(text).unwrap_or_else(|e| panic!("corpus formula `{text}`: {e}"))
}

macro_rules! f {
    ($($arg:tt)*) => { fm(&format!($($arg)*)) };
}

trait Grp {
    fn g(&self) -> String;
}

impl Grp for SetTerm {
    fn g(&self) -> String {
        self.grouped().to_string()
    }
}

impl Grp for RelTerm {
    fn g(&self) -> String {
        self.grouped().to_string()
    }
}

fn set(s: &str) -> SetTerm {
    SetTerm::var(s)
}

fn rel(s: &str) -> RelTerm {
    RelTerm::var(s)
}

fn factors(t: &SetTerm) -> Vec<&SetTerm> {
    match t {
        SetTerm::Meet(l, r) => {
            let mut v = factors(l);
            v.extend(factors(r));
            v
        }
        _ => vec![t],
    }
}

/// `x <= y` where every meet factor of `y` is a meet factor of `x`.
fn prove_leq(pb: &mut ProofBuilder, x: &SetTerm, y: &SetTerm) -> usize {
    let (xs, ys) = (x.g(), y.g());
    if x == y {
        return pb.axiom(Ax::BA_REFL, f!("{xs} <= {xs}"));
    }
    if let SetTerm::Meet(y1, y2) = y {
        let l1 = prove_leq(pb, x, y1);
        let l2 = prove_leq(pb, x, y2);
        let glb =
            pb.axiom(Ax::BA_MEET_GLB, f!("{xs} <= {} & {xs} <= {} -> {xs} <= {}*{}", y1.g(), y2.g(), y1.g(), y2.g()));
        return pb.chain(&[l1, l2, glb], f!("{xs} <= {ys}"));
    }
    let SetTerm::Meet(x1, x2) = x else { panic!("cannot show {xs} <= {ys}") };
    let (side, ax) = if factors(x1).contains(&y) { (x1, Ax::BA_MEET_L) } else { (x2, Ax::BA_MEET_R) };
    let proj = pb.axiom(ax, f!("{}*{} <= {}", x1.g(), x2.g(), side.g()));
    if **side == *y {
        return proj;
    }
    let rest = prove_leq(pb, side, y);
    let trans = pb.axiom(Ax::BA_TRANS, f!("{xs} <= {} & {} <= {ys} -> {xs} <= {ys}", side.g(), side.g()));
    pb.chain(&[proj, rest, trans], f!("{xs} <= {ys}"))
}

/// `x = 0 -> y = 0` for `y <= x` provable by [`prove_leq`].
fn zero_transfer(pb: &mut ProofBuilder, y: &SetTerm, x: &SetTerm) -> usize {
    let (ys, xs) = (y.g(), x.g());
    let le = prove_leq(pb, y, x);
    let trans = pb.axiom(Ax::BA_TRANS, f!("{ys} <= {xs} & {xs} <= 0 -> {ys} <= 0"));
    let bot = pb.axiom(Ax::BA_BOT, f!("0 <= {ys}"));
    pb.chain(&[le, trans, bot], f!("{xs} = 0 -> {ys} = 0"))
}

/// `AE(a,b)[r] -> !EA(a,b)[-r]`
fn ae_not_ea(pb: &mut ProofBuilder, a: &SetTerm, b: &SetTerm, r: &RelTerm) -> usize {
    let (a, b, r) = (a.g(), b.g(), r.g());
    let p = pb.fresh();
    let l1 = pb.axiom(Ax::AL1, f!("AE({a},{b})[{r}] -> {a}*{p} = 0 | EE({p},{b})[{r}]"));
    let l2 = pb.axiom(Ax::ANEG, f!("AA({p},{b})[-{r}] <-> !EE({p},{b})[{r}]"));
    let l3 = pb.chain(&[l1, l2], f!("AE({a},{b})[{r}] -> {a}*{p} = 0 | !AA({p},{b})[-{r}]"));
    pb.rule(RuleName::R3, l3, &p, f!("AE({a},{b})[{r}] -> !EA({a},{b})[-{r}]"))
}

/// `!EA(a,b)[-r] -> AE(a,b)[r]`
fn not_ea_ae(pb: &mut ProofBuilder, a: &SetTerm, b: &SetTerm, r: &RelTerm) -> usize {
    let (a, b, r) = (a.g(), b.g(), r.g());
    let p = pb.fresh();
    let l1 = pb.axiom(Ax::AL3, f!("!EA({a},{b})[-{r}] -> {a}*{p} = 0 | !AA({p},{b})[-{r}]"));
    let l2 = pb.axiom(Ax::ANEG, f!("AA({p},{b})[-{r}] <-> !EE({p},{b})[{r}]"));
    let l3 = pb.chain(&[l1, l2], f!("!EA({a},{b})[-{r}] -> {a}*{p} = 0 | EE({p},{b})[{r}]"));
    pb.rule(RuleName::R1, l3, &p, f!("!EA({a},{b})[-{r}] -> AE({a},{b})[{r}]"))
}

/// `!EE(a,b)[-r] -> AA(a,b)[r]`
fn not_ee_aa(pb: &mut ProofBuilder, a0: &SetTerm, b0: &SetTerm, r: &RelTerm) -> usize {
    let (a, b, r) = (a0.g(), b0.g(), r.g());
    let (p0, q0) = (pb.fresh(), pb.fresh());
    let (p, q) = (p0.g(), q0.g());
    let l1 = pb.axiom(Ax::AL1, f!("AE({p},{b})[-{r}] -> {p}*{a} = 0 | EE({a},{b})[-{r}]"));
    let l2 = pb.axiom(Ax::AL2, f!("AA({p},{q})[-{r}] -> {q}*{b} = 0 | AE({p},{b})[-{r}]"));
    let l3 = pb.axiom(Ax::ANEG, f!("AA({p},{q})[-{r}] <-> !EE({p},{q})[{r}]"));
    let l4 = zero_transfer(pb, &a0.clone().meet(p0.clone()), &p0.clone().meet(a0.clone()));
    let l5 = zero_transfer(pb, &b0.clone().meet(q0.clone()), &q0.clone().meet(b0.clone()));
    let phi = format!("!EE({a},{b})[-{r}] & !({b}*{q} = 0)");
    let l6 = pb.chain(&[l1, l2, l3, l4, l5], f!("{phi} -> {a}*{p} = 0 | EE({p},{q})[{r}]"));
    let l7 = pb.rule(RuleName::R1, l6, &p0, f!("{phi} -> AE({a},{q})[{r}]"));
    let l8 = pb.chain(&[l7], f!("!EE({a},{b})[-{r}] -> {b}*{q} = 0 | AE({a},{q})[{r}]"));
    pb.rule(RuleName::R2, l8, &q0, f!("!EE({a},{b})[-{r}] -> AA({a},{b})[{r}]"))
}

/// `!EA(a,b)[r] -> AE(a,b)[-r]`
fn not_ea_ae_neg(pb: &mut ProofBuilder, a: &SetTerm, b0: &SetTerm, r0: &RelTerm) -> usize {
    let (a, b, r) = (a.g(), b0.g(), r0.g());
    let p0 = pb.fresh();
    let p = p0.g();
    let l1 = pb.axiom(Ax::AL3, f!("!EA({a},{b})[{r}] -> {a}*{p} = 0 | !AA({p},{b})[{r}]"));
    let l2 = not_ee_aa(pb, &p0, b0, r0);
    let l3 = pb.chain(&[l1, l2], f!("!EA({a},{b})[{r}] -> {a}*{p} = 0 | EE({p},{b})[-{r}]"));
    pb.rule(RuleName::R1, l3, &p0, f!("!EA({a},{b})[{r}] -> AE({a},{b})[-{r}]"))
}

/// `AA(a,b)[r] -> !EE(a,b)[-r]`
fn aa_not_ee(pb: &mut ProofBuilder, a0: &SetTerm, b0: &SetTerm, r0: &RelTerm) -> usize {
    let (a, b, r) = (a0.g(), b0.g(), r0.g());
    let p0 = pb.fresh();
    let p = p0.g();
    let neg = r0.clone().complement();
    let l1 = pb.axiom(Ax::AL2, f!("AA({a},{b})[{r}] -> {b}*{p} = 0 | AE({a},{p})[{r}]"));
    let l2 = ae_not_ea(pb, a0, &p0, r0);
    let l3 = not_ea_ae_neg(pb, a0, &p0, &neg);
    let l4 = pb.chain(&[l1, l2, l3], f!("AA({a},{b})[{r}] -> {b}*{p} = 0 | AE({a},{p})[--{r}]"));
    let l5 = pb.rule(RuleName::R2, l4, &p0, f!("AA({a},{b})[{r}] -> AA({a},{b})[--{r}]"));
    let l6 = pb.axiom(Ax::ANEG, f!("AA({a},{b})[--{r}] <-> !EE({a},{b})[-{r}]"));
    pb.chain(&[l5, l6], f!("AA({a},{b})[{r}] -> !EE({a},{b})[-{r}]"))
}

/// `AE(a,b)[-r] -> !EA(a,b)[r]`
fn ae_neg_not_ea(pb: &mut ProofBuilder, a: &SetTerm, b0: &SetTerm, r0: &RelTerm) -> usize {
    let (a, b, r) = (a.g(), b0.g(), r0.g());
    let p0 = pb.fresh();
    let p = p0.g();
    let l1 = pb.axiom(Ax::AL1, f!("AE({a},{b})[-{r}] -> {a}*{p} = 0 | EE({p},{b})[-{r}]"));
    let l2 = aa_not_ee(pb, &p0, b0, r0);
    let l3 = pb.chain(&[l1, l2], f!("AE({a},{b})[-{r}] -> {a}*{p} = 0 | !AA({p},{b})[{r}]"));
    pb.rule(RuleName::R3, l3, &p0, f!("AE({a},{b})[-{r}] -> !EA({a},{b})[{r}]"))
}

/// `EE(a,b)[r] & a <= c -> EE(c,b)[r]`
fn ee_widen_left(pb: &mut ProofBuilder, a: &SetTerm, b: &SetTerm, c: &SetTerm, r: &RelTerm) -> usize {
    let (a, b, c, r) = (a.g(), b.g(), c.g(), r.g());
    let l1 = pb.axiom(Ax::BA_JOIN_LUB, f!("{a} <= {c} & {c} <= {c} -> {a}+{c} <= {c}"));
    let l2 = pb.axiom(Ax::BA_REFL, f!("{c} <= {c}"));
    let l3 = pb.axiom(Ax::BA_JOIN_R, f!("{c} <= {a}+{c}"));
    let l4 = pb.axiom(Ax::AU1, f!("EE({a}+{c},{b})[{r}] <-> EE({a},{b})[{r}] | EE({c},{b})[{r}]"));
    let l5 = pb.axiom(Ax::AEQ1, f!("EE({a}+{c},{b})[{r}] & {a}+{c} = {c} -> EE({c},{b})[{r}]"));
    pb.chain(&[l1, l2, l3, l4, l5], f!("EE({a},{b})[{r}] & {a} <= {c} -> EE({c},{b})[{r}]"))
}

/// `EE(a,b)[r] & b <= c -> EE(a,c)[r]`
fn ee_widen_right(pb: &mut ProofBuilder, a: &SetTerm, b: &SetTerm, c: &SetTerm, r: &RelTerm) -> usize {
    let (a, b, c, r) = (a.g(), b.g(), c.g(), r.g());
    let l1 = pb.axiom(Ax::BA_JOIN_LUB, f!("{b} <= {c} & {c} <= {c} -> {b}+{c} <= {c}"));
    let l2 = pb.axiom(Ax::BA_REFL, f!("{c} <= {c}"));
    let l3 = pb.axiom(Ax::BA_JOIN_R, f!("{c} <= {b}+{c}"));
    let l4 = pb.axiom(Ax::AU2, f!("EE({a},{b}+{c})[{r}] <-> EE({a},{b})[{r}] | EE({a},{c})[{r}]"));
    let l5 = pb.axiom(Ax::AEQ2, f!("EE({a},{b}+{c})[{r}] & {b}+{c} = {c} -> EE({a},{c})[{r}]"));
    pb.chain(&[l1, l2, l3, l4, l5], f!("EE({a},{b})[{r}] & {b} <= {c} -> EE({a},{c})[{r}]"))
}

/// `AA(a,b)[r] & c <= a -> AA(c,b)[r]`
fn aa_shrink_left(pb: &mut ProofBuilder, a0: &SetTerm, b0: &SetTerm, c0: &SetTerm, r0: &RelTerm) -> usize {
    let (a, b, c, r) = (a0.g(), b0.g(), c0.g(), r0.g());
    let l1 = aa_not_ee(pb, a0, b0, r0);
    let l2 = ee_widen_left(pb, c0, b0, a0, &r0.clone().complement());
    let l3 = not_ee_aa(pb, c0, b0, r0);
    pb.chain(&[l1, l2, l3], f!("AA({a},{b})[{r}] & {c} <= {a} -> AA({c},{b})[{r}]"))
}

/// `AA(a,b)[r] & c <= b -> AA(a,c)[r]`
fn aa_shrink_right(pb: &mut ProofBuilder, a0: &SetTerm, b0: &SetTerm, c0: &SetTerm, r0: &RelTerm) -> usize {
    let (a, b, c, r) = (a0.g(), b0.g(), c0.g(), r0.g());
    let l1 = aa_not_ee(pb, a0, b0, r0);
    let l2 = ee_widen_right(pb, a0, c0, b0, &r0.clone().complement());
    let l3 = not_ee_aa(pb, a0, c0, r0);
    pb.chain(&[l1, l2, l3], f!("AA({a},{b})[{r}] & {c} <= {b} -> AA({a},{c})[{r}]"))
}

/// `AA(a,b)[r] & AA(c,d)[s] -> AA(a*c,b*d)[r*s]`
fn aa_meet(
    pb: &mut ProofBuilder,
    a0: &SetTerm,
    b0: &SetTerm,
    c0: &SetTerm,
    d0: &SetTerm,
    r0: &RelTerm,
    s0: &RelTerm,
) -> usize {
    let (a, b, c, d, r, s) = (a0.g(), b0.g(), c0.g(), d0.g(), r0.g(), s0.g());
    let ac = a0.clone().meet(c0.clone());
    let bd = b0.clone().meet(d0.clone());
    let l1 = pb.axiom(Ax::BA_MEET_L, f!("{a}*{c} <= {a}"));
    let l2 = pb.axiom(Ax::BA_MEET_L, f!("{b}*{d} <= {b}"));
    let l3 = pb.axiom(Ax::BA_MEET_R, f!("{a}*{c} <= {c}"));
    let l4 = pb.axiom(Ax::BA_MEET_R, f!("{b}*{d} <= {d}"));
    let l5 = aa_shrink_left(pb, a0, b0, &ac, r0);
    let l6 = aa_shrink_right(pb, &ac, b0, &bd, r0);
    let l7 = aa_shrink_left(pb, c0, d0, &ac, s0);
    let l8 = aa_shrink_right(pb, &ac, d0, &bd, s0);
    let l9 =
        pb.axiom(Ax::ACAP, f!("AA({a}*{c},{b}*{d})[{r}*{s}] <-> AA({a}*{c},{b}*{d})[{r}] & AA({a}*{c},{b}*{d})[{s}]"));
    pb.chain(
        &[l1, l2, l3, l4, l5, l6, l7, l8, l9],
        f!("AA({a},{b})[{r}] & AA({c},{d})[{s}] -> AA({a}*{c},{b}*{d})[{r}*{s}]"),
    )
}

/// `AA(a,b)[r] & !EE(c,d)[r*s] -> AA(a*c,b*d)[-s]`
fn aa_disjoint(
    pb: &mut ProofBuilder,
    a0: &SetTerm,
    b0: &SetTerm,
    c0: &SetTerm,
    d0: &SetTerm,
    r0: &RelTerm,
    s0: &RelTerm,
) -> usize {
    let (a, b, c, d, r, s) = (a0.g(), b0.g(), c0.g(), d0.g(), r0.g(), s0.g());
    let (p0, q0) = (pb.fresh(), pb.fresh());
    let (p, q) = (p0.g(), q0.g());
    let m = |x: &SetTerm, y: &SetTerm| x.clone().meet(y.clone());
    let l1 = aa_meet(pb, a0, b0, &p0, &q0, r0, s0);
    let l2 = pb.axiom(Ax::AL2, f!("AA({a}*{p},{b}*{q})[{r}*{s}] -> ({b}*{q})*{d} = 0 | AE({a}*{p},{d})[{r}*{s}]"));
    let l3 = pb.axiom(Ax::AL1, f!("AE({a}*{p},{d})[{r}*{s}] -> ({a}*{p})*{c} = 0 | EE({c},{d})[{r}*{s}]"));
    let l4 = zero_transfer(pb, &m(&m(a0, c0), &p0), &m(&m(a0, &p0), c0));
    let l5 = zero_transfer(pb, &m(&m(b0, d0), &q0), &m(&m(b0, &q0), d0));
    let l6 = not_ee_aa(pb, &p0, &q0, s0);
    let phi = format!("AA({a},{b})[{r}] & !EE({c},{d})[{r}*{s}] & !(({b}*{d})*{q} = 0)");
    let l7 = pb.chain(&[l1, l2, l3, l4, l5, l6], f!("{phi} -> ({a}*{c})*{p} = 0 | EE({p},{q})[-{s}]"));
    let l8 = pb.rule(RuleName::R1, l7, &p0, f!("{phi} -> AE({a}*{c},{q})[-{s}]"));
    let psi = format!("AA({a},{b})[{r}] & !EE({c},{d})[{r}*{s}]");
    let l9 = pb.chain(&[l8], f!("{psi} -> ({b}*{d})*{q} = 0 | AE({a}*{c},{q})[-{s}]"));
    pb.rule(RuleName::R2, l9, &q0, f!("{psi} -> AA({a}*{c},{b}*{d})[-{s}]"))
}

/// `AA(a,b)[r*(s+t)] -> AA(a,b)[r*s+r*t]`
fn rel_distributivity(
    pb: &mut ProofBuilder,
    a0: &SetTerm,
    b0: &SetTerm,
    r0: &RelTerm,
    s0: &RelTerm,
    t0: &RelTerm,
) -> usize {
    let (a, b, r, s, t) = (a0.g(), b0.g(), r0.g(), s0.g(), t0.g());
    let (p0, q0) = (pb.fresh(), pb.fresh());
    let (p, q) = (p0.g(), q0.g());
    let m = |x: &SetTerm, y: &SetTerm| x.clone().meet(y.clone());
    let (ap, bq) = (m(a0, &p0), m(b0, &q0));
    let dist = format!("{r}*{s}+{r}*{t}");
    let hyp = format!("AA({a},{b})[{r}*({s}+{t})]");
    let psi = format!("{hyp} & !EE({p},{q})[{dist}]");
    let l1 = pb.axiom(Ax::ACAP, f!("{hyp} <-> AA({a},{b})[{r}] & AA({a},{b})[{s}+{t}]"));
    let l2 = pb.axiom(Ax::ACUP, f!("EE({p},{q})[{dist}] <-> EE({p},{q})[{r}*{s}] | EE({p},{q})[{r}*{t}]"));
    let l3 = aa_disjoint(pb, a0, b0, &p0, &q0, r0, s0);
    let l4 = aa_disjoint(pb, a0, b0, &p0, &q0, r0, t0);
    let l5 = pb.axiom(Ax::ANEG, f!("AA({a}*{p},{b}*{q})[-{s}] <-> !EE({a}*{p},{b}*{q})[{s}]"));
    let l6 = pb.axiom(Ax::ANEG, f!("AA({a}*{p},{b}*{q})[-{t}] <-> !EE({a}*{p},{b}*{q})[{t}]"));
    let l7 =
        pb.axiom(Ax::ACUP, f!("EE({a}*{p},{b}*{q})[{s}+{t}] <-> EE({a}*{p},{b}*{q})[{s}] | EE({a}*{p},{b}*{q})[{t}]"));
    let l8 =
        pb.chain(&[l1, l2, l3, l4, l5, l6, l7], f!("{psi} -> AA({a},{b})[{s}+{t}] & !EE({a}*{p},{b}*{q})[{s}+{t}]"));
    let l9 = pb.axiom(Ax::AL2, f!("AA({a},{b})[{s}+{t}] -> {b}*({b}*{q}) = 0 | AE({a},{b}*{q})[{s}+{t}]"));
    let l10 = pb.axiom(Ax::AL1, f!("AE({a},{b}*{q})[{s}+{t}] -> {a}*({a}*{p}) = 0 | EE({a}*{p},{b}*{q})[{s}+{t}]"));
    let l11 = zero_transfer(pb, &ap, &m(a0, &ap));
    let l12 = zero_transfer(pb, &bq, &m(b0, &bq));
    let l13 = pb.chain(&[l8, l9, l10, l11, l12], f!("{psi} -> {a}*{p} = 0 | {b}*{q} = 0"));
    let phi = format!("{hyp} & !({b}*{q} = 0)");
    let l14 = pb.chain(&[l13], f!("{phi} -> {a}*{p} = 0 | EE({p},{q})[{dist}]"));
    let l15 = pb.rule(RuleName::R1, l14, &p0, f!("{phi} -> AE({a},{q})[{dist}]"));
    let l16 = pb.chain(&[l15], f!("{hyp} -> {b}*{q} = 0 | AE({a},{q})[{dist}]"));
    pb.rule(RuleName::R2, l16, &q0, f!("{hyp} -> AA({a},{b})[{dist}]"))
}

/// The lines `AA(a,b)[r] -> b*b = 0 | AE(a,b)[r]`, `AE(a,b)[r] -> a*a = 0 | EE(a,b)[r]`,
/// `a*a = 0 -> a = 0` and `b*b = 0 -> b = 0`.
fn emptiness_lines(pb: &mut ProofBuilder, a0: &SetTerm, b0: &SetTerm, r: &RelTerm) -> [usize; 4] {
    let (a, b, r) = (a0.g(), b0.g(), r.g());
    let l1 = pb.axiom(Ax::AL2, f!("AA({a},{b})[{r}] -> {b}*{b} = 0 | AE({a},{b})[{r}]"));
    let l2 = pb.axiom(Ax::AL1, f!("AE({a},{b})[{r}] -> {a}*{a} = 0 | EE({a},{b})[{r}]"));
    let l3 = zero_transfer(pb, a0, &a0.clone().meet(a0.clone()));
    let l4 = zero_transfer(pb, b0, &b0.clone().meet(b0.clone()));
    [l1, l2, l3, l4]
}

/// `AA(a,b)[r*-r] -> AA(a,b)[0]`
fn rel_complement_meet(pb: &mut ProofBuilder, a0: &SetTerm, b0: &SetTerm, r0: &RelTerm) -> usize {
    let (a, b, r) = (a0.g(), b0.g(), r0.g());
    let l1 = pb.axiom(Ax::ACAP, f!("AA({a},{b})[{r}*-{r}] <-> AA({a},{b})[{r}] & AA({a},{b})[-{r}]"));
    let l2 = pb.axiom(Ax::ANEG, f!("AA({a},{b})[-{r}] <-> !EE({a},{b})[{r}]"));
    let [l3, l4, l5, l6] = emptiness_lines(pb, a0, b0, r0);
    let l7 = pb.chain(&[l1, l2, l3, l4, l5, l6], f!("AA({a},{b})[{r}*-{r}] -> {a} = 0 | {b} = 0"));
    let l8 = pb.axiom(Ax::A0, f!("{a} = 0 | {b} = 0 -> !EE({a},{b})[-0]"));
    let l9 = not_ee_aa(pb, a0, b0, &RelTerm::Zero);
    pb.chain(&[l7, l8, l9], f!("AA({a},{b})[{r}*-{r}] -> AA({a},{b})[0]"))
}

/// `EE(a,b)[1] -> EE(a,b)[r+-r]`
fn rel_complement_join(pb: &mut ProofBuilder, a0: &SetTerm, b0: &SetTerm, r0: &RelTerm) -> usize {
    let (a, b, r) = (a0.g(), b0.g(), r0.g());
    let l1 = pb.axiom(Ax::ACUP, f!("EE({a},{b})[{r}+-{r}] <-> EE({a},{b})[{r}] | EE({a},{b})[-{r}]"));
    let l2 = not_ee_aa(pb, a0, b0, r0);
    let [l3, l4, l5, l6] = emptiness_lines(pb, a0, b0, r0);
    let l7 = pb.chain(&[l1, l2, l3, l4, l5, l6], f!("!EE({a},{b})[{r}+-{r}] -> {a} = 0 | {b} = 0"));
    let l8 = pb.axiom(Ax::A0, f!("{a} = 0 | {b} = 0 -> !EE({a},{b})[1]"));
    pb.chain(&[l7, l8], f!("EE({a},{b})[1] -> EE({a},{b})[{r}+-{r}]"))
}

/// `x = 0 | EE(x,x)[1]`
fn diagonal_base(pb: &mut ProofBuilder, x0: &SetTerm) -> usize {
    let x = x0.g();
    let l1 = pb.axiom(Ax::A1R, f!("AA({x},{x})[1]"));
    let [l2, l3, l4, _] = emptiness_lines(pb, x0, x0, &RelTerm::One);
    pb.chain(&[l1, l2, l3, l4], f!("{x} = 0 | EE({x},{x})[1]"))
}

/// `a = 0 | EE(a,a)[1*(r1^+-r1)*...*(rk^+-rk)]`, by one application of RS per relation.
fn diagonal(pb: &mut ProofBuilder, a: &SetTerm, rels: &[RelTerm]) -> usize {
    let ps: Vec<SetTerm> = rels.iter().map(|_| pb.fresh()).collect();
    // prefix[j] is the left argument of the j-th RS step: a*p_k*...*p_{j+2}, zero-based.
    let k = rels.len();
    let prefix = |j: usize| ps[j + 1..].iter().rev().fold(a.clone(), |acc, p| acc.meet(p.clone()));
    let x0 = prefix(0).meet(ps[0].clone());
    let mut at = diagonal_base(pb, &x0);
    let mut alpha = RelTerm::One;
    for j in 0..k {
        let (aj, pj) = (prefix(j), &ps[j]);
        let x0 = aj.clone().meet(pj.clone());
        let (x, p, al) = (x0.g(), pj.g(), alpha.g());
        let widen_l = ee_widen_left(pb, &x0, &x0, pj, &alpha);
        let widen_r = ee_widen_right(pb, pj, &x0, pj, &alpha);
        let meet_r = pb.axiom(Ax::BA_MEET_R, f!("{x} <= {p}"));
        let premise = pb.chain(&[at, widen_l, widen_r, meet_r], f!("{x} = 0 | EE({p},{p})[{al}]"));
        let beta = &rels[j];
        alpha = alpha.meet(beta.clone().converse().join(beta.clone().complement()));
        at = pb.rule(RuleName::RS, premise, pj, f!("{} = 0 | EE({},{})[{}]", aj.g(), aj.g(), aj.g(), alpha));
    }
    at
}

/// `EA(a,b)[r] -> AE(b,a)[r^]`
fn converse_scope_switch(pb: &mut ProofBuilder) -> usize {
    let (p0, q0) = (pb.fresh(), pb.fresh());
    let (p, q) = (p0.g(), q0.g());
    let l1 = pb.axiom(Ax::AL2, f!("AA({p},b)[r] -> b*{q} = 0 | AE({p},{q})[r]"));
    let l2 = pb.chain(&[l1], f!("!AA({p},b)[r] | b*{q} = 0 | AE({p},{q})[r]"));
    let l3 = pb.axiom(Ax::AL1, f!("AE({p},{q})[r] -> {p}*a = 0 | EE(a,{q})[r]"));
    let l4 = pb.axiom(Ax::ACONV, f!("EE({q},a)[r^] <-> EE(a,{q})[r]"));
    let l5 = zero_transfer(pb, &set("a").meet(p0.clone()), &p0.clone().meet(set("a")));
    let l6 = pb.chain(&[l2, l3, l4, l5], f!("a*{p} = 0 | !AA({p},b)[r] | b*{q} = 0 | EE({q},a)[r^]"));
    let phi = format!("!(b*{q} = 0 | EE({q},a)[r^])");
    let l7 = pb.chain(&[l6], f!("{phi} -> a*{p} = 0 | !AA({p},b)[r]"));
    let l8 = pb.rule(RuleName::R3, l7, &p0, f!("{phi} -> !EA(a,b)[r]"));
    let l9 = pb.chain(&[l8], f!("EA(a,b)[r] -> b*{q} = 0 | EE({q},a)[r^]"));
    pb.rule(RuleName::R1, l9, &q0, f!("EA(a,b)[r] -> AE(b,a)[r^]"))
}

type Generator = fn(&mut ProofBuilder) -> usize;

const ENTRIES: &[(&str, &str, &str, Generator)] = &[
    (
        "converse-scope-switch",
        "an existential-universal statement yields the universal-existential one about the converse",
        "EA(a,b)[r] -> AE(b,a)[r^]",
        converse_scope_switch,
    ),
    ("dual-ae-not-ea", "AE under a relation excludes EA under its complement", "AE(a,b)[r] -> !EA(a,b)[-r]", |pb| {
        ae_not_ea(pb, &set("a"), &set("b"), &rel("r"))
    }),
    ("dual-not-ea-ae", "failure of EA under the complement gives AE", "!EA(a,b)[-r] -> AE(a,b)[r]", |pb| {
        not_ea_ae(pb, &set("a"), &set("b"), &rel("r"))
    }),
    ("dual-not-ee-aa", "failure of EE under the complement gives AA", "!EE(a,b)[-r] -> AA(a,b)[r]", |pb| {
        not_ee_aa(pb, &set("a"), &set("b"), &rel("r"))
    }),
    ("dual-not-ea-ae-neg", "failure of EA gives AE under the complement", "!EA(a,b)[r] -> AE(a,b)[-r]", |pb| {
        not_ea_ae_neg(pb, &set("a"), &set("b"), &rel("r"))
    }),
    ("dual-aa-not-ee", "AA excludes EE under the complement", "AA(a,b)[r] -> !EE(a,b)[-r]", |pb| {
        aa_not_ee(pb, &set("a"), &set("b"), &rel("r"))
    }),
    ("dual-ae-neg-not-ea", "AE under the complement excludes EA", "AE(a,b)[-r] -> !EA(a,b)[r]", |pb| {
        ae_neg_not_ea(pb, &set("a"), &set("b"), &rel("r"))
    }),
    ("ee-widen-left", "EE is monotone in its first argument", "EE(a,b)[r] & a <= c -> EE(c,b)[r]", |pb| {
        ee_widen_left(pb, &set("a"), &set("b"), &set("c"), &rel("r"))
    }),
    ("ee-widen-right", "EE is monotone in its second argument", "EE(a,b)[r] & b <= c -> EE(a,c)[r]", |pb| {
        ee_widen_right(pb, &set("a"), &set("b"), &set("c"), &rel("r"))
    }),
    ("aa-shrink-left", "AA is antitone in its first argument", "AA(a,b)[r] & c <= a -> AA(c,b)[r]", |pb| {
        aa_shrink_left(pb, &set("a"), &set("b"), &set("c"), &rel("r"))
    }),
    ("aa-shrink-right", "AA is antitone in its second argument", "AA(a,b)[r] & c <= b -> AA(a,c)[r]", |pb| {
        aa_shrink_right(pb, &set("a"), &set("b"), &set("c"), &rel("r"))
    }),
    (
        "aa-meet",
        "AA statements combine over meets of sets and relations",
        "AA(a,b)[r] & AA(c,d)[s] -> AA(a*c,b*d)[r*s]",
        |pb| aa_meet(pb, &set("a"), &set("b"), &set("c"), &set("d"), &rel("r"), &rel("s")),
    ),
    (
        "aa-disjoint",
        "AA together with a failed EE bounds a relative complement",
        "AA(a,b)[r] & !EE(c,d)[r*s] -> AA(a*c,b*d)[-s]",
        |pb| aa_disjoint(pb, &set("a"), &set("b"), &set("c"), &set("d"), &rel("r"), &rel("s")),
    ),
    ("rel-distributivity", "meet distributes over join inside AA", "AA(a,b)[r*(s+t)] -> AA(a,b)[r*s+r*t]", |pb| {
        rel_distributivity(pb, &set("a"), &set("b"), &rel("r"), &rel("s"), &rel("t"))
    }),
    (
        "rel-complement-meet",
        "a relation met with its complement is empty inside AA",
        "AA(a,b)[r*-r] -> AA(a,b)[0]",
        |pb| rel_complement_meet(pb, &set("a"), &set("b"), &rel("r")),
    ),
    (
        "rel-complement-join",
        "a relation joined with its complement is full inside EE",
        "EE(a,b)[1] -> EE(a,b)[r+-r]",
        |pb| rel_complement_join(pb, &set("a"), &set("b"), &rel("r")),
    ),
    (
        "diagonal-one",
        "a nonempty set meets itself along the reflexive part of one relation",
        "a = 0 | EE(a,a)[1*(r^+-r)]",
        |pb| diagonal(pb, &set("a"), &[rel("r")]),
    ),
    (
        "diagonal-two",
        "a nonempty set meets itself along the reflexive parts of two relations",
        "a = 0 | EE(a,a)[1*(r^+-r)*(s^+-s)]",
        |pb| diagonal(pb, &set("a"), &[rel("r"), rel("s")]),
    ),
];

fn build(entry: &(&'static str, &'static str, &'static str, Generator)) -> CorpusEntry {
    let (name, description, statement, generate) = *entry;
    let mut pb = ProofBuilder::new();
    generate(&mut pb);
    CorpusEntry { name, description, statement, proof: pb.finish() }
}

pub fn names() -> Vec<&'static str> {
    ENTRIES.iter().map(|e| e.0).collect()
}

pub fn corpus() -> Vec<CorpusEntry> {
    ENTRIES.iter().map(build).collect()
}

pub fn corpus_entry(name: &str) -> Option<CorpusEntry> {
    ENTRIES.iter().find(|e| e.0 == name).map(build)
}

/// `Q(a,b)[-r] <-> !Q'(a,b)[r]` for each quantifier pair `Q` and its dual `Q'`.
pub fn dual_biconditionals() -> Vec<Formula> {
    QuantPair::ALL.iter().map(|q| f!("{q}(a,b)[-r] <-> !{}(a,b)[r]", q.dual())).collect()
}
