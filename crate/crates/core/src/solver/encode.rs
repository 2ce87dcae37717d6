//! Propositional encoding of "some model of size n satisfies f".
//!
//! Primary variables are point memberships of set variables and edges of relational variables.
//! Terms and formulas are Tseitin-encoded with structural sharing of gates.

use std::collections::HashMap;

use super::cdcl::{Lit, Solver};
use crate::semantics::{Model, PointSet, Relation, Vocabulary};
use crate::syntax::{Formula, QuantPair, RelTerm, SetTerm};

pub struct Encoding<'f> {
    pub solver: Solver,
    n: usize,
    vocab: Vocabulary,
    truth: Lit,
    mem: HashMap<&'f str, Vec<Lit>>,
    edge: HashMap<&'f str, Vec<Lit>>,
    set_cache: HashMap<(&'f SetTerm, usize), Lit>,
    rel_cache: HashMap<(&'f RelTerm, usize, usize), Lit>,
    gates: HashMap<Vec<Lit>, Lit>,
}

impl<'f> Encoding<'f> {
    /// Encodes `f` over models with `n` points, with point-order symmetry breaking if asked.
    pub fn new(f: &'f Formula, n: usize, symmetry_breaking: bool) -> Self {
        let mut solver = Solver::new();
        let truth = Lit::new(solver.new_var(), true);
        solver.add_clause(&[truth]);
        let vocab = Vocabulary::of_formula(f);
        let mut enc = Encoding {
            solver,
            n,
            vocab,
            truth,
            mem: HashMap::new(),
            edge: HashMap::new(),
            set_cache: HashMap::new(),
            rel_cache: HashMap::new(),
            gates: HashMap::new(),
        };
        enc.allocate_primary(f);
        if symmetry_breaking {
            enc.break_symmetry();
        }
        let root = enc.formula(f);
        enc.solver.add_clause(&[root]);
        enc
    }

    fn allocate_primary(&mut self, f: &'f Formula) {
        let mut sets = Vec::new();
        let mut rels = Vec::new();
        collect_names(f, &mut sets, &mut rels);
        for s in sets {
            if !self.mem.contains_key(s) {
                let lits = (0..self.n).map(|_| Lit::new(self.solver.new_var(), true)).collect();
                self.mem.insert(s, lits);
            }
        }
        for r in rels {
            if !self.edge.contains_key(r) {
                let lits = (0..self.n * self.n).map(|_| Lit::new(self.solver.new_var(), true)).collect();
                self.edge.insert(r, lits);
            }
        }
    }

    /// Orders points by their membership vectors, largest first.
    fn break_symmetry(&mut self) {
        let names: Vec<&'f str> = {
            let mut v: Vec<&'f str> = self.mem.keys().copied().collect();
            v.sort();
            v
        };
        if names.is_empty() {
            return;
        }
        for x in 0..self.n.saturating_sub(1) {
            let mut eq = self.truth;
            for s in &names {
                let (a, b) = (self.mem[s][x], self.mem[s][x + 1]);
                // equal so far and a is false -> b is false
                self.solver.add_clause(&[!eq, a, !b]);
                let same = self.iff(a, b);
                eq = self.and(vec![eq, same]);
            }
        }
    }

    fn and(&mut self, lits: Vec<Lit>) -> Lit {
        let mut lits: Vec<Lit> = lits.into_iter().filter(|l| *l != self.truth).collect();
        if lits.contains(&!self.truth) {
            return !self.truth;
        }
        lits.sort();
        lits.dedup();
        if lits.windows(2).any(|w| w[0] == !w[1]) {
            return !self.truth;
        }
        match lits.len() {
            0 => return self.truth,
            1 => return lits[0],
            _ => {}
        }
        if let Some(g) = self.gates.get(&lits) {
            return *g;
        }
        let g = Lit::new(self.solver.new_var(), true);
        for l in &lits {
            self.solver.add_clause(&[!g, *l]);
        }
        let mut big: Vec<Lit> = lits.iter().map(|l| !*l).collect();
        big.push(g);
        self.solver.add_clause(&big);
        self.gates.insert(lits, g);
        g
    }

    fn or(&mut self, lits: Vec<Lit>) -> Lit {
        let neg = lits.into_iter().map(|l| !l).collect();
        !self.and(neg)
    }

    fn iff(&mut self, a: Lit, b: Lit) -> Lit {
        let both = self.and(vec![a, b]);
        let neither = self.and(vec![!a, !b]);
        self.or(vec![both, neither])
    }

    fn set(&mut self, t: &'f SetTerm, x: usize) -> Lit {
        if let Some(l) = self.set_cache.get(&(t, x)) {
            return *l;
        }
        let l = match t {
            SetTerm::Var(v) => self.mem[v.as_str()][x],
            SetTerm::Zero => !self.truth,
            SetTerm::One => self.truth,
            SetTerm::Complement(a) => !self.set(a, x),
            SetTerm::Meet(a, b) => {
                let (a, b) = (self.set(a, x), self.set(b, x));
                self.and(vec![a, b])
            }
            SetTerm::Join(a, b) => {
                let (a, b) = (self.set(a, x), self.set(b, x));
                self.or(vec![a, b])
            }
        };
        self.set_cache.insert((t, x), l);
        l
    }

    fn rel(&mut self, t: &'f RelTerm, x: usize, y: usize) -> Lit {
        if let Some(l) = self.rel_cache.get(&(t, x, y)) {
            return *l;
        }
        let l = match t {
            RelTerm::Var(v) => self.edge[v.as_str()][x * self.n + y],
            RelTerm::Zero => !self.truth,
            RelTerm::One => self.truth,
            RelTerm::Complement(a) => !self.rel(a, x, y),
            RelTerm::Converse(a) => self.rel(a, y, x),
            RelTerm::Meet(a, b) => {
                let (a, b) = (self.rel(a, x, y), self.rel(b, x, y));
                self.and(vec![a, b])
            }
            RelTerm::Join(a, b) => {
                let (a, b) = (self.rel(a, x, y), self.rel(b, x, y));
                self.or(vec![a, b])
            }
        };
        self.rel_cache.insert((t, x, y), l);
        l
    }

    fn formula(&mut self, f: &'f Formula) -> Lit {
        let n = self.n;
        match f {
            Formula::Leq(a, b) => {
                let parts = (0..n)
                    .map(|x| {
                        let (ax, bx) = (self.set(a, x), self.set(b, x));
                        self.or(vec![!ax, bx])
                    })
                    .collect();
                self.and(parts)
            }
            Formula::Atom(q, a, b, r) => {
                let mut outer = Vec::with_capacity(n);
                for x in 0..n {
                    let ax = self.set(a, x);
                    let mut inner = Vec::with_capacity(n);
                    for y in 0..n {
                        let by = self.set(b, y);
                        let rxy = self.rel(r, x, y);
                        let cell = if q.second_universal() { self.or(vec![!by, rxy]) } else { self.and(vec![by, rxy]) };
                        inner.push(cell);
                    }
                    let row = if q.second_universal() { self.and(inner) } else { self.or(inner) };
                    outer.push(if q.first_universal() { self.or(vec![!ax, row]) } else { self.and(vec![ax, row]) });
                }
                match q {
                    QuantPair::AE | QuantPair::AA => self.and(outer),
                    QuantPair::EE | QuantPair::EA => self.or(outer),
                }
            }
            Formula::Not(x) => !self.formula(x),
            Formula::And(l, r) => {
                let (l, r) = (self.formula(l), self.formula(r));
                self.and(vec![l, r])
            }
            Formula::Or(l, r) => {
                let (l, r) = (self.formula(l), self.formula(r));
                self.or(vec![l, r])
            }
            Formula::Implies(l, r) => {
                let (l, r) = (self.formula(l), self.formula(r));
                self.or(vec![!l, r])
            }
            Formula::Iff(l, r) => {
                let (l, r) = (self.formula(l), self.formula(r));
                self.iff(l, r)
            }
            Formula::Top => self.truth,
            Formula::Bottom => !self.truth,
        }
    }

    /// The model described by a satisfying assignment, over the formula's own vocabulary.
    pub fn decode(&self, assignment: &[bool]) -> Model {
        let n = self.n;
        let val = |l: Lit| assignment[l.var()] == l.is_positive();
        let mut m = Model::with_size(n);
        for s in &self.vocab.set_vars {
            let lits = &self.mem[s.as_str()];
            m.assign_set(s.clone(), PointSet::from_indices(n, (0..n).filter(|x| val(lits[*x]))));
        }
        for r in &self.vocab.rel_vars {
            let lits = &self.edge[r.as_str()];
            let pairs = (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).filter(|(x, y)| val(lits[x * n + y]));
            m.assign_rel(r.clone(), Relation::from_pairs(n, pairs));
        }
        m
    }
}

fn collect_names<'f>(f: &'f Formula, sets: &mut Vec<&'f str>, rels: &mut Vec<&'f str>) {
    fn set_names<'f>(t: &'f SetTerm, out: &mut Vec<&'f str>) {
        match t {
            SetTerm::Var(v) => out.push(v),
            SetTerm::Zero | SetTerm::One => {}
            SetTerm::Complement(a) => set_names(a, out),
            SetTerm::Meet(a, b) | SetTerm::Join(a, b) => {
                set_names(a, out);
                set_names(b, out);
            }
        }
    }
    fn rel_names<'f>(t: &'f RelTerm, out: &mut Vec<&'f str>) {
        match t {
            RelTerm::Var(v) => out.push(v),
            RelTerm::Zero | RelTerm::One => {}
            RelTerm::Complement(a) | RelTerm::Converse(a) => rel_names(a, out),
            RelTerm::Meet(a, b) | RelTerm::Join(a, b) => {
                rel_names(a, out);
                rel_names(b, out);
            }
        }
    }
    f.visit_atoms(&mut |atom| match atom {
        Formula::Leq(a, b) => {
            set_names(a, sets);
            set_names(b, sets);
        }
        Formula::Atom(_, a, b, r) => {
            set_names(a, sets);
            set_names(b, sets);
            rel_names(r, rels);
        }
        _ => {}
    });
}
