//! A small conflict-driven clause-learning SAT solver.
//!
//! Two watched literals, first-UIP learning, activity-based branching with saved phases and
//! Luby restarts. Branching ties are broken by variable index, so runs are deterministic.

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Lit(u32);

impl Lit {
    pub fn new(var: usize, positive: bool) -> Lit {
        Lit((var as u32) << 1 | u32::from(!positive))
    }

    pub fn var(self) -> usize {
        (self.0 >> 1) as usize
    }

    pub fn is_positive(self) -> bool {
        self.0 & 1 == 0
    }

    fn index(self) -> usize {
        self.0 as usize
    }
}

impl std::ops::Not for Lit {
    type Output = Lit;

    fn not(self) -> Lit {
        Lit(self.0 ^ 1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveResult {
    Sat(Vec<bool>),
    Unsat,
    /// The conflict budget ran out.
    Budget,
    /// The abort callback asked to stop.
    Aborted,
}

const UNASSIGNED: i8 = -1;

#[derive(Debug, Default)]
pub struct Solver {
    clauses: Vec<Vec<Lit>>,
    watches: Vec<Vec<usize>>,
    assigns: Vec<i8>,
    level: Vec<u32>,
    reason: Vec<Option<usize>>,
    phase: Vec<bool>,
    activity: Vec<f64>,
    seen: Vec<bool>,
    trail: Vec<Lit>,
    trail_lim: Vec<usize>,
    qhead: usize,
    var_inc: f64,
    inconsistent: bool,
    pub conflicts: u64,
}

fn luby(mut i: u64) -> u64 {
    // i-th element (0-based) of 1,1,2,1,1,2,4,...
    let mut size = 1u64;
    let mut seq = 0u32;
    while size < i + 1 {
        seq += 1;
        size = 2 * size + 1;
    }
    while size - 1 != i {
        size = (size - 1) >> 1;
        seq -= 1;
        i %= size;
    }
    1 << seq
}

impl Solver {
    pub fn new() -> Self {
        Solver { var_inc: 1.0, ..Default::default() }
    }

    pub fn num_vars(&self) -> usize {
        self.assigns.len()
    }

    pub fn num_clauses(&self) -> usize {
        self.clauses.len()
    }

    pub fn new_var(&mut self) -> usize {
        let v = self.assigns.len();
        self.assigns.push(UNASSIGNED);
        self.level.push(0);
        self.reason.push(None);
        self.phase.push(false);
        self.activity.push(0.0);
        self.seen.push(false);
        self.watches.push(Vec::new());
        self.watches.push(Vec::new());
        v
    }

    fn value(&self, l: Lit) -> Option<bool> {
        match self.assigns[l.var()] {
            UNASSIGNED => None,
            v => Some((v == 1) == l.is_positive()),
        }
    }

    fn decision_level(&self) -> u32 {
        self.trail_lim.len() as u32
    }

    fn enqueue(&mut self, l: Lit, reason: Option<usize>) {
        let v = l.var();
        self.assigns[v] = i8::from(l.is_positive());
        self.level[v] = self.decision_level();
        self.reason[v] = reason;
        self.trail.push(l);
    }

    /// Adds a clause at decision level 0.
    pub fn add_clause(&mut self, lits: &[Lit]) {
        if self.inconsistent {
            return;
        }
        let mut c: Vec<Lit> = lits.to_vec();
        c.sort();
        c.dedup();
        if c.windows(2).any(|w| w[0] == !w[1]) {
            return;
        }
        c.retain(|l| self.value(*l) != Some(false));
        if c.iter().any(|l| self.value(*l) == Some(true)) {
            return;
        }
        match c.len() {
            0 => self.inconsistent = true,
            1 => {
                self.enqueue(c[0], None);
                if self.propagate().is_some() {
                    self.inconsistent = true;
                }
            }
            _ => {
                let ci = self.clauses.len();
                self.watches[c[0].index()].push(ci);
                self.watches[c[1].index()].push(ci);
                self.clauses.push(c);
            }
        }
    }

    fn propagate(&mut self) -> Option<usize> {
        while self.qhead < self.trail.len() {
            let p = self.trail[self.qhead];
            self.qhead += 1;
            let false_lit = !p;
            let ws = std::mem::take(&mut self.watches[false_lit.index()]);
            let mut kept = Vec::with_capacity(ws.len());
            let mut conflict = None;
            let mut i = 0;
            while i < ws.len() {
                let ci = ws[i];
                i += 1;
                let c = &mut self.clauses[ci];
                if c[0] == false_lit {
                    c.swap(0, 1);
                }
                let first = c[0];
                if self.value_of(first) == Some(true) {
                    kept.push(ci);
                    continue;
                }
                let c = &self.clauses[ci];
                if let Some(k) = (2..c.len()).find(|&k| self.value_of(c[k]) != Some(false)) {
                    let c = &mut self.clauses[ci];
                    c.swap(1, k);
                    let w = c[1];
                    self.watches[w.index()].push(ci);
                    continue;
                }
                kept.push(ci);
                if self.value_of(first) == Some(false) {
                    conflict = Some(ci);
                    kept.extend_from_slice(&ws[i..]);
                    break;
                }
                self.enqueue(first, Some(ci));
            }
            self.watches[false_lit.index()] = kept;
            if conflict.is_some() {
                self.qhead = self.trail.len();
                return conflict;
            }
        }
        None
    }

    #[inline]
    fn value_of(&self, l: Lit) -> Option<bool> {
        self.value(l)
    }

    fn bump(&mut self, v: usize) {
        self.activity[v] += self.var_inc;
        if self.activity[v] > 1e100 {
            for a in &mut self.activity {
                *a *= 1e-100;
            }
            self.var_inc *= 1e-100;
        }
    }

    fn analyze(&mut self, mut confl: usize) -> (Vec<Lit>, u32) {
        let mut learnt = vec![Lit(0)];
        let mut counter = 0;
        let mut p: Option<Lit> = None;
        let mut idx = self.trail.len();
        let current = self.decision_level();
        loop {
            let start = usize::from(p.is_some());
            for j in start..self.clauses[confl].len() {
                let q = self.clauses[confl][j];
                let v = q.var();
                if !self.seen[v] && self.level[v] > 0 {
                    self.seen[v] = true;
                    self.bump(v);
                    if self.level[v] >= current {
                        counter += 1;
                    } else {
                        learnt.push(q);
                    }
                }
            }
            loop {
                idx -= 1;
                if self.seen[self.trail[idx].var()] {
                    break;
                }
            }
            let pl = self.trail[idx];
            p = Some(pl);
            self.seen[pl.var()] = false;
            counter -= 1;
            if counter == 0 {
                break;
            }
            confl = self.reason[pl.var()].expect("implied literal has a reason");
        }
        learnt[0] = !p.expect("conflict involves the current level");
        for l in &learnt[1..] {
            self.seen[l.var()] = false;
        }
        let mut bt = 0;
        if learnt.len() > 1 {
            let (mut best, mut best_level) = (1, self.level[learnt[1].var()]);
            for (k, l) in learnt.iter().enumerate().skip(2) {
                if self.level[l.var()] > best_level {
                    best = k;
                    best_level = self.level[l.var()];
                }
            }
            learnt.swap(1, best);
            bt = best_level;
        }
        (learnt, bt)
    }

    fn cancel_until(&mut self, level: u32) {
        if self.decision_level() <= level {
            return;
        }
        let lim = self.trail_lim[level as usize];
        for l in self.trail.drain(lim..) {
            let v = l.var();
            self.phase[v] = l.is_positive();
            self.assigns[v] = UNASSIGNED;
            self.reason[v] = None;
        }
        self.trail_lim.truncate(level as usize);
        self.qhead = self.trail.len();
    }

    fn pick_branch(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for v in 0..self.assigns.len() {
            if self.assigns[v] == UNASSIGNED && best.is_none_or(|b| self.activity[v] > self.activity[b]) {
                best = Some(v);
            }
        }
        best
    }

    /// Searches for a satisfying assignment. `abort` is polled every few hundred conflicts.
    pub fn solve(&mut self, max_conflicts: u64, abort: &dyn Fn() -> bool) -> SolveResult {
        if self.inconsistent {
            return SolveResult::Unsat;
        }
        let mut restart_round = 0;
        let mut until_restart = 100 * luby(0);
        loop {
            if let Some(confl) = self.propagate() {
                self.conflicts += 1;
                if self.decision_level() == 0 {
                    self.inconsistent = true;
                    return SolveResult::Unsat;
                }
                let (learnt, bt) = self.analyze(confl);
                self.cancel_until(bt);
                if learnt.len() == 1 {
                    self.enqueue(learnt[0], None);
                } else {
                    let ci = self.clauses.len();
                    self.watches[learnt[0].index()].push(ci);
                    self.watches[learnt[1].index()].push(ci);
                    let asserting = learnt[0];
                    self.clauses.push(learnt);
                    self.enqueue(asserting, Some(ci));
                }
                self.var_inc /= 0.95;
                if self.conflicts >= max_conflicts {
                    self.cancel_until(0);
                    return SolveResult::Budget;
                }
                if self.conflicts.is_multiple_of(256) && abort() {
                    self.cancel_until(0);
                    return SolveResult::Aborted;
                }
                until_restart -= 1;
                if until_restart == 0 {
                    restart_round += 1;
                    until_restart = 100 * luby(restart_round);
                    self.cancel_until(0);
                }
            } else {
                match self.pick_branch() {
                    None => {
                        let model = self.assigns.iter().map(|a| *a == 1).collect();
                        self.cancel_until(0);
                        return SolveResult::Sat(model);
                    }
                    Some(v) => {
                        self.trail_lim.push(self.trail.len());
                        self.enqueue(Lit::new(v, self.phase[v]), None);
                    }
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lit(x: i32) -> Lit {
        Lit::new(x.unsigned_abs() as usize - 1, x > 0)
    }

    fn solve(n: usize, clauses: &[&[i32]]) -> SolveResult {
        let mut s = Solver::new();
        for _ in 0..n {
            s.new_var();
        }
        for c in clauses {
            s.add_clause(&c.iter().map(|x| lit(*x)).collect::<Vec<_>>());
        }
        s.solve(u64::MAX, &|| false)
    }

    fn satisfies(model: &[bool], clauses: &[&[i32]]) -> bool {
        clauses.iter().all(|c| c.iter().any(|x| model[x.unsigned_abs() as usize - 1] == (*x > 0)))
    }

    #[test]
    fn luby_sequence() {
        let got: Vec<u64> = (0..15).map(luby).collect();
        assert_eq!(got, [1, 1, 2, 1, 1, 2, 4, 1, 1, 2, 1, 1, 2, 4, 8]);
    }

    #[test]
    fn small_instances() {
        let cs: &[&[i32]] = &[&[1, 2], &[-1, 3], &[-2, 3], &[-3, 4]];
        match solve(4, cs) {
            SolveResult::Sat(m) => assert!(satisfies(&m, cs)),
            other => panic!("{other:?}"),
        }
        assert_eq!(solve(2, &[&[1, 2], &[-1, 2], &[1, -2], &[-1, -2]]), SolveResult::Unsat);
        assert_eq!(solve(1, &[&[1], &[-1]]), SolveResult::Unsat);
    }

    #[test]
    fn pigeonhole_is_unsat() {
        // 5 pigeons, 4 holes
        let (p, h) = (5, 4);
        let var = |i: usize, j: usize| (i * h + j + 1) as i32;
        let mut cs: Vec<Vec<i32>> = (0..p).map(|i| (0..h).map(|j| var(i, j)).collect()).collect();
        for j in 0..h {
            for a in 0..p {
                for b in a + 1..p {
                    cs.push(vec![-var(a, j), -var(b, j)]);
                }
            }
        }
        let refs: Vec<&[i32]> = cs.iter().map(|c| c.as_slice()).collect();
        assert_eq!(solve(p * h, &refs), SolveResult::Unsat);
    }

    #[test]
    fn budget_is_reported() {
        let (p, h) = (8, 7);
        let mut s = Solver::new();
        for _ in 0..p * h {
            s.new_var();
        }
        let var = |i: usize, j: usize| Lit::new(i * h + j, true);
        for i in 0..p {
            s.add_clause(&(0..h).map(|j| var(i, j)).collect::<Vec<_>>());
        }
        for j in 0..h {
            for a in 0..p {
                for b in a + 1..p {
                    s.add_clause(&[!var(a, j), !var(b, j)]);
                }
            }
        }
        assert_eq!(s.solve(50, &|| false), SolveResult::Budget);
    }

    #[test]
    fn random_3sat_models_are_checked() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        for _ in 0..200 {
            let n = 12;
            let cs: Vec<Vec<i32>> = (0..50)
                .map(|_| {
                    (0..3)
                        .map(|_| {
                            let v = rng.random_range(1..=n) as i32;
                            if rng.random_bool(0.5) {
                                v
                            } else {
                                -v
                            }
                        })
                        .collect()
                })
                .collect();
            let refs: Vec<&[i32]> = cs.iter().map(|c| c.as_slice()).collect();
            let brute = (0..1u32 << n).any(|bits| {
                let m: Vec<bool> = (0..n).map(|i| bits >> i & 1 == 1).collect();
                satisfies(&m, &refs)
            });
            match solve(n, &refs) {
                SolveResult::Sat(m) => assert!(brute && satisfies(&m, &refs)),
                SolveResult::Unsat => assert!(!brute),
                other => panic!("{other:?}"),
            }
        }
    }
}
