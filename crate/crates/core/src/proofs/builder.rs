use crate::syntax::{Formula, SetTerm};

use super::{
    is_tautology, match_axiom, rule_violation, AxiomName, Justification, Proof, ProofLine, RuleName, DEFAULT_ATOM_CAP,
};

/// Incremental construction of theorem proofs.
///
/// Every step is checked as it is added, so a builder that runs to completion yields a proof
/// the checker accepts. The step methods panic on an ill-formed step.
#[derive(Debug, Default)]
pub struct ProofBuilder {
    lines: Vec<ProofLine>,
    fresh: usize,
}

impl ProofBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// A set variable not yet handed out by this builder (`p1`, `p2`, ...).
    pub fn fresh(&mut self) -> SetTerm {
        self.fresh += 1;
        SetTerm::var(format!("p{}", self.fresh))
    }

    pub fn formula(&self, line: usize) -> &Formula {
        &self.lines[line - 1].formula
    }

    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    fn push(&mut self, formula: Formula, justification: Justification) -> usize {
        let index = self.lines.len() + 1;
        self.lines.push(ProofLine { index, formula, justification });
        index
    }

    pub fn axiom(&mut self, name: AxiomName, f: Formula) -> usize {
        assert!(match_axiom(name, &f), "`{f}` is not an instance of {name}");
        self.push(f, Justification::Axiom(name))
    }

    pub fn taut(&mut self, f: Formula) -> usize {
        assert!(is_tautology(&f, DEFAULT_ATOM_CAP) == Ok(true), "`{f}` is not a checkable tautology");
        self.push(f, Justification::Taut)
    }

    /// Detaches the consequent of line `imp` using line `ante`.
    pub fn mp(&mut self, ante: usize, imp: usize) -> usize {
        let f = match self.formula(imp) {
            Formula::Implies(l, r) if **l == *self.formula(ante) => (**r).clone(),
            other => panic!("line {imp} `{other}` does not start with line {ante}"),
        };
        self.push(f, Justification::MP(ante, imp))
    }

    pub fn rule(&mut self, rule: RuleName, premise: usize, special: &SetTerm, conclusion: Formula) -> usize {
        let SetTerm::Var(p) = special else { panic!("special term must be a variable") };
        if let Some(why) = rule_violation(rule, self.formula(premise), &conclusion, p) {
            panic!("{rule} from line {premise} to `{conclusion}`: {why}");
        }
        self.push(conclusion, Justification::Rule(rule, premise, p.clone()))
    }

    /// Derives `goal` from the given lines in one propositional step: the tautology
    /// `f1 -> f2 -> ... -> goal` followed by modus ponens with each line in turn.
    pub fn chain(&mut self, from: &[usize], goal: Formula) -> usize {
        let curried = from.iter().rev().fold(goal, |acc, &i| self.formula(i).clone().implies(acc));
        let mut at = self.taut(curried);
        for &i in from {
            at = self.mp(i, at);
        }
        at
    }

    pub fn finish(self) -> Proof {
        Proof::theorem(self.lines)
    }
}
