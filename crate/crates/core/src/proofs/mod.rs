//! Hilbert-style proofs: axiom schemes, tautologies, modus ponens and the special-variable rules.

mod axioms;
mod builder;
pub mod corpus;
mod rules;
mod taut;

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::exec::Exec;
use crate::syntax::{parse_formula, Formula};

pub use axioms::{instantiate, match_axiom, match_axiom_bindings, match_pattern, matching_axioms, AxiomName, Bindings};
pub use builder::ProofBuilder;
pub use rules::{check_rule, rule_violation, RuleName};
pub use taut::{atom_count, is_tautology, TooManyAtoms, DEFAULT_ATOM_CAP};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// A derivation from axioms alone; rule applications allowed, premises not.
    Theorem,
    /// A derivation from premises; the rules with special variables are not allowed.
    FromPremises,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Justification {
    Axiom(AxiomName),
    Taut,
    Premise,
    /// Modus ponens from lines `i` (antecedent) and `j` (implication).
    MP(usize, usize),
    /// Rule application to the given line with the given special variable.
    Rule(RuleName, usize, String),
}

impl fmt::Display for Justification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Justification::Axiom(n) => write!(f, "axiom {n}"),
            Justification::Taut => f.write_str("taut"),
            Justification::Premise => f.write_str("premise"),
            Justification::MP(i, j) => write!(f, "mp {i} {j}"),
            Justification::Rule(r, i, p) => write!(f, "{r} {i} {p}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofLine {
    pub index: usize,
    pub formula: Formula,
    pub justification: Justification,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Proof {
    pub mode: Mode,
    pub premises: Vec<Formula>,
    pub lines: Vec<ProofLine>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict")]
pub enum Verdict {
    Ok,
    Rejected { line: usize, reason: String },
}

impl Verdict {
    pub fn is_ok(&self) -> bool {
        matches!(self, Verdict::Ok)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct CheckOptions {
    pub atom_cap: usize,
    pub exec: Exec,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions { atom_cap: DEFAULT_ATOM_CAP, exec: Exec::default() }
    }
}

impl Proof {
    pub fn theorem(lines: Vec<ProofLine>) -> Self {
        Proof { mode: Mode::Theorem, premises: Vec::new(), lines }
    }

    /// The formula on the last line.
    pub fn conclusion(&self) -> Option<&Formula> {
        self.lines.last().map(|l| &l.formula)
    }

    fn line(&self, index: usize) -> Option<&ProofLine> {
        self.lines.binary_search_by_key(&index, |l| l.index).ok().map(|i| &self.lines[i])
    }
}

pub fn check_proof(proof: &Proof) -> Verdict {
    check_proof_with(proof, &CheckOptions::default())
}

/// Checks every line. Lines only refer to formulas already written down, so they are checked
/// independently; the earliest faulty line is reported.
pub fn check_proof_with(proof: &Proof, opts: &CheckOptions) -> Verdict {
    if proof.lines.is_empty() {
        return Verdict::Rejected { line: 0, reason: "empty proof".into() };
    }
    for w in proof.lines.windows(2) {
        if w[1].index <= w[0].index {
            return Verdict::Rejected { line: w[1].index, reason: "line indices must be strictly increasing".into() };
        }
    }
    let faults = opts.exec.map_slice(&proof.lines, |l| check_line(proof, l, opts.atom_cap));
    match proof.lines.iter().zip(faults).find_map(|(l, f)| f.map(|r| (l.index, r))) {
        Some((line, reason)) => Verdict::Rejected { line, reason },
        None => Verdict::Ok,
    }
}

fn cited(proof: &Proof, at: usize, i: usize) -> Result<&Formula, String> {
    if i >= at {
        return Err(format!("line {i} is not an earlier line"));
    }
    proof.line(i).map(|l| &l.formula).ok_or_else(|| format!("no line {i}"))
}

fn check_line(proof: &Proof, line: &ProofLine, cap: usize) -> Option<String> {
    let f = &line.formula;
    match &line.justification {
        Justification::Axiom(name) => (!match_axiom(*name, f)).then(|| format!("not an instance of {name}")),
        Justification::Taut => match is_tautology(f, cap) {
            Ok(true) => None,
            Ok(false) => Some("not a tautology".into()),
            Err(e) => Some(e.to_string()),
        },
        Justification::Premise => match proof.mode {
            Mode::Theorem => Some("premises are not allowed in a theorem".into()),
            Mode::FromPremises => (!proof.premises.contains(f)).then(|| "not one of the declared premises".into()),
        },
        Justification::MP(i, j) => {
            let (a, imp) = match (cited(proof, line.index, *i), cited(proof, line.index, *j)) {
                (Ok(a), Ok(imp)) => (a, imp),
                (Err(e), _) | (_, Err(e)) => return Some(e),
            };
            match imp {
                Formula::Implies(l, r) if **l == *a && **r == *f => None,
                _ => Some(format!("line {j} is not `{a} -> {f}`")),
            }
        }
        Justification::Rule(rule, i, special) => {
            if proof.mode == Mode::FromPremises {
                return Some(format!("{rule} is not allowed when deriving from premises"));
            }
            match cited(proof, line.index, *i) {
                Ok(premise) => rule_violation(*rule, premise, f, special),
                Err(e) => Some(e),
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ProofFileError {
    pub line: usize,
    pub message: String,
}

fn parse_justification(text: &str) -> Result<Justification, String> {
    let words: Vec<&str> = text.split_whitespace().collect();
    let num = |w: &str| w.parse::<usize>().map_err(|_| format!("expected a line number, found `{w}`"));
    match words.as_slice() {
        [kw, name] if kw.eq_ignore_ascii_case("axiom") => Ok(Justification::Axiom(name.parse()?)),
        [kw] if kw.eq_ignore_ascii_case("taut") => Ok(Justification::Taut),
        [kw] if kw.eq_ignore_ascii_case("premise") => Ok(Justification::Premise),
        [kw, i, j] if kw.eq_ignore_ascii_case("mp") => Ok(Justification::MP(num(i)?, num(j)?)),
        [rule, i, p] => Ok(Justification::Rule(rule.parse()?, num(i)?, p.to_string())),
        _ => Err(format!("unrecognised justification `{text}`")),
    }
}

/// Parses the line-oriented proof format.
///
/// ```text
/// mode: theorem            # or: premises
/// premise: FORMULA         # repeatable, premises mode only
/// 1: FORMULA ; axiom AL1
/// 2: FORMULA ; mp 1 2
/// ```
pub fn parse_proof(text: &str) -> Result<Proof, ProofFileError> {
    let mut mode = Mode::Theorem;
    let mut premises = Vec::new();
    let mut lines = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let err = |message: String| ProofFileError { line: n + 1, message };
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let Some((head, rest)) = content.split_once(':') else {
            return Err(err("expected `INDEX: FORMULA ; JUSTIFICATION`".into()));
        };
        match head.trim() {
            "mode" => {
                mode = match rest.trim() {
                    "theorem" => Mode::Theorem,
                    "premises" => Mode::FromPremises,
                    other => return Err(err(format!("unknown mode `{other}`"))),
                }
            }
            "premise" => premises.push(parse_formula(rest).map_err(|e| err(e.to_string()))?),
            idx => {
                let index = idx.parse::<usize>().map_err(|_| err(format!("bad line index `{idx}`")))?;
                let Some((formula, just)) = rest.rsplit_once(';') else {
                    return Err(err("missing `; JUSTIFICATION`".into()));
                };
                let formula = parse_formula(formula).map_err(|e| err(e.to_string()))?;
                let justification = parse_justification(just.trim()).map_err(err)?;
                lines.push(ProofLine { index, formula, justification });
            }
        }
    }
    Ok(Proof { mode, premises, lines })
}

/// Renders a proof in the format read by [`parse_proof`].
pub fn print_proof(proof: &Proof) -> String {
    let mut out = String::new();
    out.push_str(match proof.mode {
        Mode::Theorem => "mode: theorem\n",
        Mode::FromPremises => "mode: premises\n",
    });
    for p in &proof.premises {
        out.push_str(&format!("premise: {p}\n"));
    }
    for l in &proof.lines {
        out.push_str(&format!("{}: {} ; {}\n", l.index, l.formula, l.justification));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const SMALL: &str = "\
mode: theorem
# a derived instance of the equality axiom
1: EE(a,b)[r] & a = a -> EE(a,b)[r] ; axiom AEQ1
2: a <= a ; axiom BA_REFL
3: (EE(a,b)[r] & a = a -> EE(a,b)[r]) -> a <= a -> EE(a,b)[r] -> EE(a,b)[r] ; taut
4: a <= a -> EE(a,b)[r] -> EE(a,b)[r] ; mp 1 3
5: EE(a,b)[r] -> EE(a,b)[r] ; mp 2 4
";

    #[test]
    fn small_proof_checks_and_round_trips() {
        let p = parse_proof(SMALL).unwrap();
        assert_eq!(check_proof(&p), Verdict::Ok);
        assert_eq!(parse_proof(&print_proof(&p)).unwrap(), p);
    }

    #[test]
    fn faults_are_located() {
        let bad = SMALL.replace("mp 2 4", "mp 4 2");
        assert!(matches!(check_proof(&parse_proof(&bad).unwrap()), Verdict::Rejected { line: 5, .. }));
        let bad = SMALL.replace("axiom BA_REFL", "axiom BA_TOP");
        assert!(matches!(check_proof(&parse_proof(&bad).unwrap()), Verdict::Rejected { line: 2, .. }));
        let bad = SMALL.replace("mp 1 3", "mp 1 7");
        assert!(matches!(check_proof(&parse_proof(&bad).unwrap()), Verdict::Rejected { line: 4, .. }));
        let bad = SMALL.replace("axiom BA_REFL", "premise");
        assert!(matches!(check_proof(&parse_proof(&bad).unwrap()), Verdict::Rejected { line: 2, .. }));
    }

    #[test]
    fn premises_mode() {
        let text = "mode: premises\npremise: a <= b\n1: a <= b ; premise\n\
                    2: a <= b -> a <= b | c <= d ; taut\n3: a <= b | c <= d ; mp 1 2\n";
        assert!(check_proof(&parse_proof(text).unwrap()).is_ok());
        let text = "mode: premises\npremise: a <= b -> a*p = 0 | EE(p,b)[r]\n\
                    1: a <= b -> a*p = 0 | EE(p,b)[r] ; premise\n2: a <= b -> AE(a,b)[r] ; R1 1 p\n";
        assert!(matches!(check_proof(&parse_proof(text).unwrap()), Verdict::Rejected { line: 2, .. }));
    }

    #[test]
    fn file_errors() {
        let e = parse_proof("mode: theorem\n1: a <= ; taut\n").unwrap_err();
        assert_eq!(e.line, 2);
        assert_eq!(parse_proof("1: a <= a ; frobnicate\n").unwrap_err().line, 1);
        assert_eq!(parse_proof("mode: lemma\n").unwrap_err().line, 1);
    }

    #[test]
    fn taut_cap_is_an_option() {
        let p = parse_proof("1: EE(a,b)[r] | !EE(a,b)[r] ; taut\n").unwrap();
        let opts = CheckOptions { atom_cap: 0, exec: Exec::Sequential };
        assert!(!check_proof_with(&p, &opts).is_ok());
    }
}
