//! A tiny controlled-English front end.
//!
//! Accepted sentences: `(Every|Some|No) NOUN VERB (every|some) NOUN`, optionally ending in `.`.
//! Doubly quantified sentences with mixed quantifiers are ambiguous between the subject-wide
//! and object-wide scope readings; the object-wide reading is expressed through the converse.

use std::collections::BTreeMap;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::ast::{Formula, QuantPair, RelTerm, SetTerm};

/// Maps count nouns to set variables and transitive verbs to relational variables.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lexicon {
    pub nouns: BTreeMap<String, String>,
    pub verbs: BTreeMap<String, String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Reading {
    /// Subject wide scope.
    Sws,
    /// Object wide scope.
    Ows,
}

impl FromStr for Reading {
    type Err = EnglishError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "sws" => Ok(Reading::Sws),
            "ows" => Ok(Reading::Ows),
            _ => Err(EnglishError::UnknownReading(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnglishError {
    #[error("unknown noun `{0}`")]
    UnknownNoun(String),
    #[error("unknown verb `{0}`")]
    UnknownVerb(String),
    #[error("unsupported sentence shape: {0}")]
    Shape(String),
    #[error("unknown reading `{0}` (expected sws or ows)")]
    UnknownReading(String),
    #[error("lexicon maps both `{0}` and `{1}` to `{2}`")]
    NotInjective(String, String, String),
    #[error("invalid lexicon: {0}")]
    Invalid(String),
}

impl Lexicon {
    /// Parses a JSON lexicon and checks that each namespace is injective.
    pub fn from_json(text: &str) -> Result<Self, EnglishError> {
        let lex: Lexicon = serde_json::from_str(text).map_err(|e| EnglishError::Invalid(e.to_string()))?;
        lex.validate()?;
        Ok(lex)
    }

    pub fn validate(&self) -> Result<(), EnglishError> {
        for map in [&self.nouns, &self.verbs] {
            let mut seen: BTreeMap<&str, &str> = BTreeMap::new();
            for (word, var) in map {
                if let Some(prev) = seen.insert(var, word) {
                    return Err(EnglishError::NotInjective(prev.to_string(), word.clone(), var.clone()));
                }
            }
        }
        Ok(())
    }

    fn noun(&self, word: &str) -> Result<SetTerm, EnglishError> {
        self.nouns.get(word).map(SetTerm::var).ok_or_else(|| EnglishError::UnknownNoun(word.to_string()))
    }

    fn verb(&self, word: &str) -> Result<RelTerm, EnglishError> {
        self.verbs.get(word).map(RelTerm::var).ok_or_else(|| EnglishError::UnknownVerb(word.to_string()))
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Det {
    Every,
    Some,
    No,
}

fn determiner(word: &str, allow_no: bool) -> Option<Det> {
    match word.to_ascii_lowercase().as_str() {
        "every" => Some(Det::Every),
        "some" => Some(Det::Some),
        "no" if allow_no => Some(Det::No),
        _ => None,
    }
}

/// Translates a controlled-English sentence under the given scope reading.
///
/// `No a VERB Q b` is read as the negation of `Some a VERB Q b`.
pub fn english_to_formula(sentence: &str, reading: Reading, lex: &Lexicon) -> Result<Formula, EnglishError> {
    let trimmed = sentence.trim().trim_end_matches('.');
    let words: Vec<&str> = trimmed.split_whitespace().collect();
    let [subj_det, subj, verb, obj_det, obj] = words[..] else {
        return Err(EnglishError::Shape(format!(
            "expected five words `DET NOUN VERB DET NOUN`, found {}",
            words.len()
        )));
    };
    let subj_det =
        determiner(subj_det, true).ok_or_else(|| EnglishError::Shape(format!("unknown determiner `{subj_det}`")))?;
    let obj_det = determiner(obj_det, false)
        .ok_or_else(|| EnglishError::Shape(format!("object determiner must be every or some, found `{obj_det}`")))?;
    let a = lex.noun(subj)?;
    let verb = lex.verb(verb)?;
    let b = lex.noun(obj)?;

    let (negate, subj_det) = match subj_det {
        Det::No => (true, Det::Some),
        d => (false, d),
    };
    let atom = match (subj_det, obj_det, reading) {
        (Det::Some, Det::Some, _) => Formula::Atom(QuantPair::EE, a, b, verb),
        (Det::Every, Det::Every, _) => Formula::Atom(QuantPair::AA, a, b, verb),
        (Det::Every, Det::Some, Reading::Sws) => Formula::Atom(QuantPair::AE, a, b, verb),
        (Det::Some, Det::Every, Reading::Sws) => Formula::Atom(QuantPair::EA, a, b, verb),
        (Det::Some, Det::Every, Reading::Ows) => Formula::Atom(QuantPair::AE, b, a, verb.converse()),
        (Det::Every, Det::Some, Reading::Ows) => Formula::Atom(QuantPair::EA, b, a, verb.converse()),
        _ => unreachable!("determiners normalised above"),
    };
    Ok(if negate { atom.not() } else { atom })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lex() -> Lexicon {
        Lexicon::from_json(r#"{"nouns": {"man": "m", "animal": "n"}, "verbs": {"likes": "L"}}"#).unwrap()
    }

    fn check(sentence: &str, reading: Reading, expected: &str) {
        let f = english_to_formula(sentence, reading, &lex()).unwrap();
        assert_eq!(f.to_string(), expected, "{sentence}");
    }

    #[test]
    fn readings_table() {
        check("Some man likes some animal", Reading::Sws, "EE(m,n)[L]");
        check("Every man likes every animal", Reading::Sws, "AA(m,n)[L]");
        check("Every man likes some animal", Reading::Sws, "AE(m,n)[L]");
        check("Some man likes every animal", Reading::Sws, "EA(m,n)[L]");
        check("Some man likes every animal", Reading::Ows, "AE(n,m)[L^]");
        check("Every man likes some animal", Reading::Ows, "EA(n,m)[L^]");
        check("No man likes some animal.", Reading::Sws, "!EE(m,n)[L]");
    }

    #[test]
    fn ows_uses_converse() {
        let f = english_to_formula("Every man likes some animal", Reading::Ows, &lex()).unwrap();
        assert_eq!(f, Formula::Atom(QuantPair::EA, SetTerm::var("n"), SetTerm::var("m"), RelTerm::var("L").converse()));
    }

    #[test]
    fn unambiguous_sentences_agree_across_readings() {
        for s in ["Some man likes some animal", "Every man likes every animal"] {
            assert_eq!(
                english_to_formula(s, Reading::Sws, &lex()).unwrap(),
                english_to_formula(s, Reading::Ows, &lex()).unwrap()
            );
        }
    }

    #[test]
    fn errors() {
        assert_eq!(
            english_to_formula("Some woman likes some animal", Reading::Sws, &lex()),
            Err(EnglishError::UnknownNoun("woman".into()))
        );
        assert_eq!(
            english_to_formula("Some man hates some animal", Reading::Sws, &lex()),
            Err(EnglishError::UnknownVerb("hates".into()))
        );
        assert!(matches!(
            english_to_formula("Some man likes no animal", Reading::Sws, &lex()),
            Err(EnglishError::Shape(_))
        ));
        assert!(matches!(english_to_formula("man likes animal", Reading::Sws, &lex()), Err(EnglishError::Shape(_))));
        let dup = r#"{"nouns": {"man": "m", "person": "m"}, "verbs": {}}"#;
        assert!(matches!(Lexicon::from_json(dup), Err(EnglishError::NotInjective(..))));
    }
}
