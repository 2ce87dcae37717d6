//! Lexer and recursive-descent parser for the formula grammar.
//!
//! ```text
//! formula := iff ; iff := imp ("<->" imp)* ; imp := or ("->" imp)? ;
//! or := and ("|" and)* ; and := unary ("&" unary)* ;
//! unary := "!" unary | "true" | "false" | "(" formula ")" | atom ;
//! atom := set ("<=" | "=" | "!=") set | ("EE"|"AE"|"AA"|"EA") "(" set "," set ")" "[" rel "]" ;
//! set := smeet ("+" smeet)* ; smeet := sun ("*" sun)* ; sun := "-" sun | ident | "0" | "1" | "(" set ")" ;
//! rel := rmeet ("+" rmeet)* ; rmeet := run ("*" run)* ; run := "-" run | rpost ;
//! rpost := ratom ("^")* ; ratom := ident | "0" | "1" | "(" rel ")" ;
//! ```

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use super::ast::{Formula, QuantPair, RelTerm, SetTerm};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Zero,
    One,
    True,
    False,
    Quant(QuantPair),
    LParen,
    RParen,
    LBrack,
    RBrack,
    Comma,
    Minus,
    Star,
    Plus,
    Caret,
    Bang,
    Amp,
    Pipe,
    Arrow,
    DArrow,
    Leq,
    Eq,
    Neq,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Tok::Ident(name) => return write!(f, "identifier `{name}`"),
            Tok::Quant(q) => return write!(f, "`{q}`"),
            Tok::Zero => "`0`",
            Tok::One => "`1`",
            Tok::True => "`true`",
            Tok::False => "`false`",
            Tok::LParen => "`(`",
            Tok::RParen => "`)`",
            Tok::LBrack => "`[`",
            Tok::RBrack => "`]`",
            Tok::Comma => "`,`",
            Tok::Minus => "`-`",
            Tok::Star => "`*`",
            Tok::Plus => "`+`",
            Tok::Caret => "`^`",
            Tok::Bang => "`!`",
            Tok::Amp => "`&`",
            Tok::Pipe => "`|`",
            Tok::Arrow => "`->`",
            Tok::DArrow => "`<->`",
            Tok::Leq => "`<=`",
            Tok::Eq => "`=`",
            Tok::Neq => "`!=`",
            Tok::Eof => "end of input",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

/// A syntax error with a 1-based position and the set of tokens that would have been accepted.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at line {line}, column {col}: expected {}, found {found}", fmt_expected(.expected))]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub expected: BTreeSet<String>,
    pub found: String,
    /// Token index, used to keep the furthest failure when backtracking.
    offset: usize,
}

fn fmt_expected(expected: &BTreeSet<String>) -> String {
    let items: Vec<&str> = expected.iter().map(String::as_str).collect();
    match items.len() {
        0 => "nothing".to_string(),
        1 => items[0].to_string(),
        _ => format!("one of {}", items.join(", ")),
    }
}

fn lex(text: &str) -> Result<Vec<Spanned>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0usize, 1usize, 1usize);
    while i < chars.len() {
        let c = chars[i];
        if c == '\n' {
            i += 1;
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        if c == '#' {
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
            }
            continue;
        }
        let start_col = col;
        let rest = &chars[i..];
        let starts = |s: &str| rest.starts_with(&s.chars().collect::<Vec<char>>());
        let (tok, len) = if starts("<->") {
            (Tok::DArrow, 3)
        } else if starts("->") {
            (Tok::Arrow, 2)
        } else if starts("<=") {
            (Tok::Leq, 2)
        } else if starts("!=") {
            (Tok::Neq, 2)
        } else if c.is_ascii_lowercase() {
            let mut j = i + 1;
            while j < chars.len() && (chars[j].is_ascii_alphanumeric() || chars[j] == '_') {
                j += 1;
            }
            let word: String = chars[i..j].iter().collect();
            let tok = match word.as_str() {
                "true" => Tok::True,
                "false" => Tok::False,
                _ => Tok::Ident(word),
            };
            (tok, j - i)
        } else if c.is_ascii_uppercase() {
            let mut j = i + 1;
            while j < chars.len() && (chars[j].is_ascii_alphanumeric() || chars[j] == '_') {
                j += 1;
            }
            let word: String = chars[i..j].iter().collect();
            let q = match word.as_str() {
                "EE" => QuantPair::EE,
                "AE" => QuantPair::AE,
                "AA" => QuantPair::AA,
                "EA" => QuantPair::EA,
                _ => return Err(lex_error(line, start_col, format!("word `{word}`"))),
            };
            (Tok::Quant(q), j - i)
        } else {
            let tok = match c {
                '0' => Tok::Zero,
                '1' => Tok::One,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                '[' => Tok::LBrack,
                ']' => Tok::RBrack,
                ',' => Tok::Comma,
                '-' => Tok::Minus,
                '*' => Tok::Star,
                '+' => Tok::Plus,
                '^' => Tok::Caret,
                '!' => Tok::Bang,
                '&' => Tok::Amp,
                '|' => Tok::Pipe,
                '=' => Tok::Eq,
                _ => return Err(lex_error(line, start_col, format!("character `{c}`"))),
            };
            (tok, 1)
        };
        out.push(Spanned { tok, line, col: start_col });
        i += len;
        col += len;
    }
    out.push(Spanned { tok: Tok::Eof, line, col });
    Ok(out)
}

fn lex_error(line: usize, col: usize, found: String) -> ParseError {
    ParseError { line, col, expected: ["a token".to_string()].into_iter().collect(), found, offset: 0 }
}

type PResult<T> = Result<T, ParseError>;

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == t {
            self.bump();
            true
        } else {
            false
        }
    }

    fn error(&self, expected: &[&str]) -> ParseError {
        let s = &self.toks[self.pos];
        ParseError {
            line: s.line,
            col: s.col,
            expected: expected.iter().map(|e| e.to_string()).collect(),
            found: s.tok.to_string(),
            offset: self.pos,
        }
    }

    fn expect(&mut self, t: Tok, name: &str) -> PResult<()> {
        if self.eat(&t) {
            Ok(())
        } else {
            Err(self.error(&[name]))
        }
    }

    fn formula(&mut self) -> PResult<Formula> {
        let mut lhs = self.imp()?;
        while self.eat(&Tok::DArrow) {
            let rhs = self.imp()?;
            lhs = lhs.iff(rhs);
        }
        Ok(lhs)
    }

    fn imp(&mut self) -> PResult<Formula> {
        let lhs = self.or()?;
        if self.eat(&Tok::Arrow) {
            let rhs = self.imp()?;
            return Ok(lhs.implies(rhs));
        }
        Ok(lhs)
    }

    fn or(&mut self) -> PResult<Formula> {
        let mut lhs = self.and()?;
        while self.eat(&Tok::Pipe) {
            let rhs = self.and()?;
            lhs = lhs.or(rhs);
        }
        Ok(lhs)
    }

    fn and(&mut self) -> PResult<Formula> {
        let mut lhs = self.unary()?;
        while self.eat(&Tok::Amp) {
            let rhs = self.unary()?;
            lhs = lhs.and(rhs);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> PResult<Formula> {
        match self.peek().clone() {
            Tok::Bang => {
                self.bump();
                Ok(self.unary()?.not())
            }
            Tok::True => {
                self.bump();
                Ok(Formula::Top)
            }
            Tok::False => {
                self.bump();
                Ok(Formula::Bottom)
            }
            Tok::Quant(q) => {
                self.bump();
                self.expect(Tok::LParen, "`(`")?;
                let a = self.set()?;
                self.expect(Tok::Comma, "`,`")?;
                let b = self.set()?;
                self.expect(Tok::RParen, "`)`")?;
                self.expect(Tok::LBrack, "`[`")?;
                let rel = self.rel()?;
                self.expect(Tok::RBrack, "`]`")?;
                Ok(Formula::Atom(q, a, b, rel))
            }
            Tok::LParen => {
                // `(` opens either a parenthesized formula or a set term on the left of a comparison.
                let save = self.pos;
                let as_comparison = self.comparison();
                if as_comparison.is_ok() {
                    return as_comparison;
                }
                self.pos = save;
                let as_group = (|| {
                    self.bump();
                    let f = self.formula()?;
                    self.expect(Tok::RParen, "`)`")?;
                    Ok(f)
                })();
                match (as_comparison, as_group) {
                    (_, Ok(f)) => Ok(f),
                    (Err(e1), Err(e2)) => Err(furthest(e1, e2)),
                    (Ok(_), Err(_)) => unreachable!(),
                }
            }
            _ => {
                let start = self.pos;
                self.comparison().map_err(|mut e| {
                    if e.offset == start {
                        for extra in ["`!`", "`true`", "`false`", "quantifier"] {
                            e.expected.insert(extra.to_string());
                        }
                    }
                    e
                })
            }
        }
    }

    fn comparison(&mut self) -> PResult<Formula> {
        let a = self.set()?;
        let op = self.peek().clone();
        match op {
            Tok::Leq | Tok::Eq | Tok::Neq => {
                self.bump();
            }
            _ => return Err(self.error(&["`<=`", "`=`", "`!=`", "`*`", "`+`"])),
        }
        let b = self.set()?;
        Ok(match op {
            Tok::Leq => Formula::Leq(a, b),
            Tok::Eq => Formula::eq(a, b),
            _ => Formula::eq(a, b).not(),
        })
    }

    fn set(&mut self) -> PResult<SetTerm> {
        let mut lhs = self.smeet()?;
        while self.eat(&Tok::Plus) {
            let rhs = self.smeet()?;
            lhs = lhs.join(rhs);
        }
        Ok(lhs)
    }

    fn smeet(&mut self) -> PResult<SetTerm> {
        let mut lhs = self.sun()?;
        while self.eat(&Tok::Star) {
            let rhs = self.sun()?;
            lhs = lhs.meet(rhs);
        }
        Ok(lhs)
    }

    fn sun(&mut self) -> PResult<SetTerm> {
        match self.peek().clone() {
            Tok::Minus => {
                self.bump();
                Ok(self.sun()?.complement())
            }
            Tok::Ident(name) => {
                self.bump();
                Ok(SetTerm::Var(name))
            }
            Tok::Zero => {
                self.bump();
                Ok(SetTerm::Zero)
            }
            Tok::One => {
                self.bump();
                Ok(SetTerm::One)
            }
            Tok::LParen => {
                self.bump();
                let t = self.set()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(t)
            }
            _ => Err(self.error(&["set term"])),
        }
    }

    fn rel(&mut self) -> PResult<RelTerm> {
        let mut lhs = self.rmeet()?;
        while self.eat(&Tok::Plus) {
            let rhs = self.rmeet()?;
            lhs = lhs.join(rhs);
        }
        Ok(lhs)
    }

    fn rmeet(&mut self) -> PResult<RelTerm> {
        let mut lhs = self.run()?;
        while self.eat(&Tok::Star) {
            let rhs = self.run()?;
            lhs = lhs.meet(rhs);
        }
        Ok(lhs)
    }

    fn run(&mut self) -> PResult<RelTerm> {
        if self.eat(&Tok::Minus) {
            return Ok(self.run()?.complement());
        }
        let mut t = self.ratom()?;
        while self.eat(&Tok::Caret) {
            t = t.converse();
        }
        Ok(t)
    }

    fn ratom(&mut self) -> PResult<RelTerm> {
        match self.peek().clone() {
            Tok::Ident(name) => {
                self.bump();
                Ok(RelTerm::Var(name))
            }
            Tok::Zero => {
                self.bump();
                Ok(RelTerm::Zero)
            }
            Tok::One => {
                self.bump();
                Ok(RelTerm::One)
            }
            Tok::LParen => {
                self.bump();
                let t = self.rel()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(t)
            }
            _ => Err(self.error(&["relational term"])),
        }
    }

    fn finish(&mut self) -> PResult<()> {
        if *self.peek() == Tok::Eof {
            Ok(())
        } else {
            Err(self.error(&["`&`", "`|`", "`->`", "`<->`", "end of input"]))
        }
    }
}

fn furthest(a: ParseError, b: ParseError) -> ParseError {
    match a.offset.cmp(&b.offset) {
        std::cmp::Ordering::Greater => a,
        std::cmp::Ordering::Less => b,
        std::cmp::Ordering::Equal => {
            let mut merged = a;
            merged.expected.extend(b.expected);
            merged
        }
    }
}

fn parse_with<T>(text: &str, body: impl FnOnce(&mut Parser) -> PResult<T>) -> PResult<T> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0 };
    let out = body(&mut p)?;
    p.finish()?;
    Ok(out)
}

/// Parses a formula. `a = b` is expanded to `a <= b & b <= a` and `a != b` to its negation.
pub fn parse_formula(text: &str) -> Result<Formula, ParseError> {
    parse_with(text, Parser::formula)
}

pub fn parse_set_term(text: &str) -> Result<SetTerm, ParseError> {
    parse_with(text, Parser::set)
}

pub fn parse_rel_term(text: &str) -> Result<RelTerm, ParseError> {
    parse_with(text, Parser::rel)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a() -> SetTerm {
        SetTerm::var("a")
    }

    fn b() -> SetTerm {
        SetTerm::var("b")
    }

    #[test]
    fn atom_constructor() {
        let f = parse_formula("EE(a,b)[r]").unwrap();
        assert_eq!(f, Formula::Atom(QuantPair::EE, a(), b(), RelTerm::var("r")));
    }

    #[test]
    fn worked_example_shape() {
        let f = parse_formula("EA(a,b)[r] -> AE(b,a)[r^]").unwrap();
        let expected = Formula::Atom(QuantPair::EA, a(), b(), RelTerm::var("r")).implies(Formula::Atom(
            QuantPair::AE,
            b(),
            a(),
            RelTerm::var("r").converse(),
        ));
        assert_eq!(f, expected);
    }

    #[test]
    fn equality_is_sugar() {
        assert_eq!(parse_formula("a = b").unwrap(), Formula::leq(a(), b()).and(Formula::leq(b(), a())));
        assert_eq!(parse_formula("a != b").unwrap(), Formula::eq(a(), b()).not());
    }

    #[test]
    fn malformed_atom_reports_position() {
        let err = parse_formula("EE(a,)[r]").unwrap_err();
        assert_eq!((err.line, err.col), (1, 6));
        assert!(err.expected.contains("set term"), "{err}");
        assert_eq!(err.found, "`)`");
    }

    #[test]
    fn precedence() {
        let f = parse_formula("!a <= b & c <= d | EE(a,b)[r] -> true -> false <-> false").unwrap();
        let leq_ab = Formula::leq(a(), b());
        let cd = Formula::leq(SetTerm::var("c"), SetTerm::var("d"));
        let ee = Formula::Atom(QuantPair::EE, a(), b(), RelTerm::var("r"));
        let lhs = leq_ab.not().and(cd).or(ee).implies(Formula::Top.implies(Formula::Bottom));
        assert_eq!(f, lhs.iff(Formula::Bottom));
    }

    #[test]
    fn term_precedence() {
        let t = parse_set_term("-a*b+c").unwrap();
        assert_eq!(t, a().complement().meet(b()).join(SetTerm::var("c")));
        let r = parse_rel_term("-r^*s+t").unwrap();
        let expected = RelTerm::var("r").converse().complement().meet(RelTerm::var("s")).join(RelTerm::var("t"));
        assert_eq!(r, expected);
        assert_eq!(parse_rel_term("r^^").unwrap(), RelTerm::var("r").converse().converse());
    }

    #[test]
    fn parenthesized_set_versus_formula() {
        assert_eq!(parse_formula("(a) <= b").unwrap(), Formula::leq(a(), b()));
        assert_eq!(parse_formula("(a <= b)").unwrap(), Formula::leq(a(), b()));
        let f = parse_formula("(a + b) * c = 0 & (EE(a,b)[1])").unwrap();
        let ab = a().join(b()).meet(SetTerm::var("c"));
        assert_eq!(f, Formula::is_zero(ab).and(Formula::Atom(QuantPair::EE, a(), b(), RelTerm::One)));
    }

    #[test]
    fn comments_and_lines() {
        let f = parse_formula("# leading comment\n  a <= b # trailing\n").unwrap();
        assert_eq!(f, Formula::leq(a(), b()));
        let err = parse_formula("a <= b\n  & ").unwrap_err();
        assert_eq!(err.line, 2);
    }

    #[test]
    fn rejects_unknown_words_and_trailing_tokens() {
        assert!(parse_formula("XX(a,b)[r]").is_err());
        assert!(parse_formula("a <= b b").is_err());
        assert!(parse_formula("a <= 2").is_err());
        assert!(parse_formula("").is_err());
    }
}
