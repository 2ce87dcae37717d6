//! Relational syllogistic: a quantifier-free logic of set terms and Boolean relational terms
//! with converse, read as "Q1 a are alpha-related to Q2 b" for Q1, Q2 in {some, every}.
//!
//! The crate provides
//! - [`syntax`]: terms, formulas, a parser and printer, and a controlled-English front end;
//! - [`semantics`]: finite models and the truth definition;
//! - [`proofs`]: an axiom-scheme matcher and a checker for Hilbert-style proofs, with a corpus
//!   of worked derivations;
//! - [`bml`]: the translation into Boolean modal logic with converse and a BML evaluator;
//! - [`solver`]: bounded satisfiability, validity and entailment, and point-selection model
//!   minimisation for the fragment without mixed quantifiers;
//! - [`copying`]: the finite copying construction that turns an overlapping relation family
//!   into a converse-compatible partition;
//! - [`fuzz`]: random generators and soundness campaigns.

pub mod bml;
pub mod copying;
pub mod exec;
pub mod fuzz;
pub mod proofs;
pub mod semantics;
pub mod solver;
pub mod syntax;

pub use exec::Exec;
