//! Terms, formulas, their concrete syntax and a controlled-English front end.

mod ast;
pub mod english;
mod parser;
mod print;

pub use ast::{free_set_vars, substitute_set_var, Formula, Grouped, QuantPair, RelTerm, SetTerm, SetVars};
pub use english::{english_to_formula, EnglishError, Lexicon, Reading};
pub use parser::{parse_formula, parse_rel_term, parse_set_term, ParseError};
pub use print::print_formula;
