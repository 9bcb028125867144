//! Text forms: a small expression grammar and printers that it reads back.

mod parse;
mod print;

pub use parse::{parse_operator, parse_poly, parse_ratfunc, parse_ratfunc_q};
