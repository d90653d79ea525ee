//! Text syntax: expressions, presentation files and printing.

mod doc;
mod eval;
mod expr;
pub mod print;

pub use doc::{split_definition, split_pair, Document, Line, Section};
pub use eval::{parse_element, parse_scalar, Env};
pub use expr::{parse_expr, Expr};
