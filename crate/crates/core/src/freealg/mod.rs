//! Free algebras, rewriting to normal form, and overlap checking.

mod ncpoly;
mod presentation;
mod word;

pub use ncpoly::NCPoly;
pub use presentation::{ConfluenceReport, Overlap, Presentation, Relation, Rule};
pub use word::{Gen, Word};
