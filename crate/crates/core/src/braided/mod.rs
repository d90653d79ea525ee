//! Comodules and modules over a Hopf algebra, their braidings, and braided Hopf algebras.

mod action;
mod bhopf;
mod braiding;
mod coaction;

pub use action::{Action, ActionData};
pub use bhopf::{Ambient, BraidedHopf};
pub use braiding::{
    braided_mul, Algebra, Braiding, ComoduleBraiding, CrossedBraiding, ExplicitBraiding, Flip, ModuleBraiding,
};
pub use coaction::{Coaction, CoactionData, Side};
