//! Ordinary Hopf algebras on presentations, bicharacter functionals, cocycles and twists.

mod data;
mod dqs;
mod functional;

pub use data::{solve_antipode, HopfData};
pub use dqs::{
    antipode_square_inner_check, complete_table, dual_twist_hopf, finite_basis, Cocycle, Dqs, InnerSquare,
    QuasiTriangular, TwistedAlgebraModel,
};
pub use functional::{
    check_convolution_inverse, word_pairs, AntipodeTwisted, Bichar, Convolution, CounitPair, Functional, Laws,
};
