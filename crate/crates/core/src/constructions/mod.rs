//! Constructions producing new braided and ordinary Hopf algebras from old ones.

mod assoc;
mod automorphism;
mod cross;
mod crossed;
mod transmute;
mod twist;

pub use assoc::{cross_associativity, smash_left};
pub use automorphism::{automorphism_braided_group, AutomorphismGroup};
pub use cross::{bosonise_comodule, bosonise_module, cross_product, CoRule, CrossData, CrossProduct, CrossRule};
pub use crossed::{biproduct, check_induced_image, induce_crossed_module, CrossedModule, ImageCheck, Inducing};
pub use transmute::{reconcile, transmute, Transmuted, TransmutedAlgebra};
pub use twist::{colour_sqrt_decompose, exponent_cocycle, twist_braided, twisted_bichar, ColourSplit};

use crate::braided::Ambient;
use crate::catalog::Bundle;
use crate::error::{Error, Result};

/// Bosonises a catalog braided group in whichever category it lives in.
pub fn bosonise(bundle: &Bundle) -> Result<CrossProduct> {
    let b = bundle.braided()?;
    match b.ambient() {
        Ambient::Comodule { coaction, r } => bosonise_comodule(b, coaction, r),
        Ambient::Module { action, rmat } => bosonise_module(b, action, rmat),
        _ => Err(Error::Missing(format!("{} is not a comodule or module braided group", bundle.name))),
    }
}
