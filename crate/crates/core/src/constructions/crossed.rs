use super::cross::{cross_product, CoRule, CrossData, CrossProduct, CrossRule};
use crate::braided::{Action, BraidedHopf, Coaction, Side};
use crate::error::{Error, Result};
use crate::freealg::{NCPoly, Word};
use crate::hopf::{finite_basis, Dqs, QuasiTriangular};
use crate::tensor::TensorElem;
use crate::text::print;
use std::sync::Arc;

/// An action and a coaction of the same host on one carrier, on the same side.
#[derive(Clone, Debug)]
pub struct CrossedModule {
    pub side: Side,
    pub coaction: Arc<Coaction>,
    pub action: Arc<Action>,
}

impl CrossedModule {
    pub fn new(coaction: Arc<Coaction>, action: Arc<Action>) -> Result<Self> {
        if coaction.side() != action.side() {
            return Err(Error::VerificationFailed("action and coaction on different sides".into()));
        }
        if coaction.carrier().names() != action.carrier().names() {
            return Err(Error::VerificationFailed("action and coaction on different carriers".into()));
        }
        Ok(CrossedModule { side: coaction.side(), coaction, action })
    }
}

/// The structure a crossed module is induced from.
#[derive(Clone)]
pub enum Inducing {
    /// A comodule and `R`: `h ▷ v = R(v⁽⁻¹⁾ ⊗ h) v⁽⁰⁾` or `v ◁ h = v⁽⁰⁾ R(v⁽¹⁾ ⊗ h)`.
    Comodule { coaction: Arc<Coaction>, r: Arc<Dqs> },
    /// A module and `ℛ`: `β(v) = ℛ⁽²⁾ ⊗ ℛ⁽¹⁾ ▷ v` or `β(v) = v ◁ ℛ⁽¹⁾ ⊗ ℛ⁽²⁾`.
    Module { action: Arc<Action>, rmat: Arc<QuasiTriangular> },
}

fn induced_coaction_value(action: &Action, rmat: &QuasiTriangular, v: &Word) -> TensorElem {
    let mut t = TensorElem::zero(2);
    for (k, c) in rmat.r.terms() {
        let moved = action.act_words(&k[0], v);
        let o = NCPoly::word(k[1].clone());
        let term = match action.side() {
            Side::Left => TensorElem::from_pair(&o, &moved),
            Side::Right => TensorElem::from_pair(&moved, &o),
        };
        t.add_scaled(&term, c);
    }
    t
}

pub fn induce_crossed_module(from: &Inducing) -> Result<CrossedModule> {
    match from {
        Inducing::Comodule { coaction, r } => {
            CrossedModule::new(coaction.clone(), Arc::new(Action::induced(coaction.clone(), r.clone())))
        }
        Inducing::Module { action, rmat } => {
            let car = action.carrier_arc().clone();
            let table = (0..car.ngens() as u16).map(|g| induced_coaction_value(action, rmat, &Word::gen(g))).collect();
            let coaction = Coaction::table(action.side(), action.host_arc().clone(), car, table)?;
            CrossedModule::new(Arc::new(coaction), action.clone())
        }
    }
}

/// Outcome of asking whether a crossed module lies in the image of an induced functor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImageCheck {
    pub holds: bool,
    pub witness: Option<String>,
}

const MAX_IMAGE_BASIS: usize = 4096;

/// Whether `x` is what `functor` induces from its own action (module case) or coaction (comodule case).
pub fn check_induced_image(x: &CrossedModule, functor: &Inducing) -> Result<ImageCheck> {
    let car = x.coaction.carrier();
    let host = x.coaction.host();
    let basis = finite_basis_of(car)?;
    let hbasis = match functor {
        Inducing::Comodule { .. } => finite_basis(host, None).map_err(|_| Error::InfiniteHost)?,
        Inducing::Module { .. } => Vec::new(),
    };
    if basis.len() * hbasis.len().max(1) > MAX_IMAGE_BASIS {
        return Err(Error::BasisTooLarge(basis.len() * hbasis.len().max(1)));
    }
    let slots = x.coaction.slots();
    for v in &basis {
        match functor {
            Inducing::Module { rmat, .. } => {
                let want = induced_coaction_value(&x.action, rmat, v).normalize(&slots);
                if x.coaction.coact_word(v) != want {
                    return Ok(ImageCheck { holds: false, witness: Some(print::word(v, car.names())) });
                }
            }
            Inducing::Comodule { r, .. } => {
                let induced = Action::induced(x.coaction.clone(), r.clone());
                for h in &hbasis {
                    if x.action.act_words(h, v) != induced.act_words(h, v) {
                        let w = format!("{} on {}", print::word(h, host.pres().names()), print::word(v, car.names()));
                        return Ok(ImageCheck { holds: false, witness: Some(w) });
                    }
                }
            }
        }
    }
    Ok(ImageCheck { holds: true, witness: None })
}

fn finite_basis_of(p: &crate::freealg::Presentation) -> Result<Vec<Word>> {
    let probe = 64;
    let words = p.normal_words(probe);
    if words.iter().any(|w| w.len() == probe) {
        return Err(Error::InfiniteHost);
    }
    Ok(words)
}

/// The cross product by the action and cross coproduct by the coaction of a crossed module.
pub fn biproduct(x: &CrossedModule, b: &BraidedHopf) -> Result<CrossProduct> {
    let (rule, co) = match x.side {
        Side::Right => (CrossRule::ActRight, CoRule::CoactRight),
        Side::Left => (CrossRule::ActLeft, CoRule::CoactLeft),
    };
    let data = CrossData { coaction: Some(x.coaction.clone()), action: Some(x.action.clone()), ..Default::default() };
    cross_product(x.coaction.host_arc(), b, rule, co, &data)
}
