use crate::error::{Error, Result};
use crate::freealg::{NCPoly, Presentation, Word};
use crate::hopf::HopfData;
use crate::scalar::Scalar;
use crate::tensor::TensorElem;
use std::collections::HashMap;
use std::sync::{Arc, Mutex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

#[derive(Clone, Debug)]
pub enum CoactionData {
    /// Generator images, extended multiplicatively.
    Table(Vec<TensorElem>),
    /// `Δ` on the host itself.
    Regular,
    /// Right: `h ↦ h₍₂₎ ⊗ (S h₍₁₎) h₍₃₎`. Left: `h ↦ h₍₁₎ S h₍₃₎ ⊗ h₍₂₎`.
    Adjoint,
    Trivial,
}

/// A coaction of `host` on the algebra `carrier`.
///
/// A right coaction lands in `carrier ⊗ host`, a left one in `host ⊗ carrier`.
#[derive(Debug)]
pub struct Coaction {
    side: Side,
    host: Arc<HopfData>,
    carrier: Arc<Presentation>,
    data: CoactionData,
    memo: Mutex<HashMap<Word, TensorElem>>,
}

impl Clone for Coaction {
    fn clone(&self) -> Self {
        Coaction::build(self.side, self.host.clone(), self.carrier.clone(), self.data.clone())
    }
}

impl Coaction {
    fn build(side: Side, host: Arc<HopfData>, carrier: Arc<Presentation>, data: CoactionData) -> Self {
        Coaction { side, host, carrier, data, memo: Mutex::new(HashMap::new()) }
    }

    pub fn table(side: Side, host: Arc<HopfData>, carrier: Arc<Presentation>, table: Vec<TensorElem>) -> Result<Self> {
        if table.len() != carrier.ngens() {
            return Err(Error::Missing(format!("coaction needs {} generator entries", carrier.ngens())));
        }
        let table = {
            let slots = match side {
                Side::Right => [&*carrier, host.pres()],
                Side::Left => [host.pres(), &*carrier],
            };
            table.iter().map(|t| t.normalize(&slots)).collect()
        };
        Ok(Self::build(side, host, carrier, CoactionData::Table(table)))
    }

    pub fn regular(side: Side, host: Arc<HopfData>) -> Self {
        let carrier = host.pres_arc().clone();
        Self::build(side, host, carrier, CoactionData::Regular)
    }

    pub fn adjoint(side: Side, host: Arc<HopfData>) -> Self {
        let carrier = host.pres_arc().clone();
        Self::build(side, host, carrier, CoactionData::Adjoint)
    }

    pub fn trivial(side: Side, host: Arc<HopfData>, carrier: Arc<Presentation>) -> Self {
        Self::build(side, host, carrier, CoactionData::Trivial)
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn host(&self) -> &HopfData {
        &self.host
    }

    pub fn host_arc(&self) -> &Arc<HopfData> {
        &self.host
    }

    pub fn carrier(&self) -> &Presentation {
        &self.carrier
    }

    pub fn carrier_arc(&self) -> &Arc<Presentation> {
        &self.carrier
    }

    pub fn data(&self) -> &CoactionData {
        &self.data
    }

    /// Slot presentations of the image, in output order.
    pub fn slots(&self) -> [&Presentation; 2] {
        match self.side {
            Side::Right => [&self.carrier, self.host.pres()],
            Side::Left => [self.host.pres(), &self.carrier],
        }
    }

    fn carrier_slot(&self) -> usize {
        match self.side {
            Side::Right => 0,
            Side::Left => 1,
        }
    }

    pub fn coact_word(&self, w: &Word) -> TensorElem {
        if w.is_one() {
            return TensorElem::unit(2);
        }
        let h = &*self.host;
        match &self.data {
            CoactionData::Trivial => {
                let mut k = vec![Word::one(), Word::one()];
                k[self.carrier_slot()] = w.clone();
                TensorElem::pure(k, Scalar::one())
            }
            CoactionData::Regular => h.coproduct_word(w),
            CoactionData::Table(t) if w.len() == 1 => t[w[0] as usize].clone(),
            _ => {
                if let Some(t) = self.memo.lock().unwrap().get(w) {
                    return t.clone();
                }
                let t = self.compute(w);
                self.memo.lock().unwrap().insert(w.clone(), t.clone());
                t
            }
        }
    }

    fn compute(&self, w: &Word) -> TensorElem {
        let h = &*self.host;
        match &self.data {
            CoactionData::Table(t) => {
                let n = w.len();
                let head = self.coact_word(&w.slice(0, n - 1));
                head.mul(&t[w[n - 1] as usize], &self.slots())
            }
            CoactionData::Adjoint => {
                let d3 = h.coproduct_word_n(w, 3);
                let mut out = TensorElem::zero(2);
                for (k, c) in d3.terms() {
                    let (mid, outer) = match self.side {
                        Side::Right => (&k[1], h.mul(&h.antipode_word(&k[0]), &NCPoly::word(k[2].clone()))),
                        Side::Left => (&k[1], h.mul(&NCPoly::word(k[0].clone()), &h.antipode_word(&k[2]))),
                    };
                    let m = TensorElem::from_poly(&NCPoly::word(mid.clone()));
                    let o = TensorElem::from_poly(&outer);
                    let t = match self.side {
                        Side::Right => m.tensor(&o),
                        Side::Left => o.tensor(&m),
                    };
                    out.add_scaled(&t, c);
                }
                out
            }
            _ => unreachable!(),
        }
    }

    pub fn coact(&self, p: &NCPoly) -> TensorElem {
        let mut t = TensorElem::zero(2);
        for (w, c) in p.terms() {
            t.add_scaled(&self.coact_word(w), c);
        }
        t
    }

    /// Terms `(v⁰, v¹, c)` of the coaction with the carrier leg first, whatever the side.
    pub fn legs(&self, w: &Word) -> Vec<(Word, Word, Scalar)> {
        let cs = self.carrier_slot();
        self.coact_word(w).terms().map(|(k, c)| (k[cs].clone(), k[1 - cs].clone(), c.clone())).collect()
    }
}
