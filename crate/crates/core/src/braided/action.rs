use super::coaction::{Coaction, Side};
use crate::freealg::{Gen, NCPoly, Presentation, Word};
use crate::hopf::{Dqs, HopfData};
use crate::scalar::Scalar;
use std::collections::HashMap;
use std::sync::{Arc, Mutex};

#[derive(Clone, Debug)]
pub enum ActionData {
    /// `(host generator, carrier generator) → image`, extended as a module algebra.
    /// Absent pairs act by the counit.
    Table(HashMap<(Gen, Gen), NCPoly>),
    /// From a coaction and `R`: right `v ◁ h = v⁰ R(v¹ ⊗ h)`, left `h ▷ v = R(v¹ ⊗ h) v²`.
    Induced {
        coaction: Arc<Coaction>,
        r: Arc<Dqs>,
    },
    /// Left `h ▷ g = h₍₁₎ g S h₍₂₎`, right `g ◁ h = (S h₍₁₎) g h₍₂₎`.
    Adjoint,
    /// Multiplication in the host.
    Regular,
    Trivial,
}

/// An action of `host` on the algebra `carrier`: `h ▷ v` on the left or `v ◁ h` on the right.
#[derive(Debug)]
pub struct Action {
    side: Side,
    host: Arc<HopfData>,
    carrier: Arc<Presentation>,
    data: ActionData,
    memo: Mutex<HashMap<(Word, Word), NCPoly>>,
}

impl Clone for Action {
    fn clone(&self) -> Self {
        Action::build(self.side, self.host.clone(), self.carrier.clone(), self.data.clone())
    }
}

impl Action {
    fn build(side: Side, host: Arc<HopfData>, carrier: Arc<Presentation>, data: ActionData) -> Self {
        Action { side, host, carrier, data, memo: Mutex::new(HashMap::new()) }
    }

    pub fn table(
        side: Side,
        host: Arc<HopfData>,
        carrier: Arc<Presentation>,
        table: HashMap<(Gen, Gen), NCPoly>,
    ) -> Self {
        let table = table.into_iter().map(|(k, p)| (k, carrier.normal_form(&p))).collect();
        Self::build(side, host, carrier, ActionData::Table(table))
    }

    /// The action induced by a coaction with the same side.
    pub fn induced(coaction: Arc<Coaction>, r: Arc<Dqs>) -> Self {
        let (side, host, carrier) = (coaction.side(), coaction.host_arc().clone(), coaction.carrier_arc().clone());
        Self::build(side, host, carrier, ActionData::Induced { coaction, r })
    }

    pub fn adjoint(side: Side, host: Arc<HopfData>) -> Self {
        let carrier = host.pres_arc().clone();
        Self::build(side, host, carrier, ActionData::Adjoint)
    }

    pub fn regular(side: Side, host: Arc<HopfData>) -> Self {
        let carrier = host.pres_arc().clone();
        Self::build(side, host, carrier, ActionData::Regular)
    }

    pub fn trivial(side: Side, host: Arc<HopfData>, carrier: Arc<Presentation>) -> Self {
        Self::build(side, host, carrier, ActionData::Trivial)
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

    pub fn data(&self) -> &ActionData {
        &self.data
    }

    /// `h ▷ v` (left) or `v ◁ h` (right) on words.
    pub fn act_words(&self, h: &Word, v: &Word) -> NCPoly {
        if h.is_one() {
            return self.carrier.nf_word(v);
        }
        let key = (h.clone(), v.clone());
        if let Some(p) = self.memo.lock().unwrap().get(&key) {
            return p.clone();
        }
        let p = self.compute(h, v);
        self.memo.lock().unwrap().insert(key, p.clone());
        p
    }

    fn compute(&self, h: &Word, v: &Word) -> NCPoly {
        let host = &*self.host;
        let car = &*self.carrier;
        match &self.data {
            ActionData::Trivial => self.carrier.nf_word(v).scale(&host.counit_word(h)),
            ActionData::Regular => match self.side {
                Side::Left => car.nf_word(&h.concat(v)),
                Side::Right => car.nf_word(&v.concat(h)),
            },
            ActionData::Adjoint => {
                let mut out = NCPoly::zero();
                let vp = NCPoly::word(v.clone());
                for (k, c) in host.coproduct_word(h).terms() {
                    let t = match self.side {
                        Side::Left => {
                            host.pres().mul_all(&[NCPoly::word(k[0].clone()), vp.clone(), host.antipode_word(&k[1])])
                        }
                        Side::Right => {
                            host.pres().mul_all(&[host.antipode_word(&k[0]), vp.clone(), NCPoly::word(k[1].clone())])
                        }
                    };
                    out.add_scaled(&t, c);
                }
                out
            }
            ActionData::Induced { coaction, r } => {
                let hp = NCPoly::word(h.clone());
                let mut out = NCPoly::zero();
                for (v0, v1, c) in coaction.legs(v) {
                    let s = r.eval(&NCPoly::word(v1), &hp);
                    if !s.is_zero() {
                        out.add_term(v0, &c * &s);
                    }
                }
                car.normal_form(&out)
            }
            ActionData::Table(t) => {
                if v.is_one() {
                    return NCPoly::scalar(host.counit_word(h));
                }
                if h.len() > 1 {
                    // left: (g·rest)▷v = g▷(rest▷v); right: v◁(rest·g) = (v◁rest)◁g
                    let (first, second) = match self.side {
                        Side::Left => (h.slice(1, h.len()), h.slice(0, 1)),
                        Side::Right => (h.slice(0, h.len() - 1), h.slice(h.len() - 1, h.len())),
                    };
                    let inner = self.act_words(&first, v);
                    return inner.map_linear(|w| self.act_words(&second, w));
                }
                if v.len() > 1 {
                    let (v0, rest) = (v.slice(0, 1), v.slice(1, v.len()));
                    let mut out = NCPoly::zero();
                    for (k, c) in host.coproduct_word(h).terms() {
                        let a = self.act_words(&k[0], &v0);
                        if a.is_zero() {
                            continue;
                        }
                        let b = self.act_words(&k[1], &rest);
                        out.add_scaled(&car.mul(&a, &b), c);
                    }
                    return out;
                }
                match t.get(&(h[0], v[0])) {
                    Some(p) => p.clone(),
                    None => NCPoly::word(v.clone()).scale(host.gen_counit(h[0])),
                }
            }
        }
    }

    pub fn act(&self, h: &NCPoly, v: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (hw, a) in h.terms() {
            for (vw, b) in v.terms() {
                out.add_scaled(&self.act_words(hw, vw), &(a * b));
            }
        }
        out
    }

    /// Applies the action leg by leg: each term `(h, v, c)` contributes `c · act(h, v)`.
    pub fn act_sum(&self, terms: impl IntoIterator<Item = (Word, Word, Scalar)>) -> NCPoly {
        let mut out = NCPoly::zero();
        for (h, v, c) in terms {
            out.add_scaled(&self.act_words(&h, &v), &c);
        }
        out
    }
}
