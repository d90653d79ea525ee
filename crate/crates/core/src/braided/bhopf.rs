use super::action::Action;
use super::braiding::{braided_mul, Braiding, ComoduleBraiding, CrossedBraiding, Flip, ModuleBraiding};
use super::coaction::{Coaction, Side};
use crate::error::Result;
use crate::freealg::{Gen, NCPoly, Presentation, Word};
use crate::hopf::{Dqs, QuasiTriangular};
use crate::scalar::Scalar;
use crate::tensor::TensorElem;
use std::collections::HashMap;
use std::sync::{Arc, Mutex};

/// The braided category a braided Hopf algebra lives in.
#[derive(Clone)]
pub enum Ambient {
    /// Plain vector spaces with the flip.
    Vec,
    Comodule {
        coaction: Arc<Coaction>,
        r: Arc<Dqs>,
    },
    Module {
        action: Arc<Action>,
        rmat: Arc<QuasiTriangular>,
    },
    Crossed {
        coaction: Arc<Coaction>,
        action: Arc<Action>,
    },
}

impl Ambient {
    pub fn side(&self) -> Option<Side> {
        match self {
            Ambient::Vec => None,
            Ambient::Comodule { coaction, .. } => Some(coaction.side()),
            Ambient::Module { action, .. } => Some(action.side()),
            Ambient::Crossed { coaction, .. } => Some(coaction.side()),
        }
    }

    /// The braiding of the object with itself determined by the ambient data.
    pub fn self_braiding(&self, pres: &Arc<Presentation>) -> Result<Arc<dyn Braiding>> {
        Ok(match self {
            Ambient::Vec => Arc::new(Flip { v: pres.clone(), w: pres.clone() }),
            Ambient::Comodule { coaction, r } => {
                Arc::new(ComoduleBraiding::new(coaction.clone(), coaction.clone(), r.clone())?)
            }
            Ambient::Module { action, rmat } => {
                Arc::new(ModuleBraiding::new(action.clone(), action.clone(), rmat.clone())?)
            }
            Ambient::Crossed { coaction, action } => Arc::new(CrossedBraiding::new(coaction.clone(), action.clone())?),
        })
    }
}

/// A Hopf algebra in a braided category, given on generators.
///
/// `Δ̲` extends as an algebra map into `B ⊗̲ B` and `S̲` by `S̲(bc) = · Ψ(S̲b ⊗ S̲c)`.
pub struct BraidedHopf {
    pres: Arc<Presentation>,
    coproduct: Vec<TensorElem>,
    counit: Vec<Scalar>,
    antipode: Vec<NCPoly>,
    ambient: Ambient,
    psi: Arc<dyn Braiding>,
    delta_cache: Mutex<HashMap<Word, TensorElem>>,
    s_cache: Mutex<HashMap<Word, NCPoly>>,
}

impl Clone for BraidedHopf {
    fn clone(&self) -> Self {
        BraidedHopf {
            pres: self.pres.clone(),
            coproduct: self.coproduct.clone(),
            counit: self.counit.clone(),
            antipode: self.antipode.clone(),
            ambient: self.ambient.clone(),
            psi: self.psi.clone(),
            delta_cache: Mutex::new(HashMap::new()),
            s_cache: Mutex::new(HashMap::new()),
        }
    }
}

impl std::fmt::Debug for BraidedHopf {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("BraidedHopf").field("generators", &self.pres.names()).finish()
    }
}

impl BraidedHopf {
    pub fn new(
        pres: Arc<Presentation>,
        coproduct: Vec<TensorElem>,
        counit: Vec<Scalar>,
        antipode: Vec<NCPoly>,
        ambient: Ambient,
    ) -> Result<Self> {
        let psi = ambient.self_braiding(&pres)?;
        let coproduct = coproduct.iter().map(|t| t.normalize(&[&pres, &pres])).collect();
        let antipode = antipode.iter().map(|p| pres.normal_form(p)).collect();
        Ok(BraidedHopf {
            pres,
            coproduct,
            counit,
            antipode,
            ambient,
            psi,
            delta_cache: Mutex::new(HashMap::new()),
            s_cache: Mutex::new(HashMap::new()),
        })
    }

    /// Replaces the braiding used to extend `Δ̲` and `S̲` (for example by an explicit table).
    pub fn with_braiding(&self, psi: Arc<dyn Braiding>) -> Self {
        let mut b = self.clone();
        b.psi = psi;
        b
    }

    pub fn with_antipode(&self, g: Gen, s: NCPoly) -> Self {
        let mut b = self.clone();
        b.antipode[g as usize] = self.pres.normal_form(&s);
        b
    }

    pub fn pres(&self) -> &Presentation {
        &self.pres
    }

    pub fn pres_arc(&self) -> &Arc<Presentation> {
        &self.pres
    }

    pub fn ambient(&self) -> &Ambient {
        &self.ambient
    }

    pub fn braiding(&self) -> &dyn Braiding {
        &*self.psi
    }

    pub fn braiding_arc(&self) -> &Arc<dyn Braiding> {
        &self.psi
    }

    pub fn gen_coproduct(&self, g: Gen) -> &TensorElem {
        &self.coproduct[g as usize]
    }

    pub fn gen_counit(&self, g: Gen) -> &Scalar {
        &self.counit[g as usize]
    }

    pub fn gen_antipode(&self, g: Gen) -> &NCPoly {
        &self.antipode[g as usize]
    }

    pub fn coproduct_table(&self) -> &[TensorElem] {
        &self.coproduct
    }

    pub fn counit_table(&self) -> &[Scalar] {
        &self.counit
    }

    pub fn antipode_table(&self) -> &[NCPoly] {
        &self.antipode
    }

    /// Product in `B ⊗̲ B`.
    pub fn tensor_mul(&self, p: &TensorElem, r: &TensorElem) -> TensorElem {
        braided_mul(p, r, &*self.psi, &*self.pres, &*self.pres)
    }

    pub fn coproduct_word(&self, w: &Word) -> TensorElem {
        if w.is_one() {
            return TensorElem::unit(2);
        }
        if w.len() == 1 {
            return self.coproduct[w[0] as usize].clone();
        }
        if let Some(t) = self.delta_cache.lock().unwrap().get(w) {
            return t.clone();
        }
        let n = w.len();
        let head = self.coproduct_word(&w.slice(0, n - 1));
        let t = self.tensor_mul(&head, &self.coproduct[w[n - 1] as usize]);
        self.delta_cache.lock().unwrap().insert(w.clone(), t.clone());
        t
    }

    pub fn coproduct(&self, b: &NCPoly) -> TensorElem {
        let mut t = TensorElem::zero(2);
        for (w, c) in b.terms() {
            t.add_scaled(&self.coproduct_word(w), c);
        }
        t
    }

    pub fn counit_word(&self, w: &Word) -> Scalar {
        let mut s = Scalar::one();
        for &g in w.iter() {
            s = &s * &self.counit[g as usize];
        }
        s
    }

    pub fn counit(&self, b: &NCPoly) -> Scalar {
        let mut s = Scalar::zero();
        for (w, c) in b.terms() {
            s += &(c * &self.counit_word(w));
        }
        s
    }

    /// `m ∘ Ψ` on a rank-2 tensor.
    fn mul_braided(&self, t: &TensorElem) -> NCPoly {
        self.psi.braid(t).merge(0, &self.pres).to_poly()
    }

    pub fn antipode_word(&self, w: &Word) -> NCPoly {
        if w.is_one() {
            return NCPoly::one();
        }
        if w.len() == 1 {
            return self.antipode[w[0] as usize].clone();
        }
        if let Some(p) = self.s_cache.lock().unwrap().get(w) {
            return p.clone();
        }
        let n = w.len();
        let sb = self.antipode_word(&w.slice(0, n - 1));
        let sc = &self.antipode[w[n - 1] as usize];
        let p = self.mul_braided(&TensorElem::from_pair(&sb, sc));
        self.s_cache.lock().unwrap().insert(w.clone(), p.clone());
        p
    }

    pub fn antipode(&self, b: &NCPoly) -> NCPoly {
        b.map_linear(|w| self.antipode_word(w))
    }

    pub fn mul(&self, a: &NCPoly, b: &NCPoly) -> NCPoly {
        self.pres.mul(a, b)
    }

    /// `Δ̲(bc)` written out in the ambient category's own formula rather than via `Ψ`.
    pub fn coproduct_of_product(&self, b: &Word, c: &Word) -> TensorElem {
        let p = &*self.pres;
        let db = self.coproduct_word(b);
        let dc = self.coproduct_word(c);
        let mut out = TensorElem::zero(2);
        let mut push = |l: &NCPoly, r: &NCPoly, s: &Scalar| {
            if !s.is_zero() && !l.is_zero() && !r.is_zero() {
                out.add_scaled(&TensorElem::from_pair(l, r), s);
            }
        };
        let w = |x: &Word| NCPoly::word(x.clone());
        let amb = match &self.ambient {
            Ambient::Vec | Ambient::Crossed { .. } => {
                Some(self.ambient.self_braiding(&self.pres).expect("ambient braiding"))
            }
            _ => None,
        };
        for (kb, cb) in db.terms() {
            for (kc, cc) in dc.terms() {
                let coef = cb * cc;
                let (b1, b2, c1, c2) = (&kb[0], &kb[1], &kc[0], &kc[1]);
                match &self.ambient {
                    Ambient::Comodule { coaction, r } => {
                        let bl = coaction.legs(b2);
                        let cl = coaction.legs(c1);
                        for (b20, b21, x) in &bl {
                            for (c10, c11, y) in &cl {
                                let s = match coaction.side() {
                                    Side::Right => r.eval(&w(b21), &w(c11)),
                                    Side::Left => r.eval(&w(c11), &w(b21)),
                                };
                                let l = p.mul(&w(b1), &w(c10));
                                let rr = p.mul(&w(b20), &w(c2));
                                push(&l, &rr, &(&coef * &(&(x * y) * &s)));
                            }
                        }
                    }
                    Ambient::Module { action, rmat } => {
                        for (k, c) in rmat.r.terms() {
                            let (l, rr) = match action.side() {
                                Side::Left => (
                                    p.mul(&w(b1), &action.act_words(&k[1], c1)),
                                    p.mul(&action.act_words(&k[0], b2), &w(c2)),
                                ),
                                Side::Right => (
                                    p.mul(&w(b1), &action.act_words(&k[0], c1)),
                                    p.mul(&action.act_words(&k[1], b2), &w(c2)),
                                ),
                            };
                            push(&l, &rr, &(&coef * c));
                        }
                    }
                    Ambient::Vec | Ambient::Crossed { .. } => {
                        for (k, c) in amb.as_ref().unwrap().braid_words(b2, c1).terms() {
                            push(&p.mul(&w(b1), &w(&k[0])), &p.mul(&w(&k[1]), &w(c2)), &(&coef * c));
                        }
                    }
                }
            }
        }
        out
    }

    /// `S̲(bc)` written out in the ambient category's own formula.
    pub fn antipode_of_product(&self, b: &Word, c: &Word) -> NCPoly {
        let p = &*self.pres;
        let w = |x: &Word| NCPoly::word(x.clone());
        let mut out = NCPoly::zero();
        match &self.ambient {
            Ambient::Comodule { coaction, r } => {
                for (b0, b1, x) in coaction.legs(b) {
                    for (c0, c1, y) in coaction.legs(c) {
                        let s = match coaction.side() {
                            Side::Right => r.eval(&w(&b1), &w(&c1)),
                            Side::Left => r.eval(&w(&c1), &w(&b1)),
                        };
                        if s.is_zero() {
                            continue;
                        }
                        let t = p.mul(&self.antipode_word(&c0), &self.antipode_word(&b0));
                        out.add_scaled(&t, &(&(&x * &y) * &s));
                    }
                }
            }
            Ambient::Module { action, rmat } => {
                let sb = self.antipode_word(b);
                let sc = self.antipode_word(c);
                for (k, coef) in rmat.r.terms() {
                    let (a1, a2) = match action.side() {
                        Side::Left => (&k[1], &k[0]),
                        Side::Right => (&k[0], &k[1]),
                    };
                    let t = p.mul(&action.act(&w(a1), &sc), &action.act(&w(a2), &sb));
                    out.add_scaled(&t, coef);
                }
            }
            Ambient::Vec | Ambient::Crossed { .. } => {
                let amb = self.ambient.self_braiding(&self.pres).expect("ambient braiding");
                let t = TensorElem::from_pair(&self.antipode_word(b), &self.antipode_word(c));
                out = amb.braid(&t).merge(0, p).to_poly();
            }
        }
        out
    }
}
