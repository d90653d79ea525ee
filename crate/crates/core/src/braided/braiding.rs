use super::action::Action;
use super::coaction::{Coaction, Side};
use crate::error::{Error, Result};
use crate::freealg::{Gen, NCPoly, Presentation, Word};
use crate::hopf::{Dqs, QuasiTriangular};
use crate::scalar::Scalar;
use crate::tensor::TensorElem;
use std::collections::HashMap;
use std::sync::{Arc, Mutex};

/// A braiding `Ψ: V ⊗ W → W ⊗ V`.
pub trait Braiding: Send + Sync {
    /// The presentations of `V` and `W`.
    fn source(&self) -> [&Presentation; 2];

    /// `Ψ(v ⊗ w)` on words, with both output slots in normal form.
    fn braid_words(&self, v: &Word, w: &Word) -> TensorElem;

    fn braid_polys(&self, v: &NCPoly, w: &NCPoly) -> TensorElem {
        self.braid(&TensorElem::from_pair(v, w))
    }

    /// Applies `Ψ` to a rank-2 tensor in `V ⊗ W`.
    fn braid(&self, t: &TensorElem) -> TensorElem {
        let mut out = TensorElem::zero(2);
        for (k, c) in t.terms() {
            out.add_scaled(&self.braid_words(&k[0], &k[1]), c);
        }
        out
    }

    /// Applies `Ψ` to slots `i, i + 1` of a tensor.
    fn braid_at(&self, t: &TensorElem, i: usize) -> TensorElem {
        let mut out = TensorElem::zero(t.rank());
        for (k, c) in t.terms() {
            for (bk, bc) in self.braid_words(&k[i], &k[i + 1]).terms() {
                let mut nk = k.clone();
                nk[i] = bk[0].clone();
                nk[i + 1] = bk[1].clone();
                out.add_term(nk, c * bc);
            }
        }
        out
    }
}

#[derive(Debug, Default)]
struct Memo(Mutex<HashMap<(Word, Word), TensorElem>>);

impl Memo {
    fn get_or(&self, v: &Word, w: &Word, f: impl FnOnce() -> TensorElem) -> TensorElem {
        let key = (v.clone(), w.clone());
        if let Some(t) = self.0.lock().unwrap().get(&key) {
            return t.clone();
        }
        let t = f();
        self.0.lock().unwrap().insert(key, t.clone());
        t
    }
}

fn swap_pair(w: &Word, v: &Word, c: Scalar) -> TensorElem {
    TensorElem::pure(vec![w.clone(), v.clone()], c)
}

/// The ordinary transposition `v ⊗ w ↦ w ⊗ v`.
pub struct Flip {
    pub v: Arc<Presentation>,
    pub w: Arc<Presentation>,
}

impl Braiding for Flip {
    fn source(&self) -> [&Presentation; 2] {
        [&self.v, &self.w]
    }

    fn braid_words(&self, v: &Word, w: &Word) -> TensorElem {
        swap_pair(w, v, Scalar::one())
    }
}

/// The braiding of comodules under a dual-quasitriangular `R`.
///
/// Right: `Ψ(v ⊗ w) = w⁰ ⊗ v⁰ R(v¹ ⊗ w¹)`. Left: `Ψ(v ⊗ w) = R(w¹ ⊗ v¹) w² ⊗ v²`.
pub struct ComoduleBraiding {
    pub v: Arc<Coaction>,
    pub w: Arc<Coaction>,
    pub r: Arc<Dqs>,
    memo: Memo,
}

impl ComoduleBraiding {
    pub fn new(v: Arc<Coaction>, w: Arc<Coaction>, r: Arc<Dqs>) -> Result<Self> {
        if v.side() != w.side() {
            return Err(Error::FieldMismatch("comodules on different sides".into()));
        }
        Ok(ComoduleBraiding { v, w, r, memo: Memo::default() })
    }
}

impl Braiding for ComoduleBraiding {
    fn source(&self) -> [&Presentation; 2] {
        [self.v.carrier(), self.w.carrier()]
    }

    fn braid_words(&self, v: &Word, w: &Word) -> TensorElem {
        if v.is_one() || w.is_one() {
            return swap_pair(w, v, Scalar::one());
        }
        self.memo.get_or(v, w, || {
            let mut out = TensorElem::zero(2);
            let vl = self.v.legs(v);
            let wl = self.w.legs(w);
            for (v0, v1, a) in &vl {
                for (w0, w1, b) in &wl {
                    let (x, y) = match self.v.side() {
                        Side::Right => (v1, w1),
                        Side::Left => (w1, v1),
                    };
                    let s = self.r.eval(&NCPoly::word(x.clone()), &NCPoly::word(y.clone()));
                    if !s.is_zero() {
                        out.add_term(vec![w0.clone(), v0.clone()], &(a * b) * &s);
                    }
                }
            }
            out
        })
    }
}

/// The braiding of modules under a quasitriangular `ℛ`.
///
/// Left: `Ψ(v ⊗ w) = ℛ⁽²⁾ ▷ w ⊗ ℛ⁽¹⁾ ▷ v`. Right: `Ψ(v ⊗ w) = w ◁ ℛ⁽¹⁾ ⊗ v ◁ ℛ⁽²⁾`.
pub struct ModuleBraiding {
    pub v: Arc<Action>,
    pub w: Arc<Action>,
    pub rmat: Arc<QuasiTriangular>,
    memo: Memo,
}

impl ModuleBraiding {
    pub fn new(v: Arc<Action>, w: Arc<Action>, rmat: Arc<QuasiTriangular>) -> Result<Self> {
        if v.side() != w.side() {
            return Err(Error::FieldMismatch("modules on different sides".into()));
        }
        Ok(ModuleBraiding { v, w, rmat, memo: Memo::default() })
    }
}

impl Braiding for ModuleBraiding {
    fn source(&self) -> [&Presentation; 2] {
        [self.v.carrier(), self.w.carrier()]
    }

    fn braid_words(&self, v: &Word, w: &Word) -> TensorElem {
        self.memo.get_or(v, w, || {
            let mut out = TensorElem::zero(2);
            for (k, c) in self.rmat.r.terms() {
                let (aw, av) = match self.v.side() {
                    Side::Left => (&k[1], &k[0]),
                    Side::Right => (&k[0], &k[1]),
                };
                let wi = self.w.act_words(aw, w);
                if wi.is_zero() {
                    continue;
                }
                let vi = self.v.act_words(av, v);
                out.add_scaled(&TensorElem::from_pair(&wi, &vi), c);
            }
            out
        })
    }
}

/// The braiding of crossed modules.
///
/// Left: `Ψ(v ⊗ w) = v¹ ▷ w ⊗ v²` from the coaction on `V` and the action on `W`.
/// Right: `Ψ(v ⊗ w) = w⁰ ⊗ v ◁ w¹` from the action on `V` and the coaction on `W`.
pub struct CrossedBraiding {
    pub coaction: Arc<Coaction>,
    pub action: Arc<Action>,
    memo: Memo,
}

impl CrossedBraiding {
    pub fn new(coaction: Arc<Coaction>, action: Arc<Action>) -> Result<Self> {
        if coaction.side() != action.side() {
            return Err(Error::FieldMismatch("action and coaction on different sides".into()));
        }
        Ok(CrossedBraiding { coaction, action, memo: Memo::default() })
    }
}

impl Braiding for CrossedBraiding {
    fn source(&self) -> [&Presentation; 2] {
        match self.coaction.side() {
            Side::Left => [self.coaction.carrier(), self.action.carrier()],
            Side::Right => [self.action.carrier(), self.coaction.carrier()],
        }
    }

    fn braid_words(&self, v: &Word, w: &Word) -> TensorElem {
        self.memo.get_or(v, w, || {
            let mut out = TensorElem::zero(2);
            match self.coaction.side() {
                Side::Left => {
                    for (v2, v1, c) in self.coaction.legs(v) {
                        let a = self.action.act_words(&v1, w);
                        out.add_scaled(&TensorElem::from_pair(&a, &NCPoly::word(v2)), &c);
                    }
                }
                Side::Right => {
                    for (w0, w1, c) in self.coaction.legs(w) {
                        let a = self.action.act_words(&w1, v);
                        out.add_scaled(&TensorElem::from_pair(&NCPoly::word(w0), &a), &c);
                    }
                }
            }
            out
        })
    }
}

/// A braiding given on generator pairs and extended to words by the hexagon identities.
pub struct ExplicitBraiding {
    v: Arc<Presentation>,
    w: Arc<Presentation>,
    table: HashMap<(Gen, Gen), TensorElem>,
    memo: Memo,
}

impl ExplicitBraiding {
    /// Every generator pair must be tabled.
    pub fn new(v: Arc<Presentation>, w: Arc<Presentation>, table: HashMap<(Gen, Gen), TensorElem>) -> Result<Self> {
        for a in 0..v.ngens() as Gen {
            for b in 0..w.ngens() as Gen {
                if !table.contains_key(&(a, b)) {
                    return Err(Error::CoverageGap(format!("Ψ({}⊗{})", v.name(a), w.name(b))));
                }
            }
        }
        let table = table.into_iter().map(|(k, t)| (k, t.normalize(&[&w, &v]))).collect();
        Ok(ExplicitBraiding { v, w, table, memo: Memo::default() })
    }

    /// Tabulates another braiding on generator pairs.
    pub fn from_braiding(b: &dyn Braiding, v: Arc<Presentation>, w: Arc<Presentation>) -> Self {
        let mut table = HashMap::new();
        for a in 0..v.ngens() as Gen {
            for c in 0..w.ngens() as Gen {
                table.insert((a, c), b.braid_words(&Word::gen(a), &Word::gen(c)));
            }
        }
        ExplicitBraiding { v, w, table, memo: Memo::default() }
    }

    pub fn table(&self) -> &HashMap<(Gen, Gen), TensorElem> {
        &self.table
    }

    /// A copy with one entry replaced.
    pub fn with_entry(&self, a: Gen, b: Gen, t: TensorElem) -> Self {
        let mut table = self.table.clone();
        table.insert((a, b), t.normalize(&[&self.w, &self.v]));
        ExplicitBraiding { v: self.v.clone(), w: self.w.clone(), table, memo: Memo::default() }
    }

    fn compute(&self, v: &Word, w: &Word) -> TensorElem {
        let mut out = TensorElem::zero(2);
        if v.len() > 1 {
            // Ψ(u·v' ⊗ w): braid v' past w, then u past each result
            let (u, rest) = (v.slice(0, 1), v.slice(1, v.len()));
            for (k1, c1) in self.braid_words(&rest, w).terms() {
                for (k2, c2) in self.braid_words(&u, &k1[0]).terms() {
                    let vv = self.v.nf_word(&k2[1].concat(&k1[1]));
                    let t = TensorElem::from_pair(&NCPoly::word(k2[0].clone()), &vv);
                    out.add_scaled(&t, &(c1 * c2));
                }
            }
        } else {
            // Ψ(v ⊗ u·w'): braid v past u, then the result past w'
            let (u, rest) = (w.slice(0, 1), w.slice(1, w.len()));
            for (k1, c1) in self.braid_words(v, &u).terms() {
                for (k2, c2) in self.braid_words(&k1[1], &rest).terms() {
                    let ww = self.w.nf_word(&k1[0].concat(&k2[0]));
                    let t = TensorElem::from_pair(&ww, &NCPoly::word(k2[1].clone()));
                    out.add_scaled(&t, &(c1 * c2));
                }
            }
        }
        out
    }
}

impl Braiding for ExplicitBraiding {
    fn source(&self) -> [&Presentation; 2] {
        [&self.v, &self.w]
    }

    fn braid_words(&self, v: &Word, w: &Word) -> TensorElem {
        if v.is_one() || w.is_one() {
            return swap_pair(w, v, Scalar::one());
        }
        if v.len() == 1 && w.len() == 1 {
            return self.table[&(v[0], w[0])].clone();
        }
        self.memo.get_or(v, w, || self.compute(v, w))
    }
}

/// An algebra whose product is known on pairs of basis words.
pub trait Algebra: Send + Sync {
    fn mul_words(&self, a: &Word, b: &Word) -> NCPoly;

    fn mul_polys(&self, a: &NCPoly, b: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (u, x) in a.terms() {
            for (v, y) in b.terms() {
                out.add_scaled(&self.mul_words(u, v), &(x * y));
            }
        }
        out
    }
}

impl Algebra for Presentation {
    fn mul_words(&self, a: &Word, b: &Word) -> NCPoly {
        self.nf_word(&a.concat(b))
    }
}

/// Product in the braided tensor product `A ⊗̲ C`: `(b ⊗ c)(a ⊗ d) = b Ψ(c ⊗ a) d`.
///
/// `psi` braids `C ⊗ A → A ⊗ C`.
pub fn braided_mul(p: &TensorElem, r: &TensorElem, psi: &dyn Braiding, a: &dyn Algebra, c: &dyn Algebra) -> TensorElem {
    let mut out = TensorElem::zero(2);
    for (k1, x) in p.terms() {
        for (k2, y) in r.terms() {
            let xy = x * y;
            for (bk, z) in psi.braid_words(&k1[1], &k2[0]).terms() {
                let left = a.mul_words(&k1[0], &bk[0]);
                let right = c.mul_words(&bk[1], &k2[1]);
                out.add_scaled(&TensorElem::from_pair(&left, &right), &(&xy * z));
            }
        }
    }
    out
}
