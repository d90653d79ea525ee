use super::data::HopfData;
use crate::freealg::{Gen, NCPoly, Word};
use crate::scalar::Scalar;
use crate::tensor::TensorElem;
use std::collections::HashMap;
use std::sync::{Arc, Mutex};

/// A bilinear map `H ⊗ H → k`, evaluated on pairs of words.
pub trait Functional: Send + Sync {
    fn host(&self) -> &HopfData;

    fn eval_words(&self, u: &Word, v: &Word) -> Scalar;

    fn eval(&self, a: &NCPoly, b: &NCPoly) -> Scalar {
        let mut s = Scalar::zero();
        for (u, c) in a.terms() {
            for (v, d) in b.terms() {
                let r = self.eval_words(u, v);
                if !r.is_zero() {
                    s += &(&(c * d) * &r);
                }
            }
        }
        s
    }

    /// Evaluates on a rank-2 tensor.
    fn eval_tensor(&self, t: &TensorElem) -> Scalar {
        t.evaluate(|k| self.eval_words(&k[0], &k[1]))
    }
}

/// `ε ⊗ ε`, the convolution unit.
pub struct CounitPair {
    pub host: Arc<HopfData>,
}

impl Functional for CounitPair {
    fn host(&self) -> &HopfData {
        &self.host
    }

    fn eval_words(&self, u: &Word, v: &Word) -> Scalar {
        &self.host.counit_word(u) * &self.host.counit_word(v)
    }
}

/// Convolution `(F * G)(h ⊗ g) = F(h₍₁₎ ⊗ g₍₁₎) G(h₍₂₎ ⊗ g₍₂₎)`.
pub struct Convolution<'a> {
    pub f: &'a dyn Functional,
    pub g: &'a dyn Functional,
}

impl Functional for Convolution<'_> {
    fn host(&self) -> &HopfData {
        self.f.host()
    }

    fn eval_words(&self, u: &Word, v: &Word) -> Scalar {
        let h = self.f.host();
        let du = h.coproduct_word(u);
        let dv = h.coproduct_word(v);
        let mut s = Scalar::zero();
        for (ku, cu) in du.terms() {
            for (kv, cv) in dv.terms() {
                let a = self.f.eval_words(&ku[0], &kv[0]);
                if a.is_zero() {
                    continue;
                }
                let b = self.g.eval_words(&ku[1], &kv[1]);
                if !b.is_zero() {
                    s += &(&(cu * cv) * &(&a * &b));
                }
            }
        }
        s
    }
}

/// Pairs of normal words `(u, v)` with `|u| + |v| ≤ bound`.
pub fn word_pairs(host: &HopfData, bound: usize) -> Vec<(Word, Word)> {
    let words = host.pres().normal_words(bound);
    let mut out = Vec::new();
    for u in &words {
        for v in &words {
            if u.len() + v.len() <= bound {
                out.push((u.clone(), v.clone()));
            }
        }
    }
    out
}

/// Checks `F * G = G * F = ε ⊗ ε`; returns the first failing pair.
pub fn check_convolution_inverse(f: &dyn Functional, g: &dyn Functional, bound: usize) -> Result<(), (Word, Word)> {
    let fg = Convolution { f, g };
    let gf = Convolution { f: g, g: f };
    let h = f.host();
    for (u, v) in word_pairs(h, bound) {
        let e = &h.counit_word(&u) * &h.counit_word(&v);
        if fg.eval_words(&u, &v) != e || gf.eval_words(&u, &v) != e {
            return Err((u, v));
        }
    }
    Ok(())
}

/// Which pair of multiplicativity laws a [`Bichar`] extends by.
///
/// `Standard`: `F(hg⊗f) = F(h⊗f₍₁₎)F(g⊗f₍₂₎)` and `F(h⊗gf) = F(h₍₁₎⊗f)F(h₍₂₎⊗g)`.
/// `Reversed`: `F(hg⊗f) = F(g⊗f₍₁₎)F(h⊗f₍₂₎)` and `F(h⊗gf) = F(h₍₁₎⊗g)F(h₍₂₎⊗f)`,
/// the laws obeyed by the convolution inverse of a standard one.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Laws {
    Standard,
    Reversed,
}

/// A bilinear functional fixed by a generator table and extended by bicharacter laws.
///
/// The recursion assumes every generator coproduct has legs of length at most one.
pub struct Bichar {
    host: Arc<HopfData>,
    table: Vec<Vec<Scalar>>,
    laws: Laws,
    memo: Mutex<HashMap<(Word, Word), Scalar>>,
}

impl Clone for Bichar {
    fn clone(&self) -> Self {
        Bichar::new(self.host.clone(), self.table.clone(), self.laws)
    }
}

impl std::fmt::Debug for Bichar {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Bichar").field("table", &self.table).field("laws", &self.laws).finish()
    }
}

impl Bichar {
    pub fn new(host: Arc<HopfData>, table: Vec<Vec<Scalar>>, laws: Laws) -> Self {
        Bichar { host, table, laws, memo: Mutex::new(HashMap::new()) }
    }

    /// `ε ⊗ ε` as a generator table.
    pub fn trivial(host: Arc<HopfData>, laws: Laws) -> Self {
        let n = host.pres().ngens();
        let table =
            (0..n as Gen).map(|a| (0..n as Gen).map(|b| host.gen_counit(a) * host.gen_counit(b)).collect()).collect();
        Bichar::new(host, table, laws)
    }

    /// Builds a table from a function on generator pairs.
    pub fn from_fn(host: Arc<HopfData>, laws: Laws, mut f: impl FnMut(Gen, Gen) -> Scalar) -> Self {
        let n = host.pres().ngens() as Gen;
        let table = (0..n).map(|a| (0..n).map(|b| f(a, b)).collect()).collect();
        Bichar::new(host, table, laws)
    }

    pub fn host_arc(&self) -> &Arc<HopfData> {
        &self.host
    }

    pub fn laws(&self) -> Laws {
        self.laws
    }

    pub fn table(&self) -> &[Vec<Scalar>] {
        &self.table
    }

    pub fn entry(&self, a: Gen, b: Gen) -> &Scalar {
        &self.table[a as usize][b as usize]
    }

    fn compute(&self, u: &Word, v: &Word) -> Scalar {
        let h = &*self.host;
        let rev = self.laws == Laws::Reversed;
        let mut s = Scalar::zero();
        if u.len() > 1 {
            let (x, rest) = (u.slice(0, 1), u.slice(1, u.len()));
            let (first, second) = if rev { (&rest, &x) } else { (&x, &rest) };
            for (k, c) in h.coproduct_word(v).terms() {
                let a = self.eval_words(first, &k[0]);
                if a.is_zero() {
                    continue;
                }
                let b = self.eval_words(second, &k[1]);
                s += &(c * &(&a * &b));
            }
        } else {
            let (y, rest) = (v.slice(0, 1), v.slice(1, v.len()));
            let (first, second) = if rev { (&y, &rest) } else { (&rest, &y) };
            for (k, c) in h.coproduct_word(u).terms() {
                let a = self.eval_words(&k[0], first);
                if a.is_zero() {
                    continue;
                }
                let b = self.eval_words(&k[1], second);
                s += &(c * &(&a * &b));
            }
        }
        s
    }
}

impl Functional for Bichar {
    fn host(&self) -> &HopfData {
        &self.host
    }

    fn eval_words(&self, u: &Word, v: &Word) -> Scalar {
        if u.is_one() {
            return self.host.counit_word(v);
        }
        if v.is_one() {
            return self.host.counit_word(u);
        }
        if u.len() == 1 && v.len() == 1 {
            return self.table[u[0] as usize][v[0] as usize].clone();
        }
        let key = (u.clone(), v.clone());
        if let Some(s) = self.memo.lock().unwrap().get(&key) {
            return s.clone();
        }
        let s = self.compute(u, v);
        self.memo.lock().unwrap().insert(key, s.clone());
        s
    }
}

/// `h ⊗ g ↦ F(S h ⊗ g)`: the convolution inverse of a bicharacter `F`.
pub struct AntipodeTwisted<'a> {
    pub f: &'a dyn Functional,
}

impl Functional for AntipodeTwisted<'_> {
    fn host(&self) -> &HopfData {
        self.f.host()
    }

    fn eval_words(&self, u: &Word, v: &Word) -> Scalar {
        self.f.eval(&self.f.host().antipode_word(u), &NCPoly::word(v.clone()))
    }
}
