use crate::error::{Error, Result};
use crate::freealg::{Gen, NCPoly, Presentation, Word};
use crate::linalg::{self, Equation};
use crate::scalar::Scalar;
use crate::tensor::TensorElem;
use std::collections::HashMap;
use std::sync::{Arc, Mutex};

/// A Hopf algebra given by a presentation and generator tables for `Δ`, `ε`, `S`.
///
/// `Δ` and `ε` extend multiplicatively and `S` anti-multiplicatively.
#[derive(Debug)]
pub struct HopfData {
    pres: Arc<Presentation>,
    coproduct: Vec<TensorElem>,
    counit: Vec<Scalar>,
    antipode: Vec<NCPoly>,
    delta_cache: Mutex<HashMap<Word, TensorElem>>,
    s_cache: Mutex<HashMap<Word, NCPoly>>,
}

impl Clone for HopfData {
    fn clone(&self) -> Self {
        HopfData::new(self.pres.clone(), self.coproduct.clone(), self.counit.clone(), self.antipode.clone())
    }
}

impl HopfData {
    pub fn new(
        pres: Arc<Presentation>,
        coproduct: Vec<TensorElem>,
        counit: Vec<Scalar>,
        antipode: Vec<NCPoly>,
    ) -> Self {
        let slots = [&*pres, &*pres];
        let coproduct = coproduct.iter().map(|t| t.normalize(&slots)).collect();
        let antipode = antipode.iter().map(|p| pres.normal_form(p)).collect();
        HopfData {
            pres,
            coproduct,
            counit,
            antipode,
            delta_cache: Mutex::new(HashMap::new()),
            s_cache: Mutex::new(HashMap::new()),
        }
    }

    /// The ground field `k` as a Hopf algebra.
    pub fn trivial(field: crate::scalar::FieldContext) -> Self {
        let pres = Arc::new(Presentation::new(Vec::new(), field, Vec::new(), Vec::new()).unwrap());
        HopfData::new(pres, Vec::new(), Vec::new(), Vec::new())
    }

    pub fn pres(&self) -> &Presentation {
        &self.pres
    }

    pub fn pres_arc(&self) -> &Arc<Presentation> {
        &self.pres
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

    /// Replaces one antipode entry (used to build deliberately broken structures in tests).
    pub fn with_antipode(&self, g: Gen, s: NCPoly) -> Self {
        let mut a = self.antipode.clone();
        a[g as usize] = s;
        HopfData::new(self.pres.clone(), self.coproduct.clone(), self.counit.clone(), a)
    }

    fn slots2(&self) -> [&Presentation; 2] {
        [&self.pres, &self.pres]
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
        let t = head.mul(&self.coproduct[w[n - 1] as usize], &self.slots2());
        self.delta_cache.lock().unwrap().insert(w.clone(), t.clone());
        t
    }

    pub fn coproduct(&self, h: &NCPoly) -> TensorElem {
        let mut t = TensorElem::zero(2);
        for (w, c) in h.terms() {
            t.add_scaled(&self.coproduct_word(w), c);
        }
        t
    }

    pub fn checked_coproduct(&self, h: &NCPoly) -> Result<TensorElem> {
        self.pres.check_alphabet(h)?;
        Ok(self.coproduct(h))
    }

    /// Applies `Δ` to slot `i` of a tensor.
    pub fn coproduct_slot(&self, t: &TensorElem, i: usize) -> TensorElem {
        t.expand_slot(i, |w| self.coproduct_word(w))
    }

    /// Iterated coproduct into `n` legs, nested to the right: `(id ⊗ … ⊗ Δ) … Δ`.
    pub fn coproduct_n(&self, h: &NCPoly, n: usize) -> TensorElem {
        if n == 1 {
            return TensorElem::from_poly(h);
        }
        let mut t = self.coproduct(h);
        for k in 2..n {
            t = self.coproduct_slot(&t, k - 1);
        }
        t
    }

    pub fn coproduct_word_n(&self, w: &Word, n: usize) -> TensorElem {
        self.coproduct_n(&NCPoly::word(w.clone()), n)
    }

    pub fn counit_word(&self, w: &Word) -> Scalar {
        let mut s = Scalar::one();
        for &g in w.iter() {
            s = &s * &self.counit[g as usize];
            if s.is_zero() {
                break;
            }
        }
        s
    }

    pub fn counit(&self, h: &NCPoly) -> Scalar {
        let mut s = Scalar::zero();
        for (w, c) in h.terms() {
            s += &(c * &self.counit_word(w));
        }
        s
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
        let rest = self.antipode_word(&w.slice(0, n - 1));
        let p = self.pres.mul(&self.antipode[w[n - 1] as usize], &rest);
        self.s_cache.lock().unwrap().insert(w.clone(), p.clone());
        p
    }

    pub fn antipode(&self, h: &NCPoly) -> NCPoly {
        h.map_linear(|w| self.antipode_word(w))
    }

    pub fn checked_antipode(&self, h: &NCPoly) -> Result<NCPoly> {
        self.pres.check_alphabet(h)?;
        Ok(self.antipode(h))
    }

    pub fn mul(&self, a: &NCPoly, b: &NCPoly) -> NCPoly {
        self.pres.mul(a, b)
    }

    /// Element of `H` with every word in normal form.
    pub fn nf(&self, p: &NCPoly) -> NCPoly {
        self.pres.normal_form(p)
    }
}

/// Solves generator antipode entries from `S(t₍₁₎) t₍₂₎ = ε(t) = t₍₁₎ S(t₍₂₎)`.
///
/// Each unknown `S(t)` ranges over the span of `ansatz`. Entries in `fixed` are kept.
/// Applies to any coproduct table whose legs have length at most one, so the same
/// routine serves braided antipodes (the axiom on generators involves no braiding).
pub fn solve_antipode(
    pres: &Presentation,
    coproduct: &[TensorElem],
    counit: &[Scalar],
    fixed: &HashMap<Gen, NCPoly>,
    ansatz: &[NCPoly],
) -> Result<Vec<NCPoly>> {
    let n = pres.ngens();
    let unknown: Vec<Gen> = (0..n as Gen).filter(|g| !fixed.contains_key(g)).collect();
    let var = |g: Gen, k: usize| unknown.iter().position(|&u| u == g).map(|i| i * ansatz.len() + k);
    let nvars = unknown.len() * ansatz.len();
    let mut eqs: Vec<Equation> = Vec::new();
    for t in 0..n as Gen {
        for side in [0usize, 1] {
            let mut lin: HashMap<Word, Equation> = HashMap::new();
            lin.entry(Word::one()).or_default().rhs = counit[t as usize].clone();
            for (key, c) in coproduct[t as usize].terms() {
                let (sleg, other) = if side == 0 { (&key[0], &key[1]) } else { (&key[1], &key[0]) };
                if sleg.len() > 1 {
                    return Err(Error::NoSolution("coproduct legs longer than one letter".into()));
                }
                let other = NCPoly::word(other.clone());
                let order = |s: &NCPoly| if side == 0 { pres.mul(s, &other) } else { pres.mul(&other, s) };
                let known: Option<NCPoly> =
                    if sleg.is_one() { Some(NCPoly::one()) } else { fixed.get(&sleg[0]).cloned() };
                match known {
                    Some(s) => {
                        for (w, a) in order(&s).terms() {
                            let e = lin.entry(w.clone()).or_default();
                            e.rhs = &e.rhs - &(c * a);
                        }
                    }
                    None => {
                        for (k, base) in ansatz.iter().enumerate() {
                            let v = var(sleg[0], k).unwrap();
                            for (w, a) in order(base).terms() {
                                lin.entry(w.clone()).or_default().add(v, &(c * a));
                            }
                        }
                    }
                }
            }
            eqs.extend(lin.into_values());
        }
    }
    let sol = linalg::solve(nvars, eqs)?.ok_or_else(|| Error::NoSolution("antipode axiom is inconsistent".into()))?;
    if !sol.is_unique() {
        return Err(Error::NoSolution(format!("antipode underdetermined ({} free)", sol.free.len())));
    }
    let mut out = Vec::with_capacity(n);
    for g in 0..n as Gen {
        match fixed.get(&g) {
            Some(s) => out.push(s.clone()),
            None => {
                let mut s = NCPoly::zero();
                for (k, base) in ansatz.iter().enumerate() {
                    s.add_scaled(base, &sol.values[var(g, k).unwrap()]);
                }
                out.push(pres.normal_form(&s));
            }
        }
    }
    Ok(out)
}
