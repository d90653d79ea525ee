use crate::braided::{Ambient, BraidedHopf, Coaction, Side};
use crate::error::{Error, Result};
use crate::freealg::{Gen, NCPoly, Word};
use crate::hopf::{Dqs, Functional, HopfData};
use crate::model::StructureConstantModel;
use crate::tensor::{Key, TensorElem};
use std::collections::BTreeMap;
use std::sync::Arc;

/// `B(H,H) ⋉ B` tabulated on pairs `(h, b)` of normal words with `|h| + |b| ≤ bound`.
pub struct AutomorphismGroup {
    pub host: Arc<HopfData>,
    pub r: Arc<Dqs>,
    pub carrier: Arc<BraidedHopf>,
    pub coaction: Arc<Coaction>,
    pub model: StructureConstantModel,
}

/// `(h⊗b)(g⊗c) = h₍₂₎g₍₃₎ ⊗ b⁽⁰⁾c R((Sh₍₁₎)h₍₃₎ ⊗ Sg₍₂₎) R(b⁽¹⁾ ⊗ (Sg₍₁₎)g₍₄₎)`.
fn product(h: &HopfData, r: &Dqs, co: &Coaction, x: &Key, y: &Key) -> TensorElem {
    let hp = h.pres();
    let bp = co.carrier();
    let slots = [hp, bp];
    let dh = h.coproduct_word_n(&x[0], 3);
    let dg = h.coproduct_word_n(&y[0], 4);
    let legs = co.legs(&x[1]);
    let mut out = TensorElem::zero(2);
    for (kg, cg) in dg.terms() {
        let sg2 = h.antipode_word(&kg[1]);
        let outer_g = h.mul(&h.antipode_word(&kg[0]), &NCPoly::word(kg[3].clone()));
        let mut right_factors = Vec::new();
        for (b0, b1, cb) in &legs {
            let s = r.r.eval(&NCPoly::word(b1.clone()), &outer_g);
            if !s.is_zero() {
                right_factors.push((b0, cb * &s));
            }
        }
        if right_factors.is_empty() {
            continue;
        }
        for (kh, ch) in dh.terms() {
            let outer_h = h.mul(&h.antipode_word(&kh[0]), &NCPoly::word(kh[2].clone()));
            let s = r.r.eval(&outer_h, &sg2);
            if s.is_zero() {
                continue;
            }
            let hg = hp.nf_word(&kh[1].concat(&kg[2]));
            let coeff = &(cg * ch) * &s;
            for (b0, cb) in &right_factors {
                let bc = bp.nf_word(&b0.concat(&y[1]));
                out.add_scaled(&TensorElem::from_pair(&hg, &bc), &(&coeff * cb));
            }
        }
    }
    out.normalize(&slots)
}

/// `Δ(h⊗b) = h₍₁₎ ⊗ b₍₁₎⁽⁰⁾ ⊗ h₍₂₎b₍₁₎⁽¹⁾ ⊗ b₍₂₎`.
fn coproduct(h: &HopfData, carrier: &BraidedHopf, co: &Coaction, x: &Key) -> TensorElem {
    let hp = h.pres();
    let mut out = TensorElem::zero(4);
    for (kh, ch) in h.coproduct_word(&x[0]).terms() {
        for (kb, cb) in carrier.coproduct_word(&x[1]).terms() {
            for (b0, b1, cl) in co.legs(&kb[0]) {
                let mid = hp.nf_word(&kh[1].concat(&b1));
                for (w, cm) in mid.terms() {
                    out.add_term(vec![kh[0].clone(), b0.clone(), w.clone(), kb[1].clone()], &(&(ch * cb) * &cl) * cm);
                }
            }
        }
    }
    out
}

pub fn automorphism_braided_group(r: Arc<Dqs>, carrier: Arc<BraidedHopf>, bound: usize) -> Result<AutomorphismGroup> {
    let coaction = match carrier.ambient() {
        Ambient::Comodule { coaction, .. } if coaction.side() == Side::Right => coaction.clone(),
        _ => {
            return Err(Error::CoverageGap("the automorphism construction needs a right comodule braided group".into()))
        }
    };
    let host = r.host_arc().clone();
    let hp = host.pres_arc().clone();
    let bp = carrier.pres_arc().clone();
    let mut basis = Vec::new();
    let hw = hp.normal_words(bound);
    let bw = bp.normal_words(bound);
    for h in &hw {
        for b in &bw {
            if h.len() + b.len() <= bound {
                basis.push(vec![h.clone(), b.clone()]);
            }
        }
    }
    let mut model =
        StructureConstantModel::tabulate(vec![hp.clone(), bp.clone()], basis.clone(), Some(bound), |x, y| {
            product(&host, &r, &coaction, x, y)
        });
    model.coproduct =
        basis.iter().map(|k| (k.clone(), coproduct(&host, &carrier, &coaction, k))).collect::<BTreeMap<_, _>>();
    Ok(AutomorphismGroup { host, r, carrier, coaction, model })
}

impl AutomorphismGroup {
    pub fn host_elem(&self, g: Gen) -> TensorElem {
        TensorElem::pure(vec![Word::gen(g), Word::one()], crate::scalar::Scalar::one())
    }

    pub fn carrier_elem(&self, g: Gen) -> TensorElem {
        TensorElem::pure(vec![Word::one(), Word::gen(g)], crate::scalar::Scalar::one())
    }

    /// `(1⊗c)(h⊗1)` for a carrier generator `c` and host generator `h`.
    pub fn cross_relation(&self, c: Gen, h: Gen) -> TensorElem {
        product(&self.host, &self.r, &self.coaction, &vec![Word::one(), Word::gen(c)], &vec![Word::gen(h), Word::one()])
    }

    /// The product on arbitrary pairs, without the truncation window.
    pub fn mul_keys(&self, x: &Key, y: &Key) -> TensorElem {
        product(&self.host, &self.r, &self.coaction, x, y)
    }

    pub fn mul(&self, a: &TensorElem, b: &TensorElem) -> TensorElem {
        let mut out = TensorElem::zero(2);
        for (x, s) in a.terms() {
            for (y, t) in b.terms() {
                out.add_scaled(&self.mul_keys(x, y), &(s * t));
            }
        }
        out
    }

    pub fn coproduct_of(&self, x: &Key) -> TensorElem {
        coproduct(&self.host, &self.carrier, &self.coaction, x)
    }
}
