use crate::braided::Algebra;
use crate::catalog::Bundle;
use crate::freealg::{Gen, NCPoly, Presentation, Word};
use crate::hopf::{Dqs, Functional, HopfData};
use crate::model::StructureConstantModel;

use crate::tensor::TensorElem;
use crate::text::print;
use crate::verify::VerifyReport;
use std::collections::HashMap;
use std::sync::{Arc, Mutex};

/// `B(H,H)`: the coalgebra of `H` with product `h·g = h₍₂₎g₍₂₎ R((Sh₍₁₎)h₍₃₎ ⊗ Sg₍₁₎)`.
pub struct TransmutedAlgebra {
    pub host: Arc<HopfData>,
    pub r: Arc<Dqs>,
    memo: Mutex<HashMap<(Word, Word), NCPoly>>,
}

impl TransmutedAlgebra {
    pub fn new(r: Arc<Dqs>) -> Self {
        TransmutedAlgebra { host: r.host_arc().clone(), r, memo: Mutex::new(HashMap::new()) }
    }

    pub fn pres(&self) -> &Presentation {
        self.host.pres()
    }

    fn compute(&self, u: &Word, v: &Word) -> NCPoly {
        let h = &*self.host;
        let du = h.coproduct_word_n(u, 3);
        let dv = h.coproduct_word(v);
        let mut out = NCPoly::zero();
        for (ku, cu) in du.terms() {
            let outer = h.mul(&h.antipode_word(&ku[0]), &NCPoly::word(ku[2].clone()));
            for (kv, cv) in dv.terms() {
                let s = self.r.r.eval(&outer, &h.antipode_word(&kv[0]));
                if s.is_zero() {
                    continue;
                }
                out.add_scaled(&h.pres().nf_word(&ku[1].concat(&kv[1])), &(&(cu * cv) * &s));
            }
        }
        out
    }

    /// Product of a list of elements, left to right.
    pub fn mul_all(&self, factors: &[NCPoly]) -> NCPoly {
        let mut acc = NCPoly::one();
        for f in factors {
            acc = self.mul_polys(&acc, f);
        }
        acc
    }

    /// Evaluates a polynomial in letters mapped to elements, multiplying with the transmuted product.
    pub fn eval_in(&self, p: &NCPoly, image: &dyn Fn(Gen) -> Option<NCPoly>) -> Option<NCPoly> {
        let mut out = NCPoly::zero();
        for (w, c) in p.terms() {
            let factors: Option<Vec<NCPoly>> = w.iter().map(|&g| image(g)).collect();
            out.add_scaled(&self.mul_all(&factors?), c);
        }
        Some(out)
    }
}

impl Algebra for TransmutedAlgebra {
    fn mul_words(&self, a: &Word, b: &Word) -> NCPoly {
        if a.is_one() || b.is_one() {
            return self.host.pres().nf_word(&a.concat(b));
        }
        let key = (a.clone(), b.clone());
        if let Some(p) = self.memo.lock().unwrap().get(&key) {
            return p.clone();
        }
        let p = self.compute(a, b);
        self.memo.lock().unwrap().insert(key, p.clone());
        p
    }
}

/// The transmuted product tabulated on normal words of `H` up to `bound`.
pub struct Transmuted {
    pub algebra: TransmutedAlgebra,
    pub model: StructureConstantModel,
}

pub fn transmute(r: Arc<Dqs>, bound: usize) -> Transmuted {
    let algebra = TransmutedAlgebra::new(r);
    let pres = algebra.host.pres_arc().clone();
    let basis: Vec<Vec<Word>> = pres.normal_words(bound).into_iter().map(|w| vec![w]).collect();
    let mut model = StructureConstantModel::tabulate(vec![pres.clone()], basis.clone(), Some(bound), |a, b| {
        TensorElem::from_poly(&algebra.mul_words(&a[0], &b[0]))
    });
    let h = &algebra.host;
    for k in &basis {
        model.coproduct.insert(k.clone(), h.coproduct_word(&k[0]));
    }
    Transmuted { algebra, model }
}

/// Checks every relation of `target` under the transmuted product.
///
/// Base generators of `target` map in order to those of the host. A generator defined by
/// `g = p` maps to the value of `p` and must be grouplike; its inverse partner maps to the
/// transmuted inverse when that is a multiple of a host generator with an inverse.
pub fn reconcile(t: &TransmutedAlgebra, target: &Bundle) -> VerifyReport {
    let host = &*t.host;
    let hp = host.pres();
    let tp = &*target.pres;
    let mut rep = VerifyReport::new();
    let tbase = crate::catalog::base_generators(tp);
    let hbase = crate::catalog::base_generators(hp);
    let mut image: HashMap<Gen, NCPoly> = tbase.iter().zip(&hbase).map(|(&a, &b)| (a, NCPoly::gen(b))).collect();
    let mut defined = Vec::new();
    for rel in tp.relations() {
        let Some((w, c)) = rel.lhs.leading() else { continue };
        if rel.lhs.len() == 1 && w.len() == 1 && c.is_one() && !tbase.contains(&w[0]) {
            let g = w[0];
            let get = |x: Gen| image.get(&x).cloned();
            if let Some(e) = t.eval_in(&rel.rhs, &get) {
                image.insert(g, e.clone());
                defined.push((g, e, rel.text.clone()));
            }
        }
    }
    for (g, e, text) in &defined {
        let d = host.coproduct(e);
        let sq = TensorElem::from_pair(e, e);
        rep.push(
            &format!("transmuted {} grouplike", tp.name(*g)),
            text.clone(),
            if d == sq {
                Ok(())
            } else {
                Err(format!("Δ{} = {}", print::poly_in(e, hp), print::tensor_in(&d, &[hp, hp])))
            },
        );
        for &(a, b) in tp.inverses() {
            let partner = if a == *g {
                b
            } else if b == *g {
                a
            } else {
                continue;
            };
            if let Some(inv) = transmuted_inverse(t, e) {
                rep.push(
                    &format!("transmuted {} inverse", tp.name(partner)),
                    "",
                    if t.mul_polys(e, &inv) == NCPoly::one() && t.mul_polys(&inv, e) == NCPoly::one() {
                        image.insert(partner, inv);
                        Ok(())
                    } else {
                        Err(print::poly_in(&inv, hp))
                    },
                );
            }
        }
    }
    for rel in tp.relations() {
        if defined.iter().any(|(_, _, text)| text == &rel.text) {
            continue;
        }
        let get = |x: Gen| image.get(&x).cloned();
        let (l, r) = match (t.eval_in(&rel.lhs, &get), t.eval_in(&rel.rhs, &get)) {
            (Some(l), Some(r)) => (l, r),
            _ => {
                rep.push("transmuted relation", rel.text.clone(), Err("generator without an image".into()));
                continue;
            }
        };
        rep.push(
            "transmuted relation",
            rel.text.clone(),
            if l == r { Ok(()) } else { Err(format!("{} ≠ {}", print::poly_in(&l, hp), print::poly_in(&r, hp))) },
        );
    }
    if let Some(b) = &target.braided {
        for g in 0..tp.ngens() as Gen {
            let Some(img) = image.get(&g) else { continue };
            let want = b.gen_coproduct(g);
            let mut mapped = TensorElem::zero(2);
            let mut ok = true;
            for (k, c) in want.terms() {
                let get = |x: Gen| image.get(&x).cloned();
                let l = t.eval_in(&NCPoly::word(k[0].clone()), &get);
                let r = t.eval_in(&NCPoly::word(k[1].clone()), &get);
                match (l, r) {
                    (Some(l), Some(r)) => mapped.add_scaled(&TensorElem::from_pair(&l, &r), c),
                    _ => ok = false,
                }
            }
            let have = host.coproduct(img);
            rep.push(
                "transmuted coproduct",
                tp.name(g).to_string(),
                if ok && mapped == have {
                    Ok(())
                } else {
                    Err(format!("{} ≠ {}", print::tensor_in(&have, &[hp, hp]), print::tensor_in(&mapped, &[hp, hp])))
                },
            );
        }
    }
    rep
}

fn transmuted_inverse(t: &TransmutedAlgebra, e: &NCPoly) -> Option<NCPoly> {
    let p = t.pres();
    let (w, c) = e.leading()?;
    if e.len() != 1 || w.len() != 1 {
        return None;
    }
    let g = w[0];
    let partner = p.inverses().iter().find_map(|&(a, b)| {
        if a == g {
            Some(b)
        } else if b == g {
            Some(a)
        } else {
            None
        }
    })?;
    let scale = c.inverse().ok()?;
    Some(NCPoly::gen(partner).scale(&scale))
}
