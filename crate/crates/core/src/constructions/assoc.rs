use super::cross::{embed, embedded_relations, merged_names};
use crate::braided::{braided_mul, Action, Braiding, Coaction, Side};
use crate::error::Result;
use crate::freealg::{Gen, NCPoly, Presentation, Relation, Word};
use crate::hopf::HopfData;
use crate::scalar::Scalar;
use crate::tensor::TensorElem;
use crate::text::print;
use crate::verify::VerifyReport;
use std::collections::HashMap;
use std::sync::Arc;

/// The left cross product algebra `B ⋊ H`: `h b = (h₍₁₎ ▷ b) h₍₂₎`, carrier letters first.
pub fn smash_left(host: &HopfData, action: &Action) -> Result<Arc<Presentation>> {
    let hp = host.pres();
    let bp = action.carrier();
    let names = merged_names(bp, hp);
    let nb = bp.ngens() as Gen;
    let bmap: Vec<Gen> = (0..nb).collect();
    let hmap: Vec<Gen> = (nb..nb + hp.ngens() as Gen).collect();
    let mut relations = embedded_relations(bp, &bmap, &names);
    relations.extend(embedded_relations(hp, &hmap, &names));
    for b in 0..nb {
        for h in 0..hp.ngens() as Gen {
            let mut rhs = NCPoly::zero();
            for (k, c) in host.gen_coproduct(h).terms() {
                let moved = embed(&action.act_words(&k[0], &Word::gen(b)), &bmap);
                rhs.add_scaled(&moved.mul_free(&embed(&NCPoly::word(k[1].clone()), &hmap)), c);
            }
            let lhs = NCPoly::word(Word::from_slice(&[hmap[h as usize], b]));
            let text = format!("{} {} = cross", names[hmap[h as usize] as usize], names[b as usize]);
            relations.push(Relation { lhs, rhs, oriented: false, text });
        }
    }
    let mut inverses: Vec<(Gen, Gen)> = bp.inverses().to_vec();
    inverses.extend(hp.inverses().iter().map(|&(a, c)| (hmap[a as usize], hmap[c as usize])));
    Ok(Arc::new(Presentation::new(names, hp.field(), inverses, relations)?))
}

/// `Ψ(c ⊗ a) = c⁽⁻¹⁾ ▷ a ⊗ c⁽⁰⁾` from a left coaction on `C` and a left action on `A`.
struct LeftCrossedFlip {
    coaction: Arc<Coaction>,
    action: Arc<Action>,
}

impl Braiding for LeftCrossedFlip {
    fn source(&self) -> [&Presentation; 2] {
        [self.coaction.carrier(), self.action.carrier()]
    }

    fn braid_words(&self, c: &Word, a: &Word) -> TensorElem {
        let mut out = TensorElem::zero(2);
        for (c0, cm, s) in self.coaction.legs(c) {
            for (w, t) in self.action.act_words(&cm, a).terms() {
                out.add_term(vec![w.clone(), c0.clone()], &s * t);
            }
        }
        out
    }
}

/// Compares `(B ⋊ H) ⋊ H` with `B ⊗̲ (H ⋊ H)` on products of total degree `≤ bound`,
/// for a left module algebra `B` over a finite-dimensional `H`.
pub fn cross_associativity(host: &Arc<HopfData>, action: &Arc<Action>, bound: usize) -> Result<VerifyReport> {
    let hp = host.pres();
    let bp = action.carrier_arc().clone();
    let nb = bp.ngens();
    let nh = hp.ngens();

    let inner = smash_left(host, action)?;
    let mut tensor_action = HashMap::new();
    for h in 0..nh as Gen {
        for b in 0..nb as Gen {
            tensor_action.insert((h, b), action.act_words(&Word::gen(h), &Word::gen(b)));
        }
        for g in 0..nh as Gen {
            let ad = Action::adjoint(Side::Left, host.clone()).act_words(&Word::gen(h), &Word::gen(g));
            let shifted: Vec<Gen> = (nb as Gen..(nb + nh) as Gen).collect();
            tensor_action.insert((h, g + nb as Gen), embed(&ad, &shifted));
        }
    }
    let outer_action = Action::table(Side::Left, host.clone(), inner.clone(), tensor_action);
    let iterated = smash_left(host, &outer_action)?;

    let hh = smash_left(host, &Action::adjoint(Side::Left, host.clone()))?;
    let mut coact = Vec::new();
    for i in 0..2 * nh {
        let g = (i % nh) as Gen;
        let mut t = TensorElem::zero(2);
        for (k, c) in host.gen_coproduct(g).terms() {
            let shift: Vec<Gen> = (0..nh as Gen).map(|x| x + (i / nh * nh) as Gen).collect();
            let leg = embed(&NCPoly::word(k[1].clone()), &shift);
            t.add_scaled(&TensorElem::from_pair(&NCPoly::word(k[0].clone()), &leg), c);
        }
        coact.push(t);
    }
    let hh_coaction = Arc::new(Coaction::table(Side::Left, host.clone(), hh.clone(), coact)?);
    let psi = LeftCrossedFlip { coaction: hh_coaction, action: action.clone() };

    let split = |w: &Word| -> Vec<Word> {
        let cut = w.iter().position(|&g| g as usize >= nb).unwrap_or(w.len());
        let tail: Vec<Gen> = w.iter().skip(cut).map(|&g| g - nb as Gen).collect();
        vec![w.slice(0, cut), Word::from_slice(&tail)]
    };
    let to_keys = |p: &NCPoly| -> TensorElem {
        let mut t = TensorElem::zero(2);
        for (w, c) in p.terms() {
            t.add_term(split(w), c.clone());
        }
        t
    };
    let words = iterated.normal_words(bound);
    let mut rep = VerifyReport::new();
    let mut result = Ok(());
    'outer: for u in &words {
        for v in &words {
            if u.len() + v.len() > bound {
                continue;
            }
            let left = to_keys(&iterated.nf_word(&u.concat(v)));
            let right = braided_mul(
                &TensorElem::pure(split(u), Scalar::one()),
                &TensorElem::pure(split(v), Scalar::one()),
                &psi,
                &*bp,
                &*hh,
            );
            if left != right {
                result = Err(format!(
                    "{} · {}: {} ≠ {}",
                    print::word(u, iterated.names()),
                    print::word(v, iterated.names()),
                    print::tensor_in(&left, &[&bp, &hh]),
                    print::tensor_in(&right, &[&bp, &hh])
                ));
                break 'outer;
            }
        }
    }
    rep.push("iterated cross product equals braided tensor product", format!("degree ≤ {bound}"), result);
    Ok(rep)
}
