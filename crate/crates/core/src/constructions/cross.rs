use crate::braided::{Action, BraidedHopf, Coaction, Side};
use crate::error::{Error, Result};
use crate::freealg::{Gen, NCPoly, Presentation, Relation, Word};
use crate::hopf::{finite_basis, Dqs, Functional, HopfData, QuasiTriangular};
use crate::scalar::Scalar;
use crate::tensor::TensorElem;
use std::collections::HashSet;
use std::sync::Arc;

/// An ordinary Hopf algebra on the alphabet `H ⊔ B`, with the two embeddings.
#[derive(Clone, Debug)]
pub struct CrossProduct {
    pub hopf: Arc<HopfData>,
    pub host_map: Vec<Gen>,
    pub carrier_map: Vec<Gen>,
}

impl CrossProduct {
    pub fn pres(&self) -> &Presentation {
        self.hopf.pres()
    }

    pub fn embed_host(&self, p: &NCPoly) -> NCPoly {
        self.pres().normal_form(&embed(p, &self.host_map))
    }

    pub fn embed_carrier(&self, p: &NCPoly) -> NCPoly {
        self.pres().normal_form(&embed(p, &self.carrier_map))
    }
}

pub(crate) fn embed_word(w: &Word, map: &[Gen]) -> Word {
    Word::from_slice(&w.iter().map(|&g| map[g as usize]).collect::<Vec<_>>())
}

pub(crate) fn embed(p: &NCPoly, map: &[Gen]) -> NCPoly {
    p.terms().map(|(w, c)| (embed_word(w, map), c.clone())).collect()
}

/// Names for `second` that avoid those of `first`, priming on collision.
pub(crate) fn merged_names(first: &Presentation, second: &Presentation) -> Vec<String> {
    let mut taken: HashSet<String> = first.names().iter().cloned().collect();
    let mut names: Vec<String> = first.names().to_vec();
    for n in second.names() {
        let mut m = n.clone();
        while taken.contains(&m) {
            m.push('\'');
        }
        taken.insert(m.clone());
        names.push(m);
    }
    names
}

/// Relations of `p` as written, without the unit relations that its inverse pairs add.
pub(crate) fn own_relations(p: &Presentation) -> &[Relation] {
    let rels = p.relations();
    &rels[..rels.len() - 2 * p.inverses().len()]
}

pub(crate) fn embedded_relations(p: &Presentation, map: &[Gen], names: &[String]) -> Vec<Relation> {
    own_relations(p)
        .iter()
        .map(|r| Relation {
            lhs: embed(&r.lhs, map),
            rhs: embed(&r.rhs, map),
            oriented: r.oriented,
            text: rename_text(&r.text, p.names(), map, names),
        })
        .collect()
}

fn rename_text(text: &str, old: &[String], map: &[Gen], names: &[String]) -> String {
    if old.iter().zip(map).all(|(o, &g)| *o == names[g as usize]) {
        return text.to_string();
    }
    let mut out = String::new();
    let mut word = String::new();
    let flush = |word: &mut String, out: &mut String| {
        match old.iter().position(|o| o == word) {
            Some(i) => out.push_str(&names[map[i] as usize]),
            None => out.push_str(word),
        }
        word.clear();
    };
    for ch in text.chars() {
        if ch.is_alphanumeric() || ch == '_' || ch == '\'' {
            word.push(ch);
        } else {
            flush(&mut word, &mut out);
            out.push(ch);
        }
    }
    flush(&mut word, &mut out);
    out
}

/// How carrier and host letters commute past each other.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CrossRule {
    /// `b h = h₍₁₎ b⁽⁰⁾ R(b⁽¹⁾ ⊗ h₍₂₎)`.
    CoactRight,
    /// `h b = R(h₍₁₎ ⊗ b⁽⁻¹⁾) b⁽⁰⁾ h₍₂₎`.
    CoactLeft,
    /// `h b = (h₍₁₎ ▷ b) h₍₂₎`.
    ActLeft,
    /// `b h = h₍₁₎ (b ◁ h₍₂₎)`.
    ActRight,
}

/// How the coproduct and antipode of a carrier generator pick up host factors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoRule {
    /// `Δb = b₍₁₎⁽⁰⁾ ⊗ b₍₁₎⁽¹⁾ b₍₂₎`, `Sb = (S̲b⁽⁰⁾) S b⁽¹⁾`.
    CoactRight,
    /// `Δb = b₍₁₎ b₍₂₎⁽⁻¹⁾ ⊗ b₍₂₎⁽⁰⁾`, `Sb = (S b⁽⁻¹⁾) S̲b⁽⁰⁾`.
    CoactLeft,
    /// `Δb = b₍₁₎ ℛ⁽²⁾ ⊗ ℛ⁽¹⁾ ▷ b₍₂₎`, `Sb = ((u ℛ⁽¹⁾) ▷ S̲b) S ℛ⁽²⁾`.
    ActLeft,
    /// `Δb = b₍₁₎ ◁ ℛ⁽¹⁾ ⊗ ℛ⁽²⁾ b₍₂₎`, `Sb = (S ℛ⁽²⁾)(S̲b ◁ (ℛ⁽¹⁾ v))`.
    ActRight,
}

#[derive(Clone, Default)]
pub struct CrossData {
    pub coaction: Option<Arc<Coaction>>,
    pub r: Option<Arc<Dqs>>,
    pub action: Option<Arc<Action>>,
    pub rmat: Option<Arc<QuasiTriangular>>,
}

impl CrossData {
    fn coaction(&self) -> Result<&Coaction> {
        self.coaction.as_deref().ok_or_else(|| Error::Missing("coaction".into()))
    }

    fn r(&self) -> Result<&Dqs> {
        self.r.as_deref().ok_or_else(|| Error::Missing("dual-quasitriangular structure".into()))
    }

    fn action(&self) -> Result<&Action> {
        self.action.as_deref().ok_or_else(|| Error::Missing("action".into()))
    }

    fn rmat(&self) -> Result<&QuasiTriangular> {
        self.rmat.as_deref().ok_or_else(|| Error::Missing("quasitriangular structure".into()))
    }
}

fn host_legs(h: &HopfData, g: Gen) -> Vec<(Word, Word, Scalar)> {
    h.gen_coproduct(g).terms().map(|(k, c)| (k[0].clone(), k[1].clone(), c.clone())).collect()
}

/// The cross product and cross coproduct `B ⋊ H` on generators.
pub fn cross_product(
    host: &Arc<HopfData>,
    b: &BraidedHopf,
    rule: CrossRule,
    co: CoRule,
    data: &CrossData,
) -> Result<CrossProduct> {
    let hp = host.pres();
    let bp = b.pres();
    let host_first = matches!(rule, CrossRule::CoactRight | CrossRule::ActRight);
    let (names, host_map, carrier_map): (Vec<String>, Vec<Gen>, Vec<Gen>) = if host_first {
        let n = hp.ngens() as Gen;
        (merged_names(hp, bp), (0..n).collect(), (n..n + bp.ngens() as Gen).collect())
    } else {
        let n = bp.ngens() as Gen;
        let names = merged_names(bp, hp);
        (names, (n..n + hp.ngens() as Gen).collect(), (0..n).collect())
    };
    let eh = |p: &NCPoly| embed(p, &host_map);
    let eb = |p: &NCPoly| embed(p, &carrier_map);
    let ehw = |w: &Word| NCPoly::word(embed_word(w, &host_map));
    let ebw = |w: &Word| NCPoly::word(embed_word(w, &carrier_map));

    let mut relations = if host_first {
        let mut r = embedded_relations(hp, &host_map, &names);
        r.extend(embedded_relations(bp, &carrier_map, &names));
        r
    } else {
        let mut r = embedded_relations(bp, &carrier_map, &names);
        r.extend(embedded_relations(hp, &host_map, &names));
        r
    };
    for bg in 0..bp.ngens() as Gen {
        for hg in 0..hp.ngens() as Gen {
            let bw = Word::gen(bg);
            let mut rhs = NCPoly::zero();
            match rule {
                CrossRule::CoactRight => {
                    let (c, r) = (data.coaction()?, data.r()?);
                    for (h1, h2, a) in host_legs(host, hg) {
                        for (b0, b1, s) in c.legs(&bw) {
                            let v = r.r.eval_words(&b1, &h2);
                            rhs.add_scaled(&ehw(&h1).mul_free(&ebw(&b0)), &(&(&a * &s) * &v));
                        }
                    }
                }
                CrossRule::CoactLeft => {
                    let (c, r) = (data.coaction()?, data.r()?);
                    for (h1, h2, a) in host_legs(host, hg) {
                        for (b0, bm, s) in c.legs(&bw) {
                            let v = r.r.eval_words(&h1, &bm);
                            rhs.add_scaled(&ebw(&b0).mul_free(&ehw(&h2)), &(&(&a * &s) * &v));
                        }
                    }
                }
                CrossRule::ActLeft => {
                    let act = data.action()?;
                    for (h1, h2, a) in host_legs(host, hg) {
                        rhs.add_scaled(&eb(&act.act_words(&h1, &bw)).mul_free(&ehw(&h2)), &a);
                    }
                }
                CrossRule::ActRight => {
                    let act = data.action()?;
                    for (h1, h2, a) in host_legs(host, hg) {
                        rhs.add_scaled(&ehw(&h1).mul_free(&eb(&act.act_words(&h2, &bw))), &a);
                    }
                }
            }
            let (bl, hl) = (carrier_map[bg as usize], host_map[hg as usize]);
            let lhs = if host_first { [bl, hl] } else { [hl, bl] };
            let text = format!("{} {} = cross", names[lhs[0] as usize], names[lhs[1] as usize]);
            relations.push(Relation { lhs: NCPoly::word(Word::from_slice(&lhs)), rhs, oriented: false, text });
        }
    }
    let mut inverses: Vec<(Gen, Gen)> = Vec::new();
    inverses.extend(hp.inverses().iter().map(|&(a, c)| (host_map[a as usize], host_map[c as usize])));
    inverses.extend(bp.inverses().iter().map(|&(a, c)| (carrier_map[a as usize], carrier_map[c as usize])));
    let pres = Arc::new(Presentation::new(names, hp.field(), inverses, relations)?);
    let nf = |p: &NCPoly| pres.normal_form(p);
    let pair = |a: &NCPoly, c: &NCPoly| TensorElem::from_pair(&nf(a), &nf(c));

    let n = pres.ngens();
    let mut coproduct = vec![TensorElem::zero(2); n];
    let mut counit = vec![Scalar::zero(); n];
    let mut antipode = vec![NCPoly::zero(); n];
    for hg in 0..hp.ngens() as Gen {
        let i = host_map[hg as usize] as usize;
        let mut d = TensorElem::zero(2);
        for (h1, h2, a) in host_legs(host, hg) {
            d.add_scaled(&pair(&ehw(&h1), &ehw(&h2)), &a);
        }
        coproduct[i] = d;
        counit[i] = host.gen_counit(hg).clone();
        antipode[i] = eh(host.gen_antipode(hg));
    }
    if matches!(co, CoRule::ActLeft | CoRule::ActRight) && finite_basis(host, None).is_err() {
        return Err(Error::InfiniteHost);
    }
    for bg in 0..bp.ngens() as Gen {
        let i = carrier_map[bg as usize] as usize;
        let bw = Word::gen(bg);
        let sb = b.gen_antipode(bg);
        let mut d = TensorElem::zero(2);
        let mut s = NCPoly::zero();
        match co {
            CoRule::CoactRight => {
                let c = data.coaction()?;
                for (k, a) in b.gen_coproduct(bg).terms() {
                    for (b0, b1, t) in c.legs(&k[0]) {
                        d.add_scaled(&pair(&ebw(&b0), &ehw(&b1).mul_free(&ebw(&k[1]))), &(a * &t));
                    }
                }
                for (b0, b1, t) in c.legs(&bw) {
                    s.add_scaled(&eb(&b.antipode_word(&b0)).mul_free(&eh(&host.antipode_word(&b1))), &t);
                }
            }
            CoRule::CoactLeft => {
                let c = data.coaction()?;
                for (k, a) in b.gen_coproduct(bg).terms() {
                    for (b0, bm, t) in c.legs(&k[1]) {
                        d.add_scaled(&pair(&ebw(&k[0]).mul_free(&ehw(&bm)), &ebw(&b0)), &(a * &t));
                    }
                }
                for (b0, bm, t) in c.legs(&bw) {
                    s.add_scaled(&eh(&host.antipode_word(&bm)).mul_free(&eb(&b.antipode_word(&b0))), &t);
                }
            }
            CoRule::ActLeft => {
                let (act, rm) = (data.action()?, data.rmat()?);
                let u = rm.u();
                for (k, a) in b.gen_coproduct(bg).terms() {
                    for (rk, t) in rm.r.terms() {
                        let right = act.act_words(&rk[0], &k[1]);
                        d.add_scaled(&pair(&ebw(&k[0]).mul_free(&ehw(&rk[1])), &eb(&right)), &(a * t));
                    }
                }
                for (rk, t) in rm.r.terms() {
                    let ur = host.mul(&u, &NCPoly::word(rk[0].clone()));
                    s.add_scaled(&eb(&act.act(&ur, sb)).mul_free(&eh(&host.antipode_word(&rk[1]))), t);
                }
            }
            CoRule::ActRight => {
                let (act, rm) = (data.action()?, data.rmat()?);
                let v = rm.v();
                for (k, a) in b.gen_coproduct(bg).terms() {
                    for (rk, t) in rm.r.terms() {
                        let left = act.act_words(&rk[0], &k[0]);
                        d.add_scaled(&pair(&eb(&left), &ehw(&rk[1]).mul_free(&ebw(&k[1]))), &(a * t));
                    }
                }
                for (rk, t) in rm.r.terms() {
                    let rv = host.mul(&NCPoly::word(rk[0].clone()), &v);
                    s.add_scaled(&eh(&host.antipode_word(&rk[1])).mul_free(&eb(&act.act(&rv, sb))), t);
                }
            }
        }
        coproduct[i] = d;
        counit[i] = b.gen_counit(bg).clone();
        antipode[i] = nf(&s);
    }
    let hopf = Arc::new(HopfData::new(pres, coproduct, counit, antipode));
    Ok(CrossProduct { hopf, host_map, carrier_map })
}

/// Bosonisation of a braided group in right or left `H`-comodules.
pub fn bosonise_comodule(b: &BraidedHopf, coaction: &Arc<Coaction>, r: &Arc<Dqs>) -> Result<CrossProduct> {
    let (rule, co) = match coaction.side() {
        Side::Right => (CrossRule::CoactRight, CoRule::CoactRight),
        Side::Left => (CrossRule::CoactLeft, CoRule::CoactLeft),
    };
    let data = CrossData { coaction: Some(coaction.clone()), r: Some(r.clone()), ..Default::default() };
    cross_product(coaction.host_arc(), b, rule, co, &data)
}

/// Bosonisation of a braided group in left or right `H`-modules.
pub fn bosonise_module(b: &BraidedHopf, action: &Arc<Action>, rmat: &Arc<QuasiTriangular>) -> Result<CrossProduct> {
    let (rule, co) = match action.side() {
        Side::Left => (CrossRule::ActLeft, CoRule::ActLeft),
        Side::Right => (CrossRule::ActRight, CoRule::ActRight),
    };
    let data = CrossData { action: Some(action.clone()), rmat: Some(rmat.clone()), ..Default::default() };
    cross_product(action.host_arc(), b, rule, co, &data)
}
