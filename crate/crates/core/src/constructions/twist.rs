use crate::braided::{Ambient, BraidedHopf, Side};
use crate::error::{Error, Result};
use crate::freealg::{NCPoly, Word};
use crate::hopf::{dual_twist_hopf, Bichar, Cocycle, Dqs, Functional, HopfData, Laws};
use crate::model::StructureConstantModel;
use crate::scalar::Scalar;
use crate::tensor::TensorElem;
use std::collections::BTreeMap;
use std::sync::Arc;

/// Twists a braided group in right `H`-comodules by a cocycle on `H`.
///
/// `b ·_χ c = b⁽⁰⁾c⁽⁰⁾ χ⁻¹(b⁽¹⁾ ⊗ c⁽¹⁾)` and `Δ̲_χ b = b₍₁₎⁽⁰⁾ ⊗ b₍₂₎⁽⁰⁾ χ(b₍₁₎⁽¹⁾ ⊗ b₍₂₎⁽¹⁾)`;
/// the antipode and counit are those of `B`.
pub fn twist_braided(b: &BraidedHopf, chi: &Cocycle, bound: usize) -> Result<StructureConstantModel> {
    let coaction = match b.ambient() {
        Ambient::Comodule { coaction, .. } if coaction.side() == Side::Right => coaction.clone(),
        _ => return Err(Error::CoverageGap("twisting needs a right comodule braided group".into())),
    };
    let pres = b.pres_arc().clone();
    let words = pres.normal_words(bound);
    let keys: Vec<Vec<Word>> = words.iter().map(|w| vec![w.clone()]).collect();
    let mut model = StructureConstantModel::tabulate(vec![pres.clone()], keys, Some(bound), |x, y| {
        let mut out = NCPoly::zero();
        for (x0, x1, a) in coaction.legs(&x[0]) {
            for (y0, y1, c) in coaction.legs(&y[0]) {
                let s = chi.inv.eval_words(&x1, &y1);
                if !s.is_zero() {
                    out.add_scaled(&pres.nf_word(&x0.concat(&y0)), &(&(&a * &c) * &s));
                }
            }
        }
        TensorElem::from_poly(&out)
    });
    let mut coproduct = BTreeMap::new();
    let mut antipode = BTreeMap::new();
    for w in &words {
        let mut d = TensorElem::zero(2);
        for (k, c) in b.coproduct_word(w).terms() {
            for (l0, l1, a) in coaction.legs(&k[0]) {
                for (r0, r1, e) in coaction.legs(&k[1]) {
                    let s = chi.chi.eval_words(&l1, &r1);
                    if !s.is_zero() {
                        d.add_term(vec![l0.clone(), r0.clone()], &(&(c * &a) * &e) * &s);
                    }
                }
            }
        }
        coproduct.insert(vec![w.clone()], d);
        antipode.insert(vec![w.clone()], TensorElem::from_poly(&b.antipode_word(w)));
    }
    model.coproduct = coproduct;
    model.antipode = antipode;
    Ok(model)
}

/// Splitting of an antisymmetric form `ω` on `(Z/m)^n` as `ω = 2ω₁ + ω₀`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ColourSplit {
    /// `χ = q^ω₁` twists `q^ω` to `q^ω₀`, with `ω₀` valued in `{0, m/2}`.
    Split { chi: Vec<Vec<i64>>, beta0: Vec<Vec<i64>> },
    /// `m ≡ 0 mod 4`.
    NoDecomposition,
}

pub fn colour_sqrt_decompose(m: u32, omega: &[Vec<i64>]) -> ColourSplit {
    let m = m as i64;
    let n = omega.len();
    let r = |x: i64| x.rem_euclid(m);
    if m % 2 == 1 {
        let half = (m + 1) / 2;
        let chi = omega.iter().map(|row| row.iter().map(|&x| r(half * x)).collect()).collect();
        return ColourSplit::Split { chi, beta0: vec![vec![0; n]; n] };
    }
    if m % 4 == 0 {
        return ColourSplit::NoDecomposition;
    }
    let k = m / 2;
    let mut chi = vec![vec![0; n]; n];
    let mut beta0 = vec![vec![0; n]; n];
    for i in 0..n {
        beta0[i][i] = r(omega[i][i]);
        for j in i + 1..n {
            let x = r(omega[i][j]);
            let z = if x % 2 == 0 { 0 } else { k };
            let y = r((x - z) / 2);
            chi[i][j] = y;
            chi[j][i] = r(-y);
            beta0[i][j] = z;
            beta0[j][i] = z;
        }
    }
    ColourSplit::Split { chi, beta0 }
}

/// `χ(g_i ⊗ g_j) = q^e_ij` on a group-with-bicharacter host.
pub fn exponent_cocycle(host: &Arc<HopfData>, e: &[Vec<i64>]) -> Result<Cocycle> {
    let n = host.pres().ngens();
    if e.len() != n || e.iter().any(|row| row.len() != n) {
        return Err(Error::AlphabetMismatch);
    }
    let q = host.pres().q();
    let mut table = vec![vec![Scalar::zero(); e.len()]; e.len()];
    for (i, row) in e.iter().enumerate() {
        for (j, &x) in row.iter().enumerate() {
            table[i][j] = q.pow(x)?;
        }
    }
    Ok(Cocycle::with_antipode_inverse(Bichar::new(host.clone(), table, Laws::Standard)))
}

/// The twisted bicharacter `β_χ` on the whole finite group.
pub fn twisted_bichar(r: &Dqs, chi: &Cocycle) -> Result<BTreeMap<(Word, Word), Scalar>> {
    Ok(dual_twist_hopf(r, chi, None)?.r)
}
