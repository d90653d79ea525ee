use super::loader::{base_generators, carrier_parts};
use crate::braided::{Braiding, Side};
use crate::error::{Error, Result};
use crate::freealg::{Gen, Word};
use crate::hopf::{complete_table, Bichar, HopfData, Laws};
use crate::linalg::{solve, Equation};
use crate::scalar::Scalar;
use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

/// Recovers the host bicharacter from a carrier's coaction and its explicit braiding.
///
/// Every base entry `R(s ⊗ t)` is an unknown; comparing the comodule braiding with the
/// explicit table on carrier generators gives a linear system that must have a unique solution.
pub fn derive_rmatrix(host: &Arc<HopfData>, carrier: &str) -> Result<Bichar> {
    let (pres, coaction, explicit) = carrier_parts(carrier, host)?;
    let base = base_generators(host.pres());
    let var_of: HashMap<(Gen, Gen), usize> =
        base.iter().flat_map(|&a| base.iter().map(move |&b| (a, b))).enumerate().map(|(i, k)| (k, i)).collect();
    let mut eqs = Vec::new();
    for v in 0..pres.ngens() as Gen {
        for w in 0..pres.ngens() as Gen {
            let target = explicit.braid_words(&Word::gen(v), &Word::gen(w));
            let mut rows: HashMap<(Word, Word), Equation> = HashMap::new();
            for (vk, vh, vc) in coaction.legs(&Word::gen(v)) {
                for (wk, wh, wc) in coaction.legs(&Word::gen(w)) {
                    let (s, t) = match coaction.side() {
                        Side::Right => (&vh, &wh),
                        Side::Left => (&wh, &vh),
                    };
                    let c = &vc * &wc;
                    let e = rows.entry((wk.clone(), vk.clone())).or_default();
                    if s.is_one() || t.is_one() {
                        let rest = if s.is_one() { t } else { s };
                        e.rhs = &e.rhs - &(&c * &host.counit_word(rest));
                    } else if s.len() == 1 && t.len() == 1 {
                        let var = var_of
                            .get(&(s[0], t[0]))
                            .ok_or_else(|| Error::NoSolution("coaction legs leave the base generators".into()))?;
                        e.add(*var, &c);
                    } else {
                        return Err(Error::NoSolution("coaction legs must be linear in the host".into()));
                    }
                }
            }
            let keys: BTreeSet<(Word, Word)> =
                rows.keys().cloned().chain(target.terms().map(|(k, _)| (k[0].clone(), k[1].clone()))).collect();
            for k in keys {
                let mut e = rows.remove(&k).unwrap_or_default();
                let goal = target.coeff(&[k.0.clone(), k.1.clone()]);
                e.rhs = &e.rhs + &goal;
                eqs.push(e);
            }
        }
    }
    let sol = solve(var_of.len(), eqs)?
        .ok_or_else(|| Error::NoSolution("explicit braiding is not of comodule form".into()))?;
    if !sol.is_unique() {
        return Err(Error::NoSolution("the explicit braiding does not determine every entry".into()));
    }
    let known: HashMap<(Gen, Gen), Scalar> = var_of.iter().map(|(&k, &i)| (k, sol.values[i].clone())).collect();
    let table = complete_table(host, &known, &base, Laws::Standard)?;
    Ok(Bichar::new(host.clone(), table, Laws::Standard))
}
