use braidkit::braided::{Action, ExplicitBraiding, Side};
use braidkit::catalog::load_builtin;
use braidkit::constructions::CrossedModule;
use braidkit::freealg::NCPoly;
use braidkit::hopf::{Bichar, Dqs, HopfData, Laws};
use braidkit::scalar::{FieldContext, Scalar};
use braidkit::tensor::TensorElem;
use braidkit::verify::*;
use std::sync::Arc;

fn check(name: &str, bound: usize) {
    let b = load_builtin(name, None).unwrap();
    let rep = verify_bundle(&b, bound);
    assert!(rep.passed(), "{name}:\n{}", rep.to_text());
}

#[test]
fn glq2_passes() {
    check("glq2", 3);
}

#[test]
fn aq2_passes() {
    check("aq2", 4);
}

#[test]
fn bglq2_passes() {
    check("bglq2", 3);
}

#[test]
fn braided_line_passes() {
    check("braided_line", 4);
}

#[test]
fn z2prime_passes() {
    check("z2prime", 4);
}

#[test]
fn superline_passes() {
    check("superline", 4);
}

#[test]
fn glq2_hopf_axioms_degree_four() {
    let b = load_builtin("glq2", None).unwrap();
    assert!(verify_hopf(b.hopf().unwrap(), 4).passed());
}

#[test]
fn ground_field_passes() {
    let k = HopfData::trivial(FieldContext::Transcendental);
    assert!(verify_hopf(&k, 4).passed());
}

#[test]
fn corrupted_antipode_is_caught() {
    let b = load_builtin("glq2", None).unwrap();
    let h = b.hopf().unwrap();
    let p = h.pres();
    let bad = h.with_antipode(p.gen_index("alpha").unwrap(), p.g("alpha"));
    let rep = verify_hopf(&bad, 2);
    assert!(!rep.passed());
    let fail = rep.failures().find(|c| c.name == "antipode").unwrap();
    assert!(fail.witness.is_some());
}

#[test]
fn corrupted_braiding_entry_is_caught() {
    let b = load_builtin("aq2", None).unwrap();
    let e = b.explicit_braiding.as_ref().unwrap();
    let p = &b.pres;
    let (x, y) = (p.gen_index("x").unwrap(), p.gen_index("y").unwrap());
    let q = p.q();
    let wrong = TensorElem::from_pair(&p.g("x"), &p.g("y"))
        .scale(&(&q * &q))
        .add(&TensorElem::from_pair(&p.g("y"), &p.g("x")).scale(&(&(&q * &q) - &Scalar::one())));
    let bad: ExplicitBraiding = e.with_entry(y, x, wrong);
    assert!(check_ybe(&bad).is_err() || check_functoriality(&bad).is_err());
    assert!(check_ybe(&**e).is_ok() && check_functoriality(&**e).is_ok());
}

#[test]
fn mismatched_crossed_module_is_caught() {
    let b = load_builtin("aq2", None).unwrap();
    let host = b.host().unwrap().hopf().unwrap().clone();
    let act = Arc::new(Action::trivial(Side::Right, host, b.pres.clone()));
    let x = CrossedModule::new(b.coaction().unwrap().clone(), act).unwrap();
    let rep = verify_crossed_module(&x, 1);
    let c = rep.get("crossed module compatibility").unwrap();
    assert!(!c.pass && c.witness.is_some());
}

fn z2_with(value: Scalar) -> Dqs {
    let b = load_builtin("z2prime", None).unwrap();
    let h = b.hopf().unwrap().clone();
    Dqs::with_antipode_inverse(Bichar::from_fn(h, Laws::Standard, |_, _| value.clone()))
}

#[test]
fn z2_bicharacters_by_truth_table() {
    for (v, ok) in
        [(Scalar::one(), true), (Scalar::from_int(-1), true), (Scalar::q(), false), (Scalar::from_int(2), false)]
    {
        let rep = verify_dqs(&z2_with(v.clone()), 3);
        assert_eq!(rep.passed(), ok, "R(g,g) = {v}\n{}", rep.to_text());
    }
}

#[test]
fn trivial_bicharacter_on_a_group_passes() {
    let b = load_builtin("catalog:group_bichar(3,2,0)", None).unwrap();
    let h = b.hopf().unwrap().clone();
    let d = Dqs::with_antipode_inverse(Bichar::trivial(h, Laws::Standard));
    assert!(verify_dqs(&d, 3).passed());
}

#[test]
fn z2_crossed_module_by_truth_table() {
    let z = load_builtin("z2prime", None).unwrap();
    let h = z.hopf().unwrap().clone();
    let p = h.pres();
    let co = braidkit::braided::Coaction::regular(Side::Left, h.clone());
    let ad = Action::adjoint(Side::Left, h.clone());
    for w in [NCPoly::one(), p.g("g")] {
        for k in [NCPoly::one(), p.g("g")] {
            let tw = ad.act(&k, &w);
            assert_eq!(tw, w);
            assert_eq!(co.coact(&w), TensorElem::from_pair(&w, &w));
        }
    }
}
