use braidkit::braided::Algebra;
use braidkit::catalog::load_builtin;
use braidkit::constructions::{reconcile, transmute};

#[test]
fn transmuted_glq2_matches_bglq2() {
    let glq2 = load_builtin("glq2", None).unwrap();
    let bglq2 = load_builtin("bglq2", None).unwrap();
    let t = transmute(glq2.dqs().unwrap().clone(), 3);
    assert!(t.model.check_associativity().is_ok());
    let rep = reconcile(&t.algebra, &bglq2);
    println!("{}", rep.to_text());
    assert!(rep.passed());
}

use braidkit::constructions::bosonise;
use braidkit::verify::verify_hopf;

#[test]
fn bosonisations_are_hopf() {
    for (name, deg) in [("braided_line", 4), ("superline", 4), ("aq2", 3)] {
        let b = load_builtin(name, None).unwrap();
        let x = bosonise(&b).unwrap();
        println!("{name}: {:?}", x.pres().names());
        let rep = verify_hopf(&x.hopf, deg);
        if !rep.passed() {
            println!("{}", rep.to_text());
        }
        assert!(rep.passed(), "{name}");
    }
}

#[test]
fn braided_line_bosonises_to_quantum_plane() {
    let b = load_builtin("braided_line", None).unwrap();
    let x = bosonise(&b).unwrap();
    let p = x.pres();
    let q = p.q();
    let g = p.g("g");
    let t = p.g("theta");
    assert_eq!(p.mul(&g, &t), p.mul(&t, &g).scale(&q));
}

mod crossed {
    use braidkit::braided::{Action, Coaction, Side};
    use braidkit::catalog::load_builtin;
    use braidkit::constructions::*;
    use braidkit::hopf::{HopfData, QuasiTriangular};
    use braidkit::scalar::FieldContext;
    use braidkit::tensor::TensorElem;
    use braidkit::verify::{compare_hopf, verify_crossed_module, verify_hopf};
    use std::sync::Arc;

    #[test]
    fn biproduct_of_induced_aq2_is_bosonisation() {
        let aq2 = load_builtin("aq2", None).unwrap();
        let host = aq2.host().unwrap().clone();
        let from = Inducing::Comodule { coaction: aq2.coaction().unwrap().clone(), r: host.dqs().unwrap().clone() };
        let x = induce_crossed_module(&from).unwrap();
        let rep = verify_crossed_module(&x, 2);
        assert!(rep.passed(), "{}", rep.to_text());
        assert!(check_induced_image(&x, &from).is_err());
        let bi = biproduct(&x, aq2.braided().unwrap()).unwrap();
        let bos = bosonise(&aq2).unwrap();
        let rep = compare_hopf(&bi.hopf, &bos.hopf, 3);
        assert!(rep.passed(), "{}", rep.to_text());
    }

    #[test]
    fn regular_adjoint_z2_is_not_induced() {
        let z = load_builtin("z2prime", None).unwrap();
        let h = z.hopf().unwrap().clone();
        let x = CrossedModule::new(
            Arc::new(Coaction::regular(Side::Left, h.clone())),
            Arc::new(Action::adjoint(Side::Left, h.clone())),
        )
        .unwrap();
        let rep = verify_crossed_module(&x, 2);
        assert!(rep.passed(), "{}", rep.to_text());
        let from = Inducing::Module { action: x.action.clone(), rmat: z.quasitriangular().unwrap().clone() };
        let c = check_induced_image(&x, &from).unwrap();
        assert!(!c.holds);
        assert_eq!(c.witness.as_deref(), Some("g"));
    }

    #[test]
    fn trivial_host_is_induced() {
        let k = Arc::new(HopfData::trivial(FieldContext::Transcendental));
        let rmat = Arc::new(QuasiTriangular::new(k.clone(), TensorElem::unit(2)));
        let x = CrossedModule::new(
            Arc::new(Coaction::regular(Side::Left, k.clone())),
            Arc::new(Action::adjoint(Side::Left, k.clone())),
        )
        .unwrap();
        let from = Inducing::Module { action: x.action.clone(), rmat };
        assert!(check_induced_image(&x, &from).unwrap().holds);
    }

    #[test]
    fn superline_induced_crossed_module_biproduct() {
        let s = load_builtin("superline", None).unwrap();
        let from = Inducing::Module {
            action: s.action().unwrap().clone(),
            rmat: s.host().unwrap().quasitriangular().unwrap().clone(),
        };
        let x = induce_crossed_module(&from).unwrap();
        assert!(verify_crossed_module(&x, 2).passed());
        assert!(check_induced_image(&x, &from).unwrap().holds);
        let bi = biproduct(&x, s.braided().unwrap()).unwrap();
        let rep = verify_hopf(&bi.hopf, 4);
        assert!(rep.passed(), "{}", rep.to_text());
        let p = bi.pres();
        assert_eq!(p.mul(&p.g("g"), &p.g("theta")), p.mul(&p.g("theta"), &p.g("g")).neg());
    }
}

mod automorphism {
    use braidkit::braided::{braided_mul, Coaction, ComoduleBraiding, Side};
    use braidkit::catalog::load_builtin;
    use braidkit::constructions::*;
    use braidkit::freealg::Word;
    use braidkit::scalar::Scalar;
    use braidkit::tensor::TensorElem;
    use std::sync::Arc;

    fn q(n: i64) -> Scalar {
        Scalar::q().pow(n).unwrap()
    }

    #[test]
    fn example_cross_relations() {
        let aq2 = load_builtin("aq2", None).unwrap();
        let glq2 = aq2.host().unwrap();
        let g = automorphism_braided_group(glq2.dqs().unwrap().clone(), aq2.braided().unwrap().clone(), 2).unwrap();
        let hp = glq2.pres.clone();
        let bp = aq2.pres.clone();
        let w = |h: &str, c: &str| {
            let hw = if h.is_empty() { Word::one() } else { Word::gen(hp.gen_index(h).unwrap()) };
            let cw = if c.is_empty() { Word::one() } else { Word::gen(bp.gen_index(c).unwrap()) };
            (hw, cw)
        };
        let t = |terms: &[(&str, &str, Scalar)]| {
            let mut e = TensorElem::zero(2);
            for (h, c, s) in terms {
                let (hw, cw) = w(h, c);
                e.add_term(vec![hw, cw], s.clone());
            }
            e
        };
        let rel = |c: &str, h: &str| g.cross_relation(bp.gen_index(c).unwrap(), hp.gen_index(h).unwrap());
        let one = Scalar::one();
        let qq = &q(1) - &q(-1);
        assert_eq!(rel("x", "alpha"), t(&[("alpha", "x", one.clone())]));
        assert_eq!(rel("y", "alpha"), t(&[("beta", "x", qq.clone()), ("alpha", "y", one.clone())]));
        assert_eq!(rel("x", "beta"), t(&[("beta", "x", q(-1))]));
        assert_eq!(rel("y", "beta"), t(&[("beta", "y", q(1))]));
        assert_eq!(rel("x", "gamma"), t(&[("gamma", "x", q(1))]));
        let c1 = &one - &q(-2);
        assert_eq!(rel("y", "gamma"), t(&[("delta", "x", c1.clone()), ("alpha", "x", -&c1), ("gamma", "y", q(-1))]));
        assert_eq!(rel("x", "delta"), t(&[("delta", "x", one.clone())]));
        assert_eq!(rel("y", "delta"), t(&[("delta", "y", one.clone()), ("beta", "x", -&(&q(-2) * &qq))]));

        let dx = g.coproduct_of(&vec![Word::one(), Word::gen(0)]);
        let key = |a: (Word, Word), b: (Word, Word)| vec![a.0, a.1, b.0, b.1];
        let mut want = TensorElem::zero(4);
        want.add_term(key(w("", "x"), w("alpha", "")), one.clone());
        want.add_term(key(w("", "y"), w("gamma", "")), one.clone());
        want.add_term(key(w("", ""), w("", "x")), one.clone());
        assert_eq!(dx, want);
        let dy = g.coproduct_of(&vec![Word::one(), Word::gen(1)]);
        let mut want = TensorElem::zero(4);
        want.add_term(key(w("", "x"), w("beta", "")), one.clone());
        want.add_term(key(w("", "y"), w("delta", "")), one.clone());
        want.add_term(key(w("", ""), w("", "y")), one);
        assert_eq!(dy, want);
    }

    #[test]
    fn product_matches_braided_tensor_product() {
        let aq2 = load_builtin("aq2", None).unwrap();
        let glq2 = aq2.host().unwrap();
        let r = glq2.dqs().unwrap().clone();
        let g = automorphism_braided_group(r.clone(), aq2.braided().unwrap().clone(), 3).unwrap();
        let adj = Arc::new(Coaction::adjoint(Side::Right, glq2.hopf().unwrap().clone()));
        let psi = ComoduleBraiding::new(aq2.coaction().unwrap().clone(), adj, r.clone()).unwrap();
        let tr = TransmutedAlgebra::new(r);
        for ((x, y), v) in &g.model.product {
            let bm = braided_mul(
                &TensorElem::pure(x.clone(), Scalar::one()),
                &TensorElem::pure(y.clone(), Scalar::one()),
                &psi,
                &tr,
                &*aq2.pres,
            );
            assert_eq!(&bm, v, "{}", g.model.show_key(x));
        }
        assert!(g.model.check_associativity().is_ok());
    }
}

#[test]
fn iterated_cross_product_is_braided_tensor_product() {
    let s = load_builtin("superline", None).unwrap();
    let h = s.host().unwrap().hopf().unwrap().clone();
    let rep = braidkit::constructions::cross_associativity(&h, s.action().unwrap(), 3).unwrap();
    assert!(rep.passed(), "{}", rep.to_text());
}

mod mirrors {
    use braidkit::braided::{Action, Ambient, BraidedHopf, Coaction, Side};
    use braidkit::catalog::load_builtin;
    use braidkit::constructions::*;
    use braidkit::tensor::TensorElem;
    use braidkit::verify::{verify_braided_hopf, verify_hopf};
    use std::collections::HashMap;
    use std::sync::Arc;

    fn rebuilt(b: &BraidedHopf, ambient: Ambient) -> BraidedHopf {
        BraidedHopf::new(
            b.pres_arc().clone(),
            b.coproduct_table().to_vec(),
            b.counit_table().to_vec(),
            b.antipode_table().to_vec(),
            ambient,
        )
        .unwrap()
    }

    #[test]
    fn left_comodule_braided_line() {
        let bl = load_builtin("braided_line", None).unwrap();
        let host = bl.host().unwrap();
        let h = host.hopf().unwrap().clone();
        let p = bl.pres.clone();
        let g2 = h.pres().pow(&h.pres().g("g"), 2);
        let co = Arc::new(
            Coaction::table(Side::Left, h.clone(), p.clone(), vec![TensorElem::from_pair(&g2, &p.g("theta"))]).unwrap(),
        );
        let b =
            rebuilt(bl.braided().unwrap(), Ambient::Comodule { coaction: co.clone(), r: host.dqs().unwrap().clone() });
        assert!(verify_braided_hopf(&b, 4).passed());
        let x = bosonise_comodule(&b, &co, host.dqs().unwrap()).unwrap();
        let rep = verify_hopf(&x.hopf, 4);
        assert!(rep.passed(), "{}", rep.to_text());
        let xp = x.pres();
        let q = xp.q();
        assert_eq!(xp.mul(&xp.g("g"), &xp.g("theta")), xp.mul(&xp.g("theta"), &xp.g("g")).scale(&(&q * &q)));
    }

    #[test]
    fn right_module_superline() {
        let sl = load_builtin("superline", None).unwrap();
        let host = sl.host().unwrap();
        let h = host.hopf().unwrap().clone();
        let p = sl.pres.clone();
        let table = HashMap::from([((0u16, 0u16), p.g("theta").neg())]);
        let act = Arc::new(Action::table(Side::Right, h, p.clone(), table));
        let rmat = host.quasitriangular().unwrap().clone();
        let b = rebuilt(sl.braided().unwrap(), Ambient::Module { action: act.clone(), rmat: rmat.clone() });
        assert!(verify_braided_hopf(&b, 4).passed());
        let x = bosonise_module(&b, &act, &rmat).unwrap();
        let rep = verify_hopf(&x.hopf, 4);
        assert!(rep.passed(), "{}", rep.to_text());
        let xp = x.pres();
        assert_eq!(xp.mul(&xp.g("theta"), &xp.g("g")), xp.mul(&xp.g("g"), &xp.g("theta")).neg());
    }

    #[test]
    fn trivial_carrier_bosonises_to_host() {
        let gl = load_builtin("glq2", None).unwrap();
        let h = gl.hopf().unwrap().clone();
        let field = h.pres().field();
        let k = Arc::new(braidkit::freealg::Presentation::free(&[], field).unwrap());
        let co = Arc::new(Coaction::trivial(Side::Right, h.clone(), k.clone()));
        let b = BraidedHopf::new(
            k,
            vec![],
            vec![],
            vec![],
            Ambient::Comodule { coaction: co.clone(), r: gl.dqs().unwrap().clone() },
        )
        .unwrap();
        let x = bosonise_comodule(&b, &co, gl.dqs().unwrap()).unwrap();
        let rep = braidkit::verify::compare_hopf(&x.hopf, &h, 3);
        assert!(rep.passed(), "{}", rep.to_text());
    }
}

#[test]
fn automorphism_over_ground_field_is_transmutation() {
    use braidkit::braided::{Ambient, BraidedHopf, Coaction, Side};
    use braidkit::constructions::automorphism_braided_group;
    use braidkit::freealg::Word;
    use braidkit::tensor::TensorElem;
    use std::sync::Arc;
    let gl = load_builtin("glq2", None).unwrap();
    let h = gl.hopf().unwrap().clone();
    let r = gl.dqs().unwrap().clone();
    let k = Arc::new(braidkit::freealg::Presentation::free(&[], h.pres().field()).unwrap());
    let co = Arc::new(Coaction::trivial(Side::Right, h.clone(), k.clone()));
    let b = Arc::new(
        BraidedHopf::new(k, vec![], vec![], vec![], Ambient::Comodule { coaction: co, r: r.clone() }).unwrap(),
    );
    let a = automorphism_braided_group(r.clone(), b, 2).unwrap();
    let t = transmute(r, 2);
    assert_eq!(a.model.product.len(), t.model.product.len());
    let one = Word::one();
    for ((x, y), v) in &t.model.product {
        let got = &a.model.product[&(vec![x[0].clone(), one.clone()], vec![y[0].clone(), one.clone()])];
        let mut want = TensorElem::zero(2);
        for (k, c) in v.terms() {
            want.add_term(vec![k[0].clone(), one.clone()], c.clone());
        }
        assert_eq!(got, &want);
    }
}

#[test]
fn central_grouplike_multiplies_plainly() {
    let gl = load_builtin("glq2", None).unwrap();
    let t = transmute(gl.dqs().unwrap().clone(), 2);
    let p = gl.pres.clone();
    for g in ["alpha", "beta", "gamma", "delta"] {
        let c = p.g("C");
        assert_eq!(t.algebra.mul_polys(&c, &p.g(g)), p.mul(&c, &p.g(g)));
    }
}
