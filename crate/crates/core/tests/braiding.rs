use braidkit::braided::{Braiding, ComoduleBraiding};
use braidkit::catalog::load_builtin;
use braidkit::scalar::Scalar;
use braidkit::tensor::TensorElem;

#[test]
fn braiding_of_matrices_past_the_plane() {
    let bg = load_builtin("bglq2", None).unwrap();
    let aq = load_builtin("aq2", None).unwrap();
    let r = bg.host().unwrap().dqs().unwrap().clone();
    let psi = ComoduleBraiding::new(bg.coaction().unwrap().clone(), aq.coaction().unwrap().clone(), r).unwrap();
    let (m, p) = (&bg.pres, &aq.pres);
    let q = |n: i64| Scalar::q().pow(n).unwrap();
    let t = |w: &str, v: &str| TensorElem::from_pair(&p.g(w), &m.g(v));
    let psi_of = |v: &str, w: &str| psi.braid_polys(&m.g(v), &p.g(w));
    let one = Scalar::one();
    assert_eq!(psi_of("a", "x"), t("x", "a").add(&t("y", "c").scale(&(&one - &q(2)))));
    let amd = TensorElem::from_pair(&p.g("y"), &m.g("a").sub(&m.g("d")));
    assert_eq!(psi_of("b", "x"), t("x", "b").scale(&q(-1)).add(&amd.scale(&(&q(1) - &q(-1)))));
    assert_eq!(psi_of("c", "x"), t("x", "c").scale(&q(1)));
    assert_eq!(psi_of("d", "x"), t("x", "d").add(&t("y", "c").scale(&(&one - &q(-2)))));
    assert_eq!(psi_of("a", "y"), t("y", "a"));
    assert_eq!(psi_of("b", "y"), t("y", "b").scale(&q(1)));
    assert_eq!(psi_of("c", "y"), t("y", "c").scale(&q(-1)));
    assert_eq!(psi_of("d", "y"), t("y", "d"));
}

mod left_comodule {
    use braidkit::braided::{Braiding, Coaction, ComoduleBraiding, Side};
    use braidkit::catalog::load_builtin;
    use braidkit::freealg::{Presentation, Word};
    use braidkit::hopf::{Dqs, Functional};
    use braidkit::tensor::TensorElem;
    use braidkit::verify::{check_functoriality, check_ybe};
    use std::sync::Arc;

    /// The left-comodule braiding with the host leg of `v` in the second slot.
    struct AsPrinted {
        c: Arc<Coaction>,
        r: Arc<Dqs>,
    }

    impl Braiding for AsPrinted {
        fn source(&self) -> [&Presentation; 2] {
            [self.c.carrier(), self.c.carrier()]
        }

        fn braid_words(&self, v: &Word, w: &Word) -> TensorElem {
            let p = self.c.carrier();
            let mut out = TensorElem::zero(2);
            for (_, v1, a) in self.c.legs(v) {
                for (w2, w1, b) in self.c.legs(w) {
                    let s = self.r.r.eval_words(&w1, &v1);
                    out.add_term(vec![w2.clone(), v1.clone()], &(&a * &b) * &s);
                }
            }
            out.normalize(&[p, p])
        }
    }

    #[test]
    fn printed_form_fails_and_corrected_form_holds() {
        let gl = load_builtin("glq2", None).unwrap();
        let h = gl.hopf().unwrap().clone();
        let r = gl.dqs().unwrap().clone();
        let c = Arc::new(Coaction::regular(Side::Left, h));
        let printed = AsPrinted { c: c.clone(), r: r.clone() };
        assert!(check_ybe(&printed).is_err());
        let fixed = ComoduleBraiding::new(c.clone(), c, r).unwrap();
        assert!(check_ybe(&fixed).is_ok());
        assert!(check_functoriality(&fixed).is_ok());
    }
}
