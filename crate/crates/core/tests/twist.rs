use braidkit::braided::{Ambient, BraidedHopf, Coaction, Side};
use braidkit::catalog::{load_builtin, load_spec};
use braidkit::constructions::*;
use braidkit::freealg::{NCPoly, Presentation, Word};
use braidkit::hopf::{complete_table, Bichar, Cocycle, Laws};
use braidkit::scalar::Scalar;
use braidkit::tensor::TensorElem;
use braidkit::verify::verify_cocycle;
use std::collections::HashMap;
use std::sync::Arc;

#[test]
fn trivial_cocycle_changes_nothing() {
    let aq2 = load_builtin("aq2", None).unwrap();
    let b = aq2.braided().unwrap();
    let chi = Cocycle::trivial(aq2.host().unwrap().hopf().unwrap().clone());
    let m = twist_braided(b, &chi, 3).unwrap();
    for ((x, y), v) in &m.product {
        assert_eq!(v.to_poly(), aq2.pres.nf_word(&x[0].concat(&y[0])));
    }
    for (k, d) in &m.coproduct {
        assert_eq!(d, &b.coproduct_word(&k[0]));
    }
}

#[test]
fn torus_cocycle_rescales_quantum_plane() {
    let aq2 = load_builtin("aq2", None).unwrap();
    let gl = aq2.host().unwrap().hopf().unwrap().clone();
    let p = gl.pres();
    let g = |n: &str| p.gen_index(n).unwrap();
    let q = Scalar::q();
    let mut known = HashMap::new();
    for a in ["alpha", "beta", "gamma", "delta"] {
        for c in ["alpha", "beta", "gamma", "delta"] {
            let diag = |n: &str| n == "alpha" || n == "delta";
            let v = if !diag(a) || !diag(c) {
                Scalar::zero()
            } else if a == "alpha" && c == "delta" {
                q.clone()
            } else {
                Scalar::one()
            };
            known.insert((g(a), g(c)), v);
        }
    }
    let base: Vec<u16> = ["alpha", "beta", "gamma", "delta"].iter().map(|n| g(n)).collect();
    let table = complete_table(&gl, &known, &base, Laws::Standard).unwrap();
    let chi = Cocycle::with_antipode_inverse(Bichar::new(gl.clone(), table, Laws::Standard));
    let rep = verify_cocycle(&chi, 3);
    assert!(rep.passed(), "{}", rep.to_text());
    let m = twist_braided(aq2.braided().unwrap(), &chi, 2).unwrap();
    let bp = &aq2.pres;
    let (x, y) = (vec![Word::gen(0)], vec![Word::gen(1)]);
    let xy = m.mul_keys(&x, &y).unwrap().clone();
    let yx = m.mul_keys(&y, &x).unwrap().clone();
    assert_eq!(yx, xy.scale(&(&q * &q)));
    assert_eq!(xy.to_poly(), bp.g("x").mul_free(&bp.g("y")).scale(&q.inverse().unwrap()));
    assert!(m.check_associativity().is_ok());
}

fn om(m: u32, w: &[[i64; 2]; 2]) -> String {
    format!("catalog:group_bichar({m},2,[[{},{}],[{},{}]])", w[0][0], w[0][1], w[1][0], w[1][1])
}

#[test]
fn colour_twist_trivialises_odd_order() {
    let omega = [[0, 1], [-1, 0]];
    let b = load_spec(&om(3, &omega), None).unwrap();
    let w: Vec<Vec<i64>> = omega.iter().map(|r| r.to_vec()).collect();
    let ColourSplit::Split { chi, beta0 } = colour_sqrt_decompose(3, &w) else { panic!() };
    assert_eq!(chi, vec![vec![0, 2], vec![1, 0]]);
    assert!(beta0.iter().flatten().all(|&x| x == 0));
    let host = b.hopf().unwrap();
    let c = exponent_cocycle(host, &chi).unwrap();
    assert!(verify_cocycle(&c, 3).passed());
    let beta = twisted_bichar(b.dqs().unwrap(), &c).unwrap();
    assert_eq!(beta.len(), 81);
    assert!(beta.values().all(|s| s.is_one()));
}

#[test]
fn colour_twist_of_order_two_is_super() {
    let omega = [[0, 1], [-1, 0]];
    let b = load_spec(&om(2, &omega), None).unwrap();
    let w: Vec<Vec<i64>> = omega.iter().map(|r| r.to_vec()).collect();
    let ColourSplit::Split { chi, beta0 } = colour_sqrt_decompose(2, &w) else { panic!() };
    assert!(chi.iter().flatten().all(|&x| x == 0));
    assert_eq!(beta0, vec![vec![0, 1], vec![1, 0]]);
    let c = exponent_cocycle(b.hopf().unwrap(), &chi).unwrap();
    let beta = twisted_bichar(b.dqs().unwrap(), &c).unwrap();
    assert_eq!(beta.len(), 16);
    let minus = Scalar::from_int(-1);
    assert!(beta.values().all(|s| s.is_one() || *s == minus));
    assert!(beta.values().any(|s| *s == minus));
}

#[test]
fn order_divisible_by_four_is_out_of_scope() {
    assert_eq!(colour_sqrt_decompose(4, &[vec![0, 1], vec![-1, 0]]), ColourSplit::NoDecomposition);
}

#[test]
fn trivial_group_is_trivial() {
    let ColourSplit::Split { chi, beta0 } = colour_sqrt_decompose(1, &[vec![0]]) else { panic!() };
    assert_eq!((chi, beta0), (vec![vec![0]], vec![vec![0]]));
}

#[test]
fn colour_commutator() {
    let g = load_spec("catalog:group_bichar(3,2,[[0,1],[-1,0]])", None).unwrap();
    let host = g.hopf().unwrap().clone();
    let field = host.pres().field();
    let pres = Arc::new(Presentation::free(&["xi", "eta"], field).unwrap());
    let grade = |i: u16, h: u16| TensorElem::from_pair(&NCPoly::gen(i), &NCPoly::gen(h));
    let co =
        Arc::new(Coaction::table(Side::Right, host.clone(), pres.clone(), vec![grade(0, 0), grade(1, 1)]).unwrap());
    let prim = |i: u16| {
        TensorElem::from_pair(&NCPoly::gen(i), &NCPoly::one())
            .add(&TensorElem::from_pair(&NCPoly::one(), &NCPoly::gen(i)))
    };
    let b = BraidedHopf::new(
        pres.clone(),
        vec![prim(0), prim(1)],
        vec![Scalar::zero(), Scalar::zero()],
        vec![NCPoly::gen(0).neg(), NCPoly::gen(1).neg()],
        Ambient::Comodule { coaction: co, r: g.dqs().unwrap().clone() },
    )
    .unwrap();
    let c = exponent_cocycle(&host, &[vec![0, 2], vec![1, 0]]).unwrap();
    let m = twist_braided(&b, &c, 2).unwrap();
    let (xi, eta) = (vec![Word::gen(0)], vec![Word::gen(1)]);
    let comm = m.mul_keys(&xi, &eta).unwrap().sub(m.mul_keys(&eta, &xi).unwrap());
    let q = host.pres().q();
    let xe = NCPoly::word(Word::from_slice(&[0, 1]));
    let ex = NCPoly::word(Word::from_slice(&[1, 0]));
    let want = xe.scale(&q.pow(-2).unwrap()).sub(&ex.scale(&q.pow(-1).unwrap()));
    assert_eq!(comm.to_poly(), want);
}
