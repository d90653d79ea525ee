use braidkit::catalog::load_builtin;
use braidkit::freealg::{Gen, NCPoly, Presentation, Word};
use braidkit::scalar::{FieldContext, Poly, Scalar};
use num_rational::BigRational;
use proptest::prelude::*;
use std::sync::{Arc, OnceLock};

fn poly(c: &[i64]) -> Poly {
    Poly::from_coeffs(c.iter().map(|&x| BigRational::from_integer(x.into())).collect())
}

fn build(field: FieldContext, num: &[i64], den: &[i64]) -> Scalar {
    match field {
        FieldContext::Transcendental => {
            let d = if poly(den).is_zero() { Poly::one() } else { poly(den) };
            Scalar::fraction(poly(num), d).unwrap()
        }
        FieldContext::Cyclotomic(m) => Scalar::cyclotomic(m, poly(num)),
    }
}

pub fn field() -> impl Strategy<Value = FieldContext> {
    prop_oneof![
        3 => Just(FieldContext::Transcendental),
        1 => Just(FieldContext::Cyclotomic(3)),
        1 => Just(FieldContext::Cyclotomic(5)),
        1 => Just(FieldContext::Cyclotomic(8)),
    ]
}

fn coeffs() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-4i64..=4, 0..=4)
}

pub fn triple() -> impl Strategy<Value = (Scalar, Scalar, Scalar)> {
    field().prop_flat_map(|f| {
        ((coeffs(), coeffs()), (coeffs(), coeffs()), (coeffs(), coeffs()))
            .prop_map(move |((a, b), (c, d), (e, g))| (build(f, &a, &b), build(f, &c, &d), build(f, &e, &g)))
    })
}

pub fn glq2() -> &'static Arc<Presentation> {
    static P: OnceLock<Arc<Presentation>> = OnceLock::new();
    P.get_or_init(|| load_builtin("glq2", None).unwrap().pres.clone())
}

pub fn element(ngens: Gen) -> impl Strategy<Value = NCPoly> {
    let term = (prop::collection::vec(0..ngens, 0..=2), -3i64..=3, -2i64..=2);
    prop::collection::vec(term, 1..=3).prop_map(|ts| {
        let mut p = NCPoly::zero();
        for (w, c, e) in ts {
            p.add_term(Word::from_slice(&w), &Scalar::from_int(c) * &Scalar::q().pow(e).unwrap());
        }
        p
    })
}

pub fn field_identities(a: &Scalar, b: &Scalar, c: &Scalar) -> Result<(), TestCaseError> {
    prop_assert_eq!(&(a + b) * c, &(a * c) + &(b * c));
    prop_assert_eq!(&(a * b) * c, a * &(b * c));
    prop_assert_eq!(&(a + b) - b, a.clone());
    prop_assert_eq!(a * b, b * a);
    if !b.is_zero() {
        let inv = b.inverse().unwrap();
        prop_assert_eq!(&(a * b) * &inv, a.clone());
        prop_assert_eq!(a.checked_div(b).unwrap(), a * &inv);
    }
    prop_assert!((a + &(-a)).is_zero());
    Ok(())
}

pub fn associative(p: &NCPoly, r: &NCPoly, s: &NCPoly) -> Result<(), TestCaseError> {
    let pres = glq2();
    prop_assert_eq!(pres.mul(&pres.mul(p, r), s), pres.mul(p, &pres.mul(r, s)));
    Ok(())
}

pub fn antipode_two_paths(cases: u32) -> Result<(), String> {
    let b = load_builtin("aq2", None).map_err(|e| e.to_string())?;
    let bh = b.braided().map_err(|e| e.to_string())?.clone();
    let words = b.pres.normal_words(3);
    let n = words.len();
    let mut runner = proptest::test_runner::TestRunner::new(ProptestConfig::with_cases(cases));
    runner
        .run(&(0..n, 0..n), |(i, j)| {
            let (u, v) = (&words[i], &words[j]);
            prop_assert_eq!(bh.antipode_of_product(u, v), bh.antipode(&b.pres.nf_word(&u.concat(v))));
            Ok(())
        })
        .map_err(|e| e.to_string())
}
