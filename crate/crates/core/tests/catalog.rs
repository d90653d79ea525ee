use braidkit::catalog::{braided_line_text, builtin_names, builtin_source, load_builtin};
use braidkit::freealg::NCPoly;
use braidkit::scalar::{FieldContext, Scalar};
use braidkit::text::parse_scalar;

fn sc(s: &str) -> Scalar {
    parse_scalar(s, FieldContext::Transcendental).unwrap()
}

#[test]
fn every_builtin_loads() {
    for name in builtin_names() {
        load_builtin(name, None).unwrap_or_else(|e| panic!("{name}: {e}"));
    }
}

#[test]
fn braided_line_file_matches_generator() {
    assert_eq!(builtin_source("braided_line").unwrap(), braided_line_text(3));
}

#[test]
fn derived_glq2_rmatrix() {
    let b = load_builtin("glq2", None).unwrap();
    let r = b.dqs().unwrap();
    let p = &b.pres;
    let e = |a: &str, c: &str| r.eval(&p.g(a), &p.g(c));
    assert_eq!(e("alpha", "alpha"), sc("q^2"));
    assert_eq!(e("delta", "delta"), sc("q^2"));
    assert_eq!(e("alpha", "delta"), sc("q"));
    assert_eq!(e("delta", "alpha"), sc("q"));
    assert_eq!(e("beta", "gamma"), sc("q^2 - 1"));
    assert_eq!(e("gamma", "beta"), Scalar::zero());
    assert_eq!(e("alpha", "beta"), Scalar::zero());
    assert_eq!(e("C", "C"), sc("q^6"));
    let one = NCPoly::one();
    assert_eq!(r.eval(&one, &p.g("C")), Scalar::one());
}

#[test]
fn field_mismatch_is_rejected() {
    assert!(load_builtin("glq2", Some(FieldContext::parse("cyclotomic:3").unwrap())).is_err());
}
