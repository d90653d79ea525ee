use crate::freealg::{NCPoly, Presentation, Word};
use crate::scalar::Scalar;
use crate::tensor::TensorElem;

pub fn word(w: &Word, names: &[String]) -> String {
    if w.is_one() {
        return "1".to_string();
    }
    let mut parts = Vec::new();
    let mut i = 0;
    while i < w.len() {
        let mut j = i;
        while j < w.len() && w[j] == w[i] {
            j += 1;
        }
        let name = &names[w[i] as usize];
        if j - i == 1 {
            parts.push(name.clone());
        } else {
            parts.push(format!("{name}^{}", j - i));
        }
        i = j;
    }
    parts.join("*")
}

fn coeff_needs_parens(c: &Scalar) -> bool {
    match c.as_fraction() {
        Some((num, den)) => den.is_one() && num.term_count() > 1,
        None => c.is_compound(),
    }
}

/// One signed term `c*m`.
fn term(c: &Scalar, m: &str) -> String {
    let mono_is_one = m == "1";
    if mono_is_one {
        return if coeff_needs_parens(c) { format!("({c})") } else { c.to_string() };
    }
    if c.is_one() {
        return m.to_string();
    }
    if (-c).is_one() {
        return format!("-{m}");
    }
    if coeff_needs_parens(c) {
        format!("({c})*{m}")
    } else {
        format!("{c}*{m}")
    }
}

fn join(terms: impl Iterator<Item = String>) -> String {
    let mut out = String::new();
    for t in terms {
        if out.is_empty() {
            out = t;
        } else if let Some(rest) = t.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(&t);
        }
    }
    if out.is_empty() {
        "0".to_string()
    } else {
        out
    }
}

/// Prints terms from the largest monomial down, e.g. `q*x*y` or `x^2 + 1`.
pub fn poly(p: &NCPoly, names: &[String]) -> String {
    join(p.terms().rev().map(|(w, c)| term(c, &word(w, names))))
}

pub fn poly_in(p: &NCPoly, pres: &Presentation) -> String {
    poly(p, pres.names())
}

/// Prints a tensor with `⊗` between slots, e.g. `q^2*x⊗x`.
pub fn tensor(t: &TensorElem, slots: &[&[String]]) -> String {
    if t.rank() == 0 {
        return t.as_scalar().unwrap().to_string();
    }
    join(t.terms().rev().map(|(k, c)| {
        let m: Vec<String> = k.iter().zip(slots).map(|(w, n)| word(w, n)).collect();
        term(c, &m.join("⊗"))
    }))
}

pub fn tensor_in(t: &TensorElem, slots: &[&Presentation]) -> String {
    let names: Vec<&[String]> = slots.iter().map(|p| p.names()).collect();
    tensor(t, &names)
}
