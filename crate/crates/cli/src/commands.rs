use crate::output::Output;
use braidkit::braided::{Braiding, ComoduleBraiding, ModuleBraiding};
use braidkit::catalog::{builtin_names, builtin_source, load_spec, parse_name, Bundle, CatalogName};
use braidkit::constructions::{self as cons, ColourSplit, Inducing};
use braidkit::freealg::{Gen, NCPoly, Presentation, Word};
use braidkit::hopf::{Cocycle, Functional, HopfData};
use braidkit::text::{parse_element, print};
use braidkit::verify::{self, VerifyReport};
use braidkit::{FieldContext, Scalar};
use std::sync::Arc;

pub type Result<T> = std::result::Result<T, Box<dyn std::error::Error>>;

pub struct Opts {
    pub degree: usize,
    pub field: Option<FieldContext>,
}

impl Opts {
    fn load(&self, spec: &str) -> Result<Bundle> {
        Ok(load_spec(spec, self.field)?)
    }
}

fn catalog_name(spec: &str) -> &str {
    spec.strip_prefix("catalog:").unwrap_or(spec)
}

fn presentation(out: &mut Output, p: &Presentation) {
    out.note(format!("generators: {}", p.names().join(" ")));
    for r in p.rules() {
        out.entry("relation", print::word(&r.lhs, p.names()), print::poly_in(&r.rhs, p));
    }
}

fn hopf_tables(out: &mut Output, h: &HopfData) {
    let p = h.pres();
    for g in 0..p.ngens() as Gen {
        out.entry("coproduct", format!("Δ({})", p.name(g)), print::tensor_in(h.gen_coproduct(g), &[p, p]));
    }
    for g in 0..p.ngens() as Gen {
        out.entry("counit", format!("ε({})", p.name(g)), h.gen_counit(g).to_string());
    }
    for g in 0..p.ngens() as Gen {
        out.entry("antipode", format!("S({})", p.name(g)), print::poly_in(h.gen_antipode(g), p));
    }
}

pub fn normalform(opts: &Opts, spec: &str, expr: &str) -> Result<Output> {
    let b = opts.load(spec)?;
    let p = parse_element(expr, &b.pres)?;
    let mut out = Output::default();
    out.note(print::poly_in(&b.pres.normal_form(&p), &b.pres));
    Ok(out)
}

pub fn verify(opts: &Opts, spec: &str) -> Result<Output> {
    let b = opts.load(spec)?;
    let mut out = Output::default();
    out.report(verify::verify_bundle(&b, opts.degree));
    let kind = if b.braided.is_some() {
        "braided Hopf axioms"
    } else if b.hopf.is_some() {
        "Hopf axioms"
    } else {
        "presentation"
    };
    out.summary(kind);
    Ok(out)
}

fn pair_braiding(v: &Bundle, w: &Bundle) -> Result<Arc<dyn Braiding>> {
    if let (Some(cv), Some(cw)) = (&v.coaction, &w.coaction) {
        let r = v.host()?.dqs()?.clone();
        return Ok(Arc::new(ComoduleBraiding::new(cv.clone(), cw.clone(), r)?));
    }
    if let (Some(av), Some(aw)) = (&v.action, &w.action) {
        let rmat = v.host()?.quasitriangular()?.clone();
        return Ok(Arc::new(ModuleBraiding::new(av.clone(), aw.clone(), rmat)?));
    }
    Err("both inputs need a coaction or both an action of the same host".into())
}

pub fn braid(opts: &Opts, first: &str, second: Option<&str>, pairs: bool) -> Result<Output> {
    let v = opts.load(first)?;
    let psi: Arc<dyn Braiding> = match second {
        None => v.braided()?.braiding_arc().clone(),
        Some(s) => pair_braiding(&v, &opts.load(s)?)?,
    };
    let [vp, wp] = psi.source();
    let mut out = Output::default();
    if pairs {
        for a in 0..vp.ngens() as Gen {
            for c in 0..wp.ngens() as Gen {
                let t = psi.braid_polys(&NCPoly::gen(a), &NCPoly::gen(c));
                out.entry("braiding", format!("Ψ({}⊗{})", vp.name(a), wp.name(c)), print::tensor_in(&t, &[wp, vp]));
            }
        }
        return Ok(out);
    }
    let mut rep = VerifyReport::new();
    if vp.names() == wp.names() {
        rep.push("Yang-Baxter", "generator triples", verify::check_ybe(&*psi));
    }
    rep.push("functoriality", "defining relations", verify::check_functoriality(&*psi));
    out.report(rep);
    out.summary("braiding");
    Ok(out)
}

pub fn transmute(opts: &Opts, spec: &str, target: Option<&str>) -> Result<Output> {
    let b = opts.load(spec)?;
    let t = cons::transmute(b.dqs()?.clone(), opts.degree);
    let p = &b.pres;
    let mut out = Output::default();
    out.note(format!("generators: {}", p.names().join(" ")));
    for u in 0..p.ngens() as Gen {
        for v in 0..p.ngens() as Gen {
            let prod = t.model.mul_keys(&vec![Word::gen(u)], &vec![Word::gen(v)]);
            if let Some(prod) = prod {
                out.entry("product", format!("{} · {}", p.name(u), p.name(v)), t.model.show(prod));
            }
        }
    }
    for g in 0..p.ngens() as Gen {
        if let Some(d) = t.model.coproduct.get(&vec![Word::gen(g)]) {
            out.entry("coproduct", format!("Δ({})", p.name(g)), print::tensor_in(d, &[p, p]));
        }
    }
    let mut rep = VerifyReport::new();
    let assoc = t.model.check_associativity().map_err(|(a, b, c)| {
        format!("({} · {}) · {}", t.model.show_key(&a), t.model.show_key(&b), t.model.show_key(&c))
    });
    rep.push("associativity", format!("degree ≤ {}", opts.degree), assoc);
    out.report(rep);
    if let Some(target) = target {
        out.report(cons::reconcile(&t.algebra, &opts.load(target)?));
    }
    out.summary("transmutation");
    Ok(out)
}

pub fn bosonise(opts: &Opts, spec: &str) -> Result<Output> {
    let b = opts.load(spec)?;
    let x = cons::bosonise(&b)?;
    let mut out = Output::default();
    presentation(&mut out, x.pres());
    hopf_tables(&mut out, &x.hopf);
    out.report(verify::verify_hopf(&x.hopf, opts.degree));
    out.summary("Hopf axioms");
    Ok(out)
}

pub fn biproduct(opts: &Opts, spec: &str) -> Result<Output> {
    let b = opts.load(spec)?;
    let host = b.host()?;
    let from = match (&b.coaction, &b.action) {
        (Some(c), _) => Inducing::Comodule { coaction: c.clone(), r: host.dqs()?.clone() },
        (None, Some(a)) => Inducing::Module { action: a.clone(), rmat: host.quasitriangular()?.clone() },
        (None, None) => return Err("the input has neither a coaction nor an action".into()),
    };
    let x = cons::induce_crossed_module(&from)?;
    let bi = cons::biproduct(&x, b.braided()?)?;
    let bos = cons::bosonise(&b)?;
    let bound = opts.degree.min(3);
    let mut out = Output::default();
    presentation(&mut out, bi.pres());
    hopf_tables(&mut out, &bi.hopf);
    out.report(verify::verify_crossed_module(&x, bound.min(2)));
    out.report(verify::compare_hopf(&bi.hopf, &bos.hopf, bound));
    out.summary("biproduct equals bosonisation");
    Ok(out)
}

fn exponent_matrix(s: &str) -> Result<Vec<Vec<i64>>> {
    let m: Vec<Vec<i64>> = serde_json::from_str(s).map_err(|e| format!("exponent matrix `{s}`: {e}"))?;
    if m.iter().any(|r| r.len() != m.len()) {
        return Err(format!("exponent matrix `{s}` is not square").into());
    }
    Ok(m)
}

pub fn twist(opts: &Opts, spec: &str, exponents: Option<&str>, cocycle: Option<&str>) -> Result<Output> {
    let b = opts.load(spec)?;
    let host = b.host()?.hopf()?.clone();
    let chi: Cocycle = match (exponents, cocycle) {
        (Some(e), _) => cons::exponent_cocycle(&host, &exponent_matrix(e)?)?,
        (None, Some(c)) => {
            let h = opts.load(c)?;
            h.cocycle.as_deref().cloned().ok_or_else(|| format!("`{c}` has no [cocycle] section"))?
        }
        (None, None) => return Err("give --exponents or --cocycle".into()),
    };
    let m = cons::twist_braided(b.braided()?, &chi, opts.degree)?;
    let p = &b.pres;
    let mut out = Output::default();
    for u in 0..p.ngens() as Gen {
        for v in 0..p.ngens() as Gen {
            if let Some(t) = m.mul_keys(&vec![Word::gen(u)], &vec![Word::gen(v)]) {
                out.entry("product", format!("{} · {}", p.name(u), p.name(v)), m.show(t));
            }
        }
    }
    for g in 0..p.ngens() as Gen {
        if let Some(d) = m.coproduct.get(&vec![Word::gen(g)]) {
            out.entry("coproduct", format!("Δ({})", p.name(g)), print::tensor_in(d, &[p, p]));
        }
    }
    out.report(verify::verify_cocycle(&chi, opts.degree.min(3)));
    let mut rep = VerifyReport::new();
    let assoc = m
        .check_associativity()
        .map_err(|(a, b, c)| format!("({} · {}) · {}", m.show_key(&a), m.show_key(&b), m.show_key(&c)));
    rep.push("associativity", format!("degree ≤ {}", opts.degree), assoc);
    out.report(rep);
    out.summary("twist");
    Ok(out)
}

fn exponents_of(w: &Word, n: usize) -> Vec<i64> {
    let mut e = vec![0; n];
    for &g in w.iter() {
        e[g as usize] += 1;
    }
    e
}

pub fn colour_twist(opts: &Opts, spec: &str) -> Result<Output> {
    let CatalogName::GroupBichar { m, n, omega } = parse_name(catalog_name(spec))? else {
        return Err(format!("`{spec}` is not a group_bichar(m,n,omega) catalog entry").into());
    };
    let mut out = Output::default();
    let (chi, beta0) = match cons::colour_sqrt_decompose(m, &omega) {
        ColourSplit::Split { chi, beta0 } => (chi, beta0),
        ColourSplit::NoDecomposition => {
            out.note(format!("no square-root decomposition: {m} is divisible by 4"));
            return Ok(out);
        }
    };
    let show = |a: &[Vec<i64>]| serde_json::to_string(a).unwrap();
    out.entry("matrix", "chi", show(&chi));
    out.entry("matrix", "beta0", show(&beta0));
    let b = opts.load(&format!("catalog:{}", catalog_name(spec)))?;
    let c = cons::exponent_cocycle(b.hopf()?, &chi)?;
    let beta = cons::twisted_bichar(b.dqs()?, &c)?;
    let q = b.pres.q();
    let mut mismatch = None;
    for ((u, v), s) in &beta {
        out.entry(
            "bichar",
            format!("β({}⊗{})", print::word(u, b.pres.names()), print::word(v, b.pres.names())),
            s.to_string(),
        );
        let (a, e) = (exponents_of(u, n), exponents_of(v, n));
        let k: i64 = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| a[i] * e[j] * beta0[i][j]).sum();
        if mismatch.is_none() && *s != q.pow(k)? {
            mismatch = Some(format!("β({:?}⊗{:?}) = {s}", u, v));
        }
    }
    let mut rep = VerifyReport::new();
    rep.push("twisted bicharacter is q^beta0", format!("{} pairs", beta.len()), mismatch.map_or(Ok(()), Err));
    out.report(rep);
    out.summary("colour twist");
    Ok(out)
}

pub fn automorphism(opts: &Opts, spec: &str) -> Result<Output> {
    let b = opts.load(spec)?;
    let host = b.host()?;
    let bound = opts.degree.min(2);
    let g = cons::automorphism_braided_group(host.dqs()?.clone(), b.braided()?.clone(), bound)?;
    let (hp, bp) = (&host.pres, &b.pres);
    let mut out = Output::default();
    for c in 0..bp.ngens() as Gen {
        for h in 0..hp.ngens() as Gen {
            let t = g.cross_relation(c, h);
            out.entry("cross", format!("{}{}", bp.name(c), hp.name(h)), g.model.show(&t));
        }
    }
    let slots = [&**hp, &**bp, &**hp, &**bp];
    for c in 0..bp.ngens() as Gen {
        let d = g.coproduct_of(&vec![Word::one(), Word::gen(c)]);
        out.entry("coproduct", format!("Δ({})", bp.name(c)), print::tensor_in(&d, &slots));
    }
    let mut rep = VerifyReport::new();
    let assoc = g.model.check_associativity().map_err(|(a, b, c)| {
        format!("({} · {}) · {}", g.model.show_key(&a), g.model.show_key(&b), g.model.show_key(&c))
    });
    rep.push("associativity", format!("degree ≤ {bound}"), assoc);
    out.report(rep);
    out.summary("automorphism braided group");
    Ok(out)
}

pub fn derive_rmatrix(opts: &Opts, host: &str, carrier: &str) -> Result<Output> {
    let h = opts.load(host)?;
    let r = braidkit::catalog::derive_rmatrix(h.hopf()?, catalog_name(carrier))?;
    let p = &h.pres;
    let mut out = Output::default();
    for a in 0..p.ngens() as Gen {
        for c in 0..p.ngens() as Gen {
            let s: Scalar = r.eval(&NCPoly::gen(a), &NCPoly::gen(c));
            out.entry("rmatrix", format!("R({}⊗{})", p.name(a), p.name(c)), s.to_string());
        }
    }
    Ok(out)
}

pub fn catalog(name: Option<&str>) -> Result<Output> {
    let mut out = Output::default();
    match name {
        Some(n) => out.note(builtin_source(catalog_name(n))?.trim_end().to_string()),
        None => {
            for n in builtin_names() {
                out.note(format!("catalog:{n}"));
            }
            for n in ["anyonic(n)", "braided_line(n)", "group_bichar(m,n,[[...]])"] {
                out.note(format!("catalog:{n}"));
            }
        }
    }
    Ok(out)
}
