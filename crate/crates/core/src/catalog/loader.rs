use super::generate::{anyonic_text, braided_line_text, group_bichar_text, parse_name, CatalogName};
use super::rmatrix::derive_rmatrix;
use crate::braided::{Action, Ambient, BraidedHopf, Coaction, ExplicitBraiding, Side};
use crate::error::{Error, Result};
use crate::freealg::{Gen, NCPoly, Presentation};
use crate::hopf::{complete_table, solve_antipode, Bichar, Cocycle, Dqs, HopfData, Laws, QuasiTriangular};
use crate::scalar::{FieldContext, Scalar};
use crate::tensor::TensorElem;
use crate::text::{split_definition, split_pair, Document, Env, Line};
use std::collections::HashMap;
use std::sync::Arc;

const FILES: &[(&str, &str)] = &[
    ("glq2", include_str!("../../catalog/glq2.txt")),
    ("bglq2", include_str!("../../catalog/bglq2.txt")),
    ("aq2", include_str!("../../catalog/aq2.txt")),
    ("braided_line", include_str!("../../catalog/braided_line.txt")),
    ("z2prime", include_str!("../../catalog/z2prime.txt")),
    ("superline", include_str!("../../catalog/superline.txt")),
];

/// Names of the file-backed catalog entries.
pub fn builtin_names() -> Vec<&'static str> {
    FILES.iter().map(|(n, _)| *n).collect()
}

/// Source text for a catalog name, generating parameterised entries.
pub fn builtin_source(name: &str) -> Result<String> {
    match parse_name(name)? {
        CatalogName::File(f) => {
            FILES.iter().find(|(n, _)| *n == f).map(|(_, s)| s.to_string()).ok_or(Error::UnknownName(f))
        }
        CatalogName::BraidedLine(3) if !name.contains('(') => Ok(FILES[3].1.to_string()),
        CatalogName::BraidedLine(n) => Ok(braided_line_text(n)),
        CatalogName::Anyonic(n) => Ok(anyonic_text(n)),
        CatalogName::GroupBichar { m, n, omega } => Ok(group_bichar_text(m, n, &omega)),
    }
}

/// Everything a catalog entry defines.
#[derive(Clone)]
pub struct Bundle {
    pub name: String,
    pub field: FieldContext,
    pub pres: Arc<Presentation>,
    /// Present when the entry is an ordinary Hopf algebra.
    pub hopf: Option<Arc<HopfData>>,
    /// Present when the entry is a braided Hopf algebra over `host`.
    pub braided: Option<Arc<BraidedHopf>>,
    pub host: Option<Arc<Bundle>>,
    pub dqs: Option<Arc<Dqs>>,
    pub cocycle: Option<Arc<Cocycle>>,
    pub quasitriangular: Option<Arc<QuasiTriangular>>,
    pub coaction: Option<Arc<Coaction>>,
    pub action: Option<Arc<Action>>,
    pub explicit_braiding: Option<Arc<ExplicitBraiding>>,
}

impl std::fmt::Debug for Bundle {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Bundle").field("name", &self.name).field("field", &self.field).finish()
    }
}

impl Bundle {
    pub fn hopf(&self) -> Result<&Arc<HopfData>> {
        self.hopf.as_ref().ok_or_else(|| Error::Missing(format!("`{}` is not an ordinary Hopf algebra", self.name)))
    }

    pub fn braided(&self) -> Result<&Arc<BraidedHopf>> {
        self.braided.as_ref().ok_or_else(|| Error::Missing(format!("`{}` is not a braided Hopf algebra", self.name)))
    }

    pub fn host(&self) -> Result<&Arc<Bundle>> {
        self.host.as_ref().ok_or_else(|| Error::Missing(format!("`{}` has no host", self.name)))
    }

    pub fn dqs(&self) -> Result<&Arc<Dqs>> {
        self.dqs.as_ref().ok_or_else(|| Error::Missing(format!("`{}` has no [dqs]", self.name)))
    }

    pub fn coaction(&self) -> Result<&Arc<Coaction>> {
        self.coaction.as_ref().ok_or_else(|| Error::Missing(format!("`{}` has no [coaction]", self.name)))
    }

    pub fn action(&self) -> Result<&Arc<Action>> {
        self.action.as_ref().ok_or_else(|| Error::Missing(format!("`{}` has no [action]", self.name)))
    }

    pub fn quasitriangular(&self) -> Result<&Arc<QuasiTriangular>> {
        self.quasitriangular.as_ref().ok_or_else(|| Error::Missing(format!("`{}` has no [quasitriangular]", self.name)))
    }
}

/// Loads a catalog entry; `field`, when given, must match the entry's own field.
pub fn load_builtin(name: &str, field: Option<FieldContext>) -> Result<Bundle> {
    let src = builtin_source(name)?;
    let clean = name.trim().strip_prefix("catalog:").unwrap_or(name.trim());
    load_source(clean, &src, field)
}

/// Loads `catalog:name` or a file path.
pub fn load_spec(spec: &str, field: Option<FieldContext>) -> Result<Bundle> {
    if let Some(name) = spec.strip_prefix("catalog:") {
        return load_builtin(name, field);
    }
    let src = std::fs::read_to_string(spec).map_err(|e| Error::UnknownName(format!("{spec}: {e}")))?;
    load_source(spec, &src, field)
}

fn perr(l: &Line, msg: impl Into<String>) -> Error {
    Error::Parse { line: l.num, col: 1, msg: msg.into() }
}

fn gen_of(p: &Presentation, l: &Line, name: &str) -> Result<Gen> {
    p.gen_index(name.trim()).ok_or_else(|| perr(l, format!("unknown generator `{}`", name.trim())))
}

/// Reads `g = expr` lines into a per-generator table; every generator must appear.
fn gen_table<T: Clone>(
    doc: &Document,
    section: &str,
    pres: &Presentation,
    mut parse: impl FnMut(&Line, &str) -> Result<T>,
    skip: impl Fn(&str) -> bool,
) -> Result<Vec<Option<T>>> {
    let mut out: Vec<Option<T>> = vec![None; pres.ngens()];
    for l in doc.lines(section) {
        if skip(&l.text) {
            continue;
        }
        let (lhs, rhs, _) = split_definition(&l.text).ok_or_else(|| perr(l, "expected `generator = expression`"))?;
        let g = gen_of(pres, l, lhs)?;
        out[g as usize] = Some(parse(l, rhs)?);
    }
    Ok(out)
}

fn require_all<T>(v: Vec<Option<T>>, section: &str, pres: &Presentation) -> Result<Vec<T>> {
    v.into_iter()
        .enumerate()
        .map(|(i, x)| x.ok_or_else(|| Error::Missing(format!("[{section}] entry for `{}`", pres.name(i as Gen)))))
        .collect()
}

struct Parts {
    coproduct: Vec<TensorElem>,
    counit: Vec<Scalar>,
    antipode: Vec<NCPoly>,
}

fn hopf_parts(doc: &Document, pres: &Presentation) -> Result<Parts> {
    let coproduct =
        gen_table(doc, "coproduct", pres, |l, s| Env::new(vec![pres, pres]).at_line(l.num).parse_tensor(s), |_| false)?;
    let coproduct = require_all(coproduct, "coproduct", pres)?;
    let counit = gen_table(doc, "counit", pres, |l, s| Env::new(vec![pres]).at_line(l.num).parse_scalar(s), |_| false)?;
    let counit = require_all(counit, "counit", pres)?;
    let is_solve = |t: &str| t.starts_with("solve");
    let fixed = gen_table(doc, "antipode", pres, |l, s| Env::new(vec![pres]).at_line(l.num).parse_poly(s), is_solve)?;
    let solve_line = doc.lines("antipode").iter().find(|l| is_solve(&l.text));
    let antipode = match solve_line {
        None => require_all(fixed, "antipode", pres)?,
        Some(l) => {
            let rest = l.text.trim_start_matches("solve").trim();
            let rest = rest.strip_prefix("using").ok_or_else(|| perr(l, "expected `solve using p, q, ...`"))?;
            let ansatz = rest
                .split(',')
                .map(|s| Env::new(vec![pres]).at_line(l.num).parse_poly(s.trim()).map(|p| pres.normal_form(&p)))
                .collect::<Result<Vec<_>>>()?;
            let fixed: HashMap<Gen, NCPoly> =
                fixed.into_iter().enumerate().filter_map(|(i, p)| p.map(|p| (i as Gen, p))).collect();
            solve_antipode(pres, &coproduct, &counit, &fixed, &ansatz)?
        }
    };
    Ok(Parts { coproduct, counit, antipode })
}

/// Generators that are neither defined by a relation `g = p` nor inverse to such a generator.
pub(crate) fn base_generators(pres: &Presentation) -> Vec<Gen> {
    let defined: Vec<Gen> = pres
        .relations()
        .iter()
        .filter_map(|r| {
            let (w, c) = r.lhs.leading()?;
            let defines = r.lhs.len() == 1 && w.len() == 1 && c.is_one() && !r.oriented;
            (defines && r.rhs.terms().all(|(x, _)| !x.contains(&[w[0]]))).then(|| w[0])
        })
        .collect();
    let mut skip = defined.clone();
    for &(a, b) in pres.inverses() {
        if defined.contains(&a) {
            skip.push(b);
        }
        if defined.contains(&b) {
            skip.push(a);
        }
    }
    (0..pres.ngens() as Gen).filter(|g| !skip.contains(g)).collect()
}

fn pair_table(doc: &Document, section: &str, host: &Arc<HopfData>) -> Result<HashMap<(Gen, Gen), Scalar>> {
    let p = host.pres();
    let mut known = HashMap::new();
    for l in doc.lines(section) {
        let (a, b, e) = split_pair(&l.text).ok_or_else(|| perr(l, "expected `a, b = scalar`"))?;
        let s = Env::new(vec![p]).at_line(l.num).parse_scalar(e)?;
        known.insert((gen_of(p, l, a)?, gen_of(p, l, b)?), s);
    }
    Ok(known)
}

fn bichar_section(doc: &Document, section: &str, host: &Arc<HopfData>, laws: Laws) -> Result<Bichar> {
    let known = pair_table(doc, section, host)?;
    let base = base_generators(host.pres());
    let table = complete_table(host, &known, &base, laws)?;
    Ok(Bichar::new(host.clone(), table, laws))
}

fn inverse_section(doc: &Document, section: &str, forward: Bichar) -> Result<(Bichar, Bichar)> {
    let host = forward.host_arc().clone();
    let lines = doc.lines(section);
    if lines.is_empty() || lines.iter().all(|l| l.text == "antipode") {
        let d = Dqs::with_antipode_inverse(forward);
        return Ok((d.r, d.inv));
    }
    let inv = bichar_section(doc, section, &host, Laws::Reversed)?;
    Ok((forward, inv))
}

fn parse_side(doc: &Document, section: &str, default: Side) -> Result<Side> {
    for l in doc.lines(section) {
        if let Some(s) = l.text.strip_prefix("side") {
            return match s.trim() {
                "left" => Ok(Side::Left),
                "right" => Ok(Side::Right),
                _ => Err(perr(l, "side must be `left` or `right`")),
            };
        }
    }
    Ok(default)
}

fn parse_coaction(doc: &Document, host: &Arc<HopfData>, carrier: &Arc<Presentation>) -> Result<Option<Coaction>> {
    if !doc.has("coaction") {
        return Ok(None);
    }
    let side = parse_side(doc, "coaction", Side::Right)?;
    let hp = host.pres();
    let slots: Vec<&Presentation> = match side {
        Side::Right => vec![carrier, hp],
        Side::Left => vec![hp, carrier],
    };
    let mut table: Vec<Option<TensorElem>> = vec![None; carrier.ngens()];
    for l in doc.lines("coaction") {
        let t = l.text.as_str();
        if t.starts_with("side") {
            continue;
        }
        match t {
            "regular" => return Ok(Some(Coaction::regular(side, host.clone()))),
            "adjoint" => return Ok(Some(Coaction::adjoint(side, host.clone()))),
            "trivial" => return Ok(Some(Coaction::trivial(side, host.clone(), carrier.clone()))),
            _ => {}
        }
        if let Some(rest) = t.strip_prefix("matrix_adjoint") {
            let (us, ts) = rest.split_once("<-").ok_or_else(|| perr(l, "expected `matrix_adjoint u.. <- t..`"))?;
            let us: Vec<&str> = us.split_whitespace().collect();
            let ts: Vec<&str> = ts.split_whitespace().collect();
            if us.len() != 4 || ts.len() != 4 {
                return Err(perr(l, "matrix_adjoint needs four carrier and four host generators"));
            }
            let u: Vec<Gen> = us.iter().map(|s| gen_of(carrier, l, s)).collect::<Result<_>>()?;
            let tm: Vec<Gen> = ts.iter().map(|s| gen_of(hp, l, s)).collect::<Result<_>>()?;
            for i in 0..2 {
                for j in 0..2 {
                    let mut img = TensorElem::zero(2);
                    for k in 0..2 {
                        for m in 0..2 {
                            let outer = hp.mul(host.gen_antipode(tm[2 * i + k]), &NCPoly::gen(tm[2 * m + j]));
                            let u_km = NCPoly::gen(u[2 * k + m]);
                            let term = match side {
                                Side::Right => TensorElem::from_pair(&u_km, &outer),
                                Side::Left => TensorElem::from_pair(&outer, &u_km),
                            };
                            img.add_scaled(&term, &Scalar::one());
                        }
                    }
                    table[u[2 * i + j] as usize] = Some(img);
                }
            }
            continue;
        }
        let (lhs, rhs, _) = split_definition(t).ok_or_else(|| perr(l, "expected `generator = tensor`"))?;
        let g = gen_of(carrier, l, lhs)?;
        table[g as usize] = Some(Env::new(slots.clone()).at_line(l.num).parse_tensor(rhs)?);
    }
    let table = require_all(table, "coaction", carrier)?;
    Ok(Some(Coaction::table(side, host.clone(), carrier.clone(), table)?))
}

fn parse_action(
    doc: &Document,
    host: &Arc<HopfData>,
    carrier: &Arc<Presentation>,
    coaction: Option<&Arc<Coaction>>,
    r: Option<&Arc<Dqs>>,
) -> Result<Option<Action>> {
    if !doc.has("action") {
        return Ok(None);
    }
    let side = parse_side(doc, "action", Side::Left)?;
    let mut table = HashMap::new();
    for l in doc.lines("action") {
        let t = l.text.as_str();
        if t.starts_with("side") {
            continue;
        }
        match t {
            "regular" => return Ok(Some(Action::regular(side, host.clone()))),
            "adjoint" => return Ok(Some(Action::adjoint(side, host.clone()))),
            "trivial" => return Ok(Some(Action::trivial(side, host.clone(), carrier.clone()))),
            "induced" => {
                let c = coaction.ok_or_else(|| perr(l, "induced action needs a [coaction]"))?;
                let r = r.ok_or_else(|| perr(l, "induced action needs a host [dqs]"))?;
                return Ok(Some(Action::induced(c.clone(), r.clone())));
            }
            _ => {}
        }
        let (h, v, e) = split_pair(t).ok_or_else(|| perr(l, "expected `host_gen, carrier_gen = expression`"))?;
        let key = (gen_of(host.pres(), l, h)?, gen_of(carrier, l, v)?);
        table.insert(key, Env::new(vec![&**carrier]).at_line(l.num).parse_poly(e)?);
    }
    Ok(Some(Action::table(side, host.clone(), carrier.clone(), table)))
}

fn parse_explicit(doc: &Document, pres: &Arc<Presentation>) -> Result<Option<ExplicitBraiding>> {
    if !doc.has("braiding") {
        return Ok(None);
    }
    let mut table = HashMap::new();
    for l in doc.lines("braiding") {
        let (a, b, e) = split_pair(&l.text).ok_or_else(|| perr(l, "expected `v, w = tensor`"))?;
        let t = Env::new(vec![&**pres, &**pres]).at_line(l.num).parse_tensor(e)?;
        table.insert((gen_of(pres, l, a)?, gen_of(pres, l, b)?), t);
    }
    Ok(Some(ExplicitBraiding::new(pres.clone(), pres.clone(), table)?))
}

fn resolve_host(line: &Line, field: FieldContext) -> Result<Bundle> {
    let name = line.text.trim();
    if name.starts_with("catalog:") || builtin_source(name).is_ok() {
        load_builtin(name, Some(field))
    } else {
        load_spec(name, Some(field))
    }
}

/// Parses a presentation file into a bundle.
pub fn load_source(name: &str, src: &str, field: Option<FieldContext>) -> Result<Bundle> {
    let doc = Document::parse(src)?;
    let own = doc.field()?;
    if let Some(f) = field {
        if f != own {
            return Err(Error::FieldMismatch(format!("`{name}` is defined over {own}, not {f}")));
        }
    }
    let pres = Arc::new(doc.presentation(own)?);
    let report = pres.check_confluence(4);
    if !report.confluent {
        return Err(Error::VerificationFailed(format!("`{name}` is not confluent at degree 4")));
    }
    let parts = hopf_parts(&doc, &pres)?;
    let host = match doc.lines("host").first() {
        Some(l) => Some(Arc::new(resolve_host(l, own)?)),
        None => None,
    };
    let mut bundle = Bundle {
        name: name.to_string(),
        field: own,
        pres: pres.clone(),
        hopf: None,
        braided: None,
        host: host.clone(),
        dqs: None,
        cocycle: None,
        quasitriangular: None,
        coaction: None,
        action: None,
        explicit_braiding: None,
    };
    match &host {
        None => {
            let h = Arc::new(HopfData::new(pres.clone(), parts.coproduct, parts.counit, parts.antipode));
            if doc.has("dqs") {
                let derive = doc.lines("dqs").first().and_then(|l| l.text.strip_prefix("derive"));
                let r = if let Some(src_name) = derive {
                    derive_rmatrix(&h, src_name.trim())?
                } else {
                    bichar_section(&doc, "dqs", &h, Laws::Standard)?
                };
                let (r, inv) = inverse_section(&doc, "dqs_inverse", r)?;
                bundle.dqs = Some(Arc::new(Dqs::new(r, inv)));
            }
            if doc.has("cocycle") {
                let chi = bichar_section(&doc, "cocycle", &h, Laws::Standard)?;
                let (chi, inv) = inverse_section(&doc, "cocycle_inverse", chi)?;
                bundle.cocycle = Some(Arc::new(Cocycle::new(chi, inv)));
            }
            if let Some(l) = doc.lines("quasitriangular").first() {
                let (_, e, _) = split_definition(&l.text).ok_or_else(|| perr(l, "expected `R = tensor`"))?;
                let t = Env::new(vec![&*pres, &*pres]).at_line(l.num).parse_tensor(e)?;
                bundle.quasitriangular = Some(Arc::new(QuasiTriangular::new(h.clone(), t)));
            }
            bundle.hopf = Some(h);
        }
        Some(hb) => {
            let hh = hb.hopf()?.clone();
            let coaction = parse_coaction(&doc, &hh, &pres)?.map(Arc::new);
            let action = parse_action(&doc, &hh, &pres, coaction.as_ref(), hb.dqs.as_ref())?.map(Arc::new);
            let ambient = match (&coaction, &action) {
                (Some(c), Some(a)) if doc.lines("action").iter().all(|l| l.text != "induced") => {
                    Ambient::Crossed { coaction: c.clone(), action: a.clone() }
                }
                (Some(c), _) => Ambient::Comodule { coaction: c.clone(), r: hb.dqs()?.clone() },
                (None, Some(a)) => Ambient::Module { action: a.clone(), rmat: hb.quasitriangular()?.clone() },
                (None, None) => Ambient::Vec,
            };
            let b = BraidedHopf::new(pres.clone(), parts.coproduct, parts.counit, parts.antipode, ambient)?;
            bundle.braided = Some(Arc::new(b));
            bundle.coaction = coaction;
            bundle.action = action;
            bundle.explicit_braiding = parse_explicit(&doc, &pres)?.map(Arc::new);
        }
    }
    Ok(bundle)
}

/// Loads the carrier side of an entry against an already built host, without resolving `[host]`.
pub(crate) fn carrier_parts(
    name: &str,
    host: &Arc<HopfData>,
) -> Result<(Arc<Presentation>, Coaction, ExplicitBraiding)> {
    let src = builtin_source(name)?;
    let doc = Document::parse(&src)?;
    let pres = Arc::new(doc.presentation(doc.field()?)?);
    let coaction =
        parse_coaction(&doc, host, &pres)?.ok_or_else(|| Error::Missing(format!("`{name}` has no [coaction]")))?;
    let braiding = parse_explicit(&doc, &pres)?.ok_or_else(|| Error::Missing(format!("`{name}` has no [braiding]")))?;
    Ok((pres, coaction, braiding))
}
