use super::ncpoly::NCPoly;
use super::word::{Gen, Word};
use crate::error::{Error, Result};
use crate::scalar::{FieldContext, Scalar};
use std::collections::{HashMap, HashSet};
use std::sync::Mutex;

/// A defining relation as written: `lhs = rhs`, or `lhs -> rhs` when the orientation is stated.
#[derive(Clone, Debug)]
pub struct Relation {
    pub lhs: NCPoly,
    pub rhs: NCPoly,
    pub oriented: bool,
    pub text: String,
}

impl Relation {
    pub fn new(lhs: NCPoly, rhs: NCPoly) -> Self {
        Relation { lhs, rhs, oriented: false, text: String::new() }
    }

    pub fn difference(&self) -> NCPoly {
        self.lhs.sub(&self.rhs)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule {
    pub lhs: Word,
    pub rhs: NCPoly,
}

/// A finitely presented algebra with rewrite rules oriented by the degree-lex order.
#[derive(Debug)]
pub struct Presentation {
    names: Vec<String>,
    index: HashMap<String, Gen>,
    field: FieldContext,
    inverses: Vec<(Gen, Gen)>,
    relations: Vec<Relation>,
    rules: Vec<Rule>,
    lookup: HashMap<Word, usize>,
    max_lhs: usize,
    cache: Mutex<HashMap<Word, NCPoly>>,
}

impl Clone for Presentation {
    fn clone(&self) -> Self {
        Presentation {
            names: self.names.clone(),
            index: self.index.clone(),
            field: self.field,
            inverses: self.inverses.clone(),
            relations: self.relations.clone(),
            rules: self.rules.clone(),
            lookup: self.lookup.clone(),
            max_lhs: self.max_lhs,
            cache: Mutex::new(HashMap::new()),
        }
    }
}

fn leading_rule(p: &NCPoly) -> Option<Rule> {
    let (lead, c) = p.leading()?;
    let inv = c.inverse().expect("nonzero leading coefficient");
    let lead = lead.clone();
    let mut rhs = NCPoly::zero();
    for (w, a) in p.terms() {
        if *w != lead {
            rhs.add_term(w.clone(), -(a * &inv));
        }
    }
    Some(Rule { lhs: lead, rhs })
}

/// Fully reduces `p` by an arbitrary (not necessarily inter-reduced) rule list.
fn reduce_by(rules: &[Rule], p: &NCPoly) -> NCPoly {
    let mut done = NCPoly::zero();
    let mut todo = p.clone();
    while let Some((w, c)) = todo.leading().map(|(w, c)| (w.clone(), c.clone())) {
        todo.add_term(w.clone(), -c.clone());
        let hit = rules.iter().find_map(|r| w.find(&r.lhs).map(|pos| (r, pos)));
        match hit {
            None => done.add_term(w, c),
            Some((r, pos)) => {
                let pre = NCPoly::word(w.slice(0, pos));
                let post = NCPoly::word(w.slice(pos + r.lhs.len(), w.len()));
                todo.add_scaled(&pre.mul_free(&r.rhs).mul_free(&post), &c);
            }
        }
    }
    done
}

impl Presentation {
    /// The free algebra on `names`.
    pub fn free(names: &[&str], field: FieldContext) -> Result<Self> {
        Self::new(names.iter().map(|s| s.to_string()).collect(), field, Vec::new(), Vec::new())
    }

    /// Builds a presentation; relations are oriented and inter-reduced.
    ///
    /// Each pair in `inverses` contributes the two unit rules `g g' = 1` and `g' g = 1`.
    pub fn new(
        names: Vec<String>,
        field: FieldContext,
        inverses: Vec<(Gen, Gen)>,
        mut relations: Vec<Relation>,
    ) -> Result<Self> {
        let mut index = HashMap::new();
        for (i, n) in names.iter().enumerate() {
            if index.insert(n.clone(), i as Gen).is_some() {
                return Err(Error::DuplicateGenerator(n.clone()));
            }
        }
        for &(g, h) in &inverses {
            for (a, b) in [(g, h), (h, g)] {
                let text = format!("{} {} = 1", names[a as usize], names[b as usize]);
                relations.push(Relation {
                    lhs: NCPoly::word(Word::from_slice(&[a, b])),
                    rhs: NCPoly::one(),
                    oriented: false,
                    text,
                });
            }
        }
        let n = names.len();
        for r in &relations {
            for side in [&r.lhs, &r.rhs] {
                if side.max_gen().is_some_and(|g| g as usize >= n) {
                    return Err(Error::AlphabetMismatch);
                }
            }
        }
        let mut polys = Vec::new();
        for r in &relations {
            let d = r.difference();
            if r.oriented {
                let stated = r.lhs.leading().map(|(w, _)| w.clone());
                let derived = d.leading().map(|(w, _)| w.clone());
                if r.lhs.len() != 1 || stated != derived {
                    let show = |w: Option<Word>| match w {
                        Some(w) => w.iter().map(|&g| names[g as usize].as_str()).collect::<Vec<_>>().join(" "),
                        None => "0".to_string(),
                    };
                    return Err(Error::OrientationMismatch { stated: show(stated), derived: show(derived) });
                }
            }
            if !d.is_zero() {
                polys.push(d);
            }
        }
        let rules = Self::interreduce(polys);
        let mut pres = Presentation {
            names,
            index,
            field,
            inverses,
            relations,
            rules: Vec::new(),
            lookup: HashMap::new(),
            max_lhs: 0,
            cache: Mutex::new(HashMap::new()),
        };
        pres.install(rules)?;
        Ok(pres)
    }

    /// Builds a presentation from already oriented rules, checking termination.
    pub fn from_rules(names: Vec<String>, field: FieldContext, rules: Vec<Rule>) -> Result<Self> {
        let relations = rules.iter().map(|r| Relation::new(NCPoly::word(r.lhs.clone()), r.rhs.clone())).collect();
        let mut index = HashMap::new();
        for (i, n) in names.iter().enumerate() {
            if index.insert(n.clone(), i as Gen).is_some() {
                return Err(Error::DuplicateGenerator(n.clone()));
            }
        }
        let mut pres = Presentation {
            names,
            index,
            field,
            inverses: Vec::new(),
            relations,
            rules: Vec::new(),
            lookup: HashMap::new(),
            max_lhs: 0,
            cache: Mutex::new(HashMap::new()),
        };
        pres.install(rules)?;
        Ok(pres)
    }

    fn install(&mut self, mut rules: Vec<Rule>) -> Result<()> {
        rules.sort_by(|a, b| a.lhs.cmp(&b.lhs));
        for r in &rules {
            if r.rhs.terms().any(|(w, _)| *w >= r.lhs) {
                return Err(Error::NonTerminating(format!("{:?}", r.lhs)));
            }
            if r.lhs.max_gen().is_some_and(|g| g as usize >= self.names.len()) {
                return Err(Error::AlphabetMismatch);
            }
        }
        self.max_lhs = rules.iter().map(|r| r.lhs.len()).max().unwrap_or(0);
        self.lookup = rules.iter().enumerate().map(|(i, r)| (r.lhs.clone(), i)).collect();
        self.rules = rules;
        Ok(())
    }

    fn interreduce(mut polys: Vec<NCPoly>) -> Vec<Rule> {
        loop {
            let mut changed = false;
            let mut i = 0;
            while i < polys.len() {
                let others: Vec<Rule> =
                    polys.iter().enumerate().filter(|&(j, _)| j != i).filter_map(|(_, p)| leading_rule(p)).collect();
                let red = reduce_by(&others, &polys[i]);
                if red.is_zero() {
                    polys.remove(i);
                    changed = true;
                    continue;
                }
                if red != polys[i] {
                    polys[i] = red;
                    changed = true;
                }
                i += 1;
            }
            if !changed {
                break;
            }
        }
        polys.iter().filter_map(leading_rule).collect()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn ngens(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, g: Gen) -> &str {
        &self.names[g as usize]
    }

    pub fn gen_index(&self, name: &str) -> Option<Gen> {
        self.index.get(name).copied()
    }

    /// Generator by name; panics if absent.
    pub fn g(&self, name: &str) -> NCPoly {
        NCPoly::gen(self.gen_index(name).unwrap_or_else(|| panic!("no generator {name}")))
    }

    pub fn field(&self) -> FieldContext {
        self.field
    }

    pub fn q(&self) -> Scalar {
        self.field.q()
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn inverses(&self) -> &[(Gen, Gen)] {
        &self.inverses
    }

    pub fn check_alphabet(&self, p: &NCPoly) -> Result<()> {
        match p.max_gen() {
            Some(g) if g as usize >= self.names.len() => Err(Error::AlphabetMismatch),
            _ => Ok(()),
        }
    }

    pub fn is_normal(&self, w: &Word) -> bool {
        if self.rules.is_empty() {
            return true;
        }
        (0..w.len()).all(|i| (1..=self.max_lhs.min(w.len() - i)).all(|k| !self.lookup.contains_key(&w.slice(i, i + k))))
    }

    /// Normal form of a single word.
    pub fn nf_word(&self, w: &Word) -> NCPoly {
        if self.rules.is_empty() || w.is_one() {
            return NCPoly::word(w.clone());
        }
        if let Some(p) = self.cache.lock().unwrap().get(w) {
            return p.clone();
        }
        let n = w.len();
        let prefix = self.nf_word(&w.slice(0, n - 1));
        let x = w[n - 1];
        let mut out = NCPoly::zero();
        for (u, c) in prefix.terms() {
            out.add_scaled(&self.append_reduce(u, x), c);
        }
        self.cache.lock().unwrap().insert(w.clone(), out.clone());
        out
    }

    /// Normal form of `u x` for a normal word `u`.
    fn append_reduce(&self, u: &Word, x: Gen) -> NCPoly {
        let mut v = u.clone();
        v.push(x);
        let n = v.len();
        for k in 1..=self.max_lhs.min(n) {
            if let Some(&i) = self.lookup.get(&v.slice(n - k, n)) {
                let head = NCPoly::word(v.slice(0, n - k));
                let mut out = NCPoly::zero();
                for (t, c) in head.mul_free(&self.rules[i].rhs).terms() {
                    out.add_scaled(&self.nf_word(t), c);
                }
                return out;
            }
        }
        NCPoly::word(v)
    }

    pub fn normal_form(&self, p: &NCPoly) -> NCPoly {
        p.map_linear(|w| self.nf_word(w))
    }

    /// Normal form of the product `p r`.
    pub fn mul(&self, p: &NCPoly, r: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (u, a) in p.terms() {
            for (v, b) in r.terms() {
                out.add_scaled(&self.nf_word(&u.concat(v)), &(a * b));
            }
        }
        out
    }

    pub fn checked_mul(&self, p: &NCPoly, r: &NCPoly) -> Result<NCPoly> {
        self.check_alphabet(p)?;
        self.check_alphabet(r)?;
        Ok(self.mul(p, r))
    }

    pub fn mul_all(&self, factors: &[NCPoly]) -> NCPoly {
        factors.iter().fold(NCPoly::one(), |acc, f| self.mul(&acc, f))
    }

    pub fn pow(&self, p: &NCPoly, n: u32) -> NCPoly {
        (0..n).fold(NCPoly::one(), |acc, _| self.mul(&acc, p))
    }

    /// All normal words of length at most `max_len`, in increasing order.
    pub fn normal_words(&self, max_len: usize) -> Vec<Word> {
        let mut out = vec![Word::one()];
        let mut layer = vec![Word::one()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for u in &layer {
                for g in 0..self.names.len() as Gen {
                    let mut v = u.clone();
                    v.push(g);
                    let n = v.len();
                    let reducible = (1..=self.max_lhs.min(n)).any(|k| self.lookup.contains_key(&v.slice(n - k, n)));
                    if !reducible {
                        next.push(v);
                    }
                }
            }
            next.sort();
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }

    /// Number of cached normal forms.
    pub fn cache_len(&self) -> usize {
        self.cache.lock().unwrap().len()
    }

    /// Overlap ambiguities up to total degree `bound` and whether each resolves.
    pub fn check_confluence(&self, bound: usize) -> ConfluenceReport {
        let mut overlaps = Vec::new();
        let mut seen = HashSet::new();
        for r1 in &self.rules {
            for r2 in &self.rules {
                let (l1, l2) = (&r1.lhs, &r2.lhs);
                for k in 1..l1.len().min(l2.len()) {
                    if l1[l1.len() - k..] != l2[..k] {
                        continue;
                    }
                    let word = l1.concat(&l2.slice(k, l2.len()));
                    if word.len() > bound || !seen.insert((word.clone(), l1.clone(), l2.clone())) {
                        continue;
                    }
                    let tail = NCPoly::word(l2.slice(k, l2.len()));
                    let head = NCPoly::word(l1.slice(0, l1.len() - k));
                    let left = self.normal_form(&r1.rhs.mul_free(&tail));
                    let right = self.normal_form(&head.mul_free(&r2.rhs));
                    let agrees = left == right;
                    overlaps.push(Overlap { word, left, right, agrees });
                }
            }
        }
        let confluent = overlaps.iter().all(|o| o.agrees);
        ConfluenceReport { bound, overlaps, confluent }
    }
}

#[derive(Clone, Debug)]
pub struct Overlap {
    pub word: Word,
    pub left: NCPoly,
    pub right: NCPoly,
    pub agrees: bool,
}

#[derive(Clone, Debug)]
pub struct ConfluenceReport {
    pub bound: usize,
    pub overlaps: Vec<Overlap>,
    pub confluent: bool,
}

impl ConfluenceReport {
    pub fn failures(&self) -> impl Iterator<Item = &Overlap> {
        self.overlaps.iter().filter(|o| !o.agrees)
    }
}
