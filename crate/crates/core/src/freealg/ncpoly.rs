use super::word::{Gen, Word};
use crate::scalar::{Scalar, ScalarError};
use std::collections::btree_map::{self, BTreeMap};

/// A finite linear combination of words. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct NCPoly {
    terms: BTreeMap<Word, Scalar>,
}

impl NCPoly {
    pub fn zero() -> Self {
        NCPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::scalar(Scalar::one())
    }

    pub fn scalar(c: Scalar) -> Self {
        Self::term(Word::one(), c)
    }

    pub fn term(w: Word, c: Scalar) -> Self {
        let mut p = Self::zero();
        p.add_term(w, c);
        p
    }

    pub fn word(w: Word) -> Self {
        Self::term(w, Scalar::one())
    }

    pub fn gen(g: Gen) -> Self {
        Self::word(Word::gen(g))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> btree_map::Iter<'_, Word, Scalar> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> btree_map::IntoIter<Word, Scalar> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, w: &Word) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Largest word with its coefficient.
    pub fn leading(&self) -> Option<(&Word, &Scalar)> {
        self.terms.iter().next_back()
    }

    /// The constant if the polynomial is a multiple of the unit word.
    pub fn as_scalar(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => self.terms.get(&Word::one()).cloned(),
            _ => None,
        }
    }

    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|w| w.len()).max()
    }

    pub fn add_term(&mut self, w: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn checked_add_term(&mut self, w: Word, c: Scalar) -> Result<(), ScalarError> {
        if let Some(old) = self.terms.get(&w) {
            old.checked_add(&c)?;
        }
        self.add_term(w, c);
        Ok(())
    }

    pub fn add_scaled(&mut self, other: &NCPoly, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (w, a) in &other.terms {
            self.add_term(w.clone(), a * c);
        }
    }

    pub fn add(&self, other: &NCPoly) -> NCPoly {
        let mut r = self.clone();
        r.add_scaled(other, &Scalar::one());
        r
    }

    pub fn sub(&self, other: &NCPoly) -> NCPoly {
        let mut r = self.clone();
        r.add_scaled(other, &Scalar::from_int(-1));
        r
    }

    pub fn neg(&self) -> NCPoly {
        self.scale(&Scalar::from_int(-1))
    }

    pub fn scale(&self, c: &Scalar) -> NCPoly {
        if c.is_zero() {
            return NCPoly::zero();
        }
        NCPoly { terms: self.terms.iter().map(|(w, a)| (w.clone(), a * c)).collect() }
    }

    /// Product in the free algebra (word concatenation), without reduction.
    pub fn mul_free(&self, other: &NCPoly) -> NCPoly {
        let mut r = NCPoly::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                r.add_term(u.concat(v), a * b);
            }
        }
        r
    }

    pub fn max_gen(&self) -> Option<Gen> {
        self.terms.keys().filter_map(|w| w.max_gen()).max()
    }

    /// Applies `f` to every word and sums the scaled images.
    pub fn map_linear<F: FnMut(&Word) -> NCPoly>(&self, mut f: F) -> NCPoly {
        let mut r = NCPoly::zero();
        for (w, c) in &self.terms {
            r.add_scaled(&f(w), c);
        }
        r
    }
}

impl FromIterator<(Word, Scalar)> for NCPoly {
    fn from_iter<I: IntoIterator<Item = (Word, Scalar)>>(iter: I) -> Self {
        let mut p = NCPoly::zero();
        for (w, c) in iter {
            p.add_term(w, c);
        }
        p
    }
}
