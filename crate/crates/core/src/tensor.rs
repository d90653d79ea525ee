//! Linear combinations of tuples of words, one word per tensor slot.

use crate::freealg::{NCPoly, Presentation, Word};
use crate::scalar::Scalar;
use std::collections::btree_map::{self, BTreeMap};

pub type Key = Vec<Word>;

/// An element of `A_1 ⊗ … ⊗ A_n`. Rank 0 is a plain scalar.
///
/// Slot presentations are not stored; operations that reduce take them as arguments.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TensorElem {
    rank: usize,
    terms: BTreeMap<Key, Scalar>,
}

impl TensorElem {
    pub fn zero(rank: usize) -> Self {
        TensorElem { rank, terms: BTreeMap::new() }
    }

    /// `1 ⊗ … ⊗ 1`.
    pub fn unit(rank: usize) -> Self {
        Self::pure(vec![Word::one(); rank], Scalar::one())
    }

    pub fn scalar(c: Scalar) -> Self {
        Self::pure(Vec::new(), c)
    }

    pub fn pure(key: Key, c: Scalar) -> Self {
        let mut t = Self::zero(key.len());
        t.add_term(key, c);
        t
    }

    pub fn from_poly(p: &NCPoly) -> Self {
        let mut t = Self::zero(1);
        for (w, c) in p.terms() {
            t.add_term(vec![w.clone()], c.clone());
        }
        t
    }

    /// `a ⊗ b` for two algebra elements.
    pub fn from_pair(a: &NCPoly, b: &NCPoly) -> Self {
        Self::from_poly(a).tensor(&Self::from_poly(b))
    }

    pub fn rank(&self) -> usize {
        self.rank
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

    pub fn terms(&self) -> btree_map::Iter<'_, Key, Scalar> {
        self.terms.iter()
    }

    pub fn coeff(&self, key: &[Word]) -> Scalar {
        self.terms.get(key).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn as_scalar(&self) -> Option<Scalar> {
        if self.rank == 0 {
            return Some(self.coeff(&[]));
        }
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => {
                let (k, c) = self.terms.iter().next().unwrap();
                k.iter().all(|w| w.is_one()).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn to_poly(&self) -> NCPoly {
        assert_eq!(self.rank, 1, "to_poly needs rank 1");
        self.terms.iter().map(|(k, c)| (k[0].clone(), c.clone())).collect()
    }

    pub fn add_term(&mut self, key: Key, c: Scalar) {
        debug_assert_eq!(key.len(), self.rank);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
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

    pub fn add_scaled(&mut self, other: &TensorElem, c: &Scalar) {
        assert_eq!(self.rank, other.rank, "tensor rank mismatch");
        if c.is_zero() {
            return;
        }
        for (k, a) in &other.terms {
            self.add_term(k.clone(), a * c);
        }
    }

    pub fn add(&self, other: &TensorElem) -> TensorElem {
        let mut r = self.clone();
        r.add_scaled(other, &Scalar::one());
        r
    }

    pub fn sub(&self, other: &TensorElem) -> TensorElem {
        let mut r = self.clone();
        r.add_scaled(other, &Scalar::from_int(-1));
        r
    }

    pub fn scale(&self, c: &Scalar) -> TensorElem {
        let mut r = TensorElem::zero(self.rank);
        r.add_scaled(self, c);
        r
    }

    /// Outer product: ranks add.
    pub fn tensor(&self, other: &TensorElem) -> TensorElem {
        let mut r = TensorElem::zero(self.rank + other.rank);
        for (k1, a) in &self.terms {
            for (k2, b) in &other.terms {
                let mut k = k1.clone();
                k.extend(k2.iter().cloned());
                r.add_term(k, a * b);
            }
        }
        r
    }

    /// Slotwise product in the free algebras, without reduction.
    pub fn mul_free(&self, other: &TensorElem) -> TensorElem {
        assert_eq!(self.rank, other.rank, "tensor rank mismatch");
        let mut r = TensorElem::zero(self.rank);
        for (k1, a) in &self.terms {
            for (k2, b) in &other.terms {
                let k = k1.iter().zip(k2).map(|(u, v)| u.concat(v)).collect();
                r.add_term(k, a * b);
            }
        }
        r
    }

    /// Slotwise product, reduced in the given slot presentations (the tensor product algebra).
    pub fn mul(&self, other: &TensorElem, slots: &[&Presentation]) -> TensorElem {
        self.mul_free(other).normalize(slots)
    }

    /// Reduces every slot to normal form.
    pub fn normalize(&self, slots: &[&Presentation]) -> TensorElem {
        assert_eq!(slots.len(), self.rank, "slot count mismatch");
        let mut r = TensorElem::zero(self.rank);
        for (k, c) in &self.terms {
            let mut acc = TensorElem::scalar(c.clone());
            for (w, p) in k.iter().zip(slots) {
                acc = acc.tensor(&TensorElem::from_poly(&p.nf_word(w)));
            }
            r.add_scaled(&acc, &Scalar::one());
        }
        r
    }

    /// Replaces slot `i` by the rank-`k` image `f(word)`, so the rank grows by `k - 1`.
    pub fn expand_slot<F: FnMut(&Word) -> TensorElem>(&self, i: usize, mut f: F) -> TensorElem {
        let mut out: Option<TensorElem> = None;
        for (key, c) in &self.terms {
            let img = f(&key[i]);
            let o = out.get_or_insert_with(|| TensorElem::zero(self.rank - 1 + img.rank));
            for (ik, ic) in img.terms() {
                let mut nk = key[..i].to_vec();
                nk.extend(ik.iter().cloned());
                nk.extend(key[i + 1..].iter().cloned());
                o.add_term(nk, c * ic);
            }
        }
        out.unwrap_or_else(|| TensorElem::zero(self.rank))
    }

    /// Applies a linear map to slot `i`.
    pub fn map_slot<F: FnMut(&Word) -> NCPoly>(&self, i: usize, mut f: F) -> TensorElem {
        let mut r = TensorElem::zero(self.rank);
        for (key, c) in &self.terms {
            for (w, a) in f(&key[i]).terms() {
                let mut nk = key.clone();
                nk[i] = w.clone();
                r.add_term(nk, c * a);
            }
        }
        r
    }

    /// Applies a functional to whole keys, scaling by the result; rank drops to `new_rank`.
    pub fn contract<F: FnMut(&[Word]) -> (Key, Scalar)>(&self, new_rank: usize, mut f: F) -> TensorElem {
        let mut r = TensorElem::zero(new_rank);
        for (key, c) in &self.terms {
            let (nk, s) = f(key);
            r.add_term(nk, c * &s);
        }
        r
    }

    /// Reorders slots: slot `j` of the result is slot `perm[j]` of `self`.
    pub fn permute(&self, perm: &[usize]) -> TensorElem {
        self.contract(perm.len(), |k| (perm.iter().map(|&p| k[p].clone()).collect(), Scalar::one()))
    }

    /// Multiplies slots `i` and `i + 1` together in `pres`.
    pub fn merge(&self, i: usize, pres: &Presentation) -> TensorElem {
        let mut r = TensorElem::zero(self.rank - 1);
        for (key, c) in &self.terms {
            for (w, a) in pres.nf_word(&key[i].concat(&key[i + 1])).terms() {
                let mut nk = key[..i].to_vec();
                nk.push(w.clone());
                nk.extend(key[i + 2..].iter().cloned());
                r.add_term(nk, c * a);
            }
        }
        r
    }

    /// Sum of coefficients times a scalar-valued function of each key.
    pub fn evaluate<F: FnMut(&[Word]) -> Scalar>(&self, mut f: F) -> Scalar {
        let mut s = Scalar::zero();
        for (key, c) in &self.terms {
            let v = f(key);
            if !v.is_zero() {
                s += &(c * &v);
            }
        }
        s
    }

    pub fn max_len(&self) -> usize {
        self.terms.keys().flat_map(|k| k.iter().map(|w| w.len())).max().unwrap_or(0)
    }
}

impl FromIterator<(Key, Scalar)> for TensorElem {
    /// Panics on an empty iterator; use `zero` for that case.
    fn from_iter<I: IntoIterator<Item = (Key, Scalar)>>(iter: I) -> Self {
        let mut it = iter.into_iter().peekable();
        let rank = it.peek().map(|(k, _)| k.len()).expect("empty tensor iterator");
        let mut t = TensorElem::zero(rank);
        for (k, c) in it {
            t.add_term(k, c);
        }
        t
    }
}
