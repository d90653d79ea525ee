//! Finite structure-constant models: algebras given by an explicit basis and product table.

use crate::freealg::Presentation;
use crate::scalar::Scalar;
use crate::tensor::{Key, TensorElem};
use crate::text::print;
use std::collections::BTreeMap;
use std::sync::Arc;

pub fn key_degree(k: &[crate::freealg::Word]) -> usize {
    k.iter().map(|w| w.len()).sum()
}

/// An algebra on the span of `basis`, each basis element a tuple of words (one per slot).
///
/// With `truncation = Some(d)` only products of total degree `≤ d` are tabulated.
#[derive(Clone, Debug)]
pub struct StructureConstantModel {
    pub slots: Vec<Arc<Presentation>>,
    pub basis: Vec<Key>,
    pub product: BTreeMap<(Key, Key), TensorElem>,
    pub coproduct: BTreeMap<Key, TensorElem>,
    pub antipode: BTreeMap<Key, TensorElem>,
    pub truncation: Option<usize>,
}

impl StructureConstantModel {
    /// Tabulates `f` on all basis pairs within the truncation window.
    pub fn tabulate(
        slots: Vec<Arc<Presentation>>,
        basis: Vec<Key>,
        truncation: Option<usize>,
        mut f: impl FnMut(&Key, &Key) -> TensorElem,
    ) -> Self {
        let mut product = BTreeMap::new();
        for a in &basis {
            for b in &basis {
                if truncation.is_some_and(|d| key_degree(a) + key_degree(b) > d) {
                    continue;
                }
                product.insert((a.clone(), b.clone()), f(a, b));
            }
        }
        StructureConstantModel {
            slots,
            basis,
            product,
            coproduct: BTreeMap::new(),
            antipode: BTreeMap::new(),
            truncation,
        }
    }

    pub fn rank(&self) -> usize {
        self.slots.len()
    }

    pub fn unit(&self) -> TensorElem {
        TensorElem::unit(self.rank())
    }

    pub fn basis_element(&self, k: &Key) -> TensorElem {
        TensorElem::pure(k.clone(), Scalar::one())
    }

    pub fn mul_keys(&self, a: &Key, b: &Key) -> Option<&TensorElem> {
        self.product.get(&(a.clone(), b.clone()))
    }

    /// Bilinear product; `None` when an entry lies outside the table.
    pub fn mul(&self, a: &TensorElem, b: &TensorElem) -> Option<TensorElem> {
        let mut r = TensorElem::zero(self.rank());
        for (ka, ca) in a.terms() {
            for (kb, cb) in b.terms() {
                let p = self.mul_keys(ka, kb)?;
                r.add_scaled(p, &(ca * cb));
            }
        }
        Some(r)
    }

    pub fn mul_all(&self, factors: &[TensorElem]) -> Option<TensorElem> {
        let mut acc = self.unit();
        for f in factors {
            acc = self.mul(&acc, f)?;
        }
        Some(acc)
    }

    /// Checks `(ab)c = a(bc)` on basis triples inside the window; returns a failing triple.
    pub fn check_associativity(&self) -> Result<(), (Key, Key, Key)> {
        for a in &self.basis {
            for b in &self.basis {
                for c in &self.basis {
                    let d = key_degree(a) + key_degree(b) + key_degree(c);
                    if self.truncation.is_some_and(|t| d > t) {
                        continue;
                    }
                    let (ea, eb, ec) = (self.basis_element(a), self.basis_element(b), self.basis_element(c));
                    let left = self.mul(&ea, &eb).and_then(|ab| self.mul(&ab, &ec));
                    let right = self.mul(&eb, &ec).and_then(|bc| self.mul(&ea, &bc));
                    if left != right {
                        return Err((a.clone(), b.clone(), c.clone()));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn show(&self, t: &TensorElem) -> String {
        let slots: Vec<&Presentation> = self.slots.iter().map(|p| &**p).collect();
        print::tensor_in(t, &slots)
    }

    pub fn show_key(&self, k: &Key) -> String {
        self.show(&self.basis_element(k))
    }

    /// One line per product entry, sorted by key.
    pub fn table_lines(&self) -> Vec<String> {
        self.product
            .iter()
            .map(|((a, b), v)| format!("{} · {} = {}", self.show_key(a), self.show_key(b), self.show(v)))
            .collect()
    }
}
