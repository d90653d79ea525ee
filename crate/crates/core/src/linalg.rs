//! Gaussian elimination over exact scalars.

use crate::scalar::{Scalar, ScalarError};
use std::collections::BTreeMap;

/// A sparse linear equation `Σ coeffs[j] x_j = rhs`.
#[derive(Clone, Debug, Default)]
pub struct Equation {
    pub coeffs: BTreeMap<usize, Scalar>,
    pub rhs: Scalar,
}

impl Equation {
    pub fn new() -> Self {
        Equation::default()
    }

    pub fn add(&mut self, var: usize, c: &Scalar) {
        let e = self.coeffs.entry(var).or_insert_with(Scalar::zero);
        *e = &*e + c;
        if e.is_zero() {
            self.coeffs.remove(&var);
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.coeffs.is_empty() && self.rhs.is_zero()
    }
}

#[derive(Clone, Debug)]
pub struct Solution {
    pub values: Vec<Scalar>,
    /// Variables left undetermined (set to zero in `values`).
    pub free: Vec<usize>,
}

impl Solution {
    pub fn is_unique(&self) -> bool {
        self.free.is_empty()
    }
}

/// Solves the system; `None` if inconsistent.
pub fn solve(nvars: usize, eqs: Vec<Equation>) -> Result<Option<Solution>, ScalarError> {
    let mut rows: Vec<Equation> = eqs.into_iter().filter(|e| !e.is_trivial()).collect();
    let mut pivots: Vec<(usize, Equation)> = Vec::new();
    while let Some(mut row) = rows.pop() {
        for (var, prow) in &pivots {
            if let Some(c) = row.coeffs.get(var).cloned() {
                for (v, a) in &prow.coeffs {
                    row.add(*v, &-(&c * a));
                }
                row.rhs = row.rhs.checked_sub(&c.checked_mul(&prow.rhs)?)?;
            }
        }
        if row.coeffs.is_empty() {
            if !row.rhs.is_zero() {
                return Ok(None);
            }
            continue;
        }
        let (&var, _) = row.coeffs.iter().min_by_key(|(_, c)| c.complexity()).unwrap();
        let inv = row.coeffs[&var].inverse()?;
        row.coeffs = row.coeffs.iter().map(|(v, a)| (*v, a * &inv)).collect();
        row.rhs = &row.rhs * &inv;
        for (_, prow) in pivots.iter_mut() {
            if let Some(c) = prow.coeffs.get(&var).cloned() {
                for (v, a) in &row.coeffs {
                    prow.add(*v, &-(&c * a));
                }
                prow.rhs = &prow.rhs - &(&c * &row.rhs);
            }
        }
        pivots.push((var, row));
    }
    let mut values = vec![Scalar::zero(); nvars];
    let pivot_vars: std::collections::HashSet<usize> = pivots.iter().map(|(v, _)| *v).collect();
    let free: Vec<usize> = (0..nvars).filter(|v| !pivot_vars.contains(v)).collect();
    for (var, row) in &pivots {
        values[*var] = row.rhs.clone();
    }
    Ok(Some(Solution { values, free }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_by_two() {
        let q = Scalar::q();
        let mut e1 = Equation::new();
        e1.add(0, &Scalar::one());
        e1.add(1, &q);
        e1.rhs = Scalar::one();
        let mut e2 = Equation::new();
        e2.add(0, &Scalar::one());
        e2.add(1, &Scalar::from_int(-1));
        e2.rhs = Scalar::zero();
        let s = solve(2, vec![e1, e2]).unwrap().unwrap();
        assert!(s.is_unique());
        let x = (Scalar::one() + &q).inverse().unwrap();
        assert_eq!(s.values, vec![x.clone(), x]);
    }

    #[test]
    fn inconsistent() {
        let mut e1 = Equation::new();
        e1.add(0, &Scalar::one());
        e1.rhs = Scalar::one();
        let mut e2 = Equation::new();
        e2.add(0, &Scalar::one());
        e2.rhs = Scalar::from_int(2);
        assert!(solve(1, vec![e1, e2]).unwrap().is_none());
    }
}
