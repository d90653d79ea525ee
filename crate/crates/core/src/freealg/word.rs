use smallvec::SmallVec;
use std::cmp::Ordering;
use std::ops::Deref;

pub type Gen = u16;

/// A monomial: a sequence of generator indices. The empty word is the unit.
///
/// Words are ordered degree-lexicographically, with generator precedence given
/// by index.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(SmallVec<[Gen; 8]>);

impl Word {
    pub fn one() -> Self {
        Word(SmallVec::new())
    }

    pub fn gen(g: Gen) -> Self {
        let mut v = SmallVec::new();
        v.push(g);
        Word(v)
    }

    pub fn from_slice(s: &[Gen]) -> Self {
        Word(SmallVec::from_slice(s))
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn push(&mut self, g: Gen) {
        self.0.push(g);
    }

    pub fn slice(&self, from: usize, to: usize) -> Word {
        Word::from_slice(&self.0[from..to])
    }

    /// Position of the first occurrence of `pat` as a subword.
    pub fn find(&self, pat: &[Gen]) -> Option<usize> {
        if pat.len() > self.len() {
            return None;
        }
        (0..=self.len() - pat.len()).find(|&i| &self.0[i..i + pat.len()] == pat)
    }

    pub fn contains(&self, pat: &[Gen]) -> bool {
        self.find(pat).is_some()
    }

    pub fn max_gen(&self) -> Option<Gen> {
        self.0.iter().copied().max()
    }
}

impl Deref for Word {
    type Target = [Gen];
    fn deref(&self) -> &[Gen] {
        &self.0
    }
}

impl FromIterator<Gen> for Word {
    fn from_iter<I: IntoIterator<Item = Gen>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl std::fmt::Debug for Word {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deglex() {
        let a = Word::from_slice(&[1, 0]);
        let b = Word::from_slice(&[0, 1]);
        let c = Word::from_slice(&[2]);
        assert!(b < a);
        assert!(c < b);
        assert!(Word::one() < c);
        assert_eq!(a.find(&[0]), Some(1));
    }
}
