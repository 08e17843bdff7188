//! Generator sets and words (finite exponent multisets over generator indices).

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::error::CoreError;

/// Ordered list of distinct generator names, indexable by position and by name.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneratorSet {
    names: Vec<String>,
    #[serde(skip)]
    index: HashMap<String, usize>,
}

impl GeneratorSet {
    pub fn new<I, S>(names: I) -> Result<Self, CoreError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut set = GeneratorSet {
            names: Vec::new(),
            index: HashMap::new(),
        };
        for name in names {
            set.push(name.into())?;
        }
        Ok(set)
    }

    /// Appends a generator and returns its index.
    pub fn push(&mut self, name: String) -> Result<usize, CoreError> {
        if name.is_empty() {
            return Err(CoreError::EmptyGeneratorName);
        }
        if self.index.contains_key(&name) {
            return Err(CoreError::DuplicateGenerator(name));
        }
        let idx = self.names.len();
        self.index.insert(name.clone(), idx);
        self.names.push(name);
        Ok(idx)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, idx: usize) -> &str {
        &self.names[idx]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    /// The word consisting of one copy of the named generator.
    pub fn word(&self, name: &str) -> Result<Word, CoreError> {
        self.index_of(name)
            .map(Word::generator)
            .ok_or_else(|| CoreError::UnknownGenerator(name.to_string()))
    }

    /// Errors unless every index used by `w` names a generator of this set.
    pub fn check(&self, w: &Word) -> Result<(), CoreError> {
        match w.max_index() {
            Some(i) if i >= self.len() => Err(CoreError::GeneratorMismatch {
                index: i,
                size: self.len(),
            }),
            _ => Ok(()),
        }
    }

    /// Checked addition of two words over this generator set.
    pub fn add_words(&self, u: &Word, v: &Word) -> Result<Word, CoreError> {
        self.check(u)?;
        self.check(v)?;
        Ok(u.add(v))
    }

    /// Renders a word as `2*x0 + y1`, or `0` for the empty word.
    pub fn show(&self, w: &Word) -> String {
        if w.is_zero() {
            return "0".to_string();
        }
        w.terms()
            .iter()
            .map(|&(g, e)| {
                if e == 1 {
                    self.name(g).to_string()
                } else {
                    format!("{e}*{}", self.name(g))
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// A word: sparse exponent map, sorted by generator index, exponents strictly positive.
///
/// The derived `Eq` is raw multiset equality. Monoid equality lives in
/// [`crate::oracle::decide_equal`].
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Word {
    terms: Vec<(usize, u64)>,
}

impl Word {
    pub fn zero() -> Self {
        Word { terms: Vec::new() }
    }

    pub fn generator(idx: usize) -> Self {
        Word {
            terms: vec![(idx, 1)],
        }
    }

    /// Builds a word from arbitrary `(index, exponent)` pairs; repeated indices accumulate.
    pub fn from_pairs<I: IntoIterator<Item = (usize, u64)>>(pairs: I) -> Self {
        let mut terms: Vec<(usize, u64)> = pairs.into_iter().filter(|p| p.1 > 0).collect();
        terms.sort_unstable();
        let mut out: Vec<(usize, u64)> = Vec::with_capacity(terms.len());
        for (g, e) in terms {
            match out.last_mut() {
                Some(last) if last.0 == g => last.1 += e,
                _ => out.push((g, e)),
            }
        }
        Word { terms: out }
    }

    /// Dense constructor: `exps[i]` is the exponent of generator `i`.
    pub fn from_dense(exps: &[u64]) -> Self {
        Word::from_pairs(exps.iter().copied().enumerate())
    }

    pub fn to_dense(&self, len: usize) -> Vec<u64> {
        let mut v = vec![0; len];
        for &(g, e) in &self.terms {
            v[g] = e;
        }
        v
    }

    pub fn terms(&self) -> &[(usize, u64)] {
        &self.terms
    }

    pub fn exponent(&self, idx: usize) -> u64 {
        match self.terms.binary_search_by_key(&idx, |t| t.0) {
            Ok(p) => self.terms[p].1,
            Err(_) => 0,
        }
    }

    pub fn degree(&self) -> u64 {
        self.terms.iter().map(|t| t.1).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn max_index(&self) -> Option<usize> {
        self.terms.last().map(|t| t.0)
    }

    /// Pointwise sum of exponent maps.
    pub fn add(&self, other: &Word) -> Word {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Word { terms: out }
    }

    pub fn scale(&self, k: u64) -> Word {
        if k == 0 {
            return Word::zero();
        }
        Word {
            terms: self.terms.iter().map(|&(g, e)| (g, e * k)).collect(),
        }
    }

    /// Componentwise containment: every exponent of `other` is at most the one in `self`.
    pub fn contains(&self, other: &Word) -> bool {
        let mut i = 0;
        for &(g, e) in &other.terms {
            while i < self.terms.len() && self.terms[i].0 < g {
                i += 1;
            }
            if i == self.terms.len() || self.terms[i].0 != g || self.terms[i].1 < e {
                return false;
            }
        }
        true
    }

    /// `self - other` as multisets, or `None` when `other` is not contained in `self`.
    pub fn checked_sub(&self, other: &Word) -> Option<Word> {
        if !self.contains(other) {
            return None;
        }
        let mut out = Vec::with_capacity(self.terms.len());
        let mut j = 0;
        for &(g, e) in &self.terms {
            let mut e = e;
            if j < other.terms.len() && other.terms[j].0 == g {
                e -= other.terms[j].1;
                j += 1;
            }
            if e > 0 {
                out.push((g, e));
            }
        }
        Some(Word { terms: out })
    }

    /// Raw multiset equality. This is not equality in a presented monoid.
    pub fn raw_equal(&self, other: &Word) -> bool {
        self == other
    }

    /// Every sub-multiset of `self`, in lexicographic order of exponent vectors.
    pub fn sub_words(&self) -> Vec<Word> {
        let mut out = vec![Word::zero()];
        for &(g, e) in &self.terms {
            let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
            for w in &out {
                for k in 0..=e {
                    next.push(w.add(&Word::from_pairs([(g, k)])));
                }
            }
            out = next;
        }
        out
    }

    /// Replaces each generator index through `map`.
    pub fn reindex(&self, map: impl Fn(usize) -> usize) -> Word {
        Word::from_pairs(self.terms.iter().map(|&(g, e)| (map(g), e)))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|&(g, e)| format!("{e}*g{g}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// All words of total degree at most `max_degree` over `n` generators,
/// ordered by degree and then lexicographically by exponent vector.
pub fn words_up_to(n: usize, max_degree: u64) -> Vec<Word> {
    let mut out = Vec::new();
    for d in 0..=max_degree {
        let mut exps = vec![0u64; n];
        compositions(&mut exps, 0, d, &mut out);
    }
    out
}

fn compositions(exps: &mut Vec<u64>, pos: usize, remaining: u64, out: &mut Vec<Word>) {
    if pos == exps.len() {
        if remaining == 0 {
            out.push(Word::from_dense(exps));
        }
        return;
    }
    if pos + 1 == exps.len() {
        exps[pos] = remaining;
        out.push(Word::from_dense(exps));
        exps[pos] = 0;
        return;
    }
    for e in (0..=remaining).rev() {
        exps[pos] = e;
        compositions(exps, pos + 1, remaining - e, out);
    }
    exps[pos] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn add_examples() {
        let x = Word::generator(0);
        let y = Word::generator(1);
        let z = Word::generator(2);
        assert_eq!(x.add(&y).add(&z), Word::from_dense(&[1, 1, 1]));
        assert_eq!(x.add(&Word::zero()), x);
        let a = Word::generator(0);
        assert_eq!(a.scale(2).add(&a.scale(3)), a.scale(5));
    }

    #[test]
    fn generator_set_rejects_duplicates() {
        assert!(matches!(
            GeneratorSet::new(["a", "b", "a"]),
            Err(CoreError::DuplicateGenerator(_))
        ));
        assert!(GeneratorSet::new(["a", ""]).is_err());
    }

    #[test]
    fn add_words_checks_generator_set() {
        let g = GeneratorSet::new(["a", "b"]).unwrap();
        assert!(g
            .add_words(&Word::generator(0), &Word::generator(5))
            .is_err());
        assert_eq!(
            g.show(
                &g.add_words(&Word::generator(0), &Word::generator(0))
                    .unwrap()
            ),
            "2*a"
        );
    }

    #[test]
    fn sub_words_count() {
        let w = Word::from_dense(&[2, 0, 1]);
        assert_eq!(w.sub_words().len(), 6);
    }

    #[test]
    fn words_up_to_count() {
        // C(n + d, n) words of degree at most d over n generators.
        assert_eq!(words_up_to(3, 4).len(), 35);
        assert_eq!(words_up_to(0, 4).len(), 1);
    }

    proptest! {
        #[test]
        fn sub_inverts_add(a in prop::collection::vec(0u64..4, 4), b in prop::collection::vec(0u64..4, 4)) {
            let (u, v) = (Word::from_dense(&a), Word::from_dense(&b));
            let s = u.add(&v);
            prop_assert!(s.contains(&u));
            prop_assert_eq!(s.checked_sub(&u), Some(v.clone()));
            prop_assert_eq!(s.degree(), u.degree() + v.degree());
            prop_assert_eq!(u.add(&v), v.add(&u));
        }
    }
}
