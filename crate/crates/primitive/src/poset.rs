//! Prime sets with a transitive antisymmetric relation `◁`, and the primitive monoid
//! `M(D, ◁) = ⟨D | e + f = f for e ◁ f⟩` in canonical form.

use std::collections::BTreeSet;
use std::fmt::Write;

use refmon_core::parse::{is_identifier, strip_comment};
use refmon_core::{GeneratorSet, Presentation, Word};
use serde::Serialize;

use crate::error::PosetError;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct PrimePoset {
    pub name: String,
    pub primes: Vec<String>,
    /// Pairs `(e, f)` with `e ◁ f`.
    pub rel: BTreeSet<(usize, usize)>,
}

/// Checks transitivity and antisymmetry; self-pairs `p ◁ p` are allowed.
pub fn validate_poset(
    name: impl Into<String>,
    primes: Vec<String>,
    rel: BTreeSet<(usize, usize)>,
) -> Result<PrimePoset, PosetError> {
    let mut seen = BTreeSet::new();
    for p in &primes {
        if !seen.insert(p) {
            return Err(PosetError::Duplicate(p.clone()));
        }
    }
    let n = primes.len();
    if let Some(&(e, f)) = rel.iter().find(|&&(e, f)| e >= n || f >= n) {
        return Err(PosetError::UnknownPrime(format!("index {}", e.max(f))));
    }
    for &(e, f) in &rel {
        if e != f && rel.contains(&(f, e)) {
            return Err(PosetError::Antisymmetry(
                primes[e].clone(),
                primes[f].clone(),
            ));
        }
        for &(f2, g) in rel.range((f, 0)..(f + 1, 0)) {
            debug_assert_eq!(f2, f);
            if !rel.contains(&(e, g)) {
                return Err(PosetError::Transitivity(
                    primes[e].clone(),
                    primes[f].clone(),
                    primes[g].clone(),
                ));
            }
        }
    }
    Ok(PrimePoset {
        name: name.into(),
        primes,
        rel,
    })
}

/// An element of `M(D, ◁)` as a coefficient per prime, in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PrimElem {
    coeffs: Vec<u64>,
}

impl PrimElem {
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn degree(&self) -> u64 {
        self.coeffs.iter().sum()
    }
}

impl PrimePoset {
    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    pub fn below(&self, e: usize, f: usize) -> bool {
        self.rel.contains(&(e, f))
    }

    pub fn is_idempotent(&self, p: usize) -> bool {
        self.below(p, p)
    }

    fn check(&self, coeffs: &[u64]) -> Result<(), PosetError> {
        if coeffs.len() == self.len() {
            Ok(())
        } else {
            Err(PosetError::Mismatch {
                expected: self.len(),
                found: coeffs.len(),
            })
        }
    }

    /// Deletes every `q` below another prime `q' ≠ q` in the support and caps idempotent
    /// primes at 1.
    pub fn normalize(&self, raw: &[u64]) -> Result<PrimElem, PosetError> {
        self.check(raw)?;
        let coeffs = (0..self.len())
            .map(|q| {
                let c = raw[q];
                let absorbed = (0..self.len()).any(|r| r != q && raw[r] > 0 && self.below(q, r));
                if c == 0 || absorbed {
                    0
                } else if self.is_idempotent(q) {
                    1
                } else {
                    c
                }
            })
            .collect();
        Ok(PrimElem { coeffs })
    }

    pub fn zero(&self) -> PrimElem {
        PrimElem {
            coeffs: vec![0; self.len()],
        }
    }

    pub fn prime(&self, q: usize) -> PrimElem {
        let mut raw = vec![0; self.len()];
        raw[q] = 1;
        self.normalize(&raw).expect("right length")
    }

    pub fn add(&self, a: &PrimElem, b: &PrimElem) -> Result<PrimElem, PosetError> {
        self.check(&a.coeffs)?;
        self.check(&b.coeffs)?;
        let raw: Vec<u64> = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect();
        self.normalize(&raw)
    }

    pub fn equal(&self, a: &PrimElem, b: &PrimElem) -> Result<bool, PosetError> {
        self.check(&a.coeffs)?;
        self.check(&b.coeffs)?;
        Ok(self.normalize(&a.coeffs)? == self.normalize(&b.coeffs)?)
    }

    /// `a ≤ b` with a complement. Each prime `q` of `a` must be absorbed by some `r ≠ q` of
    /// `b` with `q ◁ r`, or occur in `b` with `q ◁ q` or at least the same coefficient.
    pub fn leq(&self, a: &PrimElem, b: &PrimElem) -> Result<Option<PrimElem>, PosetError> {
        let (a, b) = (self.normalize(&a.coeffs)?, self.normalize(&b.coeffs)?);
        let mut c = b.coeffs.clone();
        for q in 0..self.len() {
            if a.coeffs[q] == 0 {
                continue;
            }
            let absorbed = (0..self.len()).any(|r| r != q && b.coeffs[r] > 0 && self.below(q, r));
            if absorbed {
                continue;
            }
            if b.coeffs[q] == 0 {
                return Ok(None);
            }
            if !self.is_idempotent(q) {
                if a.coeffs[q] > b.coeffs[q] {
                    return Ok(None);
                }
                c[q] = b.coeffs[q] - a.coeffs[q];
            }
        }
        let c = self.normalize(&c)?;
        debug_assert_eq!(self.add(&a, &c)?, b);
        Ok(Some(c))
    }

    /// Canonical elements with raw coefficient sum at most `max_degree`, deduplicated.
    pub fn elements(&self, max_degree: u64) -> Vec<PrimElem> {
        let set: BTreeSet<PrimElem> = refmon_core::words_up_to(self.len(), max_degree)
            .iter()
            .map(|w| {
                self.normalize(&w.to_dense(self.len()))
                    .expect("right length")
            })
            .collect();
        set.into_iter().collect()
    }

    pub fn to_word(&self, e: &PrimElem) -> Word {
        Word::from_dense(&e.coeffs)
    }

    pub fn from_word(&self, w: &Word) -> PrimElem {
        self.normalize(&w.to_dense(self.len()))
            .expect("right length")
    }

    pub fn show(&self, e: &PrimElem) -> String {
        let gens = GeneratorSet::new(self.primes.clone()).expect("distinct primes");
        gens.show(&self.to_word(e))
    }
}

/// `⟨D | e + f = f for all e ◁ f⟩`.
pub fn presentation_of(p: &PrimePoset) -> Presentation {
    let gens = GeneratorSet::new(p.primes.clone()).expect("validated primes");
    let mut pres = Presentation::new(p.name.clone(), gens);
    for &(e, f) in &p.rel {
        let f_word = Word::generator(f);
        pres.add_relation(Word::generator(e).add(&f_word), f_word)
            .expect("valid indices");
    }
    pres
}

/// Parses `poset <name>`, `primes <id>…` and `below <e> <f>` lines.
pub fn parse_poset(text: &str) -> Result<PrimePoset, PosetError> {
    let mut name = None;
    let mut primes: Vec<String> = Vec::new();
    let mut pairs = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = n + 1;
        let body = strip_comment(raw);
        if body.is_empty() {
            continue;
        }
        let perr = |m: String| PosetError::Parse { line, message: m };
        let words: Vec<&str> = body.split_whitespace().collect();
        match words[..] {
            ["poset", id] if is_identifier(id) => {
                if name.replace(id.to_string()).is_some() {
                    return Err(perr("second `poset` line".into()));
                }
            }
            ["primes", ref ids @ ..] => {
                for id in ids {
                    if !is_identifier(id) {
                        return Err(perr(format!("`{id}` is not an identifier")));
                    }
                    if primes.iter().any(|p| p == id) {
                        return Err(perr(format!("duplicate prime `{id}`")));
                    }
                    primes.push(id.to_string());
                }
            }
            ["below", e, f] => {
                let idx = |id: &str| {
                    primes
                        .iter()
                        .position(|p| p == id)
                        .ok_or_else(|| perr(format!("unknown prime `{id}`")))
                };
                pairs.push((idx(e)?, idx(f)?));
            }
            _ => return Err(perr(format!("cannot parse `{body}`"))),
        }
    }
    let name = name.ok_or(PosetError::Parse {
        line: 0,
        message: "missing `poset <name>` line".into(),
    })?;
    validate_poset(name, primes, pairs.into_iter().collect())
}

pub fn poset_to_text(p: &PrimePoset) -> String {
    let mut out = format!("poset {}\nprimes {}\n", p.name, p.primes.join(" "));
    for &(e, f) in &p.rel {
        writeln!(out, "below {} {}", p.primes[e], p.primes[f]).unwrap();
    }
    out
}

/// Every transitive antisymmetric relation on `n` primes named `p0, p1, …`.
pub fn all_posets(n: usize) -> Vec<PrimePoset> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|e| (0..n).map(move |f| (e, f))).collect();
    let primes: Vec<String> = (0..n).map(|i| format!("p{i}")).collect();
    (0u64..1 << pairs.len())
        .filter_map(|mask| {
            let rel = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &pr)| pr)
                .collect();
            validate_poset(format!("P{n}_{mask}"), primes.clone(), rel).ok()
        })
        .collect()
}
