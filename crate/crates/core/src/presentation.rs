//! Presentations `⟨generators | relations⟩` of commutative monoids.

use serde::Serialize;

use crate::error::CoreError;
use crate::word::{GeneratorSet, Word};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Relation {
    pub lhs: Word,
    pub rhs: Word,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Presentation {
    pub name: String,
    pub gens: GeneratorSet,
    pub relations: Vec<Relation>,
}

impl Presentation {
    pub fn new(name: impl Into<String>, gens: GeneratorSet) -> Self {
        Presentation {
            name: name.into(),
            gens,
            relations: Vec::new(),
        }
    }

    /// Adds `lhs = rhs`. Trivial relations are dropped; returns whether it was kept.
    pub fn add_relation(&mut self, lhs: Word, rhs: Word) -> Result<bool, CoreError> {
        self.gens.check(&lhs)?;
        self.gens.check(&rhs)?;
        if lhs == rhs {
            return Ok(false);
        }
        self.relations.push(Relation { lhs, rhs });
        Ok(true)
    }

    /// Convenience for builders: relation given by generator-name multisets.
    pub fn relate(&mut self, lhs: &[(&str, u64)], rhs: &[(&str, u64)]) -> Result<bool, CoreError> {
        let l = self.named_word(lhs)?;
        let r = self.named_word(rhs)?;
        self.add_relation(l, r)
    }

    pub fn named_word(&self, parts: &[(&str, u64)]) -> Result<Word, CoreError> {
        let mut pairs = Vec::with_capacity(parts.len());
        for &(name, e) in parts {
            let i = self
                .gens
                .index_of(name)
                .ok_or_else(|| CoreError::UnknownGenerator(name.to_string()))?;
            pairs.push((i, e));
        }
        Ok(Word::from_pairs(pairs))
    }

    pub fn gen(&self, name: &str) -> Result<Word, CoreError> {
        self.gens.word(name)
    }

    pub fn show(&self, w: &Word) -> String {
        self.gens.show(w)
    }

    pub fn show_relation(&self, r: &Relation) -> String {
        format!("{} = {}", self.show(&r.lhs), self.show(&r.rhs))
    }

    /// Serializes in the line-oriented presentation file format.
    pub fn to_text(&self) -> String {
        let mut out = format!("monoid {}\n", self.name);
        if !self.gens.is_empty() {
            out.push_str("generators ");
            out.push_str(&self.gens.names().join(" "));
            out.push('\n');
        }
        for r in &self.relations {
            out.push_str("relation ");
            out.push_str(&self.show_relation(r));
            out.push('\n');
        }
        out
    }
}
