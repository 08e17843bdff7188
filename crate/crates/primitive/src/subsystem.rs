//! Restrictions `M(X, ◁_X)` to subsets of primes and the induced transition maps.

use serde::Serialize;

use crate::error::PosetError;
use crate::poset::{validate_poset, PrimElem, PrimePoset};

/// The homomorphism `M(X, ◁_X) → M(Y, ◁_Y)` extending the inclusion `X ⊆ Y`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Transition {
    pub source: PrimePoset,
    pub target: PrimePoset,
    /// `embedding[i]` is the index in `target` of prime `i` of `source`.
    pub embedding: Vec<usize>,
}

impl Transition {
    pub fn apply(&self, e: &PrimElem) -> Result<PrimElem, PosetError> {
        let mut raw = vec![0; self.target.len()];
        let source = self.source.normalize(e.coeffs())?;
        for (i, &c) in source.coeffs().iter().enumerate() {
            raw[self.embedding[i]] += c;
        }
        self.target.normalize(&raw)
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &Transition) -> Result<Transition, PosetError> {
        if other.source != self.target {
            return Err(PosetError::Mismatch {
                expected: other.source.len(),
                found: self.target.len(),
            });
        }
        Ok(Transition {
            source: self.source.clone(),
            target: other.target.clone(),
            embedding: self.embedding.iter().map(|&i| other.embedding[i]).collect(),
        })
    }
}

/// `◁` restricted to the primes named in `subset`, with the map into `M(D, ◁)`.
pub fn finite_subsystem(
    p: &PrimePoset,
    subset: &[&str],
) -> Result<(PrimePoset, Transition), PosetError> {
    if subset.is_empty() {
        return Err(PosetError::EmptySubset);
    }
    let embedding = subset
        .iter()
        .map(|s| {
            p.primes
                .iter()
                .position(|q| q == s)
                .ok_or_else(|| PosetError::UnknownPrime(s.to_string()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let rel = p
        .rel
        .iter()
        .filter_map(|&(e, f)| {
            let i = embedding.iter().position(|&x| x == e)?;
            let j = embedding.iter().position(|&x| x == f)?;
            Some((i, j))
        })
        .collect();
    let name = format!("{}_{}", p.name, subset.join("_"));
    let primes = subset.iter().map(|s| s.to_string()).collect();
    let restricted = validate_poset(name, primes, rel)?;
    let t = Transition {
        source: restricted.clone(),
        target: p.clone(),
        embedding,
    };
    Ok((restricted, t))
}

/// The map `M(X, ◁_X) → M(Y, ◁_Y)` for nested subsystems of one poset.
pub fn transition_between(
    small: &Transition,
    large: &Transition,
) -> Result<Transition, PosetError> {
    let embedding = small
        .embedding
        .iter()
        .map(|i| {
            large
                .embedding
                .iter()
                .position(|j| j == i)
                .ok_or_else(|| PosetError::UnknownPrime(small.target.primes[*i].clone()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Transition {
        source: small.source.clone(),
        target: large.source.clone(),
        embedding,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::parse_poset;

    #[test]
    fn single_prime_subsystem_is_free() {
        let p = parse_poset("poset EF\nprimes e f\nbelow e f\n").unwrap();
        let (x, t) = finite_subsystem(&p, &["e"]).unwrap();
        assert!(x.rel.is_empty());
        let two_e = x.normalize(&[2]).unwrap();
        assert_ne!(two_e, x.prime(0));
        assert_eq!(t.apply(&two_e).unwrap().coeffs(), [2, 0]);
        assert!(matches!(
            finite_subsystem(&p, &[]),
            Err(PosetError::EmptySubset)
        ));
    }

    #[test]
    fn whole_set_is_the_identity() {
        let p = parse_poset("poset EF\nprimes e f\nbelow e f\n").unwrap();
        let (x, t) = finite_subsystem(&p, &["e", "f"]).unwrap();
        assert_eq!(x.rel, p.rel);
        for e in p.elements(4) {
            assert_eq!(t.apply(&e).unwrap(), e);
        }
    }
}
