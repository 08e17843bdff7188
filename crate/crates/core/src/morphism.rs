//! Monoid homomorphisms between presentations, given by generator images.
//!
//! Two presentations define isomorphic monoids when maps in both directions respect all
//! relations and compose to the identity on generators; each of these is a finite list of
//! word-problem instances.

use serde::Serialize;

use crate::decision::{Decision, SearchBound};
use crate::error::CoreError;
use crate::oracle::{decide_equal, enumerate_class};
use crate::presentation::Presentation;
use crate::word::Word;

/// Generator-by-generator substitution from `source` words to `target` words.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Substitution {
    pub images: Vec<Word>,
}

impl Substitution {
    pub fn apply(&self, w: &Word) -> Word {
        let mut out = Word::zero();
        for &(g, e) in w.terms() {
            out = out.add(&self.images[g].scale(e));
        }
        out
    }

    /// Builds images by generator name through `image`, which returns a target term.
    pub fn by_name(
        source: &Presentation,
        target: &Presentation,
        image: impl Fn(&str) -> Vec<(String, u64)>,
    ) -> Result<Self, CoreError> {
        let mut images = Vec::with_capacity(source.gens.len());
        for g in source.gens.names() {
            let parts = image(g);
            let refs: Vec<(&str, u64)> = parts.iter().map(|(n, e)| (n.as_str(), *e)).collect();
            images.push(target.named_word(&refs)?);
        }
        Ok(Substitution { images })
    }
}

/// Fails with a description of the first relation or identity that is refuted.
pub fn check_homomorphism(
    source: &Presentation,
    target: &Presentation,
    map: &Substitution,
    bound: &SearchBound,
) -> Result<Decision<(), String>, CoreError> {
    let mut unknown = false;
    for r in &source.relations {
        let (l, rr) = (map.apply(&r.lhs), map.apply(&r.rhs));
        match decide_equal(target, &l, &rr, bound, &[])? {
            Decision::Holds(_) => {}
            Decision::Fails(_) => {
                return Ok(Decision::Fails(format!(
                    "relation {} maps to {} != {}",
                    source.show_relation(r),
                    target.show(&l),
                    target.show(&rr)
                )))
            }
            Decision::Unknown(_) => unknown = true,
        }
    }
    Ok(if unknown {
        Decision::Unknown(*bound)
    } else {
        Decision::Holds(())
    })
}

/// Checks that `there` and `back` are mutually inverse homomorphisms.
pub fn check_isomorphism(
    p: &Presentation,
    q: &Presentation,
    there: &Substitution,
    back: &Substitution,
    bound: &SearchBound,
) -> Result<Decision<(), String>, CoreError> {
    let mut unknown = false;
    for d in [
        check_homomorphism(p, q, there, bound)?,
        check_homomorphism(q, p, back, bound)?,
    ] {
        match d {
            Decision::Fails(why) => return Ok(Decision::Fails(why)),
            Decision::Unknown(_) => unknown = true,
            Decision::Holds(()) => {}
        }
    }
    let round_trips = [(p, there, back), (q, back, there)];
    for (pres, f, g) in round_trips {
        for i in 0..pres.gens.len() {
            let x = Word::generator(i);
            let y = g.apply(&f.apply(&x));
            match decide_equal(pres, &x, &y, bound, &[])? {
                Decision::Holds(_) => {}
                Decision::Fails(_) => {
                    return Ok(Decision::Fails(format!(
                        "{} does not return to itself in {}",
                        pres.gens.name(i),
                        pres.name
                    )))
                }
                Decision::Unknown(_) => unknown = true,
            }
        }
    }
    Ok(if unknown {
        Decision::Unknown(*bound)
    } else {
        Decision::Holds(())
    })
}

/// Compares congruence classes of all words of degree at most `max_degree` in `p` with the
/// classes of their renamed images in `q`; `rename[i]` is the `q`-index of generator `i`.
///
/// Holds with the number of words compared when every pair of classes is exhausted and equal
/// under the renaming; Fails with the first differing word.
pub fn compare_classes(
    p: &Presentation,
    q: &Presentation,
    rename: &[usize],
    max_degree: u64,
    bound: &SearchBound,
) -> Result<Decision<usize, String>, CoreError> {
    if rename.len() != p.gens.len() || q.gens.len() != p.gens.len() {
        return Err(CoreError::Precondition(
            "renaming must be a bijection of generators".to_string(),
        ));
    }
    let mut unknown = false;
    let words = crate::word::words_up_to(p.gens.len(), max_degree);
    for w in &words {
        let cp = enumerate_class(p, w, bound);
        let cq = enumerate_class(q, &w.reindex(|i| rename[i]), bound);
        if !(cp.exhausted && cq.exhausted) {
            unknown = true;
            continue;
        }
        let renamed: std::collections::BTreeSet<Word> =
            cp.class.iter().map(|v| v.reindex(|i| rename[i])).collect();
        if renamed != cq.class {
            return Ok(Decision::Fails(format!(
                "class of {} differs: {} vs {} words",
                p.show(w),
                renamed.len(),
                cq.class.len()
            )));
        }
    }
    Ok(if unknown {
        Decision::Unknown(*bound)
    } else {
        Decision::Holds(words.len())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_presentation;

    #[test]
    fn eliminating_a_defined_generator() {
        let with_u = parse_presentation(
            "monoid U\ngenerators u x0 y0 z0\nrelation u = y0 + x0\nrelation u = z0 + x0\n",
        )
        .unwrap();
        let m0 = parse_presentation("monoid M0\ngenerators x0 y0 z0\nrelation x0 + y0 = x0 + z0")
            .unwrap();
        let there = Substitution::by_name(&with_u, &m0, |g| match g {
            "u" => vec![("x0".into(), 1), ("y0".into(), 1)],
            other => vec![(other.to_string(), 1)],
        })
        .unwrap();
        let back = Substitution::by_name(&m0, &with_u, |g| vec![(g.to_string(), 1)]).unwrap();
        let d = check_isomorphism(&with_u, &m0, &there, &back, &SearchBound::DEFAULT).unwrap();
        assert!(d.is_holds(), "{d:?}");
    }

    #[test]
    fn non_homomorphism_is_refuted() {
        let free = parse_presentation("monoid F\ngenerators a b").unwrap();
        let idem = parse_presentation("monoid I\ngenerators a b\nrelation 2*a = a").unwrap();
        let id = Substitution::by_name(&idem, &free, |g| vec![(g.to_string(), 1)]).unwrap();
        let d = check_homomorphism(&idem, &free, &id, &SearchBound::DEFAULT).unwrap();
        assert!(d.is_fails());
    }

    #[test]
    fn renamed_presentations_have_matching_classes() {
        let p = parse_presentation("monoid P\ngenerators a b\nrelation a = 2*b").unwrap();
        let q = parse_presentation("monoid Q\ngenerators c d\nrelation d = 2*c").unwrap();
        let d = compare_classes(&p, &q, &[1, 0], 3, &SearchBound::DEFAULT).unwrap();
        assert!(d.is_holds(), "{d:?}");
        let d = compare_classes(&p, &q, &[0, 1], 3, &SearchBound::DEFAULT).unwrap();
        assert!(d.is_fails());
    }
}
