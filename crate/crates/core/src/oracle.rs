//! Bounded congruence-class enumeration and the three-valued word problem.
//!
//! A relation side applies to a word when it is contained in it componentwise; both
//! directions of every relation are tried, in relation order, forward before backward.
//! Words above `max_degree` are discarded and mark the enumeration as truncated.

use std::collections::{BTreeSet, HashMap, VecDeque};

use serde::Serialize;

use crate::cert::CertificateHom;
use crate::decision::{Decision, SearchBound};
use crate::error::CoreError;
use crate::presentation::Presentation;
use crate::target::TargetValue;
use crate::word::Word;

/// One application of a relation: `forward` rewrites lhs into rhs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RewriteStep {
    pub relation: usize,
    pub forward: bool,
    pub result: Word,
}

/// A chain of relation applications starting at `start`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RewritePath {
    pub start: Word,
    pub steps: Vec<RewriteStep>,
}

impl RewritePath {
    pub fn empty(start: Word) -> Self {
        RewritePath {
            start,
            steps: Vec::new(),
        }
    }

    pub fn end(&self) -> &Word {
        self.steps.last().map(|s| &s.result).unwrap_or(&self.start)
    }

    /// Replays every step with plain multiset arithmetic.
    pub fn verify(&self, p: &Presentation) -> bool {
        let mut cur = self.start.clone();
        for s in &self.steps {
            let Some(r) = p.relations.get(s.relation) else {
                return false;
            };
            let (from, to) = if s.forward {
                (&r.lhs, &r.rhs)
            } else {
                (&r.rhs, &r.lhs)
            };
            match cur.checked_sub(from) {
                Some(rest) => cur = rest.add(to),
                None => return false,
            }
            if cur != s.result {
                return false;
            }
        }
        true
    }

    /// The same chain read backwards, starting at `self.end()`.
    pub fn reversed(&self) -> RewritePath {
        let mut words: Vec<&Word> = vec![&self.start];
        words.extend(self.steps.iter().map(|s| &s.result));
        let steps = self
            .steps
            .iter()
            .enumerate()
            .rev()
            .map(|(i, s)| RewriteStep {
                relation: s.relation,
                forward: !s.forward,
                result: words[i].clone(),
            })
            .collect();
        RewritePath {
            start: self.end().clone(),
            steps,
        }
    }

    /// Concatenation; `other` must start where `self` ends.
    pub fn then(mut self, other: RewritePath) -> RewritePath {
        debug_assert_eq!(self.end(), &other.start);
        self.steps.extend(other.steps);
        self
    }

    pub fn render(&self, p: &Presentation) -> Vec<String> {
        let mut out = vec![p.show(&self.start)];
        out.extend(self.steps.iter().map(|s| p.show(&s.result)));
        out
    }
}

/// Breadth-first exploration of one congruence class, remembering how each word was reached.
#[derive(Debug, Clone)]
pub struct ClassExplorer {
    words: Vec<Word>,
    index: HashMap<Word, usize>,
    parent: Vec<Option<(usize, usize, bool)>>,
    exhausted: bool,
}

impl ClassExplorer {
    pub fn run(p: &Presentation, start: &Word, b: &SearchBound) -> Self {
        let mut ex = ClassExplorer {
            words: vec![start.clone()],
            index: HashMap::from([(start.clone(), 0)]),
            parent: vec![None],
            exhausted: true,
        };
        let mut queue = VecDeque::from([0usize]);
        'bfs: while let Some(cur) = queue.pop_front() {
            let w = ex.words[cur].clone();
            for (ri, r) in p.relations.iter().enumerate() {
                for forward in [true, false] {
                    let (from, to) = if forward {
                        (&r.lhs, &r.rhs)
                    } else {
                        (&r.rhs, &r.lhs)
                    };
                    let Some(rest) = w.checked_sub(from) else {
                        continue;
                    };
                    let next = rest.add(to);
                    if next.degree() > b.max_degree {
                        ex.exhausted = false;
                        continue;
                    }
                    if ex.index.contains_key(&next) {
                        continue;
                    }
                    if ex.words.len() >= b.max_class_size {
                        ex.exhausted = false;
                        break 'bfs;
                    }
                    ex.index.insert(next.clone(), ex.words.len());
                    ex.parent.push(Some((cur, ri, forward)));
                    queue.push_back(ex.words.len());
                    ex.words.push(next);
                }
            }
        }
        ex
    }

    /// Words in discovery order.
    pub fn words(&self) -> &[Word] {
        &self.words
    }

    /// True iff no word was discarded, in which case `words` is the whole class.
    pub fn exhausted(&self) -> bool {
        self.exhausted
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.index.contains_key(w)
    }

    /// Rewrite path from the start word to `w`, if `w` was reached.
    pub fn path_to(&self, w: &Word) -> Option<RewritePath> {
        let mut i = *self.index.get(w)?;
        let mut steps = Vec::new();
        while let Some((prev, relation, forward)) = self.parent[i] {
            steps.push(RewriteStep {
                relation,
                forward,
                result: self.words[i].clone(),
            });
            i = prev;
        }
        steps.reverse();
        Some(RewritePath {
            start: self.words[0].clone(),
            steps,
        })
    }
}

/// Result of [`enumerate_class`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassEnumeration {
    pub class: BTreeSet<Word>,
    pub exhausted: bool,
}

pub fn enumerate_class(p: &Presentation, w: &Word, b: &SearchBound) -> ClassEnumeration {
    let ex = ClassExplorer::run(p, w, b);
    ClassEnumeration {
        exhausted: ex.exhausted,
        class: ex.words.into_iter().collect(),
    }
}

/// Why two words were shown to be different.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum Separation {
    /// A certificate homomorphism takes different values on the two words.
    Certificate {
        certificate: String,
        left: TargetValue,
        right: TargetValue,
    },
    /// The congruence class of `word` was enumerated completely without meeting the other.
    ExhaustedClass { word: Word, class_size: usize },
}

fn check_inputs(
    p: &Presentation,
    words: &[&Word],
    certs: &[CertificateHom],
) -> Result<(), CoreError> {
    for w in words {
        p.gens.check(w)?;
    }
    for c in certs {
        c.ensure_over(p)?;
    }
    Ok(())
}

/// First certificate that separates `u` from `v`.
pub fn separate(u: &Word, v: &Word, certs: &[CertificateHom]) -> Option<Separation> {
    certs.iter().find_map(|c| {
        let (l, r) = (c.apply(u), c.apply(v));
        (l != r).then(|| Separation::Certificate {
            certificate: c.name.clone(),
            left: l,
            right: r,
        })
    })
}

/// Holds with a rewrite path from `u` to `v`, Fails with a separating certificate or an
/// exhausted class, Unknown otherwise.
pub fn decide_equal(
    p: &Presentation,
    u: &Word,
    v: &Word,
    b: &SearchBound,
    certs: &[CertificateHom],
) -> Result<Decision<RewritePath, Separation>, CoreError> {
    check_inputs(p, &[u, v], certs)?;
    if u == v {
        return Ok(Decision::Holds(RewritePath::empty(u.clone())));
    }
    if let Some(sep) = separate(u, v, certs) {
        return Ok(Decision::Fails(sep));
    }
    let from_u = ClassExplorer::run(p, u, b);
    if let Some(path) = from_u.path_to(v) {
        return Ok(Decision::Holds(path));
    }
    if from_u.exhausted() {
        return Ok(Decision::Fails(Separation::ExhaustedClass {
            word: u.clone(),
            class_size: from_u.words().len(),
        }));
    }
    let from_v = ClassExplorer::run(p, v, b);
    for w in from_v.words() {
        if let Some(left) = from_u.path_to(w) {
            let right = from_v.path_to(w).expect("reached word").reversed();
            return Ok(Decision::Holds(left.then(right)));
        }
    }
    if from_v.exhausted() {
        return Ok(Decision::Fails(Separation::ExhaustedClass {
            word: v.clone(),
            class_size: from_v.words().len(),
        }));
    }
    Ok(Decision::Unknown(*b))
}

/// Witness for `u ≤ v`: `u + complement` is the word `representative`, reached from `v` by `path`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Complement {
    pub complement: Word,
    pub representative: Word,
    pub path: RewritePath,
}

/// Holds when some word in the class of `v` dominates `u`; Fails when the class of `v`
/// is exhausted without one.
pub fn decide_leq(
    p: &Presentation,
    u: &Word,
    v: &Word,
    b: &SearchBound,
) -> Result<Decision<Complement, usize>, CoreError> {
    check_inputs(p, &[u, v], &[])?;
    let ex = ClassExplorer::run(p, v, b);
    for w in ex.words() {
        if let Some(z) = w.checked_sub(u) {
            return Ok(Decision::Holds(Complement {
                complement: z,
                representative: w.clone(),
                path: ex.path_to(w).expect("reached word"),
            }));
        }
    }
    if ex.exhausted() {
        Ok(Decision::Fails(ex.words().len()))
    } else {
        Ok(Decision::Unknown(*b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_presentation, parse_term};

    fn m0() -> Presentation {
        parse_presentation("monoid M0\ngenerators x0 y0 z0\nrelation x0 + y0 = x0 + z0").unwrap()
    }

    fn w(p: &Presentation, t: &str) -> Word {
        parse_term(&p.gens, t).unwrap()
    }

    #[test]
    fn class_of_y0_is_singleton() {
        let p = m0();
        let c = enumerate_class(&p, &w(&p, "y0"), &SearchBound::DEFAULT);
        assert!(c.exhausted);
        assert_eq!(c.class.len(), 1);
    }

    #[test]
    fn class_of_x0_plus_y0() {
        let p = m0();
        let c = enumerate_class(&p, &w(&p, "x0 + y0"), &SearchBound::DEFAULT.with_degree(2));
        assert!(c.exhausted);
        let expected: BTreeSet<Word> = [w(&p, "x0 + y0"), w(&p, "x0 + z0")].into();
        assert_eq!(c.class, expected);
    }

    #[test]
    fn idempotent_class_is_not_exhausted() {
        let p = parse_presentation("monoid I\ngenerators a\nrelation 2*a = a").unwrap();
        let c = enumerate_class(&p, &w(&p, "5*a"), &SearchBound::DEFAULT.with_degree(5));
        assert!(!c.exhausted);
        let expected: BTreeSet<Word> = (1..=5).map(|k| Word::from_dense(&[k])).collect();
        assert_eq!(c.class, expected);
    }

    #[test]
    fn class_size_cap_truncates() {
        let p = parse_presentation("monoid I\ngenerators a\nrelation 2*a = a").unwrap();
        let c = enumerate_class(&p, &w(&p, "a"), &SearchBound::new(50, 3, 1));
        assert_eq!(c.class.len(), 3);
        assert!(!c.exhausted);
    }

    #[test]
    fn equal_examples() {
        let p = m0();
        let b = SearchBound::DEFAULT;
        let d = decide_equal(&p, &w(&p, "x0 + 2*y0"), &w(&p, "x0 + y0 + z0"), &b, &[]).unwrap();
        let path = d.holds().unwrap();
        assert_eq!(path.steps.len(), 1);
        assert!(path.verify(&p));

        let d = decide_equal(&p, &w(&p, "y0"), &w(&p, "z0"), &b, &[]).unwrap();
        assert!(matches!(
            d,
            Decision::Fails(Separation::ExhaustedClass { .. })
        ));

        let d = decide_equal(&p, &w(&p, "x0"), &w(&p, "x0"), &b, &[]).unwrap();
        assert_eq!(d.holds().unwrap().steps.len(), 0);
    }

    #[test]
    fn leq_examples() {
        let p = m0();
        let b = SearchBound::DEFAULT;
        let d = decide_leq(&p, &Word::zero(), &w(&p, "x0 + z0"), &b).unwrap();
        assert_eq!(d.holds().unwrap().complement, w(&p, "x0 + z0"));
        let d = decide_leq(&p, &w(&p, "x0"), &w(&p, "x0 + y0"), &b).unwrap();
        assert_eq!(d.holds().unwrap().complement, w(&p, "y0"));
        let d = decide_leq(&p, &w(&p, "x0 + y0"), &w(&p, "y0"), &b).unwrap();
        assert!(d.is_fails());
    }

    #[test]
    fn two_step_path_verifies_both_ways() {
        let p = parse_presentation(
            "monoid P\ngenerators a b c d\nrelation a = b + c\nrelation b + c = d\n",
        )
        .unwrap();
        let b = SearchBound::DEFAULT.with_degree(2);
        let d = decide_equal(&p, &w(&p, "a"), &w(&p, "d"), &b, &[]).unwrap();
        let path = d.holds().unwrap();
        assert!(path.verify(&p));
        assert_eq!(path.end(), &w(&p, "d"));
        assert!(path.reversed().verify(&p));
    }

    #[test]
    fn wrong_certificate_is_rejected() {
        let p = m0();
        let q = parse_presentation("monoid Other\ngenerators x0 y0 z0").unwrap();
        let c = crate::cert::build_certificate(
            &q,
            "f",
            crate::target::TargetMonoid::NonnegInteger,
            vec![
                TargetValue::int(1),
                TargetValue::int(0),
                TargetValue::int(0),
            ],
        )
        .unwrap();
        let r = decide_equal(&p, &w(&p, "x0"), &w(&p, "y0"), &SearchBound::DEFAULT, &[c]);
        assert!(matches!(r, Err(CoreError::WrongPresentation { .. })));
    }

    #[test]
    fn enlarging_the_bound_keeps_verdicts() {
        let p = parse_presentation(
            "monoid T\ngenerators x y a\nrelation y = 2*a + x\nrelation x + a = y\n",
        )
        .unwrap();
        let words = crate::word::words_up_to(3, 3);
        for u in &words {
            for v in &words {
                let small =
                    decide_equal(&p, u, v, &SearchBound::DEFAULT.with_degree(4), &[]).unwrap();
                let large =
                    decide_equal(&p, u, v, &SearchBound::DEFAULT.with_degree(7), &[]).unwrap();
                if !small.is_unknown() {
                    assert_eq!(small.truth(), large.truth(), "{u} vs {v}");
                }
            }
        }
    }
}
