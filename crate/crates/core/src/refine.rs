//! Bounded search for refinement matrices.

use serde::Serialize;

use crate::cert::CertificateHom;
use crate::decision::{Decision, SearchBound};
use crate::error::CoreError;
use crate::oracle::{decide_equal, ClassExplorer};
use crate::presentation::Presentation;
use crate::word::Word;

/// `entries[i][j]`: row `i` sums to the `i`-th left label, column `j` to the `j`-th right label.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct RefinementMatrix<T> {
    pub entries: [[T; 2]; 2],
}

impl<T: Clone> RefinementMatrix<T> {
    pub fn new(z11: T, z12: T, z21: T, z22: T) -> Self {
        RefinementMatrix {
            entries: [[z11, z12], [z21, z22]],
        }
    }

    pub fn transpose(&self) -> Self {
        let e = &self.entries;
        RefinementMatrix::new(
            e[0][0].clone(),
            e[1][0].clone(),
            e[0][1].clone(),
            e[1][1].clone(),
        )
    }

    pub fn map<U: Clone>(&self, f: impl Fn(&T) -> U) -> RefinementMatrix<U> {
        let e = &self.entries;
        RefinementMatrix::new(f(&e[0][0]), f(&e[0][1]), f(&e[1][0]), f(&e[1][1]))
    }

    /// The four sums `(row1, row2, col1, col2)`.
    pub fn sums(&self, add: impl Fn(&T, &T) -> T) -> [T; 4] {
        let e = &self.entries;
        [
            add(&e[0][0], &e[0][1]),
            add(&e[1][0], &e[1][1]),
            add(&e[0][0], &e[1][0]),
            add(&e[0][1], &e[1][1]),
        ]
    }
}

/// Checks all four label equalities of `m` for the equation `a + b = c + d`.
pub fn verify_refinement(
    p: &Presentation,
    m: &RefinementMatrix<Word>,
    labels: [&Word; 4],
    bound: &SearchBound,
    certs: &[CertificateHom],
) -> Result<Decision<(), usize>, CoreError> {
    let sums = m.sums(|x, y| x.add(y));
    let mut unknown = false;
    for (i, (s, l)) in sums.iter().zip(labels).enumerate() {
        match decide_equal(p, s, l, bound, certs)? {
            Decision::Holds(_) => {}
            Decision::Fails(_) => return Ok(Decision::Fails(i)),
            Decision::Unknown(_) => unknown = true,
        }
    }
    Ok(if unknown {
        Decision::Unknown(*bound)
    } else {
        Decision::Holds(())
    })
}

/// Searches for a refinement of `a + bword = c + d`.
///
/// Candidates come from splitting representatives of the classes of `a`, `c` and `bword`;
/// when those classes are exhausted and every candidate is refuted, the answer is Fails.
pub fn find_refinement(
    p: &Presentation,
    a: &Word,
    bword: &Word,
    c: &Word,
    d: &Word,
    bound: &SearchBound,
    certs: &[CertificateHom],
) -> Result<Decision<RefinementMatrix<Word>, ()>, CoreError> {
    match decide_equal(p, &a.add(bword), &c.add(d), bound, certs)? {
        Decision::Holds(_) => {}
        Decision::Fails(_) => {
            return Err(CoreError::Precondition(format!(
                "{} + {} != {} + {}",
                p.show(a),
                p.show(bword),
                p.show(c),
                p.show(d)
            )))
        }
        Decision::Unknown(b) => return Ok(Decision::Unknown(b)),
    }

    let class_a = ClassExplorer::run(p, a, bound);
    let class_c = ClassExplorer::run(p, c, bound);
    let class_b = ClassExplorer::run(p, bword, bound);
    let mut complete = class_a.exhausted() && class_c.exhausted() && class_b.exhausted();
    let mut tried = std::collections::HashSet::new();

    for wa in class_a.words() {
        for z11 in wa.sub_words() {
            let z12 = wa.checked_sub(&z11).expect("sub-word");
            for wc in class_c.words() {
                let Some(z21) = wc.checked_sub(&z11) else {
                    continue;
                };
                for wb in class_b.words() {
                    let Some(z22) = wb.checked_sub(&z21) else {
                        continue;
                    };
                    let m = RefinementMatrix::new(z11.clone(), z12.clone(), z21.clone(), z22);
                    if !tried.insert(m.clone()) {
                        continue;
                    }
                    let col2 = m.entries[0][1].add(&m.entries[1][1]);
                    match decide_equal(p, &col2, d, bound, certs)? {
                        Decision::Holds(_) => {
                            match verify_refinement(p, &m, [a, bword, c, d], bound, certs)? {
                                Decision::Holds(()) => return Ok(Decision::Holds(m)),
                                Decision::Fails(_) => {}
                                Decision::Unknown(_) => complete = false,
                            }
                        }
                        Decision::Fails(_) => {}
                        Decision::Unknown(_) => complete = false,
                    }
                }
            }
        }
    }
    Ok(if complete {
        Decision::Fails(())
    } else {
        Decision::Unknown(*bound)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_presentation, parse_term};

    fn w(p: &Presentation, t: &str) -> Word {
        parse_term(&p.gens, t).unwrap()
    }

    #[test]
    fn m0_has_no_refinement() {
        let p = parse_presentation("monoid M0\ngenerators x0 y0 z0\nrelation x0 + y0 = x0 + z0")
            .unwrap();
        let r = find_refinement(
            &p,
            &w(&p, "x0"),
            &w(&p, "y0"),
            &w(&p, "x0"),
            &w(&p, "z0"),
            &SearchBound::DEFAULT.with_degree(4),
            &[],
        )
        .unwrap();
        assert!(r.is_fails());
    }

    #[test]
    fn diagonal_refinement_in_free_monoid() {
        let p = parse_presentation("monoid F\ngenerators a b").unwrap();
        let (a, b) = (w(&p, "2*a"), w(&p, "b"));
        let r = find_refinement(&p, &a, &b, &a, &b, &SearchBound::DEFAULT, &[]).unwrap();
        let m = r.holds().unwrap();
        let sums = m.sums(|x, y| x.add(y));
        assert_eq!(sums, [a.clone(), b.clone(), a, b]);
    }

    #[test]
    fn false_equation_is_a_precondition_error() {
        let p = parse_presentation("monoid F\ngenerators a b").unwrap();
        let r = find_refinement(
            &p,
            &w(&p, "a"),
            &Word::zero(),
            &w(&p, "b"),
            &Word::zero(),
            &SearchBound::DEFAULT,
            &[],
        );
        assert!(matches!(r, Err(CoreError::Precondition(_))));
    }
}
