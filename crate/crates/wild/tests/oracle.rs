//! Closed forms checked against the bounded word-problem engine on truncations.

use refmon_core::{decide_equal, decide_leq, Decision, SearchBound, Word};
use refmon_wild::{
    cong_mod_ideal, m_refine, mbar_refine, q_map, separating_certificates, Family, MBarElem, MElem,
    OIdealId, Truncation, WildElem,
};

fn bound() -> SearchBound {
    SearchBound::DEFAULT.with_degree(8)
}

#[test]
fn m_equal_agrees_with_oracle() {
    for n in 1..=2 {
        let t = Truncation::new(Family::M, n);
        let certs = separating_certificates(&t);
        let words = t.top_words(3);
        let elems: Vec<MElem> = words.iter().map(|w| t.m_elem(w)).collect();
        for (a, wa) in elems.iter().zip(&words) {
            for (b, wb) in elems.iter().zip(&words) {
                let d = decide_equal(&t.presentation, wa, wb, &bound(), &certs).unwrap();
                match d {
                    Decision::Holds(path) => {
                        assert!(path.verify(&t.presentation));
                        assert!(a.equal(b), "{a} vs {b}");
                    }
                    Decision::Fails(_) => assert!(!a.equal(b), "{a} vs {b}"),
                    Decision::Unknown(_) => {}
                }
            }
        }
    }
}

#[test]
fn m_equal_without_certificates_at_level_one() {
    let t = Truncation::new(Family::M, 1);
    let words = t.top_words(3);
    let mut decided = 0;
    for wa in &words {
        for wb in &words {
            let d = decide_equal(&t.presentation, wa, wb, &bound(), &[]).unwrap();
            let (a, b) = (t.m_elem(wa), t.m_elem(wb));
            match d {
                Decision::Holds(_) => assert!(a.equal(&b)),
                Decision::Fails(_) => assert!(!a.equal(&b)),
                Decision::Unknown(_) => continue,
            }
            decided += 1;
        }
    }
    assert!(decided > 0);
}

#[test]
fn mbar_equal_agrees_with_oracle() {
    for n in 1..=3 {
        let t = Truncation::new(Family::MBar, n);
        let certs = separating_certificates(&t);
        let words = t.top_words(4);
        for wa in &words {
            for wb in &words {
                let (a, b) = (t.mbar_elem(wa), t.mbar_elem(wb));
                match decide_equal(&t.presentation, wa, wb, &bound(), &certs).unwrap() {
                    Decision::Holds(_) => assert!(a.equal(&b), "{a} vs {b}"),
                    Decision::Fails(_) => assert!(!a.equal(&b), "{a} vs {b}"),
                    Decision::Unknown(_) => {}
                }
            }
        }
    }
}

/// Complement search in the truncation agrees with the closed-form order of 𝓜.
#[test]
fn m_leq_agrees_with_complement_search() {
    for n in 1..=2 {
        let t = Truncation::new(Family::M, n);
        let words = t.top_words(3);
        let mut decided = 0;
        for wa in &words {
            for wb in &words {
                let (a, b) = (t.m_elem(wa), t.m_elem(wb));
                let exact = a.leq(&b);
                if let Some(c) = &exact {
                    assert!(a.add(c).equal(&b));
                    assert!(c.level() <= n.max(a.level()).max(b.level()));
                }
                match decide_leq(&t.presentation, wa, wb, &bound()).unwrap() {
                    Decision::Holds(w) => {
                        assert!(exact.is_some(), "{a} <= {b}");
                        assert!(t.m_elem(&w.complement).add(&a).equal(&b));
                    }
                    Decision::Fails(_) => assert!(exact.is_none(), "{a} !<= {b}"),
                    Decision::Unknown(_) => continue,
                }
                decided += 1;
            }
        }
        assert!(decided * 2 > words.len() * words.len());
    }
}

/// In 𝓜̄ a complement may live above the truncation, so the truncated order is the `M0`
/// order at the top level; the exact order extends it.
#[test]
fn mbar_leq_extends_truncated_order() {
    for n in 1..=3 {
        let t = Truncation::new(Family::MBar, n);
        let words = t.top_words(4);
        for wa in &words {
            for wb in &words {
                let (a, b) = (t.mbar_elem(wa), t.mbar_elem(wb));
                let (ra, rb) = (a.raise(n).unwrap(), b.raise(n).unwrap());
                let truncated = ra.m0_part().leq(rb.m0_part()).is_some();
                if truncated {
                    assert!(a.leq(&b).is_some());
                }
                if let Some(c) = a.leq(&b) {
                    assert!(a.add(&c).equal(&b));
                }
                match decide_leq(&t.presentation, wa, wb, &bound()).unwrap() {
                    Decision::Holds(_) => assert!(truncated, "{a} <= {b}"),
                    Decision::Fails(_) => assert!(!truncated, "{a} !<= {b}"),
                    Decision::Unknown(_) => {}
                }
            }
        }
    }
}

#[test]
fn level_invariance() {
    let t = Truncation::new(Family::M, 2);
    for w in t.top_words(4) {
        let e = t.m_elem(&w);
        for l in e.level()..6 {
            assert!(e.equal(&e.raise(l).unwrap()));
        }
        assert!(e.is_normalized());
    }
}

/// Normal forms are unique: equal elements have identical normal forms.
#[test]
fn normal_forms_are_canonical() {
    let t = Truncation::new(Family::M, 2);
    let elems: Vec<MElem> = t.top_words(4).iter().map(|w| t.m_elem(w)).collect();
    for a in &elems {
        for b in &elems {
            if a.equal(b) {
                assert_eq!(a.to_string(), b.to_string());
            }
        }
    }
}

#[test]
fn refinements_verify_on_small_equations() {
    let t = Truncation::new(Family::M, 1);
    let elems: Vec<MElem> = t.top_words(2).iter().map(|w| t.m_elem(w)).collect();
    let mut count = 0;
    for b1 in &elems {
        for b2 in &elems {
            for c1 in &elems {
                for c2 in &elems {
                    if b1.add(b2).equal(&c1.add(c2)) {
                        m_refine(b1, b2, c1, c2).unwrap();
                        let (p1, p2, r1, r2) = (q_map(b1), q_map(b2), q_map(c1), q_map(c2));
                        mbar_refine(&p1, &p2, &r1, &r2).unwrap();
                        count += 1;
                    }
                }
            }
        }
    }
    assert!(count > 100);
}

/// Oracle-found refinements in the truncation exist exactly when the exact one does.
#[test]
fn oracle_refinement_of_the_defining_relation() {
    let t = Truncation::new(Family::M, 1);
    let p = &t.presentation;
    let g = |n: &str| p.gen(n).unwrap();
    let certs = separating_certificates(&t);
    let r =
        refmon_core::find_refinement(p, &g("x0"), &g("y0"), &g("x0"), &g("z0"), &bound(), &certs)
            .unwrap();
    let m = r.holds().expect("refinement in the level-1 truncation");
    let exact = m.map(|w| t.m_elem(w));
    assert!(exact.entries[0][0].equal(&MElem::x(1)));
    assert!(exact.entries[1][1].equal(&MElem::a(1)));
}

/// `e1 ≡_J e2` against a search for `a, b ∈ J` with `e1 + a = e2 + b`.
#[test]
fn ideal_congruences_agree_with_search() {
    use std::collections::HashSet;
    let t = Truncation::new(Family::M, 2);
    let elems: Vec<MElem> = t.top_words(3).iter().map(|w| t.m_elem(w)).collect();
    let mut j2 = Vec::new();
    for i in 0..4 {
        for j in 0..4 {
            for k1 in 0..4 {
                for k2 in 0..4 {
                    j2.push(MElem::new(2, 0, i, j, vec![k1, k2]).unwrap());
                }
            }
        }
    }
    let j1: Vec<MElem> = j2
        .iter()
        .filter(|e| e.i() == 0 && e.j() == 0)
        .cloned()
        .collect();
    for a in &elems {
        for b in &elems {
            for (id, ideal) in [(OIdealId::J1, &j1), (OIdealId::J2, &j2)] {
                let closed =
                    cong_mod_ideal(&WildElem::M(a.clone()), &WildElem::M(b.clone()), id).unwrap();
                let left: HashSet<MElem> = ideal.iter().map(|p| a.add(p)).collect();
                let found = ideal.iter().any(|q| left.contains(&b.add(q)));
                assert_eq!(closed, found, "{a} ≡_{id} {b}");
            }
        }
    }
}

#[test]
fn mbar_ideal_congruences_agree_with_search() {
    let t = Truncation::new(Family::MBar, 3);
    let elems: Vec<MBarElem> = t.top_words(4).iter().map(|w| t.mbar_elem(w)).collect();
    let pool: Vec<MBarElem> = (0..8)
        .flat_map(|i| (0..8).map(move |j| MBarElem::new(0, i, j, 0)))
        .collect();
    for a in &elems {
        for b in &elems {
            for id in [OIdealId::J2bar, OIdealId::Zz0bar] {
                let closed = cong_mod_ideal(&WildElem::MBar(*a), &WildElem::MBar(*b), id).unwrap();
                let members: Vec<&MBarElem> = pool
                    .iter()
                    .filter(|e| id == OIdealId::J2bar || e.i() == 0)
                    .collect();
                let found = members
                    .iter()
                    .any(|p| members.iter().any(|q| a.add(p).equal(&b.add(q))));
                assert_eq!(closed, found, "{a} ≡_{id} {b}");
            }
        }
    }
}

#[test]
fn quotient_map_is_a_homomorphism() {
    let t = Truncation::new(Family::M, 2);
    let elems: Vec<MElem> = t.top_words(3).iter().map(|w| t.m_elem(w)).collect();
    for a in &elems {
        for b in &elems {
            assert!(q_map(&a.add(b)).equal(&q_map(a).add(&q_map(b))));
        }
    }
}

#[test]
fn words_of_the_top_level_cover_every_generator() {
    let t = Truncation::new(Family::M, 2);
    for g in 0..t.presentation.gens.len() {
        let e = t.m_elem(&Word::generator(g));
        let w = t.m_word(&e.raise(2).unwrap()).unwrap();
        assert!(t.m_elem(&w).equal(&e));
    }
}
