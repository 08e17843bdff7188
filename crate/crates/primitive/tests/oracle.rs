//! Canonical forms and order of primitive monoids against the word-problem engine.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use refmon_core::{decide_equal, decide_leq, find_refinement, words_up_to, Decision, SearchBound};
use refmon_primitive::{
    all_posets, finite_subsystem, parse_poset, presentation_of, separating_certificates,
    transition_between,
};

#[test]
fn equality_agrees_with_oracle() {
    let b = SearchBound::DEFAULT;
    for n in 1..=3 {
        for p in all_posets(n) {
            let pres = presentation_of(&p);
            let certs = separating_certificates(&p, &pres).unwrap();
            let words = words_up_to(n, 4);
            for u in &words {
                for v in &words {
                    let exact = p.from_word(u) == p.from_word(v);
                    match decide_equal(&pres, u, v, &b, &certs).unwrap() {
                        Decision::Holds(_) => assert!(exact),
                        Decision::Fails(_) => assert!(!exact),
                        Decision::Unknown(_) => {
                            panic!("{} vs {} undecided", pres.show(u), pres.show(v))
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn order_agrees_with_complement_search() {
    let b = SearchBound::DEFAULT.with_degree(8);
    for n in 1..=3 {
        for p in all_posets(n) {
            let pres = presentation_of(&p);
            let elems = p.elements(3);
            for x in &elems {
                for y in &elems {
                    let exact = p.leq(x, y).unwrap();
                    if let Some(c) = &exact {
                        assert_eq!(&p.add(x, c).unwrap(), y);
                    }
                    match decide_leq(&pres, &p.to_word(x), &p.to_word(y), &b).unwrap() {
                        Decision::Holds(w) => {
                            assert!(exact.is_some());
                            assert_eq!(&p.add(x, &p.from_word(&w.complement)).unwrap(), y);
                        }
                        Decision::Fails(_) => assert!(exact.is_none()),
                        Decision::Unknown(_) => {}
                    }
                }
            }
        }
    }
}

#[test]
fn order_is_antisymmetric() {
    for p in all_posets(3) {
        let elems = p.elements(4);
        for x in &elems {
            for y in &elems {
                if p.leq(x, y).unwrap().is_some() && p.leq(y, x).unwrap().is_some() {
                    assert_eq!(x, y);
                }
            }
        }
    }
}

#[test]
fn refinement_search_never_fails() {
    let b = SearchBound::DEFAULT.with_degree(5);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let posets = all_posets(3);
    for _ in 0..60 {
        let p = &posets[rng.gen_range(0..posets.len())];
        let pres = presentation_of(p);
        let certs = separating_certificates(p, &pres).unwrap();
        let elems = p.elements(2);
        let pick = |rng: &mut ChaCha8Rng| elems[rng.gen_range(0..elems.len())].clone();
        let (a, bb) = (pick(&mut rng), pick(&mut rng));
        let sum = p.add(&a, &bb).unwrap();
        let Some(c) = elems
            .iter()
            .find(|c| p.leq(c, &sum).unwrap().is_some() && rng.gen_bool(0.5))
        else {
            continue;
        };
        let d = p.leq(c, &sum).unwrap().unwrap();
        let w = |e| p.to_word(e);
        let r = find_refinement(&pres, &w(&a), &w(&bb), &w(c), &w(&d), &b, &certs).unwrap();
        assert!(!r.is_fails(), "{}: {:?}", p.name, (a, bb, c, d));
    }
}

#[test]
fn transitions_commute() {
    let p = parse_poset("poset C\nprimes a b c d\nbelow a b\nbelow b c\nbelow a c\nbelow d d\n")
        .unwrap();
    let (_, tx) = finite_subsystem(&p, &["a"]).unwrap();
    let (_, ty) = finite_subsystem(&p, &["a", "b"]).unwrap();
    let (_, tz) = finite_subsystem(&p, &["a", "b", "d"]).unwrap();
    let xy = transition_between(&tx, &ty).unwrap();
    let yz = transition_between(&ty, &tz).unwrap();
    let xz = transition_between(&tx, &tz).unwrap();
    let composed = xy.then(&yz).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..100 {
        let e = tx.source.normalize(&[rng.gen_range(0..6)]).unwrap();
        assert_eq!(composed.apply(&e).unwrap(), xz.apply(&e).unwrap());
        let (a, b) = (
            e.clone(),
            tx.source.normalize(&[rng.gen_range(0..6)]).unwrap(),
        );
        let sum = tx.source.add(&a, &b).unwrap();
        let lhs = tx.apply(&sum).unwrap();
        let rhs = p
            .add(&tx.apply(&a).unwrap(), &tx.apply(&b).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn idempotent_prime_has_two_elements() {
    let p = parse_poset("poset R\nprimes p\nbelow p p\n").unwrap();
    assert_eq!(p.elements(6).len(), 2);
}
