//! Graph monoid presentations compared with the word-problem engine.

use std::collections::BTreeSet;

use refmon_core::{
    check_isomorphism, compare_classes, decide_equal, decide_leq, parse_presentation, Decision,
    Presentation, SearchBound, Substitution, Word,
};
use refmon_graph::{
    builtin_graph, parse_graph, present_emitters, present_finitely_separated, present_triple,
    tilde_construction, unseparation, Builtin, SSTriple,
};
use refmon_wild::{truncation_presentation, Family};

fn named(parts: &[(&str, u64)]) -> Vec<(String, u64)> {
    parts.iter().map(|(g, c)| (g.to_string(), *c)).collect()
}

fn m0() -> Presentation {
    parse_presentation("monoid M0\ngenerators x0 y0 z0\nrelation x0 + y0 = x0 + z0").unwrap()
}

/// `u ↦ x0 + y0`, every other vertex to the generator of the same name.
fn eliminate_u(graph: &Presentation, target: &Presentation) -> (Substitution, Substitution) {
    let there = Substitution::by_name(graph, target, |g| match g {
        "u" => named(&[("x0", 1), ("y0", 1)]),
        other => named(&[(other, 1)]),
    })
    .unwrap();
    let back = Substitution::by_name(target, graph, |g| named(&[(g, 1)])).unwrap();
    (there, back)
}

#[test]
fn e0c0_is_m0_with_u() {
    let p = present_finitely_separated(&builtin_graph(Builtin::E0C0)).unwrap();
    assert_eq!(p.relations.len(), 2);
    let q = m0();
    let (there, back) = eliminate_u(&p, &q);
    let d = check_isomorphism(&p, &q, &there, &back, &SearchBound::DEFAULT).unwrap();
    assert!(d.is_holds(), "{d:?}");
}

#[test]
fn ec_is_the_truncation_of_m() {
    for n in 1..=2 {
        let p = present_finitely_separated(&builtin_graph(Builtin::EC(n))).unwrap();
        let q = truncation_presentation(n, Family::M);
        let (there, back) = eliminate_u(&p, &q);
        let d = check_isomorphism(&p, &q, &there, &back, &SearchBound::DEFAULT).unwrap();
        assert!(d.is_holds(), "EC({n}): {d:?}");
    }
}

#[test]
fn ebarcbar_is_the_truncation_of_mbar() {
    for n in 1..=2 {
        let p = present_finitely_separated(&builtin_graph(Builtin::EbarCbar(n))).unwrap();
        let q = truncation_presentation(n, Family::MBar);
        let there = Substitution::by_name(&p, &q, |g| match g {
            "u" => named(&[("xbar0", 1), ("ybar0", 1)]),
            g if g.starts_with('x') => named(&[(&format!("xbar{}", &g[1..]), 1)]),
            g if g.starts_with('y') => named(&[("ybar0", 1)]),
            _ => named(&[("zbar0", 1)]),
        })
        .unwrap();
        let back = Substitution::by_name(&q, &p, |g| named(&[(&g.replace("bar", ""), 1)])).unwrap();
        let d = check_isomorphism(&p, &q, &there, &back, &SearchBound::DEFAULT).unwrap();
        assert!(d.is_holds(), "EbarCbar({n}): {d:?}");
    }
}

#[test]
fn unseparated_e0_differs_from_m0() {
    let sep = builtin_graph(Builtin::E0C0);
    let un = unseparation(&sep.graph);
    assert_eq!(un.classes[0], vec![vec![0, 1, 2, 3]]);
    let p = present_finitely_separated(&un).unwrap();
    assert_eq!(p.show_relation(&p.relations[0]), "u = 2*x0 + y0 + z0");
}

#[test]
fn complete_triple_matches_the_finite_presentation() {
    let sep = builtin_graph(Builtin::E0C0);
    let fin = present_finitely_separated(&sep).unwrap();
    let full = present_triple(&SSTriple::complete(sep.clone()), 3).unwrap();
    let there = Substitution::by_name(&full, &fin, |g| match g {
        "q_e1" => named(&[("x0", 1)]),
        "q_e2" => named(&[("y0", 1)]),
        "q_f1" => named(&[("x0", 1)]),
        "q_f2" => named(&[("z0", 1)]),
        "q_e1_e2" | "q_f1_f2" => vec![],
        v => named(&[(v, 1)]),
    })
    .unwrap();
    let back = Substitution::by_name(&fin, &full, |g| named(&[(g, 1)])).unwrap();
    let d = check_isomorphism(&full, &fin, &there, &back, &SearchBound::DEFAULT).unwrap();
    assert!(d.is_holds(), "{d:?}");
}

#[test]
fn capped_complete_triple_still_kills_full_members() {
    let sep = builtin_graph(Builtin::E0C0);
    let p = present_triple(&SSTriple::complete(sep), 1).unwrap();
    assert!(p.gens.index_of("q_e1_e2").is_some());
    assert!(p.gens.index_of("q_e1").is_some());
}

#[test]
fn arrow_gives_order() {
    let f = parse_graph("graph P\nvertices v w\narrow e v -> w\n").unwrap();
    let t = SSTriple::new(f.sep, BTreeSet::new()).unwrap();
    let p = present_triple(&t, 2).unwrap();
    let d = decide_leq(
        &p,
        &p.gen("w").unwrap(),
        &p.gen("v").unwrap(),
        &SearchBound::DEFAULT,
    )
    .unwrap();
    assert!(d.is_holds());
}

#[test]
fn built_in_path_order_and_conicality() {
    let b = SearchBound::DEFAULT;
    for which in [Builtin::E0C0, Builtin::EC(2), Builtin::EbarCbar(2)] {
        let sep = builtin_graph(which);
        let p = present_finitely_separated(&sep).unwrap();
        for a in &sep.graph.arrows {
            let (v, w) = (Word::generator(a.src), Word::generator(a.rng));
            assert!(
                decide_leq(&p, &w, &v, &b).unwrap().is_holds(),
                "{which}: {}",
                a.name
            );
        }
        for g in 0..p.gens.len() {
            let d = decide_equal(&p, &Word::generator(g), &Word::zero(), &b, &[]).unwrap();
            assert!(!d.is_holds());
        }
    }
}

#[test]
fn tilde_matches_the_emitter_presentation() {
    let f = parse_graph(
        "graph T\nvertices v z\narrow e1 v -> z\narrow e2 v -> z\narrow e3 v -> z\n\
         emitter v : e1 e2 e3 depth 2\n",
    )
    .unwrap();
    let q = present_emitters(&f.sep, &f.emitters).unwrap();
    let tilde = tilde_construction(f.graph(), &f.emitters).unwrap();
    let p = present_finitely_separated(&unseparation(&tilde)).unwrap();
    let rename: Vec<usize> = q
        .gens
        .names()
        .iter()
        .map(|g| p.gens.index_of(&g.replacen("q_", "w_", 1)).unwrap())
        .collect();
    let d = compare_classes(&q, &p, &rename, 5, &SearchBound::DEFAULT.with_degree(16)).unwrap();
    assert!(matches!(d, Decision::Holds(n) if n > 100), "{d:?}");
}
