//! Single queries: equality, order and refinement in a resolved monoid, and the exact
//! calculator for 𝓜 and 𝓜̄.

use refmon_core::{
    decide_equal, decide_leq, Decision, RefinementMatrix, SearchBound, Separation, Truth,
};
use refmon_lab::{MonoidOracle, PresentationOracle, Verdict};
use refmon_wild::{
    cong_mod_ideal, ideal_member, m_refine, mbar_refine, parse_m_elem, parse_mbar_elem, q_map,
    OIdealId, WildElem,
};

use crate::error::CliError;
use crate::output::Answer;
use crate::subject::{Subject, Terms};
use crate::with_oracle;

fn answer(
    command: &str,
    monoid: String,
    query: String,
    verdict: Verdict,
    witnesses: Vec<String>,
    bound: Option<SearchBound>,
) -> Answer {
    Answer {
        command: command.to_string(),
        monoid,
        query,
        verdict,
        witnesses,
        bound,
    }
}

/// Exact oracles need no search bound.
fn bound_of(s: &Subject, b: &SearchBound) -> Option<SearchBound> {
    matches!(s, Subject::Presentation(_)).then_some(*b)
}

/// Class searches reach at least the degree of the words they start from.
fn lifted(b: &SearchBound, degrees: &[u64]) -> SearchBound {
    let top = degrees.iter().copied().max().unwrap_or(0);
    b.with_degree(b.max_degree.max(top))
}

fn describe_separation(o: &PresentationOracle, s: &Separation) -> String {
    match s {
        Separation::Certificate {
            certificate,
            left,
            right,
        } => format!("certificate {certificate} takes the values {left} and {right}"),
        Separation::ExhaustedClass { word, class_size } => format!(
            "the class of {} is exhausted at {class_size} words",
            o.presentation.show(word)
        ),
    }
}

fn show_matrix<E>(o: &impl MonoidOracle<Elem = E>, m: &RefinementMatrix<E>) -> Vec<String> {
    let e = &m.entries;
    vec![
        format!("row 1: {} | {}", o.show(&e[0][0]), o.show(&e[0][1])),
        format!("row 2: {} | {}", o.show(&e[1][0]), o.show(&e[1][1])),
    ]
}

pub fn eq(s: &Subject, u: &str, v: &str, b: &SearchBound) -> Result<Answer, CliError> {
    let query = format!("{u} = {v}");
    let (verdict, witnesses) = match s {
        Subject::Presentation(o) => {
            let (wu, wv) = (o.parse(u)?, o.parse(v)?);
            let b = lifted(b, &[wu.degree(), wv.degree()]);
            match decide_equal(&o.presentation, &wu, &wv, &b, &o.certs)? {
                Decision::Holds(path) => (
                    Verdict::Holds,
                    vec![format!(
                        "rewrite path: {}",
                        path.render(&o.presentation).join(" -> ")
                    )],
                ),
                Decision::Fails(sep) => (Verdict::Fails, vec![describe_separation(o, &sep)]),
                Decision::Unknown(_) => (Verdict::Unknown, vec![]),
            }
        }
        other => with_oracle!(other, o => {
            let (x, y) = (o.parse(u)?, o.parse(v)?);
            let verdict = Verdict::from(o.equal(&x, &y, b));
            let w = vec![format!("normal forms: {} and {}", o.normal(&x), o.normal(&y))];
            (verdict, w)
        }),
    };
    let monoid = with_oracle!(s, o => o.name());
    Ok(answer(
        "eq",
        monoid,
        query,
        verdict,
        witnesses,
        bound_of(s, b),
    ))
}

pub fn leq(s: &Subject, u: &str, v: &str, b: &SearchBound) -> Result<Answer, CliError> {
    let query = format!("{u} <= {v}");
    let (verdict, witnesses) = match s {
        Subject::Presentation(o) => {
            let (wu, wv) = (o.parse(u)?, o.parse(v)?);
            let b = lifted(b, &[wu.degree(), wv.degree()]);
            let p = &o.presentation;
            match decide_leq(p, &wu, &wv, &b)? {
                Decision::Holds(c) => (
                    Verdict::Holds,
                    vec![
                        format!("complement: {}", p.show(&c.complement)),
                        format!("{} = {}", p.show(&wv), p.show(&c.representative)),
                    ],
                ),
                Decision::Fails(n) => (
                    Verdict::Fails,
                    vec![format!(
                        "the class of {v} is exhausted at {n} words, none above {u}"
                    )],
                ),
                Decision::Unknown(_) => (Verdict::Unknown, vec![]),
            }
        }
        other => with_oracle!(other, o => {
            let (x, y) = (o.parse(u)?, o.parse(v)?);
            match o.leq(&x, &y, b) {
                Decision::Holds(c) => (Verdict::Holds, vec![format!("complement: {}", o.normal(&c))]),
                Decision::Fails(()) => (Verdict::Fails, vec![]),
                Decision::Unknown(_) => (Verdict::Unknown, vec![]),
            }
        }),
    };
    let monoid = with_oracle!(s, o => o.name());
    Ok(answer(
        "leq",
        monoid,
        query,
        verdict,
        witnesses,
        bound_of(s, b),
    ))
}

/// Tries every `z11 ≤ a` of bounded degree with its complements read off the order.
fn refinement_by_search<O: MonoidOracle>(
    o: &O,
    [a, bb, c, d]: [&O::Elem; 4],
    b: &SearchBound,
) -> Decision<RefinementMatrix<O::Elem>, ()> {
    let top = [a, bb, c, d].iter().map(|e| o.degree(e)).max().unwrap_or(0);
    for z11 in o.elements(top) {
        let (Decision::Holds(z12), Decision::Holds(z21)) = (o.leq(&z11, a, b), o.leq(&z11, c, b))
        else {
            continue;
        };
        if let Decision::Holds(z22) = o.leq(&z21, bb, b) {
            if o.equal(&o.add(&z12, &z22), d, b) == Truth::True {
                return Decision::Holds(RefinementMatrix::new(z11, z12, z21, z22));
            }
        }
    }
    Decision::Unknown(*b)
}

pub fn refine(s: &Subject, terms: [&str; 4], b: &SearchBound) -> Result<Answer, CliError> {
    let [ta, tb, tc, td] = terms;
    let query = format!("{ta} + {tb} = {tc} + {td}");
    let (verdict, witnesses) = with_oracle!(s, o => {
        let [a, bb, c, d] = [o.parse(ta)?, o.parse(tb)?, o.parse(tc)?, o.parse(td)?];
        match o.equal(&o.add(&a, &bb), &o.add(&c, &d), b) {
            Truth::False => return Err(CliError::Usage(format!("not an equation: {query}"))),
            Truth::Unknown => (Verdict::Unknown, vec!["the equation itself is undecided".to_string()]),
            Truth::True => {
                let found = o
                    .find_refinement(&a, &bb, &c, &d, b)
                    .unwrap_or_else(|| refinement_by_search(o, [&a, &bb, &c, &d], b));
                match found {
                    Decision::Holds(m) => (Verdict::Holds, show_matrix(o, &m)),
                    Decision::Fails(()) => (Verdict::Fails, vec!["no refinement exists".to_string()]),
                    Decision::Unknown(_) => (Verdict::Unknown, vec![]),
                }
            }
        }
    });
    let monoid = with_oracle!(s, o => o.name());
    Ok(answer(
        "refine",
        monoid,
        query,
        verdict,
        witnesses,
        bound_of(s, b),
    ))
}

/// Operations of the exact calculator.
#[derive(Debug, Clone)]
pub enum WildOp {
    Eq(String, String),
    Leq(String, String),
    Add(Vec<String>),
    Normal(String),
    Refine([String; 4]),
    Member(String, OIdealId),
    Cong(String, String, OIdealId),
    Q(String),
}

/// `𝓜̄` when the term mentions a barred generator, `𝓜` otherwise.
pub fn wild_elem(term: &str) -> Result<WildElem, CliError> {
    let parsed = if term.contains("bar") {
        parse_mbar_elem(term).map(WildElem::MBar)
    } else {
        parse_m_elem(term).map(WildElem::M)
    };
    parsed.map_err(|e| CliError::Term {
        term: term.to_string(),
        reason: e.to_string(),
    })
}

fn ambient(e: &WildElem) -> String {
    e.ambient().to_string()
}

fn normal(e: &WildElem) -> String {
    match e {
        WildElem::M(x) => x.normalized().to_string(),
        WildElem::MBar(x) => x.normalized().to_string(),
    }
}

fn mixed(a: &str, b: &str) -> CliError {
    CliError::Usage(format!("`{a}` and `{b}` live in different monoids"))
}

fn sum(e: &WildElem, f: &WildElem) -> Option<WildElem> {
    match (e, f) {
        (WildElem::M(x), WildElem::M(y)) => Some(WildElem::M(x.add(y))),
        (WildElem::MBar(x), WildElem::MBar(y)) => Some(WildElem::MBar(x.add(y))),
        _ => None,
    }
}

pub fn wild(op: &WildOp) -> Result<Answer, CliError> {
    let done = |monoid: String, query: String, verdict: Verdict, w: Vec<String>| {
        answer("wild", monoid, query, verdict, w, None)
    };
    Ok(match op {
        WildOp::Eq(ta, tb) => {
            let (a, b) = (wild_elem(ta)?, wild_elem(tb)?);
            let equal = match (&a, &b) {
                (WildElem::M(x), WildElem::M(y)) => x.equal(y),
                (WildElem::MBar(x), WildElem::MBar(y)) => x.equal(y),
                _ => return Err(mixed(ta, tb)),
            };
            let w = vec![format!("normal forms: {} and {}", normal(&a), normal(&b))];
            let v = if equal {
                Verdict::Holds
            } else {
                Verdict::Fails
            };
            done(ambient(&a), format!("{ta} = {tb}"), v, w)
        }
        WildOp::Leq(ta, tb) => {
            let (a, b) = (wild_elem(ta)?, wild_elem(tb)?);
            let c = match (&a, &b) {
                (WildElem::M(x), WildElem::M(y)) => x.leq(y).map(|c| c.normalized().to_string()),
                (WildElem::MBar(x), WildElem::MBar(y)) => {
                    x.leq(y).map(|c| c.normalized().to_string())
                }
                _ => return Err(mixed(ta, tb)),
            };
            let (v, w) = match c {
                Some(c) => (Verdict::Holds, vec![format!("complement: {c}")]),
                None => (Verdict::Fails, vec![]),
            };
            done(ambient(&a), format!("{ta} <= {tb}"), v, w)
        }
        WildOp::Add(terms) => {
            let first = terms
                .first()
                .ok_or_else(|| CliError::Usage("add needs at least one term".to_string()))?;
            let mut acc = wild_elem(first)?;
            for t in &terms[1..] {
                acc = sum(&acc, &wild_elem(t)?).ok_or_else(|| mixed(first, t))?;
            }
            let w = vec![format!("sum: {}", normal(&acc))];
            done(ambient(&acc), terms.join(" + "), Verdict::Holds, w)
        }
        WildOp::Normal(t) => {
            let e = wild_elem(t)?;
            let w = vec![format!("normal form: {}", normal(&e))];
            done(ambient(&e), t.clone(), Verdict::Holds, w)
        }
        WildOp::Refine(terms) => {
            let els = terms
                .iter()
                .map(|t| wild_elem(t))
                .collect::<Result<Vec<_>, _>>()?;
            let rows = match &els[..] {
                [WildElem::M(a), WildElem::M(b), WildElem::M(c), WildElem::M(d)] => {
                    m_refine(a, b, c, d)?.map(|e| e.normalized().to_string())
                }
                [WildElem::MBar(a), WildElem::MBar(b), WildElem::MBar(c), WildElem::MBar(d)] => {
                    mbar_refine(a, b, c, d)?.map(|e| e.normalized().to_string())
                }
                _ => return Err(mixed(&terms[0], &terms[1..].join(", "))),
            };
            let e = &rows.entries;
            let w = vec![
                format!("row 1: {} | {}", e[0][0], e[0][1]),
                format!("row 2: {} | {}", e[1][0], e[1][1]),
            ];
            let q = format!("{} + {} = {} + {}", terms[0], terms[1], terms[2], terms[3]);
            done(ambient(&els[0]), q, Verdict::Holds, w)
        }
        WildOp::Member(t, id) => {
            let e = wild_elem(t)?;
            let v = if ideal_member(&e, *id)? {
                Verdict::Holds
            } else {
                Verdict::Fails
            };
            done(ambient(&e), format!("{t} in {id}"), v, vec![])
        }
        WildOp::Cong(ta, tb, id) => {
            let (a, b) = (wild_elem(ta)?, wild_elem(tb)?);
            let v = if cong_mod_ideal(&a, &b, *id)? {
                Verdict::Holds
            } else {
                Verdict::Fails
            };
            done(ambient(&a), format!("{ta} = {tb} mod {id}"), v, vec![])
        }
        WildOp::Q(t) => match wild_elem(t)? {
            WildElem::M(x) => {
                let w = vec![format!("q({t}) = {}", q_map(&x).normalized())];
                done("M".to_string(), format!("q({t})"), Verdict::Holds, w)
            }
            WildElem::MBar(_) => return Err(CliError::Usage("q maps M to Mbar".to_string())),
        },
    })
}
