//! Wildness certificates and further necessary conditions for tameness.
//!
//! A stably finite tame monoid is cancellative, and tame monoids are separative and
//! unperforated; a failure of any of these is a certificate of wildness. Tameness itself is
//! never decided: the strongest positive outcome is evidence at a bound.

use std::time::Instant;

use refmon_core::{SearchBound, Truth};

use crate::oracle::MonoidOracle;
use crate::property::{
    and, check_property, implies, Context, PropertyId, PropertyOutcome, PropertyReport, Verdict,
};

fn report(
    monoid: String,
    property: &str,
    verdict: Verdict,
    witnesses: Vec<String>,
    b: &SearchBound,
    counts: (usize, usize),
    start: Instant,
) -> PropertyReport {
    PropertyReport {
        monoid,
        property: property.to_string(),
        verdict,
        witnesses,
        bound: *b,
        instances: counts.0,
        undecided: counts.1,
        elapsed_ms: start.elapsed().as_millis() as u64,
    }
}

/// Why the monoid is stably finite, if that is known: a certificate or an exhaustive check.
pub fn stable_finiteness_reason<O: MonoidOracle>(o: &O, b: &SearchBound) -> Option<String> {
    if let Some(c) = o.positive_state().or_else(|| o.stable_finiteness_cert()) {
        return Some(format!("stably finite by certificate {}", c.name));
    }
    let sf = check_property(o, PropertyId::StablyFinite, b).report;
    sf.is_holds().then(|| {
        format!(
            "stably finite at maxDegree {} ({} instances)",
            b.max_degree, sf.instances
        )
    })
}

/// Holds (wild) when stable finiteness is known and cancellation fails, or when
/// separativity or unperforation fails; Unknown otherwise.
pub fn wildness_certificate<O: MonoidOracle>(o: &O, b: &SearchBound) -> PropertyReport {
    let start = Instant::now();
    let canc = check_property(o, PropertyId::Cancellative, b).report;
    if canc.is_fails() {
        if let Some(reason) = stable_finiteness_reason(o, b) {
            let mut w = vec![reason, "not cancellative".to_string()];
            w.extend(canc.witnesses);
            return report(
                o.name(),
                "WILD",
                Verdict::Holds,
                w,
                b,
                (canc.instances, 0),
                start,
            );
        }
    }
    for prop in [PropertyId::Separative, PropertyId::Unperforated] {
        let r = check_property(o, prop, b).report;
        if r.is_fails() {
            let mut w = vec![format!("not {}", prop.name().to_ascii_lowercase())];
            w.extend(r.witnesses);
            return report(
                o.name(),
                "WILD",
                Verdict::Holds,
                w,
                b,
                (r.instances, 0),
                start,
            );
        }
    }
    let w = vec!["no wildness certificate at this bound".to_string()];
    report(o.name(), "WILD", Verdict::Unknown, w, b, (0, 0), start)
}

/// Evidence of tameness for a stably finite monoid: conical, stably finite, unperforated and
/// cancellative all hold at the bound. Never more than Unknown.
pub fn tameness_evidence<O: MonoidOracle>(o: &O, b: &SearchBound) -> PropertyReport {
    let start = Instant::now();
    let props = [
        PropertyId::Conical,
        PropertyId::StablyFinite,
        PropertyId::Unperforated,
        PropertyId::Cancellative,
    ];
    let mut w = Vec::new();
    for p in props {
        let r = check_property(o, p, b).report;
        w.push(format!("{} {}", p.name(), r.verdict));
    }
    let all = w.iter().all(|s| s.ends_with("Holds"));
    if all {
        w.push("consistent with tame at this bound".to_string());
    }
    report(
        o.name(),
        "TAME_EVIDENCE",
        Verdict::Unknown,
        w,
        b,
        (props.len(), 0),
        start,
    )
}

/// Some `a1` with `a1 + c = c` and `a ≤ b + a1`, given `a + c ≤ b + c`.
///
/// Every such `a1` lies below `c`; under a stable-finiteness certificate it is `0`.
fn clause_one<O: MonoidOracle>(ctx: &Context<O>, a: &O::Elem, bb: &O::Elem, c: &O::Elem) -> Truth {
    let o = ctx.o;
    let premise = ctx.leq(&ctx.add(a, c), &ctx.add(bb, c));
    implies(premise, || {
        let certified = o.stable_finiteness_cert().is_some() || o.positive_state().is_some();
        let zero = [o.zero()];
        let (candidates, complete): (&[O::Elem], bool) = if certified {
            (&zero, true)
        } else {
            (&ctx.els, o.lower_set_complete(c, &ctx.b))
        };
        let mut unknown = !complete;
        for a1 in candidates {
            let t = and(ctx.eq(&ctx.add(a1, c), c), || ctx.leq(a, &ctx.add(bb, a1)));
            match t {
                Truth::True => return Truth::True,
                Truth::Unknown => unknown = true,
                Truth::False => {}
            }
        }
        if unknown {
            Truth::Unknown
        } else {
            Truth::False
        }
    })
}

/// Some `d` with `a ≤ c + d`, `d ≤ d1`, `d ≤ d2`, given `a ≤ c + d1` and `a ≤ c + d2`.
fn clause_two<O: MonoidOracle>(
    ctx: &Context<O>,
    a: &O::Elem,
    c: &O::Elem,
    d1: &O::Elem,
    d2: &O::Elem,
) -> Truth {
    let premise = and(ctx.leq(a, &ctx.add(c, d1)), || ctx.leq(a, &ctx.add(c, d2)));
    implies(premise, || {
        let mut unknown = !ctx.o.lower_set_complete(d1, &ctx.b);
        for d in [d1, d2].into_iter().chain(ctx.els.iter()) {
            let t = and(ctx.leq(d, d1), || {
                and(ctx.leq(d, d2), || ctx.leq(a, &ctx.add(c, d)))
            });
            match t {
                Truth::True => return Truth::True,
                Truth::Unknown => unknown = true,
                Truth::False => {}
            }
        }
        if unknown {
            Truth::Unknown
        } else {
            Truth::False
        }
    })
}

fn finish<E>(
    monoid: String,
    name: &str,
    b: &SearchBound,
    counts: (usize, usize),
    violation: Option<(Vec<String>, Vec<E>)>,
    start: Instant,
) -> PropertyOutcome<E> {
    let (verdict, witnesses, ce) = match violation {
        Some((w, elems)) => (
            Verdict::Fails,
            w,
            Some(crate::property::Instance::new(elems)),
        ),
        None if counts.1 > 0 => (Verdict::Unknown, Vec::new(), None),
        None => (Verdict::Holds, Vec::new(), None),
    };
    PropertyOutcome {
        report: report(monoid, name, verdict, witnesses, b, counts, start),
        counterexample: ce,
    }
}

/// Bounded universal checks of the two further clauses satisfied by tame monoids:
/// (1) `a + c ≤ b + c` gives `a1` with `a1 + c = c` and `a ≤ b + a1`;
/// (2) `a ≤ c + d1`, `a ≤ c + d2` give `d ≤ d1, d2` with `a ≤ c + d`.
pub fn further_tame_checks<O: MonoidOracle>(
    o: &O,
    b: &SearchBound,
) -> (PropertyOutcome<O::Elem>, PropertyOutcome<O::Elem>) {
    let ctx = Context::new(o, b);
    let els = &ctx.els;

    let start = Instant::now();
    let (mut n, mut u, mut bad) = (0, 0, None);
    'one: for a in els {
        for bb in els {
            for c in els {
                n += 1;
                match clause_one(&ctx, a, bb, c) {
                    Truth::True => {}
                    Truth::Unknown => u += 1,
                    Truth::False => {
                        let w = vec![
                            format!("a = {}", o.show(a)),
                            format!("b = {}", o.show(bb)),
                            format!("c = {}", o.show(c)),
                        ];
                        bad = Some((w, vec![a.clone(), bb.clone(), c.clone()]));
                        break 'one;
                    }
                }
            }
        }
    }
    let first = finish(o.name(), "FURTHER_TAME_1", b, (n, u), bad, start);

    let start = Instant::now();
    let (mut n, mut u, mut bad) = (0, 0, None);
    'two: for a in els {
        for c in els {
            for d1 in els {
                for d2 in els {
                    n += 1;
                    match clause_two(&ctx, a, c, d1, d2) {
                        Truth::True => {}
                        Truth::Unknown => u += 1,
                        Truth::False => {
                            let w = vec![
                                format!("a = {}", o.show(a)),
                                format!("c = {}", o.show(c)),
                                format!("d1 = {}", o.show(d1)),
                                format!("d2 = {}", o.show(d2)),
                            ];
                            bad = Some((w, vec![a.clone(), c.clone(), d1.clone(), d2.clone()]));
                            break 'two;
                        }
                    }
                }
            }
        }
    }
    let second = finish(o.name(), "FURTHER_TAME_2", b, (n, u), bad, start);
    (first, second)
}

/// Re-checks a counterexample to clause 1 (three elements) or clause 2 (four elements).
pub fn replay_further<O: MonoidOracle>(o: &O, elems: &[O::Elem], b: &SearchBound) -> bool {
    let ctx = Context::new(o, b);
    let t = match elems {
        [a, bb, c] => clause_one(&ctx, a, bb, c),
        [a, c, d1, d2] => clause_two(&ctx, a, c, d1, d2),
        _ => Truth::Unknown,
    };
    t == Truth::False
}
