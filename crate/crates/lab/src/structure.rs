//! Irreducible elements, o-ideals and the congruences built from them.

use std::collections::HashSet;

use refmon_core::{Decision, SearchBound, Truth};

use crate::oracle::{invertible, MonoidOracle};
use crate::property::and;

/// An element with its irreducibility verdict and, when reducible, a decomposition.
#[derive(Debug, Clone)]
pub struct Irreducibility<E> {
    pub elem: E,
    pub verdict: Truth,
    pub decomposition: Option<(E, E)>,
}

/// Whether non-invertible `x` has only trivial decompositions `a + b` with `a` or `b`
/// from `pool`.
///
/// Any nontrivial `x = a + b` shows up either as `a ≤ x` with a non-invertible complement,
/// or, when every complement of `a` is invertible, as `x = x + b`.
pub fn irreducibility<O: MonoidOracle>(
    o: &O,
    x: &O::Elem,
    pool: &[O::Elem],
    b: &SearchBound,
) -> Irreducibility<O::Elem> {
    let done = |verdict, decomposition| Irreducibility {
        elem: x.clone(),
        verdict,
        decomposition,
    };
    match invertible(o, x, b) {
        Truth::False => {}
        t => {
            return done(
                if t == Truth::True {
                    Truth::False
                } else {
                    Truth::Unknown
                },
                None,
            )
        }
    }
    let mut unknown = false;
    for a in pool {
        match invertible(o, a, b) {
            Truth::True => continue,
            Truth::Unknown => {
                unknown = true;
                continue;
            }
            Truth::False => {}
        }
        match o.leq(a, x, b) {
            Decision::Holds(c) => match invertible(o, &c, b) {
                Truth::False => return done(Truth::False, Some((a.clone(), c))),
                Truth::Unknown => unknown = true,
                Truth::True => {}
            },
            Decision::Unknown(_) => unknown = true,
            Decision::Fails(()) => {}
        }
        match o.equal(&o.add(x, a), x, b) {
            Truth::True => return done(Truth::False, Some((x.clone(), a.clone()))),
            Truth::Unknown => unknown = true,
            Truth::False => {}
        }
    }
    done(if unknown { Truth::Unknown } else { Truth::True }, None)
}

/// Irreducibility of every element of degree at most `b.max_degree`.
pub fn irreducibility_sweep<O: MonoidOracle>(
    o: &O,
    b: &SearchBound,
) -> Vec<Irreducibility<O::Elem>> {
    let pool = o.decomposition_pool(b.max_degree);
    o.elements(b.max_degree)
        .iter()
        .map(|x| irreducibility(o, x, &pool, b))
        .collect()
}

/// Elements found irreducible at the bound.
pub fn irreducibles<O: MonoidOracle>(o: &O, b: &SearchBound) -> Vec<O::Elem> {
    irreducibility_sweep(o, b)
        .into_iter()
        .filter(|r| r.verdict == Truth::True)
        .map(|r| r.elem)
        .collect()
}

/// Generators of the pedestal, with a check that their sums already form an o-ideal
/// within the bound.
#[derive(Debug, Clone)]
pub struct Pedestal<E> {
    pub generators: Vec<E>,
    pub o_ideal: Truth,
}

pub fn pedestal<O: MonoidOracle>(o: &O, b: &SearchBound) -> Pedestal<O::Elem> {
    let generators = irreducibles(o, b);
    let sums = sums_up_to(o, &generators, b.max_degree);
    let members = Members::new(o, sums, b);
    let mut verdict = Truth::True;
    'outer: for s in &members.items {
        for y in o.elements(b.max_degree) {
            if o.leq(&y, s, b).truth() == Truth::True {
                verdict = and(verdict, || members.contains(&y));
                if verdict == Truth::False {
                    break 'outer;
                }
            }
        }
    }
    Pedestal {
        generators,
        o_ideal: verdict,
    }
}

/// All sums of `gens` of degree at most `max_degree`, including zero.
fn sums_up_to<O: MonoidOracle>(o: &O, gens: &[O::Elem], max_degree: u64) -> Vec<O::Elem> {
    let mut out = vec![o.zero()];
    let mut frontier = vec![o.zero()];
    let mut seen: HashSet<String> = HashSet::new();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for s in &frontier {
            for g in gens {
                let t = o.add(s, g);
                if o.degree(&t) > max_degree {
                    continue;
                }
                let k = o.key(&t).unwrap_or_else(|| o.show(&t));
                if seen.insert(k) {
                    next.push(t.clone());
                    out.push(t);
                }
            }
        }
        frontier = next;
    }
    out
}

/// A finite set of elements up to oracle equality.
struct Members<'a, O: MonoidOracle> {
    o: &'a O,
    b: SearchBound,
    items: Vec<O::Elem>,
    keys: HashSet<String>,
}

impl<'a, O: MonoidOracle> Members<'a, O> {
    fn new(o: &'a O, items: Vec<O::Elem>, b: &SearchBound) -> Self {
        let mut m = Members {
            o,
            b: *b,
            items: Vec::new(),
            keys: HashSet::new(),
        };
        for e in items {
            m.insert(e);
        }
        m
    }

    fn contains(&self, x: &O::Elem) -> Truth {
        if let Some(k) = self.o.key(x) {
            return Truth::from_bool(self.keys.contains(&k));
        }
        let mut out = Truth::False;
        for e in &self.items {
            match self.o.equal(x, e, &self.b) {
                Truth::True => return Truth::True,
                Truth::Unknown => out = Truth::Unknown,
                Truth::False => {}
            }
        }
        out
    }

    /// Adds `x` unless it is certainly present.
    fn insert(&mut self, x: O::Elem) -> bool {
        if self.contains(&x) == Truth::True {
            return false;
        }
        if let Some(k) = self.o.key(&x) {
            self.keys.insert(k);
        }
        self.items.push(x);
        true
    }
}

/// Membership in an o-ideal, with optional invariants: homomorphisms that vanish on the
/// ideal, given as canonical keys of their values.
pub struct IdealPredicate<'a, E> {
    pub name: String,
    member: Box<dyn Fn(&E) -> Truth + 'a>,
    invariants: Vec<(String, Box<dyn Fn(&E) -> String + 'a>)>,
}

impl<'a, E> IdealPredicate<'a, E> {
    pub fn new(name: impl Into<String>, member: impl Fn(&E) -> Truth + 'a) -> Self {
        IdealPredicate {
            name: name.into(),
            member: Box::new(member),
            invariants: Vec::new(),
        }
    }

    pub fn with_invariant(
        mut self,
        name: impl Into<String>,
        value: impl Fn(&E) -> String + 'a,
    ) -> Self {
        self.invariants.push((name.into(), Box::new(value)));
        self
    }

    pub fn member(&self, e: &E) -> Truth {
        (self.member)(e)
    }

    /// The first invariant taking different values on `x` and `y`.
    pub fn separating_invariant(&self, x: &E, y: &E) -> Option<&str> {
        self.invariants
            .iter()
            .find(|(_, f)| f(x) != f(y))
            .map(|(n, _)| n.as_str())
    }
}

/// The o-ideal generated by `gens`: sums of generators, closed downward and under sums
/// within degree `b.max_degree`.
///
/// Membership is True for elements reached, False for other elements of degree at most
/// the bound that are certainly different from every member, Unknown otherwise.
pub fn o_ideal_closure<'a, O: MonoidOracle>(
    o: &'a O,
    gens: &[O::Elem],
    b: &SearchBound,
) -> IdealPredicate<'a, O::Elem> {
    let d = b.max_degree;
    let domain = o.elements(d);
    let mut members = Members::new(o, sums_up_to(o, gens, d), b);
    loop {
        let mut grew = false;
        for y in &domain {
            if members.contains(y) == Truth::True {
                continue;
            }
            let below = members
                .items
                .iter()
                .any(|s| o.leq(y, s, b).truth() == Truth::True);
            if below && members.insert(y.clone()) {
                grew = true;
            }
        }
        let current = members.items.clone();
        for (i, s) in current.iter().enumerate() {
            for t in &current[i..] {
                let u = o.add(s, t);
                if o.degree(&u) <= d && members.insert(u) {
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
    }
    let names: Vec<String> = gens.iter().map(|g| o.show(g)).collect();
    let name = format!("ideal({})", names.join(", "));
    IdealPredicate::new(name, move |x: &O::Elem| match members.contains(x) {
        Truth::True => Truth::True,
        t if o.degree(x) <= d => t,
        _ => Truth::Unknown,
    })
}

/// `x ≡_J y`: Holds with `(a, b)` from `J` such that `x + a = y + b`; Fails when an
/// invariant of `J` separates `x` and `y`.
pub fn quotient_equal<O: MonoidOracle>(
    o: &O,
    ideal: &IdealPredicate<O::Elem>,
    x: &O::Elem,
    y: &O::Elem,
    b: &SearchBound,
) -> Decision<(O::Elem, O::Elem), String> {
    if let Some(inv) = ideal.separating_invariant(x, y) {
        return Decision::Fails(format!("invariant {inv} separates them"));
    }
    let mut candidates = vec![o.zero()];
    candidates.extend(
        o.elements(b.max_degree)
            .into_iter()
            .filter(|e| ideal.member(e) == Truth::True),
    );
    for a in &candidates {
        let xa = o.add(x, a);
        for c in &candidates {
            if o.equal(&xa, &o.add(y, c), b) == Truth::True {
                return Decision::Holds((a.clone(), c.clone()));
            }
        }
    }
    Decision::Unknown(*b)
}

/// `x ≤ y ≤ x`, with both complements.
pub fn max_antisym_equal<O: MonoidOracle>(
    o: &O,
    x: &O::Elem,
    y: &O::Elem,
    b: &SearchBound,
) -> Decision<(O::Elem, O::Elem), ()> {
    match (o.leq(x, y, b), o.leq(y, x, b)) {
        (Decision::Holds(c), Decision::Holds(d)) => Decision::Holds((c, d)),
        (Decision::Fails(()), _) | (_, Decision::Fails(())) => Decision::Fails(()),
        _ => Decision::Unknown(*b),
    }
}

/// `x ∼ y`: some `z` with `x + z = y + z`.
///
/// Fails when a homomorphism into a cancellative monoid separates `x` and `y`, or when
/// every `z` of degree at most the bound is certainly refuted.
pub fn max_cancel_equal<O: MonoidOracle>(
    o: &O,
    x: &O::Elem,
    y: &O::Elem,
    b: &SearchBound,
) -> Decision<O::Elem, String> {
    if let Some(h) = o.cancellative_separation(x, y) {
        return Decision::Fails(format!("separated by {h}, which has a cancellative target"));
    }
    let mut unknown = false;
    for z in o.elements(b.max_degree) {
        match o.equal(&o.add(x, &z), &o.add(y, &z), b) {
            Truth::True => return Decision::Holds(z),
            Truth::Unknown => unknown = true,
            Truth::False => {}
        }
    }
    if unknown {
        Decision::Unknown(*b)
    } else {
        Decision::Fails(format!("no z of degree at most {}", b.max_degree))
    }
}
