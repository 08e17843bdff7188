//! Bounded checks of the standard monoid properties.
//!
//! Quantifiers range over `elements(max_degree)` and multipliers up to `max_coefficient`.
//! A universal property Holds only at the bound it reports; Fails always comes with a
//! counterexample that [`replay`] re-checks through the oracle.

use std::cell::OnceCell;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use refmon_core::{Decision, SearchBound, Truth};
use serde::{Deserialize, Serialize};

use crate::error::LabError;
use crate::oracle::{invertible, multiple, MonoidOracle};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum PropertyId {
    Conical,
    StablyFinite,
    Separative,
    StronglySeparative,
    Cancellative,
    Unperforated,
    Antisymmetric,
    Archimedean,
    Refinement,
    RieszDecomposition,
    RieszInterpolation,
}

impl PropertyId {
    pub const ALL: [PropertyId; 11] = [
        PropertyId::Conical,
        PropertyId::StablyFinite,
        PropertyId::Separative,
        PropertyId::StronglySeparative,
        PropertyId::Cancellative,
        PropertyId::Unperforated,
        PropertyId::Antisymmetric,
        PropertyId::Archimedean,
        PropertyId::Refinement,
        PropertyId::RieszDecomposition,
        PropertyId::RieszInterpolation,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PropertyId::Conical => "CONICAL",
            PropertyId::StablyFinite => "STABLY_FINITE",
            PropertyId::Separative => "SEPARATIVE",
            PropertyId::StronglySeparative => "STRONGLY_SEPARATIVE",
            PropertyId::Cancellative => "CANCELLATIVE",
            PropertyId::Unperforated => "UNPERFORATED",
            PropertyId::Antisymmetric => "ANTISYMMETRIC",
            PropertyId::Archimedean => "ARCHIMEDEAN",
            PropertyId::Refinement => "REFINEMENT",
            PropertyId::RieszDecomposition => "RIESZ_DECOMPOSITION",
            PropertyId::RieszInterpolation => "RIESZ_INTERPOLATION",
        }
    }

    /// Number of quantified elements in one instance.
    pub fn arity(self) -> usize {
        match self {
            PropertyId::Cancellative | PropertyId::RieszDecomposition => 3,
            PropertyId::Refinement | PropertyId::RieszInterpolation => 4,
            _ => 2,
        }
    }

    /// The defining implication, as printed in reports.
    pub fn statement(self) -> &'static str {
        match self {
            PropertyId::Conical => "x + y = 0 => x = y = 0",
            PropertyId::StablyFinite => "x + y = x => y = 0",
            PropertyId::Separative => "2x = 2y = x + y => x = y",
            PropertyId::StronglySeparative => "2x = x + y => x = y",
            PropertyId::Cancellative => "x + z = y + z => x = y",
            PropertyId::Unperforated => "n x <= n y => x <= y",
            PropertyId::Antisymmetric => "x <= y <= x => x = y",
            PropertyId::Archimedean => "n x <= y for all n => x invertible",
            PropertyId::Refinement => "a + b = c + d => a refinement matrix exists",
            PropertyId::RieszDecomposition => "x <= y1 + y2 => x = x1 + x2 with xi <= yi",
            PropertyId::RieszInterpolation => "xi <= yj => xi <= z <= yj for some z",
        }
    }
}

impl fmt::Display for PropertyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PropertyId {
    type Err = LabError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm = s.trim().to_ascii_uppercase().replace('-', "_");
        PropertyId::ALL
            .into_iter()
            .find(|p| p.name() == norm)
            .ok_or_else(|| LabError::UnknownProperty(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    Holds,
    Fails,
    Unknown,
}

impl From<Truth> for Verdict {
    fn from(t: Truth) -> Self {
        match t {
            Truth::True => Verdict::Holds,
            Truth::False => Verdict::Fails,
            Truth::Unknown => Verdict::Unknown,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Holds => "Holds",
            Verdict::Fails => "Fails",
            Verdict::Unknown => "Unknown",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub monoid: String,
    pub property: String,
    pub verdict: Verdict,
    pub witnesses: Vec<String>,
    pub bound: SearchBound,
    /// Instances examined; for Holds, all of them were decided.
    pub instances: usize,
    /// Instances left undecided by the oracle.
    pub undecided: usize,
    pub elapsed_ms: u64,
}

impl PropertyReport {
    pub fn is_holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }

    pub fn is_fails(&self) -> bool {
        self.verdict == Verdict::Fails
    }

    /// One line: `monoid PROPERTY verdict [witnesses] (bound)`.
    pub fn line(&self) -> String {
        let mut s = format!("{} {} {}", self.monoid, self.property, self.verdict);
        if !self.witnesses.is_empty() {
            s.push_str(&format!(" [{}]", self.witnesses.join("; ")));
        }
        s.push_str(&format!(
            " (maxDegree {}, maxCoeff {}, maxClassSize {}; {} instances, {} undecided)",
            self.bound.max_degree,
            self.bound.max_coefficient,
            self.bound.max_class_size,
            self.instances,
            self.undecided
        ));
        s
    }
}

/// The quantified elements of one instance, and its multiplier when the property has one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance<E> {
    pub elems: Vec<E>,
    pub multiplier: Option<u64>,
}

impl<E> Instance<E> {
    pub fn new(elems: Vec<E>) -> Self {
        Instance {
            elems,
            multiplier: None,
        }
    }

    pub fn with_multiplier(elems: Vec<E>, n: u64) -> Self {
        Instance {
            elems,
            multiplier: Some(n),
        }
    }
}

#[derive(Debug, Clone)]
pub struct PropertyOutcome<E> {
    pub report: PropertyReport,
    pub counterexample: Option<Instance<E>>,
}

pub(crate) fn and(a: Truth, b: impl FnOnce() -> Truth) -> Truth {
    match a {
        Truth::False => Truth::False,
        Truth::True => b(),
        Truth::Unknown => match b() {
            Truth::False => Truth::False,
            _ => Truth::Unknown,
        },
    }
}

pub(crate) fn not(a: Truth) -> Truth {
    match a {
        Truth::True => Truth::False,
        Truth::False => Truth::True,
        Truth::Unknown => Truth::Unknown,
    }
}

pub(crate) fn implies(p: Truth, q: impl FnOnce() -> Truth) -> Truth {
    match p {
        Truth::False => Truth::True,
        Truth::True => q(),
        Truth::Unknown => match q() {
            Truth::True => Truth::True,
            _ => Truth::Unknown,
        },
    }
}

/// Shared state of one sweep: the oracle, the bound and the quantifier domain.
pub struct Context<'a, O: MonoidOracle> {
    pub o: &'a O,
    pub b: SearchBound,
    pub els: Vec<O::Elem>,
    sums: OnceCell<Option<HashMap<String, Vec<(usize, usize)>>>>,
}

impl<'a, O: MonoidOracle> Context<'a, O> {
    pub fn new(o: &'a O, b: &SearchBound) -> Self {
        Context {
            o,
            b: *b,
            els: o.elements(b.max_degree),
            sums: OnceCell::new(),
        }
    }

    pub fn eq(&self, x: &O::Elem, y: &O::Elem) -> Truth {
        self.o.equal(x, y, &self.b)
    }

    pub fn leq(&self, x: &O::Elem, y: &O::Elem) -> Truth {
        self.o.leq(x, y, &self.b).truth()
    }

    pub fn add(&self, x: &O::Elem, y: &O::Elem) -> O::Elem {
        self.o.add(x, y)
    }

    fn is_zero(&self, x: &O::Elem) -> Truth {
        self.eq(x, &self.o.zero())
    }

    /// Index of all pairs of domain elements by the key of their sum.
    fn sum_index(&self) -> Option<&HashMap<String, Vec<(usize, usize)>>> {
        self.sums
            .get_or_init(|| {
                let mut map: HashMap<String, Vec<(usize, usize)>> = HashMap::new();
                for (i, a) in self.els.iter().enumerate() {
                    for (j, b) in self.els.iter().enumerate() {
                        map.entry(self.o.key(&self.o.add(a, b))?)
                            .or_default()
                            .push((i, j));
                    }
                }
                Some(map)
            })
            .as_ref()
    }

    /// Pairs summing to `x`, and whether they are all of them.
    pub fn splittings(&self, x: &O::Elem) -> (Vec<(O::Elem, O::Elem)>, bool) {
        if let Some(found) = self.o.splittings(x, &self.b) {
            return found;
        }
        match (self.o.key(x), self.sum_index()) {
            (Some(k), Some(index)) => {
                let pairs = index.get(&k).map(Vec::as_slice).unwrap_or(&[]);
                let out = pairs
                    .iter()
                    .map(|&(i, j)| (self.els[i].clone(), self.els[j].clone()))
                    .collect();
                (out, false)
            }
            _ => (Vec::new(), false),
        }
    }
}

/// Whether `a + b = c + d` (assumed) has a refinement. Without a dedicated procedure the
/// search over splittings can only confirm one.
fn refinement_exists<O: MonoidOracle>(
    ctx: &Context<O>,
    a: &O::Elem,
    b: &O::Elem,
    c: &O::Elem,
    d: &O::Elem,
) -> Truth {
    if let Some(found) = ctx.o.find_refinement(a, b, c, d, &ctx.b) {
        return found.truth();
    }
    let (rows_a, _) = ctx.splittings(a);
    let (rows_c, _) = ctx.splittings(c);
    let (rows_b, _) = ctx.splittings(b);
    for (z11, z12) in &rows_a {
        for (c1, z21) in &rows_c {
            if ctx.eq(c1, z11) != Truth::True {
                continue;
            }
            for (b1, z22) in &rows_b {
                if and(ctx.eq(b1, z21), || ctx.eq(&ctx.add(z12, z22), d)) == Truth::True {
                    return Truth::True;
                }
            }
        }
    }
    Truth::Unknown
}

/// Whether `x ≤ y1 + y2` (assumed) splits as `x1 + x2` with `xi ≤ yi`.
fn decomposition_exists<O: MonoidOracle>(
    ctx: &Context<O>,
    x: &O::Elem,
    y1: &O::Elem,
    y2: &O::Elem,
) -> Truth {
    if let Decision::Holds(c) = ctx.o.leq(x, &ctx.add(y1, y2), &ctx.b) {
        if let Some(Decision::Holds(_)) = ctx.o.find_refinement(x, &c, y1, y2, &ctx.b) {
            return Truth::True;
        }
    }
    let (splits, complete) = ctx.splittings(x);
    let mut unknown = !complete;
    for (x1, x2) in &splits {
        match and(ctx.leq(x1, y1), || ctx.leq(x2, y2)) {
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
}

/// Whether some `z` has `x1, x2 ≤ z ≤ y1, y2` (premises assumed).
fn interpolant_exists<O: MonoidOracle>(
    ctx: &Context<O>,
    xs: [&O::Elem; 2],
    ys: [&O::Elem; 2],
) -> Truth {
    let mut unknown = !ctx.o.lower_set_complete(ys[0], &ctx.b);
    let extra = [xs[0], xs[1], ys[0], ys[1]];
    for z in extra.into_iter().chain(ctx.els.iter()) {
        let t = and(ctx.leq(xs[0], z), || {
            and(ctx.leq(xs[1], z), || {
                and(ctx.leq(z, ys[0]), || ctx.leq(z, ys[1]))
            })
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
}

/// True when the property holds on this instance, False when the instance violates it.
pub fn check_instance<O: MonoidOracle>(
    ctx: &Context<O>,
    prop: PropertyId,
    inst: &Instance<O::Elem>,
) -> Truth {
    let e = &inst.elems;
    assert_eq!(
        e.len(),
        prop.arity(),
        "{prop} instances have {} elements",
        prop.arity()
    );
    let n = inst.multiplier.unwrap_or(1);
    let o = ctx.o;
    match prop {
        PropertyId::Conical => implies(ctx.is_zero(&ctx.add(&e[0], &e[1])), || {
            and(ctx.is_zero(&e[0]), || ctx.is_zero(&e[1]))
        }),
        PropertyId::StablyFinite => {
            implies(ctx.eq(&ctx.add(&e[0], &e[1]), &e[0]), || ctx.is_zero(&e[1]))
        }
        PropertyId::Separative => {
            let (x2, y2, xy) = (
                ctx.add(&e[0], &e[0]),
                ctx.add(&e[1], &e[1]),
                ctx.add(&e[0], &e[1]),
            );
            implies(and(ctx.eq(&x2, &y2), || ctx.eq(&x2, &xy)), || {
                ctx.eq(&e[0], &e[1])
            })
        }
        PropertyId::StronglySeparative => {
            let (x2, xy) = (ctx.add(&e[0], &e[0]), ctx.add(&e[0], &e[1]));
            implies(ctx.eq(&x2, &xy), || ctx.eq(&e[0], &e[1]))
        }
        PropertyId::Cancellative => {
            let (xz, yz) = (ctx.add(&e[0], &e[2]), ctx.add(&e[1], &e[2]));
            implies(ctx.eq(&xz, &yz), || ctx.eq(&e[0], &e[1]))
        }
        PropertyId::Unperforated => {
            let (nx, ny) = (multiple(o, &e[0], n), multiple(o, &e[1], n));
            implies(ctx.leq(&nx, &ny), || ctx.leq(&e[0], &e[1]))
        }
        PropertyId::Antisymmetric => {
            implies(and(ctx.leq(&e[0], &e[1]), || ctx.leq(&e[1], &e[0])), || {
                ctx.eq(&e[0], &e[1])
            })
        }
        PropertyId::Archimedean => {
            let mut all_below = not(invertible(o, &e[0], &ctx.b));
            for k in 1..=n {
                all_below = and(all_below, || ctx.leq(&multiple(o, &e[0], k), &e[1]));
            }
            not(all_below)
        }
        PropertyId::Refinement => {
            let (ab, cd) = (ctx.add(&e[0], &e[1]), ctx.add(&e[2], &e[3]));
            implies(ctx.eq(&ab, &cd), || {
                refinement_exists(ctx, &e[0], &e[1], &e[2], &e[3])
            })
        }
        PropertyId::RieszDecomposition => implies(ctx.leq(&e[0], &ctx.add(&e[1], &e[2])), || {
            decomposition_exists(ctx, &e[0], &e[1], &e[2])
        }),
        PropertyId::RieszInterpolation => {
            let below = [(0, 2), (0, 3), (1, 2), (1, 3)]
                .iter()
                .fold(Truth::True, |acc, &(i, j)| {
                    and(acc, || ctx.leq(&e[i], &e[j]))
                });
            implies(below, || {
                interpolant_exists(ctx, [&e[0], &e[1]], [&e[2], &e[3]])
            })
        }
    }
}

/// Re-checks a counterexample; True when the violation is reproduced.
pub fn replay<O: MonoidOracle>(
    o: &O,
    prop: PropertyId,
    ce: &Instance<O::Elem>,
    b: &SearchBound,
) -> bool {
    let ctx = Context {
        o,
        b: *b,
        els: o.elements(b.max_degree),
        sums: OnceCell::new(),
    };
    check_instance(&ctx, prop, ce) == Truth::False
}

/// Counts decided and undecided instances until the first violation.
#[derive(Default)]
struct Tally {
    instances: usize,
    undecided: usize,
}

impl Tally {
    fn record<E>(
        &mut self,
        t: Truth,
        inst: impl FnOnce() -> Instance<E>,
    ) -> Result<(), Instance<E>> {
        self.instances += 1;
        match t {
            Truth::True => Ok(()),
            Truth::Unknown => {
                self.undecided += 1;
                Ok(())
            }
            Truth::False => Err(inst()),
        }
    }
}

fn sweep_tuples<O: MonoidOracle>(
    ctx: &Context<O>,
    prop: PropertyId,
    tally: &mut Tally,
) -> Result<(), Instance<O::Elem>> {
    let els = &ctx.els;
    let arity = prop.arity();
    let mut idx = vec![0usize; arity];
    if els.is_empty() {
        return Ok(());
    }
    loop {
        let elems: Vec<O::Elem> = idx.iter().map(|&i| els[i].clone()).collect();
        let inst = Instance::new(elems);
        let t = check_instance(ctx, prop, &inst);
        tally.record(t, || inst)?;
        let mut pos = arity;
        loop {
            if pos == 0 {
                return Ok(());
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < els.len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

fn sweep_cancellative_keyed<O: MonoidOracle>(
    ctx: &Context<O>,
    tally: &mut Tally,
) -> Option<Result<(), Instance<O::Elem>>> {
    let els = &ctx.els;
    let keys: Vec<String> = els.iter().map(|e| ctx.o.key(e)).collect::<Option<_>>()?;
    for z in els {
        let mut seen: HashMap<String, usize> = HashMap::new();
        for (i, x) in els.iter().enumerate() {
            let k = ctx.o.key(&ctx.add(x, z))?;
            tally.instances += els.len();
            if let Some(&j) = seen.get(&k) {
                if keys[i] != keys[j] {
                    let inst = Instance::new(vec![els[j].clone(), x.clone(), z.clone()]);
                    return Some(Err(inst));
                }
            } else {
                seen.insert(k, i);
            }
        }
    }
    Some(Ok(()))
}

fn sweep_unperforated<O: MonoidOracle>(
    ctx: &Context<O>,
    tally: &mut Tally,
) -> Result<(), Instance<O::Elem>> {
    for n in 2..=ctx.b.max_coefficient {
        for x in &ctx.els {
            for y in &ctx.els {
                let inst = Instance::with_multiplier(vec![x.clone(), y.clone()], n);
                let t = check_instance(ctx, PropertyId::Unperforated, &inst);
                tally.record(t, || inst)?;
            }
        }
    }
    Ok(())
}

/// Equations `a + b = c + d` over the domain.
fn sweep_refinement<O: MonoidOracle>(
    ctx: &Context<O>,
    tally: &mut Tally,
) -> Result<(), Instance<O::Elem>> {
    let els = &ctx.els;
    if let Some(index) = ctx.sum_index() {
        for pairs in index.values() {
            for (n, &(a, b)) in pairs.iter().enumerate() {
                for &(c, d) in &pairs[n..] {
                    let inst = Instance::new(vec![
                        els[a].clone(),
                        els[b].clone(),
                        els[c].clone(),
                        els[d].clone(),
                    ]);
                    let t = refinement_exists(ctx, &els[a], &els[b], &els[c], &els[d]);
                    tally.record(t, || inst)?;
                }
            }
        }
        return Ok(());
    }
    for a in els {
        for b in els {
            let s = ctx.add(a, b);
            let (splits, complete) = ctx.splittings(&s);
            if splits.is_empty() {
                tally.instances += 1;
                tally.undecided += 1;
                continue;
            }
            if !complete {
                tally.undecided += 1;
            }
            let max = ctx.b.max_degree;
            for (c, d) in splits {
                if ctx.o.degree(&c) > max || ctx.o.degree(&d) > max {
                    continue;
                }
                let t = refinement_exists(ctx, a, b, &c, &d);
                tally.record(t, || Instance::new(vec![a.clone(), b.clone(), c, d]))?;
            }
        }
    }
    Ok(())
}

fn sweep_interpolation<O: MonoidOracle>(
    ctx: &Context<O>,
    tally: &mut Tally,
) -> Result<(), Instance<O::Elem>> {
    let els = &ctx.els;
    for y1 in els {
        for y2 in els {
            let below: Vec<&O::Elem> = els
                .iter()
                .filter(|x| and(ctx.leq(x, y1), || ctx.leq(x, y2)) != Truth::False)
                .collect();
            for x1 in &below {
                for x2 in &below {
                    let inst =
                        Instance::new(vec![(*x1).clone(), (*x2).clone(), y1.clone(), y2.clone()]);
                    let t = check_instance(ctx, PropertyId::RieszInterpolation, &inst);
                    tally.record(t, || inst)?;
                }
            }
        }
    }
    Ok(())
}

/// Looks for `x` non-invertible and `y` with `k x ≤ y` for every `k` up to
/// `max(maxCoefficient, deg y + 1)`.
fn archimedean_family<O: MonoidOracle>(
    ctx: &Context<O>,
    tally: &mut Tally,
) -> Option<Instance<O::Elem>> {
    for x in &ctx.els {
        if invertible(ctx.o, x, &ctx.b) != Truth::False {
            continue;
        }
        for y in &ctx.els {
            let n = ctx.b.max_coefficient.max(ctx.o.degree(y) + 1);
            let inst = Instance::with_multiplier(vec![x.clone(), y.clone()], n);
            tally.instances += 1;
            if check_instance(ctx, PropertyId::Archimedean, &inst) == Truth::False {
                return Some(inst);
            }
        }
    }
    None
}

fn describe<O: MonoidOracle>(o: &O, prop: PropertyId, ce: &Instance<O::Elem>) -> Vec<String> {
    let names: &[&str] = match prop {
        PropertyId::Cancellative => &["x", "y", "z"],
        PropertyId::RieszDecomposition => &["x", "y1", "y2"],
        PropertyId::Refinement => &["a", "b", "c", "d"],
        PropertyId::RieszInterpolation => &["x1", "x2", "y1", "y2"],
        _ => &["x", "y"],
    };
    let mut out: Vec<String> = names
        .iter()
        .zip(&ce.elems)
        .map(|(n, e)| format!("{n} = {}", o.show(e)))
        .collect();
    if let Some(n) = ce.multiplier {
        out.push(format!("n = {n}"));
    }
    out.push(format!("violates {}", prop.statement()));
    out
}

/// Runs one property check over `o` at bound `b`.
pub fn check_property<O: MonoidOracle>(
    o: &O,
    prop: PropertyId,
    b: &SearchBound,
) -> PropertyOutcome<O::Elem> {
    let start = Instant::now();
    let ctx = Context::new(o, b);
    let mut tally = Tally::default();
    let mut witnesses = Vec::new();

    let result: Result<(), Instance<O::Elem>> = match prop {
        PropertyId::Archimedean => {
            if let Some(state) = o.positive_state() {
                witnesses.push(format!("positive state {}", state.name));
                Ok(())
            } else {
                match archimedean_family(&ctx, &mut tally) {
                    Some(inst) => Err(inst),
                    None => {
                        tally.undecided += 1;
                        Ok(())
                    }
                }
            }
        }
        PropertyId::Cancellative => match sweep_cancellative_keyed(&ctx, &mut tally) {
            Some(r) => r,
            None => sweep_tuples(&ctx, prop, &mut tally),
        },
        PropertyId::Unperforated => sweep_unperforated(&ctx, &mut tally),
        PropertyId::Refinement => sweep_refinement(&ctx, &mut tally),
        PropertyId::RieszInterpolation => sweep_interpolation(&ctx, &mut tally),
        _ => sweep_tuples(&ctx, prop, &mut tally),
    };

    let (verdict, counterexample) = match result {
        Err(inst) => {
            witnesses = describe(o, prop, &inst);
            (Verdict::Fails, Some(inst))
        }
        Ok(()) if tally.undecided > 0 => (Verdict::Unknown, None),
        Ok(()) => (Verdict::Holds, None),
    };
    PropertyOutcome {
        report: PropertyReport {
            monoid: o.name(),
            property: prop.name().to_string(),
            verdict,
            witnesses,
            bound: *b,
            instances: tally.instances,
            undecided: tally.undecided,
            elapsed_ms: start.elapsed().as_millis() as u64,
        },
        counterexample,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_parse_loosely() {
        assert_eq!(
            "stably-finite".parse::<PropertyId>().unwrap(),
            PropertyId::StablyFinite
        );
        assert_eq!(
            "RIESZ_INTERPOLATION".parse::<PropertyId>().unwrap(),
            PropertyId::RieszInterpolation
        );
        assert!(matches!(
            "tame".parse::<PropertyId>(),
            Err(LabError::UnknownProperty(_))
        ));
    }

    #[test]
    fn three_valued_connectives() {
        use Truth::*;
        assert_eq!(implies(Unknown, || True), True);
        assert_eq!(implies(Unknown, || False), Unknown);
        assert_eq!(and(Unknown, || False), False);
        assert_eq!(and(True, || Unknown), Unknown);
        assert_eq!(not(Unknown), Unknown);
    }
}
