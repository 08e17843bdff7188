//! A uniform facade over monoids with decidable or bounded-decidable equality and order.

use std::collections::HashSet;
use std::hash::Hash;

use refmon_core::oracle::ClassExplorer;
use refmon_core::{
    decide_equal, decide_leq, enumerate_class, find_refinement, words_up_to, CertificateHom,
    Decision, Presentation, RefinementMatrix, SearchBound, TargetMonoid, Truth, Word,
};
use refmon_primitive::{PrimElem, PrimePoset};
use refmon_wild::{
    m_refine, mbar_refine, named_certificate, MBarElem, MElem, NamedCert, Truncation,
};

/// Equality and order procedures for one monoid, with an element enumerator.
pub trait MonoidOracle {
    type Elem: Clone;

    fn name(&self) -> String;
    fn zero(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn equal(&self, a: &Self::Elem, b: &Self::Elem, bound: &SearchBound) -> Truth;
    /// `a ≤ b` with a complement `c`, `a + c = b`.
    fn leq(&self, a: &Self::Elem, b: &Self::Elem, bound: &SearchBound) -> Decision<Self::Elem, ()>;
    /// Elements of degree at most `max_degree`, lowest degree first.
    fn elements(&self, max_degree: u64) -> Vec<Self::Elem>;
    fn degree(&self, e: &Self::Elem) -> u64;
    fn show(&self, e: &Self::Elem) -> String;

    /// Candidate summands for decompositions of elements of degree at most `max_degree`.
    fn decomposition_pool(&self, max_degree: u64) -> Vec<Self::Elem> {
        self.elements(max_degree)
    }

    /// A canonical key, when equal elements always have equal keys and conversely.
    fn key(&self, _e: &Self::Elem) -> Option<String> {
        None
    }

    fn positive_state(&self) -> Option<CertificateHom> {
        None
    }

    fn stable_finiteness_cert(&self) -> Option<CertificateHom> {
        None
    }

    /// Name of a homomorphism into a cancellative monoid taking different values on `x`, `y`.
    fn cancellative_separation(&self, _x: &Self::Elem, _y: &Self::Elem) -> Option<String> {
        None
    }

    /// A dedicated refinement procedure for `a + b = c + d`, if the oracle has one.
    fn find_refinement(
        &self,
        _a: &Self::Elem,
        _b: &Self::Elem,
        _c: &Self::Elem,
        _d: &Self::Elem,
        _bound: &SearchBound,
    ) -> Option<Decision<RefinementMatrix<Self::Elem>, ()>> {
        None
    }

    /// True when every element below `y` equals one of `elements(bound.max_degree)`.
    fn lower_set_complete(&self, _y: &Self::Elem, _bound: &SearchBound) -> bool {
        false
    }

    /// Pairs `(a, b)` with `a + b = x`, and whether every such pair is among them up to equality.
    fn splittings(
        &self,
        _x: &Self::Elem,
        _bound: &SearchBound,
    ) -> Option<(Vec<(Self::Elem, Self::Elem)>, bool)> {
        None
    }
}

/// Class searches always reach the degree of the words they start from.
fn lifted(bound: &SearchBound, words: &[&Word]) -> SearchBound {
    let top = words.iter().map(|w| w.degree()).max().unwrap_or(0);
    bound.with_degree(bound.max_degree.max(top))
}

pub fn multiple<O: MonoidOracle>(o: &O, x: &O::Elem, n: u64) -> O::Elem {
    let mut acc = o.zero();
    for _ in 0..n {
        acc = o.add(&acc, x);
    }
    acc
}

/// `x` is invertible iff `x ≤ 0`.
pub fn invertible<O: MonoidOracle>(o: &O, x: &O::Elem, bound: &SearchBound) -> Truth {
    o.leq(x, &o.zero(), bound).truth()
}

pub fn is_cancellative_target(t: TargetMonoid) -> bool {
    matches!(
        t,
        TargetMonoid::NonnegRational
            | TargetMonoid::NonnegInteger
            | TargetMonoid::BMonoid
            | TargetMonoid::FreeAbelian
    )
}

/// Keeps the first of each run of equal elements, by key.
fn dedup_by_key<T: Clone, K: Hash + Eq>(items: Vec<T>, key: impl Fn(&T) -> K) -> Vec<T> {
    let mut seen = HashSet::new();
    items.into_iter().filter(|e| seen.insert(key(e))).collect()
}

/// Checks on small elements that `equal` is an equivalence compatible with `add` and that
/// `0 ≤ x` never Fails.
pub fn spot_check<O: MonoidOracle>(o: &O, max_degree: u64, bound: &SearchBound) -> Truth {
    let els = o.elements(max_degree);
    let mut unknown = false;
    let mut note = |t: Truth| match t {
        Truth::False => Err(()),
        Truth::Unknown => {
            unknown = true;
            Ok(())
        }
        Truth::True => Ok(()),
    };
    let run = |note: &mut dyn FnMut(Truth) -> Result<(), ()>| -> Result<(), ()> {
        for x in &els {
            note(o.equal(x, x, bound))?;
            if o.leq(&o.zero(), x, bound).is_fails() {
                return Err(());
            }
            for y in &els {
                let xy = o.equal(x, y, bound);
                if xy != o.equal(y, x, bound) {
                    return Err(());
                }
                if xy == Truth::True {
                    for z in &els {
                        let (a, b) = (o.add(x, z), o.add(y, z));
                        note(o.equal(&a, &b, bound))?;
                    }
                }
            }
        }
        Ok(())
    };
    match run(&mut note) {
        Err(()) => Truth::False,
        Ok(()) if unknown => Truth::Unknown,
        Ok(()) => Truth::True,
    }
}

/// Bounded oracle for a finite presentation, helped by certificate homomorphisms.
#[derive(Debug, Clone)]
pub struct PresentationOracle {
    pub presentation: Presentation,
    pub certs: Vec<CertificateHom>,
}

impl PresentationOracle {
    pub fn new(presentation: Presentation, certs: Vec<CertificateHom>) -> Self {
        PresentationOracle {
            presentation,
            certs,
        }
    }

    pub fn word(&self, term: &str) -> Word {
        refmon_core::parse_term(&self.presentation.gens, term).expect("term over the generators")
    }
}

impl MonoidOracle for PresentationOracle {
    type Elem = Word;

    fn name(&self) -> String {
        self.presentation.name.clone()
    }

    fn zero(&self) -> Word {
        Word::zero()
    }

    fn add(&self, a: &Word, b: &Word) -> Word {
        a.add(b)
    }

    fn equal(&self, a: &Word, b: &Word, bound: &SearchBound) -> Truth {
        let (a, b) = if b.degree() < a.degree() {
            (b, a)
        } else {
            (a, b)
        };
        let bound = lifted(bound, &[a, b]);
        decide_equal(&self.presentation, a, b, &bound, &self.certs)
            .expect("words over the presentation's generators")
            .truth()
    }

    fn leq(&self, a: &Word, b: &Word, bound: &SearchBound) -> Decision<Word, ()> {
        decide_leq(&self.presentation, a, b, &lifted(bound, &[a, b]))
            .expect("words over the presentation's generators")
            .map(|c| c.complement, |_| ())
    }

    fn elements(&self, max_degree: u64) -> Vec<Word> {
        words_up_to(self.presentation.gens.len(), max_degree)
    }

    fn degree(&self, e: &Word) -> u64 {
        e.degree()
    }

    fn show(&self, e: &Word) -> String {
        self.presentation.show(e)
    }

    fn key(&self, e: &Word) -> Option<String> {
        self.presentation
            .relations
            .is_empty()
            .then(|| self.presentation.show(e))
    }

    fn positive_state(&self) -> Option<CertificateHom> {
        self.certs.iter().find(|c| c.is_positive_state()).cloned()
    }

    fn stable_finiteness_cert(&self) -> Option<CertificateHom> {
        self.certs
            .iter()
            .find(|c| c.proves_stable_finiteness())
            .cloned()
    }

    fn cancellative_separation(&self, x: &Word, y: &Word) -> Option<String> {
        self.certs
            .iter()
            .find(|c| is_cancellative_target(c.target) && c.apply(x) != c.apply(y))
            .map(|c| c.name.clone())
    }

    fn find_refinement(
        &self,
        a: &Word,
        b: &Word,
        c: &Word,
        d: &Word,
        bound: &SearchBound,
    ) -> Option<Decision<RefinementMatrix<Word>, ()>> {
        let bound = lifted(bound, &[&a.add(b), &c.add(d)]);
        find_refinement(&self.presentation, a, b, c, d, &bound, &self.certs).ok()
    }

    fn lower_set_complete(&self, y: &Word, bound: &SearchBound) -> bool {
        y.degree() <= bound.max_degree && enumerate_class(&self.presentation, y, bound).exhausted
    }

    fn splittings(&self, x: &Word, bound: &SearchBound) -> Option<(Vec<(Word, Word)>, bool)> {
        let ex = ClassExplorer::run(&self.presentation, x, &lifted(bound, &[x]));
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for w in ex.words() {
            for a in w.sub_words() {
                let b = w.checked_sub(&a).expect("sub-word");
                if seen.insert((a.clone(), b.clone())) {
                    out.push((a, b));
                }
            }
        }
        Some((out, ex.exhausted()))
    }
}

/// Exact 𝓜, enumerating elements written at a fixed level `N`.
#[derive(Debug, Clone)]
pub struct MOracle {
    pub level: usize,
}

impl MOracle {
    pub fn new(level: usize) -> Self {
        MOracle { level }
    }

    fn certificate_level(&self, es: &[&MElem]) -> usize {
        es.iter().map(|e| e.level()).fold(self.level, usize::max)
    }
}

impl MonoidOracle for MOracle {
    type Elem = MElem;

    fn name(&self) -> String {
        format!("M(level {})", self.level)
    }

    fn zero(&self) -> MElem {
        MElem::zero()
    }

    fn add(&self, a: &MElem, b: &MElem) -> MElem {
        a.add(b)
    }

    fn equal(&self, a: &MElem, b: &MElem, _bound: &SearchBound) -> Truth {
        Truth::from_bool(a.equal(b))
    }

    fn leq(&self, a: &MElem, b: &MElem, _bound: &SearchBound) -> Decision<MElem, ()> {
        match a.leq(b) {
            Some(c) => Decision::Holds(c),
            None => Decision::Fails(()),
        }
    }

    fn elements(&self, max_degree: u64) -> Vec<MElem> {
        let n = self.level;
        let all = words_up_to(3 + n, max_degree)
            .into_iter()
            .map(|w| {
                let c = w.to_dense(3 + n);
                MElem::new(n, c[0], c[1], c[2], c[3..].to_vec()).expect("level-N coefficients")
            })
            .collect();
        dedup_by_key(all, |e| e.normalized().to_string())
    }

    fn decomposition_pool(&self, max_degree: u64) -> Vec<MElem> {
        let next = self.level + 1;
        let mut pool = self.elements(max_degree);
        pool.extend([
            MElem::x(next),
            MElem::y(next),
            MElem::z(next),
            MElem::a(next),
        ]);
        pool
    }

    fn degree(&self, e: &MElem) -> u64 {
        let l = e.level().max(self.level);
        e.raise(l).expect("raising up").degree()
    }

    fn show(&self, e: &MElem) -> String {
        e.to_string()
    }

    fn key(&self, e: &MElem) -> Option<String> {
        Some(e.normalized().to_string())
    }

    fn positive_state(&self) -> Option<CertificateHom> {
        Some(named_certificate(NamedCert::S, self.level))
    }

    fn stable_finiteness_cert(&self) -> Option<CertificateHom> {
        self.positive_state()
    }

    fn cancellative_separation(&self, x: &MElem, y: &MElem) -> Option<String> {
        let t = Truncation::new(refmon_wild::Family::M, self.certificate_level(&[x, y]));
        let (wx, wy) = (t.m_word(x).ok()?, t.m_word(y).ok()?);
        [NamedCert::S, NamedCert::F, NamedCert::H]
            .into_iter()
            .map(|c| named_certificate(c, t.level))
            .find(|c| c.apply(&wx) != c.apply(&wy))
            .map(|c| c.name)
    }

    fn find_refinement(
        &self,
        a: &MElem,
        b: &MElem,
        c: &MElem,
        d: &MElem,
        _bound: &SearchBound,
    ) -> Option<Decision<RefinementMatrix<MElem>, ()>> {
        m_refine(a, b, c, d).ok().map(Decision::Holds)
    }
}

/// Exact 𝓜̄, enumerating elements written at a fixed level `N`.
#[derive(Debug, Clone)]
pub struct MBarOracle {
    pub level: usize,
}

impl MBarOracle {
    pub fn new(level: usize) -> Self {
        MBarOracle { level }
    }
}

impl MonoidOracle for MBarOracle {
    type Elem = MBarElem;

    fn name(&self) -> String {
        format!("Mbar(level {})", self.level)
    }

    fn zero(&self) -> MBarElem {
        MBarElem::zero()
    }

    fn add(&self, a: &MBarElem, b: &MBarElem) -> MBarElem {
        a.add(b)
    }

    fn equal(&self, a: &MBarElem, b: &MBarElem, _bound: &SearchBound) -> Truth {
        Truth::from_bool(a.equal(b))
    }

    fn leq(&self, a: &MBarElem, b: &MBarElem, _bound: &SearchBound) -> Decision<MBarElem, ()> {
        match a.leq(b) {
            Some(c) => Decision::Holds(c),
            None => Decision::Fails(()),
        }
    }

    fn elements(&self, max_degree: u64) -> Vec<MBarElem> {
        let all = words_up_to(3, max_degree)
            .into_iter()
            .map(|w| {
                let c = w.to_dense(3);
                MBarElem::new(self.level, c[1], c[2], c[0])
            })
            .collect();
        dedup_by_key(all, |e| e.normalized().to_string())
    }

    fn decomposition_pool(&self, max_degree: u64) -> Vec<MBarElem> {
        let mut pool = self.elements(max_degree);
        pool.push(MBarElem::xbar(self.level + 1));
        pool
    }

    fn degree(&self, e: &MBarElem) -> u64 {
        let l = e.level().max(self.level);
        e.raise(l).expect("raising up").degree()
    }

    fn show(&self, e: &MBarElem) -> String {
        e.to_string()
    }

    fn key(&self, e: &MBarElem) -> Option<String> {
        Some(e.normalized().to_string())
    }

    fn stable_finiteness_cert(&self) -> Option<CertificateHom> {
        Some(named_certificate(NamedCert::T, self.level))
    }

    fn cancellative_separation(&self, x: &MBarElem, y: &MBarElem) -> Option<String> {
        let level = self.level.max(x.level()).max(y.level());
        let t = Truncation::new(refmon_wild::Family::MBar, level);
        let (wx, wy) = (t.mbar_word(x).ok()?, t.mbar_word(y).ok()?);
        [NamedCert::T, NamedCert::FBar]
            .into_iter()
            .map(|c| named_certificate(c, level))
            .find(|c| c.apply(&wx) != c.apply(&wy))
            .map(|c| c.name)
    }

    fn find_refinement(
        &self,
        a: &MBarElem,
        b: &MBarElem,
        c: &MBarElem,
        d: &MBarElem,
        _bound: &SearchBound,
    ) -> Option<Decision<RefinementMatrix<MBarElem>, ()>> {
        mbar_refine(a, b, c, d).ok().map(Decision::Holds)
    }
}

/// Exact primitive monoid through canonical forms.
#[derive(Debug, Clone)]
pub struct PrimOracle {
    pub poset: PrimePoset,
}

impl PrimOracle {
    pub fn new(poset: PrimePoset) -> Self {
        PrimOracle { poset }
    }
}

impl MonoidOracle for PrimOracle {
    type Elem = PrimElem;

    fn name(&self) -> String {
        self.poset.name.clone()
    }

    fn zero(&self) -> PrimElem {
        self.poset.zero()
    }

    fn add(&self, a: &PrimElem, b: &PrimElem) -> PrimElem {
        self.poset.add(a, b).expect("elements of one poset")
    }

    fn equal(&self, a: &PrimElem, b: &PrimElem, _bound: &SearchBound) -> Truth {
        Truth::from_bool(self.poset.equal(a, b).expect("elements of one poset"))
    }

    fn leq(&self, a: &PrimElem, b: &PrimElem, _bound: &SearchBound) -> Decision<PrimElem, ()> {
        match self.poset.leq(a, b).expect("elements of one poset") {
            Some(c) => Decision::Holds(c),
            None => Decision::Fails(()),
        }
    }

    fn elements(&self, max_degree: u64) -> Vec<PrimElem> {
        self.poset.elements(max_degree)
    }

    fn degree(&self, e: &PrimElem) -> u64 {
        e.degree()
    }

    fn show(&self, e: &PrimElem) -> String {
        self.poset.show(e)
    }

    fn key(&self, e: &PrimElem) -> Option<String> {
        Some(format!("{:?}", e.coeffs()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use refmon_core::parse_presentation;

    #[test]
    fn oracles_pass_the_spot_check() {
        let b = SearchBound::DEFAULT.with_degree(4);
        assert_eq!(spot_check(&MOracle::new(1), 2, &b), Truth::True);
        assert_eq!(spot_check(&MBarOracle::new(1), 3, &b), Truth::True);
        let p = parse_presentation("monoid M0\ngenerators x0 y0 z0\nrelation x0 + y0 = x0 + z0")
            .unwrap();
        assert_eq!(
            spot_check(&PresentationOracle::new(p, vec![]), 2, &b),
            Truth::True
        );
    }

    #[test]
    fn level_n_elements_are_distinct() {
        let o = MOracle::new(1);
        let els = o.elements(2);
        for (i, a) in els.iter().enumerate() {
            for b in &els[i + 1..] {
                assert!(!a.equal(b), "{a} = {b}");
            }
        }
        // x1, y1, z1, a1 and the sums of two of them, with x1 + y1 = x1 + z1.
        assert_eq!(els.len(), 1 + 4 + 9);
    }

    #[test]
    fn only_zero_is_invertible_in_m() {
        let o = MOracle::new(1);
        let b = SearchBound::DEFAULT;
        for x in o.elements(3) {
            assert_eq!(invertible(&o, &x, &b), Truth::from_bool(x.is_zero()));
        }
    }

    #[test]
    fn cancellative_separation_uses_certificates() {
        let o = MOracle::new(1);
        assert_eq!(
            o.cancellative_separation(&MElem::x(1), &MElem::y(1))
                .as_deref(),
            Some("f")
        );
        assert!(o
            .cancellative_separation(&MElem::y(0), &MElem::z(0))
            .is_none());
    }
}
