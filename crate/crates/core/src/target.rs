//! Target monoids for certificate homomorphisms, with exact arithmetic.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

/// Basis vectors of the free abelian groups used as targets: β, γ and α₁, α₂, ….
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Basis {
    Beta,
    Gamma,
    Alpha(u32),
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Basis::Beta => write!(f, "beta"),
            Basis::Gamma => write!(f, "gamma"),
            Basis::Alpha(l) => write!(f, "alpha{l}"),
        }
    }
}

/// Finitely supported integer vector over [`Basis`]; zero coordinates are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct FreeVec(BTreeMap<Basis, BigInt>);

impl FreeVec {
    pub fn zero() -> Self {
        FreeVec(BTreeMap::new())
    }

    pub fn basis(b: Basis) -> Self {
        FreeVec::term(b, 1)
    }

    pub fn term(b: Basis, k: i64) -> Self {
        let mut v = FreeVec::zero();
        v.add_term(b, &BigInt::from(k));
        v
    }

    pub fn from_terms<I: IntoIterator<Item = (Basis, i64)>>(terms: I) -> Self {
        let mut v = FreeVec::zero();
        for (b, k) in terms {
            v.add_term(b, &BigInt::from(k));
        }
        v
    }

    pub fn add_term(&mut self, b: Basis, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        let entry = self.0.entry(b).or_insert_with(BigInt::zero);
        *entry += k;
        if entry.is_zero() {
            self.0.remove(&b);
        }
    }

    pub fn add(&self, other: &FreeVec) -> FreeVec {
        let mut out = self.clone();
        for (b, k) in &other.0 {
            out.add_term(*b, k);
        }
        out
    }

    pub fn scale(&self, k: &BigInt) -> FreeVec {
        if k.is_zero() {
            return FreeVec::zero();
        }
        FreeVec(self.0.iter().map(|(b, c)| (*b, c * k)).collect())
    }

    pub fn coeff(&self, b: Basis) -> BigInt {
        self.0.get(&b).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for FreeVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.0.iter().map(|(b, k)| format!("{k}*{b}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// The monoid a certificate maps into.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum TargetMonoid {
    /// ℚ⁺ with exact rationals.
    NonnegRational,
    /// ℤ⁺.
    NonnegInteger,
    /// Free abelian group on {β, γ, α_l} with an absorbing ∞ adjoined.
    FreeAbelianWithInfinity,
    /// Free abelian group on {β, γ, α_l}.
    FreeAbelian,
    /// Pairs (p, q) ∈ ℤ² with q > 0, or q = 0 and p ≥ 0.
    BMonoid,
    /// (ℤ⁺)² with an absorbing ∞ adjoined.
    PlanePlusInfinity,
}

impl TargetMonoid {
    pub fn zero(self) -> TargetValue {
        match self {
            TargetMonoid::NonnegRational => TargetValue::Rational(BigRational::zero()),
            TargetMonoid::NonnegInteger => TargetValue::Integer(BigInt::zero()),
            TargetMonoid::FreeAbelianWithInfinity | TargetMonoid::FreeAbelian => {
                TargetValue::Vector(FreeVec::zero())
            }
            TargetMonoid::BMonoid | TargetMonoid::PlanePlusInfinity => {
                TargetValue::Pair(BigInt::zero(), BigInt::zero())
            }
        }
    }

    /// Whether ∞ is an element of this target.
    pub fn has_infinity(self) -> bool {
        matches!(
            self,
            TargetMonoid::FreeAbelianWithInfinity | TargetMonoid::PlanePlusInfinity
        )
    }

    /// Targets that are cancellative and conical. A homomorphism into one of these that
    /// sends no generator to zero forces `x + y = x ⇒ y = 0` in the source.
    pub fn is_cancellative_conical(self) -> bool {
        matches!(
            self,
            TargetMonoid::NonnegRational | TargetMonoid::NonnegInteger | TargetMonoid::BMonoid
        )
    }

    /// Checks that `v` is an element of this monoid.
    pub fn validate(self, v: &TargetValue) -> Result<(), String> {
        match (self, v) {
            (TargetMonoid::NonnegRational, TargetValue::Rational(q)) if !q.is_negative() => Ok(()),
            (TargetMonoid::NonnegInteger, TargetValue::Integer(n)) if !n.is_negative() => Ok(()),
            (TargetMonoid::FreeAbelianWithInfinity, TargetValue::Vector(_))
            | (TargetMonoid::FreeAbelianWithInfinity, TargetValue::Infinity)
            | (TargetMonoid::FreeAbelian, TargetValue::Vector(_))
            | (TargetMonoid::PlanePlusInfinity, TargetValue::Infinity) => Ok(()),
            (TargetMonoid::BMonoid, TargetValue::Pair(p, q)) => {
                if q.is_positive() || (q.is_zero() && !p.is_negative()) {
                    Ok(())
                } else {
                    Err(format!("({p}, {q}) is not in B"))
                }
            }
            (TargetMonoid::PlanePlusInfinity, TargetValue::Pair(p, q)) => {
                if p.is_negative() || q.is_negative() {
                    Err(format!("({p}, {q}) has a negative coordinate"))
                } else {
                    Ok(())
                }
            }
            (t, v) => Err(format!("{v} is not an element of {t:?}")),
        }
    }
}

/// An element of some [`TargetMonoid`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TargetValue {
    Rational(BigRational),
    Integer(BigInt),
    Vector(FreeVec),
    Pair(BigInt, BigInt),
    Infinity,
}

impl TargetValue {
    pub fn int(n: i64) -> Self {
        TargetValue::Integer(BigInt::from(n))
    }

    pub fn pair(p: i64, q: i64) -> Self {
        TargetValue::Pair(BigInt::from(p), BigInt::from(q))
    }

    /// 2⁻ⁿ as an exact rational.
    pub fn dyadic(n: u32) -> Self {
        TargetValue::Rational(BigRational::new(
            BigInt::from(1),
            BigInt::from(1) << (n as usize),
        ))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            TargetValue::Rational(q) => q.is_zero(),
            TargetValue::Integer(n) => n.is_zero(),
            TargetValue::Vector(v) => v.is_zero(),
            TargetValue::Pair(p, q) => p.is_zero() && q.is_zero(),
            TargetValue::Infinity => false,
        }
    }

    /// Sum in the common target; ∞ absorbs. Panics on mismatched variants.
    pub fn add(&self, other: &TargetValue) -> TargetValue {
        use TargetValue::*;
        match (self, other) {
            (Infinity, _) | (_, Infinity) => Infinity,
            (Rational(a), Rational(b)) => Rational(a + b),
            (Integer(a), Integer(b)) => Integer(a + b),
            (Vector(a), Vector(b)) => Vector(a.add(b)),
            (Pair(a, b), Pair(c, d)) => Pair(a + c, b + d),
            (a, b) => panic!("adding values from different targets: {a} and {b}"),
        }
    }

    /// `k · self` for `k ≥ 1`; use [`TargetMonoid::zero`] for the empty multiple.
    pub fn scale(&self, k: u64) -> TargetValue {
        use TargetValue::*;
        assert!(k >= 1, "scale by zero needs the target's zero");
        let kb = BigInt::from(k);
        match self {
            Infinity => Infinity,
            Rational(a) => Rational(a * BigRational::from_integer(kb)),
            Integer(a) => Integer(a * kb),
            Vector(v) => Vector(v.scale(&kb)),
            Pair(a, b) => Pair(a * &kb, b * &kb),
        }
    }
}

impl fmt::Display for TargetValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TargetValue::Rational(q) => write!(f, "{q}"),
            TargetValue::Integer(n) => write!(f, "{n}"),
            TargetValue::Vector(v) => write!(f, "{v}"),
            TargetValue::Pair(p, q) => write!(f, "({p}, {q})"),
            TargetValue::Infinity => write!(f, "inf"),
        }
    }
}

impl Serialize for TargetValue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}
