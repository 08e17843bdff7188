//! Exact arithmetic in 𝓜, generated by `x_n, y_n, z_n` (n ≥ 0) and `a_n` (n ≥ 1) with
//!
//! ```text
//! x0 + y0 = x0 + z0,   y_n = y_{n+1} + a_{n+1},   z_n = z_{n+1} + a_{n+1},
//! x_n = x_{n+1} + y_{n+1} = x_{n+1} + z_{n+1}.
//! ```
//!
//! An element is stored at some level `n` as `m·x_n + i·y_n + j·z_n + Σ k_l·a_l`.
//! At a fixed level two such sums are equal iff `m = m' = 0, i = i', j = j', k = k'`
//! or `m = m' > 0, i + j = i' + j', k = k'`; across levels both sides are raised first.

use std::fmt;
use std::hash::{Hash, Hasher};

use serde::Serialize;

use crate::error::WildError;
use crate::m0::{free_refine, refine_parts, M0Elem};
use refmon_core::RefinementMatrix;

#[derive(Debug, Clone, Serialize)]
pub struct MElem {
    level: usize,
    m: u64,
    i: u64,
    j: u64,
    k: Vec<u64>,
}

impl MElem {
    /// Normalized element with the given level-`level` coefficients.
    pub fn new(level: usize, m: u64, i: u64, j: u64, k: Vec<u64>) -> Result<Self, WildError> {
        Ok(MElem::raw(level, m, i, j, k)?.normalized())
    }

    /// Representation exactly as given, without normalizing.
    pub fn raw(level: usize, m: u64, i: u64, j: u64, k: Vec<u64>) -> Result<Self, WildError> {
        if k.len() != level {
            return Err(WildError::Shape(format!(
                "level {level} needs {level} a-coefficients, got {}",
                k.len()
            )));
        }
        Ok(MElem { level, m, i, j, k })
    }

    pub fn zero() -> Self {
        MElem::raw0(0, 0, 0, 0, Vec::new())
    }

    fn raw0(level: usize, m: u64, i: u64, j: u64, k: Vec<u64>) -> Self {
        MElem { level, m, i, j, k }
    }

    pub fn x(n: usize) -> Self {
        MElem::raw0(n, 1, 0, 0, vec![0; n])
    }

    pub fn y(n: usize) -> Self {
        MElem::raw0(n, 0, 1, 0, vec![0; n])
    }

    pub fn z(n: usize) -> Self {
        MElem::raw0(n, 0, 0, 1, vec![0; n])
    }

    /// `a_n` for `n ≥ 1`.
    pub fn a(n: usize) -> Self {
        assert!(n >= 1, "a_n starts at n = 1");
        let mut k = vec![0; n];
        k[n - 1] = 1;
        MElem::raw0(n, 0, 0, 0, k).normalized()
    }

    /// The order unit `u = x0 + y0`.
    pub fn u() -> Self {
        MElem::raw0(0, 1, 1, 0, Vec::new())
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn i(&self) -> u64 {
        self.i
    }

    pub fn j(&self) -> u64 {
        self.j
    }

    pub fn k(&self) -> &[u64] {
        &self.k
    }

    pub fn m0_part(&self) -> M0Elem {
        M0Elem::new(self.m, self.i, self.j)
    }

    pub fn is_zero(&self) -> bool {
        self.m == 0 && self.i == 0 && self.j == 0 && self.k.iter().all(|&c| c == 0)
    }

    /// Sum of coefficients in the stored representation.
    pub fn degree(&self) -> u64 {
        self.m + self.i + self.j + self.k.iter().sum::<u64>()
    }

    fn raise_one(&self) -> MElem {
        let mut k = self.k.clone();
        k.push(self.i + self.j);
        MElem::raw0(self.level + 1, self.m, self.i + self.m, self.j, k)
    }

    /// Same element represented at `target`, using `x_n = x_{n+1} + y_{n+1}`,
    /// `y_n = y_{n+1} + a_{n+1}` and `z_n = z_{n+1} + a_{n+1}`.
    pub fn raise(&self, target: usize) -> Result<MElem, WildError> {
        if target < self.level {
            return Err(WildError::LevelBelow {
                level: self.level,
                target,
            });
        }
        Ok(self.raised_to(target))
    }

    fn raised_to(&self, target: usize) -> MElem {
        let mut e = self.clone();
        while e.level < target {
            e = e.raise_one();
        }
        e
    }

    /// One step down, when this representation is the raise of a lower one.
    fn lower_one(&self) -> Option<MElem> {
        let top = *self.k.last()?;
        let s = self.i + self.j;
        let rest = self.k[..self.level - 1].to_vec();
        if self.m == 0 {
            (top == s).then(|| MElem::raw0(self.level - 1, 0, self.i, self.j, rest))
        } else {
            (s >= self.m && top == s - self.m)
                .then(|| MElem::raw0(self.level - 1, self.m, s - self.m, 0, rest))
        }
    }

    /// Least-level representation, with `z` folded into `y` when `m > 0`.
    pub fn normalized(&self) -> MElem {
        let mut e = self.clone();
        if e.m > 0 {
            e.i += e.j;
            e.j = 0;
        }
        while let Some(lower) = e.lower_one() {
            e = lower;
        }
        e
    }

    pub fn is_normalized(&self) -> bool {
        let n = self.normalized();
        n.level == self.level && n.i == self.i && n.j == self.j && n.k == self.k
    }

    /// Raise-and-compare equality.
    pub fn equal(&self, other: &MElem) -> bool {
        let l = self.level.max(other.level);
        let (a, b) = (self.raised_to(l), other.raised_to(l));
        a.k == b.k && a.m0_part().equal(b.m0_part())
    }

    pub fn add(&self, other: &MElem) -> MElem {
        let l = self.level.max(other.level);
        let (a, b) = (self.raised_to(l), other.raised_to(l));
        let k = a.k.iter().zip(&b.k).map(|(p, q)| p + q).collect();
        MElem::raw0(l, a.m + b.m, a.i + b.i, a.j + b.j, k).normalized()
    }

    pub fn scale(&self, n: u64) -> MElem {
        let k = self.k.iter().map(|c| c * n).collect();
        MElem::raw0(self.level, self.m * n, self.i * n, self.j * n, k).normalized()
    }

    /// `self ≤ other` in the algebraic order, with a complement `c` (`self + c = other`).
    ///
    /// At a common level the criterion is `k ≤ k'` coordinatewise together with the `M0`
    /// order on `(m, i, j)`. Raising further never helps: the new `a_{n+1}`-coefficients
    /// are `i + j` and `i' + j'`, which `M0` already compares.
    pub fn leq(&self, other: &MElem) -> Option<MElem> {
        let l = self.level.max(other.level);
        let (a, b) = (self.raised_to(l), other.raised_to(l));
        if a.k.iter().zip(&b.k).any(|(p, q)| p > q) {
            return None;
        }
        let c0 = a.m0_part().leq(b.m0_part())?;
        let k = a.k.iter().zip(&b.k).map(|(p, q)| q - p).collect();
        Some(MElem::raw0(l, c0.m, c0.i, c0.j, k).normalized())
    }

    /// Raises every level-wise coefficient vector to `level` and returns `(m, i, j, k)`.
    pub fn coefficients_at(&self, level: usize) -> Result<(u64, u64, u64, Vec<u64>), WildError> {
        let e = self.raise(level)?;
        Ok((e.m, e.i, e.j, e.k))
    }

    /// Each summand with its coefficient, e.g. `[(1, "x2"), (3, "y2"), (1, "a1")]`.
    pub fn summands(&self) -> Vec<(u64, String)> {
        let n = self.level;
        let mut out = Vec::new();
        for (c, g) in [(self.m, "x"), (self.i, "y"), (self.j, "z")] {
            if c > 0 {
                out.push((c, format!("{g}{n}")));
            }
        }
        for (l, &c) in self.k.iter().enumerate() {
            if c > 0 {
                out.push((c, format!("a{}", l + 1)));
            }
        }
        out
    }
}

impl PartialEq for MElem {
    fn eq(&self, other: &Self) -> bool {
        self.equal(other)
    }
}

impl Eq for MElem {}

impl Hash for MElem {
    fn hash<H: Hasher>(&self, state: &mut H) {
        let n = self.normalized();
        (n.level, n.m, n.i, n.j, n.k).hash(state);
    }
}

impl fmt::Display for MElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::term::render(&self.summands()))
    }
}

/// A refinement of `b1 + b2 = c1 + c2` in 𝓜; never fails on a valid equation.
///
/// The `a`-parts are refined freely; the `x, y, z`-parts go through [`refine_parts`] after
/// raising every label to the level that makes the `y`-coefficient of the leading row large
/// enough. All four sums are re-checked with [`MElem::equal`].
pub fn m_refine(
    b1: &MElem,
    b2: &MElem,
    c1: &MElem,
    c2: &MElem,
) -> Result<RefinementMatrix<MElem>, WildError> {
    if !b1.add(b2).equal(&c1.add(c2)) {
        return Err(WildError::Precondition(format!(
            "{b1} + {b2} != {c1} + {c2}"
        )));
    }
    let n = [b1, b2, c1, c2].iter().map(|e| e.level).max().unwrap_or(0);
    let fold = |e: &MElem| {
        let mut r = e.raised_to(n);
        if r.m > 0 {
            r.i += r.j;
            r.j = 0;
        }
        r
    };
    let (b1n, b2n, c1n, c2n) = (fold(b1), fold(b2), fold(c1), fold(c2));
    let (t, parts) = refine_parts(
        [b1n.m0_part(), b2n.m0_part()],
        [c1n.m0_part(), c2n.m0_part()],
    );
    let top = n + t as usize;
    let (b1r, b2r, c1r, c2r) = (
        b1n.raised_to(top),
        b2n.raised_to(top),
        c1n.raised_to(top),
        c2n.raised_to(top),
    );
    let ak = free_refine(&b1r.k, &b2r.k, &c1r.k, &c2r.k);
    let entry = |r: usize, c: usize| {
        let p = parts[r][c];
        MElem::raw0(top, p.m, p.i, p.j, ak[r][c].clone()).normalized()
    };
    let out = RefinementMatrix::new(entry(0, 0), entry(0, 1), entry(1, 0), entry(1, 1));
    let sums = out.sums(|x, y| x.add(y));
    for (s, label) in sums.iter().zip([b1, b2, c1, c2]) {
        if !s.equal(label) {
            return Err(WildError::Internal(format!(
                "refinement of {b1} + {b2} = {c1} + {c2} has a bad sum {s} for {label}"
            )));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(level: usize, m: u64, i: u64, j: u64, k: &[u64]) -> MElem {
        MElem::new(level, m, i, j, k.to_vec()).unwrap()
    }

    #[test]
    fn raise_examples() {
        let y2 = MElem::y(0).raise(2).unwrap();
        assert_eq!((y2.m, y2.i, y2.j, y2.k.clone()), (0, 1, 0, vec![1, 1]));
        let x2 = MElem::x(0).raise(2).unwrap();
        assert_eq!((x2.m, x2.i, x2.j, x2.k.clone()), (1, 2, 0, vec![0, 1]));
        let e = el(1, 1, 2, 0, &[3]);
        assert_eq!(e.raise(1).unwrap().k, e.k);
        assert!(matches!(
            MElem::x(3).raise(1),
            Err(WildError::LevelBelow {
                level: 3,
                target: 1
            })
        ));
    }

    #[test]
    fn raise_matches_closed_form() {
        // From level n to level k: x_n = x_k + (k-n) y_k + Σ (l-n-1) a_l and
        // y_n = y_k + Σ a_l, the sums over l = n+1..k.
        for n in 0..4 {
            for k in n..8 {
                let x = MElem::x(n).raise(k).unwrap();
                assert_eq!(x.i, (k - n) as u64);
                for l in n + 1..=k {
                    assert_eq!(x.k[l - 1], (l - n - 1) as u64);
                }
                let y = MElem::y(n).raise(k).unwrap();
                assert!(y.k[n..].iter().all(|&c| c == 1));
            }
        }
    }

    #[test]
    fn equality_examples() {
        let x0 = MElem::x(0);
        assert!(x0.add(&MElem::y(0)).equal(&x0.add(&MElem::z(0))));
        assert!(!MElem::y(0).equal(&MElem::z(0)));
        assert!(MElem::u().equal(&el(2, 1, 3, 0, &[1, 2])));
    }

    #[test]
    fn addition_examples() {
        let u = MElem::x(0).add(&MElem::y(0));
        assert!(u.equal(&MElem::u()));
        let raised = el(1, 1, 2, 0, &[1]);
        assert!(u.equal(&raised));
        assert_eq!(u.level(), 0);
        assert!(u.add(&MElem::zero()).equal(&u));
        let s = MElem::a(1).add(&MElem::a(2));
        assert_eq!((s.m, s.i, s.j, s.k.clone()), (0, 0, 0, vec![1, 1]));
    }

    #[test]
    fn normalization_is_least_level() {
        let e = MElem::u().raise(4).unwrap();
        assert_eq!(e.normalized().level(), 0);
        assert_eq!(MElem::a(3).level(), 3);
        assert_eq!(MElem::y(2).raise(5).unwrap().normalized().level(), 2);
    }

    #[test]
    fn order_examples() {
        let u = MElem::u();
        assert!(MElem::a(3).scale(3).leq(&u).is_some());
        assert!(MElem::a(3).scale(4).leq(&u).is_none());
        let e = el(2, 1, 1, 0, &[0, 2]);
        assert!(e.leq(&e).unwrap().is_zero());
        let b = MElem::x(3).add(&MElem::y(3));
        let c = MElem::a(5).leq(&b).unwrap();
        assert!(MElem::a(5).add(&c).equal(&b));
    }

    #[test]
    fn refinement_examples() {
        let (x0, y0, z0) = (MElem::x(0), MElem::y(0), MElem::z(0));
        let r = m_refine(&x0, &y0, &x0, &z0).unwrap();
        let e = &r.entries;
        assert!(e[0][0].equal(&MElem::x(1)));
        assert!(e[0][1].equal(&MElem::z(1)));
        assert!(e[1][0].equal(&MElem::y(1)));
        assert!(e[1][1].equal(&MElem::a(1)));

        let a = el(1, 0, 2, 1, &[3]);
        let b = el(2, 1, 0, 0, &[0, 1]);
        let r = m_refine(&a, &b, &a, &b).unwrap();
        let sums = r.sums(|p, q| p.add(q));
        assert!(sums[0].equal(&a) && sums[1].equal(&b));

        let r = m_refine(&MElem::u(), &MElem::zero(), &x0, &y0).unwrap();
        assert!(r.entries[1][0].is_zero() && r.entries[1][1].is_zero());

        assert!(matches!(
            m_refine(&y0, &MElem::zero(), &z0, &MElem::zero()),
            Err(WildError::Precondition(_))
        ));
    }
}
