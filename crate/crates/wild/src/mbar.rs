//! Exact arithmetic in 𝓜̄, generated by `x̄_n` (n ≥ 0), `ȳ0`, `z̄0` with
//! `x̄0 + ȳ0 = x̄0 + z̄0` and `x̄_n = x̄_{n+1} + ȳ0 = x̄_{n+1} + z̄0`.
//!
//! An element at level `n` is `i·ȳ0 + j·z̄0 + k·x̄_n`; two sums at one level are equal iff
//! `k = k' = 0, i = i', j = j'` or `k = k' > 0, i + j = i' + j'`.

use std::fmt;
use std::hash::{Hash, Hasher};

use serde::Serialize;

use crate::error::WildError;
use crate::m0::{refine_parts, M0Elem};
use refmon_core::RefinementMatrix;

#[derive(Debug, Clone, Copy, Serialize)]
pub struct MBarElem {
    level: usize,
    i: u64,
    j: u64,
    k: u64,
}

impl MBarElem {
    pub fn new(level: usize, i: u64, j: u64, k: u64) -> Self {
        MBarElem::raw(level, i, j, k).normalized()
    }

    pub fn raw(level: usize, i: u64, j: u64, k: u64) -> Self {
        MBarElem { level, i, j, k }
    }

    pub fn zero() -> Self {
        MBarElem::raw(0, 0, 0, 0)
    }

    pub fn xbar(n: usize) -> Self {
        MBarElem::raw(n, 0, 0, 1)
    }

    pub fn ybar() -> Self {
        MBarElem::raw(0, 1, 0, 0)
    }

    pub fn zbar() -> Self {
        MBarElem::raw(0, 0, 1, 0)
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn i(&self) -> u64 {
        self.i
    }

    pub fn j(&self) -> u64 {
        self.j
    }

    /// Coefficient of `x̄_level`; the same at every level.
    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn is_zero(&self) -> bool {
        self.i == 0 && self.j == 0 && self.k == 0
    }

    pub fn degree(&self) -> u64 {
        self.i + self.j + self.k
    }

    /// As an `M0` element with `x̄_level` in the role of `x`.
    pub fn m0_part(&self) -> M0Elem {
        M0Elem::new(self.k, self.i, self.j)
    }

    pub fn raise(&self, target: usize) -> Result<MBarElem, WildError> {
        if target < self.level {
            return Err(WildError::LevelBelow {
                level: self.level,
                target,
            });
        }
        Ok(self.raised_to(target))
    }

    fn raised_to(&self, target: usize) -> MBarElem {
        if target <= self.level {
            return *self;
        }
        let t = (target - self.level) as u64;
        MBarElem::raw(target, self.i + t * self.k, self.j, self.k)
    }

    /// Level 0 when `k = 0`; otherwise `z̄0` folded into `ȳ0` and the level lowered
    /// while `k·ȳ0` can be absorbed.
    pub fn normalized(&self) -> MBarElem {
        if self.k == 0 {
            return MBarElem::raw(0, self.i, self.j, 0);
        }
        let s = self.i + self.j;
        let drop = (s / self.k).min(self.level as u64);
        MBarElem::raw(self.level - drop as usize, s - drop * self.k, 0, self.k)
    }

    pub fn equal(&self, other: &MBarElem) -> bool {
        let l = self.level.max(other.level);
        self.raised_to(l)
            .m0_part()
            .equal(other.raised_to(l).m0_part())
    }

    pub fn add(&self, other: &MBarElem) -> MBarElem {
        let l = self.level.max(other.level);
        let (a, b) = (self.raised_to(l), other.raised_to(l));
        MBarElem::raw(l, a.i + b.i, a.j + b.j, a.k + b.k).normalized()
    }

    pub fn scale(&self, n: u64) -> MBarElem {
        MBarElem::raw(self.level, self.i * n, self.j * n, self.k * n).normalized()
    }

    /// `self ≤ other`, with a complement.
    ///
    /// At a common level: if `k' = 0` compare `(i, j)` coordinatewise; otherwise
    /// `k ≤ k'`, and when `k = k'` also `i + j ≤ i' + j'`. With `k < k'` every further
    /// level adds `k' - k` to the gap in `ȳ0`-coefficients, so some level always works.
    pub fn leq(&self, other: &MBarElem) -> Option<MBarElem> {
        let l = self.level.max(other.level);
        let (a, b) = (self.raised_to(l), other.raised_to(l));
        if b.k == 0 {
            return (a.k == 0 && a.i <= b.i && a.j <= b.j)
                .then(|| MBarElem::raw(0, b.i - a.i, b.j - a.j, 0));
        }
        if a.k > b.k {
            return None;
        }
        let (sa, sb) = (a.i + a.j, b.i + b.j);
        if a.k == b.k {
            return (sa <= sb).then(|| MBarElem::raw(0, sb - sa, 0, 0));
        }
        let gap = b.k - a.k;
        let t = if sa <= sb { 0 } else { (sa - sb).div_ceil(gap) };
        let (a, b) = (a.raised_to(l + t as usize), b.raised_to(l + t as usize));
        let c = MBarElem::raw(l + t as usize, (b.i + b.j) - (a.i + a.j), 0, gap);
        Some(c.normalized())
    }

    pub fn summands(&self) -> Vec<(u64, String)> {
        let mut out = Vec::new();
        if self.k > 0 {
            out.push((self.k, format!("xbar{}", self.level)));
        }
        if self.i > 0 {
            out.push((self.i, "ybar0".to_string()));
        }
        if self.j > 0 {
            out.push((self.j, "zbar0".to_string()));
        }
        out
    }
}

impl PartialEq for MBarElem {
    fn eq(&self, other: &Self) -> bool {
        self.equal(other)
    }
}

impl Eq for MBarElem {}

impl Hash for MBarElem {
    fn hash<H: Hasher>(&self, state: &mut H) {
        let n = self.normalized();
        (n.level, n.i, n.j, n.k).hash(state);
    }
}

impl fmt::Display for MBarElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::term::render(&self.summands()))
    }
}

/// A refinement of `b1 + b2 = c1 + c2` in 𝓜̄, computed directly (not through 𝓜).
pub fn mbar_refine(
    b1: &MBarElem,
    b2: &MBarElem,
    c1: &MBarElem,
    c2: &MBarElem,
) -> Result<RefinementMatrix<MBarElem>, WildError> {
    if !b1.add(b2).equal(&c1.add(c2)) {
        return Err(WildError::Precondition(format!(
            "{b1} + {b2} != {c1} + {c2}"
        )));
    }
    let n = [b1, b2, c1, c2].iter().map(|e| e.level).max().unwrap_or(0);
    let part = |e: &MBarElem| e.raised_to(n).m0_part();
    let (t, parts) = refine_parts([part(b1), part(b2)], [part(c1), part(c2)]);
    let top = n + t as usize;
    let entry = |r: usize, c: usize| {
        let p = parts[r][c];
        MBarElem::raw(top, p.i, p.j, p.m).normalized()
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
