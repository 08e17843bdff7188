//! `M0 = ⟨x, y, z | x + y = x + z⟩` and the refinement step shared by 𝓜 and 𝓜̄.
//!
//! Both monoids contain a copy of `M0` at every level (spanned by `x_n, y_n, z_n`, resp.
//! `x̄_n, ȳ0, z̄0`), and raising one level sends `m·x + i·y + j·z` to `m·x + (i+m)·y + j·z`
//! plus extra terms that only 𝓜 records.

use std::fmt;

use serde::Serialize;

/// `m·x + i·y + j·z`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize)]
pub struct M0Elem {
    pub m: u64,
    pub i: u64,
    pub j: u64,
}

impl M0Elem {
    pub const ZERO: M0Elem = M0Elem { m: 0, i: 0, j: 0 };

    pub fn new(m: u64, i: u64, j: u64) -> Self {
        M0Elem { m, i, j }
    }

    /// Canonical form: `z` folds into `y` once some `x` is present.
    pub fn normalized(self) -> Self {
        if self.m > 0 {
            M0Elem::new(self.m, self.i + self.j, 0)
        } else {
            self
        }
    }

    pub fn s(self) -> u64 {
        self.i + self.j
    }

    pub fn add(self, o: M0Elem) -> M0Elem {
        M0Elem::new(self.m + o.m, self.i + o.i, self.j + o.j).normalized()
    }

    pub fn equal(self, o: M0Elem) -> bool {
        if self.m != o.m {
            return false;
        }
        if self.m == 0 {
            self.i == o.i && self.j == o.j
        } else {
            self.s() == o.s()
        }
    }

    /// Order in `M0` itself, with a complement witness.
    pub fn leq(self, o: M0Elem) -> Option<M0Elem> {
        if o.m == 0 {
            (self.m == 0 && self.i <= o.i && self.j <= o.j)
                .then(|| M0Elem::new(0, o.i - self.i, o.j - self.j))
        } else {
            (self.m <= o.m && self.s() <= o.s())
                .then(|| M0Elem::new(o.m - self.m, o.s() - self.s(), 0))
        }
    }

    /// The `M0` part after raising `t` levels.
    pub fn raised(self, t: u64) -> M0Elem {
        M0Elem::new(self.m, self.i + t * self.m, self.j)
    }
}

impl fmt::Display for M0Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (k, g) in [(self.m, "x0"), (self.i, "y0"), (self.j, "z0")] {
            match k {
                0 => {}
                1 => parts.push(g.to_string()),
                k => parts.push(format!("{k}*{g}")),
            }
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Refinement in a free monoid, coordinate by coordinate: needs `b1 + b2 = c1 + c2` exactly.
pub fn free_refine(b1: &[u64], b2: &[u64], c1: &[u64], c2: &[u64]) -> [[Vec<u64>; 2]; 2] {
    let n = b1.len();
    let mut z = [[vec![0; n], vec![0; n]], [vec![0; n], vec![0; n]]];
    for t in 0..n {
        debug_assert_eq!(b1[t] + b2[t], c1[t] + c2[t]);
        let z11 = b1[t].min(c1[t]);
        z[0][0][t] = z11;
        z[0][1][t] = b1[t] - z11;
        z[1][0][t] = c1[t] - z11;
        z[1][1][t] = b2[t] - (c1[t] - z11);
    }
    z
}

fn ceil_div(a: u64, b: u64) -> u64 {
    a.div_ceil(b)
}

/// Refines `b1 + b2 = c1 + c2` between `M0` parts at a common level.
///
/// Returns the number of levels `t` everything must be raised by, and a matrix of
/// `M0` parts valid at that raised level (`[row b_r][column c_c]`). The caller must raise
/// its full elements by `t` and refine whatever lives outside the `M0` parts separately.
/// A pure `M0` equation (no raising available) is refinable only when `t == 0`.
pub fn refine_parts(b: [M0Elem; 2], c: [M0Elem; 2]) -> (u64, [[M0Elem; 2]; 2]) {
    let b = b.map(M0Elem::normalized);
    let c = c.map(M0Elem::normalized);
    let all = [b[0], b[1], c[0], c[1]];

    let free2 = |coords: fn(M0Elem) -> [u64; 2], back: fn([u64; 2]) -> M0Elem| {
        let v = |e: M0Elem| coords(e).to_vec();
        let z = free_refine(&v(b[0]), &v(b[1]), &v(c[0]), &v(c[1]));
        z.map(|row| row.map(|e| back([e[0], e[1]])))
    };

    if all.iter().all(|e| e.m == 0) {
        return (0, free2(|e| [e.i, e.j], |v| M0Elem::new(0, v[0], v[1])));
    }
    if all.iter().all(|e| e.j == 0) {
        return (0, free2(|e| [e.m, e.i], |v| M0Elem::new(v[0], v[1], 0)));
    }

    // Rows (r1, r2) and columns (k1, k2) so that r1, k1 carry x and r2 = β21·y + β22·z
    // with β22 > 0. Lower indices first; transpose only when forced.
    let bx = if b[0].m > 0 { 0 } else { 1 };
    let cx = if c[0].m > 0 { 0 } else { 1 };
    let transpose = !(b[1 - bx].m == 0 && b[1 - bx].j > 0);
    let (rows, cols, ri, ci) = if transpose {
        (c, b, [cx, 1 - cx], [bx, 1 - bx])
    } else {
        (b, c, [bx, 1 - bx], [cx, 1 - cx])
    };
    let (r1, r2, k1, k2) = (rows[ri[0]], rows[ri[1]], cols[ci[0]], cols[ci[1]]);
    debug_assert!(r1.m > 0 && k1.m > 0 && r2.m == 0 && r2.j > 0);

    let (t, m) = if k2.m == 0 {
        let need = k2.i + k2.j;
        let t = if r1.i >= need {
            0
        } else {
            ceil_div(need - r1.i, r1.m)
        };
        let (r1, k2) = (r1.raised(t), k2.raised(t));
        (
            t,
            [[M0Elem::new(r1.m, r1.i - need, 0), k2], [r2, M0Elem::ZERO]],
        )
    } else {
        // r1.m = k1.m + k2.m, so each level widens r1.i - k2.i by k1.m.
        let t = if r1.i >= k2.i {
            0
        } else {
            ceil_div(k2.i - r1.i, k1.m)
        };
        let (r1, k1, k2) = (r1.raised(t), k1.raised(t), k2.raised(t));
        (
            t,
            [[M0Elem::new(k1.m, r1.i - k2.i, 0), k2], [r2, M0Elem::ZERO]],
        )
    };

    let mut out = [[M0Elem::ZERO; 2]; 2];
    for (a, &r) in ri.iter().enumerate() {
        for (bcol, &k) in ci.iter().enumerate() {
            let e = m[a][bcol];
            if transpose {
                out[k][r] = e;
            } else {
                out[r][k] = e;
            }
        }
    }
    (t, out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn law_and_order() {
        let x = M0Elem::new(1, 0, 0);
        let y = M0Elem::new(0, 1, 0);
        let z = M0Elem::new(0, 0, 1);
        assert!(x.add(y).equal(x.add(z)));
        assert!(!y.equal(z));
        assert!(x.leq(x.add(y)).is_some());
        assert!(x.add(y).leq(y).is_none());
    }

    #[test]
    fn x_plus_y_needs_one_raise() {
        let x = M0Elem::new(1, 0, 0);
        let y = M0Elem::new(0, 1, 0);
        let z = M0Elem::new(0, 0, 1);
        let (t, m) = refine_parts([x, y], [x, z]);
        assert_eq!(t, 1);
        // Raised labels: x → (1,1,0), y, z unchanged.
        let rows = [x.raised(1), y];
        let cols = [x.raised(1), z];
        for r in 0..2 {
            assert!(m[r][0].add(m[r][1]).equal(rows[r]));
        }
        for c in 0..2 {
            assert!(m[0][c].add(m[1][c]).equal(cols[c]));
        }
    }

    #[test]
    fn exhaustive_small_equations() {
        let mut elems = Vec::new();
        for m in 0..3 {
            for i in 0..3 {
                for j in 0..3 {
                    elems.push(M0Elem::new(m, i, j));
                }
            }
        }
        let mut checked = 0;
        for &b1 in &elems {
            for &b2 in &elems {
                for &c1 in &elems {
                    for &c2 in &elems {
                        if !b1.add(b2).equal(c1.add(c2)) {
                            continue;
                        }
                        checked += 1;
                        let (t, m) = refine_parts([b1, b2], [c1, c2]);
                        let rows = [b1.raised(t), b2.raised(t)];
                        let cols = [c1.raised(t), c2.raised(t)];
                        for r in 0..2 {
                            assert!(m[r][0].add(m[r][1]).equal(rows[r]), "{b1} {b2} {c1} {c2}");
                            assert!(m[0][r].add(m[1][r]).equal(cols[r]), "{b1} {b2} {c1} {c2}");
                        }
                    }
                }
            }
        }
        assert!(checked > 1000);
    }
}
