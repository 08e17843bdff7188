//! The o-ideals `J1 ⊂ J2` of 𝓜, `J̄2` and `ℤ⁺z̄0` of 𝓜̄, their congruences, and the
//! quotient map `q: 𝓜 → 𝓜̄`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::WildError;
use crate::m::MElem;
use crate::mbar::MBarElem;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum OIdealId {
    /// `Σ ℤ⁺a_n`, the elements with `m = i = j = 0`.
    J1,
    /// The elements with `m = 0`.
    J2,
    /// `ℤ⁺ȳ0 + ℤ⁺z̄0`, the elements with `k = 0`.
    J2bar,
    /// `ℤ⁺z̄0`.
    Zz0bar,
}

impl OIdealId {
    pub const ALL: [OIdealId; 4] = [
        OIdealId::J1,
        OIdealId::J2,
        OIdealId::J2bar,
        OIdealId::Zz0bar,
    ];

    pub fn ambient(self) -> &'static str {
        match self {
            OIdealId::J1 | OIdealId::J2 => "M",
            OIdealId::J2bar | OIdealId::Zz0bar => "Mbar",
        }
    }
}

impl fmt::Display for OIdealId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            OIdealId::J1 => "J1",
            OIdealId::J2 => "J2",
            OIdealId::J2bar => "J2bar",
            OIdealId::Zz0bar => "Zz0bar",
        };
        f.write_str(s)
    }
}

impl FromStr for OIdealId {
    type Err = WildError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        OIdealId::ALL
            .into_iter()
            .find(|id| id.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| WildError::Parse {
                text: s.to_string(),
                reason: "expected one of J1, J2, J2bar, Zz0bar".to_string(),
            })
    }
}

/// An element of either wild monoid.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum WildElem {
    M(MElem),
    MBar(MBarElem),
}

impl WildElem {
    pub fn ambient(&self) -> &'static str {
        match self {
            WildElem::M(_) => "M",
            WildElem::MBar(_) => "Mbar",
        }
    }
}

impl fmt::Display for WildElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WildElem::M(e) => e.fmt(f),
            WildElem::MBar(e) => e.fmt(f),
        }
    }
}

fn check_ambient(e: &WildElem, ideal: OIdealId) -> Result<(), WildError> {
    if e.ambient() == ideal.ambient() {
        Ok(())
    } else {
        Err(WildError::AmbientMismatch {
            ideal: ideal.to_string(),
            expected: ideal.ambient(),
            found: e.ambient(),
        })
    }
}

pub fn ideal_member(e: &WildElem, ideal: OIdealId) -> Result<bool, WildError> {
    check_ambient(e, ideal)?;
    Ok(match (e, ideal) {
        (WildElem::M(e), OIdealId::J1) => e.m() == 0 && e.i() == 0 && e.j() == 0,
        (WildElem::M(e), OIdealId::J2) => e.m() == 0,
        (WildElem::MBar(e), OIdealId::J2bar) => e.k() == 0,
        (WildElem::MBar(e), OIdealId::Zz0bar) => {
            let n = e.normalized();
            n.k() == 0 && n.i() == 0
        }
        _ => unreachable!("ambient checked"),
    })
}

/// `e1 ≡_J e2`: some `a, b ∈ J` have `e1 + a = e2 + b`.
///
/// - `J1`: `q(e1) = q(e2)`.
/// - `J2`: equal `x`-coefficients `m`.
/// - `J̄2`: equal `x̄`-coefficients `k`.
/// - `ℤ⁺z̄0`: equal `k`, and equal `ȳ0`-coefficients when `k = 0`.
pub fn cong_mod_ideal(e1: &WildElem, e2: &WildElem, ideal: OIdealId) -> Result<bool, WildError> {
    check_ambient(e1, ideal)?;
    check_ambient(e2, ideal)?;
    Ok(match (e1, e2, ideal) {
        (WildElem::M(a), WildElem::M(b), OIdealId::J1) => q_map(a).equal(&q_map(b)),
        (WildElem::M(a), WildElem::M(b), OIdealId::J2) => a.m() == b.m(),
        (WildElem::MBar(a), WildElem::MBar(b), OIdealId::J2bar) => a.k() == b.k(),
        (WildElem::MBar(a), WildElem::MBar(b), OIdealId::Zz0bar) => {
            let (a, b) = (a.normalized(), b.normalized());
            a.k() == b.k() && (a.k() > 0 || a.i() == b.i())
        }
        _ => unreachable!("ambient checked"),
    })
}

/// `q(x_n) = x̄_n`, `q(y_n) = ȳ0`, `q(z_n) = z̄0`, `q(a_n) = 0`.
pub fn q_map(e: &MElem) -> MBarElem {
    MBarElem::new(e.level(), e.i(), e.j(), e.m())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::term::{parse_m_elem, parse_mbar_elem};

    fn m(t: &str) -> WildElem {
        WildElem::M(parse_m_elem(t).unwrap())
    }

    fn mb(t: &str) -> WildElem {
        WildElem::MBar(parse_mbar_elem(t).unwrap())
    }

    #[test]
    fn membership_examples() {
        assert!(ideal_member(&m("a1 + 5*a4"), OIdealId::J1).unwrap());
        assert!(!ideal_member(&m("y0"), OIdealId::J1).unwrap());
        assert!(ideal_member(&m("y0"), OIdealId::J2).unwrap());
        assert!(ideal_member(&mb("zbar0"), OIdealId::Zz0bar).unwrap());
        assert!(!ideal_member(&mb("ybar0"), OIdealId::Zz0bar).unwrap());
        assert!(matches!(
            ideal_member(&m("y0"), OIdealId::J2bar),
            Err(WildError::AmbientMismatch { .. })
        ));
    }

    #[test]
    fn congruence_examples() {
        assert!(cong_mod_ideal(&m("y0"), &m("y5"), OIdealId::J1).unwrap());
        assert!(!cong_mod_ideal(&m("y0"), &m("z0"), OIdealId::J1).unwrap());
        let lhs = mb("xbar0 + ybar0");
        assert!(cong_mod_ideal(&lhs, &mb("xbar0"), OIdealId::Zz0bar).unwrap());
        assert!(!cong_mod_ideal(&mb("ybar0"), &mb("zbar0"), OIdealId::Zz0bar).unwrap());
    }

    #[test]
    fn quotient_map_examples() {
        assert!(q_map(&MElem::a(7)).is_zero());
        assert!(q_map(&MElem::y(3)).equal(&MBarElem::ybar()));
        let qu = q_map(&MElem::u());
        assert!(qu.equal(&MBarElem::xbar(0).add(&MBarElem::ybar())));
        assert!(qu.equal(&parse_mbar_elem("xbar1 + 2*ybar0").unwrap()));
    }

    #[test]
    fn ideal_parse_round_trip() {
        for id in OIdealId::ALL {
            assert_eq!(id.to_string().parse::<OIdealId>().unwrap(), id);
        }
        assert!("J3".parse::<OIdealId>().is_err());
    }
}
