//! Finite truncations of 𝓜 and 𝓜̄ as presentations, conversions between words and exact
//! elements, and the certificate homomorphisms that separate elements.

use std::fmt;
use std::str::FromStr;

use refmon_core::{
    certificate_from_fn, Basis, CertificateHom, FreeVec, GeneratorSet, Presentation, TargetMonoid,
    TargetValue, Word,
};
use serde::Serialize;

use crate::error::WildError;
use crate::m::MElem;
use crate::mbar::MBarElem;
use crate::term::{m_generator, mbar_generator};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    M,
    MBar,
}

/// Generators up to level `n`, relations of levels below `n`.
///
/// 𝓜: `x0 y0 z0`, then `x_l y_l z_l a_l` for each `l = 1..=n`.
/// 𝓜̄: `xbar0 ybar0 zbar0`, then `xbar_l`.
pub fn truncation_presentation(n: usize, family: Family) -> Presentation {
    assert!(n >= 1, "truncation level starts at 1");
    let mut names = vec![];
    match family {
        Family::M => {
            for l in 0..=n {
                names.extend([format!("x{l}"), format!("y{l}"), format!("z{l}")]);
                if l > 0 {
                    names.push(format!("a{l}"));
                }
            }
        }
        Family::MBar => {
            names.extend(["xbar0".into(), "ybar0".into(), "zbar0".into()]);
            names.extend((1..=n).map(|l| format!("xbar{l}")));
        }
    }
    let name = match family {
        Family::M => format!("M{n}"),
        Family::MBar => format!("Mbar{n}"),
    };
    let gens = GeneratorSet::new(names).expect("distinct generator names");
    let mut p = Presentation::new(name, gens);
    fn side<'a>(s: &[&'a str]) -> Vec<(&'a str, u64)> {
        s.iter().map(|g| (*g, 1)).collect()
    }
    let mut rel = |lhs: &[&str], rhs: &[&str]| {
        p.relate(&side(lhs), &side(rhs)).expect("known generators");
    };
    match family {
        Family::M => {
            rel(&["x0", "y0"], &["x0", "z0"]);
            for l in 0..n {
                let (x, y, z) = (format!("x{l}"), format!("y{l}"), format!("z{l}"));
                let h = l + 1;
                let (xh, yh, zh, ah) = (
                    format!("x{h}"),
                    format!("y{h}"),
                    format!("z{h}"),
                    format!("a{h}"),
                );
                rel(&[&y], &[&yh, &ah]);
                rel(&[&z], &[&zh, &ah]);
                rel(&[&x], &[&xh, &yh]);
                rel(&[&x], &[&xh, &zh]);
            }
        }
        Family::MBar => {
            rel(&["xbar0", "ybar0"], &["xbar0", "zbar0"]);
            for l in 0..n {
                let (x, xh) = (format!("xbar{l}"), format!("xbar{}", l + 1));
                rel(&[&x], &[&xh, "ybar0"]);
                rel(&[&x], &[&xh, "zbar0"]);
            }
        }
    }
    p
}

/// A truncation presentation with conversions to and from exact elements.
#[derive(Debug, Clone)]
pub struct Truncation {
    pub family: Family,
    pub level: usize,
    pub presentation: Presentation,
}

impl Truncation {
    pub fn new(family: Family, level: usize) -> Self {
        Truncation {
            family,
            level,
            presentation: truncation_presentation(level, family),
        }
    }

    fn word_of(&self, summands: &[(u64, String)]) -> Word {
        let gens = &self.presentation.gens;
        Word::from_pairs(summands.iter().map(|(c, g)| {
            (
                gens.index_of(g)
                    .expect("summand names a truncation generator"),
                *c,
            )
        }))
    }

    fn check_level(&self, level: usize) -> Result<(), WildError> {
        if level > self.level {
            Err(WildError::AboveTruncation {
                level,
                truncation: self.level,
            })
        } else {
            Ok(())
        }
    }

    /// The word for `e`, written at its own stored level.
    pub fn m_word(&self, e: &MElem) -> Result<Word, WildError> {
        self.check_level(e.level())?;
        Ok(self.word_of(&e.summands()))
    }

    pub fn mbar_word(&self, e: &MBarElem) -> Result<Word, WildError> {
        self.check_level(e.level())?;
        Ok(self.word_of(&e.summands()))
    }

    fn generators<T>(&self, lookup: impl Fn(&str) -> Option<T>) -> Vec<T> {
        self.presentation
            .gens
            .names()
            .iter()
            .map(|g| lookup(g).expect("truncation generator"))
            .collect()
    }

    pub fn m_elem(&self, w: &Word) -> MElem {
        let gens = self.generators(m_generator);
        w.terms()
            .iter()
            .fold(MElem::zero(), |acc, &(g, c)| acc.add(&gens[g].scale(c)))
    }

    pub fn mbar_elem(&self, w: &Word) -> MBarElem {
        let gens = self.generators(mbar_generator);
        w.terms()
            .iter()
            .fold(MBarElem::zero(), |acc, &(g, c)| acc.add(&gens[g].scale(c)))
    }

    /// The generators `x_N, y_N, z_N, a_1..a_N` (resp. `x̄_N, ȳ0, z̄0`) that write every
    /// element at the top level.
    pub fn top_generators(&self) -> Vec<Word> {
        let n = self.level;
        let names: Vec<String> = match self.family {
            Family::M => [format!("x{n}"), format!("y{n}"), format!("z{n}")]
                .into_iter()
                .chain((1..=n).map(|l| format!("a{l}")))
                .collect(),
            Family::MBar => vec![format!("xbar{n}"), "ybar0".into(), "zbar0".into()],
        };
        names
            .iter()
            .map(|g| self.presentation.gen(g).expect("truncation generator"))
            .collect()
    }

    /// Every top-level coefficient tuple with coefficient sum at most `max_degree`, as words.
    pub fn top_words(&self, max_degree: u64) -> Vec<Word> {
        let top = self.top_generators();
        refmon_core::words_up_to(top.len(), max_degree)
            .into_iter()
            .map(|t| {
                t.terms()
                    .iter()
                    .fold(Word::zero(), |acc, &(g, c)| acc.add(&top[g].scale(c)))
            })
            .collect()
    }
}

/// The certificate homomorphisms separating elements of 𝓜 and 𝓜̄.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum NamedCert {
    /// State `s(x_n) = s(y_n) = s(z_n) = s(a_n) = 2⁻ⁿ` into ℚ⁺.
    S,
    /// `f(x_l) = 1`, everything else 0, into ℤ⁺.
    F,
    /// `g(x_l) = ∞`, `g(y_l) = β + Σ α_k`, `g(z_l) = γ + Σ α_k`, `g(a_l) = -α_l`.
    G,
    /// `h(y_l) = h(z_l) = β + Σ α_k`, `h(a_l) = -α_l`, `h(x_l) = -lβ + Σ (k-l-1) α_k`.
    H,
    /// `x, y, z ↦ ∞`, `a_n ↦ α_n`.
    GIrr,
    /// `t(ȳ0) = t(z̄0) = (1, 0)`, `t(x̄_n) = (1 - n, 1)` into B.
    T,
    /// `x̄_n ↦ 1`, `ȳ0, z̄0 ↦ 0`.
    FBar,
    /// `ȳ0 ↦ (1, 0)`, `z̄0 ↦ (0, 1)`, `x̄_n ↦ ∞`.
    GBar,
}

impl NamedCert {
    pub const ALL: [NamedCert; 8] = [
        NamedCert::S,
        NamedCert::F,
        NamedCert::G,
        NamedCert::H,
        NamedCert::GIrr,
        NamedCert::T,
        NamedCert::FBar,
        NamedCert::GBar,
    ];

    pub fn family(self) -> Family {
        match self {
            NamedCert::T | NamedCert::FBar | NamedCert::GBar => Family::MBar,
            _ => Family::M,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            NamedCert::S => "s",
            NamedCert::F => "f",
            NamedCert::G => "g",
            NamedCert::H => "h",
            NamedCert::GIrr => "girr",
            NamedCert::T => "t",
            NamedCert::FBar => "fbar",
            NamedCert::GBar => "gbar",
        }
    }

    /// The certificates that together separate all distinct elements of the family.
    pub fn separating(family: Family) -> &'static [NamedCert] {
        match family {
            Family::M => &[NamedCert::S, NamedCert::F, NamedCert::G, NamedCert::H],
            Family::MBar => &[NamedCert::T, NamedCert::FBar, NamedCert::GBar],
        }
    }
}

impl fmt::Display for NamedCert {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NamedCert {
    type Err = WildError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        NamedCert::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| WildError::Parse {
                text: s.to_string(),
                reason: "expected one of s, f, g, h, girr, t, fbar, gbar".to_string(),
            })
    }
}

/// `(kind, level)` for a truncation generator name such as `y3`, `a2` or `xbar1`.
fn split_generator(name: &str) -> (&str, u32) {
    let at = name
        .find(|c: char| c.is_ascii_digit())
        .expect("generator names end in a level");
    (&name[..at], name[at..].parse().expect("numeric level"))
}

fn alpha_sum(l: u32, coeff: impl Fn(u32) -> i64) -> FreeVec {
    FreeVec::from_terms((1..=l).map(|k| (Basis::Alpha(k), coeff(k))))
}

fn image(which: NamedCert, name: &str) -> TargetValue {
    let (kind, l) = split_generator(name);
    let li = l as i64;
    let vec = |v: FreeVec| TargetValue::Vector(v);
    match (which, kind) {
        (NamedCert::S, _) => TargetValue::dyadic(l),
        (NamedCert::F, "x") | (NamedCert::FBar, "xbar") => TargetValue::int(1),
        (NamedCert::F, _) | (NamedCert::FBar, _) => TargetValue::int(0),
        (NamedCert::G, "x") => TargetValue::Infinity,
        (NamedCert::G, "y") | (NamedCert::H, "y") | (NamedCert::H, "z") => {
            vec(FreeVec::basis(Basis::Beta).add(&alpha_sum(l, |_| 1)))
        }
        (NamedCert::G, "z") => vec(FreeVec::basis(Basis::Gamma).add(&alpha_sum(l, |_| 1))),
        (NamedCert::G, "a") | (NamedCert::H, "a") => vec(FreeVec::term(Basis::Alpha(l), -1)),
        (NamedCert::H, "x") => {
            vec(FreeVec::term(Basis::Beta, -li).add(&alpha_sum(l, |k| k as i64 - li - 1)))
        }
        (NamedCert::GIrr, "a") => vec(FreeVec::basis(Basis::Alpha(l))),
        (NamedCert::GIrr, _) => TargetValue::Infinity,
        (NamedCert::T, "xbar") => TargetValue::pair(1 - li, 1),
        (NamedCert::T, _) => TargetValue::pair(1, 0),
        (NamedCert::GBar, "xbar") => TargetValue::Infinity,
        (NamedCert::GBar, "ybar") => TargetValue::pair(1, 0),
        (NamedCert::GBar, "zbar") => TargetValue::pair(0, 1),
        (w, k) => unreachable!("{w} has no image for {k}"),
    }
}

pub fn named_target(which: NamedCert) -> TargetMonoid {
    match which {
        NamedCert::S => TargetMonoid::NonnegRational,
        NamedCert::F | NamedCert::FBar => TargetMonoid::NonnegInteger,
        NamedCert::G | NamedCert::GIrr => TargetMonoid::FreeAbelianWithInfinity,
        NamedCert::H => TargetMonoid::FreeAbelian,
        NamedCert::T => TargetMonoid::BMonoid,
        NamedCert::GBar => TargetMonoid::PlanePlusInfinity,
    }
}

/// The certificate over `presentation`, which must be the matching truncation.
pub fn named_certificate_over(
    which: NamedCert,
    presentation: &Presentation,
) -> Result<CertificateHom, WildError> {
    certificate_from_fn(presentation, which.name(), named_target(which), |g| {
        image(which, g)
    })
    .map_err(|e| WildError::Internal(format!("certificate {which}: {e}")))
}

/// The certificate over the level-`n` truncation of its family.
pub fn named_certificate(which: NamedCert, n: usize) -> CertificateHom {
    let p = truncation_presentation(n, which.family());
    named_certificate_over(which, &p).expect("named certificates respect every relation")
}

/// The separating certificates for a truncation.
pub fn separating_certificates(t: &Truncation) -> Vec<CertificateHom> {
    NamedCert::separating(t.family)
        .iter()
        .map(|&c| named_certificate_over(c, &t.presentation).expect("valid certificate"))
        .collect()
}
