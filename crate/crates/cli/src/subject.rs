//! Monoid specifiers: built-in names and files, resolved to oracles.

use std::path::Path;

use refmon_core::{parse_presentation, parse_term, GeneratorSet, Presentation};
use refmon_graph::{builtin_graph, present_finitely_separated, Builtin};
use refmon_lab::{MBarOracle, MOracle, MonoidOracle, PresentationOracle, PrimOracle};
use refmon_primitive::all_posets;
use refmon_wild::{parse_m_elem, parse_mbar_elem, separating_certificates, Family, Truncation};

use crate::convert::{graph_presentation, read_file, Parsed};
use crate::error::CliError;

/// A monoid with the best oracle available for it.
#[derive(Debug, Clone)]
pub enum Subject {
    Presentation(PresentationOracle),
    M(MOracle),
    MBar(MBarOracle),
    Prim(PrimOracle),
}

/// Runs `$body` with `$o` bound to the oracle inside `$subject`.
#[macro_export]
macro_rules! with_oracle {
    ($subject:expr, $o:ident => $body:expr) => {
        match $subject {
            $crate::subject::Subject::Presentation($o) => $body,
            $crate::subject::Subject::M($o) => $body,
            $crate::subject::Subject::MBar($o) => $body,
            $crate::subject::Subject::Prim($o) => $body,
        }
    };
}

/// Oracles whose elements can be written as terms.
pub trait Terms: MonoidOracle {
    fn parse(&self, term: &str) -> Result<Self::Elem, CliError>;
    /// The canonical form when there is one, the term otherwise.
    fn normal(&self, e: &Self::Elem) -> String {
        self.show(e)
    }
}

fn term_error(term: &str, reason: impl ToString) -> CliError {
    CliError::Term {
        term: term.to_string(),
        reason: reason.to_string(),
    }
}

impl Terms for PresentationOracle {
    fn parse(&self, term: &str) -> Result<Self::Elem, CliError> {
        parse_term(&self.presentation.gens, term).map_err(|e| term_error(term, e))
    }
}

impl Terms for MOracle {
    fn parse(&self, term: &str) -> Result<Self::Elem, CliError> {
        parse_m_elem(term).map_err(|e| term_error(term, e))
    }

    fn normal(&self, e: &Self::Elem) -> String {
        e.normalized().to_string()
    }
}

impl Terms for MBarOracle {
    fn parse(&self, term: &str) -> Result<Self::Elem, CliError> {
        parse_mbar_elem(term).map_err(|e| term_error(term, e))
    }

    fn normal(&self, e: &Self::Elem) -> String {
        e.normalized().to_string()
    }
}

impl Terms for PrimOracle {
    fn parse(&self, term: &str) -> Result<Self::Elem, CliError> {
        let gens = GeneratorSet::new(self.poset.primes.clone()).map_err(|e| term_error(term, e))?;
        let w = parse_term(&gens, term).map_err(|e| term_error(term, e))?;
        Ok(self.poset.from_word(&w))
    }
}

/// `head(n)` with `n ≥ 1`.
fn level(spec: &str, head: &str) -> Option<usize> {
    spec.strip_prefix(head)?
        .strip_prefix('(')?
        .strip_suffix(')')?
        .parse()
        .ok()
        .filter(|&n| n >= 1)
}

pub fn m0_presentation() -> Presentation {
    parse_presentation("monoid M0\ngenerators x0 y0 z0\nrelation x0 + y0 = x0 + z0\n")
        .expect("valid presentation")
}

pub fn free_presentation(n: usize) -> Presentation {
    let gens = GeneratorSet::new((1..=n).map(|i| format!("e{i}"))).expect("distinct names");
    Presentation::new(format!("Z({n})"), gens)
}

fn truncation(family: Family, n: usize) -> Subject {
    let t = Truncation::new(family, n);
    let certs = separating_certificates(&t);
    Subject::Presentation(PresentationOracle::new(t.presentation, certs))
}

/// Resolves a built-in name or a file path.
///
/// `M(N)` and `Mbar(N)` use exact arithmetic with quantifiers over level-`N` elements;
/// `trunc:M(N)` and `trunc:Mbar(N)` are the finite truncations with their separating
/// certificates; `E0C0`, `EC(N)`, `EbarCbar(N)` are graph monoids; `Z(n)` is free on
/// `e1..en`; `P<n>_<mask>` names a poset of primes from the enumeration of all posets.
pub fn resolve(spec: &str) -> Result<Subject, CliError> {
    if Path::new(spec).is_file() {
        return Ok(match read_file(spec)? {
            Parsed::Presentation(p) => Subject::Presentation(PresentationOracle::new(p, vec![])),
            Parsed::Graph(g) => Subject::Presentation(PresentationOracle::new(
                graph_presentation(&g, None, false)?,
                vec![],
            )),
            Parsed::Poset(p) => Subject::Prim(PrimOracle::new(p)),
        });
    }
    if let Some(n) = level(spec, "M") {
        return Ok(Subject::M(MOracle::new(n)));
    }
    if let Some(n) = level(spec, "Mbar") {
        return Ok(Subject::MBar(MBarOracle::new(n)));
    }
    if let Some(rest) = spec.strip_prefix("trunc:") {
        if let Some(n) = level(rest, "M") {
            return Ok(truncation(Family::M, n));
        }
        if let Some(n) = level(rest, "Mbar") {
            return Ok(truncation(Family::MBar, n));
        }
    }
    if spec == "M0" {
        return Ok(Subject::Presentation(PresentationOracle::new(
            m0_presentation(),
            vec![],
        )));
    }
    if let Some(n) = level(spec, "Z") {
        return Ok(Subject::Presentation(PresentationOracle::new(
            free_presentation(n),
            vec![],
        )));
    }
    if let Ok(b) = spec.parse::<Builtin>() {
        let p = present_finitely_separated(&builtin_graph(b))?;
        return Ok(Subject::Presentation(PresentationOracle::new(p, vec![])));
    }
    if let Some(p) = poset_by_name(spec) {
        return Ok(Subject::Prim(PrimOracle::new(p)));
    }
    Err(CliError::UnknownMonoid(spec.to_string()))
}

fn poset_by_name(spec: &str) -> Option<refmon_primitive::PrimePoset> {
    let (n, _) = spec.strip_prefix('P')?.split_once('_')?;
    let n: usize = n.parse().ok().filter(|&n| (1..=4).contains(&n))?;
    all_posets(n).into_iter().find(|p| p.name == spec)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_names() {
        assert!(matches!(resolve("M(2)"), Ok(Subject::M(_))));
        assert!(matches!(resolve("Mbar(1)"), Ok(Subject::MBar(_))));
        assert!(matches!(
            resolve("trunc:M(1)"),
            Ok(Subject::Presentation(_))
        ));
        assert!(matches!(resolve("EC(2)"), Ok(Subject::Presentation(_))));
        assert!(matches!(resolve("Z(3)"), Ok(Subject::Presentation(_))));
        assert!(matches!(resolve("P2_0"), Ok(Subject::Prim(_))));
        assert!(matches!(resolve("M(0)"), Err(CliError::UnknownMonoid(_))));
        assert!(matches!(resolve("nope"), Err(CliError::UnknownMonoid(_))));
    }

    #[test]
    fn terms_parse_per_oracle() {
        let s = resolve("Mbar(1)").unwrap();
        let e = with_oracle!(&s, o => o.parse("xbar0 + ybar0").map(|e| o.show(&e))).unwrap();
        assert_eq!(e, "xbar0 + ybar0");
        assert!(with_oracle!(&s, o => o.parse("q7").is_err()));
    }
}
