//! Text terms for elements: `x0 + y0`, `3*a3`, `xbar2 + 2*ybar0`.

use refmon_core::parse::parse_summands;

use crate::error::WildError;
use crate::m::MElem;
use crate::mbar::MBarElem;

pub(crate) fn render(summands: &[(u64, String)]) -> String {
    if summands.is_empty() {
        return "0".to_string();
    }
    summands
        .iter()
        .map(|(c, g)| {
            if *c == 1 {
                g.clone()
            } else {
                format!("{c}*{g}")
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

fn level_suffix(id: &str, prefix: &str) -> Option<usize> {
    let rest = id.strip_prefix(prefix)?;
    if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    rest.parse().ok()
}

/// A generator of 𝓜 by name: `x<n>`, `y<n>`, `z<n>`, `a<n>` (n ≥ 1), or `u`.
pub fn m_generator(id: &str) -> Option<MElem> {
    if id == "u" {
        return Some(MElem::u());
    }
    if let Some(n) = level_suffix(id, "x") {
        return Some(MElem::x(n));
    }
    if let Some(n) = level_suffix(id, "y") {
        return Some(MElem::y(n));
    }
    if let Some(n) = level_suffix(id, "z") {
        return Some(MElem::z(n));
    }
    match level_suffix(id, "a") {
        Some(n) if n >= 1 => Some(MElem::a(n)),
        _ => None,
    }
}

/// A generator of 𝓜̄ by name: `xbar<n>`, `ybar0`, `zbar0`.
pub fn mbar_generator(id: &str) -> Option<MBarElem> {
    match id {
        "ybar0" => Some(MBarElem::ybar()),
        "zbar0" => Some(MBarElem::zbar()),
        _ => level_suffix(id, "xbar").map(MBarElem::xbar),
    }
}

fn parse_with<T>(
    text: &str,
    zero: T,
    generator: impl Fn(&str) -> Option<T>,
    add: impl Fn(&T, &T) -> T,
    scale: impl Fn(&T, u64) -> T,
) -> Result<T, WildError> {
    let err = |reason: String| WildError::Parse {
        text: text.to_string(),
        reason,
    };
    let mut acc = zero;
    for (k, id) in parse_summands(text).map_err(|e| err(e.to_string()))? {
        let g = generator(&id).ok_or_else(|| err(format!("unknown generator `{id}`")))?;
        acc = add(&acc, &scale(&g, k));
    }
    Ok(acc)
}

pub fn parse_m_elem(text: &str) -> Result<MElem, WildError> {
    parse_with(text, MElem::zero(), m_generator, MElem::add, MElem::scale)
}

pub fn parse_mbar_elem(text: &str) -> Result<MBarElem, WildError> {
    parse_with(
        text,
        MBarElem::zero(),
        mbar_generator,
        MBarElem::add,
        MBarElem::scale,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_render() {
        let e = parse_m_elem("x0 + y0").unwrap();
        assert!(e.equal(&MElem::u()));
        assert_eq!(parse_m_elem("3*a3").unwrap().to_string(), "3*a3");
        assert_eq!(parse_m_elem("0").unwrap().to_string(), "0");
        let b = parse_mbar_elem("xbar2 + 2*ybar0").unwrap();
        assert_eq!(b.to_string(), "xbar0");
        assert!(parse_m_elem("a0").is_err());
        assert!(parse_m_elem("w1").is_err());
        assert!(parse_mbar_elem("ybar1").is_err());
    }
}
