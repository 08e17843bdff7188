//! Parser for presentation files and additive terms.
//!
//! ```text
//! # comment
//! monoid M0
//! generators x0 y0 z0
//! relation x0 + y0 = x0 + z0
//! ```
//!
//! A term is `k*id + k*id + ...`; a coefficient of 1 may be omitted, and `0` is the empty word.

use thiserror::Error;

use crate::error::CoreError;
use crate::presentation::Presentation;
use crate::word::{GeneratorSet, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TermError {
    #[error("empty term")]
    Empty,
    #[error("bad coefficient `{0}`")]
    Coefficient(String),
    #[error("bad identifier `{0}`")]
    Identifier(String),
    #[error("unknown generator `{0}`")]
    Unknown(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            message: message.into(),
        }
    }
}

pub fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
}

/// Splits a term into `(coefficient, identifier)` summands without resolving names.
pub fn parse_summands(text: &str) -> Result<Vec<(u64, String)>, TermError> {
    let text = text.trim();
    if text.is_empty() {
        return Err(TermError::Empty);
    }
    if text == "0" {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for part in text.split('+') {
        let part = part.trim();
        if part.is_empty() {
            return Err(TermError::Empty);
        }
        let (coeff, ident) = match part.split_once('*') {
            Some((c, id)) => {
                let c = c.trim();
                let k = c
                    .parse::<u64>()
                    .map_err(|_| TermError::Coefficient(c.to_string()))?;
                (k, id.trim())
            }
            None => (1, part),
        };
        if !is_identifier(ident) {
            return Err(TermError::Identifier(ident.to_string()));
        }
        out.push((coeff, ident.to_string()));
    }
    Ok(out)
}

/// Parses a term over a generator set.
pub fn parse_term(gens: &GeneratorSet, text: &str) -> Result<Word, TermError> {
    let mut pairs = Vec::new();
    for (k, id) in parse_summands(text)? {
        let i = gens.index_of(&id).ok_or(TermError::Unknown(id))?;
        pairs.push((i, k));
    }
    Ok(Word::from_pairs(pairs))
}

/// Strips a trailing `#` comment and surrounding whitespace.
pub fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(p) => line[..p].trim(),
        None => line.trim(),
    }
}

pub fn parse_presentation(text: &str) -> Result<Presentation, ParseError> {
    let mut name: Option<String> = None;
    let mut gens = GeneratorSet::new(Vec::<String>::new()).expect("empty set");
    let mut pending: Vec<(usize, String, String)> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = strip_comment(raw);
        if line.is_empty() {
            continue;
        }
        let (keyword, rest) = match line.split_once(char::is_whitespace) {
            Some((k, r)) => (k, r.trim()),
            None => (line, ""),
        };
        match keyword {
            "monoid" => {
                if name.is_some() {
                    return Err(ParseError::new(line_no, "second `monoid` line"));
                }
                if !is_identifier(rest) {
                    return Err(ParseError::new(
                        line_no,
                        format!("bad monoid name `{rest}`"),
                    ));
                }
                name = Some(rest.to_string());
            }
            "generators" => {
                for id in rest.split_whitespace() {
                    if !is_identifier(id) {
                        return Err(ParseError::new(line_no, format!("bad identifier `{id}`")));
                    }
                    gens.push(id.to_string()).map_err(|e| match e {
                        CoreError::DuplicateGenerator(g) => {
                            ParseError::new(line_no, format!("duplicate generator `{g}`"))
                        }
                        other => ParseError::new(line_no, other.to_string()),
                    })?;
                }
            }
            "relation" => {
                let (l, r) = rest
                    .split_once('=')
                    .ok_or_else(|| ParseError::new(line_no, "relation needs `=`"))?;
                if r.contains('=') {
                    return Err(ParseError::new(line_no, "relation has more than one `=`"));
                }
                pending.push((line_no, l.to_string(), r.to_string()));
            }
            other => {
                return Err(ParseError::new(
                    line_no,
                    format!("unknown keyword `{other}`"),
                ));
            }
        }
    }

    let name = name.ok_or_else(|| ParseError::new(1, "missing `monoid <name>` line"))?;
    let mut p = Presentation::new(name, gens);
    for (line_no, l, r) in pending {
        let lhs = parse_term(&p.gens, &l).map_err(|e| ParseError::new(line_no, e.to_string()))?;
        let rhs = parse_term(&p.gens, &r).map_err(|e| ParseError::new(line_no, e.to_string()))?;
        p.add_relation(lhs, rhs)
            .map_err(|e| ParseError::new(line_no, e.to_string()))?;
    }
    Ok(p)
}
