//! File formats: detection, canonical text, and the graph and poset conversions.

use std::fs;

use refmon_core::{parse_presentation, Presentation};
use refmon_graph::{
    graph_to_text, parse_graph, present_emitters, present_finitely_separated, present_triple,
    tilde_construction, unseparation, GraphFile, SSTriple,
};
use refmon_primitive::{parse_poset, poset_to_text, PrimePoset};

use crate::error::CliError;

#[derive(Debug, Clone)]
pub enum Parsed {
    Presentation(Presentation),
    Graph(GraphFile),
    Poset(PrimePoset),
}

impl Parsed {
    pub fn kind(&self) -> &'static str {
        match self {
            Parsed::Presentation(_) => "monoid",
            Parsed::Graph(_) => "graph",
            Parsed::Poset(_) => "poset",
        }
    }

    pub fn name(&self) -> &str {
        match self {
            Parsed::Presentation(p) => &p.name,
            Parsed::Graph(g) => &g.graph().name,
            Parsed::Poset(p) => &p.name,
        }
    }

    pub fn to_text(&self) -> String {
        match self {
            Parsed::Presentation(p) => p.to_text(),
            Parsed::Graph(g) => graph_to_text(g),
            Parsed::Poset(p) => poset_to_text(p),
        }
    }
}

/// The first keyword of the file: `monoid`, `graph` or `poset`.
pub fn detect_kind(text: &str) -> Option<&str> {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .and_then(|l| l.split_whitespace().next())
}

pub fn parse_text(path: &str, text: &str) -> Result<Parsed, CliError> {
    let located = |e: &dyn std::fmt::Display| CliError::File {
        path: path.to_string(),
        message: e.to_string(),
    };
    match detect_kind(text) {
        Some("monoid") => parse_presentation(text)
            .map(Parsed::Presentation)
            .map_err(|e| located(&e)),
        Some("graph") => parse_graph(text)
            .map(Parsed::Graph)
            .map_err(|e| located(&e)),
        Some("poset") => parse_poset(text)
            .map(Parsed::Poset)
            .map_err(|e| located(&e)),
        _ => Err(located(&"expected a `monoid`, `graph` or `poset` file")),
    }
}

pub fn read_file(path: &str) -> Result<Parsed, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::File {
        path: path.to_string(),
        message: e.to_string(),
    })?;
    parse_text(path, &text)
}

/// The presentation of a graph file: the emitter presentation when emitters are given,
/// the triple presentation with z-cap `zcap` when asked, the graph monoid of the
/// row-finite graph `Ẽ` with `tilde`, and the finitely separated presentation otherwise.
pub fn graph_presentation(
    f: &GraphFile,
    zcap: Option<usize>,
    tilde: bool,
) -> Result<Presentation, CliError> {
    if tilde {
        let t = tilde_construction(f.graph(), &f.emitters)?;
        return Ok(present_finitely_separated(&unseparation(&t))?);
    }
    match (zcap, f.emitters.is_empty()) {
        (Some(_), false) => Err(CliError::Usage(
            "--zcap applies to graphs without emitters".to_string(),
        )),
        (Some(k), true) => Ok(present_triple(&SSTriple::complete(f.sep.clone()), k)?),
        (None, false) => Ok(present_emitters(&f.sep, &f.emitters)?),
        (None, true) => Ok(present_finitely_separated(&f.sep)?),
    }
}

/// The graph file of `Ẽ`, which has no separation and no emitters.
pub fn tilde_file(f: &GraphFile) -> Result<GraphFile, CliError> {
    let t = tilde_construction(f.graph(), &f.emitters)?;
    Ok(GraphFile {
        sep: unseparation(&t),
        separated: false,
        emitters: Vec::new(),
    })
}
