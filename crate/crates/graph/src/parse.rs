//! The graph file format.
//!
//! ```text
//! graph E0C0
//! vertices u x0 y0 z0
//! arrow e1 u -> y0
//! separation u : {e1 e2} {f1 f2}
//! emitter v : e1 e2 e3 depth 2
//! ```
//!
//! Vertices without a `separation` line get the single class `s⁻¹(v)`.

use std::fmt::Write;

use refmon_core::parse::{is_identifier, strip_comment};
use serde::Serialize;

use crate::error::GraphError;
use crate::graph::{DirectedGraph, SeparatedGraph};

/// An emitter whose arrows are listed in a fixed order, truncated at `depth`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Emitter {
    pub vertex: usize,
    pub arrows: Vec<usize>,
    pub depth: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphFile {
    pub sep: SeparatedGraph,
    /// Whether any `separation` line was given.
    pub separated: bool,
    pub emitters: Vec<Emitter>,
}

impl GraphFile {
    pub fn graph(&self) -> &DirectedGraph {
        &self.sep.graph
    }
}

fn ident(line: usize, s: &str) -> Result<String, GraphError> {
    if is_identifier(s) {
        Ok(s.to_string())
    } else {
        Err(GraphError::Parse {
            line,
            message: format!("`{s}` is not an identifier"),
        })
    }
}

fn at_line(line: usize) -> impl Fn(GraphError) -> GraphError {
    move |e| match e {
        GraphError::Parse { .. } => e,
        other => GraphError::Parse {
            line,
            message: other.to_string(),
        },
    }
}

/// Parses the `{a b} {c d}` part of a separation line.
fn parse_groups(line: usize, text: &str) -> Result<Vec<Vec<String>>, GraphError> {
    let err = |m: &str| GraphError::Parse {
        line,
        message: m.to_string(),
    };
    let mut groups = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let body = rest.strip_prefix('{').ok_or_else(|| err("expected `{`"))?;
        let close = body.find('}').ok_or_else(|| err("missing `}`"))?;
        let names = body[..close]
            .split_whitespace()
            .map(|s| ident(line, s))
            .collect::<Result<Vec<_>, _>>()?;
        if names.is_empty() {
            return Err(err("empty separation class"));
        }
        groups.push(names);
        rest = body[close + 1..].trim_start();
    }
    Ok(groups)
}

pub fn parse_graph(text: &str) -> Result<GraphFile, GraphError> {
    let mut g: Option<DirectedGraph> = None;
    let mut separations: Vec<(usize, String, Vec<Vec<String>>)> = Vec::new();
    let mut emitters: Vec<(usize, String, Vec<String>, usize)> = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = n + 1;
        let body = strip_comment(raw);
        if body.is_empty() {
            continue;
        }
        let (kw, rest) = body.split_once(char::is_whitespace).unwrap_or((body, ""));
        let rest = rest.trim();
        let perr = |m: String| GraphError::Parse { line, message: m };
        if kw == "graph" {
            if g.is_some() {
                return Err(perr("second `graph` line".into()));
            }
            g = Some(DirectedGraph::new(ident(line, rest)?));
            continue;
        }
        let graph = g
            .as_mut()
            .ok_or_else(|| perr("expected `graph <name>` first".into()))?;
        match kw {
            "vertices" => {
                for v in rest.split_whitespace() {
                    graph.add_vertex(ident(line, v)?).map_err(at_line(line))?;
                }
            }
            "arrow" => {
                let parts: Vec<&str> = rest.split_whitespace().collect();
                let [name, src, "->", rng] = parts[..] else {
                    return Err(perr("expected `arrow <id> <v> -> <w>`".into()));
                };
                graph
                    .add_arrow(ident(line, name)?, src, rng)
                    .map_err(at_line(line))?;
            }
            "separation" => {
                let (v, groups) = rest
                    .split_once(':')
                    .ok_or_else(|| perr("expected `separation <v> : {...}`".into()))?;
                separations.push((line, ident(line, v.trim())?, parse_groups(line, groups)?));
            }
            "emitter" => {
                let (v, spec) = rest
                    .split_once(':')
                    .ok_or_else(|| perr("expected `emitter <v> : <arrows> depth <n>`".into()))?;
                let words: Vec<&str> = spec.split_whitespace().collect();
                let [arrows @ .., "depth", d] = &words[..] else {
                    return Err(perr("emitter line must end with `depth <n>`".into()));
                };
                let depth = d
                    .parse::<usize>()
                    .map_err(|_| perr(format!("bad depth `{d}`")))?;
                let arrows = arrows
                    .iter()
                    .map(|a| ident(line, a))
                    .collect::<Result<_, _>>()?;
                emitters.push((line, ident(line, v.trim())?, arrows, depth));
            }
            other => return Err(perr(format!("unknown keyword `{other}`"))),
        }
    }
    let graph = g.ok_or(GraphError::Parse {
        line: 0,
        message: "missing `graph <name>` line".into(),
    })?;

    let mut classes: Vec<Option<Vec<Vec<usize>>>> = vec![None; graph.vertices.len()];
    let separated = !separations.is_empty();
    for (line, v, groups) in separations {
        let vi = graph.vertex(&v).map_err(at_line(line))?;
        if classes[vi].is_some() {
            return Err(GraphError::Parse {
                line,
                message: format!("second separation for `{v}`"),
            });
        }
        let idx = groups
            .iter()
            .map(|grp| {
                grp.iter()
                    .map(|a| graph.arrow(a))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()
            .map_err(at_line(line))?;
        classes[vi] = Some(idx);
    }
    let classes = classes
        .into_iter()
        .enumerate()
        .map(|(v, c)| {
            c.unwrap_or_else(|| {
                let out = graph.out_arrows(v);
                if out.is_empty() {
                    vec![]
                } else {
                    vec![out]
                }
            })
        })
        .collect();
    let mut parsed = Vec::new();
    for (line, v, arrows, depth) in emitters {
        let vertex = graph.vertex(&v).map_err(at_line(line))?;
        let arrows = arrows
            .iter()
            .map(|a| graph.arrow(a))
            .collect::<Result<Vec<_>, _>>()
            .map_err(at_line(line))?;
        parsed.push(Emitter {
            vertex,
            arrows,
            depth,
        });
    }
    let sep = SeparatedGraph::new(graph, classes)?;
    Ok(GraphFile {
        sep,
        separated,
        emitters: parsed,
    })
}

/// Writes `file` back in the graph file format.
pub fn graph_to_text(file: &GraphFile) -> String {
    let g = file.graph();
    let mut out = String::new();
    writeln!(out, "graph {}", g.name).unwrap();
    if !g.vertices.is_empty() {
        writeln!(out, "vertices {}", g.vertices.join(" ")).unwrap();
    }
    for a in &g.arrows {
        writeln!(
            out,
            "arrow {} {} -> {}",
            a.name, g.vertices[a.src], g.vertices[a.rng]
        )
        .unwrap();
    }
    if file.separated {
        for (v, cv) in file.sep.classes.iter().enumerate() {
            if cv.is_empty() {
                continue;
            }
            let groups: Vec<String> = cv
                .iter()
                .map(|x| format!("{{{}}}", file.sep.member_names(x).join(" ")))
                .collect();
            writeln!(out, "separation {} : {}", g.vertices[v], groups.join(" ")).unwrap();
        }
    }
    for e in &file.emitters {
        let names: Vec<&str> = e
            .arrows
            .iter()
            .map(|&a| g.arrows[a].name.as_str())
            .collect();
        writeln!(
            out,
            "emitter {} : {} depth {}",
            g.vertices[e.vertex],
            names.join(" "),
            e.depth
        )
        .unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const E0C0: &str = "graph E0C0
vertices u x0 y0 z0
arrow e1 u -> y0
arrow e2 u -> x0
arrow f1 u -> z0
arrow f2 u -> x0
separation u : {e1 e2} {f1 f2}
";

    #[test]
    fn parses_the_four_vertex_graph() {
        let f = parse_graph(E0C0).unwrap();
        assert_eq!(f.graph().vertices.len(), 4);
        assert_eq!(f.graph().arrows.len(), 4);
        assert_eq!(f.sep.classes[0].len(), 2);
        assert!(f.sep.classes[1..].iter().all(|c| c.is_empty()));
        let again = parse_graph(&graph_to_text(&f)).unwrap();
        assert_eq!(again, f);
    }

    #[test]
    fn single_loop() {
        let f = parse_graph("graph L\nvertices v\narrow e v -> v\n").unwrap();
        assert!(!f.separated);
        assert_eq!(f.sep.classes[0], vec![vec![0]]);
    }

    #[test]
    fn repeated_arrow_in_separation_is_rejected() {
        let text = E0C0.replace("{f1 f2}", "{f1 f2 e1}");
        assert!(matches!(
            parse_graph(&text),
            Err(GraphError::NotPartition { .. })
        ));
        let text = E0C0.replace("{f1 f2}", "{f1}");
        assert!(matches!(
            parse_graph(&text),
            Err(GraphError::NotPartition { .. })
        ));
    }

    #[test]
    fn errors_carry_lines() {
        let err = parse_graph("graph G\nvertices v\narrow e v -> w\n").unwrap_err();
        assert!(matches!(err, GraphError::Parse { line: 3, .. }), "{err}");
        let err = parse_graph("graph G\nvertices v v\n").unwrap_err();
        assert!(matches!(err, GraphError::Parse { line: 2, .. }));
    }

    #[test]
    fn emitter_lines() {
        let f = parse_graph(
            "graph T\nvertices v z\narrow e1 v -> z\narrow e2 v -> z\nemitter v : e1 e2 depth 1\n",
        )
        .unwrap();
        assert_eq!(f.emitters[0].arrows, vec![0, 1]);
        assert_eq!(f.emitters[0].depth, 1);
        assert_eq!(parse_graph(&graph_to_text(&f)).unwrap(), f);
    }
}
