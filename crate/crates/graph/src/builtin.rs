//! The separated graphs `(E0, C0)`, `(E, C)` and `(Ē, C̄)`, the last two truncated at a level.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::GraphError;
use crate::graph::{DirectedGraph, SeparatedGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Builtin {
    E0C0,
    EC(usize),
    EbarCbar(usize),
}

impl fmt::Display for Builtin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Builtin::E0C0 => write!(f, "E0C0"),
            Builtin::EC(n) => write!(f, "EC({n})"),
            Builtin::EbarCbar(n) => write!(f, "EbarCbar({n})"),
        }
    }
}

impl FromStr for Builtin {
    type Err = GraphError;

    /// `E0C0`, `EC(N)` or `EbarCbar(N)` with `N ≥ 1`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || GraphError::UnknownBuiltin(s.to_string());
        if s == "E0C0" {
            return Ok(Builtin::E0C0);
        }
        let (head, rest) = s.split_once('(').ok_or_else(bad)?;
        let n: usize = rest
            .strip_suffix(')')
            .and_then(|d| d.parse().ok())
            .filter(|&n| n >= 1)
            .ok_or_else(bad)?;
        match head {
            "EC" => Ok(Builtin::EC(n)),
            "EbarCbar" => Ok(Builtin::EbarCbar(n)),
            _ => Err(bad()),
        }
    }
}

struct Builder {
    g: DirectedGraph,
    classes: Vec<(String, Vec<String>)>,
}

impl Builder {
    fn vertex(&mut self, v: String) {
        self.g.add_vertex(v).expect("fresh vertex");
    }

    /// One class at `src` with an arrow to each target, named `src_target` plus `suffix`.
    fn class(&mut self, src: &str, targets: &[String], suffix: &str) {
        let mut names = Vec::new();
        for t in targets {
            let name = format!("{src}_{t}{suffix}");
            self.g.add_arrow(name.clone(), src, t).expect("fresh arrow");
            names.push(name);
        }
        self.classes.push((src.to_string(), names));
    }

    fn finish(self) -> SeparatedGraph {
        let g = self.g;
        let mut classes = vec![Vec::new(); g.vertices.len()];
        for (v, names) in self.classes {
            let idx = names.iter().map(|a| g.arrow(a).expect("added")).collect();
            classes[g.vertex(&v).expect("added")].push(idx);
        }
        SeparatedGraph::new(g, classes).expect("built-in separations are partitions")
    }
}

fn with_u(name: String) -> Builder {
    let mut b = Builder {
        g: DirectedGraph::new(name),
        classes: Vec::new(),
    };
    for v in ["u", "x0", "y0", "z0"] {
        b.vertex(v.to_string());
    }
    b
}

fn u_classes(b: &mut Builder) {
    let names = [("e1", "y0"), ("e2", "x0"), ("f1", "z0"), ("f2", "x0")];
    for (a, t) in names {
        b.g.add_arrow(a, "u", t).expect("fresh arrow");
    }
    b.classes.push(("u".into(), vec!["e1".into(), "e2".into()]));
    b.classes.push(("u".into(), vec!["f1".into(), "f2".into()]));
}

pub fn builtin_graph(which: Builtin) -> SeparatedGraph {
    match which {
        Builtin::E0C0 => {
            let mut b = with_u("E0C0".into());
            u_classes(&mut b);
            b.finish()
        }
        Builtin::EC(n) | Builtin::EbarCbar(n) => {
            let bar = matches!(which, Builtin::EbarCbar(_));
            let mut b = with_u(if bar {
                format!("EbarCbar{n}")
            } else {
                format!("EC{n}")
            });
            for l in 1..=n {
                if !bar {
                    b.vertex(format!("a{l}"));
                }
                for v in ["x", "y", "z"] {
                    b.vertex(format!("{v}{l}"));
                }
            }
            u_classes(&mut b);
            for l in 0..n {
                let h = l + 1;
                let (xh, yh, zh, ah) = (
                    format!("x{h}"),
                    format!("y{h}"),
                    format!("z{h}"),
                    format!("a{h}"),
                );
                b.class(&format!("x{l}"), &[xh.clone(), yh.clone()], "");
                b.class(&format!("x{l}"), &[xh, zh.clone()], "_");
                if bar {
                    b.class(&format!("y{l}"), &[yh], "");
                    b.class(&format!("z{l}"), &[zh], "");
                } else {
                    b.class(&format!("y{l}"), &[yh, ah.clone()], "");
                    b.class(&format!("z{l}"), &[zh, ah], "");
                }
            }
            b.finish()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        let g = builtin_graph(Builtin::E0C0);
        assert_eq!((g.graph.vertices.len(), g.graph.arrows.len()), (4, 4));
        assert_eq!(g.classes[0].len(), 2);
        let ec = builtin_graph(Builtin::EC(2));
        assert_eq!(ec.graph.vertices.len(), 4 + 2 * 4);
        assert_eq!(ec.graph.arrows.len(), 4 + 2 * 8);
        let bar = builtin_graph(Builtin::EbarCbar(1));
        assert_eq!(bar.graph.vertices.len(), 7);
    }

    #[test]
    fn names_parse() {
        for b in [Builtin::E0C0, Builtin::EC(3), Builtin::EbarCbar(1)] {
            assert_eq!(b.to_string().parse::<Builtin>().unwrap(), b);
        }
        assert!("EC(0)".parse::<Builtin>().is_err());
        assert!("F(1)".parse::<Builtin>().is_err());
    }
}
