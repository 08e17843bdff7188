//! Directed graphs, separations and triples `(E, C, S)`.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use crate::error::GraphError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Arrow {
    pub name: String,
    pub src: usize,
    pub rng: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DirectedGraph {
    pub name: String,
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
    #[serde(skip)]
    vertex_index: HashMap<String, usize>,
    #[serde(skip)]
    arrow_index: HashMap<String, usize>,
}

impl DirectedGraph {
    pub fn new(name: impl Into<String>) -> Self {
        DirectedGraph {
            name: name.into(),
            vertices: Vec::new(),
            arrows: Vec::new(),
            vertex_index: HashMap::new(),
            arrow_index: HashMap::new(),
        }
    }

    fn fresh(&self, name: &str) -> Result<(), GraphError> {
        if self.vertex_index.contains_key(name) || self.arrow_index.contains_key(name) {
            Err(GraphError::Duplicate(name.to_string()))
        } else {
            Ok(())
        }
    }

    pub fn add_vertex(&mut self, name: impl Into<String>) -> Result<usize, GraphError> {
        let name = name.into();
        self.fresh(&name)?;
        self.vertex_index.insert(name.clone(), self.vertices.len());
        self.vertices.push(name);
        Ok(self.vertices.len() - 1)
    }

    pub fn add_arrow(
        &mut self,
        name: impl Into<String>,
        src: &str,
        rng: &str,
    ) -> Result<usize, GraphError> {
        let name = name.into();
        self.fresh(&name)?;
        let (src, rng) = (self.vertex(src)?, self.vertex(rng)?);
        self.arrow_index.insert(name.clone(), self.arrows.len());
        self.arrows.push(Arrow { name, src, rng });
        Ok(self.arrows.len() - 1)
    }

    pub fn vertex(&self, name: &str) -> Result<usize, GraphError> {
        self.vertex_index
            .get(name)
            .copied()
            .ok_or_else(|| GraphError::UnknownVertex(name.to_string()))
    }

    pub fn arrow(&self, name: &str) -> Result<usize, GraphError> {
        self.arrow_index
            .get(name)
            .copied()
            .ok_or_else(|| GraphError::UnknownArrow(name.to_string()))
    }

    /// `s⁻¹(v)` in insertion order.
    pub fn out_arrows(&self, v: usize) -> Vec<usize> {
        (0..self.arrows.len())
            .filter(|&e| self.arrows[e].src == v)
            .collect()
    }

    pub fn is_sink(&self, v: usize) -> bool {
        self.arrows.iter().all(|a| a.src != v)
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.arrows.iter().filter(|a| a.src == v).count()
    }
}

/// A graph with a partition `C_v` of each `s⁻¹(v)`; sinks have no classes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeparatedGraph {
    pub graph: DirectedGraph,
    /// `classes[v]` lists the members of `C_v` as arrow indices.
    pub classes: Vec<Vec<Vec<usize>>>,
}

impl SeparatedGraph {
    /// Checks that each `classes[v]` partitions `s⁻¹(v)` into nonempty sets.
    pub fn new(graph: DirectedGraph, classes: Vec<Vec<Vec<usize>>>) -> Result<Self, GraphError> {
        if classes.len() != graph.vertices.len() {
            return Err(GraphError::Triple(format!(
                "{} separations for {} vertices",
                classes.len(),
                graph.vertices.len()
            )));
        }
        for (v, cv) in classes.iter().enumerate() {
            let bad = |reason: String| GraphError::NotPartition {
                vertex: graph.vertices[v].clone(),
                reason,
            };
            let mut seen = BTreeSet::new();
            for x in cv {
                if x.is_empty() {
                    return Err(bad("empty member".to_string()));
                }
                for &e in x {
                    let a = graph
                        .arrows
                        .get(e)
                        .ok_or_else(|| bad(format!("arrow index {e} out of range")))?;
                    if a.src != v {
                        return Err(bad(format!("`{}` does not start at this vertex", a.name)));
                    }
                    if !seen.insert(e) {
                        return Err(bad(format!("`{}` listed twice", a.name)));
                    }
                }
            }
            if let Some(&e) = graph.out_arrows(v).iter().find(|e| !seen.contains(e)) {
                return Err(bad(format!("`{}` is not covered", graph.arrows[e].name)));
            }
        }
        Ok(SeparatedGraph { graph, classes })
    }

    /// All members of `C`, as `(vertex, member)` pairs.
    pub fn members(&self) -> impl Iterator<Item = (usize, &Vec<usize>)> {
        self.classes
            .iter()
            .enumerate()
            .flat_map(|(v, cv)| cv.iter().map(move |x| (v, x)))
    }

    pub fn member_names(&self, x: &[usize]) -> Vec<&str> {
        x.iter()
            .map(|&e| self.graph.arrows[e].name.as_str())
            .collect()
    }
}

/// `C_v = {s⁻¹(v)}` for every non-sink `v`.
pub fn unseparation(graph: &DirectedGraph) -> SeparatedGraph {
    let classes = (0..graph.vertices.len())
        .map(|v| {
            let out = graph.out_arrows(v);
            if out.is_empty() {
                vec![]
            } else {
                vec![out]
            }
        })
        .collect();
    SeparatedGraph::new(graph.clone(), classes).expect("out-sets partition themselves")
}

/// A separated graph with a chosen subset `S` of its (finite) members.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SSTriple {
    pub sep: SeparatedGraph,
    /// `(vertex, position in classes[vertex])` for each member of `S`.
    pub killed: BTreeSet<(usize, usize)>,
}

impl SSTriple {
    pub fn new(sep: SeparatedGraph, killed: BTreeSet<(usize, usize)>) -> Result<Self, GraphError> {
        for &(v, i) in &killed {
            if sep.classes.get(v).and_then(|cv| cv.get(i)).is_none() {
                return Err(GraphError::Triple(format!("no member {i} at vertex {v}")));
            }
        }
        Ok(SSTriple { sep, killed })
    }

    /// `S = C_fin`: every member is killed.
    pub fn complete(sep: SeparatedGraph) -> Self {
        let killed = sep
            .classes
            .iter()
            .enumerate()
            .flat_map(|(v, cv)| (0..cv.len()).map(move |i| (v, i)))
            .collect();
        SSTriple { sep, killed }
    }
}
