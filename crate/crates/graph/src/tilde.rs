//! The row-finite graph `Ẽ` that replaces each emitter by a chain of new vertices.

use crate::error::GraphError;
use crate::graph::DirectedGraph;
use crate::parse::Emitter;

pub(crate) fn check_emitters(g: &DirectedGraph, emitters: &[Emitter]) -> Result<(), GraphError> {
    let mut seen_vertices = Vec::new();
    for em in emitters {
        let v = &g.vertices[em.vertex];
        let bad = |reason: String| GraphError::Emitter {
            vertex: v.clone(),
            reason,
        };
        if em.depth == 0 {
            return Err(GraphError::Depth);
        }
        if seen_vertices.contains(&em.vertex) {
            return Err(bad("listed twice".into()));
        }
        seen_vertices.push(em.vertex);
        for (n, &e) in em.arrows.iter().enumerate() {
            if g.arrows[e].src != em.vertex {
                return Err(bad(format!("`{}` does not start here", g.arrows[e].name)));
            }
            if em.arrows[..n].contains(&e) {
                return Err(bad(format!("`{}` repeats", g.arrows[e].name)));
            }
        }
        if em.arrows.len() != g.out_degree(em.vertex) {
            return Err(bad("the list must enumerate every outgoing arrow".into()));
        }
        if em.arrows.len() < em.depth {
            return Err(bad(format!(
                "depth {} needs at least {} arrows",
                em.depth, em.depth
            )));
        }
    }
    Ok(())
}

pub fn w_name(g: &DirectedGraph, v: usize, n: usize) -> String {
    format!("w_{}_{n}", g.vertices[v])
}

/// Builds `Ẽ`: arrows of other vertices are kept; each emitter `v` keeps `e_{v,1}` and gets
/// `v → w_{v,1}`; each `w_{v,n}` with `n < depth` gets `w_{v,n} → w_{v,n+1}` and an arrow to
/// `r(e_{v,n+1})` (named after `e_{v,n+1}`). `w_{v,depth}` is a sink.
pub fn tilde_construction(
    g: &DirectedGraph,
    emitters: &[Emitter],
) -> Result<DirectedGraph, GraphError> {
    check_emitters(g, emitters)?;
    let mut out = DirectedGraph::new(format!("{}_tilde", g.name));
    for v in &g.vertices {
        out.add_vertex(v.clone())?;
    }
    for em in emitters {
        for n in 1..=em.depth {
            out.add_vertex(w_name(g, em.vertex, n))?;
        }
    }
    for a in &g.arrows {
        let Some(em) = emitters.iter().find(|em| em.vertex == a.src) else {
            out.add_arrow(a.name.clone(), &g.vertices[a.src], &g.vertices[a.rng])?;
            continue;
        };
        if em.arrows[0] == g.arrow(&a.name)? {
            out.add_arrow(a.name.clone(), &g.vertices[a.src], &g.vertices[a.rng])?;
        }
    }
    for em in emitters {
        let v = em.vertex;
        out.add_arrow(
            format!("t_{}_1", g.vertices[v]),
            &g.vertices[v],
            &w_name(g, v, 1),
        )?;
        for n in 1..em.depth {
            let (wn, wn1) = (w_name(g, v, n), w_name(g, v, n + 1));
            out.add_arrow(format!("t_{}_{}", g.vertices[v], n + 1), &wn, &wn1)?;
            let e = &g.arrows[em.arrows[n]];
            out.add_arrow(e.name.clone(), &wn, &g.vertices[e.rng])?;
        }
    }
    Ok(out)
}

/// Largest out-degree among the emitters and the new chain vertices of `Ẽ`; at most 2.
pub fn chain_out_degree(tilde: &DirectedGraph, g: &DirectedGraph, emitters: &[Emitter]) -> usize {
    emitters
        .iter()
        .flat_map(|em| {
            let v = tilde.vertex(&g.vertices[em.vertex]).expect("kept vertex");
            let ws = (1..=em.depth).map(|n| tilde.vertex(&w_name(g, em.vertex, n)).expect("w"));
            std::iter::once(v).chain(ws).collect::<Vec<_>>()
        })
        .map(|v| tilde.out_degree(v))
        .max()
        .unwrap_or(0)
}
