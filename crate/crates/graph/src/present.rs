//! Monoid presentations of separated graphs and triples.

use refmon_core::{GeneratorSet, Presentation, Word};

use crate::error::GraphError;
use crate::graph::{SSTriple, SeparatedGraph};
use crate::parse::Emitter;

fn vertex_presentation(
    sep: &SeparatedGraph,
    extra: Vec<String>,
) -> Result<Presentation, GraphError> {
    let mut names = sep.graph.vertices.clone();
    names.extend(extra);
    let gens = GeneratorSet::new(names)?;
    Ok(Presentation::new(sep.graph.name.clone(), gens))
}

/// `Σ_{e ∈ arrows} r(e)` as a word over the vertex generators.
fn ranges(sep: &SeparatedGraph, arrows: &[usize]) -> Word {
    Word::from_pairs(arrows.iter().map(|&e| (sep.graph.arrows[e].rng, 1)))
}

/// `⟨E⁰ | v = Σ_{e∈X} r(e) for X ∈ C_v⟩`.
pub fn present_finitely_separated(sep: &SeparatedGraph) -> Result<Presentation, GraphError> {
    let mut p = vertex_presentation(sep, vec![])?;
    for (v, x) in sep.members() {
        p.add_relation(Word::generator(v), ranges(sep, x))?;
    }
    Ok(p)
}

/// Nonempty subsets of `x` with at most `cap` elements, smallest first.
fn subsets(x: &[usize], cap: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = vec![vec![]];
    for &e in x {
        let grown: Vec<Vec<usize>> = out
            .iter()
            .filter(|s| s.len() < cap)
            .map(|s| {
                let mut t = s.clone();
                t.push(e);
                t
            })
            .collect();
        out.extend(grown);
    }
    out.retain(|s| !s.is_empty());
    out.sort_by_key(|s| s.len());
    out
}

/// Name of the generator `q'_Z`.
pub fn q_name(sep: &SeparatedGraph, z: &[usize]) -> String {
    format!("q_{}", sep.member_names(z).join("_"))
}

/// The presentation of `M(E, C, S)` with generators `q'_Z` for `|Z| ≤ z_cap`.
///
/// Members of `S` always get their own `q'_X` so that `q'_X = 0` can be stated.
pub fn present_triple(t: &SSTriple, z_cap: usize) -> Result<Presentation, GraphError> {
    if z_cap == 0 {
        return Err(GraphError::ZCap);
    }
    let sep = &t.sep;
    let mut families: Vec<(usize, Vec<Vec<usize>>, bool)> = Vec::new();
    for (v, cv) in sep.classes.iter().enumerate() {
        for (i, x) in cv.iter().enumerate() {
            let killed = t.killed.contains(&(v, i));
            let mut zs = subsets(x, z_cap);
            if killed && x.len() > z_cap {
                zs.push(x.clone());
            }
            families.push((v, zs, killed));
        }
    }
    let extra = families
        .iter()
        .flat_map(|(_, zs, _)| zs.iter().map(|z| q_name(sep, z)))
        .collect();
    let mut p = vertex_presentation(sep, extra)?;
    let q = |p: &Presentation, z: &[usize]| p.gen(&q_name(sep, z));
    for (v, zs, killed) in &families {
        for z in zs {
            p.add_relation(Word::generator(*v), q(&p, z)?.add(&ranges(sep, z)))?;
        }
        for z1 in zs {
            for z2 in zs {
                if z1.len() < z2.len() && z1.iter().all(|e| z2.contains(e)) {
                    let diff: Vec<usize> = z2.iter().copied().filter(|e| !z1.contains(e)).collect();
                    p.add_relation(q(&p, z1)?, q(&p, z2)?.add(&ranges(sep, &diff)))?;
                }
            }
        }
        if *killed {
            let full = zs.iter().max_by_key(|z| z.len()).expect("nonempty member");
            p.add_relation(q(&p, full)?, Word::zero())?;
        }
    }
    Ok(p)
}

/// `M(E)` for a graph with designated emitters, through the generators `q_{v,n}`:
/// `v = Σ r(e)` for the other non-sinks, `v = r(e_{v,1}) + q_{v,1}` and
/// `q_{v,n} = r(e_{v,n+1}) + q_{v,n+1}` for `n < depth`.
pub fn present_emitters(
    sep: &SeparatedGraph,
    emitters: &[Emitter],
) -> Result<Presentation, GraphError> {
    crate::tilde::check_emitters(&sep.graph, emitters)?;
    let g = &sep.graph;
    let extra = emitters
        .iter()
        .flat_map(|em| (1..=em.depth).map(move |n| format!("q_{}_{n}", g.vertices[em.vertex])))
        .collect();
    let mut p = vertex_presentation(sep, extra)?;
    for (v, x) in sep.members() {
        if emitters.iter().all(|em| em.vertex != v) {
            p.add_relation(Word::generator(v), ranges(sep, x))?;
        }
    }
    for em in emitters {
        let name = &g.vertices[em.vertex];
        let q = |n: usize| p.gen(&format!("q_{name}_{n}"));
        let r = |n: usize| Word::generator(g.arrows[em.arrows[n - 1]].rng);
        let mut rels = vec![(Word::generator(em.vertex), r(1).add(&q(1)?))];
        for n in 1..em.depth {
            rels.push((q(n)?, r(n + 1).add(&q(n + 1)?)));
        }
        for (l, rr) in rels {
            p.add_relation(l, rr)?;
        }
    }
    Ok(p)
}
