use super::dense::dense_core;
use crate::error::{Error, Result};
use crate::exact::{gyori_lovasz, vertex_partition_profile, CutWitness, ExactConfig, GL_SEARCH_LIMIT};
use crate::graph::{blocks, st_numbering, Graph, VertexSet};
use crate::partition::VertexPartition;

/// A connected `r`-partition with many crossing edges, built inside the
/// dense core and extended to the whole graph.
pub fn connected_cut_bound(g: &Graph, r: usize) -> Result<CutWitness> {
    if r < 2 {
        return Err(Error::OutOfRange { value: r as u64, lo: 2, hi: u64::MAX });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.n() < r {
        return Err(Error::TooSmall { needed: r, have: g.n() });
    }
    let core = dense_core(g);
    let delta = core.min_degree;
    let n = g.n();
    let seeds = if r == 2 {
        let sub = core.induced(g);
        let block = blocks(&sub.graph)
            .into_iter()
            .fold(None::<VertexSet>, |acc, b| match acc {
                Some(a) if a.len() >= b.len() => Some(a),
                _ => Some(b),
            })
            .ok_or_else(|| Error::ConstructionFailed("empty core".into()))?;
        if block.len() < 2 {
            return Err(Error::ConstructionFailed("core has no edge".into()));
        }
        let bg = sub.graph.induced(&block);
        let (s, t) = bg.graph.endpoints(0);
        let ord = st_numbering(&bg.graph, s, t)?;
        let cut = delta.div_ceil(2).min(block.len() - 1).max(1);
        let lift = |vs: &[usize]| VertexSet::from_iter(n, vs.iter().map(|&v| sub.vertex_map[bg.vertex_map[v]]));
        vec![lift(&ord[..cut]), lift(&ord[cut..])]
    } else {
        core_partition(g, &core.vertices, r, delta)?
    };
    Ok(CutWitness::new(g, attach(g, seeds)))
}

/// Sizes `(s, …, s, rest)` with `s = max(1, ⌊δ/2r⌋)`, falling back to any
/// connected partition of the core.
fn core_partition(g: &Graph, core: &VertexSet, r: usize, delta: usize) -> Result<Vec<VertexSet>> {
    let sub = g.induced(core);
    let h = &sub.graph;
    if h.n() < r {
        return Err(Error::ConstructionFailed(format!("core has {} vertices, need {r}", h.n())));
    }
    let s = (delta / (2 * r)).max(1).min((h.n() - 1) / (r - 1));
    let mut sizes = vec![s; r - 1];
    sizes.push(h.n() - (r - 1) * s);
    let local = if h.n() <= GL_SEARCH_LIMIT {
        let cfg = ExactConfig::default();
        match gyori_lovasz(h, &sizes, &cfg)? {
            Some(p) => p,
            None => {
                let prof = vertex_partition_profile(h, r, &cfg.with_max_elements(GL_SEARCH_LIMIT))?;
                let t = prof
                    .profile
                    .iter()
                    .next()
                    .ok_or_else(|| Error::ConstructionFailed("core has no connected partition".into()))?
                    .clone();
                prof.vertex_witness(h, &t).expect("witness stored")
            }
        }
    } else {
        grow_regions(h, &sizes)?
    };
    Ok(local.parts.iter().map(|p| sub.lift_vertices(p, g.n())).collect())
}

/// Greedy region growing: each of the first `k − 1` parts is grown from a
/// vertex whose removal keeps the rest connected, only ever adding
/// vertices that keep it so.
fn grow_regions(h: &Graph, sizes: &[usize]) -> Result<VertexPartition> {
    let n = h.n();
    let mut rest = VertexSet::full(n);
    let mut parts = Vec::new();
    let still_connected = |rest: &VertexSet, v: usize| {
        let mut r = rest.clone();
        r.remove(v);
        !r.is_empty() && h.is_connected_vertex_set(&r).unwrap_or(false)
    };
    for &size in &sizes[..sizes.len() - 1] {
        let seed = rest
            .iter()
            .find(|&v| still_connected(&rest, v))
            .ok_or_else(|| Error::ConstructionFailed("no removable seed".into()))?;
        let mut part = VertexSet::from_iter(n, [seed]);
        rest.remove(seed);
        while part.len() < size {
            let next = part
                .iter()
                .flat_map(|v| h.neighbors(v).iter().map(|&(w, _)| w))
                .filter(|&w| rest.contains(w))
                .find(|&w| still_connected(&rest, w))
                .ok_or_else(|| Error::ConstructionFailed("region growing got stuck".into()))?;
            part.insert(next);
            rest.remove(next);
        }
        parts.push(part);
    }
    parts.push(rest);
    let p = VertexPartition::new(parts);
    if !p.is_valid(h) {
        return Err(Error::ConstructionFailed("region growing produced an invalid partition".into()));
    }
    Ok(p)
}

/// Adds every component of the uncovered vertices to the lowest-index part
/// it touches.
pub(crate) fn attach(g: &Graph, mut parts: Vec<VertexSet>) -> VertexPartition {
    let n = g.n();
    let mut covered = VertexSet::new(n);
    for p in &parts {
        covered.union_with(p);
    }
    let part_of: Vec<Option<usize>> = (0..n).map(|v| parts.iter().position(|p| p.contains(v))).collect();
    for comp in g.components(&covered) {
        let j = comp
            .iter()
            .flat_map(|v| g.neighbors(v).iter().filter_map(|&(w, _)| part_of[w]))
            .min()
            .expect("graph is connected");
        parts[j].union_with(&comp);
    }
    VertexPartition::new(parts)
}
