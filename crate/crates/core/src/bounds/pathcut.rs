use std::collections::BTreeSet;

use serde::Serialize;

use super::dense::{dense_core, long_path};
use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Graph, VertexSet};
use crate::par::{self, Parallelism};
use crate::partition::EdgePartition;

#[derive(Debug, Clone, Serialize)]
pub struct PathCutReport {
    pub n: usize,
    pub m: usize,
    pub average_degree: f64,
    pub core_size: usize,
    /// minimum degree of the core
    pub delta: usize,
    /// path vertices used, `⌈δ/2⌉`
    pub t: usize,
    pub path: Vec<usize>,
    pub m_cut: usize,
    pub emitted: usize,
    pub distinct_pairs: usize,
}

pub fn path_cut_partitions(g: &Graph) -> Result<(Vec<EdgePartition>, PathCutReport)> {
    path_cut_partitions_with(g, Parallelism::default())
}

/// Nested 2-partitions cut off along a short path in the dense core.
pub fn path_cut_partitions_with(g: &Graph, mode: Parallelism) -> Result<(Vec<EdgePartition>, PathCutReport)> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let core = dense_core(g);
    let sub = core.induced(g);
    let delta = core.min_degree;
    let t = delta.div_ceil(2).max(1);
    let full: Vec<usize> = long_path(&sub.graph).into_iter().map(|v| sub.vertex_map[v]).collect();
    let n = g.n();
    let path = best_window(g, &full, t);

    let mut index = vec![usize::MAX; n];
    for (i, &v) in path.iter().enumerate() {
        index[v] = i;
    }
    let on_path = VertexSet::from_iter(n, path.iter().copied());
    // cut edges as (path index, edge id, outside vertex)
    let mut cut: Vec<(usize, usize, usize)> = Vec::new();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        match (index[u] != usize::MAX, index[v] != usize::MAX) {
            (true, false) => cut.push((index[u], e, v)),
            (false, true) => cut.push((index[v], e, u)),
            _ => {}
        }
    }
    cut.sort_unstable();

    let comps = g.components(&on_path);
    let mut comp_of = vec![usize::MAX; n];
    for (i, c) in comps.iter().enumerate() {
        for v in c.iter() {
            comp_of[v] = i;
        }
    }
    let comp_edges: Vec<EdgeSet> = comps.iter().map(|c| g.induced_edges(c)).collect();
    let prefix_edges: Vec<EdgeSet> =
        (1..=path.len()).map(|r| g.induced_edges(&VertexSet::from_iter(n, path[..r].iter().copied()))).collect();

    let build = |l: usize| -> Option<EdgePartition> {
        let mut first = prefix_edges[cut[l - 1].0].clone();
        let mut attached = vec![false; comps.len()];
        for &(_, e, out) in &cut[..l] {
            first.insert(e);
            attached[comp_of[out]] = true;
        }
        for (c, &a) in attached.iter().enumerate() {
            if a {
                first.union_with(&comp_edges[c]);
            }
        }
        let second = first.complement();
        (!second.is_empty()).then(|| EdgePartition::new(vec![first, second]))
    };
    let parts: Vec<EdgePartition> = par::map(mode, (1..=cut.len()).collect(), build).into_iter().flatten().collect();

    let m = g.m();
    let pairs: BTreeSet<usize> = parts.iter().map(|p| p.parts[0].len().min(m - p.parts[0].len())).collect();
    let report = PathCutReport {
        n,
        m,
        average_degree: g.average_degree(),
        core_size: core.len(),
        delta,
        t,
        path,
        m_cut: cut.len(),
        emitted: parts.len(),
        distinct_pairs: pairs.len(),
    };
    Ok((parts, report))
}

/// The `t` consecutive path vertices with the most edges leaving them
/// (earliest window on ties).
fn best_window(g: &Graph, path: &[usize], t: usize) -> Vec<usize> {
    let t = t.min(path.len());
    let mut best = (0, 0);
    for start in 0..=path.len() - t {
        let w = &path[start..start + t];
        let inside = VertexSet::from_iter(g.n(), w.iter().copied());
        let out: usize = w.iter().map(|&v| g.neighbors(v).iter().filter(|&&(x, _)| !inside.contains(x)).count()).sum();
        if out > best.0 || start == 0 {
            best = (out, start);
        }
    }
    path[best.1..best.1 + t].to_vec()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Graph {
        let e: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Graph::new(n, &e).unwrap()
    }

    #[test]
    fn k6_counts() {
        let g = complete(6);
        let (parts, r) = path_cut_partitions(&g).unwrap();
        assert_eq!((r.delta, r.t), (5, 3));
        assert_eq!(r.m_cut, 9);
        assert!(r.distinct_pairs >= 3);
        assert!(parts.iter().all(|p| p.is_valid(&g)));
    }

    #[test]
    fn c6_and_trees_emit_valid_partitions() {
        let c6 = Graph::new(6, &(0..6).map(|i| (i, (i + 1) % 6)).collect::<Vec<_>>()).unwrap();
        let (parts, r) = path_cut_partitions(&c6).unwrap();
        assert!(parts.iter().all(|p| p.is_valid(&c6)));
        assert!(r.distinct_pairs >= r.m_cut.div_ceil(2));
        let star = Graph::new(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let (parts, _) = path_cut_partitions(&star).unwrap();
        assert!(!parts.is_empty());
        assert!(parts.iter().all(|p| p.is_valid(&star)));
    }

    #[test]
    fn disconnected_is_rejected() {
        let g = Graph::new(3, &[(0, 1)]).unwrap();
        assert_eq!(path_cut_partitions(&g).unwrap_err(), Error::Disconnected);
    }
}
