use std::collections::BTreeSet;

use serde::Serialize;

use super::cut::attach;
use super::dense::{dense_core, long_path};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::par::{self, Parallelism};
use crate::partition::VertexPartition;

/// Above this many prefix tuples the pipeline refuses.
pub const MAX_TUPLES: usize = 1_000_000;

#[derive(Debug, Clone, Serialize)]
pub struct OrderedReport {
    pub k: usize,
    pub core_size: usize,
    pub path: Vec<usize>,
    pub subpath_lengths: Vec<usize>,
    pub attempted: usize,
    /// tuples whose last part was empty
    pub skipped_empty: usize,
    pub succeeded: usize,
    /// ordered size vectors of the emitted partitions are pairwise distinct
    pub distinct: bool,
}

pub fn ordered_vertex_partitions(g: &Graph, k: usize) -> Result<(Vec<VertexPartition>, OrderedReport)> {
    ordered_vertex_partitions_with(g, k, Parallelism::default())
}

/// Prefixes of `k − 1` consecutive subpaths of a long core path, the rest
/// of the core as part `k`, outside components attached where they touch.
pub fn ordered_vertex_partitions_with(
    g: &Graph,
    k: usize,
    mode: Parallelism,
) -> Result<(Vec<VertexPartition>, OrderedReport)> {
    if k < 2 {
        return Err(Error::OutOfRange { value: k as u64, lo: 2, hi: u64::MAX });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    let core = dense_core(g);
    let sub = core.induced(g);
    let path: Vec<usize> = long_path(&sub.graph).into_iter().map(|v| sub.vertex_map[v]).collect();
    if path.len() < k - 1 {
        return Err(Error::TooSmall { needed: k - 1, have: path.len() });
    }
    let chunk = path.len() / (k - 1);
    let subpaths: Vec<&[usize]> =
        (0..k - 1).map(|i| if i + 2 == k { &path[i * chunk..] } else { &path[i * chunk..(i + 1) * chunk] }).collect();
    let lengths: Vec<usize> = subpaths.iter().map(|p| p.len()).collect();
    let total = lengths.iter().try_fold(1usize, |acc, &l| acc.checked_mul(l).filter(|&x| x <= MAX_TUPLES));
    let Some(total) = total else {
        return Err(Error::TooLarge(format!("prefix tuples over subpaths of lengths {lengths:?}")));
    };

    let tuples: Vec<Vec<usize>> = (0..total)
        .map(|mut idx| {
            let mut t = vec![0; k - 1];
            for i in (0..k - 1).rev() {
                t[i] = idx % lengths[i] + 1;
                idx /= lengths[i];
            }
            t
        })
        .collect();

    let build = |a: Vec<usize>| -> (bool, Option<VertexPartition>) {
        let mut parts: Vec<VertexSet> =
            (0..k - 1).map(|i| VertexSet::from_iter(n, subpaths[i][..a[i]].iter().copied())).collect();
        let mut last = core.vertices.clone();
        for p in &parts {
            last.difference_with(p);
        }
        if last.is_empty() {
            return (true, None);
        }
        if !g.is_connected_vertex_set(&last).unwrap_or(false) {
            return (false, None);
        }
        parts.push(last);
        (false, Some(attach(g, parts)))
    };
    let results = par::map(mode, tuples, build);
    let skipped_empty = results.iter().filter(|r| r.0).count();
    let parts: Vec<VertexPartition> = results.into_iter().filter_map(|r| r.1).collect();
    let vectors: BTreeSet<Vec<usize>> = parts.iter().map(VertexPartition::sizes).collect();
    let report = OrderedReport {
        k,
        core_size: core.len(),
        path,
        subpath_lengths: lengths,
        attempted: total,
        skipped_empty,
        succeeded: parts.len(),
        distinct: vectors.len() == parts.len(),
    };
    Ok((parts, report))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Graph {
        let e: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Graph::new(n, &e).unwrap()
    }

    #[test]
    fn k6_all_but_full_prefix_succeed() {
        let g = complete(6);
        let (parts, r) = ordered_vertex_partitions(&g, 2).unwrap();
        assert_eq!(r.attempted, 6);
        assert_eq!(r.skipped_empty, 1);
        assert_eq!(r.succeeded, 5);
        assert!(r.distinct);
        assert!(parts.iter().all(|p| p.is_valid(&g)));
    }

    #[test]
    fn cycle_and_path() {
        let c8 = Graph::new(8, &(0..8).map(|i| (i, (i + 1) % 8)).collect::<Vec<_>>()).unwrap();
        let (parts, r) = ordered_vertex_partitions(&c8, 2).unwrap();
        assert!(parts.iter().all(|p| p.is_valid(&c8)));
        assert!(r.succeeded.div_ceil(2) <= 4);
        let p5 = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let (parts, r) = ordered_vertex_partitions(&p5, 3).unwrap();
        assert!(r.succeeded > 0);
        assert!(parts.iter().all(|p| p.is_valid(&p5) && p.k() == 3));
    }
}
