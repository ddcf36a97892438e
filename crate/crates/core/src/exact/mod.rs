//! Exact oracles: edge and vertex partition profiles, the connected
//! maximum cut, and connected vertex partitions with prescribed sizes.

mod search;

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{is_biconnected, st_numbering, EdgeSet, Graph, VertexSet};
use crate::par::{self, Parallelism};
use crate::partition::{canonical, EdgePartition, SizeProfile, VertexPartition};
use search::{ones, popcount, Budget, Counter, Flow, MaskGraph, Search, MAX_ELEMENTS};

/// Above this many vertices the size-constrained partition search refuses.
pub const GL_SEARCH_LIMIT: usize = 16;

const SPLIT_DEPTH: usize = 8;

#[derive(Debug, Clone, Default)]
pub struct ExactConfig {
    /// Element limit; `None` uses the per-`k` default.
    pub max_elements: Option<usize>,
    /// Search-node limit across all threads.
    pub max_nodes: Option<u64>,
    pub parallelism: Parallelism,
}

impl ExactConfig {
    pub fn with_max_elements(mut self, m: usize) -> Self {
        self.max_elements = Some(m);
        self
    }

    pub fn with_parallelism(mut self, p: Parallelism) -> Self {
        self.parallelism = p;
        self
    }
}

/// Default edge limit `M_k`.
pub fn default_edge_limit(k: usize) -> usize {
    match k {
        0..=2 => 40,
        3 => 20,
        _ => 16,
    }
}

/// Default vertex limit `N_k`.
pub fn default_vertex_limit(k: usize) -> usize {
    match k {
        0..=2 => 24,
        3 => 18,
        _ => 14,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Universe {
    Edges,
    Vertices,
}

/// An exact profile with one witness per tuple.
#[derive(Debug, Clone, Serialize)]
pub struct ExactProfile {
    pub universe: Universe,
    pub k: usize,
    pub profile: SizeProfile,
    /// Parts as element-id lists, keyed by canonical tuple.
    pub witnesses: BTreeMap<Vec<usize>, Vec<Vec<usize>>>,
    /// Fewer elements than parts: the profile is empty by convention.
    pub degenerate: bool,
    pub nodes: u64,
}

impl ExactProfile {
    pub fn value(&self) -> usize {
        self.profile.len()
    }

    pub fn edge_witness(&self, g: &Graph, tuple: &[usize]) -> Option<EdgePartition> {
        let w = self.witnesses.get(&canonical(tuple.to_vec()))?;
        (self.universe == Universe::Edges)
            .then(|| EdgePartition::new(w.iter().map(|p| EdgeSet::from_iter(g.m(), p.iter().copied())).collect()))
    }

    pub fn vertex_witness(&self, g: &Graph, tuple: &[usize]) -> Option<VertexPartition> {
        let w = self.witnesses.get(&canonical(tuple.to_vec()))?;
        (self.universe == Universe::Vertices)
            .then(|| VertexPartition::new(w.iter().map(|p| VertexSet::from_iter(g.n(), p.iter().copied())).collect()))
    }

    /// Every witness revalidated against `g`.
    pub fn witnesses_valid(&self, g: &Graph) -> bool {
        self.profile.len() == self.witnesses.len()
            && self.witnesses.keys().all(|t| match self.universe {
                Universe::Edges => self.edge_witness(g, t).is_some_and(|p| p.is_valid(g) && p.canonical_sizes() == *t),
                Universe::Vertices => {
                    self.vertex_witness(g, t).is_some_and(|p| p.is_valid(g) && p.canonical_sizes() == *t)
                }
            })
    }
}

/// A connected vertex partition and its number of crossing edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutWitness {
    pub partition: VertexPartition,
    pub cut_size: usize,
}

impl CutWitness {
    pub fn new(g: &Graph, partition: VertexPartition) -> Self {
        let cut_size = g.cut_size(&partition.part_of(g.n()));
        CutWitness { partition, cut_size }
    }

    /// Parts valid and the stored cut equal to a fresh recount.
    pub fn is_valid(&self, g: &Graph) -> bool {
        self.partition.is_valid(g) && g.cut_size(&self.partition.part_of(g.n())) == self.cut_size
    }
}

fn check_limit(have: usize, limit: usize, what: &str) -> Result<()> {
    let limit = limit.min(MAX_ELEMENTS);
    if have > limit {
        return Err(Error::TooLarge(format!("{have} {what} exceeds the limit of {limit}")));
    }
    Ok(())
}

fn require_k(k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::OutOfRange { value: 0, lo: 1, hi: u64::MAX });
    }
    Ok(())
}

/// Exact set of canonical size tuples of connected `k`-edge partitions.
pub fn edge_partition_profile(g: &Graph, k: usize, cfg: &ExactConfig) -> Result<ExactProfile> {
    require_k(k)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    check_limit(g.m(), cfg.max_elements.unwrap_or(default_edge_limit(k)), "edges")?;
    profile(&MaskGraph::edges(g), Universe::Edges, k, cfg)
}

/// Exact set of canonical size tuples of connected `k`-vertex partitions.
pub fn vertex_partition_profile(g: &Graph, k: usize, cfg: &ExactConfig) -> Result<ExactProfile> {
    require_k(k)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    check_limit(g.n(), cfg.max_elements.unwrap_or(default_vertex_limit(k)), "vertices")?;
    profile(&MaskGraph::vertices(g), Universe::Vertices, k, cfg)
}

fn profile(mg: &MaskGraph, universe: Universe, k: usize, cfg: &ExactConfig) -> Result<ExactProfile> {
    let total = mg.len();
    let mut out = ExactProfile {
        universe,
        k,
        profile: SizeProfile::new(),
        witnesses: BTreeMap::new(),
        degenerate: total < k,
        nodes: 0,
    };
    if out.degenerate {
        return Ok(out);
    }
    let budget = Budget::new(cfg.max_nodes);
    let tuples = integer_partitions(total, k);
    let found = par::map(cfg.parallelism, tuples, |t| -> Result<(Vec<usize>, Option<Vec<u64>>)> {
        let mut ctr = budget.counter();
        let mut sizes = t.clone();
        let mut parts = Vec::with_capacity(k);
        let ok = place(mg, mg.full(), &mut sizes, &mut ctr, &mut parts)?;
        ctr.flush()?;
        Ok((t, ok.then_some(parts)))
    });
    for r in found {
        let (t, parts) = r?;
        if let Some(parts) = parts {
            out.profile.insert(t.clone());
            out.witnesses.insert(t, parts.into_iter().map(|p| ones(p).collect()).collect());
        }
    }
    out.nodes = budget.total();
    Ok(out)
}

/// All partitions of `n` into exactly `k` positive parts, descending.
fn integer_partitions(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, k: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == 0 {
            if n == 0 {
                out.push(cur.clone());
            }
            return;
        }
        if n < k {
            return;
        }
        let hi = max.min(n - (k - 1));
        let lo = n.div_ceil(k);
        for first in (lo..=hi).rev() {
            cur.push(first);
            rec(n - first, k - 1, first, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, k, n, &mut Vec::new(), &mut out);
    out
}

/// Splits `universe` into connected parts with exactly the multiset
/// `sizes`. The part holding the lowest element is tried with each distinct
/// size, smallest first.
fn place(
    mg: &MaskGraph,
    universe: u64,
    sizes: &mut Vec<usize>,
    ctr: &mut Counter<'_>,
    parts: &mut Vec<u64>,
) -> Result<bool> {
    if sizes.len() == 1 {
        if popcount(universe) == sizes[0] && mg.is_connected(universe) {
            parts.push(universe);
            return Ok(true);
        }
        return Ok(false);
    }
    let mut tried: Vec<usize> = Vec::new();
    for i in (0..sizes.len()).rev() {
        let v = sizes[i];
        if tried.contains(&v) {
            continue;
        }
        tried.push(v);
        sizes.remove(i);
        let search = Search::new(mg, universe, sizes.len()).with_size(v);
        let mut found = false;
        search.run(search.root(), ctr, &mut |s, ctr| {
            parts.push(s);
            if place(mg, universe & !s, sizes, ctr, parts)? {
                found = true;
                return Ok(Flow::Stop);
            }
            parts.pop();
            Ok(Flow::Continue)
        })?;
        ctr.check()?;
        sizes.insert(i, v);
        if found {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Maximum number of crossing edges over connected `r`-vertex partitions.
pub fn cmc(g: &Graph, r: usize, cfg: &ExactConfig) -> Result<CutWitness> {
    if r < 2 {
        return Err(Error::OutOfRange { value: r as u64, lo: 2, hi: u64::MAX });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.n() < r {
        return Err(Error::TooSmall { needed: r, have: g.n() });
    }
    check_limit(g.n(), cfg.max_elements.unwrap_or(default_vertex_limit(r)), "vertices")?;
    let mg = MaskGraph::vertices(g);
    let budget = Budget::new(cfg.max_nodes);
    let top = Search::new(&mg, mg.full(), r - 1);
    let states = top.frontier_states(SPLIT_DEPTH);
    let results = par::map(cfg.parallelism, states, |st| -> Result<Option<(usize, Vec<u64>)>> {
        let mut ctr = budget.counter();
        let mut best: Option<(usize, Vec<u64>)> = None;
        let mut parts = Vec::with_capacity(r);
        top.run(st, &mut ctr, &mut |s, ctr| {
            parts.push(s);
            best_cut(&mg, mg.full() & !s, r - 1, ctr, &mut parts, &mut best)?;
            parts.pop();
            Ok(Flow::Continue)
        })?;
        ctr.flush()?;
        ctr.check()?;
        Ok(best)
    });
    let mut best: Option<(usize, Vec<u64>)> = None;
    for res in results {
        if let Some((c, p)) = res? {
            if best.as_ref().is_none_or(|b| c > b.0) {
                best = Some((c, p));
            }
        }
    }
    let (_, parts) = best.ok_or_else(|| Error::ConstructionFailed("no connected partition".into()))?;
    let partition = VertexPartition::new(parts.into_iter().map(|p| VertexSet::from_iter(g.n(), ones(p))).collect());
    Ok(CutWitness::new(g, partition))
}

fn best_cut(
    mg: &MaskGraph,
    universe: u64,
    p: usize,
    ctr: &mut Counter<'_>,
    parts: &mut Vec<u64>,
    best: &mut Option<(usize, Vec<u64>)>,
) -> Result<()> {
    if p == 1 {
        if mg.is_connected(universe) {
            parts.push(universe);
            let total: usize = mg.adj.iter().map(|a| popcount(*a)).sum::<usize>() / 2;
            let cut = total - parts.iter().map(|&x| mg.internal_edges(x)).sum::<usize>();
            if best.as_ref().is_none_or(|b| cut > b.0) {
                *best = Some((cut, parts.clone()));
            }
            parts.pop();
        }
        return Ok(());
    }
    let search = Search::new(mg, universe, p - 1);
    search.run(search.root(), ctr, &mut |s, ctr| {
        parts.push(s);
        best_cut(mg, universe & !s, p - 1, ctr, parts, best)?;
        parts.pop();
        Ok(Flow::Continue)
    })?;
    Ok(())
}

/// A connected vertex partition with part `i` of size `sizes[i]`, or
/// `None` when none exists.
pub fn gyori_lovasz(g: &Graph, sizes: &[usize], cfg: &ExactConfig) -> Result<Option<VertexPartition>> {
    let n = g.n();
    if sizes.is_empty() || sizes.contains(&0) || sizes.iter().sum::<usize>() != n {
        return Err(Error::SizeMismatch { sizes: sizes.to_vec(), n });
    }
    if sizes.len() == 1 {
        return Ok(g.is_connected().then(|| VertexPartition::new(vec![VertexSet::full(n)])));
    }
    if sizes.len() == 2 && is_biconnected(g) {
        let (s, t) = g.endpoints(0);
        let ord = st_numbering(g, s, t)?;
        let a = VertexSet::from_iter(n, ord[..sizes[0]].iter().copied());
        let b = VertexSet::from_iter(n, ord[sizes[0]..].iter().copied());
        return Ok(Some(VertexPartition::new(vec![a, b])));
    }
    check_limit(n, cfg.max_elements.unwrap_or(GL_SEARCH_LIMIT), "vertices")?;
    let mg = MaskGraph::vertices(g);
    let budget = Budget::new(cfg.max_nodes);
    let mut ctr = budget.counter();
    let mut ms = canonical(sizes.to_vec());
    let mut parts = Vec::new();
    if !place(&mg, mg.full(), &mut ms, &mut ctr, &mut parts)? {
        return Ok(None);
    }
    ctr.flush()?;
    // hand out found parts to the requested slots by size
    let mut slots: Vec<Option<VertexSet>> = vec![None; sizes.len()];
    for p in parts {
        let sz = popcount(p);
        let i = (0..sizes.len()).find(|&i| slots[i].is_none() && sizes[i] == sz).expect("sizes match");
        slots[i] = Some(VertexSet::from_iter(n, ones(p)));
    }
    Ok(Some(VertexPartition::new(slots.into_iter().map(Option::unwrap).collect())))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::new(n, e).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        g(n, &e)
    }

    fn complete(n: usize) -> Graph {
        let e: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        g(n, &e)
    }

    fn tuples(p: &ExactProfile) -> Vec<Vec<usize>> {
        p.profile.iter().cloned().collect()
    }

    #[test]
    fn integer_partitions_small() {
        assert_eq!(integer_partitions(5, 2), vec![vec![4, 1], vec![3, 2]]);
        assert_eq!(integer_partitions(6, 3), vec![vec![4, 1, 1], vec![3, 2, 1], vec![2, 2, 2]]);
        assert!(integer_partitions(2, 3).is_empty());
    }

    #[test]
    fn c4_edge_profile() {
        let p = edge_partition_profile(&cycle(4), 2, &ExactConfig::default()).unwrap();
        assert_eq!(tuples(&p), vec![vec![3, 1], vec![2, 2]]);
        assert!(p.witnesses_valid(&cycle(4)));
    }

    #[test]
    fn path_vertex_profiles() {
        let p4 = g(4, &[(0, 1), (1, 2), (2, 3)]);
        let cfg = ExactConfig::default();
        assert_eq!(tuples(&vertex_partition_profile(&p4, 3, &cfg).unwrap()), vec![vec![2, 1, 1]]);
        assert_eq!(tuples(&vertex_partition_profile(&p4, 2, &cfg).unwrap()), vec![vec![3, 1], vec![2, 2]]);
    }

    #[test]
    fn complete_graph_vertex_profile_is_everything() {
        for n in 2..8 {
            for k in 1..=n {
                let p = vertex_partition_profile(&complete(n), k, &ExactConfig::default()).unwrap();
                assert_eq!(tuples(&p), integer_partitions(n, k));
            }
        }
    }

    #[test]
    fn too_few_edges_is_empty_and_flagged() {
        let p = edge_partition_profile(&g(2, &[(0, 1)]), 2, &ExactConfig::default()).unwrap();
        assert!(p.degenerate);
        assert_eq!(p.value(), 0);
    }

    #[test]
    fn errors() {
        let d = g(3, &[(0, 1)]);
        let cfg = ExactConfig::default();
        assert_eq!(edge_partition_profile(&d, 2, &cfg).unwrap_err(), Error::Disconnected);
        assert!(matches!(
            vertex_partition_profile(&complete(10), 2, &cfg.clone().with_max_elements(8)),
            Err(Error::TooLarge(_))
        ));
        let budget = ExactConfig { max_nodes: Some(10), ..ExactConfig::default() };
        assert!(matches!(edge_partition_profile(&complete(7), 3, &budget), Err(Error::TooLarge(_))));
    }

    #[test]
    fn cmc_examples() {
        let cfg = ExactConfig::default();
        assert_eq!(cmc(&complete(4), 2, &cfg).unwrap().cut_size, 4);
        assert_eq!(cmc(&cycle(4), 2, &cfg).unwrap().cut_size, 2);
        let star = g(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]);
        let w = cmc(&star, 2, &cfg).unwrap();
        assert_eq!(w.cut_size, 1);
        assert!(w.is_valid(&star));
        assert_eq!(cmc(&complete(5), 3, &cfg).unwrap().cut_size, 8);
        assert!(matches!(cmc(&g(2, &[(0, 1)]), 3, &cfg), Err(Error::TooSmall { .. })));
    }

    #[test]
    fn gyori_lovasz_examples() {
        let cfg = ExactConfig::default();
        let c5 = cycle(5);
        let p = gyori_lovasz(&c5, &[2, 3], &cfg).unwrap().unwrap();
        assert_eq!(p.sizes(), vec![2, 3]);
        assert!(p.is_valid(&c5));
        let k4 = complete(4);
        assert!(gyori_lovasz(&k4, &[2, 2], &cfg).unwrap().unwrap().is_valid(&k4));
        let star = g(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]);
        assert_eq!(gyori_lovasz(&star, &[2, 3], &cfg).unwrap(), None);
        assert!(matches!(gyori_lovasz(&star, &[2, 2], &cfg), Err(Error::SizeMismatch { .. })));
        // search path keeps the requested slot order
        let p6 = g(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]);
        let p = gyori_lovasz(&p6, &[1, 3, 2], &cfg).unwrap().unwrap();
        assert_eq!(p.sizes(), vec![1, 3, 2]);
        assert!(p.is_valid(&p6));
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let g = complete(6);
        let a =
            edge_partition_profile(&g, 3, &ExactConfig::default().with_parallelism(Parallelism::Sequential)).unwrap();
        let b = edge_partition_profile(&g, 3, &ExactConfig::default().with_parallelism(Parallelism::Rayon)).unwrap();
        assert_eq!(a.profile, b.profile);
        assert_eq!(a.witnesses, b.witnesses);
        let a = cmc(&g, 3, &ExactConfig::default().with_parallelism(Parallelism::Sequential)).unwrap();
        let b = cmc(&g, 3, &ExactConfig::default().with_parallelism(Parallelism::Rayon)).unwrap();
        assert_eq!(a, b);
    }
}
