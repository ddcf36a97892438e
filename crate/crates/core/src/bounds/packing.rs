use std::collections::VecDeque;

use num_traits::ToPrimitive;
use serde::Serialize;

use super::dense::dense_core;
use crate::arith::count_partitions;
use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Graph};
use crate::par::{self, Parallelism};
use crate::partition::EdgePartition;

/// Above this many leftover distributions the packing pipeline refuses.
pub const MAX_DISTRIBUTIONS: usize = 1_000_000;

/// `k` edge-disjoint spanning trees and the edges they leave over.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreePacking {
    pub trees: Vec<EdgeSet>,
    pub leftover: EdgeSet,
}

/// `k` edge-disjoint forests of maximum total size, as edge-id lists.
pub fn pack_forests(g: &Graph, k: usize) -> Vec<EdgeSet> {
    let mut forests = Forests::new(g, k);
    for e in 0..g.m() {
        forests.augment(e);
    }
    forests.sets.into_iter().map(|f| EdgeSet::from_iter(g.m(), f)).collect()
}

/// Packs `k` edge-disjoint spanning trees by matroid-union augmentation,
/// inserting edges in id order.
pub fn spanning_tree_packing(g: &Graph, k: usize) -> Result<TreePacking> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let trees = pack_forests(g, k);
    if trees.iter().any(|t| t.len() + 1 != g.n()) {
        return Err(Error::PackingInfeasible { k });
    }
    let mut leftover = EdgeSet::full(g.m());
    for t in &trees {
        leftover.difference_with(t);
    }
    Ok(TreePacking { trees, leftover })
}

/// Exhaustive search for `k` edge-disjoint spanning trees. Only for tiny
/// graphs (at most 20 edges).
pub fn spanning_tree_packing_brute(g: &Graph, k: usize) -> Result<Option<Vec<EdgeSet>>> {
    if g.m() > 20 {
        return Err(Error::TooLarge(format!("{} edges exceeds the limit of 20", g.m())));
    }
    let need = g.n().saturating_sub(1);
    if k * need > g.m() {
        return Ok(None);
    }
    let mut uf: Vec<Vec<usize>> = vec![(0..g.n()).collect(); k];
    let mut sizes = vec![0usize; k];
    let mut assign: Vec<Option<usize>> = vec![None; g.m()];

    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        r
    }

    fn rec(
        g: &Graph,
        e: usize,
        need: usize,
        uf: &mut Vec<Vec<usize>>,
        sizes: &mut [usize],
        assign: &mut [Option<usize>],
    ) -> bool {
        let missing: usize = sizes.iter().map(|&s| need - s).sum();
        if missing == 0 {
            return true;
        }
        if g.m() - e < missing {
            return false;
        }
        let (u, v) = g.endpoints(e);
        for i in 0..sizes.len() {
            if sizes[i] == need {
                continue;
            }
            // symmetry: an empty forest only after the previous one started
            if sizes[i] == 0 && i > 0 && sizes[i - 1] == 0 {
                break;
            }
            let (a, b) = (find(&mut uf[i], u), find(&mut uf[i], v));
            if a != b {
                let saved = uf[i].clone();
                uf[i][a] = b;
                sizes[i] += 1;
                assign[e] = Some(i);
                if rec(g, e + 1, need, uf, sizes, assign) {
                    return true;
                }
                assign[e] = None;
                sizes[i] -= 1;
                uf[i] = saved;
            }
        }
        rec(g, e + 1, need, uf, sizes, assign)
    }

    if !rec(g, 0, need, &mut uf, &mut sizes, &mut assign) {
        return Ok(None);
    }
    Ok(Some((0..k).map(|i| EdgeSet::from_iter(g.m(), (0..g.m()).filter(|&e| assign[e] == Some(i)))).collect()))
}

struct Forests<'g> {
    g: &'g Graph,
    sets: Vec<Vec<usize>>,
    /// forest holding each edge
    owner: Vec<Option<usize>>,
}

impl<'g> Forests<'g> {
    fn new(g: &'g Graph, k: usize) -> Self {
        Forests { g, sets: vec![Vec::new(); k], owner: vec![None; g.m()] }
    }

    /// Edge ids of the path between `u` and `v` in forest `i`, if any.
    fn path(&self, i: usize, u: usize, v: usize) -> Option<Vec<usize>> {
        let n = self.g.n();
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        for &e in &self.sets[i] {
            let (a, b) = self.g.endpoints(e);
            adj[a].push((b, e));
            adj[b].push((a, e));
        }
        let mut via: Vec<Option<(usize, usize)>> = vec![None; n];
        let mut seen = vec![false; n];
        seen[u] = true;
        let mut queue = VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            if x == v {
                let mut out = Vec::new();
                let mut cur = v;
                while let Some((p, e)) = via[cur] {
                    out.push(e);
                    cur = p;
                }
                return Some(out);
            }
            for &(y, e) in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    via[y] = Some((x, e));
                    queue.push_back(y);
                }
            }
        }
        None
    }

    /// Breadth-first search for an exchange sequence that makes room for `e`.
    fn augment(&mut self, e: usize) -> bool {
        let k = self.sets.len();
        // label[x] = (edge that replaces x, forest x leaves)
        let mut label: Vec<Option<(usize, usize)>> = vec![None; self.g.m()];
        let mut visited = vec![false; self.g.m()];
        visited[e] = true;
        let mut queue = VecDeque::from([e]);
        while let Some(x) = queue.pop_front() {
            let (u, v) = self.g.endpoints(x);
            for i in 0..k {
                if self.owner[x] == Some(i) {
                    continue;
                }
                match self.path(i, u, v) {
                    None => {
                        self.apply(x, i, &label);
                        return true;
                    }
                    Some(cycle) => {
                        for y in cycle {
                            if !visited[y] {
                                visited[y] = true;
                                label[y] = Some((x, i));
                                queue.push_back(y);
                            }
                        }
                    }
                }
            }
        }
        false
    }

    fn apply(&mut self, last: usize, into: usize, label: &[Option<(usize, usize)>]) {
        let mut x = last;
        let mut target = into;
        loop {
            let from = self.owner[x];
            if let Some(f) = from {
                self.sets[f].retain(|&y| y != x);
            }
            self.sets[target].push(x);
            self.owner[x] = Some(target);
            match label[x] {
                Some((prev, forest)) => {
                    debug_assert_eq!(from, Some(forest));
                    x = prev;
                    target = forest;
                }
                None => break,
            }
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PackingReport {
    pub k: usize,
    pub average_degree: f64,
    pub core_size: usize,
    pub core_edges: usize,
    pub leftover: usize,
    pub emitted: usize,
    /// number of multisets of `k` nonnegative integers summing to `leftover`
    pub expected: String,
    /// whether `d(G) ≥ 8k`
    pub dense_regime: bool,
}

pub fn packing_partitions(g: &Graph, k: usize) -> Result<(Vec<EdgePartition>, PackingReport)> {
    packing_partitions_with(g, k, Parallelism::default())
}

/// `E_i = T_i ∪ A_i` over every distribution of the leftover edges of a
/// tree packing of the dense core.
pub fn packing_partitions_with(g: &Graph, k: usize, mode: Parallelism) -> Result<(Vec<EdgePartition>, PackingReport)> {
    if k < 2 {
        return Err(Error::OutOfRange { value: k as u64, lo: 2, hi: u64::MAX });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let core = dense_core(g);
    let sub = core.induced(g);
    let packing = spanning_tree_packing(&sub.graph, k)?;
    let m = g.m();
    let trees: Vec<EdgeSet> = packing.trees.iter().map(|t| sub.lift_edges(t, m)).collect();
    let leftover: Vec<usize> = sub.lift_edges(&packing.leftover, m).to_vec();
    let mut outside = EdgeSet::full(m);
    outside.difference_with(&EdgeSet::from_iter(m, sub.edge_map.iter().copied()));

    let expected = count_partitions(leftover.len(), k, true);
    if expected.to_usize().is_none_or(|c| c > MAX_DISTRIBUTIONS) {
        return Err(Error::TooLarge(format!("{expected} leftover distributions")));
    }
    let dists = distributions(leftover.len(), k);
    let parts = par::map(mode, dists, |a| {
        let mut start = 0;
        let parts = (0..k)
            .map(|i| {
                let mut p = trees[i].clone();
                for &e in &leftover[start..start + a[i]] {
                    p.insert(e);
                }
                start += a[i];
                if i == k - 1 {
                    p.union_with(&outside);
                }
                p
            })
            .collect();
        EdgePartition::new(parts)
    });
    let report = PackingReport {
        k,
        average_degree: g.average_degree(),
        core_size: core.len(),
        core_edges: sub.graph.m(),
        leftover: leftover.len(),
        emitted: parts.len(),
        expected: expected.to_string(),
        dense_regime: g.average_degree() >= 8.0 * k as f64,
    };
    Ok((parts, report))
}

/// Nondecreasing `k`-tuples of nonnegative integers summing to `total`.
fn distributions(total: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(left: usize, slots: usize, min: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if slots == 1 {
            if left >= min {
                cur.push(left);
                out.push(cur.clone());
                cur.pop();
            }
            return;
        }
        let mut a = min;
        while a * slots <= left {
            cur.push(a);
            rec(left - a, slots - 1, a, cur, out);
            cur.pop();
            a += 1;
        }
    }
    let mut out = Vec::new();
    rec(total, k, 0, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::SizeProfile;

    fn complete(n: usize) -> Graph {
        let e: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Graph::new(n, &e).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::new(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn distributions_small() {
        assert_eq!(distributions(2, 2), vec![vec![0, 2], vec![1, 1]]);
        assert_eq!(distributions(0, 3), vec![vec![0, 0, 0]]);
        assert_eq!(distributions(6, 3).len(), 7);
    }

    #[test]
    fn packing_examples() {
        let k4 = complete(4);
        let p = spanning_tree_packing(&k4, 2).unwrap();
        assert!(p.leftover.is_empty());
        assert!(p.trees.iter().all(|t| t.len() == 3 && k4.is_connected_edge_set(t).unwrap()));
        assert_eq!(spanning_tree_packing(&cycle(5), 2).unwrap_err(), Error::PackingInfeasible { k: 2 });
        let tree = Graph::new(4, &[(0, 1), (1, 2), (1, 3)]).unwrap();
        assert_eq!(spanning_tree_packing(&tree, 1).unwrap().trees[0].len(), 3);
    }

    #[test]
    fn k5_profiles() {
        let g = complete(5);
        let (parts, r) = packing_partitions(&g, 2).unwrap();
        assert_eq!(r.leftover, 2);
        let prof: SizeProfile = parts.iter().map(|p| p.sizes()).collect();
        let want: SizeProfile = [vec![6, 4], vec![5, 5]].into_iter().collect();
        assert_eq!(prof, want);
        assert!(parts.iter().all(|p| p.is_valid(&g)));
        assert_eq!(packing_partitions(&cycle(5), 2).unwrap_err(), Error::PackingInfeasible { k: 2 });
    }

    #[test]
    fn brute_force_agrees_on_small_cases() {
        for n in 2..=6 {
            for k in 1..=3 {
                let g = complete(n);
                if g.m() > 20 {
                    continue;
                }
                let fast = spanning_tree_packing(&g, k).is_ok();
                let slow = spanning_tree_packing_brute(&g, k).unwrap().is_some();
                assert_eq!(fast, slow, "K{n} k={k}");
            }
        }
    }
}
