//! Nested split sequences of trees and the partition families built on them.
//!
//! A split sequence of a tree `T` rooted at `v` is a list of triples
//! `(A_i, B_i, v_i)` with `A_i ∩ B_i = {v_i}`, `A_i ∪ B_i = V(T)`, both sides
//! connected, `A` strictly shrinking and `B` strictly growing. It is built
//! greedily: peel the components of `T − v` one by one, keeping a largest
//! component for last, then recurse into it from the neighbour of `v`.

use serde::Serialize;

use crate::arith::TTable;
use crate::error::{Error, Result};
use crate::graph::{Graph, RootedTree, VertexSet};
use crate::partition::{EdgePartition, SizeProfile};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Split {
    pub a: VertexSet,
    pub b: VertexSet,
    pub v: usize,
}

#[derive(Debug, Clone, Default)]
pub struct SplitSequence {
    pub items: Vec<Split>,
}

#[derive(Serialize)]
struct SplitJson {
    a: Vec<usize>,
    b: Vec<usize>,
    v: usize,
}

impl SplitSequence {
    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let items: Vec<SplitJson> =
            self.items.iter().map(|s| SplitJson { a: s.a.to_vec(), b: s.b.to_vec(), v: s.v }).collect();
        serde_json::json!({ "length": self.len(), "items": items })
    }

    /// Checks the four defining conditions; the length bound is checked
    /// against `ttable`.
    pub fn check(&self, tree: &Graph, root: usize, ttable: &TTable) -> std::result::Result<(), String> {
        let n = tree.n();
        let full = VertexSet::full(n);
        let Some(first) = self.items.first() else {
            return Err("empty sequence".into());
        };
        if first.v != root {
            return Err(format!("v_1 = {} but root is {root}", first.v));
        }
        for (i, s) in self.items.iter().enumerate() {
            let mut meet = s.a.clone();
            meet.difference_with(&s.b.complement());
            if meet.to_vec() != vec![s.v] {
                return Err(format!("item {i}: A ∩ B = {meet:?}, expected {{{}}}", s.v));
            }
            let mut join = s.a.clone();
            join.union_with(&s.b);
            if join != full {
                return Err(format!("item {i}: A ∪ B ≠ V"));
            }
            if !tree.is_connected_vertex_set(&s.a).unwrap_or(false)
                || !tree.is_connected_vertex_set(&s.b).unwrap_or(false)
            {
                return Err(format!("item {i}: a side is disconnected"));
            }
        }
        for (i, s) in self.items.iter().enumerate() {
            for later in &self.items[i + 1..] {
                if !later.b.contains(s.v) {
                    return Err(format!("v_{} not in a later B", i + 1));
                }
            }
        }
        for (i, w) in self.items.windows(2).enumerate() {
            let strict = |x: &VertexSet, y: &VertexSet| x.is_subset(y) && x.len() < y.len();
            if !strict(&w[1].a, &w[0].a) {
                return Err(format!("A_{} does not strictly contain A_{}", i + 1, i + 2));
            }
            if !strict(&w[0].b, &w[1].b) {
                return Err(format!("B_{} is not strictly inside B_{}", i + 1, i + 2));
            }
        }
        let bound = ttable.get(n).map_err(|e| e.to_string())? as usize + 1;
        if self.len() < bound {
            return Err(format!("length {} < t({n}) + 1 = {bound}", self.len()));
        }
        Ok(())
    }
}

/// Split sequence of `t` rooted at `t.root()`.
pub fn nested_split_sequence(t: &RootedTree) -> SplitSequence {
    let n = t.n();
    let children = t.children();
    let size = t.subtree_sizes();
    let order = t.preorder();
    let mut min_id: Vec<usize> = (0..n).collect();
    for &v in order.iter().rev() {
        if let Some(p) = t.parent(v) {
            min_id[p] = min_id[p].min(min_id[v]);
        }
    }
    let subtree = |c: usize| {
        let mut s = VertexSet::new(n);
        let mut stack = vec![c];
        while let Some(x) = stack.pop() {
            s.insert(x);
            stack.extend(&children[x]);
        }
        s
    };

    let mut items = Vec::new();
    let mut v = t.root();
    let mut current = VertexSet::full(n);
    let mut outside = VertexSet::new(n);
    loop {
        let mut comps = children[v].clone();
        if comps.is_empty() {
            items.push(Split { a: current, b: VertexSet::full(n), v });
            break;
        }
        // smallest-min-id first, except a largest component goes last
        comps.sort_by_key(|&c| min_id[c]);
        let big =
            *comps.iter().max_by(|&&x, &&y| size[x].cmp(&size[y]).then(min_id[y].cmp(&min_id[x]))).expect("nonempty");
        comps.retain(|&c| c != big);
        comps.push(big);

        let mut a = current.clone();
        let mut b = outside.clone();
        b.insert(v);
        for (i, &c) in comps.iter().enumerate() {
            items.push(Split { a: a.clone(), b: b.clone(), v });
            if i + 1 < comps.len() {
                let d = subtree(c);
                a.difference_with(&d);
                b.union_with(&d);
            }
        }
        let next = subtree(big);
        let mut rest = current;
        rest.difference_with(&next);
        outside.union_with(&rest);
        current = next;
        v = big;
    }
    SplitSequence { items }
}

/// Split sequence of `tree[part]` rooted at `root`, expressed in host ids.
/// `B` sides are not extended.
fn split_sequence_within(tree: &Graph, part: &VertexSet, root: usize) -> Vec<Split> {
    let sub = tree.induced(part);
    let local_root = sub.vertex_map.binary_search(&root).expect("root inside part");
    let rooted = RootedTree::new(sub.graph.clone(), local_root).expect("induced subtree of a tree");
    let n = tree.n();
    nested_split_sequence(&rooted)
        .items
        .into_iter()
        .map(|s| Split { a: sub.lift_vertices(&s.a, n), b: sub.lift_vertices(&s.b, n), v: sub.vertex_map[s.v] })
        .collect()
}

/// Two-part partitions `(E \ E(G[B_i]), E(G[B_i]))` for every split of a
/// spanning tree of `g`, skipping splits where either side has no edges.
pub fn two_partitions_from_splits(g: &Graph, t: &RootedTree) -> Result<Vec<EdgePartition>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let seq = nested_split_sequence(t);
    Ok(seq.items.iter().filter_map(|s| split_partition(g, &s.b)).collect())
}

fn split_partition(g: &Graph, b: &VertexSet) -> Option<EdgePartition> {
    let inner = g.induced_edges(b);
    let outer = inner.complement();
    (!inner.is_empty() && !outer.is_empty()).then(|| EdgePartition::new(vec![outer, inner]))
}

/// Vertex minimising the largest component of `T − v`; ties by smallest id.
pub fn centroid(tree: &Graph) -> usize {
    let t = RootedTree::new(tree.clone(), 0).expect("centroid needs a tree");
    let (_, v) = heaviest_components(&t);
    v
}

fn heaviest_components(t: &RootedTree) -> (usize, usize) {
    let n = t.n();
    let size = t.subtree_sizes();
    let children = t.children();
    (0..n)
        .map(|v| {
            let up = n - size[v];
            let worst = children[v].iter().map(|&c| size[c]).chain([up]).max().unwrap_or(0);
            (worst, v)
        })
        .min()
        .expect("nonempty tree")
}

/// Components of `T − v` as vertex sets, largest first (ties by smallest id).
fn branches(tree: &Graph, v: usize) -> Vec<VertexSet> {
    let mut comps = tree.components(&VertexSet::from_iter(tree.n(), [v]));
    comps.sort_by(|x, y| y.len().cmp(&x.len()).then(x.first().cmp(&y.first())));
    comps
}

/// Connected k-edge-partitions with pairwise distinct ordered size tuples,
/// built by splitting a spanning tree at its centroid and recursing on the
/// growing side.
pub fn recursive_k_partitions(g: &Graph, k: usize) -> Result<Vec<EdgePartition>> {
    if k < 2 {
        return Err(Error::OutOfRange { value: k as u64, lo: 2, hi: u64::MAX });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.m() < k {
        return Err(Error::TooSmall { needed: k, have: g.m() });
    }
    Ok(recursive_inner(g, k))
}

fn recursive_inner(g: &Graph, k: usize) -> Vec<EdgePartition> {
    if g.m() < k {
        return Vec::new();
    }
    if k == 1 {
        return vec![EdgePartition::new(vec![g.all_edges()])];
    }
    let t = g.spanning_tree(0).expect("connected");
    if k == 2 {
        return two_partitions_from_splits(g, &t).expect("connected");
    }
    let n = g.n();
    let tree = t.graph();
    let c = centroid(tree);
    let comps = branches(tree, c);
    let (a1, b1) = centroid_halves(n, c, &comps);

    let mut out = Vec::new();
    for s in split_sequence_within(tree, &a1, c) {
        let mut b = s.b;
        b.union_with(&b1);
        let inner = g.induced_edges(&b);
        let outer = inner.complement();
        if outer.is_empty() {
            continue;
        }
        let sub = g.induced(&b);
        for p in recursive_inner(&sub.graph, k - 1) {
            let mut parts = vec![outer.clone()];
            parts.extend(p.parts.iter().map(|e| sub.lift_edges(e, g.m())));
            out.push(EdgePartition::new(parts));
        }
    }
    out
}

/// `(A_1, B_1)` around the centroid: `A_1` gathers whole branches so that
/// `n/3 ≤ |A_1| ≤ n/2` where possible.
fn centroid_halves(n: usize, c: usize, comps: &[VertexSet]) -> (VertexSet, VertexSet) {
    let mut a = VertexSet::from_iter(n, [c]);
    let mut b = a.clone();
    if comps.len() <= 2 {
        // the smaller branch goes to A
        if let Some(small) = comps.get(1).or(comps.first()) {
            a.union_with(small);
        }
        if comps.len() == 2 {
            b.union_with(&comps[0]);
        }
        return (a, b);
    }
    let (prefix, suffix) = grouping(n, comps);
    let fits = |g: &[usize]| {
        let cnt: usize = g.iter().map(|&i| comps[i].len()).sum::<usize>() + 1;
        3 * cnt >= n && 2 * cnt <= n
    };
    let size = |g: &[usize]| g.iter().map(|&i| comps[i].len()).sum::<usize>();
    let (ga, gb) = if fits(&prefix) {
        (prefix, suffix)
    } else if fits(&suffix) || size(&suffix) < size(&prefix) {
        (suffix, prefix)
    } else {
        (prefix, suffix)
    };
    for i in ga {
        a.union_with(&comps[i]);
    }
    for i in gb {
        b.union_with(&comps[i]);
    }
    (a, b)
}

/// Branch indices `(1..=j, j+1..)` for the smallest `j` whose prefix sum of
/// branch sizes reaches `(n−1)/3`. Branches must be sorted largest first.
fn grouping(n: usize, comps: &[VertexSet]) -> (Vec<usize>, Vec<usize>) {
    let mut sum = 0;
    let mut j = comps.len();
    for (i, c) in comps.iter().enumerate() {
        sum += c.len();
        if 3 * sum >= n - 1 {
            j = i + 1;
            break;
        }
    }
    ((0..j).collect(), (j..comps.len()).collect())
}

/// Exact `P(T,2)` profile of a tree. A connected 2-edge-partition of a tree
/// meets in one vertex `w` and splits the branches at `w`, so the profile is
/// the set of `{s, m−s}` for subset sums `s` of branch edge counts.
pub fn tree_exact_p2(tree: &Graph) -> Result<SizeProfile> {
    let t = RootedTree::new(tree.clone(), 0)?;
    let n = t.n();
    let m = n - 1;
    let size = t.subtree_sizes();
    let children = t.children();
    let words = m / 64 + 1;
    let mut reach = vec![0u64; words];
    let mut dp = vec![0u64; words];
    for w in 0..n {
        dp.iter_mut().for_each(|x| *x = 0);
        dp[0] = 1;
        let up = (w != t.root()).then(|| n - size[w]);
        for b in children[w].iter().map(|&c| size[c]).chain(up) {
            shift_or(&mut dp, b, m);
        }
        for (r, d) in reach.iter_mut().zip(&dp) {
            *r |= d;
        }
    }
    let bit = |s: usize| reach[s / 64] >> (s % 64) & 1 == 1;
    Ok((1..=m / 2).filter(|&s| bit(s) || bit(m - s)).map(|s| vec![m - s, s]).collect())
}

/// `dp |= dp << shift`, truncated to bits `0..=max`.
fn shift_or(dp: &mut [u64], shift: usize, max: usize) {
    let (ws, bs) = (shift / 64, shift % 64);
    for i in (0..dp.len()).rev() {
        if i < ws {
            break;
        }
        let mut v = dp[i - ws] << bs;
        if bs > 0 && i > ws {
            v |= dp[i - ws - 1] >> (64 - bs);
        }
        dp[i] |= v;
    }
    let extra = (max + 1) % 64;
    if extra != 0 {
        let last = dp.len() - 1;
        dp[last] &= (1u64 << extra) - 1;
    }
}

/// Which case of the tree construction applied.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TreeCase {
    /// an edge splits the tree into two equal halves
    BalancedEdge { u: usize, v: usize },
    /// no balanced edge; the unique sink of the orientation towards larger sides
    Sink { v: usize },
}

/// Connected 2-edge-partitions of a tree with strictly increasing second
/// parts, at least `t(n) − 2` of them.
pub fn tree_lower_bound_partitions(tree: &Graph) -> Result<(Vec<EdgePartition>, TreeCase)> {
    let n = tree.n();
    if n < 2 {
        return Err(Error::TooSmall { needed: 2, have: n });
    }
    let t = RootedTree::new(tree.clone(), 0)?;
    let size = t.subtree_sizes();

    let balanced = n.is_multiple_of(2).then(|| (0..n).find(|&x| t.parent(x).is_some() && 2 * size[x] == n)).flatten();
    let (part, root, rest, case) = if let Some(x) = balanced {
        let p = t.parent(x).unwrap();
        let (u, v) = (p.min(x), p.max(x));
        let cut = tree.without_edge(tree.edge_between(u, v).unwrap());
        let comps = cut.components(&VertexSet::new(n));
        let c1 = comps.iter().find(|c| c.contains(u)).unwrap().clone();
        let c2 = c1.complement();
        (c1, u, c2, TreeCase::BalancedEdge { u, v })
    } else {
        let v = centroid(tree);
        let comps = branches(tree, v);
        let mut tp = VertexSet::from_iter(n, [v]);
        if 3 * comps[0].len() >= n - 1 {
            tp.union_with(&comps[0]);
        } else {
            let (prefix, suffix) = grouping(n, &comps);
            let cnt = |g: &[usize]| g.iter().map(|&i| comps[i].len()).sum::<usize>() + 1;
            let fits = |g: &[usize]| 3 * cnt(g) >= n - 1 && 2 * cnt(g) <= n;
            let pick = if fits(&prefix) || (!fits(&suffix) && cnt(&prefix) <= cnt(&suffix)) { prefix } else { suffix };
            for i in pick {
                tp.union_with(&comps[i]);
            }
        }
        let mut rest = tp.complement();
        rest.insert(v);
        (tp, v, rest, TreeCase::Sink { v })
    };

    let mut out = Vec::new();
    for s in split_sequence_within(tree, &part, root) {
        let mut b = s.b;
        b.union_with(&rest);
        if let Some(p) = split_partition(tree, &b) {
            out.push(p);
        }
    }
    Ok((out, case))
}
