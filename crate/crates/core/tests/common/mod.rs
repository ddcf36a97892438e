//! Brute-force oracles written against plain edge lists, sharing no code
//! with the library beyond `Graph` accessors.

#![allow(dead_code)]

use std::collections::BTreeSet;

use connpart::Graph;
use proptest::prelude::*;

/// Connected graph on `2..=max_n` vertices: a random tree plus a random
/// subset of the remaining pairs.
pub fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n)
        .prop_flat_map(|n| {
            let parents: Vec<_> = (1..n).map(|v| 0..v).collect();
            (Just(n), parents, prop::collection::vec(any::<bool>(), n * (n - 1) / 2))
        })
        .prop_map(|(n, parents, extra)| {
            let mut edges: BTreeSet<(usize, usize)> = parents.iter().enumerate().map(|(i, &p)| (p, i + 1)).collect();
            let all = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            for (pair, keep) in all.zip(extra) {
                if keep {
                    edges.insert(pair);
                }
            }
            Graph::new(n, &edges.into_iter().collect::<Vec<_>>()).unwrap()
        })
}

/// Random labelled tree on `2..=max_n` vertices.
pub fn tree(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| (Just(n), (1..n).map(|v| 0..v).collect::<Vec<_>>())).prop_map(|(n, parents)| {
        let edges: Vec<_> = parents.iter().enumerate().map(|(i, &p)| (p, i + 1)).collect();
        Graph::new(n, &edges).unwrap()
    })
}

pub fn complete(n: usize) -> Graph {
    let e: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Graph::new(n, &e).unwrap()
}

/// Connectivity of a vertex subset by flood fill over the edge list.
pub fn vertices_connected(g: &Graph, set: &[bool]) -> bool {
    let Some(start) = set.iter().position(|&b| b) else { return false };
    let mut seen = vec![false; g.n()];
    seen[start] = true;
    let mut changed = true;
    while changed {
        changed = false;
        for &(u, v) in g.edges() {
            if set[u] && set[v] && seen[u] != seen[v] {
                seen[u] = true;
                seen[v] = true;
                changed = true;
            }
        }
    }
    (0..g.n()).all(|v| !set[v] || seen[v])
}

/// Connectivity of the subgraph formed by the chosen edges.
pub fn edges_connected(g: &Graph, chosen: &[bool]) -> bool {
    let mut touched = vec![false; g.n()];
    let mut sub = Vec::new();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if chosen[e] {
            touched[u] = true;
            touched[v] = true;
            sub.push((u, v));
        }
    }
    if sub.is_empty() {
        return false;
    }
    let h = Graph::new(g.n(), &sub).unwrap();
    vertices_connected(&h, &touched)
}

/// Every assignment of `len` items to `k` labels in restricted-growth
/// form, so each set partition is produced once.
fn for_each_assignment(len: usize, k: usize, mut f: impl FnMut(&[usize])) {
    fn rec(a: &mut Vec<usize>, len: usize, k: usize, used: usize, f: &mut dyn FnMut(&[usize])) {
        if a.len() == len {
            if used == k {
                f(a);
            }
            return;
        }
        if k - used > len - a.len() {
            return;
        }
        for c in 0..(used + 1).min(k) {
            a.push(c);
            rec(a, len, k, used.max(c + 1), f);
            a.pop();
        }
    }
    rec(&mut Vec::new(), len, k, 0, &mut f);
}

fn sizes_desc(a: &[usize], k: usize) -> Vec<usize> {
    let mut s = vec![0; k];
    for &c in a {
        s[c] += 1;
    }
    s.sort_unstable_by(|x, y| y.cmp(x));
    s
}

pub fn edge_profile(g: &Graph, k: usize) -> BTreeSet<Vec<usize>> {
    let mut out = BTreeSet::new();
    for_each_assignment(g.m(), k, |a| {
        if (0..k).all(|c| edges_connected(g, &a.iter().map(|&x| x == c).collect::<Vec<_>>())) {
            out.insert(sizes_desc(a, k));
        }
    });
    out
}

pub fn vertex_profile(g: &Graph, k: usize) -> BTreeSet<Vec<usize>> {
    let mut out = BTreeSet::new();
    for_each_assignment(g.n(), k, |a| {
        if (0..k).all(|c| vertices_connected(g, &a.iter().map(|&x| x == c).collect::<Vec<_>>())) {
            out.insert(sizes_desc(a, k));
        }
    });
    out
}

pub fn max_connected_cut(g: &Graph, r: usize) -> usize {
    let mut best = 0;
    for_each_assignment(g.n(), r, |a| {
        if (0..r).all(|c| vertices_connected(g, &a.iter().map(|&x| x == c).collect::<Vec<_>>())) {
            best = best.max(g.edges().iter().filter(|&&(u, v)| a[u] != a[v]).count());
        }
    });
    best
}

/// `t(n)` straight from the definition.
pub fn t_naive(n: usize) -> u32 {
    let mut t = vec![0u32; n + 1];
    for i in 2..=n {
        t[i] = if i <= 3 { i as u32 - 1 } else { (1..i).map(|d| d as u32 + t[(i - 1).div_ceil(d)]).min().unwrap() };
    }
    t[n]
}

/// Partitions of `n` into exactly `k` positive parts.
pub fn partitions(n: usize, k: usize) -> u64 {
    fn rec(n: usize, k: usize, max: usize) -> u64 {
        if k == 0 {
            return u64::from(n == 0);
        }
        (1..=max.min(n)).map(|p| rec(n - p, k - 1, p)).sum()
    }
    rec(n, k, n)
}
