//! Lowpoint DFS: blocks (2-connected components) and st-numberings.

use super::{Graph, VertexSet};
use crate::error::{Error, Result};

const UNSEEN: usize = usize::MAX;

/// Blocks of `g` as vertex sets, sorted by their ascending vertex lists.
/// Bridges are blocks of two vertices and isolated vertices are singletons.
pub fn blocks(g: &Graph) -> Vec<VertexSet> {
    let n = g.n();
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut timer = 0;
    let mut out: Vec<Vec<usize>> = Vec::new();
    let mut edge_stack: Vec<usize> = Vec::new();

    for root in 0..n {
        if disc[root] != UNSEEN {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        if g.degree(root) == 0 {
            out.push(vec![root]);
            continue;
        }
        // (vertex, tree edge into it, next adjacency index)
        let mut frames: Vec<(usize, Option<usize>, usize)> = vec![(root, None, 0)];
        while let Some(&mut (v, pe, ref mut i)) = frames.last_mut() {
            if let Some(&(w, e)) = g.neighbors(v).get(*i) {
                *i += 1;
                if Some(e) == pe {
                    continue;
                }
                if disc[w] == UNSEEN {
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    edge_stack.push(e);
                    frames.push((w, Some(e), 0));
                } else if disc[w] < disc[v] {
                    low[v] = low[v].min(disc[w]);
                    edge_stack.push(e);
                }
                continue;
            }
            frames.pop();
            let Some(&(u, _, _)) = frames.last() else { continue };
            low[u] = low[u].min(low[v]);
            if low[v] >= disc[u] {
                let tree_edge = pe.expect("non-root frame has a tree edge");
                let mut verts = Vec::new();
                while let Some(e) = edge_stack.pop() {
                    let (a, b) = g.endpoints(e);
                    verts.push(a);
                    verts.push(b);
                    if e == tree_edge {
                        break;
                    }
                }
                verts.sort_unstable();
                verts.dedup();
                out.push(verts);
            }
        }
    }
    out.sort();
    out.into_iter().map(|b| VertexSet::from_iter(n, b)).collect()
}

/// 2-connected in the block sense: a single edge counts, a single vertex
/// does not.
pub fn is_biconnected(g: &Graph) -> bool {
    match g.n() {
        0 | 1 => false,
        2 => g.m() == 1,
        _ => g.is_connected() && blocks(g).len() == 1,
    }
}

/// An ordering `s = x_1, ..., x_n = t` of the vertices of a 2-connected
/// graph in which every prefix and every suffix induces a connected
/// subgraph. `s` and `t` need not be adjacent.
pub fn st_numbering(g: &Graph, s: usize, t: usize) -> Result<Vec<usize>> {
    let n = g.n();
    for v in [s, t] {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
    }
    if s == t || !is_biconnected(g) {
        return Err(Error::NotBiconnected);
    }
    // neighbour lists with t first at s, plus a virtual s-t edge if needed
    let mut adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).iter().map(|&(w, _)| w).collect()).collect();
    if g.edge_between(s, t).is_none() {
        adj[s].push(t);
        adj[t].push(s);
    }
    adj[s].retain(|&w| w != t);
    adj[s].insert(0, t);

    let mut pre = vec![UNSEEN; n];
    let mut order = Vec::with_capacity(n);
    let mut parent = vec![UNSEEN; n];
    let mut low = vec![0; n];
    pre[s] = 0;
    low[s] = 0;
    order.push(s);
    let mut frames: Vec<(usize, usize)> = vec![(s, 0)];
    while let Some(&mut (v, ref mut i)) = frames.last_mut() {
        if let Some(&w) = adj[v].get(*i) {
            *i += 1;
            if pre[w] == UNSEEN {
                pre[w] = order.len();
                low[w] = pre[w];
                parent[w] = v;
                order.push(w);
                frames.push((w, 0));
            } else if w != parent[v] {
                low[v] = low[v].min(pre[w]);
            }
            continue;
        }
        frames.pop();
        if parent[v] != UNSEEN {
            let p = parent[v];
            low[p] = low[p].min(low[v]);
        }
    }
    debug_assert_eq!(order.len(), n);

    // doubly linked list, signs: true = '+'
    let mut next = vec![UNSEEN; n];
    let mut prev = vec![UNSEEN; n];
    let mut plus = vec![false; n];
    next[s] = t;
    prev[t] = s;
    for &v in &order[2..] {
        let p = parent[v];
        let lowv = order[low[v]];
        if !plus[lowv] {
            // before p
            let a = prev[p];
            next[a] = v;
            prev[v] = a;
            next[v] = p;
            prev[p] = v;
            plus[p] = true;
        } else {
            let b = next[p];
            next[p] = v;
            prev[v] = p;
            next[v] = b;
            if b != UNSEEN {
                prev[b] = v;
            }
            plus[p] = false;
        }
    }
    let mut out = Vec::with_capacity(n);
    let mut cur = s;
    while cur != UNSEEN {
        out.push(cur);
        cur = next[cur];
    }
    debug_assert_eq!(out.len(), n);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::new(n, e).unwrap()
    }

    fn prefixes_and_suffixes_connected(g: &Graph, ord: &[usize]) -> bool {
        let n = g.n();
        (1..n).all(|j| {
            let pre = VertexSet::from_iter(n, ord[..j].iter().copied());
            let suf = VertexSet::from_iter(n, ord[j..].iter().copied());
            g.is_connected_vertex_set(&pre).unwrap() && g.is_connected_vertex_set(&suf).unwrap()
        })
    }

    #[test]
    fn block_examples() {
        let p3 = g(3, &[(0, 1), (1, 2)]);
        let b: Vec<_> = blocks(&p3).iter().map(|s| s.to_vec()).collect();
        assert_eq!(b, vec![vec![0, 1], vec![1, 2]]);
        let k4 = g(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(blocks(&k4).len(), 1);
        // two triangles sharing vertex 2, plus an isolated vertex
        let bow = g(6, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]);
        let b: Vec<_> = blocks(&bow).iter().map(|s| s.to_vec()).collect();
        assert_eq!(b, vec![vec![0, 1, 2], vec![2, 3, 4], vec![5]]);
    }

    #[test]
    fn st_numbering_c4() {
        let c4 = g(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        let ord = st_numbering(&c4, 0, 1).unwrap();
        assert_eq!(ord, vec![0, 3, 2, 1]);
        assert!(prefixes_and_suffixes_connected(&c4, &ord));
    }

    #[test]
    fn st_numbering_k4_all_pairs() {
        let k4 = g(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        for s in 0..4 {
            for t in 0..4 {
                if s != t {
                    let ord = st_numbering(&k4, s, t).unwrap();
                    assert_eq!((ord[0], ord[3]), (s, t));
                    assert!(prefixes_and_suffixes_connected(&k4, &ord));
                }
            }
        }
    }

    #[test]
    fn st_numbering_rejects() {
        let p3 = g(3, &[(0, 1), (1, 2)]);
        assert_eq!(st_numbering(&p3, 0, 2), Err(Error::NotBiconnected));
        let c4 = g(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert_eq!(st_numbering(&c4, 1, 1), Err(Error::NotBiconnected));
        let k2 = g(2, &[(0, 1)]);
        assert_eq!(st_numbering(&k2, 1, 0).unwrap(), vec![1, 0]);
    }

    #[test]
    fn st_numbering_nonadjacent_endpoints() {
        let c6 = g(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]);
        let ord = st_numbering(&c6, 0, 3).unwrap();
        assert_eq!((ord[0], ord[5]), (0, 3));
        assert!(prefixes_and_suffixes_connected(&c6, &ord));
    }

    /// Exhaustive over all 2-connected graphs on up to 6 vertices (edge
    /// subsets of K_n), every ordered pair (s, t).
    #[test]
    fn st_numbering_exhaustive_small() {
        for n in 3..=6usize {
            let all: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            let total = 1u32 << all.len();
            let step = if n == 6 { 7 } else { 1 };
            for mask in (0..total).step_by(step) {
                let e: Vec<_> = all.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p).collect();
                let gr = g(n, &e);
                if !is_biconnected(&gr) {
                    continue;
                }
                for s in 0..n {
                    for t in 0..n {
                        if s != t {
                            let ord = st_numbering(&gr, s, t).unwrap();
                            assert!(prefixes_and_suffixes_connected(&gr, &ord), "{e:?} {s} {t}");
                        }
                    }
                }
            }
        }
    }
}
