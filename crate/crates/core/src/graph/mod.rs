//! Simple undirected graphs with dense vertex and edge ids.
//!
//! A [`Graph`] is immutable once built. Vertices are `0..n`, edges are
//! `0..m` in insertion order, and every edge is stored with its smaller
//! endpoint first. Adjacency lists are sorted by neighbour id, so every
//! traversal in this crate breaks ties by ascending id.

mod blocks;
mod io;
mod sets;

use std::collections::VecDeque;

pub use blocks::{blocks, is_biconnected, st_numbering};
pub use io::{parse_graph, write_graph};
pub use sets::{EdgeSet, VertexSet};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    // (neighbour, edge id), sorted by neighbour
    adj: Vec<Vec<(usize, usize)>>,
}

impl Graph {
    pub fn new(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut edges = Vec::with_capacity(pairs.len());
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in pairs {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            let (a, b) = (u.min(v), u.max(v));
            let id = edges.len();
            edges.push((a, b));
            adj[a].push((b, id));
            adj[b].push((a, id));
        }
        for (v, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0].0 == w[1].0) {
                return Err(Error::DuplicateEdge(v.min(w[0].0), v.max(w[0].0)));
            }
        }
        Ok(Graph { n, edges, adj })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    /// `(neighbour, edge id)` pairs of `v`, by ascending neighbour.
    pub fn neighbors(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// `2m/n`; zero for the empty graph.
    pub fn average_degree(&self) -> f64 {
        if self.n == 0 {
            0.0
        } else {
            2.0 * self.m() as f64 / self.n as f64
        }
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        let list = self.adj.get(u)?;
        list.binary_search_by_key(&v, |&(w, _)| w).ok().map(|i| list[i].1)
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn all_edges(&self) -> EdgeSet {
        EdgeSet::full(self.m())
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.components(&VertexSet::new(self.n)).len() == 1
    }

    /// True iff `G[set]` is connected.
    pub fn is_connected_vertex_set(&self, set: &VertexSet) -> Result<bool> {
        let Some(start) = set.first() else {
            return Err(Error::EmptySet);
        };
        let mut seen = VertexSet::new(self.n);
        seen.insert(start);
        let mut stack = vec![start];
        let mut reached = 1;
        while let Some(v) = stack.pop() {
            for &(w, _) in &self.adj[v] {
                if set.contains(w) && !seen.contains(w) {
                    seen.insert(w);
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        Ok(reached == set.len())
    }

    /// True iff the edges of `set` form a connected graph on their endpoints.
    pub fn is_connected_edge_set(&self, set: &EdgeSet) -> Result<bool> {
        let Some(first) = set.first() else {
            return Err(Error::EmptySet);
        };
        let mut seen_v = VertexSet::new(self.n);
        let mut seen_e = EdgeSet::new(self.m());
        let start = self.edges[first].0;
        seen_v.insert(start);
        let mut stack = vec![start];
        let mut reached = 0;
        while let Some(v) = stack.pop() {
            for &(w, e) in &self.adj[v] {
                if set.contains(e) && !seen_e.contains(e) {
                    seen_e.insert(e);
                    reached += 1;
                    if !seen_v.contains(w) {
                        seen_v.insert(w);
                        stack.push(w);
                    }
                }
            }
        }
        Ok(reached == set.len())
    }

    /// Connected components of `G - removed`, ordered by smallest vertex.
    pub fn components(&self, removed: &VertexSet) -> Vec<VertexSet> {
        let mut seen = removed.clone();
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen.contains(s) {
                continue;
            }
            let mut comp = VertexSet::new(self.n);
            seen.insert(s);
            comp.insert(s);
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &(w, _) in &self.adj[v] {
                    if !seen.contains(w) {
                        seen.insert(w);
                        comp.insert(w);
                        stack.push(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// Breadth-first spanning tree from `root`, neighbours in ascending order.
    pub fn spanning_tree(&self, root: usize) -> Result<RootedTree> {
        if root >= self.n {
            return Err(Error::VertexOutOfRange { vertex: root, n: self.n });
        }
        let mut parent = vec![None; self.n];
        let mut seen = vec![false; self.n];
        let mut tree_edges = Vec::with_capacity(self.n.saturating_sub(1));
        let mut queue = VecDeque::from([root]);
        seen[root] = true;
        while let Some(v) = queue.pop_front() {
            for &(w, _) in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some(v);
                    tree_edges.push((v, w));
                    queue.push_back(w);
                }
            }
        }
        if tree_edges.len() + 1 != self.n {
            return Err(Error::Disconnected);
        }
        let tree = Graph::new(self.n, &tree_edges)?;
        Ok(RootedTree { tree, root, parent })
    }

    /// Edges with both endpoints in `set`.
    pub fn induced_edges(&self, set: &VertexSet) -> EdgeSet {
        let mut out = EdgeSet::new(self.m());
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            if set.contains(u) && set.contains(v) {
                out.insert(e);
            }
        }
        out
    }

    /// Materialises `G[set]` with vertices relabelled in ascending order.
    pub fn induced(&self, set: &VertexSet) -> Subgraph {
        let vertex_map: Vec<usize> = set.iter().collect();
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in vertex_map.iter().enumerate() {
            local[v] = i;
        }
        let mut pairs = Vec::new();
        let mut edge_map = Vec::new();
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            if set.contains(u) && set.contains(v) {
                pairs.push((local[u], local[v]));
                edge_map.push(e);
            }
        }
        let graph = Graph::new(vertex_map.len(), &pairs).expect("induced subgraph of a simple graph");
        Subgraph { graph, vertex_map, edge_map }
    }

    pub fn without_edge(&self, e: usize) -> Graph {
        let pairs: Vec<_> = self.edges.iter().enumerate().filter(|&(i, _)| i != e).map(|(_, &p)| p).collect();
        Graph::new(self.n, &pairs).expect("subgraph of a simple graph")
    }

    /// Number of edges whose endpoints lie in different parts.
    pub fn cut_size(&self, part_of: &[usize]) -> usize {
        self.edges.iter().filter(|&&(u, v)| part_of[u] != part_of[v]).count()
    }
}

/// A materialised induced subgraph together with the maps back to its host.
#[derive(Debug, Clone)]
pub struct Subgraph {
    pub graph: Graph,
    /// local vertex -> host vertex
    pub vertex_map: Vec<usize>,
    /// local edge -> host edge
    pub edge_map: Vec<usize>,
}

impl Subgraph {
    pub fn lift_vertices(&self, local: &VertexSet, host_n: usize) -> VertexSet {
        VertexSet::from_iter(host_n, local.iter().map(|v| self.vertex_map[v]))
    }

    pub fn lift_edges(&self, local: &EdgeSet, host_m: usize) -> EdgeSet {
        EdgeSet::from_iter(host_m, local.iter().map(|e| self.edge_map[e]))
    }
}

/// A tree with a designated root and the parent map it induces.
#[derive(Debug, Clone)]
pub struct RootedTree {
    tree: Graph,
    root: usize,
    parent: Vec<Option<usize>>,
}

impl RootedTree {
    /// Roots `tree` at `root`. Fails unless `tree` is a tree.
    pub fn new(tree: Graph, root: usize) -> Result<Self> {
        if tree.n() == 0 || tree.m() + 1 != tree.n() {
            return Err(if tree.n() == 0 { Error::EmptySet } else { Error::Disconnected });
        }
        let rooted = tree.spanning_tree(root)?;
        Ok(RootedTree { tree, root, parent: rooted.parent })
    }

    pub fn graph(&self) -> &Graph {
        &self.tree
    }

    pub fn n(&self) -> usize {
        self.tree.n()
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn reroot(&self, root: usize) -> Result<RootedTree> {
        RootedTree::new(self.tree.clone(), root)
    }

    /// Children lists in ascending id order.
    pub fn children(&self) -> Vec<Vec<usize>> {
        let mut ch = vec![Vec::new(); self.n()];
        for v in 0..self.n() {
            if let Some(p) = self.parent[v] {
                ch[p].push(v);
            }
        }
        ch
    }

    /// Vertices in an order where parents precede children.
    pub fn preorder(&self) -> Vec<usize> {
        let ch = self.children();
        let mut order = Vec::with_capacity(self.n());
        let mut stack = vec![self.root];
        while let Some(v) = stack.pop() {
            order.push(v);
            stack.extend(ch[v].iter().rev());
        }
        order
    }

    /// Subtree vertex counts under the current root.
    pub fn subtree_sizes(&self) -> Vec<usize> {
        let mut size = vec![1; self.n()];
        for &v in self.preorder().iter().rev() {
            if let Some(p) = self.parent[v] {
                size[p] += size[v];
            }
        }
        size
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn path(n: usize) -> Graph {
        let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &e).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &e).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut e = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                e.push((u, v));
            }
        }
        Graph::new(n, &e).unwrap()
    }

    fn star(q: usize) -> Graph {
        let e: Vec<_> = (1..=q).map(|i| (0, i)).collect();
        Graph::new(q + 1, &e).unwrap()
    }

    #[test]
    fn build_examples() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!((g.n(), g.m()), (2, 1));
        let g = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(g.m(), 3);
        assert_eq!(Graph::new(2, &[(0, 0)]), Err(Error::SelfLoop(0)));
        assert_eq!(Graph::new(3, &[(0, 1), (1, 0)]), Err(Error::DuplicateEdge(0, 1)));
        assert_eq!(Graph::new(2, &[(0, 2)]), Err(Error::VertexOutOfRange { vertex: 2, n: 2 }));
        let g = Graph::new(3, &[(2, 1)]).unwrap();
        assert_eq!(g.endpoints(0), (1, 2));
    }

    #[test]
    fn degree_sum_is_twice_m() {
        for g in [path(7), cycle(5), complete(6), star(4)] {
            let s: usize = (0..g.n()).map(|v| g.degree(v)).sum();
            assert_eq!(s, 2 * g.m());
        }
    }

    #[test]
    fn vertex_set_connectivity() {
        let p4 = path(4);
        assert!(p4.is_connected_vertex_set(&VertexSet::from_iter(4, [0, 1])).unwrap());
        assert!(!p4.is_connected_vertex_set(&VertexSet::from_iter(4, [0, 2])).unwrap());
        let k4 = complete(4);
        for mask in 1u32..16 {
            let s = VertexSet::from_iter(4, (0..4).filter(|i| mask >> i & 1 == 1));
            assert!(k4.is_connected_vertex_set(&s).unwrap());
        }
        assert_eq!(p4.is_connected_vertex_set(&VertexSet::new(4)), Err(Error::EmptySet));
    }

    #[test]
    fn edge_set_connectivity() {
        let p4 = path(4);
        assert!(p4.is_connected_edge_set(&EdgeSet::from_iter(3, [0])).unwrap());
        assert!(!p4.is_connected_edge_set(&EdgeSet::from_iter(3, [0, 2])).unwrap());
        // every nonempty subset of a star's edges shares the centre
        let s = star(4);
        let mut count = 0;
        for mask in 1u32..16 {
            let f = EdgeSet::from_iter(4, (0..4).filter(|i| mask >> i & 1 == 1));
            assert!(s.is_connected_edge_set(&f).unwrap());
            count += 1;
        }
        assert_eq!(count, 15);
        assert_eq!(p4.is_connected_edge_set(&EdgeSet::new(3)), Err(Error::EmptySet));
    }

    #[test]
    fn components_examples() {
        let p3 = path(3);
        let c = p3.components(&VertexSet::from_iter(3, [1]));
        assert_eq!(c.len(), 2);
        assert_eq!(c[0].to_vec(), vec![0]);
        assert_eq!(c[1].to_vec(), vec![2]);
        let tri = complete(3);
        let c = tri.components(&VertexSet::new(3));
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].to_vec(), vec![0, 1, 2]);
        let c = star(3).components(&VertexSet::from_iter(4, [0]));
        assert_eq!(c.iter().map(|s| s.to_vec()).collect::<Vec<_>>(), vec![vec![1], vec![2], vec![3]]);
    }

    #[test]
    fn bfs_spanning_tree() {
        let t = cycle(4).spanning_tree(0).unwrap();
        let mut e = t.graph().edges().to_vec();
        e.sort();
        assert_eq!(e, vec![(0, 1), (0, 3), (1, 2)]);
        assert_eq!(t.parent(2), Some(1));

        let p = path(5);
        let t = p.spanning_tree(3).unwrap();
        assert_eq!(t.root(), 3);
        let mut e = t.graph().edges().to_vec();
        e.sort();
        assert_eq!(e, p.edges().to_vec());

        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(g.spanning_tree(0), Err(Error::Disconnected)));
    }

    #[test]
    fn min_degree_and_induced() {
        assert_eq!(cycle(5).min_degree(), 2);
        let k4 = complete(4);
        let sub = k4.induced(&VertexSet::from_iter(4, [1, 3]));
        assert_eq!(sub.graph.m(), 1);
        assert_eq!(sub.edge_map, vec![k4.edge_between(1, 3).unwrap()]);
        assert_eq!(sub.vertex_map, vec![1, 3]);
    }

    #[test]
    fn subtree_sizes_and_preorder() {
        let t = RootedTree::new(star(3), 0).unwrap();
        assert_eq!(t.subtree_sizes(), vec![4, 1, 1, 1]);
        assert_eq!(t.preorder(), vec![0, 1, 2, 3]);
        let t = t.reroot(2).unwrap();
        assert_eq!(t.subtree_sizes()[0], 3);
        assert!(RootedTree::new(cycle(3), 0).is_err());
    }
}
