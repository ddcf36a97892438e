//! Named graph families and seeded random connected graphs.
//!
//! Constructions are labelled breadth-first from the root. Random graphs
//! use ChaCha8 seeded with a 64-bit seed via `SeedableRng::seed_from_u64`.

use std::collections::{HashSet, VecDeque};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, RootedTree};

pub const MAX_ELL: u32 = 12;
pub const MAX_TERNARY_HEIGHT: u32 = 13;
pub const MAX_BINARY_CLIQUE_VERTICES: u64 = 1 << 15;
pub const MAX_BINARY_CLIQUE_EDGES: u64 = 1 << 23;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilySpec {
    TEll { ell: u32 },
    Ternary { height: u32 },
    BinaryClique { h1: u32, h2: u32 },
    NonmonotoneExample,
    RandomConnected { n: usize, m: usize, seed: u64 },
}

impl FamilySpec {
    pub fn generate(&self) -> Result<Graph> {
        Ok(match *self {
            FamilySpec::TEll { ell } => t_ell(ell)?.graph().clone(),
            FamilySpec::Ternary { height } => {
                if height > MAX_TERNARY_HEIGHT {
                    return Err(Error::OutOfRange { value: height as u64, lo: 0, hi: MAX_TERNARY_HEIGHT as u64 });
                }
                complete_ternary(height).graph().clone()
            }
            FamilySpec::BinaryClique { h1, h2 } => binary_clique(h1, h2)?,
            FamilySpec::NonmonotoneExample => nonmonotone_example().0,
            FamilySpec::RandomConnected { n, m, seed } => random_connected(n, m, seed)?,
        })
    }
}

/// Breadth-first labelled rooted tree: `kids(kind)` lists the kinds of a
/// node's children.
fn bfs_tree<K: Copy>(root: K, kids: impl Fn(K) -> Vec<K>) -> RootedTree {
    let mut edges = Vec::new();
    let mut queue = VecDeque::from([(0usize, root)]);
    let mut next = 1;
    while let Some((id, kind)) = queue.pop_front() {
        for c in kids(kind) {
            edges.push((id, next));
            queue.push_back((next, c));
            next += 1;
        }
    }
    let g = Graph::new(next, &edges).expect("tree edges are simple");
    RootedTree::new(g, 0).expect("bfs output is a tree")
}

/// Complete ternary tree of the given height.
pub fn complete_ternary(height: u32) -> RootedTree {
    assert!(height <= MAX_TERNARY_HEIGHT, "height {height} too large");
    bfs_tree(0u32, |d| if d < height { vec![d + 1; 3] } else { vec![] })
}

#[derive(Clone, Copy)]
enum TNode {
    Ternary(u32),
    Near,
    Far,
}

/// `T(ℓ)`: complete ternary tree of height `ℓ` whose leaves are the middle
/// vertices of 5-vertex paths.
pub fn t_ell(ell: u32) -> Result<RootedTree> {
    if !(1..=MAX_ELL).contains(&ell) {
        return Err(Error::OutOfRange { value: ell as u64, lo: 1, hi: MAX_ELL as u64 });
    }
    Ok(bfs_tree(TNode::Ternary(0), |k| match k {
        TNode::Ternary(d) if d < ell => vec![TNode::Ternary(d + 1); 3],
        TNode::Ternary(_) => vec![TNode::Near, TNode::Near],
        TNode::Near => vec![TNode::Far],
        TNode::Far => vec![],
    }))
}

/// `4·3^ℓ + Σ_{i≤ℓ} 3^i`.
pub fn t_ell_order(ell: u32) -> u64 {
    4 * 3u64.pow(ell) + (3u64.pow(ell + 1) - 1) / 2
}

/// `2^{h1+1} − 2 + 2^{h1}·C(2^{h2+1} − 1, 2)`.
pub fn binary_clique_edge_count(h1: u32, h2: u32) -> u64 {
    let s = (1u64 << (h2 + 1)) - 1;
    (1u64 << (h1 + 1)) - 2 + (1u64 << h1) * (s * (s - 1) / 2)
}

/// Complete binary tree of height `h1 + h2` in which the subtree below
/// every depth-`h1` vertex is completed to a clique.
pub fn binary_clique(h1: u32, h2: u32) -> Result<Graph> {
    if h1 == 0 {
        return Err(Error::OutOfRange { value: 0, lo: 1, hi: 14 });
    }
    let h = h1 + h2;
    if h >= 15 || (1u64 << (h + 1)) - 1 > MAX_BINARY_CLIQUE_VERTICES {
        return Err(Error::OutOfRange { value: h as u64, lo: 1, hi: 14 });
    }
    if binary_clique_edge_count(h1, h2) > MAX_BINARY_CLIQUE_EDGES {
        return Err(Error::OutOfRange { value: binary_clique_edge_count(h1, h2), lo: 0, hi: MAX_BINARY_CLIQUE_EDGES });
    }
    let n = (1usize << (h + 1)) - 1;
    let mut edges: Vec<(usize, usize)> = (1..(1usize << h1) - 1).map(|c| ((c - 1) / 2, c)).collect();
    for v in (1usize << h1) - 1..(1usize << (h1 + 1)) - 1 {
        // descendants of v level by level
        let mut sub = vec![v];
        let mut level = vec![v];
        for _ in 0..h2 {
            level = level.iter().flat_map(|&u| [2 * u + 1, 2 * u + 2]).collect();
            sub.extend(&level);
        }
        edges.push(((v - 1) / 2, v));
        for (i, &a) in sub.iter().enumerate() {
            for &b in &sub[i + 1..] {
                edges.push((a, b));
            }
        }
    }
    edges.sort_unstable_by_key(|&(a, b)| (a.min(b), a.max(b)));
    Graph::new(n, &edges)
}

/// The 31-vertex example with `P(G,2) = 8` and `P(G−e,2) = 9`, and the
/// index of the distinguished edge `e`.
pub fn nonmonotone_example() -> (Graph, usize) {
    let mut edges = Vec::with_capacity(38);
    for i in 1..=15usize {
        edges.push((i - 1, 2 * i - 1));
        edges.push((i - 1, 2 * i));
    }
    for i in (16..=30usize).step_by(2) {
        edges.push((i - 1, i));
    }
    let g = Graph::new(31, &edges).expect("example is simple");
    let e = g.edge_between(29, 30).expect("distinguished edge");
    (g, e)
}

/// Uniform random labelled tree on `n` vertices via a Prüfer sequence.
pub fn random_tree(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges = random_tree_edges(n, &mut rng).unwrap_or_default();
    Graph::new(n, &edges).expect("tree edges are simple")
}

fn random_tree_edges(n: usize, rng: &mut ChaCha8Rng) -> Option<Vec<(usize, usize)>> {
    if n < 2 {
        return None;
    }
    let code: Vec<usize> = (0..n.saturating_sub(2)).map(|_| rng.gen_range(0..n)).collect();
    Some(prufer_decode(n, &code))
}

/// Linear-time Prüfer decoding.
fn prufer_decode(n: usize, code: &[usize]) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &c in code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut ptr = (0..n).find(|&v| degree[v] == 1).expect("a leaf exists");
    let mut leaf = ptr;
    for &c in code {
        edges.push((leaf, c));
        degree[c] -= 1;
        if degree[c] == 1 && c < ptr {
            leaf = c;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n - 1));
    edges
}

/// Random tree plus `m − (n − 1)` distinct random extra edges. The edge
/// list is sorted.
pub fn random_connected(n: usize, m: usize, seed: u64) -> Result<Graph> {
    let max = n * n.saturating_sub(1) / 2;
    if n == 0 || m + 1 < n || m > max {
        return Err(Error::InfeasibleDensity { n, m });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<(usize, usize)> =
        random_tree_edges(n, &mut rng).unwrap_or_default().into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
    let extra = m - edges.len();
    if extra > 0 {
        let mut present: HashSet<(usize, usize)> = edges.iter().copied().collect();
        if 2 * extra < max - edges.len() {
            while present.len() < m {
                let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
                if a != b && present.insert((a.min(b), a.max(b))) {
                    edges.push((a.min(b), a.max(b)));
                }
            }
        } else {
            let mut free: Vec<(usize, usize)> =
                (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).filter(|p| !present.contains(p)).collect();
            free.shuffle(&mut rng);
            edges.extend(free.drain(..extra));
        }
    }
    edges.sort_unstable();
    Graph::new(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn t_ell_sizes() {
        assert_eq!(t_ell(1).unwrap().n(), 16);
        assert_eq!(t_ell(2).unwrap().n(), 49);
        for ell in 1..=5 {
            let t = t_ell(ell).unwrap();
            assert_eq!(t.n() as u64, t_ell_order(ell));
            assert_eq!(t.graph().m(), t.n() - 1);
        }
        assert!(matches!(t_ell(0), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn t_ell_leaf_paths() {
        // leaves of the ternary part are 4..=12 at ell = 1, each of degree 3
        let t = t_ell(1).unwrap();
        let g = t.graph();
        assert_eq!(g.degree(0), 3);
        assert!((1..=3).all(|v| g.degree(v) == 3));
        assert_eq!((0..16).filter(|&v| g.degree(v) == 1).count(), 6);
    }

    #[test]
    fn ternary_sizes() {
        assert_eq!(complete_ternary(0).n(), 1);
        let k13 = complete_ternary(1);
        assert_eq!(k13.n(), 4);
        assert_eq!(k13.graph().degree(0), 3);
        assert_eq!(complete_ternary(2).n(), 13);
    }

    #[test]
    fn binary_clique_counts() {
        let g = binary_clique(1, 1).unwrap();
        assert_eq!((g.n(), g.m()), (7, 8));
        let g = binary_clique(2, 1).unwrap();
        assert_eq!((g.n(), g.m()), (15, 18));
        let g = binary_clique(1, 2).unwrap();
        assert_eq!((g.n(), g.m()), (15, 44));
        for h1 in 1..5 {
            let g = binary_clique(h1, 0).unwrap();
            assert_eq!(g.m(), g.n() - 1);
            assert!(g.is_connected());
        }
        assert!(binary_clique(0, 2).is_err());
    }

    #[test]
    fn example_graph() {
        let (g, e) = nonmonotone_example();
        assert_eq!((g.n(), g.m()), (31, 38));
        assert_eq!(g.endpoints(e), (29, 30));
        assert_eq!(g.degree(0), 2);
        let h = g.without_edge(e);
        assert_eq!(h.m(), 37);
        assert!(h.is_connected());
    }

    #[test]
    fn prufer_round_trip_small() {
        // code [3, 3] on 4 vertices is the star centred at 3
        let mut e = prufer_decode(4, &[3, 3]);
        e.sort();
        assert_eq!(e, vec![(0, 3), (1, 3), (2, 3)]);
    }

    #[test]
    fn random_graphs() {
        let t = random_connected(5, 4, 7).unwrap();
        assert!(t.is_connected());
        assert_eq!(t.m(), 4);
        let k4 = random_connected(4, 6, 3).unwrap();
        assert_eq!(k4.m(), 6);
        assert_eq!(random_connected(6, 8, 1).unwrap().edges(), random_connected(6, 8, 1).unwrap().edges());
        assert_eq!(random_connected(4, 7, 0).unwrap_err(), Error::InfeasibleDensity { n: 4, m: 7 });
        assert_eq!(random_connected(4, 2, 0).unwrap_err(), Error::InfeasibleDensity { n: 4, m: 2 });
        assert_eq!(random_connected(1, 0, 0).unwrap().n(), 1);
        for seed in 0..50 {
            let g = random_connected(12, 30, seed).unwrap();
            assert!(g.is_connected());
            assert_eq!(g.m(), 30);
        }
    }
}
