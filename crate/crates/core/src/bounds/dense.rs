use std::collections::BTreeSet;

use serde::Serialize;

use crate::graph::{Graph, Subgraph, VertexSet};

/// A connected subgraph of minimum degree at least half the host's
/// average degree.
#[derive(Debug, Clone, Serialize)]
pub struct CoreSubgraph {
    #[serde(serialize_with = "ser_set")]
    pub vertices: VertexSet,
    pub min_degree: usize,
    /// Peeled vertices in removal order.
    pub peel_trace: Vec<usize>,
    /// Average degree of the host graph.
    pub host_average_degree: f64,
}

fn ser_set<S: serde::Serializer>(s: &VertexSet, ser: S) -> Result<S::Ok, S::Error> {
    ser.collect_seq(s.iter())
}

impl CoreSubgraph {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn induced(&self, g: &Graph) -> Subgraph {
        g.induced(&self.vertices)
    }
}

/// Repeatedly deletes the lowest-id vertex of degree below `d(G)/2`, then
/// keeps the largest remaining component (ties: smallest vertex).
pub fn dense_core(g: &Graph) -> CoreSubgraph {
    let (n, m) = (g.n(), g.m());
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut alive = VertexSet::full(n);
    // deg < m/n, i.e. below half the average degree
    let low = |d: usize| d * n < m;
    let mut queue: BTreeSet<usize> = (0..n).filter(|&v| low(deg[v])).collect();
    let mut trace = Vec::new();
    while let Some(v) = queue.pop_first() {
        alive.remove(v);
        trace.push(v);
        for &(w, _) in g.neighbors(v) {
            if alive.contains(w) {
                deg[w] -= 1;
                if low(deg[w]) {
                    queue.insert(w);
                }
            }
        }
    }
    let removed = alive.complement();
    let comps = g.components(&removed);
    let best = comps
        .into_iter()
        .fold(None::<VertexSet>, |acc, c| match acc {
            Some(a) if a.len() >= c.len() => Some(a),
            _ => Some(c),
        })
        .unwrap_or_else(|| VertexSet::new(n));
    let min_degree = best.iter().map(|v| deg[v]).min().unwrap_or(0);
    CoreSubgraph { vertices: best, min_degree, peel_trace: trace, host_average_degree: g.average_degree() }
}

/// Greedy path from vertex 0, extended at both ends until neither end has
/// a neighbour off the path. Has at least `δ + 1` vertices.
pub fn long_path(h: &Graph) -> Vec<usize> {
    if h.n() == 0 {
        return Vec::new();
    }
    let mut on = vec![false; h.n()];
    let mut path = std::collections::VecDeque::from([0usize]);
    on[0] = true;
    let step = |v: usize, on: &[bool]| h.neighbors(v).iter().map(|&(w, _)| w).find(|&w| !on[w]);
    while let Some(w) = step(*path.back().expect("nonempty"), &on) {
        on[w] = true;
        path.push_back(w);
    }
    while let Some(w) = step(*path.front().expect("nonempty"), &on) {
        on[w] = true;
        path.push_front(w);
    }
    path.into()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Graph {
        let e: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Graph::new(n, &e).unwrap()
    }

    #[test]
    fn core_examples() {
        let k5 = complete(5);
        let c = dense_core(&k5);
        assert_eq!(c.len(), 5);
        assert_eq!(c.min_degree, 4);
        let p6 = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]).unwrap();
        assert_eq!(dense_core(&p6).len(), 6);
        // K4 plus a pendant vertex: d = 2.8, the pendant goes
        let g = Graph::new(5, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4)]).unwrap();
        let c = dense_core(&g);
        assert_eq!(c.vertices.to_vec(), vec![0, 1, 2, 3]);
        assert_eq!(c.peel_trace, vec![4]);
        assert_eq!(c.min_degree, 3);
    }

    #[test]
    fn path_examples() {
        let c7 = Graph::new(7, &(0..7).map(|i| (i, (i + 1) % 7)).collect::<Vec<_>>()).unwrap();
        assert_eq!(long_path(&c7).len(), 7);
        assert_eq!(long_path(&complete(4)).len(), 4);
        let star = Graph::new(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(long_path(&star), vec![2, 0, 1]);
    }
}
