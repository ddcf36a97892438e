//! Connected edge/vertex partitions and canonical size profiles.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::graph::{EdgeSet, Graph, VertexSet};

/// `k` disjoint nonempty edge sets covering `E(G)`, each connected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgePartition {
    pub parts: Vec<EdgeSet>,
}

/// `k` disjoint nonempty vertex sets covering `V(G)`, each inducing a
/// connected subgraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexPartition {
    pub parts: Vec<VertexSet>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Invalid {
    WrongUniverse,
    EmptyPart(usize),
    Overlap(usize, usize),
    NotCovering,
    Disconnected(usize),
}

impl EdgePartition {
    pub fn new(parts: Vec<EdgeSet>) -> Self {
        EdgePartition { parts }
    }

    pub fn k(&self) -> usize {
        self.parts.len()
    }

    /// Part sizes in part order.
    pub fn sizes(&self) -> Vec<usize> {
        self.parts.iter().map(EdgeSet::len).collect()
    }

    pub fn canonical_sizes(&self) -> Vec<usize> {
        canonical(self.sizes())
    }

    /// Full recount: nonempty, pairwise disjoint, covering and connected.
    pub fn validate(&self, g: &Graph) -> Result<(), Invalid> {
        let mut seen = EdgeSet::new(g.m());
        for (i, p) in self.parts.iter().enumerate() {
            if p.capacity() != g.m() {
                return Err(Invalid::WrongUniverse);
            }
            if p.is_empty() {
                return Err(Invalid::EmptyPart(i));
            }
            if !p.is_disjoint(&seen) {
                let j = (0..i).find(|&j| !self.parts[j].is_disjoint(p)).unwrap_or(0);
                return Err(Invalid::Overlap(j, i));
            }
            seen.union_with(p);
            if !g.is_connected_edge_set(p).unwrap_or(false) {
                return Err(Invalid::Disconnected(i));
            }
        }
        if seen.len() != g.m() {
            return Err(Invalid::NotCovering);
        }
        Ok(())
    }

    pub fn is_valid(&self, g: &Graph) -> bool {
        self.validate(g).is_ok()
    }

    pub fn to_lists(&self) -> Vec<Vec<usize>> {
        self.parts.iter().map(EdgeSet::to_vec).collect()
    }
}

impl VertexPartition {
    pub fn new(parts: Vec<VertexSet>) -> Self {
        VertexPartition { parts }
    }

    pub fn k(&self) -> usize {
        self.parts.len()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.parts.iter().map(VertexSet::len).collect()
    }

    pub fn canonical_sizes(&self) -> Vec<usize> {
        canonical(self.sizes())
    }

    /// Part index of every vertex. Vertices outside all parts map to `usize::MAX`.
    pub fn part_of(&self, n: usize) -> Vec<usize> {
        let mut out = vec![usize::MAX; n];
        for (i, p) in self.parts.iter().enumerate() {
            for v in p.iter() {
                out[v] = i;
            }
        }
        out
    }

    pub fn validate(&self, g: &Graph) -> Result<(), Invalid> {
        let mut seen = VertexSet::new(g.n());
        for (i, p) in self.parts.iter().enumerate() {
            if p.capacity() != g.n() {
                return Err(Invalid::WrongUniverse);
            }
            if p.is_empty() {
                return Err(Invalid::EmptyPart(i));
            }
            if !p.is_disjoint(&seen) {
                let j = (0..i).find(|&j| !self.parts[j].is_disjoint(p)).unwrap_or(0);
                return Err(Invalid::Overlap(j, i));
            }
            seen.union_with(p);
            if !g.is_connected_vertex_set(p).unwrap_or(false) {
                return Err(Invalid::Disconnected(i));
            }
        }
        if seen.len() != g.n() {
            return Err(Invalid::NotCovering);
        }
        Ok(())
    }

    pub fn is_valid(&self, g: &Graph) -> bool {
        self.validate(g).is_ok()
    }

    pub fn to_lists(&self) -> Vec<Vec<usize>> {
        self.parts.iter().map(VertexSet::to_vec).collect()
    }
}

pub fn canonical(mut sizes: Vec<usize>) -> Vec<usize> {
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    sizes
}

/// A set of canonical (descending) size tuples.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
#[serde(into = "Vec<Vec<usize>>")]
pub struct SizeProfile(BTreeSet<Vec<usize>>);

impl SizeProfile {
    pub fn new() -> Self {
        Self::default()
    }

    /// Inserts the canonical form of `sizes`; returns true if it was new.
    pub fn insert(&mut self, sizes: Vec<usize>) -> bool {
        self.0.insert(canonical(sizes))
    }

    pub fn contains(&self, sizes: &[usize]) -> bool {
        self.0.contains(&canonical(sizes.to_vec()))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_subset(&self, other: &SizeProfile) -> bool {
        self.0.is_subset(&other.0)
    }

    /// Tuples in descending lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.0.iter().rev()
    }

    /// Smallest entry of every tuple, ascending and deduplicated.
    pub fn min_parts(&self) -> Vec<usize> {
        let s: BTreeSet<usize> = self.0.iter().filter_map(|t| t.last().copied()).collect();
        s.into_iter().collect()
    }
}

impl FromIterator<Vec<usize>> for SizeProfile {
    fn from_iter<I: IntoIterator<Item = Vec<usize>>>(iter: I) -> Self {
        let mut p = SizeProfile::new();
        for t in iter {
            p.insert(t);
        }
        p
    }
}

impl From<SizeProfile> for Vec<Vec<usize>> {
    fn from(p: SizeProfile) -> Self {
        p.0.into_iter().rev().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation_catches_each_defect() {
        let p4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let e = |ids: &[usize]| EdgeSet::from_iter(3, ids.iter().copied());
        assert!(EdgePartition::new(vec![e(&[0, 1]), e(&[2])]).is_valid(&p4));
        assert_eq!(EdgePartition::new(vec![e(&[0, 2]), e(&[1])]).validate(&p4), Err(Invalid::Disconnected(0)));
        assert_eq!(EdgePartition::new(vec![e(&[0, 1]), e(&[1, 2])]).validate(&p4), Err(Invalid::Overlap(0, 1)));
        assert_eq!(EdgePartition::new(vec![e(&[0, 1]), e(&[])]).validate(&p4), Err(Invalid::EmptyPart(1)));
        assert_eq!(EdgePartition::new(vec![e(&[0, 1])]).validate(&p4), Err(Invalid::NotCovering));

        let v = |ids: &[usize]| VertexSet::from_iter(4, ids.iter().copied());
        assert!(VertexPartition::new(vec![v(&[0]), v(&[1, 2, 3])]).is_valid(&p4));
        assert_eq!(VertexPartition::new(vec![v(&[0, 2]), v(&[1, 3])]).validate(&p4), Err(Invalid::Disconnected(0)));
    }

    #[test]
    fn profile_is_canonical_and_ordered() {
        let p: SizeProfile = [vec![1, 3], vec![2, 2], vec![3, 1]].into_iter().collect();
        assert_eq!(p.len(), 2);
        assert!(p.contains(&[1, 3]));
        let v: Vec<Vec<usize>> = p.clone().into();
        assert_eq!(v, vec![vec![3, 1], vec![2, 2]]);
        assert_eq!(p.min_parts(), vec![1, 2]);
        assert_eq!(serde_json::to_string(&p).unwrap(), "[[3,1],[2,2]]");
    }
}
