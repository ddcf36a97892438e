//! Connected-set enumeration over graphs with at most 64 elements.
//!
//! Each connected set containing an anchor is produced exactly once by
//! branching on the lowest frontier element: include it, or forbid it for
//! the rest of this branch. A branch is abandoned as soon as the elements
//! outside the set can no longer be split into the required number of
//! connected parts: components of the remainder that the set cannot reach,
//! or that hold a forbidden element, can never be absorbed.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub(crate) const MAX_ELEMENTS: usize = 64;

#[inline]
pub(crate) fn bit(i: usize) -> u64 {
    1u64 << i
}

#[inline]
pub(crate) fn ones(mut x: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if x == 0 {
            None
        } else {
            let i = x.trailing_zeros() as usize;
            x &= x - 1;
            Some(i)
        }
    })
}

#[inline]
pub(crate) fn popcount(x: u64) -> usize {
    x.count_ones() as usize
}

/// Adjacency masks over at most 64 elements.
#[derive(Debug, Clone)]
pub(crate) struct MaskGraph {
    pub adj: Vec<u64>,
}

impl MaskGraph {
    pub fn vertices(g: &Graph) -> Self {
        debug_assert!(g.n() <= MAX_ELEMENTS);
        let adj = (0..g.n()).map(|v| g.neighbors(v).iter().fold(0, |acc, &(w, _)| acc | bit(w))).collect();
        MaskGraph { adj }
    }

    /// The line graph: two edges are adjacent iff they share an endpoint.
    pub fn edges(g: &Graph) -> Self {
        debug_assert!(g.m() <= MAX_ELEMENTS);
        let incident: Vec<u64> =
            (0..g.n()).map(|v| g.neighbors(v).iter().fold(0, |acc, &(_, e)| acc | bit(e))).collect();
        let adj = g.edges().iter().enumerate().map(|(e, &(u, v))| (incident[u] | incident[v]) & !bit(e)).collect();
        MaskGraph { adj }
    }

    pub fn len(&self) -> usize {
        self.adj.len()
    }

    pub fn full(&self) -> u64 {
        if self.len() == 64 {
            u64::MAX
        } else {
            bit(self.len()) - 1
        }
    }

    #[inline]
    pub fn neighbours(&self, set: u64) -> u64 {
        ones(set).fold(0, |acc, i| acc | self.adj[i])
    }

    /// Component of `start` (a single bit) inside `within`.
    #[inline]
    pub fn component(&self, start: u64, within: u64) -> u64 {
        let mut comp = start;
        let mut frontier = start;
        while frontier != 0 {
            let next = self.neighbours(frontier) & within & !comp;
            comp |= next;
            frontier = next;
        }
        comp
    }

    pub fn is_connected(&self, set: u64) -> bool {
        set != 0 && self.component(set & set.wrapping_neg(), set) == set
    }

    /// Edges with both endpoints in `set` (vertex masks only).
    pub fn internal_edges(&self, set: u64) -> usize {
        ones(set).map(|v| popcount(self.adj[v] & set)).sum::<usize>() / 2
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Flow {
    Continue,
    Stop,
}

/// Shared node budget and cancellation flag.
pub(crate) struct Budget {
    pub nodes: AtomicU64,
    pub limit: u64,
    pub stop: AtomicBool,
}

impl Budget {
    pub fn new(limit: Option<u64>) -> Self {
        Budget { nodes: AtomicU64::new(0), limit: limit.unwrap_or(u64::MAX), stop: AtomicBool::new(false) }
    }

    pub fn counter(&self) -> Counter<'_> {
        Counter { budget: self, local: 0 }
    }

    pub fn total(&self) -> u64 {
        self.nodes.load(Ordering::Relaxed)
    }

    pub fn cancel(&self) {
        self.stop.store(true, Ordering::Relaxed);
    }

    pub fn cancelled(&self) -> bool {
        self.stop.load(Ordering::Relaxed)
    }
}

pub(crate) struct Counter<'a> {
    budget: &'a Budget,
    local: u64,
}

const FLUSH: u64 = 1 << 12;

impl Counter<'_> {
    #[inline]
    pub fn tick(&mut self) -> Result<Flow> {
        self.local += 1;
        if self.local == FLUSH {
            self.flush()?;
            if self.budget.cancelled() {
                return Ok(Flow::Stop);
            }
        }
        Ok(Flow::Continue)
    }

    /// Errors if any search sharing this budget ran out.
    pub fn check(&self) -> Result<()> {
        if self.budget.cancelled() {
            return Err(Error::TooLarge(format!("node budget of {} exhausted", self.budget.limit)));
        }
        Ok(())
    }

    pub fn flush(&mut self) -> Result<()> {
        let before = self.budget.nodes.fetch_add(self.local, Ordering::Relaxed);
        let after = before.saturating_add(std::mem::take(&mut self.local));
        if after > self.budget.limit {
            self.budget.cancel();
            return Err(Error::TooLarge(format!("node budget of {} exhausted", self.budget.limit)));
        }
        Ok(())
    }
}

impl Drop for Counter<'_> {
    fn drop(&mut self) {
        self.budget.nodes.fetch_add(self.local, Ordering::Relaxed);
    }
}

/// A node of the include/forbid search tree.
#[derive(Debug, Clone, Copy)]
pub(crate) struct State {
    pub set: u64,
    pub frontier: u64,
    pub forbidden: u64,
}

/// One connected-set search inside `universe`.
#[derive(Clone, Copy)]
pub(crate) struct Search<'g> {
    pub g: &'g MaskGraph,
    pub universe: u64,
    /// parts that must still fit in the remainder
    pub parts_after: usize,
    /// exact set size, if any
    pub size: Option<usize>,
}

impl<'g> Search<'g> {
    pub fn new(g: &'g MaskGraph, universe: u64, parts_after: usize) -> Self {
        Search { g, universe, parts_after, size: None }
    }

    pub fn with_size(mut self, size: usize) -> Self {
        self.size = Some(size);
        self
    }

    /// Root state anchored at the lowest element of the universe.
    pub fn root(&self) -> State {
        let a = self.universe & self.universe.wrapping_neg();
        State { set: a, frontier: self.g.neighbours(a) & self.universe & !a, forbidden: 0 }
    }

    pub fn feasible(&self, st: &State) -> bool {
        let rem = self.universe & !st.set;
        if popcount(rem) < self.parts_after {
            return false;
        }
        if let Some(t) = self.size {
            if popcount(st.set) > t {
                return false;
            }
        }
        if self.parts_after == 0 {
            return true;
        }
        let touching = self.g.neighbours(st.set) & rem;
        let mut left = rem;
        let mut stuck = 0;
        while left != 0 {
            let c = self.g.component(left & left.wrapping_neg(), left);
            left &= !c;
            if c & touching == 0 || c & st.forbidden != 0 {
                stuck += 1;
                if stuck > self.parts_after {
                    return false;
                }
            }
        }
        true
    }

    fn children(&self, st: &State) -> (State, State) {
        let c = st.frontier & st.frontier.wrapping_neg();
        let set = st.set | c;
        let inc = State {
            set,
            frontier: (st.frontier | self.g.adj[c.trailing_zeros() as usize]) & self.universe & !set & !st.forbidden,
            forbidden: st.forbidden,
        };
        let exc = State { set: st.set, frontier: st.frontier & !c, forbidden: st.forbidden | c };
        (inc, exc)
    }

    fn is_leaf(&self, st: &State) -> bool {
        st.frontier == 0 || self.size == Some(popcount(st.set))
    }

    /// Feasible states at depth `depth` (or earlier leaves), in DFS order.
    pub fn frontier_states(&self, depth: usize) -> Vec<State> {
        let mut out = Vec::new();
        self.collect_states(self.root(), depth, &mut out);
        out
    }

    fn collect_states(&self, st: State, depth: usize, out: &mut Vec<State>) {
        if !self.feasible(&st) {
            return;
        }
        if depth == 0 || self.is_leaf(&st) {
            out.push(st);
            return;
        }
        let (inc, exc) = self.children(&st);
        self.collect_states(inc, depth - 1, out);
        self.collect_states(exc, depth - 1, out);
    }

    /// Calls `visit` on every connected set reachable from `st`.
    pub fn run<F>(&self, st: State, ctr: &mut Counter<'_>, visit: &mut F) -> Result<Flow>
    where
        F: FnMut(u64, &mut Counter<'_>) -> Result<Flow>,
    {
        if ctr.tick()? == Flow::Stop || !self.feasible(&st) {
            return Ok(if ctr.budget.cancelled() { Flow::Stop } else { Flow::Continue });
        }
        if self.is_leaf(&st) {
            if self.size.is_some_and(|t| popcount(st.set) != t) {
                return Ok(Flow::Continue);
            }
            return visit(st.set, ctr);
        }
        let (inc, exc) = self.children(&st);
        if self.run(inc, ctr, visit)? == Flow::Stop {
            return Ok(Flow::Stop);
        }
        self.run(exc, ctr, visit)
    }
}
