//! Connected graph partitions: exact profiles, connected max-cuts and
//! constructive lower-bound pipelines.
//!
//! * [`graph`] is the substrate: an immutable simple graph with dense ids,
//!   bitset vertex/edge sets, spanning trees, blocks and st-numberings.
//! * [`arith`] holds the integer machinery: the split-length sequence
//!   `t(n)`, its preimage intervals and exact partition counts.
//! * [`splits`] builds nested split sequences of trees and the partition
//!   families derived from them, plus an exact `P(T,2)` solver for trees.
//! * [`exact`] contains the brute-force oracles for `P(G,k)`, `π(G,k)`,
//!   `CMC_r(G)` and small Győri–Lovász partitions.
//! * [`bounds`] implements the constructive pipelines (dense core, path
//!   cuts, tree packing, connected cuts, ordered vertex partitions).
//! * [`families`] generates the named graph families and seeded random
//!   graphs; [`verify`] runs the cross-checking suites.

pub mod arith;
pub mod bounds;
mod error;
pub mod exact;
pub mod families;
pub mod graph;
pub mod par;
pub mod partition;
pub mod splits;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{EdgeSet, Graph, RootedTree, VertexSet};
pub use par::Parallelism;
pub use partition::{EdgePartition, SizeProfile, VertexPartition};
