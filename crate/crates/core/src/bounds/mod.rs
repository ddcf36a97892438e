//! Constructive lower-bound pipelines. Each one extracts a dense core,
//! builds partitions by an explicit construction and re-checks every
//! connectivity claim it relies on.

mod cut;
mod dense;
mod ordered;
mod packing;
mod pathcut;

pub use cut::connected_cut_bound;
pub use dense::{dense_core, long_path, CoreSubgraph};
pub use ordered::{ordered_vertex_partitions, ordered_vertex_partitions_with, OrderedReport};
pub use packing::{
    pack_forests, packing_partitions, packing_partitions_with, spanning_tree_packing, spanning_tree_packing_brute,
    PackingReport, TreePacking,
};
pub use pathcut::{path_cut_partitions, path_cut_partitions_with, PathCutReport};
