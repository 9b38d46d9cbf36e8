//! Exact Steiner distance invariants on trees.
//!
//! For a tree `T` on `n` vertices and a subset size `2 <= k <= n` this crate
//! computes
//!
//! - the Steiner distance `d(S)` of a vertex set (edges of its minimal subtree),
//! - the Steiner k-Wiener index `SW_k(T)`, the sum of `d(S)` over all k-sets,
//! - the per-vertex Steiner k-distance `d_k(v)` and its leaf / internal
//!   variants, where the accompanying `k - 1` vertices are drawn from all other
//!   vertices, from the leaves, or from the internal vertices,
//! - the three median vertex sets and the gaps between them,
//! - closed forms and extremal ratio bounds over comets and pendant paths.
//!
//! Every count is an exact big integer and every ratio an exact reduced
//! fraction. The fast routines count, per edge, how many subsets have a Steiner
//! tree through that edge; [`oracle`] keeps exponential brute-force versions
//! for cross-checking. [`enumerate`] generates every free tree of a given
//! order once, and [`verify`] runs the whole battery of identities and bounds
//! over those trees.

pub mod cli;
pub mod count;
pub mod enumerate;
mod error;
pub mod extremal;
pub mod median;
pub mod oracle;
pub mod ratio;
pub mod tree;
pub mod verify;

pub use count::{
    across_edge_delta, all_vertex_index, binomial, steiner_wiener, vertex_index, BigCount,
    IndexVector,
};
pub use enumerate::{enumerate_free_trees, prufer_decode, CanonicalTree, DEFAULT_CAP};
pub use error::{Error, Result};
pub use extremal::{
    comet, comet_internal_denominator, comet_leaf_denominator, global_local_bounds,
    internal_pair_ratio_bound, leaf_centroid_lower_bound, leaf_pair_ratio_bound,
    path_vertex_distance_closed, pendant_path_distance_closed, CometSpec, RatioBound,
};
pub use median::{check_gap_bounds, median, median_report, satisfactory, MedianReport};
pub use oracle::{brute_steiner_wiener, brute_vertex_index, IndexMode};
pub use ratio::Ratio;
pub use tree::{EdgeSplit, Tree, VertexClass};
pub use verify::{verify, Check, KPolicy, VerificationReport};
