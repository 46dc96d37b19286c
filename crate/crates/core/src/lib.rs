//! Distance sums and subtree counts of binary trees, computed exactly.
//!
//! The crate covers four layers:
//!
//! * [`tree`], [`families`] and [`code`]: validated trees, the caterpillar
//!   families used as extremal witnesses, and canonical parenthesis codes;
//! * [`invariants`]: per-vertex distance sums `σ_T(v)` and subtree counts
//!   `F_T(v)` by rerooting, plus the centroid and subtree core;
//! * [`enumeration`]: every binary tree (or rooted binary tree) of a given
//!   order, once per isomorphism class;
//! * [`extremal`]: exact ratios `σ_T(w)/σ_T(v)` and `F_T(v)/F_T(w)`,
//!   their closed forms, exhaustive searches and structural checks.
//!
//! ```
//! use treeratio_core::{binary_caterpillar, min_subtree_ratio, theorem_subtree_value};
//!
//! let t = binary_caterpillar(10).unwrap();
//! let best = min_subtree_ratio(&t).unwrap();
//! assert_eq!(best.ratio.to_string(), "55/28");
//! assert_eq!(best.ratio, theorem_subtree_value(10).unwrap());
//! ```

pub mod code;
mod decimal;
pub mod enumeration;
pub mod extremal;
pub mod families;
pub mod invariants;
pub mod tree;

pub use code::{canonical_code, parse_code, parse_rooted_code, rooted_code, CanonicalCode};
pub use enumeration::{
    binary_tree_codes, binary_tree_codes_parallel, count_binary_trees, count_rooted_binary_trees,
    enumerate_binary_trees, enumerate_rooted_binary_trees, rooted_binary_codes, EnumerationTask, Partition,
    TreeKind,
};
pub use extremal::{
    caterpillar_distance_ratio, closed_form_sigma_t1, closed_form_sigma_t2, distance_two_core_bound, f_k,
    leaf_adjacent_core_bound, max_distance_ratio, max_subtree_ratio, min_distance_ratio,
    min_distance_ratio_over, min_subtree_ratio, search_extremal, theorem_distance_value,
    theorem_subtree_value, tree_ratio, verify_conditions, verify_lemmas, verify_propositions, verify_theorem,
    ConditionReport, ExactRatio, ExtremalError, ExtremalRecord, MiddleSet, Mode, PropositionReport,
    RatioKind, RatioWitness, SearchOptions, TheoremReport,
};
pub use families::{
    binary_caterpillar, is_rooted_caterpillar, rooted_binary_caterpillar, three_way_caterpillar,
};
pub use invariants::{
    branch_sizes, distance_sums, middle_parts, rooted_subtree_counts, side_subtree_count, subtree_count_pair,
    subtree_counts, total_subtrees, vertex_profile, wiener_index, BigCount, MiddleParts, VertexProfile,
};
pub use tree::{make_tree, shape_counts, BinaryShape, RootedTree, Tree, TreeError, Vertex};
