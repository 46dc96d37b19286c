//! Extremal ratios of local distance and subtree functions.
//!
//! Per tree, the distance ratio `σ_T(w)/σ_T(v)` ranges over leaves `w` and
//! (by default) centroid vertices `v`; the subtree ratio `F_T(v)/F_T(w)`
//! ranges over core vertices `v` and leaves `w`. Every comparison is an
//! exact rational comparison.

mod conditions;
mod formulas;
mod ratio;
mod search;
mod verify;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use conditions::{
    verify_conditions, verify_conditions_with, ConditionReport, DistanceOneConditions, DistanceTwoConditions,
};
pub use formulas::{
    caterpillar_distance_ratio, closed_form_sigma_t1, closed_form_sigma_t2, distance_two_core_bound, f_k,
    leaf_adjacent_core_bound, theorem_distance_value, theorem_subtree_value,
};
pub use ratio::{ExactRatio, RatioParseError};
pub use search::{
    search_extremal, ExtremalRecord, SearchOptions, DEFAULT_CAP, MAX_STRUCTURE_NOTE, SCHEMA_VERSION,
};
pub use verify::{
    verify_lemmas, verify_propositions, verify_theorem, CheckResult, Counterexample, PropositionReport,
    TheoremOrderReport, TheoremReport,
};

use crate::invariants::{vertex_profile, VertexProfile};
use crate::tree::{Tree, TreeError, Vertex};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ExtremalError {
    #[error("tree has {0} vertices; ratios need at least 4")]
    TooSmall(usize),
    #[error("bad order {order}: {reason}")]
    BadOrder { order: usize, reason: &'static str },
    #[error("branch sizes must be odd and positive, got ({0}, {1}, {2})")]
    BadBranchSizes(usize, usize, usize),
    #[error("order {n} exceeds the configured cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("bad configuration: {0}")]
    BadConfiguration(String),
    #[error(transparent)]
    Tree(#[from] TreeError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RatioKind {
    /// `σ_T(w) / σ_T(v)`
    Distance,
    /// `F_T(v) / F_T(w)`
    Subtree,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Min,
    Max,
}

/// Which middle part supplies the vertex `v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MiddleSet {
    Centroid,
    Core,
}

impl RatioKind {
    /// The middle part each ratio is defined over by default.
    pub fn default_middle(self) -> MiddleSet {
        match self {
            RatioKind::Distance => MiddleSet::Centroid,
            RatioKind::Subtree => MiddleSet::Core,
        }
    }
}

/// The extremal value of one tree's ratio together with the witnessing
/// leaf `w` and middle vertex `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatioWitness {
    pub ratio: ExactRatio,
    pub w: Vertex,
    pub v: Vertex,
}

/// Extremal ratio over one tree from a precomputed profile. Ties keep the
/// pair with the smallest `(w, v)`.
pub fn tree_ratio(
    t: &Tree,
    profile: &VertexProfile,
    kind: RatioKind,
    mode: Mode,
    middle: MiddleSet,
) -> Result<RatioWitness, ExtremalError> {
    if t.order() < 4 {
        return Err(ExtremalError::TooSmall(t.order()));
    }
    let parts = profile.middle_parts();
    let middles = match middle {
        MiddleSet::Centroid => parts.centroid,
        MiddleSet::Core => parts.core,
    };
    let mut best: Option<RatioWitness> = None;
    for w in t.leaves() {
        for &v in &middles {
            let ratio = match kind {
                RatioKind::Distance => ExactRatio::from_u64(profile.sigma[w], profile.sigma[v]),
                RatioKind::Subtree => {
                    ExactRatio::new(profile.subtrees[v].clone(), profile.subtrees[w].clone())
                }
            }
            .expect("profiles are positive for n >= 2");
            let better = match (&best, mode) {
                (None, _) => true,
                (Some(b), Mode::Min) => ratio < b.ratio,
                (Some(b), Mode::Max) => ratio > b.ratio,
            };
            if better {
                best = Some(RatioWitness { ratio, w, v });
            }
        }
    }
    Ok(best.expect("a tree with n >= 4 has leaves and a middle vertex"))
}

/// Minimum of `σ_T(w)/σ_T(v)` over leaves `w` and centroid vertices `v`.
pub fn min_distance_ratio(t: &Tree) -> Result<RatioWitness, ExtremalError> {
    min_distance_ratio_over(t, MiddleSet::Centroid)
}

/// As [`min_distance_ratio`] with the middle part chosen explicitly.
pub fn min_distance_ratio_over(t: &Tree, middle: MiddleSet) -> Result<RatioWitness, ExtremalError> {
    tree_ratio(t, &vertex_profile(t), RatioKind::Distance, Mode::Min, middle)
}

/// Minimum of `F_T(v)/F_T(w)` over core vertices `v` and leaves `w`.
pub fn min_subtree_ratio(t: &Tree) -> Result<RatioWitness, ExtremalError> {
    tree_ratio(t, &vertex_profile(t), RatioKind::Subtree, Mode::Min, MiddleSet::Core)
}

pub fn max_distance_ratio(t: &Tree) -> Result<RatioWitness, ExtremalError> {
    tree_ratio(t, &vertex_profile(t), RatioKind::Distance, Mode::Max, MiddleSet::Centroid)
}

pub fn max_subtree_ratio(t: &Tree) -> Result<RatioWitness, ExtremalError> {
    tree_ratio(t, &vertex_profile(t), RatioKind::Subtree, Mode::Max, MiddleSet::Core)
}
