//! Side conditions of the subtree-ratio argument, evaluated on an actual
//! tree rather than assumed.
//!
//! With `v` in the subtree core and `w` a leaf, two configurations matter:
//!
//! * `d(v, w) = 1`: `v` has two further children `v1`, `v2` (rooted at `v`
//!   inside `T - vw`), ordered so that `F_{T_1}(v1) >= F_{T_2}(v2)`. The
//!   condition is `2(1 + F_{T_2}(v2)) >= F_{T_1}(v1) >= F_{T_2}(v2)`, and the
//!   bound concerns `F_{T_v}(v) = (1 + F_{T_1}(v1))(1 + F_{T_2}(v2))`.
//! * `d(v, w) = 2`: `x` is the common neighbor and `y` the third neighbor of
//!   `x`. The condition is `F_{T_v}(v) = 2 F_{T_x}(x) + 1`, and the bound
//!   concerns `F_T(w) = 1 + (F_{T_v}(v) + 1) F_{T_x}(x)`.

use serde::Serialize;

use super::{distance_two_core_bound, leaf_adjacent_core_bound, ExtremalError};
use crate::families::is_rooted_caterpillar;
use crate::invariants::{side_subtree_count, vertex_profile, BigCount, VertexProfile};
use crate::tree::{Tree, Vertex};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DistanceOneConditions {
    /// Child of `v` with the larger rooted count.
    pub v1: Vertex,
    pub v2: Vertex,
    #[serde(serialize_with = "crate::decimal::one")]
    pub f1: BigCount,
    #[serde(serialize_with = "crate::decimal::one")]
    pub f2: BigCount,
    pub size1: usize,
    pub size2: usize,
    /// `2(1 + f2) >= f1 >= f2`.
    pub cond1: bool,
    /// `F_{T_v}(v)`, the subtrees containing `v` in `T - vw`.
    #[serde(serialize_with = "crate::decimal::one")]
    pub f_tv: BigCount,
    /// `F_{T_v}(v) = (1 + f1)(1 + f2)`.
    pub product_identity: bool,
    #[serde(serialize_with = "crate::decimal::one")]
    pub bound: BigCount,
    pub meets_bound: bool,
    pub attains_bound: bool,
    /// Both branches are rooted caterpillars with the sizes of the
    /// equality case: `(n-2)/2` each for `n ≡ 0`, `n/2` and `(n-4)/2` for
    /// `n ≡ 2 (mod 4)`.
    pub equality_shape: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DistanceTwoConditions {
    pub x: Vertex,
    pub y: Vertex,
    pub x_in_core: bool,
    /// `F_{T_x}(x)`, with `T_x` the component of `x` in `T - wx - xv`.
    #[serde(serialize_with = "crate::decimal::one")]
    pub f_tx: BigCount,
    #[serde(serialize_with = "crate::decimal::one")]
    pub f_ty: BigCount,
    #[serde(serialize_with = "crate::decimal::one")]
    pub f_tv: BigCount,
    pub size_v: usize,
    pub size_y: usize,
    /// `F_{T_v}(v) = 2 F_{T_x}(x) + 1`.
    pub cond2: bool,
    #[serde(serialize_with = "crate::decimal::one")]
    pub f_w: BigCount,
    /// `F_T(w) = 1 + (F_{T_v}(v) + 1) F_{T_x}(x)`.
    pub leaf_identity: bool,
    /// Only defined from order 8 on.
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "crate::decimal::optional")]
    pub bound: Option<BigCount>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub meets_bound: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "distance")]
pub enum ConditionReport {
    #[serde(rename = "1")]
    DistanceOne(DistanceOneConditions),
    #[serde(rename = "2")]
    DistanceTwo(DistanceTwoConditions),
}

/// Evaluates the side conditions for the core vertex `v` and the leaf `w`.
pub fn verify_conditions(t: &Tree, v: Vertex, w: Vertex) -> Result<ConditionReport, ExtremalError> {
    verify_conditions_with(t, &vertex_profile(t), v, w)
}

/// As [`verify_conditions`], reusing a profile of `t`.
pub fn verify_conditions_with(
    t: &Tree,
    profile: &VertexProfile,
    v: Vertex,
    w: Vertex,
) -> Result<ConditionReport, ExtremalError> {
    t.check_vertex(v)?;
    t.check_vertex(w)?;
    let n = t.order();
    if n < 4 || !t.is_binary() {
        return Err(ExtremalError::BadConfiguration("expected a binary tree of order at least 4".into()));
    }
    if !t.is_leaf(w) {
        return Err(ExtremalError::BadConfiguration(format!("vertex {w} is not a leaf")));
    }
    let core = profile.middle_parts().core;
    if !core.contains(&v) {
        return Err(ExtremalError::BadConfiguration(format!("vertex {v} is not in the subtree core")));
    }
    match t.distance(v, w) {
        1 => Ok(ConditionReport::DistanceOne(distance_one(t, v, w)?)),
        2 => Ok(ConditionReport::DistanceTwo(distance_two(t, profile, &core, v, w)?)),
        d => Err(ExtremalError::BadConfiguration(format!("d(v, w) = {d}, expected 1 or 2"))),
    }
}

fn distance_one(t: &Tree, v: Vertex, w: Vertex) -> Result<DistanceOneConditions, ExtremalError> {
    let n = t.order();
    let kids: Vec<Vertex> = t.neighbors(v).iter().copied().filter(|&c| c != w).collect();
    let (mut v1, mut v2) = (kids[0], kids[1]);
    let mut f1 = side_subtree_count(t, v, v1)?;
    let mut f2 = side_subtree_count(t, v, v2)?;
    if f1 < f2 {
        std::mem::swap(&mut v1, &mut v2);
        std::mem::swap(&mut f1, &mut f2);
    }
    let (size1, size2) = (t.side(v, v1).len(), t.side(v, v2).len());
    let cond1 = (&f2 + 1u32) * 2u32 >= f1;
    let f_tv = side_subtree_count(t, w, v)?;
    let product_identity = f_tv == (&f1 + 1u32) * (&f2 + 1u32);
    let bound = leaf_adjacent_core_bound(n)?;
    let sizes = if n.is_multiple_of(4) { ((n - 2) / 2, (n - 2) / 2) } else { (n / 2, (n - 4) / 2) };
    let equality_shape = (size1.max(size2), size1.min(size2)) == sizes
        && is_rooted_caterpillar(t, v1, Some(v))
        && is_rooted_caterpillar(t, v2, Some(v));
    Ok(DistanceOneConditions {
        v1,
        v2,
        meets_bound: f_tv >= bound,
        attains_bound: f_tv == bound,
        f1,
        f2,
        size1,
        size2,
        cond1,
        f_tv,
        product_identity,
        bound,
        equality_shape,
    })
}

fn distance_two(
    t: &Tree,
    profile: &VertexProfile,
    core: &[Vertex],
    v: Vertex,
    w: Vertex,
) -> Result<DistanceTwoConditions, ExtremalError> {
    let n = t.order();
    let x = t.neighbors(w)[0];
    let y = t.neighbors(x).iter().copied().find(|&z| z != w && z != v).expect("x has degree 3");
    let f_ty = side_subtree_count(t, x, y)?;
    let f_tx = &f_ty + 1u32;
    let f_tv = side_subtree_count(t, x, v)?;
    let cond2 = f_tv == &f_tx * 2u32 + 1u32;
    let f_w = profile.subtrees[w].clone();
    let leaf_identity = f_w == (&f_tv + 1u32) * &f_tx + 1u32;
    let bound = if n >= 8 { Some(distance_two_core_bound(n)?) } else { None };
    let meets_bound = bound.as_ref().map(|b| &f_w >= b);
    Ok(DistanceTwoConditions {
        x,
        y,
        x_in_core: core.contains(&x),
        size_v: t.side(x, v).len(),
        size_y: t.side(x, y).len(),
        f_tx,
        f_ty,
        f_tv,
        cond2,
        f_w,
        leaf_identity,
        bound,
        meets_bound,
    })
}
