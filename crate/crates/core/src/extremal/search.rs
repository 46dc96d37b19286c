//! Exhaustive extremal-ratio search over all binary trees of one order.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{
    theorem_distance_value, theorem_subtree_value, tree_ratio, ExactRatio, ExtremalError, MiddleSet, Mode,
    RatioKind,
};
use crate::code::{parse_code, CanonicalCode};
use crate::enumeration::binary_tree_codes_parallel;
use crate::families::is_rooted_caterpillar;
use crate::invariants::vertex_profile;
use crate::tree::{Tree, Vertex};

/// Largest order searched unless the caller raises the cap.
pub const DEFAULT_CAP: usize = 24;

pub const SCHEMA_VERSION: &str = "1";

/// Annotation attached to a max-mode winner whose shape matches the
/// conjectured structure. It never asserts the conjecture.
pub const MAX_STRUCTURE_NOTE: &str = "caterpillar end joined to root of depth-balanced rooted binary tree";

#[derive(Clone, Debug)]
pub struct SearchOptions {
    pub cap: usize,
    /// Enumeration partitions; 0 lets the thread pool decide.
    pub jobs: usize,
    /// Overrides the middle part of the ratio (centroid for distance, core
    /// for subtree).
    pub middle: Option<MiddleSet>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { cap: DEFAULT_CAP, jobs: 0, middle: None }
    }
}

/// Extremal result for one order. Witness vertices refer to the numbering
/// produced by parsing `witness_code`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalRecord {
    pub schema: String,
    pub n: usize,
    pub ratio_kind: RatioKind,
    pub mode: Mode,
    pub middle: MiddleSet,
    pub best_ratio: ExactRatio,
    pub witness_code: CanonicalCode,
    pub witness_w: Vertex,
    pub witness_v: Vertex,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub formula_value: Option<ExactRatio>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matches_formula: Option<bool>,
    pub trees_examined: u64,
    /// Number of trees attaining `best_ratio`.
    pub witness_count: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub structure_note: Option<String>,
}

/// Partial result over a subset of trees; merging is associative and
/// commutative, so the final record is independent of how work is split.
#[derive(Clone, Debug)]
struct Partial {
    best: Option<(ExactRatio, CanonicalCode, Vertex, Vertex)>,
    examined: u64,
    ties: u64,
}

impl Partial {
    const EMPTY: Partial = Partial { best: None, examined: 0, ties: 0 };

    fn merge(self, other: Partial, mode: Mode) -> Partial {
        let examined = self.examined + other.examined;
        let (best, ties) = match (self.best, other.best) {
            (None, b) => (b, other.ties),
            (a, None) => (a, self.ties),
            (Some(a), Some(b)) => {
                let order = match mode {
                    Mode::Min => a.0.cmp(&b.0),
                    Mode::Max => b.0.cmp(&a.0),
                };
                match order {
                    std::cmp::Ordering::Less => (Some(a), self.ties),
                    std::cmp::Ordering::Greater => (Some(b), other.ties),
                    std::cmp::Ordering::Equal => {
                        let ties = self.ties + other.ties;
                        if (&a.1, a.2, a.3) <= (&b.1, b.2, b.3) {
                            (Some(a), ties)
                        } else {
                            (Some(b), ties)
                        }
                    }
                }
            }
        };
        Partial { best, examined, ties }
    }
}

/// Searches every binary tree of order `n` for the extremal ratio.
///
/// In min mode the record carries the closed-form value of the
/// corresponding theorem and whether the search reproduced it.
pub fn search_extremal(
    n: usize,
    kind: RatioKind,
    mode: Mode,
    options: &SearchOptions,
) -> Result<ExtremalRecord, ExtremalError> {
    if n % 2 == 1 || n < 4 {
        return Err(ExtremalError::BadOrder { order: n, reason: "order must be even ≥ 4" });
    }
    if n > options.cap {
        return Err(ExtremalError::CapExceeded { n, cap: options.cap });
    }
    let middle = options.middle.unwrap_or(kind.default_middle());
    let codes = binary_tree_codes_parallel(n, options.jobs)?;
    let partial = codes
        .into_par_iter()
        .map(|code| -> Result<Partial, ExtremalError> {
            let t = parse_code(code.as_str())?;
            let best = tree_ratio(&t, &vertex_profile(&t), kind, mode, middle)?;
            Ok(Partial { best: Some((best.ratio, code, best.w, best.v)), examined: 1, ties: 1 })
        })
        .try_reduce(|| Partial::EMPTY, |a, b| Ok(a.merge(b, mode)))?;

    let (best_ratio, witness_code, witness_w, witness_v) =
        partial.best.expect("every even order >= 4 has a binary tree");
    let formula_value = match mode {
        Mode::Min => Some(match kind {
            RatioKind::Distance => theorem_distance_value(n)?,
            RatioKind::Subtree => theorem_subtree_value(n)?,
        }),
        Mode::Max => None,
    };
    let matches_formula = formula_value.as_ref().map(|f| *f == best_ratio);
    let structure_note = match mode {
        Mode::Max => {
            let t = parse_code(witness_code.as_str())?;
            matches_max_structure(&t, witness_w).then(|| MAX_STRUCTURE_NOTE.to_string())
        }
        Mode::Min => None,
    };
    Ok(ExtremalRecord {
        schema: SCHEMA_VERSION.to_string(),
        n,
        ratio_kind: kind,
        mode,
        middle,
        best_ratio,
        witness_code,
        witness_w,
        witness_v,
        formula_value,
        matches_formula,
        trees_examined: partial.examined,
        witness_count: partial.ties,
        structure_note,
    })
}

/// Whether some vertex `r` splits `t` into a rooted caterpillar branch that
/// holds the leaf `w` and two further branches that, together with `r`,
/// form a rooted binary tree whose leaves all lie within one level of each
/// other. Both parts must be non-trivial.
fn matches_max_structure(t: &Tree, w: Vertex) -> bool {
    t.vertices().filter(|&r| t.degree(r) == 3).any(|r| {
        t.neighbors(r).iter().any(|&a| {
            let branch = t.side(r, a);
            if branch.len() < 3 || branch.binary_search(&w).is_err() || !is_rooted_caterpillar(t, a, Some(r))
            {
                return false;
            }
            let others: Vec<Vertex> = t.neighbors(r).iter().copied().filter(|&b| b != a).collect();
            depth_balanced(t, r, &others)
        })
    })
}

/// Leaf depths below `r`, restricted to the branches at `children`, span at
/// most one level, and at least one leaf sits at depth 2 or more.
fn depth_balanced(t: &Tree, r: Vertex, children: &[Vertex]) -> bool {
    let mut depths = Vec::new();
    let mut stack: Vec<(Vertex, Vertex, usize)> = children.iter().map(|&c| (c, r, 1)).collect();
    while let Some((z, parent, depth)) = stack.pop() {
        let below: Vec<Vertex> = t.neighbors(z).iter().copied().filter(|&c| c != parent).collect();
        if below.is_empty() {
            depths.push(depth);
        }
        stack.extend(below.into_iter().map(|c| (c, z, depth + 1)));
    }
    let (lo, hi) = (depths.iter().min().copied(), depths.iter().max().copied());
    matches!((lo, hi), (Some(lo), Some(hi)) if hi - lo <= 1 && hi >= 2)
}
