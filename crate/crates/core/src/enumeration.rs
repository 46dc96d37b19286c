//! Isomorphism-free generation of binary trees.
//!
//! Rooted shapes (every internal vertex has two children) are built by
//! unordered composition of smaller shapes. An unrooted binary tree of even
//! order `n` is then assembled around its centroid: either one vertex whose
//! three branches are rooted shapes of order `< n/2`, or, when `n/2` is odd,
//! a centroid edge joining two rooted shapes of order `n/2`. Each
//! isomorphism class arises from exactly one multiset of branch shapes, so
//! no deduplication pass is needed.

use rayon::prelude::*;

use crate::code::{parse_code, parse_rooted_code, CanonicalCode};
use crate::tree::{RootedTree, Tree, TreeError};

/// Which family an [`EnumerationTask`] walks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TreeKind {
    /// Unrooted trees with all degrees in {1, 3}; even order.
    UnrootedBinary,
    /// Rooted trees whose internal vertices have two children; odd order.
    RootedBinary,
}

/// One slice of an enumeration: partition `index` out of `count`.
///
/// Unrooted trees are assigned by the position of their smallest branch
/// shape, rooted trees by the position of their smaller child shape.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    pub index: usize,
    pub count: usize,
}

impl Partition {
    fn owns(&self, key: usize) -> bool {
        key % self.count == self.index
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct EnumerationTask {
    pub order: usize,
    pub kind: TreeKind,
    pub partition: Option<Partition>,
}

impl EnumerationTask {
    pub fn new(order: usize, kind: TreeKind) -> Result<Self, TreeError> {
        match kind {
            TreeKind::UnrootedBinary if order < 2 || order % 2 == 1 => {
                Err(TreeError::BadOrder { order, reason: "binary trees have even order >= 2" })
            }
            TreeKind::RootedBinary if order.is_multiple_of(2) => {
                Err(TreeError::BadOrder { order, reason: "rooted binary trees have odd order" })
            }
            _ => Ok(EnumerationTask { order, kind, partition: None }),
        }
    }

    pub fn with_partition(mut self, index: usize, count: usize) -> Self {
        assert!(count > 0 && index < count, "partition {index} of {count}");
        self.partition = Some(Partition { index, count });
        self
    }

    /// Canonical codes in this task's slice, ascending.
    pub fn codes(&self) -> Vec<CanonicalCode> {
        let table = ShapeTable::up_to(match self.kind {
            TreeKind::UnrootedBinary => self.order / 2,
            TreeKind::RootedBinary => self.order,
        });
        let mut out = match self.kind {
            TreeKind::UnrootedBinary => unrooted_codes(&table, self.order, self.partition),
            TreeKind::RootedBinary => table.rooted_codes(self.order, self.partition),
        };
        out.sort_unstable();
        out
    }
}

/// Rooted binary shapes of every odd order up to a bound, each list sorted
/// by code.
struct ShapeTable {
    by_order: Vec<Vec<String>>,
}

impl ShapeTable {
    fn up_to(max_order: usize) -> Self {
        let mut by_order: Vec<Vec<String>> = vec![Vec::new(); max_order + 1];
        if max_order >= 1 {
            by_order[1].push("()".to_string());
        }
        for m in (3..=max_order).step_by(2) {
            by_order[m] = Self::compose(&by_order, m, None);
        }
        ShapeTable { by_order }
    }

    fn compose(by_order: &[Vec<String>], m: usize, partition: Option<Partition>) -> Vec<String> {
        let mut shapes = Vec::new();
        let mut key = 0;
        for small in (1..=(m - 1) / 2).step_by(2) {
            let large = m - 1 - small;
            for (i, a) in by_order[small].iter().enumerate() {
                let start = if small == large { i } else { 0 };
                let owned = partition.is_none_or(|p| p.owns(key));
                key += 1;
                if !owned {
                    continue;
                }
                for b in &by_order[large][start..] {
                    let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
                    let mut s = String::with_capacity(m * 2);
                    s.push('(');
                    s.push_str(lo);
                    s.push_str(hi);
                    s.push(')');
                    shapes.push(s);
                }
            }
        }
        shapes.sort_unstable();
        shapes
    }

    fn rooted_codes(&self, m: usize, partition: Option<Partition>) -> Vec<CanonicalCode> {
        let list = match (m, partition) {
            (1, Some(p)) if p.index != 0 => Vec::new(),
            (1, _) => self.by_order[1].clone(),
            (_, None) => self.by_order[m].clone(),
            (_, Some(_)) => Self::compose(&self.by_order, m, partition),
        };
        list.into_iter().map(CanonicalCode::from_raw).collect()
    }
}

fn unrooted_codes(table: &ShapeTable, n: usize, partition: Option<Partition>) -> Vec<CanonicalCode> {
    let mut out = Vec::new();
    let owned = |key: usize| partition.is_none_or(|p| p.owns(key));
    if n == 2 {
        if owned(0) {
            out.push(CanonicalCode::from_raw("()()".into()));
        }
        return out;
    }
    // all shapes small enough to hang off a unique centroid, sorted by code
    let mut pool: Vec<(&str, usize)> = (1..n)
        .step_by(2)
        .filter(|&s| 2 * s < n)
        .flat_map(|s| table.by_order[s].iter().map(move |c| (c.as_str(), s)))
        .collect();
    pool.sort_unstable();
    let mut by_size: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (idx, &(_, s)) in pool.iter().enumerate() {
        by_size[s].push(idx);
    }
    for i in 0..pool.len() {
        if !owned(i) {
            continue;
        }
        let (ci, si) = pool[i];
        for j in i..pool.len() {
            let (cj, sj) = pool[j];
            if si + sj >= n - 1 {
                continue;
            }
            let sk = n - 1 - si - sj;
            if 2 * sk >= n {
                continue;
            }
            let candidates = &by_size[sk];
            let from = candidates.partition_point(|&k| k < j);
            for &k in &candidates[from..] {
                let ck = pool[k].0;
                let mut s = String::with_capacity(2 * n);
                s.push('(');
                s.push_str(ci);
                s.push_str(cj);
                s.push_str(ck);
                s.push(')');
                out.push(CanonicalCode::from_raw(s));
            }
        }
    }
    // bicentroidal classes: a centroid edge with n/2 vertices on each side
    let half = n / 2;
    if half % 2 == 1 {
        let shapes = &table.by_order[half];
        for i in 0..shapes.len() {
            if !owned(pool.len() + i) {
                continue;
            }
            for b in &shapes[i..] {
                out.push(CanonicalCode::from_raw(format!("{}{}", shapes[i], b)));
            }
        }
    }
    out
}

/// Canonical codes of all binary trees of even order `n`, ascending.
pub fn binary_tree_codes(n: usize) -> Result<Vec<CanonicalCode>, TreeError> {
    Ok(EnumerationTask::new(n, TreeKind::UnrootedBinary)?.codes())
}

/// Same result as [`binary_tree_codes`], split over `jobs` partitions that
/// run on the current rayon pool and are merged by code.
pub fn binary_tree_codes_parallel(n: usize, jobs: usize) -> Result<Vec<CanonicalCode>, TreeError> {
    let task = EnumerationTask::new(n, TreeKind::UnrootedBinary)?;
    let jobs = jobs.max(1);
    let mut all: Vec<CanonicalCode> =
        (0..jobs).into_par_iter().flat_map_iter(|i| task.with_partition(i, jobs).codes()).collect();
    all.sort_unstable();
    Ok(all)
}

/// One representative per isomorphism class of binary trees of order `n`,
/// in ascending canonical-code order. Vertex numbering follows [`parse_code`].
pub fn enumerate_binary_trees(n: usize) -> Result<impl Iterator<Item = Tree>, TreeError> {
    Ok(binary_tree_codes(n)?.into_iter().map(|c| parse_code(c.as_str()).expect("enumerated codes parse")))
}

/// Rooted binary trees of odd order `m`, one per rooted-isomorphism class,
/// in ascending code order. The root is vertex 0.
pub fn enumerate_rooted_binary_trees(m: usize) -> Result<Vec<RootedTree>, TreeError> {
    Ok(rooted_binary_codes(m)?
        .iter()
        .map(|c| parse_rooted_code(c.as_str()).expect("enumerated codes parse"))
        .collect())
}

pub fn rooted_binary_codes(m: usize) -> Result<Vec<CanonicalCode>, TreeError> {
    Ok(EnumerationTask::new(m, TreeKind::RootedBinary)?.codes())
}

/// Rooted shape counts by odd order, `counts[m]`, without building shapes.
fn rooted_counts(max_order: usize) -> Vec<u128> {
    let mut c = vec![0u128; max_order + 1];
    if max_order >= 1 {
        c[1] = 1;
    }
    for m in (3..=max_order).step_by(2) {
        let mut total = 0;
        for small in (1..=(m - 1) / 2).step_by(2) {
            let large = m - 1 - small;
            total += if small == large { c[small] * (c[small] + 1) / 2 } else { c[small] * c[large] };
        }
        c[m] = total;
    }
    c
}

/// Multisets of size `k` drawn from `x` kinds.
fn multichoose(x: u128, k: u32) -> u128 {
    match k {
        1 => x,
        2 => x * (x + 1) / 2,
        3 => x * (x + 1) * (x + 2) / 6,
        _ => unreachable!(),
    }
}

/// Number of binary trees of even order `n` up to isomorphism.
pub fn count_binary_trees(n: usize) -> Result<u128, TreeError> {
    EnumerationTask::new(n, TreeKind::UnrootedBinary)?;
    if n == 2 {
        return Ok(1);
    }
    let c = rooted_counts(n);
    let mut total = 0u128;
    for a in (1..n).step_by(2).filter(|&s| 2 * s < n) {
        for b in (a..n).step_by(2).filter(|&s| 2 * s < n) {
            if a + b >= n - 1 {
                break;
            }
            let cc = n - 1 - a - b;
            if cc < b || 2 * cc >= n {
                continue;
            }
            total += match (a == b, b == cc) {
                (true, true) => multichoose(c[a], 3),
                (true, false) => multichoose(c[a], 2) * c[cc],
                (false, true) => c[a] * multichoose(c[b], 2),
                (false, false) => c[a] * c[b] * c[cc],
            };
        }
    }
    let half = n / 2;
    if half % 2 == 1 {
        total += multichoose(c[half], 2);
    }
    Ok(total)
}

/// Number of rooted binary trees of odd order `m`.
pub fn count_rooted_binary_trees(m: usize) -> Result<u128, TreeError> {
    EnumerationTask::new(m, TreeKind::RootedBinary)?;
    Ok(rooted_counts(m)[m])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::canonical_code;
    use crate::families::{binary_caterpillar, three_way_caterpillar};

    #[test]
    fn small_orders() {
        assert_eq!(binary_tree_codes(2).unwrap().len(), 1);
        let four = binary_tree_codes(4).unwrap();
        assert_eq!(four, vec![canonical_code(&binary_caterpillar(4).unwrap())]);
        assert_eq!(binary_tree_codes(6).unwrap().len(), 1);
        assert_eq!(binary_tree_codes(8).unwrap(), vec![canonical_code(&binary_caterpillar(8).unwrap())]);
        let ten = binary_tree_codes(10).unwrap();
        let mut expected = vec![
            canonical_code(&binary_caterpillar(10).unwrap()),
            canonical_code(&three_way_caterpillar(3, 3, 3).unwrap().0),
        ];
        expected.sort();
        assert_eq!(ten, expected);
    }

    #[test]
    fn bad_orders() {
        for n in [0, 1, 3, 9] {
            assert!(binary_tree_codes(n).is_err(), "n={n}");
            assert!(count_binary_trees(n).is_err(), "n={n}");
        }
        assert!(rooted_binary_codes(4).is_err());
        assert!(rooted_binary_codes(0).is_err());
    }

    #[test]
    fn rooted_counts_match() {
        let expected = [(1, 1), (3, 1), (5, 1), (7, 2), (9, 3), (11, 6), (13, 11), (15, 23)];
        for (m, count) in expected {
            assert_eq!(rooted_binary_codes(m).unwrap().len() as u128, count, "m={m}");
            assert_eq!(count_rooted_binary_trees(m).unwrap(), count);
        }
        for rt in enumerate_rooted_binary_trees(11).unwrap() {
            assert!(rt.is_full_binary());
            assert_eq!(rt.order(), 11);
        }
    }

    #[test]
    fn codes_strictly_increase_and_counts_agree() {
        for n in (2..=30).step_by(2) {
            let codes = binary_tree_codes(n).unwrap();
            assert!(codes.windows(2).all(|w| w[0] < w[1]), "n={n}");
            assert_eq!(codes.len() as u128, count_binary_trees(n).unwrap(), "n={n}");
        }
    }

    #[test]
    fn partitions_cover_exactly() {
        for n in [12, 18, 22] {
            let full = binary_tree_codes(n).unwrap();
            for jobs in [1, 2, 3, 5] {
                assert_eq!(binary_tree_codes_parallel(n, jobs).unwrap(), full, "n={n} jobs={jobs}");
            }
        }
        let task = EnumerationTask::new(13, TreeKind::RootedBinary).unwrap();
        let mut parts: Vec<_> = (0..3).flat_map(|i| task.with_partition(i, 3).codes()).collect();
        parts.sort();
        assert_eq!(parts, task.codes());
    }

    #[test]
    fn emitted_trees_are_canonical_binary() {
        for n in (4..=20).step_by(2) {
            for (t, code) in enumerate_binary_trees(n).unwrap().zip(binary_tree_codes(n).unwrap()) {
                assert!(t.is_binary());
                assert_eq!(t.order(), n);
                assert_eq!(canonical_code(&t), code);
            }
        }
    }
}
