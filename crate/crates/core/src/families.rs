//! Named tree families used as extremal witnesses.
//!
//! Every generator numbers vertices spine-first: internal spine vertices in
//! path order, then the leaves in the order of the spine vertex they hang
//! from. Witness vertices in reports refer to this numbering.

use crate::tree::{RootedTree, Tree, TreeError, Vertex};

/// Binary caterpillar of even order `n >= 4`: internal vertices form a path
/// `0 - 1 - ... - s-1` with `s = (n - 2) / 2`; the two spine ends carry two
/// leaves each and every interior spine vertex carries one.
pub fn binary_caterpillar(n: usize) -> Result<Tree, TreeError> {
    if n < 4 || n % 2 == 1 {
        return Err(TreeError::BadOrder { order: n, reason: "order must be even ≥ 4" });
    }
    let spine = (n - 2) / 2;
    let mut edges: Vec<(Vertex, Vertex)> = (1..spine).map(|i| (i - 1, i)).collect();
    let mut next = spine;
    for i in 0..spine {
        let leaves = if spine == 1 {
            3
        } else if i == 0 || i == spine - 1 {
            2
        } else {
            1
        };
        for _ in 0..leaves {
            edges.push((i, next));
            next += 1;
        }
    }
    debug_assert_eq!(next, n);
    Tree::from_edges(n, &edges)
}

/// Edges of a rooted binary caterpillar with `k` internal vertices, shifted by
/// `offset`. Vertex `offset` is the root.
fn rooted_caterpillar_edges(k: usize, offset: usize, edges: &mut Vec<(Vertex, Vertex)>) {
    if k == 0 {
        return;
    }
    for i in 1..k {
        edges.push((offset + i - 1, offset + i));
    }
    let mut next = offset + k;
    for i in 0..k {
        let leaves = if i == k - 1 { 2 } else { 1 };
        for _ in 0..leaves {
            edges.push((offset + i, next));
            next += 1;
        }
    }
}

/// Rooted binary caterpillar with `k >= 1` internal vertices (`2k + 1` in
/// total). The root is vertex 0; internal vertex `i` has the leaf child and
/// internal child `i + 1`, and the deepest internal vertex `k - 1` has two
/// leaf children.
pub fn rooted_binary_caterpillar(k: usize) -> Result<RootedTree, TreeError> {
    if k == 0 {
        return Err(TreeError::BadOrder { order: 1, reason: "need at least one internal vertex" });
    }
    let mut edges = Vec::with_capacity(2 * k);
    rooted_caterpillar_edges(k, 0, &mut edges);
    RootedTree::new(Tree::from_edges(2 * k + 1, &edges)?, 0)
}

/// The 3-way caterpillar: a center joined to the roots of three rooted
/// binary caterpillars of odd orders `a`, `b`, `c` (order 1 is a bare leaf).
///
/// Returns the tree and the center, which is always vertex 0; the branches
/// follow in argument order, each numbered spine-first.
pub fn three_way_caterpillar(a: usize, b: usize, c: usize) -> Result<(Tree, Vertex), TreeError> {
    if [a, b, c].iter().any(|&s| s == 0 || s % 2 == 0) {
        return Err(TreeError::BadBranchSizes(a, b, c));
    }
    let n = a + b + c + 1;
    let mut edges = Vec::with_capacity(n - 1);
    let mut offset = 1;
    for size in [a, b, c] {
        edges.push((0, offset));
        rooted_caterpillar_edges((size - 1) / 2, offset, &mut edges);
        offset += size;
    }
    Ok((Tree::from_edges(n, &edges)?, 0))
}

/// Whether the branch hanging from `root` (away from `blocked`, if given) is a
/// rooted binary caterpillar: every vertex with children has exactly two,
/// and at least one of them is a leaf. A lone vertex counts as the
/// degenerate caterpillar with no internal vertices.
pub fn is_rooted_caterpillar(t: &Tree, root: Vertex, blocked: Option<Vertex>) -> bool {
    let mut stack = vec![(root, blocked)];
    while let Some((z, parent)) = stack.pop() {
        let children: Vec<Vertex> = t.neighbors(z).iter().copied().filter(|&c| Some(c) != parent).collect();
        match children.len() {
            0 => {}
            2 => {
                let leaf_child = children.iter().any(|&c| t.degree(c) == 1);
                if !leaf_child {
                    return false;
                }
                stack.extend(children.into_iter().map(|c| (c, Some(z))));
            }
            _ => return false,
        }
    }
    true
}
