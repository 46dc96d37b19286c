//! Canonical parenthesis codes for rooted and unrooted trees.
//!
//! A rooted code is `(` + the children's codes in ascending byte order + `)`;
//! a leaf is `()`. An unrooted tree is rooted at its centroid. When the
//! centroid is an adjacent pair, the centroid edge is cut and the two rooted
//! codes are written one after the other, smaller first, with no enclosing
//! pair. A code with one top-level group therefore always denotes a
//! unicentroidal tree and a code with two groups a bicentroidal one, which
//! keeps [`parse_code`] unambiguous.
//!
//! The star `K_{1,3}` has code `(()()())`; the single edge has code `()()`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::tree::{RootedTree, Tree, TreeError, Vertex};

/// Canonical code over the alphabet `(`, `)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CanonicalCode(String);

impl CanonicalCode {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn into_string(self) -> String {
        self.0
    }

    /// Number of vertices the code describes.
    pub fn vertex_count(&self) -> usize {
        self.0.len() / 2
    }

    /// Wraps a string that is already known to be a canonical code.
    pub(crate) fn from_raw(s: String) -> Self {
        CanonicalCode(s)
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl AsRef<str> for CanonicalCode {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

/// Rooted codes of every vertex of `t` when rooted at `root`, with the edge
/// `(root, blocked)` treated as absent. Vertices outside the root's component
/// get empty strings.
fn rooted_codes(t: &Tree, root: Vertex, blocked: Option<Vertex>) -> Vec<String> {
    let n = t.order();
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    seen[root] = true;
    if let Some(b) = blocked {
        seen[b] = true;
    }
    order.push(root);
    let mut head = 0;
    while head < order.len() {
        let u = order[head];
        head += 1;
        for &v in t.neighbors(u) {
            if !seen[v] {
                seen[v] = true;
                parent[v] = u;
                order.push(v);
            }
        }
    }
    let mut codes = vec![String::new(); n];
    let mut kids: Vec<Vec<String>> = vec![Vec::new(); n];
    for &v in order.iter().rev() {
        let mut children = std::mem::take(&mut kids[v]);
        children.sort_unstable();
        let len = 2 + children.iter().map(String::len).sum::<usize>();
        let mut s = String::with_capacity(len);
        s.push('(');
        for c in &children {
            s.push_str(c);
        }
        s.push(')');
        if v != root {
            kids[parent[v]].push(s);
        } else {
            codes[v] = s;
        }
    }
    codes
}

/// Centroid vertices via branch sizes: vertices whose largest component in
/// `T - v` has at most `n / 2` vertices. Ascending, one or two entries.
pub(crate) fn centroid_by_sizes(t: &Tree) -> Vec<Vertex> {
    let n = t.order();
    let (order, parent) = t.bfs(0);
    let mut size = vec![1usize; n];
    for &v in order.iter().rev().take(n - 1) {
        size[parent[v]] += size[v];
    }
    let mut out: Vec<Vertex> = t
        .vertices()
        .filter(|&v| {
            let up = n - size[v];
            let down =
                t.neighbors(v).iter().filter(|&&c| parent[c] == v).map(|&c| size[c]).max().unwrap_or(0);
            up.max(down) * 2 <= n
        })
        .collect();
    out.sort_unstable();
    out
}

/// Canonical code of a rooted tree.
pub fn rooted_code(rt: &RootedTree) -> CanonicalCode {
    let root = rt.root();
    CanonicalCode(rooted_codes(rt.tree(), root, None).swap_remove(root))
}

/// Canonical code of an unrooted tree; equal codes iff isomorphic trees.
pub fn canonical_code(t: &Tree) -> CanonicalCode {
    let centroid = centroid_by_sizes(t);
    match centroid[..] {
        [c] => CanonicalCode(rooted_codes(t, c, None).swap_remove(c)),
        [a, b] => {
            let ca = rooted_codes(t, a, Some(b)).swap_remove(a);
            let cb = rooted_codes(t, b, Some(a)).swap_remove(b);
            let (lo, hi) = if ca <= cb { (ca, cb) } else { (cb, ca) };
            CanonicalCode(lo + &hi)
        }
        _ => unreachable!("a tree has one or two centroid vertices"),
    }
}

/// Edges, group roots and vertex count of a parsed forest.
type Forest = (Vec<(Vertex, Vertex)>, Vec<Vertex>, usize);

/// Parses a sequence of balanced groups into a forest of rooted trees.
/// Vertices are numbered in preorder.
fn parse_groups(code: &str) -> Result<Forest, TreeError> {
    let mut edges = Vec::new();
    let mut roots = Vec::new();
    let mut stack: Vec<Vertex> = Vec::new();
    let mut next = 0;
    for (position, byte) in code.bytes().enumerate() {
        match byte {
            b'(' => {
                match stack.last() {
                    Some(&p) => edges.push((p, next)),
                    None => roots.push(next),
                }
                stack.push(next);
                next += 1;
            }
            b')' => {
                if stack.pop().is_none() {
                    return Err(TreeError::Parse { position, message: "unmatched `)`".into() });
                }
            }
            other => {
                return Err(TreeError::Parse {
                    position,
                    message: format!("unexpected character {:?}", other as char),
                })
            }
        }
    }
    if !stack.is_empty() {
        return Err(TreeError::Parse {
            position: code.len(),
            message: format!("{} unclosed `(`", stack.len()),
        });
    }
    if roots.is_empty() {
        return Err(TreeError::Parse { position: 0, message: "empty code".into() });
    }
    Ok((edges, roots, next))
}

/// Builds a tree from a code with one group (rooted at the centroid) or two
/// groups (bicentroid halves). Vertices are numbered in preorder, so the
/// first group's root is vertex 0.
pub fn parse_code(code: &str) -> Result<Tree, TreeError> {
    let (mut edges, roots, n) = parse_groups(code)?;
    match roots[..] {
        [_] => {}
        [a, b] => edges.push((a, b)),
        _ => {
            return Err(TreeError::Parse {
                position: 0,
                message: format!("expected one or two top-level groups, found {}", roots.len()),
            })
        }
    }
    Tree::from_edges(n, &edges)
}

/// Builds a rooted tree from a single-group code; the root is vertex 0.
pub fn parse_rooted_code(code: &str) -> Result<RootedTree, TreeError> {
    let (edges, roots, n) = parse_groups(code)?;
    if roots.len() != 1 {
        return Err(TreeError::Parse {
            position: 0,
            message: format!("a rooted code has one top-level group, found {}", roots.len()),
        });
    }
    RootedTree::new(Tree::from_edges(n, &edges)?, 0)
}
