//! Exact distance sums, subtree counts and the two middle parts of a tree.
//!
//! Both per-vertex profiles are computed with one rooted pass plus one
//! rerooting sweep. Distance sums use `σ(c) = σ(p) + n - 2·size(c)` across
//! every edge; subtree counts combine the downward products
//! `f(v) = Π (1 + f(child))` with an upward count built from sibling
//! prefix/suffix products, so no division is ever needed.

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use crate::tree::{RootedTree, Tree, TreeError, Vertex};

/// Arbitrary-precision nonnegative count.
pub type BigCount = BigUint;

/// Per-vertex distance sums and subtree counts of one tree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexProfile {
    /// `sigma[v]` is the sum of distances from `v` to every vertex.
    pub sigma: Vec<u64>,
    /// `subtrees[v]` is the number of subtrees containing `v`.
    #[serde(serialize_with = "crate::decimal::many")]
    pub subtrees: Vec<BigCount>,
}

/// Centroid and subtree core, each sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MiddleParts {
    pub centroid: Vec<Vertex>,
    pub core: Vec<Vertex>,
}

struct Rooting {
    order: Vec<Vertex>,
    parent: Vec<Vertex>,
    children: Vec<Vec<Vertex>>,
}

impl Rooting {
    fn new(t: &Tree, root: Vertex) -> Self {
        let (order, parent) = t.bfs(root);
        let mut children = vec![Vec::new(); t.order()];
        for &v in order.iter().skip(1) {
            children[parent[v]].push(v);
        }
        Rooting { order, parent, children }
    }

    fn root(&self) -> Vertex {
        self.order[0]
    }

    /// `f(v)` for every vertex: subtrees of the part below `v` that contain `v`.
    fn down_counts(&self) -> Vec<BigCount> {
        let mut f = vec![BigCount::one(); self.order.len()];
        for &v in self.order.iter().rev() {
            let mut acc = BigCount::one();
            for &c in &self.children[v] {
                acc *= &f[c] + 1u32;
            }
            f[v] = acc;
        }
        f
    }
}

/// Distance sum `σ_T(v)` of every vertex, in linear time.
pub fn distance_sums(t: &Tree) -> Vec<u64> {
    let n = t.order();
    let rooting = Rooting::new(t, 0);
    let mut size = vec![1u64; n];
    let mut depth = vec![0u64; n];
    for &v in rooting.order.iter().skip(1) {
        depth[v] = depth[rooting.parent[v]] + 1;
    }
    for &v in rooting.order.iter().rev().take(n - 1) {
        size[rooting.parent[v]] += size[v];
    }
    let mut sigma = vec![0u64; n];
    sigma[0] = depth.iter().sum();
    for &v in rooting.order.iter().skip(1) {
        // moving from parent to v brings size[v] vertices closer and the rest farther
        sigma[v] = sigma[rooting.parent[v]] + n as u64 - 2 * size[v];
    }
    sigma
}

/// Wiener index: the sum of distances over unordered vertex pairs.
pub fn wiener_index(t: &Tree) -> u64 {
    distance_sums(t).iter().sum::<u64>() / 2
}

/// Orders of the two components of `T - uv`, as `(n_uv(u), n_uv(v))`.
pub fn branch_sizes(t: &Tree, u: Vertex, v: Vertex) -> Result<(usize, usize), TreeError> {
    t.check_vertex(u)?;
    t.check_vertex(v)?;
    if !t.has_edge(u, v) {
        return Err(TreeError::NotAnEdge(u, v));
    }
    let on_v = t.side(u, v).len();
    Ok((t.order() - on_v, on_v))
}

/// `f(v)` for every vertex of a rooted tree: the number of subtrees of the
/// part at and below `v` that contain `v`. Leaves get 1.
pub fn rooted_subtree_counts(rt: &RootedTree) -> Vec<BigCount> {
    Rooting::new(rt.tree(), rt.root()).down_counts()
}

/// `F_T(v)` for every vertex.
pub fn subtree_counts(t: &Tree) -> Vec<BigCount> {
    let rooting = Rooting::new(t, 0);
    let down = rooting.down_counts();
    let n = t.order();
    // up[c]: subtrees containing parent(c) inside the component of parent(c) in T - c·parent(c)
    let mut up: Vec<BigCount> = vec![BigCount::one(); n];
    let root = rooting.root();
    for &p in &rooting.order {
        let kids = &rooting.children[p];
        if kids.is_empty() {
            continue;
        }
        let above = if p == root { BigCount::one() } else { &up[p] + 1u32 };
        // prefix[i] = Π_{j<i} (1 + f(kid_j)), suffix likewise from the right
        let mut prefix = Vec::with_capacity(kids.len() + 1);
        prefix.push(above);
        for &c in kids {
            let next = prefix.last().unwrap() * (&down[c] + 1u32);
            prefix.push(next);
        }
        let mut suffix = BigCount::one();
        for (i, &c) in kids.iter().enumerate().rev() {
            up[c] = &prefix[i] * &suffix;
            suffix *= &down[c] + 1u32;
        }
    }
    (0..n).map(|v| if v == root { down[v].clone() } else { &down[v] * (&up[v] + 1u32) }).collect()
}

/// `F(T)`, rooted at `root`: every subtree is counted once, at its vertex
/// nearest the root.
pub fn total_subtrees_rooted_at(t: &Tree, root: Vertex) -> BigCount {
    Rooting::new(t, root).down_counts().into_iter().sum()
}

/// Total number of subtrees `F(T)`.
pub fn total_subtrees(t: &Tree) -> BigCount {
    total_subtrees_rooted_at(t, 0)
}

/// `F_{T_v}(v)`: subtrees containing `v` inside the component of `v` in `T - uv`.
pub fn side_subtree_count(t: &Tree, u: Vertex, v: Vertex) -> Result<BigCount, TreeError> {
    t.check_vertex(u)?;
    t.check_vertex(v)?;
    if !t.has_edge(u, v) {
        return Err(TreeError::NotAnEdge(u, v));
    }
    Ok(Rooting::new(t, u).down_counts().swap_remove(v))
}

/// `F_T(u, v)`: subtrees containing both `u` and `v`. Any pair of distinct
/// vertices is accepted.
///
/// Such a subtree must contain the whole `u`–`v` path; each path vertex then
/// independently keeps or drops each of its off-path branches.
pub fn subtree_count_pair(t: &Tree, u: Vertex, v: Vertex) -> Result<BigCount, TreeError> {
    t.check_vertex(u)?;
    t.check_vertex(v)?;
    if u == v {
        return Err(TreeError::BadIndex { index: v, n: t.order() });
    }
    let rooting = Rooting::new(t, u);
    let down = rooting.down_counts();
    let mut on_path = vec![false; t.order()];
    let mut x = v;
    on_path[x] = true;
    while x != u {
        x = rooting.parent[x];
        on_path[x] = true;
    }
    let mut count = BigCount::one();
    for x in t.vertices().filter(|&x| on_path[x]) {
        for &c in rooting.children[x].iter().filter(|&&c| !on_path[c]) {
            count *= &down[c] + 1u32;
        }
    }
    Ok(count)
}

/// Both per-vertex profiles.
pub fn vertex_profile(t: &Tree) -> VertexProfile {
    VertexProfile { sigma: distance_sums(t), subtrees: subtree_counts(t) }
}

fn arg_extreme<T: Ord>(values: &[T], better: std::cmp::Ordering) -> Vec<Vertex> {
    let best = values.iter().reduce(|a, b| if b.cmp(a) == better { b } else { a });
    match best {
        Some(best) => (0..values.len()).filter(|&v| &values[v] == best).collect(),
        None => Vec::new(),
    }
}

impl VertexProfile {
    /// Centroid (argmin of σ) and subtree core (argmax of F).
    pub fn middle_parts(&self) -> MiddleParts {
        MiddleParts {
            centroid: arg_extreme(&self.sigma, std::cmp::Ordering::Less),
            core: arg_extreme(&self.subtrees, std::cmp::Ordering::Greater),
        }
    }
}

/// Centroid `C(T)` and subtree core `Core(T)`.
pub fn middle_parts(t: &Tree) -> MiddleParts {
    vertex_profile(t).middle_parts()
}
