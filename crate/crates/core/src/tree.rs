//! Unrooted and rooted trees on dense vertex indices.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

/// Vertex index into a [`Tree`].
pub type Vertex = usize;

/// Errors raised when building, generating or parsing trees.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum TreeError {
    /// The edge list does not describe a tree on `n` vertices.
    #[error("not a tree: {0}")]
    NotATree(String),
    /// An edge endpoint or vertex argument is outside `0..n`.
    #[error("vertex index {index} out of range for a tree with {n} vertices")]
    BadIndex { index: usize, n: usize },
    /// A generator or enumerator received an order it cannot build.
    #[error("bad order {order}: {reason}")]
    BadOrder { order: usize, reason: &'static str },
    /// Branch sizes of a three-way caterpillar must be odd and positive.
    #[error("branch sizes must be odd and positive, got ({0}, {1}, {2})")]
    BadBranchSizes(usize, usize, usize),
    /// The pair of vertices is not joined by an edge.
    #[error("({0}, {1}) is not an edge")]
    NotAnEdge(Vertex, Vertex),
    /// Text input could not be parsed.
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
}

/// A finite tree with vertices `0..n` and sorted adjacency lists.
///
/// Construction always validates, so every `Tree` value is connected,
/// acyclic and has exactly `n - 1` edges.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tree {
    adjacency: Vec<Vec<Vertex>>,
}

impl Tree {
    /// Builds a tree from an edge list. Edge order and orientation are irrelevant.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self, TreeError> {
        if n == 0 {
            return Err(TreeError::NotATree("a tree needs at least one vertex".into()));
        }
        if edges.len() != n - 1 {
            return Err(TreeError::NotATree(format!(
                "{} edges given, a tree on {n} vertices has {}",
                edges.len(),
                n - 1
            )));
        }
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(TreeError::BadIndex { index: x, n });
                }
            }
            if u == v {
                return Err(TreeError::NotATree(format!("self-loop at {u}")));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for (u, list) in adjacency.iter_mut().enumerate() {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(TreeError::NotATree(format!("duplicate edge at {u}")));
            }
        }
        let tree = Tree { adjacency };
        // n - 1 edges and connected implies acyclic.
        let (order, _) = tree.bfs(0);
        if order.len() != n {
            return Err(TreeError::NotATree("graph is disconnected (or has a cycle)".into()));
        }
        Ok(tree)
    }

    /// The tree with a single vertex.
    pub fn singleton() -> Self {
        Tree { adjacency: vec![Vec::new()] }
    }

    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn is_leaf(&self, v: Vertex) -> bool {
        self.adjacency[v].len() == 1
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.order()
    }

    /// The leaf set, ascending.
    pub fn leaves(&self) -> Vec<Vertex> {
        self.vertices().filter(|&v| self.is_leaf(v)).collect()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.order() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::with_capacity(self.order().saturating_sub(1));
        for (u, list) in self.adjacency.iter().enumerate() {
            out.extend(list.iter().filter(|&&v| u < v).map(|&v| (u, v)));
        }
        out
    }

    pub(crate) fn check_vertex(&self, v: Vertex) -> Result<(), TreeError> {
        if v < self.order() {
            Ok(())
        } else {
            Err(TreeError::BadIndex { index: v, n: self.order() })
        }
    }

    /// Breadth-first order from `root` together with the parent of every
    /// vertex (`usize::MAX` for the root).
    pub fn bfs(&self, root: Vertex) -> (Vec<Vertex>, Vec<Vertex>) {
        let n = self.order();
        let mut parent = vec![usize::MAX; n];
        let mut seen = vec![false; n];
        let mut order = Vec::with_capacity(n);
        seen[root] = true;
        order.push(root);
        let mut head = 0;
        while head < order.len() {
            let u = order[head];
            head += 1;
            for &v in &self.adjacency[u] {
                if !seen[v] {
                    seen[v] = true;
                    parent[v] = u;
                    order.push(v);
                }
            }
        }
        (order, parent)
    }

    /// Distances from `source` to every vertex.
    pub fn distances_from(&self, source: Vertex) -> Vec<usize> {
        let (order, parent) = self.bfs(source);
        let mut dist = vec![0; self.order()];
        for &v in order.iter().skip(1) {
            dist[v] = dist[parent[v]] + 1;
        }
        dist
    }

    pub fn distance(&self, u: Vertex, v: Vertex) -> usize {
        self.distances_from(u)[v]
    }

    /// Vertices on the path from `u` to `v`, both ends included.
    pub fn path(&self, u: Vertex, v: Vertex) -> Vec<Vertex> {
        let (_, parent) = self.bfs(v);
        let mut path = vec![u];
        let mut x = u;
        while x != v {
            x = parent[x];
            path.push(x);
        }
        path
    }

    /// Vertices of the component containing `v` after deleting edge `uv`.
    pub fn side(&self, u: Vertex, v: Vertex) -> Vec<Vertex> {
        let mut out = vec![v];
        let mut stack = vec![(v, u)];
        while let Some((x, from)) = stack.pop() {
            for &y in &self.adjacency[x] {
                if y != from {
                    out.push(y);
                    stack.push((y, x));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// True iff every vertex has degree 1 or 3, or the tree is a single edge.
    pub fn is_binary(&self) -> bool {
        match self.order() {
            2 => true,
            n if n < 4 => false,
            _ => self.adjacency.iter().all(|a| a.len() == 1 || a.len() == 3),
        }
    }

    /// Edge-list text: `n=<count>` followed by one ascending `u v` line per edge.
    pub fn to_edge_list(&self) -> String {
        let mut s = format!("n={}\n", self.order());
        for (u, v) in self.edges() {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }

    /// Parses the edge-list text written by [`Tree::to_edge_list`].
    /// Blank lines and lines starting with `#` are ignored.
    pub fn from_edge_list(text: &str) -> Result<Self, TreeError> {
        let mut n = None;
        let mut edges = Vec::new();
        let mut offset = 0;
        for line in text.split_inclusive('\n') {
            let position = offset;
            offset += line.len();
            let body = line.trim();
            if body.is_empty() || body.starts_with('#') {
                continue;
            }
            let bad = |message: String| TreeError::Parse { position, message };
            if n.is_none() {
                let count =
                    body.strip_prefix("n=").ok_or_else(|| bad("expected header line `n=<count>`".into()))?;
                n = Some(count.trim().parse::<usize>().map_err(|e| bad(format!("bad vertex count: {e}")))?);
                continue;
            }
            let mut fields = body.split_whitespace();
            let mut endpoint = || -> Result<usize, TreeError> {
                fields
                    .next()
                    .ok_or_else(|| bad("expected `u v`".into()))?
                    .parse()
                    .map_err(|e| bad(format!("bad vertex index: {e}")))
            };
            let u = endpoint()?;
            let v = endpoint()?;
            if fields.next().is_some() {
                return Err(bad("trailing tokens after edge".into()));
            }
            edges.push((u, v));
        }
        let n = n.ok_or(TreeError::Parse { position: 0, message: "missing `n=` header".into() })?;
        Tree::from_edges(n, &edges)
    }
}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Tree").field("n", &self.order()).field("edges", &self.edges()).finish()
    }
}

/// Validated constructor: `make_tree(n, edges)`.
pub fn make_tree(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Tree, TreeError> {
    Tree::from_edges(n, edges)
}

/// A tree with a distinguished root.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RootedTree {
    tree: Tree,
    root: Vertex,
}

impl RootedTree {
    pub fn new(tree: Tree, root: Vertex) -> Result<Self, TreeError> {
        tree.check_vertex(root)?;
        Ok(RootedTree { tree, root })
    }

    pub fn tree(&self) -> &Tree {
        &self.tree
    }

    pub fn root(&self) -> Vertex {
        self.root
    }

    pub fn order(&self) -> usize {
        self.tree.order()
    }

    /// Children lists of every vertex, each ascending.
    pub fn children(&self) -> Vec<Vec<Vertex>> {
        let (_, parent) = self.tree.bfs(self.root);
        self.tree
            .vertices()
            .map(|v| self.tree.neighbors(v).iter().copied().filter(|&c| parent[c] == v).collect())
            .collect()
    }

    /// True iff every internal vertex (root included) has exactly two children.
    pub fn is_full_binary(&self) -> bool {
        self.children().iter().all(|c| c.is_empty() || c.len() == 2)
    }

    pub fn into_tree(self) -> Tree {
        self.tree
    }
}

/// Vertex counts reported alongside a binary tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BinaryShape {
    pub leaves: usize,
    pub internal: usize,
}

/// Leaf and internal-vertex counts of `t`.
pub fn shape_counts(t: &Tree) -> BinaryShape {
    let leaves = if t.order() == 1 { 0 } else { t.leaves().len() };
    BinaryShape { leaves, internal: t.order() - leaves }
}
