//! Independent brute-force oracles. None of them touch the library's
//! algorithms beyond the `Tree` container itself.

#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use rand::Rng;
use treeratio_core::{canonical_code, CanonicalCode, Tree, Vertex};

/// All-pairs distances by one BFS per vertex.
pub fn bfs_all_pairs(t: &Tree) -> Vec<Vec<u64>> {
    let n = t.order();
    (0..n)
        .map(|s| {
            let mut dist = vec![u64::MAX; n];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for &y in t.neighbors(x) {
                    if dist[y] == u64::MAX {
                        dist[y] = dist[x] + 1;
                        queue.push_back(y);
                    }
                }
            }
            dist
        })
        .collect()
}

pub fn bfs_distance_sums(t: &Tree) -> Vec<u64> {
    bfs_all_pairs(t).iter().map(|row| row.iter().sum()).collect()
}

/// Subtree counts by enumerating every vertex subset: a subset of a tree
/// induces a subtree exactly when it spans `|S| - 1` edges.
pub struct SubsetCounts {
    pub per_vertex: Vec<u64>,
    pub total: u64,
    /// `pairs[u][v]`: subtrees containing both `u` and `v`.
    pub pairs: Vec<Vec<u64>>,
}

pub fn brute_subtrees(t: &Tree) -> SubsetCounts {
    let n = t.order();
    assert!(n <= 20, "subset oracle is exponential");
    let edges: Vec<(u32, u32)> = t.edges().into_iter().map(|(u, v)| (1u32 << u, 1u32 << v)).collect();
    let mut per_vertex = vec![0u64; n];
    let mut pairs = vec![vec![0u64; n]; n];
    let mut total = 0u64;
    for mask in 1u32..(1u32 << n) {
        let size = mask.count_ones();
        let inside = edges.iter().filter(|&&(a, b)| mask & a != 0 && mask & b != 0).count() as u32;
        if inside + 1 != size {
            continue;
        }
        total += 1;
        let members: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        for &u in &members {
            per_vertex[u] += 1;
            for &v in &members {
                pairs[u][v] += 1;
            }
        }
    }
    SubsetCounts { per_vertex, total, pairs }
}

/// Decodes a Prüfer sequence over labels `0..seq.len() + 2`.
pub fn prufer_decode(seq: &[usize]) -> Tree {
    let n = seq.len() + 2;
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut leaves: BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let leaf = *leaves.iter().next().expect("a leaf always exists");
        leaves.remove(&leaf);
        edges.push((leaf, s));
        degree[s] -= 1;
        if degree[s] == 1 {
            leaves.insert(s);
        }
    }
    let rest: Vec<usize> = leaves.into_iter().collect();
    edges.push((rest[0], rest[1]));
    Tree::from_edges(n, &edges).expect("Prüfer decoding yields a tree")
}

pub fn random_tree<R: Rng>(rng: &mut R, n: usize) -> Tree {
    if n == 1 {
        return Tree::singleton();
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    prufer_decode(&seq)
}

/// Canonical codes of every binary tree on `n` vertices, via labeled trees.
///
/// A binary tree has degrees in `{1, 3}`, so its Prüfer sequence lists each
/// of the `k = (n - 2) / 2` internal labels exactly twice. Every isomorphism
/// class has a labeling whose internal vertices are `0..k`, so it suffices
/// to run over the distinct arrangements of the multiset `{0,0,1,1,...}`.
pub fn prufer_binary_classes(n: usize) -> BTreeSet<CanonicalCode> {
    assert!(n >= 2 && n.is_multiple_of(2));
    if n == 2 {
        return BTreeSet::from([canonical_code(&Tree::from_edges(2, &[(0, 1)]).unwrap())]);
    }
    let k = (n - 2) / 2;
    let mut remaining = vec![2usize; k];
    let mut seq = Vec::with_capacity(n - 2);
    let mut out = BTreeSet::new();
    arrangements(&mut remaining, &mut seq, n - 2, &mut |s| {
        let t = prufer_decode(s);
        debug_assert!(t.vertices().all(|v| t.degree(v) == 1 || t.degree(v) == 3));
        out.insert(canonical_code(&t));
    });
    out
}

fn arrangements(remaining: &mut [usize], seq: &mut Vec<usize>, len: usize, visit: &mut dyn FnMut(&[usize])) {
    if seq.len() == len {
        visit(seq);
        return;
    }
    for label in 0..remaining.len() {
        if remaining[label] > 0 {
            remaining[label] -= 1;
            seq.push(label);
            arrangements(remaining, seq, len, visit);
            seq.pop();
            remaining[label] += 1;
        }
    }
}

/// Every labeled tree on `n` vertices (all `n^(n-2)` Prüfer sequences).
pub fn all_labeled_trees(n: usize) -> Vec<Tree> {
    if n == 1 {
        return vec![Tree::singleton()];
    }
    let len = n - 2;
    let total = n.pow(len as u32);
    (0..total)
        .map(|mut idx| {
            let seq: Vec<usize> = (0..len)
                .map(|_| {
                    let d = idx % n;
                    idx /= n;
                    d
                })
                .collect();
            prufer_decode(&seq)
        })
        .collect()
}

/// Backtracking isomorphism test that only uses adjacency.
pub fn isomorphic(a: &Tree, b: &Tree) -> bool {
    let n = a.order();
    if n != b.order() {
        return false;
    }
    let mut da: Vec<usize> = a.vertices().map(|v| a.degree(v)).collect();
    let mut db: Vec<usize> = b.vertices().map(|v| b.degree(v)).collect();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend(a, b, 0, &mut map, &mut used)
}

fn extend(a: &Tree, b: &Tree, x: Vertex, map: &mut [usize], used: &mut [bool]) -> bool {
    if x == a.order() {
        return true;
    }
    for y in b.vertices() {
        if used[y] || a.degree(x) != b.degree(y) {
            continue;
        }
        let consistent = (0..x).all(|p| a.has_edge(p, x) == b.has_edge(map[p], y));
        if consistent {
            map[x] = y;
            used[y] = true;
            if extend(a, b, x + 1, map, used) {
                return true;
            }
            used[y] = false;
        }
    }
    map[x] = usize::MAX;
    false
}

/// `t` with vertices renamed by `perm` (vertex `v` becomes `perm[v]`).
pub fn relabel(t: &Tree, perm: &[usize]) -> Tree {
    let edges: Vec<(usize, usize)> = t.edges().into_iter().map(|(u, v)| (perm[u], perm[v])).collect();
    Tree::from_edges(t.order(), &edges).unwrap()
}
