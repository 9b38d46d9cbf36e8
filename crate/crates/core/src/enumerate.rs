//! Free trees up to isomorphism, by canonical level sequences.
//!
//! A rooted tree is written as the depths of its vertices in preorder, with
//! the children of every vertex ordered so that their own sequences decrease
//! lexicographically. A free tree is represented by the sequence rooted at its
//! center; for two centers, the root is the one whose side of the central
//! edge is larger, ties broken by comparing the two sides' sequences. The
//! generator walks these sequences in decreasing lexicographic order with the
//! constant-amortized-time successor rule of Wright, Richmond, Odlyzko and
//! McKay.

use crate::error::{Error, Result};
use crate::tree::Tree;

/// Largest order [`enumerate_free_trees`] accepts.
pub const DEFAULT_CAP: usize = 14;

/// One isomorphism class of free trees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalTree {
    pub level_sequence: Vec<usize>,
    pub tree: Tree,
}

impl CanonicalTree {
    fn from_sequence(level_sequence: Vec<usize>) -> CanonicalTree {
        let tree = tree_from_levels(&level_sequence);
        CanonicalTree { level_sequence, tree }
    }
}

/// Decodes a level sequence: vertex `i` hangs off the last earlier vertex one
/// level up.
pub fn tree_from_levels(levels: &[usize]) -> Tree {
    let mut last_at = Vec::new();
    let mut edges = Vec::with_capacity(levels.len().saturating_sub(1));
    for (i, &depth) in levels.iter().enumerate() {
        if depth > 0 {
            edges.push((last_at[depth - 1], i));
        }
        last_at.truncate(depth);
        last_at.push(i);
    }
    Tree::from_edges(levels.len(), &edges).expect("level sequences describe trees")
}

/// Every free tree on `n` vertices once, in decreasing order of level
/// sequence. Fails above [`DEFAULT_CAP`].
pub fn enumerate_free_trees(n: usize) -> Result<FreeTrees> {
    enumerate_free_trees_capped(n, DEFAULT_CAP)
}

pub fn enumerate_free_trees_capped(n: usize, cap: usize) -> Result<FreeTrees> {
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    if n == 0 {
        return Err(Error::ParameterOutOfRange("trees need at least one vertex".into()));
    }
    let next = if n == 1 {
        Some(vec![0])
    } else {
        // The path rooted at its center, the largest candidate.
        let start: Vec<usize> = (0..=n / 2).chain(1..n.div_ceil(2)).collect();
        Some(start)
    };
    Ok(FreeTrees { next, first: true })
}

pub struct FreeTrees {
    next: Option<Vec<usize>>,
    first: bool,
}

impl Iterator for FreeTrees {
    type Item = CanonicalTree;

    fn next(&mut self) -> Option<CanonicalTree> {
        let mut candidate = self.next.take()?;
        if candidate.len() == 1 {
            return Some(CanonicalTree::from_sequence(candidate));
        }
        if !self.first {
            candidate = next_rooted_tree(&candidate, None)?;
        }
        self.first = false;
        let found = next_free_candidate(candidate)?;
        self.next = Some(found.clone());
        Some(CanonicalTree::from_sequence(found))
    }
}

/// Splits a center-rooted sequence into the first subtree (re-rooted at depth
/// 0) and the rest of the tree.
fn split_first_subtree(levels: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let end = levels
        .iter()
        .enumerate()
        .skip(1)
        .find(|&(i, &l)| i > 1 && l == 1)
        .map_or(levels.len(), |(i, _)| i);
    let first = levels[1..end].iter().map(|l| l - 1).collect();
    let rest = std::iter::once(0).chain(levels[end..].iter().copied()).collect();
    (first, rest)
}

/// Whether the rooted sequence is the free-tree representative.
fn is_center_rooted(levels: &[usize]) -> bool {
    let (first, rest) = split_first_subtree(levels);
    let first_height = first.iter().copied().max().unwrap_or(0);
    let rest_height = rest.iter().copied().max().unwrap_or(0);
    if rest_height != first_height {
        return rest_height > first_height;
    }
    first.len() < rest.len() || (first.len() == rest.len() && first <= rest)
}

/// Advances from `candidate` to the first representative at or below it.
fn next_free_candidate(mut candidate: Vec<usize>) -> Option<Vec<usize>> {
    loop {
        if is_center_rooted(&candidate) {
            return Some(candidate);
        }
        let (first, _) = split_first_subtree(&candidate);
        let p = first.len();
        let mut next = next_rooted_tree(&candidate, Some(p))?;
        if candidate[p] > 2 {
            // Jump: give the rest of the tree a path as tall as the new first
            // subtree so the next candidate is not rejected for height.
            let (new_first, _) = split_first_subtree(&next);
            let height = new_first.iter().copied().max().unwrap_or(0);
            let len = next.len();
            for (slot, depth) in next[len - (height + 1)..].iter_mut().zip(1..) {
                *slot = depth;
            }
        }
        candidate = next;
    }
}

/// Beyer–Hedetniemi successor of a canonical rooted level sequence, or `None`
/// after the star. With `p` given, the sequence is advanced at position `p`.
fn next_rooted_tree(levels: &[usize], p: Option<usize>) -> Option<Vec<usize>> {
    let p = match p {
        Some(p) => p,
        None => {
            let mut p = levels.len() - 1;
            while levels[p] == 1 {
                p -= 1;
            }
            p
        }
    };
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while levels[q] != levels[p] - 1 {
        q -= 1;
    }
    let mut next = levels.to_vec();
    for i in p..next.len() {
        next[i] = next[i - p + q];
    }
    Some(next)
}

/// Centers of `t`: the one or two vertices left by repeatedly removing all
/// leaves.
pub fn centers(t: &Tree) -> Vec<usize> {
    let n = t.n();
    let mut degree: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &x in &layer {
            for &y in t.neighbors(x) {
                degree[y] -= 1;
                if degree[y] == 1 {
                    next.push(y);
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

fn rooted_levels(t: &Tree, v: usize, parent: usize, depth: usize) -> Vec<usize> {
    let mut children: Vec<Vec<usize>> = t
        .neighbors(v)
        .iter()
        .filter(|&&c| c != parent)
        .map(|&c| rooted_levels(t, c, v, depth + 1))
        .collect();
    children.sort_unstable_by(|a, b| b.cmp(a));
    let mut out = vec![depth];
    for c in children {
        out.extend(c);
    }
    out
}

/// The canonical level sequence of the free tree underlying `t`.
pub fn canonical_level_sequence(t: &Tree) -> Vec<usize> {
    centers(t)
        .into_iter()
        .map(|c| rooted_levels(t, c, usize::MAX, 0))
        .filter(|s| s.len() == 1 || is_center_rooted(s))
        .max()
        .expect("one center yields the representative")
}

/// Standard Prüfer decoding: repeatedly join the smallest remaining leaf to
/// the next sequence entry. The tree has `seq.len() + 2` vertices.
pub fn prufer_decode(seq: &[usize]) -> Result<Tree> {
    let n = seq.len() + 2;
    if let Some(&entry) = seq.iter().find(|&&x| x >= n) {
        return Err(Error::EntryOutOfRange { entry, n });
    }
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    // Pointer scan: O(n) amortized.
    let mut ptr = 0;
    while degree[ptr] != 1 {
        ptr += 1;
    }
    let mut leaf = ptr;
    for &x in seq {
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
        if degree[x] == 1 && x < ptr {
            leaf = x;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    let last = (0..n).rev().find(|&v| degree[v] == 1 && v != leaf).expect("two vertices remain");
    edges.push((leaf, last));
    Tree::from_edges(n, &edges)
}
