//! Brute-force reference values by explicit subset enumeration.
//!
//! Exponential in `n`; meant for trees of a dozen or so vertices, to certify
//! the edge-counting routines in [`crate::count`].

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{check_k, Error, Result};
use crate::tree::Tree;

/// Which vertex pool the `k - 1` companions of a vertex are drawn from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum IndexMode {
    /// Every vertex other than `v`.
    All,
    /// The leaves of the tree, `v` included when it is a leaf.
    Leaf,
    /// The internal vertices, `v` included when it is internal.
    Internal,
}

impl IndexMode {
    pub const ALL_MODES: [IndexMode; 3] = [IndexMode::All, IndexMode::Leaf, IndexMode::Internal];

    pub fn name(self) -> &'static str {
        match self {
            IndexMode::All => "all",
            IndexMode::Leaf => "leaf",
            IndexMode::Internal => "internal",
        }
    }
}

impl fmt::Display for IndexMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IndexMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<IndexMode> {
        match s {
            "all" => Ok(IndexMode::All),
            "leaf" => Ok(IndexMode::Leaf),
            "internal" => Ok(IndexMode::Internal),
            _ => Err(Error::ParameterOutOfRange(format!("unknown mode `{s}`"))),
        }
    }
}

/// Calls `f` on every `size`-subset of `pool` in lexicographic order.
pub(crate) fn for_each_subset(pool: &[usize], size: usize, mut f: impl FnMut(&[usize])) {
    if size > pool.len() {
        return;
    }
    let mut idx: Vec<usize> = (0..size).collect();
    let mut chosen: Vec<usize> = idx.iter().map(|&i| pool[i]).collect();
    loop {
        f(&chosen);
        // Advance the rightmost index that can still move.
        let mut i = size;
        while i > 0 && idx[i - 1] == i - 1 + pool.len() - size {
            i -= 1;
        }
        if i == 0 {
            return;
        }
        i -= 1;
        idx[i] += 1;
        for j in i + 1..size {
            idx[j] = idx[j - 1] + 1;
        }
        for j in i..size {
            chosen[j] = pool[idx[j]];
        }
    }
}

/// Sum of `d({v} ∪ S)` over all `(k-1)`-subsets `S` of the pool selected by
/// `mode`. For the leaf and internal pools `S` may contain `v` itself, in
/// which case the union has only `k - 1` elements.
pub fn brute_vertex_index(t: &Tree, v: usize, k: usize, mode: IndexMode) -> Result<BigUint> {
    t.check_vertex(v)?;
    check_k(t.n(), k)?;
    let pool: Vec<usize> = (0..t.n())
        .filter(|&x| match mode {
            IndexMode::All => x != v,
            IndexMode::Leaf => t.is_leaf(x),
            IndexMode::Internal => !t.is_leaf(x),
        })
        .collect();
    let mut total = 0u64;
    let mut set = Vec::with_capacity(k);
    for_each_subset(&pool, k - 1, |s| {
        set.clear();
        set.push(v);
        set.extend_from_slice(s);
        total += t.steiner_distance(&set).expect("vertices in range") as u64;
    });
    Ok(BigUint::from(total))
}

/// Sum of `d(S)` over all `k`-subsets of the vertex set.
pub fn brute_steiner_wiener(t: &Tree, k: usize) -> Result<BigUint> {
    check_k(t.n(), k)?;
    let all: Vec<usize> = (0..t.n()).collect();
    let mut total = 0u64;
    for_each_subset(&all, k, |s| {
        total += t.steiner_distance(s).expect("vertices in range") as u64;
    });
    Ok(BigUint::from(total))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::parse_tree;

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn subsets_are_lexicographic_and_complete() {
        let mut seen = Vec::new();
        for_each_subset(&[3, 5, 7, 9], 2, |s| seen.push(s.to_vec()));
        assert_eq!(
            seen,
            vec![vec![3, 5], vec![3, 7], vec![3, 9], vec![5, 7], vec![5, 9], vec![7, 9]]
        );
        let mut count = 0;
        for_each_subset(&[1, 2, 3], 0, |s| {
            assert!(s.is_empty());
            count += 1
        });
        assert_eq!(count, 1);
        for_each_subset(&[1, 2], 3, |_| panic!("no 3-subsets of a pair"));
        let mut count = 0;
        for_each_subset(&[0, 1, 2, 3, 4, 5, 6], 3, |_| count += 1);
        assert_eq!(count, 35);
    }

    #[test]
    fn vertex_index_examples() {
        let p5 = Tree::path(5);
        assert_eq!(brute_vertex_index(&p5, 2, 2, IndexMode::All).unwrap(), big(6));
        let p4 = Tree::path(4);
        assert_eq!(brute_vertex_index(&p4, 0, 2, IndexMode::Leaf).unwrap(), big(3));
        assert_eq!(brute_vertex_index(&p4, 1, 2, IndexMode::Internal).unwrap(), big(1));
    }

    #[test]
    fn wiener_examples() {
        assert_eq!(brute_steiner_wiener(&Tree::path(4), 2).unwrap(), big(10));
        assert_eq!(brute_steiner_wiener(&Tree::star(5), 3).unwrap(), big(24));
        for n in 2..7 {
            assert_eq!(brute_steiner_wiener(&Tree::path(n), n).unwrap(), big(n as u64 - 1));
        }
    }

    #[test]
    fn small_pools_give_zero() {
        // The star on 5 vertices has a single internal vertex.
        let star = Tree::star(5);
        for v in 0..5 {
            assert_eq!(brute_vertex_index(&star, v, 3, IndexMode::Internal).unwrap(), big(0));
        }
        let p3 = Tree::path(3);
        assert_eq!(brute_vertex_index(&p3, 1, 3, IndexMode::Leaf).unwrap(), big(2));
        assert_eq!(brute_vertex_index(&p3, 0, 3, IndexMode::Leaf).unwrap(), big(2));
    }

    #[test]
    fn k2_all_is_distance_sum() {
        let t = parse_tree("6\n0 1\n1 2\n1 3\n3 4\n4 5").unwrap();
        for v in 0..6 {
            let sum: usize = t.distances_from(v).iter().sum();
            assert_eq!(brute_vertex_index(&t, v, 2, IndexMode::All).unwrap(), big(sum as u64));
        }
    }

    #[test]
    fn errors() {
        let t = Tree::path(4);
        assert!(matches!(brute_vertex_index(&t, 4, 2, IndexMode::All), Err(Error::VertexOutOfRange { .. })));
        assert!(matches!(brute_vertex_index(&t, 0, 1, IndexMode::All), Err(Error::KOutOfRange { .. })));
        assert!(matches!(brute_steiner_wiener(&t, 5), Err(Error::KOutOfRange { .. })));
    }

    #[test]
    fn single_vertex_is_zero() {
        let t = Tree::path(1);
        assert_eq!(brute_vertex_index(&t, 0, 2, IndexMode::All).unwrap(), big(0));
        assert_eq!(brute_steiner_wiener(&t, 2).unwrap(), big(0));
    }
}
