//! Polynomial-time indices by edge contribution.
//!
//! An edge `e` lies in the Steiner tree of `S` exactly when `S` meets both
//! components of `T - e`. Counting, per edge, the subsets that do so turns
//! every subset sum into a sum of binomial differences over edges.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{check_k, Error, Result};
use crate::oracle::IndexMode;
use crate::tree::Tree;

/// Exact natural number used for all counts.
pub type BigCount = BigUint;

/// `C(n, k)`, zero when `k < 0` or `k > n`.
pub fn binomial(n: u64, k: i64) -> BigCount {
    if k < 0 || k as u64 > n {
        return BigCount::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigCount::one();
    // After step i, acc = C(n - k + i, i), so every division is exact.
    for i in 1..=k {
        acc *= n - k + i;
        acc /= i;
    }
    acc
}

/// Signed binomial for closed forms whose top argument can be computed from
/// small differences. Negative tops give zero.
pub(crate) fn binom_signed(n: i64, k: i64) -> BigInt {
    if n < 0 {
        return BigInt::zero();
    }
    BigInt::from(binomial(n as u64, k))
}

/// Per-vertex table of one index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexVector {
    pub values: Vec<BigCount>,
    pub k: usize,
    pub mode: IndexMode,
}

impl IndexVector {
    /// Smallest entry.
    pub fn min(&self) -> &BigCount {
        self.values.iter().min().expect("trees are nonempty")
    }

    /// Vertices attaining the smallest entry, ascending.
    pub fn argmin(&self) -> Vec<usize> {
        let m = self.min();
        (0..self.values.len()).filter(|&v| &self.values[v] == m).collect()
    }
}

/// Steiner k-Wiener index: `Σ_e [C(n,k) − C(size_u,k) − C(size_v,k)]`.
pub fn steiner_wiener(t: &Tree, k: usize) -> Result<BigCount> {
    check_k(t.n(), k)?;
    let (n, k) = (t.n() as u64, k as i64);
    let all = binomial(n, k);
    let mut total = BigCount::zero();
    for s in t.edge_splits() {
        total += &all;
        total -= binomial(s.size_u as u64, k) + binomial(s.size_v as u64, k);
    }
    Ok(total)
}

/// `C(m, k - 1)` for every `m` up to the pool size.
struct PoolBinomials {
    pool: usize,
    table: Vec<BigCount>,
}

impl PoolBinomials {
    fn new(t: &Tree, k: usize, mode: IndexMode) -> PoolBinomials {
        let pool = t.pool_size(mode);
        let table = (0..=pool).map(|m| binomial(m as u64, k as i64 - 1)).collect();
        PoolBinomials { pool, table }
    }

    /// Subsets of the pool that reach past an edge with `far` pool members
    /// beyond it.
    fn crossing(&self, far: usize) -> BigCount {
        &self.table[self.pool] - &self.table[self.pool - far]
    }
}

fn index_with(t: &Tree, v: usize, mode: IndexMode, bins: &PoolBinomials) -> BigCount {
    t.edge_splits()
        .iter()
        .map(|s| bins.crossing(t.far_side(s, v).count(mode)))
        .sum()
}

/// Steiner k-distance of `v` (or its leaf / internal variant) by edge
/// contribution: `Σ_e [C(P, k−1) − C(P − far_e(v), k−1)]` where `P` is the
/// pool size and `far_e(v)` the pool members on the side of `e` away from `v`.
pub fn vertex_index(t: &Tree, v: usize, k: usize, mode: IndexMode) -> Result<BigCount> {
    t.check_vertex(v)?;
    check_k(t.n(), k)?;
    Ok(index_with(t, v, mode, &PoolBinomials::new(t, k, mode)))
}

/// The index of every vertex.
pub fn all_vertex_index(t: &Tree, k: usize, mode: IndexMode) -> Result<IndexVector> {
    check_k(t.n(), k)?;
    let bins = PoolBinomials::new(t, k, mode);
    let values = (0..t.n()).map(|v| index_with(t, v, mode, &bins)).collect();
    Ok(IndexVector { values, k, mode })
}

/// `d_k(x) − d_k(y)` for adjacent `x, y`, from the split sizes alone:
/// `C(n_xy(y) − 1, k − 1) − C(n_xy(x) − 1, k − 1)`.
pub fn across_edge_delta(t: &Tree, x: usize, y: usize, k: usize) -> Result<BigInt> {
    t.check_vertex(x)?;
    t.check_vertex(y)?;
    let split = t.split_of(x, y).ok_or(Error::NotAnEdge { u: x, v: y })?;
    check_k(t.n(), k)?;
    let (near, far) = split.sides_from(x);
    let k = k as i64 - 1;
    Ok(BigInt::from(binomial(far.size as u64 - 1, k)) - BigInt::from(binomial(near.size as u64 - 1, k)))
}
