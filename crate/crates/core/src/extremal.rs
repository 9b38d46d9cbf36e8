//! Comets, pendant paths and the closed forms behind the extremal ratio
//! bounds.
//!
//! An r-comet on `n` vertices is a path on `r` vertices with `n − r` pendant
//! leaves hung on one end. Vertices are numbered along the path from the far
//! end `b = 0` to the attachment vertex `d = r − 1`; the pendant leaves are
//! `r..n`, the first of which is the marked leaf `a`, and `c = 1` is the
//! neighbor of `b` when `r >= 2`.

use num_bigint::BigInt;
use serde::Serialize;

use crate::count::{binom_signed, BigCount};
use crate::error::{Error, Result};
use crate::ratio::Ratio;
use crate::tree::Tree;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CometSpec {
    pub n: usize,
    pub r: usize,
    /// First pendant leaf on `d`.
    pub a: usize,
    /// Far end of the path. Coincides with `d` when `r = 1`.
    pub b: usize,
    /// Neighbor of `b` on the path; equals `d` when `r = 2`.
    pub c: Option<usize>,
    /// Attachment vertex of the pendant leaves.
    pub d: usize,
}

pub fn comet(n: usize, r: usize) -> Result<(Tree, CometSpec)> {
    if n < 2 || r < 1 || r > n - 1 {
        return Err(Error::ParameterOutOfRange(format!(
            "comet needs n >= 2 and 1 <= r <= n - 1, got n = {n}, r = {r}"
        )));
    }
    let d = r - 1;
    let edges: Vec<_> = (1..r).map(|i| (i - 1, i)).chain((r..n).map(|x| (d, x))).collect();
    let tree = Tree::from_edges(n, &edges)?;
    let spec = CometSpec { n, r, a: r, b: 0, c: (r >= 2).then_some(1), d };
    Ok((tree, spec))
}

/// A path on `a + b + 1` vertices with `v = a` and an extra leaf `w = a + b + 1`
/// hung on `v`. Returns the tree with `(v, w)`.
pub fn pendant_path(a: usize, b: usize) -> (Tree, usize, usize) {
    let v = a;
    let w = a + b + 1;
    let mut edges: Vec<_> = (1..=a + b).map(|i| (i - 1, i)).collect();
    edges.push((v, w));
    (Tree::from_edges(a + b + 2, &edges).expect("pendant path is a tree"), v, w)
}

fn nonnegative(x: BigInt, what: &str) -> BigCount {
    x.to_biguint()
        .unwrap_or_else(|| panic!("{what} evaluated to a negative number"))
}

fn check_range(ok: bool, message: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::ParameterOutOfRange(message()))
    }
}

/// Steiner k-distance of the vertex at distances `a` and `b` from the two ends
/// of a path on `a + b + 1` vertices.
pub fn path_vertex_distance_closed(a: usize, b: usize, k: usize) -> Result<BigCount> {
    check_range(k >= 2 && k <= a + b + 1, || {
        format!("need 2 <= k <= a + b + 1, got a = {a}, b = {b}, k = {k}")
    })?;
    let (a, b, k) = (a as i64, b as i64, k as i64);
    let c = binom_signed;
    let value = (k - 1) * c(a + b + 1, k)
        - (k - 1) * c(b + 1, k)
        - (k - 1) * c(a + 1, k)
        - c(a + b, k)
        + b * c(b, k - 1)
        + a * c(a, k - 1);
    Ok(nonnegative(value, "path closed form"))
}

/// Steiner k-distance of the attachment vertex of the pendant-path graph on
/// `a + b + 2` vertices (see [`pendant_path`]).
pub fn pendant_path_distance_closed(a: usize, b: usize, k: usize) -> Result<BigCount> {
    check_range(k >= 2 && k <= a + b + 2, || {
        format!("need 2 <= k <= a + b + 2, got a = {a}, b = {b}, k = {k}")
    })?;
    let (a, b, k) = (a as i64, b as i64, k as i64);
    let c = binom_signed;
    let value = (k - 2) * c(a + b + 2, k)
        - (k - 2 - b) * c(b + 1, k - 1)
        - (k - 2 - a) * c(a + 1, k - 1)
        - (k - 1) * c(b + 1, k)
        - (k - 1) * c(a + 1, k)
        + c(a + b, k - 2);
    Ok(nonnegative(value, "pendant path closed form"))
}

fn leaf_denominator_signed(n: i64, r: i64, k: i64) -> BigInt {
    let c = binom_signed;
    c(n - r, k) + (n - r - 1) * c(n - 2, k - 2) + r * c(n - 1, k - 1) - c(n - 1, k)
}

fn internal_denominator_signed(n: i64, r: i64, k: i64) -> BigInt {
    let c = binom_signed;
    (n - r - 2) * c(n - 2, k - 2) + (r + 1) * c(n - 1, k - 1) + c(n - r - 2, k) - c(n - 1, k)
}

/// Steiner k-distance of a pendant leaf `a` of the r-comet on `n` vertices.
pub fn comet_leaf_denominator(n: usize, r: usize, k: usize) -> Result<BigCount> {
    check_range(r >= 1 && r < n && k >= 2 && k <= n, || {
        format!("need 1 <= r <= n - 1 and 2 <= k <= n, got n = {n}, r = {r}, k = {k}")
    })?;
    let value = leaf_denominator_signed(n as i64, r as i64, k as i64);
    Ok(nonnegative(value, "comet leaf denominator"))
}

/// Steiner k-distance of the attachment vertex `d` of the (r+2)-comet on `n`
/// vertices.
pub fn comet_internal_denominator(n: usize, r: usize, k: usize) -> Result<BigCount> {
    check_range(r >= 1 && r + 3 <= n && k >= 2 && k <= n, || {
        format!("need 1 <= r <= n - 3 and 2 <= k <= n, got n = {n}, r = {r}, k = {k}")
    })?;
    let value = internal_denominator_signed(n as i64, r as i64, k as i64);
    Ok(nonnegative(value, "comet internal denominator"))
}

/// Which of the leaf-versus-centroid regimes produced a bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Regime {
    /// `k = n`.
    Complete,
    /// `k = n − 1`.
    NearComplete,
    /// `n` even, `k <= n/2 + 1`.
    EvenBalanced,
    /// `n` odd, `k <= n/2 + 1`.
    OddBalanced,
    /// `n/2 + 1 < k < n − 1`.
    Skewed,
}

/// A concrete tree with two marked vertices whose index ratio realizes a bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "shape", rename_all = "snake_case")]
pub enum Extremal {
    /// `d_k(b) / d_k(a)` on the r-comet.
    LeafPairComet { n: usize, r: usize },
    /// `d_k(c) / d_k(d)` on the (r+2)-comet.
    InternalPairComet { n: usize, r: usize },
    /// `d_k(0) / d_k(1)` on the path `0 - 1 - ... - (n-1)`.
    PathEnd { n: usize },
    /// `d_k(w) / d_k(v)` on [`pendant_path`]`(a, b)`.
    PendantPath { a: usize, b: usize },
}

/// A tree with the vertices whose index quotient is the bound.
#[derive(Debug, Clone)]
pub struct Realized {
    pub tree: Tree,
    pub numerator_vertex: usize,
    pub denominator_vertex: usize,
}

impl Extremal {
    pub fn realize(&self) -> Realized {
        match *self {
            Extremal::LeafPairComet { n, r } => {
                let (tree, spec) = comet(n, r).expect("valid comet");
                Realized { tree, numerator_vertex: spec.b, denominator_vertex: spec.a }
            }
            Extremal::InternalPairComet { n, r } => {
                let (tree, spec) = comet(n, r + 2).expect("valid comet");
                let c = spec.c.expect("r + 2 >= 3");
                Realized { tree, numerator_vertex: c, denominator_vertex: spec.d }
            }
            Extremal::PathEnd { n } => {
                Realized { tree: Tree::path(n), numerator_vertex: 0, denominator_vertex: 1 }
            }
            Extremal::PendantPath { a, b } => {
                let (tree, v, w) = pendant_path(a, b);
                Realized { tree, numerator_vertex: w, denominator_vertex: v }
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RatioBound {
    pub value: Ratio,
    /// Maximizing comet parameter, for the comet bounds.
    pub witness_r: Option<usize>,
    /// Regime, for the leaf-versus-centroid bound.
    pub regime: Option<Regime>,
    pub extremal: Extremal,
}

/// Maximizes `1 + num(r) / den(r)` over `rs`, keeping the smallest `r` on ties.
fn maximize(
    rs: impl Iterator<Item = usize>,
    mut term: impl FnMut(usize) -> (BigInt, BigInt),
) -> (Ratio, usize) {
    let mut best: Option<(Ratio, usize)> = None;
    for r in rs {
        let (num, den) = term(r);
        let value = Ratio::from_signed(&den + num, den).expect("comet ratios are positive");
        if best.as_ref().is_none_or(|(b, _)| value > *b) {
            best = Some((value, r));
        }
    }
    best.expect("nonempty range")
}

/// Largest possible `d_k(v) / d_k(w)` over leaves `v, w` of trees of order
/// `n`, maximized over comets.
pub fn leaf_pair_ratio_bound(n: usize, k: usize) -> Result<RatioBound> {
    check_range(n >= 3 && k >= 2 && k <= n, || {
        format!("need n >= 3 and 2 <= k <= n, got n = {n}, k = {k}")
    })?;
    let (ni, ki) = (n as i64, k as i64);
    let c = binom_signed;
    let (value, r) = maximize(1..n, |r| {
        let ri = r as i64;
        let num = c(ni - 2, ki) - c(ni - ri, ki) - c(ri - 1, ki);
        (num, leaf_denominator_signed(ni, ri, ki))
    });
    Ok(RatioBound {
        value,
        witness_r: Some(r),
        regime: None,
        extremal: Extremal::LeafPairComet { n, r },
    })
}

/// Largest possible `d_k(v) / d_k(w)` over internal vertices `v, w` of trees of
/// order `n`, maximized over (r+2)-comets with `1 <= r <= n − 3`.
pub fn internal_pair_ratio_bound(n: usize, k: usize) -> Result<RatioBound> {
    check_range(n >= 4 && k >= 2 && k <= n, || {
        format!("need n >= 4 and 2 <= k <= n, got n = {n}, k = {k}")
    })?;
    let (ni, ki) = (n as i64, k as i64);
    let c = binom_signed;
    let (value, r) = maximize(1..n - 2, |r| {
        let ri = r as i64;
        let num = c(ni - 2, ki) - c(ni - ri - 2, ki) - c(ri + 1, ki);
        (num, internal_denominator_signed(ni, ri, ki))
    });
    Ok(RatioBound {
        value,
        witness_r: Some(r),
        regime: None,
        extremal: Extremal::InternalPairComet { n, r },
    })
}

/// Smallest possible `d_k(w) / d_k(v)` for a leaf `w` and a Steiner k-centroid
/// `v` in a tree of order `n`: `1 + C(n−2, k−1) / D` with `D` the largest
/// centroid index a neighbor leaf allows in the regime of `(n, k)`.
pub fn leaf_centroid_lower_bound(n: usize, k: usize) -> Result<RatioBound> {
    check_range(n >= 3 && k >= 2 && k <= n, || {
        format!("need n >= 3 and 2 <= k <= n, got n = {n}, k = {k}")
    })?;
    let (regime, extremal, denominator) = if k == n {
        (Regime::Complete, Extremal::PathEnd { n }, BigCount::from(n - 1))
    } else if k == n - 1 {
        let d = 2 * (n - 2) + (n - 3) * (n - 1);
        (Regime::NearComplete, Extremal::PathEnd { n }, BigCount::from(d))
    } else if 2 * k <= n + 2 {
        let (regime, a, b) = if n.is_multiple_of(2) {
            (Regime::EvenBalanced, n / 2, n / 2 - 2)
        } else {
            (Regime::OddBalanced, (n - 1) / 2, (n - 3) / 2)
        };
        (regime, Extremal::PendantPath { a, b }, pendant_path_distance_closed(a, b, k)?)
    } else {
        let (a, b) = (k - 1, n - k - 1);
        (Regime::Skewed, Extremal::PendantPath { a, b }, pendant_path_distance_closed(a, b, k)?)
    };
    let extra = crate::count::binomial(n as u64 - 2, k as i64 - 1);
    let value = Ratio::new(&denominator + extra, denominator)?;
    Ok(RatioBound { value, witness_r: None, regime: Some(regime), extremal })
}

/// `(n / k, (n − 1) / (k − 1))`, the range of `SW_k(T) / d_k(v)` for a
/// centroid `v`.
pub fn global_local_bounds(n: usize, k: usize) -> Result<(Ratio, Ratio)> {
    if k < 2 || k > n {
        return Err(Error::KOutOfRange { k, n });
    }
    Ok((Ratio::from_u64(n as u64, k as u64)?, Ratio::from_u64(n as u64 - 1, k as u64 - 1)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{brute_vertex_index, IndexMode};

    fn big(x: u64) -> BigCount {
        BigCount::from(x)
    }

    fn ratio(p: u64, q: u64) -> Ratio {
        Ratio::from_u64(p, q).unwrap()
    }

    fn brute(t: &Tree, v: usize, k: usize) -> BigCount {
        brute_vertex_index(t, v, k, IndexMode::All).unwrap()
    }

    #[test]
    fn comet_shapes() {
        let (t, spec) = comet(5, 2).unwrap();
        assert_eq!(t.degree(spec.d), 4);
        assert_eq!(spec.c, Some(spec.d));

        let (t, spec) = comet(6, 3).unwrap();
        assert_eq!((spec.b, spec.c, spec.d, spec.a), (0, Some(1), 2, 3));
        assert_eq!(t.degree(2), 4);
        assert!(t.is_leaf(spec.b) && t.is_leaf(spec.a));

        let (t, _) = comet(7, 6).unwrap();
        assert_eq!(t, Tree::path(7));

        assert!(comet(5, 5).is_err());
        assert!(comet(5, 0).is_err());
        assert!(comet(1, 1).is_err());
    }

    #[test]
    fn path_closed_form_examples() {
        assert_eq!(path_vertex_distance_closed(2, 2, 2).unwrap(), big(6));
        assert_eq!(path_vertex_distance_closed(1, 1, 2).unwrap(), big(2));
        assert_eq!(path_vertex_distance_closed(3, 0, 2).unwrap(), big(6));
        assert_eq!(brute(&Tree::path(5), 2, 2), big(6));
        assert!(path_vertex_distance_closed(1, 1, 4).is_err());
        assert!(path_vertex_distance_closed(1, 1, 1).is_err());
    }

    #[test]
    fn pendant_closed_form_examples() {
        for (a, b, k, expect) in [(2, 1, 2, 5), (2, 2, 3, 26), (3, 1, 2, 8)] {
            assert_eq!(pendant_path_distance_closed(a, b, k).unwrap(), big(expect));
            let (t, v, _) = pendant_path(a, b);
            assert_eq!(brute(&t, v, k), big(expect));
        }
        assert!(pendant_path_distance_closed(1, 1, 5).is_err());
    }

    #[test]
    fn comet_denominator_examples() {
        assert_eq!(comet_leaf_denominator(5, 2, 3).unwrap(), big(15));
        assert_eq!(comet_leaf_denominator(5, 3, 3).unwrap(), big(17));
        // A pendant leaf of comet(6, 3) is at distances 1, 2, 3, 2, 2.
        assert_eq!(comet_leaf_denominator(6, 3, 2).unwrap(), big(10));
        let (t, spec) = comet(6, 3).unwrap();
        assert_eq!(brute(&t, spec.a, 2), big(10));
        assert_eq!(comet_internal_denominator(6, 1, 2).unwrap(), big(6));
        assert_eq!(comet_internal_denominator(6, 2, 2).unwrap(), big(8));
        assert_eq!(comet_internal_denominator(5, 1, 3).unwrap(), big(14));
        let (t, spec) = comet(5, 3).unwrap();
        assert_eq!(brute(&t, spec.d, 3), big(14));
        assert!(comet_leaf_denominator(5, 5, 3).is_err());
        assert!(comet_internal_denominator(5, 3, 3).is_err());
    }

    #[test]
    fn leaf_pair_examples() {
        let b = leaf_pair_ratio_bound(5, 3).unwrap();
        assert_eq!(b.value, ratio(18, 17));
        assert_eq!(b.witness_r, Some(3));
        let b = leaf_pair_ratio_bound(4, 4).unwrap();
        assert_eq!(b.value, Ratio::one());
        assert_eq!(b.witness_r, Some(1));
        assert!(leaf_pair_ratio_bound(2, 2).is_err());
    }

    #[test]
    fn internal_pair_examples() {
        let b = internal_pair_ratio_bound(6, 2).unwrap();
        assert_eq!(b.value, ratio(4, 3));
        assert_eq!(b.witness_r, Some(1));
        for n in 4..9 {
            assert_eq!(internal_pair_ratio_bound(n, n).unwrap().value, Ratio::one());
        }
        // r = 2 on comet(6, 4): d_2(c) = 10, d_2(d) = 8.
        let (t, spec) = comet(6, 4).unwrap();
        let c = spec.c.unwrap();
        assert_eq!(Ratio::new(brute(&t, c, 2), brute(&t, spec.d, 2)).unwrap(), ratio(5, 4));
    }

    #[test]
    fn leaf_centroid_examples() {
        let b = leaf_centroid_lower_bound(5, 4).unwrap();
        assert_eq!(b.value, ratio(15, 14));
        assert_eq!(b.regime, Some(Regime::NearComplete));
        assert_eq!(b.extremal, Extremal::PathEnd { n: 5 });

        let b = leaf_centroid_lower_bound(6, 2).unwrap();
        assert_eq!(b.value, ratio(3, 2));
        assert_eq!(b.regime, Some(Regime::EvenBalanced));
        assert_eq!(b.extremal, Extremal::PendantPath { a: 3, b: 1 });

        for n in 3..10 {
            let b = leaf_centroid_lower_bound(n, n).unwrap();
            assert_eq!(b.value, Ratio::one());
            assert_eq!(b.regime, Some(Regime::Complete));
        }
    }

    #[test]
    fn regimes_cover_odd_n() {
        // n = 7: n/2 + 1 = 4.5, so k <= 4 is balanced and k = 5 skewed.
        let regime = |k| leaf_centroid_lower_bound(7, k).unwrap().regime.unwrap();
        assert_eq!(regime(4), Regime::OddBalanced);
        assert_eq!(regime(5), Regime::Skewed);
        assert_eq!(regime(6), Regime::NearComplete);
        // n = 8: n/2 + 1 = 5.
        let regime = |k| leaf_centroid_lower_bound(8, k).unwrap().regime.unwrap();
        assert_eq!(regime(5), Regime::EvenBalanced);
        assert_eq!(regime(6), Regime::Skewed);
    }

    #[test]
    fn bounds_reproduce_on_their_extremal_trees() {
        for n in 4..9 {
            for k in 2..=n {
                for bound in [
                    leaf_pair_ratio_bound(n, k).unwrap(),
                    internal_pair_ratio_bound(n, k).unwrap(),
                    leaf_centroid_lower_bound(n, k).unwrap(),
                ] {
                    let real = bound.extremal.realize();
                    let num = brute(&real.tree, real.numerator_vertex, k);
                    let den = brute(&real.tree, real.denominator_vertex, k);
                    assert_eq!(Ratio::new(num, den).unwrap(), bound.value, "n={n} k={k} {bound:?}");
                }
            }
        }
    }

    #[test]
    fn global_local_examples() {
        let (lo, hi) = global_local_bounds(5, 3).unwrap();
        assert_eq!((lo, hi), (ratio(5, 3), ratio(2, 1)));
        let (lo, hi) = global_local_bounds(6, 6).unwrap();
        assert_eq!((lo, hi), (Ratio::one(), Ratio::one()));
        let (lo, hi) = global_local_bounds(4, 2).unwrap();
        assert_eq!((lo, hi), (ratio(2, 1), ratio(3, 1)));
        assert!(global_local_bounds(4, 5).is_err());
    }
}
