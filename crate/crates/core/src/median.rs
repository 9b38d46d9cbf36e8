//! Medians, the neighbor-count centroid criterion and the median gap bounds.

use serde::Serialize;

use crate::count::all_vertex_index;
use crate::error::{check_k, Result};
use crate::oracle::IndexMode;
use crate::tree::Tree;

/// The three medians of a tree for one `k` and the minimum distances between
/// them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MedianReport {
    pub k: usize,
    pub median_all: Vec<usize>,
    pub median_leaf: Vec<usize>,
    pub median_internal: Vec<usize>,
    pub gap_leaf_internal: usize,
    pub gap_leaf_all: usize,
    pub gap_internal_all: usize,
}

/// Vertices minimizing the index of `mode`, ascending.
pub fn median(t: &Tree, k: usize, mode: IndexMode) -> Result<Vec<usize>> {
    Ok(all_vertex_index(t, k, mode)?.argmin())
}

/// Neighbor-count test for membership of `v` in the median of `mode`.
///
/// For each neighbor `u`, let `a` and `b` be the pool members on the `v` and
/// `u` sides of `uv` that can accompany `v` and `u` respectively. For the full
/// pool these are `n_vu(v) − 1` and `n_vu(u) − 1`, since a vertex never
/// accompanies itself. For the leaf and internal pools the endpoints count,
/// because a leaf may be drawn alongside itself. Then `v` passes when, for
/// every neighbor, `a >= b` or both are below `k − 1`, and additionally
/// `a > b` with `a >= k − 1` whenever `u` is outside the median.
pub fn satisfactory(t: &Tree, v: usize, k: usize, mode: IndexMode) -> Result<bool> {
    t.check_vertex(v)?;
    check_k(t.n(), k)?;
    let med = median(t, k, mode)?;
    Ok(satisfactory_against(t, v, k, mode, &med))
}

pub(crate) fn satisfactory_against(
    t: &Tree,
    v: usize,
    k: usize,
    mode: IndexMode,
    median: &[usize],
) -> bool {
    let own = usize::from(mode == IndexMode::All);
    let threshold = k - 1;
    t.neighbors(v).iter().all(|&u| {
        let split = t.split_of(v, u).expect("neighbors share an edge");
        let (near, far) = split.sides_from(v);
        let a = near.count(mode) - own;
        let b = far.count(mode) - own;
        let balanced = a >= b || (a < threshold && b < threshold);
        let dominant = median.contains(&u) || (a > b && a >= threshold);
        balanced && dominant
    })
}

/// The literal reading with both side counts taken after removing the
/// endpoints. Agrees with [`satisfactory`] for the full pool but not for the
/// leaf and internal pools; kept to document the difference.
pub fn satisfactory_endpoint_excluded(t: &Tree, v: usize, k: usize, mode: IndexMode) -> Result<bool> {
    t.check_vertex(v)?;
    check_k(t.n(), k)?;
    let med = median(t, k, mode)?;
    let threshold = k - 1;
    Ok(t.neighbors(v).iter().all(|&u| {
        let split = t.split_of(v, u).expect("neighbors share an edge");
        let (near, far) = split.sides_from(v);
        let in_mode = |x: usize| match mode {
            IndexMode::All => 1,
            IndexMode::Leaf => usize::from(t.is_leaf(x)),
            IndexMode::Internal => usize::from(!t.is_leaf(x)),
        };
        let a = near.count(mode) - in_mode(v);
        let b = far.count(mode) - in_mode(u);
        (a >= b || (a < threshold && b < threshold)) && (med.contains(&u) || (a > b && a >= threshold))
    }))
}

fn set_gap(dist: &[Vec<usize>], a: &[usize], b: &[usize]) -> usize {
    a.iter()
        .flat_map(|&x| b.iter().map(move |&y| dist[x][y]))
        .min()
        .expect("medians are nonempty")
}

pub fn median_report(t: &Tree, k: usize) -> Result<MedianReport> {
    check_k(t.n(), k)?;
    let median_all = median(t, k, IndexMode::All)?;
    let median_leaf = median(t, k, IndexMode::Leaf)?;
    let median_internal = median(t, k, IndexMode::Internal)?;
    let dist: Vec<Vec<usize>> = (0..t.n()).map(|v| t.distances_from(v)).collect();
    Ok(MedianReport {
        k,
        gap_leaf_internal: set_gap(&dist, &median_leaf, &median_internal),
        gap_leaf_all: set_gap(&dist, &median_leaf, &median_all),
        gap_internal_all: set_gap(&dist, &median_internal, &median_all),
        median_all,
        median_leaf,
        median_internal,
    })
}

/// One median-gap inequality `gap <= max(0, rhs)` where `rhs` is a multiple
/// of `1 / rhs_denominator`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GapBound {
    pub gap: usize,
    pub rhs_numerator: i64,
    pub rhs_denominator: i64,
    /// False when the k-range precondition of the inequality fails.
    pub applies: bool,
}

impl GapBound {
    /// True when the inequality holds or does not apply.
    pub fn holds(&self) -> bool {
        !self.applies || self.gap as i64 * self.rhs_denominator <= self.rhs_numerator.max(0)
    }

    /// The clamped right-hand side as text, `p` or `p/2`.
    pub fn bound_text(&self) -> String {
        let num = self.rhs_numerator.max(0);
        if self.rhs_denominator == 1 || num % self.rhs_denominator == 0 {
            (num / self.rhs_denominator).to_string()
        } else {
            format!("{num}/{}", self.rhs_denominator)
        }
    }
}

/// The three median-gap inequalities evaluated on one tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GapBounds {
    pub leaf_internal: GapBound,
    pub leaf_all: GapBound,
    pub internal_all: GapBound,
}

impl GapBounds {
    /// Evaluates the inequalities with the observed gaps substituted wherever
    /// the gap also appears on the right-hand side:
    ///
    /// - leaf–internal: `g <= max(0, n + 1 − max(k,3) − max(k+1, g+2))`
    /// - leaf–all, for `k <= (n+1)/2`: `g <= max(0, (n − 2·max(k,3) + 1) / 2)`
    /// - internal–all, for `k <= (n−1)/2`: `g <= max(0, (n − 2·max(k+1, g+2) + 1) / 2)`
    pub fn evaluate(n: usize, report: &MedianReport) -> GapBounds {
        let (n, k) = (n as i64, report.k as i64);
        let g_li = report.gap_leaf_internal as i64;
        let g_ia = report.gap_internal_all as i64;
        GapBounds {
            leaf_internal: GapBound {
                gap: report.gap_leaf_internal,
                rhs_numerator: n + 1 - k.max(3) - (k + 1).max(g_li + 2),
                rhs_denominator: 1,
                applies: true,
            },
            leaf_all: GapBound {
                gap: report.gap_leaf_all,
                rhs_numerator: n - 2 * k.max(3) + 1,
                rhs_denominator: 2,
                applies: 2 * k <= n + 1,
            },
            internal_all: GapBound {
                gap: report.gap_internal_all,
                rhs_numerator: n - 2 * (k + 1).max(g_ia + 2) + 1,
                rhs_denominator: 2,
                applies: 2 * k < n,
            },
        }
    }

    pub fn all_hold(&self) -> bool {
        self.leaf_internal.holds() && self.leaf_all.holds() && self.internal_all.holds()
    }
}

pub fn check_gap_bounds(t: &Tree, k: usize) -> Result<GapBounds> {
    let report = median_report(t, k)?;
    Ok(GapBounds::evaluate(t.n(), &report))
}
