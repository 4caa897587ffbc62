//! Closed-form bound functions for the maximum spectral radius over planar
//! graphs of a given order, plus the per-vertex inequality checks that back
//! the upper bound on concrete instances.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;
use crate::planarity::is_planar;

#[derive(Debug, Error, PartialEq)]
pub enum BoundsError {
    #[error("domain error: {op} requires {requirement}, got {got}")]
    Domain {
        op: &'static str,
        requirement: &'static str,
        got: usize,
    },
    #[error("{op} requires a planar input graph")]
    NonplanarInput { op: &'static str },
    #[error("tier constant must be positive and finite, got {0}")]
    InvalidTier(f64),
}

/// Lower-bound tier constants as data: `(order threshold, constant)`,
/// strongest threshold first. The constant for an order is the one attached
/// to the largest threshold not exceeding it.
pub const VARRHO_TIERS: [(usize, f64); 3] = [(50, 1.478), (40, 1.472), (10, 1.359)];

/// Tier constant applicable at order `n` (requires `n >= 10`).
pub fn tier_constant(n: usize) -> Result<f64, BoundsError> {
    VARRHO_TIERS
        .iter()
        .find(|&&(threshold, _)| n >= threshold)
        .map(|&(_, c)| c)
        .ok_or(BoundsError::Domain {
            op: "tier_constant",
            requirement: "n >= 10",
            got: n,
        })
}

/// Upper bound `2 + sqrt(2n - 6)` on the spectral radius of any planar graph
/// with `n >= 7` vertices.
pub fn planar_upper_bound(n: usize) -> Result<f64, BoundsError> {
    if n < 7 {
        return Err(BoundsError::Domain {
            op: "planar_upper_bound",
            requirement: "n >= 7",
            got: n,
        });
    }
    Ok(2.0 + (2.0 * n as f64 - 6.0).sqrt())
}

/// Lower bound `tier(n) + sqrt(2n - 15/4)` on the maximum spectral radius
/// over planar graphs of order `n >= 10` (also over those with a dominating
/// vertex, which realize it).
pub fn varrho_lower_bound(n: usize) -> Result<f64, BoundsError> {
    let c = tier_constant(n)?;
    Ok(c + (2.0 * n as f64 - 3.75).sqrt())
}

/// The second-eigenvector-entry lower bound
/// `(c^2 + 2 c s + n - 11/4) / (4n - 10)` with `s = sqrt(2n - 15/4)`,
/// strictly decreasing in `n`.
pub fn x2_lower_bound(n: usize, tier_constant: f64) -> Result<f64, BoundsError> {
    if n < 10 {
        return Err(BoundsError::Domain {
            op: "x2_lower_bound",
            requirement: "n >= 10",
            got: n,
        });
    }
    if !(tier_constant > 0.0 && tier_constant.is_finite()) {
        return Err(BoundsError::InvalidTier(tier_constant));
    }
    let s = (2.0 * n as f64 - 3.75).sqrt();
    let c = tier_constant;
    Ok((c * c + 2.0 * c * s + n as f64 - 2.75) / (4.0 * n as f64 - 10.0))
}

/// Largest `n >= 10` with `x2_lower_bound(n, c) > threshold`, or `None` when
/// already below at `n = 10` or when no crossing is found within the scan cap
/// (the function tends to 1/4, so thresholds at or below 1/4 never cross).
pub fn largest_n_with_x2_above(c: f64, threshold: f64) -> Option<usize> {
    const SCAN_CAP: usize = 1_000_000;
    let mut last = None;
    for n in 10..=SCAN_CAP {
        match x2_lower_bound(n, c) {
            Ok(v) if v > threshold => last = Some(n),
            Ok(_) => return last,
            Err(_) => return None,
        }
    }
    None
}

/// Per-vertex outcome of an inequality check; `margin = bound - value`, so
/// nonnegative margins mean the inequality holds.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VertexMargin {
    pub vertex: usize,
    pub value: f64,
    pub bound: f64,
    pub margin: f64,
}

/// Checks `sum of neighbor degrees at v <= 2n + 4 d_v - 10` (the row sum of
/// the squared adjacency matrix) for every vertex of a planar graph with
/// `n >= 7`.
pub fn check_row_sum_inequality(g: &Graph) -> Result<Vec<VertexMargin>, BoundsError> {
    let n = g.order();
    if n < 7 {
        return Err(BoundsError::Domain {
            op: "check_row_sum_inequality",
            requirement: "n >= 7",
            got: n,
        });
    }
    if !is_planar(g) {
        return Err(BoundsError::NonplanarInput {
            op: "check_row_sum_inequality",
        });
    }
    Ok(g.vertices()
        .map(|v| {
            let value: usize = g.neighbors(v).iter().map(|&u| g.degree(u)).sum();
            let bound = 2.0 * n as f64 + 4.0 * g.degree(v) as f64 - 10.0;
            VertexMargin {
                vertex: v,
                value: value as f64,
                bound,
                margin: bound - value as f64,
            }
        })
        .collect())
}

/// Checks `e(N(v)) <= 2 d_v - 3` for every vertex of degree at least 2 of a
/// planar graph.
pub fn check_neighborhood_edge_bound(g: &Graph) -> Result<Vec<VertexMargin>, BoundsError> {
    if !is_planar(g) {
        return Err(BoundsError::NonplanarInput {
            op: "check_neighborhood_edge_bound",
        });
    }
    Ok(g.vertices()
        .filter(|&v| g.degree(v) >= 2)
        .map(|v| {
            let value = g.neighborhood_edge_count(v) as f64;
            let bound = 2.0 * g.degree(v) as f64 - 3.0;
            VertexMargin {
                vertex: v,
                value,
                bound,
                margin: bound - value,
            }
        })
        .collect())
}

/// Evaluation of the bound pair at one order.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BoundReport {
    pub n: usize,
    /// `2 + sqrt(2n - 6)`
    pub upper: f64,
    /// Tier constant applicable at `n`.
    pub lower_tier: f64,
    /// `lower_tier + sqrt(2n - 15/4)`
    pub lower: f64,
    /// `x2_lower_bound(n, lower_tier)`
    pub x2_bound: f64,
    /// `lower < upper`
    pub consistent: bool,
}

pub fn bound_report(n: usize) -> Result<BoundReport, BoundsError> {
    let lower_tier = tier_constant(n)?;
    let upper = planar_upper_bound(n)?;
    let lower = varrho_lower_bound(n)?;
    let x2_bound = x2_lower_bound(n, lower_tier)?;
    Ok(BoundReport {
        n,
        upper,
        lower_tier,
        lower,
        x2_bound,
        consistent: lower < upper,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cal_h, cycle_graph, phi};
    use crate::spectral::h_lower_bound;

    #[test]
    fn upper_bound_values() {
        assert!((planar_upper_bound(7).unwrap() - (2.0 + 8f64.sqrt())).abs() < 1e-12);
        assert!((planar_upper_bound(7).unwrap() - 4.82843).abs() < 1e-5);
        assert!((planar_upper_bound(50).unwrap() - 11.69536).abs() < 1e-5);
        assert!(planar_upper_bound(6).is_err());
    }

    #[test]
    fn lower_bound_tiers() {
        assert!((varrho_lower_bound(10).unwrap() - (1.359 + 16.25f64.sqrt())).abs() < 1e-12);
        assert_eq!(tier_constant(39).unwrap(), 1.359);
        assert_eq!(tier_constant(40).unwrap(), 1.472);
        assert_eq!(tier_constant(49).unwrap(), 1.472);
        assert_eq!(tier_constant(50).unwrap(), 1.478);
        assert_eq!(tier_constant(500).unwrap(), 1.478);
        assert!(varrho_lower_bound(9).is_err());
    }

    #[test]
    fn x2_bound_values() {
        assert!((x2_lower_bound(10, 1.359).unwrap() - 0.6684).abs() < 1e-3);
        assert!(x2_lower_bound(10, 1.359).unwrap() > 0.25);
        assert!((x2_lower_bound(50, 1.359).unwrap() - 0.39875).abs() < 1e-3);
        assert!((x2_lower_bound(80, 1.359).unwrap() - 0.3647).abs() < 1e-4);
        // with the 1.472 tier the value at n = 80 sits marginally below 0.375
        let v = x2_lower_bound(80, 1.472).unwrap();
        assert!(v < 0.375 && v > 0.3745);
        assert!(x2_lower_bound(9, 1.359).is_err());
        assert!(x2_lower_bound(10, -1.0).is_err());
    }

    #[test]
    fn x2_bound_is_strictly_decreasing() {
        let mut prev = x2_lower_bound(10, 1.359).unwrap();
        for n in 11..=500 {
            let cur = x2_lower_bound(n, 1.359).unwrap();
            assert!(cur < prev, "not decreasing at n={n}");
            prev = cur;
        }
    }

    #[test]
    fn x2_thresholds_resolved_exactly() {
        assert_eq!(largest_n_with_x2_above(1.472, 0.375), Some(79));
        assert_eq!(largest_n_with_x2_above(1.359, 0.375), Some(68));
        assert_eq!(largest_n_with_x2_above(1.359, 0.3987), Some(50));
    }

    #[test]
    fn bound_pair_consistency_sweep() {
        for n in 10..=500 {
            let report = bound_report(n).unwrap();
            assert!(report.consistent, "lower >= upper at n={n}");
            // the closed-form lower bound for cal_h strictly dominates the
            // tiered bound; this is exactly how the tiers are extracted
            assert!(h_lower_bound(n).unwrap() > report.lower, "tier fails at n={n}");
        }
    }

    #[test]
    fn row_sum_margins() {
        let h10 = cal_h(10).unwrap();
        let report = check_row_sum_inequality(&h10).unwrap();
        // dominating vertex: row sum of A^2 is the total remaining degree
        assert_eq!(report[0].value, 39.0);
        assert_eq!(report[0].bound, 46.0);
        assert!(report.iter().all(|r| r.margin >= 0.0));

        let c7 = cycle_graph(7).unwrap();
        let report = check_row_sum_inequality(&c7).unwrap();
        assert!(report.iter().all(|r| r.value == 4.0 && r.bound == 12.0));

        assert_eq!(
            check_row_sum_inequality(&phi(7).unwrap()).unwrap_err(),
            BoundsError::NonplanarInput {
                op: "check_row_sum_inequality"
            }
        );
    }

    #[test]
    fn neighborhood_edge_margins() {
        for n in 5..=12 {
            let h = cal_h(n).unwrap();
            let report = check_neighborhood_edge_bound(&h).unwrap();
            // dominating vertex attains equality: 2n - 5 = 2(n-1) - 3
            let apex = report.iter().find(|r| r.vertex == 0).unwrap();
            assert_eq!(apex.margin, 0.0);
            assert!(report.iter().all(|r| r.margin >= 0.0));
        }
        let c5 = cycle_graph(5).unwrap();
        let report = check_neighborhood_edge_bound(&c5).unwrap();
        assert!(report.iter().all(|r| r.value == 0.0 && r.bound == 1.0));
    }
}
