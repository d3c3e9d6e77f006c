// Copyright 2026 the Archimedes Authors
// SPDX-License-Identifier: Apache-2.0

//! Curvature from chord lengths.
//!
//! The chord at height `h` above `P` has length `L ~ 2 sqrt(2h / kappa)`,
//! so `8h / L^2 -> kappa(P)` as `h -> 0`. For a `C^3` curve the odd-order
//! corrections to the two chord endpoints cancel in `L`, and the estimator
//! behaves like `kappa + c1 h + c2 h^2 + ...`. [`extrapolate_curvature`]
//! fits that model on the grid `h0 4^-j`.

use alloc::vec::Vec;

use crate::chord::{chord_length, h_max, height_floor};
use crate::curve::{curvature_analytic, Curve, CurvePoint, DerivativeSource};
use crate::numeric::{fit_power_law, least_squares};
use crate::{Error, Result};

/// Grid refinement ratio between consecutive heights.
pub const GRID_RATIO: f64 = 4.0;

pub const DEFAULT_LEVELS: usize = 6;

/// Differences below this fraction of `|kappa|` are treated as rounding
/// noise, both for order fitting and for monotonicity checks.
pub const NOISE_FLOOR: f64 = 1e-12;

/// `8h / L_P(h)^2`.
pub fn chord_curvature(curve: &Curve, p: &CurvePoint, h: f64) -> Result<f64> {
    let l = chord_length(curve, p, h)?;
    Ok(8.0 * h / (l * l))
}

/// `L_P(h) / sqrt(h)`, which tends to `2 sqrt(2 / kappa)`.
pub fn normalized_chord_length(curve: &Curve, p: &CurvePoint, h: f64) -> Result<f64> {
    Ok(chord_length(curve, p, h)? / libm::sqrt(h))
}

/// Outcome of an `h -> 0` convergence study at one point.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CurvatureEstimate {
    pub point: CurvePoint,
    /// Strictly decreasing heights `h0 4^-j`.
    pub h_grid: Vec<f64>,
    pub lengths: Vec<f64>,
    /// `8h / L^2` on the grid.
    pub raw: Vec<f64>,
    /// Constant term of the least-squares fit `kappa + c1 h + c2 h^2`.
    pub extrapolated: f64,
    /// Log-log slope of `|raw - raw_finest|` against `h`; `None` when those
    /// differences are at rounding level (the estimator is exact).
    pub fitted_order: Option<f64>,
    pub analytic: Option<f64>,
    pub rel_error: Option<f64>,
    /// The curve carries a known smoothness defect; the limit need not be
    /// the curvature.
    pub hypothesis_violated: bool,
}

impl CurvatureEstimate {
    /// `|raw_j - kappa|` for each grid height, if the analytic value is known.
    pub fn raw_errors(&self) -> Option<Vec<f64>> {
        let k = self.analytic?;
        Some(self.raw.iter().map(|r| (r - k).abs()).collect())
    }

    /// Whether the raw error never grows along the grid, allowing growth
    /// within the rounding floor `NOISE_FLOOR |kappa|`.
    pub fn raw_error_decreasing(&self) -> Option<bool> {
        let k = self.analytic?;
        let errs = self.raw_errors()?;
        let floor = NOISE_FLOOR * k.abs();
        Some(errs.windows(2).all(|w| w[1] <= w[0] || w[1] <= floor))
    }
}

/// Default first height `min(0.1 / kappa_hat(h_max / 2), h_max / 4)`.
pub fn default_initial_height(curve: &Curve, p: &CurvePoint) -> Result<f64> {
    let hm = h_max(curve, p)?.h_max;
    let k = chord_curvature(curve, p, 0.5 * hm)?;
    Ok((0.1 / k).min(0.25 * hm))
}

/// Evaluate the estimator on `h0 4^-j`, `j < levels`, and extrapolate.
pub fn extrapolate_curvature(
    curve: &Curve,
    p: &CurvePoint,
    h0: f64,
    levels: usize,
) -> Result<CurvatureEstimate> {
    if levels < 4 {
        return Err(Error::InvalidParameter {
            name: "levels",
            reason: "need at least 4 grid levels",
        });
    }
    if !(h0 > 0.0 && h0.is_finite()) {
        return Err(Error::InvalidParameter {
            name: "h0",
            reason: "must be positive and finite",
        });
    }
    let h_grid: Vec<f64> = (0..levels)
        .map(|j| h0 * libm::pow(GRID_RATIO, -(j as f64)))
        .collect();
    let floor = height_floor(curve, p);
    let finest = h_grid[levels - 1];
    if finest < floor {
        return Err(Error::HeightBelowFloor {
            height: finest,
            floor,
        });
    }
    let lengths = h_grid
        .iter()
        .map(|&h| chord_length(curve, p, h))
        .collect::<Result<Vec<f64>>>()?;
    let raw: Vec<f64> = h_grid
        .iter()
        .zip(&lengths)
        .map(|(h, l)| 8.0 * h / (l * l))
        .collect();

    let columns = [
        alloc::vec![1.0; levels],
        h_grid.clone(),
        h_grid.iter().map(|h| h * h).collect(),
    ];
    let fit = least_squares(&columns, &raw)?;
    let extrapolated = fit.coefficients[0];

    let last = raw[levels - 1];
    let (hs, ds): (Vec<f64>, Vec<f64>) = h_grid[..levels - 1]
        .iter()
        .zip(&raw[..levels - 1])
        .map(|(h, r)| (*h, (r - last).abs()))
        .filter(|(_, d)| *d > NOISE_FLOOR * last.abs())
        .unzip();
    let fitted_order = if hs.len() >= 2 {
        fit_power_law(&hs, &ds).ok().map(|f| f.exponent)
    } else {
        None
    };

    let analytic = curvature_analytic(curve, p, DerivativeSource::AllowFiniteDifference).ok();
    let rel_error = analytic.map(|k| (extrapolated - k).abs() / k.abs());
    Ok(CurvatureEstimate {
        point: *p,
        h_grid,
        lengths,
        raw,
        extrapolated,
        fitted_order,
        analytic,
        rel_error,
        hypothesis_violated: curve.hypothesis_violated(),
    })
}

/// [`extrapolate_curvature`] with the default first height and
/// [`DEFAULT_LEVELS`].
pub fn extrapolate_curvature_default(curve: &Curve, p: &CurvePoint) -> Result<CurvatureEstimate> {
    let h0 = default_initial_height(curve, p)?;
    extrapolate_curvature(curve, p, h0, DEFAULT_LEVELS)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::{make_ellipse, make_example10, make_family_curve, make_quadratic};
    use core::f64::consts::{PI, SQRT_2};

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    fn pole() -> (Curve, CurvePoint) {
        let c = make_ellipse(1.0, 1.0).unwrap();
        let p = c.point(1.5 * PI).unwrap();
        (c, p)
    }

    #[test]
    fn exact_on_parabola_vertex() {
        let c = make_quadratic(1.0, 0.0, 0.0).unwrap();
        let p = c.point(0.0).unwrap();
        for &h in &[1e-6, 1e-3, 0.5, 3.0] {
            assert!(close(chord_curvature(&c, &p, h).unwrap(), 2.0, 1e-10));
            assert!(close(
                normalized_chord_length(&c, &p, h).unwrap(),
                2.0,
                1e-10
            ));
        }
        let est = extrapolate_curvature(&c, &p, 0.5, 5).unwrap();
        assert!(close(est.extrapolated, 2.0, 1e-10));
        assert_eq!(est.fitted_order, None);
    }

    #[test]
    fn circle_finite_height_bias() {
        let (c, p) = pole();
        // L = 2 sqrt(2h - h^2)
        assert!(close(
            chord_curvature(&c, &p, 0.5).unwrap(),
            4.0 / 3.0,
            1e-12
        ));
        let r = normalized_chord_length(&c, &p, 1e-8).unwrap();
        assert!(close(r, 2.0 * SQRT_2, 1e-7));
    }

    #[test]
    fn circle_extrapolation() {
        let (c, p) = pole();
        let est = extrapolate_curvature(&c, &p, 0.25, 6).unwrap();
        assert!(close(est.extrapolated, 1.0, 1e-5));
        for (h, r) in est.h_grid.iter().zip(&est.raw) {
            assert!(close(*r, 2.0 / (2.0 - h), 1e-12));
        }
        let order = est.fitted_order.unwrap();
        // subtracting the finest level biases the slope slightly above 1
        assert!(close(order, 1.067, 0.01));
        assert_eq!(est.raw_error_decreasing(), Some(true));
        assert!(close(default_initial_height(&c, &p).unwrap(), 0.05, 1e-8));
    }

    #[test]
    fn ellipse_normalized_length() {
        let e = make_ellipse(2.0, 1.0).unwrap();
        let p = e.point(0.0).unwrap();
        let r = normalized_chord_length(&e, &p, 1e-6).unwrap();
        assert!(close(r, 2.0, 1e-2));
    }

    #[test]
    fn family_vertex_extrapolation() {
        let c = make_family_curve(1.0, 0.5).unwrap();
        let p = c.point(0.0).unwrap();
        let est = extrapolate_curvature(&c, &p, 0.1, 6).unwrap();
        assert!(close(est.extrapolated, 0.25, 1e-4 * 0.25));
        assert!(est.rel_error.unwrap() < 1e-4);
    }

    #[test]
    fn identity_ratio_squared_times_kappa() {
        let e = make_ellipse(2.0, 1.0).unwrap();
        let p = e.point(0.4).unwrap();
        let r = normalized_chord_length(&e, &p, 0.1).unwrap();
        let k = chord_curvature(&e, &p, 0.1).unwrap();
        assert!(close(r * r * k, 8.0, 1e-13));
    }

    #[test]
    fn example10_estimator_runs_and_is_flagged() {
        let c = make_example10().unwrap();
        let p = c.point(0.0).unwrap();
        assert!(close(chord_curvature(&c, &p, 0.3).unwrap(), 8.0, 1e-9));
        let est = extrapolate_curvature(&c, &p, 0.1, 4).unwrap();
        assert!(est.hypothesis_violated);
        assert!(close(est.extrapolated, 8.0, 1e-8));
    }

    #[test]
    fn grid_validation() {
        let (c, p) = pole();
        assert!(matches!(
            extrapolate_curvature(&c, &p, 0.1, 3),
            Err(Error::InvalidParameter { .. })
        ));
        assert!(matches!(
            extrapolate_curvature(&c, &p, 1e-9, 12),
            Err(Error::HeightBelowFloor { .. })
        ));
        assert!(matches!(
            extrapolate_curvature(&c, &p, 3.0, 6),
            Err(Error::HeightOutOfRange { .. })
        ));
    }
}
