// Copyright 2026 the Archimedes Authors
// SPDX-License-Identifier: Apache-2.0

//! Small dense least-squares problems solved by Householder QR.

use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

/// Solution of an overdetermined linear least-squares problem.
#[derive(Clone, Debug, PartialEq)]
pub struct LeastSquares {
    pub coefficients: Vec<f64>,
    pub residuals: Vec<f64>,
    /// Root mean square of the residuals.
    pub residual_rms: f64,
}

/// Minimize `|A c - y|` where `A` is given by its columns.
///
/// Columns are scaled to unit norm before factoring, so the rank test is
/// relative to each column's own size.
pub fn least_squares(columns: &[Vec<f64>], y: &[f64]) -> Result<LeastSquares> {
    let n = columns.len();
    let m = y.len();
    if n == 0 || m < n || columns.iter().any(|c| c.len() != m) {
        return Err(Error::InvalidParameter {
            name: "columns",
            reason: "need at least as many rows as columns, all of equal length",
        });
    }
    let mut scale = vec![0.0; n];
    let mut a = vec![0.0; m * n]; // column-major
    for (j, col) in columns.iter().enumerate() {
        let norm = col.iter().map(|v| v * v).sum::<f64>().sqrt_();
        if !(norm > 0.0 && norm.is_finite()) {
            return Err(Error::DegenerateFit);
        }
        scale[j] = norm;
        for i in 0..m {
            a[j * m + i] = col[i] / norm;
        }
    }
    let mut rhs = y.to_vec();
    let mut diag = vec![0.0; n];
    for k in 0..n {
        let norm = (k..m)
            .map(|i| a[k * m + i] * a[k * m + i])
            .sum::<f64>()
            .sqrt_();
        if norm == 0.0 {
            return Err(Error::DegenerateFit);
        }
        let alpha = if a[k * m + k] > 0.0 { -norm } else { norm };
        // v = x - alpha e1, stored in place
        a[k * m + k] -= alpha;
        let vnorm2: f64 = (k..m).map(|i| a[k * m + i] * a[k * m + i]).sum();
        diag[k] = alpha;
        if vnorm2 == 0.0 {
            continue;
        }
        for j in (k + 1)..n {
            let dot: f64 = (k..m).map(|i| a[k * m + i] * a[j * m + i]).sum();
            let f = 2.0 * dot / vnorm2;
            for i in k..m {
                a[j * m + i] -= f * a[k * m + i];
            }
        }
        let dot: f64 = (k..m).map(|i| a[k * m + i] * rhs[i]).sum();
        let f = 2.0 * dot / vnorm2;
        for i in k..m {
            rhs[i] -= f * a[k * m + i];
        }
    }
    let largest = diag.iter().fold(0.0f64, |acc, d| acc.max(d.abs()));
    if diag.iter().any(|d| d.abs() <= 1e-12 * largest) {
        return Err(Error::DegenerateFit);
    }
    let mut coef = vec![0.0; n];
    for k in (0..n).rev() {
        let mut s = rhs[k];
        for j in (k + 1)..n {
            s -= a[j * m + k] * coef[j];
        }
        coef[k] = s / diag[k];
    }
    for (c, s) in coef.iter_mut().zip(&scale) {
        *c /= s;
    }
    let residuals: Vec<f64> = (0..m)
        .map(|i| {
            y[i] - columns
                .iter()
                .zip(&coef)
                .map(|(col, c)| col[i] * c)
                .sum::<f64>()
        })
        .collect();
    let residual_rms = (residuals.iter().map(|r| r * r).sum::<f64>() / m as f64).sqrt_();
    Ok(LeastSquares {
        coefficients: coef,
        residuals,
        residual_rms,
    })
}

/// `y ≈ coefficient * x^exponent`, fitted as a line in log-log space.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PowerLawFit {
    pub coefficient: f64,
    pub exponent: f64,
    /// RMS of the residuals of `ln y`, so it is dimensionless.
    pub residual_rms: f64,
}

pub fn fit_power_law(xs: &[f64], ys: &[f64]) -> Result<PowerLawFit> {
    if xs.len() != ys.len() || xs.len() < 2 {
        return Err(Error::InvalidParameter {
            name: "samples",
            reason: "need at least two (x, y) pairs",
        });
    }
    if xs.iter().chain(ys).any(|v| !(*v > 0.0) || !v.is_finite()) {
        return Err(Error::InvalidParameter {
            name: "samples",
            reason: "power-law fits need positive finite data",
        });
    }
    let lx: Vec<f64> = xs.iter().map(|v| libm::log(*v)).collect();
    let ly: Vec<f64> = ys.iter().map(|v| libm::log(*v)).collect();
    // Center the abscissae: the intercept column and ln x are nearly
    // collinear when all x are small.
    let mean = lx.iter().sum::<f64>() / lx.len() as f64;
    let centered: Vec<f64> = lx.iter().map(|v| v - mean).collect();
    let fit = least_squares(&[vec![1.0; lx.len()], centered], &ly)?;
    let exponent = fit.coefficients[1];
    let intercept = fit.coefficients[0] - exponent * mean;
    Ok(PowerLawFit {
        coefficient: libm::exp(intercept),
        exponent,
        residual_rms: fit.residual_rms,
    })
}

trait Sqrt {
    fn sqrt_(self) -> f64;
}

impl Sqrt for f64 {
    #[inline]
    fn sqrt_(self) -> f64 {
        libm::sqrt(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovers_quadratic() {
        let xs: Vec<f64> = (0..10).map(|i| i as f64 * 0.1).collect();
        let y: Vec<f64> = xs.iter().map(|x| 2.0 - 3.0 * x + 0.5 * x * x).collect();
        let cols = vec![
            vec![1.0; xs.len()],
            xs.clone(),
            xs.iter().map(|x| x * x).collect(),
        ];
        let fit = least_squares(&cols, &y).unwrap();
        assert!((fit.coefficients[0] - 2.0).abs() < 1e-13);
        assert!((fit.coefficients[1] + 3.0).abs() < 1e-12);
        assert!((fit.coefficients[2] - 0.5).abs() < 1e-12);
        assert!(fit.residual_rms < 1e-14);
    }

    #[test]
    fn overdetermined_mean() {
        let fit = least_squares(&[vec![1.0; 4]], &[1.0, 2.0, 3.0, 6.0]).unwrap();
        assert!((fit.coefficients[0] - 3.0).abs() < 1e-15);
        assert!((fit.residual_rms - libm::sqrt(14.0 / 4.0)).abs() < 1e-14);
    }

    #[test]
    fn collinear_columns_rejected() {
        let cols = vec![vec![1.0, 2.0, 3.0], vec![2.0, 4.0, 6.0]];
        assert_eq!(
            least_squares(&cols, &[1.0, 1.0, 1.0]),
            Err(Error::DegenerateFit)
        );
    }

    #[test]
    fn power_law_exact() {
        let xs = [1e-6, 1e-4, 1e-2, 1.0];
        let ys: Vec<f64> = xs.iter().map(|x| 4.0 / 3.0 * libm::pow(*x, 1.5)).collect();
        let fit = fit_power_law(&xs, &ys).unwrap();
        assert!((fit.exponent - 1.5).abs() < 1e-13);
        assert!((fit.coefficient - 4.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn power_law_identical_abscissae() {
        assert_eq!(
            fit_power_law(&[2.0, 2.0, 2.0], &[1.0, 2.0, 3.0]),
            Err(Error::DegenerateFit)
        );
    }
}
