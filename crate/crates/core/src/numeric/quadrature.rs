// Copyright 2026 the Archimedes Authors
// SPDX-License-Identifier: Apache-2.0

//! Adaptive Simpson quadrature.

use crate::{Error, Result};

/// Adaptive Simpson integrator with Richardson-corrected panels.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AdaptiveSimpson {
    /// Absolute tolerance on the whole integral.
    pub abs_tol: f64,
    /// Maximum bisection depth of any panel.
    pub max_depth: u32,
}

impl Default for AdaptiveSimpson {
    fn default() -> Self {
        AdaptiveSimpson {
            abs_tol: 1e-11,
            max_depth: 40,
        }
    }
}

/// Result of an adaptive integration.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Integral {
    pub value: f64,
    /// Sum of the per-panel error estimates.
    pub error: f64,
    pub evaluations: usize,
    /// False if some panel hit the depth cap without meeting its tolerance.
    pub converged: bool,
}

struct State<F> {
    f: F,
    evaluations: usize,
    error: f64,
    converged: bool,
}

impl<F: FnMut(f64) -> f64> State<F> {
    fn eval(&mut self, x: f64) -> f64 {
        self.evaluations += 1;
        (self.f)(x)
    }

    #[allow(clippy::too_many_arguments)]
    fn panel(
        &mut self,
        a: f64,
        fa: f64,
        m: f64,
        fm: f64,
        b: f64,
        fb: f64,
        whole: f64,
        tol: f64,
        depth: u32,
    ) -> f64 {
        let lm = 0.5 * (a + m);
        let rm = 0.5 * (m + b);
        let flm = self.eval(lm);
        let frm = self.eval(rm);
        let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
        let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
        let delta = left + right - whole;
        // Differences at the rounding level of the panel cannot shrink further.
        let magnitude = (b - a) / 12.0
            * (fa.abs() + 4.0 * flm.abs() + 2.0 * fm.abs() + 4.0 * frm.abs() + fb.abs());
        let rounding = 64.0 * f64::EPSILON * magnitude;
        if !delta.is_finite() {
            self.converged = false;
            return left + right;
        }
        let unsplittable = !(a < lm && lm < m && m < rm && rm < b);
        if delta.abs() <= 15.0 * tol || delta.abs() <= rounding || unsplittable || depth == 0 {
            if depth == 0 && delta.abs() > 15.0 * tol && delta.abs() > rounding {
                self.converged = false;
            }
            self.error += delta.abs() / 15.0;
            return left + right + delta / 15.0;
        }
        self.panel(a, fa, lm, flm, m, fm, left, 0.5 * tol, depth - 1)
            + self.panel(m, fm, rm, frm, b, fb, right, 0.5 * tol, depth - 1)
    }
}

impl AdaptiveSimpson {
    pub fn new(abs_tol: f64) -> Self {
        AdaptiveSimpson {
            abs_tol,
            ..Default::default()
        }
    }

    /// Integrate `f` over `[a, b]` (either orientation).
    pub fn integrate<F: FnMut(f64) -> f64>(&self, f: F, a: f64, b: f64) -> Integral {
        if a == b {
            return Integral {
                value: 0.0,
                error: 0.0,
                evaluations: 0,
                converged: true,
            };
        }
        if a > b {
            let r = self.integrate(f, b, a);
            return Integral {
                value: -r.value,
                ..r
            };
        }
        let mut state = State {
            f,
            evaluations: 0,
            error: 0.0,
            converged: true,
        };
        let m = 0.5 * (a + b);
        let fa = state.eval(a);
        let fm = state.eval(m);
        let fb = state.eval(b);
        let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
        let value = state.panel(a, fa, m, fm, b, fb, whole, self.abs_tol, self.max_depth);
        Integral {
            value,
            error: state.error,
            evaluations: state.evaluations,
            converged: state.converged && value.is_finite(),
        }
    }

    /// Like [`integrate`](Self::integrate) but fails when the tolerance was
    /// not met.
    pub fn integrate_checked<F: FnMut(f64) -> f64>(&self, f: F, a: f64, b: f64) -> Result<f64> {
        let r = self.integrate(f, a, b);
        if r.converged {
            Ok(r.value)
        } else {
            Err(Error::Quadrature {
                estimate: r.value,
                error: r.error,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_on_cubics() {
        let q = AdaptiveSimpson::default();
        let r = q.integrate(|x| x * x * x - 2.0 * x + 1.0, -1.0, 2.0);
        // [x^4/4 - x^2 + x] from -1 to 2
        let exact = (4.0 - 4.0 + 2.0) - (0.25 - 1.0 - 1.0);
        assert!((r.value - exact).abs() < 1e-14);
        assert!(r.converged);
        assert!(r.evaluations <= 5);
    }

    #[test]
    fn smooth_transcendental() {
        let q = AdaptiveSimpson::default();
        let v = q
            .integrate_checked(libm::sin, 0.0, core::f64::consts::PI)
            .unwrap();
        assert!((v - 2.0).abs() < 1e-11);
    }

    #[test]
    fn reversed_interval_negates() {
        let q = AdaptiveSimpson::default();
        let fwd = q.integrate(libm::exp, 0.0, 1.0).value;
        let back = q.integrate(libm::exp, 1.0, 0.0).value;
        assert!((fwd + back).abs() < 1e-14);
    }

    #[test]
    fn kinked_integrand_converges() {
        // piecewise quadratic with a jump in the second derivative
        let f = |x: f64| if x < 0.0 { 9.0 * x * x } else { 2.25 * x * x };
        let q = AdaptiveSimpson::default();
        let v = q.integrate_checked(f, -1.0 / 3.0, 2.0 / 3.0).unwrap();
        let exact = 9.0 / 3.0 / 27.0 + 2.25 / 3.0 * 8.0 / 27.0;
        assert!((v - exact).abs() < 1e-12);
    }

    #[test]
    fn sqrt_singularity_reports_depth_cap() {
        let q = AdaptiveSimpson {
            abs_tol: 1e-300,
            max_depth: 8,
        };
        let r = q.integrate(libm::sqrt, 0.0, 1.0);
        assert!(!r.converged);
        assert!(matches!(
            q.integrate_checked(libm::sqrt, 0.0, 1.0),
            Err(Error::Quadrature { .. })
        ));
    }

    #[test]
    fn nan_integrand_is_not_converged() {
        let r =
            AdaptiveSimpson::default().integrate(|x| if x > 0.5 { f64::NAN } else { x }, 0.0, 1.0);
        assert!(!r.converged);
    }
}
