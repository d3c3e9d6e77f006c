// Copyright 2026 the Archimedes Authors
// SPDX-License-Identifier: Apache-2.0

//! Closed-form parabola families and the identities they satisfy.
//!
//! A chart `f` with `f(0) = f'(0) = 0` whose tangent-parallel chords all
//! cut off `4/3` of their triangle has `g(x)` (the abscissa of the
//! tangent-parallel point) on one of three branches: `x/2`, `x/4` or
//! `(cx + 1 - sqrt(1 - 2cx)) / (4c)`. Each branch comes with a linear
//! second-order ODE for `f`; the third gives the family
//! `f(x) = b((1 - cx) - sqrt(1 - 2cx))`, which is a rotated parabola.

use alloc::string::String;
use alloc::vec::Vec;

use crate::chord::tangent_parallel_abscissa;
use crate::conditions::{check_condition_c, check_condition_e, ConditionReport, Sampling, Verdict};
use crate::curve::{family_domain, make_family_curve, ChartFunction, Curve, Interval};
use crate::numeric::AdaptiveSimpson;
use crate::{Error, Result};

/// Parameters of `f(x) = b((1 - cx) - sqrt(1 - 2cx))`, `b > 0`, `c != 0`.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct FamilyParams {
    pub b: f64,
    pub c: f64,
}

impl FamilyParams {
    pub fn new(b: f64, c: f64) -> Result<Self> {
        if !(b > 0.0 && b.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "b",
                reason: "must be positive and finite",
            });
        }
        if !(c != 0.0 && c.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "c",
                reason: "must be nonzero and finite",
            });
        }
        Ok(FamilyParams { b, c })
    }

    /// Default graph window; the square root is real up to `1/(2c)`.
    pub fn domain(&self) -> Interval {
        family_domain(self.c)
    }

    fn root(&self, x: f64) -> Result<f64> {
        let r = 1.0 - 2.0 * self.c * x;
        if r > 0.0 {
            Ok(libm::sqrt(r))
        } else {
            Err(Error::OutsideDomain { param: x })
        }
    }

    /// `f`, `f'`, `f''` at `x`, in cancellation-free form.
    pub fn jet(&self, x: f64) -> Result<Jet> {
        let (b, c) = (self.b, self.c);
        let s = self.root(x)?;
        Ok(Jet {
            value: b * c * c * x * x / ((1.0 - c * x) + s),
            first: 2.0 * b * c * c * x / (s * (1.0 + s)),
            second: b * c * c / (s * s * s),
        })
    }

    pub fn curve(&self) -> Result<Curve> {
        make_family_curve(self.b, self.c)
    }
}

/// `(f, f', f'')` at a point.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Jet {
    pub value: f64,
    pub first: f64,
    pub second: f64,
}

/// The three possible `g` branches, and with them the three ODEs.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Branch {
    /// `g = x/2`; ODE `x^2 f'' - 2x f' + 2f = 0`, solved by `a x^2 + b x`.
    Half,
    /// `g = x/4`; ODE `2x^2 f'' - x f' + f = 0`, solved by `a x + b sqrt|x|`.
    Quarter,
    /// `g = (cx + 1 - sqrt(1 - 2cx)) / (4c)`; ODE
    /// `(1 - 2cx)(sqrt(1 - 2cx) - (1 - cx)) f'' + c^2 x f' - c^2 f = 0`,
    /// solved by `a x + b (1 - sqrt(1 - 2cx))`.
    Family(f64),
}

/// Value of a `g` branch at `x`.
pub fn g_branch(branch: Branch, x: f64) -> Result<f64> {
    match branch {
        Branch::Half => Ok(0.5 * x),
        Branch::Quarter => Ok(0.25 * x),
        Branch::Family(c) => {
            if !(c != 0.0 && c.is_finite()) {
                return Err(Error::InvalidParameter {
                    name: "c",
                    reason: "must be nonzero and finite",
                });
            }
            let r = 1.0 - 2.0 * c * x;
            if !(r > 0.0) {
                return Err(Error::OutsideDomain { param: x });
            }
            // 1 - s = 2cx / (1 + s)
            let s = libm::sqrt(r);
            Ok(0.25 * x * (1.0 + 2.0 / (1.0 + s)))
        }
    }
}

fn normalized(terms: &[f64]) -> f64 {
    let sum: f64 = terms.iter().sum();
    let scale = terms.iter().fold(0.0f64, |m, t| m.max(t.abs()));
    if scale == 0.0 {
        0.0
    } else {
        sum / scale
    }
}

/// Left-hand side of the branch ODE at `x`, divided by its largest term.
pub fn ode_residual(branch: Branch, jet: Jet, x: f64) -> Result<f64> {
    let Jet {
        value: f,
        first: df,
        second: ddf,
    } = jet;
    let terms = match branch {
        Branch::Half => [x * x * ddf, -2.0 * x * df, 2.0 * f],
        Branch::Quarter => [2.0 * x * x * ddf, -x * df, f],
        Branch::Family(c) => {
            let r = 1.0 - 2.0 * c * x;
            if !(r > 0.0) {
                return Err(Error::OutsideDomain { param: x });
            }
            let s = libm::sqrt(r);
            // sqrt(1 - 2cx) - (1 - cx) = -c^2 x^2 / ((1 - cx) + s)
            let gap = -c * c * x * x / ((1.0 - c * x) + s);
            [r * gap * ddf, c * c * x * df, -c * c * f]
        }
    };
    Ok(normalized(&terms))
}

/// Left side, right side and scale-normalized difference of an identity.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct IdentityResidual {
    pub lhs: f64,
    pub rhs: f64,
    pub normalized: f64,
}

impl IdentityResidual {
    fn new(lhs: f64, rhs: f64, terms: &[f64]) -> Self {
        let scale = terms
            .iter()
            .chain([lhs, rhs].iter())
            .fold(0.0f64, |m, t| m.max(t.abs()));
        let normalized = if scale == 0.0 {
            0.0
        } else {
            (lhs - rhs).abs() / scale
        };
        IdentityResidual {
            lhs,
            rhs,
            normalized,
        }
    }
}

/// The chord identities of a Condition-C chart at abscissa `x`.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ChordIdentities {
    pub x: f64,
    /// Root-solved `g(x)`.
    pub g: f64,
    /// `x^3 f''(g) = 8 (f(x) g - x f(g))`.
    pub curvature: IdentityResidual,
    /// `x f(x) = (4/3)(f(x) g - x f(g)) + 2 ∫_0^x f`.
    pub area: IdentityResidual,
    /// `f(g) = g f'(x) - (3/4)(x f'(x) - f(x))`.
    pub tangent: IdentityResidual,
}

impl ChordIdentities {
    pub fn max_normalized(&self) -> f64 {
        self.curvature
            .normalized
            .max(self.area.normalized)
            .max(self.tangent.normalized)
    }
}

/// Evaluate the chord identities on an anchored chart.
pub fn chord_identities<C: ChartFunction + ?Sized>(chart: &C, x: f64) -> Result<ChordIdentities> {
    chart.ensure_anchored()?;
    let g = tangent_parallel_abscissa(chart, x)?;
    let fx = chart.value(x)?;
    let dfx = chart.slope(x)?;
    let fg = chart.value(g)?;
    let ddfg = chart.second_derivative(g)?;

    let curvature = IdentityResidual::new(
        x * x * x * ddfg,
        8.0 * (fx * g - x * fg),
        &[8.0 * fx * g, 8.0 * x * fg],
    );

    let scale = (x * fx).abs().max(f64::MIN_POSITIVE);
    let quad = AdaptiveSimpson::new(1e-14 * scale);
    let integral = quad.integrate_checked(|t| chart.value(t).unwrap_or(f64::NAN), 0.0, x)?;
    let area = IdentityResidual::new(
        x * fx,
        4.0 / 3.0 * (fx * g - x * fg) + 2.0 * integral,
        &[4.0 / 3.0 * fx * g, 4.0 / 3.0 * x * fg, 2.0 * integral],
    );

    let tangent = IdentityResidual::new(
        fg,
        g * dfx - 0.75 * (x * dfx - fx),
        &[g * dfx, 0.75 * x * dfx, 0.75 * fx],
    );
    Ok(ChordIdentities {
        x,
        g,
        curvature,
        area,
        tangent,
    })
}

/// Residual of `8 g g' - 6 x g' + x = 0`, with `g` root-solved and `g'` by
/// central difference at step `1e-6 |x|`.
pub fn g_derivative_residual<C: ChartFunction + ?Sized>(chart: &C, x: f64) -> Result<f64> {
    let step = 1e-6 * x.abs();
    let gp = (tangent_parallel_abscissa(chart, x + step)?
        - tangent_parallel_abscissa(chart, x - step)?)
        / (2.0 * step);
    let g = tangent_parallel_abscissa(chart, x)?;
    Ok(normalized(&[8.0 * g * gp, -6.0 * x * gp, x]).abs())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum ConicClass {
    Ellipse,
    Parabola,
    Hyperbola,
    Degenerate,
}

/// `A x^2 + B xy + C y^2 + D x + E y + F = 0`.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ConicCoefficients {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
    pub e: f64,
    pub f: f64,
    /// `B^2 - 4AC`.
    pub discriminant: f64,
    /// Determinant of the 3x3 symmetric matrix of the conic.
    pub determinant: f64,
    pub class: ConicClass,
}

impl ConicCoefficients {
    pub fn new(a: f64, b: f64, c: f64, d: f64, e: f64, f: f64) -> Self {
        let discriminant = b * b - 4.0 * a * c;
        let (hb, hd, he) = (0.5 * b, 0.5 * d, 0.5 * e);
        let determinant = a * (c * f - he * he) - hb * (hb * f - he * hd) + hd * (hb * he - c * hd);
        let max_coef = [a, b, c, d, e, f]
            .iter()
            .fold(0.0f64, |m, v| m.max(v.abs()));
        let max_quad = (a * a).max(b * b).max(c * c);
        let class = if !(determinant.abs() > 1e-12 * max_coef * max_coef * max_coef) {
            ConicClass::Degenerate
        } else if discriminant.abs() <= 1e-12 * max_quad {
            ConicClass::Parabola
        } else if discriminant < 0.0 {
            ConicClass::Ellipse
        } else {
            ConicClass::Hyperbola
        };
        ConicCoefficients {
            a,
            b,
            c,
            d,
            e,
            f,
            discriminant,
            determinant,
            class,
        }
    }

    /// Left-hand side at `(x, y)` divided by its largest monomial.
    pub fn normalized_residual(&self, x: f64, y: f64) -> f64 {
        normalized(&[
            self.a * x * x,
            self.b * x * y,
            self.c * y * y,
            self.d * x,
            self.e * y,
            self.f,
        ])
    }
}

/// The implicit equation `b^2 c^2 x^2 + 2bc xy + y^2 - 2b y = 0` of the
/// family graph.
pub fn implicit_conic(params: FamilyParams) -> ConicCoefficients {
    let (b, c) = (params.b, params.c);
    ConicCoefficients::new(b * b * c * c, 2.0 * b * c, 1.0, 0.0, -2.0 * b, 0.0)
}

/// Abscissae for family checks: `n` points spread over the middle 90% of
/// the domain, skipping the origin.
pub fn family_abscissae(params: FamilyParams, n: usize) -> Vec<f64> {
    let d = params.domain();
    let inner = Interval {
        lo: d.lo + 0.05 * d.width(),
        hi: d.hi - 0.05 * d.width(),
    };
    (0..n)
        .map(|i| inner.lerp((i + 1) as f64 / (n + 1) as f64))
        .filter(|x| x.abs() > 1e-6 * d.width())
        .collect()
}

/// Bundle of every closed-form check on one family member.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct FamilyReport {
    pub params: FamilyParams,
    pub conic: ConicCoefficients,
    pub abscissae: Vec<f64>,
    pub implicit_max: f64,
    pub ode_max: f64,
    pub curvature_identity_max: f64,
    pub area_identity_max: f64,
    pub tangent_identity_max: f64,
    /// `max |g_root - g_closed|`.
    pub g_branch_max: f64,
    pub g_derivative_max: f64,
    pub condition_c: ConditionReport,
    pub condition_e: ConditionReport,
    pub passed: bool,
    /// Which checks failed, if any.
    pub failures: Vec<String>,
}

pub const RESIDUAL_TOL: f64 = 1e-10;
pub const IDENTITY_TOL: f64 = 1e-9;
pub const G_DERIVATIVE_TOL: f64 = 1e-8;

pub fn verify_family(params: FamilyParams, n_samples: usize) -> Result<FamilyReport> {
    let params = FamilyParams::new(params.b, params.c)?;
    let curve = params.curve()?;
    let graph = curve.as_graph().ok_or(Error::NotAGraph)?;
    let conic = implicit_conic(params);
    let xs = family_abscissae(params, n_samples);
    let (mut implicit_max, mut ode_max) = (0.0f64, 0.0f64);
    let (mut r_curv, mut r_area, mut r_tan) = (0.0f64, 0.0f64, 0.0f64);
    let (mut g_max, mut gp_max) = (0.0f64, 0.0f64);
    for &x in &xs {
        let jet = params.jet(x)?;
        implicit_max = implicit_max.max(conic.normalized_residual(x, jet.value).abs());
        ode_max = ode_max.max(ode_residual(Branch::Family(params.c), jet, x)?.abs());
        let ids = chord_identities(graph, x)?;
        r_curv = r_curv.max(ids.curvature.normalized);
        r_area = r_area.max(ids.area.normalized);
        r_tan = r_tan.max(ids.tangent.normalized);
        g_max = g_max.max((ids.g - g_branch(Branch::Family(params.c), x)?).abs());
        gp_max = gp_max.max(g_derivative_residual(graph, x)?);
    }
    let condition_c = check_condition_c(&curve, Sampling::default())?;
    let condition_e = check_condition_e(&curve, Sampling::default())?;

    let mut failures = Vec::new();
    let mut check = |ok: bool, what: &str| {
        if !ok {
            failures.push(String::from(what));
        }
    };
    check(conic.class == ConicClass::Parabola, "conic class");
    check(implicit_max <= RESIDUAL_TOL, "implicit equation");
    check(ode_max <= RESIDUAL_TOL, "branch ODE");
    check(r_curv <= IDENTITY_TOL, "curvature identity");
    check(r_area <= IDENTITY_TOL, "area identity");
    check(r_tan <= IDENTITY_TOL, "tangent identity");
    check(g_max <= IDENTITY_TOL, "g branch");
    check(gp_max <= G_DERIVATIVE_TOL, "g derivative identity");
    check(condition_c.verdict == Verdict::Satisfied, "condition C");
    Ok(FamilyReport {
        params,
        conic,
        abscissae: xs,
        implicit_max,
        ode_max,
        curvature_identity_max: r_curv,
        area_identity_max: r_area,
        tangent_identity_max: r_tan,
        g_branch_max: g_max,
        g_derivative_max: gp_max,
        condition_c,
        condition_e,
        passed: failures.is_empty(),
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::{local_chart, make_ellipse, quadratic_graph};

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn branch_values() {
        assert_eq!(g_branch(Branch::Half, 2.0), Ok(1.0));
        assert_eq!(g_branch(Branch::Quarter, 2.0), Ok(0.5));
        assert!(close(
            g_branch(Branch::Family(0.5), 0.75).unwrap(),
            0.4375,
            1e-15
        ));
        for &x in &[1e-3, 1e-6, -1e-9] {
            let r = g_branch(Branch::Family(0.5), x).unwrap() / x;
            assert!(close(r, 0.5, 2.0 * x.abs()));
        }
        assert_eq!(g_branch(Branch::Family(0.5), 0.0), Ok(0.0));
        assert!(matches!(
            g_branch(Branch::Family(0.5), 1.0),
            Err(Error::OutsideDomain { .. })
        ));
        assert!(matches!(
            g_branch(Branch::Family(0.0), 0.1),
            Err(Error::InvalidParameter { .. })
        ));
    }

    #[test]
    fn family_jet_values() {
        let p = FamilyParams::new(1.0, 0.5).unwrap();
        let j = p.jet(0.75).unwrap();
        assert!(close(j.value, 0.125, 1e-15));
        // f' = b c (1/s - 1) with s = 1/2
        assert!(close(j.first, 0.5, 1e-15));
        assert!(close(j.second, 2.0, 1e-14));
        assert!(close(p.jet(0.0).unwrap().second, 0.25, 1e-16));
    }

    #[test]
    fn ode_residuals_of_general_solutions() {
        let half = Jet {
            value: 1.3 * 1.3,
            first: 2.6,
            second: 2.0,
        };
        assert_eq!(ode_residual(Branch::Half, half, 1.3), Ok(0.0));
        let x: f64 = 0.7;
        let q = Jet {
            value: x + libm::sqrt(x),
            first: 1.0 + 0.5 / libm::sqrt(x),
            second: -0.25 / (x * libm::sqrt(x)),
        };
        assert!(ode_residual(Branch::Quarter, q, x).unwrap().abs() < 1e-15);
        let p = FamilyParams::new(1.0, 0.5).unwrap();
        let r = ode_residual(Branch::Family(0.5), p.jet(0.5).unwrap(), 0.5).unwrap();
        assert!(r.abs() < 1e-10);
    }

    #[test]
    fn hand_values_on_unit_parabola() {
        let g = quadratic_graph(1.0, 0.0, 0.0).unwrap();
        let ids = chord_identities(&g, 2.0).unwrap();
        assert!(close(ids.g, 1.0, 1e-15));
        assert!(close(ids.curvature.lhs, 16.0, 1e-13) && close(ids.curvature.rhs, 16.0, 1e-13));
        assert!(close(ids.area.lhs, 8.0, 1e-13) && close(ids.area.rhs, 8.0, 1e-12));
        assert!(close(ids.tangent.lhs, 1.0, 1e-15) && close(ids.tangent.rhs, 1.0, 1e-13));
    }

    #[test]
    fn identities_fail_off_parabolas() {
        let e = make_ellipse(2.0, 1.0).unwrap();
        let chart = local_chart(&e, &e.point(1.5 * core::f64::consts::PI).unwrap()).unwrap();
        let ids = chord_identities(&chart, 1.5).unwrap();
        assert!(ids.max_normalized() > 1e-4);
    }

    #[test]
    fn unanchored_chart_rejected() {
        let g = quadratic_graph(1.0, 1.0, 0.0).unwrap();
        assert_eq!(chord_identities(&g, 1.0), Err(Error::NotAnchored));
    }

    #[test]
    fn conic_of_family() {
        let c = implicit_conic(FamilyParams::new(1.0, 0.5).unwrap());
        assert_eq!(
            (c.a, c.b, c.c, c.d, c.e, c.f),
            (0.25, 1.0, 1.0, 0.0, -2.0, 0.0)
        );
        assert_eq!(c.discriminant, 0.0);
        assert!(close(c.determinant, -0.25, 1e-16));
        assert_eq!(c.class, ConicClass::Parabola);
        assert_eq!(
            ConicCoefficients::new(1.0, 0.0, 1.0, 0.0, 0.0, -1.0).class,
            ConicClass::Ellipse
        );
        assert_eq!(
            ConicCoefficients::new(1.0, 0.0, -1.0, 0.0, 0.0, -1.0).class,
            ConicClass::Hyperbola
        );
        assert_eq!(
            ConicCoefficients::new(1.0, 0.0, 0.0, 0.0, 0.0, 0.0).class,
            ConicClass::Degenerate
        );
    }

    #[test]
    fn family_verification_passes() {
        for (b, c) in [(1.0, 0.5), (2.0, -1.0)] {
            let r = verify_family(FamilyParams { b, c }, 20).unwrap();
            assert!(r.passed, "{b} {c}: {:?}", r.failures);
        }
        assert!(verify_family(FamilyParams { b: 1.0, c: 0.0 }, 5).is_err());
        assert!(verify_family(FamilyParams { b: -1.0, c: 1.0 }, 5).is_err());
    }
}
