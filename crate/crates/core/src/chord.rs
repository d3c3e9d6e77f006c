// Copyright 2026 the Archimedes Authors
// SPDX-License-Identifier: Apache-2.0

//! Tangent-parallel chords and the areas they cut off.
//!
//! For a point `P` with convex-side normal `N` and a height `h > 0`, the
//! chord `AB` is the intersection of the curve with the line
//! `{Q : <Q - P, N> = h}`. Its endpoints are found by marching outward from
//! `P` along the parameter (doubling the step) until the height function
//! `psi(t) = <X(t) - P, N> - h` changes sign, then polishing with Brent's
//! method. On closed curves the march can overshoot the far side of the
//! oval; a decrease of `psi` is detected and the peak is located by golden
//! section before bracketing.

use alloc::vec::Vec;
use core::cell::Cell;

use crate::curve::{ChartFunction, Curve, CurvePoint};
use crate::numeric::{brent, golden_section_max, AdaptiveSimpson, RootOptions};
use crate::{Error, Result, Vec2};

/// Relative quadrature tolerance for section areas, scaled by the
/// rectangle `h L`.
pub const AREA_REL_TOL: f64 = 1e-11;

/// Heights below `HEIGHT_FLOOR / kappa(P)` are not resolved by root finding.
pub const HEIGHT_FLOOR: f64 = 1e-12;

/// A tangent-parallel chord at normal height `h` and everything measured
/// from it.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ChordSection {
    pub point: CurvePoint,
    pub height: f64,
    /// Endpoint on the decreasing-parameter side of `P`.
    pub a: Vec2,
    /// Endpoint on the increasing-parameter side of `P`.
    pub b: Vec2,
    pub param_a: f64,
    pub param_b: f64,
    /// `|AB|`.
    pub length: f64,
    /// For graphs: where the vertical through `P` meets `AB`.
    pub foot: Option<Vec2>,
    /// For graphs: `|PV| = h W(x)`.
    pub pv: Option<f64>,
    /// Area between the arc `AB` and the chord.
    pub area: f64,
    /// `h L`.
    pub rectangle: f64,
    /// `|ABP| = h L / 2`.
    pub triangle: f64,
}

impl ChordSection {
    /// `S / |ABP|`; exactly `4/3` on parabolas.
    pub fn archimedes_ratio(&self) -> f64 {
        self.area / self.triangle
    }
}

/// Largest usable height at a point.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct HRange {
    pub point: CurvePoint,
    pub h_max: f64,
}

/// Smallest height resolvable by root finding at `point`.
pub fn height_floor(curve: &Curve, point: &CurvePoint) -> f64 {
    HEIGHT_FLOOR / curve.curvature_at(point).abs()
}

struct Side {
    inside: f64,
    inside_val: f64,
    outside: f64,
    outside_val: f64,
}

fn bracket_side(curve: &Curve, p: &CurvePoint, h: f64, dir: f64) -> Result<Side> {
    let t0 = p.param;
    let psi = |t: f64| (curve.position(t) - p.location).dot(p.normal) - h;
    let limit = match curve.period() {
        Some(period) => t0 + dir * period,
        None if dir > 0.0 => curve.usable_domain().hi,
        None => curve.usable_domain().lo,
    };
    let span = (limit - t0).abs();
    let kappa = curve.curvature_at(p).abs();
    let speed = curve.velocity(t0).hypot();
    let mut step = 0.5 * libm::sqrt(2.0 * h / kappa) / speed;
    if !(step > 0.0 && step.is_finite()) {
        step = 1e-3 * span;
    }
    step = step.min(0.25 * span);
    let (mut prev, mut prev_val) = (t0, -h);
    let mut before_prev = t0;
    for _ in 0..2100 {
        let mut t = t0 + dir * step;
        let at_limit = (t - limit) * dir >= 0.0;
        if at_limit {
            t = limit;
        }
        let val = psi(t);
        if !val.is_finite() {
            return Err(Error::HeightOutOfRange { height: h });
        }
        if val >= 0.0 {
            return Ok(Side {
                inside: prev,
                inside_val: prev_val,
                outside: t,
                outside_val: val,
            });
        }
        if val < prev_val {
            // passed the far side of the curve: psi is unimodal here
            let (t_max, v_max) = golden_section_max(psi, before_prev, t);
            if v_max >= 0.0 {
                return Ok(Side {
                    inside: before_prev,
                    inside_val: psi(before_prev),
                    outside: t_max,
                    outside_val: v_max,
                });
            }
            return Err(Error::HeightOutOfRange { height: h });
        }
        if at_limit {
            return Err(Error::HeightOutOfRange { height: h });
        }
        before_prev = prev;
        prev = t;
        prev_val = val;
        step *= 2.0;
    }
    Err(Error::NoConvergence {
        what: "chord bracketing",
    })
}

fn check_height(curve: &Curve, p: &CurvePoint, h: f64) -> Result<()> {
    if !(h > 0.0 && h.is_finite()) {
        return Err(Error::InvalidParameter {
            name: "h",
            reason: "height must be positive and finite",
        });
    }
    let floor = height_floor(curve, p);
    if h < floor {
        return Err(Error::HeightBelowFloor { height: h, floor });
    }
    Ok(())
}

/// Parameters `(t_A, t_B)` of the chord endpoints, `t_A < t_P < t_B`.
pub fn chord_params(curve: &Curve, p: &CurvePoint, h: f64) -> Result<(f64, f64)> {
    check_height(curve, p, h)?;
    let psi = |t: f64| (curve.position(t) - p.location).dot(p.normal) - h;
    let opts = RootOptions {
        f_tol: 1e-13 * h,
        ..Default::default()
    };
    let fwd = bracket_side(curve, p, h, 1.0)?;
    let back = bracket_side(curve, p, h, -1.0)?;
    let t_b = brent(
        psi,
        fwd.inside,
        fwd.outside,
        fwd.inside_val,
        fwd.outside_val,
        opts,
    )?;
    let t_a = brent(
        psi,
        back.outside,
        back.inside,
        back.outside_val,
        back.inside_val,
        opts,
    )?;
    Ok((t_a, t_b))
}

/// Whether the tangent-parallel chord at height `h` exists inside the
/// curve's domain.
pub fn chord_exists(curve: &Curve, p: &CurvePoint, h: f64) -> bool {
    check_height(curve, p, h).is_ok()
        && bracket_side(curve, p, h, 1.0).is_ok()
        && bracket_side(curve, p, h, -1.0).is_ok()
}

/// Chord length `L_P(h)` without the area computation.
pub fn chord_length(curve: &Curve, p: &CurvePoint, h: f64) -> Result<f64> {
    let (t_a, t_b) = chord_params(curve, p, h)?;
    Ok(curve.position(t_a).distance(curve.position(t_b)))
}

fn assemble(curve: &Curve, p: &CurvePoint, h: f64, t_a: f64, t_b: f64) -> Result<ChordSection> {
    let a = curve.position(t_a);
    let b = curve.position(t_b);
    let length = a.distance(b);
    let rectangle = h * length;
    let mut chord = ChordSection {
        point: *p,
        height: h,
        a,
        b,
        param_a: t_a,
        param_b: t_b,
        length,
        foot: None,
        pv: None,
        area: 0.0,
        rectangle,
        triangle: 0.5 * rectangle,
    };
    if curve.as_graph().is_some() {
        let (v, pv) = foot_point(curve, &chord)?;
        chord.foot = Some(v);
        chord.pv = Some(pv);
    }
    chord.area = section_area(curve, &chord)?;
    Ok(chord)
}

/// The chord at normal height `h` above `p`, with all derived quantities.
pub fn chord_at_height(curve: &Curve, p: &CurvePoint, h: f64) -> Result<ChordSection> {
    let (t_a, t_b) = chord_params(curve, p, h)?;
    assemble(curve, p, h, t_a, t_b)
}

/// The chord joining the curve points at `t_a < t_b`, measured from its
/// tangent-parallel point.
pub fn chord_between(curve: &Curve, t_a: f64, t_b: f64) -> Result<ChordSection> {
    let p = tangent_parallel_point(curve, t_a, t_b)?;
    let a = curve.position(t_a);
    let b = curve.position(t_b);
    let h = (b - a).cross(p.location - a).abs() / a.distance(b);
    assemble(curve, &p, h, t_a, t_b)
}

/// Area between the arc `AB` and the chord.
///
/// Graphs integrate `line(x) - f(x)` over `[x_A, x_B]`; parametric curves
/// use the line integral `1/2 ∮ (X - M) × dX` around arc and chord, where
/// the chord itself contributes nothing because `M` is its midpoint.
pub fn section_area(curve: &Curve, chord: &ChordSection) -> Result<f64> {
    let scale = chord.rectangle.max(f64::MIN_POSITIVE);
    let quad = AdaptiveSimpson::new(AREA_REL_TOL * scale);
    let area = match curve {
        Curve::Graph(g) => {
            let (a, b) = (chord.a, chord.b);
            let slope = (b.y - a.y) / (b.x - a.x);
            quad.integrate_checked(|x| a.y + slope * (x - a.x) - g.value(x), a.x, b.x)?
        }
        Curve::Parametric(_) => {
            let m = chord.a.midpoint(chord.b);
            let v = quad.integrate_checked(
                |t| 0.5 * (curve.position(t) - m).cross(curve.velocity(t)),
                chord.param_a,
                chord.param_b,
            )?;
            v.abs()
        }
    };
    Ok(area)
}

/// The point `V` where the vertical through `P` meets `AB`, and `|PV|`.
///
/// `|PV|` is reported as `h W(x)`; the geometric `V` is returned alongside
/// so callers can cross-check.
pub fn foot_point(curve: &Curve, chord: &ChordSection) -> Result<(Vec2, f64)> {
    let g = curve.as_graph().ok_or(Error::NotAGraph)?;
    let x = chord.point.location.x;
    let (a, b) = (chord.a, chord.b);
    let y = a.y + (b.y - a.y) * (x - a.x) / (b.x - a.x);
    Ok((Vec2::new(x, y), chord.height * g.width_factor(x)))
}

/// Supremum of heights with an existing chord, by bisection on existence
/// to relative accuracy `1e-9`. The returned value itself admits a chord.
pub fn h_max(curve: &Curve, p: &CurvePoint) -> Result<HRange> {
    let floor = height_floor(curve, p);
    let kappa = curve.curvature_at(p).abs();
    let guess = 1.0 / kappa;
    let (mut lo, mut hi);
    if chord_exists(curve, p, guess) {
        lo = guess;
        hi = 2.0 * guess;
        let mut n = 0;
        while chord_exists(curve, p, hi) {
            lo = hi;
            hi *= 2.0;
            n += 1;
            if n > 1000 || !hi.is_finite() {
                return Err(Error::NoConvergence {
                    what: "h_max expansion",
                });
            }
        }
    } else {
        hi = guess;
        lo = 0.5 * guess;
        while !chord_exists(curve, p, lo) {
            hi = lo;
            lo *= 0.5;
            if lo < floor {
                return Err(Error::HeightOutOfRange { height: lo });
            }
        }
    }
    while hi - lo > 1e-10 * hi {
        let mid = 0.5 * (lo + hi);
        if chord_exists(curve, p, mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(HRange {
        point: *p,
        h_max: lo,
    })
}

/// The point of the arc from `t_a` to `t_b` whose tangent is parallel to
/// the chord, for `t_a < t_b` (less than one period apart on loops).
pub fn tangent_parallel_point(curve: &Curve, t_a: f64, t_b: f64) -> Result<CurvePoint> {
    if !(t_a < t_b) {
        return Err(Error::InvalidParameter {
            name: "t_a, t_b",
            reason: "need t_a < t_b",
        });
    }
    if let Some(period) = curve.period() {
        if t_b - t_a >= period {
            return Err(Error::InvalidParameter {
                name: "t_a, t_b",
                reason: "arc must be shorter than one period",
            });
        }
    }
    let d = curve.position(t_b) - curve.position(t_a);
    if !(d.hypot() > 0.0) {
        return Err(Error::InvalidParameter {
            name: "t_a, t_b",
            reason: "endpoints coincide",
        });
    }
    let phi = |t: f64| d.cross(curve.velocity(t));
    const N: usize = 32;
    let ts: Vec<f64> = (0..=N)
        .map(|i| t_a + (t_b - t_a) * i as f64 / N as f64)
        .collect();
    let vals: Vec<f64> = ts.iter().map(|&t| phi(t)).collect();
    let mut changes = 0;
    let mut cell = 0;
    for i in 0..N {
        if vals[i] == 0.0 && i > 0 {
            continue;
        }
        let next = (i + 1..=N).find(|&j| vals[j] != 0.0 || j == N).unwrap_or(N);
        if vals[i].signum() != vals[next].signum() && vals[next] != 0.0 {
            changes += 1;
            cell = i;
        }
    }
    if changes != 1 {
        return Err(Error::NotBracketed);
    }
    let (a, b) = (ts[cell], ts[cell + 1]);
    let t = brent(
        phi,
        a,
        b,
        vals[cell],
        vals[cell + 1],
        RootOptions::default(),
    )?;
    curve.point(t)
}

/// `g(x)`: abscissa of the tangent-parallel point of the chord from the
/// chart origin to `(x, f(x))`, solving `x f'(g) = f(x)` on `(0, x)`.
pub fn tangent_parallel_abscissa<C: ChartFunction + ?Sized>(chart: &C, x: f64) -> Result<f64> {
    if x == 0.0 || !x.is_finite() {
        return Err(Error::InvalidParameter {
            name: "x",
            reason: "abscissa must be nonzero",
        });
    }
    let fx = chart.value(x)?;
    let phi = |g: f64| x * chart.slope(g).unwrap_or(f64::NAN) - fx;
    let (a, b) = if x > 0.0 { (0.0, x) } else { (x, 0.0) };
    brent(phi, a, b, phi(a), phi(b), RootOptions::default())
}

/// Distance from the tangent-parallel point `(g, f(g))` to the chord from
/// the chart origin to `(x, f(x))`. Orientation is taken from the cross
/// product, so both signs of `x` give a positive distance.
pub fn chord_distance<C: ChartFunction + ?Sized>(chart: &C, x: f64) -> Result<f64> {
    let g = tangent_parallel_abscissa(chart, x)?;
    let b = Vec2::new(x, chart.value(x)?);
    let p = Vec2::new(g, chart.value(g)?);
    Ok(b.cross(p).abs() / b.hypot())
}

/// `S_P(h)` as the integral of chord lengths over heights `0..h`.
///
/// Integrates `2 s L(s^2)` over `s` in `[0, sqrt(h)]`, which removes the
/// square-root behaviour of `L` at small heights. Heights below the root
/// finding floor use `L(y) ≈ 2 sqrt(2 y / kappa)`.
pub fn section_area_by_layers(curve: &Curve, p: &CurvePoint, h: f64) -> Result<f64> {
    let top = chord_length(curve, p, h)?;
    let floor = height_floor(curve, p);
    let kappa = curve.curvature_at(p).abs();
    let failure: Cell<Option<Error>> = Cell::new(None);
    let integrand = |s: f64| {
        let y = s * s;
        let len = if y <= floor {
            2.0 * libm::sqrt(2.0 * y / kappa)
        } else {
            match chord_length(curve, p, y) {
                Ok(l) => l,
                Err(e) => {
                    failure.set(Some(e));
                    f64::NAN
                }
            }
        };
        2.0 * s * len
    };
    let quad = AdaptiveSimpson::new(AREA_REL_TOL * h * top);
    let r = quad.integrate(integrand, 0.0, libm::sqrt(h));
    if let Some(e) = failure.take() {
        return Err(e);
    }
    if !r.converged {
        return Err(Error::Quadrature {
            estimate: r.value,
            error: r.error,
        });
    }
    Ok(r.value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::{make_ellipse, make_example10, make_family_curve, make_quadratic, Interval};
    use core::f64::consts::{FRAC_PI_2, PI, SQRT_2};

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    fn south_pole() -> (Curve, CurvePoint) {
        let c = make_ellipse(1.0, 1.0).unwrap();
        let p = c.point(1.5 * PI).unwrap();
        (c, p)
    }

    #[test]
    fn parabola_vertex_chord() {
        let c = make_quadratic(1.0, 0.0, 0.0).unwrap();
        let p = c.point(0.0).unwrap();
        let s = chord_at_height(&c, &p, 1.0).unwrap();
        assert!(close(s.a.x, -1.0, 1e-13) && close(s.a.y, 1.0, 1e-13));
        assert!(close(s.b.x, 1.0, 1e-13) && close(s.b.y, 1.0, 1e-13));
        assert!(close(s.length, 2.0, 1e-13));
        assert!(close(s.area, 4.0 / 3.0, 1e-13));
        assert_eq!(s.rectangle, s.height * s.length);
        assert_eq!(s.triangle, 0.5 * s.rectangle);
        let v = s.foot.unwrap();
        assert!(close(v.x, 0.0, 1e-15) && close(v.y, 1.0, 1e-13));
        assert_eq!(s.pv, Some(1.0));
    }

    #[test]
    fn circle_diameter_chord() {
        let (c, p) = south_pole();
        let s = chord_at_height(&c, &p, 1.0).unwrap();
        assert!(close(s.length, 2.0, 1e-12));
        assert!(close(s.area, FRAC_PI_2, 1e-10));
        assert!(s.foot.is_none());
        assert_eq!(foot_point(&c, &s), Err(Error::NotAGraph));
    }

    #[test]
    fn example10_chord_at_origin() {
        let c = make_example10().unwrap();
        let p = c.point(0.0).unwrap();
        for &h in &[0.25, 1.0, 4.0] {
            let s = chord_at_height(&c, &p, h).unwrap();
            assert!(close(s.length, libm::sqrt(h), 1e-12));
            assert!(close(s.area, 2.0 / 3.0 * s.rectangle, 1e-11));
        }
    }

    #[test]
    fn endpoints_satisfy_chord_line() {
        let e = make_ellipse(2.0, 1.0).unwrap();
        let p = e.point(0.7).unwrap();
        let s = chord_at_height(&e, &p, 0.3).unwrap();
        for q in [s.a, s.b] {
            assert!(close((q - p.location).dot(p.normal), 0.3, 1e-12));
            assert!(close((q.x / 2.0) * (q.x / 2.0) + q.y * q.y, 1.0, 1e-12));
        }
        assert!(s.param_a < p.param && p.param < s.param_b);
        assert!(s.triangle < s.area && s.area < s.rectangle);
    }

    #[test]
    fn foot_point_length_is_h_times_w() {
        let c = make_quadratic(1.0, 0.0, 0.0).unwrap();
        let p = c.point(1.0).unwrap();
        for &h in &[0.01, 0.2, 0.4] {
            let s = chord_at_height(&c, &p, h).unwrap();
            let pv = s.pv.unwrap();
            assert!(close(pv, h * libm::sqrt(5.0), 1e-15));
            assert!(close(s.foot.unwrap().distance(p.location), pv, 1e-12));
        }
        let fam = make_family_curve(1.0, 0.5).unwrap();
        let s = chord_at_height(&fam, &fam.point(0.0).unwrap(), 0.05).unwrap();
        assert_eq!(s.pv, Some(0.05));
    }

    #[test]
    fn height_validation() {
        let c = make_quadratic(1.0, 0.0, 0.0).unwrap();
        let p = c.point(0.0).unwrap();
        assert!(matches!(
            chord_at_height(&c, &p, 0.0),
            Err(Error::InvalidParameter { .. })
        ));
        assert!(matches!(
            chord_at_height(&c, &p, -1.0),
            Err(Error::InvalidParameter { .. })
        ));
        assert!(matches!(
            chord_at_height(&c, &p, 1e-14),
            Err(Error::HeightBelowFloor { .. })
        ));
        assert!(matches!(
            chord_at_height(&c, &p, 16.5),
            Err(Error::HeightOutOfRange { .. })
        ));
        let (circle, south) = south_pole();
        assert!(matches!(
            chord_at_height(&circle, &south, 2.01),
            Err(Error::HeightOutOfRange { .. })
        ));
    }

    #[test]
    fn h_max_values() {
        let g = crate::curve::quadratic_graph(1.0, 0.0, 0.0)
            .unwrap()
            .with_domain(Interval::new(-2.0, 2.0).unwrap())
            .unwrap();
        let c: Curve = g.into();
        let usable = c.usable_domain();
        let r = h_max(&c, &c.point(0.0).unwrap()).unwrap();
        let edge = usable.hi * usable.hi;
        assert!(close(r.h_max, edge, 1e-9 * edge));
        assert!(close(r.h_max, 4.0, 2e-5));

        // geometric oracle: the nearer escaping endpoint bounds the height
        let p = c.point(1.0).unwrap();
        let r = h_max(&c, &p).unwrap();
        let psi = |x: f64| (Vec2::new(x, x * x) - p.location).dot(p.normal);
        let oracle = psi(usable.hi).min(psi(usable.lo));
        assert!(close(r.h_max, oracle, 1e-9 * oracle));
        assert!(close(oracle, 1.0 / libm::sqrt(5.0), 1e-5));
        assert!(chord_exists(&c, &p, r.h_max * (1.0 - 1e-9)));
        assert!(!chord_exists(&c, &p, r.h_max * (1.0 + 1e-8)));

        let (circle, south) = south_pole();
        let r = h_max(&circle, &south).unwrap();
        assert!(close(r.h_max, 2.0, 1e-9));
    }

    #[test]
    fn chord_existence_is_monotone() {
        let c = make_quadratic(1.0, 0.0, 0.0).unwrap();
        let p = c.point(1.0).unwrap();
        let hm = h_max(&c, &p).unwrap().h_max;
        let flags: Vec<bool> = (1..40)
            .map(|i| chord_exists(&c, &p, hm * i as f64 / 20.0))
            .collect();
        let first_false = flags.iter().position(|f| !f).unwrap();
        assert!(flags[..first_false].iter().all(|f| *f));
        assert!(flags[first_false..].iter().all(|f| !*f));
    }

    #[test]
    fn tangent_parallel_on_parabola() {
        let c = make_quadratic(1.0, 0.0, 0.0).unwrap();
        let p = tangent_parallel_point(&c, 0.0, 2.0).unwrap();
        assert!(close(p.location.x, 1.0, 1e-14));
        assert!(close(p.location.y, 1.0, 1e-14));
        assert!(matches!(
            tangent_parallel_point(&c, 1.0, 1.0),
            Err(Error::InvalidParameter { .. })
        ));
    }

    #[test]
    fn tangent_parallel_on_circle_is_pole() {
        let (c, _) = south_pole();
        let p = tangent_parallel_point(&c, 1.5 * PI - 0.8, 1.5 * PI + 0.8).unwrap();
        assert!(close(p.location.x, 0.0, 1e-14));
        assert!(close(p.location.y, -1.0, 1e-14));
    }

    #[test]
    fn tangent_parallel_needs_a_single_turn() {
        // y = x^3 has slope 1 at both +-1/sqrt(3)
        let cubic =
            crate::curve::make_polynomial(&[0.0, 0.0, 0.0, 1.0], Interval::new(-2.0, 2.0).unwrap())
                .unwrap();
        assert_eq!(
            tangent_parallel_point(&cubic, -1.0, 1.0),
            Err(Error::NotBracketed)
        );
        // the long arc of a circle still has a single parallel tangent
        let (c, _) = south_pole();
        let p = tangent_parallel_point(&c, 0.0, 1.9 * PI).unwrap();
        assert!(close(p.param, 0.95 * PI, 1e-12));
    }

    #[test]
    fn family_g_matches_closed_form() {
        let fam = make_family_curve(1.0, 0.5).unwrap();
        let g = fam.as_graph().unwrap();
        let root = tangent_parallel_abscissa(g, 0.75).unwrap();
        assert!(close(root, 0.4375, 1e-14));
        let p = tangent_parallel_point(&fam, 0.0, 0.75).unwrap();
        assert!(close(p.location.x, 0.4375, 1e-13));
    }

    #[test]
    fn chord_distance_on_parabola() {
        let g = crate::curve::quadratic_graph(1.0, 0.0, 0.0).unwrap();
        let h = chord_distance(&g, 2.0).unwrap();
        assert!(close(h, 1.0 / libm::sqrt(5.0), 1e-15));
        let h_neg = chord_distance(&g, -2.0).unwrap();
        assert!(close(h_neg, h, 1e-15));
        assert!(matches!(
            chord_distance(&g, 0.0),
            Err(Error::InvalidParameter { .. })
        ));

        // round trip: the chord at that height above (1, 1) ends at (0,0) and (2,4)
        let c: Curve = g.into();
        let s = chord_at_height(&c, &c.point(1.0).unwrap(), h).unwrap();
        assert!(s.a.distance(Vec2::new(0.0, 0.0)) < 1e-9);
        assert!(s.b.distance(Vec2::new(2.0, 4.0)) < 1e-9);
    }

    #[test]
    fn layered_area_matches_direct() {
        let c = make_quadratic(1.0, 0.0, 0.0).unwrap();
        let v = section_area_by_layers(&c, &c.point(0.0).unwrap(), 1.0).unwrap();
        assert!(close(v, 4.0 / 3.0, 2e-8));
        let (circle, south) = south_pole();
        let v = section_area_by_layers(&circle, &south, 1.0).unwrap();
        assert!(close(v, FRAC_PI_2, 2e-8));
        let e10 = make_example10().unwrap();
        let v = section_area_by_layers(&e10, &e10.point(0.0).unwrap(), 1.0).unwrap();
        assert!(close(v, 2.0 / 3.0, 2e-8));
    }

    #[test]
    fn parametric_and_graph_areas_agree() {
        // the same parabola as a graph and as a rotated parametric curve
        let c = make_quadratic(1.0, 0.0, 0.0).unwrap();
        let rot = c
            .transformed(crate::Affine2::rigid(0.0, Vec2::ZERO))
            .unwrap();
        let s1 = chord_at_height(&c, &c.point(0.5).unwrap(), 0.3).unwrap();
        let s2 = chord_at_height(&rot, &rot.point(0.5).unwrap(), 0.3).unwrap();
        assert!(close(s1.area, s2.area, 1e-12));
        assert!(close(s1.length, s2.length, 1e-12));
    }

    #[test]
    fn length_over_sqrt_height_limit() {
        // L / sqrt(h) -> 2 sqrt(2) / sqrt(kappa)
        let (circle, south) = south_pole();
        let l = chord_length(&circle, &south, 1e-6).unwrap();
        assert!(close(l / 1e-3, 2.0 * SQRT_2, 1e-2));
    }
}
