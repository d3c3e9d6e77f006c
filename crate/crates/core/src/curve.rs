// Copyright 2026 the Archimedes Authors
// SPDX-License-Identifier: Apache-2.0

//! Strictly convex plane curves: graphs `y = f(x)` and parametric arcs or
//! ovals, with derivatives, curvature and tangent-aligned local charts.
//!
//! Every curve exposes a parametrization `t -> X(t)`. For a graph the
//! parameter is the abscissa, so `X(x) = (x, f(x))`.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::numeric::{brent, diff, RootOptions};
use crate::{Affine2, Error, Result, Vec2};

pub type ScalarFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;
pub type PathFn = Arc<dyn Fn(f64) -> Vec2 + Send + Sync>;

/// Fraction of the domain width kept clear of each open endpoint.
pub const DEFAULT_EDGE_MARGIN: f64 = 1e-6;

/// An interval of the real line. Curve domains treat it as open.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if !(lo < hi) {
            return Err(Error::InvalidParameter {
                name: "interval",
                reason: "lower end must be below the upper end",
            });
        }
        Ok(Interval { lo, hi })
    }

    #[inline]
    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    #[inline]
    pub fn mid(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }

    /// Open-interval membership.
    #[inline]
    pub fn contains(&self, x: f64) -> bool {
        self.lo < x && x < self.hi
    }

    /// The point a fraction `s` of the way from `lo` to `hi`.
    #[inline]
    pub fn lerp(&self, s: f64) -> f64 {
        self.lo + s * (self.hi - self.lo)
    }
}

/// The graph of a function `f` over an open interval, with upward normal.
#[derive(Clone)]
pub struct GraphCurve {
    domain: Interval,
    f: ScalarFn,
    df: Option<ScalarFn>,
    ddf: Option<ScalarFn>,
    label: String,
    kink: Option<f64>,
    edge_margin: f64,
}

impl fmt::Debug for GraphCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GraphCurve")
            .field("label", &self.label)
            .field("domain", &self.domain)
            .field("analytic_derivatives", &self.has_analytic_derivatives())
            .field("kink", &self.kink)
            .finish()
    }
}

impl GraphCurve {
    /// A graph over a finite open domain. Derivatives default to finite
    /// differences until supplied with [`with_derivatives`](Self::with_derivatives).
    pub fn new<F>(label: impl Into<String>, domain: Interval, f: F) -> Result<Self>
    where
        F: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        if !(domain.lo.is_finite() && domain.hi.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "domain",
                reason: "graph domains must be finite",
            });
        }
        Ok(GraphCurve {
            domain,
            f: Arc::new(f),
            df: None,
            ddf: None,
            label: label.into(),
            kink: None,
            edge_margin: DEFAULT_EDGE_MARGIN,
        })
    }

    pub fn with_derivatives<D1, D2>(mut self, df: D1, ddf: D2) -> Self
    where
        D1: Fn(f64) -> f64 + Send + Sync + 'static,
        D2: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        self.df = Some(Arc::new(df));
        self.ddf = Some(Arc::new(ddf));
        self
    }

    pub fn with_domain(mut self, domain: Interval) -> Result<Self> {
        if !(domain.lo.is_finite() && domain.hi.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "domain",
                reason: "graph domains must be finite",
            });
        }
        self.domain = domain;
        Ok(self)
    }

    /// Mark the abscissa where `f` fails to be three times differentiable.
    pub fn with_kink(mut self, x: f64) -> Self {
        self.kink = Some(x);
        self
    }

    pub fn with_edge_margin(mut self, fraction: f64) -> Result<Self> {
        if !(0.0..0.5).contains(&fraction) {
            return Err(Error::InvalidParameter {
                name: "edge_margin",
                reason: "must be in [0, 0.5)",
            });
        }
        self.edge_margin = fraction;
        Ok(self)
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn domain(&self) -> Interval {
        self.domain
    }

    pub fn kink(&self) -> Option<f64> {
        self.kink
    }

    /// The domain shrunk by the edge margin on both sides.
    pub fn usable_domain(&self) -> Interval {
        let m = self.edge_margin * self.domain.width();
        Interval {
            lo: self.domain.lo + m,
            hi: self.domain.hi - m,
        }
    }

    pub fn has_analytic_derivatives(&self) -> bool {
        self.df.is_some() && self.ddf.is_some()
    }

    #[inline]
    pub fn value(&self, x: f64) -> f64 {
        (self.f)(x)
    }

    pub fn slope(&self, x: f64) -> f64 {
        match &self.df {
            Some(df) => df(x),
            None => self.slope_fd(x),
        }
    }

    pub fn second_derivative(&self, x: f64) -> f64 {
        match &self.ddf {
            Some(ddf) => ddf(x),
            None => self.second_derivative_fd(x),
        }
    }

    pub fn slope_fd(&self, x: f64) -> f64 {
        diff::first_derivative(|t| (self.f)(t), x, self.domain.lo, self.domain.hi)
    }

    pub fn second_derivative_fd(&self, x: f64) -> f64 {
        diff::second_derivative(|t| (self.f)(t), x, self.domain.lo, self.domain.hi)
    }

    /// `W(x) = sqrt(1 + f'(x)^2)`, the secant of the tangent angle.
    pub fn width_factor(&self, x: f64) -> f64 {
        libm::hypot(1.0, self.slope(x))
    }
}

/// A parametrized arc or closed oval.
#[derive(Clone)]
pub struct ParametricCurve {
    params: Interval,
    closed: bool,
    position: PathFn,
    velocity: Option<PathFn>,
    acceleration: Option<PathFn>,
    label: String,
    non_c3: bool,
    edge_margin: f64,
}

impl fmt::Debug for ParametricCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ParametricCurve")
            .field("label", &self.label)
            .field("params", &self.params)
            .field("closed", &self.closed)
            .field("analytic_derivatives", &self.has_analytic_derivatives())
            .finish()
    }
}

impl ParametricCurve {
    /// An open arc over `params`.
    pub fn open<P>(label: impl Into<String>, params: Interval, position: P) -> Result<Self>
    where
        P: Fn(f64) -> Vec2 + Send + Sync + 'static,
    {
        if !(params.lo.is_finite() && params.hi.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "params",
                reason: "parameter interval must be finite",
            });
        }
        Ok(ParametricCurve {
            params,
            closed: false,
            position: Arc::new(position),
            velocity: None,
            acceleration: None,
            label: label.into(),
            non_c3: false,
            edge_margin: DEFAULT_EDGE_MARGIN,
        })
    }

    /// A closed loop with period `params.width()`. The two ends of the
    /// parameter interval must map to the same point.
    pub fn closed<P>(label: impl Into<String>, params: Interval, position: P) -> Result<Self>
    where
        P: Fn(f64) -> Vec2 + Send + Sync + 'static,
    {
        let mut curve = ParametricCurve::open(label, params, position)?;
        let start = (curve.position)(params.lo);
        let end = (curve.position)(params.hi);
        if start.distance(end) > 1e-12 * (1.0 + start.hypot()) {
            return Err(Error::InvalidParameter {
                name: "position",
                reason: "closed curve does not return to its starting point",
            });
        }
        curve.closed = true;
        Ok(curve)
    }

    pub fn with_derivatives<V, A>(mut self, velocity: V, acceleration: A) -> Self
    where
        V: Fn(f64) -> Vec2 + Send + Sync + 'static,
        A: Fn(f64) -> Vec2 + Send + Sync + 'static,
    {
        self.velocity = Some(Arc::new(velocity));
        self.acceleration = Some(Arc::new(acceleration));
        self
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn params(&self) -> Interval {
        self.params
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn has_analytic_derivatives(&self) -> bool {
        self.velocity.is_some() && self.acceleration.is_some()
    }

    fn wrap(&self, t: f64) -> f64 {
        if self.closed {
            let (u, w) = (t - self.params.lo, self.params.width());
            self.params.lo + (u - w * libm::floor(u / w))
        } else {
            t
        }
    }

    fn fd_bounds(&self) -> (f64, f64) {
        if self.closed {
            (f64::NEG_INFINITY, f64::INFINITY)
        } else {
            (self.params.lo, self.params.hi)
        }
    }

    pub fn position(&self, t: f64) -> Vec2 {
        (self.position)(self.wrap(t))
    }

    pub fn velocity(&self, t: f64) -> Vec2 {
        match &self.velocity {
            Some(v) => v(self.wrap(t)),
            None => {
                let (lo, hi) = self.fd_bounds();
                diff::first_derivative_vec(|s| self.position(s), t, lo, hi)
            }
        }
    }

    pub fn acceleration(&self, t: f64) -> Vec2 {
        match &self.acceleration {
            Some(a) => a(self.wrap(t)),
            None => {
                let (lo, hi) = self.fd_bounds();
                diff::second_derivative_vec(|s| self.position(s), t, lo, hi)
            }
        }
    }
}

/// Any supported curve.
#[derive(Clone, Debug)]
pub enum Curve {
    Graph(GraphCurve),
    Parametric(ParametricCurve),
}

impl From<GraphCurve> for Curve {
    fn from(g: GraphCurve) -> Self {
        Curve::Graph(g)
    }
}

impl From<ParametricCurve> for Curve {
    fn from(p: ParametricCurve) -> Self {
        Curve::Parametric(p)
    }
}

/// A point of a curve together with its Frenet frame.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CurvePoint {
    pub location: Vec2,
    /// Unit tangent in the direction of increasing parameter.
    pub tangent: Vec2,
    /// Unit normal pointing to the convex side.
    pub normal: Vec2,
    /// Parameter (abscissa for graphs).
    pub param: f64,
}

/// Whether curvature may fall back to finite differences.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum DerivativeSource {
    AnalyticOnly,
    #[default]
    AllowFiniteDifference,
}

impl Curve {
    pub fn label(&self) -> &str {
        match self {
            Curve::Graph(g) => g.label(),
            Curve::Parametric(p) => p.label(),
        }
    }

    pub fn as_graph(&self) -> Option<&GraphCurve> {
        match self {
            Curve::Graph(g) => Some(g),
            Curve::Parametric(_) => None,
        }
    }

    pub fn is_closed(&self) -> bool {
        matches!(self, Curve::Parametric(p) if p.is_closed())
    }

    pub fn parameter_domain(&self) -> Interval {
        match self {
            Curve::Graph(g) => g.domain(),
            Curve::Parametric(p) => p.params(),
        }
    }

    pub fn period(&self) -> Option<f64> {
        match self {
            Curve::Parametric(p) if p.is_closed() => Some(p.params().width()),
            _ => None,
        }
    }

    /// Parameters usable by operations that need a neighborhood. For
    /// closed curves this is the whole (periodic) parameter line.
    pub fn usable_domain(&self) -> Interval {
        match self {
            Curve::Graph(g) => g.usable_domain(),
            Curve::Parametric(p) if p.is_closed() => Interval {
                lo: f64::NEG_INFINITY,
                hi: f64::INFINITY,
            },
            Curve::Parametric(p) => {
                let m = p.edge_margin * p.params.width();
                Interval {
                    lo: p.params.lo + m,
                    hi: p.params.hi - m,
                }
            }
        }
    }

    /// True if the curve carries a known failure of `C^3` smoothness.
    pub fn hypothesis_violated(&self) -> bool {
        match self {
            Curve::Graph(g) => g.kink.is_some(),
            Curve::Parametric(p) => p.non_c3,
        }
    }

    pub fn has_analytic_derivatives(&self) -> bool {
        match self {
            Curve::Graph(g) => g.has_analytic_derivatives(),
            Curve::Parametric(p) => p.has_analytic_derivatives(),
        }
    }

    #[inline]
    pub fn position(&self, t: f64) -> Vec2 {
        match self {
            Curve::Graph(g) => Vec2::new(t, g.value(t)),
            Curve::Parametric(p) => p.position(t),
        }
    }

    #[inline]
    pub fn velocity(&self, t: f64) -> Vec2 {
        match self {
            Curve::Graph(g) => Vec2::new(1.0, g.slope(t)),
            Curve::Parametric(p) => p.velocity(t),
        }
    }

    #[inline]
    pub fn acceleration(&self, t: f64) -> Vec2 {
        match self {
            Curve::Graph(g) => Vec2::new(0.0, g.second_derivative(t)),
            Curve::Parametric(p) => p.acceleration(t),
        }
    }

    /// Curvature relative to the left normal of the parametrization.
    pub fn signed_curvature(&self, t: f64) -> f64 {
        let v = self.velocity(t);
        let a = self.acceleration(t);
        let speed = v.hypot();
        v.cross(a) / (speed * speed * speed)
    }

    /// The point at parameter `t` with its tangent and convex-side normal.
    pub fn point(&self, t: f64) -> Result<CurvePoint> {
        if !t.is_finite() || !self.usable_domain().contains(t) {
            return Err(Error::OutsideDomain { param: t });
        }
        let v = self.velocity(t);
        let a = self.acceleration(t);
        let speed = v.hypot();
        let cross = v.cross(a);
        if !(speed > 0.0 && speed.is_finite()) || !(cross != 0.0 && cross.is_finite()) {
            return Err(Error::NotStrictlyConvex { param: t });
        }
        let tangent = v * (1.0 / speed);
        let normal = if cross > 0.0 {
            tangent.turn_left()
        } else {
            tangent.turn_right()
        };
        Ok(CurvePoint {
            location: self.position(t),
            tangent,
            normal,
            param: t,
        })
    }

    /// Curvature at a point with respect to the point's own normal,
    /// `<X'', N> / |X'|^2`.
    pub fn curvature_at(&self, point: &CurvePoint) -> f64 {
        let v = self.velocity(point.param);
        self.acceleration(point.param).dot(point.normal) / v.hypot2()
    }

    /// Image of the curve under an affine map, as a parametric curve with
    /// the same parameter.
    pub fn transformed(&self, map: Affine2) -> Result<Curve> {
        if !(map.determinant().abs() > 0.0) {
            return Err(Error::InvalidParameter {
                name: "map",
                reason: "affine map must be invertible",
            });
        }
        let label = format!("affine({})", self.label());
        let base = self.clone();
        let pos = move |t: f64| map.apply(base.position(t));
        let mut out = if self.is_closed() {
            ParametricCurve::closed(label, self.parameter_domain(), pos)?
        } else {
            ParametricCurve::open(label, self.parameter_domain(), pos)?
        };
        if self.has_analytic_derivatives() {
            let (b1, b2) = (self.clone(), self.clone());
            out = out.with_derivatives(
                move |t| map.apply_linear(b1.velocity(t)),
                move |t| map.apply_linear(b2.acceleration(t)),
            );
        }
        out.non_c3 = self.hypothesis_violated();
        out.edge_margin = match self {
            Curve::Graph(g) => g.edge_margin,
            Curve::Parametric(p) => p.edge_margin,
        };
        Ok(Curve::Parametric(out))
    }

    /// Parameter samples spread uniformly over the usable domain: for open
    /// curves the `n` interior points `(i + 1) / (n + 1)`, for closed curves
    /// `i / n` of one period.
    pub fn sample_params(&self, n: usize) -> Vec<f64> {
        let dom = self.parameter_domain();
        if self.is_closed() {
            (0..n).map(|i| dom.lerp(i as f64 / n as f64)).collect()
        } else {
            (0..n)
                .map(|i| dom.lerp((i + 1) as f64 / (n + 1) as f64))
                .collect()
        }
    }

    /// A length scale of the curve used to make tolerances dimensionless.
    pub(crate) fn scale_hint(&self) -> f64 {
        match self {
            Curve::Graph(g) => g.domain.width(),
            Curve::Parametric(p) => {
                let n = 16;
                let mut lo = Vec2::new(f64::INFINITY, f64::INFINITY);
                let mut hi = Vec2::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
                for i in 0..=n {
                    let q = p.position(p.params.lerp(i as f64 / n as f64));
                    lo = Vec2::new(lo.x.min(q.x), lo.y.min(q.y));
                    hi = Vec2::new(hi.x.max(q.x), hi.y.max(q.y));
                }
                (hi - lo).hypot()
            }
        }
    }
}

/// Curvature `kappa(P)` at a point of the curve.
///
/// For graphs this is `f''(x) / W(x)^3`; for parametric curves
/// `<X'', N> / |X'|^2`. Errors if `point` is not on the curve or if only
/// analytic derivatives are allowed and the curve has none.
pub fn curvature_analytic(
    curve: &Curve,
    point: &CurvePoint,
    source: DerivativeSource,
) -> Result<f64> {
    let on_curve = curve.position(point.param);
    if !(on_curve.distance(point.location) <= 1e-9 * (1.0 + point.location.hypot())) {
        return Err(Error::OffCurve);
    }
    if source == DerivativeSource::AnalyticOnly && !curve.has_analytic_derivatives() {
        return Err(Error::MissingDerivative);
    }
    match curve {
        Curve::Graph(g) => {
            let w = g.width_factor(point.param);
            Ok(g.second_derivative(point.param) / (w * w * w))
        }
        Curve::Parametric(_) => Ok(curve.curvature_at(point)),
    }
}

/// Outcome of [`check_strict_convexity`].
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ConvexityCheck {
    pub strictly_convex: bool,
    /// Smallest oriented curvature over the samples.
    pub min_curvature: f64,
    pub at_param: f64,
}

/// Sample the oriented curvature at `n_samples` parameters spanning the
/// usable domain (endpoints included for open curves).
pub fn check_strict_convexity(curve: &Curve, n_samples: usize) -> Result<ConvexityCheck> {
    if n_samples < 3 {
        return Err(Error::InvalidParameter {
            name: "n_samples",
            reason: "need at least 3 samples",
        });
    }
    let params: Vec<f64> = if curve.is_closed() {
        curve.sample_params(n_samples)
    } else {
        let dom = curve.usable_domain();
        (0..n_samples)
            .map(|i| dom.lerp(i as f64 / (n_samples - 1) as f64))
            .collect()
    };
    let kappas: Vec<f64> = params
        .iter()
        .map(|&t| match curve {
            Curve::Graph(g) => {
                let w = g.width_factor(t);
                g.second_derivative(t) / (w * w * w)
            }
            Curve::Parametric(_) => curve.signed_curvature(t),
        })
        .collect();
    // graphs use the upward normal; loops and arcs their dominant turning
    let orientation = match curve {
        Curve::Graph(_) => 1.0,
        Curve::Parametric(_) => {
            if kappas.iter().sum::<f64>() < 0.0 {
                -1.0
            } else {
                1.0
            }
        }
    };
    let (i_min, k_min) = kappas.iter().map(|k| orientation * k).enumerate().fold(
        (0, f64::INFINITY),
        |acc, (i, k)| {
            if k < acc.1 || k.is_nan() {
                (i, k)
            } else {
                acc
            }
        },
    );
    Ok(ConvexityCheck {
        strictly_convex: k_min > 0.0,
        min_curvature: k_min,
        at_param: params[i_min],
    })
}

/// A tangent-aligned chart `u -> v(u)` at a curve point: `P` moves to the
/// origin, the tangent to the u-axis and the convex-side normal to the
/// positive v-axis, by a rotation and a translation.
#[derive(Clone, Debug)]
pub struct LocalChart {
    curve: Curve,
    origin: CurvePoint,
    axis: Vec2,
    /// Parameter bounds of the arc covered by the chart (ordered).
    param_lo: f64,
    param_hi: f64,
    range: Interval,
}

impl LocalChart {
    pub fn origin(&self) -> &CurvePoint {
        &self.origin
    }

    /// Rotation angle of the chart's u-axis in world coordinates.
    pub fn angle(&self) -> f64 {
        libm::atan2(self.axis.y, self.axis.x)
    }

    /// Unit vector of the chart's u-axis.
    pub fn axis(&self) -> Vec2 {
        self.axis
    }

    pub fn range(&self) -> Interval {
        self.range
    }

    /// Chart coordinates of a world point.
    pub fn to_chart(&self, q: Vec2) -> Vec2 {
        let d = q - self.origin.location;
        Vec2::new(d.dot(self.axis), d.dot(self.origin.normal))
    }

    /// World coordinates of a chart point.
    pub fn to_world(&self, uv: Vec2) -> Vec2 {
        self.origin.location + self.axis * uv.x + self.origin.normal * uv.y
    }

    /// Curve parameter of the chart point with abscissa `u`.
    pub fn param_at(&self, u: f64) -> Result<f64> {
        if u == 0.0 {
            return Ok(self.origin.param);
        }
        if !self.range.contains(u) {
            return Err(Error::OutsideDomain { param: u });
        }
        let phi = |t: f64| self.to_chart(self.curve.position(t)).x - u;
        let (a, b) = (self.param_lo, self.param_hi);
        brent(phi, a, b, phi(a), phi(b), RootOptions::default())
    }

    fn frame_derivatives(&self, t: f64) -> (Vec2, Vec2) {
        let v = self.curve.velocity(t);
        let a = self.curve.acceleration(t);
        let n = self.origin.normal;
        (
            Vec2::new(v.dot(self.axis), v.dot(n)),
            Vec2::new(a.dot(self.axis), a.dot(n)),
        )
    }
}

impl ChartFunction for LocalChart {
    fn value(&self, u: f64) -> Result<f64> {
        let t = self.param_at(u)?;
        if u == 0.0 {
            return Ok(0.0);
        }
        Ok(self.to_chart(self.curve.position(t)).y)
    }

    fn slope(&self, u: f64) -> Result<f64> {
        if u == 0.0 {
            return Ok(0.0);
        }
        let t = self.param_at(u)?;
        let (d1, _) = self.frame_derivatives(t);
        Ok(d1.y / d1.x)
    }

    fn second_derivative(&self, u: f64) -> Result<f64> {
        let t = self.param_at(u)?;
        let (d1, d2) = self.frame_derivatives(t);
        Ok((d2.y * d1.x - d1.y * d2.x) / (d1.x * d1.x * d1.x))
    }

    fn range(&self) -> Interval {
        self.range
    }
}

/// Build the tangent-aligned chart of `curve` at `point`.
///
/// The chart covers the arc on which the tangent stays within a right angle
/// of the tangent at `point`.
pub fn local_chart(curve: &Curve, point: &CurvePoint) -> Result<LocalChart> {
    let axis = point.normal.turn_right();
    let t0 = point.param;
    let usable = curve.usable_domain();
    if !usable.contains(t0) {
        return Err(Error::DegenerateChart);
    }
    let along = |t: f64| curve.velocity(t).dot(axis);
    let sigma = along(t0).signum();
    let turn = |t: f64| sigma * along(t);
    let span = match curve.period() {
        Some(p) => p,
        None => usable.width(),
    };
    let find_limit = |dir: f64| -> Result<f64> {
        let limit = match curve.period() {
            Some(p) => t0 + dir * p,
            None if dir > 0.0 => usable.hi,
            None => usable.lo,
        };
        let mut step = 1e-3 * span;
        let mut prev = t0;
        for _ in 0..200 {
            let mut t = t0 + dir * step;
            let at_limit = (t - limit) * dir >= 0.0;
            if at_limit {
                t = limit;
            }
            let w = turn(t);
            if w <= 0.0 {
                let (a, b) = if prev < t { (prev, t) } else { (t, prev) };
                return brent(turn, a, b, turn(a), turn(b), RootOptions::default());
            }
            if at_limit {
                return Ok(limit);
            }
            prev = t;
            step *= 2.0;
        }
        Err(Error::NoConvergence {
            what: "chart range search",
        })
    };
    let t_fwd = find_limit(1.0)?;
    let t_back = find_limit(-1.0)?;
    let u_of = |t: f64| (curve.position(t) - point.location).dot(axis);
    let (u_fwd, u_back) = (u_of(t_fwd), u_of(t_back));
    let (u_lo, u_hi) = if u_back < u_fwd {
        (u_back, u_fwd)
    } else {
        (u_fwd, u_back)
    };
    let scale = curve.scale_hint();
    if !(u_lo < -1e-12 * scale && u_hi > 1e-12 * scale) {
        return Err(Error::DegenerateChart);
    }
    Ok(LocalChart {
        curve: curve.clone(),
        origin: *point,
        axis,
        param_lo: t_back.min(t_fwd),
        param_hi: t_back.max(t_fwd),
        range: Interval { lo: u_lo, hi: u_hi },
    })
}

/// A function `u -> v(u)` describing a curve locally as a graph.
///
/// Implemented by [`LocalChart`] and by [`GraphCurve`] (whose chart is the
/// function itself).
pub trait ChartFunction {
    fn value(&self, u: f64) -> Result<f64>;
    fn slope(&self, u: f64) -> Result<f64>;
    fn second_derivative(&self, u: f64) -> Result<f64>;
    fn range(&self) -> Interval;

    /// Check `f(0) = 0` and `f'(0) = 0`.
    fn ensure_anchored(&self) -> Result<()> {
        let r = self.range();
        if !r.contains(0.0) {
            return Err(Error::NotAnchored);
        }
        let w = r.width();
        let curv = self.second_derivative(0.0)?.abs();
        let v0 = self.value(0.0)?;
        let s0 = self.slope(0.0)?;
        if v0.abs() <= 1e-12 * (1.0 + curv * w * w) && s0.abs() <= 1e-9 * (1.0 + curv * w) {
            Ok(())
        } else {
            Err(Error::NotAnchored)
        }
    }
}

impl ChartFunction for GraphCurve {
    fn value(&self, u: f64) -> Result<f64> {
        if !self.domain.contains(u) {
            return Err(Error::OutsideDomain { param: u });
        }
        Ok(GraphCurve::value(self, u))
    }

    fn slope(&self, u: f64) -> Result<f64> {
        if !self.domain.contains(u) {
            return Err(Error::OutsideDomain { param: u });
        }
        Ok(GraphCurve::slope(self, u))
    }

    fn second_derivative(&self, u: f64) -> Result<f64> {
        if !self.domain.contains(u) {
            return Err(Error::OutsideDomain { param: u });
        }
        Ok(GraphCurve::second_derivative(self, u))
    }

    fn range(&self) -> Interval {
        self.usable_domain()
    }
}

fn positive(name: &'static str, v: f64) -> Result<()> {
    if v > 0.0 && v.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParameter {
            name,
            reason: "must be positive and finite",
        })
    }
}

/// Default domain of the built-in quadratic graphs.
pub const QUADRATIC_DOMAIN: Interval = Interval { lo: -4.0, hi: 4.0 };

/// `y = a x^2 + b x + c` on [`QUADRATIC_DOMAIN`].
pub fn make_quadratic(a: f64, b: f64, c: f64) -> Result<Curve> {
    Ok(quadratic_graph(a, b, c)?.into())
}

pub fn quadratic_graph(a: f64, b: f64, c: f64) -> Result<GraphCurve> {
    positive("a", a)?;
    if !(b.is_finite() && c.is_finite()) {
        return Err(Error::InvalidParameter {
            name: "b, c",
            reason: "must be finite",
        });
    }
    Ok(GraphCurve::new(
        format!("quadratic(a={a}, b={b}, c={c})"),
        QUADRATIC_DOMAIN,
        move |x| (a * x + b) * x + c,
    )?
    .with_derivatives(move |x| 2.0 * a * x + b, move |_| 2.0 * a))
}

/// Default domain of the family curve: a window of width `2/|c|` ending at
/// the singular abscissa `1/(2c)`.
pub fn family_domain(c: f64) -> Interval {
    let edge = 0.5 / c;
    if c > 0.0 {
        Interval {
            lo: edge - 2.0 / c,
            hi: edge,
        }
    } else {
        Interval {
            lo: edge,
            hi: edge - 2.0 / c,
        }
    }
}

/// `f(x) = b((1 - c x) - sqrt(1 - 2 c x))`, the non-polynomial parabola
/// graphs. Evaluated in cancellation-free form.
pub fn make_family_curve(b: f64, c: f64) -> Result<Curve> {
    positive("b", b)?;
    if !(c != 0.0 && c.is_finite()) {
        return Err(Error::InvalidParameter {
            name: "c",
            reason: "must be nonzero and finite",
        });
    }
    let root = move |x: f64| libm::sqrt(1.0 - 2.0 * c * x);
    Ok(GraphCurve::new(
        format!("family(b={b}, c={c})"),
        family_domain(c),
        move |x| {
            // (1 - cx) - s = c^2 x^2 / ((1 - cx) + s)
            let s = root(x);
            b * c * c * x * x / ((1.0 - c * x) + s)
        },
    )?
    .with_derivatives(
        move |x| {
            // b c (1/s - 1) = 2 b c^2 x / (s (1 + s))
            let s = root(x);
            2.0 * b * c * c * x / (s * (1.0 + s))
        },
        move |x| {
            let s = root(x);
            b * c * c / (s * s * s)
        },
    )
    .into())
}

/// The piecewise parabola `9x^2` (x < 0), `9x^2/4` (x >= 0) on `(-2, 2)`.
/// Flagged as not `C^3` at the origin.
pub fn make_example10() -> Result<Curve> {
    Ok(
        GraphCurve::new("example10", Interval { lo: -2.0, hi: 2.0 }, |x| {
            if x < 0.0 {
                9.0 * x * x
            } else {
                2.25 * x * x
            }
        })?
        .with_derivatives(
            |x| if x < 0.0 { 18.0 * x } else { 4.5 * x },
            |x| if x < 0.0 { 18.0 } else { 4.5 },
        )
        .with_kink(0.0)
        .into(),
    )
}

/// The ellipse `(a cos t, b sin t)`, `t` in `[0, 2 pi)`.
pub fn make_ellipse(a: f64, b: f64) -> Result<Curve> {
    positive("a", a)?;
    positive("b", b)?;
    let tau = 2.0 * core::f64::consts::PI;
    Ok(ParametricCurve::closed(
        format!("ellipse(a={a}, b={b})"),
        Interval { lo: 0.0, hi: tau },
        move |t| {
            let (s, c) = libm::sincos(t);
            Vec2::new(a * c, b * s)
        },
    )?
    .with_derivatives(
        move |t| {
            let (s, c) = libm::sincos(t);
            Vec2::new(-a * s, b * c)
        },
        move |t| {
            let (s, c) = libm::sincos(t);
            Vec2::new(-a * c, -b * s)
        },
    )
    .into())
}

/// The vertical translate `y = f(x) + k` of a graph.
pub fn make_offset_graph(base: &GraphCurve, k: f64) -> Result<GraphCurve> {
    positive("k", k)?;
    let f = base.f.clone();
    let mut out = GraphCurve::new(
        format!("offset({}, k={k})", base.label),
        base.domain,
        move |x| f(x) + k,
    )?;
    out.df = base.df.clone();
    out.ddf = base.ddf.clone();
    out.kink = base.kink;
    out.edge_margin = base.edge_margin;
    Ok(out)
}

/// A polynomial graph with ascending coefficients `c0 + c1 x + c2 x^2 + ...`.
pub fn make_polynomial(coefficients: &[f64], domain: Interval) -> Result<Curve> {
    if coefficients.is_empty() || coefficients.iter().any(|c| !c.is_finite()) {
        return Err(Error::InvalidParameter {
            name: "coefficients",
            reason: "need at least one finite coefficient",
        });
    }
    let p: Arc<[f64]> = coefficients.into();
    let dp: Arc<[f64]> = p
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| i as f64 * c)
        .collect::<Vec<_>>()
        .into();
    let ddp: Arc<[f64]> = dp
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| i as f64 * c)
        .collect::<Vec<_>>()
        .into();
    fn horner(c: &[f64], x: f64) -> f64 {
        c.iter().rev().fold(0.0, |acc, ci| acc * x + ci)
    }
    let label = format!("poly({:?})", coefficients);
    Ok(GraphCurve::new(label, domain, move |x| horner(&p, x))?
        .with_derivatives(move |x| horner(&dp, x), move |x| horner(&ddp, x))
        .into())
}
