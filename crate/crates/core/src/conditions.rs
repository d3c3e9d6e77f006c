// Copyright 2026 the Archimedes Authors
// SPDX-License-Identifier: Apache-2.0

//! Numerical checks of the Archimedean area conditions.
//!
//! | condition | statement | measured |
//! |-----------|-----------|----------|
//! | A | `S = a |PV|^(3/2)`, `a` constant | spread of `S / |PV|^(3/2)` |
//! | B | tangent chords of `y = f + k` cut off constant area `phi(k)` | spread of `S` across tangency points |
//! | C | `S = (4/3) |ABP|` | `max |S / |ABP| - 4/3|` |
//! | D | `S = a(P) |ABP|^b(P)` | per-point log-log fit residual |
//! | E | `S = a(P) |PV|^b(P)` | per-point log-log fit residual |
//!
//! Verdicts are relative to the sample grid in [`Sampling`].

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::chord::{chord_at_height, chord_exists, h_max, ChordSection};
use crate::curve::{Curve, CurvePoint, GraphCurve, Interval};
use crate::numeric::{fit_power_law, PowerLawFit};
use crate::{Error, Result, Vec2};

pub const ARCHIMEDES_RATIO: f64 = 4.0 / 3.0;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Condition {
    A,
    B,
    C,
    D,
    E,
}

impl Condition {
    pub const ALL: [Condition; 5] = [
        Condition::A,
        Condition::B,
        Condition::C,
        Condition::D,
        Condition::E,
    ];

    pub fn needs_graph(self) -> bool {
        matches!(self, Condition::A | Condition::B | Condition::E)
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Condition::A => "A",
            Condition::B => "B",
            Condition::C => "C",
            Condition::D => "D",
            Condition::E => "E",
        };
        f.write_str(s)
    }
}

impl core::str::FromStr for Condition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Condition::A),
            "B" | "b" => Ok(Condition::B),
            "C" | "c" => Ok(Condition::C),
            "D" | "d" => Ok(Condition::D),
            "E" | "e" => Ok(Condition::E),
            _ => Err(Error::InvalidParameter {
                name: "condition",
                reason: "expected one of A, B, C, D, E",
            }),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Verdict {
    Satisfied,
    Violated,
    /// The curve is flagged as not `C^3`; the measurement is reported but
    /// no verdict is drawn from it.
    HypothesisViolated,
}

/// Where and how densely a condition is sampled.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Sampling {
    pub n_points: usize,
    /// Heights per point (at least 8 are used for the D/E fits).
    pub n_heights: usize,
    /// Smallest height as a fraction of `h_max(P)`.
    pub h_lo_frac: f64,
    /// Largest height as a fraction of `h_max(P)`.
    pub h_hi_frac: f64,
    pub tolerance: f64,
}

impl Default for Sampling {
    fn default() -> Self {
        Sampling {
            n_points: 9,
            n_heights: 7,
            h_lo_frac: 1.0 / 2048.0,
            h_hi_frac: 1.0 / 8.0,
            tolerance: 1e-6,
        }
    }
}

/// Height range used by the power-law fits of conditions D and E.
pub const FIT_H_LO_FRAC: f64 = 1.0 / 4096.0;
pub const FIT_H_HI_FRAC: f64 = 1.0 / 4.0;
pub const FIT_MIN_HEIGHTS: usize = 8;

impl Sampling {
    pub fn validate(&self) -> Result<()> {
        if self.n_points < 1 || self.n_heights < 2 {
            return Err(Error::InvalidParameter {
                name: "sampling",
                reason: "need at least 1 point and 2 heights",
            });
        }
        if !(self.h_lo_frac > 0.0 && self.h_lo_frac < self.h_hi_frac && self.h_hi_frac < 1.0) {
            return Err(Error::InvalidParameter {
                name: "sampling",
                reason: "need 0 < h_lo_frac < h_hi_frac < 1",
            });
        }
        if !(self.tolerance > 0.0 && self.tolerance.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "tolerance",
                reason: "must be positive and finite",
            });
        }
        Ok(())
    }
}

/// One measured chord.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Sample {
    pub param: f64,
    pub location: Vec2,
    /// Normal height `h` of the chord above the point.
    pub height: f64,
    pub length: f64,
    pub area: f64,
    pub triangle: f64,
    pub pv: Option<f64>,
    /// The condition's statistic for this sample.
    pub value: f64,
}

impl Sample {
    fn from_chord(chord: &ChordSection, value: f64) -> Self {
        Sample {
            param: chord.point.param,
            location: chord.point.location,
            height: chord.height,
            length: chord.length,
            area: chord.area,
            triangle: chord.triangle,
            pv: chord.pv,
            value,
        }
    }
}

/// A per-point power-law fit `S ≈ a x^b`.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PointFit {
    pub param: f64,
    pub location: Vec2,
    pub h_max: f64,
    pub fit: PowerLawFit,
}

#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ConditionReport {
    pub condition: Condition,
    pub curve: String,
    pub sampling: Sampling,
    /// The offset of condition B.
    pub k: Option<f64>,
    pub samples: Vec<Sample>,
    pub fits: Vec<PointFit>,
    pub fitted: BTreeMap<String, f64>,
    pub max_deviation: f64,
    /// Index into `samples` (or `fits` for D/E) of the largest deviation.
    pub worst: Option<usize>,
    /// `max_deviation <= tolerance`, regardless of the verdict.
    pub within_tolerance: bool,
    pub verdict: Verdict,
    pub tolerance: f64,
    pub hypothesis_violated: bool,
}

impl ConditionReport {
    fn finish(
        condition: Condition,
        curve: &Curve,
        sampling: Sampling,
        k: Option<f64>,
        samples: Vec<Sample>,
        fits: Vec<PointFit>,
        fitted: BTreeMap<String, f64>,
        max_deviation: f64,
        worst: Option<usize>,
    ) -> Self {
        let within_tolerance = max_deviation <= sampling.tolerance;
        let hypothesis_violated = curve.hypothesis_violated();
        let verdict = if hypothesis_violated {
            Verdict::HypothesisViolated
        } else if within_tolerance {
            Verdict::Satisfied
        } else {
            Verdict::Violated
        };
        ConditionReport {
            condition,
            curve: curve.label().to_string(),
            sampling,
            k,
            samples,
            fits,
            fitted,
            max_deviation,
            worst,
            within_tolerance,
            verdict,
            tolerance: sampling.tolerance,
            hypothesis_violated,
        }
    }

    pub fn worst_sample(&self) -> Option<&Sample> {
        self.samples.get(self.worst?)
    }
}

fn geometric(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    if n == 1 {
        return alloc::vec![hi];
    }
    let ratio = hi / lo;
    (0..n)
        .map(|j| lo * libm::pow(ratio, j as f64 / (n - 1) as f64))
        .collect()
}

fn sample_points(curve: &Curve, n: usize) -> Result<Vec<CurvePoint>> {
    curve
        .sample_params(n)
        .into_iter()
        .map(|t| curve.point(t))
        .collect()
}

fn argmax(values: impl Iterator<Item = f64>) -> Option<(usize, f64)> {
    values
        .enumerate()
        .fold(None, |best: Option<(usize, f64)>, (i, v)| match best {
            Some((_, b)) if !(v > b) => best,
            _ => Some((i, v)),
        })
}

/// Chords over the default grid: `n_points` points by `n_heights` heights
/// geometric in `[h_lo_frac, h_hi_frac] h_max(P)`.
pub fn sample_chords(curve: &Curve, sampling: &Sampling) -> Result<Vec<ChordSection>> {
    sampling.validate()?;
    let mut out = Vec::with_capacity(sampling.n_points * sampling.n_heights);
    for p in sample_points(curve, sampling.n_points)? {
        let hm = h_max(curve, &p)?.h_max;
        for h in geometric(
            sampling.h_lo_frac * hm,
            sampling.h_hi_frac * hm,
            sampling.n_heights,
        ) {
            out.push(chord_at_height(curve, &p, h)?);
        }
    }
    Ok(out)
}

/// Condition C: `S / |ABP| = 4/3`.
pub fn check_condition_c(curve: &Curve, sampling: Sampling) -> Result<ConditionReport> {
    let samples: Vec<Sample> = sample_chords(curve, &sampling)?
        .iter()
        .map(|c| Sample::from_chord(c, c.archimedes_ratio()))
        .collect();
    let worst = argmax(samples.iter().map(|s| (s.value - ARCHIMEDES_RATIO).abs()));
    let max_dev = worst.map_or(0.0, |w| w.1);
    let mut fitted = BTreeMap::new();
    fitted.insert(
        "ratio_min".to_string(),
        samples
            .iter()
            .map(|s| s.value)
            .fold(f64::INFINITY, f64::min),
    );
    fitted.insert(
        "ratio_max".to_string(),
        samples
            .iter()
            .map(|s| s.value)
            .fold(f64::NEG_INFINITY, f64::max),
    );
    Ok(ConditionReport::finish(
        Condition::C,
        curve,
        sampling,
        None,
        samples,
        Vec::new(),
        fitted,
        max_dev,
        worst.map(|w| w.0),
    ))
}

fn require_graph(curve: &Curve) -> Result<&GraphCurve> {
    curve.as_graph().ok_or(Error::NotAGraph)
}

fn spread_report(
    condition: Condition,
    curve: &Curve,
    sampling: Sampling,
    k: Option<f64>,
    samples: Vec<Sample>,
    name: &str,
) -> ConditionReport {
    let n = samples.len() as f64;
    let mean = samples.iter().map(|s| s.value).sum::<f64>() / n;
    let worst = argmax(samples.iter().map(|s| (s.value - mean).abs() / mean));
    let mut fitted = BTreeMap::new();
    fitted.insert(name.to_string(), mean);
    ConditionReport::finish(
        condition,
        curve,
        sampling,
        k,
        samples,
        Vec::new(),
        fitted,
        worst.map_or(0.0, |w| w.1),
        worst.map(|w| w.0),
    )
}

/// Condition A: `S / |PV|^(3/2)` is one constant `a` for the whole graph.
pub fn check_condition_a(curve: &Curve, sampling: Sampling) -> Result<ConditionReport> {
    require_graph(curve)?;
    let samples: Vec<Sample> = sample_chords(curve, &sampling)?
        .iter()
        .map(|c| {
            let pv = c.pv.unwrap_or(f64::NAN);
            Sample::from_chord(c, c.area / (pv * libm::sqrt(pv)))
        })
        .collect();
    Ok(spread_report(
        Condition::A,
        curve,
        sampling,
        None,
        samples,
        "a",
    ))
}

/// Default offset for condition B: `1e-2 (domain width)^2 f''(mid) / 2`.
pub fn default_offset(graph: &GraphCurve) -> f64 {
    let d = graph.domain();
    1e-2 * d.width() * d.width() * graph.second_derivative(d.mid()) / 2.0
}

fn tangent_chord(curve: &Curve, graph: &GraphCurve, v: f64, k: f64) -> Result<ChordSection> {
    // The tangent to y = f + k at x = v is the tangent-parallel line at
    // vertical offset k, i.e. normal height k / W(v).
    let p = curve.point(v)?;
    chord_at_height(curve, &p, k / graph.width_factor(v))
}

fn tangent_chord_exists(curve: &Curve, graph: &GraphCurve, v: f64, k: f64) -> bool {
    curve
        .point(v)
        .map(|p| chord_exists(curve, &p, k / graph.width_factor(v)))
        .unwrap_or(false)
}

/// Abscissae `v` for which the tangent to `y = f + k` at `v` meets the
/// graph twice inside the domain. Found by bisection outward from the
/// domain midpoint.
pub fn offset_feasible_interval(curve: &Curve, k: f64) -> Result<Interval> {
    let graph = require_graph(curve)?;
    if !(k > 0.0 && k.is_finite()) {
        return Err(Error::InvalidParameter {
            name: "k",
            reason: "must be positive and finite",
        });
    }
    let usable = graph.usable_domain();
    let mid = usable.mid();
    if !tangent_chord_exists(curve, graph, mid, k) {
        return Err(Error::HeightOutOfRange { height: k });
    }
    let edge = |outer: f64| {
        let (mut inside, mut outside) = (mid, outer);
        if tangent_chord_exists(curve, graph, outer, k) {
            return outer;
        }
        while (outside - inside).abs() > 1e-12 * usable.width() {
            let m = 0.5 * (inside + outside);
            if tangent_chord_exists(curve, graph, m, k) {
                inside = m;
            } else {
                outside = m;
            }
        }
        inside
    };
    let lo = edge(usable.lo + 1e-9 * usable.width());
    let hi = edge(usable.hi - 1e-9 * usable.width());
    Interval::new(lo, hi)
}

/// Condition B at offset `k`: the area cut from the graph by the tangent to
/// `y = f + k` does not depend on the tangency point.
pub fn check_condition_b(curve: &Curve, k: f64, sampling: Sampling) -> Result<ConditionReport> {
    sampling.validate()?;
    let graph = require_graph(curve)?;
    let feasible = offset_feasible_interval(curve, k)?;
    let n = sampling.n_points;
    let samples = (0..n)
        .map(|i| {
            let v = feasible.lerp((i + 1) as f64 / (n + 1) as f64);
            let chord = tangent_chord(curve, graph, v, k)?;
            Ok(Sample::from_chord(&chord, chord.area))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut report = spread_report(Condition::B, curve, sampling, Some(k), samples, "phi");
    let phi = report.fitted["phi"];
    report
        .fitted
        .insert("phi_over_k_3_2".to_string(), phi / (k * libm::sqrt(k)));
    report.fitted.insert("v_lo".to_string(), feasible.lo);
    report.fitted.insert("v_hi".to_string(), feasible.hi);
    Ok(report)
}

fn fit_at(
    curve: &Curve,
    p: &CurvePoint,
    n_heights: usize,
    abscissa: fn(&ChordSection) -> f64,
) -> Result<PointFit> {
    if n_heights < FIT_MIN_HEIGHTS {
        return Err(Error::InvalidParameter {
            name: "n_heights",
            reason: "power-law fits need at least 8 heights",
        });
    }
    let hm = h_max(curve, p)?.h_max;
    let chords = geometric(FIT_H_LO_FRAC * hm, FIT_H_HI_FRAC * hm, n_heights)
        .into_iter()
        .map(|h| chord_at_height(curve, p, h))
        .collect::<Result<Vec<_>>>()?;
    let xs: Vec<f64> = chords.iter().map(abscissa).collect();
    let ys: Vec<f64> = chords.iter().map(|c| c.area).collect();
    Ok(PointFit {
        param: p.param,
        location: p.location,
        h_max: hm,
        fit: fit_power_law(&xs, &ys)?,
    })
}

/// Condition D at one point: fit `S = a |ABP|^b` over heights geometric in
/// `[h_max / 4096, h_max / 4]`.
pub fn fit_condition_d(curve: &Curve, p: &CurvePoint, n_heights: usize) -> Result<PointFit> {
    fit_at(curve, p, n_heights, |c| c.triangle)
}

/// Condition E at one point: fit `S = a |PV|^b`.
pub fn fit_condition_e(curve: &Curve, p: &CurvePoint, n_heights: usize) -> Result<PointFit> {
    require_graph(curve)?;
    fit_at(curve, p, n_heights, |c| c.pv.unwrap_or(f64::NAN))
}

fn fit_report(condition: Condition, curve: &Curve, sampling: Sampling) -> Result<ConditionReport> {
    sampling.validate()?;
    let n_heights = sampling.n_heights.max(FIT_MIN_HEIGHTS);
    let fits = sample_points(curve, sampling.n_points)?
        .iter()
        .map(|p| match condition {
            Condition::E => fit_condition_e(curve, p, n_heights),
            _ => fit_condition_d(curve, p, n_heights),
        })
        .collect::<Result<Vec<_>>>()?;
    let worst = argmax(fits.iter().map(|f| f.fit.residual_rms));
    let mut fitted = BTreeMap::new();
    let stats = |get: fn(&PointFit) -> f64| {
        let vals: Vec<f64> = fits.iter().map(get).collect();
        let mean = vals.iter().sum::<f64>() / vals.len() as f64;
        let lo = vals.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = vals.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        (mean, (hi - lo) / mean.abs())
    };
    let (a_mean, a_spread) = stats(|f| f.fit.coefficient);
    let (b_mean, b_spread) = stats(|f| f.fit.exponent);
    fitted.insert("a_mean".to_string(), a_mean);
    fitted.insert("a_spread".to_string(), a_spread);
    fitted.insert("b_mean".to_string(), b_mean);
    fitted.insert("b_spread".to_string(), b_spread);
    Ok(ConditionReport::finish(
        condition,
        curve,
        sampling,
        None,
        Vec::new(),
        fits,
        fitted,
        worst.map_or(0.0, |w| w.1),
        worst.map(|w| w.0),
    ))
}

/// Condition D at every sample point. The deviation is the largest log-log
/// residual RMS; constants `a(P)`, `b(P)` are reported in `fits`.
pub fn check_condition_d(curve: &Curve, sampling: Sampling) -> Result<ConditionReport> {
    fit_report(Condition::D, curve, sampling)
}

/// Condition E at every sample point, as for [`check_condition_d`].
pub fn check_condition_e(curve: &Curve, sampling: Sampling) -> Result<ConditionReport> {
    require_graph(curve)?;
    fit_report(Condition::E, curve, sampling)
}

/// Run any condition. `k` is only used by B and defaults to
/// [`default_offset`].
pub fn check_condition(
    curve: &Curve,
    condition: Condition,
    k: Option<f64>,
    sampling: Sampling,
) -> Result<ConditionReport> {
    match condition {
        Condition::A => check_condition_a(curve, sampling),
        Condition::B => {
            let k = match k {
                Some(k) => k,
                None => default_offset(require_graph(curve)?),
            };
            check_condition_b(curve, k, sampling)
        }
        Condition::C => check_condition_c(curve, sampling),
        Condition::D => check_condition_d(curve, sampling),
        Condition::E => check_condition_e(curve, sampling),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum ParabolaVerdict {
    Parabola,
    NotParabola,
    /// The curve is flagged as not `C^3`; condition C may hold without the
    /// curve being a parabola.
    Withheld,
}

/// Outcome of [`classify_parabola`].
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Classification {
    pub verdict: ParabolaVerdict,
    pub condition_c: ConditionReport,
    pub condition_d: Option<ConditionReport>,
    pub condition_e: Option<ConditionReport>,
    /// Failures of the supplementary fits, as messages.
    pub notes: Vec<String>,
}

/// Parabola test by condition C, with the D and E fits attached as
/// evidence for graphs.
pub fn classify_parabola(curve: &Curve, sampling: Sampling) -> Result<Classification> {
    let c = check_condition_c(curve, sampling)?;
    let verdict = match c.verdict {
        Verdict::HypothesisViolated => ParabolaVerdict::Withheld,
        Verdict::Satisfied => ParabolaVerdict::Parabola,
        Verdict::Violated => ParabolaVerdict::NotParabola,
    };
    let mut notes = Vec::new();
    let (mut d, mut e) = (None, None);
    if curve.as_graph().is_some() {
        match check_condition_d(curve, sampling) {
            Ok(r) => d = Some(r),
            Err(err) => notes.push(alloc::format!("condition D fit failed: {err}")),
        }
        match check_condition_e(curve, sampling) {
            Ok(r) => e = Some(r),
            Err(err) => notes.push(alloc::format!("condition E fit failed: {err}")),
        }
    }
    Ok(Classification {
        verdict,
        condition_c: c,
        condition_d: d,
        condition_e: e,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::{make_ellipse, make_example10, make_family_curve, make_quadratic};

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn condition_c_on_parabola() {
        let c = make_quadratic(1.0, 0.0, 0.0).unwrap();
        let r = check_condition_c(&c, Sampling::default()).unwrap();
        assert_eq!(r.samples.len(), 63);
        assert!(r.max_deviation < 1e-9, "{}", r.max_deviation);
        assert_eq!(r.verdict, Verdict::Satisfied);
    }

    #[test]
    fn condition_c_rejects_ellipse() {
        let e = make_ellipse(2.0, 1.0).unwrap();
        let r = check_condition_c(&e, Sampling::default()).unwrap();
        assert!(r.max_deviation >= 1e-3);
        assert_eq!(r.verdict, Verdict::Violated);
        let worst = r.worst_sample().unwrap();
        assert!(close(
            (worst.value - ARCHIMEDES_RATIO).abs(),
            r.max_deviation,
            0.0
        ));
    }

    #[test]
    fn condition_c_on_family() {
        let f = make_family_curve(1.0, 0.5).unwrap();
        let r = check_condition_c(&f, Sampling::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Satisfied, "{}", r.max_deviation);
    }

    #[test]
    fn condition_a_constants() {
        for &a in &[0.25, 1.0, 4.0] {
            let c = make_quadratic(a, 0.0, 0.0).unwrap();
            let r = check_condition_a(&c, Sampling::default()).unwrap();
            assert!(close(r.fitted["a"], 4.0 / (3.0 * libm::sqrt(a)), 1e-8));
            assert_eq!(r.verdict, Verdict::Satisfied);
        }
        let f = make_family_curve(1.0, 0.5).unwrap();
        assert_eq!(
            check_condition_a(&f, Sampling::default()).unwrap().verdict,
            Verdict::Violated
        );
        let e = make_ellipse(2.0, 1.0).unwrap();
        assert_eq!(
            check_condition_a(&e, Sampling::default()),
            Err(Error::NotAGraph)
        );
    }

    #[test]
    fn condition_b_on_parabola() {
        let c = make_quadratic(1.0, 0.0, 0.0).unwrap();
        let r = check_condition_b(&c, 1.0, Sampling::default()).unwrap();
        assert!(close(r.fitted["phi"], 4.0 / 3.0, 1e-8));
        assert!(r.max_deviation <= 1e-8);
        let feasible = offset_feasible_interval(&c, 1.0).unwrap();
        assert!(close(feasible.lo, -3.0, 1e-4) && close(feasible.hi, 3.0, 1e-4));
        let f = make_family_curve(1.0, 0.5).unwrap();
        assert_eq!(
            check_condition_b(&f, 0.01, Sampling::default())
                .unwrap()
                .verdict,
            Verdict::Violated
        );
        assert!(close(default_offset(c.as_graph().unwrap()), 0.64, 1e-15));
    }

    #[test]
    fn fits_on_parabola() {
        let c = make_quadratic(1.0, 0.0, 0.0).unwrap();
        let p = c.point(1.0).unwrap();
        let d = fit_condition_d(&c, &p, 8).unwrap();
        assert!(close(d.fit.exponent, 1.0, 1e-8) && close(d.fit.coefficient, 4.0 / 3.0, 1e-8));
        let e = fit_condition_e(&c, &p, 8).unwrap();
        assert!(close(e.fit.exponent, 1.5, 1e-8) && close(e.fit.coefficient, 4.0 / 3.0, 1e-8));
        assert!(matches!(
            fit_condition_d(&c, &p, 7),
            Err(Error::InvalidParameter { .. })
        ));
    }

    #[test]
    fn fits_on_circle_are_not_power_laws() {
        let circle = make_ellipse(1.0, 1.0).unwrap();
        let p = circle.point(1.5 * core::f64::consts::PI).unwrap();
        let d = fit_condition_d(&circle, &p, 8).unwrap();
        assert!((d.fit.exponent - 1.0).abs() > 1e-3 || d.fit.residual_rms > 1e-6);
    }

    #[test]
    fn family_condition_e_has_varying_a() {
        let f = make_family_curve(1.0, 0.5).unwrap();
        let r = check_condition_e(&f, Sampling::default()).unwrap();
        assert!(close(r.fitted["b_mean"], 1.5, 1e-6));
        assert!(r.fitted["a_spread"] >= 1e-3);
    }

    #[test]
    fn classification() {
        let c = make_quadratic(1.0, 0.0, 0.0).unwrap();
        assert_eq!(
            classify_parabola(&c, Sampling::default()).unwrap().verdict,
            ParabolaVerdict::Parabola
        );
        let e = make_ellipse(2.0, 1.0).unwrap();
        let r = classify_parabola(&e, Sampling::default()).unwrap();
        assert_eq!(r.verdict, ParabolaVerdict::NotParabola);
        assert!(r.condition_d.is_none());
        let x10 = make_example10().unwrap();
        let r = classify_parabola(&x10, Sampling::default()).unwrap();
        assert_eq!(r.verdict, ParabolaVerdict::Withheld);
        assert!(r.condition_c.hypothesis_violated);
    }

    #[test]
    fn condition_parsing() {
        assert_eq!("c".parse::<Condition>(), Ok(Condition::C));
        assert!("F".parse::<Condition>().is_err());
    }
}
