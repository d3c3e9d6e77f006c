// Copyright 2026 the Archimedes Authors
// SPDX-License-Identifier: Apache-2.0

//! The four subcommands.

use archimedes_core::chord::h_max;
use archimedes_core::conditions::{
    check_condition, classify_parabola, default_offset, Classification, Condition, ConditionReport,
    ParabolaVerdict, Verdict, ARCHIMEDES_RATIO,
};
use archimedes_core::curvature::{
    default_initial_height, extrapolate_curvature, CurvatureEstimate,
};
use archimedes_core::curve::{check_strict_convexity, ConvexityCheck, Curve, CurvePoint};
use archimedes_core::families::{verify_family, FamilyParams, FamilyReport};
use serde::Serialize;

use crate::cli::{CommandName, Format, RunConfig};
use crate::output::{format_f64, format_opt, to_csv, to_json};
use crate::{CliError, EXIT_HYPOTHESIS, EXIT_OK, EXIT_VIOLATED};

/// A rendered report and the exit code it implies.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub body: String,
    pub exit: i32,
    /// One-line diagnostics for standard error.
    pub messages: Vec<String>,
}

const CONVEXITY_SAMPLES: usize = 257;

pub fn execute(cfg: &RunConfig) -> Result<Outcome, CliError> {
    match cfg.command {
        CommandName::Analyze => analyze(cfg),
        CommandName::Curvature => curvature(cfg),
        CommandName::Check => check(cfg),
        CommandName::Families => families(cfg),
    }
}

#[derive(Debug, Serialize)]
pub struct HMaxRow {
    pub param: f64,
    pub x: f64,
    pub y: f64,
    pub curvature: f64,
    pub h_max: f64,
}

#[derive(Debug, Serialize)]
pub struct AnalyzeReport<'a> {
    pub config: &'a RunConfig,
    pub curve: String,
    pub hypothesis_violated: bool,
    pub convexity: ConvexityCheck,
    pub h_max: Vec<HMaxRow>,
    pub verdict: ParabolaVerdict,
    pub worst_ratio_deviation: f64,
    pub classification: Classification,
}

fn sample_points(curve: &Curve, n: usize) -> Result<Vec<CurvePoint>, CliError> {
    Ok(curve
        .sample_params(n)
        .into_iter()
        .map(|t| curve.point(t))
        .collect::<Result<Vec<_>, _>>()?)
}

fn analyze(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let curve = cfg.curve.build()?;
    let convexity = check_strict_convexity(&curve, CONVEXITY_SAMPLES)?;
    if !convexity.strictly_convex {
        return Err(archimedes_core::Error::NotStrictlyConvex {
            param: convexity.at_param,
        }
        .into());
    }
    let mut table = Vec::new();
    for p in sample_points(&curve, cfg.sampling.n_points)? {
        table.push(HMaxRow {
            param: p.param,
            x: p.location.x,
            y: p.location.y,
            curvature: curve.curvature_at(&p),
            h_max: h_max(&curve, &p)?.h_max,
        });
    }
    let classification = classify_parabola(&curve, cfg.sampling)?;
    let verdict = classification.verdict;
    let exit = match verdict {
        ParabolaVerdict::Parabola => EXIT_OK,
        ParabolaVerdict::NotParabola => EXIT_VIOLATED,
        ParabolaVerdict::Withheld => EXIT_HYPOTHESIS,
    };
    let c = &classification.condition_c;
    let mut messages = vec![format!(
        "{}: {} (max |S/triangle - 4/3| = {:e})",
        curve.label(),
        verdict_word(verdict),
        c.max_deviation
    )];
    if curve.hypothesis_violated() {
        messages.push(format!(
            "{}: curve is not C^3; condition C {} on the tested samples, classification withheld",
            curve.label(),
            if c.within_tolerance { "holds" } else { "fails" }
        ));
    }
    let body = match cfg.format {
        Format::Json => to_json(&AnalyzeReport {
            config: cfg,
            curve: curve.label().to_string(),
            hypothesis_violated: curve.hypothesis_violated(),
            convexity,
            h_max: table,
            verdict,
            worst_ratio_deviation: c.max_deviation,
            classification,
        }),
        Format::Csv => {
            let rows: Vec<Vec<String>> = c
                .samples
                .iter()
                .map(|s| {
                    let hm = table.iter().find(|r| r.param == s.param).map(|r| r.h_max);
                    vec![
                        format_f64(s.param),
                        format_f64(s.location.x),
                        format_f64(s.location.y),
                        format_opt(hm),
                        format_f64(s.height),
                        format_f64(s.length),
                        format_f64(s.area),
                        format_f64(s.triangle),
                        format_f64(s.value),
                        format_f64((s.value - ARCHIMEDES_RATIO).abs()),
                    ]
                })
                .collect();
            to_csv(
                &[
                    "param", "x", "y", "h_max", "h", "L", "S", "triangle", "ratio", "abs_dev",
                ],
                &rows,
            )
        }
    };
    Ok(Outcome {
        body,
        exit,
        messages,
    })
}

fn verdict_word(v: ParabolaVerdict) -> &'static str {
    match v {
        ParabolaVerdict::Parabola => "parabola",
        ParabolaVerdict::NotParabola => "not a parabola",
        ParabolaVerdict::Withheld => "classification withheld",
    }
}

#[derive(Debug, Serialize)]
pub struct CurvatureRow {
    pub h: f64,
    pub length: f64,
    pub length_over_sqrt_h: f64,
    pub kappa_hat: f64,
    pub analytic: Option<f64>,
    pub abs_err: Option<f64>,
}

#[derive(Debug, Serialize)]
pub struct CurvatureReport<'a> {
    pub config: &'a RunConfig,
    pub curve: String,
    pub rows: Vec<CurvatureRow>,
    pub raw_error_decreasing: Option<bool>,
    pub estimate: CurvatureEstimate,
}

/// Default point: the origin for graphs whose domain contains it, else the
/// domain midpoint; three quarters of the way round for closed curves (the
/// bottom of an ellipse).
pub fn default_point(curve: &Curve) -> f64 {
    if curve.is_closed() {
        return curve.parameter_domain().lerp(0.75);
    }
    let usable = curve.usable_domain();
    if usable.contains(0.0) {
        0.0
    } else {
        usable.mid()
    }
}

fn curvature(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let curve = cfg.curve.build()?;
    let t = cfg.point.unwrap_or_else(|| default_point(&curve));
    let p = curve.point(t)?;
    let h0 = match cfg.h0 {
        Some(h) => h,
        None => default_initial_height(&curve, &p)?,
    };
    let levels = cfg
        .levels
        .unwrap_or(archimedes_core::curvature::DEFAULT_LEVELS);
    let est = extrapolate_curvature(&curve, &p, h0, levels)?;
    let resolved = RunConfig {
        point: Some(t),
        h0: Some(h0),
        levels: Some(levels),
        ..cfg.clone()
    };
    let rows: Vec<CurvatureRow> = est
        .h_grid
        .iter()
        .zip(&est.lengths)
        .zip(&est.raw)
        .map(|((&h, &l), &k)| CurvatureRow {
            h,
            length: l,
            length_over_sqrt_h: l / h.sqrt(),
            kappa_hat: k,
            analytic: est.analytic,
            abs_err: est.analytic.map(|a| (k - a).abs()),
        })
        .collect();
    let mut messages = vec![format!(
        "{} at {t}: extrapolated curvature {:e}{}",
        curve.label(),
        est.extrapolated,
        est.rel_error
            .map(|r| format!(" (relative error {r:e})"))
            .unwrap_or_default()
    )];
    if est.hypothesis_violated {
        messages.push(format!(
            "{}: curve is not C^3; the limit need not be the curvature",
            curve.label()
        ));
    }
    let body = match cfg.format {
        Format::Json => to_json(&CurvatureReport {
            config: &resolved,
            curve: curve.label().to_string(),
            raw_error_decreasing: est.raw_error_decreasing(),
            rows,
            estimate: est,
        }),
        Format::Csv => {
            let records: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    vec![
                        format_f64(r.h),
                        format_f64(r.length),
                        format_f64(r.length_over_sqrt_h),
                        format_f64(r.kappa_hat),
                        format_opt(r.analytic),
                        format_opt(r.abs_err),
                    ]
                })
                .collect();
            let mut s = to_csv(
                &["h", "L", "L/sqrt(h)", "kappa_hat", "analytic", "abs_err"],
                &records,
            );
            s.push_str(&format!(
                "# extrapolated={},fitted_order={},analytic={},rel_error={},hypothesis_violated={}\n",
                format_f64(est.extrapolated),
                format_opt(est.fitted_order),
                format_opt(est.analytic),
                format_opt(est.rel_error),
                est.hypothesis_violated
            ));
            s
        }
    };
    Ok(Outcome {
        body,
        exit: EXIT_OK,
        messages,
    })
}

#[derive(Debug, Serialize)]
pub struct CheckReport<'a> {
    pub config: &'a RunConfig,
    pub report: ConditionReport,
}

fn check(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let condition = cfg
        .condition
        .ok_or_else(|| CliError::Usage("--condition is required".into()))?;
    let curve = cfg.curve.build()?;
    if condition.needs_graph() && curve.as_graph().is_none() {
        return Err(CliError::Usage(format!(
            "condition {condition} needs a graph curve, `{}` is parametric",
            curve.label()
        )));
    }
    let k = match (condition, cfg.k) {
        (Condition::B, Some(k)) => Some(k),
        (Condition::B, None) => Some(default_offset(curve.as_graph().expect("checked above"))),
        _ => None,
    };
    let report = check_condition(&curve, condition, k, cfg.sampling)?;
    let resolved = RunConfig { k, ..cfg.clone() };
    let exit = match report.verdict {
        Verdict::Satisfied => EXIT_OK,
        Verdict::Violated => EXIT_VIOLATED,
        Verdict::HypothesisViolated => EXIT_HYPOTHESIS,
    };
    let messages = vec![format!(
        "{}: condition {condition} {:?} (max deviation {:e}, tolerance {:e})",
        curve.label(),
        report.verdict,
        report.max_deviation,
        report.tolerance
    )];
    let body = match cfg.format {
        Format::Json => to_json(&CheckReport {
            config: &resolved,
            report,
        }),
        Format::Csv if report.fits.is_empty() => {
            let rows: Vec<Vec<String>> = report
                .samples
                .iter()
                .map(|s| {
                    vec![
                        format_f64(s.param),
                        format_f64(s.location.x),
                        format_f64(s.location.y),
                        format_f64(s.height),
                        format_f64(s.length),
                        format_f64(s.area),
                        format_f64(s.triangle),
                        format_opt(s.pv),
                        format_f64(s.value),
                    ]
                })
                .collect();
            to_csv(
                &["param", "x", "y", "h", "L", "S", "triangle", "PV", "value"],
                &rows,
            )
        }
        Format::Csv => {
            let rows: Vec<Vec<String>> = report
                .fits
                .iter()
                .map(|f| {
                    vec![
                        format_f64(f.param),
                        format_f64(f.location.x),
                        format_f64(f.location.y),
                        format_f64(f.h_max),
                        format_f64(f.fit.coefficient),
                        format_f64(f.fit.exponent),
                        format_f64(f.fit.residual_rms),
                    ]
                })
                .collect();
            to_csv(
                &["param", "x", "y", "h_max", "a", "b", "residual_rms"],
                &rows,
            )
        }
    };
    Ok(Outcome {
        body,
        exit,
        messages,
    })
}

#[derive(Debug, Serialize)]
pub struct FamiliesReport<'a> {
    pub config: &'a RunConfig,
    pub report: FamilyReport,
}

/// Abscissae used by `families`.
pub const FAMILY_SAMPLES: usize = 20;

fn families(cfg: &RunConfig) -> Result<Outcome, CliError> {
    if cfg.format == Format::Csv {
        return Err(CliError::Usage("the families report is JSON only".into()));
    }
    let params = cfg.curve.family_params().ok_or_else(|| {
        CliError::Usage("families needs a family curve, e.g. builtin:family:b=1,c=0.5".into())
    })?;
    let params = FamilyParams::new(params.b, params.c)?;
    let report = verify_family(params, FAMILY_SAMPLES)?;
    let exit = if report.passed {
        EXIT_OK
    } else {
        EXIT_VIOLATED
    };
    let messages = vec![if report.passed {
        format!("family(b={}, c={}): all checks pass", params.b, params.c)
    } else {
        format!(
            "family(b={}, c={}): failed {}",
            params.b,
            params.c,
            report.failures.join(", ")
        )
    }];
    Ok(Outcome {
        body: to_json(&FamiliesReport {
            config: cfg,
            report,
        }),
        exit,
        messages,
    })
}
