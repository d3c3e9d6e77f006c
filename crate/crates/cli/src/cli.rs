// Copyright 2026 the Archimedes Authors
// SPDX-License-Identifier: Apache-2.0

//! Flag parsing and the resolved run configuration.

use archimedes_core::conditions::{Condition, Sampling};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::spec::{self, CurveSpec};
use crate::CliError;

/// Reserved for seeding randomized sampling; all sampling is currently
/// deterministic and the variable is ignored.
pub const SEED_ENV: &str = "ARCHIMEDES_SEED";

#[derive(Debug, Parser)]
#[command(
    name = "archimedes",
    version,
    about = "Chord areas, chord curvature and parabola tests for convex curves"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Convexity, h_max table and the parabola test (condition C).
    Analyze(CommonArgs),
    /// Chord-curvature convergence table at one point.
    Curvature {
        #[command(flatten)]
        common: CommonArgs,
        /// Parameter of the point: abscissa for graphs, t for parametric curves.
        #[arg(long, allow_hyphen_values = true)]
        point: Option<f64>,
        /// Largest height of the grid h0 4^-j.
        #[arg(long)]
        h0: Option<f64>,
        /// Number of grid levels (at least 4).
        #[arg(long, default_value_t = archimedes_core::curvature::DEFAULT_LEVELS)]
        levels: usize,
    },
    /// Check one of the area conditions A-E.
    Check {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long, value_parser = parse_condition)]
        condition: Condition,
        /// Vertical offset for condition B.
        #[arg(long)]
        k: Option<f64>,
    },
    /// Closed-form checks on a family member (default b=1, c=1/2).
    Families(CommonArgs),
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// `builtin:NAME[:key=value,...]` or a path to a JSON curve spec.
    #[arg(long)]
    pub curve: Option<String>,
    /// Number of sample points along the curve.
    #[arg(long, default_value_t = Sampling::default().n_points)]
    pub points: usize,
    /// Number of heights per sample point.
    #[arg(long, default_value_t = Sampling::default().n_heights)]
    pub heights: usize,
    /// Verdict tolerance on dimensionless deviations.
    #[arg(long, default_value_t = Sampling::default().tolerance)]
    pub tol: f64,
    /// Write the report here instead of standard output.
    #[arg(long)]
    pub out: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

fn parse_condition(s: &str) -> Result<Condition, String> {
    s.parse::<Condition>().map_err(|e| e.to_string())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CommandName {
    Analyze,
    Curvature,
    Check,
    Families,
}

/// Everything a run depends on, with defaults filled in. Embedded in every
/// report.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunConfig {
    pub command: CommandName,
    pub curve: CurveSpec,
    pub condition: Option<Condition>,
    pub point: Option<f64>,
    pub h0: Option<f64>,
    pub levels: Option<usize>,
    pub k: Option<f64>,
    pub sampling: Sampling,
    pub format: Format,
    pub out: Option<String>,
}

fn positive(name: &str, v: f64) -> Result<(), CliError> {
    if v > 0.0 && v.is_finite() {
        Ok(())
    } else {
        Err(CliError::Usage(format!(
            "--{name} must be positive and finite, got {v}"
        )))
    }
}

impl Cli {
    /// Validate flags and resolve the curve spec.
    pub fn into_config(self) -> Result<RunConfig, CliError> {
        let (name, common) = match &self.command {
            Command::Analyze(c) => (CommandName::Analyze, c),
            Command::Curvature { common, .. } => (CommandName::Curvature, common),
            Command::Check { common, .. } => (CommandName::Check, common),
            Command::Families(c) => (CommandName::Families, c),
        };
        let curve = match (&common.curve, name) {
            (Some(arg), _) => spec::resolve(arg)?,
            (None, CommandName::Families) => CurveSpec::Family { b: 1.0, c: 0.5 },
            (None, _) => return Err(CliError::Usage("--curve is required".into())),
        };
        positive("tol", common.tol)?;
        if common.points < 1 {
            return Err(CliError::Usage("--points must be at least 1".into()));
        }
        if common.heights < 2 {
            return Err(CliError::Usage("--heights must be at least 2".into()));
        }
        let sampling = Sampling {
            n_points: common.points,
            n_heights: common.heights,
            tolerance: common.tol,
            ..Sampling::default()
        };
        let mut cfg = RunConfig {
            command: name,
            curve,
            condition: None,
            point: None,
            h0: None,
            levels: None,
            k: None,
            sampling,
            format: common.format,
            out: common.out.clone(),
        };
        match self.command {
            Command::Curvature {
                point, h0, levels, ..
            } => {
                if let Some(h) = h0 {
                    positive("h0", h)?;
                }
                if levels < 4 {
                    return Err(CliError::Usage("--levels must be at least 4".into()));
                }
                if let Some(p) = point {
                    if !p.is_finite() {
                        return Err(CliError::Usage("--point must be finite".into()));
                    }
                }
                cfg.point = point;
                cfg.h0 = h0;
                cfg.levels = Some(levels);
            }
            Command::Check { condition, k, .. } => {
                if let Some(k) = k {
                    positive("k", k)?;
                }
                cfg.condition = Some(condition);
                cfg.k = k;
            }
            Command::Analyze(_) | Command::Families(_) => {}
        }
        Ok(cfg)
    }
}
