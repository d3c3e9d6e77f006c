// Copyright 2026 the Archimedes Authors
// SPDX-License-Identifier: Apache-2.0

use core::fmt;

/// Errors raised by curve construction and chord computations.
#[derive(Debug, Clone, PartialEq)]
#[non_exhaustive]
pub enum Error {
    /// A constructor or operation argument is outside its admissible range.
    InvalidParameter {
        name: &'static str,
        reason: &'static str,
    },
    /// The parameter lies outside the usable part of the curve's domain.
    OutsideDomain { param: f64 },
    /// A point handed in does not lie on the curve.
    OffCurve,
    /// Analytic derivatives are required but the curve has none.
    MissingDerivative,
    /// The curvature vanishes (or is not finite) where a strictly convex
    /// point was required.
    NotStrictlyConvex { param: f64 },
    /// The tangent-parallel chord at this height does not exist inside the
    /// curve's domain.
    HeightOutOfRange { height: f64 },
    /// The height is below the resolvable floor; use the small-height
    /// asymptote instead.
    HeightBelowFloor { height: f64, floor: f64 },
    /// A root finder was handed an interval without a sign change, or with
    /// more than one.
    NotBracketed,
    /// An iterative method ran out of iterations.
    NoConvergence { what: &'static str },
    /// Adaptive quadrature hit its depth cap without meeting the tolerance.
    Quadrature { estimate: f64, error: f64 },
    /// The operation needs a graph curve.
    NotAGraph,
    /// A local chart has an empty range on one side of its origin.
    DegenerateChart,
    /// A chart function does not satisfy `f(0) = f'(0) = 0`.
    NotAnchored,
    /// A least-squares design matrix is rank deficient.
    DegenerateFit,
}

pub type Result<T, E = Error> = core::result::Result<T, E>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidParameter { name, reason } => {
                write!(f, "invalid parameter `{name}`: {reason}")
            }
            Error::OutsideDomain { param } => {
                write!(f, "parameter {param} is outside the usable domain")
            }
            Error::OffCurve => f.write_str("point does not lie on the curve"),
            Error::MissingDerivative => {
                f.write_str("analytic derivatives are not available for this curve")
            }
            Error::NotStrictlyConvex { param } => {
                write!(f, "curvature vanishes at parameter {param}")
            }
            Error::HeightOutOfRange { height } => {
                write!(
                    f,
                    "no tangent-parallel chord at height {height} inside the domain"
                )
            }
            Error::HeightBelowFloor { height, floor } => {
                write!(f, "height {height} is below the resolvable floor {floor}")
            }
            Error::NotBracketed => f.write_str("interval does not bracket a single root"),
            Error::NoConvergence { what } => write!(f, "{what} did not converge"),
            Error::Quadrature { estimate, error } => write!(
                f,
                "quadrature tolerance not met (estimate {estimate}, error {error})"
            ),
            Error::NotAGraph => f.write_str("operation requires a graph curve"),
            Error::DegenerateChart => f.write_str("local chart has an empty range"),
            Error::NotAnchored => f.write_str("chart function must satisfy f(0) = f'(0) = 0"),
            Error::DegenerateFit => f.write_str("least-squares design is rank deficient"),
        }
    }
}

impl core::error::Error for Error {}
