// Copyright 2026 the Archimedes Authors
// SPDX-License-Identifier: Apache-2.0

//! Scalar numerical routines shared by the geometry modules.

pub mod diff;
pub mod lsq;
pub mod quadrature;
pub mod roots;

pub use lsq::{fit_power_law, least_squares, LeastSquares, PowerLawFit};
pub use quadrature::{AdaptiveSimpson, Integral};
pub use roots::{brent, golden_section_max, RootOptions};
