// Copyright 2026 the Archimedes Authors
// SPDX-License-Identifier: Apache-2.0

//! Chord-section calculus for strictly convex plane curves.
//!
//! For a point `P` on a strictly convex curve and a height `h > 0`, the line
//! parallel to the tangent at `P`, shifted by `h` along the convex-side
//! normal, cuts the curve in a chord `AB`. This crate measures everything
//! attached to that configuration:
//!
//! * the chord length `L_P(h)`, the section area `S_P(h)` between arc and
//!   chord, the rectangle `R_P(h) = h L_P(h)` and the triangle `|ABP|`
//!   ([`chord`]);
//! * the chord-based curvature `8h / L_P(h)^2` and its `h -> 0` limit
//!   ([`curvature`]);
//! * the Archimedean area conditions, which hold exactly on parabolas and
//!   fail elsewhere, checked numerically over a sample grid ([`conditions`]);
//! * the closed-form parabola families, conic classification and the
//!   chord identities that pin them down ([`families`]).
//!
//! Curves are described in [`curve`], either as graphs `y = f(x)` or as
//! parametric arcs and ovals.
//!
//! ```
//! use archimedes_core::{chord, curve};
//!
//! let parabola = curve::make_quadratic(1.0, 0.0, 0.0)?;
//! let vertex = parabola.point(0.0)?;
//! let section = chord::chord_at_height(&parabola, &vertex, 1.0)?;
//! assert!((section.length - 2.0).abs() < 1e-12);
//! assert!((section.area / section.triangle - 4.0 / 3.0).abs() < 1e-12);
//! # Ok::<(), archimedes_core::Error>(())
//! ```
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![warn(missing_debug_implementations)]
// `!(x > 0.0)` is used on purpose so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod chord;
pub mod conditions;
pub mod curvature;
pub mod curve;
mod error;
pub mod families;
pub mod numeric;
mod vec2;

pub use error::{Error, Result};
pub use vec2::{Affine2, Vec2};
