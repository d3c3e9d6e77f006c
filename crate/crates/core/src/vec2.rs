// Copyright 2026 the Archimedes Authors
// SPDX-License-Identifier: Apache-2.0

use core::ops::{Add, AddAssign, Mul, Neg, Sub};

/// A point or displacement in the plane.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Vec2 {
    pub x: f64,
    pub y: f64,
}

impl Vec2 {
    pub const ZERO: Vec2 = Vec2 { x: 0.0, y: 0.0 };

    #[inline]
    pub const fn new(x: f64, y: f64) -> Self {
        Vec2 { x, y }
    }

    #[inline]
    pub fn dot(self, other: Vec2) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the 3D cross product.
    #[inline]
    pub fn cross(self, other: Vec2) -> f64 {
        self.x * other.y - self.y * other.x
    }

    #[inline]
    pub fn hypot(self) -> f64 {
        libm::hypot(self.x, self.y)
    }

    #[inline]
    pub fn hypot2(self) -> f64 {
        self.dot(self)
    }

    /// Unit vector in the same direction. Zero stays zero-length NaN; callers
    /// check lengths first.
    #[inline]
    pub fn normalize(self) -> Vec2 {
        self * (1.0 / self.hypot())
    }

    /// Rotate by +90 degrees.
    #[inline]
    pub fn turn_left(self) -> Vec2 {
        Vec2::new(-self.y, self.x)
    }

    /// Rotate by -90 degrees.
    #[inline]
    pub fn turn_right(self) -> Vec2 {
        Vec2::new(self.y, -self.x)
    }

    #[inline]
    pub fn midpoint(self, other: Vec2) -> Vec2 {
        Vec2::new(0.5 * (self.x + other.x), 0.5 * (self.y + other.y))
    }

    #[inline]
    pub fn distance(self, other: Vec2) -> f64 {
        (self - other).hypot()
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl Add for Vec2 {
    type Output = Vec2;
    #[inline]
    fn add(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl AddAssign for Vec2 {
    #[inline]
    fn add_assign(&mut self, rhs: Vec2) {
        self.x += rhs.x;
        self.y += rhs.y;
    }
}

impl Sub for Vec2 {
    type Output = Vec2;
    #[inline]
    fn sub(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Mul<f64> for Vec2 {
    type Output = Vec2;
    #[inline]
    fn mul(self, rhs: f64) -> Vec2 {
        Vec2::new(self.x * rhs, self.y * rhs)
    }
}

impl Mul<Vec2> for f64 {
    type Output = Vec2;
    #[inline]
    fn mul(self, rhs: Vec2) -> Vec2 {
        rhs * self
    }
}

impl Neg for Vec2 {
    type Output = Vec2;
    #[inline]
    fn neg(self) -> Vec2 {
        Vec2::new(-self.x, -self.y)
    }
}

impl From<(f64, f64)> for Vec2 {
    #[inline]
    fn from((x, y): (f64, f64)) -> Self {
        Vec2::new(x, y)
    }
}

/// An affine map of the plane, `p -> M p + t`.
///
/// `linear` is row-major: `[[m00, m01], [m10, m11]]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Affine2 {
    pub linear: [[f64; 2]; 2],
    pub translation: Vec2,
}

impl Affine2 {
    pub const IDENTITY: Affine2 = Affine2 {
        linear: [[1.0, 0.0], [0.0, 1.0]],
        translation: Vec2::ZERO,
    };

    pub fn new(linear: [[f64; 2]; 2], translation: Vec2) -> Self {
        Affine2 {
            linear,
            translation,
        }
    }

    /// Rotation by `angle` radians followed by a translation.
    pub fn rigid(angle: f64, translation: Vec2) -> Self {
        let (s, c) = libm::sincos(angle);
        Affine2::new([[c, -s], [s, c]], translation)
    }

    pub fn determinant(&self) -> f64 {
        let m = &self.linear;
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
    }

    /// Apply the linear part only (for tangent vectors).
    #[inline]
    pub fn apply_linear(&self, v: Vec2) -> Vec2 {
        let m = &self.linear;
        Vec2::new(m[0][0] * v.x + m[0][1] * v.y, m[1][0] * v.x + m[1][1] * v.y)
    }

    #[inline]
    pub fn apply(&self, p: Vec2) -> Vec2 {
        self.apply_linear(p) + self.translation
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cross_and_turns() {
        let e1 = Vec2::new(1.0, 0.0);
        assert_eq!(e1.turn_left(), Vec2::new(0.0, 1.0));
        assert_eq!(e1.turn_right(), Vec2::new(0.0, -1.0));
        assert_eq!(e1.cross(e1.turn_left()), 1.0);
    }

    #[test]
    fn rigid_preserves_lengths() {
        let m = Affine2::rigid(0.7, Vec2::new(3.0, -1.0));
        let a = Vec2::new(1.0, 2.0);
        let b = Vec2::new(-4.0, 0.5);
        assert!((m.apply(a).distance(m.apply(b)) - a.distance(b)).abs() < 1e-14);
        assert!((m.determinant() - 1.0).abs() < 1e-15);
    }
}
