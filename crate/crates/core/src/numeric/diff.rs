// Copyright 2026 the Archimedes Authors
// SPDX-License-Identifier: Apache-2.0

//! Central finite differences, kept strictly inside an open interval.

use crate::Vec2;

const CBRT_EPS: f64 = 6.055_454_452_393_343e-6; // eps^(1/3)
const SIXTH_ROOT_EPS: f64 = 2.460_783_300_575_925_6e-3; // eps^(1/6)

fn step(x: f64, base: f64, reach: f64, lo: f64, hi: f64) -> f64 {
    let mut h = base * x.abs().max(1.0);
    let room = (x - lo).min(hi - x);
    if reach * h >= room {
        h = 0.9 * room / reach;
    }
    // make x + h exactly representable so the stencil is symmetric
    let xp = x + h;
    xp - x
}

/// `f'(x)` by the two-point central difference.
pub fn first_derivative<F: Fn(f64) -> f64>(f: F, x: f64, lo: f64, hi: f64) -> f64 {
    let h = step(x, CBRT_EPS, 1.0, lo, hi);
    (f(x + h) - f(x - h)) / (2.0 * h)
}

/// `f''(x)` by the five-point central difference.
pub fn second_derivative<F: Fn(f64) -> f64>(f: F, x: f64, lo: f64, hi: f64) -> f64 {
    let h = step(x, SIXTH_ROOT_EPS, 2.0, lo, hi);
    let (f2m, f1m, f0, f1p, f2p) = (f(x - 2.0 * h), f(x - h), f(x), f(x + h), f(x + 2.0 * h));
    (-f2p + 16.0 * f1p - 30.0 * f0 + 16.0 * f1m - f2m) / (12.0 * h * h)
}

pub fn first_derivative_vec<F: Fn(f64) -> Vec2>(f: F, t: f64, lo: f64, hi: f64) -> Vec2 {
    let h = step(t, CBRT_EPS, 1.0, lo, hi);
    (f(t + h) - f(t - h)) * (1.0 / (2.0 * h))
}

pub fn second_derivative_vec<F: Fn(f64) -> Vec2>(f: F, t: f64, lo: f64, hi: f64) -> Vec2 {
    let h = step(t, SIXTH_ROOT_EPS, 2.0, lo, hi);
    let sum = f(t + h) * 16.0 + f(t - h) * 16.0 - f(t + 2.0 * h) - f(t - 2.0 * h) - f(t) * 30.0;
    sum * (1.0 / (12.0 * h * h))
}
