// Copyright 2026 the Archimedes Authors
// SPDX-License-Identifier: Apache-2.0

//! The piecewise parabola with a jump in curvature at the origin.

use archimedes_core::chord::{chord_at_height, h_max};
use archimedes_core::conditions::{
    check_condition_c, classify_parabola, ParabolaVerdict, Sampling,
};
use archimedes_core::curve::make_example10;

#[test]
fn one_sided_chords_keep_the_parabola_ratio() {
    let c = make_example10().unwrap();
    for &x0 in &[-1.2, -0.4, 0.3, 1.0, 1.5] {
        let p = c.point(x0).unwrap();
        let hm = h_max(&c, &p).unwrap().h_max;
        for &u in &[1e-4, 1e-3, 1e-2] {
            let chord = chord_at_height(&c, &p, u * hm).unwrap();
            if chord.param_a * chord.param_b <= 0.0 {
                continue;
            }
            let r = chord.archimedes_ratio();
            assert!(
                (r - 4.0 / 3.0).abs() < 1e-9,
                "x0={x0} h={} ratio={r}",
                u * hm
            );
        }
    }
}

#[test]
fn chords_at_the_kink_point_keep_the_ratio() {
    let c = make_example10().unwrap();
    let origin = c.point(0.0).unwrap();
    for &h in &[1e-3, 0.25, 1.0, 4.0] {
        let chord = chord_at_height(&c, &origin, h).unwrap();
        assert!((chord.archimedes_ratio() - 4.0 / 3.0).abs() < 1e-10);
    }
}

#[test]
fn chords_across_the_kink_break_the_ratio() {
    let c = make_example10().unwrap();
    let p = c.point(0.1).unwrap();
    let chord = chord_at_height(&c, &p, 1.0).unwrap();
    assert!(chord.param_a < 0.0 && chord.param_b > 0.0);
    assert!((chord.archimedes_ratio() - 4.0 / 3.0).abs() > 1e-3);
}

#[test]
fn default_grid_crosses_the_kink_and_verdict_is_withheld() {
    let c = make_example10().unwrap();
    let r = check_condition_c(&c, Sampling::default()).unwrap();
    assert!(r.hypothesis_violated);
    assert!(r.max_deviation > 1e-3);
    let worst = r.worst_sample().unwrap();
    assert!(worst.param.abs() < 1.0);
    let cls = classify_parabola(&c, Sampling::default()).unwrap();
    assert_eq!(cls.verdict, ParabolaVerdict::Withheld);
}
