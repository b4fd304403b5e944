//! Closed-form solutions for fields along z.

use serde::Serialize;

use super::{Sign, SpinState};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum RotationModel {
    /// `ṡ = ω × s`, counter-clockwise about +z.
    Standard,
    /// `ṡ = −ω × s`, clockwise about +z.
    Na,
}

/// Rotation of `s0` about z at angular velocity `omega_z`; `s_z` is constant.
pub fn analytic_rotation(s0: &SpinState, omega_z: f64, t: f64, model: RotationModel) -> SpinState {
    let (sin, cos) = (omega_z * t).sin_cos();
    let [x0, y0, z0] = s0.s;
    let s = match model {
        RotationModel::Standard => [x0 * cos - y0 * sin, x0 * sin + y0 * cos, z0],
        RotationModel::Na => [x0 * cos + y0 * sin, -x0 * sin + y0 * cos, z0],
    };
    SpinState::new(s)
}

/// `(s_x(t), l_y(t))` for `ṡ_x = n₁ω₁ l_y`, `l̇_y = n₂ω₂ s_x`.
///
/// With `a = n₁ω₁`, `b = n₂ω₂`: hyperbolic at rate `√(ab)` when `ab > 0`,
/// oscillatory at `√(−ab)` when `ab < 0`, linear when `ab = 0`. The growing
/// mode alone is `s_x = l_y·√(a/b) ∝ e^{t√(ab)}`.
pub fn analytic_extended(
    s0x: f64,
    l0y: f64,
    omega1: f64,
    omega2: f64,
    n1: Sign,
    n2: Sign,
    t: f64,
) -> (f64, f64) {
    let a = n1.value() * omega1;
    let b = n2.value() * omega2;
    let ab = a * b;
    if ab > 0.0 {
        let r = ab.sqrt();
        let (c, s) = ((r * t).cosh(), (r * t).sinh());
        (s0x * c + a * l0y / r * s, l0y * c + b * s0x / r * s)
    } else if ab < 0.0 {
        let r = (-ab).sqrt();
        let (s, c) = (r * t).sin_cos();
        (s0x * c + a * l0y / r * s, l0y * c + b * s0x / r * s)
    } else {
        (s0x + a * l0y * t, l0y + b * s0x * t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    #[test]
    fn na_matches_printed_form_when_amplitudes_agree() {
        // s_x = A sin ωt, s_y = A cos ωt solves ṡ_x = ω s_y, ṡ_y = −ω s_x
        let (a, w) = (0.8, 1.3);
        let s0 = SpinState::new([0.0, a, 0.0]);
        for t in [0.0, 0.4, 1.7, 5.0] {
            let s = analytic_rotation(&s0, w, t, RotationModel::Na).s;
            assert!((s[0] - a * (w * t).sin()).abs() < 1e-14);
            assert!((s[1] - a * (w * t).cos()).abs() < 1e-14);
        }
    }

    #[test]
    fn identity_at_t0() {
        let s0 = SpinState::new([0.3, -0.2, 0.9]);
        for m in [RotationModel::Standard, RotationModel::Na] {
            assert_eq!(analytic_rotation(&s0, 2.0, 0.0, m), s0);
        }
        assert_eq!(analytic_extended(0.4, -1.2, 1.0, 2.0, Sign::Plus, Sign::Minus, 0.0), (0.4, -1.2));
    }

    #[test]
    fn opposite_handedness_at_quarter_turn() {
        let s0 = SpinState::new([1.0, 0.0, 0.0]);
        let na = analytic_rotation(&s0, 1.0, FRAC_PI_2, RotationModel::Na).s;
        let st = analytic_rotation(&s0, 1.0, FRAC_PI_2, RotationModel::Standard).s;
        assert!((na[1] + 1.0).abs() < 1e-15);
        assert!((st[1] - 1.0).abs() < 1e-15);
    }

    #[test]
    fn growing_mode() {
        for t in [0.0, 0.5, 2.0, 4.0] {
            let (sx, ly) = analytic_extended(1.0, 1.0, 1.0, 1.0, Sign::Plus, Sign::Plus, t);
            assert!((sx / t.exp() - 1.0).abs() < 1e-14);
            assert!((ly / t.exp() - 1.0).abs() < 1e-14);
        }
        // s0x = l0y·√(ω₁/ω₂) selects the pure growing branch for unequal fields
        let (w1, w2): (f64, f64) = (2.0, 0.5);
        let (sx, _) = analytic_extended((w1 / w2).sqrt(), 1.0, w1, w2, Sign::Plus, Sign::Plus, 1.5);
        assert!((sx - (w1 / w2).sqrt() * (1.5 * (w1 * w2).sqrt()).exp()).abs() < 1e-12);
    }

    #[test]
    fn oscillating_mode() {
        for t in [0.0, 0.7, 3.0] {
            let (sx, ly) = analytic_extended(1.0, 0.0, 1.0, 1.0, Sign::Plus, Sign::Minus, t);
            assert!((sx - t.cos()).abs() < 1e-15);
            assert!((ly + t.sin()).abs() < 1e-15);
        }
    }

    #[test]
    fn solves_the_system_by_finite_differences() {
        let h = 1e-5;
        for (n1, n2) in [(Sign::Plus, Sign::Plus), (Sign::Minus, Sign::Plus), (Sign::Plus, Sign::Minus)] {
            let (w1, w2, s0, l0) = (0.7, 1.9, 0.3, -0.6);
            let f = |t| analytic_extended(s0, l0, w1, w2, n1, n2, t);
            let t = 0.8;
            let (sp, lp) = f(t + h);
            let (sm, lm) = f(t - h);
            let (sx, ly) = f(t);
            assert!(((sp - sm) / (2.0 * h) - n1.value() * w1 * ly).abs() < 1e-8);
            assert!(((lp - lm) / (2.0 * h) - n2.value() * w2 * sx).abs() < 1e-8);
        }
    }
}
