//! Riemann–Siegel phase `θ(t)` and Hardy's `Z(t)`.

use super::rs_coeffs::{C0, C1, C2, C3, C4};
use crate::error::{domain, Result};
use crate::special::{ln_gamma, zeta};
use num_complex::Complex64;
use std::f64::consts::PI;

/// Below this height `Z` is taken from Euler–Maclaurin `ζ`; the
/// Riemann–Siegel remainder with `C₀..C₄` is below `1e-8` above it.
pub const RIEMANN_SIEGEL_MIN_T: f64 = 200.0;

/// Highest `t` the zero finder and `Z` are validated for.
pub const MAX_HEIGHT: f64 = 1e5;

/// `θ(t) = arg Γ(1/4 + it/2) − (t/2) log π`.
///
/// Asymptotic series for `t ≥ 10`, direct log-Γ below.
pub fn riemann_siegel_theta(t: f64) -> Result<f64> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(domain(format!("θ(t) needs finite t > 0, got {t}")));
    }
    Ok(theta(t))
}

pub(crate) fn theta(t: f64) -> f64 {
    if t >= 10.0 {
        theta_asymptotic(t)
    } else {
        theta_log_gamma(t)
    }
}

fn theta_asymptotic(t: f64) -> f64 {
    let r = t.recip();
    let r2 = r * r;
    let tail = r
        * (1.0 / 48.0
            + r2 * (7.0 / 5760.0
                + r2 * (31.0 / 80640.0 + r2 * (127.0 / 430080.0 + r2 * (511.0 / 1216512.0)))));
    0.5 * t * (t / (2.0 * PI)).ln() - 0.5 * t - PI / 8.0 + tail
}

pub(crate) fn theta_log_gamma(t: f64) -> f64 {
    ln_gamma(Complex64::new(0.25, 0.5 * t)).im - 0.5 * t * PI.ln()
}

/// `θ'(t)`, accurate enough for Newton steps on Gram points.
pub(crate) fn theta_derivative(t: f64) -> f64 {
    0.5 * (t / (2.0 * PI)).ln() + 1.0 / (48.0 * t * t)
}

/// Hardy's `Z(t) = e^{iθ(t)} ζ(1/2 + it)`, real for real `t`.
pub fn hardy_z(t: f64) -> Result<f64> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(domain(format!("Z(t) needs finite t > 0, got {t}")));
    }
    Ok(z_unchecked(t))
}

pub(crate) fn z_unchecked(t: f64) -> f64 {
    if t < RIEMANN_SIEGEL_MIN_T {
        z_euler_maclaurin(t)
    } else {
        z_riemann_siegel(t)
    }
}

fn z_euler_maclaurin(t: f64) -> f64 {
    let phase = Complex64::from_polar(1.0, theta(t));
    (phase * zeta(Complex64::new(0.5, t))).re
}

fn horner(coeffs: &[f64], z: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, c| acc * z + c)
}

/// Main sum `2 Σ_{n ≤ a} n^{-1/2} cos(θ − t log n)`, `a = √(t/2π)`, plus the
/// remainder `(−1)^{N−1} a^{-1/2} Σ_k C_k(p) a^{-k}`.
pub(crate) fn z_riemann_siegel(t: f64) -> f64 {
    let th = theta(t);
    let a = (t / (2.0 * PI)).sqrt();
    let n = a.floor() as u64;
    let main: f64 = (1..=n)
        .map(|k| {
            let kf = k as f64;
            (th - t * kf.ln()).cos() / kf.sqrt()
        })
        .sum();
    let z = 2.0 * (a - n as f64) - 1.0;
    let inv_a = a.recip();
    let series: [&[f64]; 5] = [&C0, &C1, &C2, &C3, &C4];
    let remainder = series
        .iter()
        .rev()
        .fold(0.0, |acc, c| acc * inv_a + horner(c, z));
    let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
    2.0 * main + sign * inv_a.sqrt() * remainder
}
