//! Rigorous error bounds for the kernel-sum estimates.

use super::{integer_value, KernelParams};
use crate::error::{domain, Result};
use crate::mangoldt::mangoldt;
use std::f64::consts::PI;

fn check_height(height: f64) -> Result<()> {
    if !(height >= 2.0) || !height.is_finite() {
        return Err(domain(format!(
            "truncation height must be ≥ 2, got {height}"
        )));
    }
    Ok(())
}

/// Contribution `F(t)` of the prime powers at `⌊t⌋` and `⌊t⌋ + 1` that is
/// not already `Λ(t)`. The `⌊t⌋` term is dropped for integer `t`.
pub fn nearby_prime_power_term(t: f64, x: f64) -> Result<f64> {
    if !(t > 1.0) || !t.is_finite() {
        return Err(domain(format!("t must be a finite real > 1, got {t}")));
    }
    let c2 = KernelParams::new(x, 2.0)?.cos_half_sq();
    let floor = t.floor();
    let frac = t - floor;
    let lead = 4.0 * t * t.sqrt() * c2;
    let lower = if frac == 0.0 {
        0.0
    } else {
        lead * mangoldt(floor as u64)? * floor.sqrt() / (frac * frac + 4.0 * t * floor * c2)
    };
    let next = floor + 1.0;
    let upper = lead * mangoldt(next as u64)? * next.sqrt()
        / ((1.0 - frac) * (1.0 - frac) + 4.0 * t * next * c2);
    Ok(lower + upper)
}

/// Upper bound on `(−4π√t cot(x/2) Σ_γ … + 4π√t g(x,t) cot(x/2)) − Λ(t)`,
/// which is also known to be positive.
///
/// Integer `t ≥ 2`: `4cos²(x/2)(4t² log t + π²t/2 + ¼ log t + 0.6)`.
/// Non-integer `t > 2`: `F(t) + 4cos²(x/2)(3t² log t + π²t/2 + ¼ log t + 0.6)`.
pub fn theorem_bound(t: f64, x: f64) -> Result<f64> {
    let c2 = KernelParams::new(x, 2.0)?.cos_half_sq();
    let log_t = t.ln();
    let tail = PI * PI / 2.0 * t + 0.25 * log_t + 0.6;
    match integer_value(t) {
        Some(n) if n >= 2 => Ok(4.0 * c2 * (4.0 * t * t * log_t + tail)),
        _ if t > 2.0 && t.is_finite() => {
            Ok(nearby_prime_power_term(t, x)? + 4.0 * c2 * (3.0 * t * t * log_t + tail))
        }
        _ => Err(domain(format!(
            "the bound is established for integer t ≥ 2 and real t > 2, got {t}"
        ))),
    }
}

/// `|Σ_{γ≥T} …| < 3√t (2 + log T)/T` at `cot(x/2) = log T/T`.
pub fn tail_bound(t: f64, height: f64) -> Result<f64> {
    if !(t > 1.0) || !t.is_finite() {
        return Err(domain(format!("t must be a finite real > 1, got {t}")));
    }
    check_height(height)?;
    Ok(3.0 * t.sqrt() * (2.0 + height.ln()) / height)
}

/// `45 t^{3/2}/log t · log²T/T²`, the contour-integral tail bound for
/// integer `t ≥ 2`.
pub fn tail_bound_alt(t: u64, height: f64) -> Result<f64> {
    if t < 2 {
        return Err(domain(format!("integer t ≥ 2 required, got {t}")));
    }
    check_height(height)?;
    let tf = t as f64;
    let l = height.ln();
    Ok(45.0 * tf.powf(1.5) / tf.ln() * l * l / (height * height))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TailBoundKind {
    /// [`tail_bound`]
    ZeroDensity,
    /// [`tail_bound_alt`]
    Contour,
}

/// The smaller of the two tail bounds at integer `t`, with its value.
pub fn tighter_tail_bound(t: u64, height: f64) -> Result<(TailBoundKind, f64)> {
    let density = tail_bound(t as f64, height)?;
    let contour = tail_bound_alt(t, height)?;
    Ok(if contour < density {
        (TailBoundKind::Contour, contour)
    } else {
        (TailBoundKind::ZeroDensity, density)
    })
}

/// `4(4t² log t + π²t/2 + 3πt + ¼ log t + 0.6) log²T/T² + 24πt log T/T²`,
/// the full error budget of the truncated estimate at integer `t ≥ 2`.
pub fn total_bound_integer(t: u64, height: f64) -> Result<f64> {
    if t < 2 {
        return Err(domain(format!("integer t ≥ 2 required, got {t}")));
    }
    check_height(height)?;
    let tf = t as f64;
    let lt = tf.ln();
    let l = height.ln();
    let h2 = height * height;
    Ok(
        4.0 * (4.0 * tf * tf * lt + PI * PI / 2.0 * tf + 3.0 * PI * tf + 0.25 * lt + 0.6) * l * l
            / h2
            + 24.0 * PI * tf * l / h2,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tail_bound_values() {
        let b = tail_bound(4.0, 100.0).unwrap();
        assert!((b - 6.0 * (2.0 + 100f64.ln()) / 100.0).abs() < 1e-15);
        assert!((b - 0.39631).abs() < 1e-5);
        let mut h = 2.0;
        while h < 1e6 {
            assert!(tail_bound(3.0, 2.0 * h).unwrap() < tail_bound(3.0, h).unwrap());
            h *= 2.0;
        }
        assert!(tail_bound(1.0, 10.0).is_err());
        assert!(tail_bound(2.0, 1.5).is_err());
    }

    #[test]
    fn alternative_tail_bound() {
        let expected = 45.0 * (2.0 * 2f64.sqrt() / 2f64.ln()) * (1e3f64.ln().powi(2) / 1e6);
        let b = tail_bound_alt(2, 1e3).unwrap();
        assert!((b - expected).abs() < 1e-15);
        assert!((b - 0.00876).abs() < 1e-5);
        assert!(tail_bound_alt(2, 1e12).unwrap() < 2e-19);
        assert!(tail_bound_alt(1, 10.0).is_err());
        assert_eq!(
            tighter_tail_bound(2, 1e3).unwrap().0,
            TailBoundKind::Contour
        );
        // at small heights the density bound wins
        assert_eq!(
            tighter_tail_bound(50, 10.0).unwrap().0,
            TailBoundKind::ZeroDensity
        );
    }

    #[test]
    fn total_bound_at_two() {
        let l = 1e3f64.ln();
        let ln2 = 2f64.ln();
        let expected = 4.0 * (16.0 * ln2 + PI * PI + 6.0 * PI + 0.25 * ln2 + 0.6) * l * l / 1e6
            + 48.0 * PI * l / 1e6;
        let b = total_bound_integer(2, 1e3).unwrap();
        assert!((b - expected).abs() < 1e-15);
        // component check against the rounded hand arithmetic
        let hand = 4.0 * (11.090 + 9.870 + 18.850 + 0.173 + 0.6) * 4.7717e-5 + 1.0415e-3;
        assert!((b - hand).abs() / b < 1e-3);
    }

    #[test]
    fn total_bound_decreasing() {
        for t in [2u64, 7, 100] {
            let mut h = 8.0;
            while h < 1e5 {
                assert!(
                    total_bound_integer(t, h * 1.1).unwrap() < total_bound_integer(t, h).unwrap()
                );
                h *= 1.1;
            }
        }
    }

    #[test]
    fn nearby_terms() {
        let x = 1.0;
        let c2 = (0.5f64).cos().powi(2);
        // integer t: only the ⌊t⌋ + 1 term survives
        let t = 4.0f64;
        let only_next =
            4.0 * t * t.sqrt() * c2 * 5f64.ln() * 5f64.sqrt() / (1.0 + 4.0 * t * 5.0 * c2);
        assert!((nearby_prime_power_term(t, x).unwrap() - only_next).abs() < 1e-13);

        let (t, x) = (2.5f64, std::f64::consts::FRAC_PI_2);
        let c2 = 0.5;
        let lead = 4.0 * t * t.sqrt() * c2;
        let lower = lead * 2f64.ln() * 2f64.sqrt() / (0.25 + 4.0 * t * 2.0 * c2);
        let upper = lead * 3f64.ln() * 3f64.sqrt() / (0.25 + 4.0 * t * 3.0 * c2);
        assert!((nearby_prime_power_term(t, x).unwrap() - (lower + upper)).abs() < 1e-13);
    }

    #[test]
    fn theorem_bound_branches() {
        let x = 3.0;
        let c2 = (1.5f64).cos().powi(2);
        let t = 2.0f64;
        let integer = 4.0 * c2 * (4.0 * t * t * t.ln() + PI * PI / 2.0 * t + 0.25 * t.ln() + 0.6);
        assert!((theorem_bound(2.0, x).unwrap() - integer).abs() < 1e-13);
        let t = 2.5f64;
        let non_integer = nearby_prime_power_term(t, x).unwrap()
            + 4.0 * c2 * (3.0 * t * t * t.ln() + PI * PI / 2.0 * t + 0.25 * t.ln() + 0.6);
        assert!((theorem_bound(t, x).unwrap() - non_integer).abs() < 1e-13);
        assert!(theorem_bound(1.5, x).is_err());
        assert!(theorem_bound(2.0, PI).is_err());
    }
}
