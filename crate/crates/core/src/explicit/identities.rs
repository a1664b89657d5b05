//! Numerical checks of the two closed-form identities linking prime powers
//! to the zeros: one on the cut plane `Ω = ℂ \ (−∞, 0]`, one on the strip
//! `|Re z| < π`.
//!
//! Both sides are truncated: the prime series at `n ≤ N`, the zero sum at the
//! table height. The series tail is replaced by its smooth part (`ψ(u) ≈ u`),
//! which takes the residual from `O(log N/√N)` down to the size of the
//! fluctuation `ψ(u) − u`; the a-priori estimates still bound the full tail.

use super::{f_function, h_function, sinh_ratio, ZETA_LOG_DERIVATIVE_HALF};
use crate::error::{domain, out_of_range, Result};
use crate::mangoldt::MangoldtTable;
use crate::summation::CompensatedComplexSum;
use crate::zeros::ZeroTable;
use num_complex::Complex64;
use std::f64::consts::PI;

/// Smallest admissible series cutoff and zero-table height.
pub const MIN_TERMS: usize = 1000;
pub const MIN_HEIGHT: f64 = 1000.0;
/// Margin kept from `|Re z| = π` on the strip.
pub const STRIP_MARGIN: f64 = 0.1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdentityKind {
    CutPlane,
    Strip,
}

/// One identity evaluation.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityReport {
    pub kind: IdentityKind,
    pub z: Complex64,
    /// Truncated prime series plus its smooth tail.
    pub lhs: Complex64,
    pub rhs: Complex64,
    /// `|lhs − rhs|`.
    pub residual: f64,
    /// The same without the smooth tail.
    pub raw_residual: f64,
    pub smooth_tail: Complex64,
    pub series_tail_estimate: f64,
    pub zero_tail_estimate: f64,
    pub terms: usize,
    pub zeros_used: usize,
}

impl IdentityReport {
    pub fn truncation_estimate(&self) -> f64 {
        self.series_tail_estimate + self.zero_tail_estimate
    }

    /// Residual within the truncation estimate, with `1e−8` of slack.
    pub fn passes(&self) -> bool {
        self.residual <= self.truncation_estimate() + 1e-8
    }
}

fn check_inputs(terms: usize, primes: &MangoldtTable, zeros: &ZeroTable) -> Result<()> {
    if terms < MIN_TERMS {
        return Err(domain(format!(
            "series cutoff must be ≥ {MIN_TERMS}, got {terms}"
        )));
    }
    if primes.limit() < terms {
        return Err(out_of_range(format!(
            "Λ table reaches {} but the series needs {terms}",
            primes.limit()
        )));
    }
    if zeros.height() < MIN_HEIGHT {
        return Err(out_of_range(format!(
            "zero table height {} is below the required {MIN_HEIGHT}",
            zeros.height()
        )));
    }
    Ok(())
}

/// `∫_a^∞ c/(√u (u + c)) du = 2√c arctan(√c/√a)`, principal branches, for
/// `c` off the negative axis.
fn smooth_integral(c: Complex64, a: f64) -> Complex64 {
    let s = c.sqrt();
    2.0 * s * (s / a.sqrt()).atan()
}

/// `∫_N^∞ log u · u^{−3/2} du = 2(log N + 2)/√N`.
fn log_tail_integral(n: usize) -> f64 {
    let n = n as f64;
    2.0 * (n.ln() + 2.0) / n.sqrt()
}

/// Geometric scale `2e^{−δT}/(1 − e^{−T})` of the zero-sum tail above `T`
/// when its terms decay like `e^{−δγ}`.
fn zero_tail(delta: f64, height: f64) -> f64 {
    2.0 * (-delta * height).exp() / -(-height).exp_m1()
}

/// `Σ_{n≤N} Λ(n)/(π√n) (z/(z+n) − 1/(1+nz))` against
/// `√z − ζ'(½)/(πζ(½)) − 2Σ_{γ>0} sin(α log z)/sinh(πα) + h(z)`.
pub fn cut_plane_identity(
    z: Complex64,
    terms: usize,
    primes: &MangoldtTable,
    zeros: &ZeroTable,
) -> Result<IdentityReport> {
    let h = h_function(z)?;
    check_inputs(terms, primes, zeros)?;
    let inv = z.inv();
    let lam = primes.values();
    let mut series = CompensatedComplexSum::new();
    for n in (2..=terms).rev() {
        if lam[n] != 0.0 {
            let nf = n as f64;
            let w = lam[n] / (PI * nf.sqrt());
            series.add(w * (z / (z + nf) - inv / (inv + nf)));
        }
    }
    let series = series.value();
    let a = terms as f64 + 0.5;
    let smooth_tail = (smooth_integral(z, a) - smooth_integral(inv, a)) / PI;

    let log_z = z.ln();
    let i = Complex64::i();
    let mut zero_sum = CompensatedComplexSum::new();
    for zero in zeros.zeros().iter().rev() {
        let alpha = zero.alpha();
        // sin(α log z)/sinh(πα) in log space
        let num = (i * alpha * log_z - PI * alpha).exp() - (-i * alpha * log_z - PI * alpha).exp();
        let den = i * (1.0 - (-2.0 * PI * alpha).exp());
        zero_sum.add(num / den);
    }
    let rhs = z.sqrt() - ZETA_LOG_DERIVATIVE_HALF / PI - 2.0 * zero_sum.value() + h;
    let lhs = series + smooth_tail;
    let m = z.norm().max(inv.norm());
    Ok(IdentityReport {
        kind: IdentityKind::CutPlane,
        z,
        lhs,
        rhs,
        residual: (lhs - rhs).norm(),
        raw_residual: (series - rhs).norm(),
        smooth_tail,
        series_tail_estimate: 2.0 / PI * m * log_tail_integral(terms),
        zero_tail_estimate: zero_tail(PI - log_z.im.abs(), zeros.height()),
        terms,
        zeros_used: zeros.len(),
    })
}

/// `Σ_{γ>0} sinh(zα)/sinh(πα) − Σ_{n≤N} Λ(n)/(2π√n) (i e^{iz}/(e^{iz}+n) −
/// i e^{−iz}/(e^{−iz}+n))` against `f(z)`.
pub fn strip_identity(
    z: Complex64,
    terms: usize,
    primes: &MangoldtTable,
    zeros: &ZeroTable,
) -> Result<IdentityReport> {
    if !(z.re.abs() < PI - STRIP_MARGIN) || !z.im.is_finite() {
        return Err(domain(format!(
            "strip identity needs |Re z| < π − {STRIP_MARGIN}, got {z}"
        )));
    }
    let f = f_function(z)?;
    check_inputs(terms, primes, zeros)?;
    let i = Complex64::i();
    let e1 = (i * z).exp();
    let e2 = (-i * z).exp();
    let lam = primes.values();
    let mut series = CompensatedComplexSum::new();
    for n in (2..=terms).rev() {
        if lam[n] != 0.0 {
            let nf = n as f64;
            let w = lam[n] / (2.0 * PI * nf.sqrt());
            series.add(w * i * (e1 / (e1 + nf) - e2 / (e2 + nf)));
        }
    }
    let series = series.value();
    let a = terms as f64 + 0.5;
    let smooth_tail = i / (2.0 * PI) * (smooth_integral(e1, a) - smooth_integral(e2, a));

    let mut zero_sum = CompensatedComplexSum::new();
    for zero in zeros.zeros().iter().rev() {
        zero_sum.add(sinh_ratio(zero.alpha(), z));
    }
    let zero_sum = zero_sum.value();
    let lhs = zero_sum - series - smooth_tail;
    let raw = zero_sum - series;
    let nf = terms as f64;
    let m = e1.norm().max(e2.norm());
    Ok(IdentityReport {
        kind: IdentityKind::Strip,
        z,
        lhs,
        rhs: f,
        residual: (lhs - f).norm(),
        raw_residual: (raw - f).norm(),
        smooth_tail,
        series_tail_estimate: m / PI * log_tail_integral(terms) * nf / (nf - m).max(1.0),
        zero_tail_estimate: zero_tail(PI - z.re.abs(), zeros.height()),
        terms,
        zeros_used: zeros.len(),
    })
}

/// Sample points of `Ω` for the cut-plane identity.
pub fn default_cut_plane_grid() -> Vec<Complex64> {
    [
        (2.0, 0.0),
        (3.0, 0.0),
        (1.0, 1.0),
        (0.5, 0.0),
        (0.5, -0.2),
        (3.0, 1.0),
        (-1.0, 0.5),
        (0.1, 2.0),
    ]
    .into_iter()
    .map(|(re, im)| Complex64::new(re, im))
    .collect()
}

/// Sample points of the strip for the second identity.
pub fn default_strip_grid() -> Vec<Complex64> {
    vec![
        Complex64::new(0.0, 0.0),
        Complex64::new(1.0, 0.0),
        Complex64::new(2.5, -std::f64::consts::LN_2),
        Complex64::new(-1.5, 0.5),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mangoldt::sieve_mangoldt;
    use crate::special::zeta;
    use crate::zeros::{find_zeros, load_zeros};
    use std::sync::OnceLock;

    fn zeros_1000() -> &'static ZeroTable {
        static TABLE: OnceLock<ZeroTable> = OnceLock::new();
        TABLE.get_or_init(|| find_zeros(1000.0).unwrap())
    }

    #[test]
    fn log_derivative_at_half() {
        // ζ'(½) by the trapezoid rule on a circle around ½, which is exact
        // to rounding for an analytic integrand
        let s0 = Complex64::new(0.5, 0.0);
        let (r, m) = (0.25, 64);
        let mut d = Complex64::new(0.0, 0.0);
        for k in 0..m {
            let w = Complex64::from_polar(1.0, 2.0 * PI * k as f64 / m as f64);
            d += zeta(s0 + r * w) / w;
        }
        d /= r * m as f64;
        let ratio = d / zeta(s0);
        assert!(ratio.im.abs() < 1e-12);
        assert!(
            (ratio.re - ZETA_LOG_DERIVATIVE_HALF).abs() < 1e-11,
            "{ratio}"
        );
    }

    #[test]
    fn smooth_integral_matches_quadrature() {
        // substitution u = a/v², v ∈ (0, 1]: ∫ 2c√a / (a + c v²) · v^{-?}… checked
        // against a plain midpoint rule in v with u = a/v²
        let a = 100.5;
        for c in [
            Complex64::new(2.0, 0.0),
            Complex64::new(1.0, 1.0),
            Complex64::new(0.3, -0.7),
        ] {
            let n = 200_000;
            let mut acc = Complex64::new(0.0, 0.0);
            for k in 0..n {
                let v = (k as f64 + 0.5) / n as f64;
                let u = a / (v * v);
                let du = 2.0 * a / (v * v * v);
                acc += c / (u.sqrt() * (u + c)) * du;
            }
            acc /= n as f64;
            assert!((acc - smooth_integral(c, a)).norm() < 1e-8, "{c}");
        }
    }

    #[test]
    fn input_checks() {
        let primes = sieve_mangoldt(2000).unwrap();
        let small = load_zeros(include_str!("../../fixtures/first100.txt").as_bytes()).unwrap();
        let z = Complex64::new(2.0, 0.0);
        assert!(matches!(
            cut_plane_identity(z, 1500, &primes, &small),
            Err(crate::Error::OutOfRange(_))
        ));
        let big = zeros_1000();
        assert!(cut_plane_identity(z, 999, &primes, big).is_err());
        assert!(cut_plane_identity(z, 5000, &primes, big).is_err());
        assert!(cut_plane_identity(Complex64::new(-1.0, 0.0), 1500, &primes, big).is_err());
        assert!(cut_plane_identity(Complex64::new(1.0, 0.0), 1500, &primes, big).is_err());
        assert!(strip_identity(Complex64::new(3.05, 0.0), 1500, &primes, big).is_err());
        assert!(strip_identity(Complex64::new(-3.1, 1.0), 1500, &primes, big).is_err());
    }

    #[test]
    fn identities_hold_at_modest_truncation() {
        let primes = sieve_mangoldt(20_000).unwrap();
        let zeros = zeros_1000();
        for z in default_cut_plane_grid() {
            let r = cut_plane_identity(z, 20_000, &primes, zeros).unwrap();
            assert!(r.passes(), "{r:?}");
            assert!(r.residual < 1e-3, "{r:?}");
            assert!(r.residual < r.raw_residual);
        }
        for z in default_strip_grid() {
            let r = strip_identity(z, 20_000, &primes, zeros).unwrap();
            assert!(r.passes(), "{r:?}");
            assert!(r.residual < 1e-3, "{r:?}");
        }
        let origin = strip_identity(Complex64::new(0.0, 0.0), 1000, &primes, zeros).unwrap();
        assert_eq!(origin.residual, 0.0);
    }

    #[test]
    fn inversion_symmetry() {
        let primes = sieve_mangoldt(20_000).unwrap();
        let zeros = zeros_1000();
        let a = cut_plane_identity(Complex64::new(3.0, 0.0), 20_000, &primes, zeros).unwrap();
        let b = cut_plane_identity(Complex64::new(1.0 / 3.0, 0.0), 20_000, &primes, zeros).unwrap();
        // both sides flip sign under z → 1/z
        assert!((a.lhs + b.lhs).norm() < 1e-12);
        assert!((a.rhs + b.rhs).norm() < 1e-10);
        assert!((a.residual - b.residual).abs() < 1e-10);
    }
}
