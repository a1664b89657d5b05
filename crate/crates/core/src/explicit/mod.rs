//! Kernel sums over the zeros of `ζ` and the von Mangoldt estimates built on
//! them.
//!
//! For `x ∈ [0, π)` and `t > 1` the smoothed zero sum
//! `Σ_{γ>0} sinh(xα)/sinh(πα) · cos(α log t)` recovers `Λ(t)` through
//! `−4π√t cot(x/2) Σ + 4π√t g(x,t) cot(x/2)`, with a one-sided error that
//! shrinks like `cos²(x/2)`. Coupling `cot(x/2) = log T / T` truncates the sum
//! at height `T` with error `O(t² log t · log²T / T²)` for integer `t`.

mod bounds;
mod closed_forms;
mod identities;

pub use bounds::{
    nearby_prime_power_term, tail_bound, tail_bound_alt, theorem_bound, tighter_tail_bound,
    total_bound_integer, TailBoundKind,
};
pub use closed_forms::{antisymmetric_h, f_function, g_function, g_limit, h_function};
pub use identities::{
    cut_plane_identity, default_cut_plane_grid, default_strip_grid, strip_identity, IdentityKind,
    IdentityReport, MIN_HEIGHT as IDENTITY_MIN_HEIGHT, MIN_TERMS as IDENTITY_MIN_TERMS,
};

use crate::error::{domain, Result};
use crate::mangoldt::mangoldt;
use crate::summation::CompensatedSum;
use crate::zeros::{ZeroTable, ZetaZero};
use num_complex::Complex64;
use std::f64::consts::PI;

/// Euler–Mascheroni constant, the `C` of `log 8π + C`.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// `ζ'(1/2) / ζ(1/2)`.
///
/// Frozen from a 50-digit evaluation (`ζ(1/2) = −1.4603545088…`,
/// `ζ'(1/2) = −3.9226461392…`); an Euler–Maclaurin route in the tests
/// recomputes it.
pub const ZETA_LOG_DERIVATIVE_HALF: f64 = 2.686_091_709_612_832_8;

/// Constants shared by the closed forms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Constants {
    pub euler_gamma: f64,
    pub log_8pi: f64,
    pub zeta_log_derivative_half: f64,
}

impl Constants {
    pub fn standard() -> Self {
        Self {
            euler_gamma: EULER_GAMMA,
            log_8pi: (8.0 * PI).ln(),
            zeta_log_derivative_half: ZETA_LOG_DERIVATIVE_HALF,
        }
    }

    /// `log 8π + C`.
    pub fn log_8pi_plus_gamma(&self) -> f64 {
        self.log_8pi + self.euler_gamma
    }
}

/// Kernel opening angle `x` and truncation height `T`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelParams {
    x: f64,
    height: f64,
    coupled: bool,
}

impl KernelParams {
    /// An uncoupled pair; `0 ≤ x < π`, `T ≥ 2`.
    pub fn new(x: f64, height: f64) -> Result<Self> {
        if !(0.0..PI).contains(&x) {
            return Err(domain(format!("kernel angle must lie in [0, π), got {x}")));
        }
        if !(height >= 2.0) || !height.is_finite() {
            return Err(domain(format!(
                "truncation height must be ≥ 2, got {height}"
            )));
        }
        Ok(Self {
            x,
            height,
            coupled: false,
        })
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn height(&self) -> f64 {
        self.height
    }

    pub fn coupled(&self) -> bool {
        self.coupled
    }

    /// `cot(x/2)`.
    pub fn cot_half(&self) -> f64 {
        if self.coupled {
            self.height.ln() / self.height
        } else {
            (0.5 * self.x).tan().recip()
        }
    }

    /// `cos²(x/2)`.
    pub fn cos_half_sq(&self) -> f64 {
        let c = self.cot_half();
        c * c / (1.0 + c * c)
    }
}

/// The angle tied to `T` by `cot(x/2) = log T / T`.
pub fn x_of_t(height: f64) -> Result<KernelParams> {
    if !(height >= 2.0) || !height.is_finite() {
        return Err(domain(format!(
            "truncation height must be ≥ 2, got {height}"
        )));
    }
    let x = 2.0 * (height / height.ln()).atan();
    Ok(KernelParams {
        x,
        height,
        coupled: true,
    })
}

/// `e^w − 1` without cancellation for small `|w|`.
fn exp_m1(w: Complex64) -> Complex64 {
    let (s, c) = w.im.sin_cos();
    let half = (0.5 * w.im).sin();
    Complex64::new(w.re.exp_m1() * c - 2.0 * half * half, w.re.exp() * s)
}

/// `sinh(xα)/sinh(πα)` as `e^{(x−π)α}(1 − e^{−2xα})/(1 − e^{−2πα})`: bounded
/// for every `γ`, so ordinates up to `10⁵` never overflow.
pub(crate) fn sinh_ratio(alpha: Complex64, x: Complex64) -> Complex64 {
    if x.re < 0.0 {
        // sinh is odd; keep the exponent of the correction factor negative
        return -sinh_ratio(alpha, -x);
    }
    let lead = ((x - PI) * alpha).exp();
    lead * (-exp_m1(-2.0 * x * alpha)) / (-exp_m1(-2.0 * PI * alpha))
}

/// `Re[sinh(xα)/sinh(πα) · cos(α log t)]` for one zero.
///
/// With `μ = 0` this is `sinh(xγ)/sinh(πγ) · cos(γ log t)`; otherwise
/// `cos(α log t)` contributes the `cosh(μ log t)` amplification and the real
/// part is taken.
pub fn kernel_term(zero: &ZetaZero, x: f64, t: f64) -> f64 {
    debug_assert!((0.0..PI).contains(&x) && t > 1.0);
    let log_t = t.ln();
    let gamma = zero.gamma();
    if zero.mu() == 0.0 {
        let ratio =
            ((x - PI) * gamma).exp() * (-2.0 * x * gamma).exp_m1() / (-2.0 * PI * gamma).exp_m1();
        return ratio * (gamma * log_t).cos();
    }
    let alpha = zero.alpha();
    let ratio = sinh_ratio(alpha, Complex64::new(x, 0.0));
    (ratio * (alpha * log_t).cos()).re
}

/// Compensated sum of [`kernel_term`] over `zeros`, largest ordinate first.
pub fn kernel_sum_over(zeros: &[ZetaZero], x: f64, t: f64) -> f64 {
    zeros
        .iter()
        .rev()
        .map(|z| kernel_term(z, x, t))
        .collect::<CompensatedSum>()
        .value()
}

/// `Σ_{γ < T} sinh(xα)/sinh(πα) · cos(α log t)`.
pub fn kernel_sum(t: f64, params: &KernelParams, table: &ZeroTable) -> Result<f64> {
    check_t(t)?;
    table.check_covers(params.height)?;
    Ok(kernel_sum_over(table.below(params.height), params.x, t))
}

fn check_t(t: f64) -> Result<()> {
    if !(t > 1.0) || !t.is_finite() {
        return Err(domain(format!("t must be a finite real > 1, got {t}")));
    }
    Ok(())
}

/// `−(2π/T) √t Σ_{0<γ≤T} Re cos(α log t)`, the truncated Landau–Gonek
/// estimate of `Λ(t)`; its error is `E(t,T)/T`.
pub fn landau_gonek_estimate(t: f64, height: f64, table: &ZeroTable) -> Result<f64> {
    check_t(t)?;
    if !(height > 0.0) {
        return Err(domain(format!("height must be positive, got {height}")));
    }
    table.check_covers(height)?;
    let log_t = t.ln();
    let sum = table
        .up_to(height)
        .iter()
        .rev()
        .map(|z| (z.gamma() * log_t).cos() * (z.mu() * log_t).cosh())
        .collect::<CompensatedSum>()
        .value();
    Ok(-2.0 * PI / height * t.sqrt() * sum)
}

/// `(T, |landau_gonek_estimate(t, T) − Λ(t)|)` along `heights`, for watching
/// the estimate settle as `T` grows. `t` is rounded for the target.
pub fn landau_limit_sequence(
    t: f64,
    heights: &[f64],
    table: &ZeroTable,
) -> Result<Vec<(f64, f64)>> {
    let target = match integer_value(t) {
        Some(n) => mangoldt(n)?,
        None => 0.0,
    };
    heights
        .iter()
        .map(|&h| Ok((h, (landau_gonek_estimate(t, h, table)? - target).abs())))
        .collect()
}

/// One evaluation of the truncated estimate and its error budget.
#[derive(Debug, Clone, PartialEq)]
pub struct EstimateReport {
    pub t: f64,
    pub height: f64,
    pub x: f64,
    pub kernel_sum: f64,
    pub estimate: f64,
    /// `Λ(t)` for integer `t`, otherwise `Λ(round(t))` as a reference only.
    pub exact: f64,
    pub exact_is_reference_only: bool,
    /// Tail of the zero sum above `T`.
    pub tail_bound: f64,
    /// `None` where the bound is not established (`t ≤ 2`, non-integer).
    pub theorem_bound: Option<f64>,
    pub total_bound: Option<f64>,
    pub zeros_used: usize,
}

impl EstimateReport {
    /// `Λ(t)` proper: zero at every non-integer `t`.
    pub fn target(&self) -> f64 {
        if self.exact_is_reference_only {
            0.0
        } else {
            self.exact
        }
    }

    pub fn abs_error(&self) -> f64 {
        (self.estimate - self.target()).abs()
    }

    pub fn bound_satisfied(&self) -> Option<bool> {
        self.total_bound.map(|b| self.abs_error() <= b)
    }
}

pub(crate) fn integer_value(t: f64) -> Option<u64> {
    (t.fract() == 0.0 && t >= 1.0 && t < 2f64.powi(53)).then_some(t as u64)
}

/// `−4π√t (Σ_{γ<T} …) log T/T + 2π(t − 1/(t²−1)) log T/T` with `x` coupled
/// to `T`.
///
/// Integer `t ≥ 2` is held to [`total_bound_integer`]. Non-integer `t > 2`
/// gets the non-integer theorem bound plus the zero-sum tail and the exact
/// `g(x,t) − g(π⁻,t)` gap, both scaled by `4π√t log T/T`.
pub fn mangoldt_estimate(t: f64, height: f64, table: &ZeroTable) -> Result<EstimateReport> {
    check_t(t)?;
    let params = x_of_t(height)?;
    table.check_covers(height)?;
    let zeros = table.below(height);
    let ks = kernel_sum_over(zeros, params.x, t);
    let scale = height.ln() / height;
    let estimate = -4.0 * PI * t.sqrt() * ks * scale + 2.0 * PI * (t - 1.0 / (t * t - 1.0)) * scale;

    let int_t = integer_value(t);
    let exact = mangoldt(t.round().max(1.0) as u64)?;
    let tail = tail_bound(t, height)?;
    let theorem = theorem_bound(t, params.x).ok();
    let total = match int_t {
        Some(n) if n >= 2 => Some(total_bound_integer(n, height)?),
        _ => match theorem {
            Some(th) => {
                let g_gap = (g_function(params.x, t)? - g_limit(t)?).abs();
                Some(th + 4.0 * PI * t.sqrt() * scale * (tail + g_gap))
            }
            None => None,
        },
    };
    Ok(EstimateReport {
        t,
        height,
        x: params.x,
        kernel_sum: ks,
        estimate,
        exact,
        exact_is_reference_only: int_t.is_none(),
        tail_bound: tail,
        theorem_bound: theorem,
        total_bound: total,
        zeros_used: zeros.len(),
    })
}

/// The untruncated-form quantity `−4π√t cot(x/2) Σ + 4π√t g(x,t) cot(x/2)`
/// evaluated over the zeros of `table` below `params.height`; it exceeds
/// `Λ(t)` by a positive amount at most [`theorem_bound`].
pub fn smoothed_mangoldt(t: f64, params: &KernelParams, table: &ZeroTable) -> Result<f64> {
    let ks = kernel_sum(t, params, table)?;
    let cot = params.cot_half();
    Ok(4.0 * PI * t.sqrt() * cot * (g_function(params.x, t)? - ks))
}
