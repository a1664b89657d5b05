//! Complex special functions backing the zero finder.

use crate::summation::CompensatedComplexSum;
use crate::zeros::rs_coeffs::BERNOULLI_OVER_FACTORIAL;
use num_complex::Complex64;
use std::f64::consts::PI;

/// `B_{2k} / (2k(2k-1))`, the Stirling series coefficients.
const STIRLING: [f64; 10] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
];

/// Continuous branch of `log Γ(z)` for `Re z > 0`.
///
/// Shifts up with `log Γ(z) = log Γ(z+n) − Σ log(z+k)` until the Stirling
/// series converges to double precision, summing principal logarithms term
/// by term so the imaginary part tracks `arg Γ` without 2π jumps.
pub fn ln_gamma(z: Complex64) -> Complex64 {
    debug_assert!(z.re > 0.0);
    let mut shift = Complex64::new(0.0, 0.0);
    let mut w = z;
    while w.norm() < 20.0 {
        shift += w.ln();
        w += 1.0;
    }
    let inv = w.inv();
    let inv2 = inv * inv;
    let mut series = Complex64::new(0.0, 0.0);
    let mut power = inv;
    for c in STIRLING {
        series += power * c;
        power *= inv2;
    }
    (w - 0.5) * w.ln() - w + 0.5 * (2.0 * PI).ln() + series - shift
}

/// `ζ(s)` by Euler–Maclaurin summation, `s ≠ 1`.
///
/// The cutoff `N` is chosen so that `|s + 2M| ≤ πN` for the `M = 20`
/// Bernoulli corrections, which bounds the remainder near `2^{-40}` relative.
pub fn zeta(s: Complex64) -> Complex64 {
    let m = BERNOULLI_OVER_FACTORIAL.len();
    let n = ((s.norm() + 2.0 * m as f64) / PI).ceil().max(10.0) as u64;
    let mut head: CompensatedComplexSum = (1..n).map(|k| (-s * (k as f64).ln()).exp()).collect();
    let nf = n as f64;
    let ln_n = nf.ln();
    let n_pow = (-s * ln_n).exp();
    head.add(n_pow * nf / (s - 1.0));
    head.add(n_pow * 0.5);
    // s (s+1) ... (s+2k-2) N^{-s-2k+1}
    let mut rising = s;
    let mut term_pow = n_pow / nf;
    for (k, b) in BERNOULLI_OVER_FACTORIAL.iter().enumerate() {
        if k > 0 {
            let j = 2.0 * k as f64;
            rising *= (s + (j - 1.0)) * (s + j);
            term_pow /= nf * nf;
        }
        head.add(rising * term_pow * *b);
    }
    head.value()
}
