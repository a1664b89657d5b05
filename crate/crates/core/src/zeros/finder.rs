//! Gram-block zero finder on the critical line.

use super::riemann_siegel::{theta, theta_derivative, z_unchecked, MAX_HEIGHT};
use super::{ZeroSource, ZeroTable, ZetaZero};
use crate::error::{domain, Error, Result};
use std::f64::consts::PI;

/// Smallest supported `T_max`: the first Gram point above `2π` is `g₋₁ ≈ 9.667`.
pub const MIN_HEIGHT: f64 = 10.0;

/// Subdivision factors tried, in order, on a Gram block whose sign changes
/// fall short of its expected zero count.
const REFINEMENTS: [usize; 3] = [1, 8, 64];

/// Consecutive blocks merged before a deficit is reported as missed zeros.
const MAX_MERGED_BLOCKS: usize = 6;

/// Bisection stops once the bracket is this narrow.
const BISECTION_WIDTH: f64 = 1e-10;

/// The Gram point `g_n`, `θ(g_n) = nπ`, for `n ≥ −1` (the branch above `2π`).
pub fn gram_point(n: i64) -> Result<f64> {
    if n < -1 {
        return Err(domain("Gram points are indexed from n = -1"));
    }
    Ok(gram_point_unchecked(n))
}

fn gram_point_unchecked(n: i64) -> f64 {
    let target = n as f64 * PI;
    // fixed point of t = 2π (n + 1/8) / log(t / 2πe) as a starting value
    let mut t = 20.0f64;
    if n > 0 {
        for _ in 0..8 {
            t = 2.0 * PI * (n as f64 + 0.125) / (t / (2.0 * PI * std::f64::consts::E)).ln();
        }
        t = t.max(10.0);
    } else {
        t = if n == 0 { 17.8 } else { 9.7 };
    }
    for _ in 0..60 {
        let step = (theta(t) - target) / theta_derivative(t);
        t -= step;
        if step.abs() <= 1e-14 * t {
            break;
        }
    }
    t
}

struct Sample {
    t: f64,
    z: f64,
}

fn sample(t: f64) -> Sample {
    Sample {
        t,
        z: z_unchecked(t),
    }
}

fn bisect(mut lo: Sample, mut hi: Sample) -> f64 {
    while hi.t - lo.t > BISECTION_WIDTH {
        let mid = sample(0.5 * (lo.t + hi.t));
        if mid.t <= lo.t || mid.t >= hi.t {
            break;
        }
        if mid.z == 0.0 {
            return mid.t;
        }
        if (mid.z < 0.0) == (lo.z < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo.t + hi.t)
}

/// Sign-change brackets of `Z` over the consecutive Gram intervals spanned by
/// `points`, each interval split into `parts` equal pieces.
fn brackets(points: &[Sample], parts: usize) -> Vec<(Sample, Sample)> {
    let mut out = Vec::new();
    for w in points.windows(2) {
        let (a, b) = (&w[0], &w[1]);
        let mut prev = Sample { t: a.t, z: a.z };
        for k in 1..=parts {
            let next = if k == parts {
                Sample { t: b.t, z: b.z }
            } else {
                sample(a.t + (b.t - a.t) * k as f64 / parts as f64)
            };
            if (prev.z < 0.0) != (next.z < 0.0) {
                out.push((
                    Sample {
                        t: prev.t,
                        z: prev.z,
                    },
                    Sample {
                        t: next.t,
                        z: next.z,
                    },
                ));
            }
            prev = next;
        }
    }
    out
}

fn is_good(n: i64, z: f64) -> bool {
    let parity = if n.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
    parity * z > 0.0
}

/// All critical-line zeros with `γ ≤ t_max`.
///
/// Gram points are grouped into Gram blocks between consecutive good Gram
/// points (`(−1)^n Z(g_n) > 0`); a block spanning `k` Gram intervals must hold
/// `k` zeros. A block short of sign changes is subdivided ×8, then ×64, and is
/// merged with the following block when that still does not close the gap
/// (a Rosser-rule violation). Every closed block is a checkpoint where the
/// running count must equal `n + 1 = θ(g_n)/π + 1`; any other count is an
/// [`Error::Integrity`]. Zeros are refined by bisection of `Z`.
pub fn find_zeros(t_max: f64) -> Result<ZeroTable> {
    if !(MIN_HEIGHT..=MAX_HEIGHT).contains(&t_max) {
        return Err(domain(format!(
            "zero search height must lie in [{MIN_HEIGHT}, {MAX_HEIGHT}], got {t_max}"
        )));
    }
    let mut gammas: Vec<f64> = Vec::new();
    let mut n: i64 = -1;
    let first = gram_point_unchecked(n);
    let mut block = vec![sample(first)];
    let mut block_start_index = n;
    let mut merged = 0usize;
    if !is_good(n, block[0].z) {
        return Err(Error::Integrity("g₋₁ is not a good Gram point".into()));
    }

    loop {
        n += 1;
        let g = sample(gram_point_unchecked(n));
        let good = is_good(n, g.z);
        block.push(g);
        if !good {
            continue;
        }
        let expected = (n - block_start_index) as usize;
        let mut found = Vec::new();
        for parts in REFINEMENTS {
            found = brackets(&block, parts);
            if found.len() >= expected {
                break;
            }
        }
        if found.len() < expected {
            merged += 1;
            if merged > MAX_MERGED_BLOCKS {
                return Err(Error::Integrity(format!(
                    "found {} of {expected} zeros between Gram points g_{block_start_index} = {} and g_{n} = {}",
                    found.len(),
                    block[0].t,
                    block[block.len() - 1].t
                )));
            }
            continue;
        }
        if found.len() > expected {
            return Err(Error::Integrity(format!(
                "{} sign changes where {expected} zeros were expected near t = {}",
                found.len(),
                block[0].t
            )));
        }
        gammas.extend(found.into_iter().map(|(lo, hi)| bisect(lo, hi)));
        // checkpoint: N(g_n) = n + 1
        if gammas.len() as i64 != n + 1 {
            return Err(Error::Integrity(format!(
                "{} zeros below g_{n} = {}, expected {}",
                gammas.len(),
                block[block.len() - 1].t,
                n + 1
            )));
        }
        let end = block.pop().expect("block holds its closing Gram point");
        let done = end.t >= t_max;
        block.clear();
        block.push(end);
        block_start_index = n;
        merged = 0;
        if done {
            break;
        }
    }

    let zeros = gammas
        .into_iter()
        .take_while(|&g| g <= t_max)
        .map(ZetaZero::on_line)
        .collect::<Result<Vec<_>>>()?;
    ZeroTable::new(zeros, ZeroSource::Computed, t_max)
}
