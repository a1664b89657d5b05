//! Ordered non-trivial zeros of `ζ`: ingestion, computation, counting.
//!
//! A zero `ρ = β + iγ` is stored in the rotated coordinate `α = γ + iμ`,
//! `μ = 1/2 − β`, so `μ = 0` on the critical line. Only `γ > 0` is stored;
//! conjugates are implicit.

mod finder;
mod riemann_siegel;
pub(crate) mod rs_coeffs;

pub use finder::{find_zeros, gram_point};
pub use riemann_siegel::{hardy_z, riemann_siegel_theta, MAX_HEIGHT, RIEMANN_SIEGEL_MIN_T};

use crate::error::{domain, out_of_range, Error, Result};
use num_complex::Complex64;
use std::f64::consts::PI;
use std::io::{BufRead, Write};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZetaZero {
    gamma: f64,
    mu: f64,
}

impl ZetaZero {
    /// `gamma > 0` and `mu ∈ (−1/2, 1/2)`.
    pub fn new(gamma: f64, mu: f64) -> Result<Self> {
        if !(gamma > 0.0) || !gamma.is_finite() {
            return Err(domain(format!(
                "ordinate must be finite and positive, got {gamma}"
            )));
        }
        if !(mu > -0.5 && mu < 0.5) {
            return Err(domain(format!("μ must lie in (−1/2, 1/2), got {mu}")));
        }
        Ok(Self { gamma, mu })
    }

    /// A zero on the critical line.
    pub fn on_line(gamma: f64) -> Result<Self> {
        Self::new(gamma, 0.0)
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    /// Real part `β = 1/2 − μ` of `ρ`.
    pub fn beta(&self) -> f64 {
        0.5 - self.mu
    }

    pub fn rho(&self) -> Complex64 {
        Complex64::new(self.beta(), self.gamma)
    }

    pub fn alpha(&self) -> Complex64 {
        Complex64::new(self.gamma, self.mu)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZeroSource {
    Ingested,
    Computed,
}

impl std::fmt::Display for ZeroSource {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ZeroSource::Ingested => "ingested",
            ZeroSource::Computed => "computed",
        })
    }
}

/// Zeros in strictly increasing `γ`, complete up to `height`.
#[derive(Debug, Clone, PartialEq)]
pub struct ZeroTable {
    zeros: Vec<ZetaZero>,
    source: ZeroSource,
    height: f64,
}

impl ZeroTable {
    pub fn new(zeros: Vec<ZetaZero>, source: ZeroSource, height: f64) -> Result<Self> {
        if let Some(w) = zeros.windows(2).position(|w| w[1].gamma <= w[0].gamma) {
            return Err(Error::Order {
                line: w + 2,
                previous: zeros[w].gamma,
                found: zeros[w + 1].gamma,
            });
        }
        let last = zeros.last().map_or(0.0, |z| z.gamma);
        if !(height >= last) {
            return Err(domain(format!(
                "height {height} below the last ordinate {last}"
            )));
        }
        Ok(Self {
            zeros,
            source,
            height,
        })
    }

    pub fn empty() -> Self {
        Self {
            zeros: Vec::new(),
            source: ZeroSource::Ingested,
            height: 0.0,
        }
    }

    pub fn zeros(&self) -> &[ZetaZero] {
        &self.zeros
    }

    pub fn len(&self) -> usize {
        self.zeros.len()
    }

    pub fn is_empty(&self) -> bool {
        self.zeros.is_empty()
    }

    pub fn source(&self) -> ZeroSource {
        self.source
    }

    /// Ordinate up to which the table is complete.
    pub fn height(&self) -> f64 {
        self.height
    }

    /// Zeros with `γ < limit`, without the coverage check.
    pub fn below(&self, limit: f64) -> &[ZetaZero] {
        &self.zeros[..self.zeros.partition_point(|z| z.gamma < limit)]
    }

    /// Zeros with `γ ≤ limit`.
    pub fn up_to(&self, limit: f64) -> &[ZetaZero] {
        &self.zeros[..self.zeros.partition_point(|z| z.gamma <= limit)]
    }

    /// `#{γ < t}`; `t` may not exceed the covered height.
    pub fn count_below(&self, t: f64) -> Result<usize> {
        self.check_covers(t)?;
        Ok(self.below(t).len())
    }

    pub(crate) fn check_covers(&self, t: f64) -> Result<()> {
        if t > self.height {
            return Err(out_of_range(format!(
                "height {t} exceeds the zero table coverage {}",
                self.height
            )));
        }
        Ok(())
    }

    /// The same table with its first `k` zeros removed; height unchanged.
    pub fn without_first(&self, k: usize) -> Self {
        Self {
            zeros: self.zeros[k.min(self.zeros.len())..].to_vec(),
            source: self.source,
            height: self.height,
        }
    }

    /// The table cut to `γ ≤ limit`, with height `limit`.
    pub fn truncated(&self, limit: f64) -> Result<Self> {
        self.check_covers(limit)?;
        Ok(Self {
            zeros: self.up_to(limit).to_vec(),
            source: self.source,
            height: limit,
        })
    }

    /// Writes the zero-table text format: `#` comment header, one `γ [μ]`
    /// per line, LF endings. Shortest round-trip decimal for every value.
    pub fn write_to<W: Write>(&self, mut out: W) -> Result<()> {
        writeln!(
            out,
            "# zx zero table: {} zeros, source {}, complete to height {}",
            self.zeros.len(),
            self.source,
            self.height
        )?;
        for z in &self.zeros {
            if z.mu == 0.0 {
                writeln!(out, "{}", z.gamma)?;
            } else {
                writeln!(out, "{} {}", z.gamma, z.mu)?;
            }
        }
        Ok(())
    }

    pub fn to_text(&self) -> String {
        let mut buf = Vec::new();
        self.write_to(&mut buf)
            .expect("writing to a Vec cannot fail");
        String::from_utf8(buf).expect("ASCII output")
    }
}

/// Reads the zero-table text format.
///
/// Blank lines and lines starting with `#` are skipped. The table height is
/// the last ordinate read.
pub fn load_zeros<R: BufRead>(source: R) -> Result<ZeroTable> {
    let mut zeros: Vec<ZetaZero> = Vec::new();
    for (idx, line) in source.lines().enumerate() {
        let line_no = idx + 1;
        let line = line.map_err(|e| Error::Format {
            line: line_no,
            message: e.to_string(),
        })?;
        let body = line.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = body.split_whitespace().collect();
        if fields.len() > 2 {
            return Err(Error::Format {
                line: line_no,
                message: format!("expected `gamma [mu]`, found {} fields", fields.len()),
            });
        }
        let parse = |s: &str, what: &str| {
            s.parse::<f64>().map_err(|_| Error::Format {
                line: line_no,
                message: format!("cannot parse {what} from {s:?}"),
            })
        };
        let gamma = parse(fields[0], "gamma")?;
        let mu = fields.get(1).map_or(Ok(0.0), |s| parse(s, "mu"))?;
        let zero = ZetaZero::new(gamma, mu).map_err(|e| Error::Format {
            line: line_no,
            message: e.to_string(),
        })?;
        if let Some(prev) = zeros.last() {
            if gamma <= prev.gamma {
                return Err(Error::Order {
                    line: line_no,
                    previous: prev.gamma,
                    found: gamma,
                });
            }
        }
        zeros.push(zero);
    }
    let height = zeros.last().map_or(0.0, |z| z.gamma);
    Ok(ZeroTable {
        zeros,
        source: ZeroSource::Ingested,
        height,
    })
}

/// Smooth zero count `θ(T)/π + 1`; `N(T)` differs from it by `S(T)`.
pub fn smooth_count(t: f64) -> Result<f64> {
    Ok(riemann_siegel_theta(t)? / PI + 1.0)
}

/// Largest number of zeros found in any window `[T, T+1]`, `2 ≤ T ≤ height − 1`,
/// together with the window start and the `3 log T` allowance it is held to.
pub fn densest_unit_window(table: &ZeroTable, step: f64) -> Option<(f64, usize, f64)> {
    let mut worst: Option<(f64, usize, f64)> = None;
    let mut t = 2.0;
    while t <= table.height - 1.0 {
        let lo = table.zeros.partition_point(|z| z.gamma < t);
        let hi = table.zeros.partition_point(|z| z.gamma <= t + 1.0);
        let count = hi - lo;
        let allowance = 3.0 * t.ln();
        let slack = allowance - count as f64;
        if worst.is_none_or(|(wt, wc, _)| slack < 3.0 * wt.ln() - wc as f64) {
            worst = Some((t, count, allowance));
        }
        t += step;
    }
    worst
}
