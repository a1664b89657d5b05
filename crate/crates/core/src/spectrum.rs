//! Prime-spectrum functions: cosine sums over prime powers whose cusps sit at
//! the ordinates of the zeta zeros.
//!
//! `Φ₁(t) = −Σ_{m≤T} Λ(m)/√m · cos(t log m)` and the damped
//! `Φ₂(t) = −Σ_{m≤T} T^{−m/T} Λ(m)/√m · cos(t log m) + c√t`.

use crate::error::{domain, out_of_range, Error, Result};
use crate::mangoldt::MangoldtTable;
use crate::zeros::ZetaZero;

/// Cutoff and `√t` coefficient used for the reference figures.
pub const DEFAULT_CUTOFF: usize = 300;
pub const DEFAULT_SQRT_COEFFICIENT: f64 = 0.12;
/// Finest grid the cusp detector is calibrated for.
pub const MAX_DETECTOR_STEP: f64 = 0.01;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectrumConfig {
    cutoff: usize,
    c_spec: f64,
}

impl SpectrumConfig {
    /// `cutoff ≥ 2`, `c_spec ∈ [0, 1]`.
    pub fn new(cutoff: usize, c_spec: f64) -> Result<Self> {
        if cutoff < 2 {
            return Err(Error::Config(format!(
                "spectrum cutoff must be ≥ 2, got {cutoff}"
            )));
        }
        if !(0.0..=1.0).contains(&c_spec) {
            return Err(Error::Config(format!(
                "√t coefficient must lie in [0, 1], got {c_spec}"
            )));
        }
        Ok(Self { cutoff, c_spec })
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    pub fn c_spec(&self) -> f64 {
        self.c_spec
    }
}

impl Default for SpectrumConfig {
    fn default() -> Self {
        Self {
            cutoff: DEFAULT_CUTOFF,
            c_spec: DEFAULT_SQRT_COEFFICIENT,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectrumSample {
    pub t: f64,
    pub phi1: f64,
    pub phi2: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpectrumSeries {
    Phi1,
    Phi2,
}

impl SpectrumSample {
    pub fn value(&self, which: SpectrumSeries) -> f64 {
        match which {
            SpectrumSeries::Phi1 => self.phi1,
            SpectrumSeries::Phi2 => self.phi2,
        }
    }
}

/// The prime powers `m ≤ T` with their `Λ(m)/√m`, `T^{−m/T}` and `log m`.
#[derive(Debug, Clone)]
struct Terms {
    amplitude: Vec<f64>,
    damping: Vec<f64>,
    log_m: Vec<f64>,
}

impl Terms {
    fn new(cfg: &SpectrumConfig, table: &MangoldtTable) -> Result<Self> {
        if table.limit() < cfg.cutoff {
            return Err(out_of_range(format!(
                "Λ table reaches {} but the spectrum cutoff is {}",
                table.limit(),
                cfg.cutoff
            )));
        }
        let rate = (cfg.cutoff as f64).ln() / cfg.cutoff as f64;
        let mut terms = Terms {
            amplitude: vec![],
            damping: vec![],
            log_m: vec![],
        };
        for (m, &lam) in table.values()[..=cfg.cutoff].iter().enumerate() {
            if lam != 0.0 {
                let mf = m as f64;
                terms.amplitude.push(lam / mf.sqrt());
                terms.damping.push((-mf * rate).exp());
                terms.log_m.push(mf.ln());
            }
        }
        Ok(terms)
    }

    fn eval(&self, t: f64, c_spec: f64) -> (f64, f64) {
        let (mut p1, mut p2) = (0.0, 0.0);
        for ((a, d), l) in self.amplitude.iter().zip(&self.damping).zip(&self.log_m) {
            let c = a * (t * l).cos();
            p1 -= c;
            p2 -= d * c;
        }
        (p1, p2 + c_spec * t.max(0.0).sqrt())
    }
}

/// `Φ₁(t)`.
pub fn phi1(t: f64, cfg: &SpectrumConfig, table: &MangoldtTable) -> Result<f64> {
    if !t.is_finite() {
        return Err(domain(format!("t must be finite, got {t}")));
    }
    Ok(Terms::new(cfg, table)?.eval(t, 0.0).0)
}

/// `Φ₂(t)`, `t ≥ 0`.
pub fn phi2(t: f64, cfg: &SpectrumConfig, table: &MangoldtTable) -> Result<f64> {
    if !(t >= 0.0) || !t.is_finite() {
        return Err(domain(format!("Φ₂ needs a finite t ≥ 0, got {t}")));
    }
    Ok(Terms::new(cfg, table)?.eval(t, cfg.c_spec).1)
}

/// Grid `lo, lo + step, …` up to `hi` inclusive (within rounding).
pub fn uniform_grid(lo: f64, hi: f64, step: f64) -> Result<Vec<f64>> {
    if !(step > 0.0) || !step.is_finite() || !lo.is_finite() || !hi.is_finite() {
        return Err(Error::Config(format!(
            "grid needs finite bounds and a positive step, got {lo}..{hi} by {step}"
        )));
    }
    if hi < lo {
        return Err(Error::Config(format!("empty range {lo}..{hi}")));
    }
    let n = ((hi - lo) / step + 1e-9).floor() as usize;
    Ok((0..=n).map(|k| lo + k as f64 * step).collect())
}

/// Both functions on `uniform_grid(lo, hi, step)`.
pub fn scan(
    lo: f64,
    hi: f64,
    step: f64,
    cfg: &SpectrumConfig,
    table: &MangoldtTable,
) -> Result<Vec<SpectrumSample>> {
    if lo < 0.0 {
        return Err(domain(format!("Φ₂ needs t ≥ 0, range starts at {lo}")));
    }
    let terms = Terms::new(cfg, table)?;
    Ok(uniform_grid(lo, hi, step)?
        .into_iter()
        .map(|t| {
            let (phi1, phi2) = terms.eval(t, cfg.c_spec);
            SpectrumSample { t, phi1, phi2 }
        })
        .collect())
}

/// Which way a cusp points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Polarity {
    /// Local maxima (the prime-spectrum peaks).
    Peaks,
    Troughs,
    Either,
}

/// Second-difference cusp detector.
///
/// A grid point is a cusp when the first difference changes sign there, the
/// curvature points the right way, `|Δ²|` exceeds `median_factor` times the
/// median `|Δ²|` of the whole scan, and it is at least `relative` times the
/// largest such `|Δ²|` among the scan's extrema.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CuspDetector {
    pub polarity: Polarity,
    pub relative: f64,
    pub median_factor: f64,
}

impl Default for CuspDetector {
    fn default() -> Self {
        Self {
            polarity: Polarity::Peaks,
            relative: 0.5,
            median_factor: 2.0,
        }
    }
}

impl CuspDetector {
    /// Cusp locations in ascending order; `ts` must be a uniform grid.
    pub fn detect(&self, ts: &[f64], values: &[f64]) -> Result<Vec<f64>> {
        if ts.len() != values.len() {
            return Err(domain("grid and values differ in length"));
        }
        if ts.len() < 3 {
            return Err(domain(format!(
                "cusp detection needs ≥ 3 samples, got {}",
                ts.len()
            )));
        }
        let step = ts[1] - ts[0];
        if !(step > 0.0) || step > MAX_DETECTOR_STEP * (1.0 + 1e-9) {
            return Err(domain(format!(
                "grid step must lie in (0, {MAX_DETECTOR_STEP}], got {step}"
            )));
        }
        if ts
            .windows(2)
            .any(|w| ((w[1] - w[0]) - step).abs() > 1e-6 * step)
        {
            return Err(domain("cusp detection needs a uniform grid"));
        }
        let d2: Vec<f64> = values
            .windows(3)
            .map(|w| w[2] - 2.0 * w[1] + w[0])
            .collect();
        let mut abs: Vec<f64> = d2.iter().map(|d| d.abs()).collect();
        abs.sort_by(f64::total_cmp);
        let median = abs[abs.len() / 2];

        // (grid index, sharpness) of every extremum with the wanted polarity
        let extrema: Vec<(usize, f64)> = values
            .windows(3)
            .enumerate()
            .filter_map(|(k, w)| {
                let (before, after) = (w[1] - w[0], w[2] - w[1]);
                let peak = before > 0.0 && after <= 0.0;
                let trough = before < 0.0 && after >= 0.0;
                let wanted = match self.polarity {
                    Polarity::Peaks => peak && d2[k] < 0.0,
                    Polarity::Troughs => trough && d2[k] > 0.0,
                    Polarity::Either => (peak && d2[k] < 0.0) || (trough && d2[k] > 0.0),
                };
                wanted.then_some((k + 1, d2[k].abs()))
            })
            .collect();
        let sharpest = extrema.iter().map(|e| e.1).fold(0.0, f64::max);
        Ok(extrema
            .into_iter()
            .filter(|&(_, s)| s > self.median_factor * median && s >= self.relative * sharpest)
            .map(|(i, _)| ts[i])
            .collect())
    }
}

/// [`CuspDetector::default`] on one series of a scan.
pub fn detect_cusps(samples: &[SpectrumSample], which: SpectrumSeries) -> Result<Vec<f64>> {
    let ts: Vec<f64> = samples.iter().map(|s| s.t).collect();
    let values: Vec<f64> = samples.iter().map(|s| s.value(which)).collect();
    CuspDetector::default().detect(&ts, &values)
}

/// A detected cusp with its nearest zero ordinate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CuspMatch {
    pub t: f64,
    pub nearest_gamma: Option<f64>,
    pub distance: f64,
}

/// Pairs each cusp with the nearest `γ`; `distance` is infinite without zeros.
pub fn nearest_zeros(cusps: &[f64], zeros: &[ZetaZero]) -> Vec<CuspMatch> {
    cusps
        .iter()
        .map(|&t| {
            let k = zeros.partition_point(|z| z.gamma() < t);
            let nearest = [k.checked_sub(1), Some(k)]
                .into_iter()
                .flatten()
                .filter_map(|i| zeros.get(i))
                .map(|z| z.gamma())
                .min_by(|a, b| (a - t).abs().total_cmp(&(b - t).abs()));
            CuspMatch {
                t,
                nearest_gamma: nearest,
                distance: nearest.map_or(f64::INFINITY, |g| (g - t).abs()),
            }
        })
        .collect()
}

/// How many of `gammas` have a cusp within `tolerance`.
pub fn matched_count(gammas: &[f64], cusps: &[f64], tolerance: f64) -> usize {
    gammas
        .iter()
        .filter(|&&g| cusps.iter().any(|&c| (c - g).abs() <= tolerance))
        .count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mangoldt::sieve_mangoldt;
    use crate::zeros::load_zeros;
    use proptest::prelude::*;

    fn table() -> MangoldtTable {
        sieve_mangoldt(400).unwrap()
    }

    fn gammas(lo: f64, hi: f64) -> Vec<f64> {
        load_zeros(include_str!("../fixtures/first100.txt").as_bytes())
            .unwrap()
            .zeros()
            .iter()
            .map(|z| z.gamma())
            .filter(|g| (lo..=hi).contains(g))
            .collect()
    }

    #[test]
    fn config_validation() {
        assert!(SpectrumConfig::new(1, 0.1).is_err());
        assert!(SpectrumConfig::new(10, -0.1).is_err());
        assert!(SpectrumConfig::new(10, 1.5).is_err());
        let d = SpectrumConfig::default();
        assert_eq!((d.cutoff(), d.c_spec()), (300, 0.12));
    }

    #[test]
    fn values_at_zero() {
        let table = table();
        let cfg = SpectrumConfig::default();
        let direct: f64 = (1..=300)
            .map(|m| table.values()[m] / (m as f64).sqrt())
            .sum();
        assert!((phi1(0.0, &cfg, &table).unwrap() + direct).abs() < 1e-12);
        let damped: f64 = (1..=300)
            .map(|m| 300f64.powf(-(m as f64) / 300.0) * table.values()[m] / (m as f64).sqrt())
            .sum();
        let cfg0 = SpectrumConfig::new(300, 0.0).unwrap();
        assert!((phi2(0.0, &cfg0, &table).unwrap() + damped).abs() < 1e-12);
        assert!(phi2(-1.0, &cfg, &table).is_err());
        let small = sieve_mangoldt(100).unwrap();
        assert!(matches!(phi1(1.0, &cfg, &small), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn endpoint_weight() {
        // 289 = 17² is the largest prime power up to 300, weight 300^{−289/300}
        let table = table();
        let cfg = SpectrumConfig::new(289, 0.0).unwrap();
        let terms = Terms::new(&cfg, &table).unwrap();
        assert_eq!(*terms.damping.last().unwrap(), (-(289f64).ln()).exp());
    }

    #[test]
    fn phi1_even() {
        let table = table();
        let cfg = SpectrumConfig::default();
        for t in [0.5, 14.1, 33.3] {
            assert_eq!(
                phi1(-t, &cfg, &table).unwrap(),
                phi1(t, &cfg, &table).unwrap()
            );
        }
    }

    #[test]
    fn phi1_extremum_near_first_zero() {
        let table = table();
        let cfg = SpectrumConfig::default();
        let samples = scan(13.5, 14.8, 0.005, &cfg, &table).unwrap();
        let best = samples
            .iter()
            .max_by(|a, b| a.phi1.total_cmp(&b.phi1))
            .unwrap();
        assert!((best.t - 14.134725).abs() < 0.05, "{}", best.t);
    }

    #[test]
    fn parabola_has_no_cusps() {
        let ts = uniform_grid(0.0, 10.0, 0.005).unwrap();
        let values: Vec<f64> = ts.iter().map(|t| (t - 5.0).powi(2)).collect();
        let d = CuspDetector {
            polarity: Polarity::Either,
            ..CuspDetector::default()
        };
        assert!(d.detect(&ts, &values).unwrap().is_empty());
    }

    #[test]
    fn synthetic_v_shape() {
        let ts = uniform_grid(10.0, 20.0, 0.005).unwrap();
        let values: Vec<f64> = ts.iter().map(|t| (t - 14.1347).abs()).collect();
        let d = CuspDetector {
            polarity: Polarity::Troughs,
            ..CuspDetector::default()
        };
        let found = d.detect(&ts, &values).unwrap();
        assert_eq!(found.len(), 1);
        assert!((found[0] - 14.1347).abs() <= 0.005);
        let flipped: Vec<f64> = values.iter().map(|v| -v).collect();
        assert_eq!(
            CuspDetector::default().detect(&ts, &flipped).unwrap(),
            found
        );
        assert!(CuspDetector::default()
            .detect(&ts, &values)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn detector_input_checks() {
        let d = CuspDetector::default();
        assert!(d.detect(&[0.0, 0.005], &[1.0, 2.0]).is_err());
        assert!(d.detect(&[0.0, 0.1, 0.2], &[1.0, 2.0, 1.0]).is_err());
        assert!(d.detect(&[0.0, 0.005, 0.006], &[1.0, 2.0, 1.0]).is_err());
        assert!(uniform_grid(5.0, 4.0, 0.1).is_err());
        assert!(uniform_grid(1.0, 2.0, 0.0).is_err());
        assert_eq!(uniform_grid(3.0, 30.0, 0.005).unwrap().len(), 5401);
    }

    #[test]
    fn phi2_cusps_at_zeros() {
        let table = table();
        let cfg = SpectrumConfig::default();
        for (lo, hi, need) in [(3.0, 30.0, 3), (23.0, 50.0, 8), (3.0, 50.0, 10)] {
            let samples = scan(lo, hi, 0.005, &cfg, &table).unwrap();
            let cusps = detect_cusps(&samples, SpectrumSeries::Phi2).unwrap();
            let g = gammas(lo, hi);
            assert_eq!(g.len(), need);
            assert_eq!(
                matched_count(&g, &cusps, 0.05),
                need,
                "{lo}..{hi}: {cusps:?}"
            );
        }
    }

    #[test]
    fn sharper_with_larger_cutoff() {
        let table = table();
        let count = |cutoff| {
            let cfg = SpectrumConfig::new(cutoff, 0.12).unwrap();
            let samples = scan(3.0, 30.0, 0.005, &cfg, &table).unwrap();
            detect_cusps(&samples, SpectrumSeries::Phi2).unwrap().len()
        };
        assert!(count(300) >= count(100));
    }

    #[test]
    fn nearest_zero_pairing() {
        let zeros: Vec<ZetaZero> = [14.1, 21.0, 25.0]
            .iter()
            .map(|&g| ZetaZero::on_line(g).unwrap())
            .collect();
        let m = nearest_zeros(&[10.0, 22.0, 24.9, 30.0], &zeros);
        let got: Vec<f64> = m.iter().map(|c| c.nearest_gamma.unwrap()).collect();
        assert_eq!(got, vec![14.1, 21.0, 25.0, 25.0]);
        assert!((m[2].distance - 0.1).abs() < 1e-12);
        assert_eq!(nearest_zeros(&[1.0], &[])[0].distance, f64::INFINITY);
    }

    proptest! {
        #[test]
        fn weights_only_difference(t in 0.0f64..60.0, cutoff in 2usize..400) {
            let table = table();
            let cfg = SpectrumConfig::new(cutoff, 0.0).unwrap();
            let rate = (cutoff as f64).ln() / cutoff as f64;
            let budget: f64 = (1..=cutoff)
                .map(|m| (1.0 - (-(m as f64) * rate).exp()) * table.values()[m] / (m as f64).sqrt())
                .sum();
            let gap = (phi2(t, &cfg, &table).unwrap() - phi1(t, &cfg, &table).unwrap()).abs();
            prop_assert!(gap <= budget + 1e-12);
        }
    }
}
