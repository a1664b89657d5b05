//! Exact ground truth: the von Mangoldt function and prime-power geometry.

use crate::error::{domain, out_of_range, Result};

/// `Λ(n)` for every `0 ≤ n ≤ limit`, natural logarithms.
#[derive(Debug, Clone, PartialEq)]
pub struct MangoldtTable {
    limit: usize,
    values: Vec<f64>,
}

impl MangoldtTable {
    pub fn limit(&self) -> usize {
        self.limit
    }

    /// All values, indexed by `n`; `values()[0]` and `values()[1]` are zero.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn get(&self, n: usize) -> Option<f64> {
        self.values.get(n).copied()
    }
}

/// Sieve of Eratosthenes, then `log p` written at every power of each prime.
pub fn sieve_mangoldt(limit: usize) -> Result<MangoldtTable> {
    if limit == 0 {
        return Err(domain("sieve limit must be at least 1"));
    }
    let mut composite = vec![false; limit + 1];
    let mut values = vec![0.0; limit + 1];
    for p in 2..=limit {
        if composite[p] {
            continue;
        }
        if let Some(start) = p.checked_mul(p) {
            for m in (start..=limit).step_by(p) {
                composite[m] = true;
            }
        }
        let log_p = (p as f64).ln();
        let mut q = p;
        loop {
            values[q] = log_p;
            match q.checked_mul(p) {
                Some(next) if next <= limit => q = next,
                _ => break,
            }
        }
    }
    Ok(MangoldtTable { limit, values })
}

/// Returns `Some(p)` when `n = p^k` for a prime `p` and `k ≥ 1`.
pub fn prime_power_base(n: u64) -> Option<u64> {
    if n < 2 {
        return None;
    }
    let mut m = n;
    let mut d = 2u64;
    while d * d <= m {
        if m.is_multiple_of(d) {
            while m.is_multiple_of(d) {
                m /= d;
            }
            return (m == 1).then_some(d);
        }
        d += if d == 2 { 1 } else { 2 };
    }
    // no factor up to sqrt(m): m itself is prime and n = m
    Some(m)
}

/// `Λ(n)` by trial division.
pub fn mangoldt(n: u64) -> Result<f64> {
    if n == 0 {
        return Err(domain("Λ(n) is defined for n ≥ 1"));
    }
    Ok(prime_power_base(n).map_or(0.0, |p| (p as f64).ln()))
}

/// Distance from `t` to the nearest prime power other than `t` itself.
///
/// Only an integer `t` can coincide with a prime power, so the exclusion is
/// an exact comparison.
pub fn nearest_prime_power_distance(t: f64) -> Result<f64> {
    if !(t > 1.0) || !t.is_finite() {
        return Err(domain(format!("t must be a finite real > 1, got {t}")));
    }
    let is_pp = |q: u64| prime_power_base(q).is_some();

    let mut up = t.floor() as u64 + 1;
    while !is_pp(up) {
        up += 1;
    }
    let mut best = up as f64 - t;

    let mut down = t.ceil() as u64 - 1;
    while down >= 2 {
        if is_pp(down) {
            best = best.min(t - down as f64);
            break;
        }
        if t - (down as f64) >= best {
            break;
        }
        down -= 1;
    }
    Ok(best)
}

/// `ψ(x) = Σ_{n ≤ x} Λ(n)` read off the table.
pub fn chebyshev_psi(x: f64, table: &MangoldtTable) -> Result<f64> {
    if !(x >= 1.0) {
        return Err(domain(format!("ψ(x) needs x ≥ 1, got {x}")));
    }
    if x > table.limit as f64 {
        return Err(out_of_range(format!(
            "x = {x} exceeds the sieve limit {}",
            table.limit
        )));
    }
    Ok(table.values[..=x.floor() as usize].iter().sum())
}
