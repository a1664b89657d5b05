//! Numerical toolkit relating the von Mangoldt function to the non-trivial
//! zeros of the Riemann zeta function.
//!
//! * [`mangoldt`]: sieve and factorization routes to `Λ(n)`, Chebyshev `ψ`.
//! * [`zeros`]: zero tables, Riemann–Siegel `θ` and `Z`, Gram-point zero finder.
//! * [`explicit`]: kernel sums over zeros, the closed-form correction
//!   functions, `Λ(t)` estimates and their rigorous error bounds.
//! * [`spectrum`]: the prime-spectrum functions `Φ₁`, `Φ₂` and cusp detection.
//! * [`cli`]: the `zx` command runner and its file formats.

// `!(x > a)` is used on purpose so NaN inputs take the rejection branch.
#![allow(clippy::neg_cmp_op_on_partial_ord)]
// Series coefficients are kept as published, beyond f64 precision.
#![allow(clippy::excessive_precision)]

pub mod cli;
pub mod error;
pub mod explicit;
pub mod mangoldt;
pub mod output;
pub mod special;
pub mod spectrum;
pub mod summation;
pub mod zeros;

pub use error::{Error, Result};

pub use mangoldt::{
    chebyshev_psi, mangoldt, nearest_prime_power_distance, sieve_mangoldt, MangoldtTable,
};

pub use zeros::{
    find_zeros, hardy_z, load_zeros, riemann_siegel_theta, ZeroSource, ZeroTable, ZetaZero,
};

pub use explicit::{
    cut_plane_identity, f_function, g_function, g_limit, h_function, kernel_sum, kernel_term,
    landau_gonek_estimate, landau_limit_sequence, mangoldt_estimate, strip_identity, tail_bound,
    tail_bound_alt, theorem_bound, total_bound_integer, x_of_t, EstimateReport, IdentityReport,
    KernelParams,
};
