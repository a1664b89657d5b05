//! C ABI over `zx-core`.
//!
//! Tables cross the boundary as opaque handles that the caller frees with the
//! matching `*_free`. Every fallible call returns a [`ZxStatus`] and writes its
//! result through an out-pointer; on failure the message is kept per thread and
//! read back with [`zx_last_error_message`]. Panics never unwind into C.

use std::cell::RefCell;
use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use zx_core::spectrum::{phi1, phi2, SpectrumConfig};
use zx_core::{Error, MangoldtTable, ZeroTable};

/// Status of a call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZxStatus {
    Ok = 0,
    NullPointer = 1,
    Domain = 2,
    OutOfRange = 3,
    Parse = 4,
    Config = 5,
    Integrity = 6,
    Io = 7,
    InvalidUtf8 = 8,
    Panic = 9,
}

/// Λ(n) for `0 ≤ n ≤ limit`.
pub struct ZxMangoldtTable(MangoldtTable);

/// Zeros ordered by ordinate, complete to a height.
pub struct ZxZeroTable(ZeroTable);

/// One estimate of Λ(t). Bounds that do not apply are NaN;
/// `bound_satisfied` is 1, 0, or −1 when no bound applies.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZxEstimate {
    pub t: f64,
    pub height: f64,
    pub x: f64,
    pub kernel_sum: f64,
    pub estimate: f64,
    /// Λ(t), zero for non-integer t.
    pub target: f64,
    pub abs_error: f64,
    pub tail_bound: f64,
    pub theorem_bound: f64,
    pub total_bound: f64,
    pub zeros_used: usize,
    pub bound_satisfied: i32,
}

thread_local! {
    static LAST_ERROR: RefCell<String> = const { RefCell::new(String::new()) };
}

fn set_error(msg: String) {
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

fn status_of(err: &Error) -> ZxStatus {
    match err {
        Error::Domain(_) => ZxStatus::Domain,
        Error::OutOfRange(_) => ZxStatus::OutOfRange,
        Error::Format { .. } | Error::Order { .. } => ZxStatus::Parse,
        Error::Config(_) => ZxStatus::Config,
        Error::Integrity(_) => ZxStatus::Integrity,
        Error::Io(_) => ZxStatus::Io,
    }
}

/// Runs `body`, turning errors and panics into a status.
fn guard(body: impl FnOnce() -> Result<(), (ZxStatus, String)>) -> ZxStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            set_error(String::new());
            ZxStatus::Ok
        }
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            ZxStatus::Panic
        }
    }
}

fn core<T>(r: zx_core::Result<T>) -> Result<T, (ZxStatus, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

fn null(what: &str) -> (ZxStatus, String) {
    (ZxStatus::NullPointer, format!("{what} is null"))
}

unsafe fn text<'a>(s: *const c_char, what: &str) -> Result<&'a str, (ZxStatus, String)> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|e| (ZxStatus::InvalidUtf8, format!("{what}: {e}")))
}

unsafe fn write<T>(out: *mut T, value: T, what: &str) -> Result<(), (ZxStatus, String)> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, (ZxStatus, String)> {
    p.as_ref().ok_or_else(|| null(what))
}

/// Copies the calling thread's last error message into `buf` (NUL-terminated,
/// truncated to `len`). Returns the full message length plus one, so a caller
/// can size a buffer by passing `len = 0`.
///
/// # Safety
/// `buf` must be null or point to `len` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn zx_last_error_message(buf: *mut c_char, len: usize) -> usize {
    LAST_ERROR.with(|e| {
        let msg = e.borrow();
        if !buf.is_null() && len > 0 {
            let n = msg.len().min(len - 1);
            ptr::copy_nonoverlapping(msg.as_ptr().cast::<c_char>(), buf, n);
            *buf.add(n) = 0;
        }
        msg.len() + 1
    })
}

/// Library version, a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn zx_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Sieves Λ up to `limit`.
///
/// # Safety
/// `out` must be a valid pointer to write the handle to.
#[no_mangle]
pub unsafe extern "C" fn zx_mangoldt_sieve(
    limit: usize,
    out: *mut *mut ZxMangoldtTable,
) -> ZxStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let table = core(zx_core::sieve_mangoldt(limit))?;
        write(out, Box::into_raw(Box::new(ZxMangoldtTable(table))), "out")
    })
}

/// Λ(n) from a sieved table.
///
/// # Safety
/// `table` must come from [`zx_mangoldt_sieve`]; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn zx_mangoldt_table_get(
    table: *const ZxMangoldtTable,
    n: usize,
    out: *mut f64,
) -> ZxStatus {
    guard(|| {
        let t = handle(table, "table")?;
        let v = t.0.get(n).ok_or_else(|| {
            (
                ZxStatus::OutOfRange,
                format!("n = {n} exceeds the sieve limit {}", t.0.limit()),
            )
        })?;
        write(out, v, "out")
    })
}

/// Sieve limit of the table, 0 for null.
///
/// # Safety
/// `table` must be null or come from [`zx_mangoldt_sieve`].
#[no_mangle]
pub unsafe extern "C" fn zx_mangoldt_table_limit(table: *const ZxMangoldtTable) -> usize {
    table.as_ref().map_or(0, |t| t.0.limit())
}

/// # Safety
/// `table` must be null or an unfreed handle from [`zx_mangoldt_sieve`].
#[no_mangle]
pub unsafe extern "C" fn zx_mangoldt_table_free(table: *mut ZxMangoldtTable) {
    if !table.is_null() {
        drop(Box::from_raw(table));
    }
}

/// Λ(n) by factorization, no table needed.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn zx_mangoldt(n: u64, out: *mut f64) -> ZxStatus {
    guard(|| write(out, core(zx_core::mangoldt(n))?, "out"))
}

fn publish(out: *mut *mut ZxZeroTable, table: ZeroTable) -> Result<(), (ZxStatus, String)> {
    unsafe { write(out, Box::into_raw(Box::new(ZxZeroTable(table))), "out") }
}

/// Parses a zero table from text in the zero-table format.
///
/// # Safety
/// `src` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn zx_zeros_parse(
    src: *const c_char,
    out: *mut *mut ZxZeroTable,
) -> ZxStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let s = text(src, "text")?;
        publish(out, core(zx_core::load_zeros(s.as_bytes()))?)
    })
}

/// Reads a zero table file.
///
/// # Safety
/// `path` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn zx_zeros_load(
    path: *const c_char,
    out: *mut *mut ZxZeroTable,
) -> ZxStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let p = text(path, "path")?;
        publish(out, core(zx_core::cli::read_zero_file(p.as_ref()))?)
    })
}

/// Finds every zero with ordinate up to `height` (10 ≤ height ≤ 1e5).
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn zx_zeros_compute(height: f64, out: *mut *mut ZxZeroTable) -> ZxStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        publish(out, core(zx_core::find_zeros(height))?)
    })
}

/// Number of zeros, 0 for null.
///
/// # Safety
/// `table` must be null or a live zero-table handle.
#[no_mangle]
pub unsafe extern "C" fn zx_zeros_len(table: *const ZxZeroTable) -> usize {
    table.as_ref().map_or(0, |t| t.0.len())
}

/// Height to which the table is complete, NaN for null.
///
/// # Safety
/// `table` must be null or a live zero-table handle.
#[no_mangle]
pub unsafe extern "C" fn zx_zeros_height(table: *const ZxZeroTable) -> f64 {
    table.as_ref().map_or(f64::NAN, |t| t.0.height())
}

/// Ordinate `γ` and offset `μ = ½ − β` of zero `index` (from 0).
///
/// # Safety
/// `table` must be a live handle; `gamma` and `mu` must be writable.
#[no_mangle]
pub unsafe extern "C" fn zx_zeros_get(
    table: *const ZxZeroTable,
    index: usize,
    gamma: *mut f64,
    mu: *mut f64,
) -> ZxStatus {
    guard(|| {
        let t = handle(table, "table")?;
        let z = t.0.zeros().get(index).ok_or_else(|| {
            (
                ZxStatus::OutOfRange,
                format!("index {index} past the {} zeros", t.0.len()),
            )
        })?;
        if gamma.is_null() || mu.is_null() {
            return Err(null("gamma/mu"));
        }
        gamma.write(z.gamma());
        mu.write(z.mu());
        Ok(())
    })
}

/// # Safety
/// `table` must be null or an unfreed zero-table handle.
#[no_mangle]
pub unsafe extern "C" fn zx_zeros_free(table: *mut ZxZeroTable) {
    if !table.is_null() {
        drop(Box::from_raw(table));
    }
}

/// Estimates Λ(t) from the zeros below `height` with the coupled kernel.
///
/// # Safety
/// `zeros` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn zx_estimate(
    t: f64,
    height: f64,
    zeros: *const ZxZeroTable,
    out: *mut ZxEstimate,
) -> ZxStatus {
    guard(|| {
        let table = handle(zeros, "zeros")?;
        let r = core(zx_core::mangoldt_estimate(t, height, &table.0))?;
        let report = ZxEstimate {
            t: r.t,
            height: r.height,
            x: r.x,
            kernel_sum: r.kernel_sum,
            estimate: r.estimate,
            target: r.target(),
            abs_error: r.abs_error(),
            tail_bound: r.tail_bound,
            theorem_bound: r.theorem_bound.unwrap_or(f64::NAN),
            total_bound: r.total_bound.unwrap_or(f64::NAN),
            zeros_used: r.zeros_used,
            bound_satisfied: r.bound_satisfied().map_or(-1, i32::from),
        };
        write(out, report, "out")
    })
}

unsafe fn spectrum(
    t: f64,
    cutoff: usize,
    c_spec: f64,
    primes: *const ZxMangoldtTable,
    out: *mut f64,
    damped: bool,
) -> ZxStatus {
    guard(|| {
        let table = handle(primes, "primes")?;
        let cfg = core(SpectrumConfig::new(cutoff, c_spec))?;
        let v = if damped {
            phi2(t, &cfg, &table.0)
        } else {
            phi1(t, &cfg, &table.0)
        };
        write(out, core(v)?, "out")
    })
}

/// `Φ₁(t)` with prime-power cutoff `cutoff`.
///
/// # Safety
/// `primes` must be a live handle sieved to at least `cutoff`; `out` must be
/// writable.
#[no_mangle]
pub unsafe extern "C" fn zx_phi1(
    t: f64,
    cutoff: usize,
    primes: *const ZxMangoldtTable,
    out: *mut f64,
) -> ZxStatus {
    spectrum(t, cutoff, 0.0, primes, out, false)
}

/// `Φ₂(t)` with cutoff `cutoff` and `√t` coefficient `c_spec`.
///
/// # Safety
/// As [`zx_phi1`].
#[no_mangle]
pub unsafe extern "C" fn zx_phi2(
    t: f64,
    cutoff: usize,
    c_spec: f64,
    primes: *const ZxMangoldtTable,
    out: *mut f64,
) -> ZxStatus {
    spectrum(t, cutoff, c_spec, primes, out, true)
}
