//! C ABI for e8kit.
//!
//! Every function returns an [`E8Status`]; results come back through out
//! pointers. Objects are opaque handles owned by the caller and released
//! with the matching `*_free` function. After a non-OK status,
//! [`e8_last_error`] describes the failure on the calling thread.
//!
//! Elements use the approximate backend: 248 complex coordinates passed as
//! separate real and imaginary arrays.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use e8kit::e8::E8;
use e8kit::orbits::{reduce_w, Witness};
use e8kit::report::{run, Backend, Format, Report, RunConfig, Suite};
use e8kit::space::Vector;
use e8kit::Error;
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Number of coordinates of an e8 element.
pub const E8_DIM: usize = 248;

/// Result code of every exported function.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum E8Status {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Precondition = 3,
    Unsupported = 4,
    Internal = 5,
    Config = 6,
    Panic = 7,
}

/// An element of e8 with complex floating coordinates.
pub struct E8Element(E8<Complex64>);

/// A finished verification report.
pub struct E8Report {
    report: Report,
    json: CString,
}

/// A reduction witness from a null-cone element to `1_-`.
pub struct E8Witness {
    witness: Witness,
    json: CString,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let text = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = text);
}

fn status_of(e: &Error) -> E8Status {
    match e {
        Error::Backend(_) | Error::Unsupported(_) => E8Status::Unsupported,
        Error::Precondition(_) => E8Status::Precondition,
        Error::Internal(_) => E8Status::Internal,
        Error::Config(_) => E8Status::Config,
    }
}

/// Runs `f`, turning errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), (E8Status, String)>) -> E8Status {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => E8Status::Ok,
        Ok(Err((status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("panic inside e8kit");
            E8Status::Panic
        }
    }
}

fn null(what: &str) -> (E8Status, String) {
    (E8Status::NullPointer, format!("{what} is null"))
}

fn lib_err(e: Error) -> (E8Status, String) {
    (status_of(&e), e.to_string())
}

fn boxed<T>(out: *mut *mut T, value: T) {
    // SAFETY: callers check `out` for null before building `value`.
    unsafe { *out = Box::into_raw(Box::new(value)) };
}

/// Message of the last failure on this thread; empty if none. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn e8_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Builds an element from `len` = 248 real and imaginary parts.
///
/// # Safety
/// `re` and `im` must point to `len` readable doubles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn e8_element_new(re: *const f64, im: *const f64, len: usize, out: *mut *mut E8Element) -> E8Status {
    guard(|| {
        if re.is_null() || im.is_null() || out.is_null() {
            return Err(null("argument"));
        }
        if len != E8_DIM {
            return Err((E8Status::InvalidArgument, format!("expected {E8_DIM} coordinates, got {len}")));
        }
        let (re, im) = (std::slice::from_raw_parts(re, len), std::slice::from_raw_parts(im, len));
        let coords: Vec<Complex64> = re.iter().zip(im).map(|(a, b)| Complex64::new(*a, *b)).collect();
        if coords.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err((E8Status::InvalidArgument, "coordinates must be finite".into()));
        }
        boxed(out, E8Element(E8::from_coords(&coords)));
        Ok(())
    })
}

/// The `k`-th coordinate basis vector; 245, 246, 247 are `1~`, `1^-`, `1_-`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn e8_element_basis(k: usize, out: *mut *mut E8Element) -> E8Status {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        if k >= E8_DIM {
            return Err((E8Status::InvalidArgument, format!("basis index {k} out of range")));
        }
        boxed(out, E8Element(E8::basis(k)));
        Ok(())
    })
}

/// Copies the coordinates into `re` and `im`, each of length `len` = 248.
///
/// # Safety
/// `x` must be a live handle; `re` and `im` must point to `len` writable doubles.
#[no_mangle]
pub unsafe extern "C" fn e8_element_coords(x: *const E8Element, re: *mut f64, im: *mut f64, len: usize) -> E8Status {
    guard(|| {
        if x.is_null() || re.is_null() || im.is_null() {
            return Err(null("argument"));
        }
        if len != E8_DIM {
            return Err((E8Status::InvalidArgument, format!("expected {E8_DIM} coordinates, got {len}")));
        }
        let (re, im) = (std::slice::from_raw_parts_mut(re, len), std::slice::from_raw_parts_mut(im, len));
        for (k, z) in (*x).0.to_coords().into_iter().enumerate() {
            re[k] = z.re;
            im[k] = z.im;
        }
        Ok(())
    })
}

/// `out = [a, b]`.
///
/// # Safety
/// `a` and `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn e8_element_bracket(a: *const E8Element, b: *const E8Element, out: *mut *mut E8Element) -> E8Status {
    guard(|| {
        if a.is_null() || b.is_null() || out.is_null() {
            return Err(null("argument"));
        }
        boxed(out, E8Element((*a).0.bracket(&(*b).0)));
        Ok(())
    })
}

/// `out = sigma'4(x)`, or its `power`-th iterate (`power` taken mod 4).
///
/// # Safety
/// `x` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn e8_element_sigma4(x: *const E8Element, power: u32, out: *mut *mut E8Element) -> E8Status {
    guard(|| {
        if x.is_null() || out.is_null() {
            return Err(null("argument"));
        }
        let mut y = (*x).0.clone();
        for _ in 0..power % 4 {
            y = y.sigma4();
        }
        boxed(out, E8Element(y));
        Ok(())
    })
}

/// Releases an element; null is ignored.
///
/// # Safety
/// `x` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn e8_element_free(x: *mut E8Element) {
    if !x.is_null() {
        drop(Box::from_raw(x));
    }
}

unsafe fn parse_arg<T: std::str::FromStr<Err = Error>>(p: *const c_char, what: &str) -> Result<T, (E8Status, String)> {
    if p.is_null() {
        return Err(null(what));
    }
    let s = CStr::from_ptr(p).to_str().map_err(|_| (E8Status::InvalidArgument, format!("{what} is not UTF-8")))?;
    s.parse().map_err(lib_err)
}

/// Runs a verification suite. `suite` is one of identities, dims, spin10,
/// orbits, wspace, all; `backend` is exact or approx. A negative `samples`
/// keeps each check's default.
///
/// Configuration errors return `E8_STATUS_CONFIG`; failing checks still
/// return `E8_STATUS_OK` and show in [`e8_report_exit_code`].
///
/// # Safety
/// `suite` and `backend` must be NUL-terminated strings; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn e8_report_run(
    suite: *const c_char,
    backend: *const c_char,
    tol: f64,
    seed: u64,
    samples: i64,
    out: *mut *mut E8Report,
) -> E8Status {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let cfg = RunConfig {
            suite: parse_arg::<Suite>(suite, "suite")?,
            backend: parse_arg::<Backend>(backend, "backend")?,
            tol,
            seed,
            samples: usize::try_from(samples).ok(),
            format: Format::Json,
            out: None,
        };
        let report = run(&cfg).map_err(lib_err)?;
        let json = CString::new(report.to_json()).map_err(|e| (E8Status::Internal, e.to_string()))?;
        boxed(out, E8Report { report, json });
        Ok(())
    })
}

/// 0 when every check passed, 1 otherwise; -1 for a null handle.
///
/// # Safety
/// `r` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn e8_report_exit_code(r: *const E8Report) -> i32 {
    if r.is_null() {
        return -1;
    }
    (*r).report.exit_code()
}

/// Number of checks, or 0 for a null handle.
///
/// # Safety
/// `r` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn e8_report_check_count(r: *const E8Report) -> usize {
    if r.is_null() {
        return 0;
    }
    (*r).report.checks.len()
}

/// The report as JSON, valid while the handle lives; null for a null handle.
///
/// # Safety
/// `r` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn e8_report_json(r: *const E8Report) -> *const c_char {
    if r.is_null() {
        return ptr::null();
    }
    (*r).json.as_ptr()
}

/// Releases a report; null is ignored.
///
/// # Safety
/// `r` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn e8_report_free(r: *mut E8Report) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// Reduces a null-cone element of the fixed algebra to `1_-`. `seed` drives
/// the random retries.
///
/// # Safety
/// `x` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn e8_reduce_w(x: *const E8Element, tol: f64, seed: u64, out: *mut *mut E8Witness) -> E8Status {
    guard(|| {
        if x.is_null() || out.is_null() {
            return Err(null("argument"));
        }
        if !(tol.is_finite() && tol > 0.0) {
            return Err((E8Status::InvalidArgument, "tolerance must be positive".into()));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let witness = reduce_w(&(*x).0, tol, &mut rng).map_err(lib_err)?;
        let json = CString::new(witness.to_json().to_string()).map_err(|e| (E8Status::Internal, e.to_string()))?;
        boxed(out, E8Witness { witness, json });
        Ok(())
    })
}

/// Largest coefficient of `end - 1_-`; NaN for a null handle.
///
/// # Safety
/// `w` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn e8_witness_residual(w: *const E8Witness) -> f64 {
    if w.is_null() {
        return f64::NAN;
    }
    (*w).witness.residual
}

/// Number of steps, or 0 for a null handle.
///
/// # Safety
/// `w` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn e8_witness_step_count(w: *const E8Witness) -> usize {
    if w.is_null() {
        return 0;
    }
    (*w).witness.steps.len()
}

/// The witness as JSON, valid while the handle lives; null for a null handle.
///
/// # Safety
/// `w` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn e8_witness_json(w: *const E8Witness) -> *const c_char {
    if w.is_null() {
        return ptr::null();
    }
    (*w).json.as_ptr()
}

/// Releases a witness; null is ignored.
///
/// # Safety
/// `w` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn e8_witness_free(w: *mut E8Witness) {
    if !w.is_null() {
        drop(Box::from_raw(w));
    }
}
