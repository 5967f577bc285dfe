//! C ABI for the qtcat library.
//!
//! Polynomials are opaque handles created by the `qtcat_genfun_*`
//! constructors and released with [`qtcat_poly_free`]. Strings returned
//! by the emitters are heap-allocated and must be released with
//! [`qtcat_string_free`]. Every entry point catches panics and reports
//! them as [`QtcatStatus::Panic`] instead of unwinding across the
//! boundary.

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use qtcat::dyck::genfun;
use qtcat::garsia_haiman::ac_genfun;
use qtcat::ratslope::rs_genfun;
use qtcat::verify::run_suite;
use qtcat::QtPoly;

/// Opaque polynomial handle.
pub struct QtcatPoly(QtPoly);

/// Status codes returned by fallible entry points.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum QtcatStatus {
    /// Success.
    Ok = 0,
    /// A verification suite ran and reported failures.
    VerifyFailed = 1,
    /// Invalid arguments.
    Usage = 2,
    /// A required pointer argument was null.
    NullArgument = 3,
    /// An internal panic was caught.
    Panic = 4,
}

fn poly_out(out: *mut *mut QtcatPoly, compute: impl FnOnce() -> Option<QtPoly>) -> QtcatStatus {
    if out.is_null() {
        return QtcatStatus::NullArgument;
    }
    match catch_unwind(AssertUnwindSafe(compute)) {
        Ok(Some(p)) => {
            unsafe { *out = Box::into_raw(Box::new(QtcatPoly(p))) };
            QtcatStatus::Ok
        }
        Ok(None) => QtcatStatus::Usage,
        Err(_) => QtcatStatus::Panic,
    }
}

/// Library version as a static string; never freed by the caller.
#[no_mangle]
pub extern "C" fn qtcat_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Combinatorial generating function for m-Dyck words of length n.
///
/// # Safety
/// `out` must be a valid pointer to a pointer slot.
#[no_mangle]
pub unsafe extern "C" fn qtcat_genfun(n: u32, m: u32, out: *mut *mut QtcatPoly) -> QtcatStatus {
    poly_out(out, || {
        (n >= 1 && m >= 1).then(|| genfun(n as usize, m))
    })
}

/// Garsia-Haiman polynomial for the same parameters.
///
/// # Safety
/// `out` must be a valid pointer to a pointer slot.
#[no_mangle]
pub unsafe extern "C" fn qtcat_genfun_gh(n: u32, m: u32, out: *mut *mut QtcatPoly) -> QtcatStatus {
    poly_out(out, || ac_genfun(n, m).ok())
}

/// Rational-slope generating function for r x s Dyck paths.
///
/// # Safety
/// `out` must be a valid pointer to a pointer slot.
#[no_mangle]
pub unsafe extern "C" fn qtcat_genfun_rational(
    r: u32,
    s: u32,
    out: *mut *mut QtcatPoly,
) -> QtcatStatus {
    poly_out(out, || (r >= 1 && s >= 1).then(|| rs_genfun(r, s)))
}

/// Release a polynomial handle. Null is ignored.
///
/// # Safety
/// `p` must be null or a handle produced by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qtcat_poly_free(p: *mut QtcatPoly) {
    if !p.is_null() {
        drop(unsafe { Box::from_raw(p) });
    }
}

unsafe fn emit_string(p: *const QtcatPoly, render: impl Fn(&QtPoly) -> String) -> *mut c_char {
    if p.is_null() {
        return ptr::null_mut();
    }
    let text = render(unsafe { &(*p).0 });
    CString::new(text).map_or(ptr::null_mut(), CString::into_raw)
}

/// Canonical JSON form of a polynomial; free with `qtcat_string_free`.
///
/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn qtcat_poly_json(p: *const QtcatPoly) -> *mut c_char {
    unsafe { emit_string(p, |poly| poly.to_json_string()) }
}

/// Human-readable text form; free with `qtcat_string_free`.
///
/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn qtcat_poly_text(p: *const QtcatPoly) -> *mut c_char {
    unsafe { emit_string(p, |poly| poly.to_string()) }
}

/// Coefficient of q^j t^k as a decimal string (coefficients may exceed
/// any fixed-width integer); free with `qtcat_string_free`.
///
/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn qtcat_poly_coeff(p: *const QtcatPoly, j: u32, k: u32) -> *mut c_char {
    unsafe { emit_string(p, |poly| poly.coeff(j, k).to_string()) }
}

/// 1 when the two polynomials are equal, 0 when not, -1 on null input.
///
/// # Safety
/// `a` and `b` must be null or live handles.
#[no_mangle]
pub unsafe extern "C" fn qtcat_poly_eq(a: *const QtcatPoly, b: *const QtcatPoly) -> i32 {
    if a.is_null() || b.is_null() {
        return -1;
    }
    i32::from(unsafe { (*a).0 == (*b).0 })
}

/// 1 when p(q,t) = p(t,q), 0 when not, -1 on null input.
///
/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn qtcat_poly_is_symmetric(p: *const QtcatPoly) -> i32 {
    if p.is_null() {
        return -1;
    }
    i32::from(unsafe { (*p).0.is_symmetric() })
}

/// Release a string produced by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string produced by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qtcat_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Run a verification suite ("symmetry", "gh", "coeffs", "n5",
/// "ratslope", "gm", "involution", "all"). When `report_json` is
/// non-null it receives the machine-readable report; free it with
/// `qtcat_string_free`.
///
/// # Safety
/// `suite` must be a NUL-terminated string; `report_json` may be null.
#[no_mangle]
pub unsafe extern "C" fn qtcat_verify(
    suite: *const c_char,
    m_max: u32,
    report_json: *mut *mut c_char,
) -> QtcatStatus {
    if suite.is_null() {
        return QtcatStatus::NullArgument;
    }
    let Ok(name) = unsafe { CStr::from_ptr(suite) }.to_str() else {
        return QtcatStatus::Usage;
    };
    let outcome = catch_unwind(AssertUnwindSafe(|| run_suite(name, m_max)));
    match outcome {
        Ok(Ok(report)) => {
            if !report_json.is_null() {
                let json = report.to_json().to_string();
                unsafe {
                    *report_json = CString::new(json).map_or(ptr::null_mut(), CString::into_raw);
                }
            }
            if report.passed() {
                QtcatStatus::Ok
            } else {
                QtcatStatus::VerifyFailed
            }
        }
        Ok(Err(_)) => QtcatStatus::Usage,
        Err(_) => QtcatStatus::Panic,
    }
}
