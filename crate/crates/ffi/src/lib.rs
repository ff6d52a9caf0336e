//! C ABI over `supercatalan`.
//!
//! Handles are opaque and owned by the caller until passed to the matching
//! `_free`. Strings returned through out-parameters are NUL-terminated,
//! heap-allocated by Rust and released with [`sc_string_free`]. Every call
//! returns an [`ScStatus`]; on a nonzero status [`sc_last_error_message`]
//! describes the failure on the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use supercatalan::families::{AnyPoly, FamilySpec, SpecError};
use supercatalan::identities::{self, IdentityError, Ranges};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    UnknownId = 3,
    RangeTooLarge = 4,
    Internal = 5,
    Panic = 6,
}

/// Polynomial over the rationals or over `Q(q)`.
pub struct ScPoly(AnyPoly);

/// Identity checker bound to a fixed set of ranges.
pub struct ScVerifier {
    ranges: Ranges,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn fail(status: ScStatus, msg: impl AsRef<str>) -> ScStatus {
    set_error(msg.as_ref());
    status
}

/// Runs `f`, converting panics into [`ScStatus::Panic`] and clearing the
/// error message on success.
fn guard(f: impl FnOnce() -> ScStatus) -> ScStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(ScStatus::Ok) => {
            set_error("");
            ScStatus::Ok
        }
        Ok(status) => status,
        Err(_) => fail(ScStatus::Panic, "panic inside supercatalan"),
    }
}

/// # Safety
/// `p` is NULL or a valid NUL-terminated string.
unsafe fn opt_str<'a>(p: *const c_char) -> Result<Option<&'a str>, ScStatus> {
    if p.is_null() {
        return Ok(None);
    }
    CStr::from_ptr(p)
        .to_str()
        .map(Some)
        .map_err(|_| fail(ScStatus::InvalidArgument, "string is not UTF-8"))
}

/// # Safety
/// `p` is a valid NUL-terminated string.
unsafe fn req_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, ScStatus> {
    opt_str(p)?.ok_or_else(|| fail(ScStatus::NullPointer, format!("{what} is NULL")))
}

/// # Safety
/// `out` is a valid pointer to writable storage.
unsafe fn write_string(out: *mut *mut c_char, s: String) -> ScStatus {
    if out.is_null() {
        return fail(ScStatus::NullPointer, "output pointer is NULL");
    }
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            ScStatus::Ok
        }
        Err(_) => fail(ScStatus::Internal, "string contains NUL"),
    }
}

fn spec_status(e: SpecError) -> ScStatus {
    fail(ScStatus::InvalidArgument, e.to_string())
}

fn identity_status(e: IdentityError) -> ScStatus {
    let status = match e {
        IdentityError::UnknownId(_) => ScStatus::UnknownId,
        IdentityError::RangeTooLarge { .. } => ScStatus::RangeTooLarge,
        IdentityError::Internal { .. } => ScStatus::Internal,
    };
    fail(status, e.to_string())
}

/// Message for the last failed call on this thread; empty after a success.
/// The pointer stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn sc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// # Safety
/// `s` is NULL or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Closed form `p_n` of the family `name` (`lucas`, `l`, `vq`, ...).
/// `s` may be NULL for 1.
///
/// # Safety
/// `name` is a valid string, `s` is NULL or a valid string, `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn sc_family_poly(
    name: *const c_char,
    m: u32,
    s: *const c_char,
    n: u32,
    out: *mut *mut ScPoly,
) -> ScStatus {
    guard(|| {
        if out.is_null() {
            return fail(ScStatus::NullPointer, "output pointer is NULL");
        }
        let name = match req_str(name, "name") {
            Ok(v) => v,
            Err(st) => return st,
        };
        let s = match opt_str(s) {
            Ok(v) => v,
            Err(st) => return st,
        };
        if n > 256 {
            return fail(ScStatus::RangeTooLarge, format!("index {n} exceeds 256"));
        }
        match FamilySpec::parse(name, m as usize, s) {
            Ok(f) => {
                *out = Box::into_raw(Box::new(ScPoly(f.closed_form(n as usize))));
                ScStatus::Ok
            }
            Err(e) => spec_status(e),
        }
    })
}

/// # Safety
/// `p` is NULL or a handle from [`sc_family_poly`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sc_poly_free(p: *mut ScPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Degree of `p`; -1 for the zero polynomial.
///
/// # Safety
/// `p` is a live handle and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn sc_poly_degree(p: *const ScPoly, out: *mut i64) -> ScStatus {
    guard(|| {
        if p.is_null() || out.is_null() {
            return fail(ScStatus::NullPointer, "NULL argument");
        }
        *out = (*p).0.degree().map_or(-1, |d| d as i64);
        ScStatus::Ok
    })
}

/// Canonical rendering of the coefficient of `x^k`.
///
/// # Safety
/// `p` is a live handle and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn sc_poly_coeff(p: *const ScPoly, k: u32, out: *mut *mut c_char) -> ScStatus {
    guard(|| {
        if p.is_null() {
            return fail(ScStatus::NullPointer, "polynomial is NULL");
        }
        write_string(out, (*p).0.coeff(k as usize))
    })
}

/// Whole polynomial, descending powers.
///
/// # Safety
/// `p` is a live handle and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn sc_poly_to_string(p: *const ScPoly, out: *mut *mut c_char) -> ScStatus {
    guard(|| {
        if p.is_null() {
            return fail(ScStatus::NullPointer, "polynomial is NULL");
        }
        write_string(out, (*p).0.to_string())
    })
}

/// Moment `L(x^n)` of the functional `name` (`lambda_m`, `phi_q`, ...).
/// `s` may be NULL for the functional's default.
///
/// # Safety
/// `name` is a valid string, `s` is NULL or a valid string, `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn sc_moment(
    name: *const c_char,
    m: u32,
    s: *const c_char,
    n: u32,
    out: *mut *mut c_char,
) -> ScStatus {
    guard(|| {
        let name = match req_str(name, "name") {
            Ok(v) => v,
            Err(st) => return st,
        };
        let s = match opt_str(s) {
            Ok(v) => v,
            Err(st) => return st,
        };
        if n > 512 {
            return fail(ScStatus::RangeTooLarge, format!("index {n} exceeds 512"));
        }
        match FamilySpec::for_functional(name, m as usize, s) {
            Ok(f) => write_string(out, f.moment(n as usize)),
            Err(e) => spec_status(e),
        }
    })
}

/// # Safety
/// `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn sc_verifier_new(
    max_n: u32,
    max_l: u32,
    max_m: u32,
    max_j: u32,
    order: u32,
    out: *mut *mut ScVerifier,
) -> ScStatus {
    guard(|| {
        if out.is_null() {
            return fail(ScStatus::NullPointer, "output pointer is NULL");
        }
        let ranges = Ranges {
            max_n: max_n as usize,
            max_l: max_l as usize,
            max_m: max_m as usize,
            max_j: max_j as usize,
            order: order as usize,
        };
        if let Err(e) = ranges.validate() {
            return identity_status(e);
        }
        *out = Box::into_raw(Box::new(ScVerifier { ranges }));
        ScStatus::Ok
    })
}

/// # Safety
/// `v` is NULL or a handle from [`sc_verifier_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sc_verifier_free(v: *mut ScVerifier) {
    if !v.is_null() {
        drop(Box::from_raw(v));
    }
}

/// Runs identity `id`; writes point counts and the number of flags.
///
/// # Safety
/// `v` is a live handle, `id` a valid string, out pointers writable or NULL.
#[no_mangle]
pub unsafe extern "C" fn sc_verifier_check(
    v: *const ScVerifier,
    id: *const c_char,
    passed: *mut u64,
    failed: *mut u64,
    flags: *mut u64,
) -> ScStatus {
    guard(|| {
        if v.is_null() {
            return fail(ScStatus::NullPointer, "verifier is NULL");
        }
        let id = match req_str(id, "id") {
            Ok(v) => v,
            Err(st) => return st,
        };
        match identities::check(id, &(*v).ranges) {
            Ok(r) => {
                for (p, value) in [(passed, r.passed()), (failed, r.failed()), (flags, r.flags.len())] {
                    if !p.is_null() {
                        *p = value as u64;
                    }
                }
                ScStatus::Ok
            }
            Err(e) => identity_status(e),
        }
    })
}

/// Report for identity `id` as JSON.
///
/// # Safety
/// `v` is a live handle, `id` a valid string, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sc_verifier_report_json(
    v: *const ScVerifier,
    id: *const c_char,
    out: *mut *mut c_char,
) -> ScStatus {
    guard(|| {
        if v.is_null() {
            return fail(ScStatus::NullPointer, "verifier is NULL");
        }
        let id = match req_str(id, "id") {
            Ok(v) => v,
            Err(st) => return st,
        };
        match identities::check(id, &(*v).ranges) {
            Ok(r) => match serde_json::to_string(&r) {
                Ok(s) => write_string(out, s),
                Err(e) => fail(ScStatus::Internal, e.to_string()),
            },
            Err(e) => identity_status(e),
        }
    })
}

/// Number of registered identities.
#[no_mangle]
pub extern "C" fn sc_identity_count() -> u64 {
    identities::registry().len() as u64
}

/// Id of the `index`-th registered identity, or NULL when out of range.
/// The string is static; do not free it.
#[no_mangle]
pub extern "C" fn sc_identity_id(index: u64) -> *const c_char {
    static IDS: std::sync::OnceLock<Vec<CString>> = std::sync::OnceLock::new();
    let ids = IDS.get_or_init(|| {
        identities::registry().iter().map(|c| CString::new(c.id).expect("ids have no NUL")).collect()
    });
    usize::try_from(index).ok().and_then(|i| ids.get(i)).map_or(ptr::null(), |c| c.as_ptr())
}
