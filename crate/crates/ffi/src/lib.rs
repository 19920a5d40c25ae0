//! C interface to `hurwitz`.
//!
//! Every function returns a [`HurwitzStatus`]. On failure the message is
//! available from [`hurwitz_last_error_message`] on the same thread until
//! the next failing call. Handles are opaque and must be released with
//! their matching `_free` function; strings handed out by the library are
//! released with [`hurwitz_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use hurwitz::closedform::HurwitzRecord as Record;
use hurwitz::verify::{self, VerifyOptions};
use hurwitz::{HurwitzError, Method, Partition, Truncation};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HurwitzStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Parse = 3,
    /// The input is larger than the chosen method supports.
    Size = 4,
    /// A verification, integrality or convergence check failed.
    Failed = 5,
    Panic = 6,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HurwitzMethod {
    Oracle = 0,
    Cutjoin = 1,
    Closed = 2,
}

/// A parsed partition.
pub struct HurwitzPartition(Partition);

/// One computed Hurwitz number.
pub struct HurwitzRecord(Record);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(CString::new(msg).expect("nul bytes removed")));
}

fn status_of(e: &HurwitzError) -> HurwitzStatus {
    match e {
        HurwitzError::Parse(_) => HurwitzStatus::Parse,
        HurwitzError::Size(_) => HurwitzStatus::Size,
        HurwitzError::Integrality(_) | HurwitzError::Convergence(_) => HurwitzStatus::Failed,
        _ => HurwitzStatus::InvalidArgument,
    }
}

/// Runs `f`, turning errors and panics into a status and a stored message.
fn guard(f: impl FnOnce() -> Result<(), (HurwitzStatus, String)>) -> HurwitzStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => HurwitzStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            HurwitzStatus::Panic
        }
    }
}

fn lift(e: HurwitzError) -> (HurwitzStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (HurwitzStatus, String) {
    (HurwitzStatus::NullPointer, format!("{what} is null"))
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s).expect("library strings contain no nul bytes").into_raw()
}

/// Message of the last failure on this thread, or null if none. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn hurwitz_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn hurwitz_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Releases a string returned by this library.
///
/// # Safety
///
/// `s` must be null or a pointer obtained from this library that has not
/// been freed yet.
#[no_mangle]
pub unsafe extern "C" fn hurwitz_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a partition literal such as `"3,2,2"` or `"(3,2,2)"`.
///
/// # Safety
///
/// `literal` must be a valid NUL-terminated string and `out` a valid
/// pointer to writable storage.
#[no_mangle]
pub unsafe extern "C" fn hurwitz_partition_parse(
    literal: *const c_char,
    out: *mut *mut HurwitzPartition,
) -> HurwitzStatus {
    guard(|| {
        if literal.is_null() {
            return Err(null("literal"));
        }
        if out.is_null() {
            return Err(null("out"));
        }
        let s = CStr::from_ptr(literal)
            .to_str()
            .map_err(|_| (HurwitzStatus::Parse, "literal is not UTF-8".to_string()))?;
        let alpha: Partition = s.parse().map_err(lift)?;
        *out = Box::into_raw(Box::new(HurwitzPartition(alpha)));
        Ok(())
    })
}

/// # Safety
///
/// `p` must be null or a handle from [`hurwitz_partition_parse`] that has
/// not been freed yet.
#[no_mangle]
pub unsafe extern "C" fn hurwitz_partition_free(p: *mut HurwitzPartition) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Sum of the parts, or 0 for a null handle.
///
/// # Safety
///
/// `p` must be null or a live partition handle.
#[no_mangle]
pub unsafe extern "C" fn hurwitz_partition_degree(p: *const HurwitzPartition) -> u32 {
    p.as_ref().map_or(0, |p| p.0.n())
}

/// Number of parts, or 0 for a null handle.
///
/// # Safety
///
/// `p` must be null or a live partition handle.
#[no_mangle]
pub unsafe extern "C" fn hurwitz_partition_length(p: *const HurwitzPartition) -> u32 {
    p.as_ref().map_or(0, |p| p.0.len())
}

/// Canonical rendering such as `"(3,2,2)"`; free with [`hurwitz_string_free`].
///
/// # Safety
///
/// `p` must be a live partition handle and `out` valid for writing.
#[no_mangle]
pub unsafe extern "C" fn hurwitz_partition_to_string(
    p: *const HurwitzPartition,
    out: *mut *mut c_char,
) -> HurwitzStatus {
    guard(|| {
        let p = p.as_ref().ok_or_else(|| null("partition"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = to_c_string(p.0.to_string());
        Ok(())
    })
}

fn method_from(m: u32) -> Result<Method, (HurwitzStatus, String)> {
    match m {
        x if x == HurwitzMethod::Oracle as u32 => Ok(Method::Oracle),
        x if x == HurwitzMethod::Cutjoin as u32 => Ok(Method::CutJoin),
        x if x == HurwitzMethod::Closed as u32 => Ok(Method::Closed),
        _ => Err((HurwitzStatus::InvalidArgument, format!("unknown method {m}"))),
    }
}

/// Computes `c_g(α)` and the Hurwitz number. `method` is a
/// [`HurwitzMethod`] value.
///
/// # Safety
///
/// `alpha` must be a live partition handle and `out` valid for writing.
#[no_mangle]
pub unsafe extern "C" fn hurwitz_count(
    alpha: *const HurwitzPartition,
    genus: u32,
    method: u32,
    out: *mut *mut HurwitzRecord,
) -> HurwitzStatus {
    guard(|| {
        let alpha = alpha.as_ref().ok_or_else(|| null("alpha"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        let method = method_from(method)?;
        let rec = hurwitz::hurwitz_number(&alpha.0, genus, method).map_err(lift)?;
        *out = Box::into_raw(Box::new(HurwitzRecord(rec)));
        Ok(())
    })
}

/// # Safety
///
/// `rec` must be null or a handle from [`hurwitz_count`] that has not been
/// freed yet.
#[no_mangle]
pub unsafe extern "C" fn hurwitz_record_free(rec: *mut HurwitzRecord) {
    if !rec.is_null() {
        drop(Box::from_raw(rec));
    }
}

/// Factorization length `r`, or 0 for a null handle.
///
/// # Safety
///
/// `rec` must be null or a live record handle.
#[no_mangle]
pub unsafe extern "C" fn hurwitz_record_r(rec: *const HurwitzRecord) -> u32 {
    rec.as_ref().map_or(0, |r| r.0.r)
}

/// The count `c_g(α)` as a decimal string; free with [`hurwitz_string_free`].
///
/// # Safety
///
/// `rec` must be a live record handle and `out` valid for writing.
#[no_mangle]
pub unsafe extern "C" fn hurwitz_record_count(
    rec: *const HurwitzRecord,
    out: *mut *mut c_char,
) -> HurwitzStatus {
    guard(|| {
        let rec = rec.as_ref().ok_or_else(|| null("record"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = to_c_string(rec.0.c.to_string());
        Ok(())
    })
}

/// The Hurwitz number as `"num/den"` (den omitted when 1); free with
/// [`hurwitz_string_free`].
///
/// # Safety
///
/// `rec` must be a live record handle and `out` valid for writing.
#[no_mangle]
pub unsafe extern "C" fn hurwitz_record_mu(rec: *const HurwitzRecord, out: *mut *mut c_char) -> HurwitzStatus {
    guard(|| {
        let rec = rec.as_ref().ok_or_else(|| null("record"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = to_c_string(rec.0.mu.to_string());
        Ok(())
    })
}

/// Runs every identity check at truncation `(n, k, g)` and writes the JSON
/// report to `report` (free with [`hurwitz_string_free`]) and whether every
/// check passed to `all_passed`. A failing check is not an error: the
/// status is `Ok` and `all_passed` is false.
///
/// # Safety
///
/// `report` and `all_passed` must be valid for writing.
#[no_mangle]
pub unsafe extern "C" fn hurwitz_verify(
    n: u32,
    k: u32,
    g: u32,
    report: *mut *mut c_char,
    all_passed: *mut bool,
) -> HurwitzStatus {
    guard(|| {
        if report.is_null() {
            return Err(null("report"));
        }
        if all_passed.is_null() {
            return Err(null("all_passed"));
        }
        let opts = VerifyOptions { trunc: Truncation::new(n, k, g).map_err(lift)?, ..VerifyOptions::default() };
        let r = verify::run_all(&opts).map_err(lift)?;
        *all_passed = r.all_passed();
        *report = to_c_string(r.to_json());
        Ok(())
    })
}
