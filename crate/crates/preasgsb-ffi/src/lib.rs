//! C ABI for the `preasgsb` library.
//!
//! Presentations cross the boundary as opaque handles created by
//! [`pgsb_presentation_parse`] and released by [`pgsb_presentation_free`];
//! text crosses as NUL-terminated UTF-8.  Strings returned through out
//! parameters are owned by the caller and must be released with
//! [`pgsb_string_free`].
//!
//! Every fallible call returns a [`PgsbStatus`].  On any status other than
//! `OK` the thread-local message retrieved by [`pgsb_last_error_message`]
//! describes the failure; panics are caught at the boundary and reported as
//! `ERR_PANIC` rather than unwinding into foreign frames.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use preasgsb::gsb::{check_system, complete};
use preasgsb::parse::parse_poly;
use preasgsb::presentation::Presentation;
use preasgsb::Error;

/// Outcome of a call across the C boundary.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PgsbStatus {
    /// The call succeeded.
    Ok = 0,
    /// The input text did not parse or validate.
    ErrParse = 1,
    /// The input was well formed but mathematically unusable, for example a
    /// non-associative multiplication table.
    ErrSemantic = 2,
    /// A required pointer argument was NULL.
    ErrNull = 3,
    /// A string argument was not valid UTF-8.
    ErrUtf8 = 4,
    /// An internal panic was caught at the boundary.
    ErrPanic = 5,
}

/// An opaque parsed presentation.
pub struct PgsbPresentation {
    inner: Presentation,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let text =
        CString::new(msg).unwrap_or_else(|_| CString::new("error text contained NUL").unwrap());
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(text));
}

fn clear_error() {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
}

fn fail(e: &Error) -> PgsbStatus {
    set_error(e.to_string());
    match e {
        Error::NonAssociativeTable { .. }
        | Error::BoundTooSmall { .. }
        | Error::DegreeIncreasing { .. }
        | Error::DegreeAboveCap { .. }
        | Error::ZeroPolynomial => PgsbStatus::ErrSemantic,
        _ => PgsbStatus::ErrParse,
    }
}

fn null_arg() -> PgsbStatus {
    set_error("required pointer argument was NULL".into());
    PgsbStatus::ErrNull
}

fn guarded(f: impl FnOnce() -> PgsbStatus) -> PgsbStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => {
            set_error("internal panic".into());
            PgsbStatus::ErrPanic
        }
    }
}

/// Reads a NUL-terminated UTF-8 argument.
///
/// # Safety
/// `text` must point to a NUL-terminated string valid for the duration of
/// the call.
unsafe fn read_str<'a>(text: *const c_char) -> Result<&'a str, PgsbStatus> {
    match unsafe { CStr::from_ptr(text) }.to_str() {
        Ok(s) => Ok(s),
        Err(_) => {
            set_error("argument was not valid UTF-8".into());
            Err(PgsbStatus::ErrUtf8)
        }
    }
}

fn give_string(s: String) -> *mut c_char {
    CString::new(s).expect("no interior NUL").into_raw()
}

/// Parse presentation text into a fresh handle.
///
/// On success `*out` receives a handle to free with
/// [`pgsb_presentation_free`]; on failure `*out` is NULL.
///
/// # Safety
/// `text` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pgsb_presentation_parse(
    text: *const c_char,
    out: *mut *mut PgsbPresentation,
) -> PgsbStatus {
    guarded(|| {
        if text.is_null() || out.is_null() {
            return null_arg();
        }
        unsafe { *out = ptr::null_mut() };
        let source = match unsafe { read_str(text) } {
            Ok(s) => s,
            Err(status) => return status,
        };
        match Presentation::parse(source) {
            Ok(inner) => {
                clear_error();
                let handle = Box::new(PgsbPresentation { inner });
                unsafe { *out = Box::into_raw(handle) };
                PgsbStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// Render a presentation in its canonical text form.
///
/// On success `*out` receives a string to free with [`pgsb_string_free`].
///
/// # Safety
/// `pres` must be a live handle from this library and `out` a valid
/// pointer.
#[no_mangle]
pub unsafe extern "C" fn pgsb_presentation_to_string(
    pres: *const PgsbPresentation,
    out: *mut *mut c_char,
) -> PgsbStatus {
    guarded(|| {
        if pres.is_null() || out.is_null() {
            return null_arg();
        }
        let p = unsafe { &*pres };
        clear_error();
        unsafe { *out = give_string(p.inner.to_string()) };
        PgsbStatus::Ok
    })
}

/// Number of relations held by a presentation; 0 for a NULL handle.
///
/// # Safety
/// `pres` must be NULL or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn pgsb_relation_count(pres: *const PgsbPresentation) -> usize {
    if pres.is_null() {
        return 0;
    }
    unsafe { &*pres }.inner.relations().len()
}

/// Reduce a polynomial, given as text over the presentation's alphabet, to
/// its normal form.
///
/// On success `*out` receives the rendered normal form (`"ZERO"` for the
/// zero class), to free with [`pgsb_string_free`].
///
/// # Safety
/// `pres` must be a live handle, `poly` a valid NUL-terminated string, and
/// `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pgsb_normal_form(
    pres: *const PgsbPresentation,
    poly: *const c_char,
    out: *mut *mut c_char,
) -> PgsbStatus {
    guarded(|| {
        if pres.is_null() || poly.is_null() || out.is_null() {
            return null_arg();
        }
        let p = unsafe { &*pres };
        let source = match unsafe { read_str(poly) } {
            Ok(s) => s,
            Err(status) => return status,
        };
        match parse_poly(source, &p.inner.alphabet) {
            Ok(q) => {
                let nf = p.inner.to_system().normal_form(&q);
                clear_error();
                unsafe { *out = give_string(nf.display(&p.inner.alphabet).to_string()) };
                PgsbStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// Reduce every composition of the presentation within the bound and count
/// the ones that do not vanish; zero in `*failures` means the system is
/// closed at this bound.
///
/// # Safety
/// `pres` must be a live handle and `failures` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pgsb_check(
    pres: *const PgsbPresentation,
    max_deg: usize,
    failures: *mut usize,
) -> PgsbStatus {
    guarded(|| {
        if pres.is_null() || failures.is_null() {
            return null_arg();
        }
        let p = unsafe { &*pres };
        let report = check_system(&p.inner.to_system(), &p.inner.alphabet, max_deg);
        clear_error();
        unsafe { *failures = report.failures.len() };
        PgsbStatus::Ok
    })
}

/// Close the presentation under composition within the bound, spending at
/// most `max_rounds` enlargement rounds.
///
/// On success `*out` receives a fresh handle for the (possibly unchanged)
/// system and `*converged` records whether a final pass found no surviving
/// composition.
///
/// # Safety
/// `pres` must be a live handle; `out` and `converged` must be valid
/// pointers.
#[no_mangle]
pub unsafe extern "C" fn pgsb_complete(
    pres: *const PgsbPresentation,
    max_deg: usize,
    max_rounds: usize,
    out: *mut *mut PgsbPresentation,
    converged: *mut bool,
) -> PgsbStatus {
    guarded(|| {
        if pres.is_null() || out.is_null() || converged.is_null() {
            return null_arg();
        }
        unsafe { *out = ptr::null_mut() };
        let p = unsafe { &*pres };
        let (done, report) = complete(&p.inner.to_system(), &p.inner.alphabet, max_deg, max_rounds);
        let result = Presentation::new(
            p.inner.alphabet.clone(),
            p.inner.table_path.clone(),
            done.relations().to_vec(),
        );
        clear_error();
        let handle = Box::new(PgsbPresentation { inner: result });
        unsafe {
            *out = Box::into_raw(handle);
            *converged = report.converged;
        }
        PgsbStatus::Ok
    })
}

/// Count the reduced words of each degree `1..=max_deg` into the
/// caller-provided array `counts` of length `max_deg`.
///
/// # Safety
/// `pres` must be a live handle and `counts` valid for `max_deg` writes.
#[no_mangle]
pub unsafe extern "C" fn pgsb_dims(
    pres: *const PgsbPresentation,
    max_deg: usize,
    counts: *mut usize,
) -> PgsbStatus {
    guarded(|| {
        if pres.is_null() || (counts.is_null() && max_deg > 0) {
            return null_arg();
        }
        let p = unsafe { &*pres };
        let dims = p
            .inner
            .to_system()
            .reduced_counts(&p.inner.alphabet, max_deg);
        clear_error();
        for (i, d) in dims.into_iter().enumerate() {
            unsafe { *counts.add(i) = d };
        }
        PgsbStatus::Ok
    })
}

/// Release a presentation handle; NULL is ignored.
///
/// # Safety
/// `pres` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pgsb_presentation_free(pres: *mut PgsbPresentation) {
    if !pres.is_null() {
        drop(unsafe { Box::from_raw(pres) });
    }
}

/// Release a string produced by this library; NULL is ignored.
///
/// # Safety
/// `s` must be NULL or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pgsb_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

/// The message for this thread's most recent failure, or NULL if the last
/// call succeeded.  The caller frees the string with [`pgsb_string_free`].
#[no_mangle]
pub extern "C" fn pgsb_last_error_message() -> *mut c_char {
    LAST_ERROR.with(|slot| match &*slot.borrow() {
        Some(text) => text.clone().into_raw(),
        None => ptr::null_mut(),
    })
}
