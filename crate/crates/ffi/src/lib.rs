//! C ABI for the theta-codes library.
//!
//! Conventions:
//! - Opaque handles: [`TcProblem`] (a parsed problem file) and [`TcReport`]
//!   (the result of one command). Free them with the matching `_free`.
//! - Every fallible call returns a status code: 0 success, 2 invalid input,
//!   3 unmet precondition / unsupported map, 4 budget exhausted, 1 internal
//!   certificate failure (mirroring the CLI exit codes).
//! - On failure the thread-local error message is readable via
//!   [`tc_last_error_message`]; strings returned by this library must be
//!   released with [`tc_string_free`].
//!
//! The generated header lives at `include/theta_codes.h` and is refreshed
//! by the build script whenever this file changes.

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::ptr;

use theta_codes::problem::{parse_problem, ProblemFile};
use theta_codes::report::{self, AugmentFamily, Report};
use theta_codes::words::Word;
use theta_codes::Error;

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(e: &Error) {
    let msg = CString::new(e.to_string()).unwrap_or_else(|_| CString::new("error").unwrap());
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(msg));
}

fn clear_error() {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
}

fn status_of(e: &Error) -> c_int {
    e.category().code() as c_int
}

/// Opaque handle to a parsed problem file.
pub struct TcProblem(ProblemFile);

/// Opaque handle to a finished report.
pub struct TcReport(Report);

/// Families accepted by `tc_run_augment`.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq)]
pub enum TcFamily {
    TcFamilyInvariant = 0,
    TcFamilyPrefix = 1,
    TcFamilyCircular = 2,
    TcFamilySync = 3,
}

impl From<TcFamily> for AugmentFamily {
    fn from(f: TcFamily) -> Self {
        match f {
            TcFamily::TcFamilyInvariant => AugmentFamily::Invariant,
            TcFamily::TcFamilyPrefix => AugmentFamily::Prefix,
            TcFamily::TcFamilyCircular => AugmentFamily::Circular,
            TcFamily::TcFamilySync => AugmentFamily::Sync,
        }
    }
}

/// # Safety
/// `text` must be a valid NUL-terminated UTF-8 string. On success writes a
/// handle to `out` (owned by the caller, release with `tc_problem_free`).
#[no_mangle]
pub unsafe extern "C" fn tc_problem_parse(
    text: *const c_char,
    out: *mut *mut TcProblem,
) -> c_int {
    clear_error();
    if text.is_null() || out.is_null() {
        set_error(&Error::BadArgument("null pointer".into()));
        return 2;
    }
    let Ok(text) = CStr::from_ptr(text).to_str() else {
        set_error(&Error::BadArgument("problem text is not UTF-8".into()));
        return 2;
    };
    match parse_problem(text) {
        Ok(p) => {
            *out = Box::into_raw(Box::new(TcProblem(p)));
            0
        }
        Err(e) => {
            set_error(&e);
            status_of(&e)
        }
    }
}

/// # Safety
/// `problem` must come from `tc_problem_parse` and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn tc_problem_free(problem: *mut TcProblem) {
    if !problem.is_null() {
        drop(Box::from_raw(problem));
    }
}

unsafe fn run_command(
    problem: *const TcProblem,
    out: *mut *mut TcReport,
    f: impl FnOnce(&ProblemFile) -> Result<Report, Error>,
) -> c_int {
    clear_error();
    if problem.is_null() || out.is_null() {
        set_error(&Error::BadArgument("null pointer".into()));
        return 2;
    }
    match f(&(*problem).0) {
        Ok(r) => {
            *out = Box::into_raw(Box::new(TcReport(r)));
            0
        }
        Err(e) => {
            set_error(&e);
            status_of(&e)
        }
    }
}

/// Full property report. `delay_cap` and `sync_cap` bound the delay and
/// synchronization searches (the CLI default is 8 for both).
///
/// # Safety
/// `problem` must be a live handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tc_run_check(
    problem: *const TcProblem,
    delay_cap: u32,
    sync_cap: u32,
    out: *mut *mut TcReport,
) -> c_int {
    run_command(problem, out, |p| report::run_check(p, delay_cap, sync_cap))
}

/// Invariant free hull and defect data.
///
/// # Safety
/// `problem` must be a live handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tc_run_hull(
    problem: *const TcProblem,
    out: *mut *mut TcReport,
) -> c_int {
    run_command(problem, out, report::run_hull)
}

/// Family-preserving augmentation. `witness` may be NULL to use the file's
/// witness (or the natural choice); a non-NULL value overrides both.
/// `sync_k` is the synchronization delay for the sync family.
///
/// # Safety
/// `problem` must be a live handle; `witness` NULL or a valid NUL-terminated
/// UTF-8 string; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tc_run_augment(
    problem: *const TcProblem,
    family: TcFamily,
    witness: *const c_char,
    sync_k: u32,
    out: *mut *mut TcReport,
) -> c_int {
    let witness_word = if witness.is_null() {
        None
    } else {
        match CStr::from_ptr(witness).to_str() {
            Ok(s) => Some(Word::from(s)),
            Err(_) => {
                set_error(&Error::BadArgument("witness is not UTF-8".into()));
                return 2;
            }
        }
    };
    run_command(problem, out, |p| {
        report::run_augment(p, family.into(), witness_word.as_ref(), sync_k)
    })
}

/// Embedding into a complete invariant code. `max_enum` bounds the length
/// of the members enumerated into the report (the CLI default is 24).
///
/// # Safety
/// `problem` must be a live handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tc_run_complete(
    problem: *const TcProblem,
    max_enum: usize,
    out: *mut *mut TcReport,
) -> c_int {
    run_command(problem, out, |p| report::run_complete(p, max_enum))
}

unsafe fn render(
    report: *const TcReport,
    out: *mut *mut c_char,
    f: impl FnOnce(&Report) -> String,
) -> c_int {
    clear_error();
    if report.is_null() || out.is_null() {
        set_error(&Error::BadArgument("null pointer".into()));
        return 2;
    }
    let rendered = f(&(*report).0);
    match CString::new(rendered) {
        Ok(s) => {
            *out = s.into_raw();
            0
        }
        Err(_) => {
            set_error(&Error::Internal("rendered report contained NUL".into()));
            1
        }
    }
}

/// JSON rendering of a report; release the string with `tc_string_free`.
///
/// # Safety
/// `report` must be a live handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tc_report_json(
    report: *const TcReport,
    out: *mut *mut c_char,
) -> c_int {
    render(report, out, report::to_json)
}

/// Text rendering of a report; release the string with `tc_string_free`.
///
/// # Safety
/// `report` must be a live handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tc_report_text(
    report: *const TcReport,
    out: *mut *mut c_char,
) -> c_int {
    render(report, out, report::to_text)
}

/// # Safety
/// `report` must come from a `tc_run_*` call and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn tc_report_free(report: *mut TcReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// # Safety
/// `s` must come from this library (`tc_report_json`/`tc_report_text` or
/// `tc_last_error_message`) and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn tc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// The message of the last error on this thread, or NULL if the last call
/// succeeded. The returned string is owned by the caller; release it with
/// `tc_string_free`.
#[no_mangle]
pub extern "C" fn tc_last_error_message() -> *mut c_char {
    LAST_ERROR.with(|slot| match &*slot.borrow() {
        Some(msg) => msg.clone().into_raw(),
        None => ptr::null_mut(),
    })
}
