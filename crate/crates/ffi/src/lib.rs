//! C ABI for the twisted Rota-Baxter toolkit.
//!
//! Instances and reports are opaque handles owned by the caller and released
//! with the matching `_free` function. Every fallible call returns a
//! [`TrbStatus`]; the message of the most recent failure on the calling
//! thread is available from [`trb_last_error`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use twisted_rb::cli;
use twisted_rb::instance::InstanceDocument;
use twisted_rb::liealg::ce_cohomology_dims;
use twisted_rb::linfty::{cohomology_of_t_dims, mc_defect};
use twisted_rb::twistrb::{check_trb, witt_report};
use twisted_rb::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TrbStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    MissingSection = 4,
    DimensionMismatch = 5,
    InvalidStructure = 6,
    NotTwistedRb = 7,
    MathError = 8,
    BufferTooSmall = 9,
    Panic = 10,
}

/// A parsed and validated instance document.
pub struct TrbInstance {
    doc: InstanceDocument,
}

/// Exit code and text of one command-line invocation.
pub struct TrbReport {
    code: i32,
    stdout: CString,
    stderr: CString,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> TrbStatus {
    match e {
        Error::Parse(_) => TrbStatus::ParseError,
        Error::MissingSection(_) => TrbStatus::MissingSection,
        Error::DimensionMismatch { .. } | Error::NotSquare { .. } | Error::IndexOutOfRange { .. } => {
            TrbStatus::DimensionMismatch
        }
        Error::DuplicateAssignment(_)
        | Error::NotLie(_)
        | Error::NotRepresentation(_)
        | Error::NotCocycle(_)
        | Error::NotSkew => TrbStatus::InvalidStructure,
        Error::NotTwistedRb(_) => TrbStatus::NotTwistedRb,
        _ => TrbStatus::MathError,
    }
}

fn guard(f: impl FnOnce() -> Result<(), TrbStatus>) -> TrbStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => TrbStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => {
            set_error("internal panic");
            TrbStatus::Panic
        }
    }
}

fn lift<T>(r: twisted_rb::Result<T>) -> Result<T, TrbStatus> {
    r.map_err(|e| {
        set_error(&e.to_string());
        status_of(&e)
    })
}

unsafe fn text<'a>(p: *const c_char) -> Result<&'a str, TrbStatus> {
    if p.is_null() {
        set_error("null pointer");
        return Err(TrbStatus::NullPointer);
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        set_error("string is not UTF-8");
        TrbStatus::InvalidUtf8
    })
}

unsafe fn instance<'a>(p: *const TrbInstance) -> Result<&'a TrbInstance, TrbStatus> {
    p.as_ref().ok_or_else(|| {
        set_error("null instance");
        TrbStatus::NullPointer
    })
}

fn nonnull<T>(p: *mut T) -> Result<(), TrbStatus> {
    if p.is_null() {
        set_error("null output pointer");
        return Err(TrbStatus::NullPointer);
    }
    Ok(())
}

/// Message of the last failed call on this thread; empty if none. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn trb_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn trb_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Parses and validates an instance document.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn trb_instance_from_json(json: *const c_char, out: *mut *mut TrbInstance) -> TrbStatus {
    guard(|| {
        nonnull(out)?;
        *out = ptr::null_mut();
        let doc = lift(InstanceDocument::parse(text(json)?))?;
        lift(doc.validate())?;
        *out = Box::into_raw(Box::new(TrbInstance { doc }));
        Ok(())
    })
}

/// # Safety
/// `inst` must come from [`trb_instance_from_json`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn trb_instance_free(inst: *mut TrbInstance) {
    if !inst.is_null() {
        drop(Box::from_raw(inst));
    }
}

/// Dimensions of the Lie algebra and the module of the instance setup.
///
/// # Safety
/// `inst` must be a live handle; `lie_dim` and `module_dim` writable.
#[no_mangle]
pub unsafe extern "C" fn trb_instance_dims(
    inst: *const TrbInstance,
    lie_dim: *mut usize,
    module_dim: *mut usize,
) -> TrbStatus {
    guard(|| {
        nonnull(lie_dim)?;
        nonnull(module_dim)?;
        let s = lift(instance(inst)?.doc.setup())?;
        *lie_dim = s.lie_dim();
        *module_dim = s.module_dim();
        Ok(())
    })
}

/// Whether `operator_T` satisfies the twisted Rota-Baxter identity.
///
/// # Safety
/// `inst` must be a live handle; `holds` writable.
#[no_mangle]
pub unsafe extern "C" fn trb_check_trb(inst: *const TrbInstance, holds: *mut bool) -> TrbStatus {
    guard(|| {
        nonnull(holds)?;
        let doc = &instance(inst)?.doc;
        let s = lift(doc.setup())?;
        let t = lift(doc.operator_t(&s))?;
        *holds = lift(check_trb(&s, &t))?.holds;
        Ok(())
    })
}

/// Whether `operator_T` is a Maurer-Cartan element.
///
/// # Safety
/// `inst` must be a live handle; `holds` writable.
#[no_mangle]
pub unsafe extern "C" fn trb_check_mc(inst: *const TrbInstance, holds: *mut bool) -> TrbStatus {
    guard(|| {
        nonnull(holds)?;
        let doc = &instance(inst)?.doc;
        let s = lift(doc.setup())?;
        let t = lift(doc.operator_t(&s))?;
        *holds = lift(mc_defect(&s, &t))?.is_zero();
        Ok(())
    })
}

fn write_dims(dims: &[usize], out: *mut usize, len: usize) -> Result<(), TrbStatus> {
    if len < dims.len() {
        set_error(&format!("buffer holds {len} entries, {} needed", dims.len()));
        return Err(TrbStatus::BufferTooSmall);
    }
    for (i, d) in dims.iter().enumerate() {
        // SAFETY: the caller guarantees `out` has `len` slots and `i < len`.
        unsafe { *out.add(i) = *d };
    }
    Ok(())
}

/// `dim H^n(g, M)` for `n = 0..=nmax`, written to `out[0..=nmax]`.
///
/// # Safety
/// `inst` must be a live handle and `out` must have room for `len` entries.
#[no_mangle]
pub unsafe extern "C" fn trb_ce_cohomology_dims(
    inst: *const TrbInstance,
    nmax: usize,
    out: *mut usize,
    len: usize,
) -> TrbStatus {
    guard(|| {
        nonnull(out)?;
        let doc = &instance(inst)?.doc;
        let l = lift(doc.lie())?;
        let rep = lift(doc.rep(&l))?;
        write_dims(&ce_cohomology_dims(&l, &rep, nmax), out, len)
    })
}

/// `dim H^n_T` for `n = 0..=nmax`; fails with `NotTwistedRb` when `operator_T` is not.
///
/// # Safety
/// `inst` must be a live handle and `out` must have room for `len` entries.
#[no_mangle]
pub unsafe extern "C" fn trb_cohomology_of_t_dims(
    inst: *const TrbInstance,
    nmax: usize,
    out: *mut usize,
    len: usize,
) -> TrbStatus {
    guard(|| {
        nonnull(out)?;
        let doc = &instance(inst)?.doc;
        let s = lift(doc.setup())?;
        let t = lift(doc.operator_t(&s))?;
        write_dims(&lift(cohomology_of_t_dims(&s, &t, nmax))?, out, len)
    })
}

/// Rows `0 <= m <= n <= nmax` of the Witt-algebra Reynolds table.
///
/// # Safety
/// `rows` and `all_pass` must be writable.
#[no_mangle]
pub unsafe extern "C" fn trb_witt_report(nmax: i64, rows: *mut usize, all_pass: *mut bool) -> TrbStatus {
    guard(|| {
        nonnull(rows)?;
        nonnull(all_pass)?;
        let r = witt_report(nmax);
        *rows = r.len();
        *all_pass = r.iter().all(|row| row.pass);
        Ok(())
    })
}

/// Runs the command-line tool in process. `argv[0]` is the program name.
///
/// # Safety
/// `argv` must point to `argc` NUL-terminated strings; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn trb_run(argv: *const *const c_char, argc: usize, out: *mut *mut TrbReport) -> TrbStatus {
    guard(|| {
        nonnull(out)?;
        *out = ptr::null_mut();
        if argv.is_null() {
            set_error("null argv");
            return Err(TrbStatus::NullPointer);
        }
        let args = (0..argc).map(|i| text(*argv.add(i)).map(str::to_owned)).collect::<Result<Vec<_>, _>>()?;
        let o = cli::run(args);
        let c = |s: String| CString::new(s.replace('\0', " ")).unwrap_or_default();
        *out = Box::into_raw(Box::new(TrbReport { code: o.code, stdout: c(o.stdout), stderr: c(o.stderr) }));
        Ok(())
    })
}

/// Exit code: 0 pass, 1 failed check, 2 invalid input; -1 for a null handle.
///
/// # Safety
/// `report` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn trb_report_exit_code(report: *const TrbReport) -> i32 {
    report.as_ref().map_or(-1, |r| r.code)
}

/// Report text; owned by the handle.
///
/// # Safety
/// `report` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn trb_report_stdout(report: *const TrbReport) -> *const c_char {
    report.as_ref().map_or(ptr::null(), |r| r.stdout.as_ptr())
}

/// Diagnostics text; owned by the handle.
///
/// # Safety
/// `report` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn trb_report_stderr(report: *const TrbReport) -> *const c_char {
    report.as_ref().map_or(ptr::null(), |r| r.stderr.as_ptr())
}

/// # Safety
/// `report` must come from [`trb_run`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn trb_report_free(report: *mut TrbReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}
