//! C ABI over the zhu-lab engine.
//!
//! Every fallible function returns a [`ZlStatus`] and writes its result
//! through an out-pointer. On failure the out-pointer is left untouched and
//! [`zl_last_error`] describes the error for the calling thread. Handles and
//! strings returned by this library are owned by the caller and released with
//! the matching `*_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use zhu_lab::exact::{ParamPoly, Rat, Var};
use zhu_lab::report::{self, Format, ParamRange, Report, RunConfig, Task};
use zhu_lab::residue::sums::h_p;
use zhu_lab::residue::triple_sum_gp;
use zhu_lab::zhu::{assemble_algebra, Family};
use zhu_lab::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZlStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidInput = 2,
    OutOfRange = 3,
    Domain = 4,
    Internal = 5,
    Panic = 6,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZlFamily {
    Triplet = 0,
    Super = 1,
    TwistedSuper = 2,
    W23 = 3,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZlFormat {
    Text = 0,
    Json = 1,
}

/// Polynomial in `t` with exact rational coefficients.
pub struct ZlPoly(ParamPoly);

/// Result of a verification task.
pub struct ZlReport(Report);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(ZlStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::Domain(_) => ZlStatus::Domain,
            Error::Param(_) => ZlStatus::OutOfRange,
            Error::Parse(_) | Error::Input(_) | Error::Json(_) => ZlStatus::InvalidInput,
            Error::SingularRecurrence { .. } | Error::Internal(_) | Error::Io(_) => ZlStatus::Internal,
        };
        Failure(status, e.to_string())
    }
}

fn set_last_error(msg: Option<String>) {
    let msg = msg.map(|m| CString::new(m.replace('\0', " ")).expect("nul bytes removed"));
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> ZlStatus {
    let (status, msg) = match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => (ZlStatus::Ok, None),
        Ok(Err(Failure(s, m))) => (s, Some(m)),
        Err(_) => (ZlStatus::Panic, Some("panic inside zhu-lab".to_string())),
    };
    set_last_error(msg);
    status
}

fn null(what: &str) -> Failure {
    Failure(ZlStatus::NullPointer, format!("{what} is null"))
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("out"));
    }
    out.write(value);
    Ok(())
}

fn into_c_string(s: String) -> Result<*mut c_char, Failure> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|_| Failure(ZlStatus::Internal, "string contains a nul byte".into()))
}

fn check_p(p: u32) -> Result<(), Failure> {
    if p < 2 {
        return Err(Failure(ZlStatus::OutOfRange, format!("p must be at least 2, got {p}")));
    }
    Ok(())
}

/// Message for the last failed call on this thread, or NULL after a success.
/// The pointer stays valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn zl_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// # Safety
/// `s` must be NULL or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn zl_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds `coeffs[0] + coeffs[1] t + ...`; `len == 0` gives the zero polynomial.
///
/// # Safety
/// `coeffs` must point to `len` readable values (it may be NULL when `len == 0`),
/// and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn zl_poly_from_ints(coeffs: *const i64, len: usize, out: *mut *mut ZlPoly) -> ZlStatus {
    guard(|| {
        let slice = match len {
            0 => &[][..],
            _ if coeffs.is_null() => return Err(null("coeffs")),
            _ => std::slice::from_raw_parts(coeffs, len),
        };
        let poly = ParamPoly::from_ints(slice, Var::T);
        write_out(out, Box::into_raw(Box::new(ZlPoly(poly))))
    })
}

/// The signed triple sum `G_p(t)`, `p >= 2`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn zl_poly_triple_sum(p: u32, out: *mut *mut ZlPoly) -> ZlStatus {
    guard(|| {
        check_p(p)?;
        write_out(out, Box::into_raw(Box::new(ZlPoly(triple_sum_gp(p)))))
    })
}

/// `H_p(t) = C(2p,p) C(2p-2,p-1) C(t+p,4p-1)`, `p >= 2`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn zl_poly_closed_form(p: u32, out: *mut *mut ZlPoly) -> ZlStatus {
    guard(|| {
        check_p(p)?;
        write_out(out, Box::into_raw(Box::new(ZlPoly(h_p(p)))))
    })
}

/// # Safety
/// `a` and `b` must be live handles and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn zl_poly_equal(a: *const ZlPoly, b: *const ZlPoly, out: *mut bool) -> ZlStatus {
    guard(|| {
        let (a, b) = (deref(a, "a")?, deref(b, "b")?);
        write_out(out, a.0 == b.0)
    })
}

/// Degree, or -1 for the zero polynomial.
///
/// # Safety
/// `poly` must be a live handle and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn zl_poly_degree(poly: *const ZlPoly, out: *mut i64) -> ZlStatus {
    guard(|| {
        let p = deref(poly, "poly")?;
        write_out(out, p.0.degree().map_or(-1, |d| d as i64))
    })
}

/// Value at `t = num/den` as a reduced fraction string such as `"-3/8"`.
///
/// # Safety
/// `poly` must be a live handle and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn zl_poly_eval(poly: *const ZlPoly, num: i64, den: i64, out: *mut *mut c_char) -> ZlStatus {
    guard(|| {
        let p = deref(poly, "poly")?;
        if den == 0 {
            return Err(Failure(ZlStatus::Domain, "zero denominator".into()));
        }
        let s = into_c_string(p.0.eval(&Rat::new(num, den)).to_fraction_string())?;
        write_out(out, s)
    })
}

/// # Safety
/// `poly` must be a live handle and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn zl_poly_to_string(poly: *const ZlPoly, out: *mut *mut c_char) -> ZlStatus {
    guard(|| {
        let p = deref(poly, "poly")?;
        write_out(out, into_c_string(p.0.to_string())?)
    })
}

/// # Safety
/// `poly` must be NULL or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn zl_poly_free(poly: *mut ZlPoly) {
    if !poly.is_null() {
        drop(Box::from_raw(poly));
    }
}

fn family(f: ZlFamily, param: u32) -> Family {
    match f {
        ZlFamily::Triplet => Family::Triplet { p: param },
        ZlFamily::Super => Family::Super { m: param },
        ZlFamily::TwistedSuper => Family::TwistedSuper { m: param },
        ZlFamily::W23 => Family::C0,
    }
}

fn check_family(f: ZlFamily, param: u32) -> Result<(), Failure> {
    match f {
        ZlFamily::Triplet => check_p(param),
        ZlFamily::Super | ZlFamily::TwistedSuper if param < 1 => {
            Err(Failure(ZlStatus::OutOfRange, "m must be at least 1".into()))
        }
        _ => Ok(()),
    }
}

/// Total dimension of the Zhu algebra; `param` is ignored for `W23`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn zl_algebra_dim(f: ZlFamily, param: u32, out: *mut usize) -> ZlStatus {
    guard(|| {
        check_family(f, param)?;
        write_out(out, assemble_algebra(family(f, param))?.total)
    })
}

/// Full algebra report (blocks, center, decomposition) as JSON.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn zl_algebra_json(f: ZlFamily, param: u32, out: *mut *mut c_char) -> ZlStatus {
    guard(|| {
        check_family(f, param)?;
        let r = assemble_algebra(family(f, param))?;
        write_out(out, into_c_string(r.to_json())?)
    })
}

/// Runs a task by its CLI name (`"triplet-ct"`, `"zhu-c0"`, ...). With
/// `has_range` false the task's default sweep is used.
///
/// # Safety
/// `task` must be a nul-terminated string and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn zl_run(
    task: *const c_char,
    has_range: bool,
    lo: u32,
    hi: u32,
    diagnostic: bool,
    out: *mut *mut ZlReport,
) -> ZlStatus {
    guard(|| {
        if task.is_null() {
            return Err(null("task"));
        }
        let name = CStr::from_ptr(task)
            .to_str()
            .map_err(|_| Failure(ZlStatus::InvalidInput, "task name is not UTF-8".into()))?;
        let task: Task = name.parse()?;
        let mut config = RunConfig::new(task);
        config.diagnostic = diagnostic;
        if has_range {
            let r = Some(ParamRange::new(lo, hi));
            match task.param_name() {
                Some('p') => config.p = r,
                Some(_) => config.m = r,
                None => return Err(Failure(ZlStatus::InvalidInput, format!("{task} takes no range"))),
            }
        }
        let report = report::run(&config)?;
        write_out(out, Box::into_raw(Box::new(ZlReport(report))))
    })
}

/// 0 when every claim passed, 1 otherwise.
///
/// # Safety
/// `report` must be a live handle and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn zl_report_exit_code(report: *const ZlReport, out: *mut i32) -> ZlStatus {
    guard(|| write_out(out, deref(report, "report")?.0.exit_code()))
}

/// # Safety
/// `report` must be a live handle; `passed` and `failed` must be writable.
#[no_mangle]
pub unsafe extern "C" fn zl_report_counts(report: *const ZlReport, passed: *mut usize, failed: *mut usize) -> ZlStatus {
    guard(|| {
        let r = deref(report, "report")?;
        if passed.is_null() || failed.is_null() {
            return Err(null("out"));
        }
        passed.write(r.0.summary.passed);
        failed.write(r.0.summary.failed);
        Ok(())
    })
}

/// # Safety
/// `report` must be a live handle and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn zl_report_render(report: *const ZlReport, format: ZlFormat, out: *mut *mut c_char) -> ZlStatus {
    guard(|| {
        let r = deref(report, "report")?;
        let format = match format {
            ZlFormat::Text => Format::Text,
            ZlFormat::Json => Format::Json,
        };
        write_out(out, into_c_string(r.0.render(format))?)
    })
}

/// # Safety
/// `report` must be NULL or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn zl_report_free(report: *mut ZlReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}
