//! C bindings for barnes-core.
//!
//! Every call returns a [`BarnesStatus`]. On anything but `BARNES_STATUS_OK`
//! a message is available from [`barnes_last_error`] on the same thread.
//! Strings handed out by the library must be released with
//! [`barnes_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use barnes_core::barnes::{log_barnes_g, LogG};
use barnes_core::cli;
use barnes_core::glaisher::{log_glaisher, GlaisherMethod};
use barnes_core::verify;
use barnes_core::{Error, PrecisionContext};
use rug::Complex;

/// Opaque evaluation context: a fixed working precision.
pub struct BarnesContext {
    ctx: PrecisionContext,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BarnesStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidArgument = 3,
    DomainError = 4,
    Pole = 5,
    PoleAtOne = 6,
    NonConvergence = 7,
    InsufficientDecay = 8,
    PathCrossesPole = 9,
    ZeroFactor = 10,
    /// verify ran and at least one identity failed
    IdentityFailure = 11,
    Panic = 12,
}

impl From<&Error> for BarnesStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::NonConvergence { .. } => BarnesStatus::NonConvergence,
            Error::Pole(_) => BarnesStatus::Pole,
            Error::PoleAtOne => BarnesStatus::PoleAtOne,
            Error::Domain(_) => BarnesStatus::DomainError,
            Error::InsufficientDecay { .. } => BarnesStatus::InsufficientDecay,
            Error::PathCrossesPole(_) => BarnesStatus::PathCrossesPole,
            Error::ZeroFactor(_) => BarnesStatus::ZeroFactor,
            Error::InvalidArgument(_) => BarnesStatus::InvalidArgument,
        }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let s = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(s));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

struct Fail(BarnesStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(BarnesStatus::from(&e), e.to_string())
    }
}

fn run(f: impl FnOnce() -> Result<BarnesStatus, Fail>) -> BarnesStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(s)) => s,
        Ok(Err(Fail(s, msg))) => {
            set_error(msg);
            s
        }
        Err(_) => {
            set_error("internal panic");
            BarnesStatus::Panic
        }
    }
}

unsafe fn context<'a>(p: *const BarnesContext) -> Result<&'a BarnesContext, Fail> {
    p.as_ref()
        .ok_or_else(|| Fail(BarnesStatus::NullPointer, "null context".into()))
}

unsafe fn string<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail(BarnesStatus::NullPointer, format!("null {what}")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail(BarnesStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn optional_string<'a>(p: *const c_char, what: &str) -> Result<Option<&'a str>, Fail> {
    if p.is_null() {
        Ok(None)
    } else {
        string(p, what).map(Some)
    }
}

unsafe fn write<T>(out: *mut T, v: T, what: &str) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(BarnesStatus::NullPointer, format!("null {what}")));
    }
    out.write(v);
    Ok(())
}

fn into_c(s: String) -> *mut c_char {
    CString::new(s).map(CString::into_raw).unwrap_or(ptr::null_mut())
}

/// New context for `digits` decimal digits (10 to 5000). Returns NULL on
/// an out-of-range request.
#[no_mangle]
pub extern "C" fn barnes_context_new(digits: u32) -> *mut BarnesContext {
    clear_error();
    if !(10..=5000).contains(&digits) {
        set_error(format!("digits must be in [10, 5000], got {digits}"));
        return ptr::null_mut();
    }
    Box::into_raw(Box::new(BarnesContext {
        ctx: PrecisionContext::new(digits),
    }))
}

/// # Safety
/// `ctx` must come from [`barnes_context_new`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn barnes_context_free(ctx: *mut BarnesContext) {
    if !ctx.is_null() {
        drop(Box::from_raw(ctx));
    }
}

/// # Safety
/// `ctx` must be a live context or NULL.
#[no_mangle]
pub unsafe extern "C" fn barnes_context_digits(ctx: *const BarnesContext) -> u32 {
    ctx.as_ref().map_or(0, |c| c.ctx.digits())
}

/// Evaluate a named function as the `eval` subcommand does and return its
/// JSON record in `*out_json`.
///
/// # Safety
/// `function` and each of the `nargs` entries of `args` must be NUL-terminated
/// strings; `method` may be NULL; `out_json` must be writable.
#[no_mangle]
pub unsafe extern "C" fn barnes_eval(
    ctx: *const BarnesContext,
    function: *const c_char,
    args: *const *const c_char,
    nargs: usize,
    method: *const c_char,
    out_json: *mut *mut c_char,
) -> BarnesStatus {
    run(|| {
        let c = context(ctx)?;
        let f = string(function, "function")?;
        if nargs > 0 && args.is_null() {
            return Err(Fail(BarnesStatus::NullPointer, "null args".into()));
        }
        let mut list = Vec::with_capacity(nargs);
        for i in 0..nargs {
            list.push(string(*args.add(i), "argument")?.to_owned());
        }
        let m = optional_string(method, "method")?.map(str::to_owned);
        let rec = cli::eval(f, &list, c.ctx.digits(), m)?;
        write(out_json, into_c(rec.to_json().to_string()), "out_json")?;
        Ok(BarnesStatus::Ok)
    })
}

/// log G(re + i·im) in double precision. When G vanishes, `*out_is_zero`
/// is set and the outputs are −∞ and 0.
///
/// # Safety
/// The three output pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn barnes_log_g(
    ctx: *const BarnesContext,
    re: f64,
    im: f64,
    out_re: *mut f64,
    out_im: *mut f64,
    out_is_zero: *mut bool,
) -> BarnesStatus {
    run(|| {
        let c = context(ctx)?;
        if !re.is_finite() || !im.is_finite() {
            return Err(Fail(BarnesStatus::InvalidArgument, "argument must be finite".into()));
        }
        let z = Complex::with_val(c.ctx.bits(), (re, im));
        let (r, i, zero) = match log_barnes_g(&z, &c.ctx)? {
            LogG::Zero => (f64::NEG_INFINITY, 0.0, true),
            LogG::Value(v) => (v.value.real().to_f64(), v.value.imag().to_f64(), false),
        };
        write(out_re, r, "out_re")?;
        write(out_im, i, "out_im")?;
        write(out_is_zero, zero, "out_is_zero")?;
        Ok(BarnesStatus::Ok)
    })
}

/// log A by the named method (NULL selects odd-zeta-series) in double
/// precision.
///
/// # Safety
/// `method` must be NULL or a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn barnes_log_glaisher(ctx: *const BarnesContext, method: *const c_char, out: *mut f64) -> BarnesStatus {
    run(|| {
        let c = context(ctx)?;
        let m = match optional_string(method, "method")? {
            None => GlaisherMethod::OddZetaSeries,
            Some(tag) => GlaisherMethod::from_tag(tag)
                .ok_or_else(|| Fail(BarnesStatus::InvalidArgument, format!("unknown glaisher method '{tag}'")))?,
        };
        write(out, log_glaisher(m, &c.ctx)?.value.to_f64(), "out")?;
        Ok(BarnesStatus::Ok)
    })
}

/// Run an identity group ("all" or a group key). A NaN tolerance selects
/// the default. The JSON report array goes to `*out_json` and the number of
/// failures to `*out_failures`; the status is `BARNES_STATUS_IDENTITY_FAILURE`
/// when that number is nonzero.
///
/// # Safety
/// `selection` must be a NUL-terminated string; both outputs must be writable.
#[no_mangle]
pub unsafe extern "C" fn barnes_verify(
    ctx: *const BarnesContext,
    selection: *const c_char,
    tolerance_log10: f64,
    out_json: *mut *mut c_char,
    out_failures: *mut usize,
) -> BarnesStatus {
    run(|| {
        let c = context(ctx)?;
        let sel = string(selection, "selection")?;
        let tol = if tolerance_log10.is_nan() {
            verify::default_tolerance_log10(c.ctx.digits())
        } else {
            tolerance_log10
        };
        let reports = verify::run(sel, &c.ctx, tol)?;
        let failed = verify::failures(&reports);
        let json = serde_json::to_string(&reports).map_err(|e| Fail(BarnesStatus::Panic, e.to_string()))?;
        write(out_json, into_c(json), "out_json")?;
        write(out_failures, failed, "out_failures")?;
        Ok(if failed > 0 {
            BarnesStatus::IdentityFailure
        } else {
            BarnesStatus::Ok
        })
    })
}

/// # Safety
/// `s` must be NULL or a string returned by this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn barnes_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread, or NULL. The pointer
/// stays valid until the next library call on the same thread.
#[no_mangle]
pub extern "C" fn barnes_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}
