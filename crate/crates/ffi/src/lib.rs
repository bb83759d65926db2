//! C interface to the crosscycle solver.
//!
//! Objects are opaque handles created by `cc_system_from_*` and `cc_solve`
//! and released with the matching `*_free`. Every fallible call returns a
//! status code equal to the command-line exit code for the same failure;
//! the message of the last failure on the calling thread is available from
//! [`cc_last_error`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use crosscycle::cli::{self, CliError, RunConfig};
use crosscycle::crossing::CrossingSolution;
use crosscycle::orbits::verify_cycle_with;

/// Status codes; the nonzero values match the CLI exit codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CcStatus {
    Ok = 0,
    /// Panic inside the library.
    Internal = 1,
    /// Bad argument, configuration or parameters.
    Config = 2,
    /// Degenerate or non-isolated crossing system.
    Solver = 3,
    Mismatch = 4,
    Verification = 5,
}

impl From<&CliError> for CcStatus {
    fn from(e: &CliError) -> Self {
        match e.exit_code() {
            cli::EXIT_SOLVER => CcStatus::Solver,
            cli::EXIT_MISMATCH => CcStatus::Mismatch,
            cli::EXIT_VERIFICATION => CcStatus::Verification,
            _ => CcStatus::Config,
        }
    }
}

/// A validated piecewise system with its solver and verifier settings.
pub struct CcSystem {
    config: RunConfig,
}

/// Solutions of the crossing system, sorted by `x`.
pub struct CcSolutions {
    items: Vec<CrossingSolution>,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct CcSolution {
    pub x: f64,
    pub y: f64,
    pub residual_pl: f64,
    pub residual_pi: f64,
    pub jacobian_det: f64,
    pub simple: bool,
    pub multiplicity: usize,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct CcVerification {
    pub verified: bool,
    pub orientation_consistent: bool,
    pub closure_residual: f64,
    pub h_drift: f64,
    pub region_violation: f64,
    /// Bounding-box diameter of the integrated cycle.
    pub diameter: f64,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let text = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).ok());
}

fn fail(status: CcStatus, msg: impl Into<String>) -> CcStatus {
    set_error(msg);
    status
}

/// Runs `f`, translating errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), CcStatus>) -> CcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => CcStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => fail(CcStatus::Internal, "internal error"),
    }
}

fn cli_err(e: CliError) -> CcStatus {
    let status = CcStatus::from(&e);
    fail(status, e.to_string())
}

unsafe fn str_arg<'a>(p: *const c_char, name: &str) -> Result<&'a str, CcStatus> {
    if p.is_null() {
        return Err(fail(CcStatus::Config, format!("{name} is null")));
    }
    CStr::from_ptr(p).to_str().map_err(|_| fail(CcStatus::Config, format!("{name} is not UTF-8")))
}

unsafe fn out_arg<'a, T>(p: *mut T, name: &str) -> Result<&'a mut T, CcStatus> {
    p.as_mut().ok_or_else(|| fail(CcStatus::Config, format!("{name} is null")))
}

unsafe fn ref_arg<'a, T>(p: *const T, name: &str) -> Result<&'a T, CcStatus> {
    p.as_ref().ok_or_else(|| fail(CcStatus::Config, format!("{name} is null")))
}

/// Message describing the last failure on this thread, or null. The string
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn cc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn cc_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Creates a system from a registry example id such as `"N32"`.
///
/// # Safety
/// `id` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cc_system_from_example(id: *const c_char, out: *mut *mut CcSystem) -> CcStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = ptr::null_mut();
        let id = str_arg(id, "id")?;
        let config = RunConfig::for_example(id).map_err(|e| cli_err(e.into()))?;
        *out = Box::into_raw(Box::new(CcSystem { config }));
        Ok(())
    })
}

/// Creates a system from a JSON configuration document.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cc_system_from_json(json: *const c_char, out: *mut *mut CcSystem) -> CcStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = ptr::null_mut();
        let text = str_arg(json, "json")?;
        let config = cli::parse_config(text).map_err(|e| cli_err(e.into()))?;
        *out = Box::into_raw(Box::new(CcSystem { config }));
        Ok(())
    })
}

/// # Safety
/// `sys` must come from a `cc_system_*` constructor, or be null.
#[no_mangle]
pub unsafe extern "C" fn cc_system_free(sys: *mut CcSystem) {
    if !sys.is_null() {
        drop(Box::from_raw(sys));
    }
}

/// Solves the crossing system. A nonpositive `tol` keeps the configured
/// tolerance.
///
/// # Safety
/// `sys` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cc_solve(sys: *const CcSystem, tol: f64, out: *mut *mut CcSolutions) -> CcStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = ptr::null_mut();
        let sys = ref_arg(sys, "sys")?;
        let mut cfg = sys.config.clone();
        if tol > 0.0 {
            cfg.solve.tol = tol;
        }
        let res = cli::cmd_solve(&cfg).map_err(cli_err)?;
        *out = Box::into_raw(Box::new(CcSolutions { items: res.solutions }));
        Ok(())
    })
}

/// Number of solutions; zero for a null handle.
///
/// # Safety
/// `sols` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn cc_solutions_len(sols: *const CcSolutions) -> usize {
    sols.as_ref().map_or(0, |s| s.items.len())
}

/// Copies solution `index` into `out`.
///
/// # Safety
/// `sols` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cc_solution_get(sols: *const CcSolutions, index: usize, out: *mut CcSolution) -> CcStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        let sols = ref_arg(sols, "sols")?;
        let s = sols
            .items
            .get(index)
            .ok_or_else(|| fail(CcStatus::Config, format!("index {index} out of range ({} solutions)", sols.items.len())))?;
        *out = CcSolution {
            x: s.x,
            y: s.y,
            residual_pl: s.residual_pl,
            residual_pi: s.residual_pi,
            jacobian_det: s.jacobian_det,
            simple: s.simple,
            multiplicity: s.multiplicity,
        };
        Ok(())
    })
}

/// # Safety
/// `sols` must come from [`cc_solve`], or be null.
#[no_mangle]
pub unsafe extern "C" fn cc_solutions_free(sols: *mut CcSolutions) {
    if !sols.is_null() {
        drop(Box::from_raw(sols));
    }
}

/// Integrates the cycle through solution `index`. Fills `out` whenever the
/// integration ran; returns `CC_STATUS_VERIFICATION` if the cycle fails.
///
/// # Safety
/// `sys` and `sols` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cc_verify(
    sys: *const CcSystem,
    sols: *const CcSolutions,
    index: usize,
    out: *mut CcVerification,
) -> CcStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        let sys = ref_arg(sys, "sys")?;
        let sols = ref_arg(sols, "sols")?;
        let s = sols.items.get(index).ok_or_else(|| fail(CcStatus::Config, format!("index {index} out of range")))?;
        let mut opts = sys.config.verify;
        opts.arc = Some(sys.config.arc_options(s.x.hypot(s.y)));
        let v = verify_cycle_with(&sys.config.system, s, &opts);
        *out = CcVerification {
            verified: v.verified,
            orientation_consistent: v.orientation_consistent,
            closure_residual: v.closure_residual,
            h_drift: v.h_drift,
            region_violation: v.region_violation,
            diameter: v.diameter,
        };
        if v.verified {
            Ok(())
        } else {
            Err(fail(CcStatus::Verification, v.diagnostic.unwrap_or_else(|| "not verified".into())))
        }
    })
}
