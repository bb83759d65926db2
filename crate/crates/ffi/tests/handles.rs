use std::ffi::{CStr, CString};
use std::ptr;

use crosscycle_ffi::*;

fn last_error() -> String {
    let p = cc_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn registry_example_round_trip() {
    unsafe {
        let id = CString::new("N1").unwrap();
        let mut sys = ptr::null_mut();
        assert_eq!(cc_system_from_example(id.as_ptr(), &mut sys), CcStatus::Ok);
        let mut sols = ptr::null_mut();
        assert_eq!(cc_solve(sys, 0.0, &mut sols), CcStatus::Ok);
        assert_eq!(cc_solutions_len(sols), 4);
        let mut s = CcSolution::default();
        assert_eq!(cc_solution_get(sols, 0, &mut s), CcStatus::Ok);
        assert!((s.x - 0.387552).abs() < 1e-4 && (s.y - 2.38307).abs() < 1e-4 && s.simple);
        let mut v = CcVerification::default();
        assert_eq!(cc_verify(sys, sols, 3, &mut v), CcStatus::Ok);
        assert!(v.verified && v.closure_residual <= 1e-5);
        assert_eq!(cc_solution_get(sols, 4, &mut s), CcStatus::Config);
        assert!(last_error().contains("out of range"));
        cc_solutions_free(sols);
        cc_system_free(sys);
    }
}

#[test]
fn status_codes_match_exit_codes() {
    unsafe {
        let mut sys = ptr::null_mut();
        let bad = CString::new(r#"{"schema": 1, "center": {"omega": 0}, "saddle": {"family": "N1", "params": {"b": -1}}}"#).unwrap();
        assert_eq!(cc_system_from_json(bad.as_ptr(), &mut sys) as i32, crosscycle::cli::EXIT_CONFIG);
        assert!(sys.is_null());
        assert!(last_error().contains("ω>0"));

        let common = CString::new(
            r#"{"schema": 1, "explicit": {
                "center": {"integral": "x^2 + y^2", "field": ["-2*y", "2*x"]},
                "saddle": {"integral": "x^2 + y^2", "field": ["-2*y", "2*x"]}}}"#,
        )
        .unwrap();
        assert_eq!(cc_system_from_json(common.as_ptr(), &mut sys), CcStatus::Ok);
        let mut sols = ptr::null_mut();
        assert_eq!(cc_solve(sys, 0.0, &mut sols) as i32, crosscycle::cli::EXIT_SOLVER);
        assert!(sols.is_null());
        assert!(last_error().contains("non-isolated"));
        cc_system_free(sys);
    }
}

#[test]
fn null_arguments_are_rejected() {
    unsafe {
        let mut sys = ptr::null_mut();
        assert_eq!(cc_system_from_example(ptr::null(), &mut sys), CcStatus::Config);
        assert_eq!(cc_solutions_len(ptr::null()), 0);
        cc_system_free(ptr::null_mut());
        cc_solutions_free(ptr::null_mut());
        let v = CStr::from_ptr(cc_version()).to_str().unwrap();
        assert_eq!(v, env!("CARGO_PKG_VERSION"));
    }
}
