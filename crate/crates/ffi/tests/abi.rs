use std::ffi::{CStr, CString};
use std::ptr;

use toric_codes_ffi::*;

fn take(s: *mut std::ffi::c_char) -> serde_json::Value {
    assert!(!s.is_null());
    let v = serde_json::from_str(unsafe { CStr::from_ptr(s) }.to_str().unwrap()).unwrap();
    unsafe { tc_string_free(s) };
    v
}

fn last_error() -> String {
    let p = tc_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

const EX53: &str = include_str!("../../core/fixtures/ex53.json");

#[test]
fn field_handle_arithmetic() {
    let mut f = ptr::null_mut();
    assert_eq!(unsafe { tc_field_new(2, 4, &mut f) }, TcStatus::Ok);
    assert_eq!(unsafe { tc_field_order(f) }, 16);
    let mut out = 0u32;
    // g^3 * g^14 = g^17 = g^2, index 3
    assert_eq!(unsafe { tc_field_mul(f, 4, 15, &mut out) }, TcStatus::Ok);
    assert_eq!(out, 3);
    // a + a = 0 in characteristic 2
    assert_eq!(unsafe { tc_field_add(f, 7, 7, &mut out) }, TcStatus::Ok);
    assert_eq!(out, 0);
    assert_eq!(unsafe { tc_field_div(f, 5, 5, &mut out) }, TcStatus::Ok);
    assert_eq!(out, 1);
    assert_eq!(unsafe { tc_field_div(f, 5, 0, &mut out) }, TcStatus::InvalidArgument);
    assert!(!last_error().is_empty());
    assert_eq!(unsafe { tc_field_mul(f, 16, 1, &mut out) }, TcStatus::InvalidArgument);
    unsafe { tc_field_free(f) };
}

#[test]
fn bad_field_is_rejected() {
    let mut f = ptr::null_mut();
    assert_eq!(unsafe { tc_field_new(4, 1, &mut f) }, TcStatus::InvalidArgument);
    assert!(f.is_null());
    assert_eq!(unsafe { tc_field_order(ptr::null()) }, 0);
}

#[test]
fn solve_and_code_through_handles() {
    let json = CString::new(EX53).unwrap();
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { tc_problem_from_json(json.as_ptr(), &mut p) }, TcStatus::Ok);
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { tc_solve(p, &mut out) }, TcStatus::Ok);
    let r = take(out);
    assert_eq!(r["certification"]["num_solutions"], 8);
    assert_eq!(r["euler_jacobi"]["verified"], true);
    assert_eq!(unsafe { tc_code(p, &mut out) }, TcStatus::Ok);
    let r = take(out);
    assert_eq!((r["N"].as_u64(), r["k"].as_u64(), r["d"].as_u64()), (Some(8), Some(4), Some(5)));
    assert_eq!(unsafe { tc_bounds(p, &mut out) }, TcStatus::Ok);
    assert!(take(out)["bounds"].as_array().unwrap().len() >= 2);
    assert_eq!(unsafe { tc_random_search(p, 0, 1, &mut out) }, TcStatus::Ok);
    assert_eq!(take(out)["rows"].as_array().unwrap().len(), 0);
    unsafe { tc_problem_free(p) };
}

#[test]
fn parse_errors_map_to_status() {
    let json = CString::new("{\"field\": 3}").unwrap();
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { tc_problem_from_json(json.as_ptr(), &mut p) }, TcStatus::ParseError);
    assert!(p.is_null());
    assert!(last_error().contains("JSON"));
    assert_eq!(unsafe { tc_problem_from_json(ptr::null(), &mut p) }, TcStatus::InvalidArgument);
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { tc_solve(ptr::null(), &mut out) }, TcStatus::InvalidArgument);
}

#[test]
fn uncertified_system_reports_violation() {
    let over_gf8 = EX53.replace("\"m\": 4", "\"m\": 3");
    let json = CString::new(over_gf8).unwrap();
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { tc_problem_from_json(json.as_ptr(), &mut p) }, TcStatus::Ok);
    let mut out = ptr::null_mut();
    let st = unsafe { tc_solve(p, &mut out) };
    let r = take(out);
    assert_eq!(st == TcStatus::Ok, r["certification"]["certified"] == true);
    unsafe { tc_problem_free(p) };
}

#[test]
fn mixed_volume_entry_point() {
    let mut v = 0u64;
    let json = CString::new("[[[0,0],[1,0],[0,1]], [[0,0],[2,0],[0,2]]]").unwrap();
    assert_eq!(unsafe { tc_mixed_volume(json.as_ptr(), &mut v) }, TcStatus::Ok);
    assert_eq!(v, 2);
    let wrong = CString::new("[[[0,0],[1,0],[0,1]]]").unwrap();
    assert_eq!(unsafe { tc_mixed_volume(wrong.as_ptr(), &mut v) }, TcStatus::InvalidArgument);
    let junk = CString::new("[[[0,0],").unwrap();
    assert_eq!(unsafe { tc_mixed_volume(junk.as_ptr(), &mut v) }, TcStatus::ParseError);
}

#[test]
fn paper_examples_pass() {
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { tc_paper_examples(&mut out) }, TcStatus::Ok);
    assert_eq!(take(out)["all_pass"], true);
}

#[test]
fn error_is_cleared_by_next_success() {
    let mut v = 0u64;
    let junk = CString::new("x").unwrap();
    assert_eq!(unsafe { tc_mixed_volume(junk.as_ptr(), &mut v) }, TcStatus::ParseError);
    assert!(!tc_last_error().is_null());
    let ok = CString::new("[[[0],[3]]]").unwrap();
    assert_eq!(unsafe { tc_mixed_volume(ok.as_ptr(), &mut v) }, TcStatus::Ok);
    assert_eq!(v, 3);
    assert!(tc_last_error().is_null());
}
