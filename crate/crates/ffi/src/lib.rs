//! C ABI for `toric-codes`.
//!
//! Objects cross the boundary as opaque handles owned by the caller and
//! released with the matching `*_free` function. Reports are returned as
//! NUL-terminated JSON strings, released with [`tc_string_free`]. Every entry
//! point returns a [`TcStatus`]; on failure [`tc_last_error`] describes it.
//! Field elements are `u32` indices: 0 is zero and `i >= 1` is `g^(i-1)`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use toric_codes::cli::{self, exit, Outcome, Overrides};
use toric_codes::field::{Field, FieldElement};
use toric_codes::lattice::{mixed_volume, LatticeVector, Polytope};
use toric_codes::problem::Problem;

/// Result of every call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TcStatus {
    Ok = 0,
    /// The computation ran but a checked property does not hold (e.g. not certified).
    PropertyViolated = 1,
    ParseError = 2,
    BudgetExceeded = 3,
    InvalidArgument = 4,
    Internal = 5,
}

/// A finite field GF(p^m).
pub struct TcField(Field);

/// A validated problem file.
pub struct TcProblem(Problem);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let s = CString::new(msg.into().replace('\0', " ")).expect("NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(s));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn fail(status: TcStatus, msg: impl Into<String>) -> TcStatus {
    set_error(msg);
    status
}

/// Run `f`, turning panics into `Internal`.
fn guard(f: impl FnOnce() -> TcStatus) -> TcStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(p) => {
            let msg = p
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            fail(TcStatus::Internal, format!("internal error: {msg}"))
        }
    }
}

fn status_of(code: i32) -> TcStatus {
    match code {
        exit::OK => TcStatus::Ok,
        exit::VIOLATED => TcStatus::PropertyViolated,
        exit::PARSE => TcStatus::ParseError,
        exit::BUDGET => TcStatus::BudgetExceeded,
        _ => TcStatus::Internal,
    }
}

/// # Safety
/// `s` must be null or a valid NUL-terminated string.
unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, TcStatus> {
    if s.is_null() {
        return Err(fail(TcStatus::InvalidArgument, "null string argument"));
    }
    CStr::from_ptr(s).to_str().map_err(|_| fail(TcStatus::ParseError, "argument is not valid UTF-8"))
}

fn to_c(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).expect("NULs removed").into_raw()
}

/// Store the report in `*out` and map the exit code. On error the report still
/// carries the message.
///
/// # Safety
/// `out` must be valid for writes.
unsafe fn emit(out: *mut *mut c_char, o: Outcome) -> TcStatus {
    let status = status_of(o.exit_code);
    if let Some(e) = o.report.get("error").and_then(|e| e.as_str()) {
        set_error(e);
    } else if status != TcStatus::Ok {
        set_error(format!("exit status {}", o.exit_code));
    }
    *out = to_c(serde_json::to_string(&o.report).expect("reports serialize"));
    status
}

/// Message for the last failed call on this thread, or null. Valid until the
/// next call on the same thread; do not free.
#[no_mangle]
pub extern "C" fn tc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Release a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a pointer obtained from this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Create GF(p^m) with the default modulus.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn tc_field_new(p: u32, m: u32, out: *mut *mut TcField) -> TcStatus {
    guard(|| {
        if out.is_null() {
            return fail(TcStatus::InvalidArgument, "null output pointer");
        }
        match Field::new(p, m) {
            Ok(f) => {
                *out = Box::into_raw(Box::new(TcField(f)));
                TcStatus::Ok
            }
            Err(e) => fail(TcStatus::InvalidArgument, e.to_string()),
        }
    })
}

/// # Safety
/// `f` must be null or a handle from [`tc_field_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tc_field_free(f: *mut TcField) {
    if !f.is_null() {
        drop(Box::from_raw(f));
    }
}

/// Number of elements, or 0 for a null handle.
///
/// # Safety
/// `f` must be null or a live field handle.
#[no_mangle]
pub unsafe extern "C" fn tc_field_order(f: *const TcField) -> u32 {
    f.as_ref().map_or(0, |f| f.0.order())
}

unsafe fn binary_op(
    f: *const TcField,
    a: u32,
    b: u32,
    out: *mut u32,
    op: impl FnOnce(&Field, FieldElement, FieldElement) -> Result<FieldElement, String>,
) -> TcStatus {
    guard(|| {
        let Some(f) = f.as_ref() else { return fail(TcStatus::InvalidArgument, "null field") };
        if out.is_null() {
            return fail(TcStatus::InvalidArgument, "null output pointer");
        }
        let q = f.0.order();
        if a >= q || b >= q {
            return fail(TcStatus::InvalidArgument, format!("element index out of range 0..{q}"));
        }
        match op(&f.0, index_to_element(&f.0, a), index_to_element(&f.0, b)) {
            Ok(c) => {
                *out = element_to_index(&f.0, c);
                TcStatus::Ok
            }
            Err(e) => fail(TcStatus::InvalidArgument, e),
        }
    })
}

fn index_to_element(f: &Field, i: u32) -> FieldElement {
    if i == 0 {
        f.zero()
    } else {
        f.exp(i as i64 - 1)
    }
}

fn element_to_index(f: &Field, a: FieldElement) -> u32 {
    f.dlog(a).map_or(0, |k| k + 1)
}

/// `*out = a + b`.
///
/// # Safety
/// `f` must be a live field handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn tc_field_add(f: *const TcField, a: u32, b: u32, out: *mut u32) -> TcStatus {
    binary_op(f, a, b, out, |f, x, y| Ok(f.add(x, y)))
}

/// `*out = a * b`.
///
/// # Safety
/// `f` must be a live field handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn tc_field_mul(f: *const TcField, a: u32, b: u32, out: *mut u32) -> TcStatus {
    binary_op(f, a, b, out, |f, x, y| Ok(f.mul(x, y)))
}

/// `*out = a / b`; `InvalidArgument` when `b` is zero.
///
/// # Safety
/// `f` must be a live field handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn tc_field_div(f: *const TcField, a: u32, b: u32, out: *mut u32) -> TcStatus {
    binary_op(f, a, b, out, |f, x, y| f.div(x, y).map_err(|e| e.to_string()))
}

/// Parse a problem file (JSON).
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn tc_problem_from_json(json: *const c_char, out: *mut *mut TcProblem) -> TcStatus {
    guard(|| {
        if out.is_null() {
            return fail(TcStatus::InvalidArgument, "null output pointer");
        }
        let s = match read_str(json) {
            Ok(s) => s,
            Err(st) => return st,
        };
        match Problem::from_json(s) {
            Ok(p) => {
                *out = Box::into_raw(Box::new(TcProblem(p)));
                TcStatus::Ok
            }
            Err(e) => fail(TcStatus::ParseError, e.to_string()),
        }
    })
}

/// # Safety
/// `p` must be null or a handle from [`tc_problem_from_json`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tc_problem_free(p: *mut TcProblem) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

unsafe fn run_problem(
    p: *const TcProblem,
    out: *mut *mut c_char,
    f: impl FnOnce(&Problem) -> Outcome,
) -> TcStatus {
    guard(|| {
        let Some(p) = p.as_ref() else { return fail(TcStatus::InvalidArgument, "null problem") };
        if out.is_null() {
            return fail(TcStatus::InvalidArgument, "null output pointer");
        }
        emit(out, f(&p.0))
    })
}

/// Solve, certify and check Euler–Jacobi; `Ok` iff certified. The JSON report
/// is written to `*report` even when the status is not `Ok`.
///
/// # Safety
/// `p` must be a live problem handle and `report` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn tc_solve(p: *const TcProblem, report: *mut *mut c_char) -> TcStatus {
    run_problem(p, report, |pr| cli::cmd_solve(pr, Overrides::default()))
}

/// Code parameters, kernel, exact distance and bounds.
///
/// # Safety
/// `p` must be a live problem handle and `report` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn tc_code(p: *const TcProblem, report: *mut *mut c_char) -> TcStatus {
    run_problem(p, report, |pr| cli::cmd_code(pr, Overrides::default()))
}

/// Lower bounds and genericity hypotheses without computing `d`.
///
/// # Safety
/// `p` must be a live problem handle and `report` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn tc_bounds(p: *const TcProblem, report: *mut *mut c_char) -> TcStatus {
    run_problem(p, report, |pr| cli::cmd_bounds(pr, Overrides::default()))
}

/// Random systems on the problem's polytopes.
///
/// # Safety
/// `p` must be a live problem handle and `report` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn tc_random_search(
    p: *const TcProblem,
    trials: u64,
    seed: u64,
    report: *mut *mut c_char,
) -> TcStatus {
    run_problem(p, report, |pr| cli::cmd_random_search(pr, trials, seed, Overrides::default()))
}

/// Check the built-in reference examples.
///
/// # Safety
/// `report` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn tc_paper_examples(report: *mut *mut c_char) -> TcStatus {
    guard(|| {
        if report.is_null() {
            return fail(TcStatus::InvalidArgument, "null output pointer");
        }
        emit(report, cli::cmd_paper_examples(Overrides::default()))
    })
}

/// Mixed volume of polytopes given as a JSON array of vertex lists,
/// e.g. `[[[0,0],[1,0],[0,1]], [[0,0],[2,0],[0,2]]]`.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn tc_mixed_volume(json: *const c_char, out: *mut u64) -> TcStatus {
    guard(|| {
        if out.is_null() {
            return fail(TcStatus::InvalidArgument, "null output pointer");
        }
        let s = match read_str(json) {
            Ok(s) => s,
            Err(st) => return st,
        };
        let lists: Vec<Vec<Vec<i64>>> = match serde_json::from_str(s) {
            Ok(v) => v,
            Err(e) => return fail(TcStatus::ParseError, e.to_string()),
        };
        let polys: Result<Vec<Polytope>, _> =
            lists.into_iter().map(|vs| Polytope::hull(vs.into_iter().map(LatticeVector))).collect();
        match polys.and_then(|ps| mixed_volume(&ps)) {
            Ok(v) => {
                *out = v;
                TcStatus::Ok
            }
            Err(e) => fail(TcStatus::InvalidArgument, e.to_string()),
        }
    })
}
