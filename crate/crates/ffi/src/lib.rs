//! C ABI over `vwd-core`.
//!
//! Graphs are opaque `VwdGraph` handles released with `vwd_graph_free`.
//! Every function returns a `VwdStatus`; on failure a message is available
//! from `vwd_last_error` until the next call on the same thread. Strings
//! returned through out-parameters are owned by the caller and released
//! with `vwd_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use vwd_core::closedforms;
use vwd_core::equiv;
use vwd_core::io::{graph_to_json, parse_graph};
use vwd_core::vwdigraph::{count_m_omega, DimensionFunction, VwDigraph};
use vwd_core::Error;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VwdStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    /// Malformed JSON, bad dimensions, vertices or permutations.
    InvalidInput = 3,
    /// The operation needs an acyclic graph.
    Cyclic = 4,
    BudgetExceeded = 5,
    /// A formula or internal consistency check failed.
    Internal = 6,
    Panic = 7,
}

/// Opaque weighted digraph.
pub struct VwdGraph {
    inner: VwDigraph,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).expect("interior nul removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> VwdStatus {
    match e {
        Error::Cyclic => VwdStatus::Cyclic,
        Error::BudgetExceeded { .. } | Error::OrbitBudgetExceeded { .. } => VwdStatus::BudgetExceeded,
        Error::InexactDivision { .. } => VwdStatus::Internal,
        _ => VwdStatus::InvalidInput,
    }
}

struct Fail(VwdStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> VwdStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => VwdStatus::Ok,
        Ok(Err(Fail(status, message))) => {
            set_error(message);
            status
        }
        Err(_) => {
            set_error("panic inside vwd".to_string());
            VwdStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, name: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail(VwdStatus::NullPointer, format!("{name} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail(VwdStatus::InvalidUtf8, format!("{name} is not UTF-8")))
}

unsafe fn graph_arg<'a>(p: *const VwdGraph) -> Result<&'a VwDigraph, Fail> {
    p.as_ref()
        .map(|g| &g.inner)
        .ok_or_else(|| Fail(VwdStatus::NullPointer, "graph is null".into()))
}

unsafe fn omega_arg(dims: *const usize, len: usize) -> Result<DimensionFunction, Fail> {
    if dims.is_null() {
        return Err(Fail(VwdStatus::NullPointer, "omega is null".into()));
    }
    Ok(DimensionFunction::new(std::slice::from_raw_parts(dims, len).to_vec())?)
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(VwdStatus::NullPointer, "output pointer is null".into()));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    let c = CString::new(s).map_err(|_| Fail(VwdStatus::Internal, "string contains nul".into()))?;
    write_out(out, c.into_raw())
}

fn new_graph(g: VwDigraph) -> *mut VwdGraph {
    Box::into_raw(Box::new(VwdGraph { inner: g }))
}

/// Message for the last failed call on this thread, or null. Valid until
/// the next call.
#[no_mangle]
pub extern "C" fn vwd_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be null or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn vwd_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses graph JSON (`{"omega":[..],"edges":[{"from":1,"to":2,"weight":"10"}]}`).
///
/// # Safety
/// `json` must be a nul-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn vwd_graph_from_json(json: *const c_char, out: *mut *mut VwdGraph) -> VwdStatus {
    guard(|| {
        let g = parse_graph(str_arg(json, "json")?)?;
        write_out(out, new_graph(g))
    })
}

/// # Safety
/// `graph` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn vwd_graph_to_json(graph: *const VwdGraph, out: *mut *mut c_char) -> VwdStatus {
    guard(|| write_string(out, graph_to_json(graph_arg(graph)?)))
}

/// # Safety
/// `graph` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn vwd_graph_free(graph: *mut VwdGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// # Safety
/// `graph` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn vwd_graph_vertex_count(graph: *const VwdGraph, out: *mut usize) -> VwdStatus {
    guard(|| write_out(out, graph_arg(graph)?.vertex_count()))
}

/// # Safety
/// `graph` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn vwd_graph_is_acyclic(graph: *const VwdGraph, out: *mut bool) -> VwdStatus {
    guard(|| write_out(out, graph_arg(graph)?.is_acyclic()))
}

/// # Safety
/// Both handles must be live and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn vwd_graph_equal(a: *const VwdGraph, b: *const VwdGraph, out: *mut bool) -> VwdStatus {
    guard(|| write_out(out, graph_arg(a)? == graph_arg(b)?))
}

/// Applies an operation given as JSON, e.g.
/// `{"op":"sigma-k-lc","vertex":4,"sigma":[2,3,1],"k":2}`. The result is a
/// new handle; the input is unchanged.
///
/// # Safety
/// `graph` must be a live handle, `op_json` nul-terminated, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn vwd_graph_apply(
    graph: *const VwdGraph,
    op_json: *const c_char,
    out: *mut *mut VwdGraph,
) -> VwdStatus {
    guard(|| {
        let g = graph_arg(graph)?;
        let op = equiv::parse_operation(str_arg(op_json, "op_json")?)?;
        write_out(out, new_graph(op.apply(g)?))
    })
}

/// Canonical representative and size of the equivalence class of `graph`.
///
/// # Safety
/// `graph` must be a live handle; `canonical` and `size` writable.
#[no_mangle]
pub unsafe extern "C" fn vwd_orbit(
    graph: *const VwdGraph,
    canonical: *mut *mut VwdGraph,
    size: *mut usize,
) -> VwdStatus {
    guard(|| {
        if canonical.is_null() || size.is_null() {
            return Err(Fail(VwdStatus::NullPointer, "output pointer is null".into()));
        }
        let report = equiv::orbit(graph_arg(graph)?, false)?;
        write_out(size, report.size)?;
        write_out(canonical, new_graph(report.canonical))
    })
}

/// Number of equivalence classes for the dimension function `dims[0..len]`.
///
/// # Safety
/// `dims` must point to `len` values and `out` be writable.
#[no_mangle]
pub unsafe extern "C" fn vwd_count_classes(dims: *const usize, len: usize, out: *mut u64) -> VwdStatus {
    guard(|| {
        let omega = omega_arg(dims, len)?;
        write_out(out, equiv::count_classes(&omega)? as u64)
    })
}

/// Number of acyclic weighted digraphs for `dims[0..len]`, as a decimal string.
///
/// # Safety
/// `dims` must point to `len` values and `out` be writable.
#[no_mangle]
pub unsafe extern "C" fn vwd_count_m_omega(dims: *const usize, len: usize, out: *mut *mut c_char) -> VwdStatus {
    guard(|| {
        let omega = omega_arg(dims, len)?;
        write_string(out, count_m_omega(&omega)?.to_string())
    })
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn vwd_count_two_simplices(n1: u64, n2: u64, out: *mut u64) -> VwdStatus {
    guard(|| write_out(out, closedforms::count_two_simplices(n1, n2)?))
}

/// Closed-form class count for three simplices (`n1 <= n2 <= n3`), as a
/// decimal string.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn vwd_count_three_simplices(n1: u64, n2: u64, n3: u64, out: *mut *mut c_char) -> VwdStatus {
    guard(|| write_string(out, closedforms::count_three_simplices(n1, n2, n3)?.total.to_string()))
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn vwd_count_type8(n: u64, out: *mut u64) -> VwdStatus {
    guard(|| write_out(out, closedforms::count_type8(n)?))
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn vwd_f_closed(n: u64, out: *mut u64) -> VwdStatus {
    guard(|| write_out(out, closedforms::f_closed(n)?))
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn vwd_h_closed(n: u64, m: u64, out: *mut u64) -> VwdStatus {
    guard(|| write_out(out, closedforms::h_closed(n, m)?))
}
