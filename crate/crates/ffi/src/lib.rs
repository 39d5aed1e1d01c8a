//! C ABI over `community_kit`.
//!
//! Graphs and partitions are opaque handles owned by the caller and
//! released with the matching `*_free` function. Every fallible call
//! returns a [`CkStatus`]; on failure [`ck_last_error_message`] describes
//! the error for the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use community_kit::families::{gen_g_abs, gen_g_pl, gen_star, EdgeChoice};
use community_kit::graph::{parse_graph, write_graph, Graph};
use community_kit::solve::{solve, Outcome};
use community_kit::verifier::{verify_partition, Mode, Partition};

/// Bumped on any incompatible change to this interface.
pub const CK_ABI_VERSION: u32 = 1;

/// Opaque graph handle.
pub struct CkGraph(Graph);

/// Opaque partition handle.
pub struct CkPartition(Partition);

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CkStatus {
    Ok = 0,
    /// The question has a definite negative answer.
    NoStructure = 1,
    InvalidArgument = 2,
    /// Exhaustive search was needed above the vertex cap.
    CapExceeded = 3,
    Panic = 4,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CkVariant {
    Strict = 0,
    Generalized = 1,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CkEdgeChoice {
    V2V3 = 0,
    V3V4 = 1,
    Both = 2,
    Neither = 3,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl ToString) {
    let text = CString::new(msg.to_string().replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = text);
}

fn invalid(msg: impl ToString) -> CkStatus {
    set_error(msg);
    CkStatus::InvalidArgument
}

/// Runs `f`, turning panics into [`CkStatus::Panic`].
fn guard(f: impl FnOnce() -> CkStatus) -> CkStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| {
        set_error("internal panic");
        CkStatus::Panic
    })
}

fn mode(variant: CkVariant, connected: bool) -> Mode {
    let m = match variant {
        CkVariant::Strict => Mode::strict(),
        CkVariant::Generalized => Mode::generalized(),
    };
    if connected {
        m.connected()
    } else {
        m
    }
}

/// # Safety
/// `out` must be null or valid for writes.
unsafe fn emit_graph(g: Result<Graph, impl ToString>, out: *mut *mut CkGraph) -> CkStatus {
    if out.is_null() {
        return invalid("null output pointer");
    }
    match g {
        Ok(g) => {
            *out = Box::into_raw(Box::new(CkGraph(g)));
            CkStatus::Ok
        }
        Err(e) => invalid(e),
    }
}

#[no_mangle]
pub extern "C" fn ck_abi_version() -> u32 {
    CK_ABI_VERSION
}

/// Message for the last failed call on this thread, or an empty string.
/// Valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn ck_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Parses the edge-list text format.
///
/// # Safety
/// `text` must be a nul-terminated string; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ck_graph_parse(text: *const c_char, out: *mut *mut CkGraph) -> CkStatus {
    guard(|| {
        if text.is_null() {
            return invalid("null text");
        }
        let bytes = CStr::from_ptr(text).to_bytes();
        emit_graph(parse_graph(bytes), out)
    })
}

/// Builds a graph from `m` edges stored as `2m` consecutive vertex ids.
///
/// # Safety
/// `edges` must point to `2 * m` readable values (or be null when `m` is
/// 0); `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ck_graph_from_edges(
    n: usize,
    edges: *const usize,
    m: usize,
    out: *mut *mut CkGraph,
) -> CkStatus {
    guard(|| {
        let flat: &[usize] = if m == 0 {
            &[]
        } else if edges.is_null() {
            return invalid("null edge array");
        } else {
            std::slice::from_raw_parts(edges, 2 * m)
        };
        let pairs: Vec<(usize, usize)> = flat.chunks_exact(2).map(|e| (e[0], e[1])).collect();
        emit_graph(Graph::from_edges(n, &pairs), out)
    })
}

/// # Safety
/// `g` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn ck_graph_vertex_count(g: *const CkGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.n())
}

/// # Safety
/// `g` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn ck_graph_edge_count(g: *const CkGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.m())
}

/// Writes the edge-list text of `g` to `*out`; release it with
/// [`ck_string_free`].
///
/// # Safety
/// `g` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ck_graph_to_text(g: *const CkGraph, out: *mut *mut c_char) -> CkStatus {
    guard(|| {
        let (Some(g), false) = (g.as_ref(), out.is_null()) else {
            return invalid("null argument");
        };
        let text = CString::new(write_graph(&g.0)).expect("edge lists contain no nul");
        *out = text.into_raw();
        CkStatus::Ok
    })
}

/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn ck_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `g` must be null or a handle that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn ck_graph_free(g: *mut CkGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Partition from community indices `assign[0..n]`; the indices must be
/// exactly `0..k` for some `k`.
///
/// # Safety
/// `assign` must point to `n` readable values; `out` must be valid for
/// writes.
#[no_mangle]
pub unsafe extern "C" fn ck_partition_new(
    assign: *const usize,
    n: usize,
    out: *mut *mut CkPartition,
) -> CkStatus {
    guard(|| {
        if assign.is_null() || out.is_null() {
            return invalid("null argument");
        }
        let values = std::slice::from_raw_parts(assign, n).to_vec();
        match Partition::from_assignment(values) {
            Ok(p) => {
                *out = Box::into_raw(Box::new(CkPartition(p)));
                CkStatus::Ok
            }
            Err(e) => invalid(e),
        }
    })
}

/// Community of vertex `v`.
///
/// # Safety
/// `p` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ck_partition_get(
    p: *const CkPartition,
    v: usize,
    out: *mut usize,
) -> CkStatus {
    let (Some(p), false) = (p.as_ref(), out.is_null()) else {
        return invalid("null argument");
    };
    if v >= p.0.n() {
        return invalid(format!("vertex {v} out of range (n = {})", p.0.n()));
    }
    *out = p.0.community_of(v);
    CkStatus::Ok
}

/// # Safety
/// `p` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn ck_partition_vertex_count(p: *const CkPartition) -> usize {
    p.as_ref().map_or(0, |p| p.0.n())
}

/// # Safety
/// `p` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn ck_partition_k(p: *const CkPartition) -> usize {
    p.as_ref().map_or(0, |p| p.0.k())
}

/// # Safety
/// `p` must be null or a handle that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn ck_partition_free(p: *mut CkPartition) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Sets `*valid` to whether `p` is a structure of `g` in the given mode.
///
/// # Safety
/// Handles must be live and `valid` writable.
#[no_mangle]
pub unsafe extern "C" fn ck_verify(
    g: *const CkGraph,
    p: *const CkPartition,
    variant: CkVariant,
    connected: bool,
    valid: *mut bool,
) -> CkStatus {
    guard(|| {
        let (Some(g), Some(p), false) = (g.as_ref(), p.as_ref(), valid.is_null()) else {
            return invalid("null argument");
        };
        match verify_partition(&g.0, &p.0, mode(variant, connected)) {
            Ok(report) => {
                *valid = report.valid;
                CkStatus::Ok
            }
            Err(e) => invalid(e),
        }
    })
}

/// Finds a k-community structure. On [`CkStatus::Ok`] `*out` receives a
/// new partition; [`CkStatus::NoStructure`] and [`CkStatus::CapExceeded`]
/// leave it untouched.
///
/// # Safety
/// `g` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ck_solve(
    g: *const CkGraph,
    k: usize,
    variant: CkVariant,
    connected: bool,
    cap: usize,
    out: *mut *mut CkPartition,
) -> CkStatus {
    guard(|| {
        let (Some(g), false) = (g.as_ref(), out.is_null()) else {
            return invalid("null argument");
        };
        match solve(&g.0, k, mode(variant, connected), cap) {
            Ok(sol) => match sol.outcome {
                Outcome::Found(p) => {
                    *out = Box::into_raw(Box::new(CkPartition(p)));
                    CkStatus::Ok
                }
                Outcome::NoStructure(why) => {
                    set_error(why);
                    CkStatus::NoStructure
                }
                Outcome::UnknownCapped { n, cap } => {
                    set_error(format!("{n} vertices exceed the search cap of {cap}"));
                    CkStatus::CapExceeded
                }
            },
            Err(e) => invalid(e),
        }
    })
}

/// The star with `n` leaves.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ck_generate_star(n: usize, out: *mut *mut CkGraph) -> CkStatus {
    guard(|| emit_graph(gen_star(n), out))
}

/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ck_generate_gabs(
    a: usize,
    b: usize,
    s: usize,
    out: *mut *mut CkGraph,
) -> CkStatus {
    guard(|| emit_graph(gen_g_abs(a, b, s), out))
}

/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ck_generate_gpl(
    p: usize,
    l: usize,
    edge: CkEdgeChoice,
    out: *mut *mut CkGraph,
) -> CkStatus {
    let edge = match edge {
        CkEdgeChoice::V2V3 => EdgeChoice::V2V3,
        CkEdgeChoice::V3V4 => EdgeChoice::V3V4,
        CkEdgeChoice::Both => EdgeChoice::Both,
        CkEdgeChoice::Neither => EdgeChoice::Neither,
    };
    guard(|| emit_graph(gen_g_pl(p, l, edge), out))
}
