//! C ABI over `rainbow-core`.
//!
//! Graphs and colorings are opaque heap handles released with
//! [`rvc_graph_free`] and [`rvc_coloring_free`]. Every fallible call returns
//! an [`RvcStatus`]; on failure [`rvc_last_error_message`] describes the
//! error on the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::time::Duration;

use rainbow_core::check::{CheckError, RainbowChecker};
use rainbow_core::claims::{paper_coloring, ClaimError, ColoringSpec};
use rainbow_core::families::{generate, FamilySpec};
use rainbow_core::graph::{all_pairs_distances, GraphError};
use rainbow_core::solver::{SearchBudget, SolveError, Solver};
use rainbow_core::{Graph, Mode, VertexColoring};

/// Opaque graph handle.
pub struct RvcGraph(Graph);

/// Opaque vertex coloring handle.
pub struct RvcColoring(VertexColoring);

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RvcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    /// Malformed edge-list or coloring text.
    Parse = 3,
    InvalidArgument = 4,
    /// The graph is not connected.
    Disconnected = 5,
    /// The input exceeds a size limit of the requested operation.
    TooLarge = 6,
    Internal = 7,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RvcMode {
    /// Some rainbow path per pair.
    Rvc = 0,
    /// Some rainbow geodesic per pair.
    Srvc = 1,
}

impl From<RvcMode> for Mode {
    fn from(m: RvcMode) -> Mode {
        match m {
            RvcMode::Rvc => Mode::Rvc,
            RvcMode::Srvc => Mode::Srvc,
        }
    }
}

/// Generator selector for [`rvc_graph_family`]. `p` and `q` are
/// `n` (path, cycle, complete, wheel, wheel2), `s, t` (bipartite) or
/// `a, b` (glued).
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RvcFamily {
    Path = 0,
    Cycle = 1,
    Complete = 2,
    Bipartite = 3,
    Wheel = 4,
    Wheel2 = 5,
    Glued = 6,
}

/// Selector for [`rvc_paper_coloring`].
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RvcColoringKind {
    /// `n - 2` colors around a diametral geodesic; needs diameter >= 3.
    DiametralGeodesic = 0,
    /// rvc coloring of the two-layers wheel of rim size `p`.
    Wheel2Rvc = 1,
    /// srvc coloring of the two-layers wheel of rim size `p`.
    Wheel2Srvc = 2,
    /// `p`-color rvc coloring of the glued graph `G(p, q)`.
    GluedRvc = 3,
    /// `q`-color srvc coloring of the glued graph `G(p, q)`.
    GluedSrvc = 4,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RvcCheckResult {
    pub valid: bool,
    /// First failing pair in lexicographic order; meaningful when `!valid`.
    pub failing_u: usize,
    pub failing_v: usize,
    pub pairs_checked: usize,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RvcSolveResult {
    /// The parameter when `exact`, otherwise a proven lower bound.
    pub value: usize,
    pub exact: bool,
    pub nodes_explored: u64,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn fail(status: RvcStatus, message: impl Into<String>) -> RvcStatus {
    set_error(message.into());
    status
}

fn graph_status(e: &GraphError) -> RvcStatus {
    match e {
        GraphError::Disconnected => RvcStatus::Disconnected,
        GraphError::NoSuchVertex { .. } => RvcStatus::InvalidArgument,
        _ => RvcStatus::Parse,
    }
}

fn check_status(e: &CheckError) -> RvcStatus {
    match e {
        CheckError::Graph(g) => graph_status(g),
        CheckError::OracleGuard { .. } => RvcStatus::TooLarge,
        _ => RvcStatus::InvalidArgument,
    }
}

fn solve_status(e: &SolveError) -> RvcStatus {
    match e {
        SolveError::Graph(g) => graph_status(g),
        SolveError::Check(c) => check_status(c),
        SolveError::TooLarge(_) | SolveError::OrderOutOfRange { .. } | SolveError::PaletteTooLarge { .. } => {
            RvcStatus::TooLarge
        }
        SolveError::BudgetExhausted => RvcStatus::Internal,
    }
}

fn claim_status(e: &ClaimError) -> RvcStatus {
    match e {
        ClaimError::Solve(s) => solve_status(s),
        _ => RvcStatus::InvalidArgument,
    }
}

/// Runs `f`, turning a panic into [`RvcStatus::Internal`].
fn guarded(f: impl FnOnce() -> RvcStatus) -> RvcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => fail(RvcStatus::Internal, "internal panic"),
    }
}

unsafe fn read_str<'a>(text: *const c_char) -> Result<&'a str, RvcStatus> {
    if text.is_null() {
        return Err(fail(RvcStatus::NullPointer, "text is null"));
    }
    CStr::from_ptr(text)
        .to_str()
        .map_err(|e| fail(RvcStatus::InvalidUtf8, e.to_string()))
}

unsafe fn store<T>(out: *mut *mut T, value: T) {
    *out = Box::into_raw(Box::new(value));
}

/// Message for the last failure on this thread, or null. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn rvc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Frees a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn rvc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses the edge-list format (`n m` header, then `u v` lines).
///
/// # Safety
/// `text` must be a nul-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn rvc_graph_parse(text: *const c_char, out: *mut *mut RvcGraph) -> RvcStatus {
    guarded(|| {
        if out.is_null() {
            return fail(RvcStatus::NullPointer, "out is null");
        }
        let text = match read_str(text) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match Graph::parse_edge_list(text) {
            Ok(g) => {
                store(out, RvcGraph(g));
                RvcStatus::Ok
            }
            Err(e) => fail(graph_status(&e), e.to_string()),
        }
    })
}

/// Builds a graph of `order` vertices from `edge_count` pairs stored
/// flat in `edges` (`u0, v0, u1, v1, ...`).
///
/// # Safety
/// `edges` must point to `2 * edge_count` readable values (or may be null
/// when `edge_count` is 0) and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rvc_graph_from_edges(
    order: usize,
    edges: *const usize,
    edge_count: usize,
    out: *mut *mut RvcGraph,
) -> RvcStatus {
    guarded(|| {
        if out.is_null() || (edges.is_null() && edge_count > 0) {
            return fail(RvcStatus::NullPointer, "null argument");
        }
        let flat = if edge_count == 0 {
            &[][..]
        } else {
            std::slice::from_raw_parts(edges, 2 * edge_count)
        };
        let pairs: Vec<(usize, usize)> = flat.chunks_exact(2).map(|p| (p[0], p[1])).collect();
        match Graph::from_edges(order, &pairs) {
            Ok(g) => {
                store(out, RvcGraph(g));
                RvcStatus::Ok
            }
            Err(e) => fail(RvcStatus::InvalidArgument, e.to_string()),
        }
    })
}

/// Generates a member of a named family.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rvc_graph_family(family: RvcFamily, p: usize, q: usize, out: *mut *mut RvcGraph) -> RvcStatus {
    guarded(|| {
        if out.is_null() {
            return fail(RvcStatus::NullPointer, "out is null");
        }
        let spec = match family {
            RvcFamily::Path => FamilySpec::Path { n: p },
            RvcFamily::Cycle => FamilySpec::Cycle { n: p },
            RvcFamily::Complete => FamilySpec::Complete { n: p },
            RvcFamily::Bipartite => FamilySpec::Bipartite { s: p, t: q },
            RvcFamily::Wheel => FamilySpec::Wheel { n: p },
            RvcFamily::Wheel2 => FamilySpec::Wheel2 { n: p },
            RvcFamily::Glued => FamilySpec::Thm4 { a: p, b: q },
        };
        match generate(&spec) {
            Ok(g) => {
                store(out, RvcGraph(g));
                RvcStatus::Ok
            }
            Err(e) => fail(RvcStatus::InvalidArgument, e.to_string()),
        }
    })
}

/// # Safety
/// `g` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn rvc_graph_free(g: *mut RvcGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Number of vertices; 0 for null.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rvc_graph_order(g: *const RvcGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.order())
}

/// Number of edges; 0 for null.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rvc_graph_edge_count(g: *const RvcGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.edge_count())
}

/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn rvc_graph_diameter(g: *const RvcGraph, out: *mut u32) -> RvcStatus {
    guarded(|| {
        let (Some(g), false) = (g.as_ref(), out.is_null()) else {
            return fail(RvcStatus::NullPointer, "null argument");
        };
        match all_pairs_distances(&g.0).diameter() {
            Some(d) => {
                *out = d;
                RvcStatus::Ok
            }
            None => fail(RvcStatus::Disconnected, "graph is disconnected"),
        }
    })
}

/// Serializes `g` in the edge-list format. Free the result with
/// [`rvc_string_free`].
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn rvc_graph_to_edge_list(g: *const RvcGraph, out: *mut *mut c_char) -> RvcStatus {
    guarded(|| {
        let (Some(g), false) = (g.as_ref(), out.is_null()) else {
            return fail(RvcStatus::NullPointer, "null argument");
        };
        let text = CString::new(g.0.to_edge_list(None)).expect("edge lists contain no nul");
        *out = text.into_raw();
        RvcStatus::Ok
    })
}

/// Wraps `len` colors in `1..=palette_size`.
///
/// # Safety
/// `colors` must point to `len` readable values (or be null when `len` is
/// 0) and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rvc_coloring_new(
    colors: *const u32,
    len: usize,
    palette_size: usize,
    out: *mut *mut RvcColoring,
) -> RvcStatus {
    guarded(|| {
        if out.is_null() || (colors.is_null() && len > 0) {
            return fail(RvcStatus::NullPointer, "null argument");
        }
        let colors = if len == 0 {
            Vec::new()
        } else {
            std::slice::from_raw_parts(colors, len).to_vec()
        };
        match VertexColoring::new(palette_size, colors) {
            Ok(c) => {
                store(out, RvcColoring(c));
                RvcStatus::Ok
            }
            Err(e) => fail(RvcStatus::InvalidArgument, e.to_string()),
        }
    })
}

/// Parses the coloring format (`n k` header, then `vertex color` lines).
///
/// # Safety
/// `text` must be a nul-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn rvc_coloring_parse(text: *const c_char, out: *mut *mut RvcColoring) -> RvcStatus {
    guarded(|| {
        if out.is_null() {
            return fail(RvcStatus::NullPointer, "out is null");
        }
        let text = match read_str(text) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match VertexColoring::parse(text) {
            Ok(c) => {
                store(out, RvcColoring(c));
                RvcStatus::Ok
            }
            Err(e) => fail(RvcStatus::Parse, e.to_string()),
        }
    })
}

/// # Safety
/// `c` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn rvc_coloring_free(c: *mut RvcColoring) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Number of colored vertices; 0 for null.
///
/// # Safety
/// `c` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rvc_coloring_len(c: *const RvcColoring) -> usize {
    c.as_ref().map_or(0, |c| c.0.len())
}

/// Palette size `k`; 0 for null.
///
/// # Safety
/// `c` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rvc_coloring_palette_size(c: *const RvcColoring) -> usize {
    c.as_ref().map_or(0, |c| c.0.palette_size())
}

/// # Safety
/// `c` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn rvc_coloring_get(c: *const RvcColoring, vertex: usize, out: *mut u32) -> RvcStatus {
    guarded(|| {
        let (Some(c), false) = (c.as_ref(), out.is_null()) else {
            return fail(RvcStatus::NullPointer, "null argument");
        };
        match c.0.color(vertex) {
            Some(color) => {
                *out = color;
                RvcStatus::Ok
            }
            None => fail(RvcStatus::InvalidArgument, format!("vertex {vertex} has no color")),
        }
    })
}

/// Checks `c` on `g` in `mode`.
///
/// # Safety
/// `g` and `c` must be live handles and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn rvc_check(
    g: *const RvcGraph,
    c: *const RvcColoring,
    mode: RvcMode,
    out: *mut RvcCheckResult,
) -> RvcStatus {
    guarded(|| {
        let (Some(g), Some(c), false) = (g.as_ref(), c.as_ref(), out.is_null()) else {
            return fail(RvcStatus::NullPointer, "null argument");
        };
        let report = match RainbowChecker::new(&g.0).and_then(|ch| ch.check(&c.0, mode.into())) {
            Ok(r) => r,
            Err(e) => return fail(check_status(&e), e.to_string()),
        };
        let (failing_u, failing_v) = report.failing_pair.unwrap_or((0, 0));
        *out = RvcCheckResult {
            valid: report.valid,
            failing_u,
            failing_v,
            pairs_checked: report.pairs_checked,
        };
        RvcStatus::Ok
    })
}

/// Computes rvc or srvc. Zero `max_nodes` or `max_millis` means no limit.
/// Running out of budget is not an error: `exact` is false and `value` is
/// a lower bound. When `witness` is non-null it receives an optimal
/// coloring handle, or null if none was found.
///
/// # Safety
/// `g` must be a live handle, `out` writable, `witness` null or writable.
#[no_mangle]
pub unsafe extern "C" fn rvc_solve(
    g: *const RvcGraph,
    mode: RvcMode,
    max_nodes: u64,
    max_millis: u64,
    out: *mut RvcSolveResult,
    witness: *mut *mut RvcColoring,
) -> RvcStatus {
    guarded(|| {
        let (Some(g), false) = (g.as_ref(), out.is_null()) else {
            return fail(RvcStatus::NullPointer, "null argument");
        };
        let budget = SearchBudget {
            max_nodes: (max_nodes > 0).then_some(max_nodes),
            max_time: (max_millis > 0).then(|| Duration::from_millis(max_millis)),
        };
        let result = match Solver::new(&g.0).and_then(|mut s| s.compute(mode.into(), &budget)) {
            Ok(r) => r,
            Err(e) => return fail(solve_status(&e), e.to_string()),
        };
        *out = RvcSolveResult {
            value: result.value,
            exact: result.is_exact(),
            nodes_explored: result.nodes_explored,
        };
        if !witness.is_null() {
            *witness = match result.witness {
                Some(w) if result.is_exact() => Box::into_raw(Box::new(RvcColoring(w))),
                _ => ptr::null_mut(),
            };
        }
        RvcStatus::Ok
    })
}

/// Materializes an explicit construction on `g`, which must be the graph it
/// is defined for.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn rvc_paper_coloring(
    g: *const RvcGraph,
    kind: RvcColoringKind,
    p: usize,
    q: usize,
    out: *mut *mut RvcColoring,
) -> RvcStatus {
    guarded(|| {
        let (Some(g), false) = (g.as_ref(), out.is_null()) else {
            return fail(RvcStatus::NullPointer, "null argument");
        };
        let spec = match kind {
            RvcColoringKind::DiametralGeodesic => ColoringSpec::DiametralGeodesic,
            RvcColoringKind::Wheel2Rvc => ColoringSpec::Wheel2Rvc { n: p },
            RvcColoringKind::Wheel2Srvc => ColoringSpec::Wheel2Srvc { n: p },
            RvcColoringKind::GluedRvc => ColoringSpec::GluedRvc { a: p, b: q },
            RvcColoringKind::GluedSrvc => ColoringSpec::GluedSrvc { a: p, b: q },
        };
        match paper_coloring(spec, &g.0) {
            Ok(c) => {
                store(out, RvcColoring(c));
                RvcStatus::Ok
            }
            Err(e) => fail(claim_status(&e), e.to_string()),
        }
    })
}
