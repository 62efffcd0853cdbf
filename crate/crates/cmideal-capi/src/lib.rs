//! C ABI over the cmideal library.
//!
//! Graphs and weight functions travel as opaque handles; every fallible call
//! returns a status code and leaves a message for [`cmideal_last_error`] on
//! failure. The matching declarations live in `include/cmideal.h`, which is
//! maintained by hand and must stay in sync with this file.
//!
//! Characteristic 0 selects the rationals; any prime up to 2^31 selects the
//! corresponding prime field.

use cmideal::cm::CmEngine;
use cmideal::homology::FieldSpec;
use cmideal::io::{parse_graph, parse_weights};
use cmideal::lattice::{is_unmixed, krull_dim};
use cmideal::monomial::weighted_edge_ideal;
use cmideal::{Graph, WeightFunction};
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

pub const CMIDEAL_OK: i32 = 0;
pub const CMIDEAL_ERR_NULL_ARGUMENT: i32 = 1;
pub const CMIDEAL_ERR_UTF8: i32 = 2;
pub const CMIDEAL_ERR_PARSE: i32 = 3;
pub const CMIDEAL_ERR_INVALID: i32 = 4;
pub const CMIDEAL_ERR_PANIC: i32 = 5;

pub struct CmidealGraph(Graph);
pub struct CmidealWeights(WeightFunction);

/// Flat verdict record mirroring the library's report.
#[repr(C)]
#[derive(Default)]
pub struct CmidealReport {
    pub is_cm: bool,
    pub is_scm: bool,
    pub unmixed: bool,
    pub dim: usize,
    pub field_sensitive: bool,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::new("").unwrap());
}

fn set_error(msg: &str) {
    let sanitized = msg.replace('\0', " ");
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(sanitized).unwrap_or_default();
    });
}

/// Message of the most recent failure on this thread. The pointer stays valid
/// until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn cmideal_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

#[no_mangle]
pub extern "C" fn cmideal_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

fn guard(f: impl FnOnce() -> i32 + std::panic::UnwindSafe) -> i32 {
    match catch_unwind(f) {
        Ok(code) => code,
        Err(_) => {
            set_error("internal panic");
            CMIDEAL_ERR_PANIC
        }
    }
}

unsafe fn utf8_of<'a>(text: *const c_char) -> Result<&'a str, i32> {
    if text.is_null() {
        set_error("null text argument");
        return Err(CMIDEAL_ERR_NULL_ARGUMENT);
    }
    CStr::from_ptr(text).to_str().map_err(|_| {
        set_error("text is not valid UTF-8");
        CMIDEAL_ERR_UTF8
    })
}

/// Parses a graph in the text format (`n <count>` header, `u v` lines).
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer. On
/// success `*out` owns a graph that must be released with
/// [`cmideal_graph_free`].
#[no_mangle]
pub unsafe extern "C" fn cmideal_graph_parse(
    text: *const c_char,
    out: *mut *mut CmidealGraph,
) -> i32 {
    guard(|| {
        if out.is_null() {
            set_error("null out pointer");
            return CMIDEAL_ERR_NULL_ARGUMENT;
        }
        let text = match utf8_of(text) {
            Ok(t) => t,
            Err(code) => return code,
        };
        match parse_graph(text) {
            Ok(g) => {
                *out = Box::into_raw(Box::new(CmidealGraph(g)));
                CMIDEAL_OK
            }
            Err(e) => {
                set_error(&e.to_string());
                CMIDEAL_ERR_PARSE
            }
        }
    })
}

/// Builds a graph from `edge_count` vertex pairs laid out `u0,v0,u1,v1,...`.
///
/// # Safety
/// `edges` must point to `2 * edge_count` readable values (or be null when
/// `edge_count` is zero); `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn cmideal_graph_build(
    n: usize,
    edges: *const usize,
    edge_count: usize,
    out: *mut *mut CmidealGraph,
) -> i32 {
    guard(|| {
        if out.is_null() || (edges.is_null() && edge_count > 0) {
            set_error("null argument");
            return CMIDEAL_ERR_NULL_ARGUMENT;
        }
        let mut pairs = Vec::with_capacity(edge_count);
        for k in 0..edge_count {
            pairs.push((*edges.add(2 * k), *edges.add(2 * k + 1)));
        }
        match Graph::new(n, &pairs) {
            Ok(g) => {
                *out = Box::into_raw(Box::new(CmidealGraph(g)));
                CMIDEAL_OK
            }
            Err(e) => {
                set_error(&e.to_string());
                CMIDEAL_ERR_INVALID
            }
        }
    })
}

/// # Safety
/// `g` must come from a graph constructor of this library and not already be
/// freed. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn cmideal_graph_free(g: *mut CmidealGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn cmideal_graph_vertex_count(g: *const CmidealGraph) -> usize {
    if g.is_null() {
        return 0;
    }
    (*g).0.n()
}

/// # Safety
/// `g` must be a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn cmideal_graph_edge_count(g: *const CmidealGraph) -> usize {
    if g.is_null() {
        return 0;
    }
    (*g).0.edge_count()
}

/// # Safety
/// `g` must be a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn cmideal_graph_is_woodroofe(g: *const CmidealGraph) -> bool {
    !g.is_null() && (*g).0.is_woodroofe()
}

/// # Safety
/// `g` must be a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn cmideal_graph_is_clique_union(g: *const CmidealGraph) -> bool {
    !g.is_null() && (*g).0.is_disjoint_union_of_cliques()
}

/// # Safety
/// `g` must be a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn cmideal_graph_is_very_well_covered(g: *const CmidealGraph) -> bool {
    !g.is_null() && (*g).0.is_very_well_covered()
}

/// Parses a weight file ("u v w" lines covering every edge exactly once).
///
/// # Safety
/// `g` must be a live graph handle, `text` NUL-terminated, `out` valid. On
/// success `*out` must be released with [`cmideal_weights_free`].
#[no_mangle]
pub unsafe extern "C" fn cmideal_weights_parse(
    g: *const CmidealGraph,
    text: *const c_char,
    out: *mut *mut CmidealWeights,
) -> i32 {
    guard(|| {
        if g.is_null() || out.is_null() {
            set_error("null argument");
            return CMIDEAL_ERR_NULL_ARGUMENT;
        }
        let text = match utf8_of(text) {
            Ok(t) => t,
            Err(code) => return code,
        };
        match parse_weights(text, &(*g).0) {
            Ok(w) => {
                *out = Box::into_raw(Box::new(CmidealWeights(w)));
                CMIDEAL_OK
            }
            Err(e) => {
                set_error(&e.to_string());
                CMIDEAL_ERR_PARSE
            }
        }
    })
}

/// Builds a weight function from one value per edge, in the graph's sorted
/// edge order.
///
/// # Safety
/// `g` must be a live graph handle; `weights` must point to `len` readable
/// values; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn cmideal_weights_build(
    g: *const CmidealGraph,
    weights: *const u32,
    len: usize,
    out: *mut *mut CmidealWeights,
) -> i32 {
    guard(|| {
        if g.is_null() || out.is_null() || (weights.is_null() && len > 0) {
            set_error("null argument");
            return CMIDEAL_ERR_NULL_ARGUMENT;
        }
        let values: Vec<u32> = (0..len).map(|k| *weights.add(k)).collect();
        match WeightFunction::new(&(*g).0, values) {
            Ok(w) => {
                *out = Box::into_raw(Box::new(CmidealWeights(w)));
                CMIDEAL_OK
            }
            Err(e) => {
                set_error(&e.to_string());
                CMIDEAL_ERR_INVALID
            }
        }
    })
}

/// All-ones weight function (the plain edge ideal).
///
/// # Safety
/// `g` must be a live graph handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn cmideal_weights_ones(
    g: *const CmidealGraph,
    out: *mut *mut CmidealWeights,
) -> i32 {
    guard(|| {
        if g.is_null() || out.is_null() {
            set_error("null argument");
            return CMIDEAL_ERR_NULL_ARGUMENT;
        }
        *out = Box::into_raw(Box::new(CmidealWeights(WeightFunction::all_ones(&(*g).0))));
        CMIDEAL_OK
    })
}

/// # Safety
/// `w` must come from a weights constructor and not already be freed. Null is
/// ignored.
#[no_mangle]
pub unsafe extern "C" fn cmideal_weights_free(w: *mut CmidealWeights) {
    if !w.is_null() {
        drop(Box::from_raw(w));
    }
}

fn field_of(characteristic: u32) -> Result<FieldSpec, i32> {
    if characteristic == 0 {
        Ok(FieldSpec::Rationals)
    } else {
        FieldSpec::prime(characteristic).map_err(|e| {
            set_error(&e.to_string());
            CMIDEAL_ERR_INVALID
        })
    }
}

/// Full verdict for the weighted edge ideal over the field of the given
/// characteristic (0 = rationals). With `cross_field`, the other field is
/// also consulted and `field_sensitive` reports a disagreement.
///
/// # Safety
/// `g` and `w` must be live handles built from the same graph; `report` must
/// be valid.
#[no_mangle]
pub unsafe extern "C" fn cmideal_check(
    g: *const CmidealGraph,
    w: *const CmidealWeights,
    characteristic: u32,
    cross_field: bool,
    report: *mut CmidealReport,
) -> i32 {
    guard(AssertUnwindSafe(|| {
        if g.is_null() || w.is_null() || report.is_null() {
            set_error("null argument");
            return CMIDEAL_ERR_NULL_ARGUMENT;
        }
        let graph = &(*g).0;
        let weights = &(*w).0;
        if weights.as_slice().len() != graph.edge_count() {
            set_error("weight function does not match the graph");
            return CMIDEAL_ERR_INVALID;
        }
        let field = match field_of(characteristic) {
            Ok(f) => f,
            Err(code) => return code,
        };
        let cross = cross_field.then_some(match field {
            FieldSpec::Rationals => FieldSpec::Prime(2),
            FieldSpec::Prime(_) => FieldSpec::Rationals,
        });
        let ideal = weighted_edge_ideal(graph, weights);
        let engine = CmEngine::new();
        match engine.report(&ideal, field, cross) {
            Ok(r) => {
                *report = CmidealReport {
                    is_cm: r.is_cm,
                    is_scm: r.is_scm,
                    unmixed: r.unmixed,
                    dim: r.dim,
                    field_sensitive: r.field_sensitive,
                };
                CMIDEAL_OK
            }
            Err(e) => {
                set_error(&e.to_string());
                CMIDEAL_ERR_INVALID
            }
        }
    }))
}

/// Witness for a negative verdict: the failing monomial, its radical, and
/// the reason, as a NUL-terminated string owned by the caller (release with
/// [`cmideal_string_free`]). Writes null when the verdict is positive.
/// `sequential` selects the sequential property instead of plain CM.
///
/// # Safety
/// `g` and `w` must be live handles built from the same graph; `out` must be
/// valid.
#[no_mangle]
pub unsafe extern "C" fn cmideal_witness(
    g: *const CmidealGraph,
    w: *const CmidealWeights,
    characteristic: u32,
    sequential: bool,
    out: *mut *mut c_char,
) -> i32 {
    guard(AssertUnwindSafe(|| {
        if g.is_null() || w.is_null() || out.is_null() {
            set_error("null argument");
            return CMIDEAL_ERR_NULL_ARGUMENT;
        }
        let graph = &(*g).0;
        let weights = &(*w).0;
        if weights.as_slice().len() != graph.edge_count() {
            set_error("weight function does not match the graph");
            return CMIDEAL_ERR_INVALID;
        }
        let field = match field_of(characteristic) {
            Ok(f) => f,
            Err(code) => return code,
        };
        let ideal = weighted_edge_ideal(graph, weights);
        let engine = CmEngine::new();
        let verdict = if sequential {
            engine.is_scm_ideal(&ideal, field)
        } else {
            engine.is_cm_ideal(&ideal, field)
        };
        match verdict {
            Ok((_, witness)) => {
                *out = match witness {
                    None => ptr::null_mut(),
                    Some(wit) => CString::new(wit.to_string().replace('\0', " "))
                        .unwrap_or_default()
                        .into_raw(),
                };
                CMIDEAL_OK
            }
            Err(e) => {
                set_error(&e.to_string());
                CMIDEAL_ERR_INVALID
            }
        }
    }))
}

/// Unmixedness and Krull dimension without the homological verdicts.
///
/// # Safety
/// `g` and `w` must be live handles built from the same graph; the out
/// pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn cmideal_unmixed_dim(
    g: *const CmidealGraph,
    w: *const CmidealWeights,
    unmixed: *mut bool,
    dim: *mut usize,
) -> i32 {
    guard(AssertUnwindSafe(|| {
        if g.is_null() || w.is_null() || unmixed.is_null() || dim.is_null() {
            set_error("null argument");
            return CMIDEAL_ERR_NULL_ARGUMENT;
        }
        let graph = &(*g).0;
        let weights = &(*w).0;
        if weights.as_slice().len() != graph.edge_count() {
            set_error("weight function does not match the graph");
            return CMIDEAL_ERR_INVALID;
        }
        let ideal = weighted_edge_ideal(graph, weights);
        *unmixed = is_unmixed(&ideal);
        match krull_dim(&ideal) {
            Ok(d) => {
                *dim = d;
                CMIDEAL_OK
            }
            Err(e) => {
                set_error(&e.to_string());
                CMIDEAL_ERR_INVALID
            }
        }
    }))
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must have been returned by [`cmideal_witness`] and not yet freed. Null
/// is ignored.
#[no_mangle]
pub unsafe extern "C" fn cmideal_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
