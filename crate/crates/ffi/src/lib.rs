//! C ABI for `fivesplit`.
//!
//! Graphs live behind the opaque `FsGraph` handle. Edge sets cross the
//! boundary as 64-bit masks (bit `i` set means edge `i` is in the set).
//! Every fallible function returns an `FsStatus`; on failure the message is
//! available from `fs_last_error` until the next call on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{self, AssertUnwindSafe};
use std::ptr;

use fivesplit::splitting::{self, EnhancedGraph};
use fivesplit::{io, kirchhoff, minors, width, EdgeSet, Error, MultiGraph};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FsStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Domain = 3,
    Parse = 4,
    Unsupported = 5,
    Panic = 6,
}

/// A multigraph with optional contract-proof and delete-proof edges.
pub struct FsGraph {
    graph: MultiGraph,
    contract_proof: EdgeSet,
    delete_proof: EdgeSet,
}

impl FsGraph {
    fn enhanced(&self) -> Result<EnhancedGraph, Error> {
        EnhancedGraph::new(self.graph, self.contract_proof, self.delete_proof)
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> FsStatus {
    match e {
        Error::Parse { .. } => FsStatus::Parse,
        Error::Unsupported(_) => FsStatus::Unsupported,
        Error::Domain(_) | Error::Io(_) => FsStatus::Domain,
        Error::UnknownEdge(_) | Error::UnknownVertex(_) | Error::IdOutOfRange(_) | Error::DuplicateEdge(_) => FsStatus::InvalidArgument,
    }
}

/// Runs `f`, recording any error or panic as the thread's last error.
fn guard(f: impl FnOnce() -> Result<(), FsStatusError>) -> FsStatus {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
    match panic::catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => FsStatus::Ok,
        Ok(Err(FsStatusError(status, msg))) => {
            set_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".to_string());
            set_error(format!("internal panic: {msg}"));
            FsStatus::Panic
        }
    }
}

struct FsStatusError(FsStatus, String);

impl From<Error> for FsStatusError {
    fn from(e: Error) -> Self {
        FsStatusError(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> FsStatusError {
    FsStatusError(FsStatus::NullPointer, format!("{what} is null"))
}

unsafe fn graph_ref<'a>(g: *const FsGraph) -> Result<&'a FsGraph, FsStatusError> {
    g.as_ref().ok_or_else(|| null("graph"))
}

unsafe fn graph_mut<'a>(g: *mut FsGraph) -> Result<&'a mut FsGraph, FsStatusError> {
    g.as_mut().ok_or_else(|| null("graph"))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), FsStatusError> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

/// Message of the last failed call on this thread, or null. The pointer is
/// valid until the next `fs_` call on the same thread.
#[no_mangle]
pub extern "C" fn fs_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// A new empty graph. Free with `fs_graph_free`.
#[no_mangle]
pub extern "C" fn fs_graph_new() -> *mut FsGraph {
    Box::into_raw(Box::new(FsGraph { graph: MultiGraph::new(), contract_proof: EdgeSet::EMPTY, delete_proof: EdgeSet::EMPTY }))
}

/// # Safety
/// `g` must be null or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn fs_graph_free(g: *mut FsGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn fs_graph_add_vertex(g: *mut FsGraph, v: u32) -> FsStatus {
    guard(|| Ok(graph_mut(g)?.graph.add_vertex(v as usize)?))
}

/// Adds edge `id` between `u` and `v`; missing endpoints are created.
///
/// # Safety
/// `g` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn fs_graph_add_edge(g: *mut FsGraph, id: u32, u: u32, v: u32) -> FsStatus {
    guard(|| {
        let h = graph_mut(g)?;
        for w in [u as usize, v as usize] {
            if w < 64 && !h.graph.vertices().contains(w) {
                h.graph.add_vertex(w)?;
            }
        }
        Ok(h.graph.add_edge(id as usize, u as usize, v as usize)?)
    })
}

/// Replaces the protections. Both masks must name existing edges.
///
/// # Safety
/// `g` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn fs_graph_set_protection(g: *mut FsGraph, contract_proof: u64, delete_proof: u64) -> FsStatus {
    guard(|| {
        let h = graph_mut(g)?;
        let (c, d) = (EdgeSet::from_bits(contract_proof), EdgeSet::from_bits(delete_proof));
        h.graph.check_edges(c | d)?;
        h.contract_proof = c;
        h.delete_proof = d;
        Ok(())
    })
}

/// Parses the native text format or graph6 into a new handle.
///
/// # Safety
/// `text` must be a nul-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn fs_graph_parse(text: *const c_char, out: *mut *mut FsGraph) -> FsStatus {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        let s = CStr::from_ptr(text).to_str().map_err(|_| FsStatusError(FsStatus::Parse, "text is not UTF-8".into()))?;
        let file = io::parse_graph(s)?;
        let handle = Box::new(FsGraph { graph: file.graph, contract_proof: file.contract_proof, delete_proof: file.delete_proof });
        write_out(out, Box::into_raw(handle))
    })
}

/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn fs_graph_num_edges(g: *const FsGraph, out: *mut usize) -> FsStatus {
    guard(|| write_out(out, graph_ref(g)?.graph.num_edges()))
}

/// The Kirchhoff polynomial as text. Free the string with `fs_string_free`.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn fs_kirchhoff(g: *const FsGraph, out: *mut *mut c_char) -> FsStatus {
    guard(|| {
        let p = kirchhoff::kirchhoff_poly(&graph_ref(g)?.graph);
        let s = CString::new(p.to_string()).expect("polynomial text has no nul");
        write_out(out, s.into_raw())
    })
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn fs_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Whether the 5-configuration `config` splits, honouring protections.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn fs_config_splits(g: *const FsGraph, config: u64, out: *mut bool) -> FsStatus {
    guard(|| {
        let verdict = splitting::enhanced_config_splits(&graph_ref(g)?.enhanced()?, EdgeSet::from_bits(config))?;
        write_out(out, verdict.splits)
    })
}

/// Whether every 5-configuration splits. When one does not, its mask is
/// written to `failing` (if non-null); otherwise `failing` receives 0.
///
/// # Safety
/// `g` must be a live handle, `out` writable, `failing` null or writable.
#[no_mangle]
pub unsafe extern "C" fn fs_graph_splits(g: *const FsGraph, out: *mut bool, failing: *mut u64) -> FsStatus {
    guard(|| {
        let verdict = splitting::enhanced_splits(&graph_ref(g)?.enhanced()?);
        write_out(out, verdict.splits)?;
        if !failing.is_null() {
            failing.write(verdict.failing.map_or(0, EdgeSet::bits));
        }
        Ok(())
    })
}

/// Exact width of a connected graph.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn fs_width(g: *const FsGraph, out: *mut usize) -> FsStatus {
    guard(|| write_out(out, width::graph_width(&graph_ref(g)?.graph)?.0))
}

/// Whether no member of F0 is a minor of the graph.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn fs_f0_free(g: *const FsGraph, out: *mut bool) -> FsStatus {
    guard(|| write_out(out, minors::f0_free(&graph_ref(g)?.graph)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> *mut FsGraph {
        let g = fs_graph_new();
        let mut id = 0;
        for u in 0..4 {
            for v in u + 1..4 {
                assert_eq!(unsafe { fs_graph_add_edge(g, id, u, v) }, FsStatus::Ok);
                id += 1;
            }
        }
        g
    }

    #[test]
    fn k4_round_trip() {
        let g = k4();
        let mut w = 0;
        assert_eq!(unsafe { fs_width(g, &mut w) }, FsStatus::Ok);
        assert_eq!(w, 3);
        let mut splits = false;
        let mut failing = 7;
        assert_eq!(unsafe { fs_graph_splits(g, &mut splits, &mut failing) }, FsStatus::Ok);
        assert!(splits);
        assert_eq!(failing, 0);
        assert_eq!(unsafe { fs_graph_set_protection(g, 0b111110, 0b111110) }, FsStatus::Ok);
        assert_eq!(unsafe { fs_config_splits(g, 0b111110, &mut splits) }, FsStatus::Ok);
        assert!(!splits);
        unsafe { fs_graph_free(g) };
    }

    #[test]
    fn errors_are_reported() {
        let g = fs_graph_new();
        assert_eq!(unsafe { fs_graph_add_edge(g, 0, 0, 1) }, FsStatus::Ok);
        assert_eq!(unsafe { fs_graph_add_edge(g, 0, 1, 2) }, FsStatus::InvalidArgument);
        let msg = unsafe { CStr::from_ptr(fs_last_error()) }.to_str().unwrap();
        assert!(msg.contains("duplicate"), "{msg}");
        assert_eq!(unsafe { fs_graph_num_edges(g, ptr::null_mut()) }, FsStatus::NullPointer);
        assert_eq!(unsafe { fs_graph_num_edges(ptr::null(), ptr::null_mut()) }, FsStatus::NullPointer);
        let mut splits = false;
        assert_eq!(unsafe { fs_config_splits(g, 1, &mut splits) }, FsStatus::Domain);
        unsafe { fs_graph_free(g) };
    }

    #[test]
    fn parse_and_kirchhoff() {
        let text = CString::new("3 3\n0 0 1\n1 1 2\n2 2 0\n").unwrap();
        let mut g = ptr::null_mut();
        assert_eq!(unsafe { fs_graph_parse(text.as_ptr(), &mut g) }, FsStatus::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(unsafe { fs_kirchhoff(g, &mut s) }, FsStatus::Ok);
        assert_eq!(unsafe { CStr::from_ptr(s) }.to_str().unwrap(), "x0 + x1 + x2");
        unsafe { fs_string_free(s) };
        let mut free = false;
        assert_eq!(unsafe { fs_f0_free(g, &mut free) }, FsStatus::Ok);
        assert!(free);
        unsafe { fs_graph_free(g) };
        let bad = CString::new("3 1\n0 0 1 7\n").unwrap();
        assert_eq!(unsafe { fs_graph_parse(bad.as_ptr(), &mut g) }, FsStatus::Parse);
    }
}
