//! C ABI over `zeroforce`.
//!
//! Hypergraphs and clutters cross the boundary as opaque handles owned by
//! the caller and released with the matching `_free` function. Vertex sets
//! are `uint64_t` masks with vertex `v` at bit `v - 1`. Every fallible call
//! returns a [`ZfStatus`]; on anything but `ZF_STATUS_OK` the out-parameters
//! are untouched and [`zf_last_error_message`] describes the failure.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use zeroforce::constructions::Construction;
use zeroforce::families::{minimal_forcing_family_with, minimal_immune_family_with};
use zeroforce::{Clutter, Error, Hypergraph, Rule, SearchOptions, VertexSet};

/// Opaque hypergraph handle.
pub struct ZfHypergraph(Hypergraph);

/// Opaque clutter handle.
pub struct ZfClutter(Clutter);

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZfRule {
    R0 = 0,
    R1 = 1,
    R2 = 2,
}

/// Rules arrive as plain integers so an out-of-range value from C is an
/// error rather than an invalid enum.
fn rule_from(raw: u32) -> Result<Rule, Fail> {
    match raw {
        r if r == ZfRule::R0 as u32 => Ok(Rule::R0),
        r if r == ZfRule::R1 as u32 => Ok(Rule::R1),
        r if r == ZfRule::R2 as u32 => Ok(Rule::R2),
        other => Err(Fail(
            ZfStatus::InvalidArgument,
            format!("unknown rule code {other}"),
        )),
    }
}

/// Result codes. The library error variants map one to one; the last three
/// are boundary failures.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZfStatus {
    Ok = 0,
    NotAClutter = 1,
    EmptyEdge = 2,
    VertexOutOfRange = 3,
    GroundSetTooLarge = 4,
    RuleNotApplicable = 5,
    EmptySet = 6,
    NotAnEdge = 7,
    EmptyMember = 8,
    OutOfRange = 9,
    SearchBoundExceeded = 10,
    NotRealizable = 11,
    Parse = 12,
    NullPointer = 13,
    InvalidArgument = 14,
    Panic = 15,
}

impl From<&Error> for ZfStatus {
    fn from(e: &Error) -> ZfStatus {
        match e {
            Error::NotAClutter { .. } => ZfStatus::NotAClutter,
            Error::EmptyEdge => ZfStatus::EmptyEdge,
            Error::VertexOutOfRange { .. } => ZfStatus::VertexOutOfRange,
            Error::GroundSetTooLarge { .. } => ZfStatus::GroundSetTooLarge,
            Error::RuleNotApplicable { .. } => ZfStatus::RuleNotApplicable,
            Error::EmptySet => ZfStatus::EmptySet,
            Error::NotAnEdge(_) => ZfStatus::NotAnEdge,
            Error::EmptyMember => ZfStatus::EmptyMember,
            Error::OutOfRange { .. } => ZfStatus::OutOfRange,
            Error::SearchBoundExceeded { .. } => ZfStatus::SearchBoundExceeded,
            Error::NotRealizable { .. } => ZfStatus::NotRealizable,
            Error::Parse { .. } => ZfStatus::Parse,
        }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior nul removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = c);
}

struct Fail(ZfStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Fail {
        Fail(ZfStatus::from(&e), e.to_string())
    }
}

fn null() -> Fail {
    Fail(ZfStatus::NullPointer, "null pointer argument".into())
}

/// Runs `body`, records any failure, and turns panics into `Panic`.
fn guard(body: impl FnOnce() -> Result<(), Fail>) -> ZfStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            set_last_error("");
            ZfStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_last_error(&msg);
            status
        }
        Err(_) => {
            set_last_error("internal panic");
            ZfStatus::Panic
        }
    }
}

unsafe fn deref<'a, T>(p: *const T) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(null)
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null());
    }
    out.write(value);
    Ok(())
}

unsafe fn sets<'a>(ptr: *const u64, count: usize) -> Result<&'a [u64], Fail> {
    if count == 0 {
        return Ok(&[]);
    }
    if ptr.is_null() {
        return Err(null());
    }
    Ok(std::slice::from_raw_parts(ptr, count))
}

unsafe fn text<'a>(s: *const c_char) -> Result<&'a str, Fail> {
    if s.is_null() {
        return Err(null());
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Fail(ZfStatus::InvalidArgument, "string is not UTF-8".into()))
}

fn in_ground(n: usize, mask: u64) -> Result<VertexSet, Fail> {
    let s = VertexSet::from_bits(mask);
    if !s.is_subset(VertexSet::full(n)) {
        let vertex = (s - VertexSet::full(n)).max_vertex();
        return Err(Error::VertexOutOfRange { vertex, n }.into());
    }
    Ok(s)
}

fn ground_size(n: u32) -> Result<usize, Fail> {
    let n = n as usize;
    if n > zeroforce::vertex_set::MAX_VERTICES {
        return Err(Error::GroundSetTooLarge {
            n,
            max: zeroforce::vertex_set::MAX_VERTICES,
        }
        .into());
    }
    Ok(n)
}

fn boxed_hypergraph(out: *mut *mut ZfHypergraph, h: Hypergraph) -> Result<(), Fail> {
    unsafe { write(out, Box::into_raw(Box::new(ZfHypergraph(h)))) }
}

fn boxed_clutter(out: *mut *mut ZfClutter, c: Clutter) -> Result<(), Fail> {
    unsafe { write(out, Box::into_raw(Box::new(ZfClutter(c)))) }
}

const STATUSES: [ZfStatus; 16] = [
    ZfStatus::Ok,
    ZfStatus::NotAClutter,
    ZfStatus::EmptyEdge,
    ZfStatus::VertexOutOfRange,
    ZfStatus::GroundSetTooLarge,
    ZfStatus::RuleNotApplicable,
    ZfStatus::EmptySet,
    ZfStatus::NotAnEdge,
    ZfStatus::EmptyMember,
    ZfStatus::OutOfRange,
    ZfStatus::SearchBoundExceeded,
    ZfStatus::NotRealizable,
    ZfStatus::Parse,
    ZfStatus::NullPointer,
    ZfStatus::InvalidArgument,
    ZfStatus::Panic,
];

/// Static name of a status code, e.g. `"NotAClutter"`; `"Unknown"` for
/// codes outside the enum.
#[no_mangle]
pub extern "C" fn zf_status_name(status: u32) -> *const c_char {
    let Some(status) = STATUSES.iter().find(|s| **s as u32 == status) else {
        return c"Unknown".as_ptr();
    };
    let name: &'static CStr = match status {
        ZfStatus::Ok => c"Ok",
        ZfStatus::NotAClutter => c"NotAClutter",
        ZfStatus::EmptyEdge => c"EmptyEdge",
        ZfStatus::VertexOutOfRange => c"VertexOutOfRange",
        ZfStatus::GroundSetTooLarge => c"GroundSetTooLarge",
        ZfStatus::RuleNotApplicable => c"RuleNotApplicable",
        ZfStatus::EmptySet => c"EmptySet",
        ZfStatus::NotAnEdge => c"NotAnEdge",
        ZfStatus::EmptyMember => c"EmptyMember",
        ZfStatus::OutOfRange => c"OutOfRange",
        ZfStatus::SearchBoundExceeded => c"SearchBoundExceeded",
        ZfStatus::NotRealizable => c"NotRealizable",
        ZfStatus::Parse => c"Parse",
        ZfStatus::NullPointer => c"NullPointer",
        ZfStatus::InvalidArgument => c"InvalidArgument",
        ZfStatus::Panic => c"Panic",
    };
    name.as_ptr()
}

/// Message for the most recent failing call on this thread; empty after a
/// success. Valid until the next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn zf_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Builds a hypergraph on `{1..n}` from `count` edge masks.
///
/// # Safety
/// `edges` must point to `count` readable values (may be null when `count`
/// is 0); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn zf_hypergraph_new(
    n: u32,
    edges: *const u64,
    count: usize,
    out: *mut *mut ZfHypergraph,
) -> ZfStatus {
    guard(|| {
        let n = ground_size(n)?;
        let raw = sets(edges, count)?
            .iter()
            .map(|&m| in_ground(n, m))
            .collect::<Result<Vec<_>, _>>()?;
        boxed_hypergraph(out, Hypergraph::new(n, raw)?)
    })
}

/// Parses the text or JSON edge-list format.
///
/// # Safety
/// `input` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn zf_hypergraph_parse(
    input: *const c_char,
    out: *mut *mut ZfHypergraph,
) -> ZfStatus {
    guard(|| {
        let h = zeroforce::format::parse_hypergraph(text(input)?)?;
        boxed_hypergraph(out, h)
    })
}

/// Builds a named construction (`"complete"`, `"r2-forcing"`, ...).
///
/// # Safety
/// `name` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn zf_construct(
    name: *const c_char,
    n: u32,
    k: u32,
    out: *mut *mut ZfHypergraph,
) -> ZfStatus {
    guard(|| {
        let c: Construction = text(name)?
            .parse()
            .map_err(|msg| Fail(ZfStatus::InvalidArgument, msg))?;
        boxed_hypergraph(out, c.build(n as usize, k as usize)?)
    })
}

/// # Safety
/// `h` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn zf_hypergraph_free(h: *mut ZfHypergraph) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// # Safety
/// `h` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn zf_hypergraph_vertex_count(h: *const ZfHypergraph) -> u32 {
    h.as_ref().map_or(0, |h| h.0.n() as u32)
}

/// # Safety
/// `h` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn zf_hypergraph_edge_count(h: *const ZfHypergraph) -> usize {
    h.as_ref().map_or(0, |h| h.0.edge_count())
}

/// Edge `index` in canonical order.
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn zf_hypergraph_edge(
    h: *const ZfHypergraph,
    index: usize,
    out: *mut u64,
) -> ZfStatus {
    guard(|| {
        let h = deref(h)?;
        let e = h.0.edges().get(index).ok_or_else(|| {
            Fail(
                ZfStatus::InvalidArgument,
                format!("edge index {index} out of range"),
            )
        })?;
        write(out, e.bits())
    })
}

/// Closure of `black` under `rule`.
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn zf_closure(
    h: *const ZfHypergraph,
    rule: u32,
    black: u64,
    out: *mut u64,
) -> ZfStatus {
    guard(|| {
        let h = &deref(h)?.0;
        let b = in_ground(h.n(), black)?;
        let (closed, _) = zeroforce::closure(h, rule_from(rule)?, b)?;
        write(out, closed.bits())
    })
}

/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn zf_is_forcing(
    h: *const ZfHypergraph,
    rule: u32,
    set: u64,
    out: *mut bool,
) -> ZfStatus {
    guard(|| {
        let h = &deref(h)?.0;
        let s = in_ground(h.n(), set)?;
        write(out, zeroforce::is_forcing(h, rule_from(rule)?, s)?)
    })
}

/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn zf_is_immune(
    h: *const ZfHypergraph,
    rule: u32,
    set: u64,
    out: *mut bool,
) -> ZfStatus {
    guard(|| {
        let h = &deref(h)?.0;
        let s = in_ground(h.n(), set)?;
        write(out, zeroforce::is_immune(h, rule_from(rule)?, s)?)
    })
}

/// Immunity decided from neighbourhoods alone.
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn zf_is_immune_nbhd(
    h: *const ZfHypergraph,
    rule: u32,
    set: u64,
    out: *mut bool,
) -> ZfStatus {
    guard(|| {
        let h = &deref(h)?.0;
        let s = in_ground(h.n(), set)?;
        write(out, zeroforce::is_immune_nbhd(h, rule_from(rule)?, s)?)
    })
}

/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn zf_forcing_number(
    h: *const ZfHypergraph,
    rule: u32,
    out: *mut u32,
) -> ZfStatus {
    guard(|| {
        let h = &deref(h)?.0;
        write(out, zeroforce::forcing_number(h, rule_from(rule)?)? as u32)
    })
}

fn search(jobs: u32) -> SearchOptions {
    SearchOptions {
        jobs: jobs.max(1) as usize,
        ..SearchOptions::default()
    }
}

/// Minimal forcing sets. `jobs` of 0 or 1 scans sequentially.
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn zf_minimal_forcing_family(
    h: *const ZfHypergraph,
    rule: u32,
    jobs: u32,
    out: *mut *mut ZfClutter,
) -> ZfStatus {
    guard(|| {
        let h = &deref(h)?.0;
        boxed_clutter(
            out,
            minimal_forcing_family_with(h, rule_from(rule)?, &search(jobs))?,
        )
    })
}

/// Minimal immune sets.
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn zf_minimal_immune_family(
    h: *const ZfHypergraph,
    rule: u32,
    jobs: u32,
    out: *mut *mut ZfClutter,
) -> ZfStatus {
    guard(|| {
        let h = &deref(h)?.0;
        boxed_clutter(
            out,
            minimal_immune_family_with(h, rule_from(rule)?, &search(jobs))?,
        )
    })
}

/// Builds a clutter on `{1..n}` from `count` member masks.
///
/// # Safety
/// `members` must point to `count` readable values (may be null when
/// `count` is 0); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn zf_clutter_new(
    n: u32,
    members: *const u64,
    count: usize,
    out: *mut *mut ZfClutter,
) -> ZfStatus {
    guard(|| {
        let n = ground_size(n)?;
        let raw = sets(members, count)?
            .iter()
            .map(|&m| in_ground(n, m))
            .collect::<Result<Vec<_>, _>>()?;
        boxed_clutter(out, Clutter::new(n, raw)?)
    })
}

/// # Safety
/// `c` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn zf_clutter_free(c: *mut ZfClutter) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// # Safety
/// `c` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn zf_clutter_vertex_count(c: *const ZfClutter) -> u32 {
    c.as_ref().map_or(0, |c| c.0.n() as u32)
}

/// # Safety
/// `c` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn zf_clutter_len(c: *const ZfClutter) -> usize {
    c.as_ref().map_or(0, |c| c.0.len())
}

/// Member `index` in canonical order.
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn zf_clutter_member(
    c: *const ZfClutter,
    index: usize,
    out: *mut u64,
) -> ZfStatus {
    guard(|| {
        let c = deref(c)?;
        let m = c.0.members().get(index).ok_or_else(|| {
            Fail(
                ZfStatus::InvalidArgument,
                format!("member index {index} out of range"),
            )
        })?;
        write(out, m.bits())
    })
}

/// Minimal transversal (blocker) of `c`.
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn zf_clutter_transversal(
    c: *const ZfClutter,
    out: *mut *mut ZfClutter,
) -> ZfStatus {
    guard(|| {
        let c = deref(c)?;
        boxed_clutter(out, c.0.transversal()?)
    })
}

/// Whether two clutters hold the same members on the same ground set.
///
/// # Safety
/// `a` and `b` must be live handles.
#[no_mangle]
pub unsafe extern "C" fn zf_clutter_equal(a: *const ZfClutter, b: *const ZfClutter) -> bool {
    match (a.as_ref(), b.as_ref()) {
        (Some(a), Some(b)) => a.0 == b.0,
        _ => false,
    }
}
