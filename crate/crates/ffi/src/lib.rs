//! C interface. Objects are opaque heap handles released with their
//! `_free` function; strings returned to the caller are released with
//! [`ctsynth_string_free`]. Every call returns a [`CtsynthStatus`]; on failure
//! [`ctsynth_last_error`] describes it until the next call on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;

use ctsynth::synthesis::{prepare_state, synthesize, SynthesisOptions};
use ctsynth::verifier::verify_lemma;
use ctsynth::{json, Circuit, Error, LookupTable, RingUnitary};

/// Descend with `T^{-k}` instead of `T^{k}`.
pub const CTSYNTH_NEGATIVE_POWERS: u32 = 1;
/// Write `T³` as `P·T` instead of `Z·T†`.
pub const CTSYNTH_PREFER_P: u32 = 2;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CtsynthStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Unitarity = 4,
    Divisibility = 5,
    TableFormat = 6,
    Io = 7,
    TableMiss = 8,
    Certificate = 9,
    Internal = 10,
    Panic = 11,
}

pub struct CtsynthTable(LookupTable);
pub struct CtsynthUnitary(RingUnitary);
pub struct CtsynthCircuit(Circuit);

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CtsynthCounts {
    pub n_g: usize,
    pub n_t: usize,
    pub n_h: usize,
    pub n_p: usize,
    pub n_pl: usize,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> CtsynthStatus {
    match e {
        Error::Parse(_) => CtsynthStatus::Parse,
        Error::Unitarity(_) => CtsynthStatus::Unitarity,
        Error::Divisibility(_) => CtsynthStatus::Divisibility,
        Error::TableFormat(_) => CtsynthStatus::TableFormat,
        Error::Io(_) => CtsynthStatus::Io,
        Error::TableMiss(_) => CtsynthStatus::TableMiss,
        Error::Certificate(_) => CtsynthStatus::Certificate,
        Error::InternalInvariant(_) => CtsynthStatus::Internal,
    }
}

/// Runs `f`, turning errors and panics into a status and the last-error text.
fn guard(f: impl FnOnce() -> Result<(), CtsynthStatus>) -> CtsynthStatus {
    set_error("");
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => CtsynthStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => {
            set_error("panic inside ctsynth");
            CtsynthStatus::Panic
        }
    }
}

fn fail(e: Error) -> CtsynthStatus {
    set_error(&e.to_string());
    status_of(&e)
}

/// # Safety
/// `p` is null or a NUL-terminated string valid for the call.
unsafe fn str_arg<'a>(p: *const c_char) -> Result<&'a str, CtsynthStatus> {
    if p.is_null() {
        set_error("null string argument");
        return Err(CtsynthStatus::NullArgument);
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        set_error("string argument is not UTF-8");
        CtsynthStatus::InvalidUtf8
    })
}

/// # Safety
/// `p` is null or points to a live `T`.
unsafe fn ref_arg<'a, T>(p: *const T) -> Result<&'a T, CtsynthStatus> {
    p.as_ref().ok_or_else(|| {
        set_error("null handle");
        CtsynthStatus::NullArgument
    })
}

/// # Safety
/// `out` is null or writable.
unsafe fn put<T>(out: *mut T, value: T) -> Result<(), CtsynthStatus> {
    if out.is_null() {
        set_error("null output pointer");
        return Err(CtsynthStatus::NullArgument);
    }
    out.write(value);
    Ok(())
}

fn new_string(s: String) -> *mut c_char {
    CString::new(s).map_or(std::ptr::null_mut(), CString::into_raw)
}

fn options(flags: u32) -> SynthesisOptions {
    SynthesisOptions {
        negative_powers: flags & CTSYNTH_NEGATIVE_POWERS != 0,
        prefer_p: flags & CTSYNTH_PREFER_P != 0,
    }
}

/// Message for the last failed call on this thread; empty after a success.
/// The pointer stays valid until the next call on this thread.
#[no_mangle]
pub extern "C" fn ctsynth_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// # Safety
/// `s` is null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ctsynth_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds the lookup table in memory.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ctsynth_table_build(out: *mut *mut CtsynthTable) -> CtsynthStatus {
    guard(|| {
        let t = Box::new(CtsynthTable(LookupTable::build()));
        put(out, Box::into_raw(t))
    })
}

/// Loads the table cached at `path`, building and writing it if missing.
///
/// # Safety
/// `path` is a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ctsynth_table_load_or_build(
    path: *const c_char,
    out: *mut *mut CtsynthTable,
) -> CtsynthStatus {
    guard(|| {
        let path = str_arg(path)?;
        let t = LookupTable::load_or_build(Path::new(path)).map_err(fail)?;
        put(out, Box::into_raw(Box::new(CtsynthTable(t))))
    })
}

/// # Safety
/// `t` is null or a table handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ctsynth_table_free(t: *mut CtsynthTable) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// Parses and validates a matrix in the JSON form
/// `{"z00": {"c": [a, b, c, d], "k": k}, ...}`.
///
/// # Safety
/// `text` is a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ctsynth_unitary_from_json(
    text: *const c_char,
    out: *mut *mut CtsynthUnitary,
) -> CtsynthStatus {
    guard(|| {
        let u = json::unitary_from_str(str_arg(text)?).map_err(fail)?;
        put(out, Box::into_raw(Box::new(CtsynthUnitary(u))))
    })
}

/// Evaluates circuit text such as `"HTHT"` (gates in application order).
///
/// # Safety
/// `word` is a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ctsynth_unitary_from_word(
    word: *const c_char,
    out: *mut *mut CtsynthUnitary,
) -> CtsynthStatus {
    guard(|| {
        let c = Circuit::from_text(str_arg(word)?).map_err(fail)?;
        put(out, Box::into_raw(Box::new(CtsynthUnitary(c.evaluate()))))
    })
}

/// # Safety
/// `u` is a live unitary handle; `out` must be writable. The string is
/// released with [`ctsynth_string_free`].
#[no_mangle]
pub unsafe extern "C" fn ctsynth_unitary_to_json(
    u: *const CtsynthUnitary,
    out: *mut *mut c_char,
) -> CtsynthStatus {
    guard(|| {
        let u = ref_arg(u)?;
        put(out, new_string(json::unitary_to_string(&u.0)))
    })
}

/// `sde(|z|²)` of the matrix entries, 0 for monomial matrices.
///
/// # Safety
/// `u` is a live unitary handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ctsynth_unitary_sde(
    u: *const CtsynthUnitary,
    out: *mut u64,
) -> CtsynthStatus {
    guard(|| put(out, ref_arg(u)?.0.sde_measure()))
}

/// # Safety
/// `u` is null or a unitary handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ctsynth_unitary_free(u: *mut CtsynthUnitary) {
    if !u.is_null() {
        drop(Box::from_raw(u));
    }
}

/// Synthesizes `u`. On success `*out` evaluates to `ω^{*phase} · u`.
///
/// # Safety
/// `table` and `u` are live handles; `out` and `phase` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ctsynth_synthesize(
    table: *const CtsynthTable,
    u: *const CtsynthUnitary,
    flags: u32,
    out: *mut *mut CtsynthCircuit,
    phase: *mut u8,
) -> CtsynthStatus {
    guard(|| {
        let (table, u) = (ref_arg(table)?, ref_arg(u)?);
        if out.is_null() || phase.is_null() {
            set_error("null output pointer");
            return Err(CtsynthStatus::NullArgument);
        }
        let syn = synthesize(&u.0, &table.0, options(flags)).map_err(fail)?;
        put(phase, syn.phase)?;
        put(out, Box::into_raw(Box::new(CtsynthCircuit(syn.circuit))))
    })
}

/// Finds a circuit taking `|0⟩` exactly to the state given as
/// `{"z": scalar, "w": scalar}`.
///
/// # Safety
/// `table` is a live handle, `state` a NUL-terminated string, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ctsynth_prepare(
    table: *const CtsynthTable,
    state: *const c_char,
    flags: u32,
    out: *mut *mut CtsynthCircuit,
) -> CtsynthStatus {
    guard(|| {
        let table = ref_arg(table)?;
        let v: serde_json::Value =
            serde_json::from_str(str_arg(state)?).map_err(|e| fail(Error::Parse(e.to_string())))?;
        let s = json::state_from_value(&v).map_err(fail)?;
        let c = prepare_state(&s, &table.0, options(flags)).map_err(fail)?;
        put(out, Box::into_raw(Box::new(CtsynthCircuit(c))))
    })
}

/// Circuit text in application order.
///
/// # Safety
/// `c` is a live circuit handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ctsynth_circuit_text(
    c: *const CtsynthCircuit,
    out: *mut *mut c_char,
) -> CtsynthStatus {
    guard(|| {
        let c = ref_arg(c)?;
        put(out, new_string(c.0.to_text()))
    })
}

/// # Safety
/// `c` is a live circuit handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ctsynth_circuit_counts(
    c: *const CtsynthCircuit,
    out: *mut CtsynthCounts,
) -> CtsynthStatus {
    guard(|| {
        let n = ref_arg(c)?.0.counts();
        put(
            out,
            CtsynthCounts {
                n_g: n.n_g,
                n_t: n.n_t,
                n_h: n.n_h,
                n_p: n.n_p,
                n_pl: n.n_pl,
            },
        )
    })
}

/// # Safety
/// `c` is null or a circuit handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ctsynth_circuit_free(c: *mut CtsynthCircuit) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Runs the exhaustive residue check; `*holds` receives the verdict.
///
/// # Safety
/// `holds` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ctsynth_verify_lemma(holds: *mut bool) -> CtsynthStatus {
    guard(|| put(holds, verify_lemma()))
}
