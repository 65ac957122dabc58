//! C ABI for `rankgeo`.
//!
//! Codes live behind opaque `RgCode` handles. Every call returns an `RgStatus`;
//! on failure `rg_last_error` gives a message for the calling thread. Strings
//! returned through out-parameters are owned by the caller and released with
//! `rg_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use rankgeo::codes::MatrixRankCode;
use rankgeo::extension::{additive_generalized_weights, additive_weight_distribution, extend_hamming};
use rankgeo::geometry::{generalized_weights, WeightMethod};
use rankgeo::identities::{run_suite, Suite};
use rankgeo::{corpus, io, Error, Guards, Side};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RgStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidArgument = 4,
    Degenerate = 5,
    TooLarge = 6,
    BufferTooSmall = 7,
    Internal = 8,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RgSide {
    Row = 0,
    Column = 1,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RgMethod {
    Subcode = 0,
    Shorten = 1,
    System = 2,
}

/// Enumeration caps; pass `NULL` wherever a `const RgGuards *` is accepted to use the defaults.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RgGuards {
    pub max_vectors: u64,
    pub max_subspaces: u64,
}

/// Opaque matrix rank-metric code.
pub struct RgCode {
    inner: MatrixRankCode,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let text = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).ok());
}

fn fail(status: RgStatus, msg: impl Into<String>) -> RgStatus {
    set_error(msg);
    status
}

fn status_of(e: &Error) -> RgStatus {
    match e {
        Error::Parse(_) => RgStatus::Parse,
        Error::DegenerateCode { .. } | Error::DegenerateSystem(_) => RgStatus::Degenerate,
        Error::EnumerationTooLarge { .. } => RgStatus::TooLarge,
        _ => RgStatus::InvalidArgument,
    }
}

impl From<Error> for RgStatus {
    fn from(e: Error) -> RgStatus {
        fail(status_of(&e), e.to_string())
    }
}

type Outcome = Result<(), RgStatus>;

fn guarded(f: impl FnOnce() -> Outcome) -> RgStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => RgStatus::Ok,
        Ok(Err(s)) => s,
        Err(payload) => {
            let what = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            fail(RgStatus::Internal, format!("panic: {what}"))
        }
    }
}

unsafe fn code_ref<'a>(code: *const RgCode) -> Result<&'a MatrixRankCode, RgStatus> {
    code.as_ref().map(|c| &c.inner).ok_or_else(|| fail(RgStatus::NullPointer, "code handle is NULL"))
}

unsafe fn out_ptr<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, RgStatus> {
    p.as_mut().ok_or_else(|| fail(RgStatus::NullPointer, format!("{what} is NULL")))
}

unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, RgStatus> {
    if s.is_null() {
        return Err(fail(RgStatus::NullPointer, format!("{what} is NULL")));
    }
    CStr::from_ptr(s).to_str().map_err(|_| fail(RgStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn guards_of(g: *const RgGuards) -> Guards {
    match g.as_ref() {
        Some(g) => Guards { max_vectors: g.max_vectors, max_subspaces: g.max_subspaces },
        None => Guards::default(),
    }
}

fn give_string(s: String, out: &mut *mut c_char) -> Outcome {
    let c = CString::new(s).map_err(|_| fail(RgStatus::Internal, "string contains NUL"))?;
    *out = c.into_raw();
    Ok(())
}

fn give_code(c: MatrixRankCode, out: &mut *mut RgCode) -> Outcome {
    *out = Box::into_raw(Box::new(RgCode { inner: c }));
    Ok(())
}

/// Copy `values` into `buf`; `*len` always receives the full length.
unsafe fn give_slice<T: Copy>(values: &[T], buf: *mut T, cap: usize, len: *mut usize) -> Outcome {
    *out_ptr(len, "len")? = values.len();
    if values.len() > cap {
        return Err(fail(RgStatus::BufferTooSmall, format!("need {} entries, got {cap}", values.len())));
    }
    if !values.is_empty() {
        if buf.is_null() {
            return Err(fail(RgStatus::NullPointer, "buffer is NULL"));
        }
        ptr::copy_nonoverlapping(values.as_ptr(), buf, values.len());
    }
    Ok(())
}

fn side_of(s: RgSide) -> Side {
    match s {
        RgSide::Row => Side::Row,
        RgSide::Column => Side::Column,
    }
}

/// Message of the last failed call on this thread, or `NULL`. Valid until the next call.
#[no_mangle]
pub extern "C" fn rg_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn rg_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

#[no_mangle]
pub extern "C" fn rg_guards_default() -> RgGuards {
    let g = Guards::default();
    RgGuards { max_vectors: g.max_vectors, max_subspaces: g.max_subspaces }
}

/// Release a string returned by this library. `NULL` is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn rg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Release a code handle. `NULL` is ignored.
///
/// # Safety
/// `code` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn rg_code_free(code: *mut RgCode) {
    if !code.is_null() {
        drop(Box::from_raw(code));
    }
}

/// Parse a code or tensor document.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rg_code_from_json(json: *const c_char, out: *mut *mut RgCode) -> RgStatus {
    guarded(|| {
        let out = out_ptr(out, "out")?;
        let text = read_str(json, "json")?;
        give_code(io::parse_code(text)?, out)
    })
}

/// The built-in [3x3, 4, 2] binary code.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rg_code_toy(out: *mut *mut RgCode) -> RgStatus {
    guarded(|| give_code(corpus::toy_code(), out_ptr(out, "out")?))
}

/// The [n x n, n, n] code of multiplication matrices of `GF(q^n)` over `GF(q)`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rg_code_spread(q: u32, n: usize, out: *mut *mut RgCode) -> RgStatus {
    guarded(|| {
        let out = out_ptr(out, "out")?;
        give_code(corpus::spread_code(q, n)?, out)
    })
}

/// Field order and shape. Any out-pointer may be `NULL`.
///
/// # Safety
/// `code` must be a live handle; non-NULL out-pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn rg_code_shape(code: *const RgCode, q: *mut u32, m: *mut usize, n: *mut usize, k: *mut usize) -> RgStatus {
    guarded(|| {
        let c = code_ref(code)?;
        if let Some(q) = q.as_mut() {
            *q = c.field().q();
        }
        for (p, v) in [(m, c.m()), (n, c.n()), (k, c.k())] {
            if let Some(p) = p.as_mut() {
                *p = v;
            }
        }
        Ok(())
    })
}

/// Serialize as a code document.
///
/// # Safety
/// `code` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rg_code_to_json(code: *const RgCode, out: *mut *mut c_char) -> RgStatus {
    guarded(|| {
        let c = code_ref(code)?;
        give_string(io::to_json(&io::code_doc(c)), out_ptr(out, "out")?)
    })
}

/// Rank distribution `A_0, ..., A_min(m,n)` into `buf`.
///
/// `*len` receives the number of entries even when `cap` is too small.
///
/// # Safety
/// `code` must be a live handle; `buf` must hold `cap` entries; `len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rg_rank_distribution(
    code: *const RgCode,
    guards: *const RgGuards,
    buf: *mut u64,
    cap: usize,
    len: *mut usize,
) -> RgStatus {
    guarded(|| {
        let c = code_ref(code)?;
        let d = c.rank_distribution(&guards_of(guards))?;
        give_slice(&d.counts, buf, cap, len)
    })
}

/// Minimum rank distance; 0 for the zero code.
///
/// # Safety
/// `code` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rg_min_distance(code: *const RgCode, guards: *const RgGuards, out: *mut usize) -> RgStatus {
    guarded(|| {
        let c = code_ref(code)?;
        let out = out_ptr(out, "out")?;
        *out = c.rank_distribution(&guards_of(guards))?.min_distance().unwrap_or(0);
        Ok(())
    })
}

/// Generalized weights `d_1, ..., d_k` on one side into `buf`.
///
/// # Safety
/// As for [`rg_rank_distribution`].
#[no_mangle]
pub unsafe extern "C" fn rg_generalized_weights(
    code: *const RgCode,
    side: RgSide,
    method: RgMethod,
    guards: *const RgGuards,
    buf: *mut usize,
    cap: usize,
    len: *mut usize,
) -> RgStatus {
    guarded(|| {
        let c = code_ref(code)?;
        let method = match method {
            RgMethod::Subcode => WeightMethod::Subcode,
            RgMethod::Shorten => WeightMethod::Shorten,
            RgMethod::System => WeightMethod::System,
        };
        let w = generalized_weights(c, side_of(side), method, &guards_of(guards))?;
        give_slice(&w, buf, cap, len)
    })
}

/// Run a verifier suite (`NULL` means `"all"`). `*passed` tells whether every report
/// passed; when `reports` is non-NULL it receives the reports as JSON lines.
///
/// # Safety
/// `code` must be a live handle; `suite` is NULL or NUL-terminated; `passed` must be
/// writable; `reports` is NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn rg_verify(
    code: *const RgCode,
    suite: *const c_char,
    guards: *const RgGuards,
    passed: *mut bool,
    reports: *mut *mut c_char,
) -> RgStatus {
    guarded(|| {
        let c = code_ref(code)?;
        let passed = out_ptr(passed, "passed")?;
        let suite: Suite = if suite.is_null() { Suite::All } else { read_str(suite, "suite")?.parse()? };
        let rs = run_suite(c, suite, &guards_of(guards))?;
        *passed = rs.iter().all(|r| r.passed);
        if let Some(out) = reports.as_mut() {
            let lines: String = rs.iter().map(|r| io::to_json(r) + "\n").collect();
            give_string(lines, out)?;
        }
        Ok(())
    })
}

/// Extended additive Hamming code with its weight distribution and generalized weights, as JSON.
///
/// # Safety
/// `code` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rg_extend_json(code: *const RgCode, side: RgSide, guards: *const RgGuards, out: *mut *mut c_char) -> RgStatus {
    guarded(|| {
        let c = code_ref(code)?;
        let out = out_ptr(out, "out")?;
        let g = guards_of(guards);
        let h = extend_hamming(&c.generator_tensor(), side_of(side), &g)?;
        let dist = additive_weight_distribution(&h, &g)?;
        let weights = additive_generalized_weights(&h, &g)?;
        let doc = io::to_json(&io::additive_doc(&h));
        let text = format!(
            "{{\"code\":{doc},\"weight_distribution\":{},\"generalized_weights\":{}}}",
            io::to_json(&dist),
            io::to_json(&weights)
        );
        give_string(text, out)
    })
}
