//! C interface to `prodspec`.
//!
//! Rings are opaque `PrRing` handles created by `pr_ring_parse` and released
//! with `pr_ring_free`. Every fallible call returns a `PrStatus`; on failure
//! the message is kept per thread and read back with `pr_last_error_message`.
//! Strings handed out by the library must be released with `pr_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::sync::Arc;

use prodspec::error::Error;
use prodspec::harness::{property, replay, run_all, run_property, Config};
use prodspec::product::{classify_prime, Classification};
use prodspec::{dsl, parse_ring, DslError, Ideal, Limits, Ring, Spectrum};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    Syntax = 3,
    /// Well-formed input that does not describe a valid ring or element.
    Invalid = 4,
    TooLarge = 5,
    NotPrime = 6,
    OutOfRange = 7,
    UnknownProperty = 8,
    /// A property produced a counterexample; the report is still returned.
    PropertyFailed = 9,
    Internal = 10,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrClass {
    Tame = 0,
    Wild = 1,
}

/// A parsed ring together with its spectrum.
pub struct PrRing {
    ring: Arc<Ring>,
    spectrum: Spectrum,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(PrStatus, String);

impl From<DslError> for Failure {
    fn from(e: DslError) -> Self {
        let status = match &e {
            DslError::Syntax { .. } => PrStatus::Syntax,
            DslError::Semantic { error, .. } => status_of(error),
        };
        Failure(status, e.to_string())
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(status_of(&e), e.to_string())
    }
}

fn status_of(e: &Error) -> PrStatus {
    match e {
        Error::TooLarge { .. } | Error::TooManyIdeals { .. } | Error::SizeOverflow => PrStatus::TooLarge,
        Error::NotPrime { .. } => PrStatus::NotPrime,
        _ => PrStatus::Invalid,
    }
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

/// Runs `f`, turning errors and panics into a status code.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> PrStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            PrStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal error".into());
            PrStatus::Internal
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure(PrStatus::NullArgument, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(PrStatus::InvalidUtf8, format!("{what} is not valid UTF-8")))
}

unsafe fn handle<'a>(r: *const PrRing) -> Result<&'a PrRing, Failure> {
    r.as_ref().ok_or_else(|| Failure(PrStatus::NullArgument, "ring handle is null".into()))
}

unsafe fn put<T>(out: *mut T, v: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure(PrStatus::NullArgument, "output pointer is null".into()));
    }
    out.write(v);
    Ok(())
}

fn owned(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).unwrap_or_default().into_raw()
}

/// Parses a ring expression such as `Z/4 x Z/12/(6)`.
///
/// # Safety
/// `expr` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn pr_ring_parse(expr: *const c_char, out: *mut *mut PrRing) -> PrStatus {
    guard(|| {
        let expr = text(expr, "expression")?;
        let ring = parse_ring(expr, &Limits::default())?;
        let spectrum = Spectrum::compute(&ring);
        put(out, Box::into_raw(Box::new(PrRing { ring, spectrum })))
    })
}

/// # Safety
/// `ring` must come from `pr_ring_parse` and not have been freed; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn pr_ring_free(ring: *mut PrRing) {
    if !ring.is_null() {
        drop(Box::from_raw(ring));
    }
}

/// Number of elements; 0 for a null handle.
///
/// # Safety
/// `ring` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pr_ring_size(ring: *const PrRing) -> u64 {
    ring.as_ref().map_or(0, |r| r.ring.size())
}

/// # Safety
/// `ring` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pr_ring_spectrum_len(ring: *const PrRing) -> usize {
    ring.as_ref().map_or(0, |r| r.spectrum.len())
}

/// # Safety
/// `ring` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pr_ring_idempotent_count(ring: *const PrRing) -> usize {
    ring.as_ref().map_or(0, |r| r.ring.idempotents().len())
}

/// # Safety
/// `ring` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pr_ring_krull_dim(ring: *const PrRing) -> usize {
    ring.as_ref().map_or(0, |r| r.spectrum.krull_dim())
}

/// # Safety
/// `ring` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pr_ring_component_count(ring: *const PrRing, out: *mut usize) -> PrStatus {
    guard(|| {
        let r = handle(ring)?;
        put(out, r.spectrum.connected_components()?.len())
    })
}

/// Renders the `index`-th prime (0-based, spectrum order) by generators.
///
/// # Safety
/// `ring` must be a live handle and `out` writable. The string must be
/// released with `pr_string_free`.
#[no_mangle]
pub unsafe extern "C" fn pr_ring_prime_describe(
    ring: *const PrRing,
    index: usize,
    out: *mut *mut c_char,
) -> PrStatus {
    guard(|| {
        let r = handle(ring)?;
        let point = r.spectrum.points().get(index).ok_or_else(|| {
            Failure(
                PrStatus::OutOfRange,
                format!("prime index {index} out of range (spectrum has {} points)", r.spectrum.len()),
            )
        })?;
        put(out, owned(point.prime.render()))
    })
}

/// Classifies the ideal generated by `generators` (a literal list such as
/// `(2,0),(0,1)`). For a tame prime, `factor` receives the 0-based factor index.
///
/// # Safety
/// `ring` must be a live handle, `generators` NUL-terminated, `kind` writable;
/// `factor` may be null.
#[no_mangle]
pub unsafe extern "C" fn pr_classify_prime(
    ring: *const PrRing,
    generators: *const c_char,
    kind: *mut PrClass,
    factor: *mut usize,
) -> PrStatus {
    guard(|| {
        let r = handle(ring)?;
        let gens = dsl::parse_ring_elems(&r.ring, text(generators, "generators")?)?;
        let p = Ideal::generate(&r.ring, &gens, &Limits::default())?;
        p.require_prime()?;
        match classify_prime(&r.ring, &p)? {
            Classification::Tame(w) => {
                if !factor.is_null() {
                    factor.write(w.index);
                }
                put(kind, PrClass::Tame)
            }
            Classification::Wild => put(kind, PrClass::Wild),
        }
    })
}

/// Runs property `id` (or `all`) and writes the JSON report. With a non-null
/// `instance`, replays that single instance instead of generating. `trials`
/// of 0 keeps the property default.
///
/// # Safety
/// `id` must be NUL-terminated, `instance` null or NUL-terminated, `out_json`
/// writable. The report must be released with `pr_string_free`.
#[no_mangle]
pub unsafe extern "C" fn pr_verify(
    id: *const c_char,
    seed: u64,
    trials: u64,
    instance: *const c_char,
    out_json: *mut *mut c_char,
) -> PrStatus {
    let mut failed = false;
    let status = guard(|| {
        let id = text(id, "property id")?;
        let config = Config {
            seed,
            trials: (trials > 0).then_some(trials),
            ..Config::default()
        };
        let json = if id == "all" {
            let suite = run_all(&config);
            failed = suite.status == prodspec::harness::Status::Fail;
            serde_json::to_string_pretty(&suite)
        } else {
            let p = property(id)
                .ok_or_else(|| Failure(PrStatus::UnknownProperty, format!("unknown property `{id}`")))?;
            let report = if instance.is_null() {
                run_property(p, &config)
            } else {
                let inst = p.kind.parse(text(instance, "instance")?)?;
                replay(p, &config, &inst)
            };
            failed = report.status == prodspec::harness::Status::Fail;
            serde_json::to_string_pretty(&report)
        }
        .map_err(|e| Failure(PrStatus::Internal, e.to_string()))?;
        put(out_json, owned(json))
    });
    if status == PrStatus::Ok && failed {
        set_error("property failed; see the counterexample in the report".into());
        return PrStatus::PropertyFailed;
    }
    status
}

/// # Safety
/// `s` must be null or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn pr_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message of the last failed call on this thread, or null. Valid until the
/// next call into the library on the same thread; do not free.
#[no_mangle]
pub extern "C" fn pr_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}
