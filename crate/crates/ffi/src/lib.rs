//! C ABI over `monohom`.
//!
//! Every fallible call returns a [`MonohomStatus`]; on failure the message is
//! kept per thread and can be read with [`monohom_last_error`]. Strings
//! handed out by this library must be released with [`monohom_string_free`]
//! and rings with [`monohom_ring_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use monohom::cli::{analyze, RingSpec};
use monohom::lab::{self, LabOptions};
use monohom::{Error, LocalRing, ParameterSystem};

#[repr(C)]
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum MonohomStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    /// Input violates a mathematical hypothesis (not a system of
    /// parameters, infinite colength, `b` not inside `a`, ...).
    Hypothesis = 4,
    /// A size or search cap was hit.
    Capacity = 5,
    Internal = 6,
    Panic = 7,
}

/// Opaque parsed ring spec.
pub struct MonohomRing {
    spec: RingSpec,
    ring: LocalRing,
    sop: Option<ParameterSystem>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(e: &Error) -> MonohomStatus {
    match e {
        Error::Parse(_) => MonohomStatus::Parse,
        Error::LengthCapExceeded { .. } | Error::CapExceeded(_) | Error::TooManyVariables(_) | Error::ExponentOverflow => {
            MonohomStatus::Capacity
        }
        e if e.is_internal() => MonohomStatus::Internal,
        _ => MonohomStatus::Hypothesis,
    }
}

fn fail(status: MonohomStatus, msg: impl Into<String>) -> MonohomStatus {
    set_error(msg.into());
    status
}

/// Run `f`, translating errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), MonohomStatus>) -> MonohomStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => MonohomStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => fail(MonohomStatus::Panic, "panic inside monohom"),
    }
}

fn lift<T>(r: monohom::Result<T>) -> Result<T, MonohomStatus> {
    r.map_err(|e| fail(status_of(&e), e.to_string()))
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, MonohomStatus> {
    if p.is_null() {
        return Err(fail(MonohomStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p).to_str().map_err(|_| fail(MonohomStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn ring_ref<'a>(ring: *const MonohomRing) -> Result<&'a MonohomRing, MonohomStatus> {
    ring.as_ref().ok_or_else(|| fail(MonohomStatus::NullPointer, "ring is null"))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), MonohomStatus> {
    let c = CString::new(s).map_err(|_| fail(MonohomStatus::Internal, "output contains NUL"))?;
    *out = c.into_raw();
    Ok(())
}

fn options(r: &MonohomRing) -> LabOptions {
    let mut opts = LabOptions { prime: r.spec.prime, ..LabOptions::default() };
    opts.decide.seed = r.spec.seed.unwrap_or(0);
    opts
}

/// Parse a ring spec (`ring`, `relations`, `sop`, `prime`, `seed` lines).
///
/// # Safety
/// `spec` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn monohom_ring_parse(spec: *const c_char, out: *mut *mut MonohomRing) -> MonohomStatus {
    guard(|| {
        if out.is_null() {
            return Err(fail(MonohomStatus::NullPointer, "out is null"));
        }
        *out = ptr::null_mut();
        let text = read_str(spec, "spec")?;
        let spec = lift(RingSpec::parse(text))?;
        let ring = lift(spec.ring())?;
        let sop = lift(spec.sop(&ring))?;
        *out = Box::into_raw(Box::new(MonohomRing { spec, ring, sop }));
        Ok(())
    })
}

/// # Safety
/// `ring` must be null or a handle from [`monohom_ring_parse`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn monohom_ring_free(ring: *mut MonohomRing) {
    if !ring.is_null() {
        drop(Box::from_raw(ring));
    }
}

/// Krull dimension of the ring.
///
/// # Safety
/// `ring` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn monohom_ring_dim(ring: *const MonohomRing, out: *mut u32) -> MonohomStatus {
    guard(|| {
        let r = ring_ref(ring)?;
        if out.is_null() {
            return Err(fail(MonohomStatus::NullPointer, "out is null"));
        }
        *out = r.ring.dim() as u32;
        Ok(())
    })
}

/// Least `n` with `m^n ∩ Γ_m(R) = 0`.
///
/// # Safety
/// `ring` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn monohom_stabilization_index(ring: *const MonohomRing, out: *mut u32) -> MonohomStatus {
    guard(|| {
        let r = ring_ref(ring)?;
        if out.is_null() {
            return Err(fail(MonohomStatus::NullPointer, "out is null"));
        }
        *out = lift(r.ring.stabilization_index())?;
        Ok(())
    })
}

/// JSON report for `Hom(R/a, R/b)`; ideals are written like `(y^2, x)`.
///
/// # Safety
/// `ring` must be a live handle, `a` and `b` NUL-terminated strings and
/// `out_json` a valid pointer. The result must be freed with
/// [`monohom_string_free`].
#[no_mangle]
pub unsafe extern "C" fn monohom_analyze(
    ring: *const MonohomRing,
    a: *const c_char,
    b: *const c_char,
    out_json: *mut *mut c_char,
) -> MonohomStatus {
    guard(|| {
        if out_json.is_null() {
            return Err(fail(MonohomStatus::NullPointer, "out_json is null"));
        }
        *out_json = ptr::null_mut();
        let r = ring_ref(ring)?;
        let a = lift(r.ring.ideal(read_str(a, "a")?))?;
        let b = lift(r.ring.ideal(read_str(b, "b")?))?;
        let report = lift(analyze(&r.ring, &a, &b, r.sop.as_ref(), options(r)))?;
        let json = serde_json::to_string(&report).map_err(|e| fail(MonohomStatus::Internal, e.to_string()))?;
        write_string(out_json, json)
    })
}

/// JSON classification of the exponent lattice `[1, max]^d` over the spec's
/// sop.
///
/// # Safety
/// As for [`monohom_analyze`].
#[no_mangle]
pub unsafe extern "C" fn monohom_grid(ring: *const MonohomRing, max: u32, out_json: *mut *mut c_char) -> MonohomStatus {
    guard(|| {
        if out_json.is_null() {
            return Err(fail(MonohomStatus::NullPointer, "out_json is null"));
        }
        *out_json = ptr::null_mut();
        let r = ring_ref(ring)?;
        let ps = r.sop.as_ref().ok_or_else(|| fail(MonohomStatus::Hypothesis, "the spec has no `sop` line"))?;
        let grid = lift(lab::classify_grid(ps, max, options(r)))?;
        let json = serde_json::to_string(&grid).map_err(|e| fail(MonohomStatus::Internal, e.to_string()))?;
        write_string(out_json, json)
    })
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn monohom_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread, or null. Valid until
/// the next call into this library from the same thread.
#[no_mangle]
pub extern "C" fn monohom_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

#[no_mangle]
pub extern "C" fn monohom_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(text: &str) -> *mut MonohomRing {
        let c = CString::new(text).unwrap();
        let mut r = ptr::null_mut();
        assert_eq!(unsafe { monohom_ring_parse(c.as_ptr(), &mut r) }, MonohomStatus::Ok);
        r
    }

    fn last_error() -> String {
        unsafe { CStr::from_ptr(monohom_last_error()) }.to_str().unwrap().to_owned()
    }

    #[test]
    fn analyze_round_trip() {
        let r = parse("ring x y\nrelations x^2 xy^2\nsop y");
        let (a, b) = (CString::new("(y)").unwrap(), CString::new("(y^2)").unwrap());
        let mut out = ptr::null_mut();
        assert_eq!(unsafe { monohom_analyze(r, a.as_ptr(), b.as_ptr(), &mut out) }, MonohomStatus::Ok);
        let json: serde_json::Value = serde_json::from_str(unsafe { CStr::from_ptr(out) }.to_str().unwrap()).unwrap();
        assert_eq!(json["hom"]["cyclic"], true);
        assert_eq!(json["hom"]["free"], true);
        assert_eq!(json["hom"]["length"], 2);
        unsafe {
            monohom_string_free(out);
            monohom_ring_free(r);
        }
    }

    #[test]
    fn stabilization_and_dim() {
        let r = parse("ring x y\nrelations x^2 xy^3");
        let (mut n, mut d) = (0, 0);
        unsafe {
            assert_eq!(monohom_stabilization_index(r, &mut n), MonohomStatus::Ok);
            assert_eq!(monohom_ring_dim(r, &mut d), MonohomStatus::Ok);
            monohom_ring_free(r);
        }
        assert_eq!((n, d), (4, 1));
    }

    #[test]
    fn errors_are_reported() {
        let c = CString::new("ring x\nbogus 1").unwrap();
        let mut r = ptr::null_mut();
        assert_eq!(unsafe { monohom_ring_parse(c.as_ptr(), &mut r) }, MonohomStatus::Parse);
        assert!(r.is_null());
        assert!(last_error().contains("line 2"));

        assert_eq!(unsafe { monohom_ring_parse(ptr::null(), &mut r) }, MonohomStatus::NullPointer);

        let r = parse("ring x y\nrelations x^2 xy^3\nsop y^2");
        let (a, b) = (CString::new("(y^2)").unwrap(), CString::new("(x)").unwrap());
        let mut out = ptr::null_mut();
        assert_eq!(unsafe { monohom_analyze(r, a.as_ptr(), b.as_ptr(), &mut out) }, MonohomStatus::Hypothesis);
        assert!(out.is_null());
        assert!(last_error().contains("not contained"));
        let mut n = 0;
        assert_eq!(unsafe { monohom_stabilization_index(ptr::null(), &mut n) }, MonohomStatus::NullPointer);
        unsafe { monohom_ring_free(r) };
    }

    #[test]
    fn grid_json() {
        let r = parse("ring x y z\nrelations x^2 xyz\nsop y z");
        let mut out = ptr::null_mut();
        assert_eq!(unsafe { monohom_grid(r, 3, &mut out) }, MonohomStatus::Ok);
        let json: serde_json::Value = serde_json::from_str(unsafe { CStr::from_ptr(out) }.to_str().unwrap()).unwrap();
        assert_eq!(json["points"].as_array().unwrap().len(), 9);
        unsafe {
            monohom_string_free(out);
            monohom_ring_free(r);
        }
        assert!(unsafe { CStr::from_ptr(monohom_version()) }.to_str().unwrap().starts_with("0."));
    }
}
