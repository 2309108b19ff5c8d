//! C ABI for axial-core. Algebras are opaque handles; every call returns an
//! [`AxialStatus`] and writes results through out-pointers. The message of
//! the last failure on the calling thread is available from
//! [`axial_last_error`].

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::os::raw::{c_char, c_int};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use axial::algebra::format::{parse_presented, parse_vector, write_presented};
use axial::algebra::PresentedAlgebra;
use axial::catalog::{build, CatalogName};
use axial::fusion::{invariants, named_rule, verify_axis, FusionRule};
use axial::scalars::{parse_scalar, FieldDescriptor, Scalar};

/// Result codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AxialStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    UnknownName = 4,
    InvalidArgument = 5,
    MathFailure = 6,
    Panic = 7,
}

/// Opaque algebra with its generators and the value of eta it was built at.
pub struct AxialAlgebra {
    inner: PresentedAlgebra,
    eta: Option<Scalar>,
}

/// Table columns of an algebra.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct AxialInvariants {
    pub enclosure_size: usize,
    pub adim: usize,
    pub vdim: usize,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let c = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn fail(status: AxialStatus, msg: impl Into<String>) -> AxialStatus {
    set_error(msg);
    status
}

fn guard(f: impl FnOnce() -> AxialStatus) -> AxialStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => fail(AxialStatus::Panic, "internal panic"),
    }
}

unsafe fn str_arg<'a>(p: *const c_char) -> Result<&'a str, AxialStatus> {
    if p.is_null() {
        return Err(fail(AxialStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(p).to_str().map_err(|_| fail(AxialStatus::InvalidUtf8, "argument is not UTF-8"))
}

fn field_and_eta(eta: &str, characteristic: u64) -> Result<(FieldDescriptor, Scalar), AxialStatus> {
    let generic = eta == "generic";
    let f = FieldDescriptor::new(characteristic, generic).map_err(|e| fail(AxialStatus::InvalidArgument, e.to_string()))?;
    let value = if generic { Scalar::eta(f) } else { parse_scalar(eta, f, None) };
    let value = value.map_err(|e| fail(AxialStatus::ParseError, e.to_string()))?;
    Ok((f, value))
}

fn rule_of(alg: &AxialAlgebra, spec: &str) -> Result<FusionRule, AxialStatus> {
    match named_rule(spec, alg.inner.algebra.field(), alg.eta.as_ref()) {
        Ok(Some(r)) => Ok(r),
        Ok(None) => Err(fail(AxialStatus::UnknownName, format!("unknown rule {spec}"))),
        Err(e) => Err(fail(AxialStatus::InvalidArgument, e.to_string())),
    }
}

fn boxed(inner: PresentedAlgebra, eta: Option<Scalar>) -> *mut AxialAlgebra {
    Box::into_raw(Box::new(AxialAlgebra { inner, eta }))
}

/// Build a catalog algebra. `eta` is `"generic"` or an exact scalar;
/// `characteristic` is 0 or a prime.
///
/// # Safety
/// `name` and `eta` must be NUL-terminated strings; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn axial_catalog_build(
    name: *const c_char,
    eta: *const c_char,
    characteristic: u64,
    out: *mut *mut AxialAlgebra,
) -> AxialStatus {
    guard(|| {
        if out.is_null() {
            return fail(AxialStatus::NullPointer, "null out pointer");
        }
        let (name, eta) = match (str_arg(name), str_arg(eta)) {
            (Ok(n), Ok(e)) => (n, e),
            (Err(s), _) | (_, Err(s)) => return s,
        };
        let Ok(n) = name.parse::<CatalogName>() else {
            return fail(AxialStatus::UnknownName, format!("unknown catalog name {name}"));
        };
        let (f, value) = match field_and_eta(eta, characteristic) {
            Ok(x) => x,
            Err(s) => return s,
        };
        match build(n, f, &value) {
            Ok(p) => {
                *out = boxed(p, Some(value));
                AxialStatus::Ok
            }
            Err(e) => fail(AxialStatus::InvalidArgument, e.to_string()),
        }
    })
}

/// Parse an algebra in the text format written by [`axial_algebra_to_text`].
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn axial_algebra_parse(text: *const c_char, out: *mut *mut AxialAlgebra) -> AxialStatus {
    guard(|| {
        if out.is_null() {
            return fail(AxialStatus::NullPointer, "null out pointer");
        }
        let text = match str_arg(text) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match parse_presented(text) {
            Ok(p) => {
                let f = p.algebra.field();
                let eta = if f.generic_eta() { Scalar::eta(f).ok() } else { p.algebra.eta().cloned() };
                *out = boxed(p, eta);
                AxialStatus::Ok
            }
            Err(e) => fail(AxialStatus::ParseError, e.to_string()),
        }
    })
}

/// Release an algebra. Null is ignored.
///
/// # Safety
/// `alg` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn axial_algebra_free(alg: *mut AxialAlgebra) {
    if !alg.is_null() {
        drop(Box::from_raw(alg));
    }
}

/// Dimension of the algebra.
///
/// # Safety
/// `alg` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn axial_algebra_dim(alg: *const AxialAlgebra, out: *mut usize) -> AxialStatus {
    guard(|| {
        if alg.is_null() || out.is_null() {
            return fail(AxialStatus::NullPointer, "null argument");
        }
        *out = (*alg).inner.algebra.dim();
        AxialStatus::Ok
    })
}

/// Text form of the algebra; release with [`axial_string_free`].
///
/// # Safety
/// `alg` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn axial_algebra_to_text(alg: *const AxialAlgebra, out: *mut *mut c_char) -> AxialStatus {
    guard(|| {
        if alg.is_null() || out.is_null() {
            return fail(AxialStatus::NullPointer, "null argument");
        }
        match CString::new(write_presented(&(*alg).inner)) {
            Ok(s) => {
                *out = s.into_raw();
                AxialStatus::Ok
            }
            Err(_) => fail(AxialStatus::Panic, "interior NUL"),
        }
    })
}

/// Enclosure size, axial dimension and dimension under `rule`.
///
/// # Safety
/// `alg` must be a live handle, `rule` a NUL-terminated string and `out`
/// writable.
#[no_mangle]
pub unsafe extern "C" fn axial_invariants(
    alg: *const AxialAlgebra,
    rule: *const c_char,
    out: *mut AxialInvariants,
) -> AxialStatus {
    guard(|| {
        if alg.is_null() || out.is_null() {
            return fail(AxialStatus::NullPointer, "null argument");
        }
        let alg = &*alg;
        let rule = match str_arg(rule).and_then(|r| rule_of(alg, r)) {
            Ok(r) => r,
            Err(s) => return s,
        };
        match invariants(&alg.inner, &rule) {
            Ok(rec) => {
                *out = AxialInvariants { enclosure_size: rec.enclosure_size, adim: rec.adim, vdim: rec.vdim };
                AxialStatus::Ok
            }
            Err(e) => fail(AxialStatus::MathFailure, e.to_string()),
        }
    })
}

/// Writes 1 to `all_axes` when every generator is an axis for `rule`, else 0.
///
/// # Safety
/// `alg` must be a live handle, `rule` a NUL-terminated string and
/// `all_axes` writable.
#[no_mangle]
pub unsafe extern "C" fn axial_verify_axes(
    alg: *const AxialAlgebra,
    rule: *const c_char,
    all_axes: *mut c_int,
) -> AxialStatus {
    guard(|| {
        if alg.is_null() || all_axes.is_null() {
            return fail(AxialStatus::NullPointer, "null argument");
        }
        let alg = &*alg;
        let rule = match str_arg(rule).and_then(|r| rule_of(alg, r)) {
            Ok(r) => r,
            Err(s) => return s,
        };
        let mut ok = true;
        for g in &alg.inner.generators {
            match verify_axis(&alg.inner.algebra, g, &rule) {
                Ok(rep) => ok &= rep.is_axis(),
                Err(e) => return fail(AxialStatus::MathFailure, e.to_string()),
            }
        }
        *all_axes = ok as c_int;
        AxialStatus::Ok
    })
}

/// Quotient by the ideal generated by `;`-separated vectors such as
/// `"s_0; qh - ah_0"`.
///
/// # Safety
/// `alg` must be a live handle, `vectors` a NUL-terminated string and `out`
/// writable.
#[no_mangle]
pub unsafe extern "C" fn axial_quotient(
    alg: *const AxialAlgebra,
    vectors: *const c_char,
    out: *mut *mut AxialAlgebra,
) -> AxialStatus {
    guard(|| {
        if alg.is_null() || out.is_null() {
            return fail(AxialStatus::NullPointer, "null argument");
        }
        let alg = &*alg;
        let text = match str_arg(vectors) {
            Ok(t) => t,
            Err(s) => return s,
        };
        let a = &alg.inner.algebra;
        let mut seeds = Vec::new();
        for part in text.split(';').filter(|p| !p.trim().is_empty()) {
            match parse_vector(a.labels(), a.field(), alg.eta.as_ref(), part) {
                Ok(v) => seeds.push(v),
                Err(e) => return fail(AxialStatus::ParseError, e.to_string()),
            }
        }
        let result = a.ideal_closure(&seeds).and_then(|ideal| alg.inner.quotient(&ideal));
        match result {
            Ok((q, _)) => {
                *out = boxed(q, alg.eta.clone());
                AxialStatus::Ok
            }
            Err(e) => fail(AxialStatus::MathFailure, e.to_string()),
        }
    })
}

/// Run the command line with `argc` arguments (without the program name).
/// The report goes to `report` (release with [`axial_string_free`]) and the
/// command's exit code to `exit_code`.
///
/// # Safety
/// `argv` must point to `argc` NUL-terminated strings; `report` and
/// `exit_code` must be writable.
#[no_mangle]
pub unsafe extern "C" fn axial_run(
    argv: *const *const c_char,
    argc: usize,
    report: *mut *mut c_char,
    exit_code: *mut c_int,
) -> AxialStatus {
    guard(|| {
        if report.is_null() || exit_code.is_null() || (argc > 0 && argv.is_null()) {
            return fail(AxialStatus::NullPointer, "null argument");
        }
        let mut args = vec!["axial".to_string()];
        for i in 0..argc {
            match str_arg(*argv.add(i)) {
                Ok(s) => args.push(s.to_string()),
                Err(s) => return s,
            }
        }
        let outcome = axial::cli::run(args);
        *exit_code = outcome.exit_code;
        *report = CString::new(outcome.report.replace('\0', " ")).unwrap_or_default().into_raw();
        AxialStatus::Ok
    })
}

/// Release a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn axial_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message of the last failure on this thread, or null. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn axial_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}
