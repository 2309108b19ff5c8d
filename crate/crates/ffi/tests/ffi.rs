use std::ffi::{CStr, CString};
use std::os::raw::{c_char, c_int};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use axial_ffi::*;

fn cs(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn last_error() -> String {
    let p = axial_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

fn build(name: &str, eta: &str, ch: u64) -> *mut AxialAlgebra {
    let mut out = ptr::null_mut();
    let st = unsafe { axial_catalog_build(cs(name).as_ptr(), cs(eta).as_ptr(), ch, &mut out) };
    assert_eq!(st, AxialStatus::Ok, "{}", last_error());
    out
}

#[test]
fn build_dim_and_free() {
    let a = build("4NP", "generic", 0);
    let mut d = 0usize;
    assert_eq!(unsafe { axial_algebra_dim(a, &mut d) }, AxialStatus::Ok);
    assert_eq!(d, 6);
    unsafe { axial_algebra_free(a) };
    unsafe { axial_algebra_free(ptr::null_mut()) };
}

#[test]
fn invariants_of_4np() {
    let a = build("4NP", "generic", 0);
    let mut inv = AxialInvariants::default();
    let st = unsafe { axial_invariants(a, cs("jordan_phi()").as_ptr(), &mut inv) };
    assert_eq!(st, AxialStatus::Ok, "{}", last_error());
    assert_eq!(inv, AxialInvariants { enclosure_size: 6, adim: 4, vdim: 6 });
    unsafe { axial_algebra_free(a) };
}

#[test]
fn axes_verified() {
    for name in ["hat2B", "3C", "4NP"] {
        let a = build(name, "generic", 0);
        let mut ok: c_int = -1;
        let st = unsafe { axial_verify_axes(a, cs("jordan_phi()").as_ptr(), &mut ok) };
        assert_eq!(st, AxialStatus::Ok, "{}", last_error());
        assert_eq!(ok, 1, "{name}");
        unsafe { axial_algebra_free(a) };
    }
}

#[test]
fn text_round_trip() {
    let a = build("hat2B", "1/3", 0);
    let mut s: *mut c_char = ptr::null_mut();
    assert_eq!(unsafe { axial_algebra_to_text(a, &mut s) }, AxialStatus::Ok);
    let text = unsafe { CStr::from_ptr(s) }.to_owned();
    let mut b = ptr::null_mut();
    assert_eq!(unsafe { axial_algebra_parse(text.as_ptr(), &mut b) }, AxialStatus::Ok, "{}", last_error());
    let mut s2: *mut c_char = ptr::null_mut();
    assert_eq!(unsafe { axial_algebra_to_text(b, &mut s2) }, AxialStatus::Ok);
    assert_eq!(text.as_c_str(), unsafe { CStr::from_ptr(s2) });
    unsafe {
        axial_string_free(s);
        axial_string_free(s2);
        axial_algebra_free(a);
        axial_algebra_free(b);
    }
}

#[test]
fn quotient_of_hat2b() {
    let a = build("hat2B", "generic", 0);
    let mut q = ptr::null_mut();
    let st = unsafe { axial_quotient(a, cs("s_0").as_ptr(), &mut q) };
    assert_eq!(st, AxialStatus::Ok, "{}", last_error());
    let mut d = 0usize;
    assert_eq!(unsafe { axial_algebra_dim(q, &mut d) }, AxialStatus::Ok);
    assert_eq!(d, 2);
    unsafe {
        axial_algebra_free(q);
        axial_algebra_free(a);
    }
}

#[test]
fn error_codes() {
    let mut out = ptr::null_mut();
    let st = unsafe { axial_catalog_build(cs("5A").as_ptr(), cs("generic").as_ptr(), 0, &mut out) };
    assert_eq!(st, AxialStatus::UnknownName);
    assert!(last_error().contains("5A"));

    let st = unsafe { axial_catalog_build(ptr::null(), cs("generic").as_ptr(), 0, &mut out) };
    assert_eq!(st, AxialStatus::NullPointer);

    let st = unsafe { axial_catalog_build(cs("2B").as_ptr(), cs("generic").as_ptr(), 4, &mut out) };
    assert_eq!(st, AxialStatus::InvalidArgument);

    let st = unsafe { axial_algebra_parse(cs("algebra nonsense").as_ptr(), &mut out) };
    assert_eq!(st, AxialStatus::ParseError);

    let bad = [0xffu8, 0];
    let st = unsafe { axial_algebra_parse(bad.as_ptr() as *const c_char, &mut out) };
    assert_eq!(st, AxialStatus::InvalidUtf8);

    let a = build("2B", "generic", 0);
    let mut ok = 0;
    let st = unsafe { axial_verify_axes(a, cs("no_such_rule").as_ptr(), &mut ok) };
    assert_eq!(st, AxialStatus::UnknownName);
    let st = unsafe { axial_quotient(a, cs("zz_9").as_ptr(), &mut out) };
    assert_eq!(st, AxialStatus::ParseError);
    unsafe { axial_algebra_free(a) };
}

#[test]
fn run_cli() {
    let args = [cs("tables"), cs("--eta"), cs("-1")];
    let ptrs: Vec<*const c_char> = args.iter().map(|a| a.as_ptr()).collect();
    let mut report: *mut c_char = ptr::null_mut();
    let mut code: c_int = -1;
    let st = unsafe { axial_run(ptrs.as_ptr(), ptrs.len(), &mut report, &mut code) };
    assert_eq!(st, AxialStatus::Ok);
    assert_eq!(code, 0);
    let text = unsafe { CStr::from_ptr(report) }.to_string_lossy().into_owned();
    assert!(text.contains("4NP_x"), "{text}");
    unsafe { axial_string_free(report) };

    let args = [cs("catalog"), cs("build"), cs("nope")];
    let ptrs: Vec<*const c_char> = args.iter().map(|a| a.as_ptr()).collect();
    let st = unsafe { axial_run(ptrs.as_ptr(), ptrs.len(), &mut report, &mut code) };
    assert_eq!(st, AxialStatus::Ok);
    assert_eq!(code, 2);
    unsafe { axial_string_free(report) };
}

fn header() -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include/axial.h");
    std::fs::read_to_string(path).unwrap()
}

#[test]
fn header_declares_api() {
    let h = header();
    assert!(h.contains("#ifndef AXIAL_H"));
    assert!(h.contains("typedef struct AxialAlgebra AxialAlgebra;"));
    for f in [
        "axial_catalog_build",
        "axial_algebra_parse",
        "axial_algebra_free",
        "axial_algebra_dim",
        "axial_algebra_to_text",
        "axial_invariants",
        "axial_verify_axes",
        "axial_quotient",
        "axial_run",
        "axial_string_free",
        "axial_last_error",
        "AXIAL_STATUS_MATH_FAILURE",
    ] {
        assert!(h.contains(f), "{f} missing from header");
    }
}

#[test]
fn c_program_links() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let target = manifest.join("../../target").join(if cfg!(debug_assertions) { "debug" } else { "release" });
    let lib = target.join("libaxial_ffi.a");
    if !lib.exists() || Command::new("cc").arg("--version").output().is_err() {
        eprintln!("skipping: no staticlib or C compiler");
        return;
    }
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("t.c");
    std::fs::write(
        &src,
        r#"#include <stdio.h>
#include "axial.h"
int main(void) {
    AxialAlgebra *a = NULL;
    if (axial_catalog_build("3C", "generic", 0, &a) != AXIAL_STATUS_OK) return 10;
    size_t d = 0;
    if (axial_algebra_dim(a, &d) != AXIAL_STATUS_OK || d != 3) return 11;
    AxialInvariants inv;
    if (axial_invariants(a, "jordan_phi()", &inv) != AXIAL_STATUS_OK) return 12;
    axial_algebra_free(a);
    if (axial_catalog_build("nope", "generic", 0, &a) != AXIAL_STATUS_UNKNOWN_NAME) return 13;
    if (axial_last_error() == NULL) return 14;
    printf("%zu %zu %zu\n", inv.enclosure_size, inv.adim, inv.vdim);
    return 0;
}
"#,
    )
    .unwrap();
    let exe = dir.path().join("t");
    let status = Command::new("cc")
        .arg(&src)
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm"])
        .arg("-o")
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success());
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "exit {:?}", out.status.code());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "3 3 3");
}
