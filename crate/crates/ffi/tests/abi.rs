use std::ffi::{c_char, CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use prodspec_ffi::*;

fn parse(expr: &str) -> (PrStatus, *mut PrRing) {
    let c = CString::new(expr).unwrap();
    let mut out = ptr::null_mut();
    let status = unsafe { pr_ring_parse(c.as_ptr(), &mut out) };
    (status, out)
}

fn last_error() -> String {
    let p = pr_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned()
}

fn take(s: *mut c_char) -> String {
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { pr_string_free(s) };
    out
}

#[test]
fn ring_queries() {
    let (status, r) = parse("Z/12 x F2xy");
    assert_eq!(status, PrStatus::Ok);
    unsafe {
        assert_eq!(pr_ring_size(r), 96);
        assert_eq!(pr_ring_spectrum_len(r), 3);
        assert_eq!(pr_ring_idempotent_count(r), 8);
        assert_eq!(pr_ring_krull_dim(r), 0);
        let mut n = 0;
        assert_eq!(pr_ring_component_count(r, &mut n), PrStatus::Ok);
        assert_eq!(n, 3);
        let mut s = ptr::null_mut();
        assert_eq!(pr_ring_prime_describe(r, 0, &mut s), PrStatus::Ok);
        assert!(!take(s).is_empty());
        assert_eq!(pr_ring_prime_describe(r, 3, &mut s), PrStatus::OutOfRange);
        assert!(last_error().contains("out of range"));
        pr_ring_free(r);
    }
}

#[test]
fn parse_errors_map_to_codes() {
    let (status, r) = parse("Z/12 x");
    assert_eq!(status, PrStatus::Syntax);
    assert!(r.is_null());
    assert!(last_error().contains("column"));
    assert_eq!(parse("Z/4 x Z/6/(1)").0, PrStatus::Invalid);
    assert_eq!(parse("Z/100 x Z/100").0, PrStatus::TooLarge);
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { pr_ring_parse(ptr::null(), &mut out) }, PrStatus::NullArgument);
    let bad = [0xffu8, 0];
    assert_eq!(unsafe { pr_ring_parse(bad.as_ptr().cast(), &mut out) }, PrStatus::InvalidUtf8);
    let (status, r) = parse("Z/5");
    assert_eq!(status, PrStatus::Ok);
    assert!(pr_last_error_message().is_null());
    unsafe { pr_ring_free(r) };
}

#[test]
fn null_handles_are_harmless() {
    unsafe {
        assert_eq!(pr_ring_size(ptr::null()), 0);
        assert_eq!(pr_ring_spectrum_len(ptr::null()), 0);
        let mut n = 0;
        assert_eq!(pr_ring_component_count(ptr::null(), &mut n), PrStatus::NullArgument);
        pr_ring_free(ptr::null_mut());
        pr_string_free(ptr::null_mut());
    }
}

#[test]
fn classification() {
    let (_, r) = parse("Z/4 x Z/9");
    let mut kind = PrClass::Wild;
    let mut factor = usize::MAX;
    unsafe {
        let gens = CString::new("(0,3),(1,0)").unwrap();
        assert_eq!(pr_classify_prime(r, gens.as_ptr(), &mut kind, &mut factor), PrStatus::Ok);
        assert_eq!((kind, factor), (PrClass::Tame, 1));
        let not_prime = CString::new("(0,1)").unwrap();
        assert_eq!(pr_classify_prime(r, not_prime.as_ptr(), &mut kind, ptr::null_mut()), PrStatus::NotPrime);
        let bad = CString::new("(9,9,9)").unwrap();
        assert_eq!(pr_classify_prime(r, bad.as_ptr(), &mut kind, ptr::null_mut()), PrStatus::Invalid);
        pr_ring_free(r);
    }
}

#[test]
fn verify_returns_json() {
    let id = CString::new("spec-oracle").unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { pr_verify(id.as_ptr(), 5, 10, ptr::null(), &mut out) }, PrStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take(out)).unwrap();
    assert_eq!(v["propertyId"], "spec-oracle");
    assert_eq!(v["checked"], 10);

    let inst = CString::new("Z/4 x Z/6").unwrap();
    let id = CString::new("components").unwrap();
    assert_eq!(unsafe { pr_verify(id.as_ptr(), 1, 0, inst.as_ptr(), &mut out) }, PrStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take(out)).unwrap();
    assert_eq!(v["status"], "pass");

    let id = CString::new("nope").unwrap();
    assert_eq!(unsafe { pr_verify(id.as_ptr(), 1, 0, ptr::null(), &mut out) }, PrStatus::UnknownProperty);
}

#[test]
fn header_is_valid_c() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR")).join("include/prodspec.h");
    let text = std::fs::read_to_string(&header).unwrap();
    for name in ["pr_ring_parse", "pr_verify", "pr_last_error_message", "PR_STATUS_NOT_PRIME"] {
        assert!(text.contains(name), "{name} missing from header");
    }
    match Command::new("cc").args(["-fsyntax-only", "-Wall", "-Werror", "-x", "c"]).arg(&header).status() {
        Ok(s) => assert!(s.success(), "header does not compile"),
        Err(_) => eprintln!("no C compiler found; skipping syntax check"),
    }
}
