//! Exercises the C ABI from Rust: handle lifecycle, status codes, and the
//! thread-local error message.

use std::ffi::{c_char, CStr, CString};
use std::path::Path;
use std::ptr;

use preasgsb_ffi::*;

fn parse(text: &str) -> *mut PgsbPresentation {
    let c = CString::new(text).unwrap();
    let mut handle = ptr::null_mut();
    let status = unsafe { pgsb_presentation_parse(c.as_ptr(), &mut handle) };
    assert_eq!(status, PgsbStatus::Ok);
    assert!(!handle.is_null());
    handle
}

fn take_string(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let owned = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { pgsb_string_free(s) };
    owned
}

fn last_error() -> String {
    take_string(pgsb_last_error_message())
}

const SQUARE: &str = "preasgsb-format 1\nalphabet: t\nrel: t*t\n";

#[test]
fn parse_and_render_round_trip() {
    let handle = parse(SQUARE);
    let mut text = ptr::null_mut();
    let status = unsafe { pgsb_presentation_to_string(handle, &mut text) };
    assert_eq!(status, PgsbStatus::Ok);
    assert_eq!(take_string(text), SQUARE);
    assert_eq!(unsafe { pgsb_relation_count(handle) }, 1);
    unsafe { pgsb_presentation_free(handle) };
}

#[test]
fn parse_failures_set_the_error_message() {
    let c = CString::new("preasgsb-format 1\nalphabet: t\nrel: t + qq\n").unwrap();
    let mut handle = ptr::null_mut();
    let status = unsafe { pgsb_presentation_parse(c.as_ptr(), &mut handle) };
    assert_eq!(status, PgsbStatus::ErrParse);
    assert!(handle.is_null());
    assert!(last_error().contains("unknown generator `qq`"));
}

#[test]
fn null_arguments_are_rejected() {
    let mut handle = ptr::null_mut();
    let status = unsafe { pgsb_presentation_parse(ptr::null(), &mut handle) };
    assert_eq!(status, PgsbStatus::ErrNull);
    let status = unsafe { pgsb_check(ptr::null(), 3, &mut 0usize) };
    assert_eq!(status, PgsbStatus::ErrNull);
    assert!(last_error().contains("NULL"));
}

#[test]
fn invalid_utf8_is_reported() {
    let bytes = b"preasgsb-format 1\xff\0";
    let mut handle = ptr::null_mut();
    let status = unsafe { pgsb_presentation_parse(bytes.as_ptr().cast::<c_char>(), &mut handle) };
    assert_eq!(status, PgsbStatus::ErrUtf8);
    assert!(handle.is_null());
}

#[test]
fn normal_form_reduces_and_reports_zero() {
    let handle = parse(SQUARE);
    let poly = CString::new("t*t + (t t)").unwrap();
    let mut text = ptr::null_mut();
    let status = unsafe { pgsb_normal_form(handle, poly.as_ptr(), &mut text) };
    assert_eq!(status, PgsbStatus::Ok);
    assert_eq!(take_string(text), "(t t)");

    let zero = CString::new("t*t").unwrap();
    let mut text = ptr::null_mut();
    let status = unsafe { pgsb_normal_form(handle, zero.as_ptr(), &mut text) };
    assert_eq!(status, PgsbStatus::Ok);
    assert_eq!(take_string(text), "ZERO");
    unsafe { pgsb_presentation_free(handle) };
}

#[test]
fn check_counts_failures() {
    let handle = parse(SQUARE);
    let mut failures = usize::MAX;
    let status = unsafe { pgsb_check(handle, 4, &mut failures) };
    assert_eq!(status, PgsbStatus::Ok);
    assert!(failures > 0, "the bare square relation is not closed");
    unsafe { pgsb_presentation_free(handle) };
}

#[test]
fn complete_produces_a_closed_system() {
    let handle = parse(SQUARE);
    let mut closed = ptr::null_mut();
    let mut converged = false;
    let status = unsafe { pgsb_complete(handle, 4, 32, &mut closed, &mut converged) };
    assert_eq!(status, PgsbStatus::Ok);
    assert!(converged);
    assert_eq!(unsafe { pgsb_relation_count(closed) }, 7);

    let mut failures = usize::MAX;
    let status = unsafe { pgsb_check(closed, 4, &mut failures) };
    assert_eq!(status, PgsbStatus::Ok);
    assert_eq!(failures, 0);

    let mut counts = [0usize; 4];
    let status = unsafe { pgsb_dims(closed, 4, counts.as_mut_ptr()) };
    assert_eq!(status, PgsbStatus::Ok);
    assert_eq!(counts, [1, 1, 2, 4]);

    unsafe { pgsb_presentation_free(closed) };
    unsafe { pgsb_presentation_free(handle) };
}

#[test]
fn dims_of_the_free_algebra_are_catalan() {
    let handle = parse("preasgsb-format 1\nalphabet: t\n");
    let mut counts = [0usize; 6];
    let status = unsafe { pgsb_dims(handle, 6, counts.as_mut_ptr()) };
    assert_eq!(status, PgsbStatus::Ok);
    assert_eq!(counts, [1, 2, 5, 14, 42, 132]);
    unsafe { pgsb_presentation_free(handle) };
}

#[test]
fn generated_header_declares_the_api() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("include")
        .join("preasgsb.h");
    let text = std::fs::read_to_string(header).expect("header generated");
    for name in [
        "pgsb_presentation_parse",
        "pgsb_presentation_to_string",
        "pgsb_presentation_free",
        "pgsb_normal_form",
        "pgsb_check",
        "pgsb_complete",
        "pgsb_dims",
        "pgsb_string_free",
        "pgsb_last_error_message",
        "PGSB_STATUS_OK",
    ] {
        assert!(text.contains(name), "header lacks {name}");
    }
}
