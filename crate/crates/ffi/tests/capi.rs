use std::ffi::{c_char, CStr, CString};
use std::ptr;

use hurwitz_ffi::*;

fn take_string(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let owned = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { hurwitz_string_free(s) };
    owned
}

fn last_error() -> String {
    let p = hurwitz_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned()
}

fn parse(literal: &str) -> *mut HurwitzPartition {
    let c = CString::new(literal).unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { hurwitz_partition_parse(c.as_ptr(), &mut out) }, HurwitzStatus::Ok);
    out
}

#[test]
fn partition_round_trip() {
    let p = parse("2,3,2");
    unsafe {
        assert_eq!(hurwitz_partition_degree(p), 7);
        assert_eq!(hurwitz_partition_length(p), 3);
        let mut s = ptr::null_mut();
        assert_eq!(hurwitz_partition_to_string(p, &mut s), HurwitzStatus::Ok);
        assert_eq!(take_string(s), "(3,2,2)");
        hurwitz_partition_free(p);
    }
}

#[test]
fn count_genus_one_three_cycle() {
    let p = parse("3");
    unsafe {
        for method in [HurwitzMethod::Oracle, HurwitzMethod::Cutjoin, HurwitzMethod::Closed] {
            let mut rec = ptr::null_mut();
            assert_eq!(hurwitz_count(p, 1, method as u32, &mut rec), HurwitzStatus::Ok);
            assert_eq!(hurwitz_record_r(rec), 4);
            let mut s = ptr::null_mut();
            assert_eq!(hurwitz_record_count(rec, &mut s), HurwitzStatus::Ok);
            assert_eq!(take_string(s), "27");
            assert_eq!(hurwitz_record_mu(rec, &mut s), HurwitzStatus::Ok);
            assert_eq!(take_string(s), "9");
            hurwitz_record_free(rec);
        }
        hurwitz_partition_free(p);
    }
}

#[test]
fn errors_set_status_and_message() {
    let bad = CString::new("3,x").unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { hurwitz_partition_parse(bad.as_ptr(), &mut out) }, HurwitzStatus::Parse);
    assert!(out.is_null());
    assert!(!last_error().is_empty());

    assert_eq!(unsafe { hurwitz_partition_parse(ptr::null(), &mut out) }, HurwitzStatus::NullPointer);
    assert!(last_error().contains("null"));

    let p = parse("8");
    let mut rec = ptr::null_mut();
    unsafe {
        assert_eq!(hurwitz_count(p, 0, HurwitzMethod::Oracle as u32, &mut rec), HurwitzStatus::Size);
        assert_eq!(hurwitz_count(p, 0, 17, &mut rec), HurwitzStatus::InvalidArgument);
        assert!(last_error().contains("method"));
        assert!(rec.is_null());
        assert_eq!(hurwitz_count(ptr::null(), 0, 0, &mut rec), HurwitzStatus::NullPointer);
        hurwitz_partition_free(p);
    }
}

#[test]
fn null_handles_are_tolerated() {
    unsafe {
        hurwitz_partition_free(ptr::null_mut());
        hurwitz_record_free(ptr::null_mut());
        hurwitz_string_free(ptr::null_mut());
        assert_eq!(hurwitz_partition_degree(ptr::null()), 0);
        assert_eq!(hurwitz_record_r(ptr::null()), 0);
        let mut s = ptr::null_mut();
        assert_eq!(hurwitz_record_mu(ptr::null(), &mut s), HurwitzStatus::NullPointer);
    }
}

#[test]
fn verify_report() {
    let mut report = ptr::null_mut();
    let mut passed = false;
    assert_eq!(unsafe { hurwitz_verify(6, 6, 1, &mut report, &mut passed) }, HurwitzStatus::Ok);
    assert!(passed);
    let json = take_string(report);
    assert!(json.contains("\"u3_exact\""));
    assert!(!json.contains("\"fail\""));

    assert_eq!(unsafe { hurwitz_verify(6, 3, 1, &mut report, &mut passed) }, HurwitzStatus::InvalidArgument);
}

#[test]
fn version_is_static() {
    let v = unsafe { CStr::from_ptr(hurwitz_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}

#[test]
fn header_declares_the_surface() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/hurwitz.h")).unwrap();
    for name in [
        "hurwitz_partition_parse",
        "hurwitz_partition_free",
        "hurwitz_count",
        "hurwitz_record_mu",
        "hurwitz_verify",
        "hurwitz_string_free",
        "hurwitz_last_error_message",
        "typedef struct HurwitzPartition HurwitzPartition",
        "HURWITZ_STATUS_SIZE",
        "HURWITZ_METHOD_CLOSED",
    ] {
        assert!(header.contains(name), "header lacks {name}");
    }
}

#[test]
fn header_compiles_as_c() {
    let header = concat!(env!("CARGO_MANIFEST_DIR"), "/include/hurwitz.h");
    match std::process::Command::new("cc").args(["-fsyntax-only", "-Wall", "-Werror", "-x", "c", header]).output() {
        Ok(o) => assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr)),
        Err(_) => eprintln!("no C compiler; skipped"),
    }
}
