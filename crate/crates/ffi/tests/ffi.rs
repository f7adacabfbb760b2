use std::ffi::{CStr, CString};
use std::ptr;

use spclosure_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn parse(vars: &str, ideal: &str) -> *mut ClMonomialIdeal {
    let mut h = ptr::null_mut();
    let status = unsafe { cl_monomial_ideal_parse(c(vars).as_ptr(), c(ideal).as_ptr(), &mut h) };
    assert_eq!(status, ClStatus::Ok);
    assert!(!h.is_null());
    h
}

fn text(h: *const ClMonomialIdeal) -> String {
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { cl_monomial_ideal_to_string(h, &mut s) }, ClStatus::Ok);
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { cl_string_free(s) };
    out
}

fn last_error() -> String {
    let p = cl_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn closures_through_handles() {
    let i = parse("x,y", "y^2, x^2");
    assert_eq!(unsafe { cl_monomial_ideal_num_vars(i) }, 2);
    assert_eq!(unsafe { cl_monomial_ideal_num_generators(i) }, 2);
    assert_eq!(text(i), "x^2, y^2");

    let mut closure = ptr::null_mut();
    assert_eq!(unsafe { cl_integral_closure(i, &mut closure) }, ClStatus::Ok);
    assert_eq!(text(closure), "x^2, x*y, y^2");
    let mut sp = ptr::null_mut();
    assert_eq!(unsafe { cl_special_integral_closure(i, &mut sp) }, ClStatus::Ok);
    assert_eq!(text(sp), "x^3, x^2*y, x*y^2, y^3");

    let mut inside = false;
    let alpha = [1u32, 1];
    assert_eq!(unsafe { cl_contains_integral(i, alpha.as_ptr(), 2, false, &mut inside) }, ClStatus::Ok);
    assert!(inside);
    assert_eq!(unsafe { cl_contains_integral(i, alpha.as_ptr(), 2, true, &mut inside) }, ClStatus::Ok);
    assert!(!inside);

    let mut holds = true;
    assert_eq!(unsafe { cl_decomposition_holds(i, &mut holds) }, ClStatus::Ok);
    assert!(!holds);

    unsafe {
        cl_monomial_ideal_free(sp);
        cl_monomial_ideal_free(closure);
        cl_monomial_ideal_free(i);
        cl_monomial_ideal_free(ptr::null_mut());
        cl_string_free(ptr::null_mut());
    }
}

#[test]
fn frobenius_membership() {
    let ring = c("F2[x,y,z]/(x^3+y^3+z^3)");
    let ideal = c("x,y");
    let mut e = 0i64;
    let status = unsafe { cl_frobenius_member(ring.as_ptr(), ideal.as_ptr(), c("z^2").as_ptr(), 4, true, &mut e) };
    assert_eq!((status, e), (ClStatus::Ok, 1));
    let status = unsafe { cl_frobenius_member(ring.as_ptr(), ideal.as_ptr(), c("z").as_ptr(), 2, false, &mut e) };
    assert_eq!((status, e), (ClStatus::Ok, -1));
    let status = unsafe { cl_frobenius_member(c("F4[x]").as_ptr(), c("x").as_ptr(), c("x").as_ptr(), 2, false, &mut e) };
    assert_eq!(status, ClStatus::Parse);
}

#[test]
fn errors_set_codes_and_messages() {
    let mut h = ptr::null_mut();
    let status = unsafe { cl_monomial_ideal_parse(c("x,y").as_ptr(), c("x^2, q").as_ptr(), &mut h) };
    assert_eq!(status, ClStatus::Parse);
    assert!(h.is_null());
    assert!(last_error().contains("position 5"), "{}", last_error());

    let status = unsafe { cl_monomial_ideal_parse(ptr::null(), c("x").as_ptr(), &mut h) };
    assert_eq!(status, ClStatus::NullPointer);
    let status = unsafe { cl_monomial_ideal_parse(c("x").as_ptr(), c("x").as_ptr(), ptr::null_mut()) };
    assert_eq!(status, ClStatus::NullPointer);

    let bad = [0xffu8, 0];
    let status = unsafe { cl_monomial_ideal_parse(bad.as_ptr().cast(), c("x").as_ptr(), &mut h) };
    assert_eq!(status, ClStatus::InvalidUtf8);

    let i = parse("x,y", "x^2, y^2");
    let mut inside = false;
    let alpha = [1u32, 1, 1];
    let status = unsafe { cl_contains_integral(i, alpha.as_ptr(), 3, false, &mut inside) };
    assert_eq!(status, ClStatus::DimensionMismatch);
    let status = unsafe { cl_contains_integral(i, alpha.as_ptr(), 2, false, ptr::null_mut()) };
    assert_eq!(status, ClStatus::NullPointer);
    unsafe { cl_monomial_ideal_free(i) };

    let zero = parse("x,y", "0");
    let status = unsafe { cl_contains_integral(zero, alpha.as_ptr(), 2, false, &mut inside) };
    assert_eq!(status, ClStatus::InvalidArgument);
    unsafe { cl_monomial_ideal_free(zero) };

    assert_eq!(unsafe { cl_monomial_ideal_num_vars(ptr::null()) }, 0);
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { cl_integral_closure(ptr::null(), &mut out) }, ClStatus::NullPointer);
}

#[test]
fn header_declares_the_interface() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/spclosure.h")).unwrap();
    for name in [
        "SPCLOSURE_H",
        "ClMonomialIdeal",
        "CL_STATUS_OK",
        "cl_last_error_message",
        "cl_monomial_ideal_parse",
        "cl_monomial_ideal_free",
        "cl_monomial_ideal_to_string",
        "cl_string_free",
        "cl_integral_closure",
        "cl_special_integral_closure",
        "cl_contains_integral",
        "cl_decomposition_holds",
        "cl_frobenius_member",
    ] {
        assert!(header.contains(name), "header lacks {name}");
    }
}
