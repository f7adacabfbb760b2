//! C ABI over `spclosure`.
//!
//! Every fallible call returns a [`ClStatus`]; on anything but `CL_STATUS_OK`
//! the message is available from [`cl_last_error_message`] on the same
//! thread. Handles and strings returned through out-pointers are owned by the
//! caller and released with the matching `*_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use spclosure::frobenius::{frobenius_member, special_frobenius_member, BoundedVerdict};
use spclosure::monomial::{ExponentVector, MonomialIdeal};
use spclosure::newton::{
    contains_integral, contains_special_integral, decomposition_holds, integral_closure,
    special_integral_closure,
};
use spclosure::parse::{
    format_monomial_ideal, parse_monomial_ideal, parse_polynomial, parse_polynomial_list,
    parse_ring_spec, parse_var_list,
};
use spclosure::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidArgument = 4,
    DimensionMismatch = 5,
    CharacteristicMismatch = 6,
    Unsupported = 7,
    Overflow = 8,
    NoWitness = 9,
    Panic = 10,
}

impl From<&Error> for ClStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::Parse(_) => ClStatus::Parse,
            Error::InvalidArgument(_) => ClStatus::InvalidArgument,
            Error::DimensionMismatch { .. } => ClStatus::DimensionMismatch,
            Error::CharacteristicMismatch(..) => ClStatus::CharacteristicMismatch,
            Error::Unsupported(_) => ClStatus::Unsupported,
            Error::Overflow => ClStatus::Overflow,
            Error::NoWitness(_) => ClStatus::NoWitness,
        }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

struct Failure(ClStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(ClStatus::from(&e), e.to_string())
    }
}

fn guard(body: impl FnOnce() -> Result<(), Failure>) -> ClStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => ClStatus::Ok,
        Ok(Err(Failure(status, message))) => {
            set_last_error(message);
            status
        }
        Err(_) => {
            set_last_error("internal panic".to_string());
            ClStatus::Panic
        }
    }
}

/// # Safety
/// `s` is NULL or a NUL-terminated string valid for the call.
unsafe fn text<'a>(s: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(Failure(ClStatus::NullPointer, format!("{what} is NULL")));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Failure(ClStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

fn non_null<T>(p: *const T, what: &str) -> Result<(), Failure> {
    if p.is_null() {
        Err(Failure(ClStatus::NullPointer, format!("{what} is NULL")))
    } else {
        Ok(())
    }
}

fn parse_failure(what: &str, e: spclosure::ParseError) -> Failure {
    Failure(ClStatus::Parse, format!("{what}: {e}"))
}

/// A monomial ideal together with its variable names.
pub struct ClMonomialIdeal {
    names: Vec<String>,
    ideal: MonomialIdeal,
}

/// The message for the last failed call on this thread, or NULL. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn cl_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Parses `ideal` (e.g. "x^2*y, y^3") over the comma-separated `vars`.
///
/// # Safety
/// `vars` and `ideal` are NUL-terminated strings; `out` is a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cl_monomial_ideal_parse(
    vars: *const c_char,
    ideal: *const c_char,
    out: *mut *mut ClMonomialIdeal,
) -> ClStatus {
    guard(|| {
        non_null(out, "out")?;
        let vars = text(vars, "vars")?;
        let ideal = text(ideal, "ideal")?;
        let names = parse_var_list(vars).map_err(|e| parse_failure("vars", e))?;
        let ideal = parse_monomial_ideal(ideal, &names).map_err(|e| parse_failure("ideal", e))?;
        *out = Box::into_raw(Box::new(ClMonomialIdeal { names, ideal }));
        Ok(())
    })
}

/// # Safety
/// `handle` is NULL or came from this library and has not been freed.
#[no_mangle]
pub unsafe extern "C" fn cl_monomial_ideal_free(handle: *mut ClMonomialIdeal) {
    if !handle.is_null() {
        drop(Box::from_raw(handle));
    }
}

/// Number of variables, or 0 for a NULL handle.
///
/// # Safety
/// `handle` is NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cl_monomial_ideal_num_vars(handle: *const ClMonomialIdeal) -> usize {
    handle.as_ref().map_or(0, |h| h.names.len())
}

/// Number of minimal generators, or 0 for a NULL handle.
///
/// # Safety
/// `handle` is NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cl_monomial_ideal_num_generators(handle: *const ClMonomialIdeal) -> usize {
    handle.as_ref().map_or(0, |h| h.ideal.len())
}

/// Writes the generators in text form, e.g. "x^2, x*y, y^2". Release with
/// [`cl_string_free`].
///
/// # Safety
/// `handle` is a live handle; `out` is a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cl_monomial_ideal_to_string(
    handle: *const ClMonomialIdeal,
    out: *mut *mut c_char,
) -> ClStatus {
    guard(|| {
        non_null(handle, "handle")?;
        non_null(out, "out")?;
        let h = &*handle;
        let s = format_monomial_ideal(&h.ideal, &h.names);
        *out = CString::new(s).expect("no NUL in output").into_raw();
        Ok(())
    })
}

/// # Safety
/// `s` is NULL or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cl_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

unsafe fn derive_ideal(
    handle: *const ClMonomialIdeal,
    out: *mut *mut ClMonomialIdeal,
    f: fn(&MonomialIdeal) -> spclosure::Result<MonomialIdeal>,
) -> ClStatus {
    guard(|| {
        non_null(handle, "handle")?;
        non_null(out, "out")?;
        let h = &*handle;
        let ideal = f(&h.ideal)?;
        *out = Box::into_raw(Box::new(ClMonomialIdeal {
            names: h.names.clone(),
            ideal,
        }));
        Ok(())
    })
}

/// The integral closure as a new handle.
///
/// # Safety
/// `handle` is a live handle; `out` is a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cl_integral_closure(
    handle: *const ClMonomialIdeal,
    out: *mut *mut ClMonomialIdeal,
) -> ClStatus {
    derive_ideal(handle, out, integral_closure)
}

/// The special part of the integral closure as a new handle.
///
/// # Safety
/// `handle` is a live handle; `out` is a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cl_special_integral_closure(
    handle: *const ClMonomialIdeal,
    out: *mut *mut ClMonomialIdeal,
) -> ClStatus {
    derive_ideal(handle, out, special_integral_closure)
}

/// Whether x^α lies in the integral closure (or, with `special`, in its
/// special part). `exponents` holds one entry per variable.
///
/// # Safety
/// `handle` is a live handle; `exponents` points to `len` readable values;
/// `out` is a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cl_contains_integral(
    handle: *const ClMonomialIdeal,
    exponents: *const u32,
    len: usize,
    special: bool,
    out: *mut bool,
) -> ClStatus {
    guard(|| {
        non_null(handle, "handle")?;
        non_null(out, "out")?;
        let coords = if len == 0 {
            Vec::new()
        } else {
            non_null(exponents, "exponents")?;
            std::slice::from_raw_parts(exponents, len).to_vec()
        };
        let alpha = ExponentVector::new(coords);
        let h = &*handle;
        let result = if special {
            contains_special_integral(&h.ideal, &alpha)?
        } else {
            contains_integral(&h.ideal, &alpha)?
        };
        *out = result.is_in();
        Ok(())
    })
}

/// Whether the integral closure equals I plus its special part.
///
/// # Safety
/// `handle` is a live handle; `out` is a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cl_decomposition_holds(
    handle: *const ClMonomialIdeal,
    out: *mut bool,
) -> ClStatus {
    guard(|| {
        non_null(handle, "handle")?;
        non_null(out, "out")?;
        *out = decomposition_holds(&(*handle).ideal)?.holds;
        Ok(())
    })
}

/// Bounded Frobenius-closure membership of `element` in the ideal generated
/// by the comma-separated `ideal` inside the ring `ring`, e.g.
/// "F2[x,y,z]/(x^3+y^3+z^3)". With `special`, tests the special part.
/// Writes the smallest e ≤ `e_max` found, or -1 when the search failed.
///
/// # Safety
/// The strings are NUL-terminated; `out_e` is a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cl_frobenius_member(
    ring: *const c_char,
    ideal: *const c_char,
    element: *const c_char,
    e_max: u32,
    special: bool,
    out_e: *mut i64,
) -> ClStatus {
    guard(|| {
        non_null(out_e, "out_e")?;
        let spec = parse_ring_spec(text(ring, "ring")?).map_err(|e| parse_failure("ring", e))?;
        let gens = parse_polynomial_list(text(ideal, "ideal")?, &spec.names, spec.p)
            .map_err(|e| parse_failure("ideal", e))?;
        let z = parse_polynomial(text(element, "element")?, &spec.names, spec.p)
            .map_err(|e| parse_failure("element", e))?;
        let ring = spec.build()?;
        let verdict = if special {
            special_frobenius_member(&z, &gens, &ring, e_max)?
        } else {
            frobenius_member(&z, &gens, &ring, e_max)?
        };
        *out_e = match verdict {
            BoundedVerdict::In(w) => i64::from(w.e),
            BoundedVerdict::NotInUpTo { .. } => -1,
        };
        Ok(())
    })
}
