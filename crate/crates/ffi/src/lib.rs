//! C interface to `rigtrop`.
//!
//! Objects cross the boundary as opaque handles that the caller frees with the
//! matching `*_free` function. Every fallible call returns an [`RtStatus`];
//! on failure [`rt_last_error_message`] describes the error on the calling
//! thread. Strings returned by the library are released with
//! [`rt_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use rigtrop::boxball::{energy_ers, evolve_trs};
use rigtrop::cli::{parse_path, PathSpec};
use rigtrop::crystals::TensorElement;
use rigtrop::rigged::{phi, phi_inverse, RiggedConfiguration};
use rigtrop::tableaux::Partition;
use rigtrop::tropical::{conjectured_shape, first_shape_theorem};
use rigtrop::Error;

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RtStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidInput = 4,
    NonConvergence = 5,
    BufferTooSmall = 6,
    Internal = 7,
    Panic = 8,
}

/// A tensor product of one-row crystal elements.
pub struct RtPath(TensorElement);

/// A rigged configuration.
pub struct RtRiggedConfig(RiggedConfiguration);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: String) {
    let message = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(message));
}

struct Failure(RtStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::ParseError { .. } | Error::AlphabetError { .. } | Error::NotWeaklyIncreasing(_) => {
                RtStatus::ParseError
            }
            Error::NonConvergence(_) => RtStatus::NonConvergence,
            Error::InternalError(_) => RtStatus::Internal,
            _ => RtStatus::InvalidInput,
        };
        Failure(status, e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(RtStatus::NullPointer, format!("{what} is null"))
}

/// Runs `body`, recording any error or panic as the thread's last error.
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> RtStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => RtStatus::Ok,
        Ok(Err(Failure(status, message))) => {
            set_last_error(message);
            status
        }
        Err(_) => {
            set_last_error("panic inside rigtrop".into());
            RtStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(text: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if text.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(text)
        .to_str()
        .map_err(|e| Failure(RtStatus::InvalidUtf8, format!("{what}: {e}")))
}

unsafe fn deref<'a, T>(handle: *const T, what: &str) -> Result<&'a T, Failure> {
    handle.as_ref().ok_or_else(|| null(what))
}

unsafe fn write_out<T>(out: *mut T, value: T, what: &str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

fn to_c_string(text: String) -> Result<*mut c_char, Failure> {
    CString::new(text)
        .map(CString::into_raw)
        .map_err(|e| Failure(RtStatus::Internal, e.to_string()))
}

unsafe fn write_parts(
    shape: &Partition,
    buf: *mut usize,
    cap: usize,
    out_len: *mut usize,
) -> Result<(), Failure> {
    let parts = shape.parts();
    write_out(out_len, parts.len(), "out_len")?;
    if parts.len() > cap {
        return Err(Failure(
            RtStatus::BufferTooSmall,
            format!("shape has {} parts, buffer holds {cap}", parts.len()),
        ));
    }
    if !parts.is_empty() {
        if buf.is_null() {
            return Err(null("buf"));
        }
        ptr::copy_nonoverlapping(parts.as_ptr(), buf, parts.len());
    }
    Ok(())
}

/// Message for the last failed call on this thread, or null if none.
/// The pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn rt_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Frees a string returned by this library.
///
/// # Safety
/// `s` must be null or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn rt_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a path such as `"n=3; 12,3,22"` into a new handle.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rt_path_parse(text: *const c_char, out: *mut *mut RtPath) -> RtStatus {
    guard(|| {
        let text = read_str(text, "text")?;
        let path = parse_path(text)?.to_tensor()?;
        write_out(out, Box::into_raw(Box::new(RtPath(path))), "out")
    })
}

/// # Safety
/// `path` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn rt_path_free(path: *mut RtPath) {
    if !path.is_null() {
        drop(Box::from_raw(path));
    }
}

/// Writes the path in the same text form [`rt_path_parse`] reads.
///
/// # Safety
/// `path` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rt_path_to_string(path: *const RtPath, out: *mut *mut c_char) -> RtStatus {
    guard(|| {
        let path = deref(path, "path")?;
        let text = PathSpec::from_tensor(&path.0)?.to_string();
        write_out(out, to_c_string(text)?, "out")
    })
}

/// Number of tensor factors.
///
/// # Safety
/// `path` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rt_path_len(path: *const RtPath) -> usize {
    path.as_ref().map_or(0, |p| p.0.len())
}

/// Number of letters other than 1.
///
/// # Safety
/// `path` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rt_path_ball_count(path: *const RtPath) -> usize {
    path.as_ref().map_or(0, |p| p.0.ball_count())
}

/// One carrier sweep `T^{r,s}`; the result is a new handle.
///
/// # Safety
/// `path` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rt_path_evolve(
    path: *const RtPath,
    r: usize,
    s: usize,
    out: *mut *mut RtPath,
) -> RtStatus {
    guard(|| {
        let path = deref(path, "path")?;
        let (next, _) = evolve_trs(&path.0, r, s)?;
        write_out(out, Box::into_raw(Box::new(RtPath(next))), "out")
    })
}

/// The energy `E^{r,s}` collected by one carrier sweep.
///
/// # Safety
/// `path` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rt_path_energy(
    path: *const RtPath,
    r: usize,
    s: usize,
    out: *mut usize,
) -> RtStatus {
    guard(|| {
        let path = deref(path, "path")?;
        write_out(out, energy_ers(&path.0, r, s)?, "out")
    })
}

/// Shape `ν^{(1)}` from the tropical formula. Writes up to `cap` parts to
/// `buf` and the number of parts to `out_len`; returns `BufferTooSmall`
/// (with `out_len` set) when `cap` is short.
///
/// # Safety
/// `path` must be a live handle; `buf` must hold `cap` values; `out_len`
/// must be writable.
#[no_mangle]
pub unsafe extern "C" fn rt_first_shape(
    path: *const RtPath,
    buf: *mut usize,
    cap: usize,
    out_len: *mut usize,
) -> RtStatus {
    guard(|| {
        let path = deref(path, "path")?;
        write_parts(&first_shape_theorem(&path.0)?, buf, cap, out_len)
    })
}

/// Shape `ν^{(s)}` from the cylindric loop Schur conjecture; buffer rules
/// as in [`rt_first_shape`].
///
/// # Safety
/// Same as [`rt_first_shape`].
#[no_mangle]
pub unsafe extern "C" fn rt_conjectured_shape(
    path: *const RtPath,
    s: usize,
    buf: *mut usize,
    cap: usize,
    out_len: *mut usize,
) -> RtStatus {
    guard(|| {
        let path = deref(path, "path")?;
        write_parts(&conjectured_shape(&path.0, s)?, buf, cap, out_len)
    })
}

/// Runs the bijection `Φ`.
///
/// # Safety
/// `path` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rt_phi(path: *const RtPath, out: *mut *mut RtRiggedConfig) -> RtStatus {
    guard(|| {
        let path = deref(path, "path")?;
        let rc = phi(&path.0)?;
        write_out(out, Box::into_raw(Box::new(RtRiggedConfig(rc))), "out")
    })
}

/// Runs `Φ⁻¹`, cutting the result into factors of widths `order[0..len]`.
///
/// # Safety
/// `rc` must be a live handle; `order` must hold `len` values; `out` must
/// be writable.
#[no_mangle]
pub unsafe extern "C" fn rt_phi_inverse(
    rc: *const RtRiggedConfig,
    order: *const usize,
    len: usize,
    out: *mut *mut RtPath,
) -> RtStatus {
    guard(|| {
        let rc = deref(rc, "rc")?;
        let order = if len == 0 {
            &[][..]
        } else if order.is_null() {
            return Err(null("order"));
        } else {
            std::slice::from_raw_parts(order, len)
        };
        let path = phi_inverse(&rc.0, order)?;
        write_out(out, Box::into_raw(Box::new(RtPath(path))), "out")
    })
}

/// Reads a rigged configuration from JSON.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rt_rc_from_json(
    json: *const c_char,
    out: *mut *mut RtRiggedConfig,
) -> RtStatus {
    guard(|| {
        let json = read_str(json, "json")?;
        let rc = RiggedConfiguration::from_json(json)?;
        write_out(out, Box::into_raw(Box::new(RtRiggedConfig(rc))), "out")
    })
}

/// # Safety
/// `rc` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rt_rc_to_json(rc: *const RtRiggedConfig, out: *mut *mut c_char) -> RtStatus {
    guard(|| {
        let rc = deref(rc, "rc")?;
        write_out(out, to_c_string(rc.0.to_json())?, "out")
    })
}

/// # Safety
/// `rc` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn rt_rc_free(rc: *mut RtRiggedConfig) {
    if !rc.is_null() {
        drop(Box::from_raw(rc));
    }
}
