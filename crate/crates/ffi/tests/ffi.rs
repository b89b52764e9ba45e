use std::ffi::{c_char, CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use rigtrop_ffi::*;

fn parse(text: &str) -> *mut RtPath {
    let text = CString::new(text).unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { rt_path_parse(text.as_ptr(), &mut out) }, RtStatus::Ok);
    assert!(!out.is_null());
    out
}

fn take_string(s: *mut c_char) -> String {
    let text = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { rt_string_free(s) };
    text
}

fn last_error() -> String {
    let p = rt_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned()
}

#[test]
fn path_round_trip() {
    let p = parse("n=3; 12,3,22");
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { rt_path_to_string(p, &mut s) }, RtStatus::Ok);
    assert_eq!(take_string(s), "n=3; 12,3,22");
    assert_eq!(unsafe { rt_path_len(p) }, 3);
    assert_eq!(unsafe { rt_path_ball_count(p) }, 4);
    unsafe { rt_path_free(p) };
}

#[test]
fn parse_errors_set_message() {
    let bad = CString::new("n=2; 13").unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { rt_path_parse(bad.as_ptr(), &mut out) }, RtStatus::ParseError);
    assert!(out.is_null());
    assert!(last_error().contains("alphabet"));

    let descending = CString::new("n=3; 21").unwrap();
    assert_eq!(unsafe { rt_path_parse(descending.as_ptr(), &mut out) }, RtStatus::ParseError);
}

#[test]
fn null_arguments_are_rejected() {
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { rt_path_parse(ptr::null(), &mut out) }, RtStatus::NullPointer);
    let mut energy = 0usize;
    assert_eq!(unsafe { rt_path_energy(ptr::null(), 1, 1, &mut energy) }, RtStatus::NullPointer);
    assert_eq!(unsafe { rt_path_len(ptr::null()) }, 0);
    unsafe {
        rt_path_free(ptr::null_mut());
        rt_rc_free(ptr::null_mut());
        rt_string_free(ptr::null_mut());
    }
}

#[test]
fn box_ball_step_and_energy() {
    let p = parse("n=3; 2,3,1,1,1,1");
    let mut next = ptr::null_mut();
    assert_eq!(unsafe { rt_path_evolve(p, 1, 3, &mut next) }, RtStatus::Ok);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { rt_path_to_string(next, &mut s) }, RtStatus::Ok);
    assert_eq!(take_string(s), "n=3; 1,2,3,1,1,1");
    let mut energy = 0usize;
    assert_eq!(unsafe { rt_path_energy(p, 1, 3, &mut energy) }, RtStatus::Ok);
    assert_eq!(energy, 2);
    unsafe {
        rt_path_free(next);
        rt_path_free(p);
    }
}

#[test]
fn shapes_fill_caller_buffer() {
    let p = parse("n=3; 3,3,2,1,1,1");
    let mut len = 0usize;
    assert_eq!(
        unsafe { rt_first_shape(p, ptr::null_mut(), 0, &mut len) },
        RtStatus::BufferTooSmall
    );
    assert_eq!(len, 1);
    let mut buf = [0usize; 4];
    assert_eq!(unsafe { rt_first_shape(p, buf.as_mut_ptr(), buf.len(), &mut len) }, RtStatus::Ok);
    assert_eq!(&buf[..len], &[3]);
    assert_eq!(
        unsafe { rt_conjectured_shape(p, 1, buf.as_mut_ptr(), buf.len(), &mut len) },
        RtStatus::Ok
    );
    assert_eq!(&buf[..len], &[3]);
    unsafe { rt_path_free(p) };
}

#[test]
fn phi_through_json_and_back() {
    let p = parse("n=4; 2,24,3,1,14");
    let mut rc = ptr::null_mut();
    assert_eq!(unsafe { rt_phi(p, &mut rc) }, RtStatus::Ok);
    let mut json = ptr::null_mut();
    assert_eq!(unsafe { rt_rc_to_json(rc, &mut json) }, RtStatus::Ok);
    let json = CString::new(take_string(json)).unwrap();
    let mut rc2 = ptr::null_mut();
    assert_eq!(unsafe { rt_rc_from_json(json.as_ptr(), &mut rc2) }, RtStatus::Ok);

    let widths = [1usize, 2, 1, 1, 2];
    let mut back = ptr::null_mut();
    assert_eq!(
        unsafe { rt_phi_inverse(rc2, widths.as_ptr(), widths.len(), &mut back) },
        RtStatus::Ok
    );
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { rt_path_to_string(back, &mut s) }, RtStatus::Ok);
    assert_eq!(take_string(s), "n=4; 2,24,3,1,14");

    let bad = CString::new("{\"n\": 3}").unwrap();
    let mut out = ptr::null_mut();
    assert_ne!(unsafe { rt_rc_from_json(bad.as_ptr(), &mut out) }, RtStatus::Ok);
    assert!(out.is_null());
    unsafe {
        rt_path_free(back);
        rt_rc_free(rc2);
        rt_rc_free(rc);
        rt_path_free(p);
    }
}

#[test]
fn header_is_valid_c() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR")).join("include/rigtrop.h");
    let text = std::fs::read_to_string(&header).unwrap();
    for name in ["rt_path_parse", "rt_phi_inverse", "rt_last_error_message", "RT_STATUS_OK"] {
        assert!(text.contains(name), "{name} missing from header");
    }
    let Ok(status) = Command::new("cc")
        .args(["-fsyntax-only", "-Wall", "-Werror", "-x", "c"])
        .arg(&header)
        .status()
    else {
        eprintln!("no C compiler, skipping syntax check");
        return;
    };
    assert!(status.success());
}
