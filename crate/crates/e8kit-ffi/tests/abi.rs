//! Calls through the C ABI and checks the generated header.

use std::ffi::{CStr, CString};
use std::ptr;

use e8kit::orbits::wreduce::random_w_point;
use e8kit::space::Vector;
use e8kit_ffi::*;
use rand::SeedableRng;

fn last_error() -> String {
    unsafe { CStr::from_ptr(e8_last_error()) }.to_str().unwrap().to_owned()
}

fn element(k: usize) -> *mut E8Element {
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { e8_element_basis(k, &mut out) }, E8Status::Ok);
    out
}

fn coords(x: *const E8Element) -> (Vec<f64>, Vec<f64>) {
    let (mut re, mut im) = (vec![0.0; E8_DIM], vec![0.0; E8_DIM]);
    assert_eq!(unsafe { e8_element_coords(x, re.as_mut_ptr(), im.as_mut_ptr(), E8_DIM) }, E8Status::Ok);
    (re, im)
}

#[test]
fn elements_round_trip_through_coordinates() {
    let re: Vec<f64> = (0..E8_DIM).map(|k| k as f64 * 0.5).collect();
    let im: Vec<f64> = (0..E8_DIM).map(|k| -(k as f64)).collect();
    let mut x = ptr::null_mut();
    assert_eq!(unsafe { e8_element_new(re.as_ptr(), im.as_ptr(), E8_DIM, &mut x) }, E8Status::Ok);
    assert_eq!(coords(x), (re, im));
    unsafe { e8_element_free(x) };
}

#[test]
fn bracket_of_the_slot_units_matches_the_library() {
    let (r, t) = (element(245), element(247));
    let mut rt = ptr::null_mut();
    assert_eq!(unsafe { e8_element_bracket(r, t, &mut rt) }, E8Status::Ok);
    let direct = e8kit::e8::E8::<num_complex::Complex64>::one_r().bracket(&e8kit::e8::E8::one_t());
    let (re, im) = coords(rt);
    for (k, z) in direct.to_coords().iter().enumerate() {
        assert_eq!((re[k], im[k]), (z.re, z.im));
    }
    unsafe {
        e8_element_free(r);
        e8_element_free(t);
        e8_element_free(rt);
    }
}

#[test]
fn sigma4_has_order_four() {
    for k in [0, 100, 133, 200, 246] {
        let x = element(k);
        let mut y = ptr::null_mut();
        assert_eq!(unsafe { e8_element_sigma4(x, 4, &mut y) }, E8Status::Ok);
        assert_eq!(coords(y), coords(x));
        let mut z = ptr::null_mut();
        assert_eq!(unsafe { e8_element_sigma4(x, 2, &mut z) }, E8Status::Ok);
        let mut direct = e8kit::e8::E8::<num_complex::Complex64>::basis(k);
        direct = direct.sigma4().sigma4();
        assert_eq!(coords(z).0, direct.to_coords().iter().map(|c| c.re).collect::<Vec<_>>());
        unsafe {
            e8_element_free(x);
            e8_element_free(y);
            e8_element_free(z);
        }
    }
}

#[test]
fn bad_arguments_set_status_and_message() {
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { e8_element_basis(248, &mut out) }, E8Status::InvalidArgument);
    assert!(last_error().contains("out of range"));
    assert!(out.is_null());
    assert_eq!(unsafe { e8_element_basis(0, ptr::null_mut()) }, E8Status::NullPointer);
    let v = [0.0; 3];
    assert_eq!(unsafe { e8_element_new(v.as_ptr(), v.as_ptr(), 3, &mut out) }, E8Status::InvalidArgument);
    let nan = [f64::NAN; E8_DIM];
    assert_eq!(unsafe { e8_element_new(nan.as_ptr(), nan.as_ptr(), E8_DIM, &mut out) }, E8Status::InvalidArgument);
    unsafe { e8_element_free(ptr::null_mut()) };
    assert_eq!(unsafe { e8_report_exit_code(ptr::null()) }, -1);
    assert!(unsafe { e8_witness_json(ptr::null()) }.is_null());
}

#[test]
fn reports_run_and_configuration_errors_are_distinguished() {
    let (suite, exact) = (CString::new("dims").unwrap(), CString::new("exact").unwrap());
    let mut r = ptr::null_mut();
    assert_eq!(unsafe { e8_report_run(suite.as_ptr(), exact.as_ptr(), 1e-9, 0, -1, &mut r) }, E8Status::Ok);
    assert_eq!(unsafe { e8_report_exit_code(r) }, 0);
    let n = unsafe { e8_report_check_count(r) };
    let json: serde_json::Value =
        serde_json::from_str(unsafe { CStr::from_ptr(e8_report_json(r)) }.to_str().unwrap()).unwrap();
    assert_eq!(json["checks"].as_array().unwrap().len(), n);
    assert_eq!(json["summary"]["failed"], 0);
    unsafe { e8_report_free(r) };

    let orbits = CString::new("orbits").unwrap();
    let mut r = ptr::null_mut();
    assert_eq!(unsafe { e8_report_run(orbits.as_ptr(), exact.as_ptr(), 1e-9, 0, -1, &mut r) }, E8Status::Config);
    assert!(r.is_null());
    assert!(!last_error().is_empty());
    let bogus = CString::new("bogus").unwrap();
    assert_eq!(unsafe { e8_report_run(bogus.as_ptr(), exact.as_ptr(), 1e-9, 0, -1, &mut r) }, E8Status::Config);
}

#[test]
fn w_reduction_witnesses_replay_to_the_unit() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
    for _ in 0..3 {
        let p = random_w_point(0.5, &mut rng);
        let c = p.to_coords();
        let re: Vec<f64> = c.iter().map(|z| z.re).collect();
        let im: Vec<f64> = c.iter().map(|z| z.im).collect();
        let mut x = ptr::null_mut();
        assert_eq!(unsafe { e8_element_new(re.as_ptr(), im.as_ptr(), E8_DIM, &mut x) }, E8Status::Ok);
        let mut w = ptr::null_mut();
        assert_eq!(unsafe { e8_reduce_w(x, 1e-9, 7, &mut w) }, E8Status::Ok, "{}", last_error());
        assert!(unsafe { e8_witness_residual(w) } < 1e-9);
        let json: serde_json::Value =
            serde_json::from_str(unsafe { CStr::from_ptr(e8_witness_json(w)) }.to_str().unwrap()).unwrap();
        assert_eq!(json["steps"].as_array().unwrap().len(), unsafe { e8_witness_step_count(w) });
        unsafe {
            e8_witness_free(w);
            e8_element_free(x);
        }
    }
    // 1~ is not in the null cone.
    let r = element(245);
    let mut w = ptr::null_mut();
    let status = unsafe { e8_reduce_w(r, 1e-9, 0, &mut w) };
    assert_ne!(status, E8Status::Ok);
    assert!(w.is_null());
    unsafe { e8_element_free(r) };
}

#[test]
fn header_is_valid_c() {
    let header = concat!(env!("CARGO_MANIFEST_DIR"), "/include/e8kit.h");
    let text = std::fs::read_to_string(header).unwrap();
    for name in ["e8_element_new", "e8_report_run", "e8_reduce_w", "e8_last_error", "E8_STATUS_PANIC"] {
        assert!(text.contains(name), "{name} missing from header");
    }
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    match std::process::Command::new(&cc).args(["-fsyntax-only", "-std=c99", "-Wall", "-Werror", "-x", "c", header]).output() {
        Ok(out) => assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr)),
        Err(e) => eprintln!("skipping C syntax check, {cc} unavailable: {e}"),
    }
}
