use std::ffi::{c_char, CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use apolar_kit_ffi::*;

const FERMAT4: &str = r#"{"nvars":4,"degree":3,"terms":[
  {"exps":[3,0,0,0],"coeff":"1"},{"exps":[0,3,0,0],"coeff":"2"},
  {"exps":[0,0,3,0],"coeff":"-1/3"},{"exps":[0,0,0,3],"coeff":"5"}]}"#;

fn owned(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { apk_string_free(s) };
    out
}

fn last_error() -> String {
    let e = apk_last_error();
    assert!(!e.is_null());
    unsafe { CStr::from_ptr(e) }.to_string_lossy().into_owned()
}

fn load(json: &str) -> *mut ApkPolynomial {
    let c = CString::new(json).unwrap();
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { apk_polynomial_from_json(c.as_ptr(), &mut p) }, ApkStatus::Ok);
    p
}

#[test]
fn polynomial_handle_round_trip() {
    let p = load(FERMAT4);
    let (mut n, mut d) = (0usize, 0u32);
    assert_eq!(unsafe { apk_polynomial_shape(p, &mut n, &mut d) }, ApkStatus::Ok);
    assert_eq!((n, d), (4, 3));
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { apk_polynomial_to_json(p, &mut s) }, ApkStatus::Ok);
    let back = load(&owned(s));
    let mut s2 = ptr::null_mut();
    unsafe { apk_polynomial_to_json(back, &mut s2) };
    let mut s1 = ptr::null_mut();
    unsafe { apk_polynomial_to_json(p, &mut s1) };
    assert_eq!(owned(s1), owned(s2));
    unsafe {
        apk_polynomial_free(p);
        apk_polynomial_free(back);
        apk_polynomial_free(ptr::null_mut());
        apk_string_free(ptr::null_mut());
    }
}

#[test]
fn apolarity_queries() {
    let p = load(FERMAT4);
    let mut dim = 0usize;
    assert_eq!(unsafe { apk_apolar_dim(p, 2, &mut dim) }, ApkStatus::Ok);
    assert_eq!(dim, 6);
    let mut rank = 0usize;
    assert_eq!(unsafe { apk_rank_lower_bound(p, &mut rank) }, ApkStatus::Ok);
    assert_eq!(rank, 4);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { apk_hilbert_function(p, &mut s) }, ApkStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&owned(s)).unwrap();
    assert_eq!(v["hilbert"], serde_json::json!([1, 4, 4, 1]));
    unsafe { apk_polynomial_free(p) };
}

#[test]
fn fermat_detection() {
    let p = load(FERMAT4);
    let cfg = ApkConfig {
        precision_bits: 0,
        tolerance: 0.0,
    };
    let mut fermat = false;
    let mut s = ptr::null_mut();
    assert_eq!(
        unsafe { apk_fermat_detect(p, 3, &cfg, &mut fermat, &mut s) },
        ApkStatus::Ok
    );
    assert!(fermat);
    let v: serde_json::Value = serde_json::from_str(&owned(s)).unwrap();
    assert_eq!(v["decomposition"]["length"], 4);
    let mut again = false;
    assert_eq!(
        unsafe { apk_fermat_detect(p, 3, ptr::null(), &mut again, ptr::null_mut()) },
        ApkStatus::Ok
    );
    assert!(again);
    unsafe { apk_polynomial_free(p) };
}

#[test]
fn errors_are_reported() {
    let mut p = ptr::null_mut();
    let bad = CString::new("{\"nvars\":2,\"degree\":3,\"terms\":[{\"exps\":[1,1],\"coeff\":\"1\"}]}").unwrap();
    assert_eq!(
        unsafe { apk_polynomial_from_json(bad.as_ptr(), &mut p) },
        ApkStatus::InvalidInput
    );
    assert!(p.is_null());
    assert!(!last_error().is_empty());
    assert_eq!(
        unsafe { apk_polynomial_from_json(ptr::null(), &mut p) },
        ApkStatus::NullPointer
    );
    let invalid = [0xffu8, 0];
    assert_eq!(
        unsafe { apk_polynomial_from_json(invalid.as_ptr() as *const c_char, &mut p) },
        ApkStatus::InvalidUtf8
    );
    let mut dim = 0usize;
    assert_eq!(
        unsafe { apk_apolar_dim(ptr::null(), 1, &mut dim) },
        ApkStatus::NullPointer
    );
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { apk_numerology(3, &mut s) }, ApkStatus::InvalidInput);
    assert!(s.is_null());
    let mut passed = true;
    assert_eq!(
        unsafe { apk_verify_b(7, true, 2, 2, 1, 1, ptr::null(), &mut passed, &mut s) },
        ApkStatus::InvalidInput
    );
}

#[test]
fn reports() {
    assert_eq!(apk_theorem_b_bound(7), 7);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { apk_numerology(7, &mut s) }, ApkStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&owned(s)).unwrap();
    assert_eq!(v["multiplicities"], serde_json::json!([3, 3, 2, 2]));
    assert_eq!(unsafe { apk_nakai(2, 10, &mut s) }, ApkStatus::Ok);
    assert!(owned(s).contains("\"k\":2"));
    let mut passed = false;
    assert_eq!(
        unsafe { apk_verify_a(5, 2, 1, ptr::null(), &mut passed, &mut s) },
        ApkStatus::Ok
    );
    assert!(passed);
    assert!(owned(s).contains("\"passed\":true"));
    passed = false;
    assert_eq!(
        unsafe { apk_verify_b(6, true, 0, 1, 1, 1, ptr::null(), &mut passed, &mut s) },
        ApkStatus::Ok
    );
    assert!(passed);
    owned(s);
}

#[test]
fn c_program_links_against_the_header() {
    let Ok(cc) = which_cc() else { return };
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().unwrap().parent().unwrap();
    let lib = profile_dir.join("libapolar_kit_ffi.a");
    assert!(lib.exists(), "missing {}", lib.display());
    let out = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("apk_smoke");
    let status = Command::new(cc)
        .arg(manifest.join("tests/smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&out)
        .status()
        .unwrap();
    assert!(status.success());
    let run = Command::new(&out).output().unwrap();
    assert!(run.status.success(), "exit {:?}", run.status.code());
    assert_eq!(String::from_utf8_lossy(&run.stdout).trim(), "ok");
}

fn which_cc() -> Result<String, ()> {
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    match Command::new(&cc).arg("--version").output() {
        Ok(o) if o.status.success() => Ok(cc),
        _ => Err(()),
    }
}
