//! C interface to `apolar_kit`.
//!
//! Every fallible call returns an [`ApkStatus`]. On failure the message is
//! kept per thread and read back with [`apk_last_error`]. Strings handed out
//! by the library are released with [`apk_string_free`], polynomial handles
//! with [`apk_polynomial_free`]. Reports cross the boundary as JSON text in
//! the same shapes the command line prints.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use apolar_kit::exact::Polynomial;
use apolar_kit::numeric::NumericConfig;
use apolar_kit::report::{DecompositionJson, PolynomialJson};
use apolar_kit::{apolarity, pipeline, planemodel, waring, Error};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ApkStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidInput = 3,
    Failed = 4,
    Panic = 5,
}

/// Opaque homogeneous polynomial with rational coefficients.
pub struct ApkPolynomial {
    inner: Polynomial,
}

/// Precision and tolerance for the numeric steps. Zero fields mean defaults.
#[repr(C)]
#[derive(Clone, Copy, Debug)]
pub struct ApkConfig {
    pub precision_bits: u32,
    pub tolerance: f64,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let msg = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

struct Failure(ApkStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = if e.is_input_error() {
            ApkStatus::InvalidInput
        } else {
            ApkStatus::Failed
        };
        Failure(status, e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure(ApkStatus::InvalidInput, e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> ApkStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => ApkStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("panic inside apolar_kit".into());
            ApkStatus::Panic
        }
    }
}

fn config(cfg: *const ApkConfig) -> NumericConfig {
    let mut out = NumericConfig::default();
    if let Some(c) = unsafe { cfg.as_ref() } {
        if c.precision_bits > 0 {
            out.precision = c.precision_bits;
        }
        if c.tolerance > 0.0 {
            out.tolerance = c.tolerance;
        }
    }
    out
}

unsafe fn text<'a>(s: *const c_char) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(Failure(ApkStatus::NullPointer, "null string argument".into()));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|e| Failure(ApkStatus::InvalidUtf8, e.to_string()))
}

unsafe fn poly<'a>(p: *const ApkPolynomial) -> Result<&'a Polynomial, Failure> {
    p.as_ref()
        .map(|p| &p.inner)
        .ok_or_else(|| Failure(ApkStatus::NullPointer, "null polynomial handle".into()))
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure(ApkStatus::NullPointer, "null output pointer".into()));
    }
    out.write(value);
    Ok(())
}

unsafe fn put_json(out: *mut *mut c_char, value: &impl serde::Serialize) -> Result<(), Failure> {
    let s = serde_json::to_string(&serde_json::to_value(value)?)?;
    let c = CString::new(s).map_err(|e| Failure(ApkStatus::Failed, e.to_string()))?;
    put(out, c.into_raw())
}

/// Message of the last failed call on this thread, or null. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn apk_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn apk_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses `{"nvars", "degree", "terms": [{"exps", "coeff"}]}` into a handle.
///
/// # Safety
/// `json` must be a valid C string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn apk_polynomial_from_json(json: *const c_char, out: *mut *mut ApkPolynomial) -> ApkStatus {
    guard(|| {
        let parsed: PolynomialJson = serde_json::from_str(text(json)?)?;
        let inner = Polynomial::try_from(&parsed)?;
        put(out, Box::into_raw(Box::new(ApkPolynomial { inner })))
    })
}

/// # Safety
/// `p` must come from [`apk_polynomial_from_json`] or be null.
#[no_mangle]
pub unsafe extern "C" fn apk_polynomial_free(p: *mut ApkPolynomial) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn apk_polynomial_to_json(p: *const ApkPolynomial, out: *mut *mut c_char) -> ApkStatus {
    guard(|| put_json(out, &PolynomialJson::from(poly(p)?)))
}

/// Writes the number of variables and the degree.
///
/// # Safety
/// `p` must be a live handle; both outputs writable.
#[no_mangle]
pub unsafe extern "C" fn apk_polynomial_shape(
    p: *const ApkPolynomial,
    nvars: *mut usize,
    degree: *mut u32,
) -> ApkStatus {
    guard(|| {
        let f = poly(p)?;
        put(nvars, f.nvars())?;
        put(degree, f.degree())
    })
}

/// Hilbert function of the apolar algebra as JSON
/// `{"socle_degree", "hilbert", "socle_dim"}`.
///
/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn apk_hilbert_function(p: *const ApkPolynomial, out: *mut *mut c_char) -> ApkStatus {
    guard(|| put_json(out, &apolarity::hilbert_function(poly(p)?)?))
}

/// Dimension of the degree `k` piece of the apolar ideal.
///
/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn apk_apolar_dim(p: *const ApkPolynomial, k: u32, out: *mut usize) -> ApkStatus {
    guard(|| put(out, apolarity::apolar_ideal_piece(poly(p)?, k)?.dim()))
}

/// Rank of the first catalecticant of a cubic, a lower bound on its Waring rank.
///
/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn apk_rank_lower_bound(p: *const ApkPolynomial, out: *mut usize) -> ApkStatus {
    guard(|| put(out, waring::rank_lower_bound(poly(p)?)?))
}

/// Decides whether a cubic in `n` variables is a sum of `n` cubes. On success
/// `is_fermat` is set and, when `report` is not null, the decomposition (or
/// the reason for rejection) is written there as JSON.
///
/// # Safety
/// `p` must be a live handle, `cfg` null or valid, `is_fermat` writable and
/// `report` null or writable.
#[no_mangle]
pub unsafe extern "C" fn apk_fermat_detect(
    p: *const ApkPolynomial,
    seed: u64,
    cfg: *const ApkConfig,
    is_fermat: *mut bool,
    report: *mut *mut c_char,
) -> ApkStatus {
    guard(|| {
        let cfg = config(cfg);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let result = waring::fermat_detect(poly(p)?, &mut rng, &cfg)?;
        put(is_fermat, result.is_ok())?;
        if report.is_null() {
            return Ok(());
        }
        let value = match result {
            Ok(d) => serde_json::json!({ "fermat": true, "decomposition": DecompositionJson::new(&d, cfg.precision) }),
            Err(why) => serde_json::json!({ "fermat": false, "failure": format!("{why:?}") }),
        };
        put_json(report, &value)
    })
}

/// Upper bound on the Waring rank of the alpha cubic of a tetragonal curve of genus `g`.
#[no_mangle]
pub extern "C" fn apk_theorem_b_bound(g: i64) -> i64 {
    pipeline::theorem_b_bound(g)
}

/// Plane model numerology of a tetragonal curve of genus `g` as JSON.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn apk_numerology(g: i64, out: *mut *mut c_char) -> ApkStatus {
    guard(|| put_json(out, &planemodel::tetragonal_numerology(g)?))
}

/// Ampleness certificate on the blow-up of the plane in four points, as JSON.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn apk_nakai(k: i64, a_max: i64, out: *mut *mut c_char) -> ApkStatus {
    guard(|| put_json(out, &planemodel::nakai_certificate(k, a_max)?))
}

/// Runs the trigonal verification for genus `g` and writes the JSON report.
/// `passed` receives the overall verdict.
///
/// # Safety
/// `cfg` null or valid; `passed` and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn apk_verify_a(
    g: u32,
    trials: usize,
    seed: u64,
    cfg: *const ApkConfig,
    passed: *mut bool,
    out: *mut *mut c_char,
) -> ApkStatus {
    guard(|| {
        let report = pipeline::verify_theorem_a(g, trials, seed, &config(cfg))?;
        put(passed, report.passed)?;
        put_json(out, &report)
    })
}

/// Runs the tetragonal verification for genus `g`. When `has_split` is false
/// every split is sampled, otherwise only `(b1, b2)`.
///
/// # Safety
/// `cfg` null or valid; `passed` and `out` writable.
#[no_mangle]
#[allow(clippy::too_many_arguments)]
pub unsafe extern "C" fn apk_verify_b(
    g: u32,
    has_split: bool,
    b1: i64,
    b2: i64,
    trials: usize,
    seed: u64,
    cfg: *const ApkConfig,
    passed: *mut bool,
    out: *mut *mut c_char,
) -> ApkStatus {
    guard(|| {
        let split = has_split.then_some((b1, b2));
        let report = pipeline::verify_theorem_b(g, split, trials, seed, &config(cfg))?;
        put(passed, report.passed)?;
        put_json(out, &report)
    })
}
