//! The map `α_C`: a canonical curve and two general hyperplanes give an
//! Artinian Gorenstein quotient with Hilbert function `(1, g−2, g−2, 1)`
//! whose inverse system is a cubic `F` in `g−2` variables. Cutting a
//! surface `S ⊃ C` on the scroll by the same hyperplanes gives an apolar
//! scheme `Γ` of length `deg S`, hence a power-sum decomposition of `F`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use rug::{Complex, Rational};
use serde::Serialize;

use crate::apolarity::{macaulay_inverse, quotient_hilbert, GradedIdealPiece};
use crate::curvegen::{reconstruct_ideal, tetragonal_curve, trigonal_curve, CurveSpec, IdealReconstruction};
use crate::error::{Error, Result};
use crate::exact::{format_rational, ExactMatrix, Polynomial};
use crate::numeric::{abs_f64, format_scalar, from_rational, max_abs, roots, DualPoint, NumericConfig};
use crate::report::{rationals, DecompositionJson, DualPointJson, PolynomialJson};
use crate::scroll::{divisor_degree, DivisorClass};
use crate::univariate::UniPoly;
use crate::waring::{
    fermat_detect, normalize, power_sum_fit_report, random_dual_form, rank_lower_bound, Decomposition,
};

/// Fresh hyperplane pairs tried before a run is declared non-general.
pub const ETA_RETRIES: usize = 5;
/// Matching tolerance for normalized forms of two decompositions.
pub const AGREEMENT_TOLERANCE: f64 = 1e-8;

pub const CLAIM_THEOREM_A: &str =
    "trigonal canonical curve: for general eta1, eta2 the cubic F is a Fermat cubic, a sum of g-2 cubes";
pub const CLAIM_THEOREM_B: &str =
    "tetragonal canonical curve: F is a sum of at most ceil((3g-7)/2) cubes, one per point of a surface section";
pub const CLAIM_ALPHA: &str = "R_C/(eta1, eta2) is Artinian Gorenstein with Hilbert function (1, g-2, g-2, 1)";

/// `⌈(3g−7)/2⌉`.
pub fn theorem_b_bound(g: i64) -> i64 {
    (3 * g - 7 + 1).div_euclid(2)
}

/// Trial `i` of a run seeded with `seed`.
pub fn trial_seed(seed: u64, i: usize) -> u64 {
    seed ^ (i as u64 + 1).wrapping_mul(0x9e37_79b9_7f4a_7c15)
}

/// Coordinates on `V(η₁, η₂)`: the free coordinates, and each pivot
/// coordinate as a combination of them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoordinateChange {
    pub pivots: Vec<usize>,
    pub free: Vec<usize>,
    /// `g × (g−2)`: row `i` expresses `x_i` in the free coordinates.
    pub restriction: ExactMatrix,
}

impl CoordinateChange {
    pub fn new(eta1: &[Rational], eta2: &[Rational]) -> Result<Self> {
        if eta1.len() != eta2.len() {
            return Err(Error::NvarsMismatch(eta1.len(), eta2.len()));
        }
        let g = eta1.len();
        let (r, pivots) = ExactMatrix::from_rows(vec![eta1.to_vec(), eta2.to_vec()])?.rref();
        if pivots.len() != 2 {
            return Err(Error::Degenerate("eta1 and eta2 are linearly dependent".into()));
        }
        let free: Vec<usize> = (0..g).filter(|i| !pivots.contains(i)).collect();
        let mut m = ExactMatrix::zeros(g, free.len());
        for (c, &j) in free.iter().enumerate() {
            m.set(j, c, Rational::from(1));
        }
        for (row, &p) in pivots.iter().enumerate() {
            for (c, &j) in free.iter().enumerate() {
                m.set(p, c, Rational::from(-r.get(row, j)));
            }
        }
        Ok(CoordinateChange {
            pivots,
            free,
            restriction: m,
        })
    }

    pub fn restrict(&self, p: &Polynomial) -> Polynomial {
        p.substitute_linear(&self.restriction)
    }
}

#[derive(Clone, Debug)]
pub struct AlphaResult {
    pub g: u32,
    pub eta1: Vec<Rational>,
    pub eta2: Vec<Rational>,
    pub hilbert: Vec<usize>,
    pub cubic: Polynomial,
    pub coordinate_change: CoordinateChange,
    /// `(𝓘(C), η₁, η₂)` in degrees 2 and 3, on the free coordinates.
    pub pieces: Vec<GradedIdealPiece>,
}

/// Restricts the ideal to `V(η₁, η₂)`, certifies the Hilbert function and
/// inverts it to the cubic `F_{η₁,η₂}`.
pub fn alpha_map(ideal: &IdealReconstruction, eta1: &[Rational], eta2: &[Rational]) -> Result<AlphaResult> {
    let g = ideal.degree2.nvars();
    if eta1.len() != g {
        return Err(Error::NvarsMismatch(eta1.len(), g));
    }
    let change = CoordinateChange::new(eta1, eta2)?;
    let n = g - 2;
    let mut pieces = Vec::new();
    for piece in [&ideal.degree2, &ideal.degree3] {
        let restricted: Vec<Polynomial> = piece.basis().iter().map(|p| change.restrict(p)).collect();
        pieces.push(GradedIdealPiece::new(n, piece.degree(), &restricted)?);
    }
    let hilbert = quotient_hilbert(n, &pieces, 4);
    if hilbert != [1, n, n, 1, 0] {
        return Err(Error::HilbertCertificate(hilbert));
    }
    let cubic = macaulay_inverse(&pieces, 3)?;
    Ok(AlphaResult {
        g: g as u32,
        eta1: eta1.to_vec(),
        eta2: eta2.to_vec(),
        hilbert: hilbert[..4].to_vec(),
        cubic,
        coordinate_change: change,
        pieces,
    })
}

#[derive(Clone, Debug)]
pub struct GammaScheme {
    /// `None` for the trigonal scroll, else the index of `Y_i`.
    pub surface: Option<usize>,
    pub class: DivisorClass,
    pub points: Vec<DualPoint>,
    pub expected_length: usize,
    pub found_length: usize,
    /// Largest relative residual of the hyperplanes and surface at the points.
    pub residual: f64,
}

fn eval_complex(p: &UniPoly, z: &Complex, prec: u32) -> Complex {
    let mut acc = Complex::with_val(prec, 0);
    for c in p.coeffs().iter().rev() {
        acc *= z;
        acc += from_rational(prec, c);
    }
    acc
}

fn eval_abs(p: &UniPoly, r: f64) -> f64 {
    p.coeffs().iter().rev().fold(0.0, |acc, c| acc * r + c.to_f64().abs())
}

/// `η` on the fiber over `(1 : t)`: one polynomial in `t` per fiber coordinate.
fn eta_on_fibers(curve: &CurveSpec, eta: &[Rational]) -> Vec<UniPoly> {
    (0..curve.scroll.k())
        .map(|i| {
            let off = curve.scroll.block_offset(i);
            let len = curve.scroll.type_vec()[i] as usize + 1;
            UniPoly::new(eta[off..off + len].to_vec())
        })
        .collect()
}

fn cross(a: &[UniPoly], b: &[UniPoly]) -> Vec<UniPoly> {
    vec![
        &(&a[1] * &b[2]) - &(&a[2] * &b[1]),
        &(&a[2] * &b[0]) - &(&a[0] * &b[2]),
        &(&a[0] * &b[1]) - &(&a[1] * &b[0]),
    ]
}

/// The section with the fiber coordinates replaced by polynomials in `t`.
fn substitute_section(terms: &[(crate::exact::Monomial, UniPoly)], y: &[UniPoly]) -> UniPoly {
    let mut acc = UniPoly::zero();
    for (m, c) in terms {
        let mut t = c.clone();
        for (yi, &e) in y.iter().zip(m.exps()) {
            t = &t * &yi.pow(e);
        }
        acc = &acc + &t;
    }
    acc
}

/// Scroll coordinates `y_i t^j` of a point on the fiber over `(1 : t)`.
fn image_exact(curve: &CurveSpec, t: &Rational, y: &[Rational]) -> Vec<Rational> {
    let mut out = Vec::with_capacity(curve.scroll.coordinate_count());
    for (yi, &a) in y.iter().zip(curve.scroll.type_vec()) {
        let mut tj = Rational::from(1);
        for _ in 0..=a {
            out.push(Rational::from(yi * &tj));
            tj *= t;
        }
    }
    out
}

fn image_complex(curve: &CurveSpec, t: &Complex, y: &[Complex], prec: u32) -> Vec<Complex> {
    let mut out = Vec::with_capacity(curve.scroll.coordinate_count());
    for (yi, &a) in y.iter().zip(curve.scroll.type_vec()) {
        let mut tj = Complex::with_val(prec, 1);
        for _ in 0..=a {
            out.push(Complex::with_val(prec, yi * &tj));
            tj *= t;
        }
    }
    out
}

fn linear_residual(eta: &[Rational], x: &[Complex], prec: u32) -> f64 {
    let mut acc = Complex::with_val(prec, 0);
    for (e, xi) in eta.iter().zip(x) {
        acc += Complex::with_val(prec, xi * &from_rational(prec, e));
    }
    let scale: f64 = eta.iter().map(|e| e.to_f64().abs()).sum::<f64>() * max_abs(x);
    abs_f64(&acc) / scale.max(f64::MIN_POSITIVE)
}

/// `Γ = S ∩ V(η₁, η₂)` as dual points in the free coordinates of the
/// quotient. For a trigonal curve `S` is the scroll; for a tetragonal one
/// `surface_index` picks `Y₁` or `Y₂`.
pub fn gamma_points(
    curve: &CurveSpec,
    surface_index: Option<usize>,
    eta1: &[Rational],
    eta2: &[Rational],
    cfg: &NumericConfig,
) -> Result<GammaScheme> {
    let g = curve.nvars();
    if eta1.len() != g || eta2.len() != g {
        return Err(Error::NvarsMismatch(eta1.len().min(eta2.len()), g));
    }
    let change = CoordinateChange::new(eta1, eta2)?;
    let l1 = eta_on_fibers(curve, eta1);
    let l2 = eta_on_fibers(curve, eta2);
    // the fiber direction in the kernel of both hyperplanes, and the
    // polynomial cutting out its base values
    let (class, y, p, section) = match (curve.gonality, surface_index) {
        (3, None) => {
            let y = vec![l1[1].clone(), -&l1[0]];
            let p = &(&l1[0] * &l2[1]) - &(&l1[1] * &l2[0]);
            (DivisorClass::H, y, p, None)
        }
        (4, Some(i)) if i < curve.equations.len() => {
            let y = cross(&l1, &l2);
            let terms = curve.equations[i].coefficient_polys();
            let p = substitute_section(&terms, &y);
            (curve.equations[i].class, y, p, Some(terms))
        }
        _ => {
            return Err(Error::InvalidInput(format!(
                "surface {surface_index:?} does not exist on a curve of gonality {}",
                curve.gonality
            )))
        }
    };
    let expected = if section.is_some() {
        divisor_degree(&curve.scroll, class)?
    } else {
        curve.scroll.degree()
    } as usize;
    let found = p.degree().unwrap_or(0);
    if p.is_zero() || found != expected {
        return Err(Error::GammaDegree { expected, found });
    }
    let prec = cfg.precision;
    let mut points = Vec::with_capacity(found);
    let mut residual: f64 = 0.0;
    for root in roots(&p, prec)? {
        let point = if let Some(t) = &root.exact {
            let mut yv: Vec<Rational> = y.iter().map(|q| q.eval(t)).collect();
            if yv.iter().all(|v| *v == 0) && section.is_none() {
                yv = vec![l2[1].eval(t), -l2[0].eval(t)];
            }
            if yv.iter().all(|v| *v == 0) {
                return Err(Error::Degenerate("a hyperplane contains a whole fiber".into()));
            }
            let x = image_exact(curve, t, &yv);
            for eta in [eta1, eta2] {
                let v: Rational = eta.iter().zip(&x).map(|(a, b)| Rational::from(a * b)).sum();
                if v != 0 {
                    return Err(Error::Assertion("exact gamma point off the hyperplanes".into()));
                }
            }
            DualPoint::Exact(change.free.iter().map(|&j| x[j].clone()).collect())
        } else {
            let t = &root.value;
            let mut yv: Vec<Complex> = y.iter().map(|q| eval_complex(q, t, prec)).collect();
            if section.is_none() {
                let alt = vec![eval_complex(&l2[1], t, prec), -eval_complex(&l2[0], t, prec)];
                if max_abs(&alt) > max_abs(&yv) {
                    yv = alt;
                }
            }
            let tr = abs_f64(t).max(1.0);
            let scale: f64 = y.iter().map(|q| eval_abs(q, tr)).fold(0.0, f64::max);
            if max_abs(&yv) <= scale * cfg.tolerance {
                return Err(Error::Degenerate("a hyperplane contains a whole fiber".into()));
            }
            let x = image_complex(curve, t, &yv, prec);
            for eta in [eta1, eta2] {
                residual = residual.max(linear_residual(eta, &x, prec));
            }
            if let Some(terms) = &section {
                let mut acc = Complex::with_val(prec, 0);
                let mut size = 0.0;
                let ya: Vec<f64> = yv.iter().map(abs_f64).collect();
                for (m, c) in terms {
                    let mut term = eval_complex(c, t, prec);
                    let mut s = eval_abs(c, abs_f64(t));
                    for ((yi, ai), &e) in yv.iter().zip(&ya).zip(m.exps()) {
                        for _ in 0..e {
                            term *= yi;
                        }
                        s *= ai.powi(e as i32);
                    }
                    acc += term;
                    size += s;
                }
                residual = residual.max(abs_f64(&acc) / size.max(f64::MIN_POSITIVE));
            }
            DualPoint::Approx(change.free.iter().map(|&j| x[j].clone()).collect())
        };
        points.push(point);
    }
    if residual > cfg.tolerance {
        return Err(Error::RootFinding(format!(
            "gamma residual {residual:e} above tolerance"
        )));
    }
    Ok(GammaScheme {
        surface: surface_index,
        class,
        found_length: points.len(),
        points,
        expected_length: expected,
        residual,
    })
}

/// Fits the cubic of `alpha` to the points of `gamma`.
pub fn waring_certificate(alpha: &AlphaResult, gamma: &GammaScheme, cfg: &NumericConfig) -> Result<Decomposition> {
    if gamma.found_length != gamma.expected_length {
        return Err(Error::GammaDegree {
            expected: gamma.expected_length,
            found: gamma.found_length,
        });
    }
    match power_sum_fit_report(&gamma.points, &alpha.cubic, cfg)? {
        Ok(d) => Ok(d),
        Err(r) => Err(Error::FitFailed(r)),
    }
}

/// Largest relative value of the degree-2 generators of `F⊥` at the points.
/// For `n` points in `n` variables these generators vanish on `Γ`.
pub fn containment_residual(alpha: &AlphaResult, points: &[DualPoint], prec: u32) -> f64 {
    let mut worst: f64 = 0.0;
    for p in points {
        let x = p.to_complex(prec);
        let px = max_abs(&x);
        for d in alpha.pieces[0].basis() {
            let mut acc = Complex::with_val(prec, 0);
            let mut size = 0.0;
            for (m, c) in d.terms() {
                let mut term = from_rational(prec, c);
                for (xi, &e) in x.iter().zip(m.exps()) {
                    for _ in 0..e {
                        term *= xi;
                    }
                }
                acc += term;
                size += c.to_f64().abs() * px * px;
            }
            worst = worst.max(abs_f64(&acc) / size.max(f64::MIN_POSITIVE));
        }
    }
    worst
}

/// One complete run on a curve: hyperplanes, cubic, sections and fits.
#[derive(Clone, Debug)]
pub struct AlphaRun {
    pub attempts: usize,
    pub alpha: AlphaResult,
    pub gammas: Vec<GammaScheme>,
    pub certificates: Vec<Decomposition>,
}

fn retryable(e: &Error) -> bool {
    matches!(
        e,
        Error::HilbertCertificate(_)
            | Error::SocleDimension { .. }
            | Error::GammaDegree { .. }
            | Error::RootFinding(_)
            | Error::FitFailed(_)
            | Error::Degenerate(_)
            | Error::CoincidentPoints(..)
    )
}

fn surfaces(curve: &CurveSpec) -> Vec<Option<usize>> {
    match curve.gonality {
        3 => vec![None],
        _ => (0..curve.equations.len()).map(Some).collect(),
    }
}

/// Draws seeded hyperplane pairs until the whole chain certifies, at most
/// `ETA_RETRIES` times.
pub fn run_alpha(curve: &CurveSpec, ideal: &IdealReconstruction, seed: u64, cfg: &NumericConfig) -> Result<AlphaRun> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xe7a5);
    let g = curve.nvars();
    let mut last = None;
    for attempt in 1..=ETA_RETRIES {
        let eta1 = random_dual_form(&mut rng, g);
        let eta2 = random_dual_form(&mut rng, g);
        let step = || -> Result<AlphaRun> {
            let alpha = alpha_map(ideal, &eta1, &eta2)?;
            let mut gammas = Vec::new();
            let mut certificates = Vec::new();
            for s in surfaces(curve) {
                let gamma = gamma_points(curve, s, &eta1, &eta2, cfg)?;
                certificates.push(waring_certificate(&alpha, &gamma, cfg)?);
                gammas.push(gamma);
            }
            Ok(AlphaRun {
                attempts: attempt,
                alpha,
                gammas,
                certificates,
            })
        };
        match step() {
            Ok(run) => return Ok(run),
            Err(e) if retryable(&e) => last = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(last.expect("at least one attempt"))
}

/// Builds the curve of a trial: trigonal when `split` is `None`.
pub fn trial_curve(g: u32, split: Option<(i64, i64)>, seed: u64) -> Result<CurveSpec> {
    match split {
        None => trigonal_curve(g, seed),
        Some((b1, b2)) => tetragonal_curve(g, b1, b2, seed),
    }
}

/// Curve, ideal and α-run for one seeded trial.
pub fn run_trial(g: u32, split: Option<(i64, i64)>, seed: u64, cfg: &NumericConfig) -> Result<(CurveSpec, AlphaRun)> {
    let curve = trial_curve(g, split, seed)?;
    let ideal = reconstruct_ideal(&curve, seed ^ 0x1dea)?;
    let run = run_alpha(&curve, &ideal, seed, cfg)?;
    Ok((curve, run))
}

/// Whether two lists of normalized forms agree up to order.
pub fn forms_agree(a: &[Vec<Complex>], b: &[Vec<Complex>], tol: f64) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut used = vec![false; b.len()];
    'outer: for x in a {
        for (j, y) in b.iter().enumerate() {
            if used[j] || x.len() != y.len() {
                continue;
            }
            let close = x.iter().zip(y).all(|(u, v)| {
                let diff = Complex::with_val(u.prec(), u - v);
                abs_f64(&diff) <= tol * (1.0 + abs_f64(u))
            });
            if close {
                used[j] = true;
                continue 'outer;
            }
        }
        return false;
    }
    true
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlphaJson {
    pub g: u32,
    pub eta1: Vec<String>,
    pub eta2: Vec<String>,
    pub hilbert: Vec<usize>,
    pub cubic: PolynomialJson,
    pub free_coordinates: Vec<usize>,
    pub eliminated_coordinates: Vec<usize>,
    /// Each eliminated coordinate as a combination of the free ones.
    pub elimination: Vec<Vec<String>>,
}

impl From<&AlphaResult> for AlphaJson {
    fn from(a: &AlphaResult) -> Self {
        let c = &a.coordinate_change;
        AlphaJson {
            g: a.g,
            eta1: rationals(&a.eta1),
            eta2: rationals(&a.eta2),
            hilbert: a.hilbert.clone(),
            cubic: PolynomialJson::from(&a.cubic),
            free_coordinates: c.free.clone(),
            eliminated_coordinates: c.pivots.clone(),
            elimination: c
                .pivots
                .iter()
                .map(|&p| c.restriction.row(p).iter().map(format_rational).collect())
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GammaJson {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub surface: Option<usize>,
    pub class: DivisorClass,
    pub expected_length: usize,
    pub found_length: usize,
    pub residual: String,
    pub points: Vec<DualPointJson>,
}

impl GammaJson {
    pub fn new(g: &GammaScheme, prec: u32) -> Self {
        GammaJson {
            surface: g.surface,
            class: g.class,
            expected_length: g.expected_length,
            found_length: g.found_length,
            residual: format_scalar(g.residual),
            points: g.points.iter().map(|p| DualPointJson::new(p, prec)).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlphaReport {
    pub claim: String,
    pub g: u32,
    pub gonality: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub split: Option<[i64; 2]>,
    pub seed: u64,
    pub attempts: usize,
    pub alpha: AlphaJson,
    pub gamma: Vec<GammaJson>,
    pub decompositions: Vec<DecompositionJson>,
}

impl AlphaReport {
    pub fn new(curve: &CurveSpec, run: &AlphaRun, seed: u64, prec: u32) -> Self {
        AlphaReport {
            claim: CLAIM_ALPHA.into(),
            g: curve.genus,
            gonality: curve.gonality,
            split: curve.split.map(|(a, b)| [a, b]),
            seed,
            attempts: run.attempts,
            alpha: AlphaJson::from(&run.alpha),
            gamma: run.gammas.iter().map(|g| GammaJson::new(g, prec)).collect(),
            decompositions: run
                .certificates
                .iter()
                .map(|d| DecompositionJson::new(d, prec))
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremATrial {
    pub trial: usize,
    pub seed: u64,
    pub attempts: usize,
    pub hilbert: Vec<usize>,
    pub fermat_length: usize,
    pub fermat_exact: bool,
    pub fermat_residual: String,
    pub gamma_length: usize,
    pub gamma_residual: String,
    pub containment_residual: String,
    pub agreement: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremAReport {
    pub claim: String,
    pub g: u32,
    pub rank: usize,
    pub trials: Vec<TheoremATrial>,
    pub passed: bool,
}

fn theorem_a_trial(g: u32, i: usize, seed: u64, cfg: &NumericConfig) -> Result<TheoremATrial> {
    let ts = trial_seed(seed, i);
    let (_, run) = run_trial(g, None, ts, cfg)?;
    let n = g as usize - 2;
    let mut rng = ChaCha8Rng::seed_from_u64(ts ^ 0xfe24);
    let fermat = match fermat_detect(&run.alpha.cubic, &mut rng, cfg)? {
        Ok(d) => d,
        Err(why) => return Err(Error::Assertion(format!("cubic is not detected as Fermat: {why:?}"))),
    };
    if fermat.rank() != n || fermat.residual > cfg.tolerance {
        return Err(Error::Assertion(format!(
            "Fermat decomposition has {} forms, residual {:e}",
            fermat.rank(),
            fermat.residual
        )));
    }
    let gamma = &run.gammas[0];
    let cert = &run.certificates[0];
    let prec = cfg.precision;
    let from_gamma: Vec<Vec<Complex>> = gamma.points.iter().map(|p| normalize(&p.to_complex(prec))).collect();
    let agreement = forms_agree(&fermat.normalized_forms(prec), &from_gamma, AGREEMENT_TOLERANCE);
    let containment = containment_residual(&run.alpha, &gamma.points, prec);
    if !agreement {
        return Err(Error::Assertion("Fermat forms and gamma points disagree".into()));
    }
    if containment > cfg.tolerance {
        return Err(Error::Assertion(format!(
            "F-perp quadrics do not vanish on gamma: {containment:e}"
        )));
    }
    Ok(TheoremATrial {
        trial: i,
        seed: ts,
        attempts: run.attempts,
        hilbert: run.alpha.hilbert.clone(),
        fermat_length: fermat.rank(),
        fermat_exact: fermat.is_exact(),
        fermat_residual: format_scalar(fermat.residual),
        gamma_length: gamma.found_length,
        gamma_residual: format_scalar(cert.residual),
        containment_residual: format_scalar(containment),
        agreement,
    })
}

fn collect_trials<T: Send>(trials: usize, f: impl Fn(usize) -> Result<T> + Sync) -> Result<Vec<T>> {
    let results: Vec<Result<T>> = (0..trials).into_par_iter().map(&f).collect();
    results
        .into_iter()
        .enumerate()
        .map(|(i, r)| {
            r.map_err(|e| match e {
                Error::Assertion(m) => Error::Assertion(format!("trial {i}: {m}")),
                other if other.is_input_error() => other,
                other => Error::Assertion(format!("trial {i}: {other}")),
            })
        })
        .collect()
}

/// Trigonal curves of genus `g`: every cubic is Fermat with `g−2` forms,
/// matching the points cut on the scroll.
pub fn verify_theorem_a(g: u32, trials: usize, seed: u64, cfg: &NumericConfig) -> Result<TheoremAReport> {
    if !(5..=8).contains(&g) {
        return Err(Error::InvalidInput(format!("verify-a supports g in 5..=8, got {g}")));
    }
    let trials = collect_trials(trials, |i| theorem_a_trial(g, i, seed, cfg))?;
    Ok(TheoremAReport {
        claim: CLAIM_THEOREM_A.into(),
        g,
        rank: g as usize - 2,
        passed: trials.iter().all(|t| t.agreement),
        trials,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurfaceResult {
    pub b: i64,
    pub length: usize,
    pub residual: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremBTrial {
    pub trial: usize,
    pub seed: u64,
    pub split: [i64; 2],
    pub attempts: usize,
    pub hilbert: Vec<usize>,
    pub surfaces: Vec<SurfaceResult>,
    pub length: usize,
    pub residual: String,
    /// `[catalecticant bound, constructed length]`.
    pub rank_interval: [usize; 2],
    pub fermat: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremBReport {
    pub claim: String,
    pub g: u32,
    pub bound: i64,
    pub trials: Vec<TheoremBTrial>,
    pub passed: bool,
}

/// All splits `b1 ≤ b2` with `b1 + b2 = g − 5`.
pub fn splits(g: u32) -> Vec<(i64, i64)> {
    let s = i64::from(g) - 5;
    (0..=s / 2).map(|b1| (b1, s - b1)).collect()
}

fn theorem_b_trial(g: u32, split: (i64, i64), i: usize, seed: u64, cfg: &NumericConfig) -> Result<TheoremBTrial> {
    let ts = trial_seed(seed, i);
    let (_, run) = run_trial(g, Some(split), ts, cfg)?;
    let surfaces: Vec<SurfaceResult> = run
        .gammas
        .iter()
        .zip(&run.certificates)
        .map(|(gm, d)| SurfaceResult {
            b: -gm.class.f,
            length: d.rank(),
            residual: format_scalar(d.residual),
        })
        .collect();
    let cert = run.certificates.iter().min_by_key(|d| d.rank()).expect("two surfaces");
    let mut rng = ChaCha8Rng::seed_from_u64(ts ^ 0xfe24);
    let fermat = fermat_detect(&run.alpha.cubic, &mut rng, cfg)?.is_ok();
    let bound = theorem_b_bound(i64::from(g));
    if cert.rank() as i64 > bound {
        return Err(Error::Assertion(format!(
            "length {} exceeds the bound {bound}",
            cert.rank()
        )));
    }
    if fermat {
        return Err(Error::Assertion("a tetragonal curve produced a Fermat cubic".into()));
    }
    Ok(TheoremBTrial {
        trial: i,
        seed: ts,
        split: [split.0, split.1],
        attempts: run.attempts,
        hilbert: run.alpha.hilbert.clone(),
        surfaces,
        length: cert.rank(),
        residual: format_scalar(cert.residual),
        rank_interval: [rank_lower_bound(&run.alpha.cubic)?, cert.rank()],
        fermat,
    })
}

/// Tetragonal curves of genus `g`: every cubic is a sum of at most
/// `⌈(3g−7)/2⌉` cubes. Without an explicit split the trials cycle through
/// all splits.
pub fn verify_theorem_b(
    g: u32,
    split: Option<(i64, i64)>,
    trials: usize,
    seed: u64,
    cfg: &NumericConfig,
) -> Result<TheoremBReport> {
    if !(6..=8).contains(&g) {
        return Err(Error::InvalidInput(format!("verify-b supports g in 6..=8, got {g}")));
    }
    let all = splits(g);
    if let Some((b1, b2)) = split {
        if b1 < 0 || b2 < 0 || b1 + b2 != i64::from(g) - 5 {
            return Err(Error::InvalidInput(format!(
                "split ({b1},{b2}) must be non-negative with b1+b2 = {}",
                i64::from(g) - 5
            )));
        }
    }
    let pick = |i: usize| split.unwrap_or(all[i % all.len()]);
    let trials = collect_trials(trials, |i| theorem_b_trial(g, pick(i), i, seed, cfg))?;
    let bound = theorem_b_bound(i64::from(g));
    Ok(TheoremBReport {
        claim: CLAIM_THEOREM_B.into(),
        g,
        bound,
        passed: trials.iter().all(|t| t.length as i64 <= bound && !t.fermat),
        trials,
    })
}
