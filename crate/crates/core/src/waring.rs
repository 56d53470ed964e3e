//! Waring decompositions of forms, chiefly cubics: the catalecticant rank
//! bound, power-sum fitting, and detection of Fermat cubics through the
//! pencil of quadrics `η·f`, `η′·f`.

use std::cmp::Ordering;

use rand::Rng;
use rug::{Complex, Rational};

use crate::apolarity::{catalecticant, monomial_index};
use crate::error::{Error, Result};
use crate::exact::{monomial_basis, ExactMatrix, Monomial, Polynomial};
use crate::numeric::{
    abs_f64, eps, from_rational, kernel_vector, least_squares, max_abs, powu, rational_candidate, roots, ComplexMatrix,
    DualPoint, NumericConfig,
};
use crate::univariate::UniPoly;

/// `f = Σ λ_i ℓ_i^d`, with the linear forms given by their coefficient
/// vectors. `residual` is the largest coefficient error relative to the
/// largest coefficient of `f`; it is 0 on exact paths.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub forms: Vec<DualPoint>,
    pub weights: DualPoint,
    pub residual: f64,
}

impl Decomposition {
    pub fn rank(&self) -> usize {
        self.forms.len()
    }

    pub fn is_exact(&self) -> bool {
        self.weights.is_exact() && self.forms.iter().all(DualPoint::is_exact)
    }

    /// The forms as normalized complex vectors (first significant entry 1).
    pub fn normalized_forms(&self, prec: u32) -> Vec<Vec<Complex>> {
        self.forms.iter().map(|p| normalize(&p.to_complex(prec))).collect()
    }
}

/// Why a Fermat detection did not produce a decomposition.
#[derive(Clone, Debug, PartialEq)]
pub enum FermatFailure {
    /// The catalecticant bound is below the number of variables.
    Degenerate { bound: usize },
    /// Every pencil tried had a repeated eigenvalue or was singular.
    NotSimple,
    /// The dual points were found but do not fit `f`.
    Residual(f64),
}

/// Why a pencil of quadrics could not be diagonalized.
#[derive(Clone, Debug, PartialEq)]
pub enum PencilFailure {
    /// `det(Q + λQ′)` vanishes identically.
    Singular,
    /// Repeated generalized eigenvalue (possibly a Jordan block).
    NonSimpleSpectrum,
    /// Root finding or kernel extraction did not certify.
    Numerical(String),
}

/// Rank of the first catalecticant, a lower bound for the Waring rank.
pub fn rank_lower_bound(f: &Polynomial) -> Result<usize> {
    if f.degree() != 3 {
        return Err(Error::NotCubic(f.degree()));
    }
    Ok(catalecticant(f, 1)?.rank())
}

fn multinomial(m: &Monomial) -> u64 {
    let d = m.degree();
    (1..=u64::from(d)).product::<u64>() / m.factorial_weight()
}

/// Coefficient vector of `ℓ^d` over `monomial_basis(n, d)`.
pub fn power_coeffs_exact(l: &[Rational], d: u32) -> Vec<Rational> {
    monomial_basis(l.len(), d)
        .iter()
        .map(|m| {
            let mut c = Rational::from(multinomial(m));
            for (x, &e) in l.iter().zip(m.exps()) {
                if e > 0 {
                    c *= Rational::from(rug::ops::Pow::pow(x, e as i32));
                }
            }
            c
        })
        .collect()
}

pub fn power_coeffs_complex(l: &[Complex], d: u32) -> Vec<Complex> {
    let prec = l[0].prec().0;
    monomial_basis(l.len(), d)
        .iter()
        .map(|m| {
            let mut c = Complex::with_val(prec, multinomial(m));
            for (x, &e) in l.iter().zip(m.exps()) {
                if e > 0 {
                    c *= powu(x, e);
                }
            }
            c
        })
        .collect()
}

fn check_points(points: &[DualPoint], nvars: usize, prec: u32) -> Result<()> {
    if points.is_empty() {
        return Err(Error::EmptyPoints);
    }
    let cs: Vec<Vec<Complex>> = points.iter().map(|p| p.to_complex(prec)).collect();
    for (i, p) in points.iter().enumerate() {
        if p.len() != nvars {
            return Err(Error::NvarsMismatch(p.len(), nvars));
        }
        if max_abs(&cs[i]) == 0.0 {
            return Err(Error::Degenerate(format!("dual point {i} is zero")));
        }
    }
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            let same = match (&points[i], &points[j]) {
                (DualPoint::Exact(a), DualPoint::Exact(b)) => {
                    ExactMatrix::from_rows(vec![a.clone(), b.clone()])?.rank() == 1
                }
                _ => proportional(&cs[i], &cs[j], eps(prec / 4)),
            };
            if same {
                return Err(Error::CoincidentPoints(i, j));
            }
        }
    }
    Ok(())
}

fn proportional(a: &[Complex], b: &[Complex], tol: f64) -> bool {
    let scale = max_abs(a) * max_abs(b);
    for r in 0..a.len() {
        for s in r + 1..a.len() {
            let minor = Complex::with_val(a[0].prec(), &a[r] * &b[s]) - Complex::with_val(a[0].prec(), &a[s] * &b[r]);
            if abs_f64(&minor) > tol * scale {
                return false;
            }
        }
    }
    true
}

/// Solves `f = Σ λ_i ℓ_i^d` for the weights. `Ok(Err(r))` reports the
/// relative residual `r` of the best fit when `f` is not in the span.
pub fn power_sum_fit_report(
    points: &[DualPoint],
    f: &Polynomial,
    cfg: &NumericConfig,
) -> Result<std::result::Result<Decomposition, f64>> {
    let n = f.nvars();
    let d = f.degree();
    check_points(points, n, cfg.precision)?;
    let target = f.coeffs();
    if points.iter().all(DualPoint::is_exact) {
        let columns: Vec<Vec<Rational>> = points
            .iter()
            .map(|p| match p {
                DualPoint::Exact(l) => power_coeffs_exact(l, d),
                DualPoint::Approx(_) => unreachable!(),
            })
            .collect();
        let a = ExactMatrix::from_rows_with_cols(columns, target.len())?.transpose();
        if let Some(w) = a.solve(&target)? {
            return Ok(Ok(Decomposition {
                forms: points.to_vec(),
                weights: DualPoint::Exact(w),
                residual: 0.0,
            }));
        }
    }
    let prec = cfg.precision;
    let columns: Vec<Vec<Complex>> = points
        .iter()
        .map(|p| power_coeffs_complex(&p.to_complex(prec), d))
        .collect();
    let a = ComplexMatrix::from_columns(prec, target.len(), &columns);
    let b: Vec<Complex> = target.iter().map(|q| from_rational(prec, q)).collect();
    let Some(w) = least_squares(&a, &b) else {
        if points.iter().all(DualPoint::is_exact) {
            return Ok(Err(f64::INFINITY));
        }
        return Err(Error::Degenerate(
            "the powers of the dual points are linearly dependent".into(),
        ));
    };
    let residual = relative_residual(&a, &w, &b);
    if residual > cfg.tolerance || points.iter().all(DualPoint::is_exact) {
        return Ok(Err(residual));
    }
    Ok(Ok(Decomposition {
        forms: points.to_vec(),
        weights: DualPoint::Approx(w),
        residual,
    }))
}

fn relative_residual(a: &ComplexMatrix, w: &[Complex], b: &[Complex]) -> f64 {
    let fitted = a.mul_vec(w);
    let diff: Vec<Complex> = fitted
        .iter()
        .zip(b)
        .map(|(x, y)| Complex::with_val(x.prec(), x - y))
        .collect();
    max_abs(&diff) / max_abs(b).max(f64::MIN_POSITIVE)
}

/// `f = Σ λ_i ℓ_i^d` as a linear system in `λ`; `None` when `f` is outside
/// the span of the powers.
pub fn power_sum_fit(points: &[DualPoint], f: &Polynomial, cfg: &NumericConfig) -> Result<Option<Decomposition>> {
    Ok(power_sum_fit_report(points, f, cfg)?.ok())
}

/// Symmetric Gram matrix of a quadric: `Q(x) = xᵀ S x`.
pub fn quadric_matrix(q: &Polynomial) -> Result<ExactMatrix> {
    if q.degree() != 2 {
        return Err(Error::DegreeMismatch(q.degree(), 2));
    }
    let n = q.nvars();
    let mut s = ExactMatrix::zeros(n, n);
    for (m, c) in q.terms() {
        let idx: Vec<usize> = (0..n).filter(|&i| m.exps()[i] > 0).collect();
        match idx[..] {
            [i] => s.set(i, i, c.clone()),
            [i, j] => {
                let half = Rational::from(c / 2u32);
                s.set(i, j, half.clone());
                s.set(j, i, half);
            }
            _ => unreachable!("degree-2 monomial"),
        }
    }
    Ok(s)
}

fn add_scaled(a: &ExactMatrix, b: &ExactMatrix, c: &Rational) -> ExactMatrix {
    let mut out = a.clone();
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            out.set(i, j, a.get(i, j) + Rational::from(b.get(i, j) * c));
        }
    }
    out
}

/// `det(b − λ a)` as an exact polynomial in `λ`, by interpolation.
fn pencil_polynomial(a: &ExactMatrix, b: &ExactMatrix) -> Result<UniPoly> {
    let n = a.rows();
    let xs: Vec<Rational> = (0..=n as i64).map(Rational::from).collect();
    let mut ys = Vec::with_capacity(xs.len());
    for x in &xs {
        ys.push(add_scaled(b, a, &Rational::from(-x)).determinant()?);
    }
    // Newton divided differences
    let mut coef = ys.clone();
    for level in 1..xs.len() {
        for i in (level..xs.len()).rev() {
            let num = Rational::from(&coef[i] - &coef[i - 1]);
            coef[i] = num / Rational::from(&xs[i] - &xs[i - level]);
        }
    }
    let mut p = UniPoly::zero();
    for i in (0..xs.len()).rev() {
        let shift = UniPoly::new(vec![Rational::from(-&xs[i]), Rational::from(1)]);
        p = &(&p * &shift) + &UniPoly::constant(coef[i].clone());
    }
    Ok(p)
}

/// Common "eigenbasis" of the pencil `(Q, Q′)`: linear forms `ℓ_k` with
/// `Q = Σ α_k ℓ_k²` and `Q′ = Σ β_k ℓ_k²`, returned as dual points.
pub fn simultaneous_diagonalize(
    q: &Polynomial,
    q2: &Polynomial,
    cfg: &NumericConfig,
) -> Result<std::result::Result<Vec<DualPoint>, PencilFailure>> {
    if q.nvars() != q2.nvars() {
        return Err(Error::NvarsMismatch(q.nvars(), q2.nvars()));
    }
    let n = q.nvars();
    let a = quadric_matrix(q)?;
    let b = quadric_matrix(q2)?;
    // a base member of the pencil with nonzero determinant
    let mut base = None;
    for c in 0..=(n as i64 + 1) {
        let candidate = add_scaled(&a, &b, &Rational::from(c));
        if candidate.determinant()? != 0 {
            base = Some(candidate);
            break;
        }
    }
    let Some(base) = base else {
        return Ok(Err(PencilFailure::Singular));
    };
    let p = pencil_polynomial(&base, &b)?;
    if !p.is_squarefree() {
        return Ok(Err(PencilFailure::NonSimpleSpectrum));
    }
    let prec = cfg.precision;
    let lambdas = match roots(&p, prec) {
        Ok(r) => r,
        Err(e) => return Ok(Err(PencilFailure::Numerical(e.to_string()))),
    };
    let mut points = Vec::with_capacity(n);
    for root in lambdas {
        let point = match &root.exact {
            Some(lambda) => {
                let m = add_scaled(&b, &base, &Rational::from(-lambda));
                let kernel = m.kernel();
                if kernel.len() != 1 {
                    return Ok(Err(PencilFailure::NonSimpleSpectrum));
                }
                DualPoint::Exact(base.mul_vec(&kernel[0])?)
            }
            None => {
                let wp = prec + 32;
                let lambda = Complex::with_val(wp, &root.value);
                let mut m = ComplexMatrix::zeros(wp, n, n);
                for i in 0..n {
                    for j in 0..n {
                        let v = from_rational(wp, b.get(i, j)) - Complex::with_val(wp, &lambda * base.get(i, j));
                        m.set(i, j, v);
                    }
                }
                let v = match kernel_vector(&m) {
                    Ok(v) => v,
                    Err(e) => return Ok(Err(PencilFailure::Numerical(e.to_string()))),
                };
                let l: Vec<Complex> = (0..n)
                    .map(|i| {
                        let mut acc = Complex::new(wp);
                        for (j, vj) in v.iter().enumerate() {
                            acc += Complex::with_val(wp, vj * base.get(i, j));
                        }
                        Complex::with_val(prec, acc)
                    })
                    .collect();
                DualPoint::Approx(normalize(&l))
            }
        };
        points.push(normalize_point(point, prec));
    }
    sort_points(&mut points, prec);
    Ok(Ok(points))
}

/// Scales so the first entry of significant size is 1.
pub fn normalize(v: &[Complex]) -> Vec<Complex> {
    let prec = v[0].prec().0;
    let scale = max_abs(v);
    let Some(lead) = v.iter().find(|z| abs_f64(z) > eps(prec / 2) * scale) else {
        return v.to_vec();
    };
    let lead = lead.clone();
    v.iter().map(|z| Complex::with_val(prec, z / &lead)).collect()
}

fn normalize_point(p: DualPoint, prec: u32) -> DualPoint {
    match p {
        DualPoint::Exact(v) => {
            let lead = v
                .iter()
                .find(|x| **x != 0)
                .cloned()
                .unwrap_or_else(|| Rational::from(1));
            DualPoint::Exact(v.into_iter().map(|x| x / &lead).collect())
        }
        DualPoint::Approx(v) => DualPoint::Approx(normalize(
            &v.iter().map(|z| Complex::with_val(prec, z)).collect::<Vec<_>>(),
        )),
    }
}

/// Deterministic order: position of the leading entry, then the remaining
/// entries by real and imaginary part.
fn sort_points(points: &mut [DualPoint], prec: u32) {
    let key = |p: &DualPoint| -> Vec<(f64, f64)> {
        p.to_complex(prec)
            .iter()
            .map(|z| (z.real().to_f64(), z.imag().to_f64()))
            .collect()
    };
    points.sort_by(|a, b| {
        let (ka, kb) = (key(a), key(b));
        let lead = |k: &[(f64, f64)]| k.iter().position(|(r, i)| r.abs() + i.abs() > 0.0);
        lead(&ka).cmp(&lead(&kb)).then_with(|| {
            for (x, y) in ka.iter().zip(&kb) {
                let o = x.0.total_cmp(&y.0).then(x.1.total_cmp(&y.1));
                if o != Ordering::Equal {
                    return o;
                }
            }
            Ordering::Equal
        })
    });
}

/// A random nonzero dual linear form with small integer coefficients.
pub fn random_dual_form<R: Rng>(rng: &mut R, nvars: usize) -> Vec<Rational> {
    loop {
        let v: Vec<i64> = (0..nvars).map(|_| rng.gen_range(-5..=5)).collect();
        if v.iter().any(|&x| x != 0) {
            return v.into_iter().map(Rational::from).collect();
        }
    }
}

/// Decides whether the cubic `f` in `n` variables is a sum of `n` cubes of
/// independent linear forms, returning the decomposition when it is.
pub fn fermat_detect<R: Rng>(
    f: &Polynomial,
    rng: &mut R,
    cfg: &NumericConfig,
) -> Result<std::result::Result<Decomposition, FermatFailure>> {
    let n = f.nvars();
    let bound = rank_lower_bound(f)?;
    if bound < n {
        return Ok(Err(FermatFailure::Degenerate { bound }));
    }
    if n == 1 {
        let one = vec![Rational::from(1)];
        let d = Decomposition {
            forms: vec![DualPoint::Exact(one)],
            weights: DualPoint::Exact(vec![f.coeffs()[0].clone()]),
            residual: 0.0,
        };
        return Ok(Ok(d));
    }
    let mut points = None;
    for _ in 0..5 {
        let eta = Polynomial::linear(&random_dual_form(rng, n));
        let eta2 = Polynomial::linear(&random_dual_form(rng, n));
        let q = eta.contract(f)?;
        let q2 = eta2.contract(f)?;
        if let Ok(p) = simultaneous_diagonalize(&q, &q2, cfg)? {
            points = Some(p);
            break;
        }
    }
    let Some(points) = points else {
        return Ok(Err(FermatFailure::NotSimple));
    };
    if let Some(exact) = rationalize(&points, cfg.precision) {
        if let Some(dec) = power_sum_fit(&exact, f, cfg)? {
            return Ok(Ok(dec));
        }
    }
    match power_sum_fit_report(&points, f, cfg) {
        Ok(Ok(dec)) => Ok(Ok(dec)),
        Ok(Err(residual)) => Ok(Err(FermatFailure::Residual(residual))),
        Err(Error::CoincidentPoints(..)) | Err(Error::Degenerate(_)) => Ok(Err(FermatFailure::NotSimple)),
        Err(e) => Err(e),
    }
}

/// Exact versions of numerically rational points, when every coordinate is.
pub fn rationalize(points: &[DualPoint], prec: u32) -> Option<Vec<DualPoint>> {
    points
        .iter()
        .map(|p| match p {
            DualPoint::Exact(v) => Some(DualPoint::Exact(v.clone())),
            DualPoint::Approx(v) => v
                .iter()
                .map(|z| rational_candidate(z, prec))
                .collect::<Option<Vec<_>>>()
                .map(DualPoint::Exact),
        })
        .collect()
}

/// The form `Σ λ_i ℓ_i^d` rebuilt from a decomposition, in complex arithmetic.
pub fn reconstruct(dec: &Decomposition, nvars: usize, d: u32, prec: u32) -> Vec<Complex> {
    let weights = dec.weights.to_complex(prec);
    let mut out = vec![Complex::new(prec); monomial_index(nvars, d).len()];
    for (l, w) in dec.forms.iter().zip(&weights) {
        for (o, c) in out.iter_mut().zip(power_coeffs_complex(&l.to_complex(prec), d)) {
            *o += c * w;
        }
    }
    out
}
