//! High-precision complex arithmetic for the few steps that leave Q:
//! eigenvalues of quadric pencils and roots of univariate eliminants.

use rug::ops::Pow;
use rug::{Complex, Float, Rational};

use crate::error::{Error, Result};
use crate::univariate::UniPoly;

pub const DEFAULT_PRECISION: u32 = 128;
pub const DEFAULT_TOLERANCE: f64 = 1e-10;

/// Working precision and the relative residual tolerance.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NumericConfig {
    pub precision: u32,
    pub tolerance: f64,
}

impl Default for NumericConfig {
    fn default() -> Self {
        NumericConfig {
            precision: DEFAULT_PRECISION,
            tolerance: DEFAULT_TOLERANCE,
        }
    }
}

/// A point of the dual space, exact when its coordinates are rational.
#[derive(Clone, Debug, PartialEq)]
pub enum DualPoint {
    Exact(Vec<Rational>),
    Approx(Vec<Complex>),
}

impl DualPoint {
    pub fn len(&self) -> usize {
        match self {
            DualPoint::Exact(v) => v.len(),
            DualPoint::Approx(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, DualPoint::Exact(_))
    }

    pub fn to_complex(&self, prec: u32) -> Vec<Complex> {
        match self {
            DualPoint::Exact(v) => v.iter().map(|q| from_rational(prec, q)).collect(),
            DualPoint::Approx(v) => v.iter().map(|z| Complex::with_val(prec, z)).collect(),
        }
    }
}

pub fn from_rational(prec: u32, q: &Rational) -> Complex {
    Complex::with_val(prec, q)
}

pub fn abs(z: &Complex) -> Float {
    Float::with_val(z.prec().0, z.abs_ref())
}

pub fn abs_f64(z: &Complex) -> f64 {
    abs(z).to_f64()
}

pub fn max_abs(v: &[Complex]) -> f64 {
    v.iter().map(abs_f64).fold(0.0, f64::max)
}

/// `2^-bits` as an f64 (clamped to the smallest normal).
pub fn eps(bits: u32) -> f64 {
    2f64.powi(-(bits.min(1000) as i32)).max(f64::MIN_POSITIVE)
}

/// Decimal rendering with enough digits for the given precision.
pub fn format_float(x: &Float, prec: u32) -> String {
    let digits = (prec as f64 * std::f64::consts::LOG10_2).ceil() as usize + 1;
    x.to_string_radix(10, Some(digits))
}

/// Compact rendering of a residual or tolerance.
pub fn format_scalar(x: f64) -> String {
    if x == 0.0 {
        "0".to_string()
    } else {
        format!("{x:.3e}")
    }
}

/// Horner evaluation of `p` and `p'` at `z`.
fn eval_with_derivative(coeffs: &[Complex], z: &Complex) -> (Complex, Complex) {
    let prec = z.prec().0;
    let mut p = Complex::with_val(prec, 0);
    let mut dp = Complex::with_val(prec, 0);
    for c in coeffs.iter().rev() {
        dp *= z;
        dp += &p;
        p *= z;
        p += c;
    }
    (p, dp)
}

/// A root with its exact value when it happens to be rational.
#[derive(Clone, Debug)]
pub struct Root {
    pub value: Complex,
    pub exact: Option<Rational>,
}

/// All complex roots of a squarefree polynomial by Aberth–Ehrlich iteration,
/// certified by a relative backward-error bound and pairwise separation.
/// Rational roots are recognised by continued fractions and checked exactly.
pub fn roots(p: &UniPoly, prec: u32) -> Result<Vec<Root>> {
    let n = match p.degree() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => return Ok(Vec::new()),
        Some(n) => n,
    };
    if !p.is_squarefree() {
        return Err(Error::RootFinding("polynomial has repeated roots".into()));
    }
    let wp = prec + 64;
    let monic = p.monic();
    let coeffs: Vec<Complex> = monic.coeffs().iter().map(|q| from_rational(wp, q)).collect();

    // Fujiwara-type radius for the starting circle.
    let radius = (0..n)
        .map(|i| {
            let r = monic.coeffs()[i].to_f64().abs();
            if r == 0.0 {
                0.0
            } else {
                r.powf(1.0 / (n - i) as f64)
            }
        })
        .fold(0.0f64, f64::max)
        .clamp(1e-3, 1e100)
        * 2.0;
    let mut z: Vec<Complex> = (0..n)
        .map(|k| {
            let angle = std::f64::consts::TAU * k as f64 / n as f64 + 0.4;
            Complex::with_val(wp, (radius * angle.cos(), radius * angle.sin()))
        })
        .collect();

    let stop = Float::with_val(wp, Float::i_exp(1, -((prec + 16) as i32)));
    let mut converged = false;
    for _ in 0..2000 {
        let mut worst = Float::with_val(wp, 0);
        for k in 0..n {
            let (pz, dpz) = eval_with_derivative(&coeffs, &z[k]);
            if pz.is_zero() {
                continue;
            }
            let w = Complex::with_val(wp, &pz / &dpz);
            let mut s = Complex::with_val(wp, 0);
            for j in 0..n {
                if j != k {
                    let diff = Complex::with_val(wp, &z[k] - &z[j]);
                    s += diff.recip();
                }
            }
            let denom = Complex::with_val(wp, 1) - Complex::with_val(wp, &w * &s);
            let corr = w / denom;
            let scale = abs(&z[k]).max(&Float::with_val(wp, 1));
            let rel = abs(&corr) / scale;
            if rel > worst {
                worst = rel;
            }
            z[k] -= corr;
        }
        if worst <= stop {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::RootFinding(format!(
            "Aberth iteration did not converge (degree {n})"
        )));
    }

    let tol_res = Float::with_val(wp, Float::i_exp(1, -((prec / 2) as i32)));
    let tol_sep = eps(prec / 4);
    let abs_coeffs: Vec<Float> = coeffs.iter().map(abs).collect();
    for (k, zk) in z.iter().enumerate() {
        let (pz, _) = eval_with_derivative(&coeffs, zk);
        let az = abs(zk);
        let mut bound = Float::with_val(wp, 0);
        for c in abs_coeffs.iter().rev() {
            bound *= &az;
            bound += c;
        }
        if abs(&pz) > Float::with_val(wp, &tol_res * &bound) {
            return Err(Error::RootFinding(format!("root {k} failed the residual certificate")));
        }
        for (j, zj) in z.iter().enumerate().skip(k + 1) {
            let d = abs_f64(&Complex::with_val(wp, zk - zj));
            if d <= tol_sep * az.to_f64().max(1.0) {
                return Err(Error::RootFinding(format!("roots {k} and {j} form a cluster")));
            }
        }
    }

    let mut out: Vec<Root> = z
        .into_iter()
        .map(|zk| {
            let exact = rational_candidate(&zk, prec).filter(|q| p.eval(q) == 0);
            let value = match &exact {
                Some(q) => from_rational(prec, q),
                None => Complex::with_val(prec, &zk),
            };
            Root { value, exact }
        })
        .collect();
    out.sort_by(|a, b| {
        let (ar, ai) = (a.value.real().to_f64(), a.value.imag().to_f64());
        let (br, bi) = (b.value.real().to_f64(), b.value.imag().to_f64());
        ar.total_cmp(&br).then(ai.total_cmp(&bi))
    });
    Ok(out)
}

/// Best continued-fraction approximation of a numerically real value,
/// accepted once it agrees to half the working precision.
pub(crate) fn rational_candidate(z: &Complex, prec: u32) -> Option<Rational> {
    let re = z.real();
    let scale = re.to_f64().abs().max(1.0);
    if z.imag().to_f64().abs() > eps(prec / 2) * scale {
        return None;
    }
    let x = Rational::try_from(re).ok()?;
    let tol = Rational::from_f64(eps(prec / 2) * scale)?;
    let max_den = rug::Integer::from(1) << (prec / 4);
    let (mut h0, mut h1) = (rug::Integer::from(0), rug::Integer::from(1));
    let (mut k0, mut k1) = (rug::Integer::from(1), rug::Integer::from(0));
    let mut rest = x.clone();
    for _ in 0..(prec as usize) {
        let a = rest.clone().floor().numer().clone();
        let h2 = rug::Integer::from(&a * &h1) + &h0;
        let k2 = rug::Integer::from(&a * &k1) + &k0;
        if k2 > max_den {
            return None;
        }
        let cand = Rational::from((h2.clone(), k2.clone()));
        if Rational::from(&x - &cand).abs() <= tol {
            return Some(cand);
        }
        let frac = rest - Rational::from(a);
        if frac == 0 {
            return None;
        }
        rest = frac.recip();
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
    }
    None
}

/// Dense complex matrix, row major.
#[derive(Clone, Debug)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex>,
}

impl ComplexMatrix {
    pub fn zeros(prec: u32, rows: usize, cols: usize) -> Self {
        ComplexMatrix {
            rows,
            cols,
            data: vec![Complex::new(prec); rows * cols],
        }
    }

    pub fn from_columns(prec: u32, rows: usize, columns: &[Vec<Complex>]) -> Self {
        let mut m = ComplexMatrix::zeros(prec, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, Complex::with_val(prec, v));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Complex {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Complex) {
        self.data[i * self.cols + j] = v;
    }

    pub fn column(&self, j: usize) -> Vec<Complex> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn mul_vec(&self, v: &[Complex]) -> Vec<Complex> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = Complex::new(v.first().map_or(64, |z| z.prec().0));
                for (j, x) in v.iter().enumerate() {
                    acc += Complex::with_val(acc.prec(), self.get(i, j) * x);
                }
                acc
            })
            .collect()
    }
}

fn dot_conj(a: &[Complex], b: &[Complex]) -> Complex {
    let prec = a[0].prec();
    let mut acc = Complex::new(prec);
    for (x, y) in a.iter().zip(b) {
        acc += Complex::with_val(prec, x.conj_ref()) * y;
    }
    acc
}

fn norm(a: &[Complex]) -> Float {
    let prec = a[0].prec().0;
    let mut acc = Float::with_val(prec, 0);
    for x in a {
        acc += Float::with_val(prec, x.norm_ref());
    }
    acc.sqrt()
}

/// Least-squares solution of `A x ≈ b` by modified Gram–Schmidt, or `None`
/// when the columns are numerically dependent.
pub fn least_squares(a: &ComplexMatrix, b: &[Complex]) -> Option<Vec<Complex>> {
    let (m, n) = (a.rows, a.cols);
    assert_eq!(b.len(), m);
    if n == 0 {
        return Some(Vec::new());
    }
    if m == 0 || n > m {
        return None;
    }
    let prec = a.get(0, 0).prec().0;
    let cutoff = eps(prec / 2);
    let mut q: Vec<Vec<Complex>> = (0..n).map(|j| a.column(j)).collect();
    let mut r = vec![vec![Complex::new(prec); n]; n];
    for j in 0..n {
        let original = norm(&q[j]).to_f64();
        let (done, rest) = q.split_at_mut(j);
        for i in 0..j {
            let c = dot_conj(&done[i], &rest[0]);
            for (x, y) in rest[0].iter_mut().zip(&done[i]) {
                *x -= Complex::with_val(prec, &c * y);
            }
            r[i][j] = c;
        }
        let nj = norm(&q[j]);
        if nj.to_f64() <= cutoff * original.max(f64::MIN_POSITIVE) || nj.is_zero() {
            return None;
        }
        for x in q[j].iter_mut() {
            *x /= &nj;
        }
        r[j][j] = Complex::with_val(prec, &nj);
    }
    let mut rhs: Vec<Complex> = q.iter().map(|qi| dot_conj(qi, b)).collect();
    let mut x = vec![Complex::new(prec); n];
    for j in (0..n).rev() {
        let mut v = std::mem::replace(&mut rhs[j], Complex::new(prec));
        for k in j + 1..n {
            v -= Complex::with_val(prec, &r[j][k] * &x[k]);
        }
        x[j] = v / &r[j][j];
    }
    Some(x)
}

/// A unit vector spanning the numerical kernel of a square matrix of corank
/// one, via Gaussian elimination with complete pivoting.
pub fn kernel_vector(a: &ComplexMatrix) -> Result<Vec<Complex>> {
    let n = a.rows;
    if n != a.cols || n == 0 {
        return Err(Error::Shape("kernel_vector needs a nonempty square matrix".into()));
    }
    let prec = a.get(0, 0).prec().0;
    let mut m: Vec<Vec<Complex>> = (0..n).map(|i| (0..n).map(|j| a.get(i, j).clone()).collect()).collect();
    let mut colperm: Vec<usize> = (0..n).collect();
    let mut pivot_sizes = Vec::with_capacity(n);
    for step in 0..n {
        let mut best = (step, step, -1.0f64);
        for (i, row) in m.iter().enumerate().skip(step) {
            for (j, v) in row.iter().enumerate().skip(step) {
                let s = abs_f64(v);
                if s > best.2 {
                    best = (i, j, s);
                }
            }
        }
        let (pi, pj, size) = best;
        pivot_sizes.push(size);
        m.swap(step, pi);
        for row in m.iter_mut() {
            row.swap(step, pj);
        }
        colperm.swap(step, pj);
        if step == n - 1 {
            break;
        }
        let pivot = m[step][step].clone();
        if pivot.is_zero() {
            continue;
        }
        for i in step + 1..n {
            let factor = Complex::with_val(prec, &m[i][step] / &pivot);
            if factor.is_zero() {
                continue;
            }
            let (head, tail) = m.split_at_mut(i);
            for (x, s) in tail[0][step..n].iter_mut().zip(&head[step][step..n]) {
                *x -= Complex::with_val(prec, &factor * s);
            }
        }
    }
    let largest = pivot_sizes[0];
    let last = pivot_sizes[n - 1];
    if largest == 0.0 {
        return Err(Error::RootFinding(
            "zero matrix has no distinguished kernel vector".into(),
        ));
    }
    if last > eps(prec / 3) * largest {
        return Err(Error::RootFinding("matrix is numerically nonsingular".into()));
    }
    if n >= 2 && pivot_sizes[n - 2] <= eps(prec / 2) * largest {
        return Err(Error::RootFinding("kernel has dimension above one".into()));
    }
    let mut y = vec![Complex::new(prec); n];
    y[n - 1] = Complex::with_val(prec, 1);
    for i in (0..n - 1).rev() {
        let mut v = Complex::new(prec);
        for j in i + 1..n {
            v -= Complex::with_val(prec, &m[i][j] * &y[j]);
        }
        y[i] = v / &m[i][i];
    }
    let mut x = vec![Complex::new(prec); n];
    for (k, &c) in colperm.iter().enumerate() {
        x[c] = y[k].clone();
    }
    let nx = norm(&x);
    for v in x.iter_mut() {
        *v /= &nx;
    }
    Ok(x)
}

/// `z^e` for small non-negative `e`.
pub fn powu(z: &Complex, e: u32) -> Complex {
    Complex::with_val(z.prec(), z.pow(e))
}
