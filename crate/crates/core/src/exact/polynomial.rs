use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rug::ops::Pow;
use rug::Rational;

use super::matrix::ExactMatrix;
use super::monomial::{monomial_basis, Monomial};
use crate::error::{Error, Result};

/// A homogeneous form with exact rational coefficients.
///
/// The same type holds forms `f ∈ S = Q[x]` and dual operators `D ∈ T = Q[∂]`;
/// which role a value plays is decided by the operation it is passed to.
/// Zero coefficients are never stored, and the zero form keeps its degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    degree: u32,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(nvars: usize, degree: u32) -> Self {
        Polynomial {
            nvars,
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// Builds a form from `(monomial, coefficient)` pairs, summing repeats.
    pub fn from_terms<I>(nvars: usize, degree: u32, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = Polynomial::zero(nvars, degree);
        for (m, c) in terms {
            if m.nvars() != nvars {
                return Err(Error::NvarsMismatch(m.nvars(), nvars));
            }
            if m.degree() != degree {
                return Err(Error::DegreeMismatch(m.degree(), degree));
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    /// Coefficients listed in `monomial_basis(nvars, degree)` order.
    pub fn from_coeffs(nvars: usize, degree: u32, coeffs: &[Rational]) -> Self {
        let basis = monomial_basis(nvars, degree);
        assert_eq!(basis.len(), coeffs.len(), "coefficient vector length");
        let mut p = Polynomial::zero(nvars, degree);
        for (m, c) in basis.into_iter().zip(coeffs) {
            p.add_term(m, c.clone());
        }
        p
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let mut p = Polynomial::zero(m.nvars(), m.degree());
        p.add_term(m, c);
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Polynomial::monomial(Monomial::var(nvars, i), Rational::from(1))
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Polynomial::monomial(Monomial::one(nvars), c)
    }

    /// The linear form `Σ c_i x_i`.
    pub fn linear(coeffs: &[Rational]) -> Self {
        Polynomial::from_coeffs(coeffs.len(), 1, coeffs)
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c == 0 {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += c;
                if *existing == 0 {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Dense coefficient vector in `monomial_basis` order.
    pub fn coeffs(&self) -> Vec<Rational> {
        monomial_basis(self.nvars, self.degree)
            .iter()
            .map(|m| self.coefficient(m))
            .collect()
    }

    pub fn leading_coefficient(&self) -> Option<&Rational> {
        self.terms.values().next()
    }

    /// Scales so the first nonzero coefficient in graded-lex order is 1.
    pub fn normalized(&self) -> Self {
        match self.leading_coefficient() {
            None => self.clone(),
            Some(lc) => {
                let inv = Rational::from(lc.recip_ref());
                self.scale(&inv)
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if *c == 0 {
            return Polynomial::zero(self.nvars, self.degree);
        }
        Polynomial {
            nvars: self.nvars,
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (m.clone(), Rational::from(v * c)))
                .collect(),
        }
    }

    fn check_compatible(&self, other: &Polynomial) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::NvarsMismatch(self.nvars, other.nvars));
        }
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch(self.degree, other.degree));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        if self.nvars != other.nvars {
            return Err(Error::NvarsMismatch(self.nvars, other.nvars));
        }
        let mut out = Polynomial::zero(self.nvars, self.degree + other.degree);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.mul(b), Rational::from(ca * cb));
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::constant(self.nvars, Rational::from(1));
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// The apolarity action `self · f` with `self` read as a dual operator:
    /// `∂^a · x^b = a!·binom(b,a)·x^(b−a)` when `a ≤ b`, zero otherwise.
    pub fn contract(&self, f: &Polynomial) -> Result<Polynomial> {
        if self.nvars != f.nvars {
            return Err(Error::NvarsMismatch(self.nvars, f.nvars));
        }
        let out_degree = f.degree.saturating_sub(self.degree);
        let mut out = Polynomial::zero(self.nvars, out_degree);
        if self.degree > f.degree {
            return Ok(out);
        }
        for (a, da) in &self.terms {
            for (b, fb) in &f.terms {
                let factor = Monomial::falling_factor(b, a);
                if factor == 0 {
                    continue;
                }
                let rest = b.checked_div(a).expect("divisibility checked");
                let c = Rational::from(da * fb) * factor;
                out.add_term(rest, c);
            }
        }
        Ok(out)
    }

    /// The perfect pairing `S_d × T_d → Q`, `(f, D) ↦ D · f`.
    pub fn pair(f: &Polynomial, dual: &Polynomial) -> Result<Rational> {
        f.check_compatible(dual)?;
        let c = dual.contract(f)?;
        Ok(c.coefficient(&Monomial::one(f.nvars)))
    }

    /// `f ∘ M`: substitutes `x_i ↦ Σ_j M[i][j] x_j`.
    pub fn change_coordinates(&self, m: &ExactMatrix) -> Result<Polynomial> {
        if m.rows() != self.nvars || m.cols() != self.nvars {
            return Err(Error::Shape(format!(
                "coordinate change must be {n}x{n}, got {}x{}",
                m.rows(),
                m.cols(),
                n = self.nvars
            )));
        }
        if m.rank() < self.nvars {
            return Err(Error::Singular);
        }
        Ok(self.substitute_linear(m))
    }

    /// `f ∘ M` for any `nvars × k` matrix, producing a form in `k` variables.
    pub fn substitute_linear(&self, m: &ExactMatrix) -> Polynomial {
        assert_eq!(m.rows(), self.nvars);
        let images: Vec<Polynomial> = (0..self.nvars).map(|i| Polynomial::linear(m.row(i))).collect();
        let k = m.cols();
        let mut out = Polynomial::zero(k, self.degree);
        let mut power_cache: Vec<Vec<Polynomial>> = images
            .iter()
            .map(|l| vec![Polynomial::constant(k, Rational::from(1)), l.clone()])
            .collect();
        for (mono, c) in &self.terms {
            let mut term = Polynomial::constant(k, c.clone());
            for (i, &e) in mono.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let cache = &mut power_cache[i];
                while cache.len() <= e as usize {
                    let next = &cache[cache.len() - 1] * &images[i];
                    cache.push(next);
                }
                term = &term * &cache[e as usize];
            }
            for (mm, cc) in term.terms {
                out.add_term(mm, cc);
            }
        }
        out
    }

    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.nvars);
        let mut acc = Rational::new();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exps()) {
                if e > 0 {
                    t *= Rational::from(x.pow(e as i32));
                }
            }
            acc += t;
        }
        acc
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("incompatible forms in addition")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("incompatible forms in subtraction")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("variable count mismatch in product")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), Rational::from(-c)))
                .collect(),
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*{m}")?;
        }
        Ok(())
    }
}
