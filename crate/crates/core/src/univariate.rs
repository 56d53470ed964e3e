//! Univariate polynomials over Q and the finite étale algebras `Q[θ]/(p)`
//! that carry whole fibers of a curve as single exact points.

use std::ops::{Add, Mul, Neg, Sub};

use rug::Rational;

/// Polynomial in one variable, coefficients listed from the constant term up.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| *c == 0) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        UniPoly::new(vec![c])
    }

    /// The monomial `c·t^k`.
    pub fn monomial(k: usize, c: Rational) -> Self {
        let mut coeffs = vec![Rational::new(); k + 1];
        coeffs[k] = c;
        UniPoly::new(coeffs)
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        UniPoly::new(coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        UniPoly::new(self.coeffs.iter().map(|x| Rational::from(x * c)).collect())
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => UniPoly::zero(),
            Some(lc) => self.scale(&Rational::from(lc.recip_ref())),
        }
    }

    pub fn derivative(&self) -> Self {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| Rational::from(c * k as u64))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::new();
        for c in self.coeffs.iter().rev() {
            acc *= x;
            acc += c;
        }
        acc
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = UniPoly::constant(Rational::from(1));
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lc_inv = Rational::from(divisor.coeffs[dd].recip_ref());
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::new(); rem.len().saturating_sub(dd)];
        while rem.len() > dd {
            let top = rem.len() - 1;
            let factor = Rational::from(&rem[top] * &lc_inv);
            if factor != 0 {
                for (i, c) in divisor.coeffs.iter().enumerate() {
                    rem[top - dd + i] -= Rational::from(&factor * c);
                }
                quot[top - dd] = factor;
            }
            rem.pop();
        }
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    pub fn rem(&self, divisor: &UniPoly) -> UniPoly {
        self.div_rem(divisor).1
    }

    /// Monic greatest common divisor (zero when both inputs are zero).
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// No repeated roots over the algebraic closure.
    pub fn is_squarefree(&self) -> bool {
        match self.degree() {
            None => false,
            Some(0) => true,
            Some(_) => self.gcd(&self.derivative()).degree() == Some(0),
        }
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| Rational::from(-c)).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::new(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if *b != 0 {
                    out[i + j] += Rational::from(a * b);
                }
            }
        }
        UniPoly::new(out)
    }
}

/// The algebra `Q[θ]/(p)` for a squarefree `p`. An element is stored as its
/// coordinate vector in the basis `1, θ, …, θ^(m−1)`; evaluating a rational
/// form at a point with coordinates in this algebra evaluates it at all `m`
/// conjugate geometric points at once.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EtaleAlgebra {
    modulus: UniPoly,
}

pub type AlgElem = Vec<Rational>;

impl EtaleAlgebra {
    /// `None` unless `p` has positive degree and is squarefree.
    pub fn new(p: &UniPoly) -> Option<Self> {
        if p.degree().unwrap_or(0) == 0 || !p.is_squarefree() {
            return None;
        }
        Some(EtaleAlgebra { modulus: p.monic() })
    }

    pub fn modulus(&self) -> &UniPoly {
        &self.modulus
    }

    pub fn dim(&self) -> usize {
        self.modulus.degree().expect("nonconstant modulus")
    }

    pub fn zero(&self) -> AlgElem {
        vec![Rational::new(); self.dim()]
    }

    pub fn from_rational(&self, c: &Rational) -> AlgElem {
        let mut e = self.zero();
        e[0] = c.clone();
        e
    }

    pub fn theta(&self) -> AlgElem {
        self.reduce(&UniPoly::monomial(1, Rational::from(1)))
    }

    pub fn reduce(&self, p: &UniPoly) -> AlgElem {
        let r = p.rem(&self.modulus);
        let mut e = self.zero();
        for (i, c) in r.coeffs().iter().enumerate() {
            e[i] = c.clone();
        }
        e
    }

    pub fn to_poly(&self, a: &AlgElem) -> UniPoly {
        UniPoly::new(a.clone())
    }

    pub fn add(&self, a: &AlgElem, b: &AlgElem) -> AlgElem {
        a.iter().zip(b).map(|(x, y)| Rational::from(x + y)).collect()
    }

    pub fn scale(&self, a: &AlgElem, c: &Rational) -> AlgElem {
        a.iter().map(|x| Rational::from(x * c)).collect()
    }

    pub fn mul(&self, a: &AlgElem, b: &AlgElem) -> AlgElem {
        self.reduce(&(&self.to_poly(a) * &self.to_poly(b)))
    }

    pub fn is_zero(&self, a: &AlgElem) -> bool {
        a.iter().all(|x| *x == 0)
    }

    /// Invertible iff it vanishes at none of the conjugate points.
    pub fn is_unit(&self, a: &AlgElem) -> bool {
        self.to_poly(a).gcd(&self.modulus).degree() == Some(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{rat, ratio};

    #[test]
    fn division_and_gcd() {
        // (t-1)(t-2) and (t-1)(t+3)
        let a = UniPoly::from_i64(&[2, -3, 1]);
        let b = UniPoly::from_i64(&[-3, 2, 1]);
        assert_eq!(a.gcd(&b), UniPoly::from_i64(&[-1, 1]));
        let (q, r) = a.div_rem(&UniPoly::from_i64(&[-1, 1]));
        assert_eq!(q, UniPoly::from_i64(&[-2, 1]));
        assert!(r.is_zero());
        assert_eq!(a.eval(&rat(2)), 0);
        assert_eq!(a.eval(&ratio(1, 2)), ratio(3, 4));
    }

    #[test]
    fn squarefree_detection() {
        assert!(UniPoly::from_i64(&[2, -3, 1]).is_squarefree());
        assert!(!UniPoly::from_i64(&[1, -2, 1]).is_squarefree());
        assert!(!UniPoly::zero().is_squarefree());
    }

    #[test]
    fn algebra_arithmetic_reduces() {
        // θ^3 = 2 in Q[θ]/(θ^3 - 2)
        let alg = EtaleAlgebra::new(&UniPoly::from_i64(&[-2, 0, 0, 1])).unwrap();
        let t = alg.theta();
        let t3 = alg.mul(&alg.mul(&t, &t), &t);
        assert_eq!(t3, alg.from_rational(&rat(2)));
        assert!(alg.is_unit(&t));
        // split algebra Q[θ]/(θ(θ-1)): θ is a zero divisor
        let split = EtaleAlgebra::new(&UniPoly::from_i64(&[0, -1, 1])).unwrap();
        assert!(!split.is_unit(&split.theta()));
        assert!(EtaleAlgebra::new(&UniPoly::from_i64(&[1, -2, 1])).is_none());
    }
}
