//! Seeded sample forms used by tests, the CLI and the verifiers.

use rand::Rng;
use rug::Rational;

use super::monomial::monomial_basis;
use super::polynomial::Polynomial;

/// `x0^3 + … + x_{n-1}^3`.
pub fn fermat(nvars: usize) -> Polynomial {
    let coeffs: Vec<Rational> = monomial_basis(nvars, 3)
        .iter()
        .map(|m| Rational::from(u32::from(m.exps().contains(&3))))
        .collect();
    Polynomial::from_coeffs(nvars, 3, &coeffs)
}

/// Dense form with integer coefficients drawn uniformly from `[-bound, bound]`.
pub fn random_form<R: Rng>(rng: &mut R, nvars: usize, degree: u32, bound: i64) -> Polynomial {
    let coeffs: Vec<Rational> = monomial_basis(nvars, degree)
        .iter()
        .map(|_| Rational::from(rng.gen_range(-bound..=bound)))
        .collect();
    Polynomial::from_coeffs(nvars, degree, &coeffs)
}

/// Like [`random_form`] but never zero.
pub fn random_nonzero_form<R: Rng>(rng: &mut R, nvars: usize, degree: u32, bound: i64) -> Polynomial {
    loop {
        let f = random_form(rng, nvars, degree, bound);
        if !f.is_zero() {
            return f;
        }
    }
}
