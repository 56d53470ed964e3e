//! Apolar ideals `F⊥`, catalecticants, Hilbert functions of `T/F⊥`, and
//! the Macaulay inverse system in both directions.

use std::collections::HashMap;

use rug::Rational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{basis_len, echelon_basis, monomial_basis, ExactMatrix, Monomial, Polynomial};
use crate::numeric::{DualPoint, NumericConfig};
use crate::waring::{power_sum_fit, Decomposition};

/// Position of each monomial of degree `d` in `monomial_basis(nvars, d)`.
pub(crate) fn monomial_index(nvars: usize, d: u32) -> HashMap<Monomial, usize> {
    monomial_basis(nvars, d)
        .into_iter()
        .enumerate()
        .map(|(i, m)| (m, i))
        .collect()
}

/// One graded component of an ideal of `T`, stored as a basis in reduced
/// row echelon form over the dual monomial basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedIdealPiece {
    nvars: usize,
    degree: u32,
    basis: Vec<Polynomial>,
}

impl GradedIdealPiece {
    /// Span of the given dual forms. Dependent generators are allowed; the
    /// stored basis is the echelon basis of their span.
    pub fn new(nvars: usize, degree: u32, generators: &[Polynomial]) -> Result<Self> {
        let index = monomial_index(nvars, degree);
        let mut vectors = Vec::with_capacity(generators.len());
        for g in generators {
            if g.nvars() != nvars {
                return Err(Error::NvarsMismatch(g.nvars(), nvars));
            }
            if g.degree() != degree {
                return Err(Error::DegreeMismatch(g.degree(), degree));
            }
            let mut v = vec![Rational::new(); index.len()];
            for (m, c) in g.terms() {
                v[index[m]] = c.clone();
            }
            vectors.push(v);
        }
        Ok(Self::from_vectors(nvars, degree, vectors))
    }

    /// Span of coefficient vectors in `monomial_basis(nvars, degree)` order.
    pub fn from_vectors(nvars: usize, degree: u32, vectors: Vec<Vec<Rational>>) -> Self {
        let len = basis_len(nvars, degree);
        let basis = echelon_basis(vectors, len)
            .iter()
            .map(|v| Polynomial::from_coeffs(nvars, degree, v))
            .collect();
        GradedIdealPiece { nvars, degree, basis }
    }

    /// The whole space `T_degree`.
    pub fn full(nvars: usize, degree: u32) -> Self {
        let basis = monomial_basis(nvars, degree)
            .into_iter()
            .map(|m| Polynomial::monomial(m, Rational::from(1)))
            .collect();
        GradedIdealPiece { nvars, degree, basis }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn ambient_dim(&self) -> usize {
        basis_len(self.nvars, self.degree)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn vectors(&self) -> Vec<Vec<Rational>> {
        self.basis.iter().map(Polynomial::coeffs).collect()
    }

    /// Exact membership by a rank comparison.
    pub fn contains(&self, d: &Polynomial) -> bool {
        if d.nvars() != self.nvars {
            return false;
        }
        if d.is_zero() {
            return true;
        }
        if d.degree() != self.degree {
            return false;
        }
        let mut vectors = self.vectors();
        vectors.push(d.coeffs());
        echelon_basis(vectors, self.ambient_dim()).len() == self.dim()
    }

    /// Containment of spans.
    pub fn is_subspace_of(&self, other: &GradedIdealPiece) -> bool {
        self.nvars == other.nvars && self.degree == other.degree && self.basis.iter().all(|d| other.contains(d))
    }
}

/// Hilbert function and socle of the apolar algebra `T/F⊥`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ApolarAlgebraProfile {
    pub socle_degree: u32,
    pub hilbert: Vec<usize>,
    pub socle_dim: usize,
}

impl ApolarAlgebraProfile {
    pub fn is_symmetric(&self) -> bool {
        self.hilbert.iter().eq(self.hilbert.iter().rev())
    }
}

/// Matrix of `D ↦ D·f` from `T_k` to `S_{d−k}`; rows follow the degree
/// `d−k` monomial basis, columns the degree `k` dual basis.
pub fn catalecticant(f: &Polynomial, k: u32) -> Result<ExactMatrix> {
    let d = f.degree();
    if k > d {
        return Err(Error::DegreeOutOfRange { k, d });
    }
    let n = f.nvars();
    let rows = monomial_basis(n, d - k);
    let cols = monomial_basis(n, k);
    let mut m = ExactMatrix::zeros(rows.len(), cols.len());
    for (i, r) in rows.iter().enumerate() {
        for (j, c) in cols.iter().enumerate() {
            let b = r.mul(c);
            let coef = f.coefficient(&b);
            if coef != 0 {
                m.set(i, j, coef * Monomial::falling_factor(&b, c));
            }
        }
    }
    Ok(m)
}

/// `(F⊥)_k`: the kernel of the degree-`k` catalecticant, or all of `T_k`
/// once `k` exceeds the degree of `f`.
pub fn apolar_ideal_piece(f: &Polynomial, k: u32) -> Result<GradedIdealPiece> {
    let d = f.degree();
    if k > d + 1 {
        return Err(Error::DegreeOutOfRange { k, d: d + 1 });
    }
    if k == d + 1 || f.is_zero() {
        return Ok(GradedIdealPiece::full(f.nvars(), k));
    }
    let kernel = catalecticant(f, k)?.kernel();
    Ok(GradedIdealPiece::from_vectors(f.nvars(), k, kernel))
}

pub fn hilbert_function(f: &Polynomial) -> Result<ApolarAlgebraProfile> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let d = f.degree();
    let n = f.nvars();
    let mut hilbert = Vec::with_capacity(d as usize + 1);
    let mut socle_dim = 0;
    let partials: Vec<Polynomial> = (0..n)
        .map(|i| Polynomial::var(n, i).contract(f))
        .collect::<Result<_>>()?;
    for k in 0..=d {
        let cat = catalecticant(f, k)?;
        let rank = cat.rank();
        hilbert.push(rank);
        // D is in the socle when every ∂_i·D lands in F⊥, i.e. D·(∂_i f) = 0.
        let annihilated = if k == d {
            basis_len(n, k)
        } else {
            let mut rows = Vec::new();
            for p in &partials {
                rows.extend(catalecticant(p, k)?.to_rows());
            }
            let cols = basis_len(n, k);
            cols - ExactMatrix::from_rows_with_cols(rows, cols)?.rank()
        };
        socle_dim += annihilated - (basis_len(n, k) - rank);
    }
    Ok(ApolarAlgebraProfile {
        socle_degree: d,
        hilbert,
        socle_dim,
    })
}

/// Dimensions of `(T/I)_k` for `k = 0..=top`, where `I` is the ideal
/// generated by the given pieces.
pub fn quotient_hilbert(nvars: usize, pieces: &[GradedIdealPiece], top: u32) -> Vec<usize> {
    (0..=top)
        .map(|k| basis_len(nvars, k) - ideal_span(nvars, pieces, k).len())
        .collect()
}

/// Echelon basis of `I_k` for the ideal generated by the pieces.
pub fn ideal_span(nvars: usize, pieces: &[GradedIdealPiece], k: u32) -> Vec<Vec<Rational>> {
    let index = monomial_index(nvars, k);
    let mut vectors = Vec::new();
    for piece in pieces.iter().filter(|p| p.degree() <= k) {
        let shifts = monomial_basis(nvars, k - piece.degree());
        for g in piece.basis() {
            for s in &shifts {
                let mut v = vec![Rational::new(); index.len()];
                for (m, c) in g.terms() {
                    v[index[&m.mul(s)]] = c.clone();
                }
                vectors.push(v);
            }
        }
    }
    echelon_basis(vectors, index.len())
}

/// Recovers the form `F` of degree `d` annihilated by every given piece,
/// normalized so its first nonzero coefficient (graded-lex) is 1.
pub fn macaulay_inverse(pieces: &[GradedIdealPiece], d: u32) -> Result<Polynomial> {
    let Some(first) = pieces.first() else {
        return Err(Error::InconsistentPieces("no ideal pieces given".into()));
    };
    let n = first.nvars();
    if let Some(bad) = pieces.iter().find(|p| p.nvars() != n) {
        return Err(Error::InconsistentPieces(format!(
            "pieces in {} and {} variables",
            n,
            bad.nvars()
        )));
    }
    let target = monomial_index(n, d);
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for piece in pieces.iter().filter(|p| p.degree() <= d) {
        let outputs = monomial_basis(n, d - piece.degree());
        for g in piece.basis() {
            // coefficient of x^r in g·F is Σ_c g_c · F_{r+c} · falling(r+c, c)
            for r in &outputs {
                let mut row = vec![Rational::new(); target.len()];
                for (c, gc) in g.terms() {
                    let b = r.mul(c);
                    row[target[&b]] = Rational::from(gc * Monomial::falling_factor(&b, c));
                }
                rows.push(row);
            }
        }
    }
    let kernel = if rows.is_empty() {
        ExactMatrix::zeros(0, target.len()).kernel()
    } else {
        ExactMatrix::from_rows_with_cols(rows, target.len())?.kernel()
    };
    if kernel.len() != 1 {
        return Err(Error::SocleDimension {
            dim: kernel.len(),
            hilbert: quotient_hilbert(n, pieces, d),
        });
    }
    // rows of an echelon basis already lead with 1
    Ok(Polynomial::from_coeffs(n, d, &kernel[0]))
}

/// Outcome of an apolarity test for a reduced point set.
#[derive(Clone, Debug)]
pub struct ApolarCheck {
    pub apolar: bool,
    /// The weights realizing `f = Σ λ_i ℓ_i^d` when `apolar`.
    pub certificate: Option<Decomposition>,
}

/// For reduced `Γ = {ℓ_1,…,ℓ_s}`, `𝓘(Γ) ⊂ F⊥` exactly when `f` lies in the
/// span of the powers `ℓ_i^d`; decided by solving for the weights.
pub fn is_apolar_scheme(points: &[DualPoint], f: &Polynomial, cfg: &NumericConfig) -> Result<ApolarCheck> {
    let certificate = power_sum_fit(points, f, cfg)?;
    Ok(ApolarCheck {
        apolar: certificate.is_some(),
        certificate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;
    use crate::exact::samples::{fermat, random_form, random_nonzero_form};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn dual(n: usize, terms: &[(&[u32], i64)]) -> Polynomial {
        let d = terms[0].0.iter().sum();
        Polynomial::from_terms(n, d, terms.iter().map(|(e, c)| (Monomial::new(e.to_vec()), rat(*c)))).unwrap()
    }

    #[test]
    fn fermat_quadric_piece() {
        let f = fermat(3);
        let cat = catalecticant(&f, 2).unwrap();
        assert_eq!((cat.rows(), cat.cols(), cat.rank()), (3, 6, 3));
        let piece = apolar_ideal_piece(&f, 2).unwrap();
        assert_eq!(piece.dim(), 3);
        for e in [[1, 1, 0], [1, 0, 1], [0, 1, 1]] {
            assert!(piece.contains(&dual(3, &[(&e, 1)])));
        }
        let cubic = apolar_ideal_piece(&f, 3).unwrap();
        assert!(cubic.contains(&dual(3, &[(&[3, 0, 0], 1), (&[0, 3, 0], -1)])));
        assert_eq!(cubic.dim(), 9);
        assert_eq!(apolar_ideal_piece(&f, 0).unwrap().dim(), 0);
        assert_eq!(apolar_ideal_piece(&f, 4).unwrap().dim(), 15);
        assert!(apolar_ideal_piece(&f, 5).is_err());
    }

    #[test]
    fn small_profiles() {
        let x0_cubed = dual(3, &[(&[3, 0, 0], 1)]);
        let p = hilbert_function(&x0_cubed).unwrap();
        assert_eq!(p.hilbert, vec![1, 1, 1, 1]);
        assert_eq!(p.socle_dim, 1);
        let x0sq_x1 = dual(2, &[(&[2, 1], 1)]);
        assert_eq!(hilbert_function(&x0sq_x1).unwrap().hilbert, vec![1, 2, 2, 1]);
        assert_eq!(catalecticant(&dual(2, &[(&[3, 0], 1)]), 1).unwrap().rank(), 1);
        assert!(hilbert_function(&Polynomial::zero(3, 3)).is_err());
    }

    #[test]
    fn generic_cubic_profile() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let f = random_form(&mut rng, 5, 3, 9);
            assert_eq!(catalecticant(&f, 1).unwrap().rank(), 5);
        }
        let f = random_nonzero_form(&mut rng, 5, 3, 9);
        let p = hilbert_function(&f).unwrap();
        assert_eq!(p.hilbert, vec![1, 5, 5, 1]);
        assert_eq!(p.socle_dim, 1);
        assert!(p.is_symmetric());
    }

    #[test]
    fn inverse_of_simple_ideals() {
        let d1 = dual(2, &[(&[0, 1], 1)]);
        let pieces: Vec<_> = (1..=3)
            .map(|k| {
                let shifts = monomial_basis(2, k - 1);
                let gens: Vec<_> = shifts
                    .into_iter()
                    .map(|s| &Polynomial::monomial(s, rat(1)) * &d1)
                    .collect();
                GradedIdealPiece::new(2, k, &gens).unwrap()
            })
            .collect();
        assert_eq!(macaulay_inverse(&pieces, 3).unwrap(), dual(2, &[(&[3, 0], 1)]));

        let mut quad = Vec::new();
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            let mut e = [0u32; 3];
            e[i] = 1;
            e[j] = 1;
            quad.push(dual(3, &[(&e, 1)]));
        }
        let cubic = vec![
            dual(3, &[(&[3, 0, 0], 1), (&[0, 3, 0], -1)]),
            dual(3, &[(&[3, 0, 0], 1), (&[0, 0, 3], -1)]),
        ];
        let pieces = vec![
            GradedIdealPiece::new(3, 2, &quad).unwrap(),
            GradedIdealPiece::new(3, 3, &cubic).unwrap(),
        ];
        assert_eq!(macaulay_inverse(&pieces, 3).unwrap(), fermat(3));
    }

    #[test]
    fn inverse_reports_socle_dimension() {
        let quad = GradedIdealPiece::new(3, 2, &[dual(3, &[(&[1, 1, 0], 1)])]).unwrap();
        match macaulay_inverse(&[quad], 3) {
            Err(Error::SocleDimension { dim, hilbert }) => {
                assert!(dim > 1);
                assert_eq!(hilbert[..3], [1, 3, 5]);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn apolar_scheme_examples() {
        let cfg = NumericConfig::default();
        let e = |i: usize| {
            let mut v = vec![rat(0); 3];
            v[i] = rat(1);
            DualPoint::Exact(v)
        };
        let pts = vec![e(0), e(1), e(2)];
        let check = is_apolar_scheme(&pts, &fermat(3), &cfg).unwrap();
        assert!(check.apolar);
        let f = dual(2, &[(&[3, 0], 1), (&[0, 3], 1)]);
        let one = vec![DualPoint::Exact(vec![rat(1), rat(0)])];
        assert!(!is_apolar_scheme(&one, &f, &cfg).unwrap().apolar);
        assert!(is_apolar_scheme(&[], &f, &cfg).is_err());
    }
}
