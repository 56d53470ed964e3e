//! Trigonal and tetragonal canonical curves on rational normal scrolls,
//! exact fiber points, and the low-degree pieces of their canonical ideals.
//!
//! A curve of genus ≥ 2 has only finitely many rational points, so points
//! are taken fiber by fiber: over a rational base value `t` the whole fiber
//! divisor is one point with coordinates in the étale algebra `Q[θ]/(p)`,
//! which stands for its `deg p` conjugate geometric points at once.

use std::collections::{HashMap, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rug::Rational;
use serde::{Deserialize, Serialize};

use crate::apolarity::{monomial_index, GradedIdealPiece};
use crate::error::{Error, Result};
use crate::exact::{binomial, monomial_basis, ExactMatrix, Monomial, Polynomial};
use crate::scroll::{canonical_class, chow_product, section_templates, DivisorClass, Scroll};
use crate::univariate::{AlgElem, EtaleAlgebra, UniPoly};

const SECTION_BOUND: i64 = 4;
const RETRIES: usize = 10;
const CERTIFY_FIBERS: usize = 5;
const BASE_BUDGET: usize = 400;
/// Extra geometric points used for the saturation certificate.
pub const SATURATION_MARGIN: usize = 10;

/// One fiber monomial of a section with its base coefficient; `coeffs[j]`
/// multiplies `s^{deg−j} t^j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectionTerm {
    pub fiber: Vec<u32>,
    pub coeffs: Vec<Rational>,
}

/// A section of `O(hH + fF)` on a scroll, as a bihomogeneous form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Section {
    pub class: DivisorClass,
    pub terms: Vec<SectionTerm>,
}

impl Section {
    pub fn random<R: Rng>(scroll: &Scroll, class: DivisorClass, rng: &mut R) -> Result<Self> {
        let terms = section_templates(scroll, class)?
            .into_iter()
            .map(|t| SectionTerm {
                fiber: t.fiber,
                coeffs: (0..=t.base_degree)
                    .map(|_| Rational::from(rng.gen_range(-SECTION_BOUND..=SECTION_BOUND)))
                    .collect(),
            })
            .collect();
        Ok(Section { class, terms })
    }

    /// The form on the fiber over `(1 : t)`.
    pub fn at_base(&self, t: &Rational) -> Polynomial {
        let k = self.terms.first().map_or(0, |x| x.fiber.len());
        let terms = self.terms.iter().map(|term| {
            let c = UniPoly::new(term.coeffs.clone()).eval(t);
            (Monomial::new(term.fiber.clone()), c)
        });
        Polynomial::from_terms(k, self.class.h as u32, terms).expect("templates are homogeneous")
    }

    /// Each fiber monomial with its coefficient as a polynomial in `t`.
    pub fn coefficient_polys(&self) -> Vec<(Monomial, UniPoly)> {
        self.terms
            .iter()
            .map(|t| (Monomial::new(t.fiber.clone()), UniPoly::new(t.coeffs.clone())))
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveSpec {
    pub genus: u32,
    pub gonality: u32,
    pub scroll: Scroll,
    pub equations: Vec<Section>,
    /// `(b1, b2)` for tetragonal curves.
    pub split: Option<(i64, i64)>,
    pub seed: u64,
}

impl CurveSpec {
    pub fn classes(&self) -> Vec<DivisorClass> {
        self.equations.iter().map(|e| e.class).collect()
    }

    /// Number of coordinates of the canonical space `P^{g−1}`.
    pub fn nvars(&self) -> usize {
        self.genus as usize
    }
}

/// The fiber divisor over `(1 : t)` as a single point over `Q[θ]/(p)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurvePoint {
    pub t: Rational,
    pub algebra: EtaleAlgebra,
    pub fiber: Vec<AlgElem>,
    pub image: Vec<AlgElem>,
}

impl CurvePoint {
    /// Number of geometric points represented.
    pub fn geometric_len(&self) -> usize {
        self.algebra.dim()
    }
}

/// `p` evaluated at coordinates in the algebra.
pub fn eval_in_algebra(alg: &EtaleAlgebra, p: &Polynomial, coords: &[AlgElem]) -> AlgElem {
    let mut acc = alg.zero();
    for (m, c) in p.terms() {
        let mut term = alg.from_rational(c);
        for (x, &e) in coords.iter().zip(m.exps()) {
            for _ in 0..e {
                term = alg.mul(&term, x);
            }
        }
        acc = alg.add(&acc, &term);
    }
    acc
}

/// Deterministic stream of distinct small rationals.
pub struct BaseValues {
    rng: ChaCha8Rng,
    seen: HashSet<Rational>,
}

impl BaseValues {
    pub fn new(seed: u64) -> Self {
        BaseValues {
            rng: ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_ba5e),
            seen: HashSet::new(),
        }
    }
}

impl Iterator for BaseValues {
    type Item = Rational;
    fn next(&mut self) -> Option<Rational> {
        loop {
            let q = Rational::from((self.rng.gen_range(-30i64..=30), self.rng.gen_range(1i64..=6)));
            if self.seen.insert(q.clone()) {
                return Some(q);
            }
        }
    }
}

fn uni_from_binary(form: &Polynomial) -> UniPoly {
    // y1 = 1
    let mut coeffs = vec![Rational::new(); form.degree() as usize + 1];
    for (m, c) in form.terms() {
        coeffs[m.exps()[0] as usize] = c.clone();
    }
    UniPoly::new(coeffs)
}

fn trigonal_fiber(curve: &CurveSpec, t: &Rational) -> Option<(EtaleAlgebra, Vec<AlgElem>)> {
    let e = curve.equations[0].at_base(t);
    let p = uni_from_binary(&e);
    if p.degree() != Some(3) {
        return None;
    }
    let alg = EtaleAlgebra::new(&p)?;
    let y = vec![alg.theta(), alg.from_rational(&Rational::from(1))];
    Some((alg, y))
}

/// Coefficients of `q = A y1² + B(y0) y1 + C(y0)` on the chart `y2 = 1`.
fn conic_parts(q: &Polynomial) -> (Rational, UniPoly, UniPoly) {
    let c = |e: [u32; 3]| q.coefficient(&Monomial::new(e.to_vec()));
    let a = c([0, 2, 0]);
    let b = UniPoly::new(vec![c([0, 1, 1]), c([1, 1, 0])]);
    let cc = UniPoly::new(vec![c([0, 0, 2]), c([1, 0, 1]), c([2, 0, 0])]);
    (a, b, cc)
}

fn tetragonal_fiber(curve: &CurveSpec, t: &Rational) -> Option<(EtaleAlgebra, Vec<AlgElem>)> {
    let q1 = curve.equations[0].at_base(t);
    let q2 = curve.equations[1].at_base(t);
    let (a1, b1, c1) = conic_parts(&q1);
    let (a2, b2, c2) = conic_parts(&q2);
    let ka1 = UniPoly::constant(a1);
    let ka2 = UniPoly::constant(a2);
    // resultant in y1 of the two conics
    let ac = &(&ka1 * &c2) - &(&ka2 * &c1);
    let ab = &(&ka1 * &b2) - &(&ka2 * &b1);
    let bc = &(&b1 * &c2) - &(&b2 * &c1);
    let r = &(&ac * &ac) - &(&ab * &bc);
    if r.degree() != Some(4) {
        return None;
    }
    let alg = EtaleAlgebra::new(&r)?;
    // A2·q1 − A1·q2 is linear in y1: α y1 + β = 0
    let alpha = alg.reduce(&(&(&ka2 * &b1) - &(&ka1 * &b2)));
    let beta = alg.reduce(&(&(&ka2 * &c1) - &(&ka1 * &c2)));
    if !alg.is_unit(&alpha) {
        return None;
    }
    let minus_one = Rational::from(-1);
    let y = vec![alg.mul(&alg.theta(), &alpha), alg.scale(&beta, &minus_one), alpha];
    let on_both = [&q1, &q2].iter().all(|q| alg.is_zero(&eval_in_algebra(&alg, q, &y)));
    on_both.then_some((alg, y))
}

/// The fiber divisor over `(1 : t)`, or `None` when it is not reduced or
/// not in general position for the chosen chart.
pub fn fiber_point(curve: &CurveSpec, t: &Rational) -> Option<CurvePoint> {
    let (algebra, fiber) = match curve.gonality {
        3 => trigonal_fiber(curve, t)?,
        4 => tetragonal_fiber(curve, t)?,
        _ => return None,
    };
    let mut image = Vec::with_capacity(curve.scroll.coordinate_count());
    for (y, &a) in fiber.iter().zip(curve.scroll.type_vec()) {
        let mut tj = Rational::from(1);
        for _ in 0..=a {
            image.push(algebra.scale(y, &tj));
            tj *= t;
        }
    }
    Some(CurvePoint {
        t: t.clone(),
        algebra,
        fiber,
        image,
    })
}

/// `1 + C·(C+K)/2` on a surface scroll.
pub fn genus_adjunction(scroll: &Scroll, class: DivisorClass) -> Result<i64> {
    if scroll.k() != 2 {
        return Err(Error::InvalidInput(format!(
            "adjunction genus needs a surface scroll, got dimension {}",
            scroll.k()
        )));
    }
    let twice = chow_product(scroll, &[class, class + canonical_class(scroll)])?;
    if twice % 2 != 0 {
        return Err(Error::InvalidInput(format!("C·(C+K) = {twice} is odd")));
    }
    Ok(1 + twice / 2)
}

fn certify(curve: &CurveSpec) -> bool {
    BaseValues::new(curve.seed ^ 0xce47)
        .take(CERTIFY_FIBERS)
        .all(|t| fiber_point(curve, &t).is_some())
}

/// A random curve of class `3H + (4−g)F` on the balanced surface scroll of
/// degree `g−2`; fibers cut the trigonal pencil and adjunction gives genus `g`.
pub fn trigonal_curve(g: u32, seed: u64) -> Result<CurveSpec> {
    if g < 5 {
        return Err(Error::InvalidInput(format!("trigonal curves need g >= 5, got {g}")));
    }
    let scroll = Scroll::balanced(2, g - 2)?;
    let class = DivisorClass::new(3, 4 - i64::from(g));
    let genus = genus_adjunction(&scroll, class)?;
    if genus != i64::from(g) || chow_product(&scroll, &[class, DivisorClass::F])? != 3 {
        return Err(Error::Assertion(format!(
            "class {class:?} does not give a trigonal genus-{g} curve"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RETRIES {
        let curve = CurveSpec {
            genus: g,
            gonality: 3,
            scroll: scroll.clone(),
            equations: vec![Section::random(&scroll, class, &mut rng)?],
            split: None,
            seed,
        };
        if certify(&curve) {
            return Ok(curve);
        }
    }
    Err(Error::Degenerate(format!(
        "no smooth trigonal section found for g={g}, seed={seed}"
    )))
}

/// The complete intersection of random sections of `2H − b1F` and
/// `2H − b2F` on the balanced threefold scroll of degree `g−3`.
pub fn tetragonal_curve(g: u32, b1: i64, b2: i64, seed: u64) -> Result<CurveSpec> {
    if g < 6 {
        return Err(Error::InvalidInput(format!("tetragonal curves need g >= 6, got {g}")));
    }
    if b1 < 0 || b2 < 0 || b1 + b2 != i64::from(g) - 5 {
        return Err(Error::InvalidInput(format!(
            "split ({b1},{b2}) must be non-negative with b1+b2 = {}",
            i64::from(g) - 5
        )));
    }
    let scroll = Scroll::balanced(3, g - 3)?;
    let y1 = DivisorClass::new(2, -b1);
    let y2 = DivisorClass::new(2, -b2);
    let degree = chow_product(&scroll, &[y1, y2, DivisorClass::H])?;
    let fiber_len = chow_product(&scroll, &[y1, y2, DivisorClass::F])?;
    if degree != 2 * i64::from(g) - 2 || fiber_len != 4 {
        return Err(Error::Assertion(format!(
            "classes give degree {degree} and fiber length {fiber_len}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RETRIES {
        let curve = CurveSpec {
            genus: g,
            gonality: 4,
            scroll: scroll.clone(),
            equations: vec![
                Section::random(&scroll, y1, &mut rng)?,
                Section::random(&scroll, y2, &mut rng)?,
            ],
            split: Some((b1, b2)),
            seed,
        };
        if certify(&curve) {
            return Ok(curve);
        }
    }
    Err(Error::Degenerate(format!(
        "no smooth tetragonal complete intersection for g={g}, split ({b1},{b2}), seed={seed}"
    )))
}

/// Fiber points over seeded base values until at least `count` geometric
/// points are collected.
pub fn sample_points(curve: &CurveSpec, count: usize, seed: u64) -> Result<Vec<CurvePoint>> {
    let mut out = Vec::new();
    let mut found = 0;
    if count == 0 {
        return Ok(out);
    }
    for t in BaseValues::new(seed).take(BASE_BUDGET) {
        if let Some(p) = fiber_point(curve, &t) {
            found += p.geometric_len();
            out.push(p);
            if found >= count {
                return Ok(out);
            }
        }
    }
    Err(Error::InsufficientPoints { found, wanted: count })
}

/// Values of all degree-`d` monomials at an algebra point, in basis order.
fn monomial_values(alg: &EtaleAlgebra, coords: &[AlgElem], d: u32) -> Vec<AlgElem> {
    let n = coords.len();
    let mut prev: Vec<AlgElem> = vec![alg.from_rational(&Rational::from(1))];
    let mut prev_index: HashMap<Monomial, usize> = monomial_index(n, 0);
    for deg in 1..=d {
        let basis = monomial_basis(n, deg);
        let mut cur = Vec::with_capacity(basis.len());
        for m in &basis {
            let i = m.exps().iter().position(|&e| e > 0).expect("positive degree");
            let lower = m.checked_div(&Monomial::var(n, i)).expect("divisible");
            cur.push(alg.mul(&prev[prev_index[&lower]], &coords[i]));
        }
        prev = cur;
        prev_index = basis.into_iter().enumerate().map(|(i, m)| (m, i)).collect();
    }
    prev
}

/// Forms of degree `d` vanishing at every given point.
pub fn vanishing_forms(points: &[CurvePoint], nvars: usize, d: u32) -> GradedIdealPiece {
    let cols = monomial_index(nvars, d).len();
    let mut rows = Vec::new();
    for p in points {
        let values = monomial_values(&p.algebra, &p.image, d);
        for r in 0..p.geometric_len() {
            rows.push(values.iter().map(|v| v[r].clone()).collect::<Vec<_>>());
        }
    }
    let kernel = if rows.is_empty() {
        ExactMatrix::zeros(0, cols).kernel()
    } else {
        ExactMatrix::from_rows_with_cols(rows, cols)
            .expect("uniform rows")
            .kernel()
    };
    GradedIdealPiece::from_vectors(nvars, d, kernel)
}

/// The degree 2 and 3 pieces of the ideal of a canonical curve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealReconstruction {
    pub degree2: GradedIdealPiece,
    pub degree3: GradedIdealPiece,
    pub point_count: usize,
    pub rank_saturated: bool,
}

pub fn expected_ideal_dims(g: u32) -> (usize, usize) {
    let g64 = u64::from(g);
    let d2 = (g64 - 2) * (g64 - 3) / 2;
    let d3 = binomial(g64 + 2, 3) - (5 * g64 - 5);
    (d2 as usize, d3 as usize)
}

/// Geometric points needed before cubics are determined: a cubic through
/// more than `3(2g−2)` points of an irreducible canonical curve contains it.
pub fn points_needed(g: u32) -> usize {
    6 * g as usize - 5
}

/// Kernels of the evaluation maps in degrees 2 and 3. The first fibers
/// reaching `6g−5` geometric points determine the pieces; the remaining
/// points (at least `SATURATION_MARGIN` more) certify that they are stable.
pub fn ideal_pieces(curve: &CurveSpec, points: &[CurvePoint]) -> Result<IdealReconstruction> {
    let g = curve.genus;
    let need = points_needed(g);
    let total: usize = points.iter().map(CurvePoint::geometric_len).sum();
    if total < need + SATURATION_MARGIN {
        return Err(Error::InsufficientPoints {
            found: total,
            wanted: need + SATURATION_MARGIN,
        });
    }
    let mut acc = 0;
    let mut split = points.len();
    for (i, p) in points.iter().enumerate() {
        acc += p.geometric_len();
        if acc >= need {
            split = i + 1;
            break;
        }
    }
    if total - acc < SATURATION_MARGIN {
        return Err(Error::InsufficientPoints {
            found: total,
            wanted: acc + SATURATION_MARGIN,
        });
    }
    let n = curve.nvars();
    let head = &points[..split];
    let (e2, e3) = expected_ideal_dims(g);
    let mut pieces = Vec::new();
    for (d, expected) in [(2u32, e2), (3u32, e3)] {
        let before = vanishing_forms(head, n, d);
        let after = vanishing_forms(points, n, d);
        if before.dim() != after.dim() {
            return Err(Error::Unsaturated {
                before: vec![before.dim()],
                after: vec![after.dim()],
            });
        }
        if after.dim() != expected {
            return Err(Error::IdealDimension {
                degree: d,
                expected,
                found: after.dim(),
            });
        }
        pieces.push(after);
    }
    let degree3 = pieces.pop().unwrap();
    let degree2 = pieces.pop().unwrap();
    Ok(IdealReconstruction {
        degree2,
        degree3,
        point_count: total,
        rank_saturated: true,
    })
}

/// Samples enough fibers and reconstructs the ideal pieces.
pub fn reconstruct_ideal(curve: &CurveSpec, seed: u64) -> Result<IdealReconstruction> {
    // the fiber crossing the threshold may overshoot by up to gonality − 1
    let count = points_needed(curve.genus) + SATURATION_MARGIN + curve.gonality as usize;
    let points = sample_points(curve, count, seed)?;
    ideal_pieces(curve, &points)
}

/// JSON shape of a curve.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CurveSpecJson {
    pub genus: u32,
    pub gonality: u32,
    pub scroll: Scroll,
    pub classes: Vec<DivisorClass>,
    pub equations: Vec<SectionJson>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub split: Option<[i64; 2]>,
    pub seed: u64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SectionJson {
    pub terms: Vec<SectionTermJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SectionTermJson {
    pub fiber: Vec<u32>,
    /// Coefficients of `s^{deg−j} t^j`, `j = 0..=deg`.
    pub base: Vec<String>,
}

impl From<&CurveSpec> for CurveSpecJson {
    fn from(c: &CurveSpec) -> Self {
        CurveSpecJson {
            genus: c.genus,
            gonality: c.gonality,
            scroll: c.scroll.clone(),
            classes: c.classes(),
            equations: c
                .equations
                .iter()
                .map(|e| SectionJson {
                    terms: e
                        .terms
                        .iter()
                        .map(|t| SectionTermJson {
                            fiber: t.fiber.clone(),
                            base: t.coeffs.iter().map(|q| q.to_string()).collect(),
                        })
                        .collect(),
                })
                .collect(),
            split: c.split.map(|(a, b)| [a, b]),
            seed: c.seed,
        }
    }
}

impl TryFrom<CurveSpecJson> for CurveSpec {
    type Error = Error;
    fn try_from(j: CurveSpecJson) -> Result<Self> {
        if j.classes.len() != j.equations.len() {
            return Err(Error::InvalidInput("one class per equation required".into()));
        }
        let mut equations = Vec::new();
        for (class, eq) in j.classes.iter().zip(j.equations) {
            let templates = section_templates(&j.scroll, *class)?;
            let mut terms = Vec::new();
            for t in eq.terms {
                let Some(tpl) = templates.iter().find(|x| x.fiber == t.fiber) else {
                    return Err(Error::InvalidInput(format!("fiber monomial {:?} not allowed", t.fiber)));
                };
                if t.base.len() != tpl.base_degree as usize + 1 {
                    return Err(Error::InvalidInput(format!(
                        "fiber monomial {:?} needs {} base coefficients",
                        t.fiber,
                        tpl.base_degree + 1
                    )));
                }
                let coeffs = t
                    .base
                    .iter()
                    .map(|s| crate::exact::parse_rational(s))
                    .collect::<Result<Vec<_>>>()?;
                terms.push(SectionTerm { fiber: t.fiber, coeffs });
            }
            equations.push(Section { class: *class, terms });
        }
        let expected = match j.gonality {
            3 => 1,
            4 => 2,
            n => return Err(Error::InvalidInput(format!("gonality {n} unsupported"))),
        };
        if equations.len() != expected || j.scroll.k() as u32 != j.gonality - 1 {
            return Err(Error::InvalidInput(
                "equation count or scroll dimension does not match the gonality".into(),
            ));
        }
        Ok(CurveSpec {
            genus: j.genus,
            gonality: j.gonality,
            scroll: j.scroll,
            equations,
            split: j.split.map(|[a, b]| (a, b)),
            seed: j.seed,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scroll::scroll_quadrics;

    #[test]
    fn adjunction_genera() {
        let s12 = Scroll::new(vec![1, 2]).unwrap();
        assert_eq!(genus_adjunction(&s12, DivisorClass::new(3, -1)).unwrap(), 5);
        assert_eq!(
            genus_adjunction(&Scroll::new(vec![1, 1]).unwrap(), DivisorClass::new(2, 0)).unwrap(),
            1
        );
        assert_eq!(
            genus_adjunction(&Scroll::new(vec![2, 2]).unwrap(), DivisorClass::new(3, -2)).unwrap(),
            6
        );
        assert!(genus_adjunction(&Scroll::new(vec![1, 1, 1]).unwrap(), DivisorClass::H).is_err());
    }

    #[test]
    fn trigonal_points_lie_on_curve_and_scroll() {
        let curve = trigonal_curve(5, 1).unwrap();
        assert_eq!(curve.scroll.type_vec(), &[1, 2]);
        assert_eq!(curve.classes(), vec![DivisorClass::new(3, -1)]);
        let pts = sample_points(&curve, 30, 2).unwrap();
        assert!(pts.iter().map(CurvePoint::geometric_len).sum::<usize>() >= 30);
        let quadrics = scroll_quadrics(&curve.scroll);
        for p in &pts {
            assert_eq!(p.geometric_len(), 3);
            let e = curve.equations[0].at_base(&p.t);
            assert!(p.algebra.is_zero(&eval_in_algebra(&p.algebra, &e, &p.fiber)));
            for q in &quadrics {
                assert!(p.algebra.is_zero(&eval_in_algebra(&p.algebra, q, &p.image)));
            }
        }
        assert!(sample_points(&curve, 0, 2).unwrap().is_empty());
    }

    #[test]
    fn trigonal_ideal_dimensions() {
        let curve = trigonal_curve(5, 3).unwrap();
        let ideal = reconstruct_ideal(&curve, 4).unwrap();
        assert_eq!((ideal.degree2.dim(), ideal.degree3.dim()), (3, 15));
        assert!(ideal.rank_saturated);
        for q in scroll_quadrics(&curve.scroll) {
            assert!(ideal.degree2.contains(&q));
        }
    }

    #[test]
    fn tetragonal_ideal_dimensions() {
        let curve = tetragonal_curve(7, 1, 1, 5).unwrap();
        assert_eq!(curve.scroll.type_vec(), &[1, 1, 2]);
        let ideal = reconstruct_ideal(&curve, 6).unwrap();
        assert_eq!((ideal.degree2.dim(), ideal.degree3.dim()), (10, 54));
        assert!(tetragonal_curve(7, 3, 0, 1).is_err());
    }

    #[test]
    fn json_round_trip() {
        let curve = tetragonal_curve(6, 0, 1, 9).unwrap();
        let json = serde_json::to_string(&CurveSpecJson::from(&curve)).unwrap();
        let back: CurveSpec = serde_json::from_str::<CurveSpecJson>(&json)
            .unwrap()
            .try_into()
            .unwrap();
        assert_eq!(back, curve);
    }
}
