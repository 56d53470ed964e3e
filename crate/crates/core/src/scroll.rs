//! Rational normal scrolls `S_{a_1,…,a_k} ⊂ P^N` and their Chow rings in
//! the hyperplane class `H` and the fiber class `F`.

use rug::Rational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{monomial_basis, Monomial, Polynomial};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "ScrollRepr", into = "ScrollRepr")]
pub struct Scroll {
    ty: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct ScrollRepr {
    #[serde(rename = "type")]
    ty: Vec<u32>,
}

impl TryFrom<ScrollRepr> for Scroll {
    type Error = Error;
    fn try_from(r: ScrollRepr) -> Result<Self> {
        Scroll::new(r.ty)
    }
}

impl From<Scroll> for ScrollRepr {
    fn from(s: Scroll) -> Self {
        ScrollRepr { ty: s.ty }
    }
}

/// `hH + fF`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DivisorClass {
    pub h: i64,
    pub f: i64,
}

impl DivisorClass {
    pub const H: DivisorClass = DivisorClass { h: 1, f: 0 };
    pub const F: DivisorClass = DivisorClass { h: 0, f: 1 };

    pub fn new(h: i64, f: i64) -> Self {
        DivisorClass { h, f }
    }
}

impl std::ops::Add for DivisorClass {
    type Output = DivisorClass;
    fn add(self, other: DivisorClass) -> DivisorClass {
        DivisorClass::new(self.h + other.h, self.f + other.f)
    }
}

/// A point of the scroll over the base point `(s:t)` with fiber
/// coordinates `y`, and its image in `P^N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScrollPoint {
    pub base: [Rational; 2],
    pub fiber: Vec<Rational>,
    pub image: Vec<Rational>,
}

/// One fiber monomial of a section template and the degree of its
/// coefficient in `(s, t)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SectionTemplate {
    pub fiber: Vec<u32>,
    pub base_degree: u32,
}

impl Scroll {
    pub fn new(ty: Vec<u32>) -> Result<Self> {
        if ty.is_empty() || ty.iter().all(|&a| a == 0) {
            return Err(Error::InvalidScroll(format!("type {ty:?} has no positive entry")));
        }
        Ok(Scroll { ty })
    }

    pub fn type_vec(&self) -> &[u32] {
        &self.ty
    }

    /// Dimension of the scroll (rank of the bundle).
    pub fn k(&self) -> usize {
        self.ty.len()
    }

    pub fn degree(&self) -> i64 {
        self.ty.iter().map(|&a| i64::from(a)).sum()
    }

    /// Dimension of the ambient projective space.
    pub fn ambient_dim(&self) -> i64 {
        self.degree() + self.k() as i64 - 1
    }

    pub fn is_smooth(&self) -> bool {
        self.ty.iter().all(|&a| a > 0)
    }

    pub fn min_entry(&self) -> u32 {
        *self.ty.iter().min().expect("nonempty type")
    }

    /// Entries differ by at most one.
    pub fn is_balanced(&self) -> bool {
        self.ty.iter().max().unwrap() - self.min_entry() <= 1
    }

    /// The balancedness condition for an `n`-gonal curve of genus `g`:
    /// the smallest entry equals `⌊g/(n−1)⌋ − 1`.
    pub fn is_balanced_for(&self, g: u32, n: u32) -> bool {
        n >= 2 && i64::from(self.min_entry()) == i64::from(g / (n - 1)) - 1
    }

    /// The balanced type of dimension `k` and degree `degree`.
    pub fn balanced(k: usize, degree: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidScroll("dimension 0".into()));
        }
        let q = degree / k as u32;
        let r = degree as usize % k;
        Scroll::new((0..k).map(|i| q + u32::from(i >= k - r)).collect())
    }

    /// Starting coordinate of fiber block `i` in `P^N`.
    pub fn block_offset(&self, i: usize) -> usize {
        self.ty[..i].iter().map(|&a| a as usize + 1).sum()
    }

    pub fn coordinate_count(&self) -> usize {
        self.ambient_dim() as usize + 1
    }
}

/// Product of exactly `k` divisor classes, reduced with `H^k = deg`,
/// `H^{k−1}F = 1`, `F² = 0`.
pub fn chow_product(scroll: &Scroll, classes: &[DivisorClass]) -> Result<i64> {
    let k = scroll.k();
    if classes.len() != k {
        return Err(Error::Arity {
            expected: k,
            got: classes.len(),
        });
    }
    let all_h: i64 = classes.iter().map(|c| c.h).product();
    let mut one_f = 0;
    for j in 0..k {
        let others: i64 = classes
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != j)
            .map(|(_, c)| c.h)
            .product();
        one_f += classes[j].f * others;
    }
    Ok(all_h * scroll.degree() + one_f)
}

/// `K = −kH + (N−k−1)F`.
pub fn canonical_class(scroll: &Scroll) -> DivisorClass {
    let k = scroll.k() as i64;
    DivisorClass::new(-k, scroll.ambient_dim() - k - 1)
}

/// `D · H^{k−1}`.
pub fn divisor_degree(scroll: &Scroll, class: DivisorClass) -> Result<i64> {
    let mut classes = vec![DivisorClass::H; scroll.k()];
    classes[0] = class;
    chow_product(scroll, &classes)
}

/// Fiber monomials of degree `h` with the degree of their base coefficient
/// for sections of `hH + fF`; monomials with negative degree are dropped.
pub fn section_templates(scroll: &Scroll, class: DivisorClass) -> Result<Vec<SectionTemplate>> {
    if class.h < 0 {
        return Err(Error::InvalidInput(format!(
            "class {}H{:+}F has negative H-coefficient",
            class.h, class.f
        )));
    }
    let mut out = Vec::new();
    for m in monomial_basis(scroll.k(), class.h as u32) {
        let deg: i64 = m
            .exps()
            .iter()
            .zip(&scroll.ty)
            .map(|(&e, &a)| i64::from(e) * i64::from(a))
            .sum::<i64>()
            + class.f;
        if deg >= 0 {
            out.push(SectionTemplate {
                fiber: m.exps().to_vec(),
                base_degree: deg as u32,
            });
        }
    }
    Ok(out)
}

/// Dimension of the space of sections described by the templates.
pub fn section_count(templates: &[SectionTemplate]) -> usize {
    templates.iter().map(|t| t.base_degree as usize + 1).sum()
}

/// Image coordinates `s^{a_i−j} t^j y_i`, block by block.
pub fn embed_point(scroll: &Scroll, base: [Rational; 2], fiber: Vec<Rational>) -> Result<ScrollPoint> {
    if fiber.len() != scroll.k() {
        return Err(Error::Arity {
            expected: scroll.k(),
            got: fiber.len(),
        });
    }
    if base.iter().all(|x| *x == 0) || fiber.iter().all(|x| *x == 0) {
        return Err(Error::InvalidInput("base and fiber coordinates must be nonzero".into()));
    }
    let mut image = Vec::with_capacity(scroll.coordinate_count());
    for (y, &a) in fiber.iter().zip(&scroll.ty) {
        for j in 0..=a {
            let s_part = Rational::from(rug::ops::Pow::pow(&base[0], (a - j) as i32));
            let t_part = Rational::from(rug::ops::Pow::pow(&base[1], j as i32));
            image.push(s_part * t_part * y);
        }
    }
    Ok(ScrollPoint { base, fiber, image })
}

/// Type of the projection from a point of the `i`-th directrix: `a_i`
/// drops by one and the entry disappears when it would become −1.
pub fn project_type(scroll: &Scroll, i: usize) -> Result<Scroll> {
    if i >= scroll.k() {
        return Err(Error::InvalidInput(format!(
            "index {i} out of range for {:?}",
            scroll.ty
        )));
    }
    let mut ty = scroll.ty.clone();
    if ty[i] == 0 {
        ty.remove(i);
    } else {
        ty[i] -= 1;
    }
    Scroll::new(ty)
}

/// The 2×2 minors of the `2 × Σa` matrix whose columns are consecutive
/// coordinate pairs within each block; they cut out the scroll.
pub fn scroll_quadrics(scroll: &Scroll) -> Vec<Polynomial> {
    let n = scroll.coordinate_count();
    let mut columns = Vec::new();
    for (i, &a) in scroll.ty.iter().enumerate() {
        let off = scroll.block_offset(i);
        for j in 0..a as usize {
            columns.push((off + j, off + j + 1));
        }
    }
    let one = Rational::from(1);
    let mut out = Vec::new();
    for p in 0..columns.len() {
        for q in p + 1..columns.len() {
            let (top_p, bot_p) = columns[p];
            let (top_q, bot_q) = columns[q];
            let plus = Monomial::var(n, top_p).mul(&Monomial::var(n, bot_q));
            let minus = Monomial::var(n, top_q).mul(&Monomial::var(n, bot_p));
            let poly =
                Polynomial::from_terms(n, 2, [(plus, one.clone()), (minus, -one.clone())]).expect("degree-2 monomials");
            if !poly.is_zero() {
                out.push(poly);
            }
        }
    }
    out
}
