//! Integer bookkeeping for plane models of tetragonal curves: Clebsch
//! genus, intersection numbers on blow-ups of the plane, the multiplicity
//! numerology of the surfaces `S ⊃ C`, Nakai–Moishezon checks and the
//! degree formulas for higher gonality.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A plane curve of degree `d` with ordinary singular points of the given
/// multiplicities.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlaneModel {
    pub degree: i64,
    pub multiplicities: Vec<i64>,
}

impl PlaneModel {
    pub fn new(degree: i64, multiplicities: Vec<i64>) -> Result<Self> {
        if degree < 1 {
            return Err(Error::InvalidInput(format!("plane degree {degree} < 1")));
        }
        if let Some(m) = multiplicities.iter().find(|&&m| m < 2) {
            return Err(Error::InvalidInput(format!("multiplicity {m} < 2")));
        }
        Ok(PlaneModel { degree, multiplicities })
    }

    /// `dH − Σ m_i E_i` on the blow-up at the singular points.
    pub fn curve_class(&self) -> BlowupClass {
        BlowupClass {
            a: self.degree,
            b: self.multiplicities.iter().map(|m| -m).collect(),
        }
    }
}

/// `aH + Σ b_i E_i` on the plane blown up in `b.len()` points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlowupClass {
    pub a: i64,
    pub b: Vec<i64>,
}

impl BlowupClass {
    pub fn hyperplane(points: usize) -> Self {
        BlowupClass {
            a: 1,
            b: vec![0; points],
        }
    }

    pub fn exceptional(points: usize, i: usize) -> Self {
        let mut b = vec![0; points];
        b[i] = 1;
        BlowupClass { a: 0, b }
    }

    /// `K = −3H + Σ E_i`.
    pub fn canonical(points: usize) -> Self {
        BlowupClass {
            a: -3,
            b: vec![1; points],
        }
    }

    pub fn add(&self, other: &BlowupClass) -> Result<BlowupClass> {
        check_shape(self, other)?;
        Ok(BlowupClass {
            a: self.a + other.a,
            b: self.b.iter().zip(&other.b).map(|(x, y)| x + y).collect(),
        })
    }
}

fn check_shape(c1: &BlowupClass, c2: &BlowupClass) -> Result<()> {
    if c1.b.len() != c2.b.len() {
        return Err(Error::Shape(format!(
            "classes on blow-ups in {} and {} points",
            c1.b.len(),
            c2.b.len()
        )));
    }
    Ok(())
}

fn binom2(n: i64) -> i64 {
    n * (n - 1) / 2
}

/// `binom(d−1, 2) − Σ m_i(m_i−1)/2`.
pub fn clebsch_genus(model: &PlaneModel) -> Result<i64> {
    let g = binom2(model.degree - 1) - model.multiplicities.iter().map(|&m| binom2(m)).sum::<i64>();
    if g < 0 {
        return Err(Error::NegativeGenus(g));
    }
    Ok(g)
}

/// `H² = 1`, `H·E_i = 0`, `E_i·E_j = −δ_ij`.
pub fn blowup_intersect(c1: &BlowupClass, c2: &BlowupClass) -> Result<i64> {
    check_shape(c1, c2)?;
    Ok(c1.a * c2.a - c1.b.iter().zip(&c2.b).map(|(x, y)| x * y).sum::<i64>())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdjunctionReport {
    /// `C·(C+K)`.
    pub curve_dot_curve_plus_k: i64,
    /// `C·A` for the adjoint class `A`.
    pub curve_dot_adjoint: i64,
    pub two_g_minus_2: i64,
    /// `d·a − (2g−2)`: the value of `Σ m_i(m_i−1)` forced by `C·A = 2g−2`
    /// when `A = aH + Σ(1−m_i)E_i`.
    pub required_sum_m_m_minus_1: i64,
    pub sum_m_m_minus_1: i64,
    pub consistent: bool,
}

/// Adjunction for a plane model `C = dH − Σ m_i E_i` whose canonical
/// series is cut by the adjoint class `A = aH + Σ(1−m_i)E_i`.
pub fn adjunction_check(model: &PlaneModel, adjoint_degree: i64, genus: i64) -> Result<AdjunctionReport> {
    let r = model.multiplicities.len();
    let c = model.curve_class();
    let adjoint = BlowupClass {
        a: adjoint_degree,
        b: model.multiplicities.iter().map(|m| 1 - m).collect(),
    };
    let c_plus_k = c.add(&BlowupClass::canonical(r))?;
    let cc_k = blowup_intersect(&c, &c_plus_k)?;
    let ca = blowup_intersect(&c, &adjoint)?;
    let required = model.degree * adjoint_degree - (2 * genus - 2);
    let actual: i64 = model.multiplicities.iter().map(|m| m * (m - 1)).sum();
    Ok(AdjunctionReport {
        curve_dot_curve_plus_k: cc_k,
        curve_dot_adjoint: ca,
        two_g_minus_2: 2 * genus - 2,
        required_sum_m_m_minus_1: required,
        sum_m_m_minus_1: actual,
        consistent: cc_k == 2 * genus - 2 && ca == 2 * genus - 2 && required == actual,
    })
}

/// One admissible multiplicity pattern.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NumerologyBranch {
    /// Number of singular points.
    pub r: usize,
    pub multiplicities: Vec<i64>,
    /// The four base points of the conic pencil.
    pub pencil_multiplicities: Vec<i64>,
    pub sum_m_m_minus_1: i64,
    pub sum_m_minus_1: i64,
    #[serde(rename = "degS")]
    pub deg_s: i64,
    /// `b` with `[S] = 2H − bF`, from `deg S = 2g − 6 − b`.
    pub b: i64,
    pub clebsch_genus: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TetragonalNumerology {
    pub g: i64,
    pub k: i64,
    /// `g − 3k`, one of −1, 0, 1.
    pub residue: i64,
    pub plane_degree: i64,
    pub adjoint_degree: i64,
    /// `Σ n_i = 2d − 4` from the conic pencil.
    pub pencil_sum: i64,
    pub required_sum_m_m_minus_1: i64,
    pub branches: Vec<NumerologyBranch>,
    /// The upper bound for `deg S` claimed for this residue class.
    pub stated_bound: i64,
    pub within_bound: bool,
    /// Multiplicities and degree of the first branch.
    pub multiplicities: Vec<i64>,
    #[serde(rename = "degS")]
    pub deg_s: i64,
}

/// Nonincreasing tuples of `len` integers `≥ lo` summing to `total`.
fn partitions(total: i64, len: usize, lo: i64, hi: i64, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    if len == 0 {
        if total == 0 {
            out.push(prefix.clone());
        }
        return;
    }
    let top = hi.min(total - lo * (len as i64 - 1));
    let mut v = top;
    while v >= lo {
        if v * len as i64 >= total {
            prefix.push(v);
            partitions(total - v, len - 1, lo, v, prefix, out);
            prefix.pop();
        } else {
            break;
        }
        v -= 1;
    }
}

/// Nonincreasing lists of multiplicities `≥ 2` with `Σ m(m−1) = target`.
fn extra_points(target: i64, hi: i64, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    if target == 0 {
        out.push(prefix.clone());
        return;
    }
    let mut m = hi;
    while m >= 2 {
        let w = m * (m - 1);
        if w <= target {
            prefix.push(m);
            extra_points(target - w, m, prefix, out);
            prefix.pop();
        }
        m -= 1;
    }
}

/// The plane-model chain for a tetragonal curve of genus `g`: the plane
/// degree, the conic-pencil constraint, every multiplicity pattern that
/// satisfies adjunction, and the degree of the surface `S`.
pub fn tetragonal_numerology(g: i64) -> Result<TetragonalNumerology> {
    if g < 6 {
        return Err(Error::InvalidInput(format!("numerology needs g >= 6, got {g}")));
    }
    let (k, residue) = match g.rem_euclid(3) {
        0 => (g / 3, 0),
        1 => ((g - 1) / 3, 1),
        _ => ((g + 1) / 3, -1),
    };
    let (d, a) = if residue == 1 {
        (2 * k + 3, 2 * k)
    } else {
        (2 * k + 2, 2 * k - 1)
    };
    let required = d * a - (2 * g - 2);
    let pencil_sum = 2 * d - 4;
    let stated_bound = match residue {
        0 => 4 * k - 3,
        -1 => 4 * k - 3,
        _ => 4 * k - 2,
    };
    let mut quads = Vec::new();
    partitions(pencil_sum, 4, 2, pencil_sum, &mut Vec::new(), &mut quads);
    let mut branches = Vec::new();
    for n in quads {
        let base: i64 = n.iter().map(|m| m * (m - 1)).sum();
        if base > required {
            continue;
        }
        let mut extras = Vec::new();
        extra_points(required - base, required, &mut Vec::new(), &mut extras);
        for extra in extras {
            let mut ms = n.clone();
            ms.extend(extra);
            let sum_m1: i64 = ms.iter().map(|m| m - 1).sum();
            let sum_sq: i64 = ms.iter().map(|m| (m - 1) * (m - 1)).sum();
            let deg_s = a * a - sum_sq;
            let model = PlaneModel::new(d, ms.clone())?;
            branches.push(NumerologyBranch {
                r: ms.len(),
                multiplicities: ms,
                pencil_multiplicities: n.clone(),
                sum_m_m_minus_1: required,
                sum_m_minus_1: sum_m1,
                deg_s,
                b: 2 * g - 6 - deg_s,
                clebsch_genus: clebsch_genus(&model).unwrap_or(-1),
            });
        }
    }
    branches.sort_by(|x, y| y.r.cmp(&x.r).then_with(|| y.multiplicities.cmp(&x.multiplicities)));
    let Some(first) = branches.first().cloned() else {
        return Err(Error::Assertion(format!("no multiplicity pattern for g={g}")));
    };
    Ok(TetragonalNumerology {
        g,
        k,
        residue,
        plane_degree: d,
        adjoint_degree: a,
        pencil_sum,
        required_sum_m_m_minus_1: required,
        within_bound: branches.iter().all(|b| b.deg_s <= stated_bound),
        branches,
        stated_bound,
        multiplicities: first.multiplicities,
        deg_s: first.deg_s,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HigherGonality {
    pub n: i64,
    pub k: i64,
    pub g: i64,
    pub excess: i64,
    #[serde(rename = "degZprime")]
    pub deg_z_prime: i64,
    #[serde(rename = "degZ")]
    pub deg_z: i64,
    pub pencil_sum: i64,
    #[serde(rename = "degS")]
    pub deg_s: i64,
    pub two_g_minus_3: i64,
    pub exceeds: bool,
}

/// Degree formulas for an `n`-gonal curve of genus `g = (n−1)k`.
pub fn higher_gonality_degree(n: i64, k: i64, excess: i64) -> Result<HigherGonality> {
    if n < 4 || k < 2 || excess < 0 {
        return Err(Error::InvalidInput(format!(
            "need n >= 4, k >= 2, excess >= 0; got n={n}, k={k}, excess={excess}"
        )));
    }
    let g = (n - 1) * k;
    let deg_s = k * n * n - 5 * k * n + 8 * k - n * n + 5 * n - 7 + excess;
    Ok(HigherGonality {
        n,
        k,
        g,
        excess,
        deg_z_prime: (k + 1) * (n - 2),
        deg_z: k * (n - 2) + 2,
        pencil_sum: (n - 2) * (n - 2) * k + n - 4,
        deg_s,
        two_g_minus_3: 2 * g - 3,
        exceeds: deg_s > 2 * g - 3,
    })
}

/// A class `aH − Σ b_i E_i` that would break ampleness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NakaiViolation {
    pub a: i64,
    pub b: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NakaiReport {
    pub k: i64,
    pub a_max: i64,
    /// `L = (2k−1)H − (k−1)ΣE_i`.
    pub l_squared: i64,
    /// `C = (2k+2)H − kΣE_i`.
    pub c_squared: i64,
    pub classes_checked: u64,
    pub l_violations: Vec<NakaiViolation>,
    pub c_violations: Vec<NakaiViolation>,
    /// `−5a/2 + 1` at `a = a_max + 1`; negative and decreasing, it bounds the
    /// Clebsch expression for every larger `a`.
    pub tail_bound_at_next: String,
    pub tail_holds: bool,
    pub certified: bool,
}

/// Ampleness of `L` and positivity for `C` on the plane blown up in four
/// points: no class `aH − Σb_iE_i` with `a ≤ a_max`, `b_i ≥ 0` and
/// `binom(a−1,2) − Σ b_i(b_i+1)/2 ≥ 0` meets `L` or `C` non-positively.
pub fn nakai_certificate(k: i64, a_max: i64) -> Result<NakaiReport> {
    if k < 2 || a_max < 1 {
        return Err(Error::InvalidInput(format!(
            "need k >= 2 and a_max >= 1, got k={k}, a_max={a_max}"
        )));
    }
    let l = BlowupClass {
        a: 2 * k - 1,
        b: vec![-(k - 1); 4],
    };
    let c = BlowupClass {
        a: 2 * k + 2,
        b: vec![-k; 4],
    };
    let l_squared = blowup_intersect(&l, &l)?;
    let c_squared = blowup_intersect(&c, &c)?;
    let mut l_violations = Vec::new();
    let mut c_violations = Vec::new();
    let mut checked = 0u64;
    for a in 1..=a_max {
        let budget = binom2(a - 1);
        let tri = |b: i64| b * (b + 1) / 2;
        let mut top = 0;
        while tri(top + 1) <= budget {
            top += 1;
        }
        for b0 in 0..=top {
            let r0 = budget - tri(b0);
            for b1 in 0..=b0 {
                if tri(b1) > r0 {
                    break;
                }
                let r1 = r0 - tri(b1);
                for b2 in 0..=b1 {
                    if tri(b2) > r1 {
                        break;
                    }
                    let r2 = r1 - tri(b2);
                    for b3 in 0..=b2 {
                        if tri(b3) > r2 {
                            break;
                        }
                        checked += 1;
                        let s = b0 + b1 + b2 + b3;
                        if (2 * k - 1) * a - (k - 1) * s <= 0 {
                            l_violations.push(NakaiViolation {
                                a,
                                b: vec![b0, b1, b2, b3],
                            });
                        }
                        if (2 * k + 2) * a - k * s <= 0 {
                            c_violations.push(NakaiViolation {
                                a,
                                b: vec![b0, b1, b2, b3],
                            });
                        }
                    }
                }
            }
        }
    }
    // −5a/2 + 1 in halves
    let next = a_max + 1;
    let twice_tail = -5 * next + 2;
    let tail_holds = twice_tail < 0;
    let tail_bound_at_next = if twice_tail % 2 == 0 {
        (twice_tail / 2).to_string()
    } else {
        format!("{twice_tail}/2")
    };
    Ok(NakaiReport {
        k,
        a_max,
        l_squared,
        c_squared,
        classes_checked: checked,
        certified: l_squared > 0 && c_squared > 0 && l_violations.is_empty() && c_violations.is_empty() && tail_holds,
        l_violations,
        c_violations,
        tail_bound_at_next,
        tail_holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clebsch_examples() {
        assert_eq!(
            clebsch_genus(&PlaneModel::new(7, vec![3, 3, 2, 2]).unwrap()).unwrap(),
            7
        );
        assert_eq!(clebsch_genus(&PlaneModel::new(6, vec![2, 2, 2]).unwrap()).unwrap(), 7);
        assert_eq!(clebsch_genus(&PlaneModel::new(3, vec![]).unwrap()).unwrap(), 1);
        assert!(matches!(
            clebsch_genus(&PlaneModel::new(3, vec![3, 2]).unwrap()),
            Err(Error::NegativeGenus(_))
        ));
        assert!(PlaneModel::new(5, vec![1]).is_err());
    }

    #[test]
    fn intersections() {
        let s = BlowupClass {
            a: 4,
            b: vec![-2, -2, -1, -1],
        };
        assert_eq!(blowup_intersect(&s, &s).unwrap(), 6);
        assert_eq!(
            blowup_intersect(&BlowupClass::hyperplane(4), &BlowupClass::exceptional(4, 2)).unwrap(),
            0
        );
        for k in 2..10 {
            let l = BlowupClass {
                a: 2 * k - 1,
                b: vec![-(k - 1); 4],
            };
            assert_eq!(blowup_intersect(&l, &l).unwrap(), 4 * k - 3);
        }
        assert!(blowup_intersect(&BlowupClass::hyperplane(3), &BlowupClass::hyperplane(4)).is_err());
    }

    #[test]
    fn adjunction_examples() {
        let r = adjunction_check(&PlaneModel::new(7, vec![3, 3, 2, 2]).unwrap(), 4, 7).unwrap();
        assert_eq!(r.required_sum_m_m_minus_1, 16);
        assert!(r.consistent);
        for k in 2..8 {
            let m = PlaneModel::new(2 * k + 2, vec![k.max(2); 4]).unwrap();
            let r = adjunction_check(&m, 2 * k - 1, 3 * k).unwrap();
            assert_eq!(r.required_sum_m_m_minus_1, 4 * k * (k - 1));
            let m = PlaneModel::new(2 * k + 3, vec![k + 1, k + 1, k, k]).unwrap();
            let r = adjunction_check(&m, 2 * k, 3 * k + 1).unwrap();
            assert_eq!(r.required_sum_m_m_minus_1, 4 * k * k);
            assert!(r.consistent);
        }
    }

    #[test]
    fn numerology_golden_values() {
        let g7 = tetragonal_numerology(7).unwrap();
        assert_eq!(g7.multiplicities, vec![3, 3, 2, 2]);
        assert_eq!(g7.deg_s, 6);
        assert_eq!(g7.branches.len(), 1);
        assert_eq!(g7.branches[0].sum_m_minus_1, 6);
        assert_eq!(g7.required_sum_m_m_minus_1, 16);
        let g9 = tetragonal_numerology(9).unwrap();
        assert_eq!(g9.multiplicities, vec![3, 3, 3, 3]);
        assert_eq!(g9.deg_s, 9);
        let g8 = tetragonal_numerology(8).unwrap();
        let shapes: Vec<(usize, i64)> = g8.branches.iter().map(|b| (b.r, b.deg_s)).collect();
        assert_eq!(shapes, vec![(5, 8), (4, 7)]);
        assert_eq!(g8.stated_bound, 9);
        assert!(g8.within_bound);
        assert!(tetragonal_numerology(5).is_err());
    }

    #[test]
    fn higher_gonality_examples() {
        let h = higher_gonality_degree(5, 2, 0).unwrap();
        assert_eq!((h.deg_z_prime, h.pencil_sum, h.deg_s, h.two_g_minus_3), (9, 19, 9, 13));
        let h = higher_gonality_degree(10, 2, 0).unwrap();
        assert_eq!(h.two_g_minus_3, 33);
        assert!(h.exceeds);
        for k in 2..=20 {
            assert_eq!(higher_gonality_degree(4, k, 0).unwrap().deg_s, 4 * k - 3);
        }
        assert!(higher_gonality_degree(3, 2, 0).is_err());
    }

    #[test]
    fn nakai_small() {
        for k in [2, 3] {
            let r = nakai_certificate(k, 50).unwrap();
            assert_eq!(r.l_squared, 4 * k - 3);
            assert_eq!(r.c_squared, 8 * k + 4);
            assert!(r.certified, "{r:?}");
        }
    }
}
