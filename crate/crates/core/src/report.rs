//! JSON shapes shared by the reports and the command line. Rationals are
//! `"p/q"` strings; floating values are decimal strings tagged with the
//! working precision in bits.

use rug::{Complex, Rational};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{format_rational, parse_rational, Monomial, Polynomial};
use crate::numeric::{format_float, format_scalar, DualPoint};
use crate::waring::Decomposition;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exps: Vec<u32>,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialJson {
    pub nvars: usize,
    pub degree: u32,
    pub terms: Vec<TermJson>,
}

impl From<&Polynomial> for PolynomialJson {
    fn from(p: &Polynomial) -> Self {
        PolynomialJson {
            nvars: p.nvars(),
            degree: p.degree(),
            terms: p
                .terms()
                .map(|(m, c)| TermJson {
                    exps: m.exps().to_vec(),
                    coeff: format_rational(c),
                })
                .collect(),
        }
    }
}

impl TryFrom<&PolynomialJson> for Polynomial {
    type Error = Error;
    fn try_from(p: &PolynomialJson) -> Result<Polynomial> {
        let terms = p
            .terms
            .iter()
            .map(|t| {
                if t.exps.len() != p.nvars {
                    return Err(Error::NvarsMismatch(t.exps.len(), p.nvars));
                }
                Ok((Monomial::new(t.exps.clone()), parse_rational(&t.coeff)?))
            })
            .collect::<Result<Vec<_>>>()?;
        Polynomial::from_terms(p.nvars, p.degree, terms)
    }
}

/// A dual point: exact `"p/q"` coordinates, or `[re, im]` decimal pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualPointJson {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub exact: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub approx: Option<Vec<[String; 2]>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub precision_bits: Option<u32>,
}

fn complex_strings(z: &Complex, prec: u32) -> [String; 2] {
    [format_float(z.real(), prec), format_float(z.imag(), prec)]
}

impl DualPointJson {
    pub fn new(p: &DualPoint, prec: u32) -> Self {
        match p {
            DualPoint::Exact(v) => DualPointJson {
                exact: Some(v.iter().map(format_rational).collect()),
                approx: None,
                precision_bits: None,
            },
            DualPoint::Approx(v) => DualPointJson {
                exact: None,
                approx: Some(v.iter().map(|z| complex_strings(z, prec)).collect()),
                precision_bits: Some(prec),
            },
        }
    }

    pub fn to_point(&self, prec: u32) -> Result<DualPoint> {
        match (&self.exact, &self.approx) {
            (Some(v), None) => Ok(DualPoint::Exact(
                v.iter().map(|s| parse_rational(s)).collect::<Result<Vec<Rational>>>()?,
            )),
            (None, Some(v)) => {
                let prec = self.precision_bits.unwrap_or(prec);
                let parse = |s: &str| {
                    rug::Float::parse(s)
                        .map(|x| rug::Float::with_val(prec, x))
                        .map_err(|_| Error::Parse(format!("bad decimal {s:?}")))
                };
                let coords = v
                    .iter()
                    .map(|[re, im]| Ok(Complex::with_val(prec, (parse(re)?, parse(im)?))))
                    .collect::<Result<Vec<_>>>()?;
                Ok(DualPoint::Approx(coords))
            }
            _ => Err(Error::Parse(
                "a dual point needs exactly one of `exact` or `approx`".into(),
            )),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionJson {
    pub length: usize,
    pub exact: bool,
    pub forms: Vec<DualPointJson>,
    pub weights: DualPointJson,
    pub residual: String,
}

impl DecompositionJson {
    pub fn new(d: &Decomposition, prec: u32) -> Self {
        DecompositionJson {
            length: d.rank(),
            exact: d.is_exact(),
            forms: d.forms.iter().map(|p| DualPointJson::new(p, prec)).collect(),
            weights: DualPointJson::new(&d.weights, prec),
            residual: format_scalar(d.residual),
        }
    }
}

pub fn rationals(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::samples::fermat;

    #[test]
    fn polynomial_round_trip() {
        let f = fermat(4);
        let j = PolynomialJson::from(&f);
        let text = serde_json::to_string(&j).unwrap();
        let back: PolynomialJson = serde_json::from_str(&text).unwrap();
        assert_eq!(Polynomial::try_from(&back).unwrap(), f);
    }

    #[test]
    fn point_round_trip() {
        let p = DualPoint::Exact(vec![Rational::from((1, 3)), Rational::from(-2)]);
        let j = DualPointJson::new(&p, 128);
        assert_eq!(j.exact.as_deref().unwrap(), ["1/3", "-2"]);
        assert_eq!(j.to_point(128).unwrap(), p);
        let z = DualPoint::Approx(vec![Complex::with_val(128, (1.5, -0.25))]);
        let j = DualPointJson::new(&z, 128);
        assert_eq!(j.to_point(128).unwrap().to_complex(128), z.to_complex(128));
        let bad = DualPointJson {
            exact: None,
            approx: None,
            precision_bits: None,
        };
        assert!(bad.to_point(128).is_err());
    }
}
