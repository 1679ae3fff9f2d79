use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// Exact coefficient type used by every verification suite.
pub type Rational = BigRational;

/// Coefficient field of a multivector.
///
/// Implemented for [`Rational`] (exact) and `f64` (dynamics).
pub trait Coeff: Clone + PartialEq + Debug + Signed + Send + Sync + 'static {
    fn from_sign(sign: i8) -> Self {
        if sign < 0 {
            -Self::one()
        } else {
            Self::one()
        }
    }

    fn from_i64(v: i64) -> Self;

    fn to_f64(&self) -> f64;

    /// Rendering used by the multivector text format.
    fn render(&self) -> String;
}

impl Coeff for Rational {
    fn from_i64(v: i64) -> Self {
        Rational::from_integer(BigInt::from(v))
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn render(&self) -> String {
        if self.is_integer() {
            self.numer().to_string()
        } else {
            format!("{}/{}", self.numer(), self.denom())
        }
    }
}

impl Coeff for f64 {
    fn from_i64(v: i64) -> Self {
        v as f64
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn render(&self) -> String {
        format!("{self}")
    }
}

pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(v: i64) -> Rational {
    Rational::from_i64(v)
}

/// Parses `3`, `-2/5` or a plain decimal such as `0.125` into an exact
/// rational. Exponent notation is not accepted.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let s = text.trim();
    let bad = || Error::Parse(format!("invalid number `{text}`"));
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(Error::Parse(format!("zero denominator in `{text}`")));
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        if !frac.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = whole.starts_with('-');
        let whole = whole.trim_start_matches(['-', '+']);
        if whole.is_empty() && frac.is_empty() {
            return Err(bad());
        }
        let digits = format!("{whole}{frac}");
        let numer: BigInt = digits.parse().map_err(|_| bad())?;
        let denom = num_traits::pow(BigInt::from(10), frac.len());
        let value = Rational::new(numer, denom);
        return Ok(if negative { -value } else { value });
    }
    let n: BigInt = s.parse().map_err(|_| bad())?;
    Ok(Rational::from_integer(n))
}

/// How coefficients are compared.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum CoefficientMode {
    #[default]
    Exact,
    Float { epsilon: f64 },
}

impl CoefficientMode {
    /// Compares two coefficients. Exact mode requires equality; float mode
    /// accepts `|a - b| <= epsilon`.
    pub fn same<C: Coeff>(&self, a: &C, b: &C) -> bool {
        match self {
            CoefficientMode::Exact => a == b,
            CoefficientMode::Float { epsilon } => (a.to_f64() - b.to_f64()).abs() <= *epsilon,
        }
    }
}

impl std::str::FromStr for CoefficientMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(CoefficientMode::Exact),
            "float" => Ok(CoefficientMode::Float { epsilon: 1e-12 }),
            other => match other.strip_prefix("float:") {
                Some(eps) => {
                    let epsilon: f64 = eps
                        .parse()
                        .map_err(|_| Error::Parse(format!("invalid epsilon `{eps}`")))?;
                    if !(epsilon >= 0.0 && epsilon.is_finite()) {
                        return Err(Error::Parse(format!("invalid epsilon `{eps}`")));
                    }
                    Ok(CoefficientMode::Float { epsilon })
                }
                None => Err(Error::Parse(format!("unknown coefficient mode `{s}`"))),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("3").unwrap(), int(3));
        assert_eq!(parse_rational("-2/4").unwrap(), rational(-1, 2));
        assert_eq!(parse_rational("0.125").unwrap(), rational(1, 8));
        assert_eq!(parse_rational("-1.5").unwrap(), rational(-3, 2));
        assert_eq!(parse_rational(".5").unwrap(), rational(1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("1e3").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn modes() {
        let exact = CoefficientMode::Exact;
        assert!(exact.same(&rational(1, 3), &rational(2, 6)));
        assert!(!exact.same(&1.0, &(1.0 + 1e-15)));
        let float: CoefficientMode = "float:1e-9".parse().unwrap();
        assert!(float.same(&1.0, &(1.0 + 1e-10)));
        assert!(!float.same(&1.0, &1.1));
        assert!("fuzzy".parse::<CoefficientMode>().is_err());
    }

    #[test]
    fn render() {
        assert_eq!(rational(-3, 6).render(), "-1/2");
        assert_eq!(int(4).render(), "4");
    }
}
