//! Plain-text multivector format.
//!
//! Terms are `coeff*blade` joined by `+`/`-`, e.g. `1 + 2*e12 - e134`.
//! A blade is `e` followed by one-based indices (single digits), the braced
//! list form `e{2,11}` for indices above 9, or `I` for the pseudoscalar.
//! Indices may appear in any order or repeat; the blade is reduced with the
//! appropriate sign and metric factors.

use num_traits::One;

use super::blade::{blade_product, BasisBlade, SignedBlade};
use super::coeff::{parse_rational, Rational};
use super::multivector::Multivector;
use super::signature::Signature;
use crate::error::{Error, Result};

impl Multivector<Rational> {
    pub fn parse(sig: Signature, text: &str) -> Result<Self> {
        parse_multivector(sig, text)
    }
}

pub fn parse_multivector(sig: Signature, text: &str) -> Result<Multivector<Rational>> {
    let mut out = Multivector::zero(sig);
    let mut depth = 0usize;
    let mut negative = false;
    let mut current = String::new();
    let mut seen_term = false;

    let flush = |negative: bool, body: &str, out: &mut Multivector<Rational>| -> Result<()> {
        let (blade, coeff) = parse_term(sig, body.trim())?;
        let coeff = if negative { -coeff } else { coeff };
        out.add_term(blade.blade, if blade.sign < 0 { -coeff } else { coeff });
        Ok(())
    };

    for ch in text.chars() {
        match ch {
            '{' => {
                depth += 1;
                current.push(ch);
            }
            '}' => {
                depth = depth
                    .checked_sub(1)
                    .ok_or_else(|| Error::Parse(format!("unbalanced `}}` in `{text}`")))?;
                current.push(ch);
            }
            '+' | '-' if depth == 0 => {
                if current.trim().is_empty() {
                    // unary sign
                    if ch == '-' {
                        negative = !negative;
                    }
                    continue;
                }
                flush(negative, &current, &mut out)?;
                seen_term = true;
                current.clear();
                negative = ch == '-';
            }
            _ => current.push(ch),
        }
    }
    if depth != 0 {
        return Err(Error::Parse(format!("unbalanced `{{` in `{text}`")));
    }
    if current.trim().is_empty() {
        if !seen_term {
            return Err(Error::Parse("empty multivector".into()));
        }
        return Err(Error::Parse(format!("dangling operator in `{text}`")));
    }
    flush(negative, &current, &mut out)?;
    Ok(out)
}

fn parse_term(sig: Signature, term: &str) -> Result<(SignedBlade, Rational)> {
    if let Some((coeff, blade)) = term.split_once('*') {
        let coeff = parse_rational(coeff)?;
        Ok((parse_blade(sig, blade.trim())?, coeff))
    } else if term.starts_with('e') || term == "I" {
        Ok((parse_blade(sig, term)?, Rational::one()))
    } else {
        Ok((SignedBlade::positive(BasisBlade::SCALAR), parse_rational(term)?))
    }
}

fn parse_blade(sig: Signature, text: &str) -> Result<SignedBlade> {
    if text == "I" {
        return Ok(SignedBlade::positive(BasisBlade::pseudoscalar(sig)));
    }
    if text == "1" {
        return Ok(SignedBlade::positive(BasisBlade::SCALAR));
    }
    let bad = || Error::Parse(format!("invalid blade `{text}`"));
    let rest = text.strip_prefix('e').ok_or_else(bad)?;
    let indices: Vec<usize> = if let Some(list) = rest.strip_prefix('{') {
        let list = list.strip_suffix('}').ok_or_else(bad)?;
        list.split(',')
            .map(|s| s.trim().parse::<usize>().map_err(|_| bad()))
            .collect::<Result<_>>()?
    } else {
        if rest.is_empty() {
            return Err(bad());
        }
        rest.chars()
            .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
            .collect::<Result<_>>()?
    };
    let mut acc = SignedBlade::positive(BasisBlade::SCALAR);
    for i in indices {
        if i == 0 || i > sig.dim() {
            return Err(Error::Parse(format!("index {i} out of range for {sig} in `{text}`")));
        }
        acc = blade_product(acc, SignedBlade::positive(BasisBlade::vector(i)), sig);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::coeff::{int, rational};

    fn e(idx: &[usize]) -> BasisBlade {
        BasisBlade::from_indices(idx).unwrap()
    }

    #[test]
    fn parses_canonical_text() {
        let sig = Signature::euclidean(4).unwrap();
        let mv = Multivector::parse(sig, "1 + 2*e12 - e134").unwrap();
        let expected = Multivector::from_terms(
            sig,
            [(BasisBlade::SCALAR, int(1)), (e(&[1, 2]), int(2)), (e(&[1, 3, 4]), int(-1))],
        );
        assert_eq!(mv, expected);
        assert_eq!(mv.to_string(), "1 + 2*e12 - e134");
    }

    #[test]
    fn reorders_with_sign() {
        let sig = Signature::euclidean(3).unwrap();
        assert_eq!(Multivector::parse(sig, "e21").unwrap(), Multivector::from_blade(sig, e(&[1, 2]), int(-1)));
        assert_eq!(Multivector::parse(sig, "e312").unwrap(), Multivector::pseudoscalar(sig));
        assert_eq!(Multivector::parse(sig, "3*e11").unwrap(), Multivector::scalar(sig, int(3)));
        let lorentz = Signature::new(3, 1).unwrap();
        assert_eq!(Multivector::parse(lorentz, "e44").unwrap(), Multivector::scalar(lorentz, int(-1)));
    }

    #[test]
    fn pseudoscalar_and_signs() {
        let sig = Signature::euclidean(2).unwrap();
        assert_eq!(Multivector::parse(sig, "-I").unwrap(), -Multivector::pseudoscalar(sig));
        assert_eq!(Multivector::parse(sig, "1/2*I - -e1").unwrap().to_string(), "e1 + 1/2*e12");
        assert_eq!(Multivector::parse(sig, "0.5").unwrap(), Multivector::scalar(sig, rational(1, 2)));
    }

    #[test]
    fn braced_indices() {
        let sig = Signature::euclidean(12).unwrap();
        let mv = Multivector::parse(sig, "2*e{11,2}").unwrap();
        assert_eq!(mv, Multivector::from_blade(sig, e(&[2, 11]), int(-2)));
        assert_eq!(mv.to_string(), "-2*e{2,11}");
    }

    #[test]
    fn rejects_garbage() {
        let sig = Signature::euclidean(3).unwrap();
        for bad in ["", "e", "e4", "e0", "2*", "1 +", "x1", "e{1,2", "2*f12"] {
            assert!(Multivector::parse(sig, bad).is_err(), "accepted `{bad}`");
        }
    }
}
