use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::algebra::{Coeff, Rational};

/// Polynomial `Σ c · xᵃ pᵇ` in the two phase coordinates, keyed by `(a, b)`.
/// Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial<C: Coeff> {
    terms: BTreeMap<(u32, u32), C>,
}

impl<C: Coeff> Default for Polynomial<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff> Polynomial<C> {
    pub fn zero() -> Self {
        Polynomial { terms: BTreeMap::new() }
    }

    pub fn constant(c: C) -> Self {
        Self::term(c, 0, 0)
    }

    pub fn term(c: C, x_power: u32, p_power: u32) -> Self {
        let mut out = Self::zero();
        out.add_term(c, x_power, p_power);
        out
    }

    pub fn x() -> Self {
        Self::term(C::one(), 1, 0)
    }

    pub fn p() -> Self {
        Self::term(C::one(), 0, 1)
    }

    /// Sums repeated exponent pairs.
    pub fn from_terms(terms: impl IntoIterator<Item = (C, u32, u32)>) -> Self {
        let mut out = Self::zero();
        for (c, a, b) in terms {
            out.add_term(c, a, b);
        }
        out
    }

    pub fn add_term(&mut self, c: C, x_power: u32, p_power: u32) {
        let key = (x_power, p_power);
        let sum = match self.terms.remove(&key) {
            Some(old) => old + c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(key, sum);
        }
    }

    /// `(coeff, x_power, p_power)` in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&C, u32, u32)> + '_ {
        self.terms.iter().map(|(&(a, b), c)| (c, a, b))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; 0 for the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|(a, b)| a + b).max().unwrap_or(0)
    }

    pub fn scale(&self, factor: &C) -> Self {
        Self::from_terms(self.terms().map(|(c, a, b)| (c.clone() * factor.clone(), a, b)))
    }

    pub fn deriv_x(&self) -> Self {
        Self::from_terms(
            self.terms()
                .filter(|&(_, a, _)| a > 0)
                .map(|(c, a, b)| (c.clone() * C::from_i64(a as i64), a - 1, b)),
        )
    }

    pub fn deriv_p(&self) -> Self {
        Self::from_terms(
            self.terms()
                .filter(|&(_, _, b)| b > 0)
                .map(|(c, a, b)| (c.clone() * C::from_i64(b as i64), a, b - 1)),
        )
    }

    pub fn eval(&self, x: &C, p: &C) -> C {
        self.terms().fold(C::zero(), |acc, (c, a, b)| {
            acc + c.clone() * num_traits::pow(x.clone(), a as usize) * num_traits::pow(p.clone(), b as usize)
        })
    }

    /// One `<coeff> <xPower> <pPower>` line per term.
    pub fn render_lines(&self) -> String {
        self.terms().map(|(c, a, b)| format!("{} {a} {b}\n", c.render())).collect()
    }
}

/// `2*x^2*p - 1/2*p + 3`, highest x power first.
impl<C: Coeff> fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (&(a, b), c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let magnitude = c.abs();
            f.write_str(match (i, negative) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            })?;
            let mut factors = Vec::new();
            if !magnitude.is_one() || (a == 0 && b == 0) {
                factors.push(magnitude.render());
            }
            for (name, power) in [("x", a), ("p", b)] {
                match power {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    _ => factors.push(format!("{name}^{power}")),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

impl Polynomial<Rational> {
    pub fn to_float(&self) -> Polynomial<f64> {
        Polynomial::from_terms(self.terms().map(|(c, a, b)| (c.to_f64(), a, b)))
    }
}

impl<C: Coeff> Add for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn add(self, rhs: &Polynomial<C>) -> Polynomial<C> {
        let mut out = self.clone();
        for (c, a, b) in rhs.terms() {
            out.add_term(c.clone(), a, b);
        }
        out
    }
}

impl<C: Coeff> Neg for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn neg(self) -> Polynomial<C> {
        self.scale(&-C::one())
    }
}

impl<C: Coeff> Sub for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn sub(self, rhs: &Polynomial<C>) -> Polynomial<C> {
        self + &-rhs
    }
}

impl<C: Coeff> Mul for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn mul(self, rhs: &Polynomial<C>) -> Polynomial<C> {
        let mut out = Polynomial::zero();
        for (c1, a1, b1) in self.terms() {
            for (c2, a2, b2) in rhs.terms() {
                out.add_term(c1.clone() * c2.clone(), a1 + a2, b1 + b2);
            }
        }
        out
    }
}

/// Scalar coefficient of `I` in `{F, G} = (F_x G_p + s F_p G_x) I`.
pub fn bracket_poly<C: Coeff>(f: &Polynomial<C>, g: &Polynomial<C>, s: i8) -> Polynomial<C> {
    let first = &f.deriv_x() * &g.deriv_p();
    let second = (&f.deriv_p() * &g.deriv_x()).scale(&C::from_sign(s));
    &first + &second
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rational};

    fn q(c: i64, a: u32, b: u32) -> Polynomial<Rational> {
        Polynomial::term(int(c), a, b)
    }

    #[test]
    fn merges_and_drops_zeros() {
        let poly = Polynomial::from_terms([(int(2), 1, 1), (int(-2), 1, 1), (int(3), 0, 2)]);
        assert_eq!(poly.len(), 1);
        assert_eq!(poly.degree(), 2);
    }

    #[test]
    fn derivatives() {
        let h = &q(1, 2, 0) + &q(1, 0, 2);
        assert_eq!(h.deriv_x(), q(2, 1, 0));
        assert_eq!(h.deriv_p(), q(2, 0, 1));
        assert!(Polynomial::<Rational>::constant(int(7)).deriv_x().is_zero());
    }

    #[test]
    fn product_and_eval() {
        let f = &q(1, 1, 0) + &q(1, 0, 0);
        let g = &f * &f;
        assert_eq!(g, &(&q(1, 2, 0) + &q(2, 1, 0)) + &q(1, 0, 0));
        assert_eq!(g.eval(&int(2), &int(9)), int(9));
        let half = Polynomial::term(rational(1, 2), 0, 3);
        assert_eq!(half.eval(&int(0), &int(2)), int(4));
    }

    #[test]
    fn display() {
        let poly = Polynomial::from_terms([(int(2), 2, 1), (rational(-1, 2), 0, 1), (int(3), 0, 0), (int(-1), 1, 0)]);
        assert_eq!(poly.to_string(), "2*x^2*p - x - 1/2*p + 3");
        assert_eq!(Polynomial::<Rational>::zero().to_string(), "0");
    }

    #[test]
    fn canonical_bracket() {
        let xp = bracket_poly(&Polynomial::<Rational>::x(), &Polynomial::p(), -1);
        assert_eq!(xp, Polynomial::constant(int(1)));
        let px = bracket_poly(&Polynomial::<Rational>::p(), &Polynomial::x(), -1);
        assert_eq!(px, Polynomial::constant(int(-1)));
        let px_sym = bracket_poly(&Polynomial::<Rational>::p(), &Polynomial::x(), 1);
        assert_eq!(px_sym, Polynomial::constant(int(1)));
    }
}
