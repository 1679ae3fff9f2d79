use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Serialize, Serializer};

use super::blade::{BasisBlade, SignedBlade};
use super::coeff::{Coeff, CoefficientMode, Rational};
use super::signature::Signature;
use crate::error::{Error, Result};

/// Sparse multivector in `Cl(p,q)`.
///
/// Terms map a basis blade to its coefficient. Zero coefficients are never
/// stored, so structural equality is term-wise equality.
#[derive(Debug, Clone, PartialEq)]
pub struct Multivector<C: Coeff = Rational> {
    sig: Signature,
    terms: BTreeMap<BasisBlade, C>,
}

pub type FloatMultivector = Multivector<f64>;

impl<C: Coeff> Multivector<C> {
    pub fn zero(sig: Signature) -> Self {
        Multivector { sig, terms: BTreeMap::new() }
    }

    pub fn scalar(sig: Signature, value: C) -> Self {
        Self::from_blade(sig, BasisBlade::SCALAR, value)
    }

    pub fn one(sig: Signature) -> Self {
        Self::scalar(sig, C::one())
    }

    /// `value * e_K`.
    pub fn from_blade(sig: Signature, blade: BasisBlade, value: C) -> Self {
        assert!(blade.fits(sig), "blade {blade} does not fit {sig}");
        let mut mv = Self::zero(sig);
        mv.add_term(blade, value);
        mv
    }

    pub fn basis(sig: Signature, blade: BasisBlade) -> Self {
        Self::from_blade(sig, blade, C::one())
    }

    pub fn signed_blade(sig: Signature, blade: SignedBlade) -> Self {
        Self::from_blade(sig, blade.blade, C::from_sign(blade.sign))
    }

    /// Basis vector `e_i`, one-based.
    pub fn vector(sig: Signature, i: usize) -> Self {
        assert!(i >= 1 && i <= sig.dim(), "vector index {i} out of range for {sig}");
        Self::basis(sig, BasisBlade::vector(i))
    }

    pub fn pseudoscalar(sig: Signature) -> Self {
        Self::basis(sig, BasisBlade::pseudoscalar(sig))
    }

    /// Builds a multivector from `(blade, coefficient)` pairs, summing repeats.
    pub fn from_terms(sig: Signature, terms: impl IntoIterator<Item = (BasisBlade, C)>) -> Self {
        let mut mv = Self::zero(sig);
        for (blade, c) in terms {
            assert!(blade.fits(sig), "blade {blade} does not fit {sig}");
            mv.add_term(blade, c);
        }
        mv
    }

    pub fn signature(&self) -> Signature {
        self.sig
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

    pub fn terms(&self) -> impl Iterator<Item = (BasisBlade, &C)> + '_ {
        self.terms.iter().map(|(b, c)| (*b, c))
    }

    pub fn coeff(&self, blade: BasisBlade) -> C {
        self.terms.get(&blade).cloned().unwrap_or_else(C::zero)
    }

    pub fn scalar_part(&self) -> C {
        self.coeff(BasisBlade::SCALAR)
    }

    /// Adds `value * blade` in place, dropping the term if it cancels.
    pub(crate) fn add_term(&mut self, blade: BasisBlade, value: C) {
        if value.is_zero() {
            return;
        }
        match self.terms.entry(blade) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(value);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                let sum = slot.get().clone() + value;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    pub(crate) fn check_same(&self, other: &Self) -> Result<()> {
        if self.sig == other.sig {
            Ok(())
        } else {
            Err(Error::SignatureMismatch { left: self.sig, right: other.sig })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (b, c) in other.terms() {
            out.add_term(b, c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (b, c) in other.terms() {
            out.add_term(b, -c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, factor: &C) -> Self {
        if factor.is_zero() {
            return Self::zero(self.sig);
        }
        Multivector {
            sig: self.sig,
            terms: self.terms.iter().map(|(b, c)| (*b, c.clone() * factor.clone())).collect(),
        }
    }

    /// Multiplies every term by a per-blade sign.
    pub(crate) fn map_signs(&self, sign: impl Fn(BasisBlade) -> i8) -> Self {
        Multivector {
            sig: self.sig,
            terms: self
                .terms
                .iter()
                .map(|(b, c)| (*b, if sign(*b) < 0 { -c.clone() } else { c.clone() }))
                .collect(),
        }
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Multivector<D> {
        Multivector::from_terms(self.sig, self.terms.iter().map(|(b, c)| (*b, f(c))))
    }

    /// `⟨A⟩_k`: the terms of grade exactly `k`.
    pub fn grade_project(&self, k: usize) -> Result<Self> {
        if k > self.sig.dim() {
            return Err(Error::GradeOutOfRange { grade: k, n: self.sig.dim() });
        }
        Ok(self.filter_grade(|g| g == k))
    }

    pub(crate) fn filter_grade(&self, keep: impl Fn(usize) -> bool) -> Self {
        Multivector {
            sig: self.sig,
            terms: self
                .terms
                .iter()
                .filter(|(b, _)| keep(b.grade()))
                .map(|(b, c)| (*b, c.clone()))
                .collect(),
        }
    }

    /// Grades that carry at least one term, ascending.
    pub fn grades(&self) -> Vec<usize> {
        let mut g: Vec<usize> = self.terms.keys().map(|b| b.grade()).collect();
        g.sort_unstable();
        g.dedup();
        g
    }

    /// The single grade of a non-zero homogeneous multivector.
    pub fn homogeneous_grade(&self) -> Result<Option<usize>> {
        match self.grades().as_slice() {
            [] => Ok(None),
            [k] => Ok(Some(*k)),
            many => Err(Error::NotHomogeneous { grades: many.to_vec() }),
        }
    }

    /// If `self = c · e_K` for a single blade, returns `(e_K, c)`.
    pub fn as_single_term(&self) -> Option<(BasisBlade, &C)> {
        if self.terms.len() == 1 {
            self.terms().next()
        } else {
            None
        }
    }

    /// Coefficient-wise comparison under `mode`.
    pub fn same_as(&self, other: &Self, mode: CoefficientMode) -> bool {
        if self.sig != other.sig {
            return false;
        }
        match mode {
            CoefficientMode::Exact => self == other,
            CoefficientMode::Float { .. } => {
                let zero = C::zero();
                let keys: std::collections::BTreeSet<_> =
                    self.terms.keys().chain(other.terms.keys()).collect();
                keys.into_iter().all(|b| {
                    let a = self.terms.get(b).unwrap_or(&zero);
                    let o = other.terms.get(b).unwrap_or(&zero);
                    mode.same(a, o)
                })
            }
        }
    }

    /// Largest absolute coefficient, as `f64`.
    pub fn max_abs(&self) -> f64 {
        self.terms.values().map(|c| c.to_f64().abs()).fold(0.0, f64::max)
    }

    /// Terms in display order: by grade, then by mask.
    fn display_order(&self) -> Vec<(BasisBlade, &C)> {
        let mut terms: Vec<_> = self.terms().collect();
        terms.sort_by_key(|(b, _)| (b.grade(), b.mask()));
        terms
    }
}

impl Multivector<Rational> {
    pub fn to_float(&self) -> FloatMultivector {
        self.map_coeffs(Coeff::to_f64)
    }
}

impl<C: Coeff> fmt::Display for Multivector<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (blade, c)) in self.display_order().into_iter().enumerate() {
            let negative = c.is_negative();
            let magnitude = c.abs();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if blade == BasisBlade::SCALAR {
                f.write_str(&magnitude.render())?;
            } else if magnitude.is_one() {
                write!(f, "{blade}")?;
            } else {
                write!(f, "{}*{blade}", magnitude.render())?;
            }
        }
        Ok(())
    }
}

impl<C: Coeff> Serialize for Multivector<C> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

// Operator overloads panic on mismatched signatures; use the `checked_*`
// methods or the free product functions when that is not guaranteed.

impl<C: Coeff> Add for &Multivector<C> {
    type Output = Multivector<C>;

    fn add(self, rhs: &Multivector<C>) -> Multivector<C> {
        self.checked_add(rhs).expect("signature mismatch in +")
    }
}

impl<C: Coeff> Add for Multivector<C> {
    type Output = Multivector<C>;

    fn add(self, rhs: Multivector<C>) -> Multivector<C> {
        &self + &rhs
    }
}

impl<C: Coeff> Sub for &Multivector<C> {
    type Output = Multivector<C>;

    fn sub(self, rhs: &Multivector<C>) -> Multivector<C> {
        self.checked_sub(rhs).expect("signature mismatch in -")
    }
}

impl<C: Coeff> Sub for Multivector<C> {
    type Output = Multivector<C>;

    fn sub(self, rhs: Multivector<C>) -> Multivector<C> {
        &self - &rhs
    }
}

impl<C: Coeff> Neg for &Multivector<C> {
    type Output = Multivector<C>;

    fn neg(self) -> Multivector<C> {
        self.map_signs(|_| -1)
    }
}

impl<C: Coeff> Neg for Multivector<C> {
    type Output = Multivector<C>;

    fn neg(self) -> Multivector<C> {
        -&self
    }
}

impl<C: Coeff> Mul for &Multivector<C> {
    type Output = Multivector<C>;

    fn mul(self, rhs: &Multivector<C>) -> Multivector<C> {
        super::products::geometric_product(self, rhs).expect("signature mismatch in *")
    }
}

impl<C: Coeff> Mul for Multivector<C> {
    type Output = Multivector<C>;

    fn mul(self, rhs: Multivector<C>) -> Multivector<C> {
        &self * &rhs
    }
}
