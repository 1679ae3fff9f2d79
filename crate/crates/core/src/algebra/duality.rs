//! Reversion, the metric `g(A,B) = B†·A`, inverses and the Hodge dual.

use super::blade::BasisBlade;
use super::coeff::Coeff;
use super::multivector::Multivector;
use super::products::{dot, geometric_product, wedge};
use crate::error::{Error, Result};

/// `A†`: each grade-k term picks up `(-1)^{k(k-1)/2}`.
pub fn reversion<C: Coeff>(a: &Multivector<C>) -> Multivector<C> {
    a.map_signs(BasisBlade::reversion_sign)
}

/// `g(A,B)`: scalar part of `B†·A`.
pub fn inner<C: Coeff>(a: &Multivector<C>, b: &Multivector<C>) -> Result<C> {
    Ok(dot(&reversion(b), a)?.scalar_part())
}

/// `|A|^2 = g(A,A)`.
pub fn norm_squared<C: Coeff>(a: &Multivector<C>) -> Result<C> {
    inner(a, a)
}

/// `⋆A = A† I`.
pub fn hodge_dual<C: Coeff>(a: &Multivector<C>) -> Multivector<C> {
    let i = Multivector::pseudoscalar(a.signature());
    geometric_product(&reversion(a), &i).expect("same signature")
}

/// `A⁻¹ = A† / |A|²` for a homogeneous blade.
///
/// For a homogeneous multivector that is not a blade the formula is still
/// evaluated but is not a two-sided inverse.
pub fn inverse<C: Coeff>(a: &Multivector<C>) -> Result<Multivector<C>> {
    a.homogeneous_grade()?;
    let norm = norm_squared(a)?;
    if norm.is_zero() {
        return Err(Error::NullBlade);
    }
    Ok(reversion(a).scale(&(C::one() / norm)))
}

/// Geometric inverse `A⁻¹ I`.
pub fn geometric_inverse<C: Coeff>(a: &Multivector<C>) -> Result<Multivector<C>> {
    let i = Multivector::pseudoscalar(a.signature());
    geometric_product(&inverse(a)?, &i)
}

/// Both sides of `g(A,B) I = A ∧ ⋆B`.
#[derive(Debug, Clone, PartialEq)]
pub struct HodgeRelation<C: Coeff> {
    pub lhs: Multivector<C>,
    pub rhs: Multivector<C>,
    pub equal: bool,
}

/// Evaluates the Hodge relation for two homogeneous elements of equal grade
/// in a Euclidean algebra. Zero operands are accepted at any grade.
pub fn hodge_relation_check<C: Coeff>(a: &Multivector<C>, b: &Multivector<C>) -> Result<HodgeRelation<C>> {
    a.check_same(b)?;
    a.signature().require_euclidean()?;
    if let (Some(ga), Some(gb)) = (a.homogeneous_grade()?, b.homogeneous_grade()?) {
        if ga != gb {
            return Err(Error::GradeMismatch { expected: ga, found: gb.to_string() });
        }
    }
    let i = Multivector::pseudoscalar(a.signature());
    let lhs = i.scale(&inner(a, b)?);
    let rhs = wedge(a, &hodge_dual(b))?;
    let equal = lhs == rhs;
    Ok(HodgeRelation { lhs, rhs, equal })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::coeff::{int, rational, Rational};
    use crate::algebra::Signature;

    type Mv = Multivector<Rational>;

    fn e(sig: Signature, idx: &[usize]) -> Mv {
        Mv::basis(sig, BasisBlade::from_indices(idx).unwrap())
    }

    fn cl(n: usize) -> Signature {
        Signature::euclidean(n).unwrap()
    }

    #[test]
    fn reversion_signs() {
        let sig = cl(3);
        assert_eq!(reversion(&e(sig, &[1, 2])), -e(sig, &[1, 2]));
        assert_eq!(reversion(&e(sig, &[1, 2, 3])), -e(sig, &[1, 2, 3]));
        assert_eq!(reversion(&e(sig, &[2])), e(sig, &[2]));
        assert_eq!(reversion(&Mv::one(sig)), Mv::one(sig));
        let sig4 = cl(4);
        assert_eq!(reversion(&e(sig4, &[1, 2, 3, 4])), e(sig4, &[1, 2, 3, 4]));
    }

    #[test]
    fn inner_products() {
        let sig = cl(3);
        assert_eq!(inner(&e(sig, &[1, 2]), &e(sig, &[1, 2])).unwrap(), int(1));
        assert_eq!(inner(&e(sig, &[1]), &e(sig, &[2])).unwrap(), int(0));
        let lorentz = Signature::new(3, 1).unwrap();
        assert_eq!(inner(&e(lorentz, &[4]), &e(lorentz, &[4])).unwrap(), int(-1));
    }

    #[test]
    fn duals_in_cl3() {
        let sig = cl(3);
        assert_eq!(hodge_dual(&e(sig, &[1])), e(sig, &[2, 3]));
        assert_eq!(hodge_dual(&Mv::one(sig)), Mv::pseudoscalar(sig));
        assert_eq!(hodge_dual(&Mv::pseudoscalar(sig)), Mv::one(sig));
    }

    #[test]
    fn inverse_of_scaled_bivector() {
        let sig = cl(3);
        let a = e(sig, &[1, 2]).scale(&int(2));
        let inv = inverse(&a).unwrap();
        assert_eq!(inv, e(sig, &[1, 2]).scale(&rational(-1, 2)));
        assert_eq!(geometric_product(&inv, &a).unwrap(), Mv::one(sig));
        assert_eq!(geometric_product(&a, &inv).unwrap(), Mv::one(sig));
    }

    #[test]
    fn null_blade_has_no_inverse() {
        let sig = Signature::new(3, 1).unwrap();
        let null = &e(sig, &[1]) + &e(sig, &[4]);
        assert!(matches!(inverse(&null), Err(Error::NullBlade)));
        assert!(matches!(geometric_inverse(&null), Err(Error::NullBlade)));
    }

    #[test]
    fn inverse_requires_homogeneous_input() {
        let sig = cl(3);
        let a = &Mv::one(sig) + &e(sig, &[1]);
        assert!(matches!(inverse(&a), Err(Error::NotHomogeneous { .. })));
    }

    #[test]
    fn geometric_inverse_has_dual_grade() {
        let sig = cl(5);
        let a = e(sig, &[2, 4]).scale(&int(3));
        let gi = geometric_inverse(&a).unwrap();
        assert_eq!(gi.homogeneous_grade().unwrap(), Some(3));
    }

    #[test]
    fn hodge_relation_examples() {
        let sig = cl(3);
        let b = e(sig, &[1, 2]);
        let r = hodge_relation_check(&b, &b).unwrap();
        assert_eq!(r.lhs, Mv::pseudoscalar(sig));
        assert!(r.equal);

        let sig2 = cl(2);
        let r = hodge_relation_check(&e(sig2, &[1]), &e(sig2, &[2])).unwrap();
        assert!(r.lhs.is_zero() && r.rhs.is_zero() && r.equal);
    }

    #[test]
    fn hodge_relation_preconditions() {
        let sig = cl(3);
        assert!(matches!(
            hodge_relation_check(&e(sig, &[1]), &e(sig, &[1, 2])),
            Err(Error::GradeMismatch { .. })
        ));
        let lorentz = Signature::new(3, 1).unwrap();
        assert!(matches!(
            hodge_relation_check(&e(lorentz, &[1]), &e(lorentz, &[1])),
            Err(Error::NonEuclideanSignature(_))
        ));
    }
}
