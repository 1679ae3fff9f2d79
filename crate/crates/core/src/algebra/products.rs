use super::blade::{blade_product, BasisBlade, SignedBlade};
use super::coeff::Coeff;
use super::multivector::Multivector;
use crate::error::Result;

/// Bilinear extension of a blade-level product. `keep` sees the input grades
/// and the result blade and decides whether the term survives.
fn bilinear<C: Coeff>(
    a: &Multivector<C>,
    b: &Multivector<C>,
    keep: impl Fn(usize, usize, BasisBlade) -> bool,
) -> Result<Multivector<C>> {
    a.check_same(b)?;
    let sig = a.signature();
    let mut out = Multivector::zero(sig);
    for (ba, ca) in a.terms() {
        for (bb, cb) in b.terms() {
            let r = blade_product(SignedBlade::positive(ba), SignedBlade::positive(bb), sig);
            if !keep(ba.grade(), bb.grade(), r.blade) {
                continue;
            }
            let mut c = ca.clone() * cb.clone();
            if r.sign < 0 {
                c = -c;
            }
            out.add_term(r.blade, c);
        }
    }
    Ok(out)
}

/// Geometric product `AB`.
pub fn geometric_product<C: Coeff>(a: &Multivector<C>, b: &Multivector<C>) -> Result<Multivector<C>> {
    bilinear(a, b, |_, _, _| true)
}

/// Dot product: for blades of grades `i, j` the grade-`|i-j|` part of `AB`,
/// scalar case included; extended bilinearly grade by grade.
pub fn dot<C: Coeff>(a: &Multivector<C>, b: &Multivector<C>) -> Result<Multivector<C>> {
    bilinear(a, b, |i, j, r| r.grade() == i.abs_diff(j))
}

/// Wedge product: for blades of grades `i, j` the grade-`(i+j)` part of `AB`.
pub fn wedge<C: Coeff>(a: &Multivector<C>, b: &Multivector<C>) -> Result<Multivector<C>> {
    bilinear(a, b, |i, j, r| r.grade() == i + j)
}

/// `[A, B] = AB - BA`.
pub fn commutator<C: Coeff>(a: &Multivector<C>, b: &Multivector<C>) -> Result<Multivector<C>> {
    geometric_product(a, b)?.checked_sub(&geometric_product(b, a)?)
}

/// `{A, B} = AB + BA`.
pub fn anticommutator<C: Coeff>(a: &Multivector<C>, b: &Multivector<C>) -> Result<Multivector<C>> {
    geometric_product(a, b)?.checked_add(&geometric_product(b, a)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::coeff::{int, Rational};
    use crate::algebra::Signature;
    use crate::error::Error;

    type Mv = Multivector<Rational>;

    fn cl(n: usize) -> Signature {
        Signature::euclidean(n).unwrap()
    }

    fn e(sig: Signature, idx: &[usize]) -> Mv {
        Mv::basis(sig, BasisBlade::from_indices(idx).unwrap())
    }

    #[test]
    fn difference_of_squares() {
        let sig = cl(2);
        let one = Mv::one(sig);
        let e1 = e(sig, &[1]);
        let r = geometric_product(&(&one + &e1), &(&one - &e1)).unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn pseudoscalar_squares() {
        let sig = cl(2);
        let i = Mv::pseudoscalar(sig);
        assert_eq!(&i * &i, Mv::scalar(sig, int(-1)));
    }

    #[test]
    fn disjoint_bivectors_make_pseudoscalar() {
        let sig = cl(4);
        assert_eq!(&e(sig, &[1, 2]) * &e(sig, &[3, 4]), Mv::pseudoscalar(sig));
    }

    #[test]
    fn wedge_is_exterior() {
        let sig = cl(3);
        assert_eq!(wedge(&e(sig, &[1]), &e(sig, &[2])).unwrap(), e(sig, &[1, 2]));
        assert!(wedge(&e(sig, &[1]), &e(sig, &[1])).unwrap().is_zero());
        assert_eq!(wedge(&e(sig, &[2]), &e(sig, &[1])).unwrap(), -e(sig, &[1, 2]));
        // grade i + j > n vanishes
        assert!(wedge(&e(sig, &[1, 2]), &e(sig, &[2, 3])).unwrap().is_zero());
    }

    #[test]
    fn dot_contracts() {
        let sig = cl(3);
        assert_eq!(dot(&e(sig, &[1, 2]), &e(sig, &[2])).unwrap(), e(sig, &[1]));
        assert_eq!(dot(&e(sig, &[1]), &e(sig, &[1])).unwrap(), Mv::one(sig));
        // scalar dot keeps the full blade (grade |0 - j| = j)
        let two = Mv::scalar(sig, int(2));
        assert_eq!(dot(&two, &e(sig, &[2, 3])).unwrap(), e(sig, &[2, 3]).scale(&int(2)));
        assert!(dot(&e(sig, &[1]), &e(sig, &[2, 3])).unwrap().is_zero());
    }

    #[test]
    fn commutators_of_vectors() {
        let sig = cl(4);
        let (g1, g2) = (e(sig, &[1]), e(sig, &[2]));
        assert_eq!(commutator(&g1, &g2).unwrap(), e(sig, &[1, 2]).scale(&int(2)));
        assert!(commutator(&g1, &g1).unwrap().is_zero());
        assert!(anticommutator(&g1, &g2).unwrap().is_zero());
    }

    #[test]
    fn mixed_signature_is_rejected() {
        let a = e(cl(3), &[1]);
        let b = e(Signature::new(3, 1).unwrap(), &[1]);
        assert!(matches!(geometric_product(&a, &b), Err(Error::SignatureMismatch { .. })));
        assert!(matches!(dot(&a, &b), Err(Error::SignatureMismatch { .. })));
        assert!(matches!(wedge(&a, &b), Err(Error::SignatureMismatch { .. })));
    }
}
