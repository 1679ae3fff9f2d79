mod common;

use hodge_phase::algebra::{
    blade_product, geometric_product, hodge_relation_check, int, reversion, BasisBlade, Multivector, Rational,
    Signature, SignedBlade,
};
use hodge_phase::dynamics::{
    bracket_poly, bracket_with_h, integrate, mv_derivative_p, mv_derivative_x, HamiltonianSpec, IntegratorConfig,
    PairRef, PhaseState, Polynomial, Scheme,
};
use hodge_phase::phase_space::CommClass;
use proptest::prelude::*;

use common::oracle_blade_product;

type Mv = Multivector<Rational>;

fn signature() -> impl Strategy<Value = Signature> {
    (1usize..=5).prop_flat_map(|n| (0..=n).prop_map(move |q| Signature::new(n - q, q).unwrap()))
}

fn multivector(sig: Signature) -> impl Strategy<Value = Mv> {
    let count = sig.blade_count() as u32;
    prop::collection::vec((0..count, -6i64..=6), 0..8).prop_map(move |terms| {
        Multivector::from_terms(sig, terms.into_iter().map(|(m, c)| (BasisBlade::from_mask(m), int(c))))
    })
}

fn homogeneous(sig: Signature, k: usize) -> impl Strategy<Value = Mv> {
    let blades = BasisBlade::of_grade(sig, k);
    prop::collection::vec((0..blades.len(), -6i64..=6), 1..6).prop_map(move |terms| {
        Multivector::from_terms(sig, terms.into_iter().map(|(i, c)| (blades[i], int(c))))
    })
}

fn triple() -> impl Strategy<Value = (Mv, Mv, Mv)> {
    signature().prop_flat_map(|sig| (multivector(sig), multivector(sig), multivector(sig)))
}

fn poly_rational(max_degree: u32) -> impl Strategy<Value = Polynomial<Rational>> {
    prop::collection::vec((-5i64..=5, 0..=max_degree, 0..=max_degree), 0..6).prop_map(move |terms| {
        Polynomial::from_terms(
            terms.into_iter().filter(|&(_, a, b)| a + b <= max_degree).map(|(c, a, b)| (int(c), a, b)),
        )
    })
}

fn poly_float(max_degree: u32) -> impl Strategy<Value = Polynomial<f64>> {
    prop::collection::vec((-2.0f64..2.0, 0..=max_degree, 0..=max_degree), 1..6).prop_map(move |terms| {
        Polynomial::from_terms(terms.into_iter().filter(|&(_, a, b)| a + b <= max_degree))
    })
}

fn cl3_pair() -> PairRef {
    PairRef::for_grade(Signature::euclidean(3).unwrap(), 1).unwrap()
}

/// Fourth-order central difference; exact up to rounding for degree <= 4.
fn central(f: impl Fn(f64) -> f64, at: f64) -> f64 {
    let h = 1e-3;
    (f(at - 2.0 * h) - 8.0 * f(at - h) + 8.0 * f(at + h) - f(at + 2.0 * h)) / (12.0 * h)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn geometric_product_is_associative((a, b, c) in triple()) {
        let left = geometric_product(&geometric_product(&a, &b).unwrap(), &c).unwrap();
        let right = geometric_product(&a, &geometric_product(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn product_distributes((a, b, c) in triple()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn reversion_is_anti_automorphism((a, b, _) in triple()) {
        prop_assert_eq!(reversion(&(&a * &b)), &reversion(&b) * &reversion(&a));
        prop_assert_eq!(reversion(&reversion(&a)), a);
    }

    #[test]
    fn blade_product_matches_oracle(n in 1usize..=12, q_frac in 0usize..=12, a in any::<u32>(), b in any::<u32>()) {
        let q = q_frac % (n + 1);
        let sig = Signature::new(n - q, q).unwrap();
        let mask = (1u32 << n) - 1;
        let (a, b) = (BasisBlade::from_mask(a & mask), BasisBlade::from_mask(b & mask));
        let got = blade_product(SignedBlade::positive(a), SignedBlade::positive(b), sig);
        let (s, blade) = oracle_blade_product(sig, a, b);
        prop_assert_eq!((i64::from(got.sign), got.blade), (s, blade));
    }

    #[test]
    fn hodge_relation_is_bilinear(
        (a, b) in (1usize..=5).prop_flat_map(|n| (0..=n).prop_flat_map(move |k| {
            let sig = Signature::euclidean(n).unwrap();
            (homogeneous(sig, k), homogeneous(sig, k))
        }))
    ) {
        prop_assert!(hodge_relation_check(&a, &b).unwrap().equal);
    }

    #[test]
    fn text_round_trip(a in signature().prop_flat_map(multivector)) {
        let parsed = Mv::parse(a.signature(), &a.to_string()).unwrap();
        prop_assert_eq!(parsed, a);
    }

    #[test]
    fn bracket_symmetry_follows_class(f in poly_rational(3), g in poly_rational(3), anti in any::<bool>()) {
        let class = if anti { CommClass::Anticommuting } else { CommClass::Commuting };
        let s = class.bracket_sign();
        let fg = bracket_poly(&f, &g, s);
        let gf = bracket_poly(&g, &f, s);
        prop_assert_eq!(gf, fg.scale(&int(i64::from(s))));
    }

    #[test]
    fn bracket_leibniz(f in poly_rational(3), g in poly_rational(3), h in poly_rational(3), anti in any::<bool>()) {
        let s = if anti { 1 } else { -1 };
        let lhs = bracket_poly(&(&f * &g), &h, s);
        let rhs = &(&f * &bracket_poly(&g, &h, s)) + &(&bracket_poly(&f, &h, s) * &g);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn bracket_is_bilinear(f in poly_rational(3), g in poly_rational(3), h in poly_rational(3), c in -4i64..=4) {
        let lhs = bracket_poly(&(&f + &g.scale(&int(c))), &h, -1);
        let rhs = &bracket_poly(&f, &h, -1) + &bracket_poly(&g, &h, -1).scale(&int(c));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn derivatives_match_finite_differences(poly in poly_float(4), x in -1.5f64..1.5, p in -1.5f64..1.5) {
        let pair = cl3_pair();
        let h = HamiltonianSpec::new(poly.clone(), pair);
        let state = PhaseState::new(x, p);
        // e_1 is its own reverse, so the coefficient on e_1 is H_x.
        let hx = mv_derivative_x(&h, &state).coeff(pair.blade);
        // (⋆e_1)† = -e23 in Cl(3).
        let e23 = BasisBlade::from_indices(&[2, 3]).unwrap();
        let hp = -mv_derivative_p(&h, &state).coeff(e23);
        let fd_x = central(|v| poly.eval(&v, &p), x);
        let fd_p = central(|v| poly.eval(&x, &v), p);
        prop_assert!((hx - fd_x).abs() <= 1e-8 * hx.abs().max(1.0), "H_x {} vs {}", hx, fd_x);
        prop_assert!((hp - fd_p).abs() <= 1e-8 * hp.abs().max(1.0), "H_p {} vs {}", hp, fd_p);
    }

    #[test]
    fn leapfrog_step_preserves_area(t in poly_float(4), v in poly_float(4), x in -1.0f64..1.0, p in -1.0f64..1.0) {
        // Separable H = T(p) + V(x).
        let kinetic = Polynomial::from_terms(t.terms().map(|(c, _, b)| (*c, 0, b)));
        let potential = Polynomial::from_terms(v.terms().map(|(c, a, _)| (*c, a, 0)));
        let h = HamiltonianSpec::new(&kinetic + &potential, cl3_pair());
        let step = |x: f64, p: f64| {
            let traj = integrate(&h, PhaseState::new(x, p), IntegratorConfig::new(1e-2, 1, Scheme::Leapfrog)).unwrap();
            (traj.last().x, traj.last().p)
        };
        let d = 1e-6;
        let (xa, pa) = step(x + d, p);
        let (xb, pb) = step(x - d, p);
        let (xc, pc) = step(x, p + d);
        let (xd, pd) = step(x, p - d);
        let det = ((xa - xb) * (pc - pd) - (xc - xd) * (pa - pb)) / (4.0 * d * d);
        prop_assert!((det - 1.0).abs() < 1e-6, "det {}", det);
    }
}

#[test]
fn flow_derivative_matches_bracket() {
    let pair = cl3_pair();
    let h = HamiltonianSpec::oscillator(pair);
    let f = HamiltonianSpec::new(Polynomial::from_terms([(1.0, 2, 1), (-0.5, 0, 3), (2.0, 1, 0)]), pair);
    let dt = 1e-4;
    let traj = integrate(&h, PhaseState::new(0.6, -0.3), IntegratorConfig::new(dt, 1000, Scheme::Leapfrog)).unwrap();
    let i = BasisBlade::pseudoscalar(pair.sig);
    for w in traj.samples.windows(3).step_by(97) {
        let (a, mid, b) = (&w[0], &w[1], &w[2]);
        let df = (f.poly.eval(&b.x, &b.p) - f.poly.eval(&a.x, &a.p)) / (2.0 * dt);
        let check = bracket_with_h(&f, &h, &PhaseState { x: mid.x, p: mid.p, t: mid.t }).unwrap();
        assert_eq!(check.consistent, Some(true));
        let bracket = check.bracket.coeff(i);
        assert!((df - bracket).abs() < 1e-6, "dF/dt {df} vs bracket {bracket}");
    }
}

#[test]
fn anticommuting_self_bracket_is_recorded() {
    let pair = PairRef::for_grade(Signature::euclidean(4).unwrap(), 1).unwrap();
    let h = HamiltonianSpec::oscillator(pair);
    let check = bracket_with_h(&h, &h, &PhaseState::new(0.6, 0.8)).unwrap();
    // 2 H_x H_p = 2 · 0.6 · 0.8
    let value = check.bracket.coeff(BasisBlade::pseudoscalar(pair.sig));
    assert!((value - 0.96).abs() < 1e-15);
    assert_eq!(check.consistent, None);
}
