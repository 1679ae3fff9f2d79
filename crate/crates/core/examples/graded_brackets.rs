//! Poisson brackets on a commuting pair (Cl(3), vectors) and an
//! anticommuting pair (Cl(4), vectors).

use hodge_phase::algebra::{int, Rational, Signature};
use hodge_phase::dynamics::{
    bracket_poly, bracket_with_h, hamilton_rhs, integrate, HamiltonianSpec, IntegratorConfig, PairRef, PhaseState,
    Polynomial, Scheme,
};

fn main() -> hodge_phase::Result<()> {
    for (n, k) in [(3, 1), (4, 1)] {
        let pair = PairRef::for_grade(Signature::euclidean(n)?, k)?;
        let class = pair.class()?;
        let s = class.bracket_sign();
        println!("Cl({n}) grade {k}: {class}, s = {s}");

        let x = Polynomial::<Rational>::x();
        let p = Polynomial::<Rational>::p();
        let f = &(&x * &x) + &p.scale(&int(3));
        println!("  {{x,p}} = ({}) I", bracket_poly(&x, &p, s));
        println!("  {{p,x}} = ({}) I", bracket_poly(&p, &x, s));
        println!("  {{F,F}} with F = {f}: ({}) I", bracket_poly(&f, &f, s));

        let h = HamiltonianSpec::oscillator(pair);
        let state = PhaseState::new(0.6, 0.8);
        let (xdot, pdot) = hamilton_rhs(&h, &state)?;
        let self_bracket = bracket_with_h(&h, &h, &state)?;
        println!("  oscillator at (0.6, 0.8): xdot = {xdot}, pdot = {pdot}, {{H,H}} = {}", self_bracket.bracket);
        let traj = integrate(&h, state, IntegratorConfig::new(1e-3, 5000, Scheme::Leapfrog))?;
        let last = traj.last();
        println!("  after t = {}: x = {:.6}, p = {:.6}, H = {:.6}\n", last.t, last.x, last.p, last.h);
    }
    Ok(())
}
