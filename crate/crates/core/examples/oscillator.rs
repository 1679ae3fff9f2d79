//! Harmonic oscillator on the vector pair of Cl(3): symplectic schemes keep
//! the energy bounded, RK4 drifts.

use hodge_phase::algebra::Signature;
use hodge_phase::dynamics::{integrate, HamiltonianSpec, IntegratorConfig, PairRef, PhaseState, Scheme};

fn main() -> hodge_phase::Result<()> {
    let pair = PairRef::for_grade(Signature::euclidean(3)?, 1)?;
    let h = HamiltonianSpec::oscillator(pair);
    let start = PhaseState::new(1.0, 0.0);

    // Coarse step over a long run: the symplectic schemes oscillate around
    // the true energy, RK4 loses it steadily.
    let dt = 0.25;
    println!("max |H - H(0)| up to t, dt = {dt}");
    println!("{:<17} {:>11} {:>11} {:>11}", "scheme", "t = 100", "t = 1000", "t = 10000");
    for scheme in [Scheme::Leapfrog, Scheme::SymplecticEuler, Scheme::Rk4] {
        let traj = integrate(&h, start, IntegratorConfig::new(dt, 40_000, scheme).with_stride(400))?;
        let h0 = traj.samples[0].h;
        let at = |t: f64| {
            traj.samples.iter().take_while(|s| s.t <= t + 1e-9).map(|s| (s.h - h0).abs()).fold(0.0, f64::max)
        };
        println!("{:<17} {:>11.3e} {:>11.3e} {:>11.3e}", scheme.to_string(), at(100.0), at(1000.0), at(10_000.0));
    }

    let traj = integrate(&h, start, IntegratorConfig::new(1e-3, 10_000, Scheme::Leapfrog))?;
    let x_err = traj.samples.iter().map(|s| (s.x - s.t.cos()).abs()).fold(0.0, f64::max);
    println!("\nleapfrog dt = 1e-3 to t = 10: max |x - cos t| = {x_err:.3e}, max |dH| = {:.3e}", traj.max_energy_error());

    let file = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data/quartic.txt");
    let quartic = HamiltonianSpec::from_file(file.as_ref(), pair)?;
    let traj = integrate(&quartic, start, IntegratorConfig::new(1e-2, 10_000, Scheme::Leapfrog))?;
    println!("quartic oscillator, leapfrog dt = 1e-2 to t = 100: max |dH| = {:.3e}", traj.max_energy_error());
    Ok(())
}
