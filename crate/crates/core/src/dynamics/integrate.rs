use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::{rhs_with_sign, HamiltonianSpec, PhaseState, Polynomial};
use crate::error::{Error, Result};
use crate::phase_space::CommClass;

const MAX_FIXED_POINT_ITERS: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Scheme {
    /// Störmer–Verlet: half kick, drift, half kick.
    Leapfrog,
    SymplecticEuler,
    /// Classical fourth-order Runge–Kutta (not symplectic).
    Rk4,
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Scheme::Leapfrog => "leapfrog",
            Scheme::SymplecticEuler => "symplectic-euler",
            Scheme::Rk4 => "rk4",
        })
    }
}

impl FromStr for Scheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "leapfrog" | "verlet" => Ok(Scheme::Leapfrog),
            "symplectic-euler" | "euler" => Ok(Scheme::SymplecticEuler),
            "rk4" => Ok(Scheme::Rk4),
            _ => Err(Error::Parse(format!("unknown scheme `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct IntegratorConfig {
    pub dt: f64,
    pub steps: usize,
    pub scheme: Scheme,
    /// Record every `stride`-th step; must divide `steps`.
    pub stride: usize,
}

impl IntegratorConfig {
    pub fn new(dt: f64, steps: usize, scheme: Scheme) -> Self {
        IntegratorConfig { dt, steps, scheme, stride: 1 }
    }

    pub fn with_stride(self, stride: usize) -> Self {
        IntegratorConfig { stride, ..self }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.dt > 0.0 && self.dt.is_finite()) {
            return Err(Error::InvalidArgument(format!("dt must be positive, got {}", self.dt)));
        }
        if self.steps == 0 {
            return Err(Error::InvalidArgument("steps must be at least 1".into()));
        }
        if self.stride == 0 || !self.steps.is_multiple_of(self.stride) {
            return Err(Error::InvalidArgument(format!(
                "stride {} must be positive and divide steps {}",
                self.stride, self.steps
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Sample {
    pub t: f64,
    pub x: f64,
    pub p: f64,
    #[serde(rename = "H")]
    pub h: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrajectoryMeta {
    pub dt: f64,
    pub steps: usize,
    pub stride: usize,
    pub scheme: Scheme,
    pub comm_class: CommClass,
    pub bracket_sign: i8,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Trajectory {
    pub meta: TrajectoryMeta,
    pub samples: Vec<Sample>,
}

impl Trajectory {
    pub fn last(&self) -> &Sample {
        self.samples.last().expect("trajectory holds at least the initial sample")
    }

    /// `max |H(t) - H(0)|` over the samples.
    pub fn max_energy_error(&self) -> f64 {
        let h0 = self.samples[0].h;
        self.samples.iter().map(|s| (s.h - h0).abs()).fold(0.0, f64::max)
    }

    /// `|H(t_end) - H(0)|`.
    pub fn final_energy_error(&self) -> f64 {
        (self.last().h - self.samples[0].h).abs()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("t,x,p,H\n");
        for s in &self.samples {
            out.push_str(&format!("{},{},{},{}\n", s.t, s.x, s.p, s.h));
        }
        out
    }
}

struct Stepper<'a> {
    poly: &'a Polynomial<f64>,
    hx: Polynomial<f64>,
    hp: Polynomial<f64>,
    s: f64,
}

impl Stepper<'_> {
    /// `ẋ = -s H_p`.
    fn xdot(&self, x: f64, p: f64) -> f64 {
        -self.s * self.hp.eval(&x, &p)
    }

    /// `ṗ = -H_x`.
    fn pdot(&self, x: f64, p: f64) -> f64 {
        -self.hx.eval(&x, &p)
    }

    fn step(&self, scheme: Scheme, dt: f64, x: f64, p: f64, step: usize) -> Result<(f64, f64)> {
        match scheme {
            Scheme::Leapfrog => {
                let half = 0.5 * dt;
                let p_half = solve(p, step, |ph| p + half * self.pdot(x, ph))?;
                let v0 = self.xdot(x, p_half);
                let x1 = solve(x + dt * v0, step, |xn| x + half * (v0 + self.xdot(xn, p_half)))?;
                Ok((x1, p_half + half * self.pdot(x1, p_half)))
            }
            Scheme::SymplecticEuler => {
                let p1 = solve(p, step, |pn| p + dt * self.pdot(x, pn))?;
                Ok((x + dt * self.xdot(x, p1), p1))
            }
            Scheme::Rk4 => {
                let f = |x: f64, p: f64| rhs_with_sign(self.poly, self.s, x, p);
                let k1 = f(x, p);
                let k2 = f(x + 0.5 * dt * k1.0, p + 0.5 * dt * k1.1);
                let k3 = f(x + 0.5 * dt * k2.0, p + 0.5 * dt * k2.1);
                let k4 = f(x + dt * k3.0, p + dt * k3.1);
                Ok((
                    x + dt / 6.0 * (k1.0 + 2.0 * k2.0 + 2.0 * k3.0 + k4.0),
                    p + dt / 6.0 * (k1.1 + 2.0 * k2.1 + 2.0 * k3.1 + k4.1),
                ))
            }
        }
    }
}

/// Fixed-point iteration for the implicit stages. Separable Hamiltonians
/// converge on the first pass.
fn solve(start: f64, step: usize, map: impl Fn(f64) -> f64) -> Result<f64> {
    let mut v = start;
    for _ in 0..MAX_FIXED_POINT_ITERS {
        let next = map(v);
        if !next.is_finite() {
            return Ok(next);
        }
        if (next - v).abs() <= 1e-15 * (1.0 + next.abs()) {
            return Ok(next);
        }
        v = next;
    }
    Err(Error::NoConvergence { step })
}

/// Advances `initial` for `config.steps` steps of size `config.dt`.
pub fn integrate(h: &HamiltonianSpec, initial: PhaseState, config: IntegratorConfig) -> Result<Trajectory> {
    config.validate()?;
    if !initial.is_finite() {
        return Err(Error::InvalidArgument("initial state is not finite".into()));
    }
    let class = h.pair.class()?;
    let stepper = Stepper {
        poly: &h.poly,
        hx: h.poly.deriv_x(),
        hp: h.poly.deriv_p(),
        s: f64::from(class.bracket_sign()),
    };
    let meta = TrajectoryMeta {
        dt: config.dt,
        steps: config.steps,
        stride: config.stride,
        scheme: config.scheme,
        comm_class: class,
        bracket_sign: class.bracket_sign(),
    };
    let sample = |t: f64, x: f64, p: f64| Sample { t, x, p, h: h.poly.eval(&x, &p) };

    let mut samples = Vec::with_capacity(config.steps / config.stride + 1);
    samples.push(sample(initial.t, initial.x, initial.p));
    let (mut x, mut p) = (initial.x, initial.p);
    for step in 1..=config.steps {
        (x, p) = stepper.step(config.scheme, config.dt, x, p, step)?;
        let t = initial.t + step as f64 * config.dt;
        let current = sample(t, x, p);
        if !(x.is_finite() && p.is_finite() && current.h.is_finite()) {
            return Err(Error::NonFiniteState { step, partial: Box::new(Trajectory { meta, samples }) });
        }
        if step % config.stride == 0 {
            samples.push(current);
        }
    }
    Ok(Trajectory { meta, samples })
}

/// Runs independent trajectories on scoped threads; results keep input order.
pub fn integrate_sweep(runs: &[(HamiltonianSpec, PhaseState, IntegratorConfig)]) -> Vec<Result<Trajectory>> {
    std::thread::scope(|scope| {
        let handles: Vec<_> = runs
            .iter()
            .map(|(h, state, config)| scope.spawn(move || integrate(h, *state, *config)))
            .collect();
        handles.into_iter().map(|handle| handle.join().expect("integrator thread panicked")).collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Signature;
    use crate::dynamics::PairRef;

    fn oscillator() -> HamiltonianSpec {
        HamiltonianSpec::oscillator(PairRef::for_grade(Signature::euclidean(3).unwrap(), 1).unwrap())
    }

    #[test]
    fn rejects_bad_config() {
        let h = oscillator();
        let s0 = PhaseState::new(1.0, 0.0);
        for config in [
            IntegratorConfig::new(1e-3, 0, Scheme::Leapfrog),
            IntegratorConfig::new(0.0, 10, Scheme::Leapfrog),
            IntegratorConfig::new(1e-3, 10, Scheme::Leapfrog).with_stride(3),
        ] {
            assert!(matches!(integrate(&h, s0, config), Err(Error::InvalidArgument(_))));
        }
    }

    #[test]
    fn sample_layout() {
        let traj = integrate(
            &oscillator(),
            PhaseState::new(1.0, 0.0),
            IntegratorConfig::new(0.01, 100, Scheme::Leapfrog).with_stride(10),
        )
        .unwrap();
        assert_eq!(traj.samples.len(), 11);
        assert!(traj.samples.windows(2).all(|w| w[1].t > w[0].t));
        assert!(traj.to_csv().starts_with("t,x,p,H\n0,1,0,0.5\n"));
    }

    #[test]
    fn schemes_track_cosine() {
        for scheme in [Scheme::Leapfrog, Scheme::SymplecticEuler, Scheme::Rk4] {
            let traj =
                integrate(&oscillator(), PhaseState::new(1.0, 0.0), IntegratorConfig::new(1e-3, 1000, scheme)).unwrap();
            let last = traj.last();
            assert!((last.x - last.t.cos()).abs() < 1e-3, "{scheme}");
        }
    }

    #[test]
    fn blow_up_returns_partial() {
        let pair = PairRef::for_grade(Signature::euclidean(3).unwrap(), 1).unwrap();
        // ṗ = -H_x = 4 x^3 ... with H = -x^4 the particle escapes in finite time.
        let h = HamiltonianSpec::new(Polynomial::from_terms([(-1.0, 4, 0), (0.5, 0, 2)]), pair);
        match integrate(&h, PhaseState::new(2.0, 0.0), IntegratorConfig::new(0.05, 10_000, Scheme::Rk4)) {
            Err(Error::NonFiniteState { step, partial }) => {
                assert!(step > 1);
                assert!(!partial.samples.is_empty());
            }
            other => panic!("expected blow-up, got {other:?}"),
        }
    }

    #[test]
    fn sweep_matches_serial() {
        let h = oscillator();
        let runs: Vec<_> = [0.5, 1.0, 2.0]
            .iter()
            .map(|&x0| (h.clone(), PhaseState::new(x0, 0.0), IntegratorConfig::new(1e-2, 50, Scheme::Leapfrog)))
            .collect();
        let parallel = integrate_sweep(&runs);
        for ((h, s, c), got) in runs.iter().zip(parallel) {
            assert_eq!(got.unwrap(), integrate(h, *s, *c).unwrap());
        }
    }
}
