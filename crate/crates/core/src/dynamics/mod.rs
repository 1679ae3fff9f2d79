//! Hamiltonian mechanics on one phase pair `X = x e_K`, `P = p ⋆e_K`.
//!
//! With `s` the pair's bracket sign (`-1` commuting, `+1` anticommuting):
//!
//! ```text
//! ẋ = -s ∂H/∂p      ṗ = -∂H/∂x      {F, G} = (F_x G_p + s F_p G_x) I
//! ```
//!
//! so a commuting pair follows the ordinary equations and a bracket that is
//! antisymmetric, while an anticommuting pair gets a symmetric bracket.

mod integrate;
mod polynomial;

use std::path::Path;

use serde::Serialize;

use crate::algebra::{hodge_dual, reversion, BasisBlade, FloatMultivector, Multivector, Signature};
use crate::error::{Error, Result};
use crate::phase_space::{classify_blade, CommClass};

pub use integrate::{integrate, integrate_sweep, IntegratorConfig, Sample, Scheme, Trajectory, TrajectoryMeta};
pub use polynomial::{bracket_poly, Polynomial};

/// Which `(X_k, P_k)` pair a Hamiltonian lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PairRef {
    pub sig: Signature,
    pub blade: BasisBlade,
    pub class: Option<CommClass>,
}

impl PairRef {
    /// Classified pair on `e_K`. Grades `0` and `n` are rejected: their
    /// positions are scalars or pseudoscalars rather than proper blades.
    pub fn new(sig: Signature, blade: BasisBlade) -> Result<Self> {
        let k = blade.grade();
        if !blade.fits(sig) || k == 0 || k >= sig.dim() {
            return Err(Error::GradeOutOfRange { grade: k, n: sig.dim() });
        }
        let class = classify_blade(sig, blade)?.class;
        Ok(PairRef { sig, blade, class: Some(class) })
    }

    /// Pair on `e_1 … e_k`.
    pub fn for_grade(sig: Signature, k: usize) -> Result<Self> {
        if k == 0 || k >= sig.dim() {
            return Err(Error::GradeOutOfRange { grade: k, n: sig.dim() });
        }
        Self::new(sig, BasisBlade::from_mask((1u32 << k) - 1))
    }

    pub fn unclassified(sig: Signature, blade: BasisBlade) -> Self {
        PairRef { sig, blade, class: None }
    }

    pub fn grade(&self) -> usize {
        self.blade.grade()
    }

    pub fn class(&self) -> Result<CommClass> {
        self.class.ok_or(Error::UnclassifiedPair)
    }

    /// `s` as a float.
    pub fn bracket_sign(&self) -> Result<f64> {
        Ok(f64::from(self.class()?.bracket_sign()))
    }

    pub fn position_blade(&self) -> FloatMultivector {
        Multivector::basis(self.sig, self.blade)
    }

    pub fn momentum_blade(&self) -> FloatMultivector {
        hodge_dual(&self.position_blade())
    }
}

/// `H(x, p)` attached to a pair.
#[derive(Debug, Clone, PartialEq)]
pub struct HamiltonianSpec {
    pub poly: Polynomial<f64>,
    pub pair: PairRef,
}

impl HamiltonianSpec {
    pub fn new(poly: Polynomial<f64>, pair: PairRef) -> Self {
        HamiltonianSpec { poly, pair }
    }

    /// `(x² + p²)/2`.
    pub fn oscillator(pair: PairRef) -> Self {
        Self::new(Polynomial::from_terms([(0.5, 2, 0), (0.5, 0, 2)]), pair)
    }

    /// Parses `<coeff> <xPower> <pPower>` lines; `#` starts a comment.
    pub fn parse(text: &str, pair: PairRef) -> Result<Self> {
        let mut terms = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = |what: &str| Error::Parse(format!("line {}: {what}: `{}`", lineno + 1, raw.trim()));
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 3 {
                return Err(bad("expected `<coeff> <xPower> <pPower>`"));
            }
            let c: f64 = fields[0].parse().map_err(|_| bad("invalid coefficient"))?;
            if !c.is_finite() {
                return Err(bad("coefficient is not finite"));
            }
            let a: u32 = fields[1].parse().map_err(|_| bad("invalid x power"))?;
            let b: u32 = fields[2].parse().map_err(|_| bad("invalid p power"))?;
            terms.push((c, a, b));
        }
        Ok(Self::new(Polynomial::from_terms(terms), pair))
    }

    pub fn from_file(path: &Path, pair: PairRef) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?, pair)
    }

    pub fn energy(&self, state: &PhaseState) -> f64 {
        self.poly.eval(&state.x, &state.p)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PhaseState {
    pub x: f64,
    pub p: f64,
    pub t: f64,
}

impl PhaseState {
    pub fn new(x: f64, p: f64) -> Self {
        PhaseState { x, p, t: 0.0 }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.p.is_finite() && self.t.is_finite()
    }

    /// `X = x e_K` and `P = p ⋆e_K`.
    pub fn multivectors(&self, pair: &PairRef) -> (FloatMultivector, FloatMultivector) {
        (pair.position_blade().scale(&self.x), pair.momentum_blade().scale(&self.p))
    }
}

/// `e_K† ∂H/∂x`.
pub fn mv_derivative_x(h: &HamiltonianSpec, state: &PhaseState) -> FloatMultivector {
    reversion(&h.pair.position_blade()).scale(&h.poly.deriv_x().eval(&state.x, &state.p))
}

/// `(⋆e_K)† ∂H/∂p`.
pub fn mv_derivative_p(h: &HamiltonianSpec, state: &PhaseState) -> FloatMultivector {
    reversion(&h.pair.momentum_blade()).scale(&h.poly.deriv_p().eval(&state.x, &state.p))
}

/// `(ẋ, ṗ)`.
pub fn hamilton_rhs(h: &HamiltonianSpec, state: &PhaseState) -> Result<(f64, f64)> {
    let s = h.pair.bracket_sign()?;
    Ok(rhs_with_sign(&h.poly, s, state.x, state.p))
}

pub(crate) fn rhs_with_sign(poly: &Polynomial<f64>, s: f64, x: f64, p: f64) -> (f64, f64) {
    let hx = poly.deriv_x().eval(&x, &p);
    let hp = poly.deriv_p().eval(&x, &p);
    (-s * hp, -hx)
}

fn same_pair(f: &HamiltonianSpec, g: &HamiltonianSpec) -> Result<PairRef> {
    if f.pair.sig != g.pair.sig || f.pair.blade != g.pair.blade {
        return Err(Error::PairMismatch);
    }
    let pair = if f.pair.class.is_some() { f.pair } else { g.pair };
    pair.class()?;
    Ok(pair)
}

/// `{F, G}` at `state`, as a multiple of the pseudoscalar.
pub fn poisson_bracket(f: &HamiltonianSpec, g: &HamiltonianSpec, state: &PhaseState) -> Result<FloatMultivector> {
    let pair = same_pair(f, g)?;
    let s = pair.class()?.bracket_sign();
    let value = bracket_poly(&f.poly, &g.poly, s).eval(&state.x, &state.p);
    Ok(Multivector::pseudoscalar(pair.sig).scale(&value))
}

#[derive(Debug, Clone, PartialEq)]
pub struct FlowCheck {
    pub bracket: FloatMultivector,
    /// `(F_x ẋ + F_p ṗ) I` using [`hamilton_rhs`].
    pub flow: FloatMultivector,
    /// Set for commuting pairs only; anticommuting pairs are reported as-is.
    pub consistent: Option<bool>,
}

/// `{F, H}` together with the time derivative of `F` along the flow of `H`.
pub fn bracket_with_h(f: &HamiltonianSpec, h: &HamiltonianSpec, state: &PhaseState) -> Result<FlowCheck> {
    let pair = same_pair(f, h)?;
    let bracket = poisson_bracket(f, h, state)?;
    let (xdot, pdot) = rhs_with_sign(&h.poly, f64::from(pair.class()?.bracket_sign()), state.x, state.p);
    let fx = f.poly.deriv_x().eval(&state.x, &state.p);
    let fp = f.poly.deriv_p().eval(&state.x, &state.p);
    let flow = Multivector::pseudoscalar(pair.sig).scale(&(fx * xdot + fp * pdot));
    let consistent = match pair.class()? {
        CommClass::Commuting => {
            let (a, b) = (bracket.coeff(BasisBlade::pseudoscalar(pair.sig)), flow.coeff(BasisBlade::pseudoscalar(pair.sig)));
            Some((a - b).abs() <= 1e-12 * (1.0 + a.abs().max(b.abs())))
        }
        CommClass::Anticommuting => None,
    };
    Ok(FlowCheck { bracket, flow, consistent })
}
