//! Stabilised Poincaré–Heisenberg algebra inside `Cl(4)` and `Cl(3,1)`.
//!
//! Positions are the vectors `X_a = γ_a`, momenta their Hodge duals
//! `P_a = ⋆γ_a` (trivectors), Lorentz generators the bivectors `M_ab = γ_a γ_b`
//! and the central element is the pseudoscalar `I`. The index `a = 0` maps to
//! `e_4`, which is the timelike direction in `Cl(3,1)`; `a = 1, 2, 3` map to
//! `e_1, e_2, e_3`.
//!
//! [`verify_spha`] computes every commutator, checks closure, antisymmetry and
//! Jacobi, and fits one constant per bracket line against the structural
//! right-hand side:
//!
//! | line    | structure                                     | reference constant |
//! |---------|-----------------------------------------------|--------------------|
//! | `[M,M]` | `M_ad η_bc + M_bc η_ad - M_bd η_ac - M_ac η_bd` | `1`              |
//! | `[M,X]` | `X_a η_bc - X_b η_ac`                         | `1`                |
//! | `[M,P]` | `P_a η_bc - P_b η_ac`                         | `1`                |
//! | `[X,P]` | `η_ab I`                                      | `h`                |
//! | `[X,X]` | `M_ab`                                        | `-ℓ²`              |
//! | `[P,P]` | `M_ab`                                        | `-1/R²`            |
//! | `[X,I]` | `P_a`                                         | `ℓ²`               |
//! | `[P,I]` | `X_a`                                         | `-1/R²`            |
//! | `[M,I]` | `0`                                           | `0`                |

use std::collections::BTreeMap;
use std::fmt;
use std::fmt::Write as _;

use num_traits::{One, Signed};
use serde::{Serialize, Serializer};

use crate::algebra::{commutator, hodge_dual, BasisBlade, Coeff, Multivector, Rational, Signature};
use crate::error::{Error, Result};

type Mv = Multivector<Rational>;

/// One of the 15 SPHA generators. Indices run over `0..4`; `M(a, b)` has `a < b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    M(usize, usize),
    X(usize),
    P(usize),
    I,
}

impl Generator {
    /// All generators in table order: `X0..X3, P0..P3, M01..M23, I`.
    pub fn all() -> Vec<Generator> {
        let mut out: Vec<Generator> = (0..4).map(Generator::X).collect();
        out.extend((0..4).map(Generator::P));
        for a in 0..4 {
            for b in a + 1..4 {
                out.push(Generator::M(a, b));
            }
        }
        out.push(Generator::I);
        out
    }

    fn kind_rank(self) -> u8 {
        match self {
            Generator::M(..) => 0,
            Generator::X(_) => 1,
            Generator::P(_) => 2,
            Generator::I => 3,
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::X(a) => write!(f, "X{a}"),
            Generator::P(a) => write!(f, "P{a}"),
            Generator::M(a, b) => write!(f, "M{a}{b}"),
            Generator::I => f.write_str("I"),
        }
    }
}

impl Serialize for Generator {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn serialize_rational<S: Serializer>(value: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&value.render())
}

fn serialize_opt_rational<S: Serializer>(value: &Option<Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match value {
        Some(v) => s.serialize_str(&v.render()),
        None => s.serialize_none(),
    }
}

/// `γ_a` as a basis blade.
pub fn gamma(a: usize) -> BasisBlade {
    assert!(a < 4, "gamma index out of range");
    if a == 0 {
        BasisBlade::vector(4)
    } else {
        BasisBlade::vector(a)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SphaScaling {
    /// Pure blades; constants are fitted afterwards.
    Unscaled,
    /// `X_a = ℓ γ_a`, `P_a = ⋆γ_a / R`.
    Rescaled,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SphaScale {
    #[serde(serialize_with = "serialize_rational")]
    pub ell: Rational,
    #[serde(serialize_with = "serialize_rational")]
    pub r: Rational,
    #[serde(serialize_with = "serialize_rational")]
    pub h: Rational,
}

impl Default for SphaScale {
    fn default() -> Self {
        SphaScale { ell: Rational::one(), r: Rational::one(), h: Rational::one() }
    }
}

#[derive(Debug, Clone)]
pub struct SphaGenerators {
    pub sig: Signature,
    pub x: Vec<Mv>,
    pub p: Vec<Mv>,
    pub m: BTreeMap<(usize, usize), Mv>,
    pub i: Mv,
    pub scale: SphaScale,
    pub scaling: SphaScaling,
}

pub fn build_generators(sig: Signature, scale: SphaScale, scaling: SphaScaling) -> Result<SphaGenerators> {
    if sig.dim() != 4 || !(sig.q() == 0 || sig.q() == 1) {
        return Err(Error::UnsupportedSignature(sig));
    }
    if !scale.ell.is_positive() || !scale.r.is_positive() {
        return Err(Error::InvalidArgument("ell and R must be positive".into()));
    }
    let (x_factor, p_factor) = match scaling {
        SphaScaling::Unscaled => (Rational::one(), Rational::one()),
        SphaScaling::Rescaled => (scale.ell.clone(), Rational::one() / scale.r.clone()),
    };
    let x: Vec<Mv> = (0..4).map(|a| Mv::basis(sig, gamma(a)).scale(&x_factor)).collect();
    let p: Vec<Mv> = (0..4).map(|a| hodge_dual(&Mv::basis(sig, gamma(a))).scale(&p_factor)).collect();
    let mut m = BTreeMap::new();
    for a in 0..4 {
        for b in a + 1..4 {
            let ga = Mv::basis(sig, gamma(a));
            let gb = Mv::basis(sig, gamma(b));
            m.insert((a, b), &ga * &gb);
        }
    }
    Ok(SphaGenerators { sig, x, p, m, i: Mv::pseudoscalar(sig), scale, scaling })
}

impl SphaGenerators {
    pub fn get(&self, g: Generator) -> &Mv {
        match g {
            Generator::X(a) => &self.x[a],
            Generator::P(a) => &self.p[a],
            Generator::M(a, b) => &self.m[&(a, b)],
            Generator::I => &self.i,
        }
    }

    /// `η_ab = γ_a · γ_b`.
    pub fn eta(&self, a: usize, b: usize) -> i64 {
        if a != b {
            0
        } else {
            gamma(a).metric_product(self.sig) as i64
        }
    }

    /// `M_ab` for any index order: `M_ba = -M_ab`, `M_aa = 0`.
    fn m_any(&self, a: usize, b: usize) -> Mv {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => self.m[&(a, b)].clone(),
            std::cmp::Ordering::Greater => -&self.m[&(b, a)],
            std::cmp::Ordering::Equal => Mv::zero(self.sig),
        }
    }

    fn eta_r(&self, a: usize, b: usize) -> Rational {
        Rational::from_i64(self.eta(a, b))
    }

    /// Structural right-hand side for `[A, B]` with unit constant.
    pub fn pattern(&self, a: Generator, b: Generator) -> (PatternLine, Mv) {
        use Generator::*;
        if b.kind_rank() < a.kind_rank() || (a.kind_rank() == b.kind_rank() && b < a) {
            let (line, rhs) = self.pattern(b, a);
            return (line, -rhs);
        }
        let zero = Mv::zero(self.sig);
        match (a, b) {
            (M(a, b), M(c, d)) => {
                let rhs = &(&self.m_any(a, d).scale(&self.eta_r(b, c)) + &self.m_any(b, c).scale(&self.eta_r(a, d)))
                    - &(&self.m_any(b, d).scale(&self.eta_r(a, c)) + &self.m_any(a, c).scale(&self.eta_r(b, d)));
                (PatternLine::MM, rhs)
            }
            (M(a, b), X(c)) => {
                (PatternLine::MX, &self.x[a].scale(&self.eta_r(b, c)) - &self.x[b].scale(&self.eta_r(a, c)))
            }
            (M(a, b), P(c)) => {
                (PatternLine::MP, &self.p[a].scale(&self.eta_r(b, c)) - &self.p[b].scale(&self.eta_r(a, c)))
            }
            (M(..), I) => (PatternLine::MI, zero),
            (X(a), X(b)) => (PatternLine::XX, self.m_any(a, b)),
            (X(a), P(b)) => (PatternLine::XP, self.i.scale(&self.eta_r(a, b))),
            (X(a), I) => (PatternLine::XI, self.p[a].clone()),
            (P(a), P(b)) => (PatternLine::PP, self.m_any(a, b)),
            (P(a), I) => (PatternLine::PI, self.x[a].clone()),
            (I, I) => (PatternLine::II, zero),
            _ => unreachable!("pairs are ordered by kind"),
        }
    }

    /// Expresses `mv` in generator coordinates, or `None` if some term lies
    /// outside `span{1, X, P, M, I}`.
    pub fn in_generator_span(&self, mv: &Mv) -> Option<Vec<(String, Rational)>> {
        let mut out = Vec::new();
        for (blade, c) in mv.terms() {
            if blade == BasisBlade::SCALAR {
                out.push(("1".to_string(), c.clone()));
                continue;
            }
            let g = Generator::all().into_iter().find(|g| self.get(*g).as_single_term().map(|t| t.0) == Some(blade))?;
            let (_, unit) = self.get(g).as_single_term().expect("generators are single blades");
            out.push((g.to_string(), c.clone() / unit.clone()));
        }
        out.sort();
        Some(out)
    }

    fn span_text(&self, mv: &Mv) -> String {
        match self.in_generator_span(mv) {
            None => format!("<{mv}>"),
            Some(terms) if terms.is_empty() => "0".to_string(),
            Some(terms) => {
                let mut s = String::new();
                for (i, (label, c)) in terms.iter().enumerate() {
                    let neg = c.is_negative();
                    let mag = c.abs();
                    s.push_str(match (i, neg) {
                        (0, true) => "-",
                        (0, false) => "",
                        (_, true) => " - ",
                        (_, false) => " + ",
                    });
                    if mag.is_one() {
                        s.push_str(label);
                    } else {
                        let _ = write!(s, "{}*{label}", mag.render());
                    }
                }
                s
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PatternLine {
    MM,
    MX,
    MP,
    XP,
    XX,
    PP,
    XI,
    PI,
    MI,
    II,
}

impl PatternLine {
    pub const ALL: [PatternLine; 10] = [
        PatternLine::MM,
        PatternLine::MX,
        PatternLine::MP,
        PatternLine::XP,
        PatternLine::XX,
        PatternLine::PP,
        PatternLine::XI,
        PatternLine::PI,
        PatternLine::MI,
        PatternLine::II,
    ];

    pub fn label(self) -> &'static str {
        match self {
            PatternLine::MM => "[M,M]",
            PatternLine::MX => "[M,X]",
            PatternLine::MP => "[M,P]",
            PatternLine::XP => "[X,P]",
            PatternLine::XX => "[X,X]",
            PatternLine::PP => "[P,P]",
            PatternLine::XI => "[X,I]",
            PatternLine::PI => "[P,I]",
            PatternLine::MI => "[M,I]",
            PatternLine::II => "[I,I]",
        }
    }
}

impl fmt::Display for PatternLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl Serialize for PatternLine {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.label())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BracketEntry {
    pub lhs: Generator,
    pub rhs: Generator,
    pub result: Mv,
    /// `result` in generator coordinates.
    pub result_generators: String,
    pub pattern_line: PatternLine,
    /// `c` with `result = c · pattern`; `None` when the pattern vanishes.
    #[serde(serialize_with = "serialize_opt_rational")]
    pub fitted_constant: Option<Rational>,
    pub matched: bool,
    pub closure: bool,
}

/// Full ordered commutator table of the 15 generators.
#[derive(Debug, Clone)]
pub struct BracketTable {
    pub generators: Vec<Generator>,
    pub entries: BTreeMap<(Generator, Generator), BracketEntry>,
}

impl BracketTable {
    /// Entries with `lhs <= rhs` in table order (120 of them).
    pub fn unordered(&self) -> Vec<&BracketEntry> {
        let gens = &self.generators;
        let mut out = Vec::new();
        for (i, a) in gens.iter().enumerate() {
            for b in &gens[i..] {
                out.push(&self.entries[&(*a, *b)]);
            }
        }
        out
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct LineSummary {
    pub line: PatternLine,
    pub instances: usize,
    pub nonzero_instances: usize,
    pub all_matched: bool,
    /// Distinct fitted constants across the non-vanishing instances.
    pub constants: Vec<String>,
    pub uniform: bool,
    #[serde(serialize_with = "serialize_opt_rational")]
    pub constant: Option<Rational>,
}

/// Parameters implied by the fitted constants after normalising the Lorentz
/// lines to 1 through `M ↦ M/κ`.
#[derive(Debug, Clone, Serialize)]
pub struct ImpliedParameters {
    #[serde(serialize_with = "serialize_opt_rational")]
    pub lorentz_scale: Option<Rational>,
    pub lorentz_lines_agree: bool,
    #[serde(serialize_with = "serialize_opt_rational")]
    pub ell_sq_from_xx: Option<Rational>,
    #[serde(serialize_with = "serialize_opt_rational")]
    pub ell_sq_from_xi: Option<Rational>,
    #[serde(serialize_with = "serialize_opt_rational")]
    pub inv_r_sq_from_pp: Option<Rational>,
    #[serde(serialize_with = "serialize_opt_rational")]
    pub inv_r_sq_from_pi: Option<Rational>,
    #[serde(serialize_with = "serialize_opt_rational")]
    pub h_from_xp: Option<Rational>,
    /// Whether one positive `(ℓ², 1/R², h)` with `h² = ℓ²/R²` fits every line.
    pub consistent: bool,
    /// Whether the raw constants equal the reference values for the supplied
    /// `(ℓ, R, h)` with no normalisation at all.
    pub literal_match: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationSummary {
    pub signature: Signature,
    pub scaling: SphaScaling,
    pub scale: SphaScale,
    pub eta: [i64; 4],
    pub generators: usize,
    pub ordered_pairs: usize,
    pub unordered_pairs: usize,
    pub distinct_pairs: usize,
    pub closure_all: bool,
    pub antisymmetric: bool,
    pub jacobi_triples: usize,
    pub jacobi_failures: usize,
    pub patterns_matched: bool,
    pub lines: Vec<LineSummary>,
    pub implied: ImpliedParameters,
}

impl VerificationSummary {
    /// Closure, antisymmetry, Jacobi, per-instance matches and per-line
    /// uniformity all hold.
    pub fn structure_verified(&self) -> bool {
        self.closure_all
            && self.antisymmetric
            && self.jacobi_failures == 0
            && self.patterns_matched
            && self.lines.iter().all(|l| l.uniform)
    }
}

fn fit(result: &Mv, pattern: &Mv) -> (Option<Rational>, bool) {
    match pattern.terms().next() {
        None => (None, result.is_zero()),
        Some((blade, pc)) => {
            let c = result.coeff(blade) / pc.clone();
            let ok = *result == pattern.scale(&c);
            (Some(c), ok)
        }
    }
}

fn jacobi(a: &Mv, b: &Mv, c: &Mv) -> Result<Mv> {
    let t1 = commutator(a, &commutator(b, c)?)?;
    let t2 = commutator(b, &commutator(c, a)?)?;
    let t3 = commutator(c, &commutator(a, b)?)?;
    Ok(&(&t1 + &t2) + &t3)
}

pub fn verify_spha(gens: &SphaGenerators) -> Result<(BracketTable, VerificationSummary)> {
    let all = Generator::all();
    let mut entries = BTreeMap::new();
    for &a in &all {
        for &b in &all {
            let result = commutator(gens.get(a), gens.get(b))?;
            let (pattern_line, pattern) = gens.pattern(a, b);
            let (fitted_constant, matched) = fit(&result, &pattern);
            let closure = gens.in_generator_span(&result).is_some();
            let result_generators = gens.span_text(&result);
            entries.insert(
                (a, b),
                BracketEntry { lhs: a, rhs: b, result, result_generators, pattern_line, fitted_constant, matched, closure },
            );
        }
    }
    let table = BracketTable { generators: all.clone(), entries };

    let antisymmetric = all.iter().all(|&a| {
        all.iter().all(|&b| table.entries[&(a, b)].result == -&table.entries[&(b, a)].result)
    });

    let mut jacobi_triples = 0;
    let mut jacobi_failures = 0;
    for i in 0..all.len() {
        for j in i..all.len() {
            for k in j..all.len() {
                jacobi_triples += 1;
                let (a, b, c) = (gens.get(all[i]), gens.get(all[j]), gens.get(all[k]));
                if !jacobi(a, b, c)?.is_zero() {
                    jacobi_failures += 1;
                }
            }
        }
    }

    let lines: Vec<LineSummary> = PatternLine::ALL
        .iter()
        .map(|&line| {
            let instances: Vec<&BracketEntry> =
                table.entries.values().filter(|e| e.pattern_line == line).collect();
            let mut constants: Vec<Rational> = instances.iter().filter_map(|e| e.fitted_constant.clone()).collect();
            constants.sort();
            constants.dedup();
            LineSummary {
                line,
                instances: instances.len(),
                nonzero_instances: instances.iter().filter(|e| !e.result.is_zero()).count(),
                all_matched: instances.iter().all(|e| e.matched),
                uniform: constants.len() <= 1,
                constant: if constants.len() == 1 { Some(constants[0].clone()) } else { None },
                constants: constants.iter().map(Coeff::render).collect(),
            }
        })
        .collect();

    let implied = implied_parameters(&lines, &gens.scale);
    let summary = VerificationSummary {
        signature: gens.sig,
        scaling: gens.scaling,
        scale: gens.scale.clone(),
        eta: [gens.eta(0, 0), gens.eta(1, 1), gens.eta(2, 2), gens.eta(3, 3)],
        generators: all.len(),
        ordered_pairs: table.entries.len(),
        unordered_pairs: all.len() * (all.len() + 1) / 2,
        distinct_pairs: all.len() * (all.len() - 1) / 2,
        closure_all: table.entries.values().all(|e| e.closure),
        antisymmetric,
        jacobi_triples,
        jacobi_failures,
        patterns_matched: table.entries.values().all(|e| e.matched),
        lines,
        implied,
    };
    Ok((table, summary))
}

fn implied_parameters(lines: &[LineSummary], scale: &SphaScale) -> ImpliedParameters {
    let constant = |line: PatternLine| lines.iter().find(|l| l.line == line).and_then(|l| l.constant.clone());
    let (mm, mx, mp) = (constant(PatternLine::MM), constant(PatternLine::MX), constant(PatternLine::MP));
    let kappa = mm.clone();
    let lorentz_lines_agree = mm.is_some() && mm == mx && mm == mp;
    let times_kappa = |c: Option<Rational>| match (c, &kappa) {
        (Some(c), Some(k)) => Some(-(c * k.clone())),
        _ => None,
    };
    let ell_sq_from_xx = times_kappa(constant(PatternLine::XX));
    let ell_sq_from_xi = constant(PatternLine::XI);
    let inv_r_sq_from_pp = times_kappa(constant(PatternLine::PP));
    let inv_r_sq_from_pi = constant(PatternLine::PI).map(|c| -c);
    let h_from_xp = constant(PatternLine::XP);

    let positive_agree = |a: &Option<Rational>, b: &Option<Rational>| match (a, b) {
        (Some(a), Some(b)) => a == b && a.is_positive(),
        _ => false,
    };
    let consistent = lorentz_lines_agree
        && positive_agree(&ell_sq_from_xx, &ell_sq_from_xi)
        && positive_agree(&inv_r_sq_from_pp, &inv_r_sq_from_pi)
        && match (&h_from_xp, &ell_sq_from_xi, &inv_r_sq_from_pi) {
            (Some(h), Some(l2), Some(ir2)) => h.is_positive() && h.clone() * h.clone() == l2.clone() * ir2.clone(),
            _ => false,
        };

    let ell_sq = scale.ell.clone() * scale.ell.clone();
    let inv_r_sq = Rational::one() / (scale.r.clone() * scale.r.clone());
    let expect = [
        (PatternLine::MM, Rational::one()),
        (PatternLine::MX, Rational::one()),
        (PatternLine::MP, Rational::one()),
        (PatternLine::XP, scale.h.clone()),
        (PatternLine::XX, -ell_sq.clone()),
        (PatternLine::PP, -inv_r_sq.clone()),
        (PatternLine::XI, ell_sq),
        (PatternLine::PI, -inv_r_sq),
    ];
    let literal_match = expect.iter().all(|(line, want)| constant(*line).as_ref() == Some(want))
        && lines.iter().filter(|l| matches!(l.line, PatternLine::MI | PatternLine::II)).all(|l| l.nonzero_instances == 0);

    ImpliedParameters {
        lorentz_scale: kappa,
        lorentz_lines_agree,
        ell_sq_from_xx,
        ell_sq_from_xi,
        inv_r_sq_from_pp,
        inv_r_sq_from_pi,
        h_from_xp,
        consistent,
        literal_match,
    }
}

#[derive(Serialize)]
struct SphaJson<'a> {
    summary: &'a VerificationSummary,
    entries: Vec<&'a BracketEntry>,
}

pub fn render_json(table: &BracketTable, summary: &VerificationSummary) -> Result<String> {
    Ok(serde_json::to_string_pretty(&SphaJson { summary, entries: table.unordered() })?)
}

pub fn render_text(table: &BracketTable, summary: &VerificationSummary) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "SPHA bracket table in {} ({:?}, ell = {}, R = {}, h = {}), eta = {:?}",
        summary.signature,
        summary.scaling,
        summary.scale.ell.render(),
        summary.scale.r.render(),
        summary.scale.h.render(),
        summary.eta
    );
    let gens = &table.generators;
    let cells: Vec<Vec<String>> = gens
        .iter()
        .map(|a| gens.iter().map(|b| table.entries[&(*a, *b)].result_generators.clone()).collect())
        .collect();
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(1).max(3);
    let _ = write!(out, "{:>5} |", "[.,.]");
    for g in gens {
        let _ = write!(out, " {:>width$}", g.to_string());
    }
    let _ = writeln!(out);
    for (a, row) in gens.iter().zip(&cells) {
        let _ = write!(out, "{:>5} |", a.to_string());
        for cell in row {
            let _ = write!(out, " {cell:>width$}");
        }
        let _ = writeln!(out);
    }
    let _ = writeln!(out, "lines:");
    for l in &summary.lines {
        let _ = writeln!(
            out,
            "  {:<6} instances {:>3}, nonzero {:>3}, matched {}, uniform {}, constant {}",
            l.line.label(),
            l.instances,
            l.nonzero_instances,
            l.all_matched,
            l.uniform,
            l.constant.as_ref().map_or("-".to_string(), Coeff::render)
        );
    }
    let ip = &summary.implied;
    let show = |v: &Option<Rational>| v.as_ref().map_or("-".to_string(), Coeff::render);
    let _ = writeln!(
        out,
        "implied: kappa {}, ell^2 {} (from [X,X]) / {} (from [X,I]), 1/R^2 {} (from [P,P]) / {} (from [P,I]), h {}",
        show(&ip.lorentz_scale),
        show(&ip.ell_sq_from_xx),
        show(&ip.ell_sq_from_xi),
        show(&ip.inv_r_sq_from_pp),
        show(&ip.inv_r_sq_from_pi),
        show(&ip.h_from_xp)
    );
    let _ = writeln!(out, "single (ell, R, h) consistent: {}; literal match: {}", ip.consistent, ip.literal_match);
    let _ = writeln!(
        out,
        "closure {} on {} unordered pairs ({} distinct); antisymmetric {}; jacobi {}/{} triples vanish",
        summary.closure_all,
        summary.unordered_pairs,
        summary.distinct_pairs,
        summary.antisymmetric,
        summary.jacobi_triples - summary.jacobi_failures,
        summary.jacobi_triples
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rational};

    fn cl4() -> Signature {
        Signature::euclidean(4).unwrap()
    }

    fn lorentz() -> Signature {
        Signature::new(3, 1).unwrap()
    }

    fn unscaled(sig: Signature) -> SphaGenerators {
        build_generators(sig, SphaScale::default(), SphaScaling::Unscaled).unwrap()
    }

    #[test]
    fn generators_in_cl4() {
        let g = unscaled(cl4());
        assert_eq!(g.x[0], Mv::basis(cl4(), BasisBlade::vector(4)));
        for a in 0..4 {
            assert_eq!(g.p[a], hodge_dual(&g.x[a]));
            assert_eq!(g.p[a].grades(), vec![3]);
        }
        assert_eq!(g.m.len(), 6);
        assert_eq!(Generator::all().len(), 15);
    }

    #[test]
    fn timelike_gamma_squares_negative() {
        let g = unscaled(lorentz());
        assert_eq!(&g.x[0] * &g.x[0], Mv::scalar(lorentz(), int(-1)));
        assert_eq!(g.eta(0, 0), -1);
        assert_eq!(g.eta(1, 1), 1);
    }

    #[test]
    fn unsupported_signatures() {
        for sig in [Signature::euclidean(3).unwrap(), Signature::new(2, 2).unwrap()] {
            assert!(matches!(
                build_generators(sig, SphaScale::default(), SphaScaling::Unscaled),
                Err(Error::UnsupportedSignature(_))
            ));
        }
        let bad = SphaScale { ell: int(0), ..SphaScale::default() };
        assert!(matches!(build_generators(cl4(), bad, SphaScaling::Unscaled), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn vector_commutators() {
        let g = unscaled(cl4());
        let c = commutator(&g.x[1], &g.x[2]).unwrap();
        assert_eq!(c, g.m[&(1, 2)].scale(&int(2)));
        assert!(commutator(&g.x[1], &g.x[1]).unwrap().is_zero());
    }

    #[test]
    fn bivectors_commute_with_i() {
        for sig in [cl4(), lorentz()] {
            let g = unscaled(sig);
            for m in g.m.values() {
                assert!(commutator(m, &g.i).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn table_structure_cl4() {
        let (table, summary) = verify_spha(&unscaled(cl4())).unwrap();
        assert_eq!(summary.ordered_pairs, 225);
        assert_eq!(table.unordered().len(), 120);
        assert!(summary.structure_verified(), "{summary:#?}");
        let line = |l: PatternLine| summary.lines.iter().find(|s| s.line == l).unwrap().constant.clone();
        assert_eq!(line(PatternLine::XX), Some(int(2)));
        assert_eq!(line(PatternLine::XP), Some(int(2)));
        assert_eq!(line(PatternLine::PP), Some(int(-2)));
        assert_eq!(line(PatternLine::PI), Some(int(2)));
        assert_eq!(line(PatternLine::MI), None);
        assert!(!summary.implied.consistent);
    }

    #[test]
    fn table_structure_lorentzian() {
        let (_, summary) = verify_spha(&unscaled(lorentz())).unwrap();
        assert!(summary.structure_verified(), "{summary:#?}");
        let line = |l: PatternLine| summary.lines.iter().find(|s| s.line == l).unwrap().constant.clone();
        // I^2 = -1 in Cl(3,1) flips the [P,P] and [P,I] constants relative to Cl(4).
        assert_eq!(line(PatternLine::PP), Some(int(2)));
        assert_eq!(line(PatternLine::PI), Some(int(-2)));
    }

    #[test]
    fn rescaled_constants_track_parameters() {
        let scale = SphaScale { ell: rational(1, 2), r: int(3), h: rational(1, 6) };
        let g = build_generators(cl4(), scale, SphaScaling::Rescaled).unwrap();
        let (_, summary) = verify_spha(&g).unwrap();
        assert!(summary.structure_verified());
        let line = |l: PatternLine| summary.lines.iter().find(|s| s.line == l).unwrap().constant.clone();
        // [X_a, X_b] = ell^2 [γ_a, γ_b] = 2 ell^2 M_ab
        assert_eq!(line(PatternLine::XX), Some(rational(1, 2)));
        // [X_a, P_b] = (ell / R) 2 η_ab I
        assert_eq!(line(PatternLine::XP), Some(rational(1, 3)));
        // [X_a, I] = 2 γ_a I = 2 ell R P_a
        assert_eq!(line(PatternLine::XI), Some(int(3)));
    }

    #[test]
    fn jacobi_single_triple() {
        let g = unscaled(cl4());
        let j = jacobi(&g.x[0], &g.x[1], &g.p[2]).unwrap();
        assert!(j.is_zero());
    }

    #[test]
    fn renders() {
        let (table, summary) = verify_spha(&unscaled(cl4())).unwrap();
        let text = render_text(&table, &summary);
        assert!(text.contains("closure true on 120 unordered pairs (105 distinct)"));
        let json: serde_json::Value = serde_json::from_str(&render_json(&table, &summary).unwrap()).unwrap();
        let entry = &json["entries"][0];
        for key in ["lhs", "rhs", "result", "pattern_line", "fitted_constant", "closure"] {
            assert!(entry.get(key).is_some(), "missing {key}");
        }
    }
}
