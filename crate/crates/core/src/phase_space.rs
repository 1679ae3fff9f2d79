//! Phase-space structure on `Cl(n)`.
//!
//! Each grade-k basis blade `X` is paired with its momentum `P = X⁻¹ I`, a
//! grade-(n-k) element with `XP = I`. For a unit pair the two products always
//! satisfy `PX = (-1)^{k(n-k)} XP`, which fixes whether the pair commutes or
//! anticommutes. [`audit_parity_rule`] compares that computed class with the
//! `½k(n-k)` parity rule and with the worked examples it is usually quoted
//! with, and reports agreement row by row.

use std::fmt;
use std::fmt::Write as _;

use serde::Serialize;

use crate::algebra::{
    geometric_inverse, geometric_product, wedge, BasisBlade, Coeff, Multivector, Rational, Signature,
};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CommClass {
    Commuting,
    Anticommuting,
}

impl CommClass {
    /// `ε` in `PX = ε XP`.
    pub fn exchange_sign(self) -> i8 {
        match self {
            CommClass::Commuting => 1,
            CommClass::Anticommuting => -1,
        }
    }

    /// Relative sign `s` in `{F,G} = (F_x G_p + s F_p G_x) I`.
    ///
    /// Commuting pairs get `s = -1` (ordinary antisymmetric bracket) and
    /// anticommuting pairs get `s = +1` (symmetric, Grassmann-type bracket).
    pub fn bracket_sign(self) -> i8 {
        -self.exchange_sign()
    }

    /// Class predicted by the exchange sign `(-1)^{k(n-k)}`.
    pub fn from_grades(n: usize, k: usize) -> Self {
        if (k * (n - k)).is_multiple_of(2) {
            CommClass::Commuting
        } else {
            CommClass::Anticommuting
        }
    }
}

impl fmt::Display for CommClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CommClass::Commuting => "commuting",
            CommClass::Anticommuting => "anticommuting",
        })
    }
}

/// `P = X⁻¹ I`. Guarantees `X ∧ P = I` for a non-null blade.
pub fn momentum_of<C: Coeff>(x: &Multivector<C>) -> Result<Multivector<C>> {
    geometric_inverse(x)
}

#[derive(Debug, Clone, PartialEq)]
pub struct Classification<C: Coeff = Rational> {
    pub class: CommClass,
    pub xp: Multivector<C>,
    pub px: Multivector<C>,
}

/// Computes `XP` and `PX` and decides whether the pair commutes or
/// anticommutes. `XP` must be a multiple of `I`.
pub fn classify_pair<C: Coeff>(x: &Multivector<C>, p: &Multivector<C>) -> Result<Classification<C>> {
    let sig = x.signature();
    let xp = geometric_product(x, p)?;
    let px = geometric_product(p, x)?;
    match xp.as_single_term() {
        Some((blade, _)) if blade == BasisBlade::pseudoscalar(sig) => {}
        _ => return Err(Error::UnexpectedForm(format!("XP = {xp} is not a multiple of I"))),
    }
    let class = if px == xp {
        CommClass::Commuting
    } else if px == -&xp {
        CommClass::Anticommuting
    } else {
        return Err(Error::UnexpectedForm(format!("PX = {px} is not ±XP = ±({xp})")));
    };
    Ok(Classification { class, xp, px })
}

/// Classifies the unit basis blade `x` against its own momentum.
pub fn classify_blade(sig: Signature, x: BasisBlade) -> Result<Classification> {
    let xm = Multivector::<Rational>::basis(sig, x);
    classify_pair(&xm, &momentum_of(&xm)?)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PhasePair {
    pub k: usize,
    pub dual_grade: usize,
    pub x_basis: Vec<BasisBlade>,
    /// `p_basis[i] = geometric_inverse(x_basis[i])`, sign included.
    pub p_basis: Vec<Multivector>,
    pub comm_class: CommClass,
    /// True for the pair built by splitting the middle grade of an even `n`.
    pub middle: bool,
}

impl PhasePair {
    fn build(sig: Signature, k: usize, x_basis: Vec<BasisBlade>, middle: bool) -> Result<Self> {
        let mut p_basis = Vec::with_capacity(x_basis.len());
        let mut class = None;
        for &x in &x_basis {
            let xm = Multivector::<Rational>::basis(sig, x);
            let p = momentum_of(&xm)?;
            let c = classify_pair(&xm, &p)?.class;
            if *class.get_or_insert(c) != c {
                return Err(Error::UnexpectedForm(format!("grade-{k} blades of {sig} disagree on class")));
            }
            p_basis.push(p);
        }
        let comm_class = class.ok_or_else(|| Error::UnexpectedForm(format!("empty grade-{k} pair")))?;
        Ok(PhasePair { k, dual_grade: sig.dim() - k, x_basis, p_basis, comm_class, middle })
    }

    /// `x_basis[i] · p_basis[i]` for every aligned pair.
    pub fn products(&self, sig: Signature) -> Vec<Multivector> {
        self.x_basis
            .iter()
            .zip(&self.p_basis)
            .map(|(x, p)| geometric_product(&Multivector::basis(sig, *x), p).expect("same signature"))
            .collect()
    }
}

/// How the middle grade `n/2` of an even-dimensional algebra is split.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MiddleSplitRule {
    /// Position side is every middle-grade blade containing `e_i` (one-based).
    ContainsIndex(usize),
    /// Position side given explicitly; must hold exactly one blade of each
    /// dual pair.
    Explicit(Vec<BasisBlade>),
}

impl Default for MiddleSplitRule {
    fn default() -> Self {
        MiddleSplitRule::ContainsIndex(1)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MiddleSplit {
    pub rule: MiddleSplitRule,
    pub x_side: Vec<BasisBlade>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Decomposition {
    pub signature: Signature,
    pub pairs: Vec<PhasePair>,
    pub middle_split: Option<MiddleSplit>,
}

impl Decomposition {
    /// How many times each of the `2^n` basis blades occurs across all pairs,
    /// indexed by mask.
    pub fn coverage(&self) -> Vec<usize> {
        let mut counts = vec![0usize; self.signature.blade_count()];
        for pair in &self.pairs {
            for x in &pair.x_basis {
                counts[x.mask() as usize] += 1;
            }
            for p in &pair.p_basis {
                for (b, _) in p.terms() {
                    counts[b.mask() as usize] += 1;
                }
            }
        }
        counts
    }

    pub fn is_partition(&self) -> bool {
        self.coverage().iter().all(|&c| c == 1)
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let n = self.signature.dim();
        let _ = writeln!(out, "decomposition of {} (n = {n})", self.signature);
        for pair in &self.pairs {
            let tag = if pair.middle { " (middle split)" } else { "" };
            let _ = writeln!(
                out,
                "k = {} <-> {}{tag}: {} pair(s), {}",
                pair.k,
                pair.dual_grade,
                pair.x_basis.len(),
                pair.comm_class
            );
            for (x, p) in pair.x_basis.iter().zip(&pair.p_basis) {
                let _ = writeln!(out, "  {x} <-> {p}");
            }
        }
        if let Some(split) = &self.middle_split {
            let side: Vec<String> = split.x_side.iter().map(|b| b.to_string()).collect();
            let _ = writeln!(out, "middle split rule {:?}: X side {{{}}}", split.rule, side.join(", "));
        }
        let _ = writeln!(out, "partition: {}", self.is_partition());
        out
    }
}

/// Splits `Cl(n)` into `(X_k, P_k)` pairs for `k < n/2`, plus the split middle
/// grade when `n` is even. The `k = 0` pair is `1 <-> I`.
pub fn decompose(sig: Signature, middle_rule: MiddleSplitRule) -> Result<Decomposition> {
    sig.require_euclidean()?;
    let n = sig.dim();
    let mut pairs = Vec::new();
    for k in 0..n.div_ceil(2) {
        if 2 * k == n {
            break;
        }
        pairs.push(PhasePair::build(sig, k, BasisBlade::of_grade(sig, k), false)?);
    }
    let mut middle_split = None;
    if n.is_multiple_of(2) {
        let half = n / 2;
        let x_side = middle_x_side(sig, &middle_rule)?;
        pairs.push(PhasePair::build(sig, half, x_side.clone(), true)?);
        middle_split = Some(MiddleSplit { rule: middle_rule, x_side });
    }
    Ok(Decomposition { signature: sig, pairs, middle_split })
}

fn middle_x_side(sig: Signature, rule: &MiddleSplitRule) -> Result<Vec<BasisBlade>> {
    let n = sig.dim();
    let half = n / 2;
    let middle = BasisBlade::of_grade(sig, half);
    match rule {
        MiddleSplitRule::ContainsIndex(i) => {
            if *i == 0 || *i > n {
                return Err(Error::InvalidArgument(format!("split index {i} out of range for {sig}")));
            }
            let bit = 1u32 << (i - 1);
            Ok(middle.into_iter().filter(|b| b.mask() & bit != 0).collect())
        }
        MiddleSplitRule::Explicit(blades) => {
            let full = sig.pseudoscalar_mask();
            let mut seen = std::collections::BTreeSet::new();
            for b in blades {
                if b.grade() != half || !b.fits(sig) {
                    return Err(Error::InvalidArgument(format!("{b} is not a grade-{half} blade of {sig}")));
                }
                if !seen.insert(b.mask()) || seen.contains(&(full ^ b.mask())) {
                    return Err(Error::InvalidArgument(format!("{b} repeats or is dual to another chosen blade")));
                }
            }
            if 2 * blades.len() != middle.len() {
                return Err(Error::InvalidArgument(format!(
                    "explicit split needs {} blades, got {}",
                    middle.len() / 2,
                    blades.len()
                )));
            }
            let mut sorted = blades.clone();
            sorted.sort();
            Ok(sorted)
        }
    }
}

/// Checks `X ∧ momentum_of(X) = I` for one element.
pub fn normalisation_holds<C: Coeff>(x: &Multivector<C>) -> Result<bool> {
    let p = momentum_of(x)?;
    Ok(wedge(x, &p)? == Multivector::pseudoscalar(x.signature()))
}

/// Class assigned by the `½k(n-k)` parity rule; `None` when `k(n-k)` is odd
/// and the rule has no integer to take the parity of.
pub fn parity_rule_class(n: usize, k: usize) -> Option<CommClass> {
    let product = k * (n - k);
    if product % 2 == 1 {
        return None;
    }
    Some(if (product / 2).is_multiple_of(2) { CommClass::Commuting } else { CommClass::Anticommuting })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AuditRow {
    pub n: usize,
    pub k: usize,
    pub computed_class: CommClass,
    pub parity_rule_defined: bool,
    pub rule_class: Option<CommClass>,
    pub agree: Option<bool>,
}

/// A worked example quoted alongside the parity rule, checked against the
/// computed class.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StatedExample {
    pub n: usize,
    pub k: usize,
    pub description: String,
    pub stated_class: CommClass,
    pub computed_class: CommClass,
    pub agree: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AuditSummary {
    pub rows: usize,
    pub parity_undefined: usize,
    pub agreements: usize,
    pub disagreements: usize,
    pub stated_example_disagreements: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AuditReport {
    pub n_max: usize,
    pub rows: Vec<AuditRow>,
    pub stated_examples: Vec<StatedExample>,
    pub summary: AuditSummary,
}

const STATED_EXAMPLES: [(usize, usize, CommClass, &str); 3] = [
    (3, 1, CommClass::Anticommuting, "Cl(3): vectors and bivectors stated to anticommute"),
    (4, 1, CommClass::Commuting, "Cl(4): (X1, P1) vectors and trivectors stated to commute"),
    (4, 2, CommClass::Anticommuting, "Cl(4): (X2, P2) bivector halves stated to anticommute"),
];

pub const AUDIT_MAX_N: usize = 8;

/// For every `2 <= n <= n_max` and `1 <= k <= n-1`, classifies the unit pair
/// `(e_1…e_k, momentum)` by direct computation and compares with the parity
/// rule and the stated examples. Disagreements are reported, not resolved.
pub fn audit_parity_rule(n_max: usize) -> Result<AuditReport> {
    if !(2..=AUDIT_MAX_N).contains(&n_max) {
        return Err(Error::InvalidArgument(format!("n_max must be in 2..={AUDIT_MAX_N}, got {n_max}")));
    }
    let mut rows = Vec::new();
    for n in 2..=n_max {
        let sig = Signature::euclidean(n)?;
        for k in 1..n {
            let x = BasisBlade::from_mask((1u32 << k) - 1);
            let computed_class = classify_blade(sig, x)?.class;
            let rule_class = parity_rule_class(n, k);
            rows.push(AuditRow {
                n,
                k,
                computed_class,
                parity_rule_defined: rule_class.is_some(),
                rule_class,
                agree: rule_class.map(|c| c == computed_class),
            });
        }
    }
    let stated_examples: Vec<StatedExample> = STATED_EXAMPLES
        .iter()
        .filter(|(n, ..)| *n <= n_max)
        .map(|&(n, k, stated, description)| {
            let computed = rows
                .iter()
                .find(|r| r.n == n && r.k == k)
                .map(|r| r.computed_class)
                .expect("row exists for every n <= n_max");
            StatedExample {
                n,
                k,
                description: description.to_string(),
                stated_class: stated,
                computed_class: computed,
                agree: stated == computed,
            }
        })
        .collect();
    let summary = AuditSummary {
        rows: rows.len(),
        parity_undefined: rows.iter().filter(|r| !r.parity_rule_defined).count(),
        agreements: rows.iter().filter(|r| r.agree == Some(true)).count(),
        disagreements: rows.iter().filter(|r| r.agree == Some(false)).count(),
        stated_example_disagreements: stated_examples.iter().filter(|e| !e.agree).count(),
    };
    Ok(AuditReport { n_max, rows, stated_examples, summary })
}

impl AuditReport {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "commutation audit, n = 2..={}", self.n_max);
        let _ = writeln!(
            out,
            "{:>3} {:>3} {:>7} {:<14} {:<13} {:<14} {:<5}",
            "n", "k", "k(n-k)", "computed", "parity_rule", "rule_class", "agree"
        );
        for r in &self.rows {
            let rule = if r.parity_rule_defined { "defined" } else { "undefined" };
            let class = r.rule_class.map_or("-".to_string(), |c| c.to_string());
            let agree = r.agree.map_or("-".to_string(), |a| if a { "yes".into() } else { "NO".into() });
            let _ = writeln!(
                out,
                "{:>3} {:>3} {:>7} {:<14} {:<13} {:<14} {}",
                r.n,
                r.k,
                r.k * (r.n - r.k),
                r.computed_class.to_string(),
                rule,
                class,
                agree
            );
        }
        let _ = writeln!(out, "stated examples:");
        for e in &self.stated_examples {
            let _ = writeln!(
                out,
                "  {} -> stated {}, computed {}: {}",
                e.description,
                e.stated_class,
                e.computed_class,
                if e.agree { "agree" } else { "DISAGREE" }
            );
        }
        let s = &self.summary;
        let _ = writeln!(
            out,
            "rows {}, parity undefined {}, agree {}, disagree {}, stated-example disagreements {}",
            s.rows, s.parity_undefined, s.agreements, s.disagreements, s.stated_example_disagreements
        );
        out
    }
}
