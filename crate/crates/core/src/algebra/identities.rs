//! Exhaustive and randomised identity suites over basis blades.
//!
//! Each suite returns one [`IdentityCheck`] per identity with the number of
//! instances checked, the number that failed and the first counterexample.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::blade::{all_blades, BasisBlade};
use super::coeff::{Coeff, CoefficientMode};
use super::duality::{hodge_dual, hodge_relation_check, inner, reversion};
use super::multivector::Multivector;
use super::products::{anticommutator, geometric_product, wedge};
use super::signature::Signature;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    Hodge,
    Dual,
    Norm,
    Clifford,
    Assoc,
}

impl Suite {
    pub const ALL: [Suite; 5] = [Suite::Hodge, Suite::Dual, Suite::Norm, Suite::Clifford, Suite::Assoc];

    pub fn requires_euclidean(self) -> bool {
        matches!(self, Suite::Hodge | Suite::Dual | Suite::Norm)
    }

    pub fn name(self) -> &'static str {
        match self {
            Suite::Hodge => "hodge",
            Suite::Dual => "dual",
            Suite::Norm => "norm",
            Suite::Clifford => "clifford",
            Suite::Assoc => "assoc",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite `{s}`")))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentityCheck {
    pub suite: Suite,
    pub identity: String,
    pub checked: usize,
    pub failures: usize,
    pub counterexample: Option<String>,
}

impl IdentityCheck {
    fn new(suite: Suite, identity: &str) -> Self {
        IdentityCheck { suite, identity: identity.to_string(), checked: 0, failures: 0, counterexample: None }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.counterexample.is_none() {
                self.counterexample = Some(describe());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// `(-1)^{k(n-k)}`.
pub fn double_dual_sign(n: usize, k: usize) -> i8 {
    if (k * (n - k)).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn unit<C: Coeff>(sig: Signature, blade: BasisBlade) -> Multivector<C> {
    Multivector::basis(sig, blade)
}

/// `g(A,B) I = A ∧ ⋆B` and `A ∧ ⋆B = (-1)^{k(n-k)} ⋆B ∧ A` over every
/// same-grade basis-blade pair.
pub fn hodge_suite<C: Coeff>(sig: Signature, mode: CoefficientMode) -> Result<Vec<IdentityCheck>> {
    sig.require_euclidean()?;
    let n = sig.dim();
    let mut relation = IdentityCheck::new(Suite::Hodge, "g(A,B) I = A ^ *B");
    let mut swap = IdentityCheck::new(Suite::Hodge, "A ^ *B = (-1)^{k(n-k)} *B ^ A");
    for k in 0..=n {
        let blades = BasisBlade::of_grade(sig, k);
        let sign = C::from_sign(double_dual_sign(n, k));
        for &a in &blades {
            let ma = unit::<C>(sig, a);
            for &b in &blades {
                let mb = unit::<C>(sig, b);
                let check = hodge_relation_check(&ma, &mb)?;
                relation.record(check.lhs.same_as(&check.rhs, mode), || {
                    format!("A = {a}, B = {b}: lhs = {}, rhs = {}", check.lhs, check.rhs)
                });
                let star_b = hodge_dual(&mb);
                let left = wedge(&ma, &star_b)?;
                let right = wedge(&star_b, &ma)?.scale(&sign);
                swap.record(left.same_as(&right, mode), || {
                    format!("A = {a}, B = {b}: A^*B = {left}, sign*(*B^A) = {right}")
                });
            }
        }
    }
    Ok(vec![relation, swap])
}

/// `⋆⋆B = (-1)^{k(n-k)} B` for every basis blade.
pub fn dual_suite<C: Coeff>(sig: Signature, mode: CoefficientMode) -> Result<Vec<IdentityCheck>> {
    sig.require_euclidean()?;
    let n = sig.dim();
    let mut check = IdentityCheck::new(Suite::Dual, "**B = (-1)^{k(n-k)} B");
    for b in all_blades(sig) {
        let mb = unit::<C>(sig, b);
        let twice = hodge_dual(&hodge_dual(&mb));
        let expected = mb.scale(&C::from_sign(double_dual_sign(n, b.grade())));
        check.record(twice.same_as(&expected, mode), || format!("B = {b}: **B = {twice}, expected {expected}"));
    }
    Ok(vec![check])
}

/// `g(⋆B,⋆B) = g(B,B)` and `g(B,B) > 0` for every basis blade.
pub fn norm_suite<C: Coeff>(sig: Signature, mode: CoefficientMode) -> Result<Vec<IdentityCheck>> {
    sig.require_euclidean()?;
    let mut preserved = IdentityCheck::new(Suite::Norm, "g(*B,*B) = g(B,B)");
    let mut positive = IdentityCheck::new(Suite::Norm, "g(B,B) > 0");
    for b in all_blades(sig) {
        let mb = unit::<C>(sig, b);
        let star = hodge_dual(&mb);
        let before = inner(&mb, &mb)?;
        let after = inner(&star, &star)?;
        preserved.record(mode.same(&before, &after), || {
            format!("B = {b}: g(B,B) = {}, g(*B,*B) = {}", before.render(), after.render())
        });
        positive.record(before.is_positive(), || format!("B = {b}: g(B,B) = {}", before.render()));
    }
    Ok(vec![preserved, positive])
}

/// `e_i e_j + e_j e_i = 2 g_ij`, reversion as an involutive
/// anti-automorphism on basis pairs, and `dim Cl_k = C(n,k)`.
pub fn clifford_suite<C: Coeff>(sig: Signature, mode: CoefficientMode) -> Result<Vec<IdentityCheck>> {
    let n = sig.dim();
    let mut relation = IdentityCheck::new(Suite::Clifford, "e_i e_j + e_j e_i = 2 g_ij");
    for i in 1..=n {
        for j in 1..=n {
            let (ei, ej) = (Multivector::<C>::vector(sig, i), Multivector::<C>::vector(sig, j));
            let lhs = anticommutator(&ei, &ej)?;
            let rhs = Multivector::scalar(sig, C::from_i64(2 * sig.metric_entry(i - 1, j - 1) as i64));
            relation.record(lhs.same_as(&rhs, mode), || format!("i = {i}, j = {j}: got {lhs}, expected {rhs}"));
        }
    }

    let mut involution = IdentityCheck::new(Suite::Clifford, "(A^dag)^dag = A");
    let mut anti = IdentityCheck::new(Suite::Clifford, "(AB)^dag = B^dag A^dag");
    for a in all_blades(sig) {
        let ma = unit::<C>(sig, a);
        involution.record(reversion(&reversion(&ma)) == ma, || format!("A = {a}"));
        for b in all_blades(sig) {
            let mb = unit::<C>(sig, b);
            let lhs = reversion(&geometric_product(&ma, &mb)?);
            let rhs = geometric_product(&reversion(&mb), &reversion(&ma))?;
            anti.record(lhs.same_as(&rhs, mode), || format!("A = {a}, B = {b}: {lhs} vs {rhs}"));
        }
    }

    let mut counts = IdentityCheck::new(Suite::Clifford, "dim grade-k subspace = C(n,k)");
    let mut total = 0;
    for k in 0..=n {
        let found = BasisBlade::of_grade(sig, k).len();
        let expected = binomial(n, k);
        total += found;
        counts.record(found == expected, || format!("k = {k}: {found} blades, expected {expected}"));
    }
    counts.record(total == 1 << n, || format!("total {total}, expected {}", 1 << n));

    Ok(vec![relation, involution, anti, counts])
}

/// Seeded random multivectors with small integer coefficients.
pub struct RandomMultivectors {
    rng: ChaCha8Rng,
    sig: Signature,
    max_terms: usize,
}

impl RandomMultivectors {
    pub fn new(sig: Signature, seed: u64) -> Self {
        RandomMultivectors { rng: ChaCha8Rng::seed_from_u64(seed), sig, max_terms: 12 }
    }

    pub fn sample<C: Coeff>(&mut self) -> Multivector<C> {
        let count = self.sig.blade_count();
        let terms = self.rng.random_range(1..=self.max_terms.min(count));
        let mut mv = Multivector::zero(self.sig);
        for _ in 0..terms {
            let blade = BasisBlade::from_mask(self.rng.random_range(0..count as u32));
            let value = self.rng.random_range(-5i64..=5);
            mv.add_term(blade, C::from_i64(value));
        }
        mv
    }
}

pub const ASSOC_TRIALS: usize = 64;

/// `(AB)C = A(BC)` and `(AB)† = B†A†` on seeded random multivectors.
pub fn assoc_suite<C: Coeff>(sig: Signature, seed: u64, mode: CoefficientMode) -> Result<Vec<IdentityCheck>> {
    let mut gen = RandomMultivectors::new(sig, seed);
    let mut assoc = IdentityCheck::new(Suite::Assoc, "(AB)C = A(BC)");
    let mut anti = IdentityCheck::new(Suite::Assoc, "(AB)^dag = B^dag A^dag (random)");
    for _ in 0..ASSOC_TRIALS {
        let a = gen.sample::<C>();
        let b = gen.sample::<C>();
        let c = gen.sample::<C>();
        let ab = geometric_product(&a, &b)?;
        let left = geometric_product(&ab, &c)?;
        let right = geometric_product(&a, &geometric_product(&b, &c)?)?;
        assoc.record(left.same_as(&right, mode), || format!("A = {a}, B = {b}, C = {c}"));
        let rev = reversion(&ab);
        let flipped = geometric_product(&reversion(&b), &reversion(&a))?;
        anti.record(rev.same_as(&flipped, mode), || format!("A = {a}, B = {b}"));
    }
    Ok(vec![assoc, anti])
}

pub fn run_suite<C: Coeff>(sig: Signature, suite: Suite, seed: u64, mode: CoefficientMode) -> Result<Vec<IdentityCheck>> {
    match suite {
        Suite::Hodge => hodge_suite::<C>(sig, mode),
        Suite::Dual => dual_suite::<C>(sig, mode),
        Suite::Norm => norm_suite::<C>(sig, mode),
        Suite::Clifford => clifford_suite::<C>(sig, mode),
        Suite::Assoc => assoc_suite::<C>(sig, seed, mode),
    }
}

pub(crate) fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
