//! Basis blades as bit masks.
//!
//! Bit `i` of a mask is set when `e_{i+1}` is a factor. Factors are always
//! kept in ascending index order; every sign produced by reordering lives in
//! [`blade_product`], never in the mask itself.

use std::fmt;
use std::sync::OnceLock;

use serde::{Serialize, Serializer};

use super::signature::Signature;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisBlade(u32);

impl Serialize for BasisBlade {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl BasisBlade {
    pub const SCALAR: BasisBlade = BasisBlade(0);

    pub fn from_mask(mask: u32) -> Self {
        BasisBlade(mask)
    }

    /// Blade from one-based vector indices, which must be distinct and
    /// ascending.
    pub fn from_indices(indices: &[usize]) -> Option<Self> {
        let mut mask = 0u32;
        let mut last = 0;
        for &i in indices {
            if i == 0 || i <= last || i > 32 {
                return None;
            }
            mask |= 1 << (i - 1);
            last = i;
        }
        Some(BasisBlade(mask))
    }

    /// The basis vector `e_i` (one-based).
    pub fn vector(i: usize) -> Self {
        assert!((1..=32).contains(&i), "vector index out of range");
        BasisBlade(1 << (i - 1))
    }

    pub fn pseudoscalar(sig: Signature) -> Self {
        BasisBlade(sig.pseudoscalar_mask())
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn grade(self) -> usize {
        self.0.count_ones() as usize
    }

    /// One-based vector indices in ascending order.
    pub fn indices(self) -> Vec<usize> {
        (0..32).filter(|i| self.0 & (1 << i) != 0).map(|i| i + 1).collect()
    }

    pub fn fits(self, sig: Signature) -> bool {
        self.0 & !sig.pseudoscalar_mask() == 0
    }

    /// All basis blades of grade `k` in `Cl(p,q)`, ordered by mask.
    pub fn of_grade(sig: Signature, k: usize) -> Vec<BasisBlade> {
        all_blades(sig).filter(|b| b.grade() == k).collect()
    }

    /// `e_K^2 = g(e_K, e_K) · (reversion sign)`; returns the metric part only,
    /// i.e. the product of `g_ii` over the factors.
    pub fn metric_product(self, sig: Signature) -> i8 {
        if (self.0 & sig.negative_mask()).count_ones().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Sign picked up by reversing the factor order: `(-1)^{k(k-1)/2}`.
    pub fn reversion_sign(self) -> i8 {
        let k = self.grade();
        if (k * k.saturating_sub(1) / 2).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for BasisBlade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return f.write_str("1");
        }
        let idx = self.indices();
        if idx.iter().all(|&i| i <= 9) {
            f.write_str("e")?;
            for i in idx {
                write!(f, "{i}")?;
            }
            Ok(())
        } else {
            let joined: Vec<String> = idx.iter().map(|i| i.to_string()).collect();
            write!(f, "e{{{}}}", joined.join(","))
        }
    }
}

/// Iterator over all `2^n` basis blades in mask order.
pub fn all_blades(sig: Signature) -> impl Iterator<Item = BasisBlade> {
    (0..sig.blade_count() as u32).map(BasisBlade)
}

/// A basis blade together with a sign `±1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignedBlade {
    pub sign: i8,
    pub blade: BasisBlade,
}

impl SignedBlade {
    pub fn new(sign: i8, blade: BasisBlade) -> Self {
        debug_assert!(sign == 1 || sign == -1);
        SignedBlade { sign, blade }
    }

    pub fn positive(blade: BasisBlade) -> Self {
        SignedBlade { sign: 1, blade }
    }
}

impl std::ops::Neg for SignedBlade {
    type Output = SignedBlade;

    fn neg(self) -> SignedBlade {
        SignedBlade { sign: -self.sign, blade: self.blade }
    }
}

impl fmt::Display for SignedBlade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign < 0 {
            f.write_str("-")?;
        }
        write!(f, "{}", self.blade)
    }
}

const TABLE_BITS: u32 = 8;
const TABLE_SIZE: usize = 1 << TABLE_BITS;

fn reorder_sign_direct(a: u32, b: u32) -> i8 {
    // For every factor of `b`, count the factors of `a` with a larger index;
    // each one is a transposition needed to bring the product to ascending order.
    let mut a = a >> 1;
    let mut swaps = 0u32;
    while a != 0 {
        swaps += (a & b).count_ones();
        a >>= 1;
    }
    if swaps.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn reorder_table() -> &'static [i8] {
    static TABLE: OnceLock<Vec<i8>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut table = Vec::with_capacity(TABLE_SIZE * TABLE_SIZE);
        for a in 0..TABLE_SIZE as u32 {
            for b in 0..TABLE_SIZE as u32 {
                table.push(reorder_sign_direct(a, b));
            }
        }
        table
    })
}

/// Sign of the permutation that sorts the concatenated factors of `a` and `b`
/// into ascending order. Memoised for masks below `2^8`.
pub fn reorder_sign(a: BasisBlade, b: BasisBlade) -> i8 {
    let (a, b) = (a.0, b.0);
    if a < TABLE_SIZE as u32 && b < TABLE_SIZE as u32 {
        reorder_table()[(a as usize) * TABLE_SIZE + b as usize]
    } else {
        reorder_sign_direct(a, b)
    }
}

/// Geometric product of two signed basis blades in `Cl(p,q)`.
///
/// The result blade is `a XOR b`; its sign collects the input signs, the
/// reordering sign and `g_ii` for every contracted factor.
pub fn blade_product(a: SignedBlade, b: SignedBlade, sig: Signature) -> SignedBlade {
    debug_assert!(a.blade.fits(sig) && b.blade.fits(sig));
    let mut sign = a.sign * b.sign * reorder_sign(a.blade, b.blade);
    let common = BasisBlade(a.blade.0 & b.blade.0);
    sign *= common.metric_product(sig);
    SignedBlade { sign, blade: BasisBlade(a.blade.0 ^ b.blade.0) }
}
