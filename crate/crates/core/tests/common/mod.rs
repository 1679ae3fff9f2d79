//! Reference implementations used as test oracles. Deliberately naive: blades
//! are index lists and products are reduced by explicit adjacent swaps.

#![allow(dead_code)]

use hodge_phase::algebra::{BasisBlade, Signature};

/// Square of `e_i` (one-based) with positive vectors first.
pub fn metric(sig: Signature, i: usize) -> i64 {
    if i <= sig.p() {
        1
    } else {
        -1
    }
}

/// `e_{a_1} … e_{a_r} · e_{b_1} … e_{b_s}` reduced to ascending order.
pub fn oracle_product(sig: Signature, a: &[usize], b: &[usize]) -> (i64, Vec<usize>) {
    let mut word: Vec<usize> = a.iter().chain(b).copied().collect();
    let mut sign = 1i64;
    loop {
        let mut changed = false;
        let mut i = 0;
        while i + 1 < word.len() {
            if word[i] > word[i + 1] {
                word.swap(i, i + 1);
                sign = -sign;
                changed = true;
            } else if word[i] == word[i + 1] {
                sign *= metric(sig, word[i]);
                word.drain(i..i + 2);
                changed = true;
                continue;
            }
            i += 1;
        }
        if !changed {
            return (sign, word);
        }
    }
}

pub fn oracle_blade_product(sig: Signature, a: BasisBlade, b: BasisBlade) -> (i64, BasisBlade) {
    let (s, idx) = oracle_product(sig, &a.indices(), &b.indices());
    (s, BasisBlade::from_indices(&idx).expect("reduced word is ascending"))
}

/// All signatures with `1 <= p + q <= n_max`.
pub fn all_signatures(n_max: usize) -> Vec<Signature> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        for q in 0..=n {
            out.push(Signature::new(n - q, q).unwrap());
        }
    }
    out
}
