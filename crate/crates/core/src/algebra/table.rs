use std::fmt::Write as _;

use serde::Serialize;

use super::blade::{all_blades, blade_product, BasisBlade, SignedBlade};
use super::signature::Signature;
use crate::error::{Error, Result};

/// Largest dimension rendered as a full table (64 × 64 entries).
pub const TABLE_MAX_DIM: usize = 6;

/// Signed basis-blade products `e_A e_B` for every pair of basis blades.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicationTable {
    pub signature: Signature,
    /// Blades in (grade, mask) order.
    pub blades: Vec<BasisBlade>,
    /// `products[i][j] = blades[i] * blades[j]`.
    pub products: Vec<Vec<SignedBlade>>,
}

#[derive(Serialize)]
struct TableJson<'a> {
    signature: Signature,
    blades: &'a [BasisBlade],
    rows: Vec<Vec<String>>,
}

impl MultiplicationTable {
    pub fn new(sig: Signature) -> Result<Self> {
        if sig.dim() > TABLE_MAX_DIM {
            return Err(Error::DimensionTooLarge { n: sig.dim(), max: TABLE_MAX_DIM });
        }
        let mut blades: Vec<BasisBlade> = all_blades(sig).collect();
        blades.sort_by_key(|b| (b.grade(), b.mask()));
        let products = blades
            .iter()
            .map(|&a| {
                blades
                    .iter()
                    .map(|&b| blade_product(SignedBlade::positive(a), SignedBlade::positive(b), sig))
                    .collect()
            })
            .collect();
        Ok(MultiplicationTable { signature: sig, blades, products })
    }

    pub fn entry_count(&self) -> usize {
        self.blades.len() * self.blades.len()
    }

    pub fn product(&self, a: BasisBlade, b: BasisBlade) -> Option<SignedBlade> {
        let i = self.blades.iter().position(|&x| x == a)?;
        let j = self.blades.iter().position(|&x| x == b)?;
        Some(self.products[i][j])
    }

    fn cells(&self) -> Vec<Vec<String>> {
        self.products.iter().map(|row| row.iter().map(ToString::to_string).collect()).collect()
    }

    pub fn render_text(&self) -> String {
        let cells = self.cells();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        let mut out = format!("multiplication table of {}\n", self.signature);
        let _ = write!(out, "{:>width$} |", "");
        for b in &self.blades {
            let _ = write!(out, " {:>width$}", b.to_string());
        }
        out.push('\n');
        for (a, row) in self.blades.iter().zip(&cells) {
            let _ = write!(out, "{:>width$} |", a.to_string());
            for cell in row {
                let _ = write!(out, " {cell:>width$}");
            }
            out.push('\n');
        }
        out
    }

    pub fn render_csv(&self) -> String {
        let mut out = String::from("lhs,rhs,product\n");
        for (a, row) in self.blades.iter().zip(&self.products) {
            for (b, prod) in self.blades.iter().zip(row) {
                let _ = writeln!(out, "{a},{b},{prod}");
            }
        }
        out
    }

    pub fn render_json(&self) -> Result<String> {
        let json = TableJson { signature: self.signature, blades: &self.blades, rows: self.cells() };
        Ok(serde_json::to_string_pretty(&json)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cl2_pseudoscalar_squares_to_minus_one() {
        let sig = Signature::euclidean(2).unwrap();
        let table = MultiplicationTable::new(sig).unwrap();
        let i = BasisBlade::pseudoscalar(sig);
        assert_eq!(table.product(i, i), Some(SignedBlade::new(-1, BasisBlade::SCALAR)));
    }

    #[test]
    fn vector_diagonal_is_metric() {
        let sig = Signature::new(2, 2).unwrap();
        let table = MultiplicationTable::new(sig).unwrap();
        for i in 1..=4 {
            let e = BasisBlade::vector(i);
            assert_eq!(table.product(e, e), Some(SignedBlade::new(sig.metric(i - 1), BasisBlade::SCALAR)));
        }
    }

    #[test]
    fn sizes() {
        assert_eq!(MultiplicationTable::new(Signature::euclidean(3).unwrap()).unwrap().entry_count(), 64);
        assert!(matches!(
            MultiplicationTable::new(Signature::euclidean(7).unwrap()),
            Err(Error::DimensionTooLarge { n: 7, max: 6 })
        ));
    }

    #[test]
    fn renders() {
        let table = MultiplicationTable::new(Signature::euclidean(2).unwrap()).unwrap();
        assert!(table.render_csv().contains("e12,e12,-1\n"));
        assert!(table.render_text().contains("e12 |"));
    }
}
