//! Clifford algebra `Cl(p,q)` over exact rationals or `f64`.

mod blade;
mod coeff;
mod duality;
pub mod identities;
mod multivector;
mod products;
mod signature;
mod table;
mod text;

pub use blade::{all_blades, blade_product, reorder_sign, BasisBlade, SignedBlade};
pub use coeff::{int, parse_rational, rational, Coeff, CoefficientMode, Rational};
pub use duality::{
    geometric_inverse, hodge_dual, hodge_relation_check, inner, inverse, norm_squared, reversion,
    HodgeRelation,
};
pub use multivector::{FloatMultivector, Multivector};
pub use products::{anticommutator, commutator, dot, geometric_product, wedge};
pub use signature::{Signature, MAX_DIM};
pub use table::{MultiplicationTable, TABLE_MAX_DIM};
pub use text::parse_multivector;
