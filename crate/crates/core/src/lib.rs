//! Exact Clifford algebra kernel for Hodge-dual phase-space structure.
//!
//! * [`algebra`]: `Cl(p,q)` products, involutions, duals and identity suites.
//! * [`phase_space`]: pairing of grade-k and grade-(n-k) subspaces via
//!   `P = X⁻¹ I`, commutation classes and the parity audit.
//! * [`spha`]: SPHA generators inside `Cl(4)` / `Cl(3,1)` and their bracket table.
//! * [`dynamics`]: graded Hamiltonian mechanics on a single phase pair.
//! * [`cli`]: the command-line front end used by the `hodge-phase` binary.

pub mod algebra;
pub mod cli;
pub mod dynamics;
mod error;
pub mod phase_space;
pub mod spha;

pub use error::{Error, Result};
