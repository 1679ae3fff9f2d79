//! Signed basis-blade products for a few small algebras.
//!
//! Run with `cargo run --example multiplication_table`.

use hodge_phase::algebra::{BasisBlade, MultiplicationTable, Signature};

fn main() -> hodge_phase::Result<()> {
    for (p, q) in [(2, 0), (3, 0), (1, 1)] {
        let table = MultiplicationTable::new(Signature::new(p, q)?)?;
        println!("{}", table.render_text());
    }

    let sig = Signature::euclidean(2)?;
    let i = BasisBlade::pseudoscalar(sig);
    let table = MultiplicationTable::new(sig)?;
    println!("in {sig}: I * I = {}", table.product(i, i).expect("I is a basis blade"));
    Ok(())
}
