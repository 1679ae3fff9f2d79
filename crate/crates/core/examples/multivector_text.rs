//! Parsing, printing and combining multivectors in the text format.

use hodge_phase::algebra::{dot, hodge_dual, inverse, reversion, wedge, Multivector, Signature};

fn main() -> hodge_phase::Result<()> {
    let sig = Signature::euclidean(4)?;
    let a = Multivector::parse(sig, "1 + 2*e12 - e134")?;
    let b = Multivector::parse(sig, "e21 + 1/2*e3")?; // e21 = -e12
    println!("A        = {a}");
    println!("B        = {b}");
    println!("AB       = {}", &a * &b);
    println!("A . B    = {}", dot(&a, &b)?);
    println!("A ^ B    = {}", wedge(&a, &b)?);
    println!("rev(A)   = {}", reversion(&a));
    println!("*A       = {}", hodge_dual(&a));

    let blade = Multivector::parse(sig, "3*e24")?;
    let inv = inverse(&blade)?;
    println!("(3 e24)^-1 = {inv}, product = {}", &blade * &inv);

    let lorentz = Signature::new(3, 1)?;
    println!("in {lorentz}: e4 e4 = {}", Multivector::parse(lorentz, "e44")?);

    let big = Signature::euclidean(12)?;
    println!("in {big}: {}", Multivector::parse(big, "e{11,2} + e{1,12}")?);
    Ok(())
}
