//! Splits Euclidean algebras into position/momentum pairs and shows which
//! pairs commute.

use hodge_phase::algebra::{BasisBlade, Signature};
use hodge_phase::phase_space::{classify_blade, decompose, MiddleSplitRule};

fn main() -> hodge_phase::Result<()> {
    for n in [3, 4] {
        let d = decompose(Signature::euclidean(n)?, MiddleSplitRule::default())?;
        println!("{}", d.render_text());
    }

    // A different choice for the middle grade of Cl(4).
    let alt = decompose(Signature::euclidean(4)?, MiddleSplitRule::ContainsIndex(4))?;
    println!("{}", alt.render_text());

    let sig = Signature::euclidean(4)?;
    let x = BasisBlade::from_indices(&[1]).expect("ascending");
    let c = classify_blade(sig, x)?;
    println!("X = {x}: XP = {}, PX = {} -> {}", c.xp, c.px, c.class);
    Ok(())
}
