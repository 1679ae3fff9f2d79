//! Commutator tables of the 15 generators in Cl(4) and Cl(3,1).

use hodge_phase::algebra::{rational, Signature};
use hodge_phase::spha::{build_generators, render_text, verify_spha, SphaScale, SphaScaling};

fn main() -> hodge_phase::Result<()> {
    for sig in [Signature::new(4, 0)?, Signature::new(3, 1)?] {
        let gens = build_generators(sig, SphaScale::default(), SphaScaling::Unscaled)?;
        let (table, summary) = verify_spha(&gens)?;
        println!("{}", render_text(&table, &summary));
    }

    // Length and radius absorbed into the generators.
    let scale = SphaScale { ell: rational(1, 2), r: rational(3, 1), h: rational(1, 6) };
    let gens = build_generators(Signature::new(3, 1)?, scale, SphaScaling::Rescaled)?;
    let (_, summary) = verify_spha(&gens)?;
    for line in &summary.lines {
        let constant = if line.constants.is_empty() { "-".to_string() } else { line.constants.join(", ") };
        println!("{:<6} constant {constant}", line.line.label());
    }
    println!("consistent: {}", summary.implied.consistent);
    Ok(())
}
