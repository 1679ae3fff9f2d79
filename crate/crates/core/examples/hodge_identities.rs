//! Runs the identity suites and shows the Hodge relation on one pair.

use hodge_phase::algebra::identities::{run_suite, Suite};
use hodge_phase::algebra::{hodge_relation_check, CoefficientMode, Multivector, Rational, Signature};

fn main() -> hodge_phase::Result<()> {
    let sig = Signature::euclidean(4)?;
    let a = Multivector::parse(sig, "e12 + 2*e34")?;
    let b = Multivector::parse(sig, "3*e12 - e13")?;
    let rel = hodge_relation_check(&a, &b)?;
    println!("g(A,B) I = {}", rel.lhs);
    println!("A ^ *B   = {}", rel.rhs);
    println!("equal: {}\n", rel.equal);

    for n in 2..=6 {
        let sig = Signature::euclidean(n)?;
        let mut failures = 0;
        let mut checked = 0;
        for suite in Suite::ALL {
            for check in run_suite::<Rational>(sig, suite, 0, CoefficientMode::Exact)? {
                checked += check.checked;
                failures += check.failures;
            }
        }
        println!("{sig}: {checked} identity instances, {failures} failures");
    }
    Ok(())
}
