//! Compares computed commutation classes with the half-integer parity rule.

use hodge_phase::phase_space::{audit_parity_rule, AUDIT_MAX_N};

fn main() -> hodge_phase::Result<()> {
    let report = audit_parity_rule(AUDIT_MAX_N)?;
    println!("{}", report.render_text());
    Ok(())
}
