//! Compares computed verdicts with the closed-form classification and lists
//! every disagreement together with its witness.
//!
//! Run with `cargo run --release --example theorem_audit`.

use strong_gelfand::gelfand::audit;
use strong_gelfand::group::FamilyKind;
use strong_gelfand::Result;

fn main() -> Result<()> {
    let ns: Vec<usize> = (1..=16).collect();
    for kind in [FamilyKind::Dihedral, FamilyKind::Dicyclic] {
        let report = audit(kind, &ns)?;
        let s = report.summary();
        println!("{kind}: {} subgroups, {} agree, {} disagree", s.total, s.agree, s.disagree);
        for entry in report.entries.iter().filter(|e| !e.discrepancies.is_empty()) {
            for d in &entry.discrepancies {
                let w = d.witness.as_ref().map(|w| format!("({}, {}, {})", w.psi, w.chi, w.mult)).unwrap_or_default();
                println!(
                    "  n = {:>2}: ⟨{}⟩ of order {} predicted {}, computed {} {w}",
                    entry.n,
                    d.generators.join(", "),
                    d.order,
                    d.predicted,
                    d.computed
                );
            }
        }
    }
    Ok(())
}
