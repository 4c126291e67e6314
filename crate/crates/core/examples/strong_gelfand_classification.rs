//! Multiplicity matrices and the strong Gelfand verdict for every subgroup.
//!
//! Run with `cargo run --example strong_gelfand_classification -- dicyclic 3`.

use strong_gelfand::gelfand::GelfandAnalyzer;
use strong_gelfand::group::{FamilyKind, Subgroup, DEFAULT_MAX_ORDER};
use strong_gelfand::Result;

fn main() -> Result<()> {
    let mut args = std::env::args().skip(1);
    let kind: FamilyKind = args.next().as_deref().unwrap_or("dicyclic").parse()?;
    let n: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(3);
    let g = strong_gelfand::group::construct(&kind.family(n))?;

    let analyzer = GelfandAnalyzer::new(&g)?;
    let report = analyzer.classify(DEFAULT_MAX_ORDER)?;
    println!("{}: {} subgroups", report.group, report.records.len());
    for (h, record) in report.subgroups.iter().zip(&report.records) {
        let verdict = match &record.witness {
            None => "strong Gelfand".to_string(),
            Some(w) => format!("not strong Gelfand, ⟨{}↑, {}⟩ = {}", w.psi, w.chi, w.mult),
        };
        println!("  {:<8} ⟨{}⟩  {verdict}", record.desc, record.generators.join(", "));
        print_matrix(&analyzer, h)?;
    }
    Ok(())
}

fn print_matrix(analyzer: &GelfandAnalyzer, h: &Subgroup) -> Result<()> {
    let m = analyzer.multiplicity_matrix(h)?;
    println!("           {}", m.cols.join(" "));
    for (name, row) in m.rows.iter().zip(&m.entries) {
        let cells: Vec<String> =
            row.iter().zip(&m.cols).map(|(v, c)| format!("{v:>w$}", w = c.chars().count())).collect();
        println!("    {name:<6} {}", cells.join(" "));
    }
    Ok(())
}
