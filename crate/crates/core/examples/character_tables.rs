//! Closed-form character tables, validated and cross-checked against the
//! constructive oracle.
//!
//! Run with `cargo run --example character_tables -- 7`.

use strong_gelfand::character::{constructive_family_table, family_table, validate_table, TableView};
use strong_gelfand::group::FiniteGroup;
use strong_gelfand::Result;

fn main() -> Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    for g in [FiniteGroup::cyclic(n)?, FiniteGroup::dihedral(n)?, FiniteGroup::dicyclic(n)?] {
        let table = family_table(&g)?;
        print!("{}", TableView::from(&table).to_text());
        let oracle = constructive_family_table(&g)?;
        println!(
            "validated: {}, matches constructive oracle: {}\n",
            validate_table(&table).passed(),
            table.equals_up_to_row_permutation(&oracle)
        );
    }
    Ok(())
}
