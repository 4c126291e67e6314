//! Enumerates every subgroup of a dihedral and a dicyclic group.
//!
//! Run with `cargo run --example subgroup_lattice -- 6`.

use strong_gelfand::group::{all_subgroups, FiniteGroup};
use strong_gelfand::Result;

fn main() -> Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(6);
    for g in [FiniteGroup::dihedral(n)?, FiniteGroup::dicyclic(n)?] {
        let subgroups = all_subgroups(&g)?;
        println!("{} (order {}) has {} subgroups", g.name(), g.order(), subgroups.len());
        for h in &subgroups {
            let above = subgroups.iter().filter(|k| h.is_subgroup_of(k) && k.order() > h.order()).count();
            println!(
                "  {:<8} {:<14} order {:>3}  index {:>3}  contained in {above} larger subgroups",
                h.descriptor(),
                format!("⟨{}⟩", h.generator_labels().join(", ")),
                h.order(),
                h.index()
            );
        }
    }
    Ok(())
}
