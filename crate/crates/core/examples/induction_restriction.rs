//! Induction, restriction and Frobenius reciprocity for the reflection
//! subgroup of D10.
//!
//! Run with `cargo run --example induction_restriction`.

use strong_gelfand::character::{decompose, family_table, induce, inner_product, restrict};
use strong_gelfand::group::{generated_subgroup, FiniteGroup};
use strong_gelfand::Result;

fn main() -> Result<()> {
    let g = FiniteGroup::dihedral(5)?;
    let h = generated_subgroup(&g, &[g.parse_label("b")?])?;
    let table = family_table(&g)?;
    let sub_table = family_table(&h.model()?.group)?;

    for psi in sub_table.irreducibles() {
        let up = induce(psi, &h)?;
        let values: Vec<String> = g.classes().reps.iter().map(|&x| up.value_at(x).to_string()).collect();
        println!("{}↑{} on classes: [{}]", psi.name(), g.name(), values.join(", "));
        println!("  decomposition over {:?}: {:?}", table.names(), decompose(&up, &table)?);
        for chi in table.irreducibles() {
            let left = inner_product(&up, chi)?;
            let right = inner_product(psi, &restrict(chi, &h)?)?;
            println!("  ⟨{}↑, {}⟩ = {left} = ⟨{}, {}↓⟩ = {right}", psi.name(), chi.name(), psi.name(), chi.name());
        }
    }
    Ok(())
}
