//! Independent reconstruction of the family tables: brute-force linear
//! characters plus irreducible inductions from the rotation subgroup.

use std::collections::VecDeque;
use std::sync::Arc;

use num_integer::Integer;

use super::{family_table, induce, inner_product, validate_table, CharacterTable, ClassFunction, Provenance};
use crate::cyclo::Cyclotomic;
use crate::error::{Error, Result};
use crate::group::{generated_subgroup, Family, FiniteGroup};

/// Every homomorphism from `g` to the roots of unity, found by trying each
/// assignment of roots to the named generators and propagating it over the
/// Cayley graph; an assignment survives iff no element receives two values.
pub fn linear_characters_bruteforce(g: &Arc<FiniteGroup>) -> Vec<ClassFunction> {
    let gens = g.generators();
    let orders: Vec<usize> = gens.iter().map(|&s| g.element_order(s)).collect();
    let l = orders.iter().fold(1usize, |acc, &o| acc.lcm(&o));

    let mut found = Vec::new();
    let mut choice = vec![0usize; gens.len()];
    loop {
        let exps: Vec<usize> = choice.iter().zip(&orders).map(|(&c, &o)| c * (l / o)).collect();
        if let Some(values) = propagate(g, &exps, l) {
            let idx = found.len();
            found.push(ClassFunction::from_fn(g, format!("λ_{idx}"), |x| {
                Cyclotomic::root_of_unity(l, values[x] as i64).expect("positive order")
            }));
        }
        // Odometer over choice[i] ∈ 0..orders[i].
        let mut i = 0;
        while i < choice.len() {
            choice[i] += 1;
            if choice[i] < orders[i] {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
        if i == choice.len() {
            break;
        }
    }
    found
}

fn propagate(g: &FiniteGroup, exps: &[usize], l: usize) -> Option<Vec<usize>> {
    let mut value: Vec<Option<usize>> = vec![None; g.order()];
    value[g.identity()] = Some(0);
    let mut queue = VecDeque::from([g.identity()]);
    while let Some(x) = queue.pop_front() {
        let vx = value[x].expect("queued elements are assigned");
        for (&s, &e) in g.generators().iter().zip(exps) {
            let y = g.mul(x, s);
            let vy = (vx + e) % l;
            match value[y] {
                None => {
                    value[y] = Some(vy);
                    queue.push_back(y);
                }
                Some(existing) if existing != vy => return None,
                Some(_) => {}
            }
        }
    }
    value.into_iter().collect()
}

/// Rebuilds a character table without the closed forms of the dihedral and
/// dicyclic tables: linear characters by brute force, the rest as the
/// irreducible members of `{μ_k↑G}` induced from `⟨a⟩`.
pub fn constructive_family_table(g: &Arc<FiniteGroup>) -> Result<CharacterTable> {
    let mut rows = linear_characters_bruteforce(g);
    if matches!(g.family(), Family::Dihedral(_) | Family::Dicyclic(_)) {
        let rotations = generated_subgroup(g, &g.generators()[..1])?;
        let model = rotations.model()?;
        let cyclic = family_table(&model.group)?;
        for mu in cyclic.irreducibles() {
            let up = induce(mu, &rotations)?;
            if inner_product(&up, &up)? != Cyclotomic::one() {
                continue;
            }
            if rows.iter().any(|r| r.same_values(&up)) {
                continue;
            }
            rows.push(up);
        }
    }
    let count = g.classes().count();
    if rows.len() != count {
        return Err(Error::OracleFailure(format!(
            "{}: reconstructed {} irreducibles for {count} classes",
            g.name(),
            rows.len()
        )));
    }
    let table = CharacterTable::new(Arc::clone(g), rows, Provenance::Constructive)?;
    let report = validate_table(&table);
    if !report.passed() {
        return Err(Error::OracleFailure(format!("{}: {}", g.name(), report.failures.join("; "))));
    }
    Ok(table)
}
