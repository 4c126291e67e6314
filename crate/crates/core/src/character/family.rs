//! Closed-form character tables of the cyclic, dihedral and dicyclic families.

use std::sync::Arc;

use super::{CharacterTable, ClassFunction, Provenance};
use crate::cyclo::Cyclotomic;
use crate::error::{Error, Result};
use crate::group::{Family, FiniteGroup};

/// A linear character of a rotation/reflection group, `a ↦ i^a_exp`, `b ↦ i^b_exp`.
struct Linear {
    name: String,
    a_exp: i64,
    b_exp: i64,
}

/// A two-dimensional character `a^r ↦ ζ_m^{er} + ζ_m^{-er}`, zero off `⟨a⟩`.
struct Planar {
    name: String,
    exponent: i64,
}

fn linear(name: &str, a_exp: i64, b_exp: i64) -> Linear {
    Linear { name: name.to_string(), a_exp, b_exp }
}

fn rotation_reflection_table(g: &Arc<FiniteGroup>, linears: Vec<Linear>, planars: Vec<Planar>) -> Vec<ClassFunction> {
    let m = g.rotation_order().expect("rotation/reflection group");
    let split = move |x: usize| ((x / m) as i64, (x % m) as i64);
    let mut rows = Vec::with_capacity(linears.len() + planars.len());
    for l in linears {
        rows.push(ClassFunction::from_fn(g, l.name, |x| {
            let (j, r) = split(x);
            Cyclotomic::root_of_unity(4, l.a_exp * r + l.b_exp * j).expect("order 4")
        }));
    }
    for p in planars {
        rows.push(ClassFunction::from_fn(g, p.name, |x| {
            let (j, r) = split(x);
            if j == 1 {
                return Cyclotomic::zero();
            }
            let e = p.exponent * r;
            Cyclotomic::root_of_unity(m, e).unwrap() + Cyclotomic::root_of_unity(m, -e).unwrap()
        }));
    }
    rows.into_iter()
        .map(|row| {
            let name = row.name().to_string();
            let values = row.values().iter().cloned().map(Cyclotomic::normalize_rational).collect();
            ClassFunction::new(Arc::clone(g), values, name).expect("one value per class")
        })
        .collect()
}

fn planars(prefix: &str, count: usize, exponent: impl Fn(usize) -> usize) -> Vec<Planar> {
    (1..=count).map(|j| Planar { name: format!("{prefix}_{j}"), exponent: exponent(j) as i64 }).collect()
}

fn cyclic_rows(g: &Arc<FiniteGroup>, n: usize) -> Vec<ClassFunction> {
    // Classes of a cyclic group are singletons in index order: class r is a^r.
    (0..n)
        .map(|k| {
            ClassFunction::from_fn(g, format!("μ_{k}"), |r| {
                Cyclotomic::root_of_unity(n, (k * r) as i64).expect("positive order")
            })
        })
        .collect()
}

/// Moves a table along an isomorphism `phi: source → target` given as an
/// index map (`phi[x]` is the image of `x`).
fn transport(rows: &[ClassFunction], target: &Arc<FiniteGroup>, phi: &[usize]) -> Vec<ClassFunction> {
    let mut inverse = vec![0; target.order()];
    for (x, &y) in phi.iter().enumerate() {
        inverse[y] = x;
    }
    rows.iter().map(|row| ClassFunction::from_fn(target, row.name(), |y| row.value_at(inverse[y]).clone())).collect()
}

/// The closed-form character table of a family group.
///
/// Row order: `χ`'s before `ψ`'s for dihedral groups and dicyclic groups with
/// even `n`; `θ_1..θ_4`, then `π_j`, then `γ_k` for dicyclic groups with odd
/// `n ≥ 3`; `μ_0..μ_{n-1}` for cyclic groups.
pub fn family_table(g: &Arc<FiniteGroup>) -> Result<CharacterTable> {
    let rows = match *g.family() {
        Family::Cyclic(n) => cyclic_rows(g, n),
        Family::Dihedral(1) | Family::Dicyclic(1) => {
            // D_2 ≅ C_2 and Dic_4 ≅ C_4, both generated by b.
            let order = g.order();
            let c = FiniteGroup::cyclic(order)?;
            let b = g.generators()[1];
            let phi: Vec<usize> = (0..order).map(|k| g.pow(b, k)).collect();
            transport(&cyclic_rows(&c, order), g, &phi)
        }
        Family::Dihedral(2) => {
            // D_4 ≅ V_4 = C_2 × C_2 with a ↦ (a, 1), b ↦ (1, b).
            let c2 = FiniteGroup::cyclic(2)?;
            let c2_table = family_table(&c2)?;
            let v4 = tensor_table(&c2_table, &c2_table)?;
            let (a, b) = (g.generators()[0], g.generators()[1]);
            let phi: Vec<usize> = (0..4).map(|x| g.mul(g.pow(a, x / 2), g.pow(b, x % 2))).collect();
            transport(v4.irreducibles(), g, &phi)
        }
        Family::Dihedral(n) if n % 2 == 1 => rotation_reflection_table(
            g,
            vec![linear("χ_1", 0, 0), linear("χ_2", 0, 2)],
            planars("ψ", (n - 1) / 2, |j| j),
        ),
        Family::Dihedral(n) => rotation_reflection_table(
            g,
            vec![linear("χ_1", 0, 0), linear("χ_2", 0, 2), linear("χ_3", 2, 0), linear("χ_4", 2, 2)],
            planars("ψ", n / 2 - 1, |j| j),
        ),
        Family::Dicyclic(n) if n % 2 == 1 => {
            // Rotation order 2n: π_j uses the even exponents 2j, γ_k the odd exponents 2k - 1.
            let mut ps = planars("π", (n - 1) / 2, |j| 2 * j);
            ps.extend(planars("γ", (n - 1) / 2, |k| 2 * k - 1));
            rotation_reflection_table(
                g,
                vec![linear("θ_1", 0, 0), linear("θ_2", 0, 2), linear("θ_3", 2, 1), linear("θ_4", 2, 3)],
                ps,
            )
        }
        Family::Dicyclic(n) => rotation_reflection_table(
            g,
            vec![linear("χ_1", 0, 0), linear("χ_2", 0, 2), linear("χ_3", 2, 0), linear("χ_4", 2, 2)],
            planars("ψ", n - 1, |j| j),
        ),
        Family::Product(..) => {
            return Err(Error::Unsupported(format!(
                "{} has no closed-form table; build it with tensor_table from its factors",
                g.name()
            )))
        }
    };
    CharacterTable::new(Arc::clone(g), rows, Provenance::ClosedForm)
}

/// Table of the direct product of the two tables' groups: every product of a
/// row of `left` with a row of `right`, left-major.
pub fn tensor_table(left: &CharacterTable, right: &CharacterTable) -> Result<CharacterTable> {
    let (gl, gr) = (left.group(), right.group());
    let product = FiniteGroup::product(gl, gr)?;
    let nr = gr.order();
    let mut rows = Vec::with_capacity(left.irreducibles().len() * right.irreducibles().len());
    for chi in left.irreducibles() {
        for psi in right.irreducibles() {
            rows.push(ClassFunction::from_fn(&product, format!("{}⊗{}", chi.name(), psi.name()), |p| {
                chi.value_at(p / nr) * psi.value_at(p % nr)
            }));
        }
    }
    CharacterTable::new(product, rows, Provenance::ClosedForm)
}
