//! Class functions and character tables over the family groups, with exact
//! induction, restriction and inner products.

mod family;
mod oracle;
pub(crate) mod render;

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::cyclo::{Cyclotomic, Rational};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};

pub use family::{family_table, tensor_table};
pub use oracle::{constructive_family_table, linear_characters_bruteforce};
pub use render::{RowView, TableView};

/// A function on a group that is constant on conjugacy classes, stored as one
/// value per class in the group's class order.
#[derive(Clone, Debug)]
pub struct ClassFunction {
    group: Arc<FiniteGroup>,
    values: Vec<Cyclotomic>,
    name: String,
}

impl ClassFunction {
    pub fn new(group: Arc<FiniteGroup>, values: Vec<Cyclotomic>, name: impl Into<String>) -> Result<Self> {
        if values.len() != group.classes().count() {
            return Err(Error::Domain(format!(
                "{} has {} classes but {} values were given",
                group.name(),
                group.classes().count(),
                values.len()
            )));
        }
        Ok(ClassFunction { group, values, name: name.into() })
    }

    /// Builds a class function by evaluating `f` at each class representative.
    pub fn from_fn(group: &Arc<FiniteGroup>, name: impl Into<String>, f: impl Fn(usize) -> Cyclotomic) -> Self {
        let values = group.classes().reps.iter().map(|&g| f(g)).collect();
        ClassFunction { group: Arc::clone(group), values, name: name.into() }
    }

    pub fn trivial(group: &Arc<FiniteGroup>) -> Self {
        Self::from_fn(group, "1", |_| Cyclotomic::one())
    }

    /// Character of the left regular representation.
    pub fn regular(group: &Arc<FiniteGroup>) -> Self {
        let e = group.identity();
        let order = group.order() as i64;
        Self::from_fn(group, "reg", |g| Cyclotomic::from_integer(if g == e { order } else { 0 }))
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn value_at(&self, element: usize) -> &Cyclotomic {
        &self.values[self.group.classes().class_of[element]]
    }

    /// Value at the identity.
    pub fn degree(&self) -> &Cyclotomic {
        self.value_at(self.group.identity())
    }

    /// Same group and same values; names are ignored.
    pub fn same_values(&self, other: &ClassFunction) -> bool {
        self.group == other.group && self.values == other.values
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(|v| *v == Cyclotomic::one())
    }

    /// Self inner product exactly 1 and a positive integral degree.
    pub fn is_irreducible(&self) -> bool {
        let norm_one = inner_product(self, self).map(|v| v == Cyclotomic::one()).unwrap_or(false);
        norm_one && self.degree().as_rational_integer().is_some_and(|d| d.is_positive())
    }
}

fn check_same_group(f: &ClassFunction, g: &ClassFunction) -> Result<()> {
    if f.group != g.group {
        return Err(Error::Domain(format!(
            "{} lives on {} but {} lives on {}",
            f.name,
            f.group.name(),
            g.name,
            g.group.name()
        )));
    }
    Ok(())
}

/// `⟨f, g⟩ = (1/|G|) Σ_c |c| f(c) conj(g(c))`.
pub fn inner_product(f: &ClassFunction, g: &ClassFunction) -> Result<Cyclotomic> {
    check_same_group(f, g)?;
    let classes = f.group.classes();
    let terms: Vec<(&Cyclotomic, &Cyclotomic, i64)> =
        f.values.iter().zip(&g.values).zip(&classes.sizes).map(|((a, b), &size)| (a, b, size as i64)).collect();
    let sum = Cyclotomic::hermitian_sum(&terms);
    Ok(sum.scale(&Rational::new(BigInt::from(1), BigInt::from(f.group.order()))))
}

/// Pulls `f` back along an injective homomorphism `embedding: source → f.group`.
pub fn restrict_along(f: &ClassFunction, source: &Arc<FiniteGroup>, embedding: &[usize]) -> Result<ClassFunction> {
    if embedding.len() != source.order() || embedding.iter().any(|&y| y >= f.group.order()) {
        return Err(Error::Domain(format!("embedding of {} into {} is malformed", source.name(), f.group.name())));
    }
    let values = source.classes().reps.iter().map(|&h| f.value_at(embedding[h]).clone()).collect();
    ClassFunction::new(Arc::clone(source), values, format!("{}↓{}", f.name, source.name()))
}

/// Induces `f` from its group to `target`, where `preimage` inverts the
/// embedding of `f.group` in `target` (`None` off the image).
///
/// `(f↑G)(g) = (1/|H|) Σ_{x∈G} f°(x g x⁻¹)` with `f°` zero off `H`.
pub fn induce_along(f: &ClassFunction, target: &Arc<FiniteGroup>, preimage: &[Option<usize>]) -> Result<ClassFunction> {
    let source = &f.group;
    if preimage.len() != target.order() || preimage.iter().flatten().count() != source.order() {
        return Err(Error::Domain(format!("embedding of {} into {} is malformed", source.name(), target.name())));
    }
    let h_classes = source.classes();
    let inv_order = Rational::new(BigInt::from(1), BigInt::from(source.order()));
    let values = target
        .classes()
        .reps
        .iter()
        .map(|&g| {
            let mut counts = vec![0i64; h_classes.count()];
            for x in 0..target.order() {
                if let Some(h) = preimage[target.conjugate(g, x)] {
                    counts[h_classes.class_of[h]] += 1;
                }
            }
            let terms: Vec<(&Cyclotomic, i64)> = f.values.iter().zip(counts).filter(|&(_, c)| c != 0).collect();
            Cyclotomic::weighted_sum(&terms).scale(&inv_order)
        })
        .collect();
    ClassFunction::new(Arc::clone(target), values, format!("{}↑{}", f.name, target.name()))
}

/// `f↓H`, as a class function on the family model of `H`.
pub fn restrict(f: &ClassFunction, h: &Subgroup) -> Result<ClassFunction> {
    if *h.parent() != f.group {
        return Err(Error::Domain(format!(
            "{} is not a subgroup of {}, the group of {}",
            h.descriptor(),
            f.group.name(),
            f.name
        )));
    }
    let model = h.model()?;
    Ok(restrict_along(f, &model.group, &model.embedding)?.with_name(format!("{}↓{}", f.name, h.descriptor())))
}

/// `f↑G` for `f` on the family model of `H ≤ G`.
pub fn induce(f: &ClassFunction, h: &Subgroup) -> Result<ClassFunction> {
    let model = h.model()?;
    if model.group != f.group {
        return Err(Error::Domain(format!(
            "{} lives on {}, not on the model of {}",
            f.name,
            f.group.name(),
            h.descriptor()
        )));
    }
    induce_along(f, h.parent(), &model.preimage)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    ClosedForm,
    Constructive,
}

#[derive(Clone, Debug)]
pub struct CharacterTable {
    group: Arc<FiniteGroup>,
    irreducibles: Vec<ClassFunction>,
    provenance: Provenance,
}

impl CharacterTable {
    pub fn new(group: Arc<FiniteGroup>, irreducibles: Vec<ClassFunction>, provenance: Provenance) -> Result<Self> {
        if let Some(bad) = irreducibles.iter().find(|r| r.group != group) {
            return Err(Error::Domain(format!("row {} is not on {}", bad.name, group.name())));
        }
        Ok(CharacterTable { group, irreducibles, provenance })
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn irreducibles(&self) -> &[ClassFunction] {
        &self.irreducibles
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn names(&self) -> Vec<String> {
        self.irreducibles.iter().map(|r| r.name.clone()).collect()
    }

    /// Degrees of the rows; zero for a row whose identity value is not a
    /// positive integer (such a table fails validation).
    pub fn degrees(&self) -> Vec<u64> {
        self.irreducibles
            .iter()
            .map(|r| r.degree().as_rational_integer().and_then(|d| d.to_u64()).unwrap_or(0))
            .collect()
    }

    pub fn row(&self, name: &str) -> Option<&ClassFunction> {
        self.irreducibles.iter().find(|r| r.name == name)
    }

    /// Index of the trivial character.
    pub fn trivial_index(&self) -> Option<usize> {
        self.irreducibles.iter().position(ClassFunction::is_trivial)
    }

    /// Same row set on the same group, ignoring row order and names.
    pub fn equals_up_to_row_permutation(&self, other: &CharacterTable) -> bool {
        if self.group != other.group || self.irreducibles.len() != other.irreducibles.len() {
            return false;
        }
        let mut used = vec![false; other.irreducibles.len()];
        self.irreducibles.iter().all(|row| {
            match other.irreducibles.iter().enumerate().position(|(i, o)| !used[i] && row.values == o.values) {
                Some(i) => {
                    used[i] = true;
                    true
                }
                None => false,
            }
        })
    }
}

/// Multiplicities `⟨f, χ⟩` of every row, certified to be nonnegative integers
/// whose degree-weighted sum is `f(1)`.
pub fn decompose(f: &ClassFunction, table: &CharacterTable) -> Result<Vec<u64>> {
    let mut out = Vec::with_capacity(table.irreducibles.len());
    for chi in &table.irreducibles {
        let ip = inner_product(f, chi)?;
        let m = ip.as_rational_integer().and_then(|m| m.to_u64()).ok_or_else(|| {
            Error::Integrality(format!("⟨{}, {}⟩ = {ip} is not a nonnegative integer", f.name, chi.name))
        })?;
        out.push(m);
    }
    let total: u64 = out.iter().zip(table.degrees()).map(|(m, d)| m * d).sum();
    match f.degree().as_rational_integer().and_then(|d| d.to_u64()) {
        Some(d) if d == total => Ok(out),
        _ => Err(Error::Integrality(format!(
            "{} has degree {} but its decomposition accounts for {total}",
            f.name,
            f.degree()
        ))),
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub failures: Vec<String>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks row count, `Σ deg² = |G|`, and both orthogonality relations exactly.
pub fn validate_table(table: &CharacterTable) -> ValidationReport {
    let mut failures = Vec::new();
    let g = &table.group;
    let classes = g.classes();
    let rows = &table.irreducibles;
    if rows.len() != classes.count() {
        failures.push(format!("row count {} differs from class count {}", rows.len(), classes.count()));
    }
    let degrees = table.degrees();
    if let Some(i) = degrees.iter().position(|&d| d == 0) {
        failures.push(format!("row {} has a non-integral or non-positive degree", rows[i].name));
    }
    let sum_sq: u64 = degrees.iter().map(|d| d * d).sum();
    if sum_sq != g.order() as u64 {
        failures.push(format!("sum of squared degrees is {sum_sq}, expected {}", g.order()));
    }
    for i in 0..rows.len() {
        for j in i..rows.len() {
            let expected = Cyclotomic::from_integer(i64::from(i == j));
            match inner_product(&rows[i], &rows[j]) {
                Ok(v) if v == expected => {}
                Ok(v) => failures.push(format!(
                    "row orthogonality: ⟨{}, {}⟩ = {v}, expected {expected}",
                    rows[i].name, rows[j].name
                )),
                Err(e) => failures.push(e.to_string()),
            }
        }
    }
    if rows.len() == classes.count() {
        for c in 0..classes.count() {
            for d in c..classes.count() {
                let terms: Vec<_> = rows.iter().map(|r| (&r.values[c], &r.values[d], 1)).collect();
                let sum = Cyclotomic::hermitian_sum(&terms);
                let expected = if c == d { (g.order() / classes.sizes[c]) as i64 } else { 0 };
                if sum != Cyclotomic::from_integer(expected) {
                    failures.push(format!(
                        "column orthogonality: classes of {} and {} give {sum}, expected {expected}",
                        g.label(classes.reps[c]),
                        g.label(classes.reps[d])
                    ));
                }
            }
        }
    }
    ValidationReport { failures }
}
