//! Multiplicity matrices `⟨ψ↑G, χ⟩` and the Gelfand / strong Gelfand decisions
//! built on them.
//!
//! Every matrix is computed twice, once by inducing each `ψ ∈ Irr(H)` and
//! decomposing, once by restricting each `χ ∈ Irr(G)` and pairing; the two must
//! agree entry for entry or the computation is rejected.

mod audit;
mod predict;

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::character::{decompose, family_table, induce, inner_product, restrict, validate_table, CharacterTable};
use crate::cyclo::Cyclotomic;
use crate::error::{Error, Result};
use crate::group::{all_subgroups_bounded, Family, FiniteGroup, Subgroup, DEFAULT_MAX_ORDER};

pub use audit::{audit, audit_bounded, AuditEntry, AuditReport, AuditedSubgroup, Discrepancy, Summary};
pub use predict::{predict, PredictionSource, TheoremPrediction};

/// `(ψ, χ, ⟨ψ↑G, χ⟩)` with multiplicity at least 2.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub psi: String,
    pub chi: String,
    pub mult: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityMatrix {
    pub group: String,
    pub subgroup: String,
    /// Names of `Irr(H)`.
    pub rows: Vec<String>,
    /// Names of `Irr(G)`.
    pub cols: Vec<String>,
    pub row_degrees: Vec<u64>,
    pub col_degrees: Vec<u64>,
    pub entries: Vec<Vec<u64>>,
    trivial_row: usize,
}

impl MultiplicityMatrix {
    pub fn entry(&self, psi: usize, chi: usize) -> u64 {
        self.entries[psi][chi]
    }

    /// Row of the trivial character of `H`.
    pub fn trivial_row(&self) -> &[u64] {
        &self.entries[self.trivial_row]
    }

    pub fn is_gelfand(&self) -> bool {
        self.trivial_row().iter().all(|&m| m <= 1)
    }

    pub fn is_strong_gelfand(&self) -> bool {
        self.witness().is_none()
    }

    /// First entry above 1 in row-major order.
    pub fn witness(&self) -> Option<Witness> {
        self.entries.iter().enumerate().find_map(|(i, row)| {
            row.iter().position(|&m| m >= 2).map(|j| Witness {
                psi: self.rows[i].clone(),
                chi: self.cols[j].clone(),
                mult: row[j],
            })
        })
    }
}

/// Strong Gelfand verdict with its witness when it fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrongGelfand {
    pub holds: bool,
    pub witness: Option<Witness>,
}

/// Per-group analysis context: the validated table of `G`, validated tables
/// of subgroup models by family, and multiplicity matrices keyed by subgroup
/// member set.
pub struct GelfandAnalyzer {
    group: Arc<FiniteGroup>,
    table: CharacterTable,
    sub_tables: Mutex<HashMap<Family, Arc<CharacterTable>>>,
    cache: Mutex<HashMap<Vec<usize>, Arc<MultiplicityMatrix>>>,
}

fn validated_table(g: &Arc<FiniteGroup>) -> Result<CharacterTable> {
    let table = family_table(g)?;
    let report = validate_table(&table);
    if !report.passed() {
        return Err(Error::Validation(format!("{}: {}", g.name(), report.failures.join("; "))));
    }
    Ok(table)
}

fn certified(v: &Cyclotomic, what: impl FnOnce() -> String) -> Result<u64> {
    v.as_rational_integer()
        .and_then(|m| u64::try_from(m).ok())
        .ok_or_else(|| Error::Integrality(format!("{} = {v} is not a nonnegative integer", what())))
}

impl GelfandAnalyzer {
    pub fn new(group: &Arc<FiniteGroup>) -> Result<Self> {
        Ok(GelfandAnalyzer {
            group: Arc::clone(group),
            table: validated_table(group)?,
            sub_tables: Mutex::new(HashMap::new()),
            cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn table(&self) -> &CharacterTable {
        &self.table
    }

    fn check_parent(&self, h: &Subgroup) -> Result<()> {
        if *h.parent() != self.group {
            return Err(Error::Domain(format!("{} is not a subgroup of {}", h.descriptor(), self.group.name())));
        }
        Ok(())
    }

    pub fn multiplicity_matrix(&self, h: &Subgroup) -> Result<Arc<MultiplicityMatrix>> {
        self.check_parent(h)?;
        if let Some(m) = self.cache.lock().expect("cache poisoned").get(h.members()) {
            return Ok(Arc::clone(m));
        }
        let m = Arc::new(self.compute_matrix(h)?);
        self.cache.lock().expect("cache poisoned").insert(h.members().to_vec(), Arc::clone(&m));
        Ok(m)
    }

    /// Validated table of a subgroup model; models of one family share it,
    /// since class functions compare groups by family.
    fn sub_table(&self, model: &Arc<FiniteGroup>) -> Result<Arc<CharacterTable>> {
        if let Some(t) = self.sub_tables.lock().expect("cache poisoned").get(model.family()) {
            return Ok(Arc::clone(t));
        }
        let t = Arc::new(validated_table(model)?);
        self.sub_tables.lock().expect("cache poisoned").insert(model.family().clone(), Arc::clone(&t));
        Ok(t)
    }

    fn compute_matrix(&self, h: &Subgroup) -> Result<MultiplicityMatrix> {
        let model = h.model()?;
        let sub_table = self.sub_table(&model.group)?;
        let psis = sub_table.irreducibles();
        let chis = self.table.irreducibles();

        let induced: Vec<Vec<u64>> =
            psis.iter().map(|psi| decompose(&induce(psi, h)?, &self.table)).collect::<Result<_>>()?;

        let mut restricted = vec![vec![0u64; chis.len()]; psis.len()];
        for (j, chi) in chis.iter().enumerate() {
            let down = restrict(chi, h)?;
            for (i, psi) in psis.iter().enumerate() {
                restricted[i][j] =
                    certified(&inner_product(psi, &down)?, || format!("⟨{}, {}⟩", psi.name(), down.name()))?;
            }
        }
        if induced != restricted {
            return Err(Error::InternalConsistency(format!(
                "({}, {}): induced and restricted multiplicities differ",
                self.group.name(),
                h.descriptor()
            )));
        }

        let row_degrees = sub_table.degrees();
        let col_degrees = self.table.degrees();
        for (i, row) in induced.iter().enumerate() {
            let total: u64 = row.iter().zip(&col_degrees).map(|(m, d)| m * d).sum();
            if total != h.index() as u64 * row_degrees[i] {
                return Err(Error::InternalConsistency(format!(
                    "({}, {}): row {} sums to degree {total}, expected {}",
                    self.group.name(),
                    h.descriptor(),
                    psis[i].name(),
                    h.index() as u64 * row_degrees[i]
                )));
            }
        }
        let trivial_row = sub_table
            .trivial_index()
            .ok_or_else(|| Error::InternalConsistency(format!("table of {} has no trivial row", model.group.name())))?;
        Ok(MultiplicityMatrix {
            group: self.group.name(),
            subgroup: h.descriptor(),
            rows: sub_table.names(),
            cols: self.table.names(),
            row_degrees,
            col_degrees,
            entries: induced,
            trivial_row,
        })
    }

    pub fn is_gelfand(&self, h: &Subgroup) -> Result<bool> {
        Ok(self.multiplicity_matrix(h)?.is_gelfand())
    }

    pub fn is_strong_gelfand(&self, h: &Subgroup) -> Result<StrongGelfand> {
        let witness = self.multiplicity_matrix(h)?.witness();
        Ok(StrongGelfand { holds: witness.is_none(), witness })
    }

    /// Recomputes one witness entry from scratch along both paths.
    pub fn verify_witness(&self, h: &Subgroup, witness: &Witness) -> Result<()> {
        self.check_parent(h)?;
        let model = h.model()?;
        let sub_table = self.sub_table(&model.group)?;
        let fail = |m: String| {
            Error::InternalConsistency(format!("witness for {} in {}: {m}", h.descriptor(), self.group.name()))
        };
        let psi = sub_table.row(&witness.psi).ok_or_else(|| fail(format!("no character {}", witness.psi)))?;
        let chi = self.table.row(&witness.chi).ok_or_else(|| fail(format!("no character {}", witness.chi)))?;
        let up = certified(&inner_product(&induce(psi, h)?, chi)?, || "induced pairing".into())?;
        let down = certified(&inner_product(psi, &restrict(chi, h)?)?, || "restricted pairing".into())?;
        if up != witness.mult || down != witness.mult || witness.mult < 2 {
            return Err(fail(format!("recorded {}, induced path {up}, restricted path {down}", witness.mult)));
        }
        Ok(())
    }

    pub fn classify(&self, max_order: usize) -> Result<ClassificationReport> {
        let subgroups = all_subgroups_bounded(&self.group, max_order)?;
        let records = subgroups
            .par_iter()
            .map(|h| {
                let m = self.multiplicity_matrix(h)?;
                Ok(SubgroupRecord {
                    desc: h.descriptor(),
                    generators: h.generator_labels(),
                    order: h.order(),
                    index: h.index(),
                    gelfand: m.is_gelfand(),
                    strong_gelfand: m.is_strong_gelfand(),
                    witness: m.witness(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ClassificationReport { group: self.group.name(), subgroups, records })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgroupRecord {
    pub desc: String,
    pub generators: Vec<String>,
    pub order: usize,
    pub index: usize,
    pub gelfand: bool,
    pub strong_gelfand: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

/// One record per subgroup, in the order of [`all_subgroups`](crate::group::all_subgroups).
#[derive(Clone, Debug)]
pub struct ClassificationReport {
    pub group: String,
    pub subgroups: Vec<Subgroup>,
    pub records: Vec<SubgroupRecord>,
}

pub fn multiplicity_matrix(h: &Subgroup) -> Result<MultiplicityMatrix> {
    let analyzer = GelfandAnalyzer::new(h.parent())?;
    let m = analyzer.multiplicity_matrix(h)?;
    Ok((*m).clone())
}

pub fn is_gelfand(h: &Subgroup) -> Result<bool> {
    GelfandAnalyzer::new(h.parent())?.is_gelfand(h)
}

pub fn is_strong_gelfand(h: &Subgroup) -> Result<StrongGelfand> {
    GelfandAnalyzer::new(h.parent())?.is_strong_gelfand(h)
}

pub fn classify_subgroups(g: &Arc<FiniteGroup>) -> Result<ClassificationReport> {
    GelfandAnalyzer::new(g)?.classify(DEFAULT_MAX_ORDER)
}
