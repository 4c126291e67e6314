use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{predict, GelfandAnalyzer, Witness};
use crate::error::{Error, Result};
use crate::group::{construct, FamilyKind, DEFAULT_MAX_ORDER};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditedSubgroup {
    pub desc: String,
    pub generators: Vec<String>,
    pub order: usize,
    pub index: usize,
    pub gelfand: bool,
    pub strong_gelfand: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    pub predicted_strong_gelfand: bool,
}

/// A subgroup whose computed verdict differs from the predicted one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Discrepancy {
    pub desc: String,
    pub generators: Vec<String>,
    pub order: usize,
    pub predicted: bool,
    pub computed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub agree: usize,
    pub disagree: usize,
}

/// Computed versus predicted verdicts for every subgroup of one group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditEntry {
    pub family: FamilyKind,
    pub n: usize,
    pub subgroups: Vec<AuditedSubgroup>,
    pub discrepancies: Vec<Discrepancy>,
    pub summary: Summary,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditReport {
    pub entries: Vec<AuditEntry>,
}

impl AuditReport {
    pub fn summary(&self) -> Summary {
        self.entries.iter().fold(Summary::default(), |acc, e| Summary {
            total: acc.total + e.summary.total,
            agree: acc.agree + e.summary.agree,
            disagree: acc.disagree + e.summary.disagree,
        })
    }

    pub fn has_discrepancies(&self) -> bool {
        self.entries.iter().any(|e| !e.discrepancies.is_empty())
    }
}

pub fn audit(kind: FamilyKind, ns: &[usize]) -> Result<AuditReport> {
    audit_bounded(kind, ns, DEFAULT_MAX_ORDER)
}

/// Audits each `n` independently, in parallel; entries keep the order of `ns`.
pub fn audit_bounded(kind: FamilyKind, ns: &[usize], max_order: usize) -> Result<AuditReport> {
    for &n in ns {
        match kind.group_order(n) {
            Some(order) if order <= max_order => {}
            Some(order) => return Err(Error::SizeLimit { order, bound: max_order }),
            None => return Err(Error::SizeLimit { order: usize::MAX, bound: max_order }),
        }
    }
    let entries = ns.par_iter().map(|&n| audit_one(kind, n, max_order)).collect::<Result<Vec<_>>>()?;
    Ok(AuditReport { entries })
}

fn audit_one(kind: FamilyKind, n: usize, max_order: usize) -> Result<AuditEntry> {
    let family = kind.family(n);
    let g = construct(&family)?;
    let prediction = predict(&family)?;
    let analyzer = GelfandAnalyzer::new(&g)?;
    let report = analyzer.classify(max_order)?;

    let mut subgroups = Vec::with_capacity(report.records.len());
    let mut discrepancies = Vec::new();
    for (h, rec) in report.subgroups.iter().zip(report.records) {
        if let Some(w) = &rec.witness {
            analyzer.verify_witness(h, w)?;
        }
        let predicted = prediction.predicts_strong_gelfand(h)?;
        if predicted != rec.strong_gelfand {
            discrepancies.push(Discrepancy {
                desc: rec.desc.clone(),
                generators: rec.generators.clone(),
                order: rec.order,
                predicted,
                computed: rec.strong_gelfand,
                witness: rec.witness.clone(),
            });
        }
        subgroups.push(AuditedSubgroup {
            desc: rec.desc,
            generators: rec.generators,
            order: rec.order,
            index: rec.index,
            gelfand: rec.gelfand,
            strong_gelfand: rec.strong_gelfand,
            witness: rec.witness,
            predicted_strong_gelfand: predicted,
        });
    }
    let total = subgroups.len();
    let summary = Summary { total, agree: total - discrepancies.len(), disagree: discrepancies.len() };
    Ok(AuditEntry { family: kind, n, subgroups, discrepancies, summary })
}
