use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{CharacterTable, ClassFunction, Provenance};
use crate::cyclo::Cyclotomic;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// Serializable rendering of a character table: class representatives as
/// column labels, one row per irreducible, values as canonical cyclotomic
/// strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableView {
    pub group: String,
    pub classes: Vec<String>,
    pub rows: Vec<RowView>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowView {
    pub name: String,
    pub values: Vec<String>,
}

impl From<&CharacterTable> for TableView {
    fn from(t: &CharacterTable) -> Self {
        let g = t.group();
        TableView {
            group: g.name(),
            classes: g.classes().reps.iter().map(|&x| g.label(x).to_string()).collect(),
            rows: t
                .irreducibles()
                .iter()
                .map(|r| RowView {
                    name: r.name().to_string(),
                    values: r.values().iter().map(Cyclotomic::to_string).collect(),
                })
                .collect(),
        }
    }
}

impl TableView {
    /// Parses the rendering back onto `g`, checking the group and column labels.
    pub fn to_table(&self, g: &Arc<FiniteGroup>) -> Result<CharacterTable> {
        if self.group != g.name() {
            return Err(Error::Domain(format!("table is for {}, not {}", self.group, g.name())));
        }
        let classes = g.classes();
        if self.classes.len() != classes.count() {
            return Err(Error::Domain(format!("{} columns for {} classes", self.classes.len(), classes.count())));
        }
        for (label, &rep) in self.classes.iter().zip(&classes.reps) {
            if g.parse_label(label)? != rep {
                return Err(Error::Domain(format!("column {label} is not a class representative of {}", g.name())));
            }
        }
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let values = row.values.iter().map(|v| v.parse()).collect::<Result<Vec<Cyclotomic>>>()?;
                ClassFunction::new(Arc::clone(g), values, row.name.clone())
            })
            .collect::<Result<Vec<_>>>()?;
        CharacterTable::new(Arc::clone(g), rows, Provenance::ClosedForm)
    }

    /// Aligned text layout: a header of class labels, then one row per character.
    pub fn to_text(&self) -> String {
        let mut widths: Vec<usize> = self.classes.iter().map(|c| c.chars().count()).collect();
        for row in &self.rows {
            for (w, v) in widths.iter_mut().zip(&row.values) {
                *w = (*w).max(v.chars().count());
            }
        }
        let name_width = self
            .rows
            .iter()
            .map(|r| r.name.chars().count())
            .chain(std::iter::once(self.group.chars().count()))
            .max()
            .unwrap_or(0);
        let pad = |s: &str, w: usize| format!("{s}{}", " ".repeat(w.saturating_sub(s.chars().count())));
        let line = |head: &str, cells: &[String]| {
            let body: Vec<String> = cells.iter().zip(&widths).map(|(c, &w)| pad(c, w)).collect();
            format!("{} | {}", pad(head, name_width), body.join("  ")).trim_end().to_string()
        };
        let mut out = vec![line(&self.group, &self.classes)];
        let rule_len = out[0].chars().count();
        out.push("-".repeat(rule_len));
        out.extend(self.rows.iter().map(|r| line(&r.name, &r.values)));
        out.join("\n") + "\n"
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header = vec!["character".to_string()];
        header.extend(self.classes.iter().cloned());
        w.write_record(&header).map_err(csv_err)?;
        for row in &self.rows {
            let mut rec = vec![row.name.clone()];
            rec.extend(row.values.iter().cloned());
            w.write_record(&rec).map_err(csv_err)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }
}

pub(crate) fn csv_err(e: csv::Error) -> Error {
    Error::Io(std::io::Error::other(e))
}
