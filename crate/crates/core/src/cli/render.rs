//! Text, JSON and CSV renderings of tables, classifications and audits.

use serde::Serialize;

use crate::character::render::csv_err;
use crate::character::TableView;
use crate::error::Result;
use crate::gelfand::{AuditReport, SubgroupRecord, Witness};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

impl std::str::FromStr for Format {
    type Err = crate::error::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(crate::error::Error::Parse(format!("unknown format {other:?}"))),
        }
    }
}

/// Classification of one group as rendered by `sgp classify`.
#[derive(Clone, Debug, Serialize)]
pub struct ClassificationView {
    pub group: String,
    pub records: Vec<SubgroupRecord>,
}

fn json<T: Serialize>(items: &[T]) -> Result<String> {
    let text = match items {
        [one] => serde_json::to_string_pretty(one)?,
        many => serde_json::to_string_pretty(many)?,
    };
    Ok(text + "\n")
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn witness_text(w: &Option<Witness>) -> String {
    w.as_ref().map_or_else(String::new, |w| format!("witness ({}, {}, {})", w.psi, w.chi, w.mult))
}

fn witness_cells(w: &Option<Witness>) -> [String; 3] {
    match w {
        Some(w) => [w.psi.clone(), w.chi.clone(), w.mult.to_string()],
        None => Default::default(),
    }
}

fn span(gens: &[String]) -> String {
    format!("⟨{}⟩", gens.join(", "))
}

/// Left-aligns every column to its widest cell and trims trailing blanks.
fn align(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> =
        (0..cols).map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0)).collect();
    let mut out = String::new();
    for row in rows {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(cell, &w)| format!("{cell}{}", " ".repeat(w - cell.chars().count())))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

fn csv_string(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).map_err(csv_err)?;
    for row in rows {
        w.write_record(&row).map_err(csv_err)?;
    }
    let bytes = w.into_inner().map_err(|e| crate::error::Error::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub fn tables(views: &[TableView], format: Format) -> Result<String> {
    match format {
        Format::Json => json(views),
        Format::Text => Ok(views.iter().map(TableView::to_text).collect::<Vec<_>>().join("\n")),
        Format::Csv => Ok(views.iter().map(TableView::to_csv).collect::<Result<Vec<_>>>()?.join("\n")),
    }
}

/// One text line per subgroup, prefixed by the group name.
pub fn classifications(views: &[ClassificationView], format: Format) -> Result<String> {
    let rows = views.iter().flat_map(|v| v.records.iter().map(move |r| (v.group.as_str(), r)));
    match format {
        Format::Json => json(views),
        Format::Text => Ok(align(
            &rows
                .map(|(g, r)| {
                    vec![
                        g.to_string(),
                        r.desc.clone(),
                        span(&r.generators),
                        format!("order {}", r.order),
                        format!("index {}", r.index),
                        format!("gelfand {}", yes_no(r.gelfand)),
                        format!("strong {}", yes_no(r.strong_gelfand)),
                        witness_text(&r.witness),
                    ]
                })
                .collect::<Vec<_>>(),
        )),
        Format::Csv => csv_string(
            &[
                "group",
                "desc",
                "generators",
                "order",
                "index",
                "gelfand",
                "strong_gelfand",
                "witness_psi",
                "witness_chi",
                "witness_mult",
            ],
            rows.map(|(g, r)| {
                let mut row = vec![
                    g.to_string(),
                    r.desc.clone(),
                    r.generators.join(" "),
                    r.order.to_string(),
                    r.index.to_string(),
                    r.gelfand.to_string(),
                    r.strong_gelfand.to_string(),
                ];
                row.extend(witness_cells(&r.witness));
                row
            }),
        ),
    }
}

pub fn audit(report: &AuditReport, format: Format) -> Result<String> {
    match format {
        Format::Json => Ok(serde_json::to_string_pretty(&serde_json::json!({
            "entries": report.entries,
            "summary": report.summary(),
        }))? + "\n"),
        Format::Text => {
            let mut rows = vec![["family", "n", "subgroups", "agree", "disagree"].map(String::from).to_vec()];
            for e in &report.entries {
                rows.push(vec![
                    e.family.to_string(),
                    e.n.to_string(),
                    e.summary.total.to_string(),
                    e.summary.agree.to_string(),
                    e.summary.disagree.to_string(),
                ]);
            }
            let s = report.summary();
            rows.push(vec![
                "total".into(),
                String::new(),
                s.total.to_string(),
                s.agree.to_string(),
                s.disagree.to_string(),
            ]);
            let mut out = align(&rows);
            let details: Vec<Vec<String>> = report
                .entries
                .iter()
                .flat_map(|e| {
                    e.discrepancies.iter().map(move |d| {
                        vec![
                            format!("{} n={}", e.family, e.n),
                            d.desc.clone(),
                            span(&d.generators),
                            format!("order {}", d.order),
                            format!("predicted {}", if d.predicted { "SGP" } else { "not SGP" }),
                            format!("computed {}", if d.computed { "SGP" } else { "not SGP" }),
                            witness_text(&d.witness),
                        ]
                    })
                })
                .collect();
            if details.is_empty() {
                out.push_str("\nno discrepancies\n");
            } else {
                out.push_str("\ndiscrepancies:\n");
                out.push_str(&align(&details));
            }
            Ok(out)
        }
        Format::Csv => csv_string(
            &[
                "family",
                "n",
                "desc",
                "generators",
                "order",
                "index",
                "gelfand",
                "strong_gelfand",
                "predicted_strong_gelfand",
                "agree",
                "witness_psi",
                "witness_chi",
                "witness_mult",
            ],
            report.entries.iter().flat_map(|e| {
                e.subgroups.iter().map(move |s| {
                    let mut row = vec![
                        e.family.to_string(),
                        e.n.to_string(),
                        s.desc.clone(),
                        s.generators.join(" "),
                        s.order.to_string(),
                        s.index.to_string(),
                        s.gelfand.to_string(),
                        s.strong_gelfand.to_string(),
                        s.predicted_strong_gelfand.to_string(),
                        (s.predicted_strong_gelfand == s.strong_gelfand).to_string(),
                    ];
                    row.extend(witness_cells(&s.witness));
                    row
                })
            }),
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn align_pads_columns() {
        let rows = vec![vec!["a".to_string(), "bb".into()], vec!["ccc".into(), "d".into()]];
        assert_eq!(align(&rows), "a    bb\nccc  d\n");
    }

    #[test]
    fn formats_parse() {
        assert_eq!("csv".parse::<Format>().unwrap(), Format::Csv);
        assert!("xml".parse::<Format>().is_err());
    }
}
