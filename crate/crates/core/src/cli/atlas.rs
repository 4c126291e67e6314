use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::character::{family_table, validate_table, TableView};
use crate::error::{Error, Result};
use crate::gelfand::{audit_bounded, AuditEntry};
use crate::group::{construct, FamilyKind};

pub const SCHEMA_VERSION: u32 = 1;
pub const MANIFEST_FILE: &str = "manifest.json";

/// One persisted `(family, n)` record: the audit entry, the group name and the
/// rendered character table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtlasFile {
    pub schema_version: u32,
    pub group: String,
    #[serde(flatten)]
    pub entry: AuditEntry,
    pub table: TableView,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ManifestEntry {
    pub file: String,
    pub sha256: String,
}

impl AtlasFile {
    pub fn file_name(&self) -> String {
        file_name(self.entry.family, self.entry.n)
    }

    /// Pretty JSON with a trailing newline; the exact bytes written to disk.
    pub fn render(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)? + "\n")
    }

    pub fn parse(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

pub fn file_name(kind: FamilyKind, n: usize) -> String {
    format!("{kind}_{n}.json")
}

pub fn atlas_files(kind: FamilyKind, ns: &[usize], max_order: usize) -> Result<Vec<AtlasFile>> {
    let report = audit_bounded(kind, ns, max_order)?;
    report
        .entries
        .into_iter()
        .map(|entry| {
            let g = construct(&kind.family(entry.n))?;
            let table = family_table(&g)?;
            let check = validate_table(&table);
            if !check.passed() {
                return Err(Error::Validation(format!("{}: {}", g.name(), check.failures.join("; "))));
            }
            Ok(AtlasFile { schema_version: SCHEMA_VERSION, group: g.name(), entry, table: TableView::from(&table) })
        })
        .collect()
}

/// Writes one file per `n` plus `manifest.json` into `dir`, returning the manifest.
pub fn write_atlas(kind: FamilyKind, ns: &[usize], dir: &Path, max_order: usize) -> Result<Vec<ManifestEntry>> {
    let files = atlas_files(kind, ns, max_order)?;
    fs::create_dir_all(dir)?;
    let mut manifest = Vec::with_capacity(files.len());
    for f in &files {
        let text = f.render()?;
        let name = f.file_name();
        fs::write(dir.join(&name), &text)?;
        manifest.push(ManifestEntry { file: name, sha256: hex::encode(Sha256::digest(text.as_bytes())) });
    }
    fs::write(dir.join(MANIFEST_FILE), serde_json::to_string_pretty(&manifest)? + "\n")?;
    Ok(manifest)
}
