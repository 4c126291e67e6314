//! Writes a JSON atlas with a sha256 manifest, then reads one file back.
//!
//! Run with `cargo run --example atlas_export -- /tmp/atlas`.

use std::path::PathBuf;

use strong_gelfand::cli::atlas::{write_atlas, AtlasFile};
use strong_gelfand::group::{FamilyKind, DEFAULT_MAX_ORDER};
use strong_gelfand::Result;

fn main() -> Result<()> {
    let dir = std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(|| std::env::temp_dir().join("sgp-atlas"));
    let ns: Vec<usize> = (2..=6).collect();
    let manifest = write_atlas(FamilyKind::Dicyclic, &ns, &dir, DEFAULT_MAX_ORDER)?;
    for entry in &manifest {
        println!("{}  {}", entry.sha256, entry.file);
    }

    let first = dir.join(&manifest[0].file);
    let text = std::fs::read_to_string(&first)?;
    let file = AtlasFile::parse(&text)?;
    let flagged: Vec<String> = file
        .entry
        .subgroups
        .iter()
        .filter(|s| !s.strong_gelfand)
        .map(|s| format!("⟨{}⟩", s.generators.join(", ")))
        .collect();
    println!("{} (schema {}): not strong Gelfand: {}", file.group, file.schema_version, flagged.join(" "));
    Ok(())
}
