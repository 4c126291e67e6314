//! The `sgp` command line: `sgp <table|classify|audit|atlas> <family> <n|a..b>`.
//!
//! Exit codes: 0 success, 1 usage or I/O, 2 internal consistency, 3 table
//! validation, 4 discrepancies found under `--fail-on-discrepancy`.

pub mod atlas;
pub mod render;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};

use crate::character::{family_table, validate_table, TableView};
use crate::error::{Error, Result};
use crate::gelfand::{audit_bounded, GelfandAnalyzer};
use crate::group::{construct, FamilyKind, DEFAULT_MAX_ORDER};

pub use atlas::{atlas_files, write_atlas, AtlasFile, ManifestEntry, MANIFEST_FILE, SCHEMA_VERSION};
pub use render::{ClassificationView, Format};

pub const MAX_ORDER_ENV: &str = "SGP_MAX_ORDER";
pub const EXIT_DISCREPANCY: i32 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    Table,
    Classify,
    Audit,
    Atlas,
}

#[derive(Debug, Parser)]
#[command(
    name = "sgp",
    version,
    about = "Character tables and strong Gelfand subgroups of cyclic, dihedral and dicyclic groups"
)]
struct Args {
    command: Command,
    #[arg(value_parser = parse_family)]
    family: FamilyKind,
    /// A single n or an inclusive range a..b.
    #[arg(value_parser = parse_range)]
    range: Range,
    #[arg(long, default_value = "text", value_parser = parse_format)]
    format: Format,
    /// Output file, or output directory for `atlas` (default ./atlas).
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    fail_on_discrepancy: bool,
    /// Largest group order accepted; overrides SGP_MAX_ORDER.
    #[arg(long)]
    max_order: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Range(Vec<usize>);

fn parse_family(s: &str) -> std::result::Result<FamilyKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_format(s: &str) -> std::result::Result<Format, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_range(s: &str) -> std::result::Result<Range, String> {
    parse_ns(s).map(Range).map_err(|e| e.to_string())
}

/// `"n"` or inclusive `"a..b"` with `1 ≤ a ≤ b`.
pub fn parse_ns(s: &str) -> Result<Vec<usize>> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("not a positive integer: {t:?}")));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b)?),
        None => {
            let n = num(s)?;
            (n, n)
        }
    };
    if lo == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    if lo > hi {
        return Err(Error::InvalidParameter(format!("empty range {s}")));
    }
    Ok((lo..=hi).collect())
}

/// A fully resolved invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommandConfig {
    pub command: Command,
    pub family: FamilyKind,
    pub ns: Vec<usize>,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub fail_on_discrepancy: bool,
    pub max_order: usize,
}

impl CommandConfig {
    pub fn check_sizes(&self) -> Result<()> {
        for &n in &self.ns {
            let order = self.family.group_order(n).unwrap_or(usize::MAX);
            if order > self.max_order {
                return Err(Error::SizeLimit { order, bound: self.max_order });
            }
        }
        Ok(())
    }
}

fn max_order_from_env(flag: Option<usize>) -> Result<usize> {
    if let Some(m) = flag {
        return Ok(m);
    }
    match std::env::var(MAX_ORDER_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| Error::Parse(format!("{MAX_ORDER_ENV}={v:?} is not a positive integer"))),
        Err(_) => Ok(DEFAULT_MAX_ORDER),
    }
}

/// What a command produced: text for stdout (or `--out`) and an exit code.
struct Outcome {
    text: String,
    code: i32,
}

fn table(cfg: &CommandConfig) -> Result<Outcome> {
    let mut views = Vec::with_capacity(cfg.ns.len());
    for &n in &cfg.ns {
        let g = construct(&cfg.family.family(n))?;
        let t = family_table(&g)?;
        let report = validate_table(&t);
        if !report.passed() {
            return Err(Error::Validation(format!("{}: {}", g.name(), report.failures.join("; "))));
        }
        views.push(TableView::from(&t));
    }
    Ok(Outcome { text: render::tables(&views, cfg.format)?, code: 0 })
}

fn classify(cfg: &CommandConfig) -> Result<Outcome> {
    let mut views = Vec::with_capacity(cfg.ns.len());
    for &n in &cfg.ns {
        let g = construct(&cfg.family.family(n))?;
        let report = GelfandAnalyzer::new(&g)?.classify(cfg.max_order)?;
        views.push(ClassificationView { group: report.group, records: report.records });
    }
    Ok(Outcome { text: render::classifications(&views, cfg.format)?, code: 0 })
}

fn audit(cfg: &CommandConfig) -> Result<Outcome> {
    let report = audit_bounded(cfg.family, &cfg.ns, cfg.max_order)?;
    let code = if cfg.fail_on_discrepancy && report.has_discrepancies() { EXIT_DISCREPANCY } else { 0 };
    Ok(Outcome { text: render::audit(&report, cfg.format)?, code })
}

fn atlas(cfg: &CommandConfig) -> Result<Outcome> {
    let dir = cfg.out.clone().unwrap_or_else(|| PathBuf::from("atlas"));
    let manifest = write_atlas(cfg.family, &cfg.ns, &dir, cfg.max_order)?;
    let text = match cfg.format {
        Format::Json => serde_json::to_string_pretty(&manifest)? + "\n",
        _ => manifest.iter().map(|m| format!("{}  {}\n", m.sha256, m.file)).collect(),
    };
    Ok(Outcome { text, code: 0 })
}

pub fn execute(cfg: &CommandConfig, stdout: &mut dyn Write) -> Result<i32> {
    cfg.check_sizes()?;
    let outcome = match cfg.command {
        Command::Table => table(cfg)?,
        Command::Classify => classify(cfg)?,
        Command::Audit => audit(cfg)?,
        Command::Atlas => atlas(cfg)?,
    };
    match (&cfg.out, cfg.command) {
        (Some(path), c) if c != Command::Atlas => std::fs::write(path, &outcome.text)?,
        _ => stdout.write_all(outcome.text.as_bytes())?,
    }
    Ok(outcome.code)
}

/// Parses `args` (including the program name) into a config. `Ok(Err(text))`
/// means help or version output was requested.
pub fn parse_config<I, T>(args: I) -> Result<std::result::Result<CommandConfig, String>>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let parsed = match Args::try_parse_from(args) {
        Ok(a) => a,
        Err(e) => {
            use clap::error::ErrorKind::{DisplayHelp, DisplayVersion};
            return match e.kind() {
                DisplayHelp | DisplayVersion => Ok(Err(e.to_string())),
                _ => Err(Error::Parse(e.to_string().trim_end().to_string())),
            };
        }
    };
    Ok(Ok(CommandConfig {
        command: parsed.command,
        family: parsed.family,
        ns: parsed.range.0,
        format: parsed.format,
        out: parsed.out,
        fail_on_discrepancy: parsed.fail_on_discrepancy,
        max_order: max_order_from_env(parsed.max_order)?,
    }))
}

/// Runs the tool and returns its exit code; errors go to `stderr`.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let result = parse_config(args).and_then(|cfg| match cfg {
        Ok(cfg) => execute(&cfg, stdout),
        Err(help) => {
            stdout.write_all(help.as_bytes())?;
            Ok(0)
        }
    });
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "sgp: {e}");
            e.exit_code()
        }
    }
}
