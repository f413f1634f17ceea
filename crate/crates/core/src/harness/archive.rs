use std::fs;
use std::path::{Path, PathBuf};

use serde_json::Value;
use sha2::{Digest, Sha256};

use super::report::VerificationReport;
use crate::error::{Error, Result};

/// `<claim_id>-<first 16 hex digits of sha256(record)>.json`.
pub fn record_file_name(record: &Value) -> String {
    let id = record.get("claim_id").and_then(Value::as_str).unwrap_or("unknown");
    let digest = Sha256::digest(record.to_string().as_bytes());
    format!("{id}-{}.json", &hex::encode(digest)[..16])
}

/// Writes every counterexample of `report` into `dir`, creating it if needed.
/// Returns the written paths in report order; identical records map to the
/// same file.
pub fn archive_report(dir: &Path, report: &VerificationReport) -> Result<Vec<PathBuf>> {
    fs::create_dir_all(dir)?;
    report
        .counterexamples
        .iter()
        .map(|rec| {
            let path = dir.join(record_file_name(rec));
            let text = serde_json::to_string_pretty(rec).map_err(|e| Error::Format(e.to_string()))?;
            fs::write(&path, text + "\n")?;
            Ok(path)
        })
        .collect()
}

pub fn load_record(path: &Path) -> Result<Value> {
    let text = fs::read_to_string(path)?;
    serde_json::from_str(&text).map_err(|e| Error::Format(e.to_string()))
}

/// All `.json` records in `dir`, sorted by file name.
pub fn load_archive(dir: &Path) -> Result<Vec<(PathBuf, Value)>> {
    let mut paths: Vec<PathBuf> = fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    paths.into_iter().map(|p| load_record(&p).map(|v| (p, v))).collect()
}
