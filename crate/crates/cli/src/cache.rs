//! On-disk cache for expensive reports, keyed by instance hash and the
//! budget-independent operation parameters. Entries embed a schema version;
//! entries written by an incompatible build are ignored and overwritten.

use std::fs;
use std::path::{Path, PathBuf};

pub const SCHEMA_VERSION: u64 = 1;

pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn open(dir: &Path) -> std::io::Result<Cache> {
        fs::create_dir_all(dir)?;
        Ok(Cache {
            dir: dir.to_path_buf(),
        })
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    pub fn load(&self, key: &str) -> Option<serde_json::Value> {
        let text = fs::read_to_string(self.path(key)).ok()?;
        let entry: serde_json::Value = serde_json::from_str(&text).ok()?;
        if entry.get("schema")?.as_u64()? != SCHEMA_VERSION {
            return None;
        }
        entry.get("report").cloned()
    }

    pub fn store(&self, key: &str, report: &serde_json::Value) {
        let entry = serde_json::json!({ "schema": SCHEMA_VERSION, "report": report });
        // cache writes are best-effort; results were already computed
        let _ = fs::write(self.path(key), entry.to_string());
    }
}

/// Builds a deterministic cache key from the operation name, the instance
/// hash, and the listed parameters.
pub fn cache_key(op: &str, instance_hash: u64, params: &[(&str, String)]) -> String {
    let mut key = format!("{op}-{instance_hash:016x}");
    for (name, value) in params {
        key.push_str(&format!("-{name}{value}"));
    }
    key
}
