//! On-disk invariant cache keyed by content hash and library version.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use knotforge::invariants::InvariantReport;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub key: String,
    pub tool_version: String,
    pub value: InvariantReport,
}

pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    /// `KNOTFORGE_CACHE`, else `$XDG_CACHE_HOME/knotforge`, else `~/.cache/knotforge`.
    pub fn from_env() -> Option<Self> {
        let dir = match std::env::var_os("KNOTFORGE_CACHE") {
            Some(d) => PathBuf::from(d),
            None => std::env::var_os("XDG_CACHE_HOME")
                .map(PathBuf::from)
                .or_else(|| std::env::var_os("HOME").map(|h| Path::new(&h).join(".cache")))?
                .join("knotforge"),
        };
        Some(Self { dir })
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    /// A missing, unreadable or stale entry is a miss.
    pub fn get(&self, key: &str) -> Option<InvariantReport> {
        let text = fs::read_to_string(self.path(key)).ok()?;
        let e: CacheEntry = serde_json::from_str(&text).ok()?;
        (e.key == key && e.tool_version == knotforge::VERSION).then_some(e.value)
    }

    /// Write-temp-then-rename, so readers never see a partial entry.
    pub fn put(&self, key: &str, value: &InvariantReport) -> std::io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let entry = CacheEntry { key: key.to_string(), tool_version: knotforge::VERSION.to_string(), value: value.clone() };
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        tmp.write_all(serde_json::to_string(&entry)?.as_bytes())?;
        tmp.persist(self.path(key)).map_err(|e| e.error)?;
        Ok(())
    }
}

/// Key over the canonical JSON of whatever identifies the computation.
pub fn key_for<T: Serialize>(input: &T) -> String {
    let canonical = serde_json::to_value(input).expect("input serializes").to_string();
    let mut h = Sha256::new();
    h.update(knotforge::VERSION.as_bytes());
    h.update([0]);
    h.update(canonical.as_bytes());
    hex::encode(h.finalize())
}
