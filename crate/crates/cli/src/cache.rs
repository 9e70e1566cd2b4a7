//! Content-addressed store of computed grid cells.
//!
//! Entries live under `<dir>/<code version>/<key hash>.json`, so a change of
//! algorithm revision or crate version starts a fresh namespace. Writes go
//! to a temporary file in the same directory and are renamed into place,
//! which keeps concurrent readers from ever seeing half a file.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicU64, Ordering};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use vdw_core::{FieldSpec, LefschetzReport, Property};

use crate::grid::TableCell;

/// Environment variable naming the cache directory.
pub const CACHE_ENV: &str = "VDW_CACHE_DIR";

/// Bumped whenever a change could alter a stored report.
const ALGORITHM_REVISION: u32 = 1;

pub fn code_version() -> String {
    let mut h = Sha256::new();
    h.update(format!(
        "vdw-core {} schema {} revision {}",
        env!("CARGO_PKG_VERSION"),
        vdw_core::lefschetz::SCHEMA_VERSION,
        ALGORITHM_REVISION
    ));
    hex::encode(&h.finalize()[..8])
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CacheKey {
    pub n: u32,
    pub k: u32,
    pub property: Property,
    pub field: FieldSpec,
    pub shortcuts: bool,
    pub cone_reduction: bool,
}

impl CacheKey {
    fn digest(&self) -> String {
        let json = serde_json::to_string(self).expect("key serializes");
        hex::encode(Sha256::digest(json.as_bytes()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CachedCell {
    pub code_version: String,
    pub key: CacheKey,
    pub cell: TableCell,
    pub report: LefschetzReport,
}

#[derive(Clone, Debug)]
pub struct RunCache {
    root: PathBuf,
}

static TMP_COUNTER: AtomicU64 = AtomicU64::new(0);

impl RunCache {
    pub fn new(dir: impl Into<PathBuf>) -> io::Result<Self> {
        let root = dir.into().join(code_version());
        fs::create_dir_all(&root)?;
        Ok(RunCache { root })
    }

    /// Cache rooted at `$VDW_CACHE_DIR`, if set and non-empty.
    pub fn from_env() -> io::Result<Option<Self>> {
        match std::env::var_os(CACHE_ENV) {
            Some(d) if !d.is_empty() => RunCache::new(d).map(Some),
            _ => Ok(None),
        }
    }

    pub fn root(&self) -> &Path {
        &self.root
    }

    fn path(&self, key: &CacheKey) -> PathBuf {
        self.root.join(format!("{}.json", key.digest()))
    }

    /// A stored entry for `key`; unreadable or mismatching files count as misses.
    pub fn get(&self, key: &CacheKey) -> Option<CachedCell> {
        let text = fs::read_to_string(self.path(key)).ok()?;
        let entry: CachedCell = serde_json::from_str(&text).ok()?;
        (entry.key == *key && entry.code_version == code_version()).then_some(entry)
    }

    pub fn put(&self, entry: &CachedCell) -> io::Result<()> {
        let target = self.path(&entry.key);
        let tmp = self.root.join(format!(
            ".{}.{}.{}.tmp",
            entry.key.digest(),
            std::process::id(),
            TMP_COUNTER.fetch_add(1, Ordering::Relaxed)
        ));
        {
            let mut f = fs::File::create(&tmp)?;
            f.write_all(serde_json::to_string_pretty(entry).expect("entry serializes").as_bytes())?;
            f.sync_all()?;
        }
        fs::rename(&tmp, &target).inspect_err(|_| {
            let _ = fs::remove_file(&tmp);
        })
    }
}
