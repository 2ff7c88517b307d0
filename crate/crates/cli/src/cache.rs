//! Append-only JSON-lines cache of multiplicity tables, keyed by the GCM
//! digest and the canonical reduced word of `w`.

use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use log::warn;
use psmooth_core::polyfrac::FracDoc;
use psmooth_core::{BigInt, Table, WeylGroup, Word};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};

/// Environment variable naming the default cache directory.
pub const CACHE_DIR_VAR: &str = "PSMOOTH_CACHE_DIR";
pub const CACHE_FILE: &str = "scan-cache.jsonl";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CachedValue {
    pub y: Word,
    pub value: FracDoc,
}

/// All multiplicities `e_{y,w}` for one `w`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub digest: String,
    pub w: Word,
    pub values: Vec<CachedValue>,
}

impl CacheEntry {
    pub fn from_table(g: &WeylGroup, t: &Table) -> Self {
        CacheEntry {
            digest: g.gcm().digest(),
            w: t.w().word().clone(),
            values: t
                .reports()
                .iter()
                .map(|r| CachedValue {
                    y: r.y.word().clone(),
                    value: r.value.to_doc(),
                })
                .collect(),
        }
    }

    pub fn to_table(&self, g: &WeylGroup) -> psmooth_core::Result<Table> {
        let values = self
            .values
            .iter()
            .map(|v| Ok((g.element_from_word(&v.y)?, v.value.to_frac::<BigInt>()?)))
            .collect::<psmooth_core::Result<Vec<_>>>()?;
        Table::from_values(g, &self.w, values)
    }
}

pub struct Cache {
    path: PathBuf,
    entries: HashMap<(String, Word), CacheEntry>,
}

impl Cache {
    /// Loads `path` if it exists. Lines that do not parse are skipped with a
    /// warning.
    pub fn open(path: &Path) -> CliResult<Self> {
        let mut entries = HashMap::new();
        match File::open(path) {
            Ok(f) => {
                for (n, line) in BufReader::new(f).lines().enumerate() {
                    let line = line.map_err(|e| CliError::io(path, e))?;
                    if line.trim().is_empty() {
                        continue;
                    }
                    match serde_json::from_str::<CacheEntry>(&line) {
                        Ok(e) => {
                            entries.insert((e.digest.clone(), e.w.clone()), e);
                        }
                        Err(err) => warn!("{}:{}: skipping corrupt cache line ({err})", path.display(), n + 1),
                    }
                }
            }
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => {}
            Err(e) => return Err(CliError::io(path, e)),
        }
        Ok(Cache {
            path: path.to_path_buf(),
            entries,
        })
    }

    /// The cache file under `$PSMOOTH_CACHE_DIR`, if the variable is set.
    pub fn default_path() -> Option<PathBuf> {
        std::env::var_os(CACHE_DIR_VAR).map(|d| PathBuf::from(d).join(CACHE_FILE))
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, digest: &str, w: &Word) -> Option<&CacheEntry> {
        self.entries.get(&(digest.to_string(), w.clone()))
    }

    /// Appends entries in the given order and records them in memory.
    pub fn append(&mut self, new: Vec<CacheEntry>) -> CliResult<()> {
        if new.is_empty() {
            return Ok(());
        }
        if let Some(dir) = self.path.parent().filter(|d| !d.as_os_str().is_empty()) {
            std::fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
        }
        let mut f = OpenOptions::new()
            .create(true)
            .append(true)
            .open(&self.path)
            .map_err(|e| CliError::io(&self.path, e))?;
        let mut buf = String::new();
        for e in &new {
            buf.push_str(&serde_json::to_string(e).expect("entries always serialize"));
            buf.push('\n');
        }
        f.write_all(buf.as_bytes()).map_err(|e| CliError::io(&self.path, e))?;
        for e in new {
            self.entries.insert((e.digest.clone(), e.w.clone()), e);
        }
        Ok(())
    }
}
