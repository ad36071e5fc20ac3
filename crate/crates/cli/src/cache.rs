//! Content-addressed on-disk store of count tables.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use colpart::{count_admissible, CountTable, Result as CoreResult, WeightVector};
use num_bigint::BigUint;
use sha2::{Digest, Sha256};
use tempfile::NamedTempFile;

/// Bump when the counting algorithm changes so stale tables are ignored.
pub const ALGORITHM_VERSION: &str = "colpart-count-v1";

#[derive(Debug, Clone)]
pub struct CountCache {
    dir: PathBuf,
}

impl CountCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Self { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, bracket: &[u32], n_max: usize) -> PathBuf {
        let digest = Sha256::digest(header(bracket, n_max).as_bytes());
        self.dir.join(format!("{}.table", hex::encode(digest)))
    }

    /// The stored table, or `None` on a miss or an unreadable entry.
    /// Entries hold `P(1)..P(N)`, one per line, after the key header.
    pub fn load(&self, bracket: &[u32], n_max: usize) -> Option<CountTable> {
        let text = fs::read_to_string(self.path_for(bracket, n_max)).ok()?;
        let body = text.strip_prefix(&header(bracket, n_max))?;
        let mut counts = vec![BigUint::from(1u32)];
        for line in body.lines() {
            counts.push(line.parse().ok()?);
        }
        if counts.len() != n_max + 1 {
            return None;
        }
        CountTable::from_counts(counts).ok()
    }

    /// Writes through a temporary file and an atomic rename, so readers
    /// never see a partial entry.
    pub fn store(&self, bracket: &[u32], n_max: usize, table: &CountTable) -> io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let mut tmp = NamedTempFile::new_in(&self.dir)?;
        tmp.write_all(header(bracket, n_max).as_bytes())?;
        for c in table.values() {
            writeln!(tmp, "{c}")?;
        }
        tmp.persist(self.path_for(bracket, n_max)).map_err(|e| e.error)?;
        Ok(())
    }
}

fn header(bracket: &[u32], n_max: usize) -> String {
    let b: Vec<String> = bracket.iter().map(u32::to_string).collect();
    format!("{ALGORITHM_VERSION}\nbracket {}\nN {n_max}\n", b.join(","))
}

/// Counts through the cache when one is configured. A failed write is
/// reported on stderr and otherwise ignored.
pub fn counts(cache: Option<&CountCache>, wv: &WeightVector, n_max: usize) -> CoreResult<CountTable> {
    let Some(cache) = cache else {
        return count_admissible(wv, n_max);
    };
    if let Some(table) = cache.load(wv.entries(), n_max) {
        return Ok(table);
    }
    let table = count_admissible(wv, n_max)?;
    if let Err(e) = cache.store(wv.entries(), n_max, &table) {
        eprintln!("warning: could not write cache entry in {}: {e}", cache.dir().display());
    }
    Ok(table)
}
