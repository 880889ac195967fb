//! Memo of dominant weight multiplicities, in memory and optionally on disk.
//!
//! Each `(block, highest weight)` pair is one JSON file
//! `{version, group, hw, weights: [[coords..., mult]]}`. Files are written to a
//! temporary name and renamed into place, so concurrent readers never see a
//! partial document.

use std::collections::HashMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, Mutex};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::Weight;

pub const CACHE_VERSION: u32 = 1;

/// Dominant weights with their multiplicities, highest first.
pub type DominantMultiplicities = Vec<(Weight, i64)>;

#[derive(Serialize, Deserialize)]
struct CacheDoc {
    version: u32,
    group: String,
    hw: Vec<i64>,
    weights: Vec<Vec<i64>>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CacheStats {
    pub entries: u64,
    pub bytes: u64,
}

#[derive(Debug, Default)]
pub struct WeightCache {
    dir: Option<PathBuf>,
    memory: Mutex<HashMap<(String, Weight), Arc<DominantMultiplicities>>>,
    disk_hits: AtomicU64,
    computed: AtomicU64,
    tmp_counter: AtomicU64,
}

impl WeightCache {
    /// Memory-only cache.
    pub fn in_memory() -> Self {
        Self::default()
    }

    /// Cache backed by `dir` (created on first write).
    pub fn on_disk(dir: impl Into<PathBuf>) -> Self {
        WeightCache {
            dir: Some(dir.into()),
            ..Self::default()
        }
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    fn file_name(group: &str, hw: &Weight) -> String {
        let g: String = group.chars().filter(|c| c.is_ascii_alphanumeric()).collect();
        let h: Vec<String> = hw.coords().iter().map(|c| c.to_string()).collect();
        format!("{g}_{}.json", h.join("_"))
    }

    fn read_disk(&self, group: &str, hw: &Weight) -> Option<DominantMultiplicities> {
        let path = self.dir.as_ref()?.join(Self::file_name(group, hw));
        let text = fs::read_to_string(path).ok()?;
        let doc: CacheDoc = serde_json::from_str(&text).ok()?;
        if doc.version != CACHE_VERSION || doc.group != group || doc.hw != hw.coords() {
            return None;
        }
        let mut out = Vec::with_capacity(doc.weights.len());
        for mut row in doc.weights {
            let mult = row.pop()?;
            if row.len() != hw.rank() {
                return None;
            }
            out.push((Weight::new(row), mult));
        }
        Some(out)
    }

    fn write_disk(&self, group: &str, hw: &Weight, data: &DominantMultiplicities) -> Result<()> {
        let Some(dir) = &self.dir else { return Ok(()) };
        fs::create_dir_all(dir)?;
        let doc = CacheDoc {
            version: CACHE_VERSION,
            group: group.to_string(),
            hw: hw.coords().to_vec(),
            weights: data
                .iter()
                .map(|(w, m)| {
                    let mut row = w.coords().to_vec();
                    row.push(*m);
                    row
                })
                .collect(),
        };
        let name = Self::file_name(group, hw);
        let tmp = dir.join(format!(
            ".{name}.{}.{}.tmp",
            std::process::id(),
            self.tmp_counter.fetch_add(1, Ordering::Relaxed)
        ));
        fs::write(&tmp, serde_json::to_string(&doc)?)?;
        fs::rename(&tmp, dir.join(name)).map_err(Error::from)
    }

    /// Look up, or compute and store.
    pub fn get_or_compute(
        &self,
        group: &str,
        hw: &Weight,
        compute: impl FnOnce() -> Result<DominantMultiplicities>,
    ) -> Result<Arc<DominantMultiplicities>> {
        let key = (group.to_string(), hw.clone());
        if let Some(v) = self.memory.lock().expect("cache lock").get(&key) {
            return Ok(v.clone());
        }
        let data = match self.read_disk(group, hw) {
            Some(d) => {
                self.disk_hits.fetch_add(1, Ordering::Relaxed);
                d
            }
            None => {
                let d = compute()?;
                self.computed.fetch_add(1, Ordering::Relaxed);
                self.write_disk(group, hw, &d)?;
                d
            }
        };
        let data = Arc::new(data);
        self.memory.lock().expect("cache lock").insert(key, data.clone());
        Ok(data)
    }

    /// Number of characters computed from scratch (not found in memory or on disk).
    pub fn computed_count(&self) -> u64 {
        self.computed.load(Ordering::Relaxed)
    }

    pub fn disk_hit_count(&self) -> u64 {
        self.disk_hits.load(Ordering::Relaxed)
    }

    /// File count and total size of the disk cache.
    pub fn stats(&self) -> Result<CacheStats> {
        let mut st = CacheStats::default();
        let Some(dir) = &self.dir else { return Ok(st) };
        if !dir.exists() {
            return Ok(st);
        }
        for entry in fs::read_dir(dir)? {
            let entry = entry?;
            let p = entry.path();
            if p.extension().is_some_and(|e| e == "json") {
                st.entries += 1;
                st.bytes += entry.metadata()?.len();
            }
        }
        Ok(st)
    }

    /// Remove every cache document; returns how many were deleted.
    pub fn clear(&self) -> Result<u64> {
        self.memory.lock().expect("cache lock").clear();
        let Some(dir) = &self.dir else { return Ok(0) };
        if !dir.exists() {
            return Ok(0);
        }
        let mut n = 0;
        for entry in fs::read_dir(dir)? {
            let p = entry?.path();
            let name = p.file_name().and_then(|s| s.to_str()).unwrap_or("");
            if p.extension().is_some_and(|e| e == "json" || e == "tmp") && !name.is_empty() {
                fs::remove_file(&p)?;
                n += 1;
            }
        }
        Ok(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_through_disk() {
        let dir = tempfile::tempdir().unwrap();
        let hw = Weight::from([1, 0]);
        let data = vec![(hw.clone(), 1)];
        let a = WeightCache::on_disk(dir.path());
        a.get_or_compute("U(2)", &hw, || Ok(data.clone())).unwrap();
        assert_eq!(a.computed_count(), 1);
        assert_eq!(a.stats().unwrap().entries, 1);

        let b = WeightCache::on_disk(dir.path());
        let got = b.get_or_compute("U(2)", &hw, || panic!("should be cached")).unwrap();
        assert_eq!(*got, data);
        assert_eq!(b.disk_hit_count(), 1);
        assert_eq!(b.clear().unwrap(), 1);
        assert_eq!(b.stats().unwrap().entries, 0);
    }

    #[test]
    fn corrupt_files_are_recomputed() {
        let dir = tempfile::tempdir().unwrap();
        let hw = Weight::from([2]);
        fs::write(dir.path().join(WeightCache::file_name("Sp(1)", &hw)), "{nope").unwrap();
        let c = WeightCache::on_disk(dir.path());
        let got = c.get_or_compute("Sp(1)", &hw, || Ok(vec![(hw.clone(), 1)])).unwrap();
        assert_eq!(got.len(), 1);
        assert_eq!(c.computed_count(), 1);
    }
}
