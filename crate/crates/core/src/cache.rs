//! Optional on-disk cache for root systems and S-matrices.
//!
//! The cache is purely an optimization: every entry can be rebuilt from
//! scratch, and a cache written by one library version is byte-stable for
//! that version (struct field order fixes the JSON layout).

use std::fs;
use std::path::PathBuf;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::affine::LevelWeight;
use crate::config::RunConfig;
use crate::error::{Error, Result};
use crate::rootsys::RootSystem;
use crate::verlinde::{s_matrix, SMatrix};

/// Cache handle; a `None` directory disables all persistence.
#[derive(Debug, Clone)]
pub struct Cache {
    pub dir: Option<PathBuf>,
}

impl Cache {
    pub fn from_config(config: &RunConfig) -> Cache {
        Cache { dir: config.cache_dir.clone() }
    }

    pub fn disabled() -> Cache {
        Cache { dir: None }
    }

    fn path_for(&self, name: &str) -> Option<PathBuf> {
        self.dir.as_ref().map(|d| d.join(name))
    }

    /// Build or load the root system of a semisimple type, keyed by the
    /// type string (e.g. "E8", "A4+A4").
    pub fn root_system(&self, type_str: &str) -> Result<RootSystem> {
        let key = format!("rootsys-{}.json", type_str.replace('+', "_"));
        if let Some(path) = self.path_for(&key) {
            if let Ok(text) = fs::read_to_string(&path) {
                if let Ok(rs) = serde_json::from_str::<RootSystem>(&text) {
                    if rs.lie_type.to_string() == type_str {
                        return Ok(rs);
                    }
                }
                // stale or corrupted entry: fall through and rebuild
            }
        }
        let rs = RootSystem::parse(type_str)?;
        if let Some(path) = self.path_for(&key) {
            if let Some(parent) = path.parent() {
                fs::create_dir_all(parent)?;
            }
            fs::write(&path, serde_json::to_string(&rs)?)?;
        }
        Ok(rs)
    }

    /// Build or load an S-matrix, keyed by (type, level).
    pub fn s_matrix(
        &self,
        rs: &RootSystem,
        k: &[i64],
        config: &RunConfig,
    ) -> Result<SMatrix> {
        let levels: Vec<String> = k.iter().map(|x| x.to_string()).collect();
        let key = format!(
            "smatrix-{}-k{}.json",
            rs.lie_type.to_string().replace('+', "_"),
            levels.join("_")
        );
        if let Some(path) = self.path_for(&key) {
            if let Ok(text) = fs::read_to_string(&path) {
                if let Ok(stored) = serde_json::from_str::<StoredSMatrix>(&text) {
                    if let Ok(s) = stored.into_s_matrix(rs, k) {
                        return Ok(s);
                    }
                }
            }
        }
        let s = s_matrix(rs, k, config)?;
        if let Some(path) = self.path_for(&key) {
            if let Some(parent) = path.parent() {
                fs::create_dir_all(parent)?;
            }
            fs::write(&path, serde_json::to_string(&StoredSMatrix::from(&s))?)?;
        }
        Ok(s)
    }
}

/// Serialized S-matrix: complex entries flattened to (re, im) pairs.
#[derive(Serialize, Deserialize)]
struct StoredSMatrix {
    level: Vec<i64>,
    alcove: Vec<LevelWeight>,
    entries: Vec<Vec<(f64, f64)>>,
}

impl StoredSMatrix {
    fn from(s: &SMatrix) -> StoredSMatrix {
        StoredSMatrix {
            level: s.level.clone(),
            alcove: s.alcove.clone(),
            entries: s
                .entries
                .iter()
                .map(|row| row.iter().map(|z| (z.re, z.im)).collect())
                .collect(),
        }
    }

    fn into_s_matrix(self, rs: &RootSystem, k: &[i64]) -> Result<SMatrix> {
        if self.level != k {
            return Err(Error::InvalidData("cached level mismatch".into()));
        }
        let n = self.alcove.len();
        if self.entries.len() != n || self.entries.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidData("cached S-matrix shape".into()));
        }
        for lw in &self.alcove {
            if lw.weight.0.len() != rs.rank {
                return Err(Error::InvalidData("cached alcove rank".into()));
            }
        }
        Ok(SMatrix {
            level: self.level,
            alcove: self.alcove,
            entries: self
                .entries
                .into_iter()
                .map(|row| row.into_iter().map(|(re, im)| Complex64::new(re, im)).collect())
                .collect(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_system_roundtrip_is_byte_stable() {
        let dir = std::env::temp_dir().join("levelone-cache-test-rs");
        let _ = fs::remove_dir_all(&dir);
        let cache = Cache { dir: Some(dir.clone()) };
        let rs1 = cache.root_system("A4+A4").unwrap();
        let bytes1 = fs::read(dir.join("rootsys-A4_A4.json")).unwrap();
        let rs2 = cache.root_system("A4+A4").unwrap();
        let bytes2 = fs::read(dir.join("rootsys-A4_A4.json")).unwrap();
        assert_eq!(bytes1, bytes2);
        assert_eq!(rs1.positive_roots, rs2.positive_roots);
        assert_eq!(rs1.form_num, rs2.form_num);
        let _ = fs::remove_dir_all(&dir);
    }

    #[test]
    fn s_matrix_cache_roundtrip() {
        let dir = std::env::temp_dir().join("levelone-cache-test-sm");
        let _ = fs::remove_dir_all(&dir);
        let cache = Cache { dir: Some(dir.clone()) };
        let config = RunConfig::default();
        let rs = RootSystem::parse("A2").unwrap();
        let s1 = cache.s_matrix(&rs, &[1], &config).unwrap();
        let s2 = cache.s_matrix(&rs, &[1], &config).unwrap();
        assert_eq!(s1.alcove, s2.alcove);
        for (r1, r2) in s1.entries.iter().zip(&s2.entries) {
            for (a, b) in r1.iter().zip(r2) {
                assert_eq!(a, b, "cache must reproduce exact bits");
            }
        }
        let _ = fs::remove_dir_all(&dir);
    }

    #[test]
    fn corrupted_cache_entry_is_rebuilt() {
        let dir = std::env::temp_dir().join("levelone-cache-test-bad");
        let _ = fs::remove_dir_all(&dir);
        fs::create_dir_all(&dir).unwrap();
        fs::write(dir.join("rootsys-G2.json"), b"{not json").unwrap();
        let cache = Cache { dir: Some(dir.clone()) };
        let rs = cache.root_system("G2").unwrap();
        assert_eq!(rs.rank, 2);
        let _ = fs::remove_dir_all(&dir);
    }

    #[test]
    fn disabled_cache_still_builds() {
        let cache = Cache::disabled();
        let rs = cache.root_system("D4").unwrap();
        assert_eq!(rs.positive_roots.len(), 12);
    }
}
