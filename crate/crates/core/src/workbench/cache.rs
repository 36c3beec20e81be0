use std::path::PathBuf;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactfield::Matrix;
use crate::quivrep::{BasicAlgebra, Enumeration, Module};

use super::canonical::{sha256_hex, to_canonical_json};

/// Environment variable naming the cache directory.
pub const CACHE_DIR_ENV: &str = "HIAUS_CACHE_DIR";

/// Fraction of cache hits that are recomputed and compared.
pub const SPOT_CHECK_RATE: f64 = 0.25;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CacheStats {
    pub hits: usize,
    pub misses: usize,
    pub spot_checks: usize,
}

/// Content-addressed store of canonical JSON results.
#[derive(Debug)]
pub struct Cache {
    dir: Option<PathBuf>,
    rng: ChaCha8Rng,
    pub stats: CacheStats,
}

impl Cache {
    pub fn disabled() -> Self {
        Cache { dir: None, rng: ChaCha8Rng::seed_from_u64(0), stats: CacheStats::default() }
    }

    pub fn at(dir: impl Into<PathBuf>, seed: u64) -> Self {
        Cache { dir: Some(dir.into()), rng: ChaCha8Rng::seed_from_u64(seed), stats: CacheStats::default() }
    }

    /// `$HIAUS_CACHE_DIR`, or `hiaus-cache` under the temporary directory.
    pub fn from_env(seed: u64) -> Self {
        let dir = std::env::var_os(CACHE_DIR_ENV)
            .map(PathBuf::from)
            .unwrap_or_else(|| std::env::temp_dir().join("hiaus-cache"));
        Cache::at(dir, seed)
    }

    pub fn is_enabled(&self) -> bool {
        self.dir.is_some()
    }

    pub fn key(operation: &str, material: &str) -> String {
        sha256_hex(format!("{}\n{operation}\n{material}", env!("CARGO_PKG_VERSION")).as_bytes())
    }

    /// Looks `key` up, computing and storing on a miss. Some hits are
    /// recomputed; a differing result is an invariant violation.
    pub fn get_or_compute<T, F>(&mut self, operation: &str, material: &str, compute: F) -> Result<T>
    where
        T: Serialize + DeserializeOwned,
        F: Fn() -> Result<T>,
    {
        let Some(dir) = self.dir.clone() else {
            return compute();
        };
        let key = Self::key(operation, material);
        let path = dir.join(format!("{operation}-{key}.json"));
        if let Ok(text) = std::fs::read_to_string(&path) {
            if let Ok(value) = serde_json::from_str::<T>(&text) {
                self.stats.hits += 1;
                if self.rng.gen_bool(SPOT_CHECK_RATE) {
                    self.stats.spot_checks += 1;
                    let fresh = to_canonical_json(&compute()?)?;
                    if fresh != text {
                        return Err(Error::InvariantViolation(format!(
                            "cached {operation} result {} differs from a recomputation",
                            path.display()
                        )));
                    }
                }
                return Ok(value);
            }
        }
        self.stats.misses += 1;
        let value = compute()?;
        let text = to_canonical_json(&value)?;
        // a cache that cannot be written is only a missed optimisation
        if std::fs::create_dir_all(&dir).is_ok() {
            let tmp = dir.join(format!(".{key}.{}.tmp", std::process::id()));
            if std::fs::write(&tmp, &text).is_ok() {
                let _ = std::fs::rename(&tmp, &path);
            }
        }
        Ok(value)
    }
}

/// Serializable form of a module: dimension vector and arrow matrices as rows.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleRecord {
    pub dims: Vec<usize>,
    pub maps: Vec<Vec<Vec<u64>>>,
}

impl ModuleRecord {
    pub fn of(m: &Module) -> Self {
        let maps = m.maps().iter().map(|a| (0..a.rows()).map(|r| a.row(r).to_vec()).collect()).collect();
        ModuleRecord { dims: m.dims().to_vec(), maps }
    }

    pub fn to_module(&self, alg: &BasicAlgebra) -> Result<Module> {
        let f = alg.field();
        let q = alg.quiver();
        if self.maps.len() != q.arrow_count() || self.dims.len() != q.vertex_count() {
            return Err(Error::InvariantViolation("cached module has the wrong shape".into()));
        }
        let maps = q
            .arrows()
            .iter()
            .zip(&self.maps)
            .map(|(a, rows)| {
                let (r, c) = (self.dims[a.target], self.dims[a.source]);
                let data: Vec<u64> = rows.iter().flatten().copied().collect();
                if rows.len() != r || data.len() != r * c || data.iter().any(|&x| x >= f.modulus()) {
                    return Err(Error::InvariantViolation("cached module matrix is malformed".into()));
                }
                Ok(Matrix::new(f, r, c, data))
            })
            .collect::<Result<Vec<_>>>()?;
        alg.make_module(self.dims.clone(), maps)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationRecord {
    pub modules: Vec<ModuleRecord>,
    pub complete: bool,
    pub candidates_examined: usize,
    pub note: String,
}

impl EnumerationRecord {
    pub fn of(e: &Enumeration) -> Self {
        EnumerationRecord {
            modules: e.modules.iter().map(ModuleRecord::of).collect(),
            complete: e.complete,
            candidates_examined: e.candidates_examined,
            note: e.note.clone(),
        }
    }

    pub fn to_enumeration(&self, alg: &BasicAlgebra) -> Result<Enumeration> {
        Ok(Enumeration {
            modules: self.modules.iter().map(|m| m.to_module(alg)).collect::<Result<_>>()?,
            complete: self.complete,
            candidates_examined: self.candidates_examined,
            note: self.note.clone(),
        })
    }
}
