use serde::Serialize;

use crate::nabelian::SubcategorySpec;
use crate::quivrep::resolution::ext_dim_from;
use crate::quivrep::{projective_resolution, BasicAlgebra, Module, ProjectiveResolution};

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct RigidityEntry {
    pub from: String,
    pub to: String,
    pub k: usize,
    pub ext_dim: usize,
}

/// `dim Ext^k(M_i, M_j)` for every ordered pair of members and
/// `1 <= k <= n - 1`.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct RigidityTable {
    pub n: usize,
    pub entries: Vec<RigidityEntry>,
    pub rigid: bool,
}

impl RigidityTable {
    pub fn nonzero(&self) -> impl Iterator<Item = &RigidityEntry> {
        self.entries.iter().filter(|e| e.ext_dim != 0)
    }
}

/// Resolutions long enough for `Ext^k`, `k <= max_k`.
pub(crate) fn resolutions(alg: &BasicAlgebra, mods: &[Module], max_k: usize) -> Vec<ProjectiveResolution> {
    use rayon::prelude::*;
    mods.par_iter().map(|m| projective_resolution(alg, m, max_k + 1)).collect()
}

/// `[dim Ext^1(m, t), ..., dim Ext^max_k(m, t)]` from a precomputed
/// resolution of `m`.
pub(crate) fn ext_row(alg: &BasicAlgebra, res: &ProjectiveResolution, t: &Module, max_k: usize) -> Vec<usize> {
    (1..=max_k).map(|k| ext_dim_from(alg, res, t, k)).collect()
}

pub fn n_rigidity_report(spec: &SubcategorySpec, n: usize) -> RigidityTable {
    assert!(n >= 1, "n must be positive");
    let max_k = n - 1;
    let alg = spec.algebra();
    let mut entries = Vec::new();
    if max_k > 0 {
        let res = resolutions(alg, spec.indecomposables(), max_k);
        for i in 0..spec.len() {
            for j in 0..spec.len() {
                for (k, d) in ext_row(alg, &res[i], spec.module(j), max_k).into_iter().enumerate() {
                    entries.push(RigidityEntry {
                        from: spec.label(i).to_string(),
                        to: spec.label(j).to_string(),
                        k: k + 1,
                        ext_dim: d,
                    });
                }
            }
        }
    }
    let rigid = entries.iter().all(|e| e.ext_dim == 0);
    RigidityTable { n, entries, rigid }
}
