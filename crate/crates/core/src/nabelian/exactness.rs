use rayon::prelude::*;
use serde::Serialize;

use crate::quivrep::{hom_basis, span_rank, Complex, Module, ModuleMorphism};

use super::spec::SubcategorySpec;

/// Failure of exactness of one induced Hom sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExactnessDefect {
    /// Member used as test object.
    pub test_object: String,
    /// Position in the complex where the Hom sequence has homology.
    pub position: usize,
    pub homology_dim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NExactnessVerdict {
    pub left: bool,
    pub right: bool,
    pub left_defects: Vec<ExactnessDefect>,
    pub right_defects: Vec<ExactnessDefect>,
    pub test_objects: usize,
}

impl NExactnessVerdict {
    pub fn is_exact(&self) -> bool {
        self.left && self.right
    }
}

/// Rank of `Hom(d, t): Hom(target, t) -> Hom(source, t)`.
pub(crate) fn contravariant_rank(d: &ModuleMorphism, t: &Module) -> usize {
    let images: Vec<ModuleMorphism> = hom_basis(d.target(), t).iter().map(|h| h.compose(d)).collect();
    span_rank(&images)
}

/// Rank of `Hom(t, d): Hom(t, source) -> Hom(t, target)`.
pub(crate) fn covariant_rank(d: &ModuleMorphism, t: &Module) -> usize {
    let images: Vec<ModuleMorphism> = hom_basis(t, d.source()).iter().map(|h| d.compose(h)).collect();
    span_rank(&images)
}

/// Homology of `Hom(X^•, t)` at positions `from..=to` (zero objects are
/// assumed outside the complex).
pub(crate) fn contravariant_defects(c: &Complex, t: &Module, positions: std::ops::RangeInclusive<usize>) -> Vec<(usize, usize)> {
    let len = c.len();
    let ranks: Vec<usize> = c.differentials.iter().map(|d| contravariant_rank(d, t)).collect();
    let mut out = Vec::new();
    for k in positions {
        if k >= len {
            continue;
        }
        let dim = hom_basis(&c.objects[k], t).len();
        // into Hom(X^k, t) from Hom(X^{k+1}, t); out of it towards Hom(X^{k-1}, t)
        let incoming = if k + 1 < len { ranks[k] } else { 0 };
        let outgoing = if k > 0 { ranks[k - 1] } else { 0 };
        let h = dim - incoming - outgoing;
        if h != 0 {
            out.push((k, h));
        }
    }
    out
}

pub(crate) fn covariant_defects(c: &Complex, t: &Module, positions: std::ops::RangeInclusive<usize>) -> Vec<(usize, usize)> {
    let len = c.len();
    let ranks: Vec<usize> = c.differentials.iter().map(|d| covariant_rank(d, t)).collect();
    let mut out = Vec::new();
    for k in positions {
        if k >= len {
            continue;
        }
        let dim = hom_basis(t, &c.objects[k]).len();
        let incoming = if k > 0 { ranks[k - 1] } else { 0 };
        let outgoing = if k + 1 < len { ranks[k] } else { 0 };
        let h = dim - incoming - outgoing;
        if h != 0 {
            out.push((k, h));
        }
    }
    out
}

/// Right side: `0 -> Hom(X^{m}, Y) -> ... -> Hom(X^0, Y)` exact at every
/// position except `X^0`. Left side: `0 -> Hom(Y, X^0) -> ... -> Hom(Y, X^m)`
/// exact at every position except `X^m`. Checked for every member `Y`.
pub fn is_n_exact(c: &Complex, spec: &SubcategorySpec, _n: usize) -> NExactnessVerdict {
    let last = c.len().saturating_sub(1);
    let per_object: Vec<(Vec<ExactnessDefect>, Vec<ExactnessDefect>)> = (0..spec.len())
        .into_par_iter()
        .map(|i| {
            let t = spec.module(i);
            let label = spec.label(i).to_string();
            let right = if c.is_empty() { Vec::new() } else { contravariant_defects(c, t, 1..=last) };
            let left = if c.is_empty() || last == 0 { Vec::new() } else { covariant_defects(c, t, 0..=last - 1) };
            let wrap = |v: Vec<(usize, usize)>| {
                v.into_iter()
                    .map(|(position, homology_dim)| ExactnessDefect {
                        test_object: label.clone(),
                        position,
                        homology_dim,
                    })
                    .collect::<Vec<_>>()
            };
            (wrap(left), wrap(right))
        })
        .collect();
    let mut left_defects = Vec::new();
    let mut right_defects = Vec::new();
    for (l, r) in per_object {
        left_defects.extend(l);
        right_defects.extend(r);
    }
    NExactnessVerdict {
        left: left_defects.is_empty(),
        right: right_defects.is_empty(),
        left_defects,
        right_defects,
        test_objects: spec.len(),
    }
}

/// Monomorphism in the subcategory: `Hom(Y, f)` injective for every member.
pub fn is_intrinsic_mono(f: &ModuleMorphism, spec: &SubcategorySpec) -> bool {
    spec.indecomposables()
        .iter()
        .all(|t| covariant_rank(f, t) == hom_basis(t, f.source()).len())
}

/// Epimorphism in the subcategory: `Hom(f, Y)` injective for every member.
pub fn is_intrinsic_epi(f: &ModuleMorphism, spec: &SubcategorySpec) -> bool {
    spec.indecomposables()
        .iter()
        .all(|t| contravariant_rank(f, t) == hom_basis(f.target(), t).len())
}
