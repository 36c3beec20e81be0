use serde::Serialize;

use crate::exactfield::SpanBuilder;
use crate::nabelian::SubcategorySpec;
use crate::quivrep::{direct_sum, hom_basis, span_rank, Module, ModuleMorphism};

/// A morphism between a module and an object `⊕ M_{i_s}` of the
/// subcategory, with the summand list.
#[derive(Debug, Clone)]
pub struct Approximation {
    pub object: Module,
    pub summands: Vec<usize>,
    pub map: ModuleMorphism,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ApproximationKind {
    /// One summand per element of the top of the Hom functor.
    Minimal,
    /// One summand per Hom basis element (the evaluation map).
    Canonical,
}

fn sum_of(spec: &SubcategorySpec, summands: &[usize]) -> crate::quivrep::DirectSum {
    let parts: Vec<Module> = summands.iter().map(|&i| spec.module(i).clone()).collect();
    let alg = spec.algebra();
    direct_sum(alg.quiver(), alg.field(), &parts)
}

/// Right approximation `M_0 -> b`.
pub fn right_approximation(b: &Module, spec: &SubcategorySpec, kind: ApproximationKind) -> Approximation {
    let mut chosen: Vec<(usize, ModuleMorphism)> = Vec::new();
    let homs: Vec<Vec<ModuleMorphism>> = spec.indecomposables().iter().map(|m| hom_basis(m, b)).collect();
    for i in 0..spec.len() {
        let h = &homs[i];
        if h.is_empty() {
            continue;
        }
        match kind {
            ApproximationKind::Canonical => chosen.extend(h.iter().map(|g| (i, g.clone()))),
            ApproximationKind::Minimal => {
                let len = h[0].flatten().len();
                let mut sb = SpanBuilder::new(b.field(), len);
                for (j, hj) in homs.iter().enumerate() {
                    for g in hj {
                        for r in spec.radical(i, j) {
                            sb.insert(&g.compose(r).flatten());
                        }
                    }
                }
                for g in h {
                    if sb.insert(&g.flatten()) {
                        chosen.push((i, g.clone()));
                    }
                }
            }
        }
    }
    let summands: Vec<usize> = chosen.iter().map(|(i, _)| *i).collect();
    let sum = sum_of(spec, &summands);
    let mut map = ModuleMorphism::zero(&sum.module, b);
    for ((_, g), p) in chosen.iter().zip(&sum.projections) {
        map = map.add(&g.compose(p));
    }
    Approximation { object: sum.module, summands, map }
}

/// Left approximation `c -> M_0`.
pub fn left_approximation(c: &Module, spec: &SubcategorySpec, kind: ApproximationKind) -> Approximation {
    let mut chosen: Vec<(usize, ModuleMorphism)> = Vec::new();
    let homs: Vec<Vec<ModuleMorphism>> = spec.indecomposables().iter().map(|m| hom_basis(c, m)).collect();
    for i in 0..spec.len() {
        let h = &homs[i];
        if h.is_empty() {
            continue;
        }
        match kind {
            ApproximationKind::Canonical => chosen.extend(h.iter().map(|g| (i, g.clone()))),
            ApproximationKind::Minimal => {
                let len = h[0].flatten().len();
                let mut sb = SpanBuilder::new(c.field(), len);
                for (j, hj) in homs.iter().enumerate() {
                    for g in hj {
                        for r in spec.radical(j, i) {
                            sb.insert(&r.compose(g).flatten());
                        }
                    }
                }
                for g in h {
                    if sb.insert(&g.flatten()) {
                        chosen.push((i, g.clone()));
                    }
                }
            }
        }
    }
    let summands: Vec<usize> = chosen.iter().map(|(i, _)| *i).collect();
    let sum = sum_of(spec, &summands);
    let mut map = ModuleMorphism::zero(c, &sum.module);
    for ((_, g), inj) in chosen.iter().zip(&sum.injections) {
        map = map.add(&inj.compose(g));
    }
    Approximation { object: sum.module, summands, map }
}

/// `Hom(M_i, g)` is surjective for every member `M_i`.
pub fn is_right_approximation(g: &ModuleMorphism, spec: &SubcategorySpec) -> bool {
    spec.indecomposables().iter().all(|m| {
        let target = hom_basis(m, g.target()).len();
        let images: Vec<ModuleMorphism> = hom_basis(m, g.source()).iter().map(|h| g.compose(h)).collect();
        span_rank(&images) == target
    })
}

/// `Hom(g, M_i)` is surjective for every member `M_i`.
pub fn is_left_approximation(g: &ModuleMorphism, spec: &SubcategorySpec) -> bool {
    spec.indecomposables().iter().all(|m| {
        let target = hom_basis(g.source(), m).len();
        let images: Vec<ModuleMorphism> = hom_basis(g.target(), m).iter().map(|h| h.compose(g)).collect();
        span_rank(&images) == target
    })
}
