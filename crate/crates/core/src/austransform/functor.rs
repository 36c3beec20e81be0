use crate::error::{Error, Result};
use crate::quivrep::{
    cokernel, factor_through_epi, kernel, projective_cover, DirectSum, Module, ModuleMorphism, ProjectiveCover,
    ProjectiveObject,
};

use super::gamma::Gamma;
use super::yoneda::{projective_map_to_ambient, projective_map_to_morphism, Restricted};

/// A minimal projective presentation `P_1 -d-> P_0 -π-> F -> 0` together
/// with its image `X_1 -> X_0` in the subcategory.
#[derive(Debug, Clone)]
pub struct Presentation {
    pub cover: ProjectiveCover,
    pub p1: ProjectiveObject,
    pub d: ModuleMorphism,
    pub x1: DirectSum,
    pub x0: DirectSum,
    pub map: ModuleMorphism,
}

pub fn minimal_presentation(gamma: &Gamma, f: &Module) -> Presentation {
    let alg = &gamma.algebra;
    let cover = projective_cover(alg, f);
    let (k, incl) = kernel(&cover.map);
    let c1 = projective_cover(alg, &k);
    let d = incl.compose(&c1.map);
    let (x1, x0, map) = projective_map_to_morphism(gamma, &c1.object, &cover.object, &d);
    Presentation { cover, p1: c1.object, d, x1, x0, map }
}

/// `V(F) = coker(X_1 -> X_0)` with the projection from `X_0`.
#[derive(Debug, Clone)]
pub struct VImage {
    pub module: Module,
    pub projection: ModuleMorphism,
    pub presentation: Presentation,
}

pub fn functor_v(gamma: &Gamma, f: &Module) -> VImage {
    let presentation = minimal_presentation(gamma, f);
    let (module, projection) = cokernel(&presentation.map);
    VImage { module, projection, presentation }
}

/// `X_1 -> X_0` is an epimorphism in the minimal presentation. The answer
/// is compared with `V(F) = 0`; disagreement is an invariant violation.
pub fn is_effaceable(gamma: &Gamma, f: &Module) -> Result<bool> {
    effaceability(&functor_v(gamma, f), f)
}

pub(crate) fn effaceability(v: &VImage, f: &Module) -> Result<bool> {
    let epi = v.presentation.map.is_epi();
    let vanishes = v.module.is_zero();
    if epi != vanishes {
        return Err(Error::InvariantViolation(format!(
            "presentation map epi = {epi} but V(F) = 0 is {vanishes} for dimension vector {:?}",
            f.dims()
        )));
    }
    Ok(epi)
}

/// `l: P_0' -> P_0` with `π ∘ l = α ∘ π'`.
fn lift_to_covers(gamma: &Gamma, alpha: &ModuleMorphism, src: &Presentation, tgt: &Presentation) -> Result<ModuleMorphism> {
    let alg = &gamma.algebra;
    let top = alpha.compose(&src.cover.map);
    let images = alg.generator_images(&src.cover.object, &top);
    let mut ys = Vec::with_capacity(images.len());
    for (s, x) in images.iter().enumerate() {
        let v = src.cover.object.vertices[s];
        let rhs = crate::exactfield::Matrix::column_vector(alg.field(), x);
        let sol = tgt.cover.map.map(v).solve(&rhs)?.ok_or_else(|| {
            Error::InvariantViolation("projective cover is not surjective".into())
        })?;
        ys.push(sol.particular.column(0));
    }
    Ok(alg.map_from_projective(&src.cover.object, &tgt.cover.object.module, &ys))
}

/// `V(α): V(F') -> V(F)`.
pub fn functor_v_map(gamma: &Gamma, alpha: &ModuleMorphism, vs: &VImage, vt: &VImage) -> Result<ModuleMorphism> {
    let l = lift_to_covers(gamma, alpha, &vs.presentation, &vt.presentation)?;
    let (_, _, la) = projective_map_to_morphism(gamma, &vs.presentation.cover.object, &vt.presentation.cover.object, &l);
    factor_through_epi(&vs.projection, &vt.projection.compose(&la))
        .ok_or_else(|| Error::InvariantViolation("induced map on cokernels does not exist".into()))
}

/// The unit `η_F: F -> U(V(F))`.
pub fn unit(gamma: &Gamma, f: &Module, v: &VImage, uvf: &Restricted) -> Result<ModuleMorphism> {
    let p0 = &v.presentation.cover.object;
    let xs: Vec<Vec<u64>> = p0
        .vertices
        .iter()
        .enumerate()
        .map(|(s, &w)| uvf.coordinates_of(w, &v.projection.compose(&v.presentation.x0.injections[s])))
        .collect();
    let up = gamma.algebra.map_from_projective(p0, &uvf.module, &xs);
    let eta = factor_through_epi(&v.presentation.cover.map, &up)
        .ok_or_else(|| Error::InvariantViolation("unit does not descend to F".into()))?;
    debug_assert_eq!(eta.source().dims(), f.dims());
    Ok(eta)
}

/// The counit `ε_b: V(U(b)) -> b`.
pub fn counit(gamma: &Gamma, ub: &Restricted, v: &VImage) -> Result<ModuleMorphism> {
    let (_, e) = projective_map_to_ambient(gamma, &v.presentation.cover.object, ub, &v.presentation.cover.map);
    factor_through_epi(&v.projection, &e).ok_or_else(|| Error::InvariantViolation("counit does not descend".into()))
}
