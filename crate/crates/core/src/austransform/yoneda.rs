use crate::error::{Error, Result};
use crate::exactfield::Matrix;
use crate::quivrep::{
    coordinates, direct_sum, hom_basis, projective_cover, DirectSum, Module, ModuleMorphism, ProjectiveObject,
};

use super::gamma::Gamma;

/// `U(X) = Hom(-, X)` restricted to the subcategory, with the Hom bases
/// used as coordinates at each vertex.
#[derive(Debug, Clone)]
pub struct Restricted {
    pub object: Module,
    pub module: Module,
    pub bases: Vec<Vec<ModuleMorphism>>,
}

impl Restricted {
    /// The element of `U(X)(M_v)` with coordinates `x`.
    pub fn element(&self, gamma: &Gamma, v: usize, x: &[u64]) -> ModuleMorphism {
        ModuleMorphism::combination(gamma.spec.module(v), &self.object, &self.bases[v], x)
    }

    /// Coordinates of `h: M_v -> X` in `U(X)(M_v)`.
    pub fn coordinates_of(&self, v: usize, h: &ModuleMorphism) -> Vec<u64> {
        if self.bases[v].is_empty() {
            return Vec::new();
        }
        coordinates(&self.bases[v], h).expect("morphism lies in the Hom space")
    }
}

/// The `Γ`-module `⊕_i Hom(M_i, X)` with `Γ` acting by precomposition.
pub fn restricted_yoneda(gamma: &Gamma, x: &Module) -> Result<Restricted> {
    let spec = &gamma.spec;
    let bases: Vec<Vec<ModuleMorphism>> = spec.indecomposables().iter().map(|m| hom_basis(m, x)).collect();
    let dims: Vec<usize> = bases.iter().map(Vec::len).collect();
    let field = x.field();
    let mut maps = Vec::with_capacity(gamma.arrow_basis.len());
    for &bidx in &gamma.arrow_basis {
        let b = &gamma.based.basis[bidx];
        // arrow target -> source of b; h ↦ h ∘ b
        let cols: Vec<Vec<u64>> = bases[b.target]
            .iter()
            .map(|h| {
                let hb = h.compose(&b.morphism);
                if dims[b.source] == 0 {
                    Vec::new()
                } else {
                    coordinates(&bases[b.source], &hb).expect("precomposition stays in the Hom space")
                }
            })
            .collect();
        maps.push(Matrix::from_columns(field, dims[b.source], &cols));
    }
    let module = gamma.algebra.make_module(dims, maps)?;
    Ok(Restricted { object: x.clone(), module, bases })
}

/// `U(f) = f ∘ -`.
pub fn restricted_yoneda_map(ux: &Restricted, uy: &Restricted, f: &ModuleMorphism) -> ModuleMorphism {
    let field = f.field();
    let maps = (0..ux.bases.len())
        .map(|v| {
            let cols: Vec<Vec<u64>> = ux.bases[v].iter().map(|h| uy.coordinates_of(v, &f.compose(h))).collect();
            Matrix::from_columns(field, uy.bases[v].len(), &cols)
        })
        .collect();
    ModuleMorphism::new_unchecked(&ux.module, &uy.module, maps)
}

/// The object `⊕_s M_{v_s}` of the subcategory corresponding to a projective
/// `Γ`-module.
pub fn ambient_object(gamma: &Gamma, p: &ProjectiveObject) -> DirectSum {
    let alg = gamma.spec.algebra();
    let parts: Vec<Module> = p.vertices.iter().map(|&v| gamma.spec.module(v).clone()).collect();
    direct_sum(alg.quiver(), alg.field(), &parts)
}

/// The morphism `M_v -> X_Q` named by a vector of `Q` at vertex `v`.
fn element_of_projective(gamma: &Gamma, q: &ProjectiveObject, xq: &DirectSum, v: usize, x: &[u64]) -> ModuleMorphism {
    let mut out = ModuleMorphism::zero(gamma.spec.module(v), &xq.module);
    let mut off = 0;
    for (t, &w) in q.vertices.iter().enumerate() {
        for (i, word) in gamma.algebra.basis_words(w, v).iter().enumerate() {
            let c = x[off + i];
            if c != 0 {
                out = out.add(&xq.injections[t].compose(&gamma.word_morphism(word)).scale(c));
            }
        }
        off += gamma.algebra.projective(w).dim(v);
    }
    out
}

/// Yoneda in the inverse direction: the morphism `X_P -> X_Q` inducing
/// `phi: P -> Q`.
pub fn projective_map_to_morphism(
    gamma: &Gamma,
    p: &ProjectiveObject,
    q: &ProjectiveObject,
    phi: &ModuleMorphism,
) -> (DirectSum, DirectSum, ModuleMorphism) {
    let xp = ambient_object(gamma, p);
    let xq = ambient_object(gamma, q);
    let images = gamma.algebra.generator_images(p, phi);
    let mut f = ModuleMorphism::zero(&xp.module, &xq.module);
    for (s, &v) in p.vertices.iter().enumerate() {
        let g = element_of_projective(gamma, q, &xq, v, &images[s]);
        f = f.add(&g.compose(&xp.projections[s]));
    }
    (xp, xq, f)
}

/// The morphism `X_P -> b` corresponding to `phi: P -> U(b)`.
pub fn projective_map_to_ambient(
    gamma: &Gamma,
    p: &ProjectiveObject,
    ub: &Restricted,
    phi: &ModuleMorphism,
) -> (DirectSum, ModuleMorphism) {
    let xp = ambient_object(gamma, p);
    let images = gamma.algebra.generator_images(p, phi);
    let mut f = ModuleMorphism::zero(&xp.module, &ub.object);
    for (s, &v) in p.vertices.iter().enumerate() {
        f = f.add(&ub.element(gamma, v, &images[s]).compose(&xp.projections[s]));
    }
    (xp, f)
}

/// `ψ: P -> U(X_P)`, the Yoneda isomorphism sending the `s`-th generator to
/// the `s`-th summand inclusion.
pub fn yoneda_iso(gamma: &Gamma, p: &ProjectiveObject, ux: &Restricted, xp: &DirectSum) -> ModuleMorphism {
    let xs: Vec<Vec<u64>> = p
        .vertices
        .iter()
        .enumerate()
        .map(|(s, &v)| ux.coordinates_of(v, &xp.injections[s]))
        .collect();
    gamma.algebra.map_from_projective(p, &ux.module, &xs)
}

/// The morphism in the subcategory inducing a map between projective
/// `Γ`-modules. Rejects modules that are not projective.
pub fn presentation_to_morphism(gamma: &Gamma, phi: &ModuleMorphism) -> Result<ModuleMorphism> {
    let alg = &gamma.algebra;
    let cs = projective_cover(alg, phi.source());
    let ct = projective_cover(alg, phi.target());
    if !cs.map.is_iso() {
        return Err(Error::NotProjective(format!("source with dimension vector {:?}", phi.source().dims())));
    }
    if !ct.map.is_iso() {
        return Err(Error::NotProjective(format!("target with dimension vector {:?}", phi.target().dims())));
    }
    let inv = ct.map.inverse().expect("cover of a projective is invertible");
    let core = inv.compose(&phi.compose(&cs.map));
    Ok(projective_map_to_morphism(gamma, &cs.object, &ct.object, &core).2)
}
