use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactfield::SpanBuilder;
use crate::quivrep::{
    decompose, hom_basis, iso_of_indecomposables, locality, BasicAlgebra, Locality, Module, ModuleMorphism,
};

/// A finite list of pairwise non-isomorphic indecomposables presenting the
/// additive subcategory `add(M_0 ⊕ ... ⊕ M_{r-1})` of the ambient module
/// category.
///
/// Hom spaces between the listed modules are computed once. For `i = j`
/// the basis starts with the identity and continues with a basis of the
/// radical of `End(M_i)`; for `i ≠ j` every morphism is radical.
#[derive(Debug, Clone)]
pub struct SubcategorySpec {
    algebra: Arc<BasicAlgebra>,
    name: String,
    labels: Vec<String>,
    indecomposables: Vec<Module>,
    homs: Vec<Vec<Vec<ModuleMorphism>>>,
    seed: u64,
}

/// Serializable summary of a subcategory.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct SubcategorySummary {
    pub name: String,
    pub members: Vec<String>,
    pub dimension_vectors: Vec<Vec<usize>>,
}

impl SubcategorySpec {
    /// Certifies that each module is indecomposable with local endomorphism
    /// ring and that no two are isomorphic.
    pub fn new(
        algebra: Arc<BasicAlgebra>,
        name: impl Into<String>,
        labels: Vec<String>,
        indecomposables: Vec<Module>,
        seed: u64,
    ) -> Result<Self> {
        if labels.len() != indecomposables.len() {
            return Err(Error::DimensionMismatch("one label per indecomposable required".into()));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for (l, m) in labels.iter().zip(&indecomposables) {
            algebra.check_relations(m)?;
            match locality(m, &mut rng) {
                Locality::Local { .. } => {}
                Locality::Unknown => {
                    return Err(Error::Undecided(format!("cannot certify `{l}` as indecomposable")))
                }
                _ => return Err(Error::InvariantViolation(format!("`{l}` is not indecomposable"))),
            }
        }
        for i in 0..indecomposables.len() {
            for j in 0..i {
                if iso_of_indecomposables(&indecomposables[i], &indecomposables[j]).is_some() {
                    return Err(Error::InvariantViolation(format!(
                        "`{}` and `{}` are isomorphic",
                        labels[j], labels[i]
                    )));
                }
            }
        }
        Ok(Self::assemble(algebra, name.into(), labels, indecomposables, seed))
    }

    fn assemble(
        algebra: Arc<BasicAlgebra>,
        name: String,
        labels: Vec<String>,
        indecomposables: Vec<Module>,
        seed: u64,
    ) -> Self {
        let r = indecomposables.len();
        let mut homs = vec![vec![Vec::new(); r]; r];
        for i in 0..r {
            for j in 0..r {
                homs[i][j] = if i == j {
                    adapted_endomorphism_basis(&indecomposables[i])
                } else {
                    hom_basis(&indecomposables[i], &indecomposables[j])
                };
            }
        }
        SubcategorySpec { algebra, name, labels, indecomposables, homs, seed }
    }

    /// The same subcategory with the listed members only.
    pub fn restrict(&self, name: impl Into<String>, keep: &[usize]) -> SubcategorySpec {
        let labels = keep.iter().map(|&i| self.labels[i].clone()).collect();
        let mods: Vec<Module> = keep.iter().map(|&i| self.indecomposables[i].clone()).collect();
        let homs = keep
            .iter()
            .map(|&i| keep.iter().map(|&j| self.homs[i][j].clone()).collect())
            .collect();
        SubcategorySpec {
            algebra: self.algebra.clone(),
            name: name.into(),
            labels,
            indecomposables: mods,
            homs,
            seed: self.seed,
        }
    }

    pub fn algebra(&self) -> &Arc<BasicAlgebra> {
        &self.algebra
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn len(&self) -> usize {
        self.indecomposables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indecomposables.is_empty()
    }

    pub fn indecomposables(&self) -> &[Module] {
        &self.indecomposables
    }

    pub fn module(&self, i: usize) -> &Module {
        &self.indecomposables[i]
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }

    /// Basis of `Hom(M_i, M_j)`; for `i = j` the identity comes first.
    pub fn hom(&self, i: usize, j: usize) -> &[ModuleMorphism] {
        &self.homs[i][j]
    }

    /// Basis of the radical morphisms `M_i -> M_j`.
    pub fn radical(&self, i: usize, j: usize) -> &[ModuleMorphism] {
        if i == j {
            &self.homs[i][j][1..]
        } else {
            &self.homs[i][j]
        }
    }

    pub fn summary(&self) -> SubcategorySummary {
        SubcategorySummary {
            name: self.name.clone(),
            members: self.labels.clone(),
            dimension_vectors: self.indecomposables.iter().map(|m| m.dims().to_vec()).collect(),
        }
    }

    /// Multiset of member indices whose sum is isomorphic to `x`, or `None`
    /// when `x` has a summand outside the list.
    pub fn express(&self, x: &Module) -> Result<Option<Vec<usize>>> {
        if x.is_zero() {
            return Ok(Some(Vec::new()));
        }
        let mut rng = self.rng();
        let d = decompose(x, &mut rng)?;
        let mut out = Vec::new();
        for s in &d.summands {
            match self.position(&s.module) {
                Some(i) => out.push(i),
                None => return Ok(None),
            }
        }
        out.sort_unstable();
        Ok(Some(out))
    }

    pub fn contains(&self, x: &Module) -> Result<bool> {
        Ok(self.express(x)?.is_some())
    }

    /// Index of the member isomorphic to the indecomposable `x`.
    pub fn position(&self, x: &Module) -> Option<usize> {
        self.indecomposables.iter().position(|m| iso_of_indecomposables(m, x).is_some())
    }
}

/// `[id, r_1, ..., r_k]` with the `r_i` spanning the radical of `End(m)`.
pub(crate) fn adapted_endomorphism_basis(m: &Module) -> Vec<ModuleMorphism> {
    let basis = hom_basis(m, m);
    let id = m.identity();
    let f = m.field();
    let mut out = vec![id.clone()];
    let mut sb = SpanBuilder::new(f, id.flatten().len());
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for b in &basis {
        let lambda = crate::exactfield::poly::eigenvalues(&total(b), &mut rng)
            .first()
            .copied()
            .unwrap_or(0);
        let r = b.sub(&id.scale(lambda));
        if !r.is_zero() && sb.insert(&r.flatten()) {
            out.push(r);
        }
    }
    out
}

fn total(f: &ModuleMorphism) -> crate::exactfield::Matrix {
    let blocks: Vec<&crate::exactfield::Matrix> = f.maps().iter().collect();
    crate::exactfield::Matrix::block_diag(f.field(), &blocks)
}
