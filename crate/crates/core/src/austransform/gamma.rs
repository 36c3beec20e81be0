use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::nabelian::SubcategorySpec;
use crate::quivrep::{coordinates, BasicAlgebra, ModuleMorphism, Path, Quiver, Relation, RelationSet};

/// One basis morphism `M_source -> M_target` of `Γ`.
#[derive(Debug, Clone)]
pub struct BasisElement {
    pub label: String,
    pub source: usize,
    pub target: usize,
    pub morphism: ModuleMorphism,
    /// Index within `spec.hom(source, target)`.
    pub index: usize,
}

/// `Γ = End(⊕ M_i)` by structure constants: `product(a, b)` holds the
/// coordinates of `basis[b] ∘ basis[a]` when the composite is defined.
#[derive(Debug, Clone)]
pub struct BasedAlgebra {
    pub basis: Vec<BasisElement>,
    products: Vec<Vec<Option<Vec<(usize, u64)>>>>,
    /// Basis index of the identity of each member.
    pub idempotents: Vec<usize>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct GammaSummary {
    pub dim: usize,
    pub vertices: Vec<String>,
    pub radical_generators: usize,
    pub relations: usize,
    pub associative_triples: usize,
}

impl BasedAlgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of `basis[b] ∘ basis[a]`, `None` when not composable.
    pub fn product(&self, a: usize, b: usize) -> Option<&[(usize, u64)]> {
        self.products[a][b].as_deref()
    }

    pub fn position(&self, source: usize, target: usize, index: usize) -> usize {
        position_in(&self.basis, source, target, index)
    }

    /// Coordinates of `y ∘ x` for sparse `x` and `y`.
    fn compose_sparse(&self, x: &[(usize, u64)], y: &[(usize, u64)], p: u64) -> Vec<(usize, u64)> {
        let mut out = vec![0u64; self.dim()];
        for &(a, c) in x {
            for &(b, d) in y {
                if let Some(ps) = self.product(a, b) {
                    for &(k, e) in ps {
                        out[k] = (out[k] + c * d % p * e) % p;
                    }
                }
            }
        }
        out.into_iter().enumerate().filter(|(_, c)| *c != 0).collect()
    }

    /// Verifies `(c ∘ b) ∘ a = c ∘ (b ∘ a)` on every composable triple and the
    /// unit laws for the idempotents. Returns the number of triples checked.
    pub fn check(&self, p: u64) -> Result<usize> {
        let n = self.dim();
        let mut checked = 0;
        for a in 0..n {
            for b in 0..n {
                let Some(ba) = self.product(a, b) else { continue };
                for c in 0..n {
                    let Some(cb) = self.product(b, c) else { continue };
                    let left = self.compose_sparse(ba, &[(c, 1)], p);
                    let right = self.compose_sparse(&[(a, 1)], cb, p);
                    if left != right {
                        return Err(Error::InvariantViolation(format!(
                            "structure constants are not associative on ({}, {}, {})",
                            self.basis[a].label, self.basis[b].label, self.basis[c].label
                        )));
                    }
                    checked += 1;
                }
            }
        }
        for (i, &e) in self.idempotents.iter().enumerate() {
            for x in 0..n {
                let el = &self.basis[x];
                if el.source == i && self.product(e, x) != Some(&[(x, 1)][..]) {
                    return Err(Error::InvariantViolation(format!("identity of member {i} is not a right unit")));
                }
                if el.target == i && self.product(x, e) != Some(&[(x, 1)][..]) {
                    return Err(Error::InvariantViolation(format!("identity of member {i} is not a left unit")));
                }
            }
        }
        Ok(checked)
    }
}

fn position_in(basis: &[BasisElement], source: usize, target: usize, index: usize) -> usize {
    basis
        .iter()
        .position(|e| e.source == source && e.target == target && e.index == index)
        .expect("basis element present")
}

/// `Γ` together with the quiver presentation used for its modules.
///
/// A `Γ`-module is a contravariant functor on the subcategory: the vertex of
/// member `i` carries `F(M_i)`, and a radical basis morphism `b: M_i -> M_j`
/// becomes an arrow `j -> i`. The path `[b_1, b_2]` evaluates to
/// `F(b_2) F(b_1) = F(b_1 ∘ b_2)`.
#[derive(Debug, Clone)]
pub struct Gamma {
    pub spec: SubcategorySpec,
    pub based: BasedAlgebra,
    pub algebra: Arc<BasicAlgebra>,
    /// Basis index of each arrow.
    pub arrow_basis: Vec<usize>,
    pub associative_triples: usize,
}

/// Builds `Γ` from the Hom bases of the subcategory, verifies associativity
/// and the unit laws, and presents it by generators and relations.
pub fn endomorphism_algebra(spec: &SubcategorySpec) -> Result<Gamma> {
    let r = spec.len();
    let mut basis = Vec::new();
    let mut idempotents = Vec::new();
    for i in 0..r {
        for j in 0..r {
            for (k, h) in spec.hom(i, j).iter().enumerate() {
                if i == j && k == 0 {
                    idempotents.push(basis.len());
                }
                let label = if i == j && k == 0 {
                    format!("1_{}", spec.label(i))
                } else {
                    format!("{}>{}#{}", spec.label(i), spec.label(j), k)
                };
                basis.push(BasisElement { label, source: i, target: j, morphism: h.clone(), index: k });
            }
        }
    }
    let n = basis.len();
    let mut products = vec![vec![None; n]; n];
    for a in 0..n {
        for b in 0..n {
            if basis[a].target != basis[b].source {
                continue;
            }
            let (s, t) = (basis[a].source, basis[b].target);
            let comp = basis[b].morphism.compose(&basis[a].morphism);
            let coords = coordinates(spec.hom(s, t), &comp).ok_or_else(|| {
                Error::InvariantViolation("composite outside the Hom space".into())
            })?;
            let sparse: Vec<(usize, u64)> = coords
                .into_iter()
                .enumerate()
                .filter(|(_, c)| *c != 0)
                .map(|(k, c)| (position_in(&basis, s, t, k), c))
                .collect();
            products[a][b] = Some(sparse);
        }
    }
    let based = BasedAlgebra { basis, products, idempotents };
    let field = spec.algebra().field();
    let associative_triples = based.check(field.modulus())?;

    let vertices: Vec<String> = spec.labels().to_vec();
    let arrow_basis: Vec<usize> = (0..n).filter(|&x| !based.idempotents.contains(&x)).collect();
    let arrow_names: Vec<(String, String, String)> = arrow_basis
        .iter()
        .map(|&x| {
            let e = &based.basis[x];
            (e.label.clone(), vertices[e.target].clone(), vertices[e.source].clone())
        })
        .collect();
    let arrow_refs: Vec<(&str, &str, &str)> =
        arrow_names.iter().map(|(a, b, c)| (a.as_str(), b.as_str(), c.as_str())).collect();
    let vrefs: Vec<&str> = vertices.iter().map(String::as_str).collect();
    let quiver = Quiver::new(&vrefs, &arrow_refs)?;
    let arrow_of = |x: usize| arrow_basis.iter().position(|&y| y == x);
    let p = field.modulus();
    let mut relations = Vec::new();
    // path [e_b1, e_b2] = Σ c e_m where b1 ∘ b2 = Σ c b_m
    for (a1, &b1) in arrow_basis.iter().enumerate() {
        for (a2, &b2) in arrow_basis.iter().enumerate() {
            if based.basis[b2].target != based.basis[b1].source {
                continue;
            }
            let prod = based.product(b2, b1).expect("composable");
            let mut terms = vec![(1u64, Path::from_arrows(&quiver, vec![a1, a2])?)];
            for &(m, c) in prod {
                let a = arrow_of(m).ok_or_else(|| {
                    Error::InvariantViolation("radical composite has an identity component".into())
                })?;
                terms.push(((p - c) % p, Path::from_arrows(&quiver, vec![a])?));
            }
            relations.push(Relation::new(&quiver, terms)?);
        }
    }
    let algebra = BasicAlgebra::from_presentation(quiver, RelationSet::new(relations), field)?;
    if algebra.dim() != based.dim() {
        return Err(Error::InvariantViolation(format!(
            "presentation of the endomorphism algebra has dimension {} instead of {}",
            algebra.dim(),
            based.dim()
        )));
    }
    Ok(Gamma { spec: spec.clone(), based, algebra: Arc::new(algebra), arrow_basis, associative_triples })
}

impl Gamma {
    pub fn summary(&self) -> GammaSummary {
        GammaSummary {
            dim: self.based.dim(),
            vertices: self.spec.labels().to_vec(),
            radical_generators: self.arrow_basis.len(),
            relations: self.algebra.relations().len(),
            associative_triples: self.associative_triples,
        }
    }

    /// The morphism `b_1 ∘ ... ∘ b_k: M_w -> M_v` of a basis word of `P_v`
    /// at vertex `w`.
    pub fn word_morphism(&self, path: &Path) -> ModuleMorphism {
        let spec = &self.spec;
        let mut acc = spec.module(path.start).identity();
        for &a in &path.arrows {
            let b = &self.based.basis[self.arrow_basis[a]].morphism;
            acc = acc.compose(b);
        }
        acc
    }
}
