use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactfield::{Matrix, PrimeField, SpanBuilder};

use super::quiver::{Path, Quiver};

/// A finite-dimensional representation of a quiver: one vector space per
/// vertex and one matrix (`dims[target] x dims[source]`) per arrow.
///
/// The same type carries modules over `kQ/I` and functors on a subcategory
/// (modules over its endomorphism algebra); the quiver supplies the shape and
/// relation checking is done by whoever builds the module.
#[derive(Debug, Clone)]
pub struct Module {
    quiver: Arc<Quiver>,
    field: PrimeField,
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

impl PartialEq for Module {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.quiver, &other.quiver) || self.quiver == other.quiver)
            && self.field == other.field
            && self.dims == other.dims
            && self.maps == other.maps
    }
}

impl Eq for Module {}

impl Module {
    /// Builds a module, checking matrix shapes only.
    pub fn from_maps(
        quiver: Arc<Quiver>,
        field: PrimeField,
        dims: Vec<usize>,
        maps: Vec<Matrix>,
    ) -> Result<Self> {
        if dims.len() != quiver.vertex_count() {
            return Err(Error::DimensionMismatch(format!(
                "{} dimensions given for {} vertices",
                dims.len(),
                quiver.vertex_count()
            )));
        }
        if maps.len() != quiver.arrow_count() {
            return Err(Error::DimensionMismatch(format!(
                "{} matrices given for {} arrows",
                maps.len(),
                quiver.arrow_count()
            )));
        }
        for (a, m) in quiver.arrows().iter().zip(&maps) {
            if m.shape() != (dims[a.target], dims[a.source]) {
                return Err(Error::DimensionMismatch(format!(
                    "arrow `{}` needs a {}x{} matrix, got {}x{}",
                    a.name,
                    dims[a.target],
                    dims[a.source],
                    m.rows(),
                    m.cols()
                )));
            }
            if m.field() != field {
                return Err(Error::DimensionMismatch(format!("arrow `{}`: wrong field", a.name)));
            }
        }
        Ok(Module { quiver, field, dims, maps })
    }

    pub fn zero(quiver: Arc<Quiver>, field: PrimeField) -> Self {
        let dims = vec![0; quiver.vertex_count()];
        let maps = quiver.arrows().iter().map(|_| Matrix::zeros(field, 0, 0)).collect();
        Module { quiver, field, dims, maps }
    }

    pub fn quiver(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, v: usize) -> usize {
        self.dims[v]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn map(&self, arrow: usize) -> &Matrix {
        &self.maps[arrow]
    }

    pub fn path_matrix(&self, path: &Path) -> Matrix {
        path.evaluate(self.field, &self.dims, &self.maps)
    }

    pub(crate) fn same_shape(&self, other: &Module) -> bool {
        (Arc::ptr_eq(&self.quiver, &other.quiver) || self.quiver == other.quiver)
            && self.field == other.field
    }

    /// Offsets of each vertex space inside the concatenated total space.
    pub fn offsets(&self) -> Vec<usize> {
        let mut acc = 0;
        self.dims
            .iter()
            .map(|&d| {
                let o = acc;
                acc += d;
                o
            })
            .collect()
    }

    pub fn identity(&self) -> ModuleMorphism {
        let maps = self.dims.iter().map(|&d| Matrix::identity(self.field, d)).collect();
        ModuleMorphism { source: self.clone(), target: self.clone(), maps }
    }
}

/// A morphism of representations: one matrix per vertex, commuting with
/// every arrow.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleMorphism {
    source: Module,
    target: Module,
    maps: Vec<Matrix>,
}

impl ModuleMorphism {
    /// Validates shapes and the intertwining condition.
    pub fn new(source: &Module, target: &Module, maps: Vec<Matrix>) -> Result<Self> {
        if !source.same_shape(target) {
            return Err(Error::NotAMorphism("source and target live over different quivers".into()));
        }
        if maps.len() != source.dims.len() {
            return Err(Error::NotAMorphism("wrong number of vertex maps".into()));
        }
        for (v, m) in maps.iter().enumerate() {
            if m.shape() != (target.dims[v], source.dims[v]) {
                return Err(Error::NotAMorphism(format!(
                    "vertex {v}: expected {}x{}, got {}x{}",
                    target.dims[v],
                    source.dims[v],
                    m.rows(),
                    m.cols()
                )));
            }
        }
        for (i, a) in source.quiver.arrows().iter().enumerate() {
            let lhs = maps[a.target].mul(&source.maps[i]);
            let rhs = target.maps[i].mul(&maps[a.source]);
            if lhs != rhs {
                return Err(Error::NotAMorphism(format!("does not commute with arrow `{}`", a.name)));
            }
        }
        Ok(ModuleMorphism { source: source.clone(), target: target.clone(), maps })
    }

    pub(crate) fn new_unchecked(source: &Module, target: &Module, maps: Vec<Matrix>) -> Self {
        debug_assert!(ModuleMorphism::new(source, target, maps.clone()).is_ok());
        ModuleMorphism { source: source.clone(), target: target.clone(), maps }
    }

    pub fn zero(source: &Module, target: &Module) -> Self {
        let f = source.field;
        let maps = (0..source.dims.len())
            .map(|v| Matrix::zeros(f, target.dims[v], source.dims[v]))
            .collect();
        ModuleMorphism { source: source.clone(), target: target.clone(), maps }
    }

    pub fn source(&self) -> &Module {
        &self.source
    }

    pub fn target(&self) -> &Module {
        &self.target
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn map(&self, v: usize) -> &Matrix {
        &self.maps[v]
    }

    pub fn field(&self) -> PrimeField {
        self.source.field
    }

    /// `self ∘ first`
    pub fn compose(&self, first: &ModuleMorphism) -> ModuleMorphism {
        assert_eq!(first.target.dims, self.source.dims, "composition of incompatible morphisms");
        let maps = self.maps.iter().zip(&first.maps).map(|(a, b)| a.mul(b)).collect();
        ModuleMorphism { source: first.source.clone(), target: self.target.clone(), maps }
    }

    pub fn add(&self, other: &ModuleMorphism) -> ModuleMorphism {
        let maps = self.maps.iter().zip(&other.maps).map(|(a, b)| a.add(b)).collect();
        ModuleMorphism { source: self.source.clone(), target: self.target.clone(), maps }
    }

    pub fn sub(&self, other: &ModuleMorphism) -> ModuleMorphism {
        let maps = self.maps.iter().zip(&other.maps).map(|(a, b)| a.sub(b)).collect();
        ModuleMorphism { source: self.source.clone(), target: self.target.clone(), maps }
    }

    pub fn scale(&self, s: u64) -> ModuleMorphism {
        let maps = self.maps.iter().map(|a| a.scale(s)).collect();
        ModuleMorphism { source: self.source.clone(), target: self.target.clone(), maps }
    }

    pub fn neg(&self) -> ModuleMorphism {
        let maps = self.maps.iter().map(|a| a.neg()).collect();
        ModuleMorphism { source: self.source.clone(), target: self.target.clone(), maps }
    }

    pub fn is_zero(&self) -> bool {
        self.maps.iter().all(Matrix::is_zero)
    }

    pub fn is_mono(&self) -> bool {
        self.maps.iter().all(|m| m.rank() == m.cols())
    }

    pub fn is_epi(&self) -> bool {
        self.maps.iter().all(|m| m.rank() == m.rows())
    }

    pub fn is_iso(&self) -> bool {
        self.maps.iter().all(Matrix::is_invertible)
    }

    pub fn rank(&self) -> usize {
        self.maps.iter().map(Matrix::rank).sum()
    }

    pub fn inverse(&self) -> Option<ModuleMorphism> {
        let maps = self.maps.iter().map(Matrix::inverse).collect::<Option<Vec<_>>>()?;
        Some(ModuleMorphism { source: self.target.clone(), target: self.source.clone(), maps })
    }

    /// All vertex matrices concatenated row-major; an injective linear
    /// coordinate map on `Hom(source, target)`.
    pub fn flatten(&self) -> Vec<u64> {
        self.maps.iter().flat_map(|m| m.data().iter().copied()).collect()
    }

    /// `self ∘ ... ∘ self` (`k` times); `k = 0` gives the identity.
    pub fn power(&self, k: u32) -> ModuleMorphism {
        let mut acc = self.source.identity();
        for _ in 0..k {
            acc = self.compose(&acc);
        }
        acc
    }

    /// Linear combination of morphisms sharing source and target.
    pub fn combination(
        source: &Module,
        target: &Module,
        basis: &[ModuleMorphism],
        coeffs: &[u64],
    ) -> ModuleMorphism {
        let mut acc = ModuleMorphism::zero(source, target);
        for (b, &c) in basis.iter().zip(coeffs) {
            if c != 0 {
                acc = acc.add(&b.scale(c));
            }
        }
        acc
    }
}

/// Basis of `Hom(m, n)`: the solution space of the intertwining equations,
/// in the deterministic order produced by row reduction.
pub fn hom_basis(m: &Module, n: &Module) -> Vec<ModuleMorphism> {
    assert!(m.same_shape(n), "hom between modules over different quivers");
    let f = m.field;
    let q = &m.quiver;
    let nv = m.dims.len();
    let mut offsets = Vec::with_capacity(nv);
    let mut unknowns = 0;
    for v in 0..nv {
        offsets.push(unknowns);
        unknowns += n.dims[v] * m.dims[v];
    }
    if unknowns == 0 {
        return Vec::new();
    }
    let eq_count: usize = q.arrows().iter().map(|a| n.dims[a.target] * m.dims[a.source]).sum();
    let mut sys = Matrix::zeros(f, eq_count, unknowns);
    let mut row = 0;
    for (i, a) in q.arrows().iter().enumerate() {
        let (s, t) = (a.source, a.target);
        let ma = &m.maps[i];
        let na = &n.maps[i];
        // (f_t M_a - N_a f_s)[r][c] = 0
        for r in 0..n.dims[t] {
            for c in 0..m.dims[s] {
                for k in 0..m.dims[t] {
                    let coef = ma.get(k, c);
                    if coef != 0 {
                        let idx = offsets[t] + r * m.dims[t] + k;
                        sys.set(row, idx, f.add(sys.get(row, idx), coef));
                    }
                }
                for k in 0..n.dims[s] {
                    let coef = na.get(r, k);
                    if coef != 0 {
                        let idx = offsets[s] + k * m.dims[s] + c;
                        sys.set(row, idx, f.sub(sys.get(row, idx), coef));
                    }
                }
                row += 1;
            }
        }
    }
    let kernel = sys.kernel_basis();
    (0..kernel.cols())
        .map(|j| {
            let col = kernel.column(j);
            let maps = (0..nv)
                .map(|v| {
                    let start = offsets[v];
                    let len = n.dims[v] * m.dims[v];
                    Matrix::new(f, n.dims[v], m.dims[v], col[start..start + len].to_vec())
                })
                .collect();
            ModuleMorphism { source: m.clone(), target: n.clone(), maps }
        })
        .collect()
}

pub fn hom_dim(m: &Module, n: &Module) -> usize {
    hom_basis(m, n).len()
}

/// Coordinates of `g` in a basis of morphisms, or `None` if not in the span.
pub fn coordinates(basis: &[ModuleMorphism], g: &ModuleMorphism) -> Option<Vec<u64>> {
    let f = g.field();
    let flat: Vec<Vec<u64>> = basis.iter().map(ModuleMorphism::flatten).collect();
    let len = g.flatten().len();
    let a = Matrix::from_columns(f, len, &flat);
    let b = Matrix::column_vector(f, &g.flatten());
    let sol = a.solve(&b).ok()??;
    Some(sol.particular.column(0))
}

/// Rank of a family of morphisms with a common source and target.
pub fn span_rank(morphisms: &[ModuleMorphism]) -> usize {
    let Some(first) = morphisms.first() else {
        return 0;
    };
    let len = first.flatten().len();
    let mut sb = SpanBuilder::new(first.field(), len);
    for m in morphisms {
        sb.insert(&m.flatten());
    }
    sb.dim()
}

/// The kernel of `f` together with its inclusion into the source.
pub fn kernel(f: &ModuleMorphism) -> (Module, ModuleMorphism) {
    let m = &f.source;
    let field = m.field;
    let bases: Vec<Matrix> = f.maps.iter().map(Matrix::kernel_basis).collect();
    submodule_from_bases(m, bases, field)
}

/// Builds the submodule of `m` spanned vertexwise by the columns of `bases`;
/// the spans must be closed under the arrows.
pub(crate) fn submodule_from_bases(
    m: &Module,
    bases: Vec<Matrix>,
    field: PrimeField,
) -> (Module, ModuleMorphism) {
    let dims: Vec<usize> = bases.iter().map(Matrix::cols).collect();
    let maps = m
        .quiver
        .arrows()
        .iter()
        .enumerate()
        .map(|(i, a)| {
            let image = m.maps[i].mul(&bases[a.source]);
            bases[a.target]
                .solve_unique(&image)
                .expect("subspace not closed under arrow action")
        })
        .collect();
    let k = Module { quiver: m.quiver.clone(), field, dims, maps };
    let incl = ModuleMorphism { source: k.clone(), target: m.clone(), maps: bases };
    (k, incl)
}

/// The cokernel of `f` together with the projection from the target.
pub fn cokernel(f: &ModuleMorphism) -> (Module, ModuleMorphism) {
    let n = &f.target;
    let projections: Vec<Matrix> = f.maps.iter().map(Matrix::cokernel_projection).collect();
    quotient_from_projections(n, projections)
}

pub(crate) fn quotient_from_projections(n: &Module, projections: Vec<Matrix>) -> (Module, ModuleMorphism) {
    let field = n.field;
    let dims: Vec<usize> = projections.iter().map(Matrix::rows).collect();
    let sections: Vec<Matrix> = projections
        .iter()
        .map(|q| q.right_inverse().expect("projection is surjective"))
        .collect();
    let maps = n
        .quiver
        .arrows()
        .iter()
        .enumerate()
        .map(|(i, a)| projections[a.target].mul(&n.maps[i]).mul(&sections[a.source]))
        .collect();
    let c = Module { quiver: n.quiver.clone(), field, dims, maps };
    let proj = ModuleMorphism { source: n.clone(), target: c.clone(), maps: projections };
    (c, proj)
}

/// The image of `f`: its inclusion into the target and the corestriction
/// `source -> image`.
pub fn image(f: &ModuleMorphism) -> (Module, ModuleMorphism, ModuleMorphism) {
    let bases: Vec<Matrix> = f.maps.iter().map(Matrix::column_space).collect();
    let (im, incl) = submodule_from_bases(&f.target, bases, f.field());
    let maps = f
        .maps
        .iter()
        .zip(&incl.maps)
        .map(|(fv, iv)| iv.solve_unique(fv).expect("image contains f"))
        .collect();
    let corestriction = ModuleMorphism { source: f.source.clone(), target: im.clone(), maps };
    (im, incl, corestriction)
}

/// Finds `h` with `h ∘ epi = g`, when `g` vanishes on the kernel of `epi`.
pub fn factor_through_epi(epi: &ModuleMorphism, g: &ModuleMorphism) -> Option<ModuleMorphism> {
    let mut maps = Vec::with_capacity(epi.maps.len());
    for (e, gv) in epi.maps.iter().zip(&g.maps) {
        // h e = g  <=>  e^T h^T = g^T
        let ht = e.transpose().solve(&gv.transpose()).ok()??;
        maps.push(ht.particular.transpose());
    }
    let h = ModuleMorphism { source: epi.target.clone(), target: g.target.clone(), maps };
    (h.compose(epi) == *g).then_some(h)
}

/// Finds `h` with `mono ∘ h = g`, when `g` lands in the image of `mono`.
pub fn factor_through_mono(mono: &ModuleMorphism, g: &ModuleMorphism) -> Option<ModuleMorphism> {
    let mut maps = Vec::with_capacity(mono.maps.len());
    for (m, gv) in mono.maps.iter().zip(&g.maps) {
        maps.push(m.solve(gv).ok()??.particular);
    }
    let h = ModuleMorphism { source: g.source.clone(), target: mono.source.clone(), maps };
    (mono.compose(&h) == *g).then_some(h)
}

/// A direct sum with its structure maps.
#[derive(Debug, Clone)]
pub struct DirectSum {
    pub module: Module,
    pub injections: Vec<ModuleMorphism>,
    pub projections: Vec<ModuleMorphism>,
}

pub fn direct_sum(quiver: &Arc<Quiver>, field: PrimeField, parts: &[Module]) -> DirectSum {
    let nv = quiver.vertex_count();
    let dims: Vec<usize> = (0..nv).map(|v| parts.iter().map(|p| p.dims[v]).sum()).collect();
    let maps = (0..quiver.arrow_count())
        .map(|i| {
            let blocks: Vec<&Matrix> = parts.iter().map(|p| &p.maps[i]).collect();
            Matrix::block_diag(field, &blocks)
        })
        .collect();
    let module = Module { quiver: quiver.clone(), field, dims: dims.clone(), maps };
    let mut injections = Vec::with_capacity(parts.len());
    let mut projections = Vec::with_capacity(parts.len());
    let mut offs = vec![0usize; nv];
    for part in parts {
        let mut inj = Vec::with_capacity(nv);
        let mut proj = Vec::with_capacity(nv);
        for v in 0..nv {
            let mut i = Matrix::zeros(field, dims[v], part.dims[v]);
            let mut p = Matrix::zeros(field, part.dims[v], dims[v]);
            for k in 0..part.dims[v] {
                i.set(offs[v] + k, k, 1);
                p.set(k, offs[v] + k, 1);
            }
            inj.push(i);
            proj.push(p);
            offs[v] += part.dims[v];
        }
        injections.push(ModuleMorphism { source: part.clone(), target: module.clone(), maps: inj });
        projections.push(ModuleMorphism { source: module.clone(), target: part.clone(), maps: proj });
    }
    DirectSum { module, injections, projections }
}

/// The morphism `⊕ sources -> ⊕ targets` with the given blocks
/// (`blocks[t][s]: sources[s] -> targets[t]`).
pub fn block_morphism(
    source: &DirectSum,
    target: &DirectSum,
    blocks: &[Vec<ModuleMorphism>],
) -> ModuleMorphism {
    let mut acc = ModuleMorphism::zero(&source.module, &target.module);
    for (t, row) in blocks.iter().enumerate() {
        for (s, b) in row.iter().enumerate() {
            let piece = target.injections[t].compose(b).compose(&source.projections[s]);
            acc = acc.add(&piece);
        }
    }
    acc
}

/// A bounded cochain complex `objects[0] -> objects[1] -> ...`.
#[derive(Debug, Clone)]
pub struct Complex {
    pub objects: Vec<Module>,
    pub differentials: Vec<ModuleMorphism>,
}

impl Complex {
    /// Checks shapes and that consecutive composites vanish.
    pub fn new(objects: Vec<Module>, differentials: Vec<ModuleMorphism>) -> Result<Self> {
        if objects.len() != differentials.len() + 1 && !(objects.is_empty() && differentials.is_empty()) {
            return Err(Error::DimensionMismatch(format!(
                "{} objects need {} differentials, got {}",
                objects.len(),
                objects.len().saturating_sub(1),
                differentials.len()
            )));
        }
        for (k, d) in differentials.iter().enumerate() {
            if d.source.dims != objects[k].dims || d.target.dims != objects[k + 1].dims {
                return Err(Error::DimensionMismatch(format!("differential {k} has the wrong endpoints")));
            }
        }
        let c = Complex { objects, differentials };
        if let Some(k) = c.first_nonzero_composite() {
            return Err(Error::InvariantViolation(format!("d{} ∘ d{} != 0", k + 1, k)));
        }
        Ok(c)
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    pub fn first_nonzero_composite(&self) -> Option<usize> {
        self.differentials
            .windows(2)
            .position(|w| !w[1].compose(&w[0]).is_zero())
    }

    pub fn is_complex(&self) -> bool {
        self.first_nonzero_composite().is_none()
    }

    /// Dimension of the cohomology at `objects[k]` (zero maps are assumed at
    /// both ends).
    pub fn cohomology_dim(&self, k: usize) -> usize {
        let total = self.objects[k].total_dim();
        let out_rank = self.differentials.get(k).map_or(0, ModuleMorphism::rank);
        let in_rank = if k == 0 { 0 } else { self.differentials[k - 1].rank() };
        total - out_rank - in_rank
    }

    pub fn is_exact_at(&self, k: usize) -> bool {
        self.cohomology_dim(k) == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quivrep::algebra::tests::a2;

    #[test]
    fn hom_examples_over_a2() {
        let alg = a2();
        let p1 = alg.projective(0).clone();
        let s1 = alg.simple(0).clone();
        let s2 = alg.simple(1).clone();
        assert_eq!(p1.dims(), &[1, 1]);
        assert_eq!(hom_dim(&p1, &s1), 1);
        assert_eq!(hom_dim(&p1, &s2), 0);
        let end = hom_basis(&p1, &p1);
        assert!(end.iter().any(ModuleMorphism::is_iso));
    }

    #[test]
    fn kernel_cokernel_basics() {
        let alg = a2();
        let p1 = alg.projective(0).clone();
        let id = p1.identity();
        let (c, _) = cokernel(&id);
        assert!(c.is_zero());
        let z = ModuleMorphism::zero(&p1, alg.simple(0));
        let (k, incl) = kernel(&z);
        assert_eq!(k.dims(), p1.dims());
        assert!(incl.is_iso());

        // S2 -> P1 has cokernel S1
        let s2 = alg.simple(1).clone();
        let incl = hom_basis(&s2, &p1).pop().unwrap();
        assert!(incl.is_mono());
        let (c, q) = cokernel(&incl);
        assert_eq!(c.dims(), &[1, 0]);
        assert!(q.is_epi());
        assert!(q.compose(&incl).is_zero());
    }

    #[test]
    fn image_factorisation() {
        let alg = a2();
        let p1 = alg.projective(0).clone();
        let s1 = alg.simple(0).clone();
        let f = hom_basis(&p1, &s1).pop().unwrap();
        let (im, incl, co) = image(&f);
        assert_eq!(im.dims(), &[1, 0]);
        assert_eq!(incl.compose(&co), f);
    }
}
