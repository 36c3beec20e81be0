use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactfield::{Matrix, PrimeField, SpanBuilder};

use super::module::{direct_sum, submodule_from_bases, Module, ModuleMorphism};
use super::quiver::{Path, Quiver, RelationSet};

/// Longest path length explored before declaring the algebra infinite.
const MAX_PATH_LENGTH: usize = 48;
/// Cap on the number of paths from one vertex considered during truncation.
const MAX_PATHS: usize = 20_000;

/// A basic algebra `kQ/I`, with its indecomposable projectives and simples
/// computed eagerly.
///
/// `P_v` has basis the paths out of `v` modulo `I`; arrows act by
/// appending. Each basis vector of `P_v` remembers the path it came from so
/// that morphisms out of projectives can be written down directly.
#[derive(Debug, Clone)]
pub struct BasicAlgebra {
    quiver: Arc<Quiver>,
    field: PrimeField,
    relations: RelationSet,
    projectives: Vec<Module>,
    words: Vec<Vec<Vec<Path>>>,
    simples: Vec<Module>,
    loewy_length: usize,
}

struct Truncation {
    basis: Vec<Vec<Path>>,
    maps: Vec<Matrix>,
    loewy: usize,
}

impl BasicAlgebra {
    /// Builds `kQ/I` for admissible relations.
    pub fn new(quiver: Quiver, relations: RelationSet, field: PrimeField) -> Result<Self> {
        relations.check_admissible(&quiver, field)?;
        Self::from_presentation(quiver, relations, field)
    }

    /// Builds `kQ/I` without the admissibility check. Relations may contain
    /// paths of length one; the arrows must still generate the radical.
    pub fn from_presentation(quiver: Quiver, relations: RelationSet, field: PrimeField) -> Result<Self> {
        for r in &relations.relations {
            for (_, p) in &r.terms {
                if p.start >= quiver.vertex_count() || p.arrows.iter().any(|&a| a >= quiver.arrow_count()) {
                    return Err(Error::InvalidQuiver("relation refers to unknown arrows".into()));
                }
            }
        }
        let quiver = Arc::new(quiver);
        let nv = quiver.vertex_count();
        let mut projectives = Vec::with_capacity(nv);
        let mut words = Vec::with_capacity(nv);
        let mut loewy_length = 0;
        for v in 0..nv {
            let t = truncate(&quiver, &relations, field, v)?;
            loewy_length = loewy_length.max(t.loewy);
            let dims = t.basis.iter().map(Vec::len).collect();
            projectives.push(Module::from_maps(quiver.clone(), field, dims, t.maps)?);
            words.push(t.basis);
        }
        let simples = (0..nv)
            .map(|v| {
                let mut dims = vec![0; nv];
                dims[v] = 1;
                let maps = quiver
                    .arrows()
                    .iter()
                    .map(|a| Matrix::zeros(field, dims[a.target], dims[a.source]))
                    .collect();
                Module::from_maps(quiver.clone(), field, dims, maps).expect("simple module shape")
            })
            .collect();
        let alg = BasicAlgebra { quiver, field, relations, projectives, words, simples, loewy_length };
        for (v, p) in alg.projectives.iter().enumerate() {
            alg.check_relations(p).map_err(|e| {
                Error::InvariantViolation(format!("projective at vertex {v} violates relations: {e}"))
            })?;
        }
        Ok(alg)
    }

    pub fn quiver(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn relations(&self) -> &RelationSet {
        &self.relations
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver.vertex_count()
    }

    pub fn dim(&self) -> usize {
        self.projectives.iter().map(Module::total_dim).sum()
    }

    pub fn loewy_length(&self) -> usize {
        self.loewy_length
    }

    pub fn projective(&self, v: usize) -> &Module {
        &self.projectives[v]
    }

    pub fn projectives(&self) -> &[Module] {
        &self.projectives
    }

    pub fn simple(&self, v: usize) -> &Module {
        &self.simples[v]
    }

    pub fn simples(&self) -> &[Module] {
        &self.simples
    }

    /// Basis paths of `P_v` at vertex `w`.
    pub fn basis_words(&self, v: usize, w: usize) -> &[Path] {
        &self.words[v][w]
    }

    /// Position of the generator `e_v` inside `P_v(v)`.
    pub fn generator_index(&self, v: usize) -> usize {
        self.words[v][v].iter().position(Path::is_empty).expect("trivial path survives")
    }

    /// Validates shapes and relations.
    pub fn make_module(&self, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Module> {
        let m = Module::from_maps(self.quiver.clone(), self.field, dims, maps)?;
        self.check_relations(&m)?;
        Ok(m)
    }

    pub fn check_relations(&self, m: &Module) -> Result<()> {
        for (index, r) in self.relations.relations.iter().enumerate() {
            if !r.evaluate(self.field, m.dims(), m.maps(), &self.quiver).is_zero() {
                return Err(Error::RelationViolated {
                    index,
                    description: r.describe(&self.quiver, self.field),
                });
            }
        }
        Ok(())
    }

    pub fn zero_module(&self) -> Module {
        Module::zero(self.quiver.clone(), self.field)
    }

    /// The morphism `P_v -> target` sending the generator to `x ∈ target_v`.
    pub fn yoneda_map(&self, v: usize, target: &Module, x: &[u64]) -> ModuleMorphism {
        let p = &self.projectives[v];
        let xcol = Matrix::column_vector(self.field, x);
        let maps = (0..self.vertex_count())
            .map(|w| {
                let cols: Vec<Vec<u64>> = self.words[v][w]
                    .iter()
                    .map(|q| target.path_matrix(q).mul(&xcol).column(0))
                    .collect();
                Matrix::from_columns(self.field, target.dim(w), &cols)
            })
            .collect();
        ModuleMorphism::new_unchecked(p, target, maps)
    }

    /// `rad M`, the sum of the images of all arrows, with its inclusion.
    pub fn radical(&self, m: &Module) -> (Module, ModuleMorphism) {
        let bases = (0..self.vertex_count())
            .map(|w| self.radical_basis(m, w))
            .collect();
        submodule_from_bases(m, bases, self.field)
    }

    fn radical_basis(&self, m: &Module, w: usize) -> Matrix {
        let images: Vec<&Matrix> = self
            .quiver
            .arrows()
            .iter()
            .enumerate()
            .filter(|(_, a)| a.target == w)
            .map(|(i, _)| m.map(i))
            .collect();
        Matrix::hstack(self.field, m.dim(w), &images).column_space()
    }

    /// Vectors lifting a basis of the top `M / rad M`, as `(vertex, vector)`.
    pub fn top_lifts(&self, m: &Module) -> Vec<(usize, Vec<u64>)> {
        let mut out = Vec::new();
        for w in 0..self.vertex_count() {
            let rad = self.radical_basis(m, w);
            let mut sb = SpanBuilder::new(self.field, m.dim(w));
            for c in rad.columns() {
                sb.insert(&c);
            }
            for i in 0..m.dim(w) {
                let mut e = vec![0; m.dim(w)];
                e[i] = 1;
                if sb.insert(&e) {
                    out.push((w, e));
                }
            }
        }
        out
    }

    /// Dimension vector of the top of `m`.
    pub fn top_dims(&self, m: &Module) -> Vec<usize> {
        let mut dims = vec![0; self.vertex_count()];
        for (w, _) in self.top_lifts(m) {
            dims[w] += 1;
        }
        dims
    }

    /// The direct sum `P_{v_1} ⊕ ... ⊕ P_{v_k}`.
    pub fn projective_object(&self, vertices: Vec<usize>) -> ProjectiveObject {
        let parts: Vec<Module> = vertices.iter().map(|&v| self.projectives[v].clone()).collect();
        let module = direct_sum(&self.quiver, self.field, &parts).module;
        ProjectiveObject { module, vertices }
    }

    /// Morphism `⊕ P_{v_s} -> target` sending the `s`-th generator to `xs[s]`.
    pub fn map_from_projective(&self, p: &ProjectiveObject, target: &Module, xs: &[Vec<u64>]) -> ModuleMorphism {
        let maps = (0..self.vertex_count())
            .map(|w| {
                let mut cols = Vec::new();
                for (&v, x) in p.vertices.iter().zip(xs) {
                    let xcol = Matrix::column_vector(self.field, x);
                    for q in &self.words[v][w] {
                        cols.push(target.path_matrix(q).mul(&xcol).column(0));
                    }
                }
                Matrix::from_columns(self.field, target.dim(w), &cols)
            })
            .collect();
        ModuleMorphism::new_unchecked(&p.module, target, maps)
    }

    /// The image of each generator of `p` under `f`.
    pub fn generator_images(&self, p: &ProjectiveObject, f: &ModuleMorphism) -> Vec<Vec<u64>> {
        (0..p.vertices.len())
            .map(|s| {
                let (v, idx) = self.generator_position(p, s);
                f.map(v).column(idx)
            })
            .collect()
    }

    /// Vertex and coordinate of the `s`-th generator of `p`.
    pub fn generator_position(&self, p: &ProjectiveObject, s: usize) -> (usize, usize) {
        let v = p.vertices[s];
        let offset: usize = p.vertices[..s].iter().map(|&u| self.projectives[u].dim(v)).sum();
        (v, offset + self.generator_index(v))
    }

    /// Matrix of `Hom(f, N): Hom(P, N) -> Hom(P', N)` for `f: P' -> P`
    /// between projective objects, using `Hom(P_v, N) ≅ N_v`.
    pub fn hom_pullback_matrix(
        &self,
        source: &ProjectiveObject,
        target: &ProjectiveObject,
        f: &ModuleMorphism,
        n: &Module,
    ) -> Matrix {
        let f_field = self.field;
        let cols_total: usize = target.vertices.iter().map(|&v| n.dim(v)).sum();
        let rows_total: usize = source.vertices.iter().map(|&u| n.dim(u)).sum();
        let mut out = Matrix::zeros(f_field, rows_total, cols_total);
        let images = self.generator_images(source, f);
        let mut r0 = 0;
        for (t, &u) in source.vertices.iter().enumerate() {
            let img = &images[t];
            let mut c0 = 0;
            let mut off = 0;
            for &v in &target.vertices {
                let mut block = Matrix::zeros(f_field, n.dim(u), n.dim(v));
                for (i, q) in self.words[v][u].iter().enumerate() {
                    let c = img[off + i];
                    if c != 0 {
                        block = block.add_scaled(&n.path_matrix(q), c);
                    }
                }
                out.write_block(r0, c0, &block);
                off += self.projectives[v].dim(u);
                c0 += n.dim(v);
            }
            r0 += n.dim(u);
        }
        out
    }
}

/// A direct sum of indecomposable projectives with its summand list.
#[derive(Debug, Clone)]
pub struct ProjectiveObject {
    pub module: Module,
    pub vertices: Vec<usize>,
}

impl ProjectiveObject {
    pub fn is_zero(&self) -> bool {
        self.vertices.is_empty()
    }
}

fn paths_up_to(q: &Quiver, v: usize, max_len: usize) -> Result<Vec<Path>> {
    let mut out = vec![Path::trivial(v)];
    let mut frontier = vec![Path::trivial(v)];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for p in &frontier {
            let end = p.end(q);
            for (i, a) in q.arrows().iter().enumerate() {
                if a.source == end {
                    let mut arrows = p.arrows.clone();
                    arrows.push(i);
                    next.push(Path { start: v, arrows });
                }
            }
        }
        out.extend(next.iter().cloned());
        if out.len() > MAX_PATHS {
            return Err(Error::InfiniteDimensional(max_len));
        }
        frontier = next;
    }
    Ok(out)
}

/// Paths from `v` of length `<= len` ordered longest first, then the span of
/// the truncated ideal, reduced.
fn truncated_quotient(
    q: &Quiver,
    rels: &RelationSet,
    field: PrimeField,
    v: usize,
    len: usize,
) -> Result<(Vec<Path>, HashMap<Path, usize>, Matrix, Vec<usize>)> {
    let mut paths = paths_up_to(q, v, len)?;
    paths.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    let index: HashMap<Path, usize> = paths.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let mut rows: Vec<Vec<u64>> = Vec::new();
    for r in &rels.relations {
        let min = r.min_len();
        if min > len {
            continue;
        }
        let src = r.source();
        let tgt = r.target(q);
        for p in paths.iter().filter(|p| p.end(q) == src && p.len() + min <= len) {
            for suffix in paths_up_to(q, tgt, len - p.len() - min)? {
                let mut row = vec![0u64; paths.len()];
                let mut nonzero = false;
                for (c, term) in &r.terms {
                    let full = p.concat(term).concat(&Path { start: term.end(q), arrows: suffix.arrows.clone() });
                    if full.len() <= len {
                        let i = index[&full];
                        row[i] = field.add(row[i], *c);
                        nonzero |= row[i] != 0;
                    }
                }
                if nonzero {
                    rows.push(row);
                }
            }
        }
    }
    let m = if rows.is_empty() {
        Matrix::zeros(field, 0, paths.len())
    } else {
        Matrix::new(field, rows.len(), paths.len(), rows.concat())
    };
    let rref = m.rref();
    let reduced = rref.reduced.select_rows(&(0..rref.rank).collect::<Vec<_>>());
    Ok((paths, index, reduced, rref.pivots))
}

fn truncate(q: &Quiver, rels: &RelationSet, field: PrimeField, v: usize) -> Result<Truncation> {
    let mut prev_dim = None;
    for len in 0..=MAX_PATH_LENGTH {
        let (paths, _, _, pivots) = truncated_quotient(q, rels, field, v, len)?;
        let dim = paths.len() - pivots.len();
        if prev_dim == Some(dim) {
            return build_projective(q, rels, field, v, len - 1);
        }
        prev_dim = Some(dim);
    }
    Err(Error::InfiniteDimensional(MAX_PATH_LENGTH))
}

fn build_projective(q: &Quiver, rels: &RelationSet, field: PrimeField, v: usize, len: usize) -> Result<Truncation> {
    let (paths, index, reduced, pivots) = truncated_quotient(q, rels, field, v, len)?;
    let nv = q.vertex_count();
    let is_pivot: Vec<bool> = {
        let mut b = vec![false; paths.len()];
        for &c in &pivots {
            b[c] = true;
        }
        b
    };
    // basis: non-pivot paths, grouped by end vertex, shortest first
    let mut basis: Vec<Vec<Path>> = vec![Vec::new(); nv];
    let mut position: HashMap<usize, (usize, usize)> = HashMap::new();
    let mut free: Vec<usize> = (0..paths.len()).filter(|&i| !is_pivot[i]).collect();
    free.sort_by(|&a, &b| paths[a].len().cmp(&paths[b].len()).then_with(|| paths[a].cmp(&paths[b])));
    for i in free {
        let w = paths[i].end(q);
        position.insert(i, (w, basis[w].len()));
        basis[w].push(paths[i].clone());
    }
    let reduce = |path: &Path| -> Vec<(usize, u64)> {
        let mut x = vec![0u64; paths.len()];
        if path.len() > len {
            return Vec::new();
        }
        x[index[path]] = 1;
        for (r, &c) in pivots.iter().enumerate() {
            let coef = x[c];
            if coef != 0 {
                for (j, &e) in reduced.row(r).iter().enumerate() {
                    if e != 0 {
                        x[j] = field.sub(x[j], field.mul(coef, e));
                    }
                }
            }
        }
        x.iter().enumerate().filter(|(_, &c)| c != 0).map(|(j, &c)| (j, c)).collect()
    };
    let mut maps = Vec::with_capacity(q.arrow_count());
    for (ai, a) in q.arrows().iter().enumerate() {
        let mut m = Matrix::zeros(field, basis[a.target].len(), basis[a.source].len());
        for (col, p) in basis[a.source].iter().enumerate() {
            let mut arrows = p.arrows.clone();
            arrows.push(ai);
            let extended = Path { start: v, arrows };
            for (j, c) in reduce(&extended) {
                let (w, row) = position[&j];
                debug_assert_eq!(w, a.target);
                m.set(row, col, c);
            }
        }
        maps.push(m);
    }
    Ok(Truncation { basis, maps, loewy: len + 1 })
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::quivrep::quiver::Relation;

    pub(crate) fn a2() -> BasicAlgebra {
        let q = Quiver::new(&["1", "2"], &[("a", "1", "2")]).unwrap();
        BasicAlgebra::new(q, RelationSet::default(), PrimeField::default()).unwrap()
    }

    pub(crate) fn a3_rad2() -> BasicAlgebra {
        let q = Quiver::new(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")]).unwrap();
        let r = Relation::new(&q, vec![(1, Path::from_arrows(&q, vec![0, 1]).unwrap())]).unwrap();
        BasicAlgebra::new(q, RelationSet::new(vec![r]), PrimeField::default()).unwrap()
    }

    #[test]
    fn a2_projectives() {
        let alg = a2();
        assert_eq!(alg.projective(0).dims(), &[1, 1]);
        assert_eq!(alg.projective(1).dims(), &[0, 1]);
        assert_eq!(alg.dim(), 3);
        assert!(alg.map_from_projective(&alg.projective_object(vec![0]), alg.projective(0), &[vec![1]]).is_iso());
    }

    #[test]
    fn a3_with_zero_relation() {
        let alg = a3_rad2();
        assert_eq!(alg.projective(0).dims(), &[1, 1, 0]);
        assert_eq!(alg.projective(1).dims(), &[0, 1, 1]);
        assert_eq!(alg.projective(2).dims(), &[0, 0, 1]);
        assert_eq!(alg.dim(), 5);
        let f = alg.field();
        // dims (1,1,1) with both arrows 1 violates a*b = 0
        let bad = alg.make_module(vec![1, 1, 1], vec![Matrix::identity(f, 1), Matrix::identity(f, 1)]);
        assert!(matches!(bad, Err(Error::RelationViolated { index: 0, .. })));
        let ok = alg.make_module(vec![1, 1, 1], vec![Matrix::identity(f, 1), Matrix::zeros(f, 1, 1)]);
        assert!(ok.is_ok());
    }

    #[test]
    fn commutativity_relation() {
        // square 1 -> 2 -> 4, 1 -> 3 -> 4 with ab = cd
        let q = Quiver::new(
            &["1", "2", "3", "4"],
            &[("a", "1", "2"), ("b", "2", "4"), ("c", "1", "3"), ("d", "3", "4")],
        )
        .unwrap();
        let f = PrimeField::default();
        let r = Relation::new(
            &q,
            vec![
                (1, Path::from_arrows(&q, vec![0, 1]).unwrap()),
                (f.neg(1), Path::from_arrows(&q, vec![2, 3]).unwrap()),
            ],
        )
        .unwrap();
        let alg = BasicAlgebra::new(q, RelationSet::new(vec![r]), f).unwrap();
        assert_eq!(alg.projective(0).dims(), &[1, 1, 1, 1]);
        assert_eq!(alg.dim(), 4 + 2 + 2 + 1);
    }

    #[test]
    fn loop_with_nilpotency() {
        let q = Quiver::new(&["1"], &[("x", "1", "1")]).unwrap();
        let r = Relation::new(&q, vec![(1, Path::from_arrows(&q, vec![0, 0, 0]).unwrap())]).unwrap();
        let alg = BasicAlgebra::new(q.clone(), RelationSet::new(vec![r]), PrimeField::default()).unwrap();
        assert_eq!(alg.dim(), 3);
        let free = BasicAlgebra::new(q, RelationSet::default(), PrimeField::default());
        assert!(matches!(free, Err(Error::InfiniteDimensional(_))));
    }

    #[test]
    fn inadmissible_rejected() {
        let q = Quiver::new(&["1", "2"], &[("a", "1", "2")]).unwrap();
        let r = Relation::new(&q, vec![(1, Path::arrow(&q, 0))]).unwrap();
        assert!(matches!(
            BasicAlgebra::new(q, RelationSet::new(vec![r]), PrimeField::default()),
            Err(Error::Inadmissible(_))
        ));
    }
}
