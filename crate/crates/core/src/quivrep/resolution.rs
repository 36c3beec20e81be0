use crate::exactfield::{Matrix, SpanBuilder};

use super::algebra::{BasicAlgebra, ProjectiveObject};
use super::module::{hom_dim, kernel, Complex, Module, ModuleMorphism};

/// A projective cover `P -> M`.
#[derive(Debug, Clone)]
pub struct ProjectiveCover {
    pub object: ProjectiveObject,
    pub map: ModuleMorphism,
}

pub fn projective_cover(alg: &BasicAlgebra, m: &Module) -> ProjectiveCover {
    let lifts = alg.top_lifts(m);
    let vertices: Vec<usize> = lifts.iter().map(|(v, _)| *v).collect();
    let xs: Vec<Vec<u64>> = lifts.into_iter().map(|(_, x)| x).collect();
    let object = alg.projective_object(vertices);
    let map = alg.map_from_projective(&object, m, &xs);
    debug_assert!(map.is_epi());
    ProjectiveCover { object, map }
}

pub fn is_projective(alg: &BasicAlgebra, m: &Module) -> bool {
    projective_cover(alg, m).object.module.total_dim() == m.total_dim()
}

/// `Ext^1(S, m) = 0` for every simple `S`.
pub fn is_injective(alg: &BasicAlgebra, m: &Module) -> bool {
    alg.simples().iter().all(|s| ext_dim(alg, s, m, 1) == 0)
}

/// A minimal projective resolution
/// `... -> P_2 -> P_1 -> P_0 -> M -> 0`, truncated after `P_length`.
#[derive(Debug, Clone)]
pub struct ProjectiveResolution {
    pub module: Module,
    /// `terms[k] = P_k`.
    pub terms: Vec<ProjectiveObject>,
    /// `differentials[k-1] = d_k: P_k -> P_{k-1}`, for `k >= 1`.
    pub differentials: Vec<ModuleMorphism>,
    pub augmentation: ModuleMorphism,
}

impl ProjectiveResolution {
    /// Index of the first zero term, if the resolution terminates within
    /// the computed range.
    pub fn projective_dimension(&self) -> Option<usize> {
        self.terms.iter().position(ProjectiveObject::is_zero).map(|k| k.saturating_sub(1))
    }

    /// The resolution as a cochain complex `P_L -> ... -> P_1 -> P_0`.
    pub fn to_complex(&self) -> Complex {
        let objects = self.terms.iter().rev().map(|p| p.module.clone()).collect();
        let differentials = self.differentials.iter().rev().cloned().collect();
        Complex::new(objects, differentials).expect("resolution differentials compose to zero")
    }
}

pub fn projective_resolution(alg: &BasicAlgebra, m: &Module, length: usize) -> ProjectiveResolution {
    let cover = projective_cover(alg, m);
    let mut terms = vec![cover.object.clone()];
    let mut differentials = Vec::new();
    let (mut syzygy, mut incl) = kernel(&cover.map);
    for _ in 0..length {
        let c = projective_cover(alg, &syzygy);
        let d = incl.compose(&c.map);
        let (next, next_incl) = kernel(&c.map);
        terms.push(c.object);
        differentials.push(d);
        syzygy = next;
        incl = next_incl;
    }
    ProjectiveResolution { module: m.clone(), terms, differentials, augmentation: cover.map }
}

/// `dim Ext^k(m, n)`, from the cohomology of `Hom(P•, n)`.
pub fn ext_dim(alg: &BasicAlgebra, m: &Module, n: &Module, k: usize) -> usize {
    if k == 0 {
        return hom_dim(m, n);
    }
    let res = projective_resolution(alg, m, k + 1);
    ext_dim_from(alg, &res, n, k)
}

/// Ext dimensions in degrees `1..=max_k`, sharing one resolution.
pub fn ext_dims(alg: &BasicAlgebra, m: &Module, n: &Module, max_k: usize) -> Vec<usize> {
    if max_k == 0 {
        return Vec::new();
    }
    let res = projective_resolution(alg, m, max_k + 1);
    (1..=max_k).map(|k| ext_dim_from(alg, &res, n, k)).collect()
}

pub(crate) fn ext_dim_from(alg: &BasicAlgebra, res: &ProjectiveResolution, n: &Module, k: usize) -> usize {
    let pk = &res.terms[k];
    let dim: usize = pk.vertices.iter().map(|&v| n.dim(v)).sum();
    if dim == 0 {
        return 0;
    }
    // Hom(P_{k-1}, N) -> Hom(P_k, N) -> Hom(P_{k+1}, N)
    let incoming = alg.hom_pullback_matrix(pk, &res.terms[k - 1], &res.differentials[k - 1], n).rank();
    let outgoing = alg
        .hom_pullback_matrix(&res.terms[k + 1], pk, &res.differentials[k], n)
        .rank();
    dim - incoming - outgoing
}

/// `Ext^1(n, s)` computed from extensions `0 -> s -> E -> n -> 0` with
/// `E_a = [[s_a, δ_a], [0, n_a]]`: cocycles are the `δ` satisfying the
/// relations, coboundaries come from changes of splitting.
#[derive(Debug, Clone)]
pub struct ExtensionSpace {
    pub left: Module,
    pub right: Module,
    /// Cocycles representing a basis of `Ext^1(right, left)`.
    pub classes: Vec<Vec<Matrix>>,
    pub cocycle_dim: usize,
    pub coboundary_dim: usize,
}

impl ExtensionSpace {
    pub fn dim(&self) -> usize {
        self.classes.len()
    }

    /// The middle term of the extension with class `Σ coeffs[i] · classes[i]`.
    pub fn middle_term(&self, alg: &BasicAlgebra, coeffs: &[u64]) -> Module {
        let f = alg.field();
        let q = alg.quiver();
        let (s, n) = (&self.left, &self.right);
        let dims: Vec<usize> = (0..q.vertex_count()).map(|v| s.dim(v) + n.dim(v)).collect();
        let maps = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(i, a)| {
                let mut delta = Matrix::zeros(f, s.dim(a.target), n.dim(a.source));
                for (c, cls) in coeffs.iter().zip(&self.classes) {
                    delta = delta.add_scaled(&cls[i], *c);
                }
                let mut m = Matrix::zeros(f, dims[a.target], dims[a.source]);
                m.write_block(0, 0, s.map(i));
                m.write_block(0, s.dim(a.source), &delta);
                m.write_block(s.dim(a.target), s.dim(a.source), n.map(i));
                m
            })
            .collect();
        alg.make_module(dims, maps).expect("cocycle satisfies relations")
    }
}

fn relation_upper_block(
    alg: &BasicAlgebra,
    s: &Module,
    n: &Module,
    rel: &super::quiver::Relation,
    delta: &[Matrix],
) -> Matrix {
    let f = alg.field();
    let q = alg.quiver();
    let (src, tgt) = (rel.source(), rel.target(q));
    let mut acc = Matrix::zeros(f, s.dim(tgt), n.dim(src));
    for (c, path) in &rel.terms {
        for i in 0..path.arrows.len() {
            let a = path.arrows[i];
            let before = super::quiver::Path { start: path.start, arrows: path.arrows[..i].to_vec() };
            let after = super::quiver::Path { start: q.arrow(a).target, arrows: path.arrows[i + 1..].to_vec() };
            let term = s.path_matrix(&after).mul(&delta[a]).mul(&n.path_matrix(&before));
            acc = acc.add_scaled(&term, *c);
        }
    }
    acc
}

pub fn extension_space(alg: &BasicAlgebra, right: &Module, left: &Module) -> ExtensionSpace {
    let f = alg.field();
    let q = alg.quiver();
    let (s, n) = (left, right);
    let shapes: Vec<(usize, usize)> = q.arrows().iter().map(|a| (s.dim(a.target), n.dim(a.source))).collect();
    let unknowns: usize = shapes.iter().map(|(r, c)| r * c).sum();
    let unflatten = |x: &[u64]| -> Vec<Matrix> {
        let mut off = 0;
        shapes
            .iter()
            .map(|&(r, c)| {
                let m = Matrix::new(f, r, c, x[off..off + r * c].to_vec());
                off += r * c;
                m
            })
            .collect()
    };
    let flatten = |ms: &[Matrix]| -> Vec<u64> { ms.iter().flat_map(|m| m.data().iter().copied()).collect() };

    // cocycle condition as a linear system, one column per unknown
    let mut columns = Vec::with_capacity(unknowns);
    for j in 0..unknowns {
        let mut x = vec![0; unknowns];
        x[j] = 1;
        let delta = unflatten(&x);
        let col: Vec<u64> = alg
            .relations()
            .relations
            .iter()
            .flat_map(|r| relation_upper_block(alg, s, n, r, &delta).data().to_vec())
            .collect();
        columns.push(col);
    }
    let eq_len = columns.first().map_or(0, Vec::len);
    let system = Matrix::from_columns(f, eq_len, &columns);
    let cocycles = if eq_len == 0 { Matrix::identity(f, unknowns) } else { system.kernel_basis() };

    // coboundaries δ_a = s_a h_src - h_tgt n_a
    let mut sb = SpanBuilder::new(f, unknowns);
    for v in 0..q.vertex_count() {
        for r in 0..s.dim(v) {
            for c in 0..n.dim(v) {
                let mut h = Matrix::zeros(f, s.dim(v), n.dim(v));
                h.set(r, c, 1);
                let delta: Vec<Matrix> = q
                    .arrows()
                    .iter()
                    .enumerate()
                    .map(|(i, a)| {
                        let mut d = Matrix::zeros(f, s.dim(a.target), n.dim(a.source));
                        if a.source == v {
                            d = d.add(&s.map(i).mul(&h));
                        }
                        if a.target == v {
                            d = d.sub(&h.mul(n.map(i)));
                        }
                        d
                    })
                    .collect();
                sb.insert(&flatten(&delta));
            }
        }
    }
    let coboundary_dim = sb.dim();
    let mut classes = Vec::new();
    for c in cocycles.columns() {
        if sb.insert(&c) {
            classes.push(unflatten(&c));
        }
    }
    ExtensionSpace {
        left: left.clone(),
        right: right.clone(),
        classes,
        cocycle_dim: cocycles.cols(),
        coboundary_dim,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quivrep::algebra::tests::{a2, a3_rad2};

    #[test]
    fn resolution_of_s1_over_a2() {
        let alg = a2();
        let res = projective_resolution(&alg, alg.simple(0), 3);
        assert_eq!(res.terms[0].vertices, vec![0]);
        assert_eq!(res.terms[1].vertices, vec![1]);
        assert!(res.terms[2].is_zero());
        assert_eq!(res.projective_dimension(), Some(1));
        assert!(res.to_complex().is_complex());
    }

    #[test]
    fn projective_has_trivial_resolution() {
        let alg = a2();
        let res = projective_resolution(&alg, alg.projective(0), 2);
        assert_eq!(res.projective_dimension(), Some(0));
        assert!(res.augmentation.is_iso());
    }

    #[test]
    fn ext_over_a2() {
        let alg = a2();
        let (s1, s2) = (alg.simple(0), alg.simple(1));
        assert_eq!(ext_dim(&alg, s1, s2, 1), 1);
        assert_eq!(ext_dim(&alg, s2, s1, 1), 0);
        assert_eq!(ext_dim(&alg, alg.projective(0), s2, 1), 0);
        assert_eq!(extension_space(&alg, s1, s2).dim(), 1);
        assert_eq!(extension_space(&alg, s2, s1).dim(), 0);
        assert!(is_projective(&alg, s2));
        assert!(is_injective(&alg, s1));
        assert!(is_injective(&alg, alg.projective(0)));
        assert!(!is_injective(&alg, s2));
    }

    #[test]
    fn ext2_over_a3_rad2() {
        let alg = a3_rad2();
        let (s1, s3) = (alg.simple(0), alg.simple(2));
        assert_eq!(ext_dim(&alg, s1, s3, 2), 1);
        assert_eq!(ext_dims(&alg, s1, s3, 3), vec![0, 1, 0]);
        // the two routes to Ext^1 agree on all simple pairs
        for a in alg.simples() {
            for b in alg.simples() {
                assert_eq!(ext_dim(&alg, a, b, 1), extension_space(&alg, a, b).dim());
            }
        }
    }
}
