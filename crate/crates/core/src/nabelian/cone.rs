use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactfield::Matrix;
use crate::quivrep::{
    block_morphism, cokernel, coordinates, direct_sum, hom_basis, Complex, DirectSum, Module, ModuleMorphism,
};

use super::cokernels::weak_cokernel;
use super::exactness::{is_n_exact, NExactnessVerdict};
use super::spec::SubcategorySpec;

/// A degreewise morphism of complexes of the same length.
#[derive(Debug, Clone)]
pub struct ChainMap {
    pub source: Complex,
    pub target: Complex,
    pub components: Vec<ModuleMorphism>,
}

impl ChainMap {
    /// Checks that every square `f^{k+1} d_X^k = d_Y^k f^k` commutes.
    pub fn new(source: Complex, target: Complex, components: Vec<ModuleMorphism>) -> Result<Self> {
        if source.len() != target.len() || components.len() != source.len() {
            return Err(Error::DimensionMismatch("chain map between complexes of different lengths".into()));
        }
        for k in 0..source.differentials.len() {
            let lhs = components[k + 1].compose(&source.differentials[k]);
            let rhs = target.differentials[k].compose(&components[k]);
            if lhs != rhs {
                return Err(Error::NonCommutingSquare { index: k });
            }
        }
        Ok(ChainMap { source, target, components })
    }

    pub fn identity(c: &Complex) -> Self {
        let components = c.objects.iter().map(Module::identity).collect();
        ChainMap { source: c.clone(), target: c.clone(), components }
    }
}

/// Terms `C^k = X^k ⊕ Y^{k-1}` of the cone, with the summands present.
fn cone_term(x: &Complex, y: &Complex, k: usize) -> (DirectSum, Option<usize>, Option<usize>) {
    let len = x.len();
    let q = x.objects.first().or(y.objects.first()).expect("non-empty complex").quiver().clone();
    let field = x.objects[0].field();
    let mut parts = Vec::new();
    let mut xi = None;
    let mut yi = None;
    if k < len {
        xi = Some(parts.len());
        parts.push(x.objects[k].clone());
    }
    if k >= 1 && k <= len {
        yi = Some(parts.len());
        parts.push(y.objects[k - 1].clone());
    }
    (direct_sum(&q, field, &parts), xi, yi)
}

/// The mapping cone `X^0 -> X^1 ⊕ Y^0 -> ... -> X^m ⊕ Y^{m-1} -> Y^m` with
/// differentials `((-d_X^k, 0), (f^k, d_Y^{k-1}))`.
pub fn mapping_cone(f: &ChainMap) -> Result<Complex> {
    let (x, y) = (&f.source, &f.target);
    let len = x.len();
    if len == 0 {
        return Complex::new(Vec::new(), Vec::new());
    }
    let terms: Vec<(DirectSum, Option<usize>, Option<usize>)> = (0..=len).map(|k| cone_term(x, y, k)).collect();
    let mut diffs = Vec::with_capacity(len);
    for k in 0..len {
        let (src, sx, sy) = &terms[k];
        let (tgt, tx, ty) = &terms[k + 1];
        let mut blocks: Vec<Vec<ModuleMorphism>> = vec![Vec::new(); tgt.injections.len()];
        for (t, row) in blocks.iter_mut().enumerate() {
            for s in 0..src.injections.len() {
                let source_obj = src.projections[s].target();
                let target_obj = tgt.injections[t].source();
                let mut b = ModuleMorphism::zero(source_obj, target_obj);
                if Some(s) == *sx && Some(t) == *tx {
                    b = x.differentials[k].neg();
                }
                if Some(s) == *sx && Some(t) == *ty {
                    b = f.components[k].clone();
                }
                if Some(s) == *sy && Some(t) == *ty {
                    b = y.differentials[k - 1].clone();
                }
                row.push(b);
            }
        }
        diffs.push(block_morphism(src, tgt, &blocks));
    }
    let objects = terms.into_iter().map(|(s, _, _)| s.module).collect();
    Complex::new(objects, diffs)
}

/// An n-pushout of `x` along `f0`, together with its verification.
#[derive(Debug, Clone)]
pub struct Pushout {
    pub y: Complex,
    pub map: ChainMap,
    pub cone: Complex,
    pub cone_verdict: NExactnessVerdict,
    /// `Some(verdict)` when `d_X^0` is a monomorphism: whether `d_Y^0` is one.
    pub mono_preserved: Option<bool>,
}

/// Builds `Y` step by step: `(f^k, d_Y^{k-1})` is a weak cokernel of the
/// previous cone differential, and the last one an honest cokernel lying in
/// the subcategory.
pub fn n_pushout(x: &Complex, f0: &ModuleMorphism, spec: &SubcategorySpec, n: usize) -> Result<Pushout> {
    if x.len() != n + 1 {
        return Err(Error::DimensionMismatch(format!(
            "an n-pushout needs a complex with {} objects, got {}",
            n + 1,
            x.len()
        )));
    }
    if f0.source().dims() != x.objects[0].dims() {
        return Err(Error::DimensionMismatch("f0 must start at X^0".into()));
    }
    let q = spec.algebra().quiver().clone();
    let field = spec.algebra().field();
    let mut ys = vec![f0.target().clone()];
    let mut fs = vec![f0.clone()];
    let mut dys: Vec<ModuleMorphism> = Vec::new();
    // d_C^0 = (-d_X^0; f^0)
    let c1 = direct_sum(&q, field, &[x.objects[1].clone(), ys[0].clone()]);
    let mut d_prev = c1.injections[0]
        .compose(&x.differentials[0].neg())
        .add(&c1.injections[1].compose(f0));
    let mut c_cur = c1;
    for k in 1..=n {
        let h = if k < n {
            weak_cokernel(&d_prev, spec)?
        } else {
            let (c, p) = cokernel(&d_prev);
            if !spec.contains(&c)? {
                return Err(Error::Stalled {
                    step: k,
                    reason: format!("cokernel of the cone differential (dims {:?}) is not in the subcategory", c.dims()),
                });
            }
            p
        };
        let fk = h.compose(&c_cur.injections[0]);
        let dy = h.compose(&c_cur.injections[1]);
        ys.push(h.target().clone());
        fs.push(fk.clone());
        dys.push(dy.clone());
        if k < n {
            // C^{k+1} = X^{k+1} ⊕ Y^k
            let next = direct_sum(&q, field, &[x.objects[k + 1].clone(), ys[k].clone()]);
            let blocks = vec![
                vec![x.differentials[k].neg(), ModuleMorphism::zero(&ys[k - 1], &x.objects[k + 1])],
                vec![fk, dy],
            ];
            d_prev = block_morphism(&c_cur, &next, &blocks);
            c_cur = next;
        }
    }
    let y = Complex::new(ys, dys)?;
    let map = ChainMap::new(x.clone(), y.clone(), fs)?;
    let cone = mapping_cone(&map)?;
    let cone_verdict = is_n_exact(&cone, spec, n);
    let mono_preserved = x.differentials[0].is_mono().then(|| y.differentials[0].is_mono());
    Ok(Pushout { y, map, cone, cone_verdict, mono_preserved })
}

/// Solves `1 = d^{k-1} s^k + s^{k+1} d^k` for a null-homotopy of the
/// identity.
pub fn contracting_homotopy(c: &Complex) -> Option<Vec<ModuleMorphism>> {
    let len = c.len();
    if len == 0 {
        return Some(Vec::new());
    }
    let field = c.objects[0].field();
    // unknowns: s^k: C^k -> C^{k-1} for k = 1..len-1
    let mut bases: Vec<(usize, ModuleMorphism)> = Vec::new();
    for k in 1..len {
        for b in hom_basis(&c.objects[k], &c.objects[k - 1]) {
            bases.push((k, b));
        }
    }
    let eq_offsets: Vec<usize> = c
        .objects
        .iter()
        .scan(0, |acc, o| {
            let off = *acc;
            *acc += o.identity().flatten().len();
            Some(off)
        })
        .collect();
    let eq_len: usize = c.objects.iter().map(|o| o.identity().flatten().len()).sum();
    let mut columns = Vec::with_capacity(bases.len());
    for (k, b) in &bases {
        let mut col = vec![0u64; eq_len];
        // contributes d^{k-1} ∘ b to equation k and b ∘ d^{k-1} to equation k-1
        let at_k = c.differentials[k - 1].compose(b).flatten();
        let at_km1 = b.compose(&c.differentials[k - 1]).flatten();
        for (i, v) in at_k.into_iter().enumerate() {
            col[eq_offsets[*k] + i] = field.add(col[eq_offsets[*k] + i], v);
        }
        for (i, v) in at_km1.into_iter().enumerate() {
            col[eq_offsets[k - 1] + i] = field.add(col[eq_offsets[k - 1] + i], v);
        }
        columns.push(col);
    }
    let rhs: Vec<u64> = c.objects.iter().flat_map(|o| o.identity().flatten()).collect();
    if eq_len == 0 {
        return Some(Vec::new());
    }
    let a = Matrix::from_columns(field, eq_len, &columns);
    let sol = a.solve(&Matrix::column_vector(field, &rhs)).ok()??;
    let coeffs = sol.particular.column(0);
    let mut out: Vec<ModuleMorphism> =
        (1..len).map(|k| ModuleMorphism::zero(&c.objects[k], &c.objects[k - 1])).collect();
    for ((k, b), x) in bases.iter().zip(coeffs) {
        if x != 0 {
            out[k - 1] = out[k - 1].add(&b.scale(x));
        }
    }
    Some(out)
}

/// The shape used to push an n-exact sequence along `f: X^k -> A` with
/// `f ∘ d^{k-1} = 0`: the bottom row `0 -> ... -> 0 -> A =-> A -> 0 -> ... -> 0`
/// with `f^k = f` and `f^{k+1} = g` where `g ∘ d^k = f`.
#[derive(Debug, Clone)]
pub struct LemmaPushout {
    pub y: Complex,
    pub map: ChainMap,
    pub homotopy_found: bool,
    pub row_verdict: NExactnessVerdict,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct LemmaPushoutSummary {
    pub k: usize,
    pub homotopy_found: bool,
    pub left_exact: bool,
    pub right_exact: bool,
}

pub fn lemma_pushout(
    x: &Complex,
    k: usize,
    f: &ModuleMorphism,
    spec: &SubcategorySpec,
    n: usize,
) -> Result<LemmaPushout> {
    if x.len() != n + 2 {
        return Err(Error::DimensionMismatch("expected an n-exact sequence with n + 2 terms".into()));
    }
    if k == 0 || k >= n {
        return Err(Error::DimensionMismatch(format!("position {k} outside 1..{}", n - 1)));
    }
    if !f.compose(&x.differentials[k - 1]).is_zero() {
        return Err(Error::NotAMorphism("f does not vanish on the image of d^{k-1}".into()));
    }
    let a = f.target().clone();
    let dk = &x.differentials[k];
    let candidates: Vec<ModuleMorphism> = hom_basis(&x.objects[k + 1], &a);
    let images: Vec<ModuleMorphism> = candidates.iter().map(|b| b.compose(dk)).collect();
    let g = if f.is_zero() {
        ModuleMorphism::zero(&x.objects[k + 1], &a)
    } else {
        let coeffs = coordinates(&images, f).ok_or_else(|| Error::Stalled {
            step: k + 1,
            reason: "f does not factor through d^k".into(),
        })?;
        ModuleMorphism::combination(&x.objects[k + 1], &a, &candidates, &coeffs)
    };
    let zero = spec.algebra().zero_module();
    let ys: Vec<Module> = (0..=n).map(|j| if j == k || j == k + 1 { a.clone() } else { zero.clone() }).collect();
    let dys: Vec<ModuleMorphism> = (0..n)
        .map(|j| if j == k { a.identity() } else { ModuleMorphism::zero(&ys[j], &ys[j + 1]) })
        .collect();
    let y = Complex::new(ys.clone(), dys)?;
    let top = Complex::new(x.objects[..=n].to_vec(), x.differentials[..n].to_vec())?;
    let comps: Vec<ModuleMorphism> = (0..=n)
        .map(|j| match j {
            _ if j == k => f.clone(),
            _ if j == k + 1 => g.clone(),
            _ => ModuleMorphism::zero(&x.objects[j], &ys[j]),
        })
        .collect();
    let map = ChainMap::new(top, y.clone(), comps)?;
    let homotopy_found = contracting_homotopy(&y).is_some();
    let mut padded_objects = y.objects.clone();
    padded_objects.push(zero.clone());
    let mut padded_diffs = y.differentials.clone();
    padded_diffs.push(ModuleMorphism::zero(&y.objects[n], &zero));
    let padded = Complex::new(padded_objects, padded_diffs)?;
    let row_verdict = is_n_exact(&padded, spec, n);
    Ok(LemmaPushout { y, map, homotopy_found, row_verdict })
}
