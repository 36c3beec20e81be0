use crate::error::{Error, Result};
use crate::quivrep::{cokernel, kernel, Complex, ModuleMorphism};
use crate::tilting::{left_approximation, right_approximation, ApproximationKind};

use super::spec::SubcategorySpec;

/// `g ∘ p` where `p: B -> coker f` is the ambient cokernel and `g` a
/// minimal left approximation of `coker f`. When the cokernel already lies
/// in the subcategory, `p` itself is returned.
pub fn weak_cokernel(f: &ModuleMorphism, spec: &SubcategorySpec) -> Result<ModuleMorphism> {
    let (c, p) = cokernel(f);
    if spec.contains(&c)? {
        return Ok(p);
    }
    let a = left_approximation(&c, spec, ApproximationKind::Minimal);
    Ok(a.map.compose(&p))
}

/// Dual of [`weak_cokernel`]: `i ∘ g` with `i` the ambient kernel inclusion
/// and `g` a minimal right approximation of the kernel.
pub fn weak_kernel(f: &ModuleMorphism, spec: &SubcategorySpec) -> Result<ModuleMorphism> {
    let (k, i) = kernel(f);
    if spec.contains(&k)? {
        return Ok(i);
    }
    let a = right_approximation(&k, spec, ApproximationKind::Minimal);
    Ok(i.compose(&a.map))
}

/// `X^0 -d^0-> X^1 -> ... -> X^{n+1}` where `d^0 = f`, each `d^k` for
/// `1 <= k < n` is a weak cokernel of `d^{k-1}` and `d^n` is the ambient
/// cokernel of `d^{n-1}`, which must land in the subcategory.
pub fn n_cokernel(f: &ModuleMorphism, spec: &SubcategorySpec, n: usize) -> Result<Complex> {
    assert!(n >= 1, "n must be positive");
    let mut objects = vec![f.source().clone(), f.target().clone()];
    let mut diffs = vec![f.clone()];
    for _ in 1..n {
        let g = weak_cokernel(diffs.last().unwrap(), spec)?;
        objects.push(g.target().clone());
        diffs.push(g);
    }
    let (c, p) = cokernel(diffs.last().unwrap());
    if !spec.contains(&c)? {
        return Err(Error::Stalled {
            step: n,
            reason: format!(
                "cokernel of d^{} (dimension vector {:?}) is not in the subcategory",
                n - 1,
                c.dims()
            ),
        });
    }
    objects.push(c);
    diffs.push(p);
    Complex::new(objects, diffs)
}

/// `X^0 -> ... -> X^n -d^n-> X^{n+1}` with `d^n = f`, weak kernels going
/// left and an honest kernel at the start.
pub fn n_kernel(f: &ModuleMorphism, spec: &SubcategorySpec, n: usize) -> Result<Complex> {
    assert!(n >= 1, "n must be positive");
    let mut objects = vec![f.target().clone(), f.source().clone()];
    let mut diffs = vec![f.clone()];
    for _ in 1..n {
        let g = weak_kernel(diffs.last().unwrap(), spec)?;
        objects.push(g.source().clone());
        diffs.push(g);
    }
    let (k, i) = kernel(diffs.last().unwrap());
    if !spec.contains(&k)? {
        return Err(Error::Stalled {
            step: n,
            reason: format!(
                "kernel of d^1 (dimension vector {:?}) is not in the subcategory",
                k.dims()
            ),
        });
    }
    objects.push(k);
    diffs.push(i);
    objects.reverse();
    diffs.reverse();
    Complex::new(objects, diffs)
}
