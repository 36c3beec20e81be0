use rand::Rng;

use crate::error::{Error, Result};
use crate::exactfield::{poly, Matrix, SpanBuilder};

use super::module::{direct_sum, hom_basis, image, kernel, Module, ModuleMorphism};

/// Random endomorphisms tried before a module is declared undecided.
pub const SPLIT_BUDGET: usize = 64;

/// Outcome of inspecting `End(M)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Locality {
    /// `End(M) = k·1 ⊕ J` with `J` a nilpotent ideal spanned by the listed
    /// nilpotent parts of the basis.
    Local { eigenvalues: Vec<u64>, nilpotency: usize },
    /// A basis endomorphism with two eigenvalues, or a failure of the
    /// `k·1 ⊕ J` structure.
    Decomposable,
    /// Some basis endomorphism has no eigenvalue in the base field.
    Unknown,
    Zero,
}

fn total_matrix(f: &ModuleMorphism) -> Matrix {
    let blocks: Vec<&Matrix> = f.maps().iter().collect();
    Matrix::block_diag(f.field(), &blocks)
}

fn is_nilpotent(f: &ModuleMorphism) -> bool {
    let d = f.source().total_dim() as u32;
    f.power(d.max(1)).is_zero()
}

/// If `f - λ` is nilpotent for some `λ`, return `λ`.
fn unipotent_eigenvalue<R: Rng>(f: &ModuleMorphism, rng: &mut R) -> (Option<u64>, usize) {
    let roots = poly::eigenvalues(&total_matrix(f), rng);
    let count = roots.len();
    if count != 1 {
        return (None, count);
    }
    let lambda = roots[0];
    let shifted = f.sub(&f.source().identity().scale(lambda));
    if is_nilpotent(&shifted) {
        (Some(lambda), 1)
    } else {
        (None, 1)
    }
}

/// Certifies that `End(m)` is local with residue field `k`, or refutes it.
pub fn locality<R: Rng>(m: &Module, rng: &mut R) -> Locality {
    if m.is_zero() {
        return Locality::Zero;
    }
    let basis = hom_basis(m, m);
    locality_with_basis(m, &basis, rng)
}

pub(crate) fn locality_with_basis<R: Rng>(m: &Module, basis: &[ModuleMorphism], rng: &mut R) -> Locality {
    let f = m.field();
    let id = m.identity();
    let mut eigenvalues = Vec::with_capacity(basis.len());
    let mut radical = Vec::with_capacity(basis.len());
    for b in basis {
        match unipotent_eigenvalue(b, rng) {
            (Some(l), _) => {
                eigenvalues.push(l);
                radical.push(b.sub(&id.scale(l)));
            }
            (None, 0) => return Locality::Unknown,
            (None, _) => return Locality::Decomposable,
        }
    }
    let len = id.flatten().len();
    let mut span = SpanBuilder::new(f, len);
    let mut jbasis = Vec::new();
    for r in &radical {
        if span.insert(&r.flatten()) {
            jbasis.push(r.clone());
        }
    }
    // closed under multiplication
    for a in &jbasis {
        for b in &jbasis {
            if !span.contains(&a.compose(b).flatten()) {
                return Locality::Decomposable;
            }
        }
    }
    // nilpotent as an ideal: J^k shrinks to zero
    let mut power = jbasis.clone();
    let mut k = 1;
    while !power.is_empty() {
        if k > m.total_dim() + 1 {
            return Locality::Decomposable;
        }
        let mut sb = SpanBuilder::new(f, len);
        let mut next = Vec::new();
        for a in &power {
            for b in &jbasis {
                let c = a.compose(b);
                if sb.insert(&c.flatten()) {
                    next.push(c);
                }
            }
        }
        power = next;
        k += 1;
    }
    Locality::Local { eigenvalues, nilpotency: k }
}

pub fn is_indecomposable<R: Rng>(m: &Module, rng: &mut R) -> Result<bool> {
    match locality(m, rng) {
        Locality::Local { .. } => Ok(true),
        Locality::Decomposable | Locality::Zero => Ok(false),
        Locality::Unknown => Err(Error::Undecided(
            "endomorphism ring has elements without eigenvalues in the base field".into(),
        )),
    }
}

/// One indecomposable summand with its structure maps into and out of the
/// decomposed module.
#[derive(Debug, Clone)]
pub struct Summand {
    pub module: Module,
    pub inclusion: ModuleMorphism,
    pub projection: ModuleMorphism,
}

#[derive(Debug, Clone)]
pub struct Decomposition {
    pub summands: Vec<Summand>,
    /// Isomorphism classes as `(representative, multiplicity)`.
    pub classes: Vec<(Module, usize)>,
    /// Class index of each summand.
    pub class_of: Vec<usize>,
    /// `⊕ summands -> M`, verified invertible.
    pub certificate: ModuleMorphism,
}

impl Decomposition {
    pub fn is_indecomposable(&self) -> bool {
        self.summands.len() == 1
    }
}

/// Splits `m` into indecomposables by Fitting decompositions of random
/// endomorphisms.
pub fn decompose<R: Rng>(m: &Module, rng: &mut R) -> Result<Decomposition> {
    let mut pieces = Vec::new();
    split(m, &m.identity(), rng, &mut pieces)?;
    let quiver = m.quiver().clone();
    let f = m.field();
    let parts: Vec<Module> = pieces.iter().map(|(x, _)| x.clone()).collect();
    let sum = direct_sum(&quiver, f, &parts);
    let mut cert = ModuleMorphism::zero(&sum.module, m);
    for ((_, incl), proj) in pieces.iter().zip(&sum.projections) {
        cert = cert.add(&incl.compose(proj));
    }
    let inverse = cert
        .inverse()
        .ok_or_else(|| Error::InvariantViolation("summands do not reassemble the module".into()))?;
    let mut summands = Vec::with_capacity(pieces.len());
    for (i, (x, incl)) in pieces.iter().enumerate() {
        let projection = sum.projections[i].compose(&inverse);
        summands.push(Summand { module: x.clone(), inclusion: incl.clone(), projection });
    }
    let mut classes: Vec<(Module, usize)> = Vec::new();
    let mut class_of = Vec::with_capacity(summands.len());
    for s in &summands {
        match classes.iter().position(|(rep, _)| iso_of_indecomposables(rep, &s.module).is_some()) {
            Some(c) => {
                classes[c].1 += 1;
                class_of.push(c);
            }
            None => {
                class_of.push(classes.len());
                classes.push((s.module.clone(), 1));
            }
        }
    }
    Ok(Decomposition { summands, classes, class_of, certificate: cert })
}

fn split<R: Rng>(
    m: &Module,
    incl: &ModuleMorphism,
    rng: &mut R,
    out: &mut Vec<(Module, ModuleMorphism)>,
) -> Result<()> {
    if m.is_zero() {
        return Ok(());
    }
    let basis = hom_basis(m, m);
    match locality_with_basis(m, &basis, rng) {
        Locality::Local { .. } => {
            out.push((m.clone(), incl.clone()));
            return Ok(());
        }
        Locality::Zero => return Ok(()),
        Locality::Decomposable | Locality::Unknown => {}
    }
    let f = m.field();
    let n = m.total_dim() as u32;
    let candidates = basis.len();
    for attempt in 0..SPLIT_BUDGET {
        // basis elements first, then random combinations
        let phi = if attempt < candidates {
            basis[attempt].clone()
        } else {
            let coeffs: Vec<u64> = (0..candidates).map(|_| rng.gen_range(0..f.modulus())).collect();
            ModuleMorphism::combination(m, m, &basis, &coeffs)
        };
        for lambda in poly::eigenvalues(&total_matrix(&phi), rng) {
            let psi = phi.sub(&m.identity().scale(lambda)).power(n);
            if psi.is_zero() || psi.is_iso() {
                continue;
            }
            let (k, kincl) = kernel(&psi);
            let (im, iincl, _) = image(&psi);
            split(&k, &incl.compose(&kincl), rng, out)?;
            split(&im, &incl.compose(&iincl), rng, out)?;
            return Ok(());
        }
    }
    Err(Error::Undecided(format!(
        "no splitting endomorphism found for a module of dimension {} within {SPLIT_BUDGET} attempts",
        m.total_dim()
    )))
}

/// For indecomposable `x`, `y`: returns an isomorphism `x -> y` if one
/// exists. Exact: `x ≅ y` iff some `g ∘ f` with `f`, `g` basis morphisms is
/// not nilpotent.
pub fn iso_of_indecomposables(x: &Module, y: &Module) -> Option<ModuleMorphism> {
    if x.dims() != y.dims() {
        return None;
    }
    let fs = hom_basis(x, y);
    if fs.is_empty() {
        return None;
    }
    let gs = hom_basis(y, x);
    for f in &fs {
        if f.is_iso() {
            return Some(f.clone());
        }
        for g in &gs {
            if !is_nilpotent(&g.compose(f)) {
                return Some(f.clone());
            }
        }
    }
    None
}

/// Isomorphism search for arbitrary modules by random combinations of a Hom
/// basis; `None` means no isomorphism was found within the budget.
pub fn find_isomorphism<R: Rng>(x: &Module, y: &Module, rng: &mut R) -> Option<ModuleMorphism> {
    if x.dims() != y.dims() {
        return None;
    }
    if x.is_zero() {
        return Some(ModuleMorphism::zero(x, y));
    }
    let basis = hom_basis(x, y);
    if basis.is_empty() {
        return None;
    }
    if let Some(b) = basis.iter().find(|b| b.is_iso()) {
        return Some(b.clone());
    }
    let p = x.field().modulus();
    for _ in 0..SPLIT_BUDGET {
        let coeffs: Vec<u64> = (0..basis.len()).map(|_| rng.gen_range(0..p)).collect();
        let c = ModuleMorphism::combination(x, y, &basis, &coeffs);
        if c.is_iso() {
            return Some(c);
        }
    }
    None
}

/// Isomorphism by comparing decompositions; used when random search is
/// inconclusive.
pub fn are_isomorphic<R: Rng>(x: &Module, y: &Module, rng: &mut R) -> Result<bool> {
    if x.dims() != y.dims() {
        return Ok(false);
    }
    if find_isomorphism(x, y, rng).is_some() {
        return Ok(true);
    }
    let dx = decompose(x, rng)?;
    let dy = decompose(y, rng)?;
    if dx.classes.len() != dy.classes.len() {
        return Ok(false);
    }
    let mut used = vec![false; dy.classes.len()];
    for (rx, mx) in &dx.classes {
        let hit = dy
            .classes
            .iter()
            .enumerate()
            .position(|(j, (ry, my))| !used[j] && my == mx && iso_of_indecomposables(rx, ry).is_some());
        match hit {
            Some(j) => used[j] = true,
            None => return Ok(false),
        }
    }
    Ok(true)
}

/// Index of the listed indecomposable isomorphic to `x`.
pub fn classify(list: &[Module], x: &Module) -> Option<usize> {
    list.iter().position(|m| iso_of_indecomposables(m, x).is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quivrep::algebra::tests::{a2, a3_rad2};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn simple_is_indecomposable() {
        let alg = a2();
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let d = decompose(alg.simple(0), &mut rng).unwrap();
        assert_eq!(d.classes.len(), 1);
        assert_eq!(d.classes[0].1, 1);
        assert!(matches!(locality(alg.projective(0), &mut rng), Locality::Local { .. }));
    }

    #[test]
    fn doubled_module() {
        let alg = a3_rad2();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let p = alg.projective(0).clone();
        let pp = direct_sum(alg.quiver(), alg.field(), &[p.clone(), p.clone()]).module;
        let d = decompose(&pp, &mut rng).unwrap();
        assert_eq!(d.classes.len(), 1);
        assert_eq!(d.classes[0].1, 2);
        assert!(iso_of_indecomposables(&d.classes[0].0, &p).is_some());
        assert!(d.certificate.is_iso());
    }

    #[test]
    fn split_module_over_a2() {
        let alg = a2();
        let f = alg.field();
        let m = alg.make_module(vec![1, 1], vec![Matrix::zeros(f, 1, 1)]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        assert_eq!(locality(&m, &mut rng), Locality::Decomposable);
        let d = decompose(&m, &mut rng).unwrap();
        assert_eq!(d.summands.len(), 2);
        let mut dims: Vec<Vec<usize>> = d.summands.iter().map(|s| s.module.dims().to_vec()).collect();
        dims.sort();
        assert_eq!(dims, vec![vec![0, 1], vec![1, 0]]);
        for s in &d.summands {
            assert!(s.projection.compose(&s.inclusion).is_iso());
        }
    }

    #[test]
    fn iso_and_non_iso() {
        let alg = a2();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let p = alg.projective(0);
        let sum = direct_sum(alg.quiver(), alg.field(), &[alg.simple(0).clone(), alg.simple(1).clone()]).module;
        assert!(!are_isomorphic(p, &sum, &mut rng).unwrap());
        assert!(are_isomorphic(p, p, &mut rng).unwrap());
        assert!(iso_of_indecomposables(alg.simple(0), alg.simple(1)).is_none());
    }
}
