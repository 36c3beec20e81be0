use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::quivrep::{block_morphism, direct_sum, locality, Locality, Module, ModuleMorphism};

use super::cokernels::{n_cokernel, n_kernel};
use super::exactness::{is_intrinsic_epi, is_intrinsic_mono, is_n_exact, NExactnessVerdict};
use super::spec::{SubcategorySpec, SubcategorySummary};

/// How the finite morphism test set is generated.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct SamplingPolicy {
    pub seed: u64,
    /// Random combinations drawn for each pair of members whose Hom space
    /// has dimension at least two.
    pub random_per_pair: usize,
    /// Random morphisms between sums of two members.
    pub random_two_summand: usize,
}

impl SamplingPolicy {
    pub fn new(seed: u64) -> Self {
        SamplingPolicy { seed, random_per_pair: 50, random_two_summand: 20 }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct Witness {
    pub morphism: String,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct AxiomVerdict {
    pub pass: bool,
    pub checked: usize,
    pub witnesses: Vec<Witness>,
}

impl AxiomVerdict {
    fn new() -> Self {
        AxiomVerdict { pass: true, checked: 0, witnesses: Vec::new() }
    }

    fn fail(&mut self, w: Witness) {
        self.pass = false;
        if self.witnesses.len() < 8 {
            self.witnesses.push(w);
        }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct AxiomReport {
    pub n: usize,
    pub subcategory: SubcategorySummary,
    pub sampling: SamplingPolicy,
    pub basis_morphisms: usize,
    pub random_morphisms: usize,
    pub a0: AxiomVerdict,
    pub a1: AxiomVerdict,
    pub a2: AxiomVerdict,
    pub a3: AxiomVerdict,
    pub pass: bool,
}

/// A labelled test morphism.
#[derive(Debug, Clone)]
pub struct TestMorphism {
    pub label: String,
    pub map: ModuleMorphism,
}

/// Basis morphisms between members, then seeded random combinations.
pub fn test_morphisms(spec: &SubcategorySpec, policy: &SamplingPolicy) -> (Vec<TestMorphism>, usize) {
    let mut out = Vec::new();
    let r = spec.len();
    for i in 0..r {
        for j in 0..r {
            for (b, h) in spec.hom(i, j).iter().enumerate() {
                out.push(TestMorphism {
                    label: format!("basis {b} of Hom({}, {})", spec.label(i), spec.label(j)),
                    map: h.clone(),
                });
            }
        }
    }
    let basis_count = out.len();
    let mut rng = ChaCha8Rng::seed_from_u64(policy.seed);
    let p = spec.algebra().field().modulus();
    for i in 0..r {
        for j in 0..r {
            let basis = spec.hom(i, j);
            if basis.len() < 2 {
                continue;
            }
            for s in 0..policy.random_per_pair {
                let coeffs: Vec<u64> = (0..basis.len()).map(|_| rng.gen_range(0..p)).collect();
                out.push(TestMorphism {
                    label: format!("random {s} of Hom({}, {})", spec.label(i), spec.label(j)),
                    map: ModuleMorphism::combination(spec.module(i), spec.module(j), basis, &coeffs),
                });
            }
        }
    }
    if r > 0 {
        let alg = spec.algebra();
        for s in 0..policy.random_two_summand {
            let src: Vec<usize> = (0..2).map(|_| rng.gen_range(0..r)).collect();
            let tgt: Vec<usize> = (0..2).map(|_| rng.gen_range(0..r)).collect();
            let sm: Vec<Module> = src.iter().map(|&i| spec.module(i).clone()).collect();
            let tm: Vec<Module> = tgt.iter().map(|&i| spec.module(i).clone()).collect();
            let ds = direct_sum(alg.quiver(), alg.field(), &sm);
            let dt = direct_sum(alg.quiver(), alg.field(), &tm);
            let blocks: Vec<Vec<ModuleMorphism>> = tgt
                .iter()
                .map(|&t| {
                    src.iter()
                        .map(|&u| {
                            let basis = spec.hom(u, t);
                            let coeffs: Vec<u64> = (0..basis.len()).map(|_| rng.gen_range(0..p)).collect();
                            ModuleMorphism::combination(spec.module(u), spec.module(t), basis, &coeffs)
                        })
                        .collect()
                })
                .collect();
            let label = format!(
                "random sum {s}: {} ⊕ {} -> {} ⊕ {}",
                spec.label(src[0]),
                spec.label(src[1]),
                spec.label(tgt[0]),
                spec.label(tgt[1])
            );
            out.push(TestMorphism { label, map: block_morphism(&ds, &dt, &blocks) });
        }
    }
    (out, basis_count)
}

struct MorphismOutcome {
    a1: Vec<Witness>,
    a2: Option<Vec<Witness>>,
    a3: Option<Vec<Witness>>,
}

fn describe(v: &NExactnessVerdict, side_left: bool) -> String {
    let defects = if side_left { &v.left_defects } else { &v.right_defects };
    match defects.first() {
        Some(d) => format!(
            "{} Hom sequence against {} has homology of dimension {} at position {}",
            if side_left { "covariant" } else { "contravariant" },
            d.test_object,
            d.homology_dim,
            d.position
        ),
        None => "exact".into(),
    }
}

fn check_morphism(t: &TestMorphism, spec: &SubcategorySpec, n: usize) -> Result<MorphismOutcome> {
    let mut a1 = Vec::new();
    let mut a2 = None;
    let mut a3 = None;
    let w = |detail: String| Witness { morphism: t.label.clone(), detail };
    match n_cokernel(&t.map, spec, n) {
        Ok(c) => {
            let v = is_n_exact(&c, spec, n);
            if !v.right {
                a1.push(w(format!("n-cokernel contract fails: {}", describe(&v, false))));
            }
            if is_intrinsic_mono(&t.map, spec) {
                let mut ws = Vec::new();
                if !v.is_exact() {
                    let left = !v.left;
                    ws.push(w(format!("monomorphism with non-n-exact n-cokernel sequence: {}", describe(&v, left))));
                }
                a2 = Some(ws);
            }
        }
        Err(Error::Stalled { step, reason }) => a1.push(w(format!("n-cokernel stalls at step {step}: {reason}"))),
        Err(e) => return Err(e),
    }
    match n_kernel(&t.map, spec, n) {
        Ok(c) => {
            let v = is_n_exact(&c, spec, n);
            if !v.left {
                a1.push(w(format!("n-kernel contract fails: {}", describe(&v, true))));
            }
            if is_intrinsic_epi(&t.map, spec) {
                let mut ws = Vec::new();
                if !v.is_exact() {
                    let left = !v.left;
                    ws.push(w(format!("epimorphism with non-n-exact n-kernel sequence: {}", describe(&v, left))));
                }
                a3 = Some(ws);
            }
        }
        Err(Error::Stalled { step, reason }) => a1.push(w(format!("n-kernel stalls at step {step}: {reason}"))),
        Err(e) => return Err(e),
    }
    Ok(MorphismOutcome { a1, a2, a3 })
}

/// Checks (A0)–(A3) over the sampled test morphisms.
pub fn check_axioms(spec: &SubcategorySpec, n: usize, policy: &SamplingPolicy) -> Result<AxiomReport> {
    let mut a0 = AxiomVerdict::new();
    let mut rng = spec.rng();
    for (i, m) in spec.indecomposables().iter().enumerate() {
        a0.checked += 1;
        match locality(m, &mut rng) {
            Locality::Local { .. } => {}
            other => a0.fail(Witness {
                morphism: format!("End({})", spec.label(i)),
                detail: format!("endomorphism ring not certified local: {other:?}"),
            }),
        }
    }
    let (tests, basis_count) = test_morphisms(spec, policy);
    let outcomes: Vec<Result<MorphismOutcome>> = tests.par_iter().map(|t| check_morphism(t, spec, n)).collect();
    let (mut a1, mut a2, mut a3) = (AxiomVerdict::new(), AxiomVerdict::new(), AxiomVerdict::new());
    for o in outcomes {
        let o = o?;
        a1.checked += 1;
        for w in o.a1 {
            a1.fail(w);
        }
        if let Some(ws) = o.a2 {
            a2.checked += 1;
            for w in ws {
                a2.fail(w);
            }
        }
        if let Some(ws) = o.a3 {
            a3.checked += 1;
            for w in ws {
                a3.fail(w);
            }
        }
    }
    let pass = a0.pass && a1.pass && a2.pass && a3.pass;
    Ok(AxiomReport {
        n,
        subcategory: spec.summary(),
        sampling: policy.clone(),
        basis_morphisms: basis_count,
        random_morphisms: tests.len() - basis_count,
        a0,
        a1,
        a2,
        a3,
        pass,
    })
}
