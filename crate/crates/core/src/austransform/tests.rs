use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::exactfield::PrimeField;
use crate::quivrep::algebra::tests::{a2, a3_rad2};
use crate::quivrep::{
    enumerate_indecomposables, hom_basis, BasicAlgebra, EnumerationOptions, ModuleMorphism, Quiver, RelationSet,
};
use crate::tilting::{search_cluster_tilting, Ambient};

fn ambient(alg: BasicAlgebra, max_dim: usize) -> Ambient {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let e = enumerate_indecomposables(&alg, &EnumerationOptions::new(max_dim + 2).declared(max_dim), &mut rng);
    Ambient::new(Arc::new(alg), &e)
}

fn semisimple() -> BasicAlgebra {
    let q = Quiver::new::<&str>(&["1", "2"], &[]).unwrap();
    BasicAlgebra::new(q, RelationSet::default(), PrimeField::default()).unwrap()
}

fn options(bound: usize) -> VerifyOptions {
    VerifyOptions { instance: "test".into(), gamma_dim_bound: bound, seed: 11 }
}

#[test]
fn gamma_of_a2_module_category() {
    let amb = ambient(a2(), 2);
    let spec = amb.everything(0).unwrap();
    let g = endomorphism_algebra(&spec).unwrap();
    assert_eq!(g.based.dim(), 5);
    assert_eq!(g.algebra.dim(), 5);
    assert_eq!(g.arrow_basis.len(), 2);
    assert!(g.associative_triples > 0);
}

#[test]
fn representables_are_projective() {
    let amb = ambient(a3_rad2(), 2);
    let spec = amb.everything(0).unwrap();
    let g = endomorphism_algebra(&spec).unwrap();
    for i in 0..spec.len() {
        let h = restricted_yoneda(&g, spec.module(i)).unwrap();
        assert_eq!(h.module.dims(), g.algebra.projective(i).dims());
    }
    let z = restricted_yoneda(&g, &spec.algebra().zero_module()).unwrap();
    assert!(z.module.is_zero());
}

#[test]
fn presentation_round_trip() {
    let amb = ambient(a3_rad2(), 2);
    let spec = amb.everything(0).unwrap();
    let g = endomorphism_algebra(&spec).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let p = g.algebra.field().modulus();
    let r = spec.len();
    for _ in 0..100 {
        let pv: Vec<usize> = (0..rng.gen_range(1..3)).map(|_| rng.gen_range(0..r)).collect();
        let qv: Vec<usize> = (0..rng.gen_range(1..3)).map(|_| rng.gen_range(0..r)).collect();
        let pp = g.algebra.projective_object(pv);
        let qq = g.algebra.projective_object(qv);
        let basis = hom_basis(&pp.module, &qq.module);
        let coeffs: Vec<u64> = basis.iter().map(|_| rng.gen_range(0..p)).collect();
        let phi = ModuleMorphism::combination(&pp.module, &qq.module, &basis, &coeffs);
        let (xp, xq, f) = projective_map_to_morphism(&g, &pp, &qq, &phi);
        let up = restricted_yoneda(&g, &xp.module).unwrap();
        let uq = restricted_yoneda(&g, &xq.module).unwrap();
        let lhs = restricted_yoneda_map(&up, &uq, &f).compose(&yoneda_iso(&g, &pp, &up, &xp));
        let rhs = yoneda_iso(&g, &qq, &uq, &xq).compose(&phi);
        assert_eq!(lhs, rhs);
        let f2 = presentation_to_morphism(&g, &phi).unwrap();
        assert_eq!(f2.source().dims(), xp.module.dims());
    }
}

#[test]
fn non_projective_presentation_rejected() {
    let amb = ambient(a2(), 2);
    let spec = amb.everything(0).unwrap();
    let g = endomorphism_algebra(&spec).unwrap();
    let s = g.algebra.simples().iter().find(|s| crate::quivrep::projective_cover(&g.algebra, s).object.module.total_dim() > 1).unwrap();
    let err = presentation_to_morphism(&g, &s.identity());
    assert!(matches!(err, Err(crate::Error::NotProjective(_))));
}

#[test]
fn effaceable_simples_of_a2() {
    let amb = ambient(a2(), 2);
    let spec = amb.everything(0).unwrap();
    let g = endomorphism_algebra(&spec).unwrap();
    let eff: Vec<bool> = g.algebra.simples().iter().map(|s| is_effaceable(&g, s).unwrap()).collect();
    assert_eq!(eff.iter().filter(|&&e| e).count(), 1);
    let i = spec.labels().iter().position(|l| l == "S1").unwrap();
    assert!(eff[i]);
    assert!(is_effaceable(&g, &g.algebra.zero_module()).unwrap());
    for p in g.algebra.projectives() {
        assert!(!is_effaceable(&g, p).unwrap());
    }
}

#[test]
fn auslander_formula_a2() {
    let amb = ambient(a2(), 2);
    let spec = amb.everything(0).unwrap();
    let r = verify_higher_auslander(&spec, 1, &amb, &options(3)).unwrap();
    assert!(r.pass, "{:#?}", r.groups);
    assert_eq!(r.effaceable.effaceable_simples, vec!["S[S1]"]);
    assert_eq!(r.effaceable.non_effaceable_simples.len(), 2);
    assert_eq!(r.gamma.dim, 5);
}

#[test]
fn higher_formula_gamma5() {
    let amb = ambient(a3_rad2(), 2);
    let out = search_cluster_tilting(&amb, 2, 1).unwrap();
    let spec = &out.certificates[0].spec;
    let r = verify_higher_auslander(spec, 2, &amb, &options(3)).unwrap();
    assert!(r.pass, "{}", serde_json::to_string_pretty(&r.groups).unwrap());
    assert_eq!(r.groups.len(), 6);
}

#[test]
fn semisimple_all_n() {
    let amb = ambient(semisimple(), 1);
    let spec = amb.everything(0).unwrap();
    for n in 1..=3 {
        let r = verify_higher_auslander(&spec, n, &amb, &options(2)).unwrap();
        assert!(r.pass);
        assert_eq!(r.effaceable.effaceable_test_modules, 0);
    }
}

#[test]
fn non_ct_subcategory_fails() {
    let amb = ambient(a2(), 2);
    let spec = amb.everything(0).unwrap();
    let r = verify_higher_auslander(&spec, 2, &amb, &options(2)).unwrap();
    assert!(!r.pass);
    assert!(!r.groups[5].pass);
}
