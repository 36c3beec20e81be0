use std::sync::Arc;

use super::*;
use crate::quivrep::algebra::tests::{a2, a3_rad2};
use crate::quivrep::{hom_basis, BasicAlgebra, Complex, Module};

fn spec_of(alg: BasicAlgebra, mods: Vec<(&str, Module)>) -> SubcategorySpec {
    let alg = Arc::new(alg);
    let (labels, ms): (Vec<String>, Vec<Module>) = mods.into_iter().map(|(l, m)| (l.to_string(), m)).unzip();
    SubcategorySpec::new(alg, "test", labels, ms, 7).unwrap()
}

fn gamma5_ct() -> SubcategorySpec {
    let alg = a3_rad2();
    let mods = vec![
        ("P3", alg.projective(2).clone()),
        ("P2", alg.projective(1).clone()),
        ("P1", alg.projective(0).clone()),
        ("S1", alg.simple(0).clone()),
    ];
    spec_of(alg.clone(), mods)
}

fn a2_all() -> SubcategorySpec {
    let alg = a2();
    let mods = vec![
        ("S2", alg.projective(1).clone()),
        ("P1", alg.projective(0).clone()),
        ("S1", alg.simple(0).clone()),
    ];
    spec_of(alg.clone(), mods)
}

#[test]
fn two_cokernel_of_socle_inclusion() {
    let spec = gamma5_ct();
    let f = spec.hom(0, 1)[0].clone();
    assert!(f.is_mono());
    let c = n_cokernel(&f, &spec, 2).unwrap();
    let dims: Vec<Vec<usize>> = c.objects.iter().map(|m| m.dims().to_vec()).collect();
    assert_eq!(dims, vec![vec![0, 0, 1], vec![0, 1, 1], vec![1, 1, 0], vec![1, 0, 0]]);
    assert!(is_n_exact(&c, &spec, 2).is_exact());
}

#[test]
fn two_kernel_of_top_projection() {
    let spec = gamma5_ct();
    let f = spec.hom(2, 3)[0].clone();
    let c = n_kernel(&f, &spec, 2).unwrap();
    let dims: Vec<usize> = c.objects.iter().map(|m| m.total_dim()).collect();
    assert_eq!(dims, vec![1, 2, 2, 1]);
    assert!(is_n_exact(&c, &spec, 2).is_exact());
}

#[test]
fn gamma5_is_two_abelian() {
    let spec = gamma5_ct();
    let r = check_axioms(&spec, 2, &SamplingPolicy::new(1)).unwrap();
    assert!(r.pass, "{r:#?}");
    assert!(r.a2.checked > 0 && r.a3.checked > 0);
}

#[test]
fn removing_a_member_breaks_the_axioms() {
    let spec = gamma5_ct();
    for drop in 0..4 {
        let keep: Vec<usize> = (0..4).filter(|&i| i != drop).collect();
        let sub = spec.restrict("minus one", &keep);
        let r = check_axioms(&sub, 2, &SamplingPolicy::new(1)).unwrap();
        assert!(!r.pass, "dropping {} still passes", spec.label(drop));
    }
}

#[test]
fn a2_module_category() {
    let spec = a2_all();
    assert!(check_axioms(&spec, 1, &SamplingPolicy::new(3)).unwrap().pass);
    let r = check_axioms(&spec, 2, &SamplingPolicy::new(3)).unwrap();
    assert!(!r.a2.pass);
}

#[test]
fn n1_matches_ambient_cokernel() {
    let spec = a2_all();
    let f = spec.hom(0, 1)[0].clone();
    let c = n_cokernel(&f, &spec, 1).unwrap();
    let (coker, _) = crate::quivrep::cokernel(&f);
    assert_eq!(c.objects[2].dims(), coker.dims());
    assert!(weak_cokernel(&f, &spec).unwrap().target().dims() == coker.dims());
    let k = weak_kernel(&spec.hom(1, 2)[0], &spec).unwrap();
    assert_eq!(k.source().dims(), &[0, 1]);
}

#[test]
fn intrinsic_mono_and_epi() {
    let spec = gamma5_ct();
    assert!(is_intrinsic_mono(&spec.hom(0, 1)[0], &spec));
    assert!(!is_intrinsic_epi(&spec.hom(0, 1)[0], &spec));
    assert!(is_intrinsic_epi(&spec.hom(2, 3)[0], &spec));
}

#[test]
fn cone_of_identity_is_contractible() {
    let spec = gamma5_ct();
    let c = n_cokernel(&spec.hom(0, 1)[0], &spec, 2).unwrap();
    let cone = mapping_cone(&ChainMap::identity(&c)).unwrap();
    assert!(cone.is_complex());
    assert!((0..cone.len()).all(|k| cone.is_exact_at(k)));
    assert!(contracting_homotopy(&cone).is_some());
    assert!(is_n_exact(&cone, &spec, 2).is_exact());
    assert!(contracting_homotopy(&c).is_none());
}

#[test]
fn pushout_along_identity_and_inclusion() {
    let spec = gamma5_ct();
    let c = n_cokernel(&spec.hom(0, 1)[0], &spec, 2).unwrap();
    let x = Complex::new(c.objects[..3].to_vec(), c.differentials[..2].to_vec()).unwrap();
    let p = n_pushout(&x, &spec.module(0).identity(), &spec, 2).unwrap();
    assert_eq!(p.y.objects[2].dims(), &[1, 1, 0]);
    assert_eq!(p.mono_preserved, Some(true));
    assert!(p.cone_verdict.right);
    let p = n_pushout(&x, &spec.hom(0, 1)[0], &spec, 2).unwrap();
    assert!(p.cone_verdict.right);
}

#[test]
fn lemma_shape() {
    let spec = gamma5_ct();
    let c = n_cokernel(&spec.hom(0, 1)[0], &spec, 2).unwrap();
    let f = c.differentials[1].clone();
    let lp = lemma_pushout(&c, 1, &f, &spec, 2).unwrap();
    assert!(lp.homotopy_found);
    assert!(lp.row_verdict.is_exact());
    assert!(hom_basis(&lp.y.objects[1], spec.module(2)).len() == 1);
}
