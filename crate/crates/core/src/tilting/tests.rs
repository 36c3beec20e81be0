use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::quivrep::algebra::tests::{a2, a3_rad2};
use crate::quivrep::{enumerate_indecomposables, BasicAlgebra, EnumerationOptions};

fn ambient(alg: BasicAlgebra, max_dim: usize) -> Ambient {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let e = enumerate_indecomposables(&alg, &EnumerationOptions::new(max_dim + 2).declared(max_dim), &mut rng);
    assert!(e.complete, "{}", e.note);
    Ambient::new(Arc::new(alg), &e)
}

#[test]
fn gamma5_labels_and_mandatory() {
    let amb = ambient(a3_rad2(), 2);
    assert_eq!(amb.len(), 5);
    let mut labels = amb.labels.clone();
    labels.sort();
    assert_eq!(labels, vec!["P1", "P2", "P3", "S1", "S2"]);
    let mandatory: Vec<&str> = amb.mandatory().iter().map(|&i| amb.labels[i].as_str()).collect();
    assert_eq!(mandatory.len(), 4);
    assert!(!mandatory.contains(&"S2"));
}

#[test]
fn gamma5_search_finds_one() {
    let amb = ambient(a3_rad2(), 2);
    let out = search_cluster_tilting(&amb, 2, 1).unwrap();
    assert_eq!(out.certificates.len(), 1);
    let c = &out.certificates[0];
    assert_eq!(c.subcategory.members.len(), 4);
    assert!(c.rigidity.rigid && c.rigidity.entries.len() == 16);
    assert!(c.generating && c.cogenerating && !c.conditional);
    let s2 = c.approximations.iter().find(|w| w.object == "S2").unwrap();
    assert_eq!(s2.right_source, vec!["P2"]);
    assert_eq!(s2.left_target, vec!["P1"]);
}

#[test]
fn removal_fails_certification() {
    let amb = ambient(a3_rad2(), 2);
    let out = search_cluster_tilting(&amb, 2, 1).unwrap();
    let spec = &out.certificates[0].spec;
    for drop in 0..spec.len() {
        let keep: Vec<usize> = (0..spec.len()).filter(|&i| i != drop).collect();
        let c = is_n_cluster_tilting(&spec.restrict("minus one", &keep), 2, &amb).unwrap();
        assert!(!c.cluster_tilting);
        assert!(!c.failures.is_empty());
    }
}

#[test]
fn n1_everything_is_unique() {
    for (alg, d) in [(a2(), 2), (a3_rad2(), 2)] {
        let amb = ambient(alg, d);
        let out = search_cluster_tilting(&amb, 1, 0).unwrap();
        assert_eq!(out.certificates.len(), 1);
        assert_eq!(out.certificates[0].subcategory.members.len(), amb.len());
        assert!(out.certificates[0].rigidity.entries.is_empty());
    }
}

#[test]
fn a2_has_no_two_cluster_tilting() {
    let amb = ambient(a2(), 2);
    assert!(search_cluster_tilting(&amb, 2, 0).unwrap().certificates.is_empty());
}

#[test]
fn projectives_are_rigid() {
    let amb = ambient(a3_rad2(), 2);
    let proj: Vec<usize> = (0..amb.len()).filter(|&i| amb.projective[i]).collect();
    let spec = amb.subcategory("projectives", &proj, 0).unwrap();
    for n in 1..4 {
        assert!(n_rigidity_report(&spec, n).rigid);
    }
    let all = amb.everything(0).unwrap();
    assert!(!n_rigidity_report(&all, 2).rigid);
}

#[test]
fn approximations_of_members_and_zero() {
    let amb = ambient(a3_rad2(), 2);
    let spec = amb.everything(0).unwrap();
    let m = spec.module(1);
    let r = right_approximation(m, &spec, ApproximationKind::Minimal);
    assert!(r.map.is_iso());
    let c = right_approximation(m, &spec, ApproximationKind::Canonical);
    assert!(is_right_approximation(&c.map, &spec));
    let z = spec.algebra().zero_module();
    let l = left_approximation(&z, &spec, ApproximationKind::Minimal);
    assert!(l.summands.is_empty() && l.object.is_zero());
    assert!(is_left_approximation(&l.map, &spec));
}

#[test]
fn incomplete_enumeration_is_refused() {
    let alg = a3_rad2();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let e = enumerate_indecomposables(&alg, &EnumerationOptions::new(1), &mut rng);
    let amb = Ambient::new(Arc::new(alg), &e);
    assert!(matches!(search_cluster_tilting(&amb, 2, 0), Err(crate::Error::IncompleteEnumeration(_))));
}
