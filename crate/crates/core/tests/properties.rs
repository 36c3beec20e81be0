mod common;

use common::*;
use higher_auslander::austransform::{endomorphism_algebra, functor_v, restricted_yoneda};
use higher_auslander::exactfield::PrimeField;
use higher_auslander::nabelian::{is_n_exact, mapping_cone, n_cokernel, ChainMap};
use higher_auslander::quivrep::{enumerate_indecomposables, hom_dim, EnumerationOptions};
use higher_auslander::tilting::{is_n_cluster_tilting, n_rigidity_report, search_cluster_tilting};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn matrix_case() -> impl Strategy<Value = (u64, usize, usize, u64)> {
    (prop::sample::select(vec![2u64, 3, 101]), 0usize..=6, 0usize..=6, any::<u64>())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn rref_is_idempotent((p, r, c, seed) in matrix_case()) {
        let f = PrimeField::new(p).unwrap();
        let m = random_matrix(f, r, c, &mut ChaCha8Rng::seed_from_u64(seed));
        let once = m.rref();
        let twice = once.reduced.rref();
        prop_assert_eq!(&twice.reduced, &once.reduced);
        prop_assert_eq!(twice.pivots, once.pivots);
    }

    #[test]
    fn rank_of_transpose((p, r, c, seed) in matrix_case()) {
        let f = PrimeField::new(p).unwrap();
        let m = random_matrix(f, r, c, &mut ChaCha8Rng::seed_from_u64(seed));
        prop_assert_eq!(m.rank(), m.transpose().rank());
        prop_assert_eq!(m.rank(), m.rref().rank);
    }
}

#[test]
fn complexes_square_to_zero_and_cones_of_identity_are_exact() {
    let (_, spec) = gamma5_ct();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..100 {
        let f = random_morphism(&spec, 2, &mut rng);
        let c = n_cokernel(&f, &spec, 2).unwrap();
        assert!(c.is_complex());
        let cone = mapping_cone(&ChainMap::identity(&c)).unwrap();
        assert!(cone.is_complex());
        for k in 0..cone.len() {
            assert_eq!(cone.cohomology_dim(k), 0);
        }
        assert!(is_n_exact(&cone, &spec, 2).is_exact());
    }
}

#[test]
fn yoneda_dimensions() {
    for (name, labels, n) in [
        ("a2.json", vec!["P2", "P1", "S1"], 1),
        ("auslander_a2.json", vec!["P3", "P2", "P1", "S1"], 2),
    ] {
        let amb = ambient(name);
        let spec = subcategory(&amb, &labels);
        let gamma = endomorphism_algebra(&spec).unwrap();
        let images: Vec<_> = amb.modules.iter().map(|x| restricted_yoneda(&gamma, x).unwrap()).collect();
        for (i, x) in amb.modules.iter().enumerate() {
            for (j, y) in amb.modules.iter().enumerate() {
                // fully faithful on the subcategory, and on all of mod A when n = 1
                if n == 1 || (spec.contains(x).unwrap() && spec.contains(y).unwrap()) {
                    assert_eq!(hom_dim(&images[i].module, &images[j].module), hom_dim(x, y), "{name} {i} {j}");
                }
            }
        }
    }
}

#[test]
fn adjunction_dimensions() {
    let (amb, spec) = gamma5_ct();
    let gamma = endomorphism_algebra(&spec).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let family = enumerate_indecomposables(&gamma.algebra, &EnumerationOptions::new(3), &mut rng);
    for f in &family.modules {
        let v = functor_v(&gamma, f);
        for x in &amb.modules {
            let ux = restricted_yoneda(&gamma, x).unwrap();
            assert_eq!(hom_dim(f, &ux.module), hom_dim(&v.module, x));
        }
    }
}

#[test]
fn rigidity_tables_vanish_on_cluster_tilting() {
    for (name, n) in [("auslander_a2.json", 2), ("a2.json", 1), ("semisimple2.json", 2), ("a3.json", 1)] {
        let amb = ambient(name);
        let found = search_cluster_tilting(&amb, n, 0).unwrap();
        assert!(!found.certificates.is_empty(), "{name}");
        for c in &found.certificates {
            let t = n_rigidity_report(&c.spec, n);
            assert!(t.rigid && t.nonzero().next().is_none(), "{name}");
        }
    }
}

#[test]
fn removing_a_member_destroys_cluster_tilting() {
    let (amb, spec) = gamma5_ct();
    let members: Vec<usize> = (0..spec.len()).map(|i| amb.index_of(spec.label(i)).unwrap()).collect();
    for drop in 0..members.len() {
        let rest: Vec<usize> = members.iter().enumerate().filter(|&(i, _)| i != drop).map(|(_, &m)| m).collect();
        let smaller = amb.subcategory("smaller", &rest, 0).unwrap();
        assert!(!is_n_cluster_tilting(&smaller, 2, &amb).unwrap().cluster_tilting);
    }
}
