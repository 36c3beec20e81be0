#![allow(dead_code)]

use higher_auslander::exactfield::{Matrix, PrimeField};
use higher_auslander::nabelian::SubcategorySpec;
use higher_auslander::quivrep::{block_morphism, direct_sum, Module, ModuleMorphism};
use higher_auslander::tilting::Ambient;
use higher_auslander::workbench::{ambient as enumerate_ambient, parse_instance, Cache, Instance};
use rand::Rng;

pub fn corpus(name: &str) -> Instance {
    parse_instance(format!("{}/../../corpus/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

pub fn ambient(name: &str) -> Ambient {
    enumerate_ambient(&corpus(name), 0, &mut Cache::disabled()).unwrap()
}

pub fn subcategory(amb: &Ambient, labels: &[&str]) -> SubcategorySpec {
    let idx: Vec<usize> = labels.iter().map(|l| amb.index_of(l).unwrap()).collect();
    amb.subcategory("test", &idx, 0).unwrap()
}

/// The unique 2-cluster tilting subcategory of mod kA3/rad².
pub fn gamma5_ct() -> (Ambient, SubcategorySpec) {
    let amb = ambient("auslander_a2.json");
    let spec = subcategory(&amb, &["P3", "P2", "P1", "S1"]);
    (amb, spec)
}

pub fn random_matrix<R: Rng>(f: PrimeField, rows: usize, cols: usize, rng: &mut R) -> Matrix {
    let data = (0..rows * cols).map(|_| rng.gen_range(0..f.modulus())).collect();
    Matrix::new(f, rows, cols, data)
}

/// Random object of the subcategory with at most `max` summands.
pub fn random_object<R: Rng>(spec: &SubcategorySpec, max: usize, rng: &mut R) -> Vec<usize> {
    let k = rng.gen_range(1..=max);
    (0..k).map(|_| rng.gen_range(0..spec.len())).collect()
}

fn sum(spec: &SubcategorySpec, idx: &[usize]) -> higher_auslander::quivrep::DirectSum {
    let alg = spec.algebra();
    let parts: Vec<Module> = idx.iter().map(|&i| spec.module(i).clone()).collect();
    direct_sum(alg.quiver(), alg.field(), &parts)
}

/// Random morphism between random objects of the subcategory.
pub fn random_morphism<R: Rng>(spec: &SubcategorySpec, max: usize, rng: &mut R) -> ModuleMorphism {
    let src = random_object(spec, max, rng);
    let tgt = random_object(spec, max, rng);
    let p = spec.algebra().field().modulus();
    let blocks: Vec<Vec<ModuleMorphism>> = tgt
        .iter()
        .map(|&t| {
            src.iter()
                .map(|&s| {
                    let basis = spec.hom(s, t);
                    let c: Vec<u64> = basis.iter().map(|_| rng.gen_range(0..p)).collect();
                    ModuleMorphism::combination(spec.module(s), spec.module(t), basis, &c)
                })
                .collect()
        })
        .collect();
    block_morphism(&sum(spec, &src), &sum(spec, &tgt), &blocks)
}
