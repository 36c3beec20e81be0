//! One PASS/FAIL line per acceptance criterion. Every comparison is an
//! exact integer equality; the only tolerances are the wall-clock limits
//! below, measured in the test profile.

mod common;

use std::time::{Duration, Instant};

use common::*;
use higher_auslander::austransform::{endomorphism_algebra, functor_v, is_effaceable, restricted_yoneda};
use higher_auslander::exactfield::PrimeField;
use higher_auslander::nabelian::{is_n_exact, mapping_cone, n_cokernel, n_kernel, ChainMap};
use higher_auslander::quivrep::{
    cokernel, enumerate_indecomposables, factor_through_epi, factor_through_mono, hom_dim, kernel, EnumerationOptions,
};
use higher_auslander::tilting::{is_n_cluster_tilting, n_rigidity_report, search_cluster_tilting};
use higher_auslander::workbench::{run, Cache, Command, RunOptions, SubcategoryChoice};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

const A2_LIMIT: Duration = Duration::from_secs(10);
const GAMMA5_LIMIT: Duration = Duration::from_secs(60);
const SEMISIMPLE_LIMIT: Duration = Duration::from_secs(5);

struct Line {
    name: &'static str,
    failures: Vec<String>,
    elapsed: Duration,
}

fn criterion(name: &'static str, limit: Option<Duration>, body: impl FnOnce(&mut Vec<String>)) -> Line {
    let start = Instant::now();
    let mut failures = Vec::new();
    body(&mut failures);
    let elapsed = start.elapsed();
    if let Some(l) = limit {
        if elapsed >= l {
            failures.push(format!("runtime {elapsed:?} exceeds {l:?}"));
        }
    }
    Line { name, failures, elapsed }
}

fn expect(failures: &mut Vec<String>, what: &str, got: &Value, want: &Value) {
    if got != want {
        failures.push(format!("{what}: expected {want}, got {got}"));
    }
}

fn opts(n: usize, sub: SubcategoryChoice) -> RunOptions {
    RunOptions { n: Some(n), seed: 0, subcategory: sub, timings: false }
}

fn classical_a2(f: &mut Vec<String>) {
    let inst = corpus("a2.json");
    let out = run(Command::VerifyAuslander, &inst, &opts(1, SubcategoryChoice::Auto), &mut Cache::disabled()).unwrap();
    let r = &out.report["result"];
    expect(f, "ambient indecomposables", &json!(out.report["ambient"]["labels"].as_array().unwrap().len()), &json!(3));
    // independent count: dim Γ is the sum of Hom dimensions between members
    let amb = ambient("a2.json");
    let hom_sum: usize = amb.modules.iter().flat_map(|x| amb.modules.iter().map(move |y| hom_dim(x, y))).sum();
    expect(f, "dim Γ", &r["gamma"]["dim"], &json!(hom_sum));
    expect(f, "dim Γ", &r["gamma"]["dim"], &json!(5));
    expect(f, "effaceable simples", &r["effaceable"]["effaceable_simples"], &json!(["S[S1]"]));
    expect(f, "non-effaceable simples", &json!(r["effaceable"]["non_effaceable_simples"].as_array().unwrap().len()), &json!(2));
    expect(f, "theorem B", &r["theorem_b"]["pass"], &json!(true));
    expect(f, "verdict", &json!(out.pass), &json!(true));
}

fn higher_gamma5(f: &mut Vec<String>) {
    let inst = corpus("auslander_a2.json");
    let ct = run(Command::FindCt, &inst, &opts(2, SubcategoryChoice::Auto), &mut Cache::disabled()).unwrap();
    let r = &ct.report["result"];
    expect(f, "subcategories found", &r["count"], &json!(1));
    expect(f, "size", &r["found"][0]["size"], &json!(4));
    let total = ct.report["ambient"]["labels"].as_array().unwrap().len();
    expect(f, "ambient indecomposables", &json!(total), &json!(5));
    let mut members: Vec<String> =
        r["found"][0]["members"].as_array().unwrap().iter().map(|v| v.as_str().unwrap().to_string()).collect();
    members.sort();
    expect(f, "members", &json!(members), &json!(["P1", "P2", "P3", "S1"]));
    let ax = run(Command::CheckAxioms, &inst, &opts(2, SubcategoryChoice::Auto), &mut Cache::disabled()).unwrap();
    expect(f, "check-axioms", &json!(ax.pass), &json!(true));
    let v = run(Command::VerifyAuslander, &inst, &opts(2, SubcategoryChoice::Auto), &mut Cache::disabled()).unwrap();
    let groups = v.report["result"]["groups"].as_array().unwrap();
    expect(f, "verdict groups", &json!(groups.len()), &json!(6));
    for g in groups {
        expect(f, g["name"].as_str().unwrap(), &g["pass"], &json!(true));
    }
}

fn semisimple(f: &mut Vec<String>) {
    let inst = corpus("semisimple2.json");
    for n in 1..=3 {
        let out = run(Command::VerifyAuslander, &inst, &opts(n, SubcategoryChoice::All), &mut Cache::disabled()).unwrap();
        let r = &out.report["result"];
        expect(f, &format!("n={n} verdict"), &json!(out.pass), &json!(true));
        expect(f, &format!("n={n} effaceable"), &r["effaceable"]["effaceable_test_modules"], &json!(0));
    }
    // U ∘ V ≅ id dimensionally on every Γ-module of the family
    let amb = ambient("semisimple2.json");
    let spec = amb.everything(0).unwrap();
    let gamma = endomorphism_algebra(&spec).unwrap();
    let family = enumerate_indecomposables(&gamma.algebra, &EnumerationOptions::new(2), &mut ChaCha8Rng::seed_from_u64(0));
    for m in &family.modules {
        let uv = restricted_yoneda(&gamma, &functor_v(&gamma, m).module).unwrap();
        expect(f, "dim UV(F)", &json!(uv.module.dims()), &json!(m.dims()));
    }
}

fn properties(f: &mut Vec<String>) {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for (i, p) in (0..500).map(|i| (i, [2u64, 3, 101][i % 3])) {
        let field = PrimeField::new(p).unwrap();
        let (r, c) = (1 + i % 6, 1 + (i / 6) % 6);
        let m = random_matrix(field, r, c, &mut rng);
        let once = m.rref();
        if once.reduced.rref().reduced != once.reduced {
            f.push(format!("rref not idempotent on matrix {i}"));
        }
        if m.rank() != m.transpose().rank() {
            f.push(format!("rank differs from transpose rank on matrix {i}"));
        }
    }
    let (amb, spec) = gamma5_ct();
    for i in 0..100 {
        let m = random_morphism(&spec, 2, &mut rng);
        let c = n_cokernel(&m, &spec, 2).unwrap();
        let cone = mapping_cone(&ChainMap::identity(&c)).unwrap();
        if !c.is_complex() || !cone.is_complex() {
            f.push(format!("d² ≠ 0 on complex {i}"));
        }
        if !is_n_exact(&cone, &spec, 2).is_exact() {
            f.push(format!("cone of identity not 2-exact on complex {i}"));
        }
    }
    let gamma = endomorphism_algebra(&spec).unwrap();
    let u: Vec<_> = amb.modules.iter().map(|x| restricted_yoneda(&gamma, x).unwrap()).collect();
    for i in 0..spec.len() {
        for j in 0..spec.len() {
            let (x, y) = (amb.position(spec.module(i)).unwrap(), amb.position(spec.module(j)).unwrap());
            if hom_dim(&u[x].module, &u[y].module) != hom_dim(spec.module(i), spec.module(j)) {
                f.push(format!("Yoneda dimension mismatch at ({i}, {j})"));
            }
        }
    }
    let family = enumerate_indecomposables(&gamma.algebra, &EnumerationOptions::new(3), &mut ChaCha8Rng::seed_from_u64(0));
    for m in &family.modules {
        let v = functor_v(&gamma, m);
        for (x, ux) in amb.modules.iter().zip(&u) {
            if hom_dim(m, &ux.module) != hom_dim(&v.module, x) {
                f.push(format!("adjunction dimension mismatch at {:?}", m.dims()));
            }
        }
    }
    for (name, n) in [("auslander_a2.json", 2), ("a2.json", 1), ("a3.json", 1), ("semisimple2.json", 3)] {
        let a = ambient(name);
        let found = search_cluster_tilting(&a, n, 0).unwrap();
        for c in &found.certificates {
            if n_rigidity_report(&c.spec, n).nonzero().next().is_some() {
                f.push(format!("{name}: non-zero rigidity table"));
            }
            let members: Vec<usize> = (0..c.spec.len()).map(|i| a.position(c.spec.module(i)).unwrap()).collect();
            for drop in 0..members.len() {
                let rest: Vec<usize> = members.iter().enumerate().filter(|&(i, _)| i != drop).map(|(_, &m)| m).collect();
                let smaller = a.subcategory("smaller", &rest, 0).unwrap();
                if is_n_cluster_tilting(&smaller, n, &a).unwrap().cluster_tilting {
                    f.push(format!("{name}: removing member {drop} keeps cluster tilting"));
                }
            }
        }
    }
}

fn oracles(f: &mut Vec<String>) {
    let amb = ambient("a3.json");
    let spec = amb.everything(0).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for i in 0..100 {
        let m = random_morphism(&spec, 3, &mut rng);
        let c = n_cokernel(&m, &spec, 1).unwrap();
        let (_, plain) = cokernel(&m);
        if !factor_through_epi(&c.differentials[1], &plain).is_some_and(|g| g.is_iso()) {
            f.push(format!("1-cokernel differs from the cokernel on morphism {i}"));
        }
        let k = n_kernel(&m, &spec, 1).unwrap();
        let (_, plain) = kernel(&m);
        if !factor_through_mono(&k.differentials[0], &plain).is_some_and(|g| g.is_iso()) {
            f.push(format!("1-kernel differs from the kernel on morphism {i}"));
        }
    }
    for (name, labels) in [("a2.json", None), ("a3.json", None), ("auslander_a2.json", Some(["P3", "P2", "P1", "S1"]))] {
        let a = ambient(name);
        let s = match labels {
            Some(l) => subcategory(&a, &l),
            None => a.everything(0).unwrap(),
        };
        let gamma = endomorphism_algebra(&s).unwrap();
        let family = enumerate_indecomposables(&gamma.algebra, &EnumerationOptions::new(3), &mut ChaCha8Rng::seed_from_u64(0));
        for m in &family.modules {
            let v = functor_v(&gamma, m);
            if v.presentation.map.is_epi() != v.module.is_zero() || is_effaceable(&gamma, m).is_err() {
                f.push(format!("{name}: effaceability characterizations disagree at {:?}", m.dims()));
            }
        }
    }
}

fn main() {
    let lines = vec![
        criterion("1 classical Auslander formula, A2, n=1", Some(A2_LIMIT), classical_a2),
        criterion("2 higher formula, kA3/rad^2, n=2", Some(GAMMA5_LIMIT), higher_gamma5),
        criterion("3 semisimple k x k, n=1,2,3", Some(SEMISIMPLE_LIMIT), semisimple),
        criterion("4 property suites", None, properties),
        criterion("5 oracle equivalence", None, oracles),
    ];
    let mut all = true;
    for l in &lines {
        let status = if l.failures.is_empty() { "PASS" } else { "FAIL" };
        println!("{status} criterion {} ({:.2?})", l.name, l.elapsed);
        for w in &l.failures {
            println!("    {w}");
        }
        all &= l.failures.is_empty();
    }
    if !all {
        std::process::exit(1);
    }
}
