//! Enumeration of indecomposable modules by dimension.
//!
//! Every indecomposable `E` of dimension `d > 1` sits in a non-split
//! sequence `0 -> S -> E -> N -> 0` with `S` simple (a piece of the socle) and
//! `N` a sum of indecomposables of smaller dimension, each of which carries a
//! non-zero component of the extension class (otherwise it would split off).
//! Running over all such `N` and all classes up to independent rescaling of
//! the components therefore reaches every indecomposable of dimension `d`
//! once the smaller ones are known.

use rand::Rng;

use crate::exactfield::Matrix;

use super::algebra::BasicAlgebra;
use super::decompose::{iso_of_indecomposables, locality_with_basis, Locality};
use super::module::{direct_sum, hom_basis, Module};
use super::resolution::{extension_space, ExtensionSpace};

/// Upper bound on the number of candidate extensions examined.
pub const DEFAULT_BUDGET: usize = 50_000;

#[derive(Debug, Clone)]
pub struct EnumerationOptions {
    pub dim_bound: usize,
    pub budget: usize,
    /// Declared largest dimension of an indecomposable, for
    /// representation-finite algebras.
    pub declared_max_dim: Option<usize>,
}

impl EnumerationOptions {
    pub fn new(dim_bound: usize) -> Self {
        EnumerationOptions { dim_bound, budget: DEFAULT_BUDGET, declared_max_dim: None }
    }

    pub fn declared(mut self, max_dim: usize) -> Self {
        self.declared_max_dim = Some(max_dim);
        self
    }
}

#[derive(Debug, Clone)]
pub struct Enumeration {
    /// Pairwise non-isomorphic indecomposables, ordered by total dimension
    /// and then dimension vector.
    pub modules: Vec<Module>,
    pub complete: bool,
    pub candidates_examined: usize,
    pub note: String,
}

struct Level {
    found: Vec<Module>,
    exts: Vec<Vec<ExtensionSpace>>,
    examined: usize,
    overflow: bool,
    undecided: usize,
}

pub fn enumerate_indecomposables<R: Rng>(alg: &BasicAlgebra, opts: &EnumerationOptions, rng: &mut R) -> Enumeration {
    let nv = alg.vertex_count();
    let mut st = Level { found: Vec::new(), exts: Vec::new(), examined: 0, overflow: false, undecided: 0 };
    for v in 0..nv {
        push_found(alg, &mut st, alg.simple(v).clone());
    }
    let spot = opts.declared_max_dim.filter(|&d| d >= opts.dim_bound).map(|d| d + 1);
    let top = spot.unwrap_or(opts.dim_bound).max(opts.dim_bound);
    let mut beyond_declared = 0;
    for d in 2..=top {
        let before = st.found.len();
        extend_level(alg, &mut st, d, opts.budget, rng);
        let new = st.found.len() - before;
        if opts.declared_max_dim.is_some_and(|m| d > m) {
            beyond_declared += new;
        }
        if st.overflow {
            break;
        }
    }
    let mut modules: Vec<Module> = st.found.iter().filter(|m| m.total_dim() <= opts.dim_bound).cloned().collect();
    modules.sort_by(|a, b| a.total_dim().cmp(&b.total_dim()).then_with(|| b.dims().cmp(a.dims())));

    let mut reasons = Vec::new();
    if st.overflow {
        reasons.push(format!("candidate budget of {} exhausted", opts.budget));
    }
    if st.undecided > 0 {
        reasons.push(format!("{} candidates with undecided endomorphism rings", st.undecided));
    }
    match opts.declared_max_dim {
        None => reasons.push("no representation-finite bound declared".to_string()),
        Some(m) if m > opts.dim_bound => {
            reasons.push(format!("dimension bound {} below declared maximum {m}", opts.dim_bound))
        }
        Some(m) if beyond_declared > 0 => {
            reasons.push(format!("found {beyond_declared} indecomposables above the declared maximum {m}"))
        }
        _ => {}
    }
    let complete = reasons.is_empty();
    let note = if complete {
        format!(
            "exhaustive up to dimension {top}; no indecomposable above the declared maximum {}",
            opts.declared_max_dim.unwrap_or(0)
        )
    } else {
        reasons.join("; ")
    };
    Enumeration { modules, complete, candidates_examined: st.examined, note }
}

fn push_found(alg: &BasicAlgebra, st: &mut Level, m: Module) {
    let exts = alg.simples().iter().map(|s| extension_space(alg, &m, s)).collect();
    st.found.push(m);
    st.exts.push(exts);
}

/// Multisets (as non-decreasing index lists) of found modules with the given
/// total dimension, each having non-zero `Ext^1(-, S_v)`.
fn multisets(st: &Level, v: usize, total: usize) -> Vec<Vec<usize>> {
    let usable: Vec<usize> = (0..st.found.len())
        .filter(|&k| st.exts[k][v].dim() > 0 && st.found[k].total_dim() <= total)
        .collect();
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(st: &Level, usable: &[usize], from: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for i in from..usable.len() {
            let k = usable[i];
            let d = st.found[k].total_dim();
            if d <= left {
                cur.push(k);
                rec(st, usable, i, left - d, cur, out);
                cur.pop();
            }
        }
    }
    rec(st, &usable, 0, total, &mut cur, &mut out);
    out
}

/// Normalised non-zero vectors of `F_p^e` (first non-zero entry 1).
fn projective_points(p: u64, e: usize) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    for lead in 0..e {
        let free = e - lead - 1;
        let count = (p as usize).pow(free as u32);
        for mut idx in 0..count {
            let mut v = vec![0u64; e];
            v[lead] = 1;
            for slot in v.iter_mut().skip(lead + 1) {
                *slot = (idx % p as usize) as u64;
                idx /= p as usize;
            }
            out.push(v);
        }
    }
    out
}

fn point_count(p: u64, e: usize) -> usize {
    (0..e).map(|i| (p as usize).saturating_pow(i as u32)).fold(0usize, |a, b| a.saturating_add(b))
}

fn extend_level<R: Rng>(alg: &BasicAlgebra, st: &mut Level, d: usize, budget: usize, rng: &mut R) {
    let f = alg.field();
    let p = f.modulus();
    let q = alg.quiver();
    for v in 0..alg.vertex_count() {
        for ms in multisets(st, v, d - 1) {
            let count = ms
                .iter()
                .map(|&k| point_count(p, st.exts[k][v].dim()))
                .fold(1usize, |a, b| a.saturating_mul(b));
            if st.examined.saturating_add(count) > budget {
                st.overflow = true;
                return;
            }
            let parts: Vec<Module> = ms.iter().map(|&k| st.found[k].clone()).collect();
            let n = direct_sum(q, f, &parts).module;
            let s = alg.simple(v).clone();
            // classes of the sum, one block of columns per summand
            let mut classes = Vec::new();
            let mut ranges = Vec::new();
            let mut col_off = vec![0usize; alg.vertex_count()];
            for (&k, part) in ms.iter().zip(&parts) {
                let start = classes.len();
                for cls in &st.exts[k][v].classes {
                    let blocks = q
                        .arrows()
                        .iter()
                        .enumerate()
                        .map(|(i, a)| {
                            let mut m = Matrix::zeros(f, s.dim(a.target), n.dim(a.source));
                            m.write_block(0, col_off[a.source], &cls[i]);
                            m
                        })
                        .collect();
                    classes.push(blocks);
                }
                ranges.push((start, classes.len()));
                for (w, off) in col_off.iter_mut().enumerate() {
                    *off += part.dim(w);
                }
            }
            let space = ExtensionSpace {
                left: s.clone(),
                right: n.clone(),
                cocycle_dim: 0,
                coboundary_dim: 0,
                classes,
            };
            let per_summand: Vec<Vec<Vec<u64>>> =
                ranges.iter().map(|&(a, b)| projective_points(p, b - a)).collect();
            let total = space.classes.len();
            let mut choice = vec![0usize; per_summand.len()];
            loop {
                let mut coeffs = Vec::with_capacity(total);
                for (j, pts) in per_summand.iter().enumerate() {
                    coeffs.extend_from_slice(&pts[choice[j]]);
                }
                st.examined += 1;
                let e = space.middle_term(alg, &coeffs);
                consider(st, alg, e, rng);
                // advance the mixed-radix counter
                let mut j = 0;
                loop {
                    if j == choice.len() {
                        break;
                    }
                    choice[j] += 1;
                    if choice[j] < per_summand[j].len() {
                        break;
                    }
                    choice[j] = 0;
                    j += 1;
                }
                if j == choice.len() {
                    break;
                }
            }
        }
    }
}

fn consider<R: Rng>(st: &mut Level, alg: &BasicAlgebra, e: Module, rng: &mut R) {
    let basis = hom_basis(&e, &e);
    match locality_with_basis(&e, &basis, rng) {
        Locality::Local { .. } => {
            if st
                .found
                .iter()
                .filter(|m| m.dims() == e.dims())
                .all(|m| iso_of_indecomposables(m, &e).is_none())
            {
                push_found(alg, st, e);
            }
        }
        Locality::Unknown => st.undecided += 1,
        Locality::Decomposable | Locality::Zero => {}
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::PrimeField;
    use crate::quivrep::algebra::tests::{a2, a3_rad2};
    use crate::quivrep::quiver::{Quiver, RelationSet};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn points() {
        assert_eq!(projective_points(3, 2).len(), 4);
        assert_eq!(point_count(3, 2), 4);
        assert_eq!(projective_points(5, 1), vec![vec![1]]);
    }

    #[test]
    fn semisimple_two_vertices() {
        let q = Quiver::new(&["1", "2"], &[] as &[(&str, &str, &str)]).unwrap();
        let alg = BasicAlgebra::new(q, RelationSet::default(), PrimeField::default()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let e = enumerate_indecomposables(&alg, &EnumerationOptions::new(3).declared(1), &mut rng);
        assert_eq!(e.modules.len(), 2);
        assert!(e.complete);
    }

    #[test]
    fn a2_bound_two() {
        let alg = a2();
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let e = enumerate_indecomposables(&alg, &EnumerationOptions::new(2).declared(2), &mut rng);
        assert_eq!(e.modules.len(), 3);
        assert!(e.complete, "{}", e.note);
        let undeclared = enumerate_indecomposables(&alg, &EnumerationOptions::new(2), &mut rng);
        assert!(!undeclared.complete);
    }

    #[test]
    fn a3_rad2_bound_five() {
        let alg = a3_rad2();
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let e = enumerate_indecomposables(&alg, &EnumerationOptions::new(5).declared(2), &mut rng);
        assert_eq!(e.modules.len(), 5);
        assert!(e.complete, "{}", e.note);
    }

    #[test]
    fn overflow_marks_incomplete() {
        let alg = a2();
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let mut opts = EnumerationOptions::new(3).declared(2);
        opts.budget = 0;
        let e = enumerate_indecomposables(&alg, &opts, &mut rng);
        assert!(!e.complete);
    }
}
