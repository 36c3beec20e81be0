use std::sync::Arc;

use crate::error::Result;
use crate::nabelian::SubcategorySpec;
use crate::quivrep::{is_injective, is_projective, iso_of_indecomposables, BasicAlgebra, Enumeration, Module};

/// The enumerated indecomposables of the ambient module category, with
/// readable labels.
#[derive(Debug, Clone)]
pub struct Ambient {
    pub algebra: Arc<BasicAlgebra>,
    pub modules: Vec<Module>,
    pub labels: Vec<String>,
    pub projective: Vec<bool>,
    pub injective: Vec<bool>,
    pub complete: bool,
    pub note: String,
}

impl Ambient {
    /// Labels are `P<v>` for indecomposable projectives, `S<v>` for the
    /// remaining simples and the dimension vector otherwise.
    pub fn new(algebra: Arc<BasicAlgebra>, enumeration: &Enumeration) -> Self {
        let names = algebra.quiver().vertices().to_vec();
        let mut labels = Vec::new();
        for m in &enumeration.modules {
            let proj = (0..names.len()).find(|&v| iso_of_indecomposables(algebra.projective(v), m).is_some());
            let simple = (0..names.len()).find(|&v| iso_of_indecomposables(algebra.simple(v), m).is_some());
            let mut label = match (proj, simple) {
                (Some(v), _) => format!("P{}", names[v]),
                (None, Some(v)) => format!("S{}", names[v]),
                _ => format!("{:?}", m.dims()).replace(' ', ""),
            };
            if labels.contains(&label) {
                let mut k = 2;
                while labels.contains(&format!("{label}#{k}")) {
                    k += 1;
                }
                label = format!("{label}#{k}");
            }
            labels.push(label);
        }
        let projective = enumeration.modules.iter().map(|m| is_projective(&algebra, m)).collect();
        let injective = enumeration.modules.iter().map(|m| is_injective(&algebra, m)).collect();
        Ambient {
            algebra,
            modules: enumeration.modules.clone(),
            labels,
            projective,
            injective,
            complete: enumeration.complete,
            note: enumeration.note.clone(),
        }
    }

    pub fn len(&self) -> usize {
        self.modules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.modules.is_empty()
    }

    /// Index of the enumerated module isomorphic to the indecomposable `m`.
    pub fn position(&self, m: &Module) -> Option<usize> {
        self.modules.iter().position(|x| iso_of_indecomposables(x, m).is_some())
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Indices of projective or injective modules.
    pub fn mandatory(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.projective[i] || self.injective[i]).collect()
    }

    pub fn subcategory(&self, name: impl Into<String>, members: &[usize], seed: u64) -> Result<SubcategorySpec> {
        let labels = members.iter().map(|&i| self.labels[i].clone()).collect();
        let mods = members.iter().map(|&i| self.modules[i].clone()).collect();
        SubcategorySpec::new(self.algebra.clone(), name, labels, mods, seed)
    }

    pub fn everything(&self, seed: u64) -> Result<SubcategorySpec> {
        let all: Vec<usize> = (0..self.len()).collect();
        self.subcategory("all", &all, seed)
    }
}
