//! Weak cokernels, n-cokernels and n-kernels, n-exactness, mapping cones,
//! n-pushouts and a finite checker for the n-abelian axioms, all for a
//! subcategory presented by finitely many indecomposable modules.

mod axioms;
mod cokernels;
mod cone;
mod exactness;
mod spec;

pub use axioms::{check_axioms, test_morphisms, AxiomReport, AxiomVerdict, SamplingPolicy, TestMorphism, Witness};
pub use cokernels::{n_cokernel, n_kernel, weak_cokernel, weak_kernel};
pub use cone::{
    contracting_homotopy, lemma_pushout, mapping_cone, n_pushout, ChainMap, LemmaPushout, LemmaPushoutSummary, Pushout,
};
pub use exactness::{is_intrinsic_epi, is_intrinsic_mono, is_n_exact, ExactnessDefect, NExactnessVerdict};
pub use spec::{SubcategorySpec, SubcategorySummary};

#[cfg(test)]
mod tests;
