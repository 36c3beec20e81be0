//! Quivers with relations and their finite-dimensional representations.

pub mod algebra;
pub mod decompose;
pub mod enumerate;
pub mod module;
pub mod quiver;
pub mod resolution;

pub use algebra::{BasicAlgebra, ProjectiveObject};
pub use decompose::{
    are_isomorphic, classify, decompose, find_isomorphism, is_indecomposable, iso_of_indecomposables, locality,
    Decomposition, Locality, Summand,
};
pub use enumerate::{enumerate_indecomposables, Enumeration, EnumerationOptions};
pub use module::{
    block_morphism, cokernel, coordinates, direct_sum, factor_through_epi, factor_through_mono, hom_basis, hom_dim,
    image, kernel, span_rank, Complex, DirectSum, Module, ModuleMorphism,
};
pub use quiver::{Arrow, Path, Quiver, Relation, RelationSet};
pub use resolution::{
    ext_dim, ext_dims, extension_space, is_injective, is_projective, projective_cover, projective_resolution,
    ExtensionSpace, ProjectiveCover, ProjectiveResolution,
};
