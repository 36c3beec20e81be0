pub mod austransform;
pub mod error;
pub mod exactfield;
pub mod nabelian;
pub mod quivrep;
pub mod tilting;
pub mod workbench;

pub use error::{Error, Result};

#[cfg(doctest)]
pub mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub mod introduction {}
    #[doc = include_str!("../../../book/src/prime_fields.md")]
    pub mod prime_fields {}
    #[doc = include_str!("../../../book/src/representations.md")]
    pub mod representations {}
    #[doc = include_str!("../../../book/src/n_abelian.md")]
    pub mod n_abelian {}
    #[doc = include_str!("../../../book/src/cluster_tilting.md")]
    pub mod cluster_tilting {}
    #[doc = include_str!("../../../book/src/auslander_formula.md")]
    pub mod auslander_formula {}
    #[doc = include_str!("../../../book/src/workbench.md")]
    pub mod workbench {}
}
