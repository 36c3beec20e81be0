//! Finitely presented functors on the subcategory as modules over its
//! endomorphism algebra `Γ`, the functors `V` and `U`, effaceable functors
//! and the verification of the higher Auslander formula.

mod functor;
mod gamma;
mod verify;
mod yoneda;

pub use functor::{counit, functor_v, functor_v_map, is_effaceable, minimal_presentation, unit, Presentation, VImage};
pub use gamma::{endomorphism_algebra, BasedAlgebra, BasisElement, Gamma, GammaSummary};
pub use verify::{
    verify_higher_auslander, EffaceableSummary, GroupVerdict, Supplementary, TestFamily, TheoremA, TheoremB,
    TheoremReport, Verdict, VerifyOptions,
};
pub use yoneda::{
    ambient_object, presentation_to_morphism, projective_map_to_ambient, projective_map_to_morphism,
    restricted_yoneda, restricted_yoneda_map, yoneda_iso, Restricted,
};

#[cfg(test)]
mod tests;
