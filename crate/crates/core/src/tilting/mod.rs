//! Approximations, rigidity tables, cluster tilting certificates and the
//! search for n-cluster tilting subcategories.

mod ambient;
mod approx;
mod certificate;
mod rigidity;
mod search;

pub use ambient::Ambient;
pub use approx::{
    is_left_approximation, is_right_approximation, left_approximation, right_approximation, Approximation,
    ApproximationKind,
};
pub use certificate::{is_n_cluster_tilting, ApproximationWitness, CTCertificate, OrthogonalityWitness};
pub use rigidity::{n_rigidity_report, RigidityEntry, RigidityTable};
pub use search::{search_cluster_tilting, SearchOutcome, MAX_OPTIONAL};

#[cfg(test)]
mod tests;
