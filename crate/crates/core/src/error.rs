use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("modulus not prime: {0}")]
    NotPrime(u64),
    #[error("modulus {0} exceeds the supported maximum 2^31 - 1")]
    ModulusTooLarge(u64),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),
    #[error("inadmissible relation: {0}")]
    Inadmissible(String),
    #[error("relation {index} ({description}) is violated")]
    RelationViolated { index: usize, description: String },
    #[error("not a module morphism: {0}")]
    NotAMorphism(String),
    #[error("algebra is not finite dimensional within path length {0}")]
    InfiniteDimensional(usize),
    #[error("not a projective module: {0}")]
    NotProjective(String),
    #[error("square {index} of the chain map does not commute")]
    NonCommutingSquare { index: usize },
    #[error("construction stalled at step {step}: {reason}")]
    Stalled { step: usize, reason: String },
    #[error("undecided: {0}")]
    Undecided(String),
    #[error("enumeration incomplete: {0}")]
    IncompleteEnumeration(String),
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
    #[error("{location}: {message}")]
    Parse { location: String, message: String },
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}
