use thiserror::Error;

/// Errors produced while building or analysing finite rings and Boolean algebras.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("Z/{0}: modulus must be a positive integer")]
    ZeroModulus(u64),

    #[error("GF({0}): order is not a prime power")]
    NotPrimePower(u64),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("polynomial {0:?} is not a monic irreducible polynomial")]
    ReduciblePolynomial(Vec<usize>),

    #[error("ring of cardinality {card} exceeds the size bound {bound}")]
    SizeBound { card: u128, bound: usize },

    #[error("element index {index} is outside a ring of cardinality {card}")]
    NotAnElement { index: usize, card: usize },

    #[error("subset is not an ideal: {0}")]
    NotAnIdeal(String),

    #[error("ring axiom violated: {0}")]
    AxiomViolation(String),

    #[error("table is not a ring homomorphism: {0}")]
    NotAHomomorphism(String),

    #[error("homomorphisms do not compose: {0}")]
    Mismatch(String),

    #[error("empty product requested without the trivial-ring flag")]
    EmptyProduct,

    #[error("no generating set with at most {0} elements found")]
    NoSmallGeneratingSet(usize),

    #[error("ring is not von Neumann regular (element {counterexample} has no x with a = a^2 x)")]
    NotVnRegular { counterexample: usize },

    #[error("element {0} is not idempotent")]
    NotIdempotent(usize),

    #[error("ring is not a field")]
    NotAField,

    #[error("ideal is not prime")]
    NotPrimeIdeal,

    #[error("open set {inner:?} is not contained in {outer:?}")]
    ContainmentViolated { inner: Vec<usize>, outer: Vec<usize> },

    #[error("no factorisation exists: {0}")]
    NoFactorization(String),

    #[error("invalid Boolean algebra: {0}")]
    InvalidBooleanAlgebra(String),

    #[error("not a Boolean homomorphism: {0}")]
    NotABooleanHom(String),

    #[error("invalid atom map: {0}")]
    InvalidAtomMap(String),

    #[error("invalid inverse system: {0}")]
    InvalidInverseSystem(String),
}

pub type Result<T> = std::result::Result<T, Error>;
