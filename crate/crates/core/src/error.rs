use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("field of order {p}^{k} is outside the supported range")]
    FieldTooLarge { p: u64, k: u32 },

    #[error("no irreducible polynomial of degree {k} over GF({p})")]
    NoIrreducible { p: u64, k: u32 },

    #[error("zero has no multiplicative inverse")]
    InverseOfZero,

    #[error("invalid group construction: {0}")]
    InvalidGroup(String),

    #[error("invalid connection set: {0}")]
    InvalidConnectionSet(String),

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("invalid graph parameters: {0}")]
    InvalidGraph(String),

    #[error("invalid graph6 input: {0}")]
    Graph6(String),

    #[error("{0} does not divide the group order {1}")]
    NotADivisor(u64, u64),

    #[error("set is not a subgroup")]
    NotASubgroup,

    #[error("subgroups have different orders ({0} and {1})")]
    OrderMismatch(usize, usize),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("Whitney exception: {0}")]
    WhitneyException(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("case `{0}` is not registered")]
    UnregisteredCase(String),
}
