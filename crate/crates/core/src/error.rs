use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension must lie in 2..={max}, got {0}", max = crate::Dim::MAX)]
    Dimension(usize),

    #[error("shape mismatch: expected {expected} points, found {found}")]
    Shape { expected: usize, found: usize },

    #[error("arity mismatch: expected {expected} arguments, found {found}")]
    Arity { expected: usize, found: usize },

    #[error("value {value} out of range 1..={n}")]
    ValueOutOfRange { value: usize, n: usize },

    #[error("element index {index} out of range for carrier of size {size}")]
    IndexOutOfRange { index: usize, size: usize },

    #[error("element is not in the carrier")]
    NotInCarrier,

    #[error("carrier is not closed under q")]
    NotClosed,

    #[error("carrier misses constant e{0}")]
    MissingConstant(usize),

    #[error("subscript set is empty")]
    EmptySubscript,

    #[error("join needs an index outside the subscript set, but the subscript set is everything")]
    NoComplementIndex,

    #[error("invalid index parameters: {0}")]
    InvalidIndex(String),

    #[error("unbound variable `{0}`")]
    UnboundVariable(String),

    #[error("{0}")]
    Parse(#[from] ParseError),

    #[error("exhaustive check needs {required} evaluations, budget is {budget}; use sampled mode")]
    BudgetExceeded { required: u128, budget: u64 },

    #[error("carrier of size {size} exceeds the bound {bound}")]
    CarrierTooLarge { size: usize, bound: usize },

    #[error("operation needs a proper multideal, got the degenerate one")]
    Degenerate,

    #[error("atom is not admissible: {0}")]
    InvalidAtom(String),

    #[error("relation is not an equivalence")]
    NotAnEquivalence,

    #[error("cannot translate: {0}")]
    Translation(String),

    #[error("axiom audit failed: {0}")]
    AuditFailed(String),

    #[error("operation needs dimension {expected}, got {found}")]
    RequiresDimension { expected: usize, found: usize },

    #[error("multideal does not cover the carrier")]
    NotUltra,

    #[error("map is not a homomorphism onto the generator")]
    NotHomomorphism,
}

/// Syntax error with a byte offset into the source text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at {}: {}", self.position, self.message)
    }
}

impl core::error::Error for ParseError {}
