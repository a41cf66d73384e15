use alloc::string::String;

/// Errors shared by the set operations and selection algorithms.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SetError {
    #[error("empty operand: {0}")]
    EmptyOperand(&'static str),
    #[error("mismatched moduli: {0} vs {1}")]
    MismatchedModuli(u32, u32),
    #[error("mixed ambients: operation needs both sets in Z or both in Z_{{p}}")]
    MixedAmbient,
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("modulus {0} out of supported range (2..=2^20)")]
    ModulusRange(u32),
    #[error("element {0} out of range for the ambient")]
    ElementRange(i64),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("exhaustive budget exceeded: {candidates} candidate subsets > {budget}")]
    BudgetExceeded { candidates: u128, budget: u128 },
}

impl SetError {
    pub fn invalid(msg: impl Into<String>) -> Self {
        SetError::InvalidInput(msg.into())
    }
}
