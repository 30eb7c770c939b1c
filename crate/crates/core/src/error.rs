use thiserror::Error;

pub type Result<T> = std::result::Result<T, HgsError>;

#[derive(Debug, Error)]
pub enum HgsError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("multiplication table is not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },

    #[error("invalid group data: {0}")]
    InvalidGroup(String),

    #[error("{what} has size {size}, exceeding the cap of {cap}")]
    CapExceeded { what: String, size: usize, cap: usize },

    #[error("unknown group label `{0}`")]
    UnknownLabel(String),

    #[error("subgroup is not characteristic")]
    NotCharacteristic,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("inexact division {num} / {den} in {context}")]
    InexactDivision { num: u64, den: u64, context: String },

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error("checkpoint: {0}")]
    Checkpoint(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl HgsError {
    pub fn is_infeasible(&self) -> bool {
        matches!(self, HgsError::CapExceeded { .. })
    }
}

/// Exact integer division; any remainder is reported as an error.
pub fn exact_div(num: u64, den: u64, context: &str) -> Result<u64> {
    if den == 0 || num % den != 0 {
        return Err(HgsError::InexactDivision {
            num,
            den,
            context: context.to_string(),
        });
    }
    Ok(num / den)
}
