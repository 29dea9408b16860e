use thiserror::Error;

/// Errors raised by group construction and factorisation routines.
///
/// Point-level operations (`Permutation::compose` and friends) assert their
/// preconditions instead; the `Result`-based surface starts where user input
/// or genuinely data-dependent failure is possible.
#[derive(Debug, Error)]
pub enum GroupError {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("image list is not a bijection on {0} points")]
    NotBijection(usize),

    #[error("cannot parse permutation `{0}`: {1}")]
    BadCycles(String, String),

    #[error("element cap exceeded: need {need} but cap is {cap}")]
    CapExceeded { need: u64, cap: u64 },

    #[error("not a subgroup")]
    NotSubgroup,

    #[error("element is not in the group")]
    NotInGroup,

    #[error("not a complementary factorisation: {0}")]
    NotComplementary(String),

    #[error("complement is not core-free: normal subgroup of order {0} inside it")]
    NotCoreFree(u64),

    #[error("map is not an automorphism: {0}")]
    NotAutomorphism(String),

    #[error("map is not a skew morphism: {0}")]
    NotSkew(String),

    #[error("invalid construction: {0}")]
    Invalid(String),

    #[error("unknown group spec `{0}`")]
    UnknownSpec(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, GroupError>;
