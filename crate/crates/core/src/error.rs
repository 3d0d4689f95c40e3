use thiserror::Error;

use crate::group::GroupElement;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{family} parameter {value} is out of range (minimum {min})")]
    ParameterOutOfRange {
        family: &'static str,
        value: u32,
        min: u32,
    },
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("sequence length {found} does not match permutation degree {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("sequence entry {entry} is outside 1..={k}")]
    EntryOutOfRange { entry: u32, k: u32 },
    #[error("element {0} is not p-regular")]
    NotPRegular(GroupElement),
    #[error("character {0} does not vanish outside the rotation subgroup")]
    SupportNotCyclic(String),
    #[error("cannot realise t_gamma = {t_gamma}: {reason}")]
    ConstructionFailure { t_gamma: u32, reason: String },
    #[error("target is not a subgroup of the rotation subgroup")]
    NotRotationSubgroup,
    #[error("character {0} is not linear")]
    CharacterNotLinear(String),
    #[error("character {0} is not two-dimensional")]
    CharacterNotTwoDim(String),
    #[error("character index {index} is not an irreducible Brauer character label here")]
    IndexOutOfRange { index: u32 },
    #[error("2-adic valuation of zero is undefined")]
    ZeroValuation,
    #[error("unknown character {0}")]
    UnknownCharacter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
