use thiserror::Error;

use crate::group::FriezeGroupId;
use crate::monomial::Alphabet;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid composition: {0}")]
    InvalidComposition(String),

    #[error("cannot combine elements of {0} and {1}")]
    GroupMismatch(FriezeGroupId, FriezeGroupId),

    #[error("{group} does not act on {alphabet} monomials")]
    WrongAlphabet {
        group: FriezeGroupId,
        alphabet: Alphabet,
    },

    #[error("generator `{generator}` is not available in {group}")]
    UnknownGenerator { group: FriezeGroupId, generator: char },

    #[error("parse error at offset {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("series mismatch: {0}")]
    SeriesMismatch(String),

    #[error("monomial {monomial} is not supported in the window [-{window}, {window}]")]
    OutsideWindow { monomial: String, window: i64 },

    #[error("the unit monomial has no basis label")]
    UnitMonomial,

    #[error("invalid basis label: {0}")]
    InvalidLabel(String),

    #[error("series is not invariant under {group}: {reason}")]
    NotInvariant { group: FriezeGroupId, reason: String },

    #[error("invalid window radius {0}")]
    InvalidWindow(i64),

    #[error("margin {margin} is below the generator shift bound {required}")]
    MarginTooSmall { margin: i64, required: i64 },

    #[error("{0} has no module decomposition in this library (only F1 and F6)")]
    UnsupportedGroup(FriezeGroupId),
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }
}
