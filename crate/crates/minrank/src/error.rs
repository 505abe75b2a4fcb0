//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown Cartan type `{0}`")]
    UnknownType(String),

    #[error("weight {0:?} is not dominant: pairing with simple coroot {1} is {2}")]
    NotDominant(Vec<i64>, usize, i64),

    #[error("Weyl group exceeds the enumeration bound of {0} elements")]
    GroupTooLarge(usize),

    #[error("elements belong to different root data")]
    DatumMismatch,

    #[error("unsupported symmetric space `{spec}`: {detail}")]
    UnsupportedSpace { spec: String, detail: String },

    #[error("simple roots {0} and {1} lie in the same involution orbit but are adjacent")]
    AdjacentOrbit(usize, usize),

    #[error(
        "peeling stalled at twisted involution of length {length}: \
         no simple reflection drops the length by exactly 2 (not in the minimal-rank regime)"
    )]
    RealOrNoncompactStep { length: usize },

    #[error("group of order {order} exceeds the brute-force bound of {max}")]
    BruteForceTooLarge { order: usize, max: usize },

    #[error("no dominant integral preimage of {0:?} found within the search box")]
    SearchExhausted(Vec<i64>),

    #[error("negative multiplicity {mult} at weight {mu:?} during branching")]
    NegativeMultiplicity { mu: Vec<i64>, mult: i64 },
}

impl Error {
    /// Short machine-readable kind, used in structured JSON error output.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::UnknownType(_) => "UnknownType",
            Error::NotDominant(..) => "NotDominant",
            Error::GroupTooLarge(_) => "GroupTooLarge",
            Error::DatumMismatch => "DatumMismatch",
            Error::UnsupportedSpace { .. } => "UnsupportedSpace",
            Error::AdjacentOrbit(..) => "AdjacentOrbit",
            Error::RealOrNoncompactStep { .. } => "RealOrNoncompactStep",
            Error::BruteForceTooLarge { .. } => "BruteForceTooLarge",
            Error::SearchExhausted(_) => "SearchExhausted",
            Error::NegativeMultiplicity { .. } => "NegativeMultiplicity",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
