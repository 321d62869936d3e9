use thiserror::Error;

use crate::simplicial::Colour;

/// Errors raised by constructors and operations of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("colour {colour} appears twice in simplex {simplex:?}")]
    DuplicateColour { colour: Colour, simplex: Vec<String> },
    #[error("unknown vertex id `{0}`")]
    UnknownVertex(String),
    #[error("vertex id `{0}` declared twice")]
    DuplicateVertex(String),
    #[error("colour {colour} outside 1..={n}")]
    ColourOutOfRange { colour: Colour, n: usize },
    #[error("colour count must be in 1..=64, got {0}")]
    UnsupportedColourCount(usize),
    #[error("simplex {0:?} is not in the complex")]
    MissingSimplex(Vec<String>),
    #[error("colour counts differ ({0} vs {1})")]
    MismatchedColourCount(usize, usize),
    #[error("complex has dimension {0}, at most 2 is supported here")]
    DimensionTooHigh(isize),
    #[error("invalid colour map: {0}")]
    InvalidColourMap(String),
    #[error("cube {0} is not in the complex")]
    MissingCube(String),
    #[error("pair is not smartly paired: {0}")]
    NotSmartlyPaired(String),
    #[error("complex does not have pure dimension")]
    NotPure,
    #[error("invalid chain: {0}")]
    InvalidChain(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("cube complex carries no coupled-link origin data")]
    MissingOrigin,
    #[error("removing hyperplane {hyperplane} leaves {components} components")]
    NotTwoSided { hyperplane: usize, components: usize },
    #[error("invalid pocset: {0}")]
    InvalidPocset(String),
    #[error("complex is not flag: clique {0:?} spans no simplex")]
    NotFlag(Vec<String>),
    #[error("map does not preserve colours: {0}")]
    NotColourPreserving(String),
    #[error("map is not simplicial: {0}")]
    NotSimplicial(String),
    #[error("malformed cube complex: {0}")]
    MalformedCubeComplex(String),
    #[error("link is not a simplicial complex: {0}")]
    NonSimplicialLink(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("internal verification failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Stable snake-case name of the variant, for structured reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DuplicateColour { .. } => "duplicate_colour",
            Error::UnknownVertex(_) => "unknown_vertex",
            Error::DuplicateVertex(_) => "duplicate_vertex",
            Error::ColourOutOfRange { .. } => "colour_out_of_range",
            Error::UnsupportedColourCount(_) => "unsupported_colour_count",
            Error::MissingSimplex(_) => "missing_simplex",
            Error::MismatchedColourCount(..) => "mismatched_colour_count",
            Error::DimensionTooHigh(_) => "dimension_too_high",
            Error::InvalidColourMap(_) => "invalid_colour_map",
            Error::MissingCube(_) => "missing_cube",
            Error::NotSmartlyPaired(_) => "not_smartly_paired",
            Error::NotPure => "not_pure",
            Error::InvalidChain(_) => "invalid_chain",
            Error::DimensionMismatch(_) => "dimension_mismatch",
            Error::MissingOrigin => "missing_origin",
            Error::NotTwoSided { .. } => "not_two_sided",
            Error::InvalidPocset(_) => "invalid_pocset",
            Error::NotFlag(_) => "not_flag",
            Error::NotColourPreserving(_) => "not_colour_preserving",
            Error::NotSimplicial(_) => "not_simplicial",
            Error::MalformedCubeComplex(_) => "malformed_cube_complex",
            Error::NonSimplicialLink(_) => "non_simplicial_link",
            Error::InvalidParameter(_) => "invalid_parameter",
            Error::Internal(_) => "internal",
        }
    }
}
