use std::fmt;

use num::BigInt;

/// Crate-wide error type.
///
/// Every variant is a user-facing condition: bad input data, a weight
/// outside the domain of an operation, or an internal consistency check
/// that exposes both sides of a failed identity.
#[derive(Debug)]
pub enum Error {
    /// Not a valid simple type / rank combination.
    InvalidType { label: String, rank: i64 },
    /// Positive-root index out of bounds.
    RootIndex { index: usize, count: usize },
    /// Weight must have every shifted coordinate >= 1.
    NotDominantRegular { coords: Vec<i64> },
    /// Weight lies on a reflecting hyperplane at level p.
    PSingular { coords: Vec<i64>, p: i64 },
    /// Weight is not in the open lowest alcove at level p.
    OutsideLowestAlcove { coords: Vec<i64>, p: i64 },
    /// The level must be an odd prime (and for some operations >= h).
    BadLevel { p: i64, reason: &'static str },
    /// No weight satisfies the region predicate (needs p >= h).
    EmptyRegion { p: i64, coxeter_number: i64 },
    /// A formula evaluation did not divide exactly; carries the rational value.
    InexactDivision { numerator: BigInt, denominator: BigInt },
    /// Two sides of a verified identity disagree.
    PatternMismatch { lhs: Vec<BigInt>, rhs: Vec<BigInt> },
    /// Requested word length exceeds the configured bound.
    LengthBound { requested: usize, max: usize },
    /// Elements from different Coxeter presentations were mixed.
    MixedPresentations { left: String, right: String },
    /// Operation only implemented up to the stated rank.
    RankUnsupported { what: &'static str, rank: usize, max: usize },
    /// A word contained an unknown generator name.
    BadGenerator { word: String, presentation: String },
    /// Malformed cache file.
    CacheFormat { message: String },
    /// Cache file belongs to a different presentation.
    CacheId { expected: String, found: String },
    Io(std::io::Error),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidType { label, rank } => {
                write!(f, "invalid root system type {label}{rank}")
            }
            Error::RootIndex { index, count } => {
                write!(f, "positive-root index {index} out of range (have {count})")
            }
            Error::NotDominantRegular { coords } => {
                write!(
                    f,
                    "weight {:?} is not dominant regular (needs every shifted coordinate >= 1)",
                    coords
                )
            }
            Error::PSingular { coords, p } => {
                write!(f, "weight {:?} lies on a wall at level p={p}", coords)
            }
            Error::OutsideLowestAlcove { coords, p } => {
                write!(
                    f,
                    "weight {:?} is outside the open lowest alcove at level p={p}",
                    coords
                )
            }
            Error::BadLevel { p, reason } => write!(f, "bad level p={p}: {reason}"),
            Error::EmptyRegion { p, coxeter_number } => {
                write!(
                    f,
                    "no weight in the open lowest alcove at p={p} (requires p >= h = {coxeter_number})"
                )
            }
            Error::InexactDivision { numerator, denominator } => {
                write!(f, "inexact division: value is {numerator}/{denominator}")
            }
            Error::PatternMismatch { lhs, rhs } => {
                write!(f, "pattern verification failed: {:?} != {:?}", lhs, rhs)
            }
            Error::LengthBound { requested, max } => {
                write!(f, "length {requested} exceeds configured bound {max}")
            }
            Error::MixedPresentations { left, right } => {
                write!(f, "elements from different presentations: {left} vs {right}")
            }
            Error::RankUnsupported { what, rank, max } => {
                write!(f, "{what} supports rank <= {max}, got rank {rank}")
            }
            Error::BadGenerator { word, presentation } => {
                write!(f, "word {word:?} has a generator not in presentation {presentation}")
            }
            Error::CacheFormat { message } => write!(f, "malformed cache file: {message}"),
            Error::CacheId { expected, found } => {
                write!(f, "cache is for presentation {found}, expected {expected}")
            }
            Error::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl std::error::Error for Error {}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e)
    }
}

pub type Result<T> = std::result::Result<T, Error>;
