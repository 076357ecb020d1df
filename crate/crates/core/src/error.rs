use std::fmt;

/// Errors surfaced by enumeration, bijection, series, and verification
/// routines. Counting and triangle lookups are total and never fail.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A fence tile needs a gap of at least one cell between its posts.
    ZeroGap,
    /// Metatile decomposition is only defined for unit-gap fences.
    UnsupportedGap { gap: usize },
    /// The fence family with posts m cells apart needs m >= 2.
    FamilyTooSmall { m: usize },
    /// Splicing modulo m expects an occupancy tiled by (1, m-1)-fences.
    GapMismatch { gap: usize, m: usize },
    /// A cell list does not describe a complete, consistent tiling.
    MalformedOccupancy(String),
    /// Board lengths in a tuple do not fit the required q/q+1 pattern.
    MalformedTuple(String),
    /// Exhaustive enumeration refused: the instance exceeds the given cap.
    InstanceTooLarge { n: usize, cap: usize },
    /// A series denominator has a zero constant term, so it cannot be
    /// expanded as a power series.
    ZeroConstantDenominator,
    /// The column series of an array must have a zero constant term.
    NonzeroConstantTerm,
    /// Series expansion produced a non-integer coefficient.
    NonIntegerCoefficient { index: usize },
    /// Polynomial or series text could not be parsed.
    InvalidPolynomial(String),
    /// The requested sequence name is not recognised.
    UnknownSequence(String),
    /// No identity is registered under this id.
    UnknownIdentity(String),
    /// An identity range is empty after applying its validity bounds.
    EmptyRange(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroGap => write!(f, "fence gap must be at least 1"),
            Error::UnsupportedGap { gap } => {
                write!(f, "metatile decomposition needs gap 1, got gap {gap}")
            }
            Error::FamilyTooSmall { m } => {
                write!(f, "fence family parameter must be at least 2, got {m}")
            }
            Error::GapMismatch { gap, m } => {
                write!(f, "splice modulo {m} expects fence gap {}, got gap {gap}", m - 1)
            }
            Error::MalformedOccupancy(msg) => write!(f, "malformed occupancy: {msg}"),
            Error::MalformedTuple(msg) => write!(f, "malformed tuple: {msg}"),
            Error::InstanceTooLarge { n, cap } => {
                write!(f, "instance too large: n = {n} exceeds the cap {cap}")
            }
            Error::ZeroConstantDenominator => {
                write!(f, "series denominator has a zero constant term")
            }
            Error::NonzeroConstantTerm => {
                write!(f, "column series must have a zero constant term")
            }
            Error::NonIntegerCoefficient { index } => {
                write!(f, "series coefficient at index {index} is not an integer")
            }
            Error::InvalidPolynomial(msg) => write!(f, "invalid polynomial: {msg}"),
            Error::UnknownSequence(name) => write!(f, "unknown sequence: {name}"),
            Error::UnknownIdentity(id) => write!(f, "unknown identity: {id}"),
            Error::EmptyRange(id) => write!(f, "identity {id} has an empty range"),
        }
    }
}

impl std::error::Error for Error {}
