use std::fmt;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("alphabet size {0} is outside the supported range 2..=256")]
    InvalidAlphabet(u32),
    #[error("information length must be at least 1")]
    EmptyInformation,
    #[error("balancing value {numerator}/2 is not an integer for q = {q}, n = {n}")]
    NonIntegralBalance { q: u16, n: usize, numerator: u64 },
    #[error("parameters too large: {0}")]
    Overflow(&'static str),
    #[error("symbol {symbol} at position {position} is not below q = {q}")]
    SymbolOutOfRange {
        symbol: u32,
        position: usize,
        q: u16,
    },
    #[error("expected length {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("alphabet mismatch: q = {left} versus q = {right}")]
    AlphabetMismatch { left: u16, right: u16 },
    #[error("index {index} out of range 0..{bound}")]
    IndexOutOfRange { index: u64, bound: u64 },
    #[error("enumeration of {size} items exceeds the guard of {limit}")]
    SizeGuardExceeded { size: u64, limit: u64 },
    #[error("no prefix window of length {len} fits in {available} Gray words")]
    SubsetNotFound { len: u64, available: u64 },
    #[error("no balancing index yields a balanced codeword")]
    EncodingFailure,
    #[error("prefix rank {rank} is outside the subset [{z1}, {z2}]")]
    PrefixOutOfSubset { rank: u64, z1: u64, z2: u64 },
    #[error("codeword weight {weight} differs from the balancing value {expected}")]
    NotBalanced { weight: u64, expected: u64 },
    #[error("cannot parse word {text:?}: {reason}")]
    Parse { text: String, reason: String },
    #[error("unknown scheme {0:?}")]
    UnknownScheme(String),
    #[error("{scheme} is not defined for q = {q}, r = {r}")]
    UnsupportedRange {
        scheme: &'static str,
        q: u16,
        r: u32,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

/// Coarse classification used by front ends to pick an exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    /// Bad or unsupported code parameters.
    Parameter,
    /// Malformed, corrupted or undecodable data.
    Data,
    /// An internal invariant did not hold.
    Internal,
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        use Error::*;
        match self {
            InvalidAlphabet(_)
            | EmptyInformation
            | NonIntegralBalance { .. }
            | Overflow(_)
            | SizeGuardExceeded { .. }
            | UnknownScheme(_)
            | UnsupportedRange { .. } => ErrorClass::Parameter,
            SymbolOutOfRange { .. }
            | LengthMismatch { .. }
            | AlphabetMismatch { .. }
            | IndexOutOfRange { .. }
            | PrefixOutOfSubset { .. }
            | NotBalanced { .. }
            | Parse { .. } => ErrorClass::Data,
            SubsetNotFound { .. } | EncodingFailure => ErrorClass::Internal,
        }
    }
}

impl fmt::Display for ErrorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ErrorClass::Parameter => "parameter error",
            ErrorClass::Data => "data error",
            ErrorClass::Internal => "internal error",
        })
    }
}
