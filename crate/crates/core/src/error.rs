use core::fmt;

/// Errors reported by the oracle, the search simulator and the containers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A string index or symbol position fell outside the table.
    IndexOutOfRange {
        what: &'static str,
        got: usize,
        limit: usize,
    },
    /// Input lines (or generated rows) do not all share the same length.
    RaggedLengths {
        line: usize,
        expected: usize,
        got: usize,
    },
    /// A cell value is not a valid code point of the declared alphabet.
    SymbolOutOfAlphabet { symbol: u32, alphabet: u32 },
    /// A table, sequence or parameter that must be non-empty was empty.
    EmptyInput(&'static str),
    /// A configuration value violates its documented constraint.
    InvalidConfig(&'static str),
    /// Marked-element count exceeds the search-space size.
    MarkedExceedsSpace { marked: usize, space: usize },
    /// The statevector backend was asked for a space above its cap.
    StatevectorTooLarge { space: usize, limit: usize },
    /// `get_min_and_delete` on an empty heap.
    EmptyHeap,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::IndexOutOfRange { what, got, limit } => {
                write!(f, "{what} {got} out of range 1..={limit}")
            }
            Error::RaggedLengths {
                line,
                expected,
                got,
            } => write!(
                f,
                "string {line} has length {got}, expected {expected} like the first string"
            ),
            Error::SymbolOutOfAlphabet { symbol, alphabet } => {
                write!(f, "symbol {symbol} outside alphabet of size {alphabet}")
            }
            Error::EmptyInput(what) => write!(f, "{what} must be non-empty"),
            Error::InvalidConfig(why) => write!(f, "invalid configuration: {why}"),
            Error::MarkedExceedsSpace { marked, space } => {
                write!(f, "{marked} marked elements in a space of {space}")
            }
            Error::StatevectorTooLarge { space, limit } => {
                write!(
                    f,
                    "statevector backend limited to {limit} amplitudes, got {space}"
                )
            }
            Error::EmptyHeap => write!(f, "get_min_and_delete on an empty heap"),
        }
    }
}

impl core::error::Error for Error {}
