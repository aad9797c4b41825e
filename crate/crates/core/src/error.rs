use std::fmt;

/// The class of lattice paths an operation expects as input.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathClass {
    /// `k` up-steps out of `2k` (ends on `y = 0`).
    Balanced,
    /// `k + 1` up-steps out of `2k` (ends on `y = 2`).
    Raised,
    /// Balanced and never below `y = 0`.
    Dyck,
    /// A Dyck path with at least one step.
    NonEmptyDyck,
}

impl fmt::Display for PathClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            PathClass::Balanced => "a balanced path (k up-steps out of 2k)",
            PathClass::Raised => "a raised path (k+1 up-steps out of 2k)",
            PathClass::Dyck => "a Dyck path without flaws",
            PathClass::NonEmptyDyck => "a non-empty Dyck path without flaws",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// `index` is 1-based.
    #[error("invalid step character {found:?} at position {index}")]
    Parse { index: usize, found: char },

    #[error("line {line}: {source}")]
    AtLine { line: usize, source: Box<Error> },

    #[error("path of length {len} is not {expected}")]
    Domain { expected: PathClass, len: usize },

    #[error("path has the maximum number of flaws, no successor exists")]
    NoSuccessor,

    #[error("path has no flaws, no predecessor exists")]
    NoPredecessor,

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("k = {k} exceeds the enumeration cap of {cap}")]
    CapExceeded { k: usize, cap: usize },

    #[error("value for k = {k} does not fit in 64 bits")]
    Overflow { k: usize },

    #[error("{what} = {value} is out of range ({expected})")]
    OutOfRange {
        what: &'static str,
        value: usize,
        expected: &'static str,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
