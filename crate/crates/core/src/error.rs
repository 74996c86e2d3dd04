//! Error type shared by all modules of the crate.

use thiserror::Error;

/// Errors surfaced by the exact-algebra and family-construction operations.
///
/// Everything here is recoverable; no operation panics on bad user input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument list had the wrong length for the requested index.
    #[error("length mismatch: expected {expected} entries, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    /// Inputs were individually well-formed but mutually inconsistent.
    #[error("inconsistent input: {0}")]
    InconsistentInput(String),

    /// A matrix argument was not square, or an index was out of range.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The Gram determinant vanished, so the orthogonal family is not
    /// defined at this (n, s, alpha). Callers may skip the point and
    /// continue; the verification report lists every such point.
    #[error("singular Gram matrix at n = {n}, s = {s}, alpha = {alpha}")]
    SingularGram { n: usize, s: u32, alpha: i8 },

    /// A serialized polynomial or rational could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
}
