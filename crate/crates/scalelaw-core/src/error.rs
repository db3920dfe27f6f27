//! Error type shared by all operations in this crate.

use alloc::string::String;

use crate::laws::Frame;

/// Convenience alias used throughout the crate.
pub type Result<T> = core::result::Result<T, Error>;

/// Everything that can go wrong when evaluating the model.
///
/// `ModelViolation` and `InsufficientData` describe measured data the
/// two-part model cannot explain; the other variants describe misuse of the
/// API itself.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// An argument was outside its documented domain (non-positive processor
    /// count, fraction outside `[0, 1]`, empty grid, ...).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A serial fraction was supplied in the wrong reference frame.
    #[error("frame mismatch: expected fraction in {expected} frame, found {found} frame")]
    FrameMismatch {
        /// Frame the operation requires.
        expected: Frame,
        /// Frame the fraction actually carries.
        found: Frame,
    },

    /// Measured data cannot be produced by the two-part model
    /// (superlinear speedup, slowdown with more processors).
    #[error("model violation: {0}")]
    ModelViolation(String),

    /// Not enough observations to determine the model parameters.
    #[error("insufficient data: {0}")]
    InsufficientData(String),

    /// An internal invariant that validated inputs make unreachable.
    #[error("internal invariant violated: {0}")]
    InternalInvariant(&'static str),
}
