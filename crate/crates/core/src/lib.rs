//! Binary neural network toolkit for dense prediction.
//!
//! Weights and activations are constrained to {-1, +1} and packed one bit
//! per element, so convolutions run as XNOR + popcount on machine words.
//! On top of the bit-packed kernels sit a multi-branch gated upsampling
//! block, a compute-once binary attention block, a small tape-based
//! autodiff engine for straight-through training, an encoder-decoder
//! segmentation network, an analytic complexity/speedup calculator, and
//! a deterministic synthetic-data training harness.

pub mod autodiff;
pub mod blocks;
pub mod complexity;
pub mod config;
pub mod data;
pub mod metrics;
pub mod network;
pub mod quantize;
pub mod tensor;
pub mod train;

use thiserror::Error;

/// Errors produced across the toolkit.
#[derive(Debug, Error)]
pub enum Error {
    /// Tensor dimensions do not conform to the operation's contract.
    #[error("shape error: {0}")]
    Shape(String),
    /// An operation was called outside its contract (non-scalar loss,
    /// binarizer inside a finite-difference check, empty accumulator...).
    #[error("contract error: {0}")]
    Contract(String),
    /// A tape node referenced an input that is not on the tape.
    #[error("graph error: {0}")]
    Graph(String),
    /// Invalid configuration (bad dims, unknown key, unparsable value).
    #[error("config error: {0}")]
    Config(String),
    /// Invalid data (label out of range, missing sample file).
    #[error("data error: {0}")]
    Data(String),
    /// Malformed serialized container (bad magic, version, truncation).
    #[error("format error: {0}")]
    Format(String),
    /// Training produced a non-finite loss.
    #[error("divergence: {0}")]
    Divergence(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
