use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("malformed CSV: {0}")]
    Csv(#[from] csv::Error),

    #[error("empty input: {0}")]
    Empty(&'static str),

    #[error("row {row}, column {column}: cannot parse {value:?} as a finite number")]
    NonNumeric {
        /// 1-based data row (the header is row 0).
        row: usize,
        column: String,
        value: String,
    },

    #[error("row {row} has {found} cells, expected {expected}")]
    RaggedRow {
        row: usize,
        expected: usize,
        found: usize,
    },

    #[error("duplicate feature name {0:?}")]
    DuplicateFeature(String),

    #[error("class column {0} not found")]
    MissingClassColumn(String),

    #[error("label {0:?} does not occur in the dataset")]
    UnknownLabel(String),

    #[error("no positive examples")]
    EmptyPositives,

    #[error("arity mismatch: expected {expected} components, got {found}")]
    Arity { expected: usize, found: usize },

    #[error("eqmod must be at least 1")]
    InvalidEqmod,

    #[error("invalid interval [{lower}, {upper}]")]
    InvalidInterval { lower: f64, upper: f64 },

    #[error("feature {feature}: value {value} lies outside the modality range")]
    OutOfRange { feature: usize, value: f64 },

    #[error("pattern covers no positive example")]
    EmptyExtent,

    #[error("invalid threshold {0:?}")]
    InvalidThreshold(String),

    #[error("unknown modality mode {0:?} (expected equiprobable or all-values)")]
    UnknownModalityMode(String),

    #[error("search space of {boxes} boxes exceeds the cap of {cap}")]
    CapExceeded { boxes: u128, cap: u128 },
}

pub type Result<T> = std::result::Result<T, Error>;
