use thiserror::Error;

use crate::path::PathClass;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid step character {0:?}, expected 'U' or 'D'")]
    InvalidStep(char),
    #[error("path {path} is not a {class}")]
    NotInClass { path: String, class: PathClass },
    #[error("rank {rank} out of range for {class} paths of length {length} (count {count})")]
    RankOutOfRange {
        class: PathClass,
        length: usize,
        rank: String,
        count: String,
    },
    #[error("path never returns to the x-axis after position {0}")]
    NoReturn(usize),
    #[error("path {0} is not a Dyck path")]
    NotADyckPath(String),
    #[error("index {index} is not a peak of {path}")]
    NotAPeak { path: String, index: usize },
    #[error("peak at index {index} of {path} has non-positive height {height}")]
    NonPositivePeak {
        path: String,
        index: usize,
        height: i64,
    },
    #[error("bit string must be empty or end with 1")]
    MalformedBits,
    #[error("composition parts must be positive")]
    ZeroPart,
    #[error("colored composition is invalid: {0}")]
    InvalidColoredComposition(String),
    #[error("compositions have different sizes {0} and {1}")]
    SizeMismatch(usize, usize),
    #[error("composition of size 0 has no walk image")]
    EmptyComposition,
    #[error("walk has odd length {0}")]
    OddLength(usize),
    #[error("bridge {0} does not start with a down step")]
    NotStartingDown(String),
    #[error("path {0} is not a bridge")]
    NotABridge(String),
    #[error("label {label} outside 1..={height}")]
    LabelOutOfRange { label: u32, height: i64 },
    #[error("peak at index {index} of {path} is not a strict left-to-right maximum")]
    NotAStrictMaximum { path: String, index: usize },
    #[error(
        "class size mismatch at length {length}, height {height}: {marked} marked bridges vs {colored} two-colored bridges"
    )]
    ClassSizeMismatch {
        length: usize,
        height: usize,
        marked: usize,
        colored: usize,
    },
    #[error("object does not belong to class {0}")]
    WrongObjectClass(String),
    #[error("unknown class {0:?}")]
    UnknownClass(String),
    #[error("class {0} has no size-{1} member")]
    InvalidSize(String, usize),
    #[error("class {0:?} does not support uniform sampling")]
    UnsupportedClass(String),
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error("unknown sequence {0:?}")]
    UnknownSequence(String),
    #[error("embedded table for {id} holds {available} terms, {requested} requested")]
    TableTooShort {
        id: String,
        available: usize,
        requested: usize,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
