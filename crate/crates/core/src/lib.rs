//! Bijections between integer compositions and lattice-path classes that are
//! all counted by `4^(n-1)`, with their statistics, exhaustive verification
//! and uniform sampling.
//!
//! Counting code is generic over [`counting::Counter`]; the aliases below fix
//! the arbitrary-precision choice used by the rest of the crate.

pub mod bijections;
pub mod classes;
pub mod composition;
pub mod counting;
pub mod decompose;
pub mod enumerate;
pub mod error;
pub mod path;
pub mod sample;
pub mod verification;

pub use classes::{NamedClass, Object};
pub use error::{Error, Result};
pub use path::{Path, PathClass, Peak, Step};

/// Exact nonnegative count or rank.
pub type Count = num_bigint::BigUint;

/// Completion table with arbitrary-precision entries.
pub type CountTable = enumerate::CompletionTable<Count>;

/// Completion table with machine-word entries; exact while counts fit in
/// `u64` (every class up to length 62).
pub type FastCountTable = enumerate::CompletionTable<u64>;
