//! Words, codes and upper bounds for `q`-ary codes.
//!
//! Symbols are 0-based everywhere. A [`Code`] is a sorted set of distinct
//! [`Word`]s; two codes are equivalent when one is obtained from the other by
//! permuting columns and renumbering the symbols of each column
//! ([`EquivalenceMap`]). [`canonical_form`] picks one representative per
//! class.

pub mod bounds;
pub mod canonical;
pub mod code;
pub mod corpus;
pub mod equivalence;
pub mod error;
pub mod io;
pub mod params;
pub mod word;

pub use canonical::{canonical_form, is_canonical};
pub use code::{Block, Code, ColumnProfile};
pub use equivalence::{apply_equivalence, EquivalenceMap};
pub use error::{Error, ParseError, Result};
pub use io::{emit_code, parse_code};
pub use params::CodeParams;
pub use word::{agreement, hamming_distance, Word};
