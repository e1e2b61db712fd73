//! Exhaustive search for `(n,d)_q` codes up to equivalence.
//!
//! [`enumerate_codes`] lists one canonical code per equivalence class of a
//! given size. [`codes_by_deletion`] and [`extend_deficient`] move between
//! sizes `M` and `M-1`, and [`alpha_stats`] counts the words that can be
//! appended to a code.

pub mod alpha;
pub mod deletion;
pub mod enumerate;
pub mod error;
pub mod packed;

pub use alpha::{alpha_stats, candidate_count, AlphaStats};
pub use deletion::{codes_by_deletion, extend_deficient};
pub use enumerate::{enumerate_codes, EnumerationMode, EnumerationReport, EnumerationTask, Limits};
pub use error::{Result, SearchError};
