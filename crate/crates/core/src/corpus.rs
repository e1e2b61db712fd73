//! Small reference codes used across the workspace.

use crate::code::Code;

/// The `(3,2)_3` code of size 9 whose words, grouped in threes, are the
/// rows of the `(1,3)` symmetric net incidence matrix. Rows are given in the
/// grouping order `w1..w9`; the returned code is stored sorted.
pub const FIGURE2_ROWS: [[u8; 3]; 9] = [
    [0, 0, 0],
    [1, 1, 1],
    [2, 2, 2],
    [0, 2, 1],
    [1, 0, 2],
    [2, 1, 0],
    [0, 1, 2],
    [1, 2, 0],
    [2, 0, 1],
];

pub fn figure2_code() -> Code {
    Code::from_rows(3, 3, &FIGURE2_ROWS).expect("figure 2 rows are a valid code")
}
