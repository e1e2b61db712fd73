//! Matrices used as test data and by the certificate pipelines.

use crate::group::Group;
use crate::hadamard::GeneralizedHadamard;
use crate::net::SymmetricNet;

/// GH(8, V4) with `e, a, b, c` as `0, 1, 2, 3`; expands to the symmetric
/// (2,4)-net.
pub const FIGURE1_ROWS: [[usize; 8]; 8] = [
    [0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 1, 2, 2, 3, 3],
    [0, 2, 0, 2, 3, 1, 3, 1],
    [0, 3, 3, 0, 1, 2, 2, 1],
    [0, 1, 2, 3, 0, 1, 2, 3],
    [0, 3, 2, 1, 3, 0, 1, 2],
    [0, 2, 1, 3, 1, 3, 0, 2],
    [0, 1, 3, 2, 2, 3, 1, 0],
];

pub fn figure1_gh() -> GeneralizedHadamard {
    GeneralizedHadamard::new(
        Group::klein4(),
        FIGURE1_ROWS.iter().map(|r| r.to_vec()).collect(),
    )
    .expect("Figure 1 matrix is well formed")
}

/// Multiplication table of the field of order 3 over its additive group.
pub fn gh3_c3() -> GeneralizedHadamard {
    GeneralizedHadamard::new(
        Group::cyclic(3).expect("cyclic group"),
        vec![vec![0, 0, 0], vec![0, 1, 2], vec![0, 2, 1]],
    )
    .expect("well formed")
}

/// `[[e, e], [e, a]]` over the group of order 2.
pub fn gh2_c2() -> GeneralizedHadamard {
    GeneralizedHadamard::new(
        Group::cyclic(2).expect("cyclic group"),
        vec![vec![0, 0], vec![0, 1]],
    )
    .expect("well formed")
}

/// Incidence matrix of the symmetric (1,3)-net printed next to the
/// (3,2)_3 code, rows `w1..w9`.
pub fn figure2_incidence() -> Vec<Vec<u8>> {
    [
        "100100100",
        "010010010",
        "001001001",
        "100001010",
        "010100001",
        "001010100",
        "100010001",
        "010001100",
        "001100010",
    ]
    .iter()
    .map(|r| r.bytes().map(|b| b - b'0').collect())
    .collect()
}

/// Points `1..4`, blocks `{1,3}, {2,4}, {1,4}, {2,3}`.
pub fn example_5_3_net() -> SymmetricNet {
    let blocks: [[usize; 2]; 4] = [[1, 3], [2, 4], [1, 4], [2, 3]];
    let mut inc = vec![0u8; 16];
    for (b, pts) in blocks.iter().enumerate() {
        for &p in pts {
            inc[(p - 1) * 4 + b] = 1;
        }
    }
    SymmetricNet::new(1, 2, inc).expect("4x4 incidence")
}
