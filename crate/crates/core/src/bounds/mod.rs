//! Upper bounds on `A_q(n,d)`.
//!
//! The pair-counting identity behind most of this module: for an `(n,d)_q`
//! code of size `M`,
//!
//! ```text
//! C(M,2)(n-d) >= sum over pairs of agreement(u,v) = sum_j sum_a C(c_{a,j},2)
//!             >= n((q-r)C(m,2) + r C(m-1,2))
//! ```
//!
//! with `m = ceil(M/q)` and `r = qm - M`. Calling the outer terms `L` and `R`,
//! at most `L - R` pairs are at a distance other than `d`.

mod divisibility;
mod registry;

pub use divisibility::{
    corollary_q_plus_3, divisibility_analysis, divisibility_bound, phi_eval, CorollaryQPlus3,
    DivisibilityCertificate, PhiValue,
};
pub use registry::{KnownValue, KnownValuesRegistry, ValueKind};

use crate::code::Code;
use crate::params::CodeParams;

pub(crate) fn binom2(x: i64) -> i64 {
    x * (x - 1) / 2
}

/// Plotkin bound `floor(qd / (qd - n(q-1)))`, applicable only when `qd > (q-1)n`.
pub fn plotkin_bound(p: &CodeParams) -> Option<u64> {
    let qd = (p.q * p.d) as u64;
    let rhs = ((p.q - 1) * p.n) as u64;
    (qd > rhs).then(|| qd / (qd - rhs))
}

/// A symbol occurs at most `A_q(n-1,d)` times per column, so `A_q(n,d) <= q * inner`.
pub fn column_recursion_bound(p: &CodeParams, inner: u64) -> u64 {
    p.q as u64 * inner
}

/// The outer terms of the pair-counting inequality for size `M`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairCountBounds {
    /// `C(M,2)(n-d)`
    pub left: i64,
    /// `n((q-r)C(m,2) + r C(m-1,2))`
    pub right: i64,
    /// `ceil(M/q)`
    pub m: i64,
    /// `qm - M`, in `0..q`
    pub deficiency: i64,
    /// `left - right`: the most pairs that can sit at a distance other than `d`.
    pub budget: i64,
}

pub fn pair_count_bounds(p: &CodeParams, size: u64) -> PairCountBounds {
    let (q, n, d) = (p.q as i64, p.n as i64, p.d as i64);
    let size = size as i64;
    let m = (size + q - 1) / q;
    let r = q * m - size;
    let left = binom2(size) * (n - d);
    let right = n * ((q - r) * binom2(m) + r * binom2(m - 1));
    PairCountBounds {
        left,
        right,
        m,
        deficiency: r,
        budget: left - right,
    }
}

/// True when `L = R` for size `M`: every `(n,d)_q` code of that size is then
/// equidistant with distance `d`, and each column holds `q - r` symbols `m`
/// times and `r` symbols `m - 1` times.
pub fn equidistance_forced(p: &CodeParams, size: u64) -> bool {
    pair_count_bounds(p, size).budget == 0
}

/// `h(k) = max(0, L - R)` for codes of size `k`.
pub fn h_table(p: &CodeParams, k: u64) -> u64 {
    pair_count_bounds(p, k).budget.max(0) as u64
}

/// Pair counts of a concrete code against the budget `L - R`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IrregularAudit {
    /// Pairs at distance other than `d`.
    pub not_d: u64,
    /// Pairs at distance outside `{d, n}` (irregular pairs).
    pub irregular: u64,
    pub budget: i64,
}

impl IrregularAudit {
    pub fn within_budget(&self) -> bool {
        self.not_d as i64 <= self.budget
    }
}

pub fn irregular_budget_audit(code: &Code, p: &CodeParams) -> IrregularAudit {
    let mut not_d = 0;
    let mut irregular = 0;
    for dist in code.pair_distances() {
        if dist != p.d {
            not_d += 1;
            if dist != p.n {
                irregular += 1;
            }
        }
    }
    IrregularAudit {
        not_d,
        irregular,
        budget: pair_count_bounds(p, code.len() as u64).budget,
    }
}

/// The three quantities of the pair-counting chain evaluated on `code`:
/// `(sum of pairwise agreements, sum over columns of C(c_{a,j},2))`.
/// They are always equal.
pub fn agreement_sums(code: &Code) -> (i64, i64) {
    let n = code.n() as i64;
    let pairs: i64 = code.pair_distances().map(|x| n - x as i64).sum();
    let columns: i64 = code
        .column_profile()
        .counts
        .iter()
        .flatten()
        .map(|&c| binom2(c as i64))
        .sum();
    (pairs, columns)
}
