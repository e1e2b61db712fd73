//! The divisibility bound.
//!
//! Let `m = d / (qd - (n-1)(q-1))` be a positive integer with `(n-d)` not
//! dividing `m(n-1)`. Then every `mq`-block of an `(n,d)_q` code forces an
//! irregular pair with every word outside it, which gives a lower bound
//! `l(s)` on the number of irregular pairs when `s` such blocks share a
//! column. The same count is bounded above by `n(n-1-d)C(r,2)` for a code of
//! size `mq^2 - r`, and `phi(r) = 2(upper - l(q-r+1))`. Whenever
//! `phi(r) < 0`, no code of size `mq^2 - r` exists.

use super::binom2;
use crate::params::CodeParams;

/// `phi(r) = n(n-1-d)(r-1)r - (q-r+1)(mq(q+r-2) - 2r)`.
pub fn phi_eval(q: i64, n: i64, d: i64, m: i64, r: i64) -> i64 {
    n * (n - 1 - d) * (r - 1) * r - (q - r + 1) * (m * q * (q + r - 2) - 2 * r)
}

/// Lower bound on irregular pairs from `s` blocks of size `mq` in one column
/// of a code of size `mq^2 - r`.
pub(crate) fn l_eval(q: i64, m: i64, r: i64, s: i64) -> i64 {
    s * (m * q * (2 * q - s - 1) - 2 * r) / 2
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PhiValue {
    pub r: i64,
    pub phi: i64,
    /// `n(n-1-d)C(r,2)`
    pub upper: i64,
    /// `l(q-r+1)`
    pub lower: i64,
}

/// Full trace of the divisibility test for one parameter triple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisibilityCertificate {
    pub params: CodeParams,
    pub m: i64,
    /// `(n-d)` does not divide `m(n-1)`.
    pub divisibility_ok: bool,
    /// `phi(r)` for `r = 1..q-1`.
    pub phi_values: Vec<PhiValue>,
    /// `(s, l(s))` for `s = 1..=q`, evaluated at `chosen_r` (or `r = q-1` when none).
    pub l_values: Vec<(i64, i64)>,
    /// Largest `r` with `phi(r) < 0`.
    pub chosen_r: Option<i64>,
    /// `mq^2 - r - 1` for the chosen `r`.
    pub bound: Option<u64>,
}

/// Evaluates the divisibility test whenever `m` is a positive integer,
/// whether or not a bound results.
pub fn divisibility_analysis(p: &CodeParams) -> Option<DivisibilityCertificate> {
    let (q, n, d) = (p.q as i64, p.n as i64, p.d as i64);
    let denom = q * d - (n - 1) * (q - 1);
    if denom <= 0 || d % denom != 0 {
        return None;
    }
    let m = d / denom;
    let divisibility_ok = (m * (n - 1)) % (n - d) != 0;
    let phi_values: Vec<PhiValue> = (1..q)
        .map(|r| PhiValue {
            r,
            phi: phi_eval(q, n, d, m, r),
            upper: n * (n - 1 - d) * binom2(r),
            lower: l_eval(q, m, r, q - r + 1),
        })
        .collect();
    let chosen_r = if divisibility_ok {
        phi_values.iter().rev().find(|v| v.phi < 0).map(|v| v.r)
    } else {
        None
    };
    let l_r = chosen_r.unwrap_or(q - 1);
    let l_values = (1..=q).map(|s| (s, l_eval(q, m, l_r, s))).collect();
    let bound = chosen_r.map(|r| (m * q * q - r - 1) as u64);
    Some(DivisibilityCertificate {
        params: *p,
        m,
        divisibility_ok,
        phi_values,
        l_values,
        chosen_r,
        bound,
    })
}

/// The divisibility certificate, present only when it yields a bound.
pub fn divisibility_bound(p: &CodeParams) -> Option<DivisibilityCertificate> {
    divisibility_analysis(p).filter(|c| c.bound.is_some())
}

/// `A_q(q+3, q+1) <= (q-1)q(q+2)/2` for `q = 1 (mod 4)`, `q > 1`, next to
/// what the general divisibility test gives for the same parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CorollaryQPlus3 {
    pub q: u64,
    pub formula: u64,
    pub theorem_bound: Option<u64>,
}

impl CorollaryQPlus3 {
    pub fn consistent(&self) -> bool {
        self.theorem_bound == Some(self.formula)
    }
}

pub fn corollary_q_plus_3(q: u64) -> Option<CorollaryQPlus3> {
    if q <= 1 || q % 4 != 1 {
        return None;
    }
    let formula = (q - 1) * q * (q + 2) / 2;
    let p = CodeParams::new(q as usize, q as usize + 3, q as usize + 1).ok()?;
    let theorem_bound = divisibility_bound(&p).and_then(|c| c.bound);
    Some(CorollaryQPlus3 {
        q,
        formula,
        theorem_bound,
    })
}
