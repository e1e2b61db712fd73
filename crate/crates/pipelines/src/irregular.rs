//! Counting irregular pairs in a hypothetical `(8,6)_5` code of size 65.
//!
//! A column of such a code splits its 65 words among 5 symbols, each at most
//! 15 times. [`f_eval`] bounds the number of irregular pairs from below in
//! terms of the numbers `x, y` of symbols occurring 15 and 14 times in one
//! column; `h(k)` bounds from above the irregular pairs inside a `k`-block.

use serde::Serialize;

use qary_core::bounds::h_table;
use qary_core::CodeParams;

pub const CODE_SIZE: u32 = 65;
pub const SYMBOLS: u32 = 5;
pub const MAX_BLOCK: usize = 15;

fn binom2(x: i64) -> i64 {
    x * (x - 1) / 2
}

/// `f(x,y) = (3x+y)(65-15x-14y) + 45 C(x,2) + 14 C(y,2) + 42xy - 42x - 8y
/// + [y > 0, x = 0](65 - 14 - 39)`.
pub fn f_eval(x: u32, y: u32) -> i64 {
    let (x, y) = (i64::from(x), i64::from(y));
    let indicator = if y > 0 && x == 0 { 65 - 14 - 39 } else { 0 };
    (3 * x + y) * (65 - 15 * x - 14 * y) + 3 * 15 * binom2(x) + 14 * binom2(y) + 3 * 14 * x * y
        - 2 * 21 * x
        - 8 * y
        + indicator
}

/// `a_k` = number of symbols occurring exactly `k` times in a column,
/// for `k = 1..=15`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Profile([u8; MAX_BLOCK + 1]);

impl Profile {
    pub fn get(&self, k: usize) -> u32 {
        u32::from(self.0[k])
    }

    pub fn x(&self) -> u32 {
        self.get(15)
    }

    pub fn y(&self) -> u32 {
        self.get(14)
    }

    pub fn f(&self) -> i64 {
        f_eval(self.x(), self.y())
    }

    pub fn from_counts(column_counts: &[usize]) -> Option<Self> {
        let mut a = [0u8; MAX_BLOCK + 1];
        for &c in column_counts {
            if c == 0 || c > MAX_BLOCK {
                return None;
            }
            a[c] += 1;
        }
        Some(Self(a))
    }

    /// `sum_k a_k h(k)`, scaled by `weight`.
    pub fn weighted_h(&self, h: &[i64], weight: i64) -> i64 {
        (1..=MAX_BLOCK)
            .map(|k| weight * i64::from(self.get(k)) * h[k])
            .sum()
    }

    pub fn is_balanced(&self) -> bool {
        self.get(13) == SYMBOLS
    }
}

impl Serialize for Profile {
    /// Nonzero entries as `{k: a_k}`.
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let nz: Vec<usize> = (1..=MAX_BLOCK).filter(|&k| self.0[k] > 0).collect();
        let mut m = s.serialize_map(Some(nz.len()))?;
        for k in nz.into_iter().rev() {
            m.serialize_entry(&k.to_string(), &self.0[k])?;
        }
        m.end()
    }
}

/// All `a` with `sum a_k k = 65`, `sum a_k = 5`, `k` in `1..=15`, in
/// lexicographic order of the sorted multiset of block sizes (largest first).
pub fn profile_tuples() -> Vec<Profile> {
    fn rec(max: usize, left: u32, parts: u32, cur: &mut Vec<usize>, out: &mut Vec<Profile>) {
        if parts == 0 {
            if left == 0 {
                out.push(Profile::from_counts(cur).expect("sizes in range"));
            }
            return;
        }
        for k in (1..=max.min(left as usize)).rev() {
            cur.push(k);
            rec(k, left - k as u32, parts - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(MAX_BLOCK, CODE_SIZE, SYMBOLS, &mut Vec::new(), &mut out);
    out
}

/// `h(k)` for `(7,6)_5` codes, indexed by `k = 0..=15`.
pub fn kirkman_h() -> Vec<i64> {
    let p = CodeParams::new(5, 7, 6).expect("valid parameters");
    (0..=MAX_BLOCK as u64)
        .map(|k| h_table(&p, k) as i64)
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InequalityReport {
    pub tuples: usize,
    pub pairs: usize,
    /// Pairs with `f(a_15, a_14) <= f(b_15, b_14) != 0`.
    pub applicable: usize,
    /// Least `f(b) - sum_k (7 a_k + b_k) h(k)` over applicable pairs.
    pub min_slack: Option<i64>,
    pub min_slack_pair: Option<(Profile, Profile)>,
    pub violations: Vec<(Profile, Profile)>,
}

impl InequalityReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `sum_k (7 a_k + b_k) h(k) < f(b_15, b_14)` for every ordered pair
/// of profiles with `f(a_15, a_14) <= f(b_15, b_14) != 0`.
pub fn verify_inequality_17() -> InequalityReport {
    let tuples = profile_tuples();
    let h = kirkman_h();
    let mut applicable = 0;
    let mut min_slack: Option<(i64, Profile, Profile)> = None;
    let mut violations = Vec::new();
    for a in &tuples {
        for b in &tuples {
            let fb = b.f();
            if fb == 0 || a.f() > fb {
                continue;
            }
            applicable += 1;
            let slack = fb - a.weighted_h(&h, 7) - b.weighted_h(&h, 1);
            if slack <= 0 {
                violations.push((*a, *b));
            }
            if min_slack.is_none_or(|(s, _, _)| slack < s) {
                min_slack = Some((slack, *a, *b));
            }
        }
    }
    InequalityReport {
        tuples: tuples.len(),
        pairs: tuples.len() * tuples.len(),
        applicable,
        min_slack: min_slack.map(|m| m.0),
        min_slack_pair: min_slack.map(|m| (m.1, m.2)),
        violations,
    }
}

/// The column argument applied to the profiles of all 8 columns: with
/// `j*` maximizing `f`, `U = sum_j sum_k a_k^(j) h(k)` against `f(j*)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IrregularPairAudit {
    pub x: u32,
    pub y: u32,
    /// Lower bound on the number of irregular pairs.
    pub f_value: i64,
    /// Upper bound on the number of irregular pairs.
    pub u: i64,
    pub profiles: Vec<Profile>,
}

impl IrregularPairAudit {
    pub fn from_profiles(profiles: &[Profile]) -> Option<Self> {
        let h = kirkman_h();
        let best = profiles.iter().max_by_key(|p| p.f())?;
        Some(Self {
            x: best.x(),
            y: best.y(),
            f_value: best.f(),
            u: profiles.iter().map(|p| p.weighted_h(&h, 1)).sum(),
            profiles: profiles.to_vec(),
        })
    }

    /// `U < f <= |X| <= U` is impossible.
    pub fn contradictory(&self) -> bool {
        self.f_value > 0 && self.u < self.f_value
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f_values() {
        assert_eq!(f_eval(0, 0), 0);
        assert_eq!(f_eval(1, 0), 108);
        assert_eq!(f_eval(0, 1), 55);
    }

    #[test]
    fn thirty_profiles() {
        let t = profile_tuples();
        assert_eq!(t.len(), 30);
        assert!(t.iter().any(Profile::is_balanced));
        for p in &t {
            assert_eq!((1..=15).map(|k| p.get(k)).sum::<u32>(), 5);
            assert_eq!((1..=15).map(|k| p.get(k) * k as u32).sum::<u32>(), 65);
        }
        // no symbol can occur fewer than 65 - 4*15 times
        assert!(t.iter().all(|p| (1..5).all(|k| p.get(k) == 0)));
    }

    #[test]
    fn table_of_h() {
        let h = kirkman_h();
        let want = [10, 8, 7, 7, 8, 10, 6, 3, 1, 0, 0];
        assert_eq!(&h[5..=15], &want);
    }

    #[test]
    fn inequality_holds() {
        let r = verify_inequality_17();
        assert_eq!(r.pairs, 900);
        assert!(r.holds(), "{:?}", r.violations);
        assert!(r.min_slack.unwrap() > 0);
        assert!(r.applicable > 0 && r.applicable < 900);
    }

    #[test]
    fn zero_f_means_balanced() {
        for p in profile_tuples() {
            assert_eq!(p.f() == 0, p.x() == 0 && p.y() == 0);
            if p.f() == 0 {
                assert!(p.is_balanced());
            }
        }
    }

    #[test]
    fn audit_contradiction() {
        let t = profile_tuples();
        let with15 = *t.iter().find(|p| p.x() == 1 && p.y() == 0).unwrap();
        let bal = *t.iter().find(|p| p.is_balanced()).unwrap();
        let mut cols = vec![bal; 8];
        cols[3] = with15;
        let a = IrregularPairAudit::from_profiles(&cols).unwrap();
        assert_eq!((a.x, a.y, a.f_value), (1, 0, 108));
        assert!(a.contradictory());
        let none = IrregularPairAudit::from_profiles(&[bal; 8]).unwrap();
        assert!(!none.contradictory());
    }
}
