//! Moving between sizes `M` and `M-1` by deleting or appending one word.

use std::collections::BTreeSet;

use qary_core::bounds::equidistance_forced;
use qary_core::{canonical_form, Code, CodeParams, Word};

use crate::error::{Result, SearchError};

/// All classes obtained by deleting one word from one of `parents`, as
/// sorted canonical forms.
pub fn codes_by_deletion(parents: &[Code]) -> Result<Vec<Code>> {
    let mut out = BTreeSet::new();
    for parent in parents {
        for i in 0..parent.len() {
            out.insert(canonical_form(&parent.without_word(i))?);
        }
    }
    Ok(out.into_iter().collect())
}

/// Appends the word whose `j`-th symbol is the unique symbol occurring one
/// time fewer than the others in column `j`.
///
/// Applies to codes of size `M - 1` where `q` divides `M` and every code of
/// size `M` has balanced columns: symmetric-net parameters (`qd = (q-1)n`,
/// `M = qn`) and any size where the pair-counting bound forces
/// equidistance.
pub fn extend_deficient(code: &Code, params: &CodeParams) -> Result<Code> {
    if code.q() != params.q || code.n() != params.n {
        return Err(SearchError::InvalidCode(params.to_string()));
    }
    if !code.has_min_distance(params.d) {
        return Err(SearchError::InvalidCode(params.to_string()));
    }
    let q = params.q;
    let full = code.len() + 1;
    if full % q != 0 {
        return Err(SearchError::WrongSize {
            expected: full.next_multiple_of(q) - 1,
            found: code.len(),
        });
    }
    let net_regime = params.is_symmetric_net_type() && full == q * params.n;
    if !net_regime && !equidistance_forced(params, full as u64) {
        return Err(SearchError::NotDeficientRegime(format!(
            "size {full} codes with parameters {params} need not have balanced columns"
        )));
    }
    let per_symbol = full / q;
    let profile = code.column_profile();
    let mut word = Vec::with_capacity(params.n);
    for j in 0..params.n {
        let counts = profile.column(j);
        let deficient: Vec<usize> = (0..q).filter(|&s| counts[s] + 1 == per_symbol).collect();
        let rest_full = (0..q).all(|s| counts[s] == per_symbol || deficient.contains(&s));
        match deficient.as_slice() {
            [s] if rest_full => word.push(*s as u8),
            _ => return Err(SearchError::NoUniqueDeficientSymbol { column: j, counts }),
        }
    }
    let extended = code.with_word(Word::from_symbols(word))?;
    if !extended.has_min_distance(params.d) {
        return Err(SearchError::ExtensionInvalid);
    }
    Ok(extended)
}

#[cfg(test)]
mod tests {
    use super::*;
    use qary_core::corpus::figure2_code;

    #[test]
    fn figure2_round_trip() {
        let p = CodeParams::new(3, 3, 2).unwrap();
        let f = figure2_code();
        let target = canonical_form(&f).unwrap();
        for i in 0..f.len() {
            let e = extend_deficient(&f.without_word(i), &p).unwrap();
            assert_eq!(e, f);
            assert_eq!(canonical_form(&e).unwrap(), target);
        }
    }

    #[test]
    fn full_code_is_rejected() {
        let p = CodeParams::new(3, 3, 2).unwrap();
        assert!(matches!(
            extend_deficient(&figure2_code(), &p),
            Err(SearchError::WrongSize {
                expected: 11,
                found: 9
            })
        ));
    }

    #[test]
    fn unbalanced_column_is_rejected() {
        let p = CodeParams::new(3, 3, 2).unwrap();
        // 8 words of distance >= 2 where column 0 is not 3,3,2
        let c = Code::from_rows(
            3,
            3,
            &[
                [0u8, 0, 0],
                [0, 1, 1],
                [0, 2, 2],
                [1, 0, 1],
                [1, 1, 2],
                [1, 2, 0],
                [2, 0, 2],
                [2, 1, 0],
            ],
        )
        .unwrap();
        assert!(extend_deficient(&c, &p).is_ok());
        let bad = Code::from_rows(3, 3, &[[0u8, 0, 0], [0, 1, 1]]).unwrap();
        assert!(extend_deficient(&bad, &p).is_err());
    }

    #[test]
    fn outside_regime() {
        let p = CodeParams::new(2, 4, 2).unwrap();
        let c = Code::from_rows(2, 4, &[[0u8, 0, 0, 0], [1, 1, 0, 0], [1, 0, 1, 0]]).unwrap();
        assert!(matches!(
            extend_deficient(&c, &p),
            Err(SearchError::NotDeficientRegime(_))
        ));
    }

    #[test]
    fn deletion_classes() {
        let f = canonical_form(&figure2_code()).unwrap();
        let d = codes_by_deletion(&[f]).unwrap();
        assert_eq!(d.len(), 1);
        let pair = Code::from_rows(2, 2, &[[0u8, 0], [1, 1]]).unwrap();
        assert_eq!(codes_by_deletion(&[pair]).unwrap().len(), 1);
    }
}
