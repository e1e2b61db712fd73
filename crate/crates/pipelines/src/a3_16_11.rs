//! `A_3(16,11) <= 29`.
//!
//! Suppose a `(16,11)_3` code of size 30 exists and, after renumbering,
//! contains the all-ones word. Each symbol fills at most `A_3(15,11) = 10`
//! places per column, hence exactly 10, so the code holds `16 * 10` ones.
//! Blocks of size 10 are equidistant `(15,11)_3` codes, so every distance
//! is 11 or 16 and every other word has 0 or 5 ones. That makes the count
//! `16 + 5t`, which is not divisible by 5.

use serde_json::json;

use qary_core::bounds::{equidistance_forced, pair_count_bounds, KnownValuesRegistry};
use qary_core::CodeParams;

use crate::certificate::{Certificate, PipelineOptions};

pub const THEOREM_ID: &str = "a3_16_11";

pub fn verify_a3_16_11(opts: &PipelineOptions) -> Certificate {
    verify_with_registry(opts, &KnownValuesRegistry::builtin())
}

pub fn verify_with_registry(opts: &PipelineOptions, registry: &KnownValuesRegistry) -> Certificate {
    let mut cert = Certificate::new(THEOREM_ID, opts);
    let (q, n, d) = (3usize, 16usize, 11usize);
    let size = 30u64;

    // 1
    let Some(inner) = registry.lookup(q, n - 1, d) else {
        cert.inapplicable(
            "1",
            "A_3(15,11) from the registry of known values",
            "registry_lookup",
            json!({"q": q, "n": n - 1, "d": d, "found": null}),
        );
        return cert;
    };
    cert.input("A_3(15,11)", inner.value, inner.provenance);
    let a = inner.value;
    cert.step(
        "1",
        "A_3(15,11) from the registry of known values",
        "registry_lookup",
        json!({"value": a}),
        true,
    );

    // 2
    let p15 = CodeParams::new(q, n - 1, d).expect("valid parameters");
    let pc = pair_count_bounds(&p15, a);
    cert.step(
        "2",
        "L = R for (15,11)_3 codes of that size, so every such code is equidistant",
        "equidistance_forced",
        json!({"L": pc.left, "R": pc.right, "m": pc.m, "r": pc.deficiency}),
        equidistance_forced(&p15, a),
    );

    // 3
    let per_column = size / q as u64;
    let column_full = per_column == a;
    let total_ones = n as u64 * per_column;
    let modulus = (n - d) as u64;
    let other_words = size - 1;
    let per_word: Vec<u64> = [d, n].iter().map(|&dist| (n - dist) as u64).collect();
    let residues_others: Vec<u64> = per_word.iter().map(|c| c % modulus).collect();
    let residue_total_by_columns = total_ones % modulus;
    // the other words only add multiples of n - d
    let residue_total_by_words = n as u64 % modulus;
    let contradiction = column_full
        && residues_others.iter().all(|&r| r == 0)
        && residue_total_by_columns != residue_total_by_words;
    cert.step(
        "3",
        "ones counted by columns and by words disagree modulo n - d in a size-30 code containing the all-ones word",
        "modular_count",
        json!({
            "size": size,
            "other_words": other_words,
            "ones_per_column": per_column,
            "ones_per_column_is_maximal": column_full,
            "total_ones": total_ones,
            "modulus": modulus,
            "ones_in_other_words": per_word,
            "ones_in_all_ones_word": n,
            "total_mod_by_columns": residue_total_by_columns,
            "total_mod_by_words": residue_total_by_words,
        }),
        contradiction,
    );

    cert.conclude(size - 1);
    cert
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::Verdict;

    #[test]
    fn verified() {
        let c = verify_a3_16_11(&PipelineOptions::default());
        assert_eq!(c.verdict, Verdict::Verified);
        assert_eq!(c.bound, Some(29));
        assert_eq!(c.steps[1].data["L"], 180);
        assert_eq!(c.steps[1].data["R"], 180);
        assert_eq!(c.steps[2].data["total_mod_by_columns"], 0);
        assert_eq!(c.steps[2].data["total_mod_by_words"], 1);
    }

    #[test]
    fn registry_miss_is_inapplicable() {
        let c = verify_with_registry(&PipelineOptions::default(), &KnownValuesRegistry::empty());
        assert_eq!(c.verdict, Verdict::Inapplicable);
        assert_eq!(c.bound, None);
        assert_eq!(c.verdict.exit_code(), 2);
    }
}
