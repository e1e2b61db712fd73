//! `A_4(9,6) <= 120`.
//!
//! Every column block of a `(9,6)_4` code is an `(8,6)_4` code, so at most
//! 32 words. A code of size 121 has a block of 31 or 32 words. Each word
//! outside such a block, with the block column deleted, is at distance at
//! least 5 from every block word, and these projections are distinct. So a
//! scan of the candidate words around every `(8,6)_4` code of size 31 and
//! 32 bounds how many words can sit outside the block.

use serde_json::json;

use qary_core::bounds::KnownValuesRegistry;
use qary_core::{canonical_form, CodeParams};
use qary_nets::corpus::figure1_gh;
use qary_nets::{gh_expand, net_to_code, verify_gh};
use qary_search::{candidate_count, codes_by_deletion, extend_deficient};

use crate::certificate::{Certificate, PipelineOptions};

pub const THEOREM_ID: &str = "a4_9_6";
/// Largest candidate count reported in the paper.
pub const PRINTED_MAX_CANDIDATES: usize = 25;

pub fn verify_a4_9_6(opts: &PipelineOptions) -> Certificate {
    let mut cert = Certificate::new(THEOREM_ID, opts);
    let p = CodeParams::new(4, 8, 6).expect("valid parameters");
    let target = 120usize;
    let registry = KnownValuesRegistry::builtin();
    if let Some(k) = registry.lookup(4, 8, 6) {
        cert.input("A_4(8,6)", k.value, k.provenance);
    }
    cert.input(
        "unique_size_32_code",
        true,
        "the symmetric (2,4)-net is unique up to isomorphism (Al-Kenani), hence so is the (8,6)_4 code of size 32",
    );
    cert.input(
        "printed_max_candidates",
        PRINTED_MAX_CANDIDATES,
        "candidate count around every (8,6)_4 code of size 31",
    );

    // 1
    let gh = figure1_gh();
    let code = match gh_expand(&gh).and_then(|net| net_to_code(&net)) {
        Ok(c) => c,
        Err(e) => {
            cert.step(
                "1",
                "(8,6)_4 code of size 32 from GH(8, V4)",
                "gh_expand",
                json!({"error": e.to_string()}),
                false,
            );
            return cert;
        }
    };
    let dmin = code.min_distance().unwrap_or(0);
    cert.step(
        "1",
        "(8,6)_4 code of size 32 from the generalized Hadamard matrix GH(8, V4)",
        "gh_expand+net_to_code",
        json!({"gh_valid": verify_gh(&gh), "size": code.len(), "min_distance": dmin}),
        verify_gh(&gh) && code.len() == 32 && dmin >= p.d,
    );

    // 2
    let full = canonical_form(&code).expect("within canonical limits");
    let classes31 =
        codes_by_deletion(std::slice::from_ref(&full)).expect("within canonical limits");
    let extends = classes31.iter().all(|c| {
        extend_deficient(c, &p)
            .map(|e| canonical_form(&e).expect("within limits") == full)
            .unwrap_or(false)
    });
    cert.step(
        "2",
        "size-31 classes by deleting one word; each extends back to the size-32 code, so the list is complete",
        "codes_by_deletion+extend_deficient",
        json!({"classes": classes31.len(), "at_most": 32, "all_extend": extends}),
        classes31.len() <= 32 && extends,
    );

    // 3
    let mut counts = Vec::new();
    let c32 = candidate_count(&code, p.d - 1).expect("4^8 within scan limit");
    counts.push(c32);
    for c in &classes31 {
        counts.push(candidate_count(c, p.d - 1).expect("4^8 within scan limit"));
    }
    let max = *counts.iter().max().expect("nonempty");
    let smallest_block = 31;
    let outside_needed = target - 32;
    cert.step(
        "3",
        "words at distance >= 5 from every word of a size-32 or size-31 (8,6)_4 code",
        "candidate_count",
        json!({
            "size_32": c32,
            "size_31": &counts[1..],
            "max": max,
            "printed_max": PRINTED_MAX_CANDIDATES,
            "within_printed": max <= PRINTED_MAX_CANDIDATES,
            "below_block_size": max < smallest_block,
        }),
        max < smallest_block,
    );

    // 4
    cert.step(
        "4",
        "a size-120 code with a 31- or 32-block needs at least 88 words outside it, more than the candidates",
        "compare",
        json!({"outside_needed": outside_needed, "max_candidates": max, "sufficient": max < outside_needed}),
        max < outside_needed,
    );

    cert.conclude(target as u64);
    cert
}
