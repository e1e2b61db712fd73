//! `A_5(8,6) <= 65`.

use serde_json::json;

use qary_core::bounds::KnownValuesRegistry;
use qary_core::{Code, CodeParams};
use qary_search::{alpha_stats, codes_by_deletion, enumerate_codes, EnumerationTask, SearchError};

use crate::certificate::{Certificate, PipelineOptions};
use crate::irregular::{kirkman_h, profile_tuples, verify_inequality_17};

pub const THEOREM_ID: &str = "a5_8_6";

/// Bounds on the candidate words around a `(7,6)_5` code `D`, for
/// `|D| = 15` and `|D| = 14`.
pub const ALPHA1_MAX_15: usize = 21;
pub const ALPHA0_MAX_14: usize = 8;
pub const ALPHA_LE1_MAX_14: usize = 39;
/// `h(k)` for `k = 15, 14, ..., 5` as printed in the paper.
pub const PRINTED_H: [i64; 11] = [0, 0, 1, 3, 6, 10, 8, 7, 7, 8, 10];

fn kirkman() -> CodeParams {
    CodeParams::new(5, 7, 6).expect("valid parameters")
}

fn enumerate(
    cert: &mut Certificate,
    opts: &PipelineOptions,
    size: usize,
    id: &str,
) -> Option<Vec<Code>> {
    let mut task = EnumerationTask::all_classes(kirkman(), size);
    task.limits = opts.limits;
    match enumerate_codes(&task) {
        Ok(r) => {
            let data = json!({
                "size": size,
                "classes": r.classes.len(),
                "nodes": r.nodes,
                "canonical_nodes_per_level": r.nodes_per_level,
                "equidistance_pruning": r.equidistance_pruning,
            });
            cert.step(
                id,
                &format!("all (7,6)_5 codes of size {size} up to equivalence"),
                "enumerate_codes",
                data,
                true,
            );
            Some(r.classes)
        }
        Err(e) => {
            let data = match &e {
                SearchError::BudgetExhausted { nodes, partial } => {
                    json!({"error": e.to_string(), "nodes": nodes, "partial": partial.len()})
                }
                _ => json!({"error": e.to_string()}),
            };
            cert.inapplicable(
                id,
                &format!("all (7,6)_5 codes of size {size} up to equivalence"),
                "enumerate_codes",
                data,
            );
            None
        }
    }
}

pub fn verify_a5_8_6(opts: &PipelineOptions) -> Certificate {
    let mut cert = Certificate::new(THEOREM_ID, opts);
    let registry = KnownValuesRegistry::builtin();
    if let Some(k) = registry.lookup(5, 7, 6) {
        cert.input("A_5(7,6)", k.value, k.provenance);
    }
    cert.input(
        "kirkman_classes",
        7,
        "Kirkman triple systems of order 15: 7 nonisomorphic solutions",
    );
    cert.input(
        "alpha_limits",
        json!({"15": {"alpha=0": 0, "alpha=1": ALPHA1_MAX_15, "alpha=2": 0},
               "14": {"alpha=0": ALPHA0_MAX_14, "alpha<=1": ALPHA_LE1_MAX_14}}),
        "candidate-word counts used by the lower bound f(x,y)",
    );
    cert.input("h_printed", PRINTED_H, "table of h(k), k = 15..5");

    // 1
    let Some(c15) = enumerate(&mut cert, opts, 15, "1") else {
        return cert;
    };
    if c15.len() != 7 {
        cert.step(
            "1a",
            "class count matches the number of Kirkman systems",
            "compare",
            json!({"found": c15.len(), "expected": 7}),
            false,
        );
    }

    // 2
    let Some(c14) = enumerate(&mut cert, opts, 14, "2a") else {
        return cert;
    };
    let by_deletion = match codes_by_deletion(&c15) {
        Ok(d) => d,
        Err(e) => {
            cert.inapplicable(
                "2b",
                "size-14 classes by deleting one word",
                "codes_by_deletion",
                json!({"error": e.to_string()}),
            );
            return cert;
        }
    };
    cert.step(
        "2b",
        "size-14 classes obtained by deleting one word agree with direct enumeration",
        "codes_by_deletion",
        json!({"by_deletion": by_deletion.len(), "direct": c14.len(), "at_most": 7 * 15}),
        by_deletion == c14 && by_deletion.len() <= 7 * 15,
    );

    // 3
    let mut rows15 = Vec::new();
    let mut ok15 = true;
    for (i, c) in c15.iter().enumerate() {
        let s = alpha_stats(c, 6).expect("q^n within scan limit");
        let (a0, a1, a2) = (s.count(0), s.count(1), s.count(2));
        ok15 &= a0 == 0 && a1 <= ALPHA1_MAX_15 && a2 == 0;
        rows15.push(json!({"class": i, "S": s.candidates.len(), "alpha=0": a0, "alpha=1": a1, "alpha=2": a2}));
    }
    cert.step(
        "3a",
        "candidate words around every size-15 code: none with alpha 0 or 2, at most 21 with alpha 1",
        "alpha_stats",
        json!(rows15),
        ok15,
    );
    let mut rows14 = Vec::new();
    let mut ok14 = true;
    let (mut max0, mut max01) = (0, 0);
    for (i, c) in c14.iter().enumerate() {
        let s = alpha_stats(c, 6).expect("q^n within scan limit");
        let (a0, a01) = (s.count(0), s.count_at_most(1));
        max0 = max0.max(a0);
        max01 = max01.max(a01);
        ok14 &= a0 <= ALPHA0_MAX_14 && a01 <= ALPHA_LE1_MAX_14;
        rows14.push(json!({"class": i, "S": s.candidates.len(), "alpha=0": a0, "alpha<=1": a01}));
    }
    cert.step(
        "3b",
        "candidate words around every size-14 code: at most 8 with alpha 0, at most 39 with alpha <= 1",
        "alpha_stats",
        json!({"classes": rows14, "max_alpha0": max0, "max_alpha_le1": max01}),
        ok14,
    );

    // 4
    let h = kirkman_h();
    let computed: Vec<i64> = (5..=15).rev().map(|k| h[k]).collect();
    cert.step(
        "4",
        "h(k) = max(0, L - R) for (7,6)_5 codes of size k = 15..5",
        "h_table",
        json!({"computed": computed, "printed": PRINTED_H}),
        computed == PRINTED_H,
    );

    // 5
    let ineq = verify_inequality_17();
    cert.step(
        "5",
        "sum_k (7 a_k + b_k) h(k) < f(b_15, b_14) whenever f(a_15, a_14) <= f(b_15, b_14) != 0",
        "verify_inequality_17",
        serde_json::to_value(&ineq).expect("serializable"),
        ineq.holds() && ineq.tuples == 30 && ineq.pairs == 900,
    );

    // 6
    let tuples = profile_tuples();
    let zero_f: Vec<_> = tuples.iter().filter(|p| p.f() == 0).collect();
    let forced = zero_f
        .iter()
        .all(|p| p.x() == 0 && p.y() == 0 && p.is_balanced());
    cert.step(
        "6",
        "a column with a 15- or 14-block has f > 0 and yields U < f <= |X| <= U; the only profile with f = 0 has five 13-blocks",
        "profile_tuples",
        json!({"profiles_with_f_zero": zero_f, "profiles": tuples.len()}),
        forced && zero_f.len() == 1,
    );

    cert.conclude(65);
    cert
}
