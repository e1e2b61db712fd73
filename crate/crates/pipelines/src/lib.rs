//! Machine-checked reproductions of upper bounds on `A_q(n,d)`.
//!
//! Each `verify_*` function recomputes every quantity its argument depends
//! on and returns a [`Certificate`] listing inputs, steps and a verdict.

pub mod a3_16_11;
pub mod a4_9_6;
pub mod a5_8_6;
pub mod certificate;
pub mod family;
pub mod irregular;

pub use a3_16_11::verify_a3_16_11;
pub use a4_9_6::verify_a4_9_6;
pub use a5_8_6::verify_a5_8_6;
pub use certificate::{Certificate, Input, PipelineOptions, Step, Verdict};
pub use family::verify_divisibility_family;
pub use irregular::{
    f_eval, profile_tuples, verify_inequality_17, InequalityReport, IrregularPairAudit, Profile,
};

pub const THEOREM_IDS: [&str; 4] = [
    a5_8_6::THEOREM_ID,
    a3_16_11::THEOREM_ID,
    a4_9_6::THEOREM_ID,
    family::THEOREM_ID,
];

/// Runs the pipeline named `theorem_id`.
pub fn verify(theorem_id: &str, opts: &PipelineOptions) -> Option<Certificate> {
    match theorem_id {
        a5_8_6::THEOREM_ID => Some(verify_a5_8_6(opts)),
        a3_16_11::THEOREM_ID => Some(verify_a3_16_11(opts)),
        a4_9_6::THEOREM_ID => Some(verify_a4_9_6(opts)),
        family::THEOREM_ID => Some(verify_divisibility_family(opts, &[])),
        _ => None,
    }
}
