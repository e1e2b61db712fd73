//! Symmetric nets, generalized Hadamard matrices, and their codes.
//!
//! A symmetric `(mu,q)`-net corresponds to a `(mu q, mu q - mu)_q` code of
//! size `mu q^2`: [`code_to_net`] and [`net_to_code`] convert between the two,
//! and [`gh_expand`] builds nets from generalized Hadamard matrices.

pub mod codenet;
pub mod corpus;
pub mod error;
pub mod group;
pub mod hadamard;
pub mod io;
pub mod net;

pub use codenet::{
    code_to_net, incidence_canonical_form, net_params, net_to_code, nets_isomorphic,
    partition_words, WordPartition,
};
pub use error::{NetError, Result};
pub use group::Group;
pub use hadamard::{gh_expand, verify_gh, GeneralizedHadamard};
pub use io::{emit_gh, emit_net, parse_gh, parse_net};
pub use net::{
    find_arrangement, gram_check, verify_net_axioms, Arrangement, NetAxiomReport, SymmetricNet,
};
