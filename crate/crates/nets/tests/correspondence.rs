use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

use qary_core::{apply_equivalence, canonical_form, Code, EquivalenceMap};
use qary_nets::corpus::{example_5_3_net, figure1_gh, figure2_incidence, gh2_c2, gh3_c3};
use qary_nets::{
    code_to_net, gh_expand, gram_check, net_to_code, nets_isomorphic, partition_words,
    verify_net_axioms, SymmetricNet,
};

fn random_map(rng: &mut StdRng, q: usize, n: usize) -> EquivalenceMap {
    let mut cols: Vec<usize> = (0..n).collect();
    cols.shuffle(rng);
    let perms = (0..n)
        .map(|_| {
            let mut p: Vec<u8> = (0..q as u8).collect();
            p.shuffle(rng);
            p
        })
        .collect();
    EquivalenceMap::new(cols, perms).unwrap()
}

fn code_8_6_4() -> Code {
    net_to_code(&gh_expand(&figure1_gh()).unwrap()).unwrap()
}

#[test]
fn figure1_code() {
    let c = code_8_6_4();
    assert_eq!((c.q(), c.n(), c.len()), (4, 8, 32));
    assert_eq!(c.min_distance().unwrap(), 6);
    let part = partition_words(&c).unwrap();
    assert_eq!(part.classes.len(), 8);
    assert!(part.classes.iter().all(|cl| cl.len() == 4));
}

#[test]
fn expansions_are_nets() {
    for gh in [gh2_c2(), gh3_c3(), figure1_gh()] {
        let net = gh_expand(&gh).unwrap();
        let r = verify_net_axioms(&net);
        assert!(r.all_hold() && r.s_prime && r.s_prime_agrees);
        assert!(gram_check(&net).unwrap());
    }
}

#[test]
fn small_expansions_match_known_nets() {
    let n2 = gh_expand(&gh2_c2()).unwrap();
    assert!(nets_isomorphic(&n2, &example_5_3_net()).unwrap());
    let n3 = gh_expand(&gh3_c3()).unwrap();
    let fig2 = SymmetricNet::from_rows(1, 3, &figure2_incidence()).unwrap();
    assert!(nets_isomorphic(&n3, &fig2).unwrap());
    assert!(!nets_isomorphic(&n2, &fig2).unwrap());
}

#[test]
fn round_trips() {
    let c = code_8_6_4();
    let net = code_to_net(&c).unwrap();
    assert!(verify_net_axioms(&net).all_hold());
    assert!(gram_check(&net).unwrap());
    let back = net_to_code(&net).unwrap();
    assert_eq!(canonical_form(&back).unwrap(), canonical_form(&c).unwrap());

    let expanded = gh_expand(&figure1_gh()).unwrap();
    let again = code_to_net(&net_to_code(&expanded).unwrap()).unwrap();
    assert!(nets_isomorphic(&expanded, &again).unwrap());

    let fig2 = SymmetricNet::from_rows(1, 3, &figure2_incidence()).unwrap();
    let again = code_to_net(&net_to_code(&fig2).unwrap()).unwrap();
    assert!(nets_isomorphic(&fig2, &again).unwrap());
}

#[test]
fn equivalent_codes_give_isomorphic_nets() {
    let mut rng = StdRng::seed_from_u64(7);
    let c = code_8_6_4();
    let base = code_to_net(&c).unwrap();
    for _ in 0..5 {
        let e = random_map(&mut rng, 4, 8);
        let image = apply_equivalence(&c, &e).unwrap();
        assert!(nets_isomorphic(&base, &code_to_net(&image).unwrap()).unwrap());
    }
}
