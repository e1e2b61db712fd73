//! Generalized Hadamard matrices and their expansion into symmetric nets.

use crate::error::{NetError, Result};
use crate::group::Group;
use crate::net::SymmetricNet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralizedHadamard {
    pub group: Group,
    /// `n x n` group-element indices.
    pub entries: Vec<Vec<usize>>,
}

impl GeneralizedHadamard {
    pub fn new(group: Group, entries: Vec<Vec<usize>>) -> Result<Self> {
        let n = entries.len();
        if n == 0 || entries.iter().any(|r| r.len() != n) {
            return Err(NetError::Malformed(
                "GH matrix must be square and nonempty".into(),
            ));
        }
        if entries.iter().flatten().any(|&g| g >= group.order()) {
            return Err(NetError::Malformed("entry is not a group element".into()));
        }
        if n % group.order() != 0 {
            return Err(NetError::Malformed(format!(
                "|G| = {} does not divide n = {n}",
                group.order()
            )));
        }
        Ok(Self { group, entries })
    }

    pub fn order(&self) -> usize {
        self.entries.len()
    }
}

/// For every two rows `i != k`, `(M_ij M_kj^-1)_j` contains each group
/// element `n/|G|` times.
pub fn verify_gh(m: &GeneralizedHadamard) -> bool {
    let (n, g) = (m.order(), &m.group);
    let want = n / g.order();
    for i in 0..n {
        for k in 0..i {
            let mut counts = vec![0; g.order()];
            for j in 0..n {
                counts[g.mul(m.entries[i][j], g.inv(m.entries[k][j]))] += 1;
            }
            if counts.iter().any(|&c| c != want) {
                return false;
            }
        }
    }
    true
}

/// Replaces each entry `g` by the permutation matrix `P(g)[x][x*g] = 1` of
/// the right regular representation, giving a symmetric `(n/|G|, |G|)`-net.
pub fn gh_expand(m: &GeneralizedHadamard) -> Result<SymmetricNet> {
    if !verify_gh(m) {
        return Err(NetError::NotGeneralizedHadamard);
    }
    let (n, g) = (m.order(), &m.group);
    let k = g.order();
    let v = n * k;
    let mut inc = vec![0u8; v * v];
    for i in 0..n {
        for j in 0..n {
            for x in 0..k {
                let y = g.mul(x, m.entries[i][j]);
                inc[(i * k + x) * v + j * k + y] = 1;
            }
        }
    }
    let mut net = SymmetricNet::new(n / k, k, inc)?;
    net.point_classes = Some((0..n).map(|i| (i * k..(i + 1) * k).collect()).collect());
    net.block_classes = net.point_classes.clone();
    Ok(net)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::figure1_gh;
    use crate::net::{gram_check, verify_net_axioms};

    #[test]
    fn figure1_is_gh() {
        let m = figure1_gh();
        assert!(verify_gh(&m));
        let net = gh_expand(&m).unwrap();
        assert_eq!(net.order(), 32);
        assert_eq!((net.mu, net.q), (2, 4));
        assert!(verify_net_axioms(&net).all_hold());
        assert!(gram_check(&net).unwrap());
    }

    #[test]
    fn small_cases() {
        let c2 = Group::cyclic(2).unwrap();
        let good = GeneralizedHadamard::new(c2.clone(), vec![vec![0, 0], vec![0, 1]]).unwrap();
        assert!(verify_gh(&good));
        let bad = GeneralizedHadamard::new(c2, vec![vec![0, 0], vec![0, 0]]).unwrap();
        assert!(!verify_gh(&bad));
        assert_eq!(gh_expand(&bad), Err(NetError::NotGeneralizedHadamard));
        let net = gh_expand(&good).unwrap();
        assert!(verify_net_axioms(&net).all_hold());
    }

    #[test]
    fn addition_table_of_c3_is_not_gh() {
        let c3 = Group::cyclic(3).unwrap();
        let add = c3.table().to_vec();
        assert!(!verify_gh(&GeneralizedHadamard::new(c3, add).unwrap()));
    }

    #[test]
    fn shape_errors() {
        let c2 = Group::cyclic(2).unwrap();
        assert!(GeneralizedHadamard::new(c2.clone(), vec![vec![0]]).is_err());
        assert!(GeneralizedHadamard::new(c2, vec![vec![0, 2], vec![0, 1]]).is_err());
    }
}
