use crate::code::Code;
use crate::error::{Error, Result};
use crate::word::Word;

/// A column permutation followed by a symbol renumbering in every column.
///
/// Column `j` of the input becomes column `column_perm[j]` of the output, and
/// the symbols of output column `t` are renamed by `symbol_perms[t]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EquivalenceMap {
    column_perm: Vec<usize>,
    symbol_perms: Vec<Vec<u8>>,
}

fn is_permutation<T: Copy + Into<usize>>(p: &[T]) -> bool {
    let mut seen = vec![false; p.len()];
    for &x in p {
        let x: usize = x.into();
        if x >= p.len() || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}

impl EquivalenceMap {
    pub fn new(column_perm: Vec<usize>, symbol_perms: Vec<Vec<u8>>) -> Result<Self> {
        if !is_permutation(&column_perm) {
            return Err(Error::NotAPermutation(format!("columns {column_perm:?}")));
        }
        if symbol_perms.len() != column_perm.len() {
            return Err(Error::NotAPermutation(format!(
                "{} symbol permutations for {} columns",
                symbol_perms.len(),
                column_perm.len()
            )));
        }
        let q = symbol_perms.first().map_or(0, Vec::len);
        for p in &symbol_perms {
            if p.len() != q || !is_permutation(p) {
                return Err(Error::NotAPermutation(format!("symbols {p:?}")));
            }
        }
        Ok(Self {
            column_perm,
            symbol_perms,
        })
    }

    pub fn identity(q: usize, n: usize) -> Self {
        Self {
            column_perm: (0..n).collect(),
            symbol_perms: vec![(0..q as u8).collect(); n],
        }
    }

    pub fn n(&self) -> usize {
        self.column_perm.len()
    }

    pub fn q(&self) -> usize {
        self.symbol_perms.first().map_or(0, Vec::len)
    }

    pub fn column_perm(&self) -> &[usize] {
        &self.column_perm
    }

    pub fn symbol_perms(&self) -> &[Vec<u8>] {
        &self.symbol_perms
    }

    pub fn apply_word(&self, w: &Word) -> Word {
        let mut out = vec![0u8; w.len()];
        for (j, &s) in w.symbols().iter().enumerate() {
            let t = self.column_perm[j];
            out[t] = self.symbol_perms[t][usize::from(s)];
        }
        Word::from_symbols(out)
    }

    /// `self` applied after `first`.
    pub fn compose(&self, first: &EquivalenceMap) -> Result<EquivalenceMap> {
        if self.n() != first.n() || self.q() != first.q() {
            return Err(Error::DimensionMismatch {
                q: first.q(),
                n: first.n(),
            });
        }
        let n = self.n();
        let mut column_perm = vec![0; n];
        let mut symbol_perms = vec![Vec::new(); n];
        for j in 0..n {
            let mid = first.column_perm[j];
            let t = self.column_perm[mid];
            column_perm[j] = t;
            symbol_perms[t] = first.symbol_perms[mid]
                .iter()
                .map(|&s| self.symbol_perms[t][usize::from(s)])
                .collect();
        }
        Ok(EquivalenceMap {
            column_perm,
            symbol_perms,
        })
    }

    pub fn inverse(&self) -> EquivalenceMap {
        let n = self.n();
        let q = self.q();
        let mut column_perm = vec![0; n];
        let mut symbol_perms = vec![vec![0u8; q]; n];
        for (j, &t) in self.column_perm.iter().enumerate() {
            column_perm[t] = j;
            for (s, &img) in self.symbol_perms[t].iter().enumerate() {
                symbol_perms[j][usize::from(img)] = s as u8;
            }
        }
        EquivalenceMap {
            column_perm,
            symbol_perms,
        }
    }
}

/// Image of `code` under `e`; size, distance multiset and `d_min` are preserved.
pub fn apply_equivalence(code: &Code, e: &EquivalenceMap) -> Result<Code> {
    if e.n() != code.n() || e.q() != code.q() {
        return Err(Error::DimensionMismatch {
            q: code.q(),
            n: code.n(),
        });
    }
    let words = code.words().iter().map(|w| e.apply_word(w)).collect();
    Code::new(code.q(), code.n(), words)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::figure2_code;

    #[test]
    fn identity_fixes_code() {
        let c = figure2_code();
        let e = EquivalenceMap::identity(3, 3);
        assert_eq!(apply_equivalence(&c, &e).unwrap(), c);
    }

    #[test]
    fn column_swap_keeps_min_distance() {
        let c = figure2_code();
        let e = EquivalenceMap::new(vec![1, 0, 2], vec![vec![0, 1, 2]; 3]).unwrap();
        let img = apply_equivalence(&c, &e).unwrap();
        assert_eq!(img.min_distance().unwrap(), 2);
    }

    #[test]
    fn inverse_and_compose() {
        let e = EquivalenceMap::new(
            vec![2, 0, 1],
            vec![vec![1, 2, 0], vec![0, 2, 1], vec![2, 1, 0]],
        )
        .unwrap();
        let id = EquivalenceMap::identity(3, 3);
        assert_eq!(e.compose(&e.inverse()).unwrap(), id);
        assert_eq!(e.inverse().compose(&e).unwrap(), id);
        let w = Word::from_symbols(vec![0, 1, 2]);
        let ee = e.compose(&e).unwrap();
        assert_eq!(ee.apply_word(&w), e.apply_word(&e.apply_word(&w)));
    }

    #[test]
    fn rejects_bad_maps() {
        assert!(EquivalenceMap::new(vec![0, 0], vec![vec![0, 1]; 2]).is_err());
        assert!(EquivalenceMap::new(vec![0, 1], vec![vec![0, 0]; 2]).is_err());
        assert!(EquivalenceMap::new(vec![0, 1], vec![vec![0, 1]]).is_err());
        let e = EquivalenceMap::identity(2, 3);
        assert!(apply_equivalence(&figure2_code(), &e).is_err());
    }
}
