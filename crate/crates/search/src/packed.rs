//! Words packed four bits per symbol into a `u64`.

use qary_core::{Code, Word};

use crate::error::{Result, SearchError};

pub const MAX_LEN: usize = 16;
/// Largest word space scanned in full.
pub const MAX_SPACE: u64 = 1 << 24;

const LOW_NIBBLES: u64 = 0x1111_1111_1111_1111;

#[inline]
pub fn pack(symbols: &[u8]) -> u64 {
    symbols
        .iter()
        .enumerate()
        .fold(0u64, |acc, (j, &s)| acc | (u64::from(s) << (4 * j)))
}

#[inline]
pub fn unpack(w: u64, n: usize, out: &mut [u8]) {
    for (j, o) in out.iter_mut().enumerate().take(n) {
        *o = ((w >> (4 * j)) & 0xF) as u8;
    }
}

/// Number of nonzero nibbles of `a ^ b`.
#[inline]
pub fn distance(a: u64, b: u64) -> u32 {
    let x = a ^ b;
    ((x | x >> 1 | x >> 2 | x >> 3) & LOW_NIBBLES).count_ones()
}

#[inline]
pub fn symbol_at(w: u64, j: usize) -> usize {
    ((w >> (4 * j)) & 0xF) as usize
}

/// All of `[q]^n` in lexicographic order.
pub struct WordSpace {
    pub q: usize,
    pub n: usize,
    pub words: Vec<u64>,
}

impl WordSpace {
    pub fn new(q: usize, n: usize) -> Result<Self> {
        check_packable(q, n)?;
        let size = (q as u64)
            .checked_pow(n as u32)
            .filter(|&s| s <= MAX_SPACE)
            .ok_or_else(|| SearchError::TooLarge(format!("{q}^{n} words exceed the scan limit")))?;
        let mut words = Vec::with_capacity(size as usize);
        let mut sym = vec![0u8; n];
        for _ in 0..size {
            words.push(pack(&sym));
            // increment, last column fastest
            for j in (0..n).rev() {
                sym[j] += 1;
                if usize::from(sym[j]) < q {
                    break;
                }
                sym[j] = 0;
            }
        }
        Ok(Self { q, n, words })
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn word(&self, idx: usize) -> Word {
        let mut s = vec![0u8; self.n];
        unpack(self.words[idx], self.n, &mut s);
        Word::from_symbols(s)
    }
}

pub fn check_packable(q: usize, n: usize) -> Result<()> {
    if n == 0 || n > MAX_LEN || q > 16 {
        return Err(SearchError::TooLarge(format!(
            "q = {q}, n = {n}; packed words need q <= 16 and 1 <= n <= {MAX_LEN}"
        )));
    }
    Ok(())
}

pub fn pack_code(code: &Code) -> Result<Vec<u64>> {
    check_packable(code.q(), code.n())?;
    Ok(code.words().iter().map(|w| pack(w.symbols())).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn space_is_lexicographic() {
        let s = WordSpace::new(3, 2).unwrap();
        let words: Vec<Vec<u8>> = (0..s.len()).map(|i| s.word(i).into_symbols()).collect();
        let mut sorted = words.clone();
        sorted.sort();
        assert_eq!(words, sorted);
        assert_eq!(words[0], vec![0, 0]);
        assert_eq!(words[1], vec![0, 1]);
        assert_eq!(s.len(), 9);
    }

    #[test]
    fn limits() {
        assert!(WordSpace::new(5, 17).is_err());
        assert!(WordSpace::new(17, 2).is_err());
        assert!(WordSpace::new(5, 11).is_err());
    }

    proptest! {
        #[test]
        fn packed_distance_matches_symbolwise(
            a in proptest::collection::vec(0u8..16, 16),
            b in proptest::collection::vec(0u8..16, 16),
        ) {
            let naive = a.iter().zip(&b).filter(|(x, y)| x != y).count() as u32;
            prop_assert_eq!(distance(pack(&a), pack(&b)), naive);
            let mut out = vec![0u8; 16];
            unpack(pack(&a), 16, &mut out);
            prop_assert_eq!(out, a);
        }
    }
}
