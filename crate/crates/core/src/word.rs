use std::fmt;

use crate::error::{Error, Result};

/// A word of `[q]^n`, symbols stored 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<u8>);

impl Word {
    /// Builds a word, checking every symbol is below `q`.
    pub fn new(q: usize, symbols: Vec<u8>) -> Result<Self> {
        if let Some(&s) = symbols.iter().find(|&&s| usize::from(s) >= q) {
            return Err(Error::SymbolOutOfRange {
                symbol: s.into(),
                q,
            });
        }
        Ok(Self(symbols))
    }

    pub fn from_symbols(symbols: impl Into<Vec<u8>>) -> Self {
        Self(symbols.into())
    }

    /// The constant word `s s ... s`.
    pub fn constant(n: usize, s: u8) -> Self {
        Self(vec![s; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn symbols(&self) -> &[u8] {
        &self.0
    }

    pub fn into_symbols(self) -> Vec<u8> {
        self.0
    }

    /// Number of positions holding `symbol`.
    pub fn count(&self, symbol: u8) -> usize {
        self.0.iter().filter(|&&s| s == symbol).count()
    }

    /// The word with column `j` removed.
    pub fn without_column(&self, j: usize) -> Word {
        let mut s = self.0.clone();
        s.remove(j);
        Word(s)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

fn check_lengths(u: &Word, v: &Word) -> Result<()> {
    if u.len() != v.len() {
        return Err(Error::LengthMismatch {
            left: u.len(),
            right: v.len(),
        });
    }
    Ok(())
}

/// Number of positions where `u` and `v` differ.
pub fn hamming_distance(u: &Word, v: &Word) -> Result<usize> {
    check_lengths(u, v)?;
    Ok(distance_unchecked(u.symbols(), v.symbols()))
}

/// `n - d_H(u, v)`: the number of positions where `u` and `v` agree.
pub fn agreement(u: &Word, v: &Word) -> Result<usize> {
    check_lengths(u, v)?;
    Ok(u.len() - distance_unchecked(u.symbols(), v.symbols()))
}

#[inline]
pub(crate) fn distance_unchecked(u: &[u8], v: &[u8]) -> usize {
    u.iter().zip(v).filter(|(a, b)| a != b).count()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &[u8]) -> Word {
        Word::from_symbols(s.to_vec())
    }

    #[test]
    fn distance_examples() {
        // 111 / 222 / 132 in the 1-based alphabet
        assert_eq!(hamming_distance(&w(&[0, 0, 0]), &w(&[0, 0, 0])).unwrap(), 0);
        assert_eq!(hamming_distance(&w(&[0, 0, 0]), &w(&[1, 1, 1])).unwrap(), 3);
        assert_eq!(hamming_distance(&w(&[0, 0, 0]), &w(&[0, 2, 1])).unwrap(), 2);
    }

    #[test]
    fn agreement_examples() {
        assert_eq!(agreement(&w(&[0, 0, 0]), &w(&[0, 0, 0])).unwrap(), 3);
        assert_eq!(agreement(&w(&[0, 0, 0]), &w(&[1, 1, 1])).unwrap(), 0);
    }

    #[test]
    fn length_mismatch_is_an_error() {
        let err = hamming_distance(&w(&[0, 1]), &w(&[0, 1, 2])).unwrap_err();
        assert_eq!(err, Error::LengthMismatch { left: 2, right: 3 });
        assert!(agreement(&w(&[0]), &w(&[])).is_err());
    }

    #[test]
    fn symbol_range_checked() {
        assert!(Word::new(3, vec![0, 1, 2]).is_ok());
        assert!(Word::new(3, vec![0, 3, 2]).is_err());
    }
}
