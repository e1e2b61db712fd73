use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::params::CodeParams;
use crate::word::{distance_unchecked, Word};

/// A set of distinct words of `[q]^n`, stored in lexicographic order.
///
/// The minimum distance `d` is not part of the value: the same set of words
/// is an `(n,d)_q` code for every `d <= d_min`, and the file format carries
/// only `q` and `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Code {
    q: usize,
    n: usize,
    words: Vec<Word>,
}

impl Code {
    /// Builds a code, rejecting out-of-range symbols, wrong lengths and duplicates.
    pub fn new(q: usize, n: usize, words: Vec<Word>) -> Result<Self> {
        if q < 2 || q > usize::from(u8::MAX) {
            return Err(Error::InvalidParams(format!("alphabet size {q}")));
        }
        for w in &words {
            if w.len() != n {
                return Err(Error::LengthMismatch {
                    left: n,
                    right: w.len(),
                });
            }
            Word::new(q, w.symbols().to_vec())?;
        }
        let mut words = words;
        words.sort_unstable();
        if let Some(pair) = words.windows(2).find(|p| p[0] == p[1]) {
            return Err(Error::DuplicateWord(pair[0].to_string()));
        }
        Ok(Self { q, n, words })
    }

    /// Builds a code from raw symbol rows.
    pub fn from_rows<R: AsRef<[u8]>>(q: usize, n: usize, rows: &[R]) -> Result<Self> {
        let words = rows
            .iter()
            .map(|r| Word::from_symbols(r.as_ref().to_vec()))
            .collect();
        Self::new(q, n, words)
    }

    pub fn empty(q: usize, n: usize) -> Self {
        Self {
            q,
            n,
            words: Vec::new(),
        }
    }

    /// Sorted, duplicate-free rows; caller guarantees lengths and ranges.
    pub(crate) fn from_sorted_unchecked(q: usize, n: usize, words: Vec<Word>) -> Self {
        debug_assert!(words.windows(2).all(|p| p[0] < p[1]));
        Self { q, n, words }
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.words.binary_search(w).is_ok()
    }

    /// Row-major symbol matrix.
    pub fn to_matrix(&self) -> Vec<u8> {
        self.words
            .iter()
            .flat_map(|w| w.symbols().iter().copied())
            .collect()
    }

    /// Smallest distance between two distinct words.
    pub fn min_distance(&self) -> Result<usize> {
        if self.words.len() < 2 {
            return Err(Error::UndefinedDistance(self.words.len()));
        }
        let mut best = usize::MAX;
        for (i, u) in self.words.iter().enumerate() {
            for v in &self.words[i + 1..] {
                best = best.min(distance_unchecked(u.symbols(), v.symbols()));
            }
        }
        Ok(best)
    }

    /// True when every pair of distinct words is at distance at least `d`.
    /// Codes with fewer than two words are trivially valid.
    pub fn has_min_distance(&self, d: usize) -> bool {
        self.words.len() < 2 || self.min_distance().is_ok_and(|m| m >= d)
    }

    /// Checks `(q, n)` against `p` and the minimum distance against `p.d`.
    pub fn is_code_for(&self, p: &CodeParams) -> bool {
        self.q == p.q && self.n == p.n && self.has_min_distance(p.d)
    }

    /// Distances of all unordered pairs, in row order.
    pub fn pair_distances(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(move |(i, u)| {
            self.words[i + 1..]
                .iter()
                .map(move |v| distance_unchecked(u.symbols(), v.symbols()))
        })
    }

    /// `counts[k]` = number of unordered pairs at distance `k`.
    pub fn distance_distribution(&self) -> Vec<usize> {
        let mut counts = vec![0; self.n + 1];
        for dist in self.pair_distances() {
            counts[dist] += 1;
        }
        counts
    }

    pub fn is_equidistant(&self) -> bool {
        let mut it = self.pair_distances();
        match it.next() {
            None => true,
            Some(first) => it.all(|x| x == first),
        }
    }

    pub fn column_profile(&self) -> ColumnProfile {
        ColumnProfile::of(self)
    }

    /// All words holding `symbol` in column `column`.
    pub fn extract_block(&self, column: usize, symbol: u8) -> Result<Block> {
        if column >= self.n {
            return Err(Error::InvalidParams(format!(
                "column {column} out of range for n = {}",
                self.n
            )));
        }
        if usize::from(symbol) >= self.q {
            return Err(Error::SymbolOutOfRange {
                symbol: symbol.into(),
                q: self.q,
            });
        }
        let rows = self
            .words
            .iter()
            .filter(|w| w.symbols()[column] == symbol)
            .cloned()
            .collect();
        Ok(Block {
            q: self.q,
            n: self.n,
            column,
            symbol,
            rows,
        })
    }

    /// The code with word `index` (in storage order) removed.
    pub fn without_word(&self, index: usize) -> Code {
        let mut words = self.words.clone();
        words.remove(index);
        Code::from_sorted_unchecked(self.q, self.n, words)
    }

    /// The code with `w` added. Fails on a duplicate or a malformed word.
    pub fn with_word(&self, w: Word) -> Result<Code> {
        let mut words = self.words.clone();
        words.push(w);
        Code::new(self.q, self.n, words)
    }
}

/// Per-column symbol counts `c_{alpha,j}` and their histograms `a_k^{(j)}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColumnProfile {
    /// `counts[alpha][j]`
    pub counts: Vec<Vec<usize>>,
    /// `histogram[j][k]`: number of symbols occurring exactly `k` times in column `j`, `k = 0..=M`.
    pub histogram: Vec<Vec<usize>>,
    pub size: usize,
}

impl ColumnProfile {
    fn of(code: &Code) -> Self {
        let (q, n, m) = (code.q, code.n, code.len());
        let mut counts = vec![vec![0usize; n]; q];
        for w in &code.words {
            for (j, &s) in w.symbols().iter().enumerate() {
                counts[usize::from(s)][j] += 1;
            }
        }
        let histogram = (0..n)
            .map(|j| {
                let mut h = vec![0usize; m + 1];
                for row in &counts {
                    h[row[j]] += 1;
                }
                h
            })
            .collect();
        Self {
            counts,
            histogram,
            size: m,
        }
    }

    pub fn count(&self, symbol: usize, column: usize) -> usize {
        self.counts[symbol][column]
    }

    pub fn column(&self, j: usize) -> Vec<usize> {
        self.counts.iter().map(|row| row[j]).collect()
    }

    /// Largest count in any column.
    pub fn max_count(&self) -> usize {
        self.counts
            .iter()
            .flat_map(|r| r.iter().copied())
            .max()
            .unwrap_or(0)
    }

    /// Column histograms as a multiset, independent of column order.
    pub fn histogram_multiset(&self) -> Vec<Vec<usize>> {
        let mut h = self.histogram.clone();
        h.sort();
        h
    }

    /// Every column has `q - r` symbols occurring `m` times and `r` occurring `m - 1`
    /// times, with `m = ceil(M/q)` and `r = qm - M`.
    pub fn is_balanced(&self) -> bool {
        let q = self.counts.len();
        if q == 0 {
            return true;
        }
        let m = self.size.div_ceil(q);
        self.counts
            .iter()
            .flat_map(|r| r.iter())
            .all(|&c| c == m || c + 1 == m)
    }
}

/// The rows of a code sharing one symbol in one column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    q: usize,
    n: usize,
    pub column: usize,
    pub symbol: u8,
    pub rows: Vec<Word>,
}

impl Block {
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// The rows with the block column deleted, as a code of length `n - 1`.
    pub fn projected(&self) -> Code {
        let words: BTreeSet<Word> = self
            .rows
            .iter()
            .map(|w| w.without_column(self.column))
            .collect();
        Code::from_sorted_unchecked(self.q, self.n - 1, words.into_iter().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::figure2_code;

    #[test]
    fn figure2_min_distance() {
        let c = figure2_code();
        assert_eq!(c.len(), 9);
        assert_eq!(c.min_distance().unwrap(), 2);
        let two = Code::from_rows(3, 3, &[[0u8, 0, 0], [1, 1, 1]]).unwrap();
        assert_eq!(two.min_distance().unwrap(), 3);
    }

    #[test]
    fn min_distance_needs_two_words() {
        let one = Code::from_rows(3, 3, &[[0u8, 0, 0]]).unwrap();
        assert_eq!(one.min_distance(), Err(Error::UndefinedDistance(1)));
        assert_eq!(
            Code::empty(2, 2).min_distance(),
            Err(Error::UndefinedDistance(0))
        );
    }

    #[test]
    fn figure2_profile_is_flat() {
        let p = figure2_code().column_profile();
        assert!(p.counts.iter().flatten().all(|&c| c == 3));
        assert!(p.is_balanced());
        for j in 0..3 {
            assert_eq!(p.histogram[j][3], 3);
        }
    }

    #[test]
    fn single_word_profile() {
        let c = Code::from_rows(3, 3, &[[2u8, 0, 1]]).unwrap();
        let p = c.column_profile();
        assert_eq!(p.column(0), vec![0, 0, 1]);
        assert_eq!(p.column(1), vec![1, 0, 0]);
        assert_eq!(p.column(2), vec![0, 1, 0]);
        assert_eq!(p.histogram[0], vec![2, 1]);
    }

    #[test]
    fn figure2_block() {
        let c = figure2_code();
        let b = c.extract_block(0, 0).unwrap();
        let expected: Vec<Word> = [[0u8, 0, 0], [0, 1, 2], [0, 2, 1]]
            .iter()
            .map(|r| Word::from_symbols(r.to_vec()))
            .collect();
        assert_eq!(b.rows, expected);
        let proj = b.projected();
        assert_eq!(proj.n(), 2);
        assert_eq!(proj.len(), 3);
        assert!(proj.pair_distances().all(|x| x == 2));
    }

    #[test]
    fn empty_block() {
        let b = Code::empty(3, 3).extract_block(1, 2).unwrap();
        assert!(b.is_empty());
        assert!(Code::empty(3, 3).extract_block(3, 0).is_err());
        assert!(Code::empty(3, 3).extract_block(0, 3).is_err());
    }

    #[test]
    fn constructor_errors() {
        assert!(matches!(
            Code::from_rows(3, 2, &[[0u8, 1], [0, 1]]),
            Err(Error::DuplicateWord(_))
        ));
        assert!(matches!(
            Code::from_rows(3, 2, &[vec![0u8, 1], vec![0]]),
            Err(Error::LengthMismatch { .. })
        ));
        assert!(matches!(
            Code::from_rows(3, 2, &[[0u8, 3]]),
            Err(Error::SymbolOutOfRange { .. })
        ));
    }
}
