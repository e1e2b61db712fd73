//! Words at distance at least a threshold from every word of a code.

use std::collections::BTreeMap;

use qary_core::{Code, Word};

use crate::error::Result;
use crate::packed::{distance, pack_code, WordSpace};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphaStats {
    /// `S = {u : d(u,w) >= d-1 for all w in D}`, in lexicographic order.
    pub candidates: Vec<Word>,
    /// `alpha(u) = #{w in D : d(u,w) = d}` over `u` in `S`, as value -> count.
    pub histogram: BTreeMap<usize, usize>,
}

impl AlphaStats {
    pub fn count(&self, alpha: usize) -> usize {
        self.histogram.get(&alpha).copied().unwrap_or(0)
    }

    pub fn count_at_most(&self, alpha: usize) -> usize {
        self.histogram.range(..=alpha).map(|(_, c)| c).sum()
    }
}

/// Full scan of `[q]^n` for the candidate set of `code` with threshold `d-1`.
pub fn alpha_stats(code: &Code, d: usize) -> Result<AlphaStats> {
    let space = WordSpace::new(code.q(), code.n())?;
    let rows = pack_code(code)?;
    let threshold = d.saturating_sub(1) as u32;
    let mut candidates = Vec::new();
    let mut histogram = BTreeMap::new();
    for (idx, &u) in space.words.iter().enumerate() {
        let mut alpha = 0;
        let mut ok = true;
        for &w in &rows {
            let x = distance(u, w);
            if x < threshold {
                ok = false;
                break;
            }
            if x == d as u32 {
                alpha += 1;
            }
        }
        if ok {
            candidates.push(space.word(idx));
            *histogram.entry(alpha).or_insert(0) += 1;
        }
    }
    Ok(AlphaStats {
        candidates,
        histogram,
    })
}

/// `#{u in [q]^n : d(u,w) >= threshold for all w in code}`.
pub fn candidate_count(code: &Code, threshold: usize) -> Result<usize> {
    let space = WordSpace::new(code.q(), code.n())?;
    let rows = pack_code(code)?;
    let t = threshold as u32;
    Ok(space
        .words
        .iter()
        .filter(|&&u| rows.iter().all(|&w| distance(u, w) >= t))
        .count())
}
