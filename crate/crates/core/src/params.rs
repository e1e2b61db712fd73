use std::fmt;

use crate::error::{Error, Result};

/// Alphabet size `q`, word length `n` and minimum distance `d` of an `(n,d)_q` code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CodeParams {
    pub q: usize,
    pub n: usize,
    pub d: usize,
}

impl CodeParams {
    pub fn new(q: usize, n: usize, d: usize) -> Result<Self> {
        if q < 2 {
            return Err(Error::InvalidParams(format!("q = {q} must be at least 2")));
        }
        if n < 1 {
            return Err(Error::InvalidParams("n must be at least 1".into()));
        }
        if d < 1 || d > n {
            return Err(Error::InvalidParams(format!(
                "d = {d} must satisfy 1 <= d <= n = {n}"
            )));
        }
        Ok(Self { q, n, d })
    }

    /// Parameters of the code obtained by deleting one column.
    pub fn punctured(&self) -> Option<Self> {
        Self::new(self.q, self.n.checked_sub(1)?, self.d).ok()
    }

    /// `qd = (q-1)n`, the regime where codes of size `qn` correspond to symmetric nets.
    pub fn is_symmetric_net_type(&self) -> bool {
        self.q * self.d == (self.q - 1) * self.n
    }

    /// `mu = n - d = n / q` when [`is_symmetric_net_type`](Self::is_symmetric_net_type) holds.
    pub fn mu(&self) -> Option<usize> {
        self.is_symmetric_net_type().then(|| self.n - self.d)
    }

    /// Number of words in `[q]^n`, if it fits in a `u64`.
    pub fn space_size(&self) -> Option<u64> {
        (self.q as u64).checked_pow(u32::try_from(self.n).ok()?)
    }
}

impl fmt::Display for CodeParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})_{}", self.n, self.d, self.q)
    }
}
