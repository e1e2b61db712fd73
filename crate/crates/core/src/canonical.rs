//! Canonical representatives of code equivalence classes.
//!
//! The canonical form of a code is the lexicographically least row-sorted
//! symbol matrix over all column permutations and per-column symbol
//! renumberings. Because row order is free as well, this equals the least
//! row-major string over (row order, column order, renumbering). For a fixed
//! row order the best renumbering of a column labels symbols by first
//! appearance, so only row and column orders need searching. Rows are chosen
//! one at a time; the columns are kept in an ordered partition whose cells
//! hold columns with identical labelled prefixes, and each new row sorts
//! the columns inside every cell. Only rows giving the least next row are
//! branched on.
//!
//! The same search with renumbering switched off gives a canonical form of
//! a matrix under row and column permutations, used for incidence matrices.

use std::cmp::Ordering;

use crate::code::Code;
use crate::error::{Error, Result};
use crate::word::Word;

const MAX_ROWS: usize = 128;
const MAX_COLS: usize = 32;
const MAX_SYMBOLS: usize = 16;
const UNSET: u8 = u8::MAX;

/// Canonical representative of the equivalence class of `code`.
pub fn canonical_form(code: &Code) -> Result<Code> {
    let (q, n, m) = (code.q(), code.n(), code.len());
    if m == 0 {
        return Ok(code.clone());
    }
    let best = canonical_matrix(m, n, q, &code.to_matrix(), true)?;
    let words = best
        .chunks_exact(n)
        .map(|r| Word::from_symbols(r.to_vec()))
        .collect();
    Ok(Code::from_sorted_unchecked(q, n, words))
}

/// True when `code` is its own canonical form.
pub fn is_canonical(code: &Code) -> Result<bool> {
    if code.is_empty() {
        return Ok(true);
    }
    check_limits(code.len(), code.n(), code.q())?;
    Ok(is_canonical_rows(code.q(), code.n(), &code.to_matrix()))
}

fn check_limits(rows: usize, cols: usize, q: usize) -> Result<()> {
    if rows > MAX_ROWS || cols > MAX_COLS || q > MAX_SYMBOLS || cols == 0 {
        return Err(Error::TooLarge { rows, cols, q });
    }
    Ok(())
}

/// Least row-major form of a `rows x cols` matrix over symbols `0..q`, under
/// row permutations, column permutations and (if `relabel`) per-column symbol
/// renumbering. Rows of the result are sorted.
pub fn canonical_matrix(
    rows: usize,
    cols: usize,
    q: usize,
    data: &[u8],
    relabel: bool,
) -> Result<Vec<u8>> {
    check_limits(rows, cols, q)?;
    assert_eq!(data.len(), rows * cols, "matrix shape");
    if rows == 0 {
        return Ok(Vec::new());
    }
    let mut s = Search::new(rows, cols, data, relabel, Mode::Minimize);
    s.run();
    Ok(s.best)
}

/// Fast canonicity test for a sorted row-major code matrix (limits are the
/// caller's responsibility). Aborts at the first arrangement that beats the
/// input.
pub fn is_canonical_rows(q: usize, n: usize, data: &[u8]) -> bool {
    debug_assert!(q <= MAX_SYMBOLS && n <= MAX_COLS);
    let rows = data.len() / n;
    if rows == 0 {
        return true;
    }
    let mut s = Search::new(rows, n, data, true, Mode::Test);
    s.best.copy_from_slice(data);
    s.have_best = true;
    s.run();
    !s.beaten
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    Minimize,
    Test,
}

#[derive(Clone)]
struct Node {
    used: u128,
    order: [u8; MAX_COLS],
    /// Bit `p` set when a cell starts at position `p`.
    starts: u64,
    labels: [[u8; MAX_SYMBOLS]; MAX_COLS],
    next: [u8; MAX_COLS],
}

struct Search<'a> {
    rows: usize,
    cols: usize,
    data: &'a [u8],
    relabel: bool,
    mode: Mode,
    cur: Vec<u8>,
    best: Vec<u8>,
    have_best: bool,
    beaten: bool,
}

impl<'a> Search<'a> {
    fn new(rows: usize, cols: usize, data: &'a [u8], relabel: bool, mode: Mode) -> Self {
        Self {
            rows,
            cols,
            data,
            relabel,
            mode,
            cur: vec![0; rows * cols],
            best: vec![0; rows * cols],
            have_best: false,
            beaten: false,
        }
    }

    fn run(&mut self) {
        let mut order = [0u8; MAX_COLS];
        for (p, o) in order.iter_mut().enumerate().take(self.cols) {
            *o = p as u8;
        }
        let root = Node {
            used: 0,
            order,
            starts: 1,
            labels: [[UNSET; MAX_SYMBOLS]; MAX_COLS],
            next: [0; MAX_COLS],
        };
        self.descend(&root, 0);
    }

    #[inline]
    fn label(&self, node: &Node, r: usize, c: usize) -> u8 {
        let s = self.data[r * self.cols + c];
        if !self.relabel {
            return s;
        }
        let l = node.labels[c][usize::from(s)];
        if l == UNSET {
            node.next[c]
        } else {
            l
        }
    }

    /// Writes the best arrangement of row `r` below `node` into `out`.
    fn row_string(&self, node: &Node, r: usize, out: &mut [u8]) {
        for p in 0..self.cols {
            out[p] = self.label(node, r, usize::from(node.order[p]));
        }
        let mut p = 0;
        while p < self.cols {
            let end = cell_end(node.starts, p, self.cols);
            if end - p > 1 {
                out[p..end].sort_unstable();
            }
            p = end;
        }
    }

    fn child(&self, node: &Node, r: usize) -> Node {
        let mut c = node.clone();
        c.used |= 1u128 << r;
        let mut lab = [0u8; MAX_COLS];
        for col in 0..self.cols {
            let l = self.label(node, r, col);
            lab[col] = l;
            if self.relabel && l == node.next[col] {
                let s = usize::from(self.data[r * self.cols + col]);
                if node.labels[col][s] == UNSET {
                    c.labels[col][s] = l;
                    c.next[col] += 1;
                }
            }
        }
        let mut p = 0;
        while p < self.cols {
            let end = cell_end(node.starts, p, self.cols);
            if end - p > 1 {
                let cell = &mut c.order[p..end];
                cell.sort_by_key(|&col| lab[usize::from(col)]);
                for i in p + 1..end {
                    if lab[usize::from(c.order[i])] != lab[usize::from(c.order[i - 1])] {
                        c.starts |= 1 << i;
                    }
                }
            }
            p = end;
        }
        c
    }

    fn descend(&mut self, node: &Node, depth: usize) {
        let n = self.cols;
        let mut min_row = [UNSET; MAX_COLS];
        let mut buf = [0u8; MAX_COLS];
        let mut ties: Vec<usize> = Vec::new();
        for r in 0..self.rows {
            if node.used & (1u128 << r) != 0 {
                continue;
            }
            self.row_string(node, r, &mut buf[..n]);
            match buf[..n].cmp(&min_row[..n]) {
                Ordering::Less => {
                    min_row[..n].copy_from_slice(&buf[..n]);
                    ties.clear();
                    ties.push(r);
                }
                Ordering::Equal => {
                    // identical input rows give identical subtrees
                    let row = &self.data[r * n..(r + 1) * n];
                    if !ties.iter().any(|&t| &self.data[t * n..(t + 1) * n] == row) {
                        ties.push(r);
                    }
                }
                Ordering::Greater => {}
            }
        }
        let at = depth * n;
        self.cur[at..at + n].copy_from_slice(&min_row[..n]);
        if self.have_best {
            match self.cur[..at + n].cmp(&self.best[..at + n]) {
                Ordering::Greater => return,
                Ordering::Less if self.mode == Mode::Test => {
                    self.beaten = true;
                    return;
                }
                _ => {}
            }
        }
        if depth + 1 == self.rows {
            if !self.have_best || self.cur < self.best {
                self.best.copy_from_slice(&self.cur);
                self.have_best = true;
            }
            return;
        }
        for r in ties {
            let child = self.child(node, r);
            self.descend(&child, depth + 1);
            if self.beaten {
                return;
            }
        }
    }
}

#[inline]
fn cell_end(starts: u64, p: usize, cols: usize) -> usize {
    let rest = starts >> (p + 1) << (p + 1);
    if rest == 0 {
        cols
    } else {
        (rest.trailing_zeros() as usize).min(cols)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::figure2_code;
    use crate::equivalence::{apply_equivalence, EquivalenceMap};

    fn code(q: usize, n: usize, rows: &[&[u8]]) -> Code {
        Code::from_rows(q, n, rows).unwrap()
    }

    /// Brute force over the whole equivalence group; tiny instances only.
    fn brute_canonical(c: &Code) -> Code {
        let (q, n) = (c.q(), c.n());
        let col_perms = permutations(n);
        let sym_perms: Vec<Vec<u8>> = permutations(q)
            .into_iter()
            .map(|p| p.into_iter().map(|x| x as u8).collect())
            .collect();
        let mut best: Option<Code> = None;
        let total = sym_perms.len().pow(n as u32);
        for cp in &col_perms {
            for mut idx in 0..total {
                let mut sp = Vec::with_capacity(n);
                for _ in 0..n {
                    sp.push(sym_perms[idx % sym_perms.len()].clone());
                    idx /= sym_perms.len();
                }
                let e = EquivalenceMap::new(cp.clone(), sp).unwrap();
                let img = apply_equivalence(c, &e).unwrap();
                if best.as_ref().is_none_or(|b| img.words() < b.words()) {
                    best = Some(img);
                }
            }
        }
        best.unwrap()
    }

    fn permutations(k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(k - 1) {
            for i in 0..=p.len() {
                let mut v = p.clone();
                v.insert(i, k - 1);
                out.push(v);
            }
        }
        out
    }

    #[test]
    fn two_word_binary_orbit() {
        let a = code(2, 2, &[&[0, 1], &[1, 0]]);
        let b = code(2, 2, &[&[0, 0], &[1, 1]]);
        let ca = canonical_form(&a).unwrap();
        assert_eq!(ca, canonical_form(&b).unwrap());
        assert_eq!(ca, b);
        assert_eq!(ca, brute_canonical(&a));
    }

    #[test]
    fn matches_brute_force_on_small_codes() {
        let cases: Vec<Code> = vec![
            figure2_code(),
            code(3, 3, &[&[0, 1, 2], &[2, 2, 0], &[1, 0, 0]]),
            code(2, 3, &[&[0, 1, 1], &[1, 0, 1], &[1, 1, 1], &[0, 0, 0]]),
            code(3, 2, &[&[2, 1], &[0, 2], &[1, 1]]),
            code(2, 4, &[&[0, 1, 1, 0], &[1, 1, 1, 1], &[0, 0, 1, 0]]),
        ];
        for c in cases {
            let fast = canonical_form(&c).unwrap();
            assert_eq!(fast, brute_canonical(&c), "code {c:?}");
            assert!(is_canonical(&fast).unwrap());
        }
    }

    #[test]
    fn canonicity_test_rejects_non_minimal() {
        let c = figure2_code();
        let canon = canonical_form(&c).unwrap();
        assert_eq!(is_canonical(&c).unwrap(), c == canon);
        let shifted = code(3, 3, &[&[1, 1, 1], &[2, 2, 2]]);
        assert!(!is_canonical(&shifted).unwrap());
        assert!(is_canonical(&code(3, 3, &[&[0, 0, 0], &[1, 1, 1]])).unwrap());
    }

    #[test]
    fn matrix_form_without_relabelling() {
        // identity vs anti-identity are row/column permutations of each other
        let a = [1u8, 0, 0, 1];
        let b = [0u8, 1, 1, 0];
        let ca = canonical_matrix(2, 2, 2, &a, false).unwrap();
        assert_eq!(ca, canonical_matrix(2, 2, 2, &b, false).unwrap());
        assert_eq!(ca, vec![0, 1, 1, 0]);
        // but not equivalent to the all-ones matrix
        let c = [1u8, 1, 1, 1];
        assert_ne!(ca, canonical_matrix(2, 2, 2, &c, false).unwrap());
    }

    #[test]
    fn size_limits() {
        let big = Code::empty(17, 2)
            .with_word(Word::from_symbols(vec![16, 0]))
            .unwrap();
        assert!(matches!(canonical_form(&big), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn cell_end_scans_bits() {
        assert_eq!(cell_end(0b1, 0, 5), 5);
        assert_eq!(cell_end(0b1001, 0, 5), 3);
        assert_eq!(cell_end(0b1001, 3, 5), 5);
    }
}
