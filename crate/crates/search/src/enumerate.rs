//! Orderly generation of `(n,d)_q` codes up to equivalence.
//!
//! Words are added in increasing lexicographic order and a partial code is
//! kept only when it is its own canonical form. The canonical form is the
//! least row-sorted matrix, which is hereditary: deleting the largest row of
//! a canonical code leaves a canonical code. Every class therefore appears
//! exactly once, as the canonical extension of a canonical parent.
//!
//! Pruning uses facts every code of the target size must satisfy:
//! distances at least `d`, column counts at most the Plotkin bound of the
//! punctured parameters, total excess distance `sum(dist - d)` at most `L - R`,
//! and a large enough pool of remaining candidates. When `L = R` for the
//! target size the code must also be equidistant with balanced columns, so
//! distances must equal `d`, counts are capped by `ceil(M/q)` and every
//! symbol still needs `ceil(M/q) - 1` occurrences per column.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use qary_core::bounds::{pair_count_bounds, plotkin_bound};
use qary_core::canonical::is_canonical_rows;
use qary_core::{Code, CodeParams, Word};

use crate::error::{Result, SearchError};
use crate::packed::{distance, symbol_at, unpack, WordSpace};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnumerationMode {
    AllClasses,
    ExistenceOnly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Limits {
    pub max_nodes: Option<u64>,
    pub max_time: Option<Duration>,
}

impl Limits {
    pub const DEFAULT_NODES: u64 = 1_000_000_000;
    pub const DEFAULT_TIME: Duration = Duration::from_secs(600);

    pub fn standard() -> Self {
        Self {
            max_nodes: Some(Self::DEFAULT_NODES),
            max_time: Some(Self::DEFAULT_TIME),
        }
    }

    pub fn unlimited() -> Self {
        Self::default()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationTask {
    pub params: CodeParams,
    pub target_size: usize,
    pub mode: EnumerationMode,
    pub limits: Limits,
}

impl EnumerationTask {
    pub fn all_classes(params: CodeParams, target_size: usize) -> Self {
        Self {
            params,
            target_size,
            mode: EnumerationMode::AllClasses,
            limits: Limits::standard(),
        }
    }

    /// Instances that finish in seconds to minutes on one core: word space of
    /// at most `2^17` words and codes of at most 32 words.
    pub fn is_desk_scale(&self) -> bool {
        self.params.space_size().is_some_and(|s| s <= 1 << 17)
            && self.target_size <= 32
            && self.params.n <= crate::packed::MAX_LEN
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationReport {
    /// One canonical code per class, sorted.
    pub classes: Vec<Code>,
    /// Canonical partial codes accepted at each size `0..=target`.
    pub nodes_per_level: Vec<u64>,
    pub nodes: u64,
    /// Whether `L = R` pruning (equidistance, balanced columns) was in force.
    pub equidistance_pruning: bool,
}

struct Ctx {
    space: WordSpace,
    q: usize,
    n: usize,
    d: u32,
    target: usize,
    forced: bool,
    cap: u8,
    need_floor: u8,
    not_d_budget: i64,
    mode: EnumerationMode,
    limits: Limits,
    start: Instant,
    nodes: AtomicU64,
    level: Vec<AtomicU64>,
    stop: AtomicBool,
    timed_out: AtomicBool,
    found: Mutex<Vec<Code>>,
}

#[derive(Clone)]
struct Node {
    packed: Vec<u64>,
    matrix: Vec<u8>,
    counts: [[u8; 16]; 16],
    distinct: [u8; 16],
    /// Sum of `dist - d` over pairs; bounded by `L - R` of the target size.
    not_d: i64,
    cands: Vec<u32>,
}

/// One canonical representative per class of `(n,d)_q` codes of the target
/// size, each in canonical form, sorted. Output is independent of the
/// number of rayon worker threads.
pub fn enumerate_codes(task: &EnumerationTask) -> Result<EnumerationReport> {
    let p = task.params;
    if task.target_size == 0 {
        return Err(SearchError::TooLarge(
            "target size must be at least 1".into(),
        ));
    }
    let space = WordSpace::new(p.q, p.n)?;
    let pc = pair_count_bounds(&p, task.target_size as u64);
    let forced = pc.budget == 0;
    // a block of one column is a code of the punctured parameters
    let plotkin_cap = match p.punctured() {
        Some(pp) => plotkin_bound(&pp).unwrap_or(u64::MAX),
        None => 1,
    };
    let mut cap = plotkin_cap.min(task.target_size as u64);
    let mut need_floor = 0;
    if forced {
        cap = cap.min(pc.m as u64);
        need_floor = (pc.m - 1).max(0) as u8;
    }
    let ctx = Ctx {
        q: p.q,
        n: p.n,
        d: p.d as u32,
        target: task.target_size,
        forced,
        cap: cap.min(255) as u8,
        need_floor,
        not_d_budget: pc.budget,
        mode: task.mode,
        limits: task.limits,
        start: Instant::now(),
        nodes: AtomicU64::new(0),
        level: (0..=task.target_size).map(|_| AtomicU64::new(0)).collect(),
        stop: AtomicBool::new(false),
        timed_out: AtomicBool::new(false),
        found: Mutex::new(Vec::new()),
        space,
    };

    if pc.budget < 0 {
        // no code of this size exists at all
        return Ok(ctx.report(Vec::new()));
    }

    ctx.level[0].fetch_add(1, Ordering::Relaxed);
    let root = ctx.root();
    ctx.level[1].fetch_add(1, Ordering::Relaxed);
    let mut frontier = vec![root];
    let mut depth = 1;
    let workers = rayon::current_num_threads().max(1);
    while depth < ctx.target && frontier.len() < 64 * workers && !ctx.stopped() {
        let mut next = Vec::new();
        for node in &frontier {
            ctx.children(node, &mut |child| next.push(child));
        }
        frontier = next;
        depth += 1;
    }
    if depth == ctx.target {
        for node in &frontier {
            ctx.record(node);
        }
    } else {
        frontier.par_iter().for_each(|node| ctx.dfs(node));
    }

    let mut classes = std::mem::take(&mut *ctx.found.lock().expect("result lock"));
    classes.sort();
    let nodes = ctx.nodes.load(Ordering::Relaxed);
    if ctx.timed_out.load(Ordering::Relaxed) {
        return Err(SearchError::TimeExhausted {
            nodes,
            seconds: ctx.limits.max_time.map_or(0, |t| t.as_secs()),
        });
    }
    if ctx.limits.max_nodes.is_some_and(|m| nodes > m) {
        return Err(SearchError::BudgetExhausted {
            nodes,
            partial: classes,
        });
    }
    if task.mode == EnumerationMode::ExistenceOnly {
        classes.truncate(1);
    }
    Ok(ctx.report(classes))
}

impl Ctx {
    fn report(&self, classes: Vec<Code>) -> EnumerationReport {
        EnumerationReport {
            classes,
            nodes_per_level: self
                .level
                .iter()
                .map(|a| a.load(Ordering::Relaxed))
                .collect(),
            nodes: self.nodes.load(Ordering::Relaxed),
            equidistance_pruning: self.forced,
        }
    }

    fn stopped(&self) -> bool {
        self.stop.load(Ordering::Relaxed)
    }

    #[inline]
    fn compatible(&self, a: u64, b: u64) -> bool {
        let x = distance(a, b);
        if self.forced {
            x == self.d
        } else {
            x >= self.d
        }
    }

    fn root(&self) -> Node {
        let zero = self.space.words[0];
        let mut counts = [[0u8; 16]; 16];
        for c in counts.iter_mut().take(self.n) {
            c[0] = 1;
        }
        let mut distinct = [0u8; 16];
        distinct[..self.n].fill(1);
        let cands = (1..self.space.len() as u32)
            .filter(|&i| self.compatible(zero, self.space.words[i as usize]))
            .collect();
        Node {
            packed: vec![zero],
            matrix: vec![0; self.n],
            counts,
            distinct,
            not_d: 0,
            cands,
        }
    }

    fn tick(&self) -> bool {
        let nodes = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if self.limits.max_nodes.is_some_and(|m| nodes > m) {
            self.stop.store(true, Ordering::Relaxed);
            return false;
        }
        if nodes % 1024 == 0 {
            if let Some(t) = self.limits.max_time {
                if self.start.elapsed() > t {
                    self.timed_out.store(true, Ordering::Relaxed);
                    self.stop.store(true, Ordering::Relaxed);
                    return false;
                }
            }
        }
        true
    }

    /// Calls `emit` for every canonical one-word extension of `node` that
    /// survives pruning.
    fn children(&self, node: &Node, emit: &mut dyn FnMut(Node)) {
        let k = node.packed.len();
        let still_needed = self.target - k - 1;
        let n = self.n;
        let mut sym = [0u8; 16];
        for (pos, &ci) in node.cands.iter().enumerate() {
            if self.stopped() {
                return;
            }
            // candidates only shrink from here on
            if node.cands.len() - pos - 1 < still_needed {
                break;
            }
            let w = self.space.words[ci as usize];
            unpack(w, n, &mut sym);
            // canonical matrices label symbols by first appearance, per column
            if (0..n).any(|j| {
                sym[j] > node.distinct[j] || node.counts[j][usize::from(sym[j])] >= self.cap
            }) {
                continue;
            }
            let mut not_d = node.not_d;
            if !self.forced {
                not_d += node
                    .packed
                    .iter()
                    .map(|&r| i64::from(distance(r, w) - self.d))
                    .sum::<i64>();
                if not_d > self.not_d_budget {
                    continue;
                }
            }
            let cands: Vec<u32> = node.cands[pos + 1..]
                .iter()
                .copied()
                .filter(|&c| self.compatible(w, self.space.words[c as usize]))
                .collect();
            if cands.len() < still_needed {
                continue;
            }
            let mut counts = node.counts;
            let mut distinct = node.distinct;
            for j in 0..n {
                let s = usize::from(sym[j]);
                counts[j][s] += 1;
                if sym[j] == distinct[j] {
                    distinct[j] += 1;
                }
            }
            if self.forced && !self.pool_covers_needs(&counts, &cands) {
                continue;
            }
            let mut matrix = Vec::with_capacity(node.matrix.len() + n);
            matrix.extend_from_slice(&node.matrix);
            matrix.extend_from_slice(&sym[..n]);
            if !self.tick() {
                return;
            }
            if !is_canonical_rows(self.q, n, &matrix) {
                continue;
            }
            self.level[k + 1].fetch_add(1, Ordering::Relaxed);
            let mut packed = Vec::with_capacity(k + 1);
            packed.extend_from_slice(&node.packed);
            packed.push(w);
            emit(Node {
                packed,
                matrix,
                counts,
                distinct,
                not_d,
                cands,
            });
        }
    }

    /// Every symbol of every column still short of `need_floor` occurrences
    /// must be available often enough among the remaining candidates.
    fn pool_covers_needs(&self, counts: &[[u8; 16]; 16], cands: &[u32]) -> bool {
        let mut avail = [[0u16; 16]; 16];
        for &c in cands {
            let w = self.space.words[c as usize];
            for (j, a) in avail.iter_mut().enumerate().take(self.n) {
                a[symbol_at(w, j)] += 1;
            }
        }
        (0..self.n).all(|j| {
            (0..self.q).all(|s| {
                let have = counts[j][s];
                have >= self.need_floor || u16::from(self.need_floor - have) <= avail[j][s]
            })
        })
    }

    fn dfs(&self, node: &Node) {
        if self.stopped() {
            return;
        }
        if node.packed.len() == self.target {
            self.record(node);
            return;
        }
        self.children(node, &mut |child| self.dfs(&child));
    }

    fn record(&self, node: &Node) {
        let words = node
            .matrix
            .chunks_exact(self.n)
            .map(|r| Word::from_symbols(r.to_vec()))
            .collect();
        let code = Code::new(self.q, self.n, words).expect("search produces valid words");
        self.found.lock().expect("result lock").push(code);
        if self.mode == EnumerationMode::ExistenceOnly {
            self.stop.store(true, Ordering::Relaxed);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use qary_core::canonical_form;

    fn task(q: usize, n: usize, d: usize, m: usize) -> EnumerationTask {
        EnumerationTask::all_classes(CodeParams::new(q, n, d).unwrap(), m)
    }

    /// Classes by brute force: every subset of `[q]^n` of size `m` with the
    /// right minimum distance, reduced by canonical form.
    fn brute(q: usize, n: usize, d: usize, m: usize) -> Vec<Code> {
        let space = WordSpace::new(q, n).unwrap();
        let words: Vec<Word> = (0..space.len()).map(|i| space.word(i)).collect();
        let mut out = std::collections::BTreeSet::new();
        let mut pick = Vec::new();
        fn rec(
            words: &[Word],
            start: usize,
            pick: &mut Vec<Word>,
            q: usize,
            n: usize,
            d: usize,
            m: usize,
            out: &mut std::collections::BTreeSet<Code>,
        ) {
            if pick.len() == m {
                let c = Code::new(q, n, pick.clone()).unwrap();
                out.insert(canonical_form(&c).unwrap());
                return;
            }
            for i in start..words.len() {
                let ok = pick
                    .iter()
                    .all(|p| qary_core::hamming_distance(p, &words[i]).unwrap() >= d);
                if ok {
                    pick.push(words[i].clone());
                    rec(words, i + 1, pick, q, n, d, m, out);
                    pick.pop();
                }
            }
        }
        rec(&words, 0, &mut pick, q, n, d, m, &mut out);
        out.into_iter().collect()
    }

    #[test]
    fn binary_pair() {
        let r = enumerate_codes(&task(2, 2, 2, 2)).unwrap();
        assert_eq!(r.classes.len(), 1);
        assert_eq!(
            r.classes[0],
            Code::from_rows(2, 2, &[[0u8, 0], [1, 1]]).unwrap()
        );
    }

    #[test]
    fn ternary_figure2_unique() {
        let r = enumerate_codes(&task(3, 3, 2, 9)).unwrap();
        assert_eq!(r.classes.len(), 1);
        assert_eq!(
            r.classes[0],
            canonical_form(&qary_core::corpus::figure2_code()).unwrap()
        );
    }

    #[test]
    fn matches_brute_force() {
        for &(q, n, d, m) in &[
            (2, 3, 1, 3),
            (2, 4, 2, 4),
            (3, 3, 2, 5),
            (3, 3, 1, 4),
            (2, 5, 3, 3),
            (3, 4, 3, 4),
            (2, 4, 2, 8),
        ] {
            let fast = enumerate_codes(&task(q, n, d, m)).unwrap().classes;
            assert_eq!(fast, brute(q, n, d, m), "q={q} n={n} d={d} m={m}");
        }
    }

    #[test]
    fn impossible_size_is_empty() {
        let r = enumerate_codes(&task(3, 3, 2, 10)).unwrap();
        assert!(r.classes.is_empty());
    }

    #[test]
    fn budget_is_loud() {
        let mut t = task(3, 4, 2, 9);
        t.limits.max_nodes = Some(3);
        assert!(matches!(
            enumerate_codes(&t),
            Err(SearchError::BudgetExhausted { .. })
        ));
    }

    #[test]
    fn existence_only_stops_early() {
        let mut t = task(3, 4, 3, 9);
        t.mode = EnumerationMode::ExistenceOnly;
        let r = enumerate_codes(&t).unwrap();
        assert_eq!(r.classes.len(), 1);
        assert!(r.classes[0].has_min_distance(3));
    }

    #[test]
    fn desk_scale_guard() {
        assert!(task(5, 7, 6, 15).is_desk_scale());
        assert!(!task(5, 8, 6, 65).is_desk_scale());
    }
}
