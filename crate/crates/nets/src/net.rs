//! Symmetric `(mu,q)`-nets as `mu q^2 x mu q^2` incidence matrices.
//!
//! Rows are points, columns are blocks. Block parallel classes are sets of
//! `q` pairwise disjoint blocks; point parallel classes are sets of `q`
//! points no two of which share a block.

use crate::error::{NetError, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricNet {
    pub mu: usize,
    pub q: usize,
    /// Row-major, entries 0 or 1.
    incidence: Vec<u8>,
    pub point_classes: Option<Vec<Vec<usize>>>,
    pub block_classes: Option<Vec<Vec<usize>>>,
}

impl SymmetricNet {
    pub fn new(mu: usize, q: usize, incidence: Vec<u8>) -> Result<Self> {
        if mu == 0 || q == 0 {
            return Err(NetError::Malformed("mu and q must be positive".into()));
        }
        let v = mu * q * q;
        if incidence.len() != v * v {
            return Err(NetError::Malformed(format!(
                "expected a {v}x{v} matrix, got {} entries",
                incidence.len()
            )));
        }
        if incidence.iter().any(|&x| x > 1) {
            return Err(NetError::Malformed("entries must be 0 or 1".into()));
        }
        Ok(Self {
            mu,
            q,
            incidence,
            point_classes: None,
            block_classes: None,
        })
    }

    pub fn from_rows(mu: usize, q: usize, rows: &[Vec<u8>]) -> Result<Self> {
        let v = mu * q * q;
        if rows.len() != v || rows.iter().any(|r| r.len() != v) {
            return Err(NetError::Malformed(format!(
                "expected {v} rows of length {v}"
            )));
        }
        Self::new(mu, q, rows.concat())
    }

    /// Number of points (and of blocks).
    pub fn order(&self) -> usize {
        self.mu * self.q * self.q
    }

    pub fn incidence(&self) -> &[u8] {
        &self.incidence
    }

    pub fn get(&self, point: usize, block: usize) -> bool {
        self.incidence[point * self.order() + block] == 1
    }

    pub fn rows(&self) -> Vec<Vec<u8>> {
        self.incidence
            .chunks_exact(self.order())
            .map(<[u8]>::to_vec)
            .collect()
    }

    /// Points of each block.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let v = self.order();
        (0..v)
            .map(|b| (0..v).filter(|&p| self.get(p, b)).collect())
            .collect()
    }

    /// `N^T N`: entry `(b, c)` is the number of points shared by blocks `b, c`.
    pub fn block_intersections(&self) -> Vec<Vec<usize>> {
        let v = self.order();
        let mut g = vec![vec![0; v]; v];
        for p in 0..v {
            let row = &self.incidence[p * v..(p + 1) * v];
            for b in (0..v).filter(|&b| row[b] == 1) {
                for c in (0..v).filter(|&c| row[c] == 1) {
                    g[b][c] += 1;
                }
            }
        }
        g
    }

    /// `N N^T`: entry `(x, y)` is the number of blocks containing points `x, y`.
    pub fn point_cooccurrence(&self) -> Vec<Vec<usize>> {
        let v = self.order();
        let rows: Vec<&[u8]> = self.incidence.chunks_exact(v).collect();
        (0..v)
            .map(|x| {
                (0..v)
                    .map(|y| {
                        rows[x]
                            .iter()
                            .zip(rows[y])
                            .filter(|(a, b)| **a == 1 && **b == 1)
                            .count()
                    })
                    .collect()
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NetAxiomReport {
    /// Every block has `mu q` points.
    pub block_size: bool,
    pub s1: bool,
    pub s2: bool,
    pub s3: bool,
    /// Every pair of distinct points lies in at most `mu` blocks.
    pub s_prime: bool,
    /// `s_prime == (s2 && s3)` on this instance.
    pub s_prime_agrees: bool,
    pub block_classes: Option<Vec<Vec<usize>>>,
    pub point_classes: Option<Vec<Vec<usize>>>,
}

impl NetAxiomReport {
    pub fn all_hold(&self) -> bool {
        self.block_size && self.s1 && self.s2 && self.s3
    }
}

pub fn verify_net_axioms(net: &SymmetricNet) -> NetAxiomReport {
    let (mu, q, v) = (net.mu, net.q, net.order());
    let inter = net.block_intersections();
    let co = net.point_cooccurrence();
    let block_size = (0..v).all(|b| inter[b][b] == mu * q);

    let disjoint = |a: usize, b: usize| inter[a][b] == 0;
    let block_classes = if block_size {
        clique_partition(v, q, &disjoint)
    } else {
        None
    };
    let s1 = block_classes.is_some();
    let s2 = block_classes
        .as_ref()
        .is_some_and(|cls| cross_pairs_equal(cls, v, &|a, b| inter[a][b], mu));

    // pairs from different classes meet mu >= 1 times, so the classes are the
    // components of the never-together relation
    let together_never = |x: usize, y: usize| co[x][y] == 0;
    let point_classes = component_cliques(v, q, &together_never);
    let s3 = point_classes
        .as_ref()
        .is_some_and(|cls| cross_pairs_equal(cls, v, &|x, y| co[x][y], mu));

    let s_prime = (0..v).all(|x| (0..x).all(|y| co[x][y] <= mu));
    NetAxiomReport {
        block_size,
        s1,
        s2,
        s3,
        s_prime,
        s_prime_agrees: s_prime == (s2 && s3),
        block_classes,
        point_classes,
    }
}

fn cross_pairs_equal(
    classes: &[Vec<usize>],
    v: usize,
    value: &dyn Fn(usize, usize) -> usize,
    target: usize,
) -> bool {
    let mut class_of = vec![0; v];
    for (i, c) in classes.iter().enumerate() {
        for &x in c {
            class_of[x] = i;
        }
    }
    (0..v).all(|a| (0..a).all(|b| class_of[a] == class_of[b] || value(a, b) == target))
}

/// Connected components of `rel`, provided each is a clique of size `q`.
fn component_cliques(
    v: usize,
    q: usize,
    rel: &dyn Fn(usize, usize) -> bool,
) -> Option<Vec<Vec<usize>>> {
    let mut seen = vec![false; v];
    let mut out = Vec::new();
    for s in 0..v {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut i = 0;
        while i < comp.len() {
            let x = comp[i];
            for y in 0..v {
                if !seen[y] && y != x && rel(x, y) {
                    seen[y] = true;
                    comp.push(y);
                }
            }
            i += 1;
        }
        comp.sort_unstable();
        let clique = comp
            .iter()
            .all(|&a| comp.iter().all(|&b| a == b || rel(a, b)));
        if comp.len() != q || !clique {
            return None;
        }
        out.push(comp);
    }
    Some(out)
}

/// Partition of `0..v` into cliques of size `q` of the relation `rel`,
/// by components when they already have that shape and by exhaustive
/// backtracking otherwise. Classes are listed by least element.
pub(crate) fn clique_partition(
    v: usize,
    q: usize,
    rel: &dyn Fn(usize, usize) -> bool,
) -> Option<Vec<Vec<usize>>> {
    if q == 0 || v % q != 0 {
        return None;
    }
    if let Some(c) = component_cliques(v, q, rel) {
        return Some(c);
    }
    let mut used = vec![false; v];
    let mut out = Vec::new();
    backtrack(v, q, rel, &mut used, &mut out).then_some(out)
}

fn backtrack(
    v: usize,
    q: usize,
    rel: &dyn Fn(usize, usize) -> bool,
    used: &mut [bool],
    out: &mut Vec<Vec<usize>>,
) -> bool {
    let Some(first) = (0..v).find(|&x| !used[x]) else {
        return true;
    };
    used[first] = true;
    let mut clique = vec![first];
    let found = extend_clique(v, q, rel, used, &mut clique, first + 1, out);
    used[first] = false;
    found
}

fn extend_clique(
    v: usize,
    q: usize,
    rel: &dyn Fn(usize, usize) -> bool,
    used: &mut [bool],
    clique: &mut Vec<usize>,
    from: usize,
    out: &mut Vec<Vec<usize>>,
) -> bool {
    if clique.len() == q {
        out.push(clique.clone());
        if backtrack(v, q, rel, used, out) {
            return true;
        }
        out.pop();
        return false;
    }
    for y in from..v {
        if used[y] || !clique.iter().all(|&x| rel(x, y)) {
            continue;
        }
        used[y] = true;
        clique.push(y);
        if extend_clique(v, q, rel, used, clique, y + 1, out) {
            used[y] = false;
            return true;
        }
        clique.pop();
        used[y] = false;
    }
    false
}

/// Row and column orders that make every `q x q` block of the incidence
/// matrix a permutation matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrangement {
    pub point_classes: Vec<Vec<usize>>,
    pub block_classes: Vec<Vec<usize>>,
}

impl Arrangement {
    pub fn row_order(&self) -> Vec<usize> {
        self.point_classes.concat()
    }

    pub fn column_order(&self) -> Vec<usize> {
        self.block_classes.concat()
    }
}

/// Finds point and block classes realizing the permutation-block layout.
pub fn find_arrangement(net: &SymmetricNet) -> Result<Arrangement> {
    let (q, v) = (net.q, net.order());
    let inter = net.block_intersections();
    let co = net.point_cooccurrence();
    let block_classes = clique_partition(v, q, &|a, b| inter[a][b] == 0).ok_or_else(|| {
        NetError::NoArrangement("blocks do not split into parallel classes".into())
    })?;
    let point_classes = clique_partition(v, q, &|x, y| co[x][y] == 0).ok_or_else(|| {
        NetError::NoArrangement("points do not split into parallel classes".into())
    })?;
    for pc in &point_classes {
        for bc in &block_classes {
            let perm = pc
                .iter()
                .all(|&p| bc.iter().filter(|&&b| net.get(p, b)).count() == 1)
                && bc
                    .iter()
                    .all(|&b| pc.iter().filter(|&&p| net.get(p, b)).count() == 1);
            if !perm {
                return Err(NetError::NoArrangement(format!(
                    "points {pc:?} x blocks {bc:?} is not a permutation matrix"
                )));
            }
        }
    }
    Ok(Arrangement {
        point_classes,
        block_classes,
    })
}

/// The incidence matrix with rows and columns in the given orders.
pub fn arranged_matrix(net: &SymmetricNet, arr: &Arrangement) -> Vec<Vec<u8>> {
    let cols = arr.column_order();
    arr.row_order()
        .iter()
        .map(|&p| cols.iter().map(|&b| u8::from(net.get(p, b))).collect())
        .collect()
}

/// `M M^T = M^T M = A` with `A` made of `q x q` blocks, `mu q I` on the
/// diagonal and `mu J` elsewhere, for the arranged incidence matrix `M`.
pub fn gram_check(net: &SymmetricNet) -> Result<bool> {
    let arr = find_arrangement(net)?;
    let m = arranged_matrix(net, &arr);
    let (mu, q, v) = (net.mu, net.q, net.order());
    let expected = |i: usize, j: usize| -> usize {
        match (i / q == j / q, i == j) {
            (true, true) => mu * q,
            (true, false) => 0,
            (false, _) => mu,
        }
    };
    for i in 0..v {
        for j in 0..v {
            let rr: usize = (0..v).map(|k| usize::from(m[i][k] & m[j][k])).sum();
            let cc: usize = (0..v).map(|k| usize::from(m[k][i] & m[k][j])).sum();
            if rr != expected(i, j) || cc != expected(i, j) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
