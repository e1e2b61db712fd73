//! The correspondence between `(mu q, mu q - mu)_q` codes of size `mu q^2`
//! and symmetric `(mu,q)`-nets.
//!
//! A word `w` becomes the 0/1 row with ones at positions `(i, w_i)`, laid
//! out as column `i q + w_i`. Such a code splits into `n` classes of `q`
//! words at mutual distance `n`, with distance exactly `d` across classes;
//! stacking the classes gives rows made of `q x q` permutation matrices.

use qary_core::canonical::canonical_matrix;
use qary_core::{hamming_distance, Code, CodeParams, Word};

use crate::error::{NetError, Result};
use crate::net::{find_arrangement, SymmetricNet};

/// `C = V_1 u ... u V_n` as indices into `code.words()`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordPartition {
    pub classes: Vec<Vec<usize>>,
}

/// `(q, n, d)` with `d = n - n/q`, when the code has size `qn`.
pub fn net_params(code: &Code) -> Result<CodeParams> {
    let (q, n) = (code.q(), code.n());
    if n % q != 0 {
        return Err(NetError::NotNetType(format!(
            "q = {q} does not divide n = {n}"
        )));
    }
    if code.len() != q * n {
        return Err(NetError::NotNetType(format!(
            "size {} differs from qn = {}",
            code.len(),
            q * n
        )));
    }
    Ok(CodeParams::new(q, n, n - n / q)?)
}

/// Components of the distance-`n` graph, each checked to hold `q` words at
/// mutual distance `n` and to sit at distance exactly `d` from the rest.
/// Classes are ordered by their least word, members ascending.
pub fn partition_words(code: &Code) -> Result<WordPartition> {
    let p = net_params(code)?;
    let words = code.words();
    let size = words.len();
    let dist = |a: usize, b: usize| hamming_distance(&words[a], &words[b]).expect("same length");
    let mut class_of = vec![usize::MAX; size];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for s in 0..size {
        if class_of[s] != usize::MAX {
            continue;
        }
        let id = classes.len();
        class_of[s] = id;
        let mut comp = vec![s];
        let mut i = 0;
        while i < comp.len() {
            let x = comp[i];
            for y in 0..size {
                if class_of[y] == usize::MAX && dist(x, y) == p.n {
                    class_of[y] = id;
                    comp.push(y);
                }
            }
            i += 1;
        }
        comp.sort_unstable();
        if comp.len() != p.q {
            return Err(NetError::NoWordPartition(format!(
                "class of word {} has {} words, expected {}",
                words[s],
                comp.len(),
                p.q
            )));
        }
        classes.push(comp);
    }
    for a in 0..size {
        for b in 0..a {
            let want = if class_of[a] == class_of[b] { p.n } else { p.d };
            if dist(a, b) != want {
                return Err(NetError::NoWordPartition(format!(
                    "d({}, {}) = {}, expected {want}",
                    words[a],
                    words[b],
                    dist(a, b)
                )));
            }
        }
    }
    Ok(WordPartition { classes })
}

/// The incidence matrix with rows grouped by word class (classes by least
/// word, members by their first symbol) and block `(i, s)` at column `iq + s`.
pub fn code_to_net(code: &Code) -> Result<SymmetricNet> {
    let part = partition_words(code)?;
    let (q, n) = (code.q(), code.n());
    let v = q * n;
    let mut rows = Vec::with_capacity(v);
    let mut point_classes = Vec::with_capacity(n);
    for class in &part.classes {
        let mut members = class.clone();
        members.sort_by_key(|&i| code.words()[i].symbols()[0]);
        point_classes.push((rows.len()..rows.len() + q).collect());
        for i in members {
            let mut row = vec![0u8; v];
            for (j, &s) in code.words()[i].symbols().iter().enumerate() {
                row[j * q + usize::from(s)] = 1;
            }
            rows.push(row);
        }
    }
    let mut net = SymmetricNet::from_rows(n / q, q, &rows)?;
    net.point_classes = Some(point_classes);
    net.block_classes = Some((0..n).map(|i| (i * q..(i + 1) * q).collect()).collect());
    Ok(net)
}

/// Reads the code off the block parallel classes: the `i`-th symbol of a
/// point is the position, within the `i`-th class, of the block holding it.
pub fn net_to_code(net: &SymmetricNet) -> Result<Code> {
    let arr = find_arrangement(net)?;
    let v = net.order();
    let words = (0..v)
        .map(|p| {
            let symbols = arr
                .block_classes
                .iter()
                .map(|cls| {
                    cls.iter()
                        .position(|&b| net.get(p, b))
                        .expect("each class covers every point") as u8
                })
                .collect::<Vec<_>>();
            Word::from_symbols(symbols)
        })
        .collect();
    Ok(Code::new(net.q, net.mu * net.q, words)?)
}

/// Canonical form of the incidence matrix under row and column permutations.
pub fn incidence_canonical_form(net: &SymmetricNet) -> Result<Vec<u8>> {
    let v = net.order();
    Ok(canonical_matrix(v, v, 2, net.incidence(), false)?)
}

/// Whether the incidence matrices agree up to row and column permutations.
pub fn nets_isomorphic(a: &SymmetricNet, b: &SymmetricNet) -> Result<bool> {
    if (a.mu, a.q) != (b.mu, b.q) {
        return Ok(false);
    }
    Ok(incidence_canonical_form(a)? == incidence_canonical_form(b)?)
}
