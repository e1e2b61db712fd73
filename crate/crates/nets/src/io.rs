//! Text formats for nets and generalized Hadamard matrices.
//!
//! Net file: `mu q`, then `mu q^2` lines of `0`/`1` characters.
//! GH file: `n k`, a group line (`cyclic:k`, `klein4`, or `table` followed by
//! `k` lines of `k` indices), then `n` lines of `n` element indices.
//! Blank lines and lines starting with `#` are ignored.

use std::fmt::Write as _;

use crate::error::{NetError, Result};
use crate::group::Group;
use crate::hadamard::GeneralizedHadamard;
use crate::net::SymmetricNet;

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn err(line: usize, reason: impl Into<String>) -> NetError {
    NetError::Parse {
        line,
        reason: reason.into(),
    }
}

fn numbers(line: usize, s: &str) -> Result<Vec<usize>> {
    s.split_whitespace()
        .map(|t| {
            t.parse()
                .map_err(|_| err(line, format!("not a number: {t:?}")))
        })
        .collect()
}

pub fn parse_net(text: &str) -> Result<SymmetricNet> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| err(1, "missing header"))?;
    let [mu, q] = numbers(hl, header)?[..] else {
        return Err(err(hl, "header must be `mu q`"));
    };
    let v = mu * q * q;
    let mut rows = Vec::with_capacity(v);
    for (ln, l) in lines {
        let row: Vec<u8> = l
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                _ => Err(err(ln, format!("unexpected character {c:?}"))),
            })
            .collect::<Result<_>>()?;
        if row.len() != v {
            return Err(err(
                ln,
                format!("expected {v} entries, found {}", row.len()),
            ));
        }
        rows.push(row);
    }
    if rows.len() != v {
        return Err(err(0, format!("expected {v} rows, found {}", rows.len())));
    }
    SymmetricNet::from_rows(mu, q, &rows)
}

pub fn emit_net(net: &SymmetricNet) -> String {
    let mut s = format!("{} {}\n", net.mu, net.q);
    for row in net.rows() {
        for x in row {
            s.push(if x == 1 { '1' } else { '0' });
        }
        s.push('\n');
    }
    s
}

pub fn parse_gh(text: &str) -> Result<GeneralizedHadamard> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| err(1, "missing header"))?;
    let [n, k] = numbers(hl, header)?[..] else {
        return Err(err(hl, "header must be `n |G|`"));
    };
    let (gl, spec) = lines
        .next()
        .ok_or_else(|| err(hl + 1, "missing group line"))?;
    let group = if spec == "klein4" {
        Group::klein4()
    } else if let Some(order) = spec.strip_prefix("cyclic:") {
        let order: usize = order
            .trim()
            .parse()
            .map_err(|_| err(gl, "bad cyclic order"))?;
        Group::cyclic(order)?
    } else if spec == "table" {
        let mut table = Vec::with_capacity(k);
        for _ in 0..k {
            let (ln, l) = lines
                .next()
                .ok_or_else(|| err(gl, "group table too short"))?;
            table.push(numbers(ln, l)?);
        }
        Group::from_table(table)?
    } else {
        return Err(err(gl, format!("unknown group {spec:?}")));
    };
    if group.order() != k {
        return Err(err(
            gl,
            format!("group has order {}, header says {k}", group.order()),
        ));
    }
    let mut entries = Vec::with_capacity(n);
    for (ln, l) in lines {
        let row = numbers(ln, l)?;
        if row.len() != n {
            return Err(err(
                ln,
                format!("expected {n} entries, found {}", row.len()),
            ));
        }
        entries.push(row);
    }
    if entries.len() != n {
        return Err(err(
            0,
            format!("expected {n} rows, found {}", entries.len()),
        ));
    }
    GeneralizedHadamard::new(group, entries)
}

pub fn emit_gh(m: &GeneralizedHadamard) -> String {
    let k = m.group.order();
    let mut s = format!("{} {k}\ntable\n", m.order());
    for row in m.group.table().iter().chain(&m.entries) {
        let line: Vec<String> = row.iter().map(usize::to_string).collect();
        let _ = writeln!(s, "{}", line.join(" "));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{example_5_3_net, figure1_gh};

    #[test]
    fn net_round_trip() {
        let net = example_5_3_net();
        let text = emit_net(&net);
        assert_eq!(text, "1 2\n1010\n0101\n1001\n0110\n");
        assert_eq!(parse_net(&text).unwrap(), net);
    }

    #[test]
    fn gh_round_trip() {
        let m = figure1_gh();
        assert_eq!(parse_gh(&emit_gh(&m)).unwrap(), m);
        let named = "2 2\ncyclic:2\n0 0\n0 1\n";
        assert_eq!(
            parse_gh(named).unwrap().entries,
            vec![vec![0, 0], vec![0, 1]]
        );
    }

    #[test]
    fn parse_errors() {
        assert!(parse_net("1 2\n1010\n0101\n1001\n").is_err());
        assert!(parse_net("1 2\n1010\n0101\n1001\n01a0\n").is_err());
        assert!(parse_gh("2 2\nsymmetric:2\n0 0\n0 1\n").is_err());
        assert!(parse_gh("2 3\ncyclic:2\n0 0\n0 1\n").is_err());
    }
}
