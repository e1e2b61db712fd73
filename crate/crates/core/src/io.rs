//! Text format for codes.
//!
//! ```text
//! # comment
//! q n M
//! s s ... s      (M rows of n symbols in 0..q-1)
//! ```
//!
//! Emission writes the rows in storage (lexicographic) order with single
//! spaces and a trailing newline, so `emit(parse(x))` is a normal form of `x`.
//!
//! A class list is a header line followed by concatenated code files:
//!
//! ```text
//! #! classes 7 q 5 n 7 d 6 size 15 generator qary-search 0.1.0
//! ```

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::code::Code;
use crate::error::{Error, ParseError, Result};
use crate::params::CodeParams;
use crate::word::Word;

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_int(line: usize, tok: &str) -> std::result::Result<i64, ParseError> {
    tok.parse::<i64>().map_err(|_| ParseError::Token {
        line,
        token: tok.to_string(),
    })
}

/// Parses one code from `text`.
pub fn parse_code(text: &str) -> Result<Code> {
    let mut lines = content_lines(text);
    let code = parse_one(&mut lines, text.lines().count().max(1))?;
    if let Some((line, _)) = lines.next() {
        return Err(ParseError::Header {
            line,
            reason: "trailing content after the declared rows".into(),
        }
        .into());
    }
    Ok(code)
}

fn parse_one<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    last_line: usize,
) -> Result<Code> {
    let (hline, header) = lines.next().ok_or(ParseError::Header {
        line: last_line,
        reason: "missing `q n M` header".into(),
    })?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 3 {
        return Err(ParseError::Header {
            line: hline,
            reason: format!("expected 3 fields, found {}", fields.len()),
        }
        .into());
    }
    let mut vals = [0usize; 3];
    for (v, tok) in vals.iter_mut().zip(&fields) {
        *v = tok.parse().map_err(|_| ParseError::Header {
            line: hline,
            reason: format!("not a nonnegative integer: {tok:?}"),
        })?;
    }
    let [q, n, m] = vals;
    if !(2..=usize::from(u8::MAX)).contains(&q) || n == 0 {
        return Err(ParseError::Header {
            line: hline,
            reason: format!("need 2 <= q <= 255 and n >= 1, got q={q} n={n}"),
        }
        .into());
    }
    let mut seen = BTreeSet::new();
    let mut words = Vec::with_capacity(m);
    for found in 0..m {
        let (line, row) = lines
            .next()
            .ok_or(ParseError::RowCount { expected: m, found })?;
        let toks: Vec<&str> = row.split_whitespace().collect();
        if toks.len() != n {
            return Err(ParseError::RowLength {
                line,
                expected: n,
                found: toks.len(),
            }
            .into());
        }
        let mut symbols = Vec::with_capacity(n);
        for tok in toks {
            let v = parse_int(line, tok)?;
            if v < 0 || v >= q as i64 {
                return Err(ParseError::SymbolRange { line, symbol: v, q }.into());
            }
            symbols.push(v as u8);
        }
        let w = Word::from_symbols(symbols);
        if !seen.insert(w.clone()) {
            return Err(ParseError::Duplicate { line }.into());
        }
        words.push(w);
    }
    Code::new(q, n, words)
}

/// Canonical text of `code`.
pub fn emit_code(code: &Code) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {} {}", code.q(), code.n(), code.len());
    for w in code.words() {
        let _ = writeln!(out, "{w}");
    }
    out
}

/// Header of a persisted list of equivalence classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassListHeader {
    pub params: CodeParams,
    pub size: usize,
    pub count: usize,
    pub generator: String,
}

pub fn emit_class_list(header: &ClassListHeader, classes: &[Code]) -> String {
    let p = header.params;
    let mut out = format!(
        "#! classes {} q {} n {} d {} size {} generator {}\n",
        classes.len(),
        p.q,
        p.n,
        p.d,
        header.size,
        header.generator
    );
    for (i, c) in classes.iter().enumerate() {
        let _ = writeln!(out, "# class {i}");
        out.push_str(&emit_code(c));
    }
    out
}

pub fn parse_class_list(text: &str) -> Result<(ClassListHeader, Vec<Code>)> {
    let bad = |msg: &str| Error::from(ParseError::ClassList(msg.to_string()));
    let first = text.lines().next().ok_or_else(|| bad("empty input"))?;
    let rest = first
        .strip_prefix("#! classes ")
        .ok_or_else(|| bad("missing `#! classes` header"))?;
    let toks: Vec<&str> = rest.split_whitespace().collect();
    if toks.len() < 12 {
        return Err(bad("short header"));
    }
    let num = |i: usize, key: &str| -> Result<usize> {
        if toks[i] != key {
            return Err(bad(&format!("expected `{key}` in header")));
        }
        toks[i + 1]
            .parse()
            .map_err(|_| bad(&format!("bad value for `{key}`")))
    };
    let count: usize = toks[0].parse().map_err(|_| bad("bad class count"))?;
    let params = CodeParams::new(num(1, "q")?, num(3, "n")?, num(5, "d")?)?;
    let size = num(7, "size")?;
    if toks[9] != "generator" {
        return Err(bad("expected `generator` in header"));
    }
    let generator = toks[10..].join(" ");

    let mut lines = content_lines(text);
    let total = text.lines().count();
    let mut classes = Vec::with_capacity(count);
    for _ in 0..count {
        let c = parse_one(&mut lines, total)?;
        if c.q() != params.q || c.n() != params.n || c.len() != size {
            return Err(bad("class does not match header parameters"));
        }
        classes.push(c);
    }
    if lines.next().is_some() {
        return Err(bad("more classes than the header declares"));
    }
    Ok((
        ClassListHeader {
            params,
            size,
            count,
            generator,
        },
        classes,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::figure2_code;

    const FIG2: &str =
        "# figure 2\n3 3 9\n0 0 0\n1 1 1\n2 2 2\n0 2 1\n1 0 2\n2 1 0\n0 1 2\n1 2 0\n2 0 1\n";

    #[test]
    fn parses_figure2() {
        let c = parse_code(FIG2).unwrap();
        assert_eq!(c, figure2_code());
    }

    #[test]
    fn emit_is_sorted_normal_form() {
        let c = parse_code(FIG2).unwrap();
        let text = emit_code(&c);
        assert_eq!(
            text,
            "3 3 9\n0 0 0\n0 1 2\n0 2 1\n1 0 2\n1 1 1\n1 2 0\n2 0 1\n2 1 0\n2 2 2\n"
        );
        assert_eq!(emit_code(&parse_code(&text).unwrap()), text);
    }

    #[test]
    fn distinct_parse_errors() {
        let err = |s: &str| match parse_code(s).unwrap_err() {
            Error::Parse(p) => p,
            e => panic!("unexpected {e:?}"),
        };
        assert!(matches!(
            err("3 3 9\n0 0 3\n"),
            ParseError::SymbolRange {
                line: 2,
                symbol: 3,
                ..
            }
        ));
        assert!(matches!(err("3 3\n"), ParseError::Header { .. }));
        assert!(matches!(err("x 3 1\n0 0 0\n"), ParseError::Header { .. }));
        assert!(matches!(
            err("3 3 2\n0 0 0\n0 0 0\n"),
            ParseError::Duplicate { line: 3 }
        ));
        assert!(matches!(
            err("3 3 1\n0 0\n"),
            ParseError::RowLength {
                expected: 3,
                found: 2,
                ..
            }
        ));
        assert!(matches!(
            err("3 3 2\n0 0 0\n"),
            ParseError::RowCount {
                expected: 2,
                found: 1
            }
        ));
        assert!(matches!(err("3 3 1\n0 a 0\n"), ParseError::Token { .. }));
        assert!(matches!(err(""), ParseError::Header { .. }));
    }

    #[test]
    fn class_list_round_trip() {
        let header = ClassListHeader {
            params: CodeParams::new(3, 3, 2).unwrap(),
            size: 9,
            count: 1,
            generator: "qary-search 0.1.0".into(),
        };
        let text = emit_class_list(&header, &[figure2_code()]);
        let (h, classes) = parse_class_list(&text).unwrap();
        assert_eq!(h, header);
        assert_eq!(classes, vec![figure2_code()]);
        assert!(parse_class_list("3 3 9\n").is_err());
    }
}
