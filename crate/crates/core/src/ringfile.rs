//! Plain-text ring files and the constructor DSL.
//!
//! Table format, one ring per file:
//!
//! ```text
//! ring <label> size <n>
//! zero <i> one <j>
//! add:
//! <n rows of n space-separated indices>
//! mul:
//! <n rows of n space-separated indices>
//! ```
//!
//! Blank lines and `#` comments are ignored. Alternatively a file (or a CLI
//! argument) may hold a single constructor line:
//!
//! ```text
//! cyclic 6
//! gf 4
//! matrix lower 2 gf 2
//! product a.ring b.ring
//! quotient a.ring ideal 0 2
//! ```
//!
//! Paths inside `product`/`quotient` resolve relative to the file's
//! directory.

use std::path::Path;
use std::sync::Arc;

use crate::construct::{
    direct_product, make_cyclic_ring, make_gf, make_matrix_ring_capped, quotient_ring, MatrixShape,
};
use crate::elemset::{ElemSet, MAX_RING_SIZE};
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::ring::{FiniteRing, Side};

/// Canonical table serialization; parsing it back reproduces the ring.
pub fn render_ring(ring: &FiniteRing) -> String {
    let n = ring.size();
    let label: String = ring
        .label()
        .chars()
        .map(|c| if c.is_whitespace() { '_' } else { c })
        .collect();
    let mut out = String::new();
    out.push_str(&format!("ring {label} size {n}\n"));
    out.push_str(&format!("zero {} one {}\n", ring.zero(), ring.one()));
    for (name, table) in [("add:", ring.raw_add_table()), ("mul:", ring.raw_mul_table())] {
        out.push_str(name);
        out.push('\n');
        for row in 0..n {
            let cells: Vec<String> = (0..n)
                .map(|col| table[row * n + col].to_string())
                .collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
    }
    out
}

fn significant_lines(text: &str) -> Vec<(usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect()
}

fn parse_usize(line: usize, token: &str, what: &str) -> Result<usize> {
    token.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("expected {what}, found '{token}'"),
    })
}

fn parse_table_rows(
    lines: &[(usize, &str)],
    cursor: &mut usize,
    n: usize,
    name: &str,
) -> Result<Vec<u16>> {
    let mut table = Vec::with_capacity(n * n);
    for _ in 0..n {
        let Some(&(lineno, row)) = lines.get(*cursor) else {
            return Err(Error::Parse {
                line: lines.last().map_or(0, |&(l, _)| l),
                msg: format!("unexpected end of file inside the {name} table"),
            });
        };
        *cursor += 1;
        let cells: Vec<&str> = row.split_whitespace().collect();
        if cells.len() != n {
            return Err(Error::Parse {
                line: lineno,
                msg: format!("{name} row has {} entries, expected {n}", cells.len()),
            });
        }
        for c in cells {
            table.push(parse_usize(lineno, c, "a table entry")? as u16);
        }
    }
    Ok(table)
}

fn expect_line(
    lines: &[(usize, &str)],
    cursor: &mut usize,
    pattern: &[Option<&str>],
) -> Result<(usize, Vec<String>)> {
    let Some(&(lineno, line)) = lines.get(*cursor) else {
        return Err(Error::Parse {
            line: lines.last().map_or(0, |&(l, _)| l),
            msg: "unexpected end of file".into(),
        });
    };
    *cursor += 1;
    let tokens: Vec<&str> = line.split_whitespace().collect();
    if tokens.len() != pattern.len()
        || tokens
            .iter()
            .zip(pattern)
            .any(|(t, p)| p.is_some_and(|p| p != *t))
    {
        return Err(Error::Parse {
            line: lineno,
            msg: format!("malformed line '{line}'"),
        });
    }
    Ok((lineno, tokens.iter().map(|t| t.to_string()).collect()))
}

/// Parses the table format.
pub fn parse_ring(text: &str) -> Result<FiniteRing> {
    let lines = significant_lines(text);
    let mut cursor = 0usize;
    let expect = |cursor: &mut usize, pattern: &[Option<&str>]| {
        expect_line(&lines, cursor, pattern)
    };

    let (lineno, header) = expect(&mut cursor, &[Some("ring"), None, Some("size"), None])?;
    let label = header[1].clone();
    let n = parse_usize(lineno, &header[3], "the ring size")?;
    if n > MAX_RING_SIZE {
        return Err(Error::RingTooLarge(n));
    }

    let (lineno, zo) = expect(&mut cursor, &[Some("zero"), None, Some("one"), None])?;
    let zero = parse_usize(lineno, &zo[1], "the zero index")? as u16;
    let one = parse_usize(lineno, &zo[3], "the one index")? as u16;

    expect(&mut cursor, &[Some("add:")])?;
    let add = parse_table_rows(&lines, &mut cursor, n, "add")?;
    expect(&mut cursor, &[Some("mul:")])?;
    let mul = parse_table_rows(&lines, &mut cursor, n, "mul")?;

    if let Some(&(lineno, extra)) = lines.get(cursor) {
        return Err(Error::Parse {
            line: lineno,
            msg: format!("trailing content '{extra}'"),
        });
    }
    FiniteRing::from_tables(label, n, zero, one, add, mul)
}

/// Parses a single constructor line; `base_dir` anchors relative paths.
pub fn parse_constructor(spec: &str, base_dir: &Path) -> Result<FiniteRing> {
    let tokens: Vec<&str> = spec.split_whitespace().collect();
    let bad = |msg: String| Error::Parse { line: 1, msg };
    let need = |idx: usize| -> Result<&str> {
        tokens
            .get(idx)
            .copied()
            .ok_or_else(|| bad(format!("constructor '{spec}' is truncated")))
    };
    match *tokens.first().ok_or_else(|| bad("empty constructor".into()))? {
        "cyclic" => {
            let n = parse_usize(1, need(1)?, "a modulus")?;
            if tokens.len() != 2 {
                return Err(bad("cyclic takes exactly one argument".into()));
            }
            make_cyclic_ring(n)
        }
        "gf" => {
            let q = parse_usize(1, need(1)?, "a prime power")?;
            if tokens.len() != 2 {
                return Err(bad("gf takes exactly one argument".into()));
            }
            make_gf(q)
        }
        "matrix" => {
            let shape = match need(1)? {
                "full" => MatrixShape::Full,
                "lower" => MatrixShape::Lower,
                "upper" => MatrixShape::Upper,
                other => return Err(bad(format!("unknown matrix shape '{other}'"))),
            };
            let n = parse_usize(1, need(2)?, "a matrix dimension")?;
            let base = parse_constructor(&tokens[3..].join(" "), base_dir)?;
            Ok(make_matrix_ring_capped(&base, n, shape, MAX_RING_SIZE)?
                .ring
                .as_ref()
                .clone())
        }
        "product" => {
            let paths = &tokens[1..];
            if paths.len() < 2 {
                return Err(Error::ProductArity(paths.len()));
            }
            let factors: Vec<FiniteRing> = paths
                .iter()
                .map(|p| load_ring(&base_dir.join(p)))
                .collect::<Result<_>>()?;
            let refs: Vec<&FiniteRing> = factors.iter().collect();
            Ok(direct_product(&refs)?.ring.as_ref().clone())
        }
        "quotient" => {
            let source = load_ring(&base_dir.join(need(1)?))?;
            if need(2)? != "ideal" {
                return Err(bad("expected 'ideal' after the source file".into()));
            }
            let members: ElemSet = tokens[3..]
                .iter()
                .map(|t| parse_usize(1, t, "an ideal member").map(|v| v as u16))
                .collect::<Result<_>>()?;
            let ring = Arc::new(source);
            let ideal = Ideal::verified(ring.clone(), members, Side::TwoSided)?;
            Ok(quotient_ring(&ring, &ideal)?.ring.as_ref().clone())
        }
        other => Err(bad(format!("unknown constructor '{other}'"))),
    }
}

/// Parses either format: table files start with a `ring` header, anything
/// else is treated as a constructor line.
pub fn parse_source(text: &str, base_dir: &Path) -> Result<FiniteRing> {
    let lines = significant_lines(text);
    match lines.first() {
        Some(&(_, first)) if first.starts_with("ring ") => parse_ring(text),
        Some(&(lineno, first)) => {
            if lines.len() > 1 {
                return Err(Error::Parse {
                    line: lines[1].0,
                    msg: "constructor files hold a single line".into(),
                });
            }
            parse_constructor(first, base_dir).map_err(|e| match e {
                Error::Parse { msg, .. } => Error::Parse { line: lineno, msg },
                other => other,
            })
        }
        None => Err(Error::Parse { line: 0, msg: "empty ring file".into() }),
    }
}

pub fn load_ring(path: &Path) -> Result<FiniteRing> {
    let text = std::fs::read_to_string(path)?;
    let base_dir = path.parent().unwrap_or_else(|| Path::new("."));
    parse_source(&text, base_dir)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::make_matrix_ring;

    #[test]
    fn table_round_trip() {
        let f2 = make_gf(2).unwrap();
        for ring in [
            make_cyclic_ring(6).unwrap(),
            make_gf(4).unwrap(),
            make_matrix_ring(&f2, 2, MatrixShape::Lower).unwrap().ring.as_ref().clone(),
        ] {
            let text = render_ring(&ring);
            let back = parse_ring(&text).unwrap();
            assert!(back.same_tables(&ring));
            assert_eq!(back.label(), ring.label());
        }
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let mut text = render_ring(&make_cyclic_ring(4).unwrap());
        text = text.replace("0 1 2 3", "0 1 2"); // break every 4-entry row occurrence
        match parse_ring(&text) {
            Err(Error::Parse { line, .. }) => assert!(line > 2),
            other => panic!("expected a located parse error, got {other:?}"),
        }

        match parse_ring("ring x size 2\nzero 0 one 1\nadd:\n0 1\n1 0\nmul:\n0 0\n0 9\n") {
            Err(Error::EntryOutOfRange { .. }) => {}
            other => panic!("expected range error, got {other:?}"),
        }
    }

    #[test]
    fn constructor_lines() {
        let dir = std::env::temp_dir();
        let z6 = parse_constructor("cyclic 6", &dir).unwrap();
        assert_eq!(z6.size(), 6);
        let l2 = parse_constructor("matrix lower 2 gf 2", &dir).unwrap();
        assert_eq!(l2.size(), 8);
        assert!(parse_constructor("matrix diagonal 2 gf 2", &dir).is_err());
        assert!(parse_constructor("frobnicate 3", &dir).is_err());
    }

    #[test]
    fn constructor_files_with_references() {
        let dir = tempdir();
        std::fs::write(dir.join("a.ring"), render_ring(&make_cyclic_ring(2).unwrap())).unwrap();
        std::fs::write(dir.join("b.ring"), "cyclic 3\n").unwrap();
        let prod = parse_source("product a.ring b.ring", &dir).unwrap();
        assert_eq!(prod.size(), 6);

        std::fs::write(dir.join("z4.ring"), render_ring(&make_cyclic_ring(4).unwrap())).unwrap();
        let q = parse_source("quotient z4.ring ideal 0 2", &dir).unwrap();
        assert_eq!(q.size(), 2);

        // a non-ideal member list is rejected
        assert!(parse_source("quotient z4.ring ideal 0 1", &dir).is_err());
    }

    fn tempdir() -> std::path::PathBuf {
        let dir = std::env::temp_dir().join(format!(
            "ringfile-test-{}-{}",
            std::process::id(),
            std::time::SystemTime::now()
                .duration_since(std::time::UNIX_EPOCH)
                .unwrap()
                .as_nanos()
        ));
        std::fs::create_dir_all(&dir).unwrap();
        dir
    }
}
