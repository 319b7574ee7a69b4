//! The `gvpchk v1` plain-text parity-check format.
//!
//! ```text
//! # gvpchk v1
//! q 2
//! n 7
//! s 3
//! 0 0 0 1 1 1 1
//! 0 1 1 0 0 1 1
//! 1 0 1 0 1 0 1
//! ```

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::Path;

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::vector::FqVector;

pub const MAGIC: &str = "# gvpchk v1";

pub fn to_string(code: &LinearCode) -> String {
    let mut out = String::new();
    writeln!(out, "{MAGIC}").unwrap();
    writeln!(out, "q {}", code.q()).unwrap();
    writeln!(out, "n {}", code.n()).unwrap();
    writeln!(out, "s {}", code.s()).unwrap();
    for row in code.parity_rows() {
        let digits: Vec<String> = row.digits().iter().map(|d| d.to_string()).collect();
        writeln!(out, "{}", digits.join(" ")).unwrap();
    }
    out
}

fn header_field(line: Option<(usize, &str)>, key: &str) -> Result<u64> {
    let (i, line) = line.ok_or_else(|| Error::Parse {
        line: 0,
        msg: format!("missing `{key}` line"),
    })?;
    let bad = |msg: String| Error::Parse { line: i + 1, msg };
    let value = line
        .strip_prefix(key)
        .and_then(|rest| rest.strip_prefix(' '))
        .ok_or_else(|| bad(format!("expected `{key} <integer>`, got {line:?}")))?;
    value
        .parse()
        .map_err(|_| bad(format!("bad integer {value:?} for `{key}`")))
}

/// Parses and validates a file, including full rank of the rows.
pub fn parse(text: &str) -> Result<LinearCode> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, MAGIC)) => {}
        other => {
            return Err(Error::Parse {
                line: 1,
                msg: format!(
                    "expected {MAGIC:?}, got {:?}",
                    other.map(|(_, l)| l).unwrap_or("")
                ),
            })
        }
    }
    let q = header_field(lines.next(), "q")?;
    let n = header_field(lines.next(), "n")? as usize;
    let s = header_field(lines.next(), "s")? as usize;
    let q = u32::try_from(q).map_err(|_| Error::Parse {
        line: 2,
        msg: format!("q = {q} is too large"),
    })?;
    if !crate::math::is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    if s > n {
        return Err(Error::Parse {
            line: 4,
            msg: format!("s = {s} exceeds n = {n}"),
        });
    }

    let mut rows = Vec::with_capacity(s);
    for (i, line) in lines.by_ref() {
        if rows.len() == s {
            if line.trim().is_empty() {
                continue;
            }
            return Err(Error::Parse {
                line: i + 1,
                msg: format!("more than s = {s} rows"),
            });
        }
        let bad = |msg: String| Error::Parse { line: i + 1, msg };
        let digits = line
            .split(' ')
            .map(|t| {
                let x: u32 = t.parse().map_err(|_| bad(format!("bad digit {t:?}")))?;
                if x >= q {
                    return Err(bad(format!("digit {x} out of range [0, {q})")));
                }
                Ok(x)
            })
            .collect::<Result<Vec<u32>>>()?;
        if digits.len() != n {
            return Err(bad(format!(
                "row has {} digits, expected {n}",
                digits.len()
            )));
        }
        rows.push(FqVector::new(q, digits)?);
    }
    if rows.len() != s {
        return Err(Error::Parse {
            line: 5 + rows.len(),
            msg: format!("expected {s} rows, found {}", rows.len()),
        });
    }
    LinearCode::new(q, n, rows).map_err(|e| Error::Parse {
        line: 0,
        msg: format!("rank below s: {e}"),
    })
}

pub fn read(path: &Path) -> Result<LinearCode> {
    parse(&std::fs::read_to_string(path)?)
}

/// Writes through a temporary file in the same directory and renames it into place.
pub fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents.as_bytes())?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| Error::Io(e.error))?;
    Ok(())
}

pub fn write(path: &Path, code: &LinearCode) -> Result<()> {
    write_atomic(path, &to_string(code))
}

#[cfg(test)]
mod tests {
    use super::*;

    const HAMMING: &str =
        "# gvpchk v1\nq 2\nn 7\ns 3\n0 0 0 1 1 1 1\n0 1 1 0 0 1 1\n1 0 1 0 1 0 1\n";

    #[test]
    fn round_trip() {
        let code = parse(HAMMING).unwrap();
        assert_eq!(code.dimension(), 4);
        assert_eq!(to_string(&code), HAMMING);
        let empty = LinearCode::new(3, 4, vec![]).unwrap();
        assert_eq!(to_string(&empty), "# gvpchk v1\nq 3\nn 4\ns 0\n");
        assert_eq!(parse(&to_string(&empty)).unwrap(), empty);
    }

    #[test]
    fn rejects_bad_input() {
        let bad = [
            HAMMING.replace("v1", "v2"),
            HAMMING.replace("1 0 1 0 1 0 1", "1 0 2 0 1 0 1"),
            HAMMING.replace("1 0 1 0 1 0 1", "1 0 1 0 1 0"),
            HAMMING.replace("1 0 1 0 1 0 1", "0 1 1 1 1 0 0"),
            HAMMING.replace("s 3", "s 4"),
            HAMMING.replace("s 3", "s 2"),
            HAMMING.replace("q 2", "q 4"),
            HAMMING.replace("n 7", "n x"),
            String::new(),
        ];
        for text in &bad {
            assert!(parse(text).is_err(), "accepted {text:?}");
        }
    }

    #[test]
    fn atomic_write() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("h.pchk");
        write(&path, &parse(HAMMING).unwrap()).unwrap();
        assert_eq!(std::fs::read_to_string(&path).unwrap(), HAMMING);
        assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
    }
}
