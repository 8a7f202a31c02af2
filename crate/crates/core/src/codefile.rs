//! Code text files.
//!
//! ```text
//! q=2
//! poset=ordered n=2 r=2        (or `poset=hamming n=4`, `poset=file:<path>`)
//! G=
//! 1010 0101
//! ```
//!
//! For `q <= 10` each row is a token of `n` digits and rows may share a
//! line. For `q > 10` every line holds one row of `n` integers. `#` starts
//! a comment; blank lines are skipped. A `file:` path is resolved relative
//! to the code file's directory.

use std::path::{Path, PathBuf};

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::matrix::Matrix;
use crate::ordered::{chain_product_poset, OrderedSpace};
use crate::poset::Poset;

/// How the poset line of a code file names its poset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PosetSpec {
    Ordered { n: usize, r: usize },
    Hamming { n: usize },
    File(PathBuf),
}

impl PosetSpec {
    fn line(&self) -> String {
        match self {
            PosetSpec::Ordered { n, r } => format!("poset=ordered n={n} r={r}"),
            PosetSpec::Hamming { n } => format!("poset=hamming n={n}"),
            PosetSpec::File(p) => format!("poset=file:{}", p.display()),
        }
    }
}

fn io_error(path: &Path, e: std::io::Error) -> Error {
    Error::Io { path: path.display().to_string(), msg: e.to_string() }
}

/// Read and parse a code file.
pub fn load_code(path: &Path) -> Result<LinearCode> {
    let text = std::fs::read_to_string(path).map_err(|e| io_error(path, e))?;
    parse_code(&text, path.parent())
}

/// Parse code-file text; `base` resolves `poset=file:` paths.
pub fn parse_code(text: &str, base: Option<&Path>) -> Result<LinearCode> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, raw)| (i + 1, raw.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (ln, line) = lines.next().ok_or_else(|| Error::parse(1, "empty code file"))?;
    let q_text = line.strip_prefix("q=").ok_or_else(|| Error::parse(ln, "expected `q=<int>`"))?;
    let q: u32 = q_text.trim().parse().map_err(|_| Error::parse(ln, format!("bad field size `{q_text}`")))?;
    let field = PrimeField::new(q).map_err(|e| Error::parse(ln, e.to_string()))?;

    let (ln, line) = lines.next().ok_or_else(|| Error::parse(ln + 1, "missing `poset=` line"))?;
    let spec = parse_poset_line(ln, line)?;
    let poset = match &spec {
        PosetSpec::Ordered { n, r } => chain_product_poset(*n, *r).map_err(|e| Error::parse(ln, e.to_string()))?,
        PosetSpec::Hamming { n } => Poset::antichain(*n).map_err(|e| Error::parse(ln, e.to_string()))?,
        PosetSpec::File(p) => {
            let full = match base {
                Some(b) if p.is_relative() => b.join(p),
                _ => p.clone(),
            };
            let text = std::fs::read_to_string(&full).map_err(|e| io_error(&full, e))?;
            Poset::parse(&text).map_err(|e| match e {
                Error::Parse { line, msg } => Error::Io { path: full.display().to_string(), msg: format!("line {line}: {msg}") },
                other => Error::Io { path: full.display().to_string(), msg: other.to_string() },
            })?
        }
    };
    let n = poset.len();

    let (g_ln, line) = lines.next().ok_or_else(|| Error::parse(ln + 1, "missing `G=` line"))?;
    if line != "G=" {
        return Err(Error::parse(g_ln, "expected `G=`"));
    }

    let mut rows: Vec<Vec<u32>> = Vec::new();
    for (ln, line) in lines {
        if q <= 10 {
            for token in line.split_whitespace() {
                rows.push(parse_digit_row(ln, token, n, q)?);
            }
        } else {
            let row = line
                .split_whitespace()
                .map(|t| {
                    t.parse::<u32>()
                        .ok()
                        .filter(|&v| v < q)
                        .ok_or_else(|| Error::parse(ln, format!("`{t}` is not a residue mod {q}")))
                })
                .collect::<Result<Vec<u32>>>()?;
            if row.len() != n {
                return Err(Error::parse(ln, format!("row has {} entries, expected {n}", row.len())));
            }
            rows.push(row);
        }
    }
    if rows.is_empty() {
        return Err(Error::parse(g_ln, "generator has no rows"));
    }
    let g = Matrix::from_rows(field, n, &rows).map_err(|e| Error::parse(g_ln, e.to_string()))?;
    LinearCode::new(poset, g).map_err(|e| Error::parse(g_ln, e.to_string()))
}

fn parse_poset_line(ln: usize, line: &str) -> Result<PosetSpec> {
    let body = line.strip_prefix("poset=").ok_or_else(|| Error::parse(ln, "expected `poset=...`"))?;
    if let Some(path) = body.strip_prefix("file:") {
        let path = path.trim();
        if path.is_empty() {
            return Err(Error::parse(ln, "empty poset file path"));
        }
        return Ok(PosetSpec::File(PathBuf::from(path)));
    }
    let mut words = body.split_whitespace();
    let kind = words.next().unwrap_or("");
    let mut n = None;
    let mut r = None;
    for w in words {
        let (key, value) = w.split_once('=').ok_or_else(|| Error::parse(ln, format!("expected key=value, got `{w}`")))?;
        let v: usize = value.parse().map_err(|_| Error::parse(ln, format!("bad value `{value}` for {key}")))?;
        match key {
            "n" => n = Some(v),
            "r" => r = Some(v),
            _ => return Err(Error::parse(ln, format!("unknown poset parameter `{key}`"))),
        }
    }
    let n = n.ok_or_else(|| Error::parse(ln, "missing n="))?;
    match kind {
        "ordered" => Ok(PosetSpec::Ordered { n, r: r.ok_or_else(|| Error::parse(ln, "missing r="))? }),
        "hamming" if r.is_none() => Ok(PosetSpec::Hamming { n }),
        "hamming" => Err(Error::parse(ln, "hamming posets take no r=")),
        other => Err(Error::parse(ln, format!("unknown poset kind `{other}`"))),
    }
}

fn parse_digit_row(ln: usize, token: &str, n: usize, q: u32) -> Result<Vec<u32>> {
    let row: Vec<u32> = token
        .chars()
        .map(|c| {
            c.to_digit(10)
                .filter(|&v| v < q)
                .ok_or_else(|| Error::parse(ln, format!("`{c}` is not a residue mod {q}")))
        })
        .collect::<Result<_>>()?;
    if row.len() != n {
        return Err(Error::parse(ln, format!("row `{token}` has {} digits, expected {n}", row.len())));
    }
    Ok(row)
}

/// The poset line for `code`: antichains as `hamming`, chain products as
/// `ordered`. Other posets need an explicit file reference.
pub fn poset_spec_of(code: &LinearCode) -> Option<PosetSpec> {
    let p = code.poset();
    if p.is_antichain() && p.len() > 1 {
        return Some(PosetSpec::Hamming { n: p.len() });
    }
    OrderedSpace::recognize(p, code.q()).map(|s| PosetSpec::Ordered { n: s.n, r: s.r })
}

/// Render `code` in the code-file format.
pub fn code_to_text(code: &LinearCode, poset: &PosetSpec) -> String {
    format!("q={}\n{}\nG=\n{}", code.q(), poset.line(), code.generator())
}
