//! Text formats.
//!
//! Multicomplex files: UTF-8, optional `vars <n>` header, one monomial per line as
//! space-separated exponents (or `x1^2*x2` in symbolic mode), `#` starts a comment.
//!
//! Matrix dumps: a `rows <r> cols <c> degree <d>` header, `row <i> <exponents>` and
//! `col <j> <exponents>` legend lines in basis order, then one `<row> <col> <value>`
//! triple per nonzero entry, sorted.

use std::fmt::Write as _;

use crate::chain::BoundaryMatrix;
use crate::complex::Multicomplex;
use crate::error::{Error, Result};
use crate::matrix::SparseMatrix;
use crate::monomial::{Monomial, DEFAULT_DEGREE_CAP};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Parses and validates a multicomplex file.
pub fn parse_multicomplex(text: &str, symbolic: bool) -> Result<Multicomplex> {
    let mut vars: Option<usize> = None;
    let mut entries: Vec<(usize, &str)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("vars") {
            if vars.is_some() || !entries.is_empty() {
                return Err(parse_err(line_no, "`vars` must be the first entry"));
            }
            let n = rest.trim().parse().map_err(|_| {
                parse_err(line_no, format!("invalid variable count `{}`", rest.trim()))
            })?;
            vars = Some(n);
            continue;
        }
        entries.push((line_no, line));
    }

    let n = match vars {
        Some(n) => n,
        None if symbolic => entries
            .iter()
            .flat_map(|(_, l)| l.split('*'))
            .filter_map(|f| f.trim().strip_prefix('x'))
            .filter_map(|f| f.split('^').next()?.trim().parse::<usize>().ok())
            .max()
            .unwrap_or(0),
        None => entries
            .first()
            .map_or(0, |(_, l)| l.split_whitespace().count()),
    };

    let mut monomials = Vec::with_capacity(entries.len());
    for (line_no, line) in entries {
        let m = if symbolic {
            Monomial::parse_symbolic(line, n)
        } else {
            Monomial::parse_exponents(line)
        }
        .map_err(|e| parse_err(line_no, e))?;
        if m.ambient_dim() != n {
            return Err(parse_err(
                line_no,
                format!("expected {n} exponents, found {}", m.ambient_dim()),
            ));
        }
        if m.total_degree() > DEFAULT_DEGREE_CAP {
            return Err(parse_err(
                line_no,
                format!(
                    "total degree {} exceeds the cap {DEFAULT_DEGREE_CAP}",
                    m.total_degree()
                ),
            ));
        }
        monomials.push(m);
    }
    Multicomplex::from_monomials(monomials, n)
}

/// Canonical file form: `vars <n>` followed by exponent vectors in basis order.
pub fn render_multicomplex(m: &Multicomplex) -> String {
    let mut out = format!("vars {}\n", m.ambient_dim());
    for x in m.iter() {
        let _ = writeln!(out, "{x}");
    }
    out
}

pub fn render_boundary_matrix(b: &BoundaryMatrix) -> String {
    let mut out = format!(
        "rows {} cols {} degree {}\n",
        b.rows.len(),
        b.cols.len(),
        b.degree
    );
    for (i, m) in b.rows.iter().enumerate() {
        let _ = writeln!(out, "row {i} {m}");
    }
    for (j, m) in b.cols.iter().enumerate() {
        let _ = writeln!(out, "col {j} {m}");
    }
    for (r, c, v) in b.matrix.triples() {
        let _ = writeln!(out, "{r} {c} {v}");
    }
    out
}

/// Reads back a dump written by [`render_boundary_matrix`] (as a primal map).
pub fn parse_boundary_matrix(text: &str) -> Result<BoundaryMatrix> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty());
    let (_, header) = lines.next().ok_or_else(|| parse_err(1, "missing header"))?;
    let tok: Vec<&str> = header.split_whitespace().collect();
    let field = |i: usize, name: &str| -> Result<usize> {
        if tok.get(i) != Some(&name) {
            return Err(parse_err(1, format!("expected `{name}` in header")));
        }
        tok.get(i + 1)
            .and_then(|v| v.parse().ok())
            .ok_or_else(|| parse_err(1, format!("invalid `{name}` value")))
    };
    let (nrows, ncols, degree) = (field(0, "rows")?, field(2, "cols")?, field(4, "degree")?);

    let mut rows = Vec::new();
    let mut cols = Vec::new();
    let mut columns: Vec<Vec<(usize, i64)>> = vec![Vec::new(); ncols];
    for (i, line) in lines {
        let line_no = i + 1;
        let (kind, rest) = line.trim().split_once(' ').unwrap_or((line.trim(), ""));
        match kind {
            "row" | "col" => {
                let (_, exps) = rest.split_once(' ').unwrap_or((rest, ""));
                let m = Monomial::parse_exponents(exps).map_err(|e| parse_err(line_no, e))?;
                if kind == "row" {
                    rows.push(m)
                } else {
                    cols.push(m)
                }
            }
            _ => {
                let nums: Vec<i64> = line
                    .split_whitespace()
                    .map(|t| t.parse::<i64>())
                    .collect::<std::result::Result<_, _>>()
                    .map_err(|_| parse_err(line_no, "invalid triple"))?;
                let [r, c, v] = nums[..] else {
                    return Err(parse_err(line_no, "expected `row col value`"));
                };
                if r < 0 || c < 0 || r as usize >= nrows || c as usize >= ncols {
                    return Err(parse_err(line_no, "index out of range"));
                }
                columns[c as usize].push((r as usize, v));
            }
        }
    }
    if rows.len() != nrows || cols.len() != ncols {
        return Err(parse_err(1, "legend does not match the header"));
    }
    Ok(BoundaryMatrix {
        degree,
        dual: false,
        rows,
        cols,
        matrix: SparseMatrix::from_columns(nrows, columns),
    })
}

/// 0/1 matrix rows separated by spaces, one row per line.
pub fn render_table(m: &[Vec<u8>]) -> String {
    let mut out = String::new();
    for row in m {
        let cells: Vec<String> = row.iter().map(u8::to_string).collect();
        let _ = writeln!(out, "{}", cells.join(" "));
    }
    out
}
