//! Input parsing: matrices from fixtures, inline strings, or files, and the
//! small vector/vertex formats used by command flags.

use anyhow::{anyhow, bail, Context, Result};
use num_bigint::BigInt;
use std::path::Path;
use supernormal::fixtures::by_id;
use supernormal::matrix::IntMatrix;

/// Parse an integer matrix from the inline form `"m n@row@row"`, where the
/// first segment gives the dimensions and each following `@`-separated
/// segment is one row of whitespace-separated integers.
pub fn parse_inline(s: &str) -> Result<IntMatrix> {
    let mut segments = s.split('@');
    let header = segments.next().unwrap_or("");
    let dims: Vec<usize> = header
        .split_whitespace()
        .map(|t| t.parse::<usize>().with_context(|| format!("bad dimension {t:?}")))
        .collect::<Result<_>>()?;
    let [rows, cols] = dims[..] else {
        bail!("matrix header must be \"m n\", got {header:?}");
    };
    let mut data: Vec<BigInt> = Vec::with_capacity(rows * cols);
    let mut row_count = 0usize;
    for segment in segments {
        let row = parse_integers(segment)?;
        if row.len() != cols {
            bail!("row {:?} has {} entries, expected {cols}", segment.trim(), row.len());
        }
        data.extend(row);
        row_count += 1;
    }
    if row_count != rows {
        bail!("matrix has {row_count} rows, header says {rows}");
    }
    Ok(IntMatrix::new(rows, cols, data))
}

/// Parse a matrix file: JSON `{"rows": [[...], ...]}` when the content
/// starts with `{`, the inline `@` form when it contains `@`, otherwise one
/// whitespace-separated row per non-empty line.
pub fn parse_file(path: &Path) -> Result<IntMatrix> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))?;
    let trimmed = text.trim();
    if trimmed.starts_with('{') {
        return parse_json_rows(trimmed);
    }
    if trimmed.contains('@') {
        return parse_inline(trimmed);
    }
    let rows: Vec<Vec<BigInt>> = trimmed
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(parse_integers)
        .collect::<Result<_>>()?;
    matrix_from_rows(rows)
}

fn parse_json_rows(text: &str) -> Result<IntMatrix> {
    let value: serde_json::Value = serde_json::from_str(text).context("invalid JSON")?;
    let rows_value = value
        .get("rows")
        .ok_or_else(|| anyhow!("JSON matrix must have a \"rows\" key"))?
        .as_array()
        .ok_or_else(|| anyhow!("\"rows\" must be an array of arrays"))?;
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(rows_value.len());
    for row in rows_value {
        let entries = row.as_array().ok_or_else(|| anyhow!("each row must be an array"))?;
        let mut parsed = Vec::with_capacity(entries.len());
        for e in entries {
            let x = match e {
                serde_json::Value::Number(n) => n
                    .as_i64()
                    .map(BigInt::from)
                    .ok_or_else(|| anyhow!("non-integer entry {n}"))?,
                serde_json::Value::String(s) => {
                    s.parse::<BigInt>().with_context(|| format!("bad entry {s:?}"))?
                }
                other => bail!("matrix entry must be an integer, got {other}"),
            };
            parsed.push(x);
        }
        rows.push(parsed);
    }
    matrix_from_rows(rows)
}

fn matrix_from_rows(rows: Vec<Vec<BigInt>>) -> Result<IntMatrix> {
    let m = rows.len();
    if m == 0 {
        bail!("matrix has no rows");
    }
    let n = rows[0].len();
    if rows.iter().any(|r| r.len() != n) {
        bail!("rows have unequal lengths");
    }
    Ok(IntMatrix::new(m, n, rows.into_iter().flatten().collect()))
}

/// Resolve the matrix named by exactly one of the three input flags.
pub fn resolve_matrix(
    fixture: &Option<String>,
    matrix: &Option<String>,
    file: &Option<std::path::PathBuf>,
) -> Result<IntMatrix> {
    match (fixture, matrix, file) {
        (Some(id), None, None) => by_id(id)
            .map(|f| f.matrix)
            .ok_or_else(|| anyhow!("unknown fixture {id:?}; see `snv fixtures list`")),
        (None, Some(s), None) => parse_inline(s),
        (None, None, Some(p)) => parse_file(p),
        (None, None, None) => bail!("no input: pass --fixture, --matrix, or --file"),
        _ => bail!("pass exactly one of --fixture, --matrix, --file"),
    }
}

/// Whitespace- or comma-separated integers.
pub fn parse_integers(s: &str) -> Result<Vec<BigInt>> {
    s.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<BigInt>().with_context(|| format!("bad integer {t:?}")))
        .collect()
}

/// Whitespace- or comma-separated machine integers.
pub fn parse_i64s(s: &str) -> Result<Vec<i64>> {
    s.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<i64>().with_context(|| format!("bad integer {t:?}")))
        .collect()
}

/// Polygon vertices `"x y, x y, ..."` — comma-separated coordinate pairs.
pub fn parse_vertices(s: &str) -> Result<Vec<(i64, i64)>> {
    s.split(',')
        .map(|pair| {
            let coords: Vec<i64> = pair
                .split_whitespace()
                .map(|t| t.parse::<i64>().with_context(|| format!("bad coordinate {t:?}")))
                .collect::<Result<_>>()?;
            match coords[..] {
                [x, y] => Ok((x, y)),
                _ => bail!("vertex {pair:?} must be two integers"),
            }
        })
        .collect()
}
