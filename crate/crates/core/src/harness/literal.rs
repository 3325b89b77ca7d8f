//! Text forms: group literals like `2x4x9` and generator lists like
//! `(1,2);(0,2)`.

use crate::error::{Error, Result};
use crate::group::{make_group, AbelianGroup, Element};
use crate::subgroup::Subgroup;

fn parse_error(column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        column,
        message: message.into(),
    }
}

/// Parses `ORDER ('x' ORDER)*`; the empty string is the trivial group.
/// Columns in errors are 1-based.
pub fn parse_group_literal(text: &str) -> Result<AbelianGroup> {
    make_group(&parse_orders(text)?)
}

pub fn parse_orders(text: &str) -> Result<Vec<u64>> {
    if text.is_empty() {
        return Ok(Vec::new());
    }
    let mut orders = Vec::new();
    let mut start = 0;
    for piece in text.split('x') {
        let column = start + 1;
        if piece.is_empty() {
            return Err(parse_error(column, "expected a decimal order"));
        }
        if let Some(off) = piece.find(|c: char| !c.is_ascii_digit()) {
            let bad = piece[off..].chars().next().unwrap_or('?');
            return Err(parse_error(
                column + off,
                format!("unexpected character `{bad}`"),
            ));
        }
        let n: u64 = piece
            .parse()
            .map_err(|_| parse_error(column, format!("order `{piece}` does not fit in 64 bits")))?;
        if n < 2 {
            return Err(parse_error(column, format!("order {n} is less than 2")));
        }
        orders.push(n);
        start += piece.len() + 1;
    }
    Ok(orders)
}

/// Canonical literal: cyclic orders in canonical layout, `""` for the
/// trivial group.
pub fn group_literal(g: &AbelianGroup) -> String {
    g.moduli()
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join("x")
}

/// Parses `"(1,2);(0,2)"` into residue vectors. Whitespace is ignored and an
/// empty string means no generators.
pub fn parse_generators(text: &str) -> Result<Vec<Vec<u64>>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for raw in text.split(';') {
        let column = offset + 1 + (raw.len() - raw.trim_start().len());
        offset += raw.len() + 1;
        let tuple = raw.trim();
        if tuple.is_empty() {
            if text.trim().is_empty() {
                continue;
            }
            return Err(parse_error(column, "empty generator"));
        }
        let inner = tuple
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| parse_error(column, "generator must look like (a,b,...)"))?;
        let mut residues = Vec::new();
        if !inner.trim().is_empty() {
            for part in inner.split(',') {
                let v: u64 = part.trim().parse().map_err(|_| {
                    parse_error(
                        column,
                        format!("`{}` is not a nonnegative integer", part.trim()),
                    )
                })?;
                residues.push(v);
            }
        }
        out.push(residues);
    }
    Ok(out)
}

pub fn parse_subgroup(g: &AbelianGroup, text: &str) -> Result<Subgroup> {
    let gens = parse_generators(text)?
        .iter()
        .map(|r| g.element(r))
        .collect::<Result<Vec<Element>>>()?;
    Subgroup::generated_by(g, &gens)
}

pub fn format_generators(gens: &[Element]) -> String {
    gens.iter()
        .map(|e| e.to_string())
        .collect::<Vec<_>>()
        .join(";")
}
