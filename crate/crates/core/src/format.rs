//! The PDA text format.
//!
//! ```text
//! PDA <F> <K> <Z> <s>
//! <K tokens>        (F lines; token is `-` or a symbol id in 1..=s)
//! ```
//!
//! Single spaces, ASCII, one trailing newline. Lines starting with `#` are
//! comments and are skipped when reading.

use crate::error::{PdaError, Result};
use crate::grid::{Cell, PdaGrid, PdaParams};

/// A parsed file: the header as written plus the grid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PdaFile {
    pub header: PdaParams,
    pub grid: PdaGrid,
}

fn err(line: usize, column: usize, message: impl Into<String>) -> PdaError {
    PdaError::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Splits on single spaces, rejecting empty tokens. Yields `(column, token)`.
fn tokens(line_no: usize, line: &str) -> Result<Vec<(usize, &str)>> {
    let mut out = Vec::new();
    let mut col = 1;
    for tok in line.split(' ') {
        if tok.is_empty() {
            return Err(err(line_no, col, "unexpected whitespace"));
        }
        out.push((col, tok));
        col += tok.len() + 1;
    }
    Ok(out)
}

fn number(line: usize, column: usize, tok: &str) -> Result<usize> {
    if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) {
        return Err(err(line, column, format!("expected an integer, found `{tok}`")));
    }
    tok.parse()
        .map_err(|_| err(line, column, format!("integer `{tok}` out of range")))
}

pub fn read_pda_file(bytes: &[u8]) -> Result<PdaFile> {
    if !bytes.is_ascii() {
        let pos = bytes.iter().position(|b| !b.is_ascii()).unwrap_or(0);
        let line = bytes[..pos].iter().filter(|&&b| b == b'\n').count() + 1;
        return Err(err(line, 1, "non-ASCII byte"));
    }
    let text = std::str::from_utf8(bytes).expect("ascii is utf-8");
    let mut lines = text
        .split('\n')
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.starts_with('#'));

    let (hline, header) = lines.next().ok_or_else(|| err(1, 1, "missing header"))?;
    let htoks = tokens(hline, header)?;
    if htoks.len() != 5 || htoks[0].1 != "PDA" {
        return Err(err(hline, 1, "header must be `PDA <F> <K> <Z> <s>`"));
    }
    let mut vals = [0usize; 4];
    for (slot, &(col, tok)) in vals.iter_mut().zip(&htoks[1..]) {
        *slot = number(hline, col, tok)?;
    }
    let [f, k, z, s] = vals;
    if f == 0 || k == 0 {
        return Err(err(hline, 5, "F and K must be positive"));
    }
    if z > f {
        return Err(err(hline, 1, format!("Z = {z} exceeds F = {f}")));
    }

    let mut rows = Vec::with_capacity(f);
    for r in 0..f {
        let (lno, line) = lines
            .next()
            .filter(|(_, l)| !l.is_empty())
            .ok_or_else(|| err(hline + r + 1, 1, format!("missing row {} of {f}", r + 1)))?;
        let toks = tokens(lno, line)?;
        if toks.len() != k {
            return Err(err(
                lno,
                1,
                format!("row {} has {} tokens, expected {k}", r + 1, toks.len()),
            ));
        }
        let mut row = Vec::with_capacity(k);
        for (col, tok) in toks {
            if tok == "-" {
                row.push(Cell::Empty);
                continue;
            }
            let id = number(lno, col, tok)?;
            if id == 0 || id > s {
                return Err(err(lno, col, format!("symbol {id} outside 1..={s}")));
            }
            row.push(Cell::Symbol(id as u32));
        }
        rows.push(row);
    }
    for (lno, line) in lines {
        if !line.is_empty() {
            return Err(err(lno, 1, "unexpected content after the last row"));
        }
    }
    let grid = PdaGrid::from_rows(rows)?;
    Ok(PdaFile {
        header: PdaParams { f, k, z, s },
        grid,
    })
}

pub fn read_pda(bytes: &[u8]) -> Result<PdaGrid> {
    read_pda_file(bytes).map(|f| f.grid)
}

/// Serializes a grid. Sparse symbol ids are renumbered onto `1..=s` keeping
/// their order, so the output always satisfies the token range rule.
pub fn write_pda(grid: &PdaGrid) -> Vec<u8> {
    let grid = if grid.is_dense() {
        grid.clone()
    } else {
        grid.compacted()
    };
    let mut out = format!(
        "PDA {} {} {} {}\n",
        grid.rows(),
        grid.cols(),
        grid.inferred_z(),
        grid.symbol_count()
    );
    for r in 0..grid.rows() {
        let toks: Vec<String> = grid
            .row(r)
            .iter()
            .map(|c| match c {
                Cell::Empty => "-".to_owned(),
                Cell::Symbol(id) => id.to_string(),
            })
            .collect();
        out.push_str(&toks.join(" "));
        out.push('\n');
    }
    out.into_bytes()
}
